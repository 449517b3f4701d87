#ifndef SIGREC_SPECTRAL_HPP
#define SIGREC_SPECTRAL_HPP

#include <Eigen/Dense>
#include <cstdint>

#include "sigrec/prior.hpp"
#include "sigrec/signals.hpp"

namespace sigrec {

// Midpoint discretization of the time-limited kernel operator
//   [K z](t) = (1/T)·∫_0^T k(s - t)·z(s) ds
// on the grid t_i = (i - 1/2)·T/n: A(i,j) = k(t_i - t_j)/n. A is Hermitian
// with trace exactly 1; its eigenvalues approximate the operator spectrum.
struct SpectrumGrid {
    Prior prior;
    double T = 1.0;
    int n = 0;
    std::vector<double> t;    // grid midpoints
    Eigen::VectorXd lambda;   // eigenvalues, descending; sum = 1 ± 1e-8
    Eigen::MatrixXcd vectors; // columns matching lambda, unit Euclidean norm
};

// n >= 16 (DomainError). Symmetric priors take the real-symmetric eigensolve.
SpectrumGrid discretize(const Prior& prior, double T, int n);

// sum λ/(λ+eps) with negative eigenvalues clamped to 0.
double stat_dim(const SpectrumGrid& grid, double epsilon);

// #{λ >= eps}. Also asserts the count <= 2·stat_dim, which holds since each
// counted eigenvalue contributes at least 1/2 to the sum.
int eig_count(const SpectrumGrid& grid, double epsilon);

struct LeverageProfile {
    std::vector<double> t;
    std::vector<double> tau; // tau(t_i) = (n/T)·[A(A+eps·I)^(-1)]_ii
    double statdim = 0.0;    // matching stat_dim value; (T/n)·sum(tau) equals it
    double epsilon = 0.0;
};

LeverageProfile leverage_profile(const SpectrumGrid& grid, double epsilon);
LeverageProfile leverage_profile(const Prior& prior, double T, int n, double epsilon);

struct HardInstance {
    TableSignal signal; // table over {0, grid midpoints, T}
    double energy;      // ‖D^(-1)c‖², the prior-energy estimate of the draw
    int m;              // number of eigenvalues >= 72·epsilon
};

// Hard input for query-complexity experiments: y = U·c over the top-m grid
// eigenvectors (scaled by sqrt(n) to unit discrete mean-square), coefficients
// c_i ~ N(0, 1/m). m = eig_count(72·epsilon); m = 0 raises DegenerateSpectrum.
// Endpoint values extend the eigenvectors via the kernel relation
// u(t) = (1/(λ·n))·sum_j k(t_j - t)·u(t_j), so the table covers all of [0,T].
HardInstance hard_instance(const SpectrumGrid& grid, double epsilon, std::uint64_t seed);

} // namespace sigrec

#endif
