#include "sigrec/spectral.hpp"

#include <cmath>
#include <string>

#include "sigrec/errors.hpp"
#include "sigrec/rng.hpp"

namespace sigrec {

namespace {

void check_spectrum_invariants(const SpectrumGrid& grid) {
    const double sum = grid.lambda.sum();
    if (std::abs(sum - 1.0) > 1e-8)
        throw Error("SpectrumInvariant", "eigenvalue sum " + std::to_string(sum));
    if (grid.lambda.minCoeff() < -1e-10)
        throw Error("SpectrumInvariant",
                    "negative eigenvalue " + std::to_string(grid.lambda.minCoeff()));
}

} // namespace

SpectrumGrid discretize(const Prior& prior, double T, int n) {
    if (n < 16) throw DomainError("grid size must be >= 16");
    if (!(T > 0.0)) throw DomainError("T must be positive");
    SpectrumGrid grid;
    grid.prior = prior;
    grid.T = T;
    grid.n = n;
    grid.t.resize(n);
    for (int i = 0; i < n; ++i) grid.t[i] = (double(i) + 0.5) * T / double(n);

    // Toeplitz: one kernel value per lag
    std::vector<cplx> lag(n);
    for (int d = 0; d < n; ++d) lag[d] = kernel_value(prior, double(d) * T / double(n));

    if (symmetric(prior)) {
        Eigen::MatrixXd A(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A(i, j) = lag[std::abs(i - j)].real() / double(n);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
        if (es.info() != Eigen::Success)
            throw Error("EigensolveFailure", "real symmetric eigensolve did not converge");
        grid.lambda = es.eigenvalues().reverse();
        grid.vectors = es.eigenvectors().rowwise().reverse().cast<cplx>();
    } else {
        Eigen::MatrixXcd A(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                cplx v = lag[std::abs(i - j)] / double(n);
                A(i, j) = (i >= j) ? v : std::conj(v); // k(-dt) = conj(k(dt))
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A);
        if (es.info() != Eigen::Success)
            throw Error("EigensolveFailure", "Hermitian eigensolve did not converge");
        grid.lambda = es.eigenvalues().reverse();
        grid.vectors = es.eigenvectors().rowwise().reverse();
    }
    check_spectrum_invariants(grid);
    return grid;
}

double stat_dim(const SpectrumGrid& grid, double epsilon) {
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
    double s = 0.0;
    for (int i = 0; i < grid.lambda.size(); ++i) {
        const double l = std::max(grid.lambda[i], 0.0);
        s += l / (l + epsilon);
    }
    return s;
}

int eig_count(const SpectrumGrid& grid, double epsilon) {
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
    int count = 0;
    for (int i = 0; i < grid.lambda.size(); ++i)
        if (grid.lambda[i] >= epsilon) ++count;
    const double s = stat_dim(grid, epsilon);
    if (double(count) > 2.0 * s)
        throw Error("SpectrumInvariant", "eigenvalue count " + std::to_string(count) +
                                             " exceeds twice the statistical dimension " +
                                             std::to_string(s));
    return count;
}

LeverageProfile leverage_profile(const SpectrumGrid& grid, double epsilon) {
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
    const int n = grid.n;
    Eigen::VectorXd f(n);
    for (int k = 0; k < n; ++k) {
        const double l = std::max(grid.lambda[k], 0.0);
        f[k] = l / (l + epsilon);
    }
    LeverageProfile prof;
    prof.t = grid.t;
    prof.tau.assign(n, 0.0);
    prof.epsilon = epsilon;
    // tau_i = (n/T)·sum_k f_k·|V_ik|^2: the diagonal of V·f·V^H, which is
    // exactly A(A+eps)^(-1) restated through the eigenbasis.
    for (int k = 0; k < n; ++k) {
        if (f[k] == 0.0) continue;
        for (int i = 0; i < n; ++i)
            prof.tau[i] += f[k] * std::norm(grid.vectors(i, k));
    }
    const double scale = double(n) / grid.T;
    for (auto& v : prof.tau) v *= scale;
    prof.statdim = f.sum();
    return prof;
}

LeverageProfile leverage_profile(const Prior& prior, double T, int n, double epsilon) {
    return leverage_profile(discretize(prior, T, n), epsilon);
}

HardInstance hard_instance(const SpectrumGrid& grid, double epsilon, std::uint64_t seed) {
    const int m = eig_count(grid, 72.0 * epsilon);
    if (m == 0)
        throw DegenerateSpectrum("no eigenvalue reaches 72·epsilon = " +
                                 std::to_string(72.0 * epsilon));
    const int n = grid.n;
    Rng rng(seed);
    Eigen::VectorXd c(m);
    for (int k = 0; k < m; ++k) c[k] = rng.gaussian() / std::sqrt(double(m));

    // y = U·c with columns scaled by sqrt(n): unit discrete mean-square modes
    Eigen::VectorXcd y = grid.vectors.leftCols(m) * c.cast<cplx>() * std::sqrt(double(n));

    double energy = 0.0;
    for (int k = 0; k < m; ++k) energy += c[k] * c[k] / grid.lambda[k];

    // endpoint extension: y(t) = (1/n)·sum_j k(t_j - t)·g_j, g = sqrt(n)·U·(c./λ)
    Eigen::VectorXcd g = Eigen::VectorXcd::Zero(n);
    for (int k = 0; k < m; ++k)
        g += (std::sqrt(double(n)) * c[k] / grid.lambda[k]) * grid.vectors.col(k);
    auto extend = [&](double t) {
        cplx acc(0.0, 0.0);
        for (int j = 0; j < n; ++j)
            acc += kernel_value(grid.prior, grid.t[j] - t) * g[j];
        return acc / double(n);
    };

    HardInstance inst;
    inst.m = m;
    inst.energy = energy;
    inst.signal.times.reserve(n + 2);
    inst.signal.values.reserve(n + 2);
    inst.signal.times.push_back(0.0);
    inst.signal.values.push_back(extend(0.0));
    for (int i = 0; i < n; ++i) {
        inst.signal.times.push_back(grid.t[i]);
        inst.signal.values.push_back(y[i]);
    }
    inst.signal.times.push_back(grid.T);
    inst.signal.values.push_back(extend(grid.T));
    return inst;
}

} // namespace sigrec
