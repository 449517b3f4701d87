#ifndef SIGREC_SIGNALS_HPP
#define SIGREC_SIGNALS_HPP

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "sigrec/prior.hpp"

namespace sigrec {

struct SignalAtom {
    double node; // time location s_j
    cplx coeff;  // c_j
};

// y(t) = sum_j c_j · k(s_j - t); frequency content x(xi) = sum_j c_j·e^(-2·pi·i·xi·s_j)
struct SyntheticSignal {
    Prior prior;
    std::vector<SignalAtom> atoms;
};

// Piecewise-linear table; queries outside [times.front(), times.back()] raise OutOfRange.
struct TableSignal {
    std::vector<double> times; // strictly increasing
    std::vector<cplx> values;
};

using SignalSpec = std::variant<SyntheticSignal, TableSignal>;

struct NoiseNone {};

// n(t) = amplitude · sin(2·pi·frequency·t + phase)
struct NoiseSinusoid {
    double amplitude;
    double frequency;
    double phase;
};

// Fixed random table on a step grid over [0,T], linearly interpolated;
// values are uniform on [-amplitude, amplitude] from the seeded stream.
struct NoiseSeededGrid {
    std::uint64_t seed;
    double step;
    double amplitude;
    double T;
};

using NoiseSpec = std::variant<NoiseNone, NoiseSinusoid, NoiseSeededGrid>;

struct SynthResult {
    SyntheticSignal signal;
    double energy; // ∫|x(xi)|^2 dmu in Gram form; real and >= 0
};

// Packs atoms against a prior and reports the prior energy.
SynthResult synth_signal(const Prior& prior, std::vector<SignalAtom> atoms);

// Gram-form energy sum_{j,l} conj(c_j)·c_l·k(s_l - s_j); raises if the
// imaginary residue exceeds 1e-10 of the magnitude.
double signal_energy(const SyntheticSignal& sig);

cplx eval_signal(const SignalSpec& sig, double t);
double noise_value(const NoiseSpec& noise, double t);
cplx query(const SignalSpec& sig, const NoiseSpec& noise, double t);

// ‖n‖²_T = (1/T)∫_0^T n(t)^2 dt; closed form for the sinusoid, grid sum for
// the seeded table, 0 for none.
double noise_power(const NoiseSpec& noise, double T);

struct MseEstimate {
    double value;       // composite midpoint at 2·n_quad points
    double coarse;      // same at n_quad points
    double discrepancy; // |value - coarse|, the grid-refinement residual
};

// (1/T)∫_0^T |f(t)-g(t)|^2 dt; n_quad >= 64.
MseEstimate mean_sq_error(const std::function<cplx(double)>& f,
                          const std::function<cplx(double)>& g, double T, int n_quad);

// Whittaker-Shannon interpolation truncated to the given equispaced nodes
// (spacing h = 1/(2F)): sum_k y_k · sinc((t-t_k)/h). Raises NonEquispaced if
// node spacing varies; empty input evaluates to 0.
cplx ws_truncated(const std::vector<double>& nodes, const std::vector<cplx>& values, double t);

struct AdversarialInstance {
    SyntheticSignal signal; // bandlimited to [-1/2, 1/2]; unit sinc atoms
    double bandlimit;       // 1/2
    double energy;          // number of atoms (the atoms are orthonormal)
};

// Unit sincs at the even integers in [floor(1/(2·eps)), floor(1/eps)]: looks
// identically zero near [0,1] to truncated W-S, yet carries energy ~1/(2·eps).
// Requires eps <= 0.1.
AdversarialInstance adversarial_ws_instance(double eps);

} // namespace sigrec

#endif
