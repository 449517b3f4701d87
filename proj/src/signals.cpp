#include "sigrec/signals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sigrec/errors.hpp"
#include "sigrec/rng.hpp"

namespace sigrec {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Knot j of the seeded grid comes from its own substream, so lookups are O(1)
// and independent of evaluation order.
double seeded_grid_knot(const NoiseSeededGrid& g, std::size_t j) {
    Rng rng(Rng::substream_seed(g.seed, j));
    return rng.uniform(-g.amplitude, g.amplitude);
}

} // namespace

SynthResult synth_signal(const Prior& prior, std::vector<SignalAtom> atoms) {
    SyntheticSignal sig{prior, std::move(atoms)};
    return {sig, signal_energy(sig)};
}

double signal_energy(const SyntheticSignal& sig) {
    cplx acc(0.0, 0.0);
    for (const auto& aj : sig.atoms)
        for (const auto& al : sig.atoms)
            acc += std::conj(aj.coeff) * al.coeff * kernel_value(sig.prior, al.node - aj.node);
    const double mag = std::abs(acc);
    if (std::abs(acc.imag()) > 1e-10 * std::max(mag, 1e-30))
        throw Error("EnergyNotReal", "Gram energy has imaginary residue " +
                                         std::to_string(acc.imag()));
    if (acc.real() < -1e-10 * std::max(mag, 1e-30))
        throw Error("EnergyNegative", "Gram energy " + std::to_string(acc.real()));
    return std::max(acc.real(), 0.0);
}

cplx eval_signal(const SignalSpec& sig, double t) {
    return std::visit(
        [t](const auto& s) -> cplx {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, SyntheticSignal>) {
                cplx out(0.0, 0.0);
                for (const auto& a : s.atoms) out += a.coeff * kernel_value(s.prior, a.node - t);
                return out;
            } else {
                if (s.times.empty()) throw OutOfRange("empty signal table");
                if (t < s.times.front() || t > s.times.back())
                    throw OutOfRange("query at t=" + std::to_string(t) +
                                     " outside table range [" + std::to_string(s.times.front()) +
                                     ", " + std::to_string(s.times.back()) + "]");
                auto it = std::upper_bound(s.times.begin(), s.times.end(), t);
                if (it == s.times.end()) return s.values.back();
                std::size_t hi = std::size_t(it - s.times.begin());
                if (hi == 0) return s.values.front();
                std::size_t lo = hi - 1;
                double u = (t - s.times[lo]) / (s.times[hi] - s.times[lo]);
                return s.values[lo] + u * (s.values[hi] - s.values[lo]);
            }
        },
        sig);
}

double noise_value(const NoiseSpec& noise, double t) {
    return std::visit(
        [t](const auto& n) -> double {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, NoiseNone>) {
                return 0.0;
            } else if constexpr (std::is_same_v<N, NoiseSinusoid>) {
                return n.amplitude * std::sin(kTwoPi * n.frequency * t + n.phase);
            } else {
                if (!(n.step > 0.0) || !(n.T > 0.0))
                    throw DomainError("seeded grid noise needs positive step and T");
                const std::size_t last = std::size_t(std::ceil(n.T / n.step));
                double pos = t / n.step;
                if (pos <= 0.0) return seeded_grid_knot(n, 0);
                if (pos >= double(last)) return seeded_grid_knot(n, last);
                std::size_t lo = std::size_t(pos);
                double u = pos - double(lo);
                double a = seeded_grid_knot(n, lo);
                double b = seeded_grid_knot(n, lo + 1);
                return a + u * (b - a);
            }
        },
        noise);
}

cplx query(const SignalSpec& sig, const NoiseSpec& noise, double t) {
    return eval_signal(sig, t) + noise_value(noise, t);
}

double noise_power(const NoiseSpec& noise, double T) {
    return std::visit(
        [T](const auto& n) -> double {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, NoiseNone>) {
                return 0.0;
            } else if constexpr (std::is_same_v<N, NoiseSinusoid>) {
                // (1/T)∫ A²·sin²(2·pi·f·t + phi) dt in closed form
                const double A = n.amplitude;
                const double w = kTwoPi * n.frequency;
                if (w == 0.0) {
                    double s = std::sin(n.phase);
                    return A * A * s * s;
                }
                const double end = 2.0 * w * T + 2.0 * n.phase;
                return A * A / 2.0 -
                       (A * A / (4.0 * w * T)) * (std::sin(end) - std::sin(2.0 * n.phase));
            } else {
                NoiseSpec self = n;
                const int grid = 1 << 13;
                double acc = 0.0;
                for (int i = 0; i < grid; ++i) {
                    double t = (double(i) + 0.5) * T / double(grid);
                    double v = noise_value(self, t);
                    acc += v * v;
                }
                return acc / double(grid);
            }
        },
        noise);
}

MseEstimate mean_sq_error(const std::function<cplx(double)>& f,
                          const std::function<cplx(double)>& g, double T, int n_quad) {
    if (n_quad < 64) throw DomainError("n_quad must be >= 64");
    auto midpoint = [&](int n) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            double t = (double(i) + 0.5) * T / double(n);
            cplx d = f(t) - g(t);
            acc += std::norm(d);
        }
        return acc / double(n);
    };
    MseEstimate out;
    out.coarse = midpoint(n_quad);
    out.value = midpoint(2 * n_quad);
    out.discrepancy = std::abs(out.value - out.coarse);
    return out;
}

cplx ws_truncated(const std::vector<double>& nodes, const std::vector<cplx>& values, double t) {
    if (nodes.size() != values.size())
        throw DimensionMismatch("node/value count mismatch in sinc interpolation");
    if (nodes.empty()) return cplx(0.0, 0.0);
    if (nodes.size() == 1) {
        return values[0]; // single node: degenerate window, constant extension
    }
    const double h = nodes[1] - nodes[0];
    if (!(h > 0.0)) throw NonEquispaced("nodes must be strictly increasing");
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        if (std::abs((nodes[i + 1] - nodes[i]) - h) > 1e-9 * h)
            throw NonEquispaced("node spacing varies at index " + std::to_string(i));
    cplx out(0.0, 0.0);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        out += values[i] * sinc_ratio(std::numbers::pi * (t - nodes[i]) / h);
    return out;
}

AdversarialInstance adversarial_ws_instance(double eps) {
    if (!(eps > 0.0) || eps > 0.1)
        throw DomainError("adversarial instance needs 0 < eps <= 0.1");
    const long lo = long(std::floor(1.0 / (2.0 * eps)));
    const long hi = long(std::floor(1.0 / eps));
    std::vector<SignalAtom> atoms;
    for (long k = lo; k <= hi; ++k)
        if (k % 2 == 0) atoms.push_back({double(k), cplx(1.0, 0.0)});
    AdversarialInstance inst;
    inst.bandlimit = 0.5;
    // unit sinc at an even integer == kernel of the [-1/2,1/2] prior at that node
    inst.signal = SyntheticSignal{BandlimitedPrior{0.5}, atoms};
    inst.energy = signal_energy(inst.signal);
    return inst;
}

} // namespace sigrec
