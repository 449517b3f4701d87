#include "sigrec/prior.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sigrec/errors.hpp"
#include "sigrec/quadrature.hpp"

namespace sigrec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMassTol = 1e-8;

double trapezoid_mass(const std::vector<double>& x, const std::vector<double>& v) {
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        m += 0.5 * (v[i] + v[i + 1]) * (x[i + 1] - x[i]);
    return m;
}

} // namespace

double sinc_ratio(double x) {
    if (std::abs(x) < 1e-6) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

NumericDensityPrior::NumericDensityPrior(std::vector<double> knots, std::vector<double> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
    if (knots_.size() != values_.size() || knots_.size() < 2)
        throw NonNormalized("numeric density needs >= 2 matching knots/values");
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i)
        if (!(knots_[i] < knots_[i + 1]))
            throw NonNormalized("numeric density knots must be strictly increasing");
    for (double v : values_)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw NonNormalized("numeric density must be nonnegative and finite");
    const double mass = trapezoid_mass(knots_, values_);
    if (!(mass > 0.0)) throw NonNormalized("numeric density has zero total mass");
    for (double& v : values_) v /= mass;
    radius_ = std::max(std::abs(knots_.front()), std::abs(knots_.back()));
}

double NumericDensityPrior::operator()(double xi) const {
    if (xi <= knots_.front() || xi >= knots_.back()) {
        // boundary knots themselves still count
        if (xi == knots_.front()) return values_.front();
        if (xi == knots_.back()) return values_.back();
        return 0.0;
    }
    auto it = std::upper_bound(knots_.begin(), knots_.end(), xi);
    std::size_t hi = std::size_t(it - knots_.begin());
    std::size_t lo = hi - 1;
    double u = (xi - knots_[lo]) / (knots_[hi] - knots_[lo]);
    return values_[lo] + u * (values_[hi] - values_[lo]);
}

void validate(const Prior& prior) {
    std::visit(
        [](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, SparsePrior>) {
                if (p.atoms.empty()) throw NonNormalized("sparse prior has no atoms");
                double mass = 0.0;
                for (const auto& a : p.atoms) {
                    if (!(a.mass > 0.0)) throw NonNormalized("atom mass must be positive");
                    mass += a.mass;
                }
                if (std::abs(mass - 1.0) > kMassTol)
                    throw NonNormalized("atom masses sum to " + std::to_string(mass));
            } else if constexpr (std::is_same_v<P, BandlimitedPrior>) {
                if (!(p.half_width > 0.0))
                    throw NonPositiveScale("bandlimit half-width must be positive");
            } else if constexpr (std::is_same_v<P, MultibandPrior>) {
                if (p.bands.empty()) throw NonNormalized("multiband prior has no bands");
                for (const auto& b : p.bands)
                    if (!(b.half_width > 0.0))
                        throw NonPositiveScale("band half-width must be positive");
                auto sorted = p.bands;
                std::sort(sorted.begin(), sorted.end(),
                          [](const Band& x, const Band& y) { return x.center < y.center; });
                for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
                    double hi = sorted[i].center + sorted[i].half_width;
                    double lo = sorted[i + 1].center - sorted[i + 1].half_width;
                    if (hi > lo)
                        throw OverlappingBands("bands ending at " + std::to_string(hi) +
                                               " and starting at " + std::to_string(lo) +
                                               " intersect");
                }
            } else if constexpr (std::is_same_v<P, GaussianPrior>) {
                if (!(p.stdev > 0.0))
                    throw NonPositiveScale("gaussian stdev must be positive");
            } else if constexpr (std::is_same_v<P, CauchyPrior>) {
                if (!(p.scale > 0.0))
                    throw NonPositiveScale("cauchy scale must be positive");
            } else if constexpr (std::is_same_v<P, GaussianMixturePrior>) {
                if (p.components.empty())
                    throw NonNormalized("mixture has no components");
                double mass = 0.0;
                for (const auto& comp : p.components) {
                    if (!(comp.stdev > 0.0))
                        throw NonPositiveScale("mixture stdev must be positive");
                    if (!(comp.weight > 0.0))
                        throw NonNormalized("mixture weight must be positive");
                    mass += comp.weight;
                }
                if (std::abs(mass - 1.0) > kMassTol)
                    throw NonNormalized("mixture weights sum to " + std::to_string(mass));
            } else if constexpr (std::is_same_v<P, NumericDensityPrior>) {
                // construction normalizes; re-verify the interpolant mass
                const double mass = trapezoid_mass(p.knots(), p.values());
                if (std::abs(mass - 1.0) > kMassTol)
                    throw NonNormalized("numeric density integrates to " + std::to_string(mass));
            }
        },
        prior);
}

bool symmetric(const Prior& prior, double tol) {
    return std::visit(
        [tol](const auto& p) -> bool {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, SparsePrior>) {
                for (const auto& a : p.atoms) {
                    if (std::abs(a.freq) <= tol) continue;
                    bool found = false;
                    for (const auto& b : p.atoms)
                        if (std::abs(b.freq + a.freq) <= tol && std::abs(b.mass - a.mass) <= tol)
                            found = true;
                    if (!found) return false;
                }
                return true;
            } else if constexpr (std::is_same_v<P, BandlimitedPrior>) {
                return true;
            } else if constexpr (std::is_same_v<P, MultibandPrior>) {
                for (const auto& b : p.bands) {
                    if (std::abs(b.center) <= tol) continue;
                    bool found = false;
                    for (const auto& c : p.bands)
                        if (std::abs(c.center + b.center) <= tol &&
                            std::abs(c.half_width - b.half_width) <= tol)
                            found = true;
                    if (!found) return false;
                }
                return true;
            } else if constexpr (std::is_same_v<P, GaussianPrior>) {
                return true;
            } else if constexpr (std::is_same_v<P, CauchyPrior>) {
                return true;
            } else if constexpr (std::is_same_v<P, GaussianMixturePrior>) {
                for (const auto& comp : p.components) {
                    if (std::abs(comp.center) <= tol) continue;
                    bool found = false;
                    for (const auto& other : p.components)
                        if (std::abs(other.center + comp.center) <= tol &&
                            std::abs(other.stdev - comp.stdev) <= tol &&
                            std::abs(other.weight - comp.weight) <= tol)
                            found = true;
                    if (!found) return false;
                }
                return true;
            } else {
                // numeric table: compare density at mirrored knots
                for (double x : p.knots()) {
                    double ref = std::max(1.0, std::abs(p(x)));
                    if (std::abs(p(x) - p(-x)) > 1e-9 * ref) return false;
                }
                return true;
            }
        },
        prior);
}

cplx kernel_value(const Prior& prior, double dt) {
    return std::visit(
        [dt](const auto& p) -> cplx {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, SparsePrior>) {
                cplx out(0.0, 0.0);
                for (const auto& a : p.atoms)
                    out += a.mass * std::polar(1.0, -kTwoPi * a.freq * dt);
                return out;
            } else if constexpr (std::is_same_v<P, BandlimitedPrior>) {
                return cplx(sinc_ratio(kTwoPi * p.half_width * dt), 0.0);
            } else if constexpr (std::is_same_v<P, MultibandPrior>) {
                double total = 0.0;
                for (const auto& b : p.bands) total += b.half_width;
                cplx out(0.0, 0.0);
                for (const auto& b : p.bands)
                    out += (b.half_width / total) * std::polar(1.0, -kTwoPi * b.center * dt) *
                           sinc_ratio(kTwoPi * b.half_width * dt);
                return out;
            } else if constexpr (std::is_same_v<P, GaussianPrior>) {
                double x = std::numbers::pi * p.stdev * dt;
                return cplx(std::exp(-2.0 * x * x), 0.0);
            } else if constexpr (std::is_same_v<P, CauchyPrior>) {
                return cplx(std::exp(-kTwoPi * p.scale * std::abs(dt)), 0.0);
            } else if constexpr (std::is_same_v<P, GaussianMixturePrior>) {
                cplx out(0.0, 0.0);
                for (const auto& comp : p.components) {
                    double x = std::numbers::pi * comp.stdev * dt;
                    out += comp.weight * std::polar(1.0, -kTwoPi * comp.center * dt) *
                           std::exp(-2.0 * x * x);
                }
                return out;
            } else {
                return kernel_quadrature(Prior(p), dt, 1e-10);
            }
        },
        prior);
}

namespace {

// ∫ p(xi)·e^(-i·omega·xi) over [a,b] by adaptive GK with oscillation knots.
cplx fourier_segment(const std::function<double(double)>& density, double a, double b,
                     double omega, double tol, const std::vector<double>& extra = {}) {
    auto knots = oscillation_knots(a, b, omega);
    knots.insert(knots.end(), extra.begin(), extra.end());
    QuadOptions opt;
    opt.abs_tol = tol;
    return integrate(
        [&density, omega](double xi) {
            return density(xi) * std::polar(1.0, -omega * xi);
        },
        a, b, opt, knots);
}

// Cauchy tails by two integrations by parts:
//   ∫_R^inf p·e^(-i·omega·xi) = e^(-i·omega·R)·[p(R)/(i·omega) + p'(R)/(i·omega)^2] + rem,
//   |rem| <= |p'(R)|/omega^2 since |p''| integrates to |p'(R)| beyond the mode.
// Both tails together are 2·Re of the right tail because p is even.
cplx cauchy_tail_pair(double F, double R, double omega) {
    const double pi = std::numbers::pi;
    double pR = (F / pi) / (F * F + R * R);
    double dpR = -(F / pi) * 2.0 * R / ((F * F + R * R) * (F * F + R * R));
    cplx iw(0.0, omega);
    cplx tail = std::polar(1.0, -omega * R) * (pR / iw + dpR / (iw * iw));
    return cplx(2.0 * tail.real(), 0.0);
}

} // namespace

cplx kernel_quadrature(const Prior& prior, double dt, double tol) {
    const double omega = kTwoPi * dt;
    return std::visit(
        [dt, tol, omega](const auto& p) -> cplx {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, SparsePrior>) {
                // purely atomic measure: the integral is the finite sum
                cplx out(0.0, 0.0);
                for (const auto& a : p.atoms)
                    out += a.mass * std::polar(1.0, -kTwoPi * a.freq * dt);
                return out;
            } else if constexpr (std::is_same_v<P, BandlimitedPrior>) {
                const double F = p.half_width;
                return fourier_segment([F](double) { return 1.0 / (2.0 * F); }, -F, F, omega,
                                       tol);
            } else if constexpr (std::is_same_v<P, MultibandPrior>) {
                double total = 0.0;
                for (const auto& b : p.bands) total += b.half_width;
                cplx out(0.0, 0.0);
                const double per = tol / double(p.bands.size());
                for (const auto& b : p.bands)
                    out += fourier_segment(
                        [&](double) { return 1.0 / (2.0 * total); }, b.center - b.half_width,
                        b.center + b.half_width, omega, per);
                return out;
            } else if constexpr (std::is_same_v<P, GaussianPrior>) {
                const double F = p.stdev;
                // tail mass beyond F·sqrt(2·ln(10/tol)) is below tol/10
                const double R = F * std::sqrt(2.0 * std::log(10.0 / tol));
                auto dens = [F](double xi) {
                    return std::exp(-xi * xi / (2.0 * F * F)) /
                           (F * std::sqrt(2.0 * std::numbers::pi));
                };
                return fourier_segment(dens, -R, R, omega, 0.8 * tol);
            } else if constexpr (std::is_same_v<P, CauchyPrior>) {
                const double F = p.scale;
                const double pi = std::numbers::pi;
                auto dens = [F, pi](double xi) {
                    return (F / pi) / (F * F + xi * xi);
                };
                // Plain truncation needs R ~ 10F/(pi·tol); with oscillation
                // present the integrated-by-parts tail lets R shrink to
                // O((F/(omega^2·tol))^(1/3)) with explicit error control.
                const double r_mass = 10.0 * F / (pi * tol);
                if (omega == 0.0)
                    return fourier_segment(dens, -r_mass, r_mass, 0.0, 0.8 * tol);
                const double r_ibp = std::max(
                    20.0 * F, std::cbrt(8.0 * F / (pi * omega * omega * tol)));
                if (r_ibp >= r_mass)
                    return fourier_segment(dens, -r_mass, r_mass, omega, 0.8 * tol);
                cplx core = fourier_segment(dens, -r_ibp, r_ibp, omega, 0.5 * tol);
                return core + cauchy_tail_pair(F, r_ibp, omega);
            } else if constexpr (std::is_same_v<P, GaussianMixturePrior>) {
                cplx out(0.0, 0.0);
                const double per = tol / double(p.components.size());
                for (const auto& comp : p.components) {
                    const double r =
                        comp.stdev * std::sqrt(2.0 * std::log(10.0 / per));
                    auto dens = [&comp](double xi) {
                        double z = (xi - comp.center) / comp.stdev;
                        return comp.weight * std::exp(-0.5 * z * z) /
                               (comp.stdev * std::sqrt(2.0 * std::numbers::pi));
                    };
                    out += fourier_segment(dens, comp.center - r, comp.center + r, omega,
                                           0.8 * per);
                }
                return out;
            } else {
                // piecewise-linear table: seed the subdivision at the knots
                std::vector<double> extra = p.knots();
                if (extra.size() > 300) {
                    std::vector<double> thin;
                    std::size_t step = extra.size() / 250 + 1;
                    for (std::size_t i = 0; i < extra.size(); i += step)
                        thin.push_back(extra[i]);
                    extra = std::move(thin);
                }
                return fourier_segment([&p](double xi) { return p(xi); }, -p.support_radius(),
                                       p.support_radius(), omega, tol, extra);
            }
        },
        prior);
}

} // namespace sigrec
