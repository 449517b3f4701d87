#include "sigrec/sampling.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sigrec/errors.hpp"
#include "sigrec/rng.hpp"

namespace sigrec {

namespace {
constexpr double kTinyTime = 1e-300; // keeps 1/min(t,T-t) finite at the endpoints
}

double SamplingDensity::density(double t) const {
    if (t < 0.0 || t > T_) throw DomainError("density evaluated outside [0,T]");
    switch (kind_) {
        case Kind::universal: {
            const double edge = T_ / std::pow(alpha_, 6.0);
            // distance form: `t > T - edge` loses the strip to rounding once
            // edge drops below one ulp of T, which would leave density(T) = inf
            const double dist = std::min(t, T_ - t);
            if (dist < edge) return std::pow(alpha_, 6.0) / T_;
            return alpha_ / (256.0 * dist);
        }
        case Kind::bandlimited_specific: {
            const double x = std::max(std::min(t, T_ - t), kTinyTime);
            return (4.0 + double(q_) / std::sqrt(x / T_)) / T_;
        }
        case Kind::uniform:
            return mass_ / T_;
    }
    return 0.0;
}

double SamplingDensity::cdf(double t) const {
    if (t < 0.0 || t > T_) throw DomainError("cdf evaluated outside [0,T]");
    switch (kind_) {
        case Kind::universal: {
            const double edge = T_ / std::pow(alpha_, 6.0);
            auto lower_half = [&](double x) {
                if (x <= edge) return x * std::pow(alpha_, 6.0) / T_;
                return 1.0 + (alpha_ / 256.0) * std::log(x / edge);
            };
            if (t <= 0.5 * T_) return lower_half(t);
            return mass_ - lower_half(T_ - t);
        }
        case Kind::bandlimited_specific: {
            auto lower_half = [&](double x) {
                const double r = x / T_;
                return 4.0 * r + 2.0 * double(q_) * std::sqrt(r);
            };
            if (t <= 0.5 * T_) return lower_half(t);
            return mass_ - lower_half(T_ - t);
        }
        case Kind::uniform:
            return mass_ * t / T_;
    }
    return 0.0;
}

double SamplingDensity::inverse_cdf(double u) const {
    if (!(u >= 0.0 && u <= 1.0))
        throw DomainError("inverse_cdf argument " + std::to_string(u) + " outside [0,1]");
    const double m = u * mass_;
    switch (kind_) {
        case Kind::universal: {
            const double edge = T_ / std::pow(alpha_, 6.0);
            auto lower_inv = [&](double mm) {
                if (mm <= 1.0) return mm * edge; // affine on the edge strip
                return edge * std::exp((mm - 1.0) * 256.0 / alpha_); // log branch
            };
            if (m <= 0.5 * mass_) return lower_inv(m);
            return T_ - lower_inv(mass_ - m);
        }
        case Kind::bandlimited_specific: {
            // 4r + 2q·sqrt(r) = m  =>  sqrt(r) = (-q + sqrt(q^2 + 4m))/4
            auto lower_inv = [&](double mm) {
                const double root = (-double(q_) + std::sqrt(double(q_) * double(q_) + 4.0 * mm)) / 4.0;
                return T_ * root * root;
            };
            if (m <= 0.5 * mass_) return lower_inv(m);
            return T_ - lower_inv(mass_ - m);
        }
        case Kind::uniform:
            return u * T_;
    }
    return 0.0;
}

std::string SamplingDensity::kind_name() const {
    switch (kind_) {
        case Kind::universal: return "universal";
        case Kind::bandlimited_specific: return "bandlimited_specific";
        case Kind::uniform: return "uniform";
    }
    return "";
}

SamplingDensity universal_density(double alpha, double T) {
    if (!(alpha >= 128.0))
        throw AlphaTooSmall("alpha must be >= 128, got " + std::to_string(alpha));
    if (!(T > 0.0)) throw DomainError("T must be positive");
    SamplingDensity d;
    d.kind_ = SamplingDensity::Kind::universal;
    d.T_ = T;
    d.alpha_ = alpha;
    d.mass_ = 2.0 + (alpha / 128.0) * std::log(std::pow(alpha, 6.0) / 2.0);
    return d;
}

SamplingDensity bandlimited_density(double F, double T, double epsilon) {
    if (!(F > 0.0) || !(T > 0.0)) throw DomainError("F and T must be positive");
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw DomainError("epsilon must be in (0,1]");
    SamplingDensity d;
    d.kind_ = SamplingDensity::Kind::bandlimited_specific;
    d.T_ = T;
    d.F_ = F;
    d.epsilon_ = epsilon;
    d.q_ = int(std::ceil(16.0 * std::numbers::pi * std::numbers::e * F * T +
                         2.0 * std::log(1.0 / epsilon) + 11.0));
    d.mass_ = 2.0 * std::numbers::sqrt2 * double(d.q_) + 4.0;
    return d;
}

SamplingDensity uniform_density(double mass, double T) {
    if (!(mass > 0.0) || !(T > 0.0)) throw DomainError("mass and T must be positive");
    SamplingDensity d;
    d.kind_ = SamplingDensity::Kind::uniform;
    d.T_ = T;
    d.mass_ = mass;
    return d;
}

SampleSet draw_samples(const SamplingDensity& density, std::size_t s, std::uint64_t seed) {
    if (s == 0) throw DomainError("sample count must be positive");
    SampleSet out;
    out.t.reserve(s);
    out.w.reserve(s);
    out.seed = seed;
    out.T = density.T();
    out.mass = density.mass();
    out.density_kind = density.kind_name();
    out.alpha = density.alpha();
    out.F = density.bandlimit();
    out.epsilon = density.epsilon();
    out.q = density.q();
    Rng rng(seed);
    const double norm = density.mass() / (double(s) * density.T());
    for (std::size_t i = 0; i < s; ++i) {
        const double t = density.inverse_cdf(rng.uniform01());
        out.t.push_back(t);
        out.w.push_back(std::sqrt(norm / density.density(t)));
    }
    return out;
}

std::size_t recommended_sample_count(double mass, double delta, double c) {
    if (!(mass >= 1.0)) throw DomainError("mass must be >= 1");
    if (!(delta > 0.0) || !(c > 0.0)) throw DomainError("delta and c must be positive");
    return std::size_t(std::ceil(c * mass * (std::log(mass) + 1.0 / delta)));
}

} // namespace sigrec
