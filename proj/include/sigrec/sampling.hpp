#ifndef SIGREC_SAMPLING_HPP
#define SIGREC_SAMPLING_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sigrec {

// Unnormalized densities over [0,T] used for time-node sampling. `mass` is
// the exact analytic integral; draw probabilities are density/mass.
class SamplingDensity {
public:
    enum class Kind { universal, bandlimited_specific, uniform };

    Kind kind() const { return kind_; }
    double T() const { return T_; }
    double mass() const { return mass_; }
    double alpha() const { return alpha_; }
    double bandlimit() const { return F_; }
    double epsilon() const { return epsilon_; }
    int q() const { return q_; }

    double density(double t) const;  // unnormalized, defined on [0,T]
    double cdf(double t) const;      // ∫_0^t density, so cdf(T) == mass
    // Closed-form inverse of the normalized CDF; u in [0,1] else DomainError.
    double inverse_cdf(double u) const;

    std::string kind_name() const;

    friend SamplingDensity universal_density(double alpha, double T);
    friend SamplingDensity bandlimited_density(double F, double T, double epsilon);
    friend SamplingDensity uniform_density(double mass, double T);

private:
    SamplingDensity() = default;

    Kind kind_ = Kind::uniform;
    double T_ = 1.0;
    double mass_ = 1.0;
    double alpha_ = 0.0;   // universal
    double F_ = 0.0;       // bandlimited_specific
    double epsilon_ = 0.0; // bandlimited_specific
    int q_ = 0;            // bandlimited_specific
};

// Spectrum-blind density: alpha/(256·min(t,T-t)) on the interior, capped at
// alpha^6/T on the edge strips [0,T/alpha^6] and [T(1-1/alpha^6),T].
// mass = 2 + (alpha/128)·ln(alpha^6/2). Requires alpha >= 128 (AlphaTooSmall).
SamplingDensity universal_density(double alpha, double T);

// Bandlimited-specific density (1/T)·(4 + q/sqrt(min(t,T-t)/T)) with
// q = ceil(16·pi·e·F·T + 2·ln(1/epsilon) + 11); mass = 2·sqrt(2)·q + 4.
SamplingDensity bandlimited_density(double F, double T, double epsilon);

// Flat density mass/T; with it every draw weight is sqrt(1/s).
SamplingDensity uniform_density(double mass, double T);

struct SampleSet {
    std::vector<double> t;
    std::vector<double> w; // w_i = sqrt(mass/(s·T·density(t_i)))
    std::uint64_t seed = 0;
    double T = 1.0;
    double mass = 0.0;
    std::string density_kind;
    double alpha = 0.0;
    double F = 0.0;
    double epsilon = 0.0;
    int q = 0;
};

// Deterministic inverse-transform draws: node i uses the i-th uniform of the
// xoshiro256** stream seeded with `seed` (see rng.hpp). Bit-reproducible for
// a fixed (density, s, seed).
SampleSet draw_samples(const SamplingDensity& density, std::size_t s, std::uint64_t seed);

// ceil(c·mass·(ln(mass) + 1/delta)); natural log. mass >= 1, delta > 0, c > 0.
std::size_t recommended_sample_count(double mass, double delta, double c = 5.0);

} // namespace sigrec

#endif
