#ifndef SIGREC_PRIOR_HPP
#define SIGREC_PRIOR_HPP

#include <complex>
#include <variant>
#include <vector>

namespace sigrec {

using cplx = std::complex<double>;

// A Fourier prior is a probability measure on frequency (Hz). Every family
// below must carry total mass 1; validate() enforces it.

struct SparseAtom {
    double freq;
    double mass;
};

// finitely many frequency atoms
struct SparsePrior {
    std::vector<SparseAtom> atoms;
};

// uniform on [-half_width, half_width]
struct BandlimitedPrior {
    double half_width;
};

struct Band {
    double center;
    double half_width;
};

// uniform on a union of pairwise disjoint intervals
struct MultibandPrior {
    std::vector<Band> bands;
};

// normal with mean 0 and standard deviation `stdev`
struct GaussianPrior {
    double stdev;
};

// Cauchy-Lorentz with scale `scale`: p(xi) = 1/(pi*scale*(1+(xi/scale)^2))
struct CauchyPrior {
    double scale;
};

struct MixtureComponent {
    double center;
    double stdev;
    double weight;
};

struct GaussianMixturePrior {
    std::vector<MixtureComponent> components;
};

// Tabulated density on [-support_radius, support_radius], linearly
// interpolated between knots, zero outside. Normalized at construction;
// the raw table only needs to be nonnegative with positive total mass.
class NumericDensityPrior {
public:
    NumericDensityPrior(std::vector<double> knots, std::vector<double> values);

    double operator()(double xi) const; // normalized density
    double support_radius() const { return radius_; }
    const std::vector<double>& knots() const { return knots_; }
    const std::vector<double>& values() const { return values_; } // normalized

private:
    std::vector<double> knots_;  // strictly increasing
    std::vector<double> values_; // same length, >= 0
    double radius_;
};

using Prior = std::variant<SparsePrior, BandlimitedPrior, MultibandPrior, GaussianPrior,
                           CauchyPrior, GaussianMixturePrior, NumericDensityPrior>;

// Throws NonNormalized / OverlappingBands / NonPositiveScale.
void validate(const Prior& prior);

// True when the measure is symmetric about 0, which makes the kernel real.
bool symmetric(const Prior& prior, double tol = 1e-12);

// k(dt) = ∫ e^(-2·pi·i·dt·xi) dmu(xi), closed form per family
// (NumericDensityPrior falls back to quadrature at tol 1e-10).
cplx kernel_value(const Prior& prior, double dt);

// Same integral evaluated numerically to absolute error <= tol; the
// independent cross-check for kernel_value. Throws QuadratureNonConvergent
// if the refinement budget runs out.
cplx kernel_quadrature(const Prior& prior, double dt, double tol);

// sin(x)/x with the small-argument branch 1 - x^2/6 below |x| < 1e-6.
double sinc_ratio(double x);

} // namespace sigrec

#endif
