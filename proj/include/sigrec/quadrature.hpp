#ifndef SIGREC_QUADRATURE_HPP
#define SIGREC_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace sigrec {

using cplx = std::complex<double>;

struct QuadOptions {
    double abs_tol = 1e-10;
    // Hard cap on interval subdivisions; exceeding it raises
    // QuadratureNonConvergent rather than returning a silent misestimate.
    std::size_t max_intervals = 2000000;
};

// Adaptive Gauss-Kronrod (G7,K15) over [a,b].
// `knots` (optional) forces an initial subdivision; callers pass oscillation
// periods or interpolation breakpoints so the error estimate is trustworthy
// from the first pass.
cplx integrate(const std::function<cplx(double)>& f, double a, double b,
               const QuadOptions& opt, const std::vector<double>& knots = {});

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadOptions& opt, const std::vector<double>& knots = {});

// Initial breakpoints for ∫ f(x)·e^(-i·omega·x) over [a,b]: caps each starting
// interval at roughly a quarter oscillation period, geometrically spaced away
// from the origin so long smooth tails stay cheap.
std::vector<double> oscillation_knots(double a, double b, double omega);

} // namespace sigrec

#endif
