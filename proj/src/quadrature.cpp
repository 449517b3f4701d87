#include "sigrec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "sigrec/errors.hpp"

namespace sigrec {
namespace {

// Kronrod-15 abscissae on [-1,1] (positive half) and weights, with the
// embedded Gauss-7 weights on the odd-indexed nodes. QUADPACK values.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Interval {
    double a, b;
    cplx value;
    double err;
};

Interval eval_gk(const std::function<cplx(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    cplx fc = f(c);
    cplx kron = kWgk[7] * fc;
    cplx gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        cplx lo = f(c - h * kXgk[j]);
        cplx hi = f(c + h * kXgk[j]);
        kron += kWgk[j] * (lo + hi);
        if (j % 2 == 1) gauss += kWg[j / 2] * (lo + hi);
    }
    kron *= h;
    gauss *= h;
    return {a, b, kron, std::abs(kron - gauss)};
}

struct ErrOrder {
    bool operator()(const Interval& x, const Interval& y) const { return x.err < y.err; }
};

} // namespace

std::vector<double> oscillation_knots(double a, double b, double omega) {
    std::vector<double> knots{a, b};
    const double w = std::abs(omega);
    if (w <= 0.0 || b <= a) return knots;
    const double quarter = 1.5707963267948966 / w; // (pi/2)/|omega|
    // Geometric ladder outward from 0, capped at a quarter period per step;
    // knot count stays ~ log(range) + number of oscillations actually present.
    auto ladder = [&](double lo, double hi) {
        double x = std::max(lo, 1e-3 * quarter);
        while (x < hi) {
            if (x > lo) knots.push_back(x);
            x = std::min(x * 2.0, x + quarter);
        }
    };
    if (b > 0.0) ladder(std::max(a, 0.0), b);
    if (a < 0.0) {
        std::size_t before = knots.size();
        ladder(std::max(-b, 0.0), -a);
        for (std::size_t i = before; i < knots.size(); ++i) knots[i] = -knots[i];
        if (b > 0.0) knots.push_back(0.0);
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    std::vector<double> out;
    out.push_back(a);
    for (double k : knots)
        if (k > a && k < b) out.push_back(k);
    out.push_back(b);
    return out;
}

cplx integrate(const std::function<cplx(double)>& f, double a, double b,
               const QuadOptions& opt, const std::vector<double>& knots) {
    if (!(b > a)) return cplx(0.0, 0.0);

    std::vector<double> pts{a, b};
    for (double k : knots)
        if (k > a && k < b) pts.push_back(k);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::priority_queue<Interval, std::vector<Interval>, ErrOrder> heap;
    cplx total(0.0, 0.0);
    double total_err = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Interval iv = eval_gk(f, pts[i], pts[i + 1]);
        total += iv.value;
        total_err += iv.err;
        heap.push(iv);
        ++count;
    }

    while (total_err > opt.abs_tol) {
        if (count >= opt.max_intervals)
            throw QuadratureNonConvergent(
                "interval budget exhausted, residual error estimate " +
                std::to_string(total_err));
        Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw QuadratureNonConvergent("interval underflow near " + std::to_string(mid));
        Interval left = eval_gk(f, worst.a, mid);
        Interval right = eval_gk(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++count;
    }
    return total;
}

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadOptions& opt, const std::vector<double>& knots) {
    return integrate([&f](double x) { return cplx(f(x), 0.0); }, a, b, opt, knots).real();
}

} // namespace sigrec
