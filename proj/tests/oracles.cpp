#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa,
             double b, double fb, double m, double fm, double whole,
             double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    return adapt(f, a, fa, b, fb, m, fm, simpson(a, fa, b, fb, fm), tol, 40);
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              int iters) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("bisect: no sign change on [lo, hi]");
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) return mid;
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double classical_flux_root(double Q) {
    return bisect([Q](double z) { return Q * std::exp(-z * z) - z; }, 0.0,
                  std::max(1.0, Q));
}

double classical_temp_root(double Ste) {
    return bisect(
        [Ste](double z) {
            return kSqrtPi * z * std::exp(z * z) * std::erf(z) - Ste;
        },
        0.0, 2.0);
}

double deriv_central(const std::function<double(double)>& f, double x,
                     double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

double inerfc_closed1(double z) {
    return std::exp(-z * z) / kSqrtPi - z * std::erfc(z);
}

double inerfc_closed2(double z) {
    return ((1.0 + 2.0 * z * z) * std::erfc(z) -
            2.0 * z * std::exp(-z * z) / kSqrtPi) /
           4.0;
}

double inerfc_quad(int n, double z) {
    if (n < 0) throw std::invalid_argument("inerfc_quad: order must be >= 0");
    if (n == 0) return std::erfc(z);
    // Single-integral form: i^n erfc(z) = (2/sqrt(pi)) int_z^inf
    // (t-z)^n/n! e^{-t^2} dt, so no nested quadrature is needed.
    double fact = 1.0;
    for (int j = 2; j <= n; ++j) fact *= j;
    // The integrand decays like exp(-t^2) past the origin; 10 is far beyond
    // double round-off for every tested z.
    const double cut = std::max(z, 0.0) + 10.0;
    const double integral = integrate(
        [n, z](double t) { return std::pow(t - z, n) * std::exp(-t * t); }, z,
        cut, 1e-13);
    return 2.0 / kSqrtPi * integral / fact;
}

} // namespace oracle
