#pragma once

// Adaptive Simpson quadrature. Used in tests as an oracle that is
// independent of the closed forms under test.

#include <cmath>

namespace testsupport {

namespace detail {

// The first `force` levels split unconditionally: |S2 - S1| is not a safe
// error gauge on coarse stencils, where it can vanish identically for
// non-polynomial integrands (seen with t^(3/2) (1-t)^(1/2) on [0, 0.8]).
template <typename F>
double simpson_adapt(F& f, double a, double fa, double b, double fb, double m,
                     double fm, double whole, double tol, int depth, int force) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || (force <= 0 && std::fabs(delta) <= 15.0 * tol)) {
        return left + right + delta / 15.0;
    }
    return simpson_adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1, force - 1) +
           simpson_adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1, force - 1);
}

}  // namespace detail

template <typename F>
double integrate(F f, double a, double b, double tol = 1e-12,
                 int max_depth = 55) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_adapt(f, a, fa, b, fb, m, fm, whole, tol, max_depth, 6);
}

// Integral of g over (0, 1) where g may blow up at either endpoint no
// faster than an integrable power. Substituting x = sin^2(theta) maps
// (0, pi/2) onto (0, 1) with weight 2 sin(theta) cos(theta), which tames
// Beta-type endpoint singularities with exponents above -1.
//
// Accuracy floor: x cannot land closer to an endpoint than one ulp, so an
// inverse-square-root singularity there keeps ~1e-8 of its mass out of
// reach of any double-precision evaluation of g. Integrands bounded at the
// endpoints converge to ~1e-12 as usual.
template <typename F>
double integrate_unit_singular(F g, double tol = 1e-12) {
    const double half_pi = std::asin(1.0);
    return integrate(
        [&](double theta) {
            const double s = std::sin(theta);
            const double c = std::cos(theta);
            return g(s * s) * 2.0 * s * c;
        },
        0.0, half_pi, tol);
}

// Integral of g over (-a, a) with possible endpoint singularities, via
// x = a sin(theta). The same ~1e-8 floor applies when g has an
// inverse-square-root singularity at the endpoints.
template <typename F>
double integrate_symmetric_singular(F g, double a, double tol = 1e-12) {
    const double half_pi = std::asin(1.0);
    return integrate(
        [&](double theta) {
            const double x = a * std::sin(theta);
            return g(x) * a * std::cos(theta);
        },
        -half_pi, half_pi, tol);
}

}  // namespace testsupport
