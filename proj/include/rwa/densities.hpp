#pragma once

// Double-precision density and CDF evaluation for the Beta, arcsin, and
// power semicircle families. Exact rational parameters are converted to
// double once, at the call boundary; everything here is floating point.

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace rwa {

// ln Gamma(x) for x > 0 via the Lanczos approximation with g = 7 and the
// standard 9-coefficient table (Godfrey); arguments below 1/2 go through the
// reflection formula. Absolute error is below 1e-12 over the tested range.
inline double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");

    static constexpr double kCoef[9] = {
        0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7,
    };
    static constexpr double kG = 7.0;
    static constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // ln(2*pi)/2

    if (x < 0.5) {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x)
        const double pi = 3.14159265358979323846;
        return std::log(pi / std::sin(pi * x)) - log_gamma(1.0 - x);
    }

    const double z = x - 1.0;
    double series = kCoef[0];
    for (int i = 1; i < 9; ++i) series += kCoef[i] / (z + i);
    const double t = z + kG + 0.5;
    return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(series);
}

namespace detail {

// Continued fraction for the regularized incomplete beta, evaluated with the
// modified Lentz method (tolerance 1e-14, capped at 500 iterations).
inline double beta_continued_fraction(double a, double b, double x) {
    constexpr double kEps = 1e-14;
    constexpr double kFpMin = 1e-300;
    constexpr int kMaxIter = 500;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw std::runtime_error("beta_cdf: continued fraction did not converge");
}

inline void check_beta_shapes(double n, double m) {
    if (!(n > 0.0) || !(m > 0.0))
        throw std::invalid_argument("beta shapes must be positive");
}

}  // namespace detail

// Beta(n, m) density; zero outside the open interval (0, 1).
inline double beta_pdf(double n, double m, double x) {
    detail::check_beta_shapes(n, m);
    if (!(x > 0.0 && x < 1.0)) return 0.0;
    const double log_norm = log_gamma(n + m) - log_gamma(n) - log_gamma(m);
    return std::exp(log_norm + (n - 1.0) * std::log(x) + (m - 1.0) * std::log1p(-x));
}

// Regularized incomplete beta I_x(n, m); clamps to 0 below the support and
// to 1 above. Uses the symmetry switch at x > (n+1)/(n+m+2) so the continued
// fraction always runs in its fast-convergence region.
inline double beta_cdf(double n, double m, double x) {
    detail::check_beta_shapes(n, m);
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    if (x > (n + 1.0) / (n + m + 2.0)) return 1.0 - beta_cdf(m, n, 1.0 - x);
    const double log_front = log_gamma(n + m) - log_gamma(n) - log_gamma(m) +
                             n * std::log(x) + m * std::log1p(-x);
    return std::exp(log_front) * detail::beta_continued_fraction(n, m, x) / n;
}

// Parameters of the power semicircle density on (-a, a):
//   f(x; lambda) = Gamma(lambda+1) / (sqrt(pi) a^(2 lambda) Gamma(lambda+1/2))
//                  * (a^2 - x^2)^(lambda - 1/2),   |x| < a.
// lambda = 0 is the arcsin law, lambda = 1/2 the uniform, lambda = 1 the
// Wigner semicircle. A weighted average of r arcsin components with flat
// Dirichlet weights lands at lambda = (r - 1) / 2.
struct PowerSemicircleParams {
    double lambda;
    double a;

    PowerSemicircleParams(double lambda_, double a_) : lambda(lambda_), a(a_) {
        if (!(lambda >= 0.0)) throw std::invalid_argument("PowerSemicircleParams: lambda must be >= 0");
        if (!(a > 0.0)) throw std::invalid_argument("PowerSemicircleParams: a must be positive");
    }

    static PowerSemicircleParams for_components(std::size_t r, double a) {
        if (r == 0) throw std::invalid_argument("PowerSemicircleParams: r must be >= 1");
        return PowerSemicircleParams((static_cast<double>(r) - 1.0) / 2.0, a);
    }

    friend bool operator==(const PowerSemicircleParams&, const PowerSemicircleParams&) = default;
};

// Density of the power semicircle law; zero for |x| >= a. For lambda < 1/2
// the density is unbounded near the endpoints and is reported as computed.
inline double power_semicircle_pdf(const PowerSemicircleParams& ps, double x) {
    const double t = (ps.a - x) * (ps.a + x);  // a^2 - x^2
    if (!(t > 0.0)) return 0.0;
    static const double kHalfLogPi = 0.57236494292470008707;  // ln(pi)/2
    const double log_norm = -kHalfLogPi - 2.0 * ps.lambda * std::log(ps.a) +
                            log_gamma(ps.lambda + 1.0) - log_gamma(ps.lambda + 0.5);
    return std::exp(log_norm + (ps.lambda - 0.5) * std::log(t));
}

// CDF via the affine pullback to the symmetric Beta:
//   F(x) = I_{(x+a)/(2a)}(lambda + 1/2, lambda + 1/2).
inline double power_semicircle_cdf(const PowerSemicircleParams& ps, double x) {
    if (x <= -ps.a) return 0.0;
    if (x >= ps.a) return 1.0;
    return beta_cdf(ps.lambda + 0.5, ps.lambda + 0.5, (x + ps.a) / (2.0 * ps.a));
}

// Arcsin density on (-a, a): 1 / (pi sqrt(a^2 - x^2)); the lambda = 0 power
// semicircle. Zero at and beyond the endpoints.
inline double arcsin_pdf(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("arcsin_pdf: a must be positive");
    const double t = (a - x) * (a + x);
    if (!(t > 0.0)) return 0.0;
    const double pi = 3.14159265358979323846;
    return 1.0 / (pi * std::sqrt(t));
}

}  // namespace rwa
