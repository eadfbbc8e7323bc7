#pragma once

// Statistical verification layer: empirical moments with standard-error
// z-scores, one- and two-sample Kolmogorov-Smirnov tests with the asymptotic
// p-value series, and histogram tables for reporting.

#include "rwa/moments.hpp"
#include "rwa/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace rwa {

struct EmpiricalMoment {
    unsigned k = 0;
    double value = 0.0;      // mean of x^k
    double std_error = 0.0;  // sample sd of x^k divided by sqrt(n)

    friend bool operator==(const EmpiricalMoment&, const EmpiricalMoment&) = default;
};

// Raw moments 1..k_max of the batch plus their standard errors.
inline std::vector<EmpiricalMoment> empirical_moments(std::span<const double> values,
                                                      unsigned k_max) {
    if (values.empty()) throw std::invalid_argument("empirical_moments: batch must be non-empty");
    const double n = static_cast<double>(values.size());
    std::vector<EmpiricalMoment> out;
    out.reserve(k_max);
    for (unsigned k = 1; k <= k_max; ++k) {
        double sum = 0.0;
        double sum_sq = 0.0;
        for (double v : values) {
            const double p = std::pow(v, static_cast<double>(k));
            sum += p;
            sum_sq += p * p;
        }
        const double mean = sum / n;
        double variance = 0.0;
        if (values.size() > 1) variance = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
        out.push_back({k, mean, std::sqrt(variance / n)});
    }
    return out;
}

struct MomentTestResult {
    unsigned k = 0;
    double empirical = 0.0;
    double exact = 0.0;
    double z_score = 0.0;
    bool pass = false;

    friend bool operator==(const MomentTestResult&, const MomentTestResult&) = default;
};

// z-scores of the batch moments against the given targets (index 0 holds the
// order-1 target). Degenerate batches pass only on exact agreement.
inline std::vector<MomentTestResult> moment_test(std::span<const double> values,
                                                 std::span<const double> targets,
                                                 double z_threshold) {
    const auto empirical = empirical_moments(values, static_cast<unsigned>(targets.size()));
    std::vector<MomentTestResult> out;
    out.reserve(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const double diff = empirical[i].value - targets[i];
        double z = 0.0;
        if (diff != 0.0) {
            z = empirical[i].std_error > 0.0 ? diff / empirical[i].std_error
                                             : std::numeric_limits<double>::infinity() * (diff > 0 ? 1 : -1);
        }
        out.push_back({empirical[i].k, empirical[i].value, targets[i], z,
                       std::fabs(z) <= z_threshold});
    }
    return out;
}

// Samples Z from a theorem-mode spec and compares its empirical moments to
// the closed-form Beta targets.
inline std::vector<MomentTestResult> moment_identity_test(const RwaSpec& spec, unsigned k_max,
                                                          std::size_t n, const RngStream& base,
                                                          double z_threshold = 5.0) {
    if (!spec.theorem_mode())
        throw std::invalid_argument("moment_identity_test: spec must be in theorem mode");
    if (n < 1000) throw std::invalid_argument("moment_identity_test: n must be >= 1000");

    const auto batch = sample_rwa_batch(spec, n, base);
    const Rational n_total = spec.total_n();
    const Rational m_total = spec.total_m();
    std::vector<double> targets;
    targets.reserve(k_max);
    for (unsigned k = 1; k <= k_max; ++k)
        targets.push_back(to_double(beta_closed_form_moment(n_total, m_total, k)));
    return moment_test(batch.values, targets, z_threshold);
}

// Supremum distance between the empirical CDF of the sample and a reference
// CDF: max over sorted points of max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n).
template <typename Cdf>
double ks_statistic(std::span<const double> sample, Cdf&& cdf) {
    if (sample.empty()) throw std::invalid_argument("ks_statistic: sample must be non-empty");
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        const double hi = (static_cast<double>(i) + 1.0) / n - f;
        const double lo = f - static_cast<double>(i) / n;
        d = std::max(d, std::max(hi, lo));
    }
    return d;
}

// Two-sided asymptotic Kolmogorov p-value
//   Q(t) = 2 sum_{j>=1} (-1)^(j-1) exp(-2 j^2 t^2),  t = d sqrt(n);
// the series is truncated once terms drop below 1e-12 and the result is
// clamped to [0, 1]. n may be fractional (two-sample effective size).
inline double ks_pvalue(double d, double n) {
    if (n < 1.0) throw std::invalid_argument("ks_pvalue: n must be >= 1");
    if (d <= 0.0) return 1.0;
    const double t = d * std::sqrt(n);
    if (t <= 0.0) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 100000; ++j) {
        const double term = std::exp(-2.0 * j * j * t * t);
        sum += sign * term;
        if (term < 1e-12) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

struct KsResult {
    double statistic = 0.0;
    double n_effective = 0.0;
    double p_value = 0.0;
    double alpha = 0.0;
    bool pass = false;

    friend bool operator==(const KsResult&, const KsResult&) = default;
};

template <typename Cdf>
KsResult ks_test(std::span<const double> sample, Cdf&& cdf, double alpha) {
    const double d = ks_statistic(sample, cdf);
    const double n = static_cast<double>(sample.size());
    const double p = ks_pvalue(d, n);
    return {d, n, p, alpha, p >= alpha};
}

// Two-sample statistic over the merged order; tied values are consumed from
// both samples before the gap is measured.
inline double ks_two_sample_statistic(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("ks_two_sample: both samples must be non-empty");
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < sa.size() && j < sb.size()) {
        const double x = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] == x) ++i;
        while (j < sb.size() && sb[j] == x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

inline KsResult ks_two_sample(std::span<const double> a, std::span<const double> b, double alpha) {
    const double d = ks_two_sample_statistic(a, b);
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double n_eff = na * nb / (na + nb);
    const double p = ks_pvalue(d, n_eff);
    return {d, n_eff, p, alpha, p >= alpha};
}

struct HistogramBin {
    double center = 0.0;
    std::size_t count = 0;
    double density = 0.0;  // count / (batch size * bin width)

    friend bool operator==(const HistogramBin&, const HistogramBin&) = default;
};

// Equal-width bins over [lo, hi]; the right edge falls in the last bin.
// Summed as a step function the densities integrate to the in-range fraction.
inline std::vector<HistogramBin> histogram(std::span<const double> values, unsigned bins,
                                           double lo, double hi) {
    if (bins == 0) throw std::invalid_argument("histogram: bins must be >= 1");
    if (!(lo < hi)) throw std::invalid_argument("histogram: lo must be < hi");
    const double width = (hi - lo) / bins;
    std::vector<HistogramBin> out(bins);
    for (unsigned b = 0; b < bins; ++b) out[b].center = lo + (b + 0.5) * width;
    for (double v : values) {
        if (v < lo || v > hi) continue;
        auto idx = static_cast<std::size_t>((v - lo) / width);
        if (idx >= bins) idx = bins - 1;
        ++out[idx].count;
    }
    if (!values.empty()) {
        const double scale = 1.0 / (static_cast<double>(values.size()) * width);
        for (auto& bin : out) bin.density = static_cast<double>(bin.count) * scale;
    }
    return out;
}

}  // namespace rwa
