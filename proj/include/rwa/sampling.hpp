#pragma once

// Seed-reproducible variate generation for every law the moment engine
// talks about: Gamma/Beta/Dirichlet primitives, arcsin and power semicircle
// variates, the uniform-spacings route to Dirichlet(1,...,1), and the
// randomly weighted average Z itself.

#include "rwa/densities.hpp"
#include "rwa/moments.hpp"
#include "rwa/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rwa {

inline double sample_standard_normal(RngStream& stream) {
    // Box-Muller, cosine branch.
    const double u1 = stream.next_open01();
    const double u2 = stream.next_uniform01();
    const double two_pi = 6.283185307179586476925;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

// Gamma(shape, 1) via the Marsaglia-Tsang squeeze method; shapes below one
// are boosted through Gamma(shape) = Gamma(shape + 1) * U^(1/shape).
inline double sample_gamma(double shape, RngStream& stream) {
    if (!(shape > 0.0)) throw std::invalid_argument("sample_gamma: shape must be positive");

    if (shape < 1.0) {
        for (;;) {
            const double g = sample_gamma(shape + 1.0, stream) *
                             std::pow(stream.next_open01(), 1.0 / shape);
            if (g > 0.0) return g;  // reject underflow to keep the open support
        }
    }

    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = sample_standard_normal(stream);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = stream.next_open01();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

// Beta(n, m) through the Gamma ratio G1 / (G1 + G2); exact-boundary draws
// are rejected so the result stays in the open interval (0, 1).
inline double sample_beta(double n, double m, RngStream& stream) {
    detail::check_beta_shapes(n, m);
    for (;;) {
        const double g1 = sample_gamma(n, stream);
        const double g2 = sample_gamma(m, stream);
        const double b = g1 / (g1 + g2);
        if (b > 0.0 && b < 1.0) return b;
    }
}

inline double sample_beta(const BetaParams& p, RngStream& stream) {
    return sample_beta(to_double(p.n), to_double(p.m), stream);
}

// Dirichlet via normalized independent Gammas. The last coordinate is set to
// one minus the rest, so the left-to-right sum of the result is exactly 1.0.
inline std::vector<double> sample_dirichlet(const std::vector<double>& alpha, RngStream& stream) {
    if (alpha.empty()) throw std::invalid_argument("sample_dirichlet: alpha must be non-empty");
    for (double a : alpha)
        if (!(a > 0.0)) throw std::invalid_argument("sample_dirichlet: alpha entries must be positive");

    const std::size_t r = alpha.size();
    std::vector<double> w(r);
    for (;;) {
        double total = 0.0;
        for (std::size_t j = 0; j < r; ++j) {
            w[j] = sample_gamma(alpha[j], stream);
            total += w[j];
        }
        double partial = 0.0;
        for (std::size_t j = 0; j + 1 < r; ++j) {
            w[j] /= total;
            partial += w[j];
        }
        w[r - 1] = 1.0 - partial;

        bool interior = true;
        for (double v : w) interior = interior && v > 0.0 && v < 1.0;
        if (r == 1) {
            w[0] = 1.0;
            return w;
        }
        if (interior) return w;
    }
}

inline std::vector<double> sample_dirichlet(const DirichletParams& d, RngStream& stream) {
    std::vector<double> alpha(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) alpha[j] = to_double(d.alpha[j]);
    return sample_dirichlet(alpha, stream);
}

// Dirichlet(1,...,1) as the spacings R_i = U_(i) - U_(i-1) of r - 1 sorted
// uniforms with U_(0) = 0 and U_(r) = 1.
inline std::vector<double> sample_dirichlet_ones_spacings(std::size_t r, RngStream& stream) {
    if (r == 0) throw std::invalid_argument("sample_dirichlet_ones_spacings: r must be >= 1");
    if (r == 1) return {1.0};
    for (;;) {
        std::vector<double> u(r - 1);
        for (auto& v : u) v = stream.next_open01();
        std::sort(u.begin(), u.end());
        std::vector<double> spacings(r);
        spacings[0] = u[0];
        for (std::size_t i = 1; i + 1 < r; ++i) spacings[i] = u[i] - u[i - 1];
        spacings[r - 1] = 1.0 - u[r - 2];
        bool interior = true;
        for (double v : spacings) interior = interior && v > 0.0 && v < 1.0;
        if (interior) return spacings;
    }
}

// Arcsin variate on (-a, a): 2aB - a with B ~ Beta(1/2, 1/2).
inline double sample_arcsin(double a, RngStream& stream) {
    if (!(a > 0.0)) throw std::invalid_argument("sample_arcsin: a must be positive");
    return 2.0 * a * sample_beta(0.5, 0.5, stream) - a;
}

// Power semicircle variate on (-a, a): 2aB - a with B ~ Beta(l+1/2, l+1/2).
inline double sample_power_semicircle(const PowerSemicircleParams& ps, RngStream& stream) {
    const double shape = ps.lambda + 0.5;
    return 2.0 * ps.a * sample_beta(shape, shape, stream) - ps.a;
}

struct RwaDraw {
    std::vector<double> weights;
    std::vector<double> components;
    double z = 0.0;
};

// Draws Z = sum_j W_j X_j. Independence of W from the X_j is structural:
// child stream offsets 0..r-1 feed the component draws and offset r feeds
// the Dirichlet draw.
class RwaSampler {
public:
    RwaSampler(const RwaSpec& spec, const RngStream& base) : weight_stream_(base.substream(spec.size())) {
        const std::size_t r = spec.size();
        n_.resize(r);
        m_.resize(r);
        alpha_.resize(r);
        component_streams_.reserve(r);
        for (std::size_t j = 0; j < r; ++j) {
            n_[j] = to_double(spec.components()[j].n);
            m_[j] = to_double(spec.components()[j].m);
            alpha_[j] = to_double(spec.weights().alpha[j]);
            component_streams_.push_back(base.substream(j));
        }
    }

    RwaDraw draw_detailed() {
        RwaDraw d;
        const std::size_t r = n_.size();
        d.components.resize(r);
        for (std::size_t j = 0; j < r; ++j)
            d.components[j] = sample_beta(n_[j], m_[j], component_streams_[j]);
        d.weights = sample_dirichlet(alpha_, weight_stream_);
        d.z = 0.0;
        for (std::size_t j = 0; j < r; ++j) d.z += d.weights[j] * d.components[j];
        return d;
    }

    double operator()() { return draw_detailed().z; }

    std::size_t size() const noexcept { return n_.size(); }

private:
    std::vector<double> n_, m_, alpha_;
    std::vector<RngStream> component_streams_;
    RngStream weight_stream_;
};

struct SampleBatch {
    std::vector<double> values;
    std::string description;
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    std::size_t n() const noexcept { return values.size(); }
};

inline SampleBatch sample_rwa_batch(const RwaSpec& spec, std::size_t n, const RngStream& base,
                                    std::string description = "rwa") {
    RwaSampler sampler(spec, base);
    SampleBatch batch;
    batch.description = std::move(description);
    batch.seed = base.seed();
    batch.stream_id = base.stream_id();
    batch.values.resize(n);
    for (auto& v : batch.values) v = sampler();
    return batch;
}

}  // namespace rwa
