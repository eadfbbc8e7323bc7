#pragma once

// Combinatorial kernels behind the exact moment formulas: rising factorials,
// multinomial coefficients, and enumeration of integer compositions.

#include "rwa/rational.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rwa {

// Composition (i_1,...,i_r) of its order k = sum i_j across r parts.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("MultiIndex: parts must be non-empty");
        for (unsigned p : parts_) order_ += p;
    }

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    unsigned order() const noexcept { return order_; }
    std::size_t size() const noexcept { return parts_.size(); }
    unsigned operator[](std::size_t i) const { return parts_[i]; }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<unsigned> parts_;
    unsigned order_ = 0;
};

// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, unsigned k) {
    Rational result(1);
    Rational factor = a;
    for (unsigned t = 0; t < k; ++t, ++factor) result *= factor;
    return result;
}

// Exact binomial coefficient, multiplicative form. Each intermediate division
// is exact because C(n-k+i, i) is already an integer.
inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result(1);
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

// k! / (i_1! ... i_r!) as a running product of binomials of the partial sums.
inline BigInt multinomial(unsigned k, std::span<const unsigned> parts) {
    unsigned running = 0;
    BigInt result(1);
    for (unsigned p : parts) {
        running += p;
        result *= binomial(running, p);
    }
    if (running != k)
        throw std::invalid_argument("multinomial: parts must sum to the stated order");
    return result;
}

inline BigInt multinomial(unsigned k, const MultiIndex& idx) {
    return multinomial(k, std::span<const unsigned>(idx.parts()));
}

// Visits every composition of k into r non-negative parts exactly once, in
// lexicographically decreasing order, starting from (k, 0, ..., 0). The
// iteration is an in-place odometer; the callback sees a reusable buffer.
template <typename Visitor>
void for_each_composition(unsigned k, std::size_t r, Visitor&& visit) {
    if (r == 0) throw std::invalid_argument("for_each_composition: r must be >= 1");
    std::vector<unsigned> c(r, 0);
    c[0] = k;
    for (;;) {
        visit(std::span<const unsigned>(c));
        if (r == 1) break;
        std::size_t p = r - 1;
        do {
            --p;
        } while (p > 0 && c[p] == 0);
        if (c[p] == 0) break;  // all remaining mass sits in the last slot
        unsigned tail = 0;
        for (std::size_t i = p + 1; i < r; ++i) {
            tail += c[i];
            c[i] = 0;
        }
        c[p] -= 1;
        c[p + 1] = tail + 1;
    }
}

inline std::vector<MultiIndex> compositions(unsigned k, std::size_t r) {
    std::vector<MultiIndex> all;
    for_each_composition(k, r, [&](std::span<const unsigned> c) {
        all.emplace_back(std::vector<unsigned>(c.begin(), c.end()));
    });
    return all;
}

inline BigInt composition_count(unsigned k, std::size_t r) {
    return binomial(k + static_cast<unsigned>(r) - 1, static_cast<unsigned>(r) - 1);
}

}  // namespace rwa
