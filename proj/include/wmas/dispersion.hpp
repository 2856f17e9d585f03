#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "combinat.hpp"
#include "family.hpp"

namespace wmas {

// Every function here returns exact counts of classes. The closed forms and
// generating-function routes are the production paths; the enumeration
// oracles that check them live with the tests.

namespace detail {

/// Prefix sums of coefficients 0..e_max.
inline std::vector<BigInt> cumulative(const IntPolynomial& gf, std::size_t e_max) {
    std::vector<BigInt> out(e_max + 1);
    BigInt acc = 0;
    for (std::size_t e = 0; e <= e_max; ++e) {
        acc += gf.coefficient(e);
        out[e] = acc;
    }
    return out;
}

inline std::size_t lee_s(int q) {
    if (q < 2) throw std::invalid_argument("lee: q must be >= 2");
    return static_cast<std::size_t>(q / 2);
}

}  // namespace detail

/// delta_{q,n}(e): partitions of e into at most n parts, each part in [1..s], s = floor(q/2).
inline BigInt lee_delta(int q, std::size_t n, std::size_t e) {
    return gaussian_binomial(n + detail::lee_s(q), n).coefficient(e);
}

/// Pi_{q,n}(0..e_max) from (1/(1-x)) [n+s over n]_x.
inline std::vector<BigInt> lee_dispersion_series(int q, std::size_t n, std::size_t e_max) {
    return detail::cumulative(gaussian_binomial(n + detail::lee_s(q), n), e_max);
}

inline BigInt lee_dispersion(int q, std::size_t n, std::size_t e) {
    return lee_dispersion_series(q, n, e)[e];
}

/// Sum-rank dispersion with t blocks of rank bound d.
inline BigInt sumrank_dispersion(std::size_t t, std::size_t d, std::size_t e) {
    if (e <= d) return binomial(t + e, e);
    return bounded_tuple_count(e, std::vector<std::size_t>(t, d));
}

/// P(F, e) for block lengths n_1..n_k.
inline BigInt mixed_dispersion(const std::vector<std::size_t>& bounds, std::size_t e) {
    if (bounds.empty()) throw std::invalid_argument("mixed_dispersion: at least one block required");
    for (std::size_t b : bounds)
        if (b < 1) throw std::invalid_argument("mixed_dispersion: block lengths must be >= 1");
    return bounded_tuple_count(e, bounds);
}

/// Shapes lambda in N^r with |lambda| <= n and |lambda|' <= e, for e = 0..e_max.
inline std::vector<BigInt> nrt_dispersion_series(std::size_t r, std::size_t n, std::size_t e_max) {
    if (r < 1) throw std::invalid_argument("nrt_dispersion: r must be >= 1");
    return detail::cumulative(gaussian_binomial(n + r, r), e_max);
}

inline BigInt nrt_dispersion(std::size_t r, std::size_t n, std::size_t e) {
    return nrt_dispersion_series(r, n, e)[e];
}

/// Classes (i, j), 0 <= j <= i <= w, with i + j <= e; piecewise closed form.
inline BigInt johnson_dispersion(std::size_t w, std::size_t e) {
    if (w < 1) throw std::invalid_argument("johnson_dispersion: w must be >= 1");
    const BigInt W = w, E = e, h = e / 2;
    if (e <= w) return (h + 1) * (E - h + 1);
    if (e < 2 * w) return (3 * W - E + 2) * (E - W + 1) / 2 + (W - h) * (h - E + W);
    return (W + 1) * (W + 2) / 2;
}

/// Statistics (pi_Z, pi_U, pi_S, pi_V) summing to n with pi_U + pi_V + 2 pi_S <= t'.
inline BigInt homogeneous_dispersion(std::size_t n, std::size_t t_prime) {
    // m = pi_U + pi_V splits in m + 1 ways; pi_Z absorbs the rest.
    BigInt total = 0;
    for (std::size_t s = 0; s <= n && 2 * s <= t_prime; ++s) {
        const std::size_t m_max = std::min(n - s, t_prime - 2 * s);
        // sum_{m=0}^{m_max} (m + 1)
        total += BigInt(m_max + 1) * (m_max + 2) / 2;
    }
    return total;
}

/// Homogeneous dispersion over Z_{2^k}: for k = 2 the set V is empty, so pi_V = 0.
inline BigInt homogeneous_dispersion_k(int k, std::size_t n, std::size_t t_prime) {
    if (k >= 3) return homogeneous_dispersion(n, t_prime);
    BigInt total = 0;
    for (std::size_t s = 0; s <= n && 2 * s <= t_prime; ++s)
        total += std::min(n - s, t_prime - 2 * s) + 1;
    return total;
}

/// Pi(0..e_max) for a family, with first differences.
struct DispersionProfile {
    SchemeFamilyParams family;
    std::vector<BigInt> values;
    std::vector<BigInt> delta;
};

namespace detail {

inline std::vector<std::size_t> mixed_bounds(const family::Mixed& m) {
    std::vector<std::size_t> b;
    for (const auto& blk : m.blocks) b.push_back(static_cast<std::size_t>(blk.length));
    return b;
}

inline std::vector<std::size_t> sumrank_bounds(const family::SumRank& p) {
    std::vector<std::size_t> b;
    for (int r : p.rows) b.push_back(static_cast<std::size_t>(r));
    return b;
}

}  // namespace detail

inline std::vector<BigInt> dispersion_series(const SchemeFamilyParams& params, std::size_t e_max) {
    validate(params);
    return std::visit(
        overloaded{
            [&](const family::Lee& p) { return lee_dispersion_series(p.q, p.n, e_max); },
            [&](const family::NRT& p) { return nrt_dispersion_series(p.r, p.n, e_max); },
            [&](const family::SumRank& p) {
                std::vector<BigInt> v;
                const auto bounds = detail::sumrank_bounds(p);
                for (std::size_t e = 0; e <= e_max; ++e) v.push_back(bounded_tuple_count(e, bounds));
                return v;
            },
            [&](const family::Mixed& p) {
                std::vector<BigInt> v;
                const auto bounds = detail::mixed_bounds(p);
                for (std::size_t e = 0; e <= e_max; ++e) v.push_back(mixed_dispersion(bounds, e));
                return v;
            },
            [&](const family::Johnson& p) {
                std::vector<BigInt> v;
                for (std::size_t e = 0; e <= e_max; ++e) v.push_back(johnson_dispersion(p.w, e));
                return v;
            },
            [&](const family::Homogeneous& p) {
                std::vector<BigInt> v;
                for (std::size_t e = 0; e <= e_max; ++e) v.push_back(homogeneous_dispersion_k(p.k, p.n, e));
                return v;
            },
            [&](const family::ClarkLiang&) {
                // d = (0, 1, 2, 2)
                std::vector<BigInt> v;
                for (std::size_t e = 0; e <= e_max; ++e) v.push_back(e == 0 ? 1 : e == 1 ? 2 : 4);
                return v;
            },
        },
        params);
}

inline DispersionProfile dispersion_profile(const SchemeFamilyParams& params, std::size_t e_max) {
    DispersionProfile prof{params, dispersion_series(params, e_max), {}};
    for (std::size_t e = 0; e <= e_max; ++e)
        prof.delta.push_back(e == 0 ? prof.values[0] : prof.values[e] - prof.values[e - 1]);
    return prof;
}

/// Total class count s + 1 (the saturation value of the profile).
inline BigInt total_class_count(const SchemeFamilyParams& params) {
    validate(params);
    return std::visit(overloaded{
                          [](const family::Lee& p) { return binomial(p.n + p.s(), p.s()); },
                          [](const family::NRT& p) { return binomial(p.n + p.r, p.r); },
                          [](const family::SumRank& p) {
                              BigInt r = 1;
                              for (int b : p.rows) r *= b + 1;
                              return r;
                          },
                          [](const family::Mixed& p) {
                              BigInt r = 1;
                              for (const auto& b : p.blocks) r *= b.length + 1;
                              return r;
                          },
                          [](const family::Johnson& p) { return BigInt((p.w + 1) * (p.w + 2) / 2); },
                          [](const family::Homogeneous& p) { return binomial(p.n + (p.k >= 3 ? 3 : 2), p.k >= 3 ? 3 : 2); },
                          [](const family::ClarkLiang&) { return BigInt(4); },
                      },
                      params);
}

}  // namespace wmas
