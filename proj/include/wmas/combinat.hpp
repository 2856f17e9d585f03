#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace wmas {

/**
 * Integer polynomial with exact coefficients; index = exponent.
 *
 * The coefficient vector is kept normalised: no trailing zeros, so the
 * zero polynomial has an empty coefficient list and degree -1.
 */
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPolynomial constant(const BigInt& v) { return IntPolynomial({v}); }
    static IntPolynomial monomial(std::size_t exp, const BigInt& v = 1) {
        std::vector<BigInt> c(exp + 1);
        c[exp] = v;
        return IntPolynomial(std::move(c));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigInt>& coefficients() const { return c_; }

    BigInt coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

    BigInt evaluate(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPolynomial(std::move(r));
    }

    /// Product truncated to terms of degree <= max_degree.
    IntPolynomial truncated_mul(const IntPolynomial& other, std::size_t max_degree) const {
        if (is_zero() || other.is_zero()) return {};
        std::vector<BigInt> r(std::min(c_.size() + other.c_.size() - 1, max_degree + 1));
        for (std::size_t i = 0; i < c_.size() && i < r.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < other.c_.size() && i + j < r.size(); ++j)
                r[i + j] += c_[i] * other.c_[j];
        }
        return IntPolynomial(std::move(r));
    }

    /// Exact division. Throws std::domain_error if the divisor does not divide.
    IntPolynomial exact_div(const IntPolynomial& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("IntPolynomial: division by zero polynomial");
        std::vector<BigInt> rem = c_;
        const std::size_t dl = divisor.c_.size();
        const BigInt& lead = divisor.c_.back();
        if (rem.size() < dl) {
            if (!is_zero()) throw std::domain_error("IntPolynomial: inexact division");
            return {};
        }
        std::vector<BigInt> q(rem.size() - dl + 1);
        for (std::size_t k = q.size(); k-- > 0;) {
            const BigInt& top = rem[k + dl - 1];
            if (top == 0) continue;
            if (top % lead != 0) throw std::domain_error("IntPolynomial: inexact division");
            q[k] = top / lead;
            for (std::size_t j = 0; j < dl; ++j) rem[k + j] -= q[k] * divisor.c_[j];
        }
        for (const auto& r : rem)
            if (r != 0) throw std::domain_error("IntPolynomial: inexact division");
        return IntPolynomial(std::move(q));
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += c_[i] < 0 ? " - " : " + ";
            else if (c_[i] < 0) out += "-";
            BigInt mag = abs(c_[i]);
            if (i == 0 || mag != 1) out += mag.str();
            if (i >= 1) out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// p(0..n) by Euler's pentagonal-number recurrence.
inline std::vector<BigInt> partition_counts_upto(std::size_t n) {
    std::vector<BigInt> p(n + 1);
    p[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (long k = 1;; ++k) {
            const long g1 = k * (3 * k - 1) / 2;
            if (static_cast<std::size_t>(g1) > m) break;
            const bool plus = (k % 2) == 1;
            const BigInt& a = p[m - g1];
            acc += plus ? a : BigInt(-a);
            const long g2 = k * (3 * k + 1) / 2;
            if (static_cast<std::size_t>(g2) <= m) {
                const BigInt& b = p[m - g2];
                acc += plus ? b : BigInt(-b);
            }
        }
        p[m] = acc;
    }
    return p;
}

inline BigInt partition_count(std::size_t n) { return partition_counts_upto(n).back(); }

/// Coefficients 0..e_max of 1 / prod_{j=1}^{s} (1 - x^j): partitions with parts <= s.
inline std::vector<BigInt> bounded_part_partition_series(std::size_t e_max, std::size_t s) {
    std::vector<BigInt> c(e_max + 1);
    c[0] = 1;
    for (std::size_t j = 1; j <= s && j <= e_max; ++j)
        for (std::size_t i = j; i <= e_max; ++i) c[i] += c[i - j];
    return c;
}

inline BigInt bounded_part_partition_count(std::size_t e, std::size_t s) {
    return bounded_part_partition_series(e, s)[e];
}

/// Hardy-Ramanujan leading term for p(n).
inline double ramanujan_asymptotic(std::size_t n) {
    if (n == 0) throw std::invalid_argument("ramanujan_asymptotic: n must be >= 1");
    const double x = static_cast<double>(n);
    return std::exp(std::numbers::pi * std::sqrt(2.0 * x / 3.0)) / (4.0 * x * std::sqrt(3.0));
}

/// Schur's fixed-s asymptotic e^{s-1} / (s! (s-1)!).
inline double schur_asymptotic(std::size_t e, std::size_t s) {
    if (s < 2) throw std::invalid_argument("schur_asymptotic: s must be >= 2");
    double fact = 1.0;
    for (std::size_t i = 2; i < s; ++i) fact *= static_cast<double>(i);
    const double s_fact = fact * static_cast<double>(s);
    return std::pow(static_cast<double>(e), static_cast<double>(s - 1)) / (s_fact * fact);
}

/// C(n, k); zero when k > n.
inline BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// (x)_n = (1-x)(1-x^2)...(1-x^n).
inline IntPolynomial q_pochhammer(std::size_t n) {
    IntPolynomial r = IntPolynomial::constant(1);
    for (std::size_t j = 1; j <= n; ++j) r = r * (IntPolynomial::constant(1) - IntPolynomial::monomial(j));
    return r;
}

/// Gaussian binomial [n over m]_x = (x)_n / ((x)_m (x)_{n-m}).
inline IntPolynomial gaussian_binomial(std::size_t n, std::size_t m) {
    if (m > n) throw std::invalid_argument("gaussian_binomial: m > n");
    // multiply by (1 - x^(n-k+i)) / (1 - x^i) for i = 1..k, each step exact
    const std::size_t k = std::min(m, n - m);
    std::vector<BigInt> c(k * (n - k) + k + 1);
    c[0] = 1;
    std::size_t deg = 0;
    for (std::size_t i = 1; i <= k; ++i) {
        const std::size_t a = n - k + i;
        for (std::size_t j = deg + a; j >= a; --j) c[j] -= c[j - a];
        for (std::size_t j = i; j <= deg + a; ++j) c[j] += c[j - i];
        deg += a - i;
    }
    return IntPolynomial(std::move(c));
}

/// sum_{i=0}^{e} C(k+i-1, i) = C(e+k, k): weak compositions of integers <= e into k parts.
inline BigInt weak_composition_cumulative(std::size_t e, std::size_t k) { return binomial(e + k, k); }

/// Number of tuples 0 <= s_i <= bounds[i] with sum s_i <= e.
inline BigInt bounded_tuple_count(std::size_t e, std::span<const std::size_t> bounds) {
    // count[w] = tuples (over the bounds seen so far) with coordinate sum w
    std::vector<BigInt> count(e + 1);
    count[0] = 1;
    for (std::size_t b : bounds) {
        std::vector<BigInt> next(e + 1);
        BigInt window = 0;
        for (std::size_t w = 0; w <= e; ++w) {
            window += count[w];
            if (w > b) window -= count[w - b - 1];
            next[w] = window;
        }
        count = std::move(next);
    }
    BigInt total = 0;
    for (const auto& c : count) total += c;
    return total;
}

inline BigInt bounded_tuple_count(std::size_t e, const std::vector<std::size_t>& bounds) {
    return bounded_tuple_count(e, std::span<const std::size_t>(bounds));
}

}  // namespace wmas
