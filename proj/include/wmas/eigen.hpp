#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinat.hpp"
#include "family.hpp"

namespace wmas {

/**
 * Finite abelian group Z_{m_1} x ... x Z_{m_L}, elements stored as mixed-radix
 * coordinate vectors. Matrix spaces over a prime field are flattened into
 * Z_p^{rows*cols}; products concatenate the moduli.
 */
struct GroupSpec {
    std::string kind;  // "Z_q^n", "Z_2^k^n", "matrix space", "product"
    std::vector<int> moduli;

    static GroupSpec cyclic_power(int q, int n, std::string kind = "Z_q^n") {
        return {std::move(kind), std::vector<int>(static_cast<std::size_t>(n), q)};
    }

    std::size_t rank() const { return moduli.size(); }

    std::size_t order() const {
        std::size_t n = 1;
        for (int m : moduli) n *= static_cast<std::size_t>(m);
        return n;
    }

    /// Coordinates of element with linear index idx (first coordinate most significant).
    std::vector<int> decode(std::size_t idx) const {
        std::vector<int> c(moduli.size());
        for (std::size_t j = moduli.size(); j-- > 0;) {
            c[j] = static_cast<int>(idx % static_cast<std::size_t>(moduli[j]));
            idx /= static_cast<std::size_t>(moduli[j]);
        }
        return c;
    }

    std::size_t encode(std::span<const int> c) const {
        if (c.size() != moduli.size()) throw std::invalid_argument("GroupSpec::encode: wrong coordinate count");
        std::size_t idx = 0;
        for (std::size_t j = 0; j < moduli.size(); ++j) {
            const int m = moduli[j];
            idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(((c[j] % m) + m) % m);
        }
        return idx;
    }

    std::vector<int> negate(std::span<const int> c) const {
        std::vector<int> r(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) r[j] = (moduli[j] - c[j]) % moduli[j];
        return r;
    }

    std::vector<int> subtract(std::span<const int> a, std::span<const int> b) const {
        std::vector<int> r(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) r[j] = ((a[j] - b[j]) % moduli[j] + moduli[j]) % moduli[j];
        return r;
    }

    /// lcm of the moduli: every character value is a power of exp(2 pi i / exponent()).
    long exponent() const {
        long l = 1;
        for (int m : moduli) l = std::lcm(l, static_cast<long>(m));
        return l;
    }

    /// Phase k such that chi_u(x) = exp(2 pi i k / exponent()).
    long phase(std::span<const int> u, std::span<const int> x) const {
        const long L = exponent();
        long k = 0;
        for (std::size_t j = 0; j < moduli.size(); ++j)
            k = (k + static_cast<long>(u[j]) * x[j] % moduli[j] * (L / moduli[j])) % L;
        return k;
    }
};

/**
 * First eigenvalues P_k(j) of a commutative scheme.
 *
 * P[k][j] is indexed by class k (rows) and eigenvalue index j (columns).
 * Column 0 is the trivial index, so P[k][0] equals the valency of class k.
 * When `exact` is set every entry is an integer stored exactly in a double.
 */
struct EigenTable {
    std::vector<ClassIndex> classes;
    std::vector<ClassIndex> eigen_indices;
    std::vector<std::vector<double>> P;
    std::vector<BigInt> valencies;
    bool exact = false;

    std::size_t class_count() const { return classes.size(); }
    std::size_t index_count() const { return eigen_indices.size(); }

    std::size_t class_position(const ClassIndex& k) const {
        auto it = std::find(classes.begin(), classes.end(), k);
        if (it == classes.end()) throw std::out_of_range("EigenTable: unknown class " + to_string(k));
        return static_cast<std::size_t>(it - classes.begin());
    }
    std::size_t index_position(const ClassIndex& j) const {
        auto it = std::find(eigen_indices.begin(), eigen_indices.end(), j);
        if (it == eigen_indices.end()) throw std::out_of_range("EigenTable: unknown eigen index " + to_string(j));
        return static_cast<std::size_t>(it - eigen_indices.begin());
    }

    /// |X| = sum of valencies.
    BigInt group_order() const {
        BigInt n = 0;
        for (const auto& v : valencies) n += v;
        return n;
    }
};

/// K_k(i; n, q) = sum_j (-1)^j (q-1)^{k-j} C(i, j) C(n-i, k-j).
inline BigInt krawtchouk(int k, int i, int n, int q) {
    if (k < 0 || i < 0 || k > n || i > n || q < 2) throw std::invalid_argument("krawtchouk: need 0 <= k, i <= n and q >= 2");
    BigInt sum = 0;
    for (int j = 0; j <= k; ++j) {
        BigInt term = binomial(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *
                      binomial(static_cast<std::size_t>(n - i), static_cast<std::size_t>(k - j)) *
                      ipow(BigInt(q - 1), static_cast<unsigned>(k - j));
        sum += (j % 2 == 0) ? term : BigInt(-term);
    }
    return sum;
}

/// Eigen table of the Hamming scheme H(n, q) from Krawtchouk polynomials.
inline EigenTable hamming_eigen_table(int n, int q) {
    EigenTable t;
    t.exact = true;
    for (int k = 0; k <= n; ++k) {
        t.classes.push_back({k});
        t.eigen_indices.push_back({k});
    }
    t.P.assign(static_cast<std::size_t>(n + 1), std::vector<double>(static_cast<std::size_t>(n + 1)));
    for (int k = 0; k <= n; ++k) {
        for (int i = 0; i <= n; ++i) t.P[k][i] = krawtchouk(k, i, n, q).convert_to<double>();
        t.valencies.push_back(krawtchouk(k, 0, n, q));
    }
    return t;
}

namespace detail {

/// Diagonal first, the rest lexicographic.
inline void canonical_sort(std::vector<ClassIndex>& v, const ClassIndex& diagonal) {
    std::sort(v.begin(), v.end(), [&](const ClassIndex& a, const ClassIndex& b) {
        const bool da = a == diagonal, db = b == diagonal;
        if (da != db) return da;
        return a < b;
    });
}

inline bool all_near_integer(const std::vector<std::vector<double>>& P, double tol) {
    for (const auto& row : P)
        for (double v : row)
            if (std::abs(v - std::round(v)) > tol) return false;
    return true;
}

}  // namespace detail

/**
 * Character-sum oracle for a symmetric translation scheme on an abelian group.
 *
 * `class_of` labels group elements; the scheme relates x, y when class_of(x - y)
 * matches. Characters chi_u are grouped by `character_class(u)` (defaults to
 * `class_of`), and P_k(chi) = sum_{x in class k} chi(x). Every character inside a
 * group must produce the same column; the table is rejected otherwise.
 */
inline EigenTable translation_scheme_eigenvalues(
    const GroupSpec& group, const std::function<ClassIndex(std::span<const int>)>& class_of,
    const std::function<ClassIndex(std::span<const int>)>& character_class = {}, double tol = 1e-9) {
    const std::size_t N = group.order();
    const auto& dual_of = character_class ? character_class : class_of;

    std::vector<std::vector<int>> coords(N);
    std::vector<ClassIndex> elem_class(N), char_class(N);
    for (std::size_t x = 0; x < N; ++x) {
        coords[x] = group.decode(x);
        elem_class[x] = class_of(coords[x]);
        char_class[x] = dual_of(coords[x]);
    }
    for (std::size_t x = 0; x < N; ++x)
        if (elem_class[group.encode(group.negate(coords[x]))] != elem_class[x])
            throw std::invalid_argument("translation_scheme_eigenvalues: class map is not symmetric under x -> -x");

    const std::vector<int> zero(group.rank(), 0);
    EigenTable t;
    {
        std::map<ClassIndex, int> seen;
        for (const auto& c : elem_class) seen[c];
        for (auto& [c, _] : seen) t.classes.push_back(c);
        detail::canonical_sort(t.classes, class_of(zero));
        seen.clear();
        for (const auto& c : char_class) seen[c];
        for (auto& [c, _] : seen) t.eigen_indices.push_back(c);
        detail::canonical_sort(t.eigen_indices, dual_of(zero));
    }
    std::map<ClassIndex, std::size_t> cpos, jpos;
    for (std::size_t k = 0; k < t.classes.size(); ++k) cpos[t.classes[k]] = k;
    for (std::size_t j = 0; j < t.eigen_indices.size(); ++j) jpos[t.eigen_indices[j]] = j;

    std::vector<std::size_t> elem_pos(N);
    for (std::size_t x = 0; x < N; ++x) elem_pos[x] = cpos[elem_class[x]];

    const long L = group.exponent();
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(L));
    for (long k = 0; k < L; ++k)
        roots[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(L));

    const std::size_t K = t.classes.size(), J = t.eigen_indices.size();
    t.P.assign(K, std::vector<double>(J, 0.0));
    std::vector<bool> filled(J, false);
    std::vector<std::complex<double>> col(K);
    for (std::size_t u = 0; u < N; ++u) {
        std::fill(col.begin(), col.end(), std::complex<double>{});
        for (std::size_t x = 0; x < N; ++x)
            col[elem_pos[x]] += roots[static_cast<std::size_t>(group.phase(coords[u], coords[x]))];
        const std::size_t j = jpos[char_class[u]];
        for (std::size_t k = 0; k < K; ++k) {
            if (std::abs(col[k].imag()) > tol)
                throw std::domain_error("translation_scheme_eigenvalues: imaginary residue above tolerance");
            if (!filled[j]) {
                t.P[k][j] = col[k].real();
            } else if (std::abs(t.P[k][j] - col[k].real()) > tol * std::max(1.0, std::abs(t.P[k][j]))) {
                throw std::domain_error("translation_scheme_eigenvalues: character sums not constant on group " +
                                        to_string(char_class[u]));
            }
        }
        filled[j] = true;
    }

    t.valencies.assign(K, 0);
    for (std::size_t x = 0; x < N; ++x) t.valencies[elem_pos[x]] += 1;
    t.exact = detail::all_near_integer(t.P, tol);
    if (t.exact)
        for (auto& row : t.P)
            for (double& v : row) v = std::round(v);
    return t;
}

/// Lee composition (c_0, ..., c_s) of z in Z_q^n.
inline ClassIndex lee_composition(std::span<const int> z, int q) {
    const int s = q / 2;
    ClassIndex c(static_cast<std::size_t>(s + 1), 0);
    for (int v : z) {
        const int r = ((v % q) + q) % q;
        c[static_cast<std::size_t>(std::min(r, q - r))] += 1;
    }
    return c;
}

/**
 * Generating function of the Lee eigenvalues for a fixed eigen index i:
 * P_i(z) = prod_{l=0}^{s} (1 + 2 sum_m z_m cos(2 pi m l / q))^{i_l}, with the
 * m = s term replaced by (-1)^l z_s when q is even.
 *
 * The coefficient of z_1^{k_1} ... z_s^{k_s} is P_k(i) for the class
 * k = (n - |k|, k_1, ..., k_s).
 */
class LeeEigenGF {
public:
    LeeEigenGF(int q, ClassIndex i_vector) : q_(q), s_(q / 2), i_(std::move(i_vector)) {
        if (q < 2) throw std::invalid_argument("lee_eigen_gf: q must be >= 2");
        if (i_.size() != static_cast<std::size_t>(s_ + 1))
            throw std::invalid_argument("lee_eigen_gf: eigen index must have s + 1 entries");
        n_ = 0;
        for (int v : i_) {
            if (v < 0) throw std::invalid_argument("lee_eigen_gf: negative entry in eigen index");
            n_ += v;
        }
        expand();
    }

    int n() const { return n_; }
    const ClassIndex& index() const { return i_; }

    /// Linear factor coefficient of z_m at frequency l.
    double factor_coefficient(int l, int m) const {
        if (q_ % 2 == 0 && m == s_) return (l % 2 == 0) ? 1.0 : -1.0;
        return 2.0 * std::cos(2.0 * std::numbers::pi * m * l / q_);
    }

    /// Coefficient for the full class composition k = (k_0, ..., k_s).
    double coefficient(const ClassIndex& k) const {
        if (k.size() != static_cast<std::size_t>(s_ + 1)) throw std::invalid_argument("lee_eigen_gf: bad class size");
        int total = 0;
        for (int v : k) total += v;
        if (total != n_) throw std::invalid_argument("lee_eigen_gf: class must sum to n");
        auto it = coeffs_.find(ClassIndex(k.begin() + 1, k.end()));
        return it == coeffs_.end() ? 0.0 : it->second;
    }

    /// P_i(z) at a point z = (z_1, ..., z_s).
    double evaluate(std::span<const double> z) const {
        if (z.size() != static_cast<std::size_t>(s_)) throw std::invalid_argument("lee_eigen_gf: point needs s coordinates");
        double r = 1.0;
        for (int l = 0; l <= s_; ++l) {
            double f = 1.0;
            for (int m = 1; m <= s_; ++m) f += factor_coefficient(l, m) * z[static_cast<std::size_t>(m - 1)];
            r *= std::pow(f, i_[static_cast<std::size_t>(l)]);
        }
        return r;
    }

    const std::map<ClassIndex, double>& coefficients() const { return coeffs_; }

private:
    void expand() {
        // multiply the linear factors one at a time; keys are (k_1..k_s)
        std::map<ClassIndex, double> poly{{ClassIndex(static_cast<std::size_t>(s_), 0), 1.0}};
        for (int l = 0; l <= s_; ++l) {
            for (int rep = 0; rep < i_[static_cast<std::size_t>(l)]; ++rep) {
                std::map<ClassIndex, double> next;
                for (const auto& [mono, c] : poly) {
                    next[mono] += c;
                    for (int m = 1; m <= s_; ++m) {
                        ClassIndex e = mono;
                        e[static_cast<std::size_t>(m - 1)] += 1;
                        next[e] += c * factor_coefficient(l, m);
                    }
                }
                poly = std::move(next);
            }
        }
        coeffs_ = std::move(poly);
    }

    int q_, s_, n_ = 0;
    ClassIndex i_;
    std::map<ClassIndex, double> coeffs_;
};

inline LeeEigenGF lee_eigen_gf(int q, const ClassIndex& i_vector, std::optional<int> n = std::nullopt) {
    LeeEigenGF gf(q, i_vector);
    if (n && gf.n() != *n) throw std::invalid_argument("lee_eigen_gf: eigen index entries must sum to n");
    return gf;
}

/// All Lee compositions of n with s + 1 parts, diagonal (n, 0, ..., 0) first then lexicographic.
inline std::vector<ClassIndex> lee_compositions(int n, int s) {
    std::vector<ClassIndex> out;
    ClassIndex cur(static_cast<std::size_t>(s + 1), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == s) {
            cur[static_cast<std::size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, n);
    ClassIndex diag(static_cast<std::size_t>(s + 1), 0);
    diag[0] = n;
    detail::canonical_sort(out, diag);
    return out;
}

/// Full Lee eigen table L(n, q) from the generating function.
inline EigenTable lee_eigen_table(int q, int n) {
    const int s = q / 2;
    EigenTable t;
    t.classes = lee_compositions(n, s);
    t.eigen_indices = t.classes;
    t.P.assign(t.classes.size(), std::vector<double>(t.classes.size()));
    for (std::size_t j = 0; j < t.eigen_indices.size(); ++j) {
        const LeeEigenGF gf(q, t.eigen_indices[j]);
        for (std::size_t k = 0; k < t.classes.size(); ++k) t.P[k][j] = gf.coefficient(t.classes[k]);
    }
    for (const auto& k : t.classes) {
        // |class k| = n! / prod k_i! * 2^{#coordinates with a +-pair}
        BigInt v = 1;
        int left = n;
        for (std::size_t i = 0; i < k.size(); ++i) {
            v *= binomial(static_cast<std::size_t>(left), static_cast<std::size_t>(k[i]));
            left -= k[i];
            const bool paired = i > 0 && !(q % 2 == 0 && static_cast<int>(i) == s);
            if (paired) v *= ipow(BigInt(2), static_cast<unsigned>(k[i]));
        }
        t.valencies.push_back(v);
    }
    t.exact = detail::all_near_integer(t.P, 1e-9);
    if (t.exact)
        for (auto& row : t.P)
            for (double& v : row) v = std::round(v);
    return t;
}

/// Kronecker-style product: P_{(k_1..k_t)}((i_1..i_t)) = prod_j P^{(j)}_{k_j}(i_j).
inline EigenTable product_scheme_eigenvalues(const std::vector<EigenTable>& factors) {
    if (factors.empty()) throw std::invalid_argument("product_scheme_eigenvalues: at least one factor required");
    EigenTable acc = factors.front();
    for (std::size_t f = 1; f < factors.size(); ++f) {
        const EigenTable& b = factors[f];
        EigenTable next;
        next.exact = acc.exact && b.exact;
        for (const auto& ka : acc.classes)
            for (const auto& kb : b.classes) {
                ClassIndex k = ka;
                k.insert(k.end(), kb.begin(), kb.end());
                next.classes.push_back(std::move(k));
            }
        for (const auto& ja : acc.eigen_indices)
            for (const auto& jb : b.eigen_indices) {
                ClassIndex j = ja;
                j.insert(j.end(), jb.begin(), jb.end());
                next.eigen_indices.push_back(std::move(j));
            }
        for (const auto& va : acc.valencies)
            for (const auto& vb : b.valencies) next.valencies.push_back(va * vb);
        const std::size_t J = next.eigen_indices.size();
        for (std::size_t ka = 0; ka < acc.classes.size(); ++ka)
            for (std::size_t kb = 0; kb < b.classes.size(); ++kb) {
                std::vector<double> row(J);
                for (std::size_t ja = 0; ja < acc.eigen_indices.size(); ++ja)
                    for (std::size_t jb = 0; jb < b.eigen_indices.size(); ++jb)
                        row[ja * b.eigen_indices.size() + jb] = acc.P[ka][ja] * b.P[kb][jb];
                next.P.push_back(std::move(row));
            }
        acc = std::move(next);
    }
    return acc;
}

/// Psi_e(j) = sum_{k : d(k) <= e} P_k(j); `d` is aligned with table.classes.
inline double lloyd_polynomial(const EigenTable& table, std::span<const long> d, long e, std::size_t j) {
    if (d.size() != table.class_count()) throw std::invalid_argument("lloyd_polynomial: d must cover every class");
    if (j >= table.index_count()) throw std::out_of_range("lloyd_polynomial: eigen index out of range");
    double s = 0.0;
    for (std::size_t k = 0; k < table.class_count(); ++k)
        if (d[k] <= e) s += table.P[k][j];
    return s;
}

inline std::vector<double> lloyd_values(const EigenTable& table, std::span<const long> d, long e) {
    std::vector<double> v(table.index_count());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = lloyd_polynomial(table, d, e, j);
    return v;
}

/// Indices j with |Psi_e(j)| <= tolerance * max_j |Psi_e(j)|.
inline std::size_t lloyd_zero_count(const EigenTable& table, std::span<const long> d, long e, double tolerance) {
    if (tolerance < 0) throw std::invalid_argument("lloyd_zero_count: tolerance must be >= 0");
    const auto v = lloyd_values(table, d, e);
    double scale = 0.0;
    for (double x : v) scale = std::max(scale, std::abs(x));
    std::size_t zeros = 0;
    for (double x : v)
        if (std::abs(x) <= tolerance * scale) ++zeros;
    return zeros;
}

/// d-map from a function on class labels.
inline std::vector<long> distances_for(const EigenTable& table, const std::function<long(const ClassIndex&)>& d) {
    std::vector<long> out;
    for (const auto& k : table.classes) out.push_back(d(k));
    return out;
}

}  // namespace wmas
