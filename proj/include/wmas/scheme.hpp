#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinat.hpp"
#include "eigen.hpp"
#include "family.hpp"

namespace wmas {

inline constexpr std::size_t kDefaultSchemeCap = 20000;

/**
 * Desk-scale association scheme with every pair classified.
 *
 * Translation schemes keep the group and an element classifier and compute
 * class_of(x, y) = class(x - y) on demand; other schemes (Johnson, relations
 * given pairwise) store the full |X| x |X| class matrix. Class 0 is always the
 * diagonal. Instances are immutable once built.
 */
class ExplicitScheme {
public:
    using Classifier = std::function<ClassIndex(std::span<const int>)>;
    using Relation = std::function<ClassIndex(std::span<const int>, std::span<const int>)>;
    using Distance = std::function<long(const ClassIndex&)>;

    /// Symmetric translation scheme on `group`.
    static ExplicitScheme translation(GroupSpec group, Classifier element_class, Distance d,
                                      Classifier character_class = {}, std::size_t cap = kDefaultSchemeCap) {
        const std::size_t N = group.order();
        if (N > cap)
            throw std::length_error("build_scheme: |X| = " + std::to_string(N) + " exceeds cap " + std::to_string(cap));
        ExplicitScheme s;
        s.group_ = std::move(group);
        s.classifier_ = std::move(element_class);
        s.dual_classifier_ = character_class ? std::move(character_class) : s.classifier_;
        s.labels_.resize(N);
        std::vector<ClassIndex> raw(N);
        for (std::size_t x = 0; x < N; ++x) {
            s.labels_[x] = s.group_->decode(x);
            raw[x] = s.classifier_(s.labels_[x]);
        }
        s.set_classes(raw, s.classifier_(std::vector<int>(s.group_->rank(), 0)), d);
        s.elem_class_.resize(N);
        for (std::size_t x = 0; x < N; ++x) s.elem_class_[x] = s.position_.at(raw[x]);
        return s;
    }

    /// Scheme given by an arbitrary pairwise relation; `diagonal` labels R_0.
    static ExplicitScheme from_relation(std::vector<std::vector<int>> labels, const Relation& relation,
                                        const ClassIndex& diagonal, Distance d,
                                        std::size_t cap = kDefaultSchemeCap) {
        const std::size_t N = labels.size();
        if (N > cap)
            throw std::length_error("build_scheme: |X| = " + std::to_string(N) + " exceeds cap " + std::to_string(cap));
        ExplicitScheme s;
        s.labels_ = std::move(labels);
        std::vector<ClassIndex> raw(N * N);
        for (std::size_t x = 0; x < N; ++x)
            for (std::size_t y = 0; y < N; ++y) raw[x * N + y] = relation(s.labels_[x], s.labels_[y]);
        s.set_classes(raw, diagonal, d);
        s.matrix_.resize(N * N);
        for (std::size_t i = 0; i < N * N; ++i) s.matrix_[i] = s.position_.at(raw[i]);
        return s;
    }

    /// Scheme from a precomputed class-position matrix (row-major |X| x |X|).
    static ExplicitScheme from_matrix(std::vector<std::vector<int>> labels, std::vector<ClassIndex> classes,
                                      std::vector<long> d, std::vector<std::uint16_t> matrix) {
        ExplicitScheme s;
        s.labels_ = std::move(labels);
        s.classes_ = std::move(classes);
        s.d_ = std::move(d);
        s.matrix_ = std::move(matrix);
        for (std::size_t k = 0; k < s.classes_.size(); ++k) s.position_[s.classes_[k]] = static_cast<std::uint16_t>(k);
        return s;
    }

    std::size_t size() const { return labels_.size(); }
    std::size_t class_count() const { return classes_.size(); }
    const std::vector<ClassIndex>& classes() const { return classes_; }
    const std::vector<long>& distances() const { return d_; }
    long distance_of_class(std::size_t k) const { return d_[k]; }
    const std::vector<int>& label(std::size_t x) const { return labels_[x]; }
    const std::vector<std::vector<int>>& labels() const { return labels_; }
    const std::optional<GroupSpec>& group() const { return group_; }
    bool is_translation() const { return group_.has_value(); }
    const std::optional<SchemeFamilyParams>& family() const { return family_; }
    void set_family(SchemeFamilyParams p) { family_ = std::move(p); }

    std::size_t class_position(const ClassIndex& c) const {
        auto it = position_.find(c);
        if (it == position_.end()) throw std::out_of_range("ExplicitScheme: unknown class " + to_string(c));
        return it->second;
    }

    /// Position of the class containing (x, y).
    std::size_t class_of(std::size_t x, std::size_t y) const {
        if (!matrix_.empty()) return matrix_[x * size() + y];
        return elem_class_[group_->encode(group_->subtract(labels_[x], labels_[y]))];
    }

    long distance(std::size_t x, std::size_t y) const { return d_[class_of(x, y)]; }

    std::optional<std::size_t> find(std::span<const int> label) const {
        if (group_) {
            if (label.size() != group_->rank()) return std::nullopt;
            for (std::size_t j = 0; j < label.size(); ++j)
                if (label[j] < 0 || label[j] >= group_->moduli[j]) return std::nullopt;
            return group_->encode(label);
        }
        for (std::size_t x = 0; x < labels_.size(); ++x)
            if (std::equal(label.begin(), label.end(), labels_[x].begin(), labels_[x].end())) return x;
        return std::nullopt;
    }

    /// Full class-position matrix (materialised on demand for translation schemes).
    std::vector<std::uint16_t> class_matrix() const {
        if (!matrix_.empty()) return matrix_;
        const std::size_t N = size();
        std::vector<std::uint16_t> m(N * N);
        for (std::size_t x = 0; x < N; ++x)
            for (std::size_t y = 0; y < N; ++y) m[x * N + y] = static_cast<std::uint16_t>(class_of(x, y));
        return m;
    }

    const Classifier& element_classifier() const { return classifier_; }
    const Classifier& character_classifier() const { return dual_classifier_; }

private:
    void set_classes(const std::vector<ClassIndex>& raw, const ClassIndex& diagonal, const Distance& d) {
        std::map<ClassIndex, int> seen;
        for (const auto& c : raw) seen[c];
        if (!seen.contains(diagonal)) throw std::invalid_argument("ExplicitScheme: diagonal class never occurs");
        for (auto& [c, _] : seen) classes_.push_back(c);
        detail::canonical_sort(classes_, diagonal);
        if (classes_.size() > std::numeric_limits<std::uint16_t>::max())
            throw std::length_error("ExplicitScheme: too many classes");
        for (std::size_t k = 0; k < classes_.size(); ++k) {
            position_[classes_[k]] = static_cast<std::uint16_t>(k);
            d_.push_back(d(classes_[k]));
        }
    }

    std::optional<SchemeFamilyParams> family_;
    std::vector<std::vector<int>> labels_;
    std::vector<ClassIndex> classes_;
    std::map<ClassIndex, std::uint16_t> position_;
    std::vector<long> d_;
    std::vector<std::uint16_t> matrix_;
    std::optional<GroupSpec> group_;
    Classifier classifier_, dual_classifier_;
    std::vector<std::uint16_t> elem_class_;
};

namespace detail {

inline long weighted_sum(const ClassIndex& c, int first_weight) {
    long s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += static_cast<long>(i + static_cast<std::size_t>(first_weight)) * c[i];
    return s;
}

inline long plain_sum(const ClassIndex& c) {
    long s = 0;
    for (int v : c) s += v;
    return s;
}

/// Rank of a rows x cols matrix over the prime field F_p.
inline int rank_mod_p(std::vector<int> m, int rows, int cols, int p) {
    auto inv = [p](int a) {
        long r = 1, b = a, e = p - 2;
        while (e > 0) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<int>(r);
    };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<std::size_t>(r * cols + c)] % p != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(m[static_cast<std::size_t>(piv * cols + j)], m[static_cast<std::size_t>(rank * cols + j)]);
        const int iv = inv(m[static_cast<std::size_t>(rank * cols + c)]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const int f = static_cast<int>(static_cast<long>(m[static_cast<std::size_t>(r * cols + c)]) * iv % p);
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j) {
                auto& dst = m[static_cast<std::size_t>(r * cols + j)];
                dst = static_cast<int>(((dst - static_cast<long>(f) * m[static_cast<std::size_t>(rank * cols + j)]) % p + p) % p);
            }
        }
        ++rank;
    }
    return rank;
}

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// 2-cyclotomic coset of i modulo 15.
inline std::vector<int> cyclotomic_coset_15(int i) {
    std::vector<int> c;
    int x = i % 15;
    do {
        c.push_back(x);
        x = (2 * x) % 15;
    } while (x != i % 15);
    return c;
}

}  // namespace detail

/// NRT shape of z in (Z_q^r)^n: lambda_i counts blocks whose rightmost non-zero entry sits at position i.
inline ClassIndex nrt_shape(std::span<const int> z, int r) {
    ClassIndex lambda(static_cast<std::size_t>(r), 0);
    for (std::size_t b = 0; b + static_cast<std::size_t>(r) <= z.size(); b += static_cast<std::size_t>(r))
        for (int i = r; i >= 1; --i)
            if (z[b + static_cast<std::size_t>(i - 1)] != 0) {
                lambda[static_cast<std::size_t>(i - 1)] += 1;
                break;
            }
    return lambda;
}

/// Dual shape used to group characters: shape of each block read right to left.
inline ClassIndex nrt_dual_shape(std::span<const int> u, int r) {
    std::vector<int> rev(u.begin(), u.end());
    for (std::size_t b = 0; b + static_cast<std::size_t>(r) <= rev.size(); b += static_cast<std::size_t>(r))
        std::reverse(rev.begin() + static_cast<long>(b), rev.begin() + static_cast<long>(b) + r);
    return nrt_shape(rev, r);
}

/// (pi_Z, pi_U, pi_S, pi_V) of a vector over Z_{2^k}.
inline ClassIndex homogeneous_statistic(std::span<const int> z, int k) {
    const int mod = 1 << k, half = 1 << (k - 1);
    ClassIndex pi(4, 0);
    for (int v : z) {
        const int r = ((v % mod) + mod) % mod;
        if (r == 0) pi[0] += 1;
        else if (r % 2 == 1) pi[1] += 1;
        else if (r == half) pi[2] += 1;
        else pi[3] += 1;
    }
    return pi;
}

/// Builds the explicit scheme for a family (|X| <= cap).
inline ExplicitScheme build_scheme(const SchemeFamilyParams& params, std::size_t cap = kDefaultSchemeCap) {
    validate(params);
    auto scheme = std::visit(
        overloaded{
            [&](const family::Lee& p) {
                const int q = p.q;
                auto cls = [q](std::span<const int> z) { return lee_composition(z, q); };
                return ExplicitScheme::translation(GroupSpec::cyclic_power(q, p.n), cls,
                                                   [](const ClassIndex& c) { return detail::weighted_sum(c, 0); }, {}, cap);
            },
            [&](const family::NRT& p) {
                const int r = p.r;
                return ExplicitScheme::translation(
                    GroupSpec::cyclic_power(p.q, p.r * p.n), [r](std::span<const int> z) { return nrt_shape(z, r); },
                    [](const ClassIndex& c) { return detail::weighted_sum(c, 1); },
                    [r](std::span<const int> u) { return nrt_dual_shape(u, r); }, cap);
            },
            [&](const family::SumRank& p) {
                if (!detail::is_prime(p.q)) throw std::invalid_argument("sumrank: explicit construction needs prime q");
                GroupSpec g{"matrix space", {}};
                for (int i = 0; i < p.t(); ++i)
                    g.moduli.insert(g.moduli.end(), static_cast<std::size_t>(p.rows[i] * p.cols[i]), p.q);
                auto cls = [p](std::span<const int> z) {
                    ClassIndex ranks;
                    std::size_t off = 0;
                    for (int i = 0; i < p.t(); ++i) {
                        const std::size_t len = static_cast<std::size_t>(p.rows[i] * p.cols[i]);
                        ranks.push_back(detail::rank_mod_p(std::vector<int>(z.begin() + static_cast<long>(off),
                                                                            z.begin() + static_cast<long>(off + len)),
                                                           p.rows[i], p.cols[i], p.q));
                        off += len;
                    }
                    return ranks;
                };
                return ExplicitScheme::translation(std::move(g), cls, detail::plain_sum, {}, cap);
            },
            [&](const family::Mixed& p) {
                GroupSpec g{"product", {}};
                for (const auto& b : p.blocks) g.moduli.insert(g.moduli.end(), static_cast<std::size_t>(b.length), b.alphabet);
                auto cls = [p](std::span<const int> z) {
                    ClassIndex w;
                    std::size_t off = 0;
                    for (const auto& b : p.blocks) {
                        int cnt = 0;
                        for (int j = 0; j < b.length; ++j) cnt += z[off + static_cast<std::size_t>(j)] != 0;
                        w.push_back(cnt);
                        off += static_cast<std::size_t>(b.length);
                    }
                    return w;
                };
                return ExplicitScheme::translation(std::move(g), cls, detail::plain_sum, {}, cap);
            },
            [&](const family::Homogeneous& p) {
                const int k = p.k;
                return ExplicitScheme::translation(
                    GroupSpec::cyclic_power(1 << k, p.n, "Z_2^k^n"),
                    [k](std::span<const int> z) { return homogeneous_statistic(z, k); },
                    [](const ClassIndex& c) { return static_cast<long>(c[1] + c[3] + 2 * c[2]); }, {}, cap);
            },
            [&](const family::ClarkLiang&) {
                std::array<int, 15> member{};
                for (int x : detail::cyclotomic_coset_15(1)) member[static_cast<std::size_t>(x)] = 1;
                for (int x : detail::cyclotomic_coset_15(7)) member[static_cast<std::size_t>(x)] = 1;
                for (int x : detail::cyclotomic_coset_15(3)) member[static_cast<std::size_t>(x)] = 2;
                for (int x : detail::cyclotomic_coset_15(5)) member[static_cast<std::size_t>(x)] = 3;
                return ExplicitScheme::translation(
                    GroupSpec::cyclic_power(15, 1, "Z_15"),
                    [member](std::span<const int> z) { return ClassIndex{member[static_cast<std::size_t>(z[0])]}; },
                    [](const ClassIndex& c) { return c[0] == 0 ? 0L : c[0] == 1 ? 1L : 2L; }, {}, cap);
            },
            [&](const family::Johnson& p) {
                std::vector<std::vector<int>> words;
                const std::size_t total = static_cast<std::size_t>(std::pow(p.q, p.n));
                const GroupSpec g = GroupSpec::cyclic_power(p.q, p.n);
                for (std::size_t i = 0; i < total; ++i) {
                    auto v = g.decode(i);
                    if (std::count_if(v.begin(), v.end(), [](int a) { return a != 0; }) == p.w) words.push_back(std::move(v));
                }
                const int w = p.w;
                auto rel = [w](std::span<const int> x, std::span<const int> y) {
                    int equal = 0, common = 0;
                    for (std::size_t j = 0; j < x.size(); ++j) {
                        if (x[j] != 0 && y[j] != 0) {
                            ++common;
                            if (x[j] == y[j]) ++equal;
                        }
                    }
                    return ClassIndex{w - equal, w - common};
                };
                return ExplicitScheme::from_relation(std::move(words), rel, ClassIndex{0, 0}, detail::plain_sum, cap);
            },
        },
        params);
    scheme.set_family(params);
    return scheme;
}

/// Outcome of the A1-A3 scan.
struct AxiomReport {
    bool ok = false;
    std::string violated;  // "partition", "A1", "A2", "A3", or empty
    std::size_t witness_x = 0, witness_y = 0;
    std::string message;
    std::size_t class_count = 0;
    std::vector<long> intersection;  // p_{ij}^k at (i * K + j) * K + k when ok

    long p(std::size_t i, std::size_t j, std::size_t k) const { return intersection[(i * class_count + j) * class_count + k]; }
};

/// Checks (A1)-(A3) over every pair, including p_ij^k = p_ji^k.
inline AxiomReport verify_axioms(const ExplicitScheme& scheme) {
    const std::size_t N = scheme.size(), K = scheme.class_count();
    AxiomReport rep;
    rep.class_count = K;
    const auto C = scheme.class_matrix();
    auto fail = [&](std::string axiom, std::size_t x, std::size_t y, std::string msg) {
        rep.ok = false;
        rep.violated = std::move(axiom);
        rep.witness_x = x;
        rep.witness_y = y;
        rep.message = std::move(msg);
        return rep;
    };

    std::vector<std::size_t> population(K, 0);
    for (std::size_t i = 0; i < N * N; ++i) {
        if (C[i] >= K) return fail("partition", i / N, i % N, "pair assigned to an unknown class");
        ++population[C[i]];
    }
    for (std::size_t k = 0; k < K; ++k)
        if (population[k] == 0) return fail("partition", 0, 0, "class " + to_string(scheme.classes()[k]) + " is empty");

    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            const bool diag = C[x * N + y] == 0;
            if (diag != (x == y))
                return fail("A1", x, y, x == y ? "diagonal pair outside R_0" : "off-diagonal pair inside R_0");
        }

    std::vector<long> inverse(K, -1);
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            const std::size_t k = C[x * N + y], kt = C[y * N + x];
            if (inverse[k] < 0) inverse[k] = static_cast<long>(kt);
            else if (inverse[k] != static_cast<long>(kt))
                return fail("A2", x, y, "transpose of class " + to_string(scheme.classes()[k]) + " is not a single class");
        }

    std::vector<long> p(K * K * K, -1);
    std::vector<long> count(K * K);
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            std::fill(count.begin(), count.end(), 0);
            const std::size_t k = C[x * N + y];
            for (std::size_t z = 0; z < N; ++z) ++count[C[x * N + z] * K + C[z * N + y]];
            for (std::size_t ij = 0; ij < K * K; ++ij) {
                long& slot = p[ij * K + k];
                if (slot < 0) slot = count[ij];
                else if (slot != count[ij])
                    return fail("A3", x, y,
                                "p_{" + to_string(scheme.classes()[ij / K]) + "," + to_string(scheme.classes()[ij % K]) + "}^" +
                                    to_string(scheme.classes()[k]) + " is not constant");
            }
        }
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = 0; j < K; ++j)
            for (std::size_t k = 0; k < K; ++k)
                if (p[(i * K + j) * K + k] != p[(j * K + i) * K + k])
                    return fail("A3", 0, 0, "p_ij^k != p_ji^k for i=" + to_string(scheme.classes()[i]) + ", j=" +
                                                to_string(scheme.classes()[j]));
    rep.ok = true;
    rep.intersection = std::move(p);
    return rep;
}

/// Codewords (as element indices) with covering radius e.
struct Code {
    std::vector<std::size_t> codewords;
    long radius = 0;
};

inline Code make_code(const ExplicitScheme& scheme, const std::vector<std::vector<int>>& words, long radius) {
    Code c{{}, radius};
    for (const auto& w : words) {
        auto idx = scheme.find(w);
        if (!idx) throw std::invalid_argument("make_code: codeword " + to_string(w) + " is not an element of X");
        c.codewords.push_back(*idx);
    }
    return c;
}

struct PerfectCodeReport {
    bool perfect = false;
    std::optional<std::size_t> witness;
    std::string reason;  // "uncovered", "doubly covered", "duplicate codeword", "empty code"
    std::size_t ball_size = 0;
};

/// True iff the radius-e balls around the codewords partition X.
inline PerfectCodeReport is_perfect_code(const ExplicitScheme& scheme, const Code& code) {
    PerfectCodeReport rep;
    if (code.codewords.empty()) {
        rep.reason = "empty code";
        return rep;
    }
    const std::size_t N = scheme.size();
    std::vector<int> hits(N, 0);
    std::vector<bool> is_word(N, false);
    for (std::size_t c : code.codewords) {
        if (c >= N) throw std::out_of_range("is_perfect_code: codeword outside X");
        if (is_word[c]) {
            rep.reason = "duplicate codeword";
            rep.witness = c;
            return rep;
        }
        is_word[c] = true;
    }
    for (std::size_t c : code.codewords) {
        std::size_t ball = 0;
        for (std::size_t y = 0; y < N; ++y)
            if (scheme.distance(y, c) <= code.radius) {
                ++hits[y];
                ++ball;
            }
        rep.ball_size = std::max(rep.ball_size, ball);
    }
    for (std::size_t y = 0; y < N; ++y) {
        if (hits[y] == 0) {
            rep.reason = "uncovered";
            rep.witness = y;
            return rep;
        }
        if (hits[y] > 1) {
            rep.reason = "doubly covered";
            rep.witness = y;
            return rep;
        }
    }
    rep.perfect = true;
    return rep;
}

/// Pi(e) = number of classes with d(i) <= e.
inline BigInt dispersion_from_scheme(const ExplicitScheme& scheme, long e) {
    BigInt n = 0;
    for (long d : scheme.distances()) n += d <= e ? 1 : 0;
    return n;
}

/// Character-oracle eigen table of a translation scheme, classes ordered as in the scheme.
inline EigenTable scheme_eigen_table(const ExplicitScheme& scheme) {
    if (!scheme.is_translation())
        throw std::logic_error("scheme_eigen_table: eigenvalues are only available for translation schemes");
    EigenTable t = translation_scheme_eigenvalues(*scheme.group(), scheme.element_classifier(), scheme.character_classifier());
    if (t.classes != scheme.classes()) throw std::logic_error("scheme_eigen_table: class order mismatch");
    return t;
}

/// max |(D_k chi)(x) - P_k(chi) chi(x)| over classes, characters and elements.
inline double max_adjacency_eigen_deviation(const ExplicitScheme& scheme, const EigenTable& table) {
    if (!scheme.is_translation()) throw std::logic_error("max_adjacency_eigen_deviation: needs a translation scheme");
    const GroupSpec& g = *scheme.group();
    const std::size_t N = scheme.size(), K = scheme.class_count();
    const auto C = scheme.class_matrix();
    const long L = g.exponent();
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(L));
    for (long k = 0; k < L; ++k)
        roots[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(L));

    double worst = 0.0;
    std::vector<std::complex<double>> chi(N), acc(K);
    for (std::size_t u = 0; u < N; ++u) {
        for (std::size_t y = 0; y < N; ++y) chi[y] = roots[static_cast<std::size_t>(g.phase(scheme.label(u), scheme.label(y)))];
        const std::size_t j = table.index_position(scheme.character_classifier()(scheme.label(u)));
        for (std::size_t x = 0; x < N; ++x) {
            std::fill(acc.begin(), acc.end(), std::complex<double>{});
            for (std::size_t y = 0; y < N; ++y) acc[C[x * N + y]] += chi[y];
            for (std::size_t k = 0; k < K; ++k) worst = std::max(worst, std::abs(acc[k] - table.P[k][j] * chi[x]));
        }
    }
    return worst;
}

struct LloydReport {
    BigInt dispersion;  // Pi(e)
    BigInt required;    // Pi(e) - 1
    std::size_t zero_count = 0;
    std::vector<double> psi;
    std::vector<ClassIndex> eigen_indices;
    bool pass = false;
};

inline constexpr double kLloydTolerance = 1e-6;

/// Lloyd's condition for a perfect code: Psi_e vanishes at >= Pi(e) - 1 eigen indices.
inline LloydReport lloyd_theorem_check(const ExplicitScheme& scheme, const Code& code) {
    if (!is_perfect_code(scheme, code).perfect) throw std::invalid_argument("lloyd_theorem_check: code is not perfect");
    const EigenTable t = scheme_eigen_table(scheme);
    LloydReport rep;
    rep.dispersion = dispersion_from_scheme(scheme, code.radius);
    rep.required = rep.dispersion - 1;
    rep.psi = lloyd_values(t, scheme.distances(), code.radius);
    rep.zero_count = lloyd_zero_count(t, scheme.distances(), code.radius, t.exact ? 0.0 : kLloydTolerance);
    rep.eigen_indices = t.eigen_indices;
    rep.pass = BigInt(rep.zero_count) >= rep.required;
    return rep;
}

/// Diagonal Lee code {(i, 2i mod 5)} in Z_5^2.
inline std::vector<std::vector<int>> lee_diagonal_code_words() {
    std::vector<std::vector<int>> words;
    for (int i = 0; i < 5; ++i) words.push_back({i, (2 * i) % 5});
    return words;
}

/// Binary length-7 1-perfect code: kernel of the parity-check matrix whose columns are 1..7 in binary.
inline std::vector<std::vector<int>> hamming7_code_words() {
    std::vector<std::vector<int>> words;
    for (int m = 0; m < 128; ++m) {
        int syndrome = 0;
        std::vector<int> w(7);
        for (int j = 0; j < 7; ++j) {
            w[static_cast<std::size_t>(j)] = (m >> (6 - j)) & 1;
            if (w[static_cast<std::size_t>(j)]) syndrome ^= j + 1;
        }
        if (syndrome == 0) words.push_back(std::move(w));
    }
    return words;
}

/// The relation x ~ y iff d_L(x, y) = k on Z_q^n (not a scheme in general).
inline ExplicitScheme lee_distance_relation(int q, int n) {
    const GroupSpec g = GroupSpec::cyclic_power(q, n);
    std::vector<std::vector<int>> labels;
    for (std::size_t x = 0; x < g.order(); ++x) labels.push_back(g.decode(x));
    auto rel = [q, g](std::span<const int> x, std::span<const int> y) {
        return ClassIndex{static_cast<int>(detail::weighted_sum(lee_composition(g.subtract(x, y), q), 0))};
    };
    return ExplicitScheme::from_relation(std::move(labels), rel, ClassIndex{0},
                                         [](const ClassIndex& c) { return static_cast<long>(c[0]); });
}

/// Detailed algebra of CL(15, 2).
struct ClarkLiangReport {
    std::array<long, 4> valencies{};
    std::array<long, 4> a1_squared{};  // A_1^2 = sum_i c_i A_i
    bool printed_identity = false;     // 4 A_3 = A_1^2 - 3 A_1 - 6 A_2
    long residual_diagonal = 0;        // (A_1^2 - 3A_1 - 6A_2 - 4A_3) on the diagonal
    bool residual_is_scalar = false;   // residual = residual_diagonal * I
    bool corrected_identity = false;   // 4 A_3 = A_1^2 - 3 A_1 - 6 A_2 - 8 A_0
    bool printed_eigen_relation = false;
    bool corrected_eigen_relation = false;
    std::size_t algebra_dimension_from_a1 = 0;
    long cayley_diameter = 0;  // Cayley graph on Z_15 generated by X_1
};

namespace detail {

using IntMatrix = std::vector<std::vector<long>>;

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    IntMatrix c(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

/// Exact rank over Q by fraction-free elimination.
inline std::size_t exact_rank(std::vector<std::vector<BigInt>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const BigInt a = rows[rank][c], b = rows[r][c];
            for (std::size_t j = 0; j < cols; ++j) rows[r][j] = rows[r][j] * a - rows[rank][j] * b;
            BigInt g = 0;
            for (const auto& v : rows[r]) g = gcd(g, abs(v));
            if (g > 1)
                for (auto& v : rows[r]) v /= g;
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

inline ClarkLiangReport clark_liang_analysis() {
    const ExplicitScheme s = build_scheme(family::ClarkLiang{});
    const std::size_t N = s.size();
    std::array<detail::IntMatrix, 4> A;
    for (auto& m : A) m.assign(N, std::vector<long>(N, 0));
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) A[s.class_of(x, y)][x][y] = 1;

    ClarkLiangReport rep;
    for (std::size_t i = 0; i < 4; ++i)
        for (long v : A[i][0]) rep.valencies[i] += v;

    const auto sq = detail::matmul(A[1], A[1]);
    // A_1^2 lies in the Bose-Mesner algebra: read its coefficient on each class from row 0
    for (std::size_t y = 0; y < N; ++y) rep.a1_squared[s.class_of(0, y)] = sq[0][y];

    bool printed = true, corrected = true, scalar = true;
    rep.residual_diagonal = sq[0][0] - 3 * A[1][0][0] - 6 * A[2][0][0] - 4 * A[3][0][0];
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            const long rhs = sq[x][y] - 3 * A[1][x][y] - 6 * A[2][x][y];
            const long lhs = 4 * A[3][x][y];
            if (lhs != rhs) printed = false;
            if (lhs != rhs - 8 * A[0][x][y]) corrected = false;
            if (rhs - lhs != (x == y ? rep.residual_diagonal : 0)) scalar = false;
        }
    rep.printed_identity = printed;
    rep.corrected_identity = corrected;
    rep.residual_is_scalar = scalar;

    const EigenTable t = scheme_eigen_table(s);
    bool pe = true, ce = true;
    for (std::size_t j = 0; j < t.index_count(); ++j) {
        const double p1 = t.P[1][j], p2 = t.P[2][j], p3 = t.P[3][j];
        const double rhs = p1 * p1 - 3 * p1 - 6 * p2;
        if (std::abs(4 * p3 - rhs) > 1e-9) pe = false;
        if (std::abs(4 * p3 - (rhs - 8)) > 1e-9) ce = false;
    }
    rep.printed_eigen_relation = pe;
    rep.corrected_eigen_relation = ce;

    std::vector<std::vector<BigInt>> powers;
    detail::IntMatrix pw(N, std::vector<long>(N, 0));
    for (std::size_t i = 0; i < N; ++i) pw[i][i] = 1;
    for (std::size_t e = 0; e <= N; ++e) {
        std::vector<BigInt> flat;
        for (const auto& row : pw)
            for (long v : row) flat.emplace_back(v);
        powers.push_back(std::move(flat));
        pw = detail::matmul(pw, A[1]);
    }
    rep.algebra_dimension_from_a1 = detail::exact_rank(std::move(powers));

    std::vector<long> dist(N, -1);
    std::queue<std::size_t> bfs;
    dist[0] = 0;
    bfs.push(0);
    while (!bfs.empty()) {
        const std::size_t x = bfs.front();
        bfs.pop();
        for (std::size_t y = 0; y < N; ++y)
            if (A[1][x][y] && dist[y] < 0) {
                dist[y] = dist[x] + 1;
                bfs.push(y);
            }
    }
    rep.cayley_diameter = *std::max_element(dist.begin(), dist.end());
    return rep;
}

/**
 * Checks lhs_coefficient * A_3 = A_1^2 - 3 A_1 - 6 A_2 entrywise over Z_15 together
 * with the induced eigenvalue relation at every character.
 */
inline bool clark_liang_identity_check(long lhs_coefficient = 4) {
    const ExplicitScheme s = build_scheme(family::ClarkLiang{});
    const std::size_t N = s.size();
    auto adj = [&](std::size_t k, std::size_t x, std::size_t y) { return s.class_of(x, y) == k ? 1L : 0L; };
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            long sq = 0;
            for (std::size_t z = 0; z < N; ++z) sq += adj(1, x, z) * adj(1, z, y);
            if (lhs_coefficient * adj(3, x, y) != sq - 3 * adj(1, x, y) - 6 * adj(2, x, y)) return false;
        }
    const EigenTable t = scheme_eigen_table(s);
    for (std::size_t j = 0; j < t.index_count(); ++j) {
        const double p1 = t.P[1][j];
        if (std::abs(static_cast<double>(lhs_coefficient) * t.P[3][j] - (p1 * p1 - 3 * p1 - 6 * t.P[2][j])) > 1e-9) return false;
    }
    return true;
}

}  // namespace wmas
