#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scheme.hpp"

namespace wmas {

using MLength = std::vector<int>;

inline long l1_norm(std::span<const int> v) {
    long s = 0;
    for (int x : v) s += x;
    return s;
}

inline MLength add(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: mismatched lengths");
    MLength r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline MLength unit_vector(std::size_t m, std::size_t i) {
    MLength e(m, 0);
    e.at(i) = 1;
    return e;
}

/**
 * Monomial order on N^m.
 *
 * Deglex and lex read coordinates in `priority` order (priority[0] most
 * significant). A custom order is a validated comparison table on a finite
 * domain; comparing vectors outside that domain throws.
 */
class MonomialOrder {
public:
    enum class Kind { Deglex, Lex, Custom };

    static MonomialOrder deglex(std::size_t m, std::vector<std::size_t> priority = {}) {
        return MonomialOrder(Kind::Deglex, m, std::move(priority));
    }
    static MonomialOrder lex(std::size_t m, std::vector<std::size_t> priority = {}) {
        return MonomialOrder(Kind::Lex, m, std::move(priority));
    }

    /// table[i][j] in {-1, 0, 1} compares domain[i] with domain[j].
    static MonomialOrder custom(std::vector<MLength> domain, const std::vector<std::vector<int>>& table) {
        if (domain.empty()) throw std::invalid_argument("custom order: empty domain");
        const std::size_t m = domain[0].size(), N = domain.size();
        if (table.size() != N) throw std::invalid_argument("custom order: table size mismatch");
        for (const auto& row : table)
            if (row.size() != N) throw std::invalid_argument("custom order: table size mismatch");
        for (const auto& v : domain)
            if (v.size() != m) throw std::invalid_argument("custom order: mixed vector lengths");
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                const int c = table[i][j];
                if (c < -1 || c > 1) throw std::invalid_argument("custom order: entries must be -1, 0, 1");
                if (c != -table[j][i]) throw std::invalid_argument("custom order: table not antisymmetric");
                if ((i == j) != (c == 0)) throw std::invalid_argument("custom order: not total on distinct elements");
            }
        std::vector<std::size_t> wins(N, 0);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) wins[i] += table[i][j] > 0;
        // A total transitive order has win counts 0..N-1, each exactly once.
        std::vector<std::size_t> sorted = wins;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < N; ++i)
            if (sorted[i] != i) throw std::invalid_argument("custom order: table is not transitive");
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                if ((table[i][j] > 0) != (wins[i] > wins[j])) throw std::invalid_argument("custom order: table is not transitive");

        MonomialOrder o(Kind::Custom, m, {});
        for (std::size_t i = 0; i < N; ++i) o.rank_[domain[i]] = wins[i];
        // multiplicative on the domain: u < v implies u + w < v + w whenever both sums stay inside
        for (const auto& [u, ru] : o.rank_)
            for (const auto& [v, rv] : o.rank_) {
                if (ru >= rv) continue;
                for (const auto& [w, rw] : o.rank_) {
                    (void)rw;
                    auto a = o.rank_.find(add(u, w)), b = o.rank_.find(add(v, w));
                    if (a != o.rank_.end() && b != o.rank_.end() && a->second >= b->second)
                        throw std::invalid_argument("custom order: not multiplicative on the domain");
                }
            }
        return o;
    }

    Kind kind() const { return kind_; }
    std::size_t arity() const { return m_; }
    const std::vector<std::size_t>& priority() const { return priority_; }

    std::string name() const {
        switch (kind_) {
            case Kind::Deglex: return "deglex";
            case Kind::Lex: return "lex";
            default: return "custom";
        }
    }

    std::strong_ordering compare(std::span<const int> a, std::span<const int> b) const {
        if (a.size() != m_ || b.size() != m_) throw std::invalid_argument("compare: vectors must have length m");
        if (kind_ == Kind::Custom) {
            auto ia = rank_.find(MLength(a.begin(), a.end())), ib = rank_.find(MLength(b.begin(), b.end()));
            if (ia == rank_.end() || ib == rank_.end()) throw std::out_of_range("compare: vector outside custom order domain");
            return ia->second <=> ib->second;
        }
        if (kind_ == Kind::Deglex) {
            const long da = l1_norm(a), db = l1_norm(b);
            if (da != db) return da <=> db;
        }
        for (std::size_t i : priority_)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }

    bool less(std::span<const int> a, std::span<const int> b) const { return compare(a, b) < 0; }

private:
    MonomialOrder(Kind k, std::size_t m, std::vector<std::size_t> priority) : kind_(k), m_(m), priority_(std::move(priority)) {
        if (m_ < 1) throw std::invalid_argument("monomial order: m must be >= 1");
        if (priority_.empty()) {
            priority_.resize(m_);
            std::iota(priority_.begin(), priority_.end(), 0);
        }
        std::vector<std::size_t> check = priority_;
        std::sort(check.begin(), check.end());
        for (std::size_t i = 0; i < check.size(); ++i)
            if (check.size() != m_ || check[i] != i) throw std::invalid_argument("monomial order: priority must permute 0..m-1");
    }

    Kind kind_;
    std::size_t m_;
    std::vector<std::size_t> priority_;
    std::map<MLength, std::size_t> rank_;
};

inline std::strong_ordering compare(const MonomialOrder& o, std::span<const int> a, std::span<const int> b) {
    return o.compare(a, b);
}

/// [[N]]^m = {0..N}^m.
inline std::vector<MLength> box_domain(int N, std::size_t m) {
    std::vector<MLength> out;
    MLength cur(m, 0);
    while (true) {
        out.push_back(cur);
        std::size_t j = 0;
        while (j < m && ++cur[j] > N) cur[j++] = 0;
        if (j == m) break;
    }
    return out;
}

struct CompatibilityReport {
    bool compatible = true;
    std::optional<std::pair<MLength, MLength>> witness;  // a <= b but |a|_1 > |b|_1
};

/// a <= b  =>  |a|_1 <= |b|_1 over every pair of the domain.
inline CompatibilityReport is_l1_compatible(const MonomialOrder& order, const std::vector<MLength>& domain) {
    CompatibilityReport r;
    for (const auto& a : domain)
        for (const auto& b : domain)
            if (order.compare(a, b) <= 0 && l1_norm(a) > l1_norm(b)) {
                r.compatible = false;
                r.witness = {a, b};
                return r;
            }
    return r;
}

/// u <= v  =>  u + w <= v + w on the domain (sums outside the domain are skipped for custom orders).
inline bool is_multiplicative_on(const MonomialOrder& order, const std::vector<MLength>& domain) {
    for (const auto& u : domain)
        for (const auto& v : domain) {
            if (order.compare(u, v) > 0) continue;
            for (const auto& w : domain) try {
                    if (order.compare(add(u, w), add(v, w)) > 0) return false;
                } catch (const std::out_of_range&) {
                }
        }
    return true;
}

struct ColoredEdge {
    std::size_t u = 0, v = 0;
    int color = 1;  // 1..m
};

/// Connected edge-colored graph with every color class non-empty.
class ColoredGraph {
public:
    ColoredGraph(std::size_t vertices, std::vector<ColoredEdge> edges, int colors = 0) : n_(vertices), edges_(std::move(edges)) {
        if (n_ == 0) throw std::invalid_argument("graph: need at least one vertex");
        int maxc = 0;
        for (const auto& e : edges_) maxc = std::max(maxc, e.color);
        m_ = colors > 0 ? colors : std::max(maxc, 1);
        std::vector<bool> used(static_cast<std::size_t>(m_) + 1, false);
        adj_.resize(n_);
        for (const auto& e : edges_) {
            if (e.u >= n_ || e.v >= n_) throw std::invalid_argument("graph: edge endpoint out of range");
            if (e.u == e.v) throw std::invalid_argument("graph: loops are not allowed");
            if (e.color < 1 || e.color > m_) throw std::invalid_argument("graph: color outside 1..m");
            used[static_cast<std::size_t>(e.color)] = true;
            adj_[e.u].push_back({e.v, e.color});
            adj_[e.v].push_back({e.u, e.color});
        }
        if (n_ > 1)
            for (int c = 1; c <= m_; ++c)
                if (!used[static_cast<std::size_t>(c)]) throw std::invalid_argument("graph: color class " + std::to_string(c) + " is empty");
        std::vector<bool> seen(n_, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (const auto& [y, c] : adj_[x])
                if (!seen[y]) {
                    seen[y] = true;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != n_) throw std::invalid_argument("graph: not connected");
    }

    std::size_t size() const { return n_; }
    int colors() const { return m_; }
    const std::vector<ColoredEdge>& edges() const { return edges_; }
    const std::vector<std::pair<std::size_t, int>>& neighbours(std::size_t x) const { return adj_[x]; }

private:
    std::size_t n_;
    int m_ = 1;
    std::vector<ColoredEdge> edges_;
    std::vector<std::vector<std::pair<std::size_t, int>>> adj_;
};

/// Order-minimal m-lengths from `source` to every vertex.
inline std::vector<MLength> m_distances_from(const ColoredGraph& g, std::size_t source, const MonomialOrder& order) {
    const std::size_t m = static_cast<std::size_t>(g.colors());
    if (order.arity() != m) throw std::invalid_argument("m_distance: order arity differs from color count");
    if (source >= g.size()) throw std::out_of_range("m_distance: vertex out of range");
    std::vector<std::optional<MLength>> best(g.size());
    std::vector<bool> settled(g.size(), false);
    auto worse = [&](const std::pair<MLength, std::size_t>& a, const std::pair<MLength, std::size_t>& b) {
        const auto c = order.compare(a.first, b.first);
        return c != 0 ? c > 0 : a.second > b.second;
    };
    std::priority_queue<std::pair<MLength, std::size_t>, std::vector<std::pair<MLength, std::size_t>>, decltype(worse)> pq(worse);
    best[source] = MLength(m, 0);
    pq.push({*best[source], source});
    while (!pq.empty()) {
        auto [len, x] = pq.top();
        pq.pop();
        if (settled[x]) continue;
        settled[x] = true;
        for (const auto& [y, c] : g.neighbours(x)) {
            if (settled[y]) continue;
            MLength cand = len;
            cand[static_cast<std::size_t>(c - 1)] += 1;
            if (!best[y] || order.less(cand, *best[y])) {
                best[y] = cand;
                pq.push({std::move(cand), y});
            }
        }
    }
    std::vector<MLength> out;
    for (auto& b : best) out.push_back(*b);
    return out;
}

inline MLength m_distance(const ColoredGraph& g, std::size_t x, std::size_t y, const MonomialOrder& order) {
    if (y >= g.size()) throw std::out_of_range("m_distance: vertex out of range");
    return m_distances_from(g, x, order)[y];
}

/// All-pairs m-distances plus annotations.
struct MDistanceTable {
    std::vector<std::vector<MLength>> d;
    bool l1_compatible = true;
    std::vector<std::string> notes;
};

namespace detail {

inline CompatibilityReport order_check_for(const ColoredGraph& g, const MonomialOrder& order) {
    const int N = static_cast<int>(std::min<std::size_t>(g.size(), 6));
    return is_l1_compatible(order, box_domain(std::max(N, 1), static_cast<std::size_t>(g.colors())));
}

}  // namespace detail

inline MDistanceTable all_pairs_m_distance(const ColoredGraph& g, const MonomialOrder& order) {
    MDistanceTable t;
    for (std::size_t x = 0; x < g.size(); ++x) t.d.push_back(m_distances_from(g, x, order));
    if (order.kind() != MonomialOrder::Kind::Custom) {
        t.l1_compatible = detail::order_check_for(g, order).compatible;
        if (!t.l1_compatible) t.notes.push_back("order " + order.name() + " is not L1-compatible; distances computed but unsuitable for the regularity pipeline");
    }
    return t;
}

/// D and the 0/1 matrices A_l, listed in increasing order.
struct DistanceMatrices {
    std::vector<MLength> D;
    std::vector<std::vector<std::uint8_t>> A;  // A[k][x * N + y]
    std::vector<std::size_t> position;         // position[x * N + y] = k
    std::size_t n = 0;
};

inline DistanceMatrices m_distance_matrices(const ColoredGraph& g, const MonomialOrder& order) {
    const auto t = all_pairs_m_distance(g, order);
    const std::size_t N = g.size();
    DistanceMatrices r;
    r.n = N;
    for (const auto& row : t.d)
        for (const auto& l : row) r.D.push_back(l);
    std::sort(r.D.begin(), r.D.end(), [&](const MLength& a, const MLength& b) { return order.less(a, b); });
    r.D.erase(std::unique(r.D.begin(), r.D.end()), r.D.end());
    std::map<MLength, std::size_t> pos;
    for (std::size_t k = 0; k < r.D.size(); ++k) pos[r.D[k]] = k;
    r.A.assign(r.D.size(), std::vector<std::uint8_t>(N * N, 0));
    r.position.resize(N * N);
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            const std::size_t k = pos.at(t.d[x][y]);
            r.A[k][x * N + y] = 1;
            r.position[x * N + y] = k;
        }
    return r;
}

struct RegularityReport {
    enum class Status { Regular, NotRegular, NotApplicable };
    Status status = Status::NotApplicable;
    std::vector<MLength> D;
    std::vector<long> p;  // p^c_{ab} at (a * K + b) * K + c
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    std::string message;

    bool regular() const { return status == Status::Regular; }
    long at(std::size_t a, std::size_t b, std::size_t c) const {
        const std::size_t K = D.size();
        return p[(a * K + b) * K + c];
    }
};

inline std::string to_string(RegularityReport::Status s) {
    switch (s) {
        case RegularityReport::Status::Regular: return "regular";
        case RegularityReport::Status::NotRegular: return "not regular";
        default: return "not applicable";
    }
}

/// p^c_{ab} constant over all pairs at m-distance c.
inline RegularityReport is_m_distance_regular(const ColoredGraph& g, const MonomialOrder& order) {
    if (order.kind() != MonomialOrder::Kind::Custom) {
        const auto chk = detail::order_check_for(g, order);
        if (!chk.compatible)
            throw std::invalid_argument("is_m_distance_regular: order " + order.name() + " is not L1-compatible");
    }
    const auto M = m_distance_matrices(g, order);
    RegularityReport r;
    r.D = M.D;
    const std::size_t m = static_cast<std::size_t>(g.colors()), K = M.D.size(), N = M.n;
    for (std::size_t i = 0; i < m; ++i)
        if (std::find(M.D.begin(), M.D.end(), unit_vector(m, i)) == M.D.end()) {
            r.status = RegularityReport::Status::NotApplicable;
            r.message = "unit distance e_" + std::to_string(i + 1) + " does not occur";
            return r;
        }
    std::vector<long> p(K * K * K, -1), count(K * K);
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            std::fill(count.begin(), count.end(), 0);
            const std::size_t c = M.position[x * N + y];
            for (std::size_t z = 0; z < N; ++z) ++count[M.position[x * N + z] * K + M.position[z * N + y]];
            for (std::size_t ab = 0; ab < K * K; ++ab) {
                long& slot = p[ab * K + c];
                if (slot < 0) slot = count[ab];
                else if (slot != count[ab]) {
                    r.status = RegularityReport::Status::NotRegular;
                    r.witness = {x, y};
                    r.message = "p^c_ab varies for c = " + to_string(M.D[c]) + ", a = " + to_string(M.D[ab / K]) +
                                ", b = " + to_string(M.D[ab % K]);
                    return r;
                }
            }
        }
    r.status = RegularityReport::Status::Regular;
    r.p = std::move(p);
    return r;
}

struct TriangleReport {
    bool l1_compatible = true;
    bool vector_ok = true;
    bool scalar_ok = true;
    bool scalar_asserted = true;  // false when the order gives no guarantee
    std::optional<std::array<std::size_t, 3>> witness;
    std::vector<std::string> notes;
    bool ok() const { return vector_ok && (!scalar_asserted || scalar_ok); }
};

/// d(x,y) <= d(x,z) + d(z,y) under the order, and the same for |d|_1.
inline TriangleReport triangle_inequality_check(const ColoredGraph& g, const MonomialOrder& order) {
    const auto t = all_pairs_m_distance(g, order);
    TriangleReport r;
    r.l1_compatible = t.l1_compatible;
    if (!r.l1_compatible) {
        r.scalar_asserted = false;
        r.notes.push_back("order not L1-compatible; scalar claim unproven");
    }
    const std::size_t N = g.size();
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y)
            for (std::size_t z = 0; z < N; ++z) {
                const MLength via = add(t.d[x][z], t.d[z][y]);
                if (r.vector_ok && order.compare(t.d[x][y], via) > 0) {
                    r.vector_ok = false;
                    r.witness = std::array<std::size_t, 3>{x, y, z};
                }
                if (r.scalar_ok && l1_norm(t.d[x][y]) > l1_norm(t.d[x][z]) + l1_norm(t.d[z][y])) {
                    r.scalar_ok = false;
                    if (!r.witness) r.witness = std::array<std::size_t, 3>{x, y, z};
                }
            }
    return r;
}

/// The m-distance relations as an ExplicitScheme (d = |l|_1), for axiom checks.
inline ExplicitScheme to_explicit_scheme(const ColoredGraph& g, const MonomialOrder& order) {
    const auto M = m_distance_matrices(g, order);
    std::vector<std::vector<int>> labels;
    for (std::size_t x = 0; x < g.size(); ++x) labels.push_back({static_cast<int>(x)});
    std::vector<long> d;
    for (const auto& l : M.D) d.push_back(l1_norm(l));
    std::vector<std::uint16_t> mat(M.position.begin(), M.position.end());
    return ExplicitScheme::from_matrix(std::move(labels), M.D, std::move(d), std::move(mat));
}

inline ColoredGraph cycle_graph(std::size_t n) {
    std::vector<ColoredEdge> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1});
    return ColoredGraph(n, std::move(e), 1);
}

inline ColoredGraph path_graph(std::size_t n) {
    std::vector<ColoredEdge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
    return ColoredGraph(n, std::move(e), 1);
}

inline ColoredGraph complete_graph(std::size_t n) {
    std::vector<ColoredEdge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j, 1});
    return ColoredGraph(n, std::move(e), 1);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline ColoredGraph petersen_graph() {
    std::vector<ColoredEdge> e;
    for (std::size_t i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5, 1});
        e.push_back({5 + i, 5 + (i + 2) % 5, 1});
        e.push_back({i, i + 5, 1});
    }
    return ColoredGraph(10, std::move(e), 1);
}

}  // namespace wmas
