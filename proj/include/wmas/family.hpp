#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wmas {

/// Label of a scheme class: Lee composition, NRT shape, rank tuple, distance tuple, ...
using ClassIndex = std::vector<int>;

inline std::string to_string(const ClassIndex& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

namespace family {

/// Lee scheme L(n, q) on Z_q^n.
struct Lee {
    int q = 0;
    int n = 0;
    int s() const { return q / 2; }
};

/// Sum-rank scheme on F_q^{n_1 x m_1} x ... x F_q^{n_t x m_t}.
struct SumRank {
    int q = 2;
    std::vector<int> rows;  // n_i
    std::vector<int> cols;  // m_i
    int t() const { return static_cast<int>(rows.size()); }
};

/// Direct product of Hamming schemes H(n_j, p_j).
struct Mixed {
    struct Block {
        int length = 0;    // n_j
        int alphabet = 0;  // p_j
    };
    std::vector<Block> blocks;
};

/// Ordered Hamming (NRT) scheme on (Z_q^r)^n.
struct NRT {
    int q = 0;
    int n = 0;
    int r = 0;
};

/// q-ary Johnson scheme J_q(w, n).
struct Johnson {
    int q = 0;
    int w = 0;
    int n = 0;
};

/// Homogeneous-weight scheme on Z_{2^k}^n.
struct Homogeneous {
    int k = 0;
    int n = 0;
};

/// CL(15, 2) on Z_15.
struct ClarkLiang {};

}  // namespace family

using SchemeFamilyParams = std::variant<family::Lee, family::SumRank, family::Mixed, family::NRT,
                                        family::Johnson, family::Homogeneous, family::ClarkLiang>;

inline std::string family_name(const SchemeFamilyParams& p) {
    static constexpr const char* names[] = {"lee",     "sumrank",     "mixed",     "nrt",
                                            "johnson", "homogeneous", "clarkliang"};
    return names[p.index()];
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

/// Throws std::invalid_argument when the parameters violate the family's structural constraints.
inline void validate(const SchemeFamilyParams& params) {
    auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
    std::visit(overloaded{
                   [&](const family::Lee& p) {
                       if (p.q < 2) fail("lee: q must be >= 2");
                       if (p.n < 1) fail("lee: n must be >= 1");
                   },
                   [&](const family::SumRank& p) {
                       if (p.q < 2) fail("sumrank: q must be >= 2");
                       if (p.rows.empty() || p.rows.size() != p.cols.size())
                           fail("sumrank: rows and cols must be non-empty and of equal length");
                       for (std::size_t i = 0; i < p.rows.size(); ++i) {
                           if (p.rows[i] < 1) fail("sumrank: n_i must be >= 1");
                           if (p.cols[i] < p.rows[i]) fail("sumrank: m_i must be >= n_i");
                           if (i > 0 && (p.rows[i] > p.rows[i - 1] || p.cols[i] > p.cols[i - 1]))
                               fail("sumrank: n_i and m_i must be non-increasing");
                       }
                   },
                   [&](const family::Mixed& p) {
                       if (p.blocks.empty()) fail("mixed: at least one block required");
                       for (const auto& b : p.blocks)
                           if (b.length < 1 || b.alphabet < 2) fail("mixed: blocks need n_j >= 1, p_j >= 2");
                   },
                   [&](const family::NRT& p) {
                       if (p.q < 2 || p.n < 1 || p.r < 1) fail("nrt: need q >= 2, n >= 1, r >= 1");
                   },
                   [&](const family::Johnson& p) {
                       if (p.q < 2) fail("johnson: q must be >= 2");
                       if (!(0 < p.w && 2 * p.w <= p.n)) fail("johnson: need 0 < w <= n/2");
                   },
                   [&](const family::Homogeneous& p) {
                       if (p.k < 2) fail("homogeneous: k must be >= 2");
                       if (p.n < 1) fail("homogeneous: n must be >= 1");
                   },
                   [](const family::ClarkLiang&) {},
               },
               params);
}

}  // namespace wmas
