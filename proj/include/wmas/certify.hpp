#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "combinat.hpp"
#include "dispersion.hpp"
#include "family.hpp"

namespace wmas {

enum class Verdict { Nonexistent, Inconclusive };

inline std::string to_string(Verdict v) { return v == Verdict::Nonexistent ? "NONEXISTENT" : "INCONCLUSIVE"; }

/// Which (r, |S|) convention feeds the bound.
enum class Regime { Tables, Corollary1 };

inline std::string to_string(Regime r) { return r == Regime::Tables ? "tables" : "corollary1"; }

inline Regime parse_regime(const std::string& s) {
    if (s == "tables") return Regime::Tables;
    if (s == "corollary1") return Regime::Corollary1;
    throw std::invalid_argument("unknown regime '" + s + "' (expected tables or corollary1)");
}

struct Certificate {
    SchemeFamilyParams family;
    long e = 0;
    BigInt Pi;
    long r = 0;
    BigInt S_size;
    BigInt bound;
    Verdict verdict = Verdict::Inconclusive;
    std::string regime;
    std::vector<std::string> notes;
};

/// e * |S|^(r-1), exactly.
inline BigInt sz_bound(const BigInt& e, const BigInt& S_size, long r) {
    if (r < 1) throw std::invalid_argument("sz_bound: r must be >= 1");
    if (S_size < 1) throw std::invalid_argument("sz_bound: |S| must be >= 1");
    if (e < 0) throw std::invalid_argument("sz_bound: e must be >= 0");
    return e * ipow(S_size, static_cast<unsigned>(r - 1));
}

inline Verdict verdict_for(const BigInt& Pi, const BigInt& bound) {
    return Pi - 1 > bound ? Verdict::Nonexistent : Verdict::Inconclusive;
}

/// Nonexistence test: no e-perfect code if Pi(e) - 1 > e |S|^(r-1).
inline Certificate master_test(const SchemeFamilyParams& params, long e, Regime regime = Regime::Tables) {
    validate(params);
    if (e < 0) throw std::invalid_argument("master_test: e must be >= 0");
    const auto E = static_cast<std::size_t>(e);
    Certificate c{params, e, 0, 0, 0, 0, Verdict::Inconclusive, to_string(regime), {}};
    auto unsupported = [&](const std::string& fam) {
        throw std::invalid_argument("master_test: regime '" + to_string(regime) + "' is not defined for family " + fam);
    };
    std::visit(overloaded{
                   [&](const family::Lee& p) {
                       const long s = p.s();
                       if (s < 1) throw std::invalid_argument("master_test: lee needs q >= 2");
                       c.Pi = lee_dispersion(p.q, static_cast<std::size_t>(p.n), E);
                       if (regime == Regime::Tables) {
                           c.r = s;
                           c.S_size = s + 1;
                       } else {
                           c.r = s + 1;
                           c.S_size = p.n + 1;
                       }
                       if (p.n < e) c.notes.push_back("length n < e: the length constraint on Pi is active");
                   },
                   [&](const family::NRT& p) {
                       c.Pi = nrt_dispersion(static_cast<std::size_t>(p.r), static_cast<std::size_t>(p.n), E);
                       c.r = p.r;
                       c.S_size = regime == Regime::Tables ? p.r + 1 : p.n + 1;
                       if (p.n < e) c.notes.push_back("length n < e: the length constraint on Pi is active");
                   },
                   [&](const family::SumRank& p) {
                       if (regime != Regime::Tables) unsupported("sumrank");
                       const auto bounds = detail::sumrank_bounds(p);
                       const std::size_t d = *std::max_element(bounds.begin(), bounds.end());
                       c.Pi = bounded_tuple_count(E, bounds);
                       c.r = p.t();
                       c.S_size = static_cast<long>(d) + 1;
                       if (E > *std::min_element(bounds.begin(), bounds.end())) {
                           const BigInt unbounded = weak_composition_cumulative(E, bounds.size());
                           c.notes.push_back("e > d: exact bounded count used; the unbounded count C(t+e,e) - 1 = " +
                                             to_string(unbounded - 1) + " applies only when e <= d");
                       }
                   },
                   [&](const family::Mixed& p) {
                       if (regime != Regime::Tables) unsupported("mixed");
                       const auto bounds = detail::mixed_bounds(p);
                       c.Pi = mixed_dispersion(bounds, E);
                       c.r = static_cast<long>(bounds.size());
                       c.S_size = static_cast<long>(*std::max_element(bounds.begin(), bounds.end())) + 1;
                   },
                   [&](const family::Johnson& p) {
                       if (regime != Regime::Tables) unsupported("johnson");
                       c.Pi = johnson_dispersion(static_cast<std::size_t>(p.w), E);
                       c.r = 2;
                       c.S_size = p.w + 1;
                   },
                   [&](const family::Homogeneous& p) {
                       if (regime != Regime::Tables) unsupported("homogeneous");
                       c.Pi = homogeneous_dispersion_k(p.k, static_cast<std::size_t>(p.n), E);
                       c.r = 4;
                       c.S_size = p.n + 1;
                   },
                   [&](const family::ClarkLiang&) { unsupported("clarkliang"); },
               },
               params);
    c.bound = sz_bound(e, c.S_size, c.r);
    c.verdict = verdict_for(c.Pi, c.bound);
    if (e == 0) c.notes.push_back("e = 0: trivial radius, every set is a 0-perfect code");
    return c;
}

/// (s+1) (s!)^(2/(s-1)).
inline double lee_threshold_corollary(long s) {
    if (s < 2) throw std::invalid_argument("lee_threshold_corollary: s must be >= 2");
    double f = 1.0;
    for (long i = 2; i <= s; ++i) f *= static_cast<double>(i);
    return static_cast<double>(s + 1) * std::pow(f, 2.0 / static_cast<double>(s - 1));
}

/// (s+1) (s!)^2, the threshold quoted with the tables.
inline BigInt lee_threshold_tables(long s) {
    if (s < 2) throw std::invalid_argument("lee_threshold_tables: s must be >= 2");
    BigInt f = 1;
    for (long i = 2; i <= s; ++i) f *= i;
    return (s + 1) * f * f;
}

/// (1+a)^(1+a) / a^a - 1.
inline double sumrank_threshold(double a) {
    if (!(a > 0)) throw std::invalid_argument("sumrank_threshold: a must be > 0");
    return std::exp((1 + a) * std::log1p(a) - a * std::log(a)) - 1.0;
}

/// The simpler sufficient form E * a.
inline double sumrank_threshold_approx(double a) {
    if (!(a > 0)) throw std::invalid_argument("sumrank_threshold_approx: a must be > 0");
    return std::exp(1.0) * a;
}

/// (r+1) (r!)^(2/(r-1)).
inline double nrt_threshold(long r) {
    if (r < 2) throw std::invalid_argument("nrt_threshold: r must be >= 2");
    return lee_threshold_corollary(r);
}

struct MixedAnalysis {
    std::size_t k = 0;
    std::size_t n = 0;
    long e = 0;
    double a = 0;
    double threshold = 0;  // 1/k
    bool regime_satisfied = false;
    Certificate certificate;
};

/// Asymptotic-regime reading (a = e/n against 1/k) plus the exact test on the given blocks.
inline MixedAnalysis mixed_condition(const std::vector<std::size_t>& bounds, long e) {
    if (bounds.size() < 2) throw std::invalid_argument("mixed_condition: k must be >= 2");
    family::Mixed m;
    for (std::size_t b : bounds) m.blocks.push_back({static_cast<int>(b), 2});
    MixedAnalysis r;
    r.k = bounds.size();
    r.n = *std::max_element(bounds.begin(), bounds.end());
    r.e = e;
    r.a = static_cast<double>(e) / static_cast<double>(r.n);
    r.threshold = 1.0 / static_cast<double>(r.k);
    r.regime_satisfied = static_cast<double>(e) * static_cast<double>(r.k) > static_cast<double>(r.n);
    r.certificate = master_test(m, e);
    return r;
}

inline MixedAnalysis mixed_condition(std::size_t k, std::size_t n, long e) {
    return mixed_condition(std::vector<std::size_t>(k, n), e);
}

struct CountercheckReport {
    std::size_t homogeneous_points = 0;
    std::size_t johnson_points = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Sweeps confirming that the test cannot fire for the homogeneous and Johnson schemes.
inline CountercheckReport example_counterchecks(std::size_t homogeneous_n_max = 40, std::size_t johnson_w_max = 30) {
    CountercheckReport rep;
    // e = 0 rows are excluded: the bound vanishes there and Pi(0) - 1 = 0 trivially.
    for (std::size_t n = 1; n <= homogeneous_n_max; ++n) {
        const BigInt cube = ipow(BigInt(n + 1), 3);
        for (std::size_t t = 1; t <= 2 * n; ++t) {
            ++rep.homogeneous_points;
            const BigInt lhs = homogeneous_dispersion(n, t) - 1;
            if (lhs > t * cube)
                rep.violations.push_back("homogeneous n=" + std::to_string(n) + " t'=" + std::to_string(t) + ": Pi-1 = " +
                                         to_string(lhs) + " exceeds t'(n+1)^3");
        }
    }
    for (std::size_t w = 1; w <= johnson_w_max; ++w)
        for (std::size_t e = 1; e <= 2 * w + 10; ++e) {
            ++rep.johnson_points;
            const BigInt pi = johnson_dispersion(w, e);
            if (pi > BigInt(e) * (w + 1))
                rep.violations.push_back("johnson w=" + std::to_string(w) + " e=" + std::to_string(e) + ": Pi = " +
                                         to_string(pi) + " exceeds e(w+1)");
        }
    return rep;
}

/// Printed entry of a published table row, kept only for comparison.
struct PrintedRow {
    std::string pi_minus_1;
    std::string bound;
    bool inequality = false;
};

struct TableRow {
    int table = 0;
    int q = 0;
    long e = 0;
    // sum-rank columns
    long t = 0;
    double a = 0;
    double f_a = 0;
    long d = 0;

    BigInt pi_minus_1;
    BigInt sz_bound;
    bool inequality = false;
    std::string pi_display;
    std::string bound_display;

    std::optional<PrintedRow> printed;
    bool matches_printed = true;
    std::vector<std::string> notes;
};

/// Published "M x10^k" display: k = min(12, 3 floor((digits-1)/3)), M rounded half up.
inline std::string scaled_display(const BigInt& v) {
    const std::string s = to_string(v);
    if (v < 1000) return s;
    const unsigned k = std::min<unsigned>(12, 3 * static_cast<unsigned>((s.size() - 1) / 3));
    const BigInt p = pow10(k);
    const BigInt m = (v + p / 2) / p;
    return to_string(m) + "x10^" + std::to_string(k);
}

struct DisplayMatch {
    bool mantissa = false;   // printed mantissa = leading digits of v (truncated or rounded)
    bool exponent = false;   // printed exponent places those digits correctly
    long expected_exponent = 0;
};

/// Compares a printed "M x 10^k" against the exact value.
inline DisplayMatch match_display(const BigInt& v, const std::string& mantissa, long exponent) {
    DisplayMatch r;
    const std::string s = to_string(v);
    const std::size_t m = mantissa.size();
    if (m == 0 || m > s.size()) return r;
    const unsigned drop = static_cast<unsigned>(s.size() - m);
    const std::string truncated = s.substr(0, m);
    const BigInt p = pow10(drop);
    const std::string rounded = drop == 0 ? s : to_string((v + p / 2) / p);
    r.mantissa = mantissa == truncated || mantissa == rounded;
    r.expected_exponent = static_cast<long>(drop);
    r.exponent = exponent == r.expected_exponent;
    return r;
}

namespace detail {

struct LeeTableSpec {
    int q;
    std::vector<long> e;
    std::vector<PrintedRow> printed;
};

inline LeeTableSpec lee_table_spec(int id) {
    switch (id) {
        case 1:
            return {4,
                    {1, 3, 5, 7, 9, 10, 11, 12, 13, 14, 15, 17},
                    {{"1", "3", false}, {"5", "9", false}, {"11", "15", false}, {"19", "21", false},
                     {"29", "27", true}, {"35", "30", true}, {"41", "33", true}, {"48", "36", true},
                     {"55", "39", true}, {"63", "42", true}, {"71", "45", true}, {"89", "51", true}}};
        case 2:
            return {6,
                    {5, 10, 15, 18, 20, 21, 22, 23, 24, 25, 26, 28},
                    {{"15", "80", false}, {"66", "160", false}, {"173", "240", false}, {"273", "288", false},
                     {"357", "320", true}, {"457", "336", true}, {"457", "352", true}, {"513", "368", true},
                     {"574", "384", true}, {"639", "400", true}, {"709", "416", true}, {"864", "448", true}}};
        case 3:
            return {8,
                    {30, 40, 45, 50, 55, 58, 65, 70, 75, 80, 85, 90},
                    {{"2723", "3750", false}, {"7385", "5000", true}, {"11221", "5625", true}, {"16389", "6250", true},
                     {"23159", "6875", true}, {"28119", "7250", true}, {"42752", "8125", true}, {"56258", "8750", true},
                     {"72158", "9375", true}, {"90988", "10000", true}, {"113276", "10625", true},
                     {"139826", "11250", true}}};
        default:
            throw std::invalid_argument("reproduce_table: id must be 1..4");
    }
}

struct ScaledPrinted {
    long t, e;
    std::string pi_mantissa;
    long pi_exp;
    std::string bound_mantissa;
    long bound_exp;
    bool inequality;
};

inline std::vector<ScaledPrinted> sumrank_table_spec() {
    return {{10, 4, "1", 3, "2", 3, false},
            {15, 6, "54", 3, "98", 3, false},
            {20, 8, "3", 6, "4", 6, false},
            {25, 10, "184", 6, "168", 6, true},
            {30, 12, "11", 9, "6", 9, true},
            {40, 16, "42", 12, "9", 12, true},
            {50, 20, "16188", 12, "11259", 12, true},
            {60, 24, "64195332", 12, "13835058", 12, true},
            {80, 32, "10484776488844408", 12, "19342813113834", 12, true}};
}

}  // namespace detail

/// Recomputes a published table; printed entries are attached only to flag divergences.
inline std::vector<TableRow> reproduce_table(int id) {
    std::vector<TableRow> rows;
    if (id == 4) {
        for (const auto& p : detail::sumrank_table_spec()) {
            TableRow row;
            row.table = 4;
            row.q = 2;
            row.t = p.t;
            row.e = p.e;
            row.d = 1;
            row.a = static_cast<double>(p.e) / static_cast<double>(p.t);
            row.f_a = sumrank_threshold(row.a);
            row.pi_minus_1 = weak_composition_cumulative(static_cast<std::size_t>(p.e), static_cast<std::size_t>(p.t)) - 1;
            row.sz_bound = sz_bound(p.e, row.d + 1, p.t);
            row.inequality = row.pi_minus_1 > row.sz_bound;
            row.pi_display = scaled_display(row.pi_minus_1);
            row.bound_display = scaled_display(row.sz_bound);
            row.printed = PrintedRow{p.pi_mantissa + "x10^" + std::to_string(p.pi_exp),
                                     p.bound_mantissa + "x10^" + std::to_string(p.bound_exp), p.inequality};
            const auto mp = match_display(row.pi_minus_1, p.pi_mantissa, p.pi_exp);
            const auto mb = match_display(row.sz_bound, p.bound_mantissa, p.bound_exp);
            row.matches_printed = mp.mantissa && mb.mantissa && row.inequality == p.inequality;
            if (mp.mantissa && !mp.exponent)
                row.notes.push_back("printed Pi-1 exponent 10^" + std::to_string(p.pi_exp) + " should be 10^" +
                                    std::to_string(mp.expected_exponent) + " for mantissa " + p.pi_mantissa);
            if (mb.mantissa && !mb.exponent)
                row.notes.push_back("printed bound exponent 10^" + std::to_string(p.bound_exp) + " should be 10^" +
                                    std::to_string(mb.expected_exponent) + " for mantissa " + p.bound_mantissa);
            row.notes.push_back("Pi counts all b in N^t with sum <= e (C(t+e,e)); with b_i <= d = 1 the exact count is " +
                                to_string(sumrank_dispersion(static_cast<std::size_t>(p.t), 1, static_cast<std::size_t>(p.e))));
            rows.push_back(std::move(row));
        }
        return rows;
    }
    const auto layout = detail::lee_table_spec(id);
    for (std::size_t i = 0; i < layout.e.size(); ++i) {
        const long e = layout.e[i];
        const Certificate c = master_test(family::Lee{layout.q, static_cast<int>(e)}, e, Regime::Tables);
        TableRow row;
        row.table = id;
        row.q = layout.q;
        row.e = e;
        row.pi_minus_1 = c.Pi - 1;
        row.sz_bound = c.bound;
        row.inequality = c.verdict == Verdict::Nonexistent;
        row.pi_display = to_string(row.pi_minus_1);
        row.bound_display = to_string(row.sz_bound);
        row.printed = layout.printed[i];
        const bool pi_ok = row.pi_display == layout.printed[i].pi_minus_1;
        const bool bound_ok = row.bound_display == layout.printed[i].bound;
        row.matches_printed = pi_ok && bound_ok && row.inequality == layout.printed[i].inequality;
        if (!pi_ok)
            row.notes.push_back("divergence: recomputed Pi(e)-1 = " + row.pi_display + ", printed " +
                                layout.printed[i].pi_minus_1 +
                                (row.inequality == layout.printed[i].inequality ? "; verdict unchanged" : "; verdict differs"));
        if (!bound_ok) row.notes.push_back("divergence: recomputed bound " + row.bound_display + ", printed " + layout.printed[i].bound);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string table_caption(int id) {
    switch (id) {
        case 1: return "Lee metric, q=4, s=2, e0=" + to_string(lee_threshold_tables(2));
        case 2: return "Lee metric, q=6, s=3, e0=" + to_string(lee_threshold_tables(3));
        case 3: return "Lee metric, q=8, s=4, e0=" + to_string(lee_threshold_tables(4));
        case 4: return "Sum-rank metric, q=2, d=1";
        default: throw std::invalid_argument("table id must be 1..4");
    }
}

/// Integer polynomial in several variables: (exponent vector, coefficient) terms.
struct SparsePolynomial {
    std::size_t vars = 0;
    std::vector<std::pair<std::vector<int>, long>> terms;

    long total_degree() const {
        long d = -1;
        for (const auto& [x, c] : terms)
            if (c != 0) {
                long s = 0;
                for (int v : x) s += v;
                d = std::max(d, s);
            }
        return d;
    }
};

namespace detail {

inline void exponents_upto(std::size_t vars, int degree, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(vars, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos == vars) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, degree);
}

}  // namespace detail

/// Zeros of p on {0..set_size-1}^vars by exhaustive evaluation.
inline std::uint64_t count_zeros_on_grid(const SparsePolynomial& p, int set_size) {
    if (set_size < 1) throw std::invalid_argument("count_zeros_on_grid: set_size must be >= 1");
    const std::size_t n = p.vars;
    int max_exp = 0;
    for (const auto& [x, c] : p.terms)
        for (int v : x) max_exp = std::max(max_exp, v);
    // powers[v][k] = v^k
    std::vector<std::vector<__int128>> powers(static_cast<std::size_t>(set_size), std::vector<__int128>(static_cast<std::size_t>(max_exp) + 1, 1));
    for (int v = 0; v < set_size; ++v)
        for (int k = 1; k <= max_exp; ++k)
            powers[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)] = powers[static_cast<std::size_t>(v)][static_cast<std::size_t>(k - 1)] * v;

    std::uint64_t zeros = 0;
    std::vector<int> pt(n, 0);
    while (true) {
        __int128 val = 0;
        for (const auto& [x, c] : p.terms) {
            __int128 m = c;
            for (std::size_t j = 0; j < n; ++j) m *= powers[static_cast<std::size_t>(pt[j])][static_cast<std::size_t>(x[j])];
            val += m;
        }
        zeros += val == 0;
        std::size_t j = 0;
        while (j < n && ++pt[j] == set_size) pt[j++] = 0;
        if (j == n) break;
    }
    return zeros;
}

/// Random polynomial of exact total degree: coefficients uniform in [-9, 9], some top-degree term non-zero.
inline SparsePolynomial random_polynomial(std::size_t vars, int degree, std::mt19937_64& rng) {
    std::vector<std::vector<int>> exps;
    detail::exponents_upto(vars, degree, exps);
    std::uniform_int_distribution<long> coeff(-9, 9);
    SparsePolynomial p{vars, {}};
    std::vector<std::size_t> top;
    bool top_nonzero = false;
    for (const auto& x : exps) {
        long s = 0;
        for (int v : x) s += v;
        const long c = coeff(rng);
        if (s == degree) {
            top.push_back(p.terms.size());
            top_nonzero = top_nonzero || c != 0;
        }
        p.terms.emplace_back(x, c);
    }
    if (!top_nonzero) {
        std::uniform_int_distribution<std::size_t> pick(0, top.size() - 1);
        std::uniform_int_distribution<long> nz(1, 9);
        std::bernoulli_distribution sign(0.5);
        p.terms[top[pick(rng)]].second = sign(rng) ? nz(rng) : -nz(rng);
    }
    return p;
}

struct SZReport {
    std::size_t vars = 0;
    int degree = 0;
    int set_size = 0;
    std::uint64_t seed = 0;
    BigInt bound;
    std::vector<std::uint64_t> zero_counts;
    std::uint64_t max_zero_count = 0;
    bool all_within_bound = true;
};

/// Random trials of the zero bound |Z(P) cap S^n| <= deg * |S|^(n-1); deterministic under seed.
inline SZReport sz_empirical_check(std::size_t vars, int degree, int set_size, std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("sz_empirical_check: trials must be >= 1");
    if (vars < 1 || degree < 1 || set_size < 1) throw std::invalid_argument("sz_empirical_check: vars, degree, set_size must be >= 1");
    SZReport rep;
    rep.vars = vars;
    rep.degree = degree;
    rep.set_size = set_size;
    rep.seed = seed;
    rep.bound = sz_bound(degree, set_size, static_cast<long>(vars));
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        const auto p = random_polynomial(vars, degree, rng);
        const auto z = count_zeros_on_grid(p, set_size);
        rep.zero_counts.push_back(z);
        rep.max_zero_count = std::max(rep.max_zero_count, z);
        if (BigInt(z) > rep.bound) rep.all_within_bound = false;
    }
    return rep;
}

/// x_1 x_2 ... x_n on {0..S-1}^n: the bound's near-extremal family.
inline SparsePolynomial product_of_variables(std::size_t vars) {
    return SparsePolynomial{vars, {{std::vector<int>(vars, 1), 1}}};
}

}  // namespace wmas
