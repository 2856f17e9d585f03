#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "certify.hpp"
#include "eigen.hpp"
#include "family.hpp"
#include "mdistance.hpp"
#include "scheme.hpp"

namespace wmas::io {

using json = nlohmann::json;

/// Malformed input; maps to exit code 2 in the CLI.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline int get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) throw InputError(std::string("missing integer field '") + key + "'");
    return j.at(key).get<int>();
}

inline std::vector<int> get_ints(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) throw InputError(std::string("missing array field '") + key + "'");
    std::vector<int> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number_integer()) throw InputError(std::string("non-integer entry in '") + key + "'");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace detail

/// {"family": "lee", "q": 5, "n": 2} and friends.
inline SchemeFamilyParams parse_family(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j.at("family").is_string())
        throw InputError("family descriptor needs a string field 'family'");
    const std::string f = j.at("family").get<std::string>();
    SchemeFamilyParams p;
    if (f == "lee") p = family::Lee{detail::get_int(j, "q"), detail::get_int(j, "n")};
    else if (f == "nrt") p = family::NRT{detail::get_int(j, "q"), detail::get_int(j, "n"), detail::get_int(j, "r")};
    else if (f == "sumrank") p = family::SumRank{j.contains("q") ? detail::get_int(j, "q") : 2, detail::get_ints(j, "rows"), detail::get_ints(j, "cols")};
    else if (f == "mixed") {
        family::Mixed m;
        if (!j.contains("blocks") || !j.at("blocks").is_array()) throw InputError("mixed needs 'blocks': [[n, p], ...]");
        for (const auto& b : j.at("blocks")) {
            if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer() || !b[1].is_number_integer())
                throw InputError("mixed block must be [length, alphabet]");
            m.blocks.push_back({b[0].get<int>(), b[1].get<int>()});
        }
        p = m;
    } else if (f == "johnson") p = family::Johnson{detail::get_int(j, "q"), detail::get_int(j, "w"), detail::get_int(j, "n")};
    else if (f == "homogeneous") p = family::Homogeneous{detail::get_int(j, "k"), detail::get_int(j, "n")};
    else if (f == "clarkliang") p = family::ClarkLiang{};
    else throw InputError("unknown family '" + f + "'");
    try {
        validate(p);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return p;
}

inline json to_json(const SchemeFamilyParams& params) {
    json j{{"family", family_name(params)}};
    std::visit(overloaded{
                   [&](const family::Lee& p) { j["q"] = p.q, j["n"] = p.n; },
                   [&](const family::NRT& p) { j["q"] = p.q, j["n"] = p.n, j["r"] = p.r; },
                   [&](const family::SumRank& p) { j["q"] = p.q, j["rows"] = p.rows, j["cols"] = p.cols; },
                   [&](const family::Mixed& p) {
                       j["blocks"] = json::array();
                       for (const auto& b : p.blocks) j["blocks"].push_back({b.length, b.alphabet});
                   },
                   [&](const family::Johnson& p) { j["q"] = p.q, j["w"] = p.w, j["n"] = p.n; },
                   [&](const family::Homogeneous& p) { j["k"] = p.k, j["n"] = p.n; },
                   [](const family::ClarkLiang&) {},
               },
               params);
    return j;
}

/// Exact integers travel as decimal strings.
inline json big(const BigInt& v) { return to_string(v); }

inline json to_json(const Certificate& c) {
    return json{{"certificate",
                 {{"family", to_json(c.family)},
                  {"e", c.e},
                  {"Pi", big(c.Pi)},
                  {"Pi_minus_1", big(c.Pi - 1)},
                  {"r", c.r},
                  {"S_size", big(c.S_size)},
                  {"bound", big(c.bound)},
                  {"verdict", to_string(c.verdict)},
                  {"regime", c.regime},
                  {"notes", c.notes}}}};
}

inline std::string to_text(const Certificate& c) {
    std::ostringstream os;
    os << "family   " << to_json(c.family).dump() << "\n"
       << "e        " << c.e << "\n"
       << "Pi(e)    " << c.Pi << "\n"
       << "r, |S|   " << c.r << ", " << c.S_size << " (regime " << c.regime << ")\n"
       << "bound    " << c.bound << "\n"
       << "verdict  " << to_string(c.verdict) << (c.verdict == Verdict::Nonexistent ? " (Pi(e)-1 > bound)" : " (Pi(e)-1 <= bound)")
       << "\n";
    for (const auto& n : c.notes) os << "note     " << n << "\n";
    return os.str();
}

inline json to_json(const TableRow& r) {
    json j;
    if (r.table == 4) {
        j = {{"t", r.t}, {"e", r.e}, {"a", r.a}, {"f_a", r.f_a}, {"d", r.d}};
    } else {
        j = {{"q", r.q}, {"e", r.e}};
    }
    j["Pi_minus_1"] = big(r.pi_minus_1);
    j["sz_bound"] = big(r.sz_bound);
    j["inequality"] = r.inequality;
    j["Pi_minus_1_display"] = r.pi_display;
    j["sz_bound_display"] = r.bound_display;
    j["matches_printed"] = r.matches_printed;
    if (r.printed)
        j["printed"] = {{"Pi_minus_1", r.printed->pi_minus_1}, {"sz_bound", r.printed->bound}, {"inequality", r.printed->inequality}};
    j["notes"] = r.notes;
    return j;
}

inline std::string yes_no(bool b) { return b ? "Yes" : "No"; }

inline std::string fixed3(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << v;
    return os.str();
}

/// Columns follow the published layout.
inline std::string to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    if (!rows.empty() && rows[0].table == 4) {
        os << "(t;e),a,f(a),d,Pi(e)-1,S-Z bound,Inequality\n";
        for (const auto& r : rows)
            os << "(" << r.t << ";" << r.e << ")," << fixed3(r.a).substr(0, 3) << "," << fixed3(r.f_a) << "," << r.d << ","
               << r.pi_display << "," << r.bound_display << "," << yes_no(r.inequality) << "\n";
    } else {
        os << "q,e,Pi(e)-1,S-Z bound,Inequality\n";
        for (const auto& r : rows)
            os << r.q << "," << r.e << "," << r.pi_display << "," << r.bound_display << "," << yes_no(r.inequality) << "\n";
    }
    return os.str();
}

inline std::string to_markdown(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    const bool sr = !rows.empty() && rows[0].table == 4;
    if (sr) os << "| (t,e) | a | f(a) | d | Pi(e)-1 | S-Z bound | Inequality | Notes |\n|---|---|---|---|---|---|---|---|\n";
    else os << "| q | e | Pi(e)-1 | S-Z bound | Inequality | Notes |\n|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
        std::string notes;
        for (const auto& n : r.notes) notes += (notes.empty() ? "" : "; ") + n;
        if (sr)
            os << "| (" << r.t << "," << r.e << ") | " << fixed3(r.a).substr(0, 3) << " | " << fixed3(r.f_a) << " | " << r.d
               << " | " << r.pi_display << " (" << r.pi_minus_1 << ") | " << r.bound_display << " (" << r.sz_bound << ") | "
               << yes_no(r.inequality) << " | " << notes << " |\n";
        else
            os << "| " << r.q << " | " << r.e << " | " << r.pi_display << " | " << r.bound_display << " | "
               << yes_no(r.inequality) << " | " << notes << " |\n";
    }
    return os.str();
}

inline json to_json(const EigenTable& t) {
    json j{{"exact", t.exact}, {"group_order", big(t.group_order())}};
    j["classes"] = t.classes;
    j["eigen_indices"] = t.eigen_indices;
    json vals = json::array();
    for (const auto& v : t.valencies) vals.push_back(big(v));
    j["valencies"] = vals;
    json rows = json::array();
    for (const auto& row : t.P) {
        json r = json::array();
        for (double v : row) {
            if (t.exact) r.push_back(static_cast<long long>(std::llround(v)));
            else r.push_back(v);
        }
        rows.push_back(r);
    }
    j["P"] = rows;
    return j;
}

inline json scheme_summary(const ExplicitScheme& s) {
    json j;
    if (s.family()) j["family"] = to_json(*s.family());
    j["size"] = s.size();
    j["classes"] = s.classes();
    j["d"] = s.distances();
    j["translation"] = s.is_translation();
    return j;
}

inline json to_json(const AxiomReport& r, const std::vector<ClassIndex>& classes, bool with_tensor) {
    json j{{"ok", r.ok}, {"class_count", r.class_count}};
    if (!r.ok) {
        j["violated"] = r.violated;
        j["witness"] = {r.witness_x, r.witness_y};
        j["message"] = r.message;
    } else if (with_tensor) {
        // sparse triplets of non-zero p_ij^k
        json p = json::array();
        const std::size_t K = r.class_count;
        for (std::size_t i = 0; i < K; ++i)
            for (std::size_t jx = 0; jx < K; ++jx)
                for (std::size_t k = 0; k < K; ++k)
                    if (const long v = r.p(i, jx, k); v != 0) p.push_back({{"i", classes[i]}, {"j", classes[jx]}, {"k", classes[k]}, {"p", v}});
        j["intersection_numbers"] = p;
    }
    return j;
}

/// {"space": family, "radius": e, "codewords": [[...], ...]}
struct CodeFile {
    SchemeFamilyParams space;
    long radius = 0;
    std::vector<std::vector<int>> codewords;
};

inline CodeFile parse_code(const json& j) {
    if (!j.is_object() || !j.contains("space")) throw InputError("code file needs 'space'");
    CodeFile c{parse_family(j.at("space")), 0, {}};
    if (!j.contains("radius") || !j.at("radius").is_number_integer() || j.at("radius").get<long>() < 0)
        throw InputError("code file needs a non-negative integer 'radius'");
    c.radius = j.at("radius").get<long>();
    if (!j.contains("codewords") || !j.at("codewords").is_array()) throw InputError("code file needs 'codewords'");
    for (const auto& w : j.at("codewords")) {
        if (!w.is_array()) throw InputError("each codeword must be an array of integers");
        std::vector<int> v;
        for (const auto& x : w) {
            if (!x.is_number_integer()) throw InputError("each codeword must be an array of integers");
            v.push_back(x.get<int>());
        }
        c.codewords.push_back(std::move(v));
    }
    if (c.codewords.empty()) throw InputError("code has no codewords");
    return c;
}

/// {"vertices": N, "edges": [[u, v, color], ...]} with optional "colors": m.
inline ColoredGraph parse_graph(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_number_integer() || j.at("vertices").get<long>() < 1)
        throw InputError("graph needs a positive integer 'vertices'");
    std::vector<ColoredEdge> edges;
    if (!j.contains("edges") || !j.at("edges").is_array()) throw InputError("graph needs 'edges'");
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3) throw InputError("edge must be [u, v] or [u, v, color]");
        for (const auto& x : e)
            if (!x.is_number_integer() || x.get<long>() < 0) throw InputError("edge entries must be non-negative integers");
        edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), e.size() == 3 ? e[2].get<int>() : 1});
    }
    const int colors = j.contains("colors") && j.at("colors").is_number_integer() ? j.at("colors").get<int>() : 0;
    try {
        return ColoredGraph(j.at("vertices").get<std::size_t>(), std::move(edges), colors);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline json to_json(const DistanceMatrices& m) {
    json j{{"D", m.D}};
    json mats = json::array();
    for (std::size_t k = 0; k < m.D.size(); ++k) {
        json trip = json::array();
        for (std::size_t x = 0; x < m.n; ++x)
            for (std::size_t y = 0; y < m.n; ++y)
                if (m.A[k][x * m.n + y]) trip.push_back({x, y, 1});
        mats.push_back({{"l", m.D[k]}, {"entries", trip}});
    }
    j["matrices"] = mats;
    return j;
}

inline json to_json(const RegularityReport& r) {
    json j{{"status", to_string(r.status)}, {"D", r.D}};
    if (!r.message.empty()) j["message"] = r.message;
    if (r.witness) j["witness"] = {r.witness->first, r.witness->second};
    if (r.regular()) {
        json p = json::array();
        const std::size_t K = r.D.size();
        for (std::size_t a = 0; a < K; ++a)
            for (std::size_t b = 0; b < K; ++b)
                for (std::size_t c = 0; c < K; ++c)
                    if (const long v = r.at(a, b, c); v != 0) p.push_back({{"a", r.D[a]}, {"b", r.D[b]}, {"c", r.D[c]}, {"p", v}});
        j["intersection_numbers"] = p;
    }
    return j;
}

}  // namespace wmas::io
