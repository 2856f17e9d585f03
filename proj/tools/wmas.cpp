// wmas: perfect-code nonexistence certificates and association-scheme tools.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wmas/io.hpp"
#include "wmas/wmas.hpp"

namespace {

using wmas::io::InputError;
using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kBadInput = 2;

struct FamilyFlags {
    std::string family;
    std::optional<int> q, n, r, t, d, w, k;
    std::vector<int> bounds, rows, cols;

    void attach(CLI::App* cmd, const std::string& families) {
        cmd->add_option("--family", family, "Scheme family: " + families)->required();
        cmd->add_option("--q", q, "Alphabet size");
        cmd->add_option("--n", n, "Length (Lee/NRT default: e)");
        cmd->add_option("--r", r, "NRT block length");
        cmd->add_option("--t", t, "Number of sum-rank blocks");
        cmd->add_option("--d", d, "Sum-rank block rank bound (square d x d blocks)");
        cmd->add_option("--bounds", bounds, "Mixed block lengths n_1,...,n_k")->delimiter(',');
        cmd->add_option("--rows", rows, "Sum-rank row counts n_i")->delimiter(',');
        cmd->add_option("--cols", cols, "Sum-rank column counts m_i")->delimiter(',');
        cmd->add_option("--w", w, "Johnson weight");
        cmd->add_option("--k", k, "Homogeneous: ring Z_{2^k}");
    }

    int need(const std::optional<int>& v, const char* flag) const {
        if (!v) throw InputError(std::string("--family ") + family + " requires " + flag);
        return *v;
    }

    /// default_n fills --n for Lee/NRT when omitted.
    wmas::SchemeFamilyParams params(std::optional<int> default_n = std::nullopt) const {
        namespace f = wmas::family;
        wmas::SchemeFamilyParams p;
        auto length = [&]() {
            if (n) return *n;
            if (default_n) return *default_n;
            throw InputError("--family " + family + " requires --n");
        };
        if (family == "lee") p = f::Lee{need(q, "--q"), length()};
        else if (family == "nrt") p = f::NRT{q.value_or(2), length(), need(r, "--r")};
        else if (family == "sumrank") {
            f::SumRank s{q.value_or(2), rows, cols};
            if (rows.empty()) {
                const int tt = need(t, "--t (or --rows/--cols)"), dd = need(d, "--d (or --rows/--cols)");
                s.rows.assign(static_cast<std::size_t>(tt), dd);
                s.cols.assign(static_cast<std::size_t>(tt), dd);
            } else if (cols.empty()) {
                s.cols = rows;
            }
            p = s;
        } else if (family == "mixed") {
            if (bounds.empty()) throw InputError("--family mixed requires --bounds");
            f::Mixed m;
            for (int b : bounds) m.blocks.push_back({b, q.value_or(2)});
            p = m;
        } else if (family == "johnson") p = f::Johnson{q.value_or(2), need(w, "--w"), need(n, "--n")};
        else if (family == "homogeneous") p = f::Homogeneous{need(k, "--k"), need(n, "--n")};
        else if (family == "clarkliang") p = f::ClarkLiang{};
        else throw InputError("unknown family '" + family + "'");
        try {
            wmas::validate(p);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        return p;
    }
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void check_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (fmt == a) return;
    throw InputError("unsupported --format " + fmt);
}

int run_certify(const FamilyFlags& ff, long e, const std::string& regime, const std::string& format) {
    check_format(format, {"text", "json"});
    if (ff.family != "lee" && ff.family != "sumrank" && ff.family != "mixed" && ff.family != "nrt")
        throw InputError("certify supports lee, sumrank, mixed, nrt");
    if (e < 0) throw InputError("--e must be >= 0");
    wmas::Certificate c;
    try {
        c = wmas::master_test(ff.params(static_cast<int>(e)), e, wmas::parse_regime(regime));
    } catch (const std::invalid_argument& ex) {
        throw InputError(ex.what());
    }
    if (format == "json") std::cout << wmas::io::to_json(c).dump(2) << "\n";
    else std::cout << wmas::io::to_text(c);
    return kOk;
}

int run_table(int id, const std::string& format) {
    check_format(format, {"csv", "md", "json"});
    if (id < 1 || id > 4) throw InputError("--id must be 1..4");
    const auto rows = wmas::reproduce_table(id);
    if (format == "csv") std::cout << wmas::io::to_csv(rows);
    else if (format == "md") std::cout << "**" << wmas::table_caption(id) << "**\n\n" << wmas::io::to_markdown(rows);
    else {
        json j{{"table", id}, {"caption", wmas::table_caption(id)}, {"rows", json::array()}};
        for (const auto& r : rows) j["rows"].push_back(wmas::io::to_json(r));
        std::cout << j.dump(2) << "\n";
    }
    return kOk;
}

int run_dispersion(const FamilyFlags& ff, long e_max, const std::string& format) {
    check_format(format, {"text", "json"});
    if (e_max < 0) throw InputError("--e-max must be >= 0");
    const auto p = ff.params(static_cast<int>(e_max));
    const auto prof = wmas::dispersion_profile(p, static_cast<std::size_t>(e_max));
    if (format == "json") {
        json j{{"family", wmas::io::to_json(p)}, {"values", json::array()}, {"delta", json::array()},
               {"total_classes", wmas::io::big(wmas::total_class_count(p))}};
        for (std::size_t e = 0; e < prof.values.size(); ++e) {
            j["values"].push_back(wmas::io::big(prof.values[e]));
            j["delta"].push_back(wmas::io::big(prof.delta[e]));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "e\tPi(e)\tdelta\n";
        for (std::size_t e = 0; e < prof.values.size(); ++e) std::cout << e << "\t" << prof.values[e] << "\t" << prof.delta[e] << "\n";
    }
    return kOk;
}

int run_threshold(const std::string& family, std::optional<long> s, std::optional<double> a, std::optional<long> r) {
    try {
        if (family == "lee") {
            if (!s) throw InputError("threshold --family lee requires --s");
            std::cout << "corollary (s+1)(s!)^(2/(s-1)) = " << wmas::lee_threshold_corollary(*s) << "\n"
                      << "tables    (s+1)(s!)^2       = " << wmas::lee_threshold_tables(*s) << "\n";
        } else if (family == "sumrank") {
            if (!a) throw InputError("threshold --family sumrank requires --a");
            std::cout << "f(a) = (1+a)^(1+a)/a^a - 1 = " << wmas::sumrank_threshold(*a) << "\n"
                      << "approx E*a                 = " << wmas::sumrank_threshold_approx(*a) << "\n";
        } else if (family == "nrt") {
            if (!r) throw InputError("threshold --family nrt requires --r");
            std::cout << "(r+1)(r!)^(2/(r-1)) = " << wmas::nrt_threshold(*r) << "\n";
        } else {
            throw InputError("threshold supports lee, sumrank, nrt");
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return kOk;
}

wmas::ExplicitScheme build(const FamilyFlags& ff, std::size_t cap) {
    try {
        return wmas::build_scheme(ff.params(), cap);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    } catch (const std::length_error& e) {
        throw InputError(e.what());
    }
}

int run_scheme(const std::string& action, const FamilyFlags& ff, std::size_t cap, const std::string& format) {
    check_format(format, {"text", "json"});
    const auto s = build(ff, cap);
    if (action == "build") {
        if (format == "json") std::cout << wmas::io::scheme_summary(s).dump(2) << "\n";
        else {
            std::cout << "|X| = " << s.size() << ", " << s.class_count() << " classes\n";
            for (std::size_t k = 0; k < s.class_count(); ++k)
                std::cout << "  " << wmas::to_string(s.classes()[k]) << "  d=" << s.distances()[k] << "\n";
        }
        return kOk;
    }
    if (action == "verify" || action == "dump") {
        const auto rep = wmas::verify_axioms(s);
        if (format == "json" || action == "dump") {
            json j = wmas::io::scheme_summary(s);
            j["axioms"] = wmas::io::to_json(rep, s.classes(), action == "dump");
            std::cout << j.dump(2) << "\n";
        } else if (rep.ok) {
            std::cout << "axioms A1-A3 hold (" << s.size() << " points, " << s.class_count() << " classes)\n";
        } else {
            std::cout << "axiom " << rep.violated << " fails at (" << rep.witness_x << ", " << rep.witness_y << "): " << rep.message << "\n";
        }
        return rep.ok ? kOk : kViolated;
    }
    if (action == "eigen") {
        if (!s.is_translation()) throw InputError("eigenvalues are available for translation schemes only");
        const auto t = wmas::scheme_eigen_table(s);
        if (format == "json") std::cout << wmas::io::to_json(t).dump(2) << "\n";
        else {
            std::cout << "P[class][index]" << (t.exact ? " (integral)" : "") << "\n\t";
            for (const auto& j : t.eigen_indices) std::cout << wmas::to_string(j) << "\t";
            std::cout << "\n";
            for (std::size_t k = 0; k < t.class_count(); ++k) {
                std::cout << wmas::to_string(t.classes[k]) << "\t";
                for (double v : t.P[k]) std::cout << (std::abs(v) < 1e-12 ? 0.0 : v) << "\t";
                std::cout << "\n";
            }
        }
        return kOk;
    }
    throw InputError("unknown scheme action '" + action + "'");
}

int run_code_check(const std::string& file, std::size_t cap, const std::string& format) {
    check_format(format, {"text", "json"});
    const auto cf = wmas::io::parse_code(read_json_file(file));
    wmas::ExplicitScheme s = [&] {
        try {
            return wmas::build_scheme(cf.space, cap);
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }();
    wmas::Code code;
    try {
        code = wmas::make_code(s, cf.codewords, cf.radius);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const auto pc = wmas::is_perfect_code(s, code);
    json j{{"space", wmas::io::to_json(cf.space)}, {"radius", cf.radius}, {"codewords", code.codewords.size()}, {"perfect", pc.perfect}};
    if (!pc.perfect) {
        j["reason"] = pc.reason;
        if (pc.witness) j["witness"] = s.label(*pc.witness);
    }
    bool ok = pc.perfect;
    if (pc.perfect && s.is_translation()) {
        const auto l = wmas::lloyd_theorem_check(s, code);
        j["lloyd"] = {{"Pi", wmas::io::big(l.dispersion)}, {"required_zeros", wmas::io::big(l.required)},
                      {"zero_count", l.zero_count}, {"pass", l.pass}};
        ok = l.pass;
    }
    if (format == "json") std::cout << j.dump(2) << "\n";
    else {
        std::cout << (pc.perfect ? "perfect" : "not perfect (" + pc.reason + ")") << "\n";
        if (pc.witness) std::cout << "witness " << wmas::to_string(s.label(*pc.witness)) << "\n";
        if (j.contains("lloyd"))
            std::cout << "Lloyd: Pi(e) = " << j["lloyd"]["Pi"].get<std::string>() << ", zeros = " << j["lloyd"]["zero_count"]
                      << ", needed >= " << j["lloyd"]["required_zeros"].get<std::string>() << " -> "
                      << (j["lloyd"]["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    }
    return ok ? kOk : kViolated;
}

int run_szcheck(std::size_t vars, int degree, int set_size, std::size_t trials, std::uint64_t seed) {
    if (vars < 1 || degree < 1 || set_size < 1 || trials < 1) throw InputError("szcheck: all parameters must be >= 1");
    const auto r = wmas::sz_empirical_check(vars, degree, set_size, trials, seed);
    std::cout << "trials " << trials << ", bound " << r.bound << ", max zeros " << r.max_zero_count << " -> "
              << (r.all_within_bound ? "within bound" : "BOUND EXCEEDED") << "\n";
    return r.all_within_bound ? kOk : kViolated;
}

int run_mdist(const std::string& file, const std::string& order_name, bool check_regular, bool check_l1) {
    const auto g = wmas::io::parse_graph(read_json_file(file));
    const std::size_t m = static_cast<std::size_t>(g.colors());
    wmas::MonomialOrder order = order_name == "deglex" ? wmas::MonomialOrder::deglex(m)
                                : order_name == "lex"  ? wmas::MonomialOrder::lex(m)
                                                       : throw InputError("--order must be deglex or lex");
    json out = wmas::io::to_json(wmas::m_distance_matrices(g, order));
    int rc = kOk;
    if (check_l1) {
        const auto c = wmas::is_l1_compatible(order, wmas::box_domain(static_cast<int>(std::min<std::size_t>(g.size(), 6)), m));
        out["l1_compatible"] = c.compatible;
        if (c.witness) out["l1_witness"] = {c.witness->first, c.witness->second};
        const auto tri = wmas::triangle_inequality_check(g, order);
        out["triangle"] = {{"vector", tri.vector_ok}, {"scalar", tri.scalar_ok}, {"scalar_asserted", tri.scalar_asserted}, {"notes", tri.notes}};
        if (!tri.ok()) rc = kViolated;
    }
    if (check_regular) {
        try {
            out["regularity"] = wmas::io::to_json(wmas::is_m_distance_regular(g, order));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    std::cout << out.dump(2) << "\n";
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonexistence certificates for perfect codes in weakly metric association schemes"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    // certify
    FamilyFlags certify_ff;
    long certify_e = 0;
    std::string regime = "tables", certify_fmt = "text";
    auto* certify = app.add_subcommand("certify", "Run the nonexistence test for one (family, e)");
    certify_ff.attach(certify, "lee|sumrank|mixed|nrt");
    certify->add_option("--e", certify_e, "Packing radius")->required();
    certify->add_option("--regime", regime, "tables|corollary1");
    certify->add_option("--format", certify_fmt, "text|json");

    int table_id = 0;
    std::string table_fmt = "csv";
    auto* table = app.add_subcommand("table", "Recompute a published table");
    table->add_option("--id", table_id, "1|2|3|4")->required();
    table->add_option("--format", table_fmt, "csv|md|json");

    FamilyFlags disp_ff;
    long e_max = 0;
    std::string disp_fmt = "text";
    auto* dispersion = app.add_subcommand("dispersion", "Dispersion profile Pi(0..e_max)");
    disp_ff.attach(dispersion, "lee|nrt|sumrank|mixed|johnson|homogeneous|clarkliang");
    dispersion->add_option("--e-max", e_max, "Largest radius")->required();
    dispersion->add_option("--format", disp_fmt, "text|json");

    std::string thr_family;
    std::optional<long> thr_s, thr_r;
    std::optional<double> thr_a;
    auto* threshold = app.add_subcommand("threshold", "Radius thresholds beyond which the test always fires");
    threshold->add_option("--family", thr_family, "lee|sumrank|nrt")->required();
    threshold->add_option("--s", thr_s, "Lee s = floor(q/2)");
    threshold->add_option("--a", thr_a, "Sum-rank ratio a = e/t");
    threshold->add_option("--r", thr_r, "NRT block length");

    FamilyFlags scheme_ff;
    std::string scheme_action, scheme_fmt = "text";
    std::size_t cap = wmas::kDefaultSchemeCap;
    auto* scheme = app.add_subcommand("scheme", "Explicit scheme construction and checks");
    scheme->add_option("action", scheme_action, "build|verify|eigen|dump")->required()->check(CLI::IsMember({"build", "verify", "eigen", "dump"}));
    scheme_ff.attach(scheme, "lee|nrt|sumrank|mixed|johnson|homogeneous|clarkliang");
    scheme->add_option("--cap", cap, "Maximum |X|");
    scheme->add_option("--format", scheme_fmt, "text|json");

    std::string code_file, code_fmt = "text";
    std::size_t code_cap = wmas::kDefaultSchemeCap;
    auto* code = app.add_subcommand("code", "Perfect-code checks");
    code->require_subcommand(1);
    auto* code_check = code->add_subcommand("check", "Check perfection and Lloyd's condition");
    code_check->add_option("--file", code_file, "code.json")->required();
    code_check->add_option("--cap", code_cap, "Maximum |X|");
    code_check->add_option("--format", code_fmt, "text|json");

    std::size_t sz_vars = 0, sz_trials = 0;
    int sz_degree = 0, sz_set = 0;
    std::uint64_t sz_seed = 0;
    auto* szcheck = app.add_subcommand("szcheck", "Random zero-count trials against e*|S|^(n-1)");
    szcheck->add_option("--vars", sz_vars, "Number of variables")->required();
    szcheck->add_option("--degree", sz_degree, "Total degree")->required();
    szcheck->add_option("--set-size", sz_set, "Size of the evaluation set S")->required();
    szcheck->add_option("--trials", sz_trials, "Number of random polynomials")->required();
    szcheck->add_option("--seed", sz_seed, "RNG seed")->required();

    std::string graph_file, order_name = "deglex";
    bool check_regular = false, check_l1 = false;
    auto* mdist = app.add_subcommand("mdist", "m-distances on an edge-colored graph");
    mdist->add_option("--graph", graph_file, "graph.json")->required();
    mdist->add_option("--order", order_name, "deglex|lex");
    mdist->add_flag("--check-regular", check_regular, "Test m-distance regularity");
    mdist->add_flag("--check-l1", check_l1, "Test L1 compatibility of the order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*certify) return run_certify(certify_ff, certify_e, regime, certify_fmt);
        if (*table) return run_table(table_id, table_fmt);
        if (*dispersion) return run_dispersion(disp_ff, e_max, disp_fmt);
        if (*threshold) return run_threshold(thr_family, thr_s, thr_a, thr_r);
        if (*scheme) return run_scheme(scheme_action, scheme_ff, cap, scheme_fmt);
        if (*code_check) return run_code_check(code_file, code_cap, code_fmt);
        if (*szcheck) return run_szcheck(sz_vars, sz_degree, sz_set, sz_trials, sz_seed);
        if (*mdist) return run_mdist(graph_file, order_name, check_regular, check_l1);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kViolated;
    }
    return kBadInput;
}
