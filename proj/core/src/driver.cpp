#include "valsemi/driver.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include "json.hpp"
#include "valsemi/oracle.hpp"
#include "valsemi/semiring.hpp"
#include "valsemi/severi.hpp"
#include "valsemi/version.hpp"

namespace valsemi {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fnv1a64_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_validation("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ordered_json json_of_vector(const ValVector& v) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_inf())
            arr.push_back("inf");
        else
            arr.push_back(v[i].value());
    }
    return arr;
}

ordered_json json_of_support(const SupportSet& s) {
    ordered_json arr = ordered_json::array();
    for (int l : s.labels()) arr.push_back(l);
    return arr;
}

ordered_json json_of_circuits(const std::vector<SupportSet>& circuits) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : circuits) arr.push_back(json_of_support(c));
    return arr;
}

ValVector parse_vector_arg(const std::string& text, std::size_t r) {
    std::string body = text;
    auto strip = [](std::string& s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    };
    strip(body);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        fail_validation("vector must look like [a,b,...] with integers or inf");
    body = body.substr(1, body.size() - 2);
    std::vector<ExtNat> coords;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        strip(tok);
        if (!tok.empty() && tok.front() == '"' && tok.back() == '"' && tok.size() >= 2)
            tok = tok.substr(1, tok.size() - 2);
        if (tok == "inf") {
            coords.push_back(ExtNat::infinity());
            continue;
        }
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                        [](char c) { return c >= '0' && c <= '9'; }))
            fail_validation("vector entry \"" + tok + "\" is not a natural or inf");
        coords.push_back(ExtNat(std::stoull(tok)));
    }
    if (coords.size() != r)
        fail_validation("vector has " + std::to_string(coords.size()) +
                        " entries, arrangement has r = " + std::to_string(r));
    return ValVector(std::move(coords));
}

// fixed-width key column plus compact values; JSON stays the machine contract
void render_table(const ordered_json& j, std::ostringstream& out,
                  const std::string& prefix) {
    constexpr int kKeyWidth = 26;
    for (const auto& [key, value] : j.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            render_table(value, out, name);
            continue;
        }
        std::string cell = value.dump();
        std::string padded = name;
        if (padded.size() < kKeyWidth) padded.resize(kKeyWidth, ' ');
        out << padded << " " << cell << "\n";
    }
}

struct LoadedInput {
    std::shared_ptr<const ToricArrangement> arr;
    std::string hash;
};

LoadedInput load_input(const RunConfig& cfg) {
    if (cfg.input_path.empty()) fail_validation("--input is required");
    const std::string bytes = read_file(cfg.input_path);
    LoadedInput in;
    in.hash = "fnv1a64:" + fnv1a64_hex(bytes);
    in.arr = std::make_shared<const ToricArrangement>(
        ToricArrangement::from_json_text(bytes, cfg.max_degree));
    return in;
}

ordered_json envelope(const RunConfig& cfg, const LoadedInput* in) {
    ordered_json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = cfg.command;
    if (in) {
        j["input"] = {{"path", cfg.input_path},
                      {"hash", in->hash},
                      {"n", in->arr->ambient_dim()},
                      {"r", in->arr->branch_count()},
                      {"field", in->arr->field().describe()}};
    }
    j["config"] = {{"max_degree", cfg.max_degree}, {"seed", cfg.seed}};
    return j;
}

EngineConfig engine_config(const RunConfig& cfg) {
    EngineConfig e;
    e.degree_cap = cfg.max_degree;
    e.seed = cfg.seed;
    return e;
}

void require_semiring_input(const ToricArrangement& arr) {
    if (!arr.is_essential()) fail_validation("arrangement is not essential");
    if (!arr.is_distinguished())
        fail_validation("semiring pipeline requires distinguished type");
}

ordered_json layer_json(const SemiringProfile& profile, uint64_t d) {
    const DegreeLayer& lay = profile.layer(d);
    ordered_json j;
    j["degree"] = d;
    j["empty"] = lay.empty;
    j["circuits"] = json_of_circuits(lay.circuits.circuits());
    ordered_json wits = ordered_json::array();
    for (const auto& w : lay.witness_forms) wits.push_back(w.to_string());
    j["witnesses"] = wits;
    return j;
}

ordered_json conductor_json(const ConductorResult& c) {
    ordered_json j;
    j["status"] = c.found ? "found" : "none";
    if (c.found)
        j["value"] = json_of_vector(c.value);
    else
        j["diagnostic"] = c.diagnostic;
    ordered_json notes = ordered_json::array();
    for (const auto& n : c.notes) notes.push_back(n);
    j["notes"] = notes;
    return j;
}

ordered_json membership_json(const SemiringProfile& profile, const ValVector& a) {
    const MembershipResult res = profile.membership(a);
    ordered_json j;
    j["vector"] = json_of_vector(a);
    j["member"] = res.member;
    if (res.member) {
        ordered_json per_degree = ordered_json::array();
        for (const auto& [d, circuits] : res.chosen_circuits) {
            ordered_json e;
            e["degree"] = d;
            e["circuits"] = json_of_circuits(circuits);
            per_degree.push_back(e);
        }
        j["certificate"] = {{"per_degree", per_degree},
                            {"polynomial", res.realizer.to_string()}};
    } else {
        j["certificate"] = {{"failing_degree", res.failing_degree},
                            {"uncovered_label", res.uncovered_label}};
    }
    return j;
}

ordered_json genus_json(const GenusResult& g) {
    ordered_json j;
    j["value"] = g.value;
    j["path_independence"] =
        g.path_checked ? (g.path_independent ? "verified" : "violated")
                       : "not_checked";
    if (g.path_checked) {
        j["member_chain_length"] = g.chain_length;
        j["lattice_path_gaps"] = {{"min", g.lattice_min_gaps},
                                  {"max", g.lattice_max_gaps}};
        if (g.lattice_min_gaps != g.lattice_max_gaps)
            j["warning"] =
                "raw gap counts vary over lattice paths; the member chain "
                "length is the path-independent invariant";
    }
    return j;
}

ordered_json generators_json(const GeneratorsResult& g) {
    ordered_json j;
    j["status"] = g.status == GeneratorsResult::Status::ok ? "ok" : "budget_exceeded";
    if (!g.note.empty()) j["note"] = g.note;
    ordered_json gens = ordered_json::array();
    for (const auto& v : g.generators) gens.push_back(json_of_vector(v));
    j["values"] = gens;
    ordered_json table = ordered_json::array();
    for (const auto& row : g.table) {
        table.push_back({{"degree", row.degree},
                         {"circuit", json_of_support(row.circuit)},
                         {"value", json_of_vector(row.value)},
                         {"maximal", row.maximal},
                         {"irreducible", row.irreducible},
                         {"generator", row.generator}});
    }
    j["classification"] = table;
    if (g.status == GeneratorsResult::Status::ok) {
        j["closure_verified"] = g.closure_verified;
        j["closure_size"] = g.closure_size;
    }
    return j;
}

ordered_json very_uniform_json(const ToricArrangement& arr,
                               SemiringProfile& profile) {
    const VeryUniformCheck check = is_very_uniform(arr);
    ordered_json j;
    j["very_uniform"] = check.very_uniform;
    j["threshold_degree"] = check.threshold_degree;
    ordered_json ranks = ordered_json::array();
    for (const auto& dr : check.checked)
        ranks.push_back({{"degree", dr.degree},
                         {"rank", dr.rank},
                         {"expected", dr.expected}});
    j["rank_checks"] = ranks;
    if (check.failing_degree) j["failing_degree"] = *check.failing_degree;

    const SymbolicGapFamily fam =
        very_uniform_closed_form(arr.ambient_dim(), arr.branch_count());
    ordered_json famj;
    famj["conductor"] = json_of_vector(
        scale_support(fam.conductor_degree, SupportSet::full(arr.branch_count())));
    ordered_json entries = ordered_json::array();
    for (const auto& e : fam.entries)
        entries.push_back(
            {{"degree", e.degree}, {"i_min", e.i_min}, {"i_max", e.i_max}});
    famj["entries"] = entries;
    j["symbolic_family"] = famj;

    const ConductorResult& cr = profile.conductor();
    j["computed_conductor"] = conductor_json(cr);
    if (cr.found) {
        const auto gaps = profile.gap_sequence();
        ordered_json gj = ordered_json::array();
        for (const auto& g : gaps) gj.push_back(json_of_vector(g));
        j["computed_gaps"] = gj;

        // side-by-side comparison on the staircase; the theorem's degree
        // range is reported, not asserted
        const auto family_members = fam.staircase_members();
        auto in_list = [](const std::vector<ValVector>& xs, const ValVector& v) {
            return std::find(xs.begin(), xs.end(), v) != xs.end();
        };
        ordered_json extra = ordered_json::array();
        for (const auto& g : gaps)
            if (!in_list(family_members, g)) extra.push_back(json_of_vector(g));
        ordered_json missing = ordered_json::array();
        for (const auto& m : family_members)
            if (!in_list(gaps, m)) missing.push_back(json_of_vector(m));
        j["discrepancies"] = {{"computed_gaps_outside_family", extra},
                              {"family_members_not_gaps", missing}};
    }
    return j;
}

std::string render(const RunConfig& cfg, const ordered_json& j) {
    if (cfg.format == "table") {
        std::ostringstream out;
        render_table(j, out, "");
        return out.str();
    }
    return j.dump(2) + "\n";
}

RunResult finish(const RunConfig& cfg, const ordered_json& j, int code = 0) {
    return {code, render(cfg, j)};
}

RunResult cmd_analyze(const RunConfig& cfg) {
    LoadedInput in = load_input(cfg);
    require_semiring_input(*in.arr);
    SemiringProfile profile(in.arr, engine_config(cfg));

    ordered_json j = envelope(cfg, &in);

    RankMatroid degree_one(in.arr->coefficient_grid().transpose());
    ordered_json flags;
    flags["essential"] = true;
    flags["distinguished"] = true;
    flags["line_arrangement"] = in.arr->is_line_arrangement();
    flags["simple"] = degree_one.is_simple();
    flags["uniform"] = degree_one.is_uniform();
    if (in.arr->is_line_arrangement())
        flags["very_uniform"] = is_very_uniform(*in.arr).very_uniform;
    else
        flags["very_uniform"] = "not_applicable";
    j["flags"] = flags;

    const ConductorResult& cr = profile.conductor();
    j["conductor"] = conductor_json(cr);

    if (cr.found) {
        const uint64_t dstar = profile.stabilization_degree();
        j["stabilization_degree"] = dstar;
        ordered_json layers = ordered_json::array();
        for (uint64_t d = 0; d <= dstar; ++d) layers.push_back(layer_json(profile, d));
        j["layers"] = layers;

        const auto gaps = profile.gap_sequence();
        ordered_json gj = ordered_json::array();
        for (const auto& g : gaps) gj.push_back(json_of_vector(g));
        j["gap_sequence"] = gj;

        j["genus"] = genus_json(profile.genus());

        j["generators"] = generators_json(profile.generators());
    }
    return finish(cfg, j);
}

RunResult cmd_layer(const RunConfig& cfg) {
    LoadedInput in = load_input(cfg);
    require_semiring_input(*in.arr);
    SemiringProfile profile(in.arr, engine_config(cfg));
    ordered_json j = envelope(cfg, &in);
    j["layer"] = layer_json(profile, cfg.layer_degree);
    return finish(cfg, j);
}

RunResult cmd_membership(const RunConfig& cfg) {
    LoadedInput in = load_input(cfg);
    require_semiring_input(*in.arr);
    SemiringProfile profile(in.arr, engine_config(cfg));
    const ValVector a = parse_vector_arg(cfg.vector_arg, in.arr->branch_count());
    ordered_json j = envelope(cfg, &in);
    j["membership"] = membership_json(profile, a);
    return finish(cfg, j);
}

RunResult cmd_conductor(const RunConfig& cfg) {
    LoadedInput in = load_input(cfg);
    require_semiring_input(*in.arr);
    SemiringProfile profile(in.arr, engine_config(cfg));
    ordered_json j = envelope(cfg, &in);
    j["conductor"] = conductor_json(profile.conductor());
    return finish(cfg, j);
}

RunResult cmd_gaps(const RunConfig& cfg) {
    LoadedInput in = load_input(cfg);
    require_semiring_input(*in.arr);
    SemiringProfile profile(in.arr, engine_config(cfg));
    ordered_json j = envelope(cfg, &in);
    j["conductor"] = conductor_json(profile.conductor());
    const auto gaps = profile.gap_sequence();
    ordered_json gj = ordered_json::array();
    for (const auto& g : gaps) gj.push_back(json_of_vector(g));
    j["gap_sequence"] = gj;
    return finish(cfg, j);
}

RunResult cmd_genus(const RunConfig& cfg) {
    LoadedInput in = load_input(cfg);
    require_semiring_input(*in.arr);
    SemiringProfile profile(in.arr, engine_config(cfg));
    ordered_json j = envelope(cfg, &in);
    j["genus"] = genus_json(profile.genus());
    return finish(cfg, j);
}

RunResult cmd_very_uniform(const RunConfig& cfg) {
    LoadedInput in = load_input(cfg);
    require_semiring_input(*in.arr);
    SemiringProfile profile(in.arr, engine_config(cfg));
    ordered_json j = envelope(cfg, &in);
    j["very_uniform"] = very_uniform_json(*in.arr, profile);
    return finish(cfg, j);
}

RunResult cmd_severi(const RunConfig& cfg) {
    SeveriQuery q{cfg.severi_n, cfg.severi_r, cfg.severi_l, cfg.severi_d};
    const int64_t bound = codim_upper_bound(q);
    ordered_json j = envelope(cfg, nullptr);
    j["query"] = {{"n", q.n}, {"r", q.r}, {"l", q.l}, {"d", q.d}};
    j["codim_upper_bound"] = bound;
    if (!q.degree_condition_met())
        j["warning"] = "validity condition d > r not met; the bound's derivation needs it";
    if (q.l == 2) {
        const int64_t g = q.r * (q.r - 1) / 2;
        const int64_t nodal = nodal_codim(q.n, g);
        j["planar_genus"] = g;
        j["nodal_codim"] = nodal;
        j["strictly_less"] = bound < nodal;
        j["regime"] = bound < nodal ? "reducible regime" : "no excess detected";
    }
    return finish(cfg, j);
}

RunResult cmd_severi_threshold(const RunConfig& cfg) {
    const ThresholdResult t = reducibility_threshold(cfg.severi_n);
    ordered_json j = envelope(cfg, nullptr);
    j["n"] = t.n;
    j["threshold_r"] = t.r;
    j["bound_at_threshold"] = t.bound_at_r;
    j["nodal_at_threshold"] = t.nodal_at_r;
    ordered_json rows = ordered_json::array();
    for (int64_t r = 3; r <= t.r + 3; ++r) {
        const int64_t bound = (r - 2) * (t.n - 2) + (r - 1) * t.n - r;
        const int64_t nodal = (t.n - 2) * (r * (r - 1) / 2);
        rows.push_back({{"r", r},
                        {"bound", bound},
                        {"nodal", nodal},
                        {"strictly_less", bound < nodal}});
    }
    j["table"] = rows;
    return finish(cfg, j);
}

RunResult cmd_oracle_check(const RunConfig& cfg) {
    LoadedInput in = load_input(cfg);
    require_semiring_input(*in.arr);
    SemiringProfile profile(in.arr, engine_config(cfg));
    OracleConfig ocfg;
    ocfg.seed = cfg.seed;
    ocfg.max_degree = cfg.max_degree;

    if (cfg.inject_fault) profile.corrupt_layer_for_testing(1);

    ordered_json j = envelope(cfg, &in);
    ordered_json checks = ordered_json::array();
    bool all_pass = true;
    ordered_json counterexample;

    const ConductorResult& cr = profile.conductor();
    if (!cr.found)
        fail_budget("oracle-check requires a conductor: " + cr.diagnostic);
    const ValVector& c = cr.value;
    const std::size_t r = in.arr->branch_count();
    const uint64_t dstar = profile.stabilization_degree();

    // 1. layer circuits against the minimal achievable supports
    for (uint64_t d = 0; d <= dstar + 1 && all_pass; ++d) {
        const auto achievable = achievable_supports_exhaustive(*in.arr, d, ocfg);
        std::vector<SupportSet> minimal;
        for (const auto& s : achievable) {
            bool is_min = true;
            for (const auto& t : achievable)
                if (t != s && t.subset_of(s)) {
                    is_min = false;
                    break;
                }
            if (is_min) minimal.push_back(s);
        }
        std::sort(minimal.begin(), minimal.end(), SupportSet::card_lex_less);
        const bool same = minimal == profile.layer(d).circuits.circuits();
        checks.push_back({{"name", "layer_circuits_vs_exhaustive"},
                          {"degree", d},
                          {"status", same ? "pass" : "fail"}});
        if (!same) {
            all_pass = false;
            counterexample = {{"kind", "layer"},
                              {"degree", d},
                              {"engine", json_of_circuits(profile.layer(d).circuits.circuits())},
                              {"oracle", json_of_circuits(minimal)}};
        }
    }

    // 2. membership agreement on the box [0, c+1]
    if (all_pass) {
        AchievableCache cache;
        uint64_t total = 1;
        bool over = false;
        std::vector<uint64_t> dims(r);
        for (std::size_t i = 0; i < r; ++i) {
            dims[i] = c[i].value() + 2;
            if (total > ocfg.box_budget / dims[i]) {
                over = true;
                break;
            }
            total *= dims[i];
        }
        if (over) fail_budget("oracle-check box exceeds budget");
        std::vector<uint64_t> idx(r, 0);
        std::size_t disagreements = 0;
        for (uint64_t flat = 0; flat < total; ++flat) {
            std::vector<ExtNat> v(r);
            for (std::size_t i = 0; i < r; ++i) v[i] = ExtNat(idx[i]);
            ValVector a(std::move(v));
            const bool engine = profile.contains(a);
            const bool oracle = membership_exhaustive(*in.arr, a, ocfg, cache);
            if (engine != oracle) {
                ++disagreements;
                if (all_pass) {
                    all_pass = false;
                    counterexample = {{"kind", "membership"},
                                      {"vector", json_of_vector(a)},
                                      {"engine", engine},
                                      {"oracle", oracle}};
                }
                break;
            }
            std::size_t k = 0;
            while (k < r) {
                if (++idx[k] < dims[k]) break;
                idx[k] = 0;
                ++k;
            }
        }
        checks.push_back({{"name", "membership_box_agreement"},
                          {"vectors", total},
                          {"status", disagreements == 0 ? "pass" : "fail"}});
    }

    // 3. sampled mixed-infinity probes
    if (all_pass) {
        AchievableCache cache;
        OracleRng rng(cfg.seed + 1);
        uint64_t cmax = 0;
        for (std::size_t i = 0; i < r; ++i) cmax = std::max(cmax, c[i].value());
        std::size_t disagreements = 0;
        for (std::size_t k = 0; k < ocfg.sample_count; ++k) {
            std::vector<ExtNat> v(r);
            for (std::size_t i = 0; i < r; ++i) {
                const uint64_t roll = rng.below(cmax + 3);
                v[i] = roll == cmax + 2 ? ExtNat::infinity() : ExtNat(roll);
            }
            ValVector a(std::move(v));
            const bool engine = profile.contains(a);
            const bool oracle = membership_exhaustive(*in.arr, a, ocfg, cache);
            if (engine != oracle) {
                ++disagreements;
                all_pass = false;
                counterexample = {{"kind", "membership"},
                                  {"vector", json_of_vector(a)},
                                  {"engine", engine},
                                  {"oracle", oracle}};
                break;
            }
        }
        checks.push_back({{"name", "membership_mixed_infinity_samples"},
                          {"samples", ocfg.sample_count},
                          {"status", disagreements == 0 ? "pass" : "fail"}});
    }

    // 4. positive membership certificates re-validated through the valuation
    if (all_pass) {
        std::size_t validated = 0;
        bool ok = true;
        std::vector<uint64_t> idx(r, 0);
        uint64_t total = 1;
        for (std::size_t i = 0; i < r; ++i) total *= c[i].value() + 2;
        for (uint64_t flat = 0; flat < total && ok; ++flat) {
            std::vector<ExtNat> v(r);
            for (std::size_t i = 0; i < r; ++i) v[i] = ExtNat(idx[i]);
            ValVector a(std::move(v));
            if (profile.contains(a)) {
                // membership() asserts valuation(realizer) == a internally
                const MembershipResult m = profile.membership(a);
                ok = m.member;
                ++validated;
            }
            std::size_t k = 0;
            while (k < r) {
                if (++idx[k] <= c[k].value() + 1) break;
                idx[k] = 0;
                ++k;
            }
        }
        checks.push_back({{"name", "certificates_revalidated"},
                          {"count", validated},
                          {"status", ok ? "pass" : "fail"}});
        if (!ok) all_pass = false;
    }

    j["checks"] = checks;
    j["result"] = all_pass ? "pass" : "fail";
    if (!all_pass) j["counterexample"] = counterexample;
    return finish(cfg, j, all_pass ? 0 : 4);
}

}  // namespace

RunResult run_command(const RunConfig& cfg) {
    try {
        if (cfg.command == "analyze") return cmd_analyze(cfg);
        if (cfg.command == "layer") return cmd_layer(cfg);
        if (cfg.command == "membership") return cmd_membership(cfg);
        if (cfg.command == "conductor") return cmd_conductor(cfg);
        if (cfg.command == "gaps") return cmd_gaps(cfg);
        if (cfg.command == "genus") return cmd_genus(cfg);
        if (cfg.command == "very-uniform") return cmd_very_uniform(cfg);
        if (cfg.command == "severi") return cmd_severi(cfg);
        if (cfg.command == "severi-threshold") return cmd_severi_threshold(cfg);
        if (cfg.command == "oracle-check") return cmd_oracle_check(cfg);
        fail_validation("unknown command: " + cfg.command);
    } catch (const Error& e) {
        switch (e.kind()) {
            case ErrorKind::validation:
                return {2, std::string("error: ") + e.what() + "\n"};
            case ErrorKind::budget:
                return {3, std::string("error: ") + e.what() + "\n"};
            case ErrorKind::internal:
                return {1, std::string("internal error: ") + e.what() + "\n"};
        }
        return {1, "unreachable\n"};
    }
}

}  // namespace valsemi
