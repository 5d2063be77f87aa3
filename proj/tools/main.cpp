#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dilworth/bounds.hpp"
#include "dilworth/certificates.hpp"
#include "dilworth/digraph.hpp"
#include "dilworth/errors.hpp"
#include "dilworth/exact_params.hpp"
#include "dilworth/extremal.hpp"
#include "dilworth/families.hpp"
#include "dilworth/fractional.hpp"
#include "dilworth/graph_io.hpp"
#include "dilworth/products.hpp"
#include "dilworth/protocol.hpp"
#include "dilworth/serialize.hpp"

using namespace dilworth;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNotOptimal = 3, kInternal = 4 };

struct Limits {
    std::uint64_t vertices = kDefaultVertexLimit;
    std::uint64_t enumeration = kDefaultEnumerationLimit;
    std::uint64_t exhaustive = kDefaultVertexLimit;
    int solver_vertices = 1024;
    std::uint64_t lp_sets = 20'000;
};

struct Config {
    std::optional<double> budget;
    std::vector<std::string> limit_args;
    std::string format;
    std::string output;
    bool require_optimal = false;

    Limits limits;
    bool saw_non_optimal = false;

    Budget make_budget() const { return budget ? Budget(*budget) : Budget(); }
    double budget_seconds() const { return budget ? *budget : Budget::default_seconds(); }

    SolverOptions solver() const {
        SolverOptions o;
        o.vertex_limit = limits.solver_vertices;
        o.enumeration_limit = limits.enumeration;
        o.lp_set_limit = limits.lp_sets;
        return o;
    }

    void note_optimal(bool optimal) { saw_non_optimal = saw_non_optimal || !optimal; }
};

void parse_limits(Config& cfg) {
    for (const auto& arg : cfg.limit_args) {
        std::stringstream ss(arg);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) {
                throw InvalidInput("--limits expects key=value, got '" + item + "'");
            }
            const std::string key = item.substr(0, eq);
            long long val = 0;
            try {
                val = std::stoll(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw InvalidInput("--limits value for '" + key + "' is not an integer");
            }
            if (val <= 0) {
                throw InvalidInput("--limits value for '" + key + "' must be positive");
            }
            const auto u = static_cast<std::uint64_t>(val);
            if (key == "vertices") {
                cfg.limits.vertices = u;
            } else if (key == "enumeration") {
                cfg.limits.enumeration = u;
            } else if (key == "exhaustive") {
                cfg.limits.exhaustive = u;
            } else if (key == "solver_vertices") {
                cfg.limits.solver_vertices = static_cast<int>(val);
            } else if (key == "lp_sets") {
                cfg.limits.lp_sets = u;
            } else {
                throw InvalidInput("unknown limit '" + key +
                                   "' (vertices, enumeration, exhaustive, solver_vertices, lp_sets)");
            }
        }
    }
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) {
                throw InvalidInput("cannot open '" + path + "' for writing");
            }
        }
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

Digraph load_graph(const std::string& path) {
    if (path.empty() || path == "-") {
        return read_graph(std::cin);
    }
    return read_graph_file(path);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string format_or(const Config& cfg, const std::string& fallback) {
    return cfg.format.empty() ? fallback : cfg.format;
}

void emit_graph(Config& cfg, const Digraph& g) {
    Output out(cfg.output);
    if (format_or(cfg, "text") == "json") {
        out.os() << graph_to_json(g).dump(2) << '\n';
    } else {
        out.os() << to_graph_text(g);
    }
}

void emit_json(Config& cfg, const json& j) {
    Output out(cfg.output);
    out.os() << j.dump(2) << '\n';
}

// ---- parameters ----------------------------------------------------------

const std::vector<std::string> kParamNames = {"alpha", "omega_s", "omega_tr", "a", "chi", "chidir"};

std::string bracket_text(int lower, int upper, bool optimal) {
    if (optimal) {
        return "optimal";
    }
    return "budget exhausted, in [" + std::to_string(lower) + ", " + std::to_string(upper) + "]";
}

int run_params(Config& cfg, const std::string& path, bool all, std::vector<std::string> names) {
    const Digraph g = load_graph(path);
    if (all || names.empty()) {
        names = kParamNames;
    }
    const std::string hash = graph_hash(g);
    json j = json::object();
    std::ostringstream text;
    for (const auto& name : names) {
        const Budget budget = cfg.make_budget();
        const SolverOptions so = cfg.solver();
        json r;
        int value = 0;
        int lo = 0;
        int hi = 0;
        bool opt = false;
        auto take = [&](const auto& res) {
            r = result_json(res, hash);
            value = res.value;
            lo = res.lower;
            hi = res.upper;
            opt = res.optimal;
        };
        if (name == "alpha") {
            take(independence_number(g, budget, so));
        } else if (name == "omega_s") {
            take(symmetric_clique_number(g, budget, so));
        } else if (name == "omega_tr") {
            take(transitive_clique_number(g, budget, so));
        } else if (name == "a") {
            take(acyclicity_number(g, budget, so));
        } else if (name == "chi") {
            take(chromatic_number(g, budget, so));
        } else if (name == "chidir") {
            take(dichromatic_number(g, budget, so));
        } else {
            throw InvalidInput("unknown parameter '" + name + "' (alpha, omega_s, omega_tr, a, chi, chidir)");
        }
        cfg.note_optimal(opt);
        j[name] = r;
        text << name << " = " << value << "  (" << bracket_text(lo, hi, opt) << ")\n";
    }
    Output out(cfg.output);
    if (format_or(cfg, "text") == "json") {
        out.os() << j.dump(2) << '\n';
    } else {
        out.os() << text.str();
    }
    return kOk;
}

int run_frac(Config& cfg, const std::string& path, const std::string& kind) {
    const Digraph g = load_graph(path);
    std::optional<SetSystem> sys;
    if (kind == "dichromatic") {
        sys.emplace(maximal_acyclic_sets(g, cfg.limits.enumeration));
    } else if (kind == "chromatic") {
        sys.emplace(maximal_independent_sets(g, cfg.limits.enumeration));
    } else {
        throw InvalidInput("--kind must be dichromatic or chromatic");
    }
    const LPSolution sol = fractional_cover_number(*sys);
    json j = to_json(*sys, sol);
    j["kind"] = kind;
    j["graph_hash"] = graph_hash(g);
    j["verified"] = verify_lp_solution(*sys, sol);
    emit_json(cfg, j);
    return kOk;
}

int run_rate_bounds(Config& cfg, const std::string& path, int t_max) {
    const Digraph g = load_graph(path);
    ReportOptions opts;
    opts.t_max = t_max;
    opts.cell_seconds = cfg.budget_seconds();
    opts.vertex_limit = cfg.limits.vertices;
    opts.enumeration_limit = std::min<std::uint64_t>(cfg.limits.enumeration, 200'000);
    opts.solver = cfg.solver();
    const BoundReport rep = dilworth_bounds(g, opts, path.empty() ? "-" : path);
    for (const auto& row : rep.per_t) {
        cfg.note_optimal((!row.chi.computed || row.chi.optimal) && (!row.chidir.computed || row.chidir.optimal));
    }
    Output out(cfg.output);
    if (format_or(cfg, "json") == "csv") {
        out.os() << report_csv(rep);
    } else {
        out.os() << to_json(rep).dump(2) << '\n';
    }
    return kOk;
}

int run_verify(Config& cfg, const std::string& graph_path, const std::string& cert_path) {
    const Digraph g = load_graph(graph_path);
    const CertificateFile cf = parse_certificate(load_json(cert_path));
    json j;
    j["kind"] = cf.kind;
    const std::string hash = graph_hash(g);
    Verdict verdict = std::visit([&](const auto& c) { return verify_certificate(g, c); }, cf.certificate);
    int size = 0;
    if (const auto* c = std::get_if<Coloring>(&cf.certificate)) {
        size = c->distinct();
    } else if (const auto* c = std::get_if<AcyclicCover>(&cf.certificate)) {
        size = c->size();
    } else {
        size = static_cast<int>(std::get<SubsetCertificate>(cf.certificate).vertices.size());
    }
    if (verdict && !cf.graph_hash.empty() && cf.graph_hash != hash) {
        verdict = Verdict::fail("certificate was issued for graph " + cf.graph_hash + ", input hashes to " + hash);
    }
    if (verdict && cf.value && *cf.value != size) {
        verdict = Verdict::fail("certificate claims value " + std::to_string(*cf.value) + " but its witness has " +
                                std::to_string(size));
    }
    j["ok"] = verdict.ok;
    j["value"] = size;
    j["graph_hash"] = hash;
    if (!verdict) {
        j["violation"] = verdict.violation;
    }
    emit_json(cfg, j);
    return verdict ? kOk : kVerifyFailed;
}

int run_realizable(Config& cfg, const std::string& path, int exhaustive_limit) {
    const Digraph g = load_graph(path);
    const RealizabilityResult r = is_closure_realizable(g, exhaustive_limit);
    json j;
    j["answer"] = r.answer == Realizability::yes ? "yes" : r.answer == Realizability::no ? "no" : "unknown";
    j["reason"] = r.reason;
    j["witness"] = r.witness ? graph_to_json(*r.witness) : json(nullptr);
    emit_json(cfg, j);
    return kOk;
}

int run_compound(Config& cfg, const std::vector<std::string>& paths, int t_max) {
    if (paths.size() < 2) {
        throw InvalidInput("compound needs at least two graphs");
    }
    std::vector<Digraph> family;
    for (const auto& p : paths) {
        family.push_back(load_graph(p));
    }
    ReportOptions opts;
    opts.t_max = t_max;
    opts.cell_seconds = cfg.budget_seconds();
    opts.vertex_limit = cfg.limits.vertices;
    opts.solver = cfg.solver();
    const CompoundReport rep = compound_report(family, opts);
    json j;
    j["rows"] = json::array();
    for (const auto& row : rep.rows) {
        json jr = {{"t", row.t}, {"union_chi", to_json(row.union_chi)}, {"sane", row.sane}};
        jr["member_chi"] = json::array();
        for (const auto& c : row.member_chi) {
            jr["member_chi"].push_back(to_json(c));
            cfg.note_optimal(c.optimal);
        }
        cfg.note_optimal(row.union_chi.optimal);
        j["rows"].push_back(jr);
    }
    j["member_rates_log2"] = json::array();
    for (const auto& [lo, hi] : rep.member_rates) {
        j["member_rates_log2"].push_back({{"lower", display(lo)}, {"upper", display(hi)}});
    }
    j["min_member_upper_log2"] = display(rep.min_member_upper);
    j["max_member_lower_log2"] = display(rep.max_member_lower);
    emit_json(cfg, j);
    return std::all_of(rep.rows.begin(), rep.rows.end(), [](const CompoundRow& r) { return r.sane; }) ? kOk
                                                                                                     : kVerifyFailed;
}

json seq_json(const Sequence& s) { return json(s); }

int run_simulate(Config& cfg, const std::string& variant_name, const std::string& graph_path, int t,
                 bool exhaustive, std::optional<std::uint64_t> seed, const std::string& coloring_path, int samples,
                 bool allow_improper) {
    const ProtocolVariant variant = parse_variant(variant_name);
    const ChannelModel ch{load_graph(graph_path)};
    Coloring coloring;
    if (!coloring_path.empty()) {
        const CertificateFile cf = parse_certificate(load_json(coloring_path));
        const auto* c = std::get_if<Coloring>(&cf.certificate);
        if (c == nullptr) {
            throw MalformedCertificate("simulate needs a coloring certificate, got '" + cf.kind + "'");
        }
        coloring = *c;
    } else {
        const Digraph base = protocol_graph(ch, variant);
        const ColoringResult r = chromatic_number(and_power(base, t, cfg.limits.vertices), cfg.make_budget());
        cfg.note_optimal(r.optimal);
        coloring = r.certificate;
    }
    const ColoringCheck mode = allow_improper ? ColoringCheck::allow_improper : ColoringCheck::strict;
    if (exhaustive || !seed) {
        const ProtocolVerdict v = variant == ProtocolVariant::confirm
                                      ? confirm_protocol_check(ch, t, coloring, mode, cfg.limits.exhaustive)
                                      : decode_protocol_check(ch, t, coloring, mode, cfg.limits.exhaustive);
        json j = {{"variant", variant_name},
                  {"t", t},
                  {"colors", coloring.distinct()},
                  {"bits", bits_for(coloring.distinct())},
                  {"pass", v.pass},
                  {"coloring_proper", v.coloring_proper},
                  {"pairs_checked", v.pairs_checked}};
        if (v.counterexample) {
            json cx = {{"sent", seq_json(v.counterexample->sent)},
                       {"received", seq_json(v.counterexample->received)},
                       {"reason", v.counterexample->reason}};
            if (variant == ProtocolVariant::decode) {
                cx["candidates"] = v.counterexample->candidates;
            }
            j["counterexample"] = cx;
        }
        emit_json(cfg, j);
        return v.pass ? kOk : kVerifyFailed;
    }
    if (auto conflict = power_coloring_conflict(protocol_graph(ch, variant), t, coloring); conflict && !allow_improper) {
        throw UnverifiedCertificate("coloring is not proper on the protocol power");
    }
    Output out(cfg.output);
    for (const auto& tr : simulate_transcripts(ch, t, coloring, variant, *seed, samples)) {
        json j = {{"sent", seq_json(tr.sent)}, {"received", seq_json(tr.received)}, {"noiseless_msg", tr.noiseless_msg}};
        if (variant == ProtocolVariant::confirm) {
            j["verdict"] = tr.confirmed ? "confirm" : "reject";
        } else {
            j["decoded"] = tr.decoded;
        }
        out.os() << j.dump() << '\n';
    }
    return kOk;
}

int run_extremal(Config& cfg, const std::string& what, int t) {
    if (what == "antichains") {
        const auto cover = antichain_cover(t);
        json j = {{"t", t}, {"count", cover.size()}, {"verified", verify_antichain_cover(t, cover)}};
        j["antichains"] = json::array();
        for (const auto& level : cover) {
            json lv = json::array();
            for (std::uint32_t s : level) {
                json members = json::array();
                for (int i = 0; i < t; ++i) {
                    if ((s >> i) & 1U) {
                        members.push_back(i + 1);
                    }
                }
                lv.push_back(members);
            }
            j["antichains"].push_back(lv);
        }
        emit_json(cfg, j);
        return kOk;
    }
    if (what == "bollobas") {
        const BollobasReport r = bollobas_cover_bounds(t, cfg.make_budget());
        json j = {{"t", t},
                  {"lower", r.lower},
                  {"constructive", r.constructive},
                  {"constructive_cap", r.constructive_cap},
                  {"constructive_proper", r.constructive_proper},
                  {"exact", r.exact ? json(*r.exact) : json(nullptr)},
                  {"families_cross_intersecting", r.families_cross_intersecting},
                  {"max_bollobas_sum", r.max_bollobas_sum.str()}};
        const int best = r.exact ? *r.exact : r.constructive;
        if (t > 0) {
            j["rate_log2"] = {{"lower", display(std::log2(static_cast<double>(r.lower)) / t)},
                              {"upper", display(std::log2(static_cast<double>(best)) / t)}};
        }
        j["families"] = json::array();
        for (const auto& fam : r.families) {
            json jf = json::array();
            for (const auto& p : fam) {
                jf.push_back(json::array({p.a, p.b}));
            }
            j["families"].push_back(jf);
        }
        if (r.solver_ran) {
            cfg.note_optimal(r.solved.optimal);
        }
        emit_json(cfg, j);
        return r.families_cross_intersecting && r.constructive_proper ? kOk : kVerifyFailed;
    }
    throw InvalidInput("extremal expects 'antichains' or 'bollobas'");
}

// Tournament on n vertices from a bit mask over pairs (i<j): bit set means i -> j.
Digraph tournament_from_mask(int n, std::uint32_t mask) {
    Digraph::Builder b(n);
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if ((mask >> bit) & 1U) {
                b.add_edge(i, j);
            } else {
                b.add_edge(j, i);
            }
        }
    }
    return std::move(b).build();
}

std::uint32_t canonical_tournament(int n, std::uint32_t mask, const std::vector<std::vector<int>>& perms) {
    const Digraph g = tournament_from_mask(n, mask);
    std::uint32_t best = mask;
    for (const auto& p : perms) {
        std::uint32_t m = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j, ++bit) {
                if (g.has_edge(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)])) {
                    m |= std::uint32_t{1} << bit;
                }
            }
        }
        best = std::min(best, m);
    }
    return best;
}

int run_scan(Config& cfg, int n, int t_max) {
    if (n < 1 || n > 6) {
        throw InvalidInput("scan-tournaments supports 1 <= n <= 6");
    }
    const int pairs = n * (n - 1) / 2;
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::set<std::uint32_t> classes;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
        classes.insert(canonical_tournament(n, mask, perms));
    }
    ReportOptions opts;
    opts.t_max = t_max;
    opts.cell_seconds = cfg.budget_seconds();
    opts.vertex_limit = cfg.limits.vertices;
    opts.solver = cfg.solver();
    json j = {{"n", n}, {"classes", classes.size()}, {"exploratory", true}};
    j["tournaments"] = json::array();
    for (std::uint32_t mask : classes) {
        const Digraph g = tournament_from_mask(n, mask);
        const BoundReport rep = dilworth_bounds(g, opts);
        const Rational chidirf = fractional_dichromatic(g).value;
        const RootValue best_up = rep.best_upper().value;
        j["tournaments"].push_back({{"edges", g.edges()},
                                    {"chidirf", chidirf.str()},
                                    {"best_lower", to_json(rep.best_lower().value)},
                                    {"best_upper", to_json(best_up)},
                                    {"pinned", rep.pinned.has_value()},
                                    {"upper_below_chidirf", best_up < RootValue::of(chidirf)}});
    }
    emit_json(cfg, j);
    return kOk;
}

json error_json(const std::string& type, const std::string& message) {
    return {{"error", type}, {"message", message}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dilworth rate toolkit: digraph powers, exact parameters, rate bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--budget", cfg.budget, "Seconds per solver call (default: DILWORTH_BUDGET or 60)")
        ->check(CLI::PositiveNumber);
    app.add_option("--limits", cfg.limit_args,
                   "Cap overrides key=value: vertices, enumeration, exhaustive, solver_vertices, lp_sets");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("-o,--output", cfg.output, "Write results here instead of stdout");
    app.add_flag("--require-optimal", cfg.require_optimal, "Exit 3 when a solver stops short of optimality");

    std::function<int()> action;

    auto* gen = app.add_subcommand("gen", "Generate a named digraph family");
    std::string fam;
    int fam_param = 0;
    gen->add_option("family", fam, "C, S, T, A5, A5c, L, F, K, E, TT, U")->required();
    gen->add_option("param", fam_param, "Size parameter");
    gen->callback([&] { action = [&] { emit_graph(cfg, generate(parse_family(fam, fam_param))); return int(kOk); }; });

    auto* info = app.add_subcommand("info", "Basic facts about a digraph");
    std::string graph_path;
    info->add_option("graph", graph_path, "Graph file ('-' or omitted: stdin)");
    info->callback([&] {
        action = [&] {
            const Digraph g = load_graph(graph_path);
            json j = {{"n", g.n()},
                      {"edges", g.edge_count()},
                      {"symmetric", g.is_symmetric()},
                      {"oriented", g.is_oriented()},
                      {"max_out_degree", g.max_out_degree()},
                      {"max_in_degree", g.max_in_degree()},
                      {"graph_hash", graph_hash(g)}};
            j["vertex_transitive"] = g.n() <= kDefaultTransitivityLimit ? json(is_vertex_transitive(g)) : json(nullptr);
            emit_json(cfg, j);
            return int(kOk);
        };
    });

    auto* tr = app.add_subcommand("transform", "Complement, reverse or symmetrize");
    std::string kind;
    tr->add_option("graph", graph_path);
    tr->add_option("--kind", kind)->required()->check(CLI::IsMember({"complement", "reverse", "symmetrize"}));
    tr->callback([&] {
        action = [&] {
            const Transform k = kind == "complement" ? Transform::complement
                                : kind == "reverse"  ? Transform::reverse
                                                     : Transform::symmetrize;
            emit_graph(cfg, transform(load_graph(graph_path), k));
            return int(kOk);
        };
    });

    auto* pw = app.add_subcommand("power", "AND or OR power");
    int t = 1;
    std::string op = "and";
    std::string header_path;
    pw->add_option("graph", graph_path);
    pw->add_option("-t", t, "Exponent")->required()->check(CLI::NonNegativeNumber);
    pw->add_option("--op", op)->check(CLI::IsMember({"and", "or"}));
    pw->add_option("--header", header_path, "Write the vertex-numbering header here");
    pw->callback([&] {
        action = [&] {
            const Digraph g = load_graph(graph_path);
            const ProductOp pop = op == "and" ? ProductOp::and_op : ProductOp::or_op;
            emit_graph(cfg, power(g, t, pop, cfg.limits.vertices));
            std::string hp = header_path;
            if (hp.empty() && !cfg.output.empty() && cfg.output != "-") {
                hp = cfg.output + ".header.json";
            }
            if (!hp.empty()) {
                std::ofstream(hp) << power_header(g.n(), t, pop).dump(2) << '\n';
            }
            return int(kOk);
        };
    });

    auto* params = app.add_subcommand("params", "Exact integer parameters with certificates");
    bool all = false;
    std::vector<std::string> names;
    params->add_option("graph", graph_path);
    params->add_flag("--all", all, "Every parameter");
    params->add_option("--param", names, "alpha, omega_s, omega_tr, a, chi, chidir");
    params->callback([&] { action = [&] { return run_params(cfg, graph_path, all, names); }; });

    auto* frac = app.add_subcommand("frac", "Fractional chromatic or dichromatic number");
    std::string frac_kind = "dichromatic";
    frac->add_option("graph", graph_path);
    frac->add_option("--kind", frac_kind)->check(CLI::IsMember({"dichromatic", "chromatic"}));
    frac->callback([&] { action = [&] { return run_frac(cfg, graph_path, frac_kind); }; });

    auto* rb = app.add_subcommand("rate-bounds", "Dilworth rate bound report");
    int t_max = 3;
    rb->add_option("graph", graph_path);
    rb->add_option("--tmax", t_max, "Largest power examined")->check(CLI::NonNegativeNumber);
    rb->add_option("--budget", cfg.budget, "Seconds per report cell")->check(CLI::PositiveNumber);
    rb->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
    rb->callback([&] { action = [&] { return run_rate_bounds(cfg, graph_path, t_max); }; });

    auto* vc = app.add_subcommand("verify-cover", "Check a certificate against a graph");
    std::string cert_path;
    vc->add_option("graph", graph_path)->required();
    vc->add_option("certificate", cert_path)->required();
    vc->callback([&] { action = [&] { return run_verify(cfg, graph_path, cert_path); }; });

    auto* cl = app.add_subcommand("closure", "Closure graph");
    cl->add_option("graph", graph_path);
    cl->callback([&] { action = [&] { emit_graph(cfg, closure_graph(load_graph(graph_path))); return int(kOk); }; });

    auto* gd = app.add_subcommand("gadget", "Digraph whose closure restricts to a symmetric input");
    gd->add_option("graph", graph_path);
    gd->callback([&] { action = [&] { emit_graph(cfg, closure_gadget(load_graph(graph_path))); return int(kOk); }; });

    auto* rz = app.add_subcommand("realizable", "Is the graph the closure of some digraph on its vertices?");
    int exhaustive_limit = 5;
    rz->add_option("graph", graph_path);
    rz->add_option("--exhaustive-limit", exhaustive_limit, "Brute-force vertex bound")->check(CLI::PositiveNumber);
    rz->callback([&] { action = [&] { return run_realizable(cfg, graph_path, exhaustive_limit); }; });

    auto* cp = app.add_subcommand("compound", "Chromatic numbers of unions of powers");
    std::vector<std::string> paths;
    cp->add_option("graphs", paths)->required();
    cp->add_option("--tmax", t_max)->check(CLI::NonNegativeNumber);
    cp->callback([&] { action = [&] { return run_compound(cfg, paths, t_max); }; });

    auto* sim = app.add_subcommand("simulate", "Run a protocol against the channel");
    std::string variant = "confirm";
    std::string sim_graph = "-";
    bool exhaustive = false;
    std::optional<std::uint64_t> seed;
    std::string coloring_path;
    int samples = 10;
    bool allow_improper = false;
    sim->add_option("--variant", variant)->check(CLI::IsMember({"confirm", "decode"}));
    sim->add_option("--graph", sim_graph, "Channel confusion digraph");
    sim->add_option("-t", t)->required()->check(CLI::NonNegativeNumber);
    auto* ex_flag = sim->add_flag("--exhaustive", exhaustive, "Every input and channel behaviour (default)");
    sim->add_option("--seed", seed, "Sample transcripts with this seed")->excludes(ex_flag);
    sim->add_option("--coloring", coloring_path, "Coloring certificate (default: an optimal one)");
    sim->add_option("--samples", samples)->check(CLI::PositiveNumber);
    sim->add_flag("--allow-improper", allow_improper, "Run improper colorings to expose their failure");
    sim->callback([&] {
        action = [&] {
            return run_simulate(cfg, variant, sim_graph, t, exhaustive, seed, coloring_path, samples, allow_improper);
        };
    });

    auto* exm = app.add_subcommand("extremal", "Antichain covers and cross-intersecting families");
    std::string what;
    exm->add_option("what", what)->required()->check(CLI::IsMember({"antichains", "bollobas"}));
    exm->add_option("-t", t)->required()->check(CLI::NonNegativeNumber);
    exm->callback([&] { action = [&] { return run_extremal(cfg, what, t); }; });

    auto* sc = app.add_subcommand("scan-tournaments", "Bound gaps over all tournaments up to isomorphism");
    int scan_n = 4;
    int scan_t = 1;
    sc->add_option("-n", scan_n)->required();
    sc->add_option("--tmax", scan_t)->check(CLI::NonNegativeNumber);
    sc->callback([&] { action = [&] { return run_scan(cfg, scan_n, scan_t); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << error_json("usage", e.what()).dump() << '\n';
        return kUsage;
    }

    try {
        parse_limits(cfg);
        const int code = action();
        if (code == kOk && cfg.require_optimal && cfg.saw_non_optimal) {
            std::cerr << error_json("not_optimal", "a solver exhausted its budget before proving optimality").dump()
                      << '\n';
            return kNotOptimal;
        }
        return code;
    } catch (const UnverifiedCertificate& e) {
        std::cerr << error_json("unverified_certificate", e.what()).dump() << '\n';
        return kVerifyFailed;
    } catch (const MalformedCertificate& e) {
        std::cerr << error_json("malformed_certificate", e.what()).dump() << '\n';
        return kUsage;
    } catch (const LimitExceeded& e) {
        json j = error_json("limit_exceeded", e.what());
        j["required"] = e.required();
        j["limit"] = e.limit();
        std::cerr << j.dump() << '\n';
        return kUsage;
    } catch (const InvalidInput& e) {
        std::cerr << error_json("invalid_input", e.what()).dump() << '\n';
        return kUsage;
    } catch (const InternalError& e) {
        std::cerr << error_json("internal", e.what()).dump() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << error_json("internal", e.what()).dump() << '\n';
        return kInternal;
    }
}
