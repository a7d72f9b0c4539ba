// tourn: command-line front end for the tournament library.
//
// Exit status: 0 success, 1 bad input, 2 cap exceeded or search budget spent.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "tourn/acceptance.hpp"
#include "tourn/io.hpp"
#include "tourn/tourn.hpp"

using json = nlohmann::ordered_json;
using namespace tourn;

namespace {

struct Global {
    std::string format = "human";
    std::optional<std::uint64_t> seed;
    int threads = 1;
    double timeout = 0;
    std::uint64_t max_nodes = 0;
    std::vector<std::string> cap_args;
    std::string emit_witness;
    Caps caps;

    SearchLimits limits() const { return {max_nodes, timeout}; }

    std::uint64_t require_seed() const {
        if (!seed) throw DomainError("this command is randomized and needs an explicit --seed");
        return *seed;
    }

    void apply_caps() {
        auto table = caps.table();
        for (const auto& a : cap_args) {
            auto eq = a.find('=');
            if (eq == std::string::npos) throw DomainError("--cap expects name=value, got '" + a + "'");
            auto it = table.find(a.substr(0, eq));
            if (it == table.end()) throw DomainError("unknown cap '" + a.substr(0, eq) + "'");
            try {
                *it->second = std::stoi(a.substr(eq + 1));
            } catch (const std::exception&) {
                throw DomainError("cap value must be an integer, got '" + a.substr(eq + 1) + "'");
            }
        }
    }
};

// ---------------------------------------------------------------------------
// Inputs: a file path, a builtin name, or inline text with ';' between lines.

struct Input {
    std::string inline_text;
    std::string file;

    bool given() const { return !inline_text.empty() || !file.empty(); }
};

void add_input(CLI::App* sub, Input& in, const std::string& name, const std::string& what) {
    sub->add_option("--" + name, in.inline_text, what + ": builtin name or inline text with ';' between lines");
    sub->add_option("--" + name + "-file", in.file, what + " file");
}

std::string text_of(const Input& in, const std::string& name) {
    if (!in.file.empty()) return read_file(in.file);
    if (in.inline_text.empty()) throw DomainError("missing input --" + name + " or --" + name + "-file");
    std::string t = in.inline_text;
    for (char& c : t)
        if (c == ';') c = '\n';
    return t;
}

std::optional<Tournament> builtin_tournament(const std::string& s) {
    std::smatch m;
    if (std::regex_match(s, m, std::regex("T([0-9]+)"))) return make_transitive(std::stoi(m[1]));
    if (std::regex_match(s, m, std::regex("C([0-9]+)"))) return make_circulant(std::stoi(m[1]));
    if (s == "U5") return make_u5();
    if (std::regex_match(s, m, std::regex("Delta([0-9]+)"))) return make_delta(std::stoi(m[1]));
    return std::nullopt;
}

std::optional<BinaryMatrix> builtin_matrix(const std::string& s) {
    std::smatch m;
    if (s == "M1") return figure1_matrices().first;
    if (s == "M2") return figure1_matrices().second;
    if (std::regex_match(s, m, std::regex("I([0-9]+)"))) return BinaryMatrix::identity(std::stoi(m[1]));
    return std::nullopt;
}

Tournament tournament_of(const Input& in, const std::string& name) {
    if (in.file.empty())
        if (auto b = builtin_tournament(in.inline_text)) return *b;
    return parse_tournament(text_of(in, name));
}

SemiCompleteDigraph digraph_of(const Input& in, const std::string& name) {
    if (in.file.empty())
        if (auto b = builtin_tournament(in.inline_text)) return *b;
    return parse_semicomplete(text_of(in, name));
}

BinaryMatrix matrix_of(const Input& in, const std::string& name) {
    if (in.file.empty())
        if (auto b = builtin_matrix(in.inline_text)) return *b;
    return parse_matrix(text_of(in, name));
}

UndirectedOrderedGraph graph_of(const Input& in, const std::string& name) { return parse_graph(text_of(in, name)); }

VertexOrdering ordering_of(const Input& in, const std::string& name) { return parse_ordering(text_of(in, name)); }

// ---------------------------------------------------------------------------
// JSON helpers (vertex ids 1-based)

json ids(const std::vector<int>& v) {
    json a = json::array();
    for (int x : v) a.push_back(x + 1);
    return a;
}

json opt_json(const auto& o) { return o ? json(*o) : json(nullptr); }

json arcs_json(const std::vector<std::pair<int, int>>& arcs) {
    json a = json::array();
    for (auto [u, v] : arcs) a.push_back({u + 1, v + 1});
    return a;
}

std::string ids_line(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i] + 1);
    return s + "\n";
}

// ---------------------------------------------------------------------------
// Output

void render_human(std::ostream& out, const json& j, const std::string& indent) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        out << indent << it.key() << ":";
        if (v.is_object()) {
            out << "\n";
            render_human(out, v, indent + "  ");
        } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
            out << "\n";
            std::istringstream lines(v.get<std::string>());
            std::string l;
            while (std::getline(lines, l)) out << indent << "  " << l << "\n";
        } else if (v.is_array() && !v.empty() && v[0].is_object()) {
            out << "\n";
            for (const auto& e : v) {
                out << indent << "  -\n";
                render_human(out, e, indent + "    ");
            }
        } else if (v.is_string()) {
            out << " " << v.get<std::string>() << "\n";
        } else {
            out << " " << v.dump() << "\n";
        }
    }
}

struct Report {
    std::string quantity;
    json result = json::object();
    std::optional<std::string> witness_text;  // written by --emit-witness
    json witness;                             // embedded in the report
    bool incomplete = false;                  // budget spent or cap hit mid-run: exit status 2
};

// ---------------------------------------------------------------------------
// Commands

Report run_classify(const Global& g, const Input& h_in, const std::string& hero) {
    const Tournament h = tournament_of(h_in, "h");
    std::optional<bool> is_hero;
    if (hero == "yes") is_hero = true;
    if (hero == "no") is_hero = false;
    const BoundProfile b = bound_profile(h, is_hero, g.caps);
    const ClassProfile& p = b.profile;
    Report r;
    r.quantity = "structural profile of H";
    r.result["n"] = p.n;
    r.result["chi"] = opt_json(p.chi);
    r.result["s"] = opt_json(p.s);
    r.result["beta"] = opt_json(p.beta);
    r.result["is_forest"] = opt_json(p.is_forest);
    r.result["is_weak_forest"] = opt_json(p.is_weak_forest);
    r.result["is_star"] = opt_json(p.is_star);
    r.result["is_prime"] = opt_json(p.is_prime);
    r.result["is_hero"] = opt_json(b.is_hero);
    json bounds = json::array();
    for (const auto& s : b.statements)
        bounds.push_back({{"quantity", s.quantity}, {"relation", s.relation}, {"regime", s.regime}, {"conjecture", s.conjecture}});
    r.result["bounds"] = bounds;
    if (p.beta) {
        auto f = min_feedback_edges(h, g.caps);
        r.witness["feedback_order"] = ids(f.order.perm());
        r.witness_text = ids_line(f.order.perm());
    }
    if (p.chi) r.witness["color_classes"] = [&] {
        json a = json::array();
        for (const auto& c : chromatic_number(h, g.caps).classes()) a.push_back(ids(c));
        return a;
    }();
    return r;
}

Report run_contain_pattern(const Global&, const Input& a_in, const Input& m_in) {
    const BinaryMatrix a = matrix_of(a_in, "a"), m = matrix_of(m_in, "m");
    Report r;
    r.quantity = "pattern containment M in A";
    auto w = contains_pattern(a, m);
    r.result["contains"] = w.has_value();
    if (w) {
        r.witness = {{"rows", ids(w->rows)}, {"cols", ids(w->cols)}};
        r.witness_text = ids_line(w->rows) + ids_line(w->cols);
    }
    return r;
}

Report run_contain_subdigraph(const Global&, const Input& g_in, const Input& h_in, bool count) {
    const SemiCompleteDigraph g = digraph_of(g_in, "g");
    const Tournament h = tournament_of(h_in, "h");
    Report r;
    r.quantity = "subdigraph containment H in G";
    auto w = contains_subdigraph(g, h);
    r.result["contains"] = w.has_value();
    if (count) r.result["copies"] = for_each_embedding(g, h, [](const EmbeddingWitness&) { return false; });
    if (w) {
        r.witness = {{"map", ids(w->map)}};
        r.witness_text = ids_line(w->map);
    }
    return r;
}

Report extremal_report(const ExtremalResult& e, const std::string& quantity) {
    Report r;
    r.quantity = quantity;
    r.result["value"] = e.value;
    r.result["upper"] = e.upper;
    r.result["complete"] = e.complete;
    r.incomplete = !e.complete;
    r.result["nodes_explored"] = e.nodes_explored;
    if (e.matrix) {
        r.witness["extremal_matrix"] = to_text(*e.matrix);
        r.witness_text = to_text(*e.matrix);
    }
    if (e.digraph) {
        r.witness["extremal_digraph"] = to_text(*e.digraph);
        r.witness["added_arcs"] = arcs_json(e.added_arcs);
        r.witness_text = to_text(*e.digraph);
    }
    return r;
}

Report run_extremal(const Global& g, const std::string& kind, int n, const Input& m_in, const Input& h_in) {
    if (kind == "ex") return extremal_report(ex_exact(n, matrix_of(m_in, "m"), g.caps, g.limits()), "ex(n,M)");
    const Tournament h = tournament_of(h_in, "h");
    if (kind == "t-transitive") return extremal_report(t_transitive_exact(n, h, g.caps, g.limits()), "t(T_n,H)");
    return extremal_report(t_general_exact(n, h, g.caps, g.limits()), "t(n,H)");
}

struct ConstructArgs {
    std::string kind;
    int n = 0, k = 0, m = 0, r = 0, t = 0, girth = 0;
    Input graph;
};

Report run_construct(const Global& g, const ConstructArgs& a) {
    Report r;
    auto need = [&](int v, const char* name) {
        if (v <= 0) throw DomainError(std::string("construct ") + a.kind + " needs --" + name);
        return v;
    };
    auto emit = [&](const std::string& text) {
        r.result["text"] = text;
        r.witness_text = text;
    };
    if (a.kind == "transitive") {
        r.quantity = "T_n";
        emit(to_text(make_transitive(need(a.n, "n"))));
    } else if (a.kind == "circulant") {
        r.quantity = "C_n";
        emit(to_text(make_circulant(need(a.n, "n"))));
    } else if (a.kind == "u5") {
        r.quantity = "U_5";
        emit(to_text(make_u5()));
    } else if (a.kind == "delta") {
        r.quantity = "Delta_k";
        emit(to_text(make_delta(need(a.k, "k"))));
    } else if (a.kind == "xh-tree") {
        r.quantity = "X_h";
        emit(to_text(make_xh_tree(need(a.n, "n"))));
    } else if (a.kind == "random-tournament") {
        r.quantity = "uniform labelled tournament";
        emit(to_text(random_tournament(need(a.n, "n"), g.require_seed())));
    } else if (a.kind == "random-graph") {
        r.quantity = "uniform ordered graph with m edges";
        emit(to_text(random_ordered_graph(need(a.n, "n"), a.m, g.require_seed())));
    } else if (a.kind == "transitive-plus") {
        r.quantity = "T_n plus a bidirectional pair per edge";
        emit(to_text(transitive_plus(graph_of(a.graph, "graph"))));
    } else if (a.kind == "turan") {
        r.quantity = "T_n plus a complete (r-1)-partite graph";
        emit(to_text(turan_blowup(need(a.n, "n"), need(a.r, "r"))));
    } else if (a.kind == "high-girth") {
        r.quantity = "bipartite graph of girth > g";
        auto b = high_girth_bipartite(need(a.n, "n"), need(a.girth, "girth"), g.require_seed());
        r.result["girth"] = b.girth;
        r.result["certified"] = b.certified;
        emit(to_text(b.graph));
    } else if (a.kind == "ktt-free") {
        r.quantity = "K_{t,t}-free bipartite graph";
        auto b = ktt_free_bipartite(need(a.n, "n"), need(a.t, "t"), g.require_seed());
        r.result["certified"] = b.certified;
        emit(to_text(b.graph));
    } else {
        throw DomainError("unknown construction '" + a.kind + "'");
    }
    return r;
}

struct ReduceArgs {
    std::string kind;
    int p = 0, k = 0;
    Input m, a, g;
};

Report run_reduce(const Global&, const ReduceArgs& a) {
    Report r;
    if (a.kind == "mstar") {
        const MStarTournament s = matrix_to_mstar(matrix_of(a.m, "m"));
        r.quantity = "M*";
        r.result["left"] = ids(s.left);
        r.result["right"] = ids(s.right);
        r.result["every_left_hit"] = s.every_left_hit;
        r.result["every_right_hits"] = s.every_right_hits;
        r.result["text"] = to_text(s.tournament);
        r.witness_text = to_text(s.tournament);
    } else if (a.kind == "blowup") {
        if (a.p < 1) throw DomainError("reduce blowup needs --p >= 1");
        const Tournament t = mstar_blowup(matrix_of(a.m, "m"), a.p);
        r.quantity = "M*_p";
        r.result["text"] = to_text(t);
        r.witness_text = to_text(t);
    } else if (a.kind == "minimal-p") {
        r.quantity = "least even p with (p/2)^2 - p + 1 > k (p/2)^(2-1/k)";
        r.result["k"] = a.k;
        r.result["p"] = minimal_p(a.k);
    } else if (a.kind == "interval") {
        const SemiCompleteDigraph d = matrix_to_interval_digraph(matrix_of(a.a, "a"));
        r.quantity = "interval digraph of A";
        r.result["text"] = to_text(d);
        r.witness_text = to_text(d);
    } else if (a.kind == "dense-pair") {
        const SemiCompleteDigraph d = digraph_of(a.g, "g");
        r.quantity = "dense interval pair";
        auto pair = find_dense_interval_pair(d, a.p);
        r.result["found"] = pair.has_value();
        if (pair) {
            r.result["x"] = ids(pair->x());
            r.result["y"] = ids(pair->y());
            r.result["bidirectional_pairs"] = pair->count;
            r.result["threshold"] = pair->threshold;
            r.witness_text = ids_line(pair->x()) + ids_line(pair->y());
        }
    } else if (a.kind == "figure1") {
        auto [m1, m2] = figure1_matrices();
        r.quantity = "M_1 and M_2";
        r.result["M1"] = to_text(m1);
        r.result["M2"] = to_text(m2);
        r.witness_text = to_text(m1) + to_text(m2);
    } else {
        throw DomainError("unknown reduction '" + a.kind + "'");
    }
    return r;
}

struct SampleArgs {
    std::string kind;
    Input f, graph, g, h;
    int complete = 0, t = 0;
    long long trials = 0;
    double b = 1.0;
    std::string mode = "strict", event = "not_prime";
};

ExtractionMode mode_of(const std::string& s) {
    if (s == "strict") return ExtractionMode::strict;
    if (s == "relaxed") return ExtractionMode::relaxed;
    throw DomainError("mode must be strict or relaxed");
}

json expansion_json(const ExpansionReport& e) {
    return {{"value", e.value}, {"exact", e.exact}, {"lower_bound", e.lower_bound}, {"cut_edges", e.cut_edges},
            {"argmin_set", ids(e.argmin_set)}};
}

Report run_sample(const Global& g, const SampleArgs& a) {
    Report r;
    if (a.kind == "orientation") {
        const Tournament t = sample_orientation(digraph_of(a.f, "f"), g.require_seed());
        r.quantity = "sample from D_F";
        r.result["text"] = to_text(t);
        r.witness_text = to_text(t);
    } else if (a.kind == "expansion") {
        r.quantity = "edge expansion";
        const ExpansionReport e = a.graph.given() ? expansion_exact(graph_of(a.graph, "graph"), g.caps)
                                                  : expansion_exact(digraph_of(a.g, "g"), g.caps);
        r.result = expansion_json(e);
    } else if (a.kind == "extract") {
        r.quantity = "expander extraction";
        const ExtractionResult e = extract_expander(graph_of(a.graph, "graph"), a.b, mode_of(a.mode), g.caps);
        r.result["found"] = e.found;
        r.result["certified"] = e.certified;
        r.result["input_in_regime"] = e.input_in_regime;
        r.result["regime_held"] = e.regime_held;
        r.result["threshold"] = e.threshold;
        r.result["vertices"] = ids(e.vertices);
        if (e.found) r.result["certificate"] = expansion_json(e.certificate);
        json steps = json::array();
        for (const auto& s : e.steps)
            steps.push_back({{"size", s.size}, {"edges", s.edges}, {"threshold", s.threshold}, {"expansion", s.expansion},
                             {"cut", ids(s.cut)}, {"density_held", s.density_held}});
        r.result["steps"] = steps;
        if (!e.failure.empty()) r.result["failure"] = e.failure;
        if (e.found) r.witness_text = ids_line(e.vertices);
    } else if (a.kind == "tgap") {
        r.quantity = "t-gap subgraph";
        if (a.t < 1) throw DomainError("sample tgap needs --t >= 1");
        const TGapSample s = sample_tgap(graph_of(a.graph, "graph"), a.t, g.require_seed());
        r.result["vertices"] = ids(s.vertices);
        r.result["edges"] = arcs_json(s.edges);
        r.witness_text = to_text(s.induced);
    } else if (a.kind == "estimate") {
        const SemiCompleteDigraph f = a.complete > 0 ? SemiCompleteDigraph::complete(a.complete) : digraph_of(a.f, "f");
        const EstimateReport e = estimate_probability(f, parse_event(a.event), a.trials, g.require_seed(), g.caps, g.threads);
        r.quantity = "P[event] under D_F";
        r.result["event"] = e.event;
        r.result["trials"] = e.trials;
        r.result["successes"] = e.successes;
        r.result["estimate"] = e.estimate;
        r.result["half_width_99"] = e.half_width;
        r.result["aborted"] = e.aborted;
        if (e.aborted) {
            r.result["error"] = e.error;
            r.incomplete = true;
        }
    } else if (a.kind == "certificate") {
        const CertificateReport c = sparse_certificate_search(digraph_of(a.g, "g"), tournament_of(a.h, "h"), Family::q5, a.b,
                                                              a.trials, g.require_seed(), mode_of(a.mode), g.caps);
        r.quantity = "sparse-family certificate";
        r.result["extraction_ok"] = c.extraction_ok;
        r.result["vertices"] = ids(c.vertices);
        r.result["trials_run"] = c.trials_run;
        r.result["prime_count"] = c.prime_count;
        r.result["member_count"] = c.member_count;
        r.result["found"] = c.certificate.has_value();
        r.result["certificate_contains_h"] = c.certificate_contains_h;
        r.result["note"] = c.note;
        if (c.certificate) {
            r.result["certificate_seed"] = c.certificate_seed;
            r.witness["certificate"] = to_text(*c.certificate);
            r.witness_text = to_text(*c.certificate);
        }
    } else {
        throw DomainError("unknown sampler '" + a.kind + "'");
    }
    return r;
}

struct EmbedArgs {
    std::string kind;
    Input h, order, g;
    std::string parts;
    int retries = 100000;
    bool no_fallbacks = false;
};

std::vector<std::vector<int>> parse_parts(const std::string& s, int n) {
    std::vector<std::vector<int>> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '|')) {
        std::vector<int> p;
        std::istringstream in(part);
        long long v;
        while (in >> v) {
            if (v < 1 || v > n) throw DomainError("part vertex " + std::to_string(v) + " out of range");
            p.push_back(static_cast<int>(v - 1));
        }
        out.push_back(std::move(p));
    }
    return out;
}

Report run_embed(const Global& g, const EmbedArgs& a) {
    Report r;
    const Tournament h = tournament_of(a.h, "h");
    const SemiCompleteDigraph host = digraph_of(a.g, "g");
    if (a.kind == "two-back-edge") {
        const VertexOrdering ord = a.order.given() ? ordering_of(a.order, "order") : VertexOrdering::identity(h.size());
        EmbedOptions opt;
        opt.retries = a.retries;
        opt.fallbacks = !a.no_fallbacks;
        auto e = embed_two_back_edge_tournament(h, ord, host, g.require_seed(), opt);
        r.quantity = "embedding of a two-back-edge tournament";
        const BackEdgeConfig cfg = classify_two_back_edges(h, ord);
        r.result["configuration"] = kind_name(cfg.kind);
        r.result["positions"] = {cfg.p + 1, cfg.q + 1, cfg.r + 1, cfg.s + 1};
        r.result["found"] = e.has_value();
        if (e) {
            r.result["branch"] = e->branch;
            r.result["attempt"] = e->attempt;
            r.result["anchors"] = ids(e->anchors);
            r.witness = {{"map", ids(e->witness.map)}};
            r.witness_text = ids_line(e->witness.map);
        }
    } else if (a.kind == "blowup") {
        const EmbeddingWitness w = embed_via_transitive_blowup(host, h, parse_parts(a.parts, host.size()), g.caps);
        r.quantity = "embedding into a transitive blow-up";
        r.result["found"] = true;
        r.witness = {{"map", ids(w.map)}};
        r.witness_text = ids_line(w.map);
    } else {
        throw DomainError("unknown embedding '" + a.kind + "'");
    }
    return r;
}

/// Options of the selected subcommand chain, as given on the command line.
json echo_options(const CLI::App* app) {
    json j = json::object();
    for (const CLI::Option* o : app->get_options()) {
        if (o->get_name() == "--help" || o->count() == 0 || o->get_name().empty()) continue;
        const auto& res = o->results();
        std::string key = o->get_name();
        while (!key.empty() && key[0] == '-') key.erase(0, 1);
        if (res.empty())
            j[key] = true;
        else if (res.size() == 1)
            j[key] = res[0];
        else
            j[key] = res;
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tournaments with added bidirectional edges: classification, exact extremal search, reductions, "
                 "sampling and embeddings"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"human", "json"}))->capture_default_str();
    app.add_option("--seed", g.seed, "Master seed (required by randomized commands)");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
    app.add_option("--timeout", g.timeout, "Wall-clock budget in seconds for exact searches (0 = none)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--max-nodes", g.max_nodes, "Node budget for exact searches (0 = none)")->capture_default_str();
    app.add_option("--cap", g.cap_args, "Override a vertex-count cap, name=value (repeatable)");
    app.add_option("--emit-witness", g.emit_witness, "Write the witness in re-parseable text form to this path");

    std::function<Report()> action;
    std::string command;

    // classify
    Input c_h;
    std::string hero;
    auto* classify_cmd = app.add_subcommand("classify", "Structural profile and bound regime of H");
    add_input(classify_cmd, c_h, "h", "tournament H");
    classify_cmd->add_option("--hero", hero, "Caller-supplied hero status")->check(CLI::IsMember({"yes", "no"}));
    classify_cmd->callback([&] { action = [&] { return run_classify(g, c_h, hero); }; });

    // contain
    auto* contain = app.add_subcommand("contain", "Pattern or subdigraph containment");
    contain->require_subcommand(1);
    Input p_a, p_m, s_g, s_h;
    bool count = false;
    auto* pat = contain->add_subcommand("pattern", "Does A contain the pattern M?");
    add_input(pat, p_a, "a", "host matrix A");
    add_input(pat, p_m, "m", "pattern M");
    pat->callback([&] { action = [&] { return run_contain_pattern(g, p_a, p_m); }; });
    auto* sub = contain->add_subcommand("subdigraph", "Does G contain H?");
    add_input(sub, s_g, "g", "semi-complete digraph G");
    add_input(sub, s_h, "h", "tournament H");
    sub->add_flag("--count", count, "Also count every copy");
    sub->callback([&] { action = [&] { return run_contain_subdigraph(g, s_g, s_h, count); }; });

    // extremal
    auto* extremal = app.add_subcommand("extremal", "Exact extremal numbers");
    extremal->require_subcommand(1);
    int x_n = 0;
    Input x_m, x_h;
    for (const char* kind : {"ex", "t-transitive", "t-general"}) {
        auto* e = extremal->add_subcommand(kind, std::string(kind) == "ex"             ? "ex(n, M)"
                                                 : std::string(kind) == "t-transitive" ? "t(T_n, H)"
                                                                                       : "t(n, H)");
        e->add_option("--n", x_n, "Size n")->required();
        if (std::string(kind) == "ex")
            add_input(e, x_m, "m", "pattern M");
        else
            add_input(e, x_h, "h", "tournament H");
        const std::string k = kind;
        e->callback([&, k] { action = [&, k] { return run_extremal(g, k, x_n, x_m, x_h); }; });
    }

    // construct
    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Standard and random constructions");
    construct->add_option("kind", ca.kind,
                          "transitive | circulant | u5 | delta | xh-tree | random-tournament | random-graph | "
                          "transitive-plus | turan | high-girth | ktt-free")
        ->required();
    construct->add_option("--n", ca.n, "Vertex count (h for xh-tree)");
    construct->add_option("--k", ca.k, "Number of triangles for delta");
    construct->add_option("--m", ca.m, "Edge count for random-graph");
    construct->add_option("--r", ca.r, "r for turan");
    construct->add_option("--t", ca.t, "t for ktt-free");
    construct->add_option("--girth", ca.girth, "Girth bound for high-girth");
    add_input(construct, ca.graph, "graph", "ordered graph");
    construct->callback([&] { action = [&] { return run_construct(g, ca); }; });

    // reduce
    ReduceArgs ra;
    auto* reduce = app.add_subcommand("reduce", "Matrix to tournament reductions");
    reduce->add_option("kind", ra.kind, "mstar | blowup | minimal-p | interval | dense-pair | figure1")->required();
    reduce->add_option("--p", ra.p, "Blow-up factor, or exponent for dense-pair");
    reduce->add_option("--k", ra.k, "k for minimal-p");
    add_input(reduce, ra.m, "m", "pattern M");
    add_input(reduce, ra.a, "a", "host matrix A");
    add_input(reduce, ra.g, "g", "semi-complete digraph over T_n");
    reduce->callback([&] { action = [&] { return run_reduce(g, ra); }; });

    // sample
    SampleArgs sa;
    auto* sample = app.add_subcommand("sample", "Random orientations, expansion and gap sampling");
    sample->add_option("kind", sa.kind, "orientation | expansion | extract | tgap | estimate | certificate")->required();
    add_input(sample, sa.f, "f", "semi-complete digraph F");
    add_input(sample, sa.graph, "graph", "ordered graph");
    add_input(sample, sa.g, "g", "semi-complete digraph G");
    add_input(sample, sa.h, "h", "tournament H");
    sample->add_option("--complete", sa.complete, "Use the complete digraph on this many vertices as F");
    sample->add_option("--t", sa.t, "Gap t");
    sample->add_option("--trials", sa.trials, "Monte Carlo trials")->check(CLI::NonNegativeNumber);
    sample->add_option("--b", sa.b, "Expansion exponent b")->capture_default_str();
    sample->add_option("--mode", sa.mode, "strict | relaxed")->capture_default_str();
    sample->add_option("--event", sa.event, "not_prime | q5_member | transitive | regular | iso_circulant")
        ->capture_default_str();
    sample->callback([&] { action = [&] { return run_sample(g, sa); }; });

    // embed
    EmbedArgs ea;
    auto* embed = app.add_subcommand("embed", "Constructive embeddings");
    embed->add_option("kind", ea.kind, "two-back-edge | blowup")->required();
    add_input(embed, ea.h, "h", "tournament H");
    add_input(embed, ea.order, "order", "ordering of H");
    add_input(embed, ea.g, "g", "host semi-complete digraph");
    embed->add_option("--parts", ea.parts, "Parts for blowup, e.g. \"1 2 3|4 5 6\"");
    embed->add_option("--retries", ea.retries, "Gap samples to try")->capture_default_str();
    embed->add_flag("--no-fallbacks", ea.no_fallbacks, "Use only the finder for the configuration");
    embed->callback([&] { action = [&] { return run_embed(g, ea); }; });

    // verify
    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_option("--suite", suite, "all, or comma-separated criterion numbers")->capture_default_str();
    bool run_verify = false;
    verify->callback([&] { run_verify = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    json config;
    std::vector<std::string> chain;
    const CLI::App* cur = &app;
    json sub_opts = json::object();
    while (true) {
        auto subs = cur->get_subcommands();
        if (subs.empty()) break;
        cur = subs[0];
        chain.push_back(cur->get_name());
        const json opts = echo_options(cur);
        for (auto& [k, v] : opts.items()) sub_opts[k] = v;
    }
    for (const auto& c : chain) command += (command.empty() ? "" : " ") + c;
    config["command"] = command;
    config["options"] = sub_opts;
    config["seed"] = g.seed ? json(*g.seed) : json(nullptr);
    config["threads"] = g.threads;
    config["timeout_seconds"] = g.timeout;
    config["max_nodes"] = g.max_nodes;
    config["format"] = g.format;
    config["emit_witness"] = g.emit_witness.empty() ? json(nullptr) : json(g.emit_witness);

    auto print = [&](const json& doc) {
        if (g.format == "json") {
            std::cout << doc.dump(2) << "\n";
        } else {
            render_human(std::cout, doc, "");
        }
    };
    auto fail = [&](const std::string& status, const std::string& msg, int code) {
        json doc;
        doc["status"] = status;
        doc["error"] = msg;
        doc["config"] = config;
        print(doc);
        std::cerr << "tourn: " << msg << "\n";
        return code;
    };

    try {
        g.apply_caps();
        json caps;
        for (auto& [k, v] : g.caps.values()) caps[k] = v;
        config["caps"] = caps;

        if (run_verify) {
            acceptance::Options o;
            o.seed = g.require_seed();
            o.threads = g.threads;
            std::vector<int> ids_wanted;
            if (suite != "all") {
                std::stringstream ss(suite);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    try {
                        ids_wanted.push_back(std::stoi(tok));
                    } catch (const std::exception&) {
                        throw DomainError("bad criterion '" + tok + "'");
                    }
                }
            }
            std::vector<int> which = ids_wanted;
            if (which.empty())
                for (int i = 1; i <= acceptance::kCriteria; ++i) which.push_back(i);
            json rows = json::array();
            bool all = true;
            for (int id : which) {
                const auto r = acceptance::run_criterion(id, o);
                all = all && r.pass;
                std::cerr << "criterion " << r.id << ": " << r.seconds << " s (budget " << r.budget_seconds << " s)\n";
                rows.push_back({{"id", r.id}, {"pass", r.pass}, {"name", r.name}, {"detail", r.detail}});
            }
            if (g.format == "json") {
                json doc;
                doc["status"] = all ? "ok" : "failed";
                doc["quantity"] = "acceptance suite";
                doc["config"] = config;
                doc["criteria"] = rows;
                print(doc);
            } else {
                json head;
                head["config"] = config;
                render_human(std::cout, head, "");
                for (const auto& row : rows)
                    std::printf("%-4s %2d  %s: %s\n", row["pass"].get<bool>() ? "PASS" : "FAIL", row["id"].get<int>(),
                                row["name"].get<std::string>().c_str(), row["detail"].get<std::string>().c_str());
                std::fflush(stdout);
            }
            return all ? 0 : 1;
        }

        const Report rep = action();
        const bool incomplete = rep.incomplete;
        if (!g.emit_witness.empty() && rep.witness_text) write_file(g.emit_witness, *rep.witness_text);
        json doc;
        doc["status"] = incomplete ? "incomplete" : "ok";
        doc["quantity"] = rep.quantity;
        doc["config"] = config;
        doc["result"] = rep.result;
        doc["witness"] = rep.witness.is_null() ? json(nullptr) : rep.witness;
        print(doc);
        return incomplete ? 2 : 0;
    } catch (const CapExceeded& e) {
        return fail("cap_exceeded", e.what(), 2);
    } catch (const DomainError& e) {
        return fail("domain_error", e.what(), 1);
    } catch (const Error& e) {
        return fail("error", e.what(), 1);
    }
}
