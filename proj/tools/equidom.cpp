#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "equidom/decide.hpp"
#include "equidom/errors.hpp"
#include "equidom/generate.hpp"
#include "equidom/graph.hpp"
#include "equidom/hereditary.hpp"
#include "equidom/kernel.hpp"
#include "equidom/oracle.hpp"
#include "equidom/pseudo_classes.hpp"
#include "equidom/pseudo_graph.hpp"
#include "equidom/solver.hpp"
#include "equidom/twin.hpp"
#include "equidom/weights.hpp"

using json = nlohmann::json;
using namespace equidom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_graph(in);
}

WeightStructure load_weights(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_weight_structure(in, n);
}

std::string id_set(const std::vector<int>& ids) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i] + 1;
    os << "}";
    return os.str();
}

json json_header(const std::string& command) {
    return json{{"schema_version", 1}, {"command", command}};
}

void emit(const json& doc, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

json weights_json(const WeightStructure& s) {
    json w = json::object();
    for (size_t v = 0; v < s.weights.size(); ++v)
        w[std::to_string(v + 1)] = s.weights[v];
    return json{{"weights", w}, {"t", s.target}};
}

int cmd_analyze(const std::string& file, bool pseudo, bool mu, bool pg_dump, bool as_json) {
    Graph g = load_graph(file);
    TwinPartition tp = twin_partition(g);
    std::ostringstream text;
    json doc = json_header("analyze");

    text << "twin classes:\n";
    json jtwins = json::array();
    for (const TwinClass& c : tp.classes) {
        text << "  " << to_string(c.kind) << ": " << id_set(c.members) << "\n";
        json jc{{"kind", to_string(c.kind)}, {"members", json::array()}};
        for (int v : c.members) jc["members"].push_back(v + 1);
        jtwins.push_back(jc);
    }
    doc["twin_classes"] = jtwins;

    std::optional<PseudoPartition> pp;
    if (pseudo || mu || pg_dump) pp = pseudo_class_partition(g);
    if (pseudo) {
        text << "pseudo classes:\n";
        json jp = json::array();
        for (const PseudoClass& c : pp->classes) {
            text << "  " << to_string(c.kind) << ": " << id_set(c.members) << "\n";
            json jc{{"kind", to_string(c.kind)}, {"members", json::array()}};
            for (int v : c.members) jc["members"].push_back(v + 1);
            jp.push_back(jc);
        }
        doc["pseudo_classes"] = jp;
    }
    if (mu || pg_dump) {
        PseudoGraph pg = build_pseudo_graph(g, *pp);
        if (mu) {
            text << "demand vectors:\n";
            json jm = json::object();
            for (size_t e = 0; e < pg.elements.size(); ++e) {
                text << "  " << pg.elements[e] + 1 << ": (";
                json row = json::array();
                for (size_t i = 0; i < pg.demands[e].size(); ++i) {
                    text << (i ? "," : "") << pg.demands[e][i];
                    row.push_back(pg.demands[e][i]);
                }
                text << ")\n";
                jm[std::to_string(pg.elements[e] + 1)] = row;
            }
            doc["demand_vectors"] = jm;
        }
        if (pg_dump) {
            std::string dump = serialize_pseudo_graph(pg);
            text << dump;
            doc["pseudo_graph"] = dump;
        }
    }
    emit(doc, as_json, text.str());
    return kExitOk;
}

bool looks_like_pseudo_graph(const std::string& path) {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        return line.compare(pos, 3, "pg ") == 0;
    }
    return false;
}

int cmd_solve(const std::string& file, std::optional<Weight> k, std::optional<Weight> t,
              bool as_json) {
    json doc = json_header("solve");
    // Pseudo-graph files (e.g. written kernels) are solved directly, so a
    // kernelized instance can be replayed.
    if (looks_like_pseudo_graph(file)) {
        std::ifstream in(file);
        PseudoGraph pg = parse_pseudo_graph(in);
        DominationInstance inst = DominationInstance::from_pseudo_graph(pg);
        auto res = k ? solve_k(inst, *k) : solve_target_t(inst, *t);
        doc["yes"] = res.has_value();
        if (!res) {
            doc["reason"] = "no structure on the instance";
            emit(doc, as_json, "no structure on the instance\n");
            return kExitNegative;
        }
        std::ostringstream text;
        json w = json::object();
        for (auto [id, wt] : res->weights) {
            text << id + 1 << " " << wt << "\n";
            w[std::to_string(id + 1)] = wt;
        }
        text << "t " << res->target << "\n";
        doc["weights"] = w;
        doc["t"] = res->target;
        emit(doc, as_json, text.str());
        return kExitOk;
    }
    Graph g = load_graph(file);
    Decision d = k ? decide_k_equidomination(g, *k) : decide_target_t(g, *t);
    doc["yes"] = d.yes;
    if (d.yes) {
        doc.update(weights_json(*d.structure));
        emit(doc, as_json, serialize_weight_structure(*d.structure));
        return kExitOk;
    }
    doc["reason"] = d.reason;
    emit(doc, as_json, d.reason + "\n");
    return kExitNegative;
}

std::string trace_text(const ReductionTrace& trace) {
    std::ostringstream os;
    for (const TraceEntry& e : trace)
        os << to_string(e.rule) << " " << e.deleted + 1 << " " << e.representative + 1
           << "\n";
    return os.str();
}

int cmd_kernel(const std::string& file, std::optional<Weight> k, std::optional<Weight> t,
               const std::string& out_path, const std::string& trace_path, bool as_json) {
    Graph g = load_graph(file);
    KernelOutcome o = k ? kernel_k(g, *k) : kernel_target_t(g, *t);
    json doc = json_header("kernel");
    if (o.verdict == KernelVerdict::NotEquidominating) {
        doc["verdict"] = "not-equidominating";
        doc["reason"] = o.reason;
        emit(doc, as_json, o.reason + "\n");
        return kExitNegative;
    }
    std::string kernel_text;
    if (o.verdict == KernelVerdict::PseudoKernel) {
        doc["verdict"] = "pseudo-kernel";
        kernel_text = serialize_pseudo_graph(o.pseudo_kernel);
    } else {
        doc["verdict"] = "graph-kernel";
        std::ostringstream os;
        for (size_t v = 0; v < o.kernel_new_to_old.size(); ++v)
            os << "# orig " << v + 1 << " " << o.kernel_new_to_old[v] + 1 << "\n";
        os << serialize_graph(o.graph_kernel);
        kernel_text = os.str();
    }
    std::string tr = trace_text(o.trace);
    doc["kernel"] = kernel_text;
    doc["trace"] = tr;
    if (!out_path.empty()) std::ofstream(out_path) << kernel_text;
    if (!trace_path.empty()) std::ofstream(trace_path) << tr;
    std::ostringstream text;
    if (out_path.empty()) text << kernel_text;
    if (trace_path.empty() && !tr.empty()) text << "trace:\n" << tr;
    emit(doc, as_json, text.str());
    return kExitOk;
}

void print_tree(std::ostream& os, const DecompNode& nd, int depth) {
    std::string pad(2 * depth, ' ');
    switch (nd.kind) {
        case DecompNode::Kind::Basic: {
            std::vector<int> vs = nd.vertices;
            os << pad << "basic " << id_set(vs) << "\n";
            return;
        }
        case DecompNode::Kind::Universal:
            os << pad << "universal " << nd.universal + 1 << "\n";
            break;
        case DecompNode::Kind::ChainJoin:
            os << pad << "chain-join left=" << id_set(nd.left_clique)
               << " right=" << id_set(nd.right_clique) << "\n";
            break;
        case DecompNode::Kind::Split:
            os << pad << "components\n";
            break;
    }
    for (const auto& c : nd.children) print_tree(os, *c, depth + 1);
}

json tree_json(const DecompNode& nd) {
    json j;
    switch (nd.kind) {
        case DecompNode::Kind::Basic: {
            j["kind"] = "basic";
            j["vertices"] = json::array();
            for (int v : nd.vertices) j["vertices"].push_back(v + 1);
            return j;
        }
        case DecompNode::Kind::Universal:
            j["kind"] = "universal";
            j["vertex"] = nd.universal + 1;
            break;
        case DecompNode::Kind::ChainJoin: {
            j["kind"] = "chain-join";
            j["left_clique"] = json::array();
            for (int v : nd.left_clique) j["left_clique"].push_back(v + 1);
            j["right_clique"] = json::array();
            for (int v : nd.right_clique) j["right_clique"].push_back(v + 1);
            break;
        }
        case DecompNode::Kind::Split: j["kind"] = "components"; break;
    }
    j["children"] = json::array();
    for (const auto& c : nd.children) j["children"].push_back(tree_json(*c));
    return j;
}

int cmd_hereditary(const std::string& file, bool witness, bool as_json) {
    Graph g = load_graph(file);
    HereditaryResult res = recognize_hereditary(g);
    json doc = json_header("hereditary");
    doc["hereditary"] = res.hereditary;
    std::ostringstream text;
    if (res.hereditary) {
        text << "yes\n";
        if (witness) {
            print_tree(text, *res.tree, 0);
            doc["decomposition"] = tree_json(*res.tree);
        }
        emit(doc, as_json, text.str());
        return kExitOk;
    }
    text << "no\n";
    if (witness) {
        if (g.vertex_count() > 64) {
            text << "witness search skipped (n > 64)\n";
        } else if (auto w = forbidden_subgraph_search(g)) {
            text << "forbidden induced subgraph: " << w->name << " " << id_set(w->vertices)
                 << "\n";
            doc["witness"] = {{"name", w->name}, {"vertices", json::array()}};
            for (int v : w->vertices) doc["witness"]["vertices"].push_back(v + 1);
        }
    }
    emit(doc, as_json, text.str());
    return kExitNegative;
}

int cmd_verify(const std::string& graph_file, const std::string& weight_file, bool as_json) {
    Graph g = load_graph(graph_file);
    WeightStructure s = load_weights(weight_file, g.vertex_count());
    bool ok = verify_structure(g, s);
    json doc = json_header("verify");
    doc["valid"] = ok;
    emit(doc, as_json, ok ? "valid\n" : "invalid\n");
    return ok ? kExitOk : kExitNegative;
}

int cmd_oracle_mds(const std::string& file, bool as_json) {
    Graph g = load_graph(file);
    auto mds = enumerate_mds(g);
    json doc = json_header("oracle-mds");
    doc["mds"] = json::array();
    std::ostringstream text;
    for (const VertexSet& d : mds) {
        std::vector<int> ids = d.to_vector();
        text << id_set(ids) << "\n";
        json row = json::array();
        for (int v : ids) row.push_back(v + 1);
        doc["mds"].push_back(row);
    }
    emit(doc, as_json, text.str());
    return kExitOk;
}

int cmd_oracle_structure(const std::string& file, Weight param, bool target_mode,
                         bool as_json) {
    Graph g = load_graph(file);
    auto res = target_mode ? brute_force_target_t(g, param)
                           : brute_force_k_equidominating(g, static_cast<int>(param));
    json doc = json_header(target_mode ? "oracle-target" : "oracle-k-equi");
    doc["yes"] = res.has_value();
    if (res) {
        doc.update(weights_json(*res));
        emit(doc, as_json, serialize_weight_structure(*res));
        return kExitOk;
    }
    emit(doc, as_json, "absent\n");
    return kExitNegative;
}

int cmd_generate(const std::string& kind, const std::vector<std::string>& args,
                 const std::string& nest, std::uint64_t seed) {
    auto need = [&](size_t n) {
        if (args.size() != n)
            throw ParseError("generate " + kind + ": wrong number of arguments");
    };
    auto num = [&](size_t i) { return std::stoi(args.at(i)); };
    Graph g;
    std::string banner;
    if (kind == "complete") {
        need(1);
        g = make_complete(num(0));
    } else if (kind == "edgeless") {
        need(1);
        g = make_edgeless(num(0));
    } else if (kind == "k2n-ne") {
        need(1);
        g = make_k2n_minus_ne(num(0));
    } else if (kind == "path") {
        need(1);
        g = make_path(num(0));
    } else if (kind == "cycle") {
        need(1);
        g = make_cycle(num(0));
    } else if (kind == "corona") {
        need(1);
        g = make_corona(load_graph(args[0]));
    } else if (kind == "chain-join") {
        need(2);
        g = make_chain_join(load_graph(args[0]), load_graph(args[1]), parse_nest_spec(nest));
    } else if (kind == "random") {
        need(2);
        g = make_random(num(0), num(1), seed);
        banner = "# seed " + std::to_string(seed) + "\n";
    } else {
        throw ParseError("unknown generator '" + kind + "'");
    }
    std::cout << banner << serialize_graph(g);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equidominating graph toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a structured JSON document");

    auto* analyze = app.add_subcommand("analyze", "twin and pseudo class structure");
    std::string an_file;
    bool an_pseudo = false, an_mu = false, an_pg = false;
    analyze->add_option("file", an_file)->required();
    analyze->add_flag("--pseudo", an_pseudo, "list pseudo classes");
    analyze->add_flag("--mu", an_mu, "list demand vectors");
    analyze->add_flag("--pg", an_pg, "dump the pseudo graph");

    auto* solve = app.add_subcommand("solve", "decide equidomination");
    std::string so_file;
    std::optional<Weight> so_k, so_t;
    solve->add_option("file", so_file)->required();
    auto* so_kopt = solve->add_option("--k", so_k, "weight bound");
    auto* so_topt = solve->add_option("--target", so_t, "target value");
    so_kopt->excludes(so_topt);

    auto* kernel = app.add_subcommand("kernel", "kernelize an instance");
    std::string ke_file, ke_out, ke_trace;
    std::optional<Weight> ke_k, ke_t;
    kernel->add_option("file", ke_file)->required();
    auto* ke_kopt = kernel->add_option("--k", ke_k, "weight bound");
    auto* ke_topt = kernel->add_option("--target", ke_t, "target value");
    ke_kopt->excludes(ke_topt);
    kernel->add_option("--output", ke_out, "write the kernel here");
    kernel->add_option("--trace", ke_trace, "write the reduction trace here");

    auto* hered = app.add_subcommand("hereditary", "hereditary equidomination test");
    std::string he_file;
    bool he_witness = false;
    hered->add_option("file", he_file)->required();
    hered->add_flag("--witness", he_witness, "show decomposition / forbidden subgraph");

    auto* verify = app.add_subcommand("verify", "check a weight structure");
    std::string ve_graph, ve_weights;
    verify->add_option("graph", ve_graph)->required();
    verify->add_option("weights", ve_weights)->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    oracle->require_subcommand(1);
    auto* omds = oracle->add_subcommand("mds", "list all minimal dominating sets");
    std::string om_file;
    omds->add_option("file", om_file)->required();
    auto* over = oracle->add_subcommand("verify", "check a weight structure");
    std::string ov_graph, ov_weights;
    over->add_option("graph", ov_graph)->required();
    over->add_option("weights", ov_weights)->required();
    auto* okeq = oracle->add_subcommand("k-equi", "exhaustive bounded-weight search");
    std::string ok_file;
    Weight ok_k = 0;
    okeq->add_option("file", ok_file)->required();
    okeq->add_option("k", ok_k)->required();
    auto* otgt = oracle->add_subcommand("target", "exhaustive fixed-target search");
    std::string ot_file;
    Weight ot_t = 0;
    otgt->add_option("file", ot_file)->required();
    otgt->add_option("t", ot_t)->required();

    auto* gen = app.add_subcommand("generate", "graph generators");
    std::string ge_kind, ge_nest;
    std::vector<std::string> ge_args;
    std::uint64_t ge_seed = 1;
    gen->add_option("kind", ge_kind)->required();
    gen->add_option("args", ge_args, "generator arguments");
    gen->add_option("--nest", ge_nest, "chain-join nesting counts");
    gen->add_option("--seed", ge_seed, "random generator seed");

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return cmd_analyze(an_file, an_pseudo, an_mu, an_pg, as_json);
        if (solve->parsed()) {
            if (!so_k && !so_t) throw ParseError("solve: need --k or --target");
            return cmd_solve(so_file, so_k, so_t, as_json);
        }
        if (kernel->parsed()) {
            if (!ke_k && !ke_t) throw ParseError("kernel: need --k or --target");
            return cmd_kernel(ke_file, ke_k, ke_t, ke_out, ke_trace, as_json);
        }
        if (hered->parsed()) return cmd_hereditary(he_file, he_witness, as_json);
        if (verify->parsed()) return cmd_verify(ve_graph, ve_weights, as_json);
        if (oracle->parsed()) {
            if (omds->parsed()) return cmd_oracle_mds(om_file, as_json);
            if (over->parsed()) return cmd_verify(ov_graph, ov_weights, as_json);
            if (okeq->parsed()) return cmd_oracle_structure(ok_file, ok_k, false, as_json);
            if (otgt->parsed()) return cmd_oracle_structure(ot_file, ot_t, true, as_json);
        }
        if (gen->parsed()) return cmd_generate(ge_kind, ge_args, ge_nest, ge_seed);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}
