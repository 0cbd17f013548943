// Command-line front end over the qsrg C API: constructions, verification,
// design extraction, collapse, classification, and parameter checks, with
// JSON artifacts and per-run manifests.

#include "qsrg.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

using CStr = std::unique_ptr<char, void (*)(char*)>;
CStr own(char* s) { return CStr(s, qsrg_string_free); }

using GraphHandle = std::unique_ptr<qsrg_graph, void (*)(qsrg_graph*)>;
GraphHandle own(qsrg_graph* g) { return GraphHandle(g, qsrg_graph_free); }

[[noreturn]] void fail(int exit_code, const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(exit_code);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(2, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(2, "cannot write " + path);
    out << content;
}

struct Manifest {
    std::string subcommand;
    json parameters = json::object();
    std::vector<std::string> inputs = {};
    std::vector<std::string> outputs = {};
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void write() const {
        if (outputs.empty())
            return;
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
        json m;
        m["subcommand"] = subcommand;
        m["parameters"] = parameters;
        m["inputs"] = inputs;
        m["outputs"] = outputs;
        m["determinism"] = "seed-free; artifacts are byte-stable across runs and worker counts";
        m["wall_time_ms"] = ms;
        m["tool_version"] = qsrg_version();
        write_file(outputs.front() + ".manifest.json", m.dump() + "\n");
    }
};

GraphHandle load_graph(const std::string& path) {
    std::string text = read_file(path);
    qsrg_graph* g = nullptr;
    if (qsrg_graph_from_json(text.c_str(), &g) != QSRG_OK)
        fail(2, std::string(qsrg_last_error()) + " in " + path);
    return own(g);
}

std::string render(const json& value) {
    return value.is_null() ? "undefined" : value.dump();
}

int run_construct(const std::string& type, int v, int q, std::optional<int> t,
                  const std::string& out_path) {
    Manifest manifest{"construct"};
    manifest.parameters = {{"type", type}, {"v", v}, {"q", q}};
    if (t)
        manifest.parameters["t"] = *t;
    if (type == "spread" && !t)
        fail(2, "spread needs --t");
    qsrg_graph* raw = nullptr;
    if (qsrg_construct(type.c_str(), v, q, t.value_or(0), &raw) != QSRG_OK)
        fail(2, qsrg_last_error());
    GraphHandle g = own(raw);
    char* text = nullptr;
    if (qsrg_graph_to_json(g.get(), &text) != QSRG_OK)
        fail(2, qsrg_last_error());
    CStr owned = own(text);
    write_file(out_path, owned.get());
    manifest.outputs = {out_path};
    manifest.write();
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int run_verify(const std::string& graph_path, const std::string& out_path, bool as_json) {
    Manifest manifest{"verify"};
    manifest.inputs = {graph_path};
    GraphHandle g = load_graph(graph_path);
    char* raw = nullptr;
    if (qsrg_verify(g.get(), &raw) != QSRG_OK)
        fail(2, qsrg_last_error());
    CStr report_text = own(raw);
    json r = json::parse(report_text.get());
    if (!out_path.empty()) {
        write_file(out_path, report_text.get());
        manifest.outputs = {out_path};
        manifest.write();
    }
    if (as_json) {
        std::cout << report_text.get();
    } else if (r["srg"].get<bool>()) {
        std::cout << "SRG(" << r["v"] << "," << r["k"] << "," << render(r["lambda"]) << ","
                  << render(r["mu"]) << ";" << r["q"] << ")";
        if (!r["identity"].is_null())
            std::cout << ", identity " << r["identity"]["lhs"] << "=" << r["identity"]["rhs"];
        std::cout << "\n";
    } else if (r["regular"].get<bool>()) {
        std::cout << "regular k=" << r["k"] << ", not strongly regular\n";
    } else {
        std::cout << "not a regular q-ary graph\n";
    }
    if (r["srg"].get<bool>())
        return 0;
    return r["regular"].get<bool>() ? 1 : 3;
}

int run_design(const std::string& graph_path, const std::string& out_path, bool as_json) {
    Manifest manifest{"design"};
    manifest.inputs = {graph_path};
    GraphHandle g = load_graph(graph_path);
    char *design_raw = nullptr, *verdict_raw = nullptr;
    qsrg_status st = qsrg_design(g.get(), &design_raw, &verdict_raw);
    if (st == QSRG_ERR_WRONG_PARAMETER_SHAPE || st == QSRG_ERR_NOT_STRONGLY_REGULAR)
        fail(4, qsrg_last_error());
    if (st != QSRG_OK)
        fail(2, qsrg_last_error());
    CStr design_text = own(design_raw), verdict_text = own(verdict_raw);
    write_file(out_path, design_text.get());
    manifest.outputs = {out_path};
    manifest.write();
    json verdict = json::parse(verdict_text.get());
    if (as_json)
        std::cout << verdict_text.get();
    else
        std::cout << "design " << verdict["t"] << "-(" << verdict["v"] << ","
                  << render(verdict["block_dim"]) << "," << verdict["lambda"] << ";"
                  << verdict["q"] << ") with " << verdict["block_count"]
                  << " blocks: " << (verdict["verified"].get<bool>() ? "verified" : "FAILED")
                  << "\n";
    return verdict["verified"].get<bool>() ? 0 : 1;
}

int run_collapse(const std::string& graph_path, const std::string& out_path, bool as_json) {
    Manifest manifest{"collapse"};
    manifest.inputs = {graph_path};
    GraphHandle g = load_graph(graph_path);
    char *graph_raw = nullptr, *verdict_raw = nullptr;
    if (qsrg_collapse(g.get(), &graph_raw, &verdict_raw) != QSRG_OK)
        fail(2, qsrg_last_error());
    CStr graph_text = own(graph_raw), verdict_text = own(verdict_raw);
    write_file(out_path, graph_text.get());
    manifest.outputs = {out_path};
    manifest.write();
    json verdict = json::parse(verdict_text.get());
    if (as_json) {
        std::cout << verdict_text.get();
    } else if (verdict["srg"].is_null()) {
        std::cout << "collapse: " << verdict["n"] << " vertices, not strongly regular, "
                  << verdict["components"] << " components\n";
    } else {
        const json& s = verdict["srg"];
        std::cout << "collapse: SRG(" << s["n"] << "," << s["k"] << "," << render(s["lambda"])
                  << "," << render(s["mu"]) << "), " << verdict["components"] << " components\n";
    }
    return 0;
}

int run_classify(int v, int q, std::optional<int> k, std::optional<long long> lambda,
                 std::optional<long long> mu, double nodes, int workers, bool fix_symmetry,
                 const std::string& out_path, bool as_json) {
    Manifest manifest{"classify"};
    manifest.parameters = {{"v", v}, {"q", q}, {"workers", workers},
                           {"fix_symmetry", fix_symmetry}};
    if (k)
        manifest.parameters["k"] = *k;
    if (lambda)
        manifest.parameters["lambda"] = *lambda;
    if (mu)
        manifest.parameters["mu"] = *mu;
    if (nodes > 0)
        manifest.parameters["nodes"] = nodes;

    qsrg_classify_options opt{};
    opt.has_k = k.has_value();
    opt.k = k.value_or(0);
    opt.has_lambda = lambda.has_value();
    opt.lambda = lambda.value_or(0);
    opt.has_mu = mu.has_value();
    opt.mu = mu.value_or(0);
    opt.node_budget = nodes > 0 ? static_cast<uint64_t>(nodes) : 0;
    opt.workers = workers;
    opt.fix_symmetry = fix_symmetry ? 1 : 0;

    bool single_tuple = k && lambda && mu;
    char *report_raw = nullptr, *graphs_raw = nullptr;
    qsrg_status st = qsrg_classify(v, q, &opt, &report_raw,
                                   single_tuple && !out_path.empty() ? &graphs_raw : nullptr);
    if (st != QSRG_OK)
        fail(2, qsrg_last_error());
    CStr report_text = own(report_raw);
    json report = json::parse(report_text.get());

    if (!out_path.empty()) {
        write_file(out_path, report_text.get());
        manifest.outputs = {out_path};
        if (graphs_raw) {
            CStr graphs_text = own(graphs_raw);
            write_file(out_path + ".graphs.jsonl", graphs_text.get());
            manifest.outputs.push_back(out_path + ".graphs.jsonl");
        }
        manifest.write();
    } else if (graphs_raw) {
        qsrg_string_free(graphs_raw);
    }

    bool exhausted = false;
    uint64_t others = 0;
    if (as_json) {
        std::cout << report_text.get();
    }
    for (const json& t : report["tuples"]) {
        if (!as_json)
            std::cout << "k=" << t["k"] << " lambda=" << t["lambda"] << " mu=" << t["mu"]
                      << " count=" << t["count"]
                      << " families(spread_union=" << t["families"]["spread_union"]
                      << ", symplectic=" << t["families"]["symplectic"]
                      << ", other=" << t["families"]["other"] << ") nodes=" << t["nodes"]
                      << (t["complete"].get<bool>() ? "" : " INCOMPLETE") << "\n";
        if (!t["complete"].get<bool>())
            exhausted = true;
        others += t["families"]["other"].get<uint64_t>();
    }
    if (others > 0)
        return 5; // a graph outside the two families contradicts the classification
    if (exhausted)
        return 6;
    return 0;
}

int run_params(int v, int k, long long lambda, long long mu, long long q, bool as_json) {
    char* raw = nullptr;
    if (qsrg_params(v, k, lambda, mu, q, &raw) != QSRG_OK)
        fail(2, qsrg_last_error());
    CStr text = own(raw);
    json r = json::parse(text.get());
    if (as_json) {
        std::cout << text.get();
    } else {
        std::cout << "identity " << r["identity"]["lhs"] << " = " << r["identity"]["rhs"] << ", "
                  << (r["identity"]["holds"].get<bool>() ? "holds" : "fails");
        if (r["decomposition"].is_null())
            std::cout << " (q=1: no projective decomposition)";
        else if (r["decomposition"]["projective"].get<bool>())
            std::cout << "; l=" << r["decomposition"]["l"] << ", m=" << r["decomposition"]["m"];
        else
            std::cout << "; not projective";
        std::cout << "\n";
    }
    return r["identity"]["holds"].get<bool>() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-analogs of strongly regular graphs: construct, verify, classify"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qsrg_version()));

    bool as_json = false;
    bool as_text = false;
    app.add_flag("--json", as_json, "print reports as JSON");
    app.add_flag("--text", as_text, "print reports as text (default)");

    auto* construct = app.add_subcommand("construct", "build a named q-ary graph");
    std::string c_type, c_out;
    int c_v = 0, c_q = 0;
    std::optional<int> c_t;
    construct->add_option("--type", c_type, "complete|spread|symplectic")->required();
    construct->add_option("--v", c_v, "ambient dimension")->required();
    construct->add_option("--q", c_q, "field order")->required();
    construct->add_option("--t", c_t, "spread member dimension");
    construct->add_option("-o,--out", c_out, "graph JSON output path")->required();

    auto* verify = app.add_subcommand("verify", "check regularity and strong regularity");
    std::string v_graph, v_out;
    verify->add_option("graph", v_graph, "graph JSON path")->required();
    verify->add_option("-o,--out", v_out, "report JSON output path");

    auto* design = app.add_subcommand("design", "extract and verify the neighborhood design");
    std::string d_graph, d_out;
    design->add_option("graph", d_graph, "graph JSON path")->required();
    design->add_option("-o,--out", d_out, "design JSON output path")->required();

    auto* collapse = app.add_subcommand("collapse", "collapse to a classical graph");
    std::string p_graph, p_out;
    collapse->add_option("graph", p_graph, "graph JSON path")->required();
    collapse->add_option("-o,--out", p_out, "classical graph JSON output path")->required();

    auto* classify = app.add_subcommand("classify", "exhaustively enumerate srg q-ary graphs");
    int y_v = 0, y_q = 0, y_workers = 1;
    std::optional<int> y_k;
    std::optional<long long> y_lambda, y_mu;
    double y_nodes = 0;
    bool y_fix = false;
    std::string y_out;
    classify->add_option("--v", y_v, "ambient dimension")->required();
    classify->add_option("--q", y_q, "field order")->required();
    classify->add_option("--k", y_k, "restrict to one regularity degree");
    classify->add_option("--lambda", y_lambda, "target lambda (needs --k and --mu)");
    classify->add_option("--mu", y_mu, "target mu (needs --k and --lambda)");
    classify->add_option("--nodes", y_nodes, "search node budget (e.g. 5e9)");
    classify->add_option("--workers", y_workers, "worker thread count");
    classify->add_flag("--fix-symmetry", y_fix, "fix the first neighborhood; scale counts");
    classify->add_option("-o,--out", y_out, "report JSON output path");

    auto* params = app.add_subcommand("params", "parameter identity and decomposition");
    int m_v = 0, m_k = 0;
    long long m_lambda = 0, m_mu = 0, m_q = 0;
    params->add_option("--v", m_v)->required();
    params->add_option("--k", m_k)->required();
    params->add_option("--lambda", m_lambda)->required();
    params->add_option("--mu", m_mu)->required();
    params->add_option("--q", m_q)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed())
            return run_construct(c_type, c_v, c_q, c_t, c_out);
        if (verify->parsed())
            return run_verify(v_graph, v_out, as_json);
        if (design->parsed())
            return run_design(d_graph, d_out, as_json);
        if (collapse->parsed())
            return run_collapse(p_graph, p_out, as_json);
        if (classify->parsed())
            return run_classify(y_v, y_q, y_k, y_lambda, y_mu, y_nodes, y_workers, y_fix, y_out,
                                as_json);
        if (params->parsed())
            return run_params(m_v, m_k, m_lambda, m_mu, m_q, as_json);
    } catch (const std::exception& e) {
        fail(2, e.what());
    }
    return 2;
}
