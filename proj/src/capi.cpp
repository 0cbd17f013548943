#include "qsrg.h"

#include "qsrg/analysis.hpp"
#include "qsrg/classify.hpp"
#include "qsrg/constructions.hpp"
#include "qsrg/errors.hpp"
#include "qsrg/json_io.hpp"

#include <cstring>
#include <string>

struct qsrg_graph {
    qsrg::QaryGraph g;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qsrg_status map_code(qsrg::Errc code) {
    using qsrg::Errc;
    switch (code) {
    case Errc::invalid_edge: return QSRG_ERR_INVALID_EDGE;
    case Errc::duplicate_edge: return QSRG_ERR_DUPLICATE_EDGE;
    case Errc::not_divisible: return QSRG_ERR_NOT_DIVISIBLE;
    case Errc::odd_dimension: return QSRG_ERR_ODD_DIMENSION;
    case Errc::not_strongly_regular: return QSRG_ERR_NOT_STRONGLY_REGULAR;
    case Errc::wrong_parameter_shape: return QSRG_ERR_WRONG_PARAMETER_SHAPE;
    case Errc::not_polarity: return QSRG_ERR_NOT_POLARITY;
    case Errc::not_symplectic: return QSRG_ERR_NOT_SYMPLECTIC;
    case Errc::budget_exceeded: return QSRG_ERR_BUDGET_EXCEEDED;
    case Errc::overflow: return QSRG_ERR_OVERFLOW;
    default: return QSRG_ERR_INVALID_ARGUMENT;
    }
}

template <typename Fn>
qsrg_status guarded(Fn&& fn) {
    try {
        fn();
        return QSRG_OK;
    } catch (const qsrg::Error& e) {
        t_last_error = e.what();
        return map_code(e.code());
    } catch (const nlohmann::json::exception& e) {
        t_last_error = e.what();
        return QSRG_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return QSRG_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* qsrg_version(void) { return "0.1.0"; }

const char* qsrg_last_error(void) { return t_last_error.c_str(); }

void qsrg_string_free(char* s) { delete[] s; }

void qsrg_graph_free(qsrg_graph* g) { delete g; }

qsrg_status qsrg_construct(const char* type, int v, int q, int t, qsrg_graph** out) {
    return guarded([&] {
        if (!type || !out)
            throw qsrg::Error(qsrg::Errc::invalid_input, "null argument");
        qsrg::FieldSpec f = qsrg::FieldSpec::of_order(q);
        std::string kind(type);
        qsrg::QaryGraph g{f, v, {}};
        if (kind == "complete") {
            g = qsrg::complete_graph(f, v);
        } else if (kind == "spread") {
            g = qsrg::spread_graph(f, qsrg::desarguesian_spread(f, v, t));
        } else if (kind == "symplectic") {
            g = qsrg::symplectic_graph(f, v);
        } else {
            throw qsrg::Error(qsrg::Errc::invalid_input, "unknown construction \"" + kind + "\"");
        }
        *out = new qsrg_graph{std::move(g)};
    });
}

qsrg_status qsrg_graph_from_json(const char* json_text, qsrg_graph** out) {
    return guarded([&] {
        if (!json_text || !out)
            throw qsrg::Error(qsrg::Errc::invalid_input, "null argument");
        nlohmann::json j = nlohmann::json::parse(json_text);
        *out = new qsrg_graph{qsrg::graph_from_json(j)};
    });
}

qsrg_status qsrg_graph_to_json(const qsrg_graph* g, char** out_json) {
    return guarded([&] {
        if (!g || !out_json)
            throw qsrg::Error(qsrg::Errc::invalid_input, "null argument");
        *out_json = dup_string(qsrg::dump_canonical(qsrg::graph_to_json(g->g)));
    });
}

qsrg_status qsrg_verify(const qsrg_graph* g, char** out_report_json) {
    return guarded([&] {
        if (!g || !out_report_json)
            throw qsrg::Error(qsrg::Errc::invalid_input, "null argument");
        *out_report_json = dup_string(qsrg::dump_canonical(qsrg::verification_report(g->g)));
    });
}

qsrg_status qsrg_design(const qsrg_graph* g, char** out_design_json, char** out_verdict_json) {
    return guarded([&] {
        if (!g || !out_design_json || !out_verdict_json)
            throw qsrg::Error(qsrg::Errc::invalid_input, "null argument");
        qsrg::SubspaceDesign d = qsrg::neighborhood_design(g->g);
        *out_design_json = dup_string(qsrg::dump_canonical(qsrg::design_to_json(d)));
        *out_verdict_json = dup_string(qsrg::dump_canonical(qsrg::design_report(d)));
    });
}

qsrg_status qsrg_collapse(const qsrg_graph* g, char** out_graph_json, char** out_verdict_json) {
    return guarded([&] {
        if (!g || !out_graph_json || !out_verdict_json)
            throw qsrg::Error(qsrg::Errc::invalid_input, "null argument");
        qsrg::ClassicalGraph c = qsrg::collapse(g->g);
        *out_graph_json = dup_string(qsrg::dump_canonical(qsrg::classical_to_json(c)));
        *out_verdict_json = dup_string(qsrg::dump_canonical(qsrg::collapse_report(c)));
    });
}

qsrg_status qsrg_params(int v, int k, long long lambda, long long mu, long long q,
                        char** out_json) {
    return guarded([&] {
        if (!out_json)
            throw qsrg::Error(qsrg::Errc::invalid_input, "null argument");
        *out_json = dup_string(qsrg::dump_canonical(qsrg::params_report(v, k, lambda, mu, q)));
    });
}

qsrg_status qsrg_classify(int v, int q, const qsrg_classify_options* options,
                          char** out_report_json, char** out_graphs_jsonl) {
    return guarded([&] {
        if (!options || !out_report_json)
            throw qsrg::Error(qsrg::Errc::invalid_input, "null argument");
        if ((options->has_lambda || options->has_mu) &&
            !(options->has_k && options->has_lambda && options->has_mu))
            throw qsrg::Error(qsrg::Errc::invalid_input,
                              "lambda and mu require k and each other");
        qsrg::FieldSpec f = qsrg::FieldSpec::of_order(q);
        qsrg::SearchConfig cfg;
        cfg.v = v;
        cfg.node_budget = options->node_budget ? options->node_budget : qsrg::kDefaultNodeBudget;
        cfg.workers = options->workers > 0 ? options->workers : 1;
        cfg.symmetry_fixing = options->fix_symmetry != 0;

        qsrg::ClassificationReport report{v, q, {}};
        std::string graphs_jsonl;
        bool single_tuple = options->has_k && options->has_lambda && options->has_mu;

        auto run_tuple = [&](int k, int64_t lambda, int64_t mu, bool capture) {
            qsrg::SearchConfig tcfg = cfg;
            tcfg.k = k;
            tcfg.lambda = lambda;
            tcfg.mu = mu;
            qsrg::SearchStats stats;
            auto graphs = qsrg::enumerate_srg(f, tcfg, &stats);
            qsrg::TupleReport t;
            t.k = k;
            t.lambda = lambda;
            t.mu = mu;
            t.count = graphs.size() * stats.count_multiplier;
            t.nodes = stats.nodes;
            t.complete = stats.complete;
            for (const qsrg::QaryGraph& g : graphs) {
                switch (qsrg::classify_family(g)) {
                case qsrg::Family::spread_union: t.spread_union += stats.count_multiplier; break;
                case qsrg::Family::symplectic: t.symplectic += stats.count_multiplier; break;
                case qsrg::Family::other: t.other += stats.count_multiplier; break;
                }
                if (capture)
                    graphs_jsonl += qsrg::dump_canonical(qsrg::graph_to_json(g));
            }
            report.tuples.push_back(t);
        };

        if (single_tuple) {
            run_tuple(options->k, options->lambda, options->mu, out_graphs_jsonl != nullptr);
        } else if (options->has_k) {
            for (auto [lambda, mu] : qsrg::admissible_tuples(v, options->k, q))
                run_tuple(options->k, lambda, mu, false);
        } else {
            for (int k = 1; k < v; ++k)
                for (auto [lambda, mu] : qsrg::admissible_tuples(v, k, q))
                    run_tuple(k, lambda, mu, false);
        }

        *out_report_json = dup_string(qsrg::dump_canonical(qsrg::report_to_json(report)));
        if (out_graphs_jsonl)
            *out_graphs_jsonl = single_tuple ? dup_string(graphs_jsonl) : nullptr;
    });
}

} // extern "C"
