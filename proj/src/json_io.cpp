#include "qsrg/json_io.hpp"

#include "qsrg/errors.hpp"
#include "qsrg/qnum.hpp"

#include <algorithm>

namespace qsrg {

using nlohmann::json;

namespace {

int get_int(const json& j, const char* key, int lo, int hi) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw Error(Errc::invalid_input, std::string("missing integer field \"") + key + "\"");
    int64_t x = j[key].get<int64_t>();
    if (x < lo || x > hi)
        throw Error(Errc::invalid_input, std::string("field \"") + key + "\" out of range");
    return static_cast<int>(x);
}

} // namespace

json field_to_json(const FieldSpec& f) {
    json j;
    j["p"] = f.p();
    j["e"] = f.e();
    if (f.e() > 1)
        j["modulus"] = f.modulus();
    return j;
}

FieldSpec field_from_json(const json& j) {
    if (!j.is_object())
        throw Error(Errc::invalid_input, "field must be an object");
    int p = get_int(j, "p", 2, 16);
    int e = get_int(j, "e", 1, 4);
    if (e == 1) {
        if (j.contains("modulus"))
            throw Error(Errc::invalid_input, "prime field carries no modulus");
        return FieldSpec::make(p);
    }
    if (!j.contains("modulus") || !j["modulus"].is_array())
        throw Error(Errc::invalid_input, "extension field needs a modulus array");
    std::vector<int> modulus;
    for (const json& c : j["modulus"]) {
        if (!c.is_number_integer())
            throw Error(Errc::invalid_input, "modulus coefficients must be integers");
        modulus.push_back(c.get<int>());
    }
    return FieldSpec::make(p, e, std::move(modulus));
}

json subspace_to_json(const Subspace& s) {
    json j;
    j["v"] = s.ambient_dim;
    j["dim"] = s.dim();
    j["basis"] = json::array();
    for (const Row& r : s.basis)
        j["basis"].push_back(std::vector<int>(r.begin(), r.end()));
    return j;
}

json graph_to_json(const QaryGraph& g) {
    json j;
    j["field"] = field_to_json(g.field);
    j["v"] = g.v;
    j["edges"] = json::array();
    for (const Edge& e : g.edges)
        j["edges"].push_back(e);
    return j;
}

QaryGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field"))
        throw Error(Errc::invalid_input, "graph must be an object with a field");
    FieldSpec f = field_from_json(j["field"]);
    int v = get_int(j, "v", 2, kMaxAmbientDim);
    if (!j.contains("edges") || !j["edges"].is_array())
        throw Error(Errc::invalid_input, "graph needs an edges array");
    QaryGraph g{f, v, {}};
    for (const json& je : j["edges"]) {
        if (!je.is_array())
            throw Error(Errc::invalid_input, "each edge must be an array of point indices");
        Edge e;
        for (const json& p : je) {
            if (!p.is_number_integer())
                throw Error(Errc::invalid_input, "point indices must be integers");
            e.push_back(p.get<int32_t>());
        }
        std::sort(e.begin(), e.end());
        g.edges.push_back(std::move(e));
    }
    std::sort(g.edges.begin(), g.edges.end());
    validate_graph(g);
    return g;
}

json design_to_json(const SubspaceDesign& d) {
    json j;
    j["v"] = d.v;
    j["field"] = field_to_json(d.field);
    j["t"] = d.t;
    j["lambda"] = d.lambda;
    std::vector<std::vector<int32_t>> blocks;
    blocks.reserve(d.blocks.size());
    for (const Subspace& b : d.blocks)
        blocks.push_back(subspace_points(d.field, b));
    std::sort(blocks.begin(), blocks.end());
    j["blocks"] = blocks;
    return j;
}

json classical_to_json(const ClassicalGraph& c) {
    json j;
    j["n"] = c.n;
    j["edges"] = json::array();
    for (auto [a, b] : c.edge_list())
        j["edges"].push_back(std::vector<int32_t>{a, b});
    return j;
}

json report_to_json(const ClassificationReport& r) {
    json j;
    j["v"] = r.v;
    j["q"] = r.q;
    j["tuples"] = json::array();
    for (const TupleReport& t : r.tuples) {
        json jt;
        jt["k"] = t.k;
        jt["lambda"] = t.lambda;
        jt["mu"] = t.mu;
        jt["count"] = t.count;
        jt["families"] = {{"spread_union", t.spread_union},
                          {"symplectic", t.symplectic},
                          {"other", t.other}};
        jt["nodes"] = t.nodes;
        jt["complete"] = t.complete;
        j["tuples"].push_back(jt);
    }
    return j;
}

json verification_report(const QaryGraph& g) {
    json j;
    j["valid"] = true;
    j["v"] = g.v;
    j["q"] = g.field.q();
    j["edge_count"] = g.edges.size();
    auto k = is_regular(g);
    j["regular"] = k.has_value();
    j["k"] = k ? json(*k) : json(nullptr);
    j["lambda"] = nullptr;
    j["mu"] = nullptr;
    j["identity"] = nullptr;
    if (!k) {
        j["srg"] = false;
        return j;
    }
    auto params = srg_parameters(g);
    j["srg"] = params.has_value();
    if (params) {
        if (params->lambda)
            j["lambda"] = *params->lambda;
        if (params->mu)
            j["mu"] = *params->mu;
        if (params->lambda && params->mu) {
            IdentityCheck id =
                parameter_identity(g.v, *k, *params->lambda, *params->mu, g.field.q());
            j["identity"] = {{"lhs", id.lhs}, {"rhs", id.rhs}, {"holds", id.holds}};
        }
    }
    return j;
}

json params_report(int v, int k, int64_t lambda, int64_t mu, int64_t q) {
    json j;
    j["v"] = v;
    j["k"] = k;
    j["lambda"] = lambda;
    j["mu"] = mu;
    j["q"] = q;
    IdentityCheck id = parameter_identity(v, k, lambda, mu, q);
    j["identity"] = {{"lhs", id.lhs}, {"rhs", id.rhs}, {"holds", id.holds}};
    if (q >= 2) {
        auto lm = projective_count_decompose(lambda, mu, q);
        if (lm)
            j["decomposition"] = {{"projective", true}, {"l", lm->first}, {"m", lm->second}};
        else
            j["decomposition"] = {{"projective", false}};
    } else {
        j["decomposition"] = nullptr;
    }
    return j;
}

json collapse_report(const ClassicalGraph& c) {
    json j;
    j["n"] = c.n;
    j["components"] = component_count(c);
    auto srg = verify_classical_srg(c);
    if (srg) {
        j["srg"] = {{"n", srg->n},
                    {"k", srg->k},
                    {"lambda", srg->lambda ? json(*srg->lambda) : json(nullptr)},
                    {"mu", srg->mu ? json(*srg->mu) : json(nullptr)}};
    } else {
        j["srg"] = nullptr;
    }
    return j;
}

json design_report(const SubspaceDesign& d) {
    json j;
    j["v"] = d.v;
    j["q"] = d.field.q();
    j["t"] = d.t;
    j["lambda"] = d.lambda;
    j["block_count"] = d.blocks.size();
    j["block_dim"] = d.blocks.empty() ? json(nullptr) : json(d.blocks.front().dim());
    auto cex = verify_design(d);
    j["verified"] = !cex.has_value();
    j["counterexample"] =
        cex ? json{{"t_subspace", subspace_to_json(cex->t_subspace)}, {"count", cex->count}}
            : json(nullptr);
    return j;
}

std::string dump_canonical(const json& j) { return j.dump() + "\n"; }

} // namespace qsrg
