#pragma once

#include "qsrg/analysis.hpp"
#include "qsrg/classify.hpp"

#include "json.hpp"

#include <string>

namespace qsrg {

// Wire formats. Objects serialize with alphabetical keys and compact layout,
// so identical data is byte-identical.

nlohmann::json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const nlohmann::json& j);

nlohmann::json subspace_to_json(const Subspace& s);

nlohmann::json graph_to_json(const QaryGraph& g);
/// Parses and fully validates; inner and outer edge lists are canonicalized.
QaryGraph graph_from_json(const nlohmann::json& j);

nlohmann::json design_to_json(const SubspaceDesign& d);
nlohmann::json classical_to_json(const ClassicalGraph& c);
nlohmann::json report_to_json(const ClassificationReport& r);

/// Verification verdict for a validated graph: regularity, srg parameters,
/// and the parameter-identity cross-check.
nlohmann::json verification_report(const QaryGraph& g);

/// Identity + projective decomposition report for a parameter tuple.
nlohmann::json params_report(int v, int k, int64_t lambda, int64_t mu, int64_t q);

/// Collapse verdict: component count and the classical srg check.
nlohmann::json collapse_report(const ClassicalGraph& c);

/// Design verdict: verified flag plus the first counterexample, if any.
nlohmann::json design_report(const SubspaceDesign& d);

/// Compact dump with a trailing newline; the byte-stable artifact format.
std::string dump_canonical(const nlohmann::json& j);

} // namespace qsrg
