#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "egm/bounds.hpp"
#include "egm/decomposition.hpp"
#include "egm/extremal.hpp"
#include "egm/harness.hpp"
#include "egm/matching.hpp"
#include "egm/moves.hpp"

namespace egm {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "eg-matchlab/1";

Json to_json(const VertexSet& s);
Json to_json(const EdgeList& edges);

/// {"S":[...],"blocks":[[...],...]}
Json to_json(const Decomposition& pi);
/// Throws InputError on malformed input or an invalid partition of n vertices.
Decomposition decomposition_from_json(const Json& j, std::size_t n);
Decomposition parse_decomposition(const std::string& text, std::size_t n);

Json to_json(const Matching& m);
Json to_json(const TBWitness& w);
Json to_json(const FormWitness& f);
Json to_json(const ExtremalResult& r);
Json to_json(const EgVerdict& v);
Json to_json(const CaseThresholds& t);
Json to_json(const MoveReport& r);
Json to_json(const BoundPair& b);
Json to_json(const LargeDeviationBound& b);
Json to_json(const BudgetReport& r);
Json to_json(const SizeFormula& f);
Json to_json(const P3Moments& m);
Json to_json(const EgFailure& f);
Json to_json(const FailureCertificate& c);
Json to_json(const DensityAudit& a);
Json to_json(const Rate& r);
Json to_json(const TrialSummary& s);

/// Shortest round-trip decimal form.
std::string format_double(double x);

inline constexpr const char* kTrialCsvHeader =
    "trial,seed,n,p,m,nu,is_forest,p3_count,empty_half,tau_eq_nu,eg_all,notes";

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records);

}  // namespace egm
