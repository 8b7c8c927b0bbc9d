#include "egm/serialize.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "egm/error.hpp"

namespace egm {

Json to_json(const VertexSet& s) { return s.members(); }

Json to_json(const EdgeList& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json to_json(const Decomposition& pi) {
  Json blocks = Json::array();
  for (const auto& b : pi.blocks()) blocks.push_back(b);
  return {{"S", pi.s()}, {"blocks", blocks}};
}

namespace {

std::vector<Vertex> vertex_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of vertices");
  std::vector<Vertex> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw InputError(std::string(what) + " must contain non-negative integers");
    const auto value = v.get<std::uint64_t>();
    if (value > 0xffffffffULL) throw InputError("vertex label too large");
    out.push_back(static_cast<Vertex>(value));
  }
  return out;
}

}  // namespace

Decomposition decomposition_from_json(const Json& j, std::size_t n) {
  if (!j.is_object() || !j.contains("S") || !j.contains("blocks"))
    throw InputError("partition JSON needs keys \"S\" and \"blocks\"");
  std::vector<Vertex> s = vertex_list(j.at("S"), "S");
  const Json& blocks_json = j.at("blocks");
  if (!blocks_json.is_array()) throw InputError("blocks must be an array of arrays");
  std::vector<std::vector<Vertex>> blocks;
  for (const auto& b : blocks_json) blocks.push_back(vertex_list(b, "block"));
  return Decomposition(n, std::move(s), std::move(blocks));
}

Decomposition parse_decomposition(const std::string& text, std::size_t n) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed partition JSON: ") + e.what());
  }
  return decomposition_from_json(j, n);
}

Json to_json(const Matching& m) { return {{"nu", m.size()}, {"pairs", to_json(m.pairs)}}; }

Json to_json(const TBWitness& w) {
  return {{"S", to_json(w.s_set)},
          {"odd_count", w.odd_count},
          {"deficiency", w.deficiency},
          {"exhaustive", w.exhaustive},
          {"certified", w.certified}};
}

Json to_json(const FormWitness& f) {
  return {{"form", f.kind == FormKind::kForm1 ? "Form1" : "Form2"}, {"set", to_json(f.set)}};
}

namespace {

Json forms_json(const std::vector<FormWitness>& forms) {
  if (forms.empty()) return Json::array({Json{{"form", "NonCanonical"}}});
  Json out = Json::array();
  for (const auto& f : forms) out.push_back(to_json(f));
  return out;
}

}  // namespace

Json to_json(const ExtremalResult& r) {
  Json forms = Json::array();
  Json maximizers = Json::array();
  for (const auto& m : r.maximizers) {
    forms.push_back(forms_json(m.forms));
    maximizers.push_back(to_json(m.edges));
  }
  Json out = {{"k", r.k},
              {"size", r.size},
              {"exact", r.exact},
              {"maximizer_count", r.maximizers.size()},
              {"forms", forms},
              {"maximizers", maximizers}};
  if (r.partition) out["partition"] = to_json(*r.partition);
  return out;
}

Json to_json(const EgVerdict& v) {
  Json forms = Json::array();
  for (const auto& f : v.forms) forms.push_back(forms_json(f));
  Json out = {{"k", v.k},
              {"verdict", v.holds ? "HOLDS" : "FAILS"},
              {"size", v.size},
              {"maximizer_count", v.maximizer_count},
              {"forms", forms}};
  if (v.counterexample) out["counterexample"] = to_json(*v.counterexample);
  return out;
}

Json to_json(const CaseThresholds& t) {
  return {{"n", t.n},
          {"frac_small", t.frac_small},
          {"ratio", t.ratio},
          {"y_small", t.y_small},
          {"log_half", t.log_half},
          {"s_cut", t.s_cut}};
}

Json to_json(const MoveReport& r) {
  return {{"case_id", r.case_id},
          {"thresholds", to_json(r.thresholds)},
          {"pi_before", to_json(r.before)},
          {"pi_after", to_json(r.after)},
          {"size_before", r.size_before},
          {"size_after", r.size_after},
          {"gained", r.gained},
          {"lost", r.lost},
          {"moved_set", r.moved},
          {"chosen", r.chosen},
          {"r", r.after.r()}};
}

Json to_json(const BoundPair& b) {
  return {{"phi_form", b.phi_form},
          {"quadratic_form", b.quadratic_form},
          {"lambda_used", b.lambda_used},
          {"degenerate", b.degenerate},
          {"clamped", b.clamped}};
}

Json to_json(const LargeDeviationBound& b) { return {{"value", b.value}, {"vacuous", b.vacuous}}; }

Json to_json(const BudgetReport& r) {
  Json out = {{"tag", to_string(r.tag)}, {"n", r.n}, {"p", r.p}, {"eps", r.epsilon}};
  // JSON has no infinities: an empty sum reports null.
  out["value_log10"] = std::isfinite(r.log10_value) ? Json(r.log10_value) : Json(nullptr);
  out["vacuous"] = r.vacuous;
  out["empty_range"] = r.empty_range;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json to_json(const SizeFormula& f) {
  const char* branch = f.branch == SizeBranch::kFirst ? "first" : f.branch == SizeBranch::kSecond ? "second" : "tie";
  return {{"value", f.value}, {"first", f.first}, {"second", f.second}, {"branch", branch}};
}

Json to_json(const P3Moments& m) {
  Json out = {{"mean", m.mean}, {"second_moment", m.second_moment}};
  out["ratio"] = m.ratio ? Json(*m.ratio) : Json(nullptr);
  return out;
}

Json to_json(const EgFailure& f) {
  return {{"fails", to_string(f.fails)},
          {"nu", f.nu},
          {"support", f.support},
          {"support_fits", f.support_fits},
          {"tau_eq_nu", to_string(f.tau_eq_nu)},
          {"reason", f.reason}};
}

Json to_json(const FailureCertificate& c) {
  Json pair = Json::array();
  for (const auto& p : c.p3_pair) pair.push_back({p[0], p[1], p[2]});
  return {{"p3_pair", pair},
          {"empty_half", to_string(c.empty_half)},
          {"present", c.present},
          {"conclusion", c.present ? "EG fails at k = nu" : "none"},
          {"eg_fails_at_nu", to_json(c.check)},
          {"reason", c.reason}};
}

Json to_json(const DensityAudit& a) {
  Json lines = Json::array();
  for (const auto& l : a.lines)
    lines.push_back(
        {{"event", to_string(l.event)}, {"samples", l.samples}, {"violations", l.violations}, {"skipped", l.skipped}});
  return {{"epsilon", a.epsilon}, {"p", a.p}, {"events", lines}};
}

Json to_json(const Rate& r) {
  return {{"successes", r.successes}, {"total", r.total}, {"rate", r.rate}, {"wilson95", {r.lower, r.upper}}};
}

Json to_json(const TrialSummary& s) {
  Json out = {{"schema", kSchema},
              {"regime", to_string(s.regime)},
              {"n", s.n},
              {"p", s.p.p},
              {"p_clamped", s.p.clamped},
              {"generator", kGnpGenerator},
              {"master_seed", s.master_seed},
              {"trials", s.trials},
              {"degenerate", s.degenerate}};
  if (s.p.middle_feasible) {
    out["middle_feasible"] = *s.p.middle_feasible;
    out["middle_interval_empty"] = *s.p.middle_interval_empty;
  }
  out["rates"] = {{"is_forest", to_json(s.forest)},
                  {"p3_pair", to_json(s.p3_pair)},
                  {"empty_half", to_json(s.empty_half)},
                  {"tau_eq_nu", to_json(s.tau_eq_nu)},
                  {"eg_all", to_json(s.eg_all)}};
  out["certificates"] = {{"present", s.certificates},
                         {"confirmed", s.certificates_confirmed},
                         {"contradicted", s.certificates_contradicted}};
  return out;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* eg_cell(Ternary t) {
  switch (t) {
    case Ternary::kYes: return "holds";
    case Ternary::kNo: return "fails";
    case Ternary::kUnknown: return "skipped";
  }
  return "skipped";
}

}  // namespace

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << kTrialCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.trial << ',' << r.seed << ',' << r.n << ',' << format_double(r.p) << ',' << r.m << ',' << r.nu << ','
        << (r.is_forest ? "true" : "false") << ',' << r.p3_count << ',' << to_string(r.empty_half) << ','
        << to_string(r.tau_eq_nu) << ',' << eg_cell(r.eg_all) << ',' << csv_field(r.notes) << '\n';
  }
}

}  // namespace egm
