#include "prismfix/report.hpp"

#include <stdexcept>

#include "json.hpp"
#include "prismfix/graph_io.hpp"

namespace prismfix {

namespace {

using nlohmann::json;

json set_json(const VertexSet& s) { return s.to_vector(); }

json vertex_or_null(const std::optional<Vertex>& v) { return v ? json(*v) : json(nullptr); }

json contradiction_json(const Contradiction& c, std::size_t n) {
  // Copy-side vertices are reported with the v' = v + n convention.
  const bool copy_side = c.kind != ContradictionKind::SourcePackingOverlap;
  json vertices = json::array();
  for (Vertex v : c.vertices) vertices.push_back(copy_side ? v + n : v);
  return {{"kind", to_string(c.kind)}, {"vertices", vertices}, {"side", copy_side ? "copy" : "original"}};
}

json certificate_json(const AdversaryCertificate& cert) {
  json records = json::array();
  for (const auto& r : cert.records) {
    json rec = {{"a", set_json(r.sep.a)}, {"a1", set_json(r.sep.a1)}, {"a2", set_json(r.sep.a2)}};
    if (r.failure) {
      const auto& f = *r.failure;
      rec["case"] = to_string(f.tag);
      rec["v"] = vertex_or_null(f.v);
      rec["u"] = vertex_or_null(f.u);
      rec["w"] = vertex_or_null(f.w);
      rec["z"] = vertex_or_null(f.z);
      rec["contradiction"] = contradiction_json(f.contradiction, cert.order);
      rec["proof_step_literal"] = f.proof_step_literal;
    } else {
      rec["case"] = nullptr;
      rec["error"] = r.error;
    }
    records.push_back(std::move(rec));
  }
  return {
      {"applicable", true},
      {"graph", cert.graph6},
      {"n", cert.order},
      {"x", cert.x},
      {"pi", cert.pi.images()},
      {"pi_cycles", cert.pi.to_cycle_notation()},
      {"randomized", cert.randomized},
      {"gamma", cert.gamma},
      {"prism_gamma", cert.prism_gamma},
      {"separable_records", records},
      {"anomalies", cert.anomalies},
      {"flags",
       {{"adversary_conditions_ok", cert.adversary_conditions_ok},
        {"bounds_ok", cert.bounds_ok},
        {"no_effective_ok", cert.no_effective_ok},
        {"gamma_strict_increase_ok", cert.gamma_strict_increase_ok},
        {"classification_ok", cert.classification_ok}}},
      {"passed", cert.passed()},
  };
}

json outcome_json(const CheckOutcome& outcome) {
  if (const auto* cert = std::get_if<AdversaryCertificate>(&outcome)) return certificate_json(*cert);
  const auto& na = std::get<NotApplicable>(outcome);
  return {{"applicable", false}, {"graph", na.graph6}, {"reason", na.reason}};
}

json verdict_json(const FixerVerdict& v) {
  return {
      {"graph", v.graph6},
      {"n", v.order},
      {"gamma", v.gamma},
      {"universal_fixer", v.is_universal_fixer},
      {"witness_pi", v.witness_pi ? json(v.witness_pi->images()) : json(nullptr)},
      {"witness_prism_gamma", v.witness_prism_gamma ? json(*v.witness_prism_gamma) : json(nullptr)},
      {"permutations_tested", v.permutations_tested},
      {"automorphism_reduction", v.automorphism_reduction},
  };
}

ReportRecord make(ReportKind kind, const json& payload) { return {kind, kSchemaVersion, payload.dump()}; }

}  // namespace

std::string_view to_string(ReportKind kind) {
  switch (kind) {
    case ReportKind::Gamma: return "gamma";
    case ReportKind::Analyze: return "analyze";
    case ReportKind::Adversary: return "adversary";
    case ReportKind::Fixer: return "fixer";
    case ReportKind::SweepSummary: return "sweep-summary";
  }
  return "?";
}

std::string serialize(const ReportRecord& record) {
  json j = {{"kind", to_string(record.kind)},
            {"schema_version", record.schema_version},
            {"payload", json::parse(record.payload)}};
  return j.dump();
}

ReportRecord parse_report_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed report line: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.contains("schema_version") || !j.contains("payload"))
    throw std::invalid_argument("report line lacks kind, schema_version or payload");
  if (!j["kind"].is_string() || !j["schema_version"].is_number_integer() || !j["payload"].is_object())
    throw std::invalid_argument("report line has mistyped fields");

  ReportRecord r;
  const auto kind = j["kind"].get<std::string>();
  bool known = false;
  for (auto k : {ReportKind::Gamma, ReportKind::Analyze, ReportKind::Adversary, ReportKind::Fixer,
                 ReportKind::SweepSummary}) {
    if (to_string(k) == kind) {
      r.kind = k;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("unknown report kind: " + kind);
  r.schema_version = j["schema_version"].get<int>();
  r.payload = j["payload"].dump();
  return r;
}

ReportRecord gamma_record(const Graph& g, const GammaResult& result, const std::vector<VertexSet>* all_gamma_sets) {
  json payload = {{"graph", g.order() <= kMaxGraph6Order ? to_graph6(g) : std::string{}},
                  {"n", g.order()},
                  {"gamma", result.gamma},
                  {"witness", set_json(result.witness)}};
  if (all_gamma_sets != nullptr) {
    json all = json::array();
    for (const auto& s : *all_gamma_sets) all.push_back(set_json(s));
    payload["gamma_sets"] = std::move(all);
  }
  return make(ReportKind::Gamma, payload);
}

ReportRecord analyze_record(const Graph& g) {
  const Girth gi = girth(g);
  const auto gamma = domination_number(g);
  const auto records = enumerate_separable(g, enumerate_gamma_sets(g, gamma.gamma));
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  json payload = {
      {"graph", g.order() <= kMaxGraph6Order ? to_graph6(g) : std::string{}},
      {"n", g.order()},
      {"edges", edges},
      {"girth", gi.is_infinite() ? json(nullptr) : json(gi.length())},
      {"c3_free_vertices", set_json(c3_free_vertices(g))},
      {"gamma", gamma.gamma},
      {"witness", set_json(gamma.witness)},
      {"separable_records", records.size()},
  };
  return make(ReportKind::Analyze, payload);
}

ReportRecord adversary_record(const CheckOutcome& outcome) { return make(ReportKind::Adversary, outcome_json(outcome)); }

ReportRecord fixer_record(const FixerVerdict& verdict) { return make(ReportKind::Fixer, verdict_json(verdict)); }

std::vector<ReportRecord> sweep_records(const SweepReport& report) {
  std::vector<ReportRecord> out;
  for (const auto& e : report.entries) {
    json payload;
    if (!e.error.empty() || !e.verdict) {
      payload = {{"input", e.input}, {"line", e.line}, {"error", e.error}};
    } else {
      payload = verdict_json(*e.verdict);
      payload["input"] = e.input;
      payload["line"] = e.line;
      payload["edgeless"] = e.edgeless;
      payload["adversary"] = e.adversary ? outcome_json(*e.adversary) : json(nullptr);
    }
    out.push_back(make(ReportKind::Fixer, payload));
  }
  const auto& s = report.summary;
  out.push_back(make(ReportKind::SweepSummary, {
                                                   {"graphs", s.graphs},
                                                   {"parse_failures", s.parse_failures},
                                                   {"guard_failures", s.guard_failures},
                                                   {"universal_fixers", s.universal_fixers},
                                                   {"edgeless", s.edgeless},
                                                   {"fixers_are_edgeless", s.fixers_are_edgeless},
                                                   {"applicable", s.applicable},
                                                   {"certificates_passed", s.certificates_passed},
                                                   {"certificates_failed", s.certificates_failed},
                                               }));
  return out;
}

}  // namespace prismfix
