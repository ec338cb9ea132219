#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "prismfix/domination.hpp"
#include "prismfix/graph.hpp"
#include "prismfix/verify.hpp"

namespace prismfix {

/// Bumped whenever a field is renamed or removed.
inline constexpr int kSchemaVersion = 1;

enum class ReportKind { Gamma, Analyze, Adversary, Fixer, SweepSummary };

std::string_view to_string(ReportKind kind);

/// One JSON-lines record: {"kind": ..., "payload": {...}, "schema_version": N}.
/// payload holds compact JSON text.
struct ReportRecord {
  ReportKind kind = ReportKind::Gamma;
  int schema_version = kSchemaVersion;
  std::string payload;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

/// Compact single-line JSON with keys in sorted order.
std::string serialize(const ReportRecord& record);
/// Throws std::invalid_argument on malformed JSON, an unknown kind or a
/// missing field.
ReportRecord parse_report_record(std::string_view line);

ReportRecord gamma_record(const Graph& g, const GammaResult& result, const std::vector<VertexSet>* all_gamma_sets);
ReportRecord analyze_record(const Graph& g);
ReportRecord adversary_record(const CheckOutcome& outcome);
ReportRecord fixer_record(const FixerVerdict& verdict);

/// Per-graph records (kind fixer, with the adversary certificate embedded)
/// followed by one sweep-summary record.
std::vector<ReportRecord> sweep_records(const SweepReport& report);

}  // namespace prismfix
