#ifndef TENSORDIM_INTERPRETER_HPP
#define TENSORDIM_INTERPRETER_HPP

#include <string>
#include <vector>

#include "tensordim/script.hpp"

namespace tensordim::script {

/// Outcome of one query. Refused queries (failed preconditions) carry the
/// diagnostic in `witness`; they are records, not failures.
struct ReportRecord {
  int id = 0;                // 1-based query index
  std::string op;            // query name
  bool refused = false;
  std::string value;         // result, or "-" when refused
  std::string witness;       // witness/breakdown, diagnostic, or "-"
  double elapsed_ms = 0.0;   // shown in text mode only
};

/// Binds the script and runs every query in order. Binding and static
/// validation errors throw ParseError; queries themselves never throw --
/// refusals become records.
std::vector<ReportRecord> execute_script(const Script& s);

enum class ReportMode { text, machine };

/// machine: one tab-separated line per record,
///   id <TAB> op <TAB> status <TAB> value <TAB> witness
/// byte-stable across runs. text: aligned table with witness breakdowns
/// and per-query timing.
std::string format_report(const std::vector<ReportRecord>& records,
                          ReportMode mode);

/// True when any record is a refusal (drives the process exit code).
bool any_refused(const std::vector<ReportRecord>& records);

}  // namespace tensordim::script

#endif
