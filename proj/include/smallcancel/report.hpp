#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace smallcancel {

enum class Verdict { Holds, Violated, Inconclusive, Error };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

/// Outcome of any checker. Violated and Inconclusive reports carry at least one
/// witness; Holds reports carry none.
struct CheckReport {
  Verdict verdict = Verdict::Holds;
  std::vector<std::string> witnesses;
  double timing_ms = 0.0;
  std::string command;
  std::string input_sha256;

  bool holds() const { return verdict == Verdict::Holds; }

  static CheckReport holding() { return {}; }
  static CheckReport from_witnesses(std::vector<std::string> violations,
                                    std::vector<std::string> ambiguous = {});
  static CheckReport error(std::string message);

  /// Merges another report into this one: the worse verdict wins
  /// (Error > Violated > Inconclusive > Holds) and witnesses are appended.
  void absorb(const CheckReport& other, std::string_view prefix = {});
};

/// `key: value` lines, one witness per line.
std::string render_text(const CheckReport& r);
/// Top-level object with verdict, witnesses, timing_ms, command, input_sha256.
std::string render_json(const CheckReport& r);

CheckReport parse_report_json(std::string_view text);
CheckReport parse_report_text(std::string_view text);

/// CLI exit status for a verdict: 0 Holds, 1 Violated, 2 Inconclusive, 3 Error.
int exit_status(Verdict v);

}  // namespace smallcancel
