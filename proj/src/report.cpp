#include "smallcancel/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace smallcancel {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Violated: return "Violated";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::Error: return "Error";
  }
  return "Error";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "Holds") return Verdict::Holds;
  if (s == "Violated") return Verdict::Violated;
  if (s == "Inconclusive") return Verdict::Inconclusive;
  if (s == "Error") return Verdict::Error;
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

namespace {

int severity(Verdict v) {
  switch (v) {
    case Verdict::Holds: return 0;
    case Verdict::Inconclusive: return 1;
    case Verdict::Violated: return 2;
    case Verdict::Error: return 3;
  }
  return 3;
}

}  // namespace

CheckReport CheckReport::from_witnesses(std::vector<std::string> violations, std::vector<std::string> ambiguous) {
  CheckReport r;
  if (!violations.empty()) {
    r.verdict = Verdict::Violated;
    r.witnesses = std::move(violations);
  } else if (!ambiguous.empty()) {
    r.verdict = Verdict::Inconclusive;
    r.witnesses = std::move(ambiguous);
  }
  return r;
}

CheckReport CheckReport::error(std::string message) {
  CheckReport r;
  r.verdict = Verdict::Error;
  r.witnesses.push_back(std::move(message));
  return r;
}

void CheckReport::absorb(const CheckReport& other, std::string_view prefix) {
  if (severity(other.verdict) > severity(verdict)) {
    // a worse verdict replaces the witnesses of a milder one
    if (verdict != Verdict::Holds) witnesses.clear();
    verdict = other.verdict;
  } else if (severity(other.verdict) < severity(verdict)) {
    return;
  }
  for (const auto& w : other.witnesses) witnesses.push_back(std::string(prefix) + w);
}

std::string render_text(const CheckReport& r) {
  std::ostringstream out;
  out << "verdict: " << to_string(r.verdict) << '\n';
  out << "command: " << r.command << '\n';
  out << "input_sha256: " << r.input_sha256 << '\n';
  out << "timing_ms: " << std::fixed << std::setprecision(3) << r.timing_ms << '\n';
  for (const auto& w : r.witnesses) out << "witness: " << w << '\n';
  return out.str();
}

std::string render_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(r.verdict);
  j["witnesses"] = r.witnesses;
  j["timing_ms"] = r.timing_ms;
  j["command"] = r.command;
  j["input_sha256"] = r.input_sha256;
  return j.dump(2) + "\n";
}

CheckReport parse_report_json(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  CheckReport r;
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  r.timing_ms = j.at("timing_ms").get<double>();
  r.command = j.at("command").get<std::string>();
  r.input_sha256 = j.at("input_sha256").get<std::string>();
  return r;
}

CheckReport parse_report_text(std::string_view text) {
  CheckReport r;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto colon = line.find(": ");
    if (colon == std::string::npos) {
      if (line.size() && line.back() == ':') colon = line.size() - 1;
      else continue;
    }
    std::string key = line.substr(0, colon);
    std::string value = colon + 2 <= line.size() ? line.substr(colon + 2) : std::string{};
    if (key == "verdict") r.verdict = verdict_from_string(value);
    else if (key == "command") r.command = value;
    else if (key == "input_sha256") r.input_sha256 = value;
    else if (key == "timing_ms") r.timing_ms = std::stod(value);
    else if (key == "witness") r.witnesses.push_back(value);
  }
  return r;
}

int exit_status(Verdict v) {
  switch (v) {
    case Verdict::Holds: return 0;
    case Verdict::Violated: return 1;
    case Verdict::Inconclusive: return 2;
    case Verdict::Error: return 3;
  }
  return 3;
}

}  // namespace smallcancel
