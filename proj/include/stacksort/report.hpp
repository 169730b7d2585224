#pragma once

// EnumerationReport: per-n records with verdicts, serialized as CSV or JSON.
//
// The timestamp is kept out of the report body so that two runs with the same
// inputs produce byte-identical bodies regardless of thread count.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>  // nlohmann/json, vendored

namespace stacksort {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.3.0";

/// `pass` means "no counterexample at this n". Checkers never claim more.
enum class Verdict { info, pass, fail, skipped };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::info: return "info";
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

struct ReportRecord {
  std::size_t n = 0;
  std::string patterns;
  std::string quantity;
  std::string value;
  Verdict verdict = Verdict::info;
  std::string counterexample;  // nonempty iff verdict == fail

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

struct EnumerationReport {
  int schema_version = kReportSchemaVersion;
  std::string tool_version = kToolVersion;
  std::string timestamp;
  std::string command;
  std::string patterns;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::vector<ReportRecord> records;

  void add(std::size_t n, std::string pattern_set, std::string quantity, std::string value,
           Verdict verdict = Verdict::info, std::string counterexample = {}) {
    if ((verdict == Verdict::fail) != !counterexample.empty())
      throw std::logic_error("counterexample must be present exactly when the verdict is fail (" + quantity + ")");
    records.push_back(ReportRecord{n, std::move(pattern_set), std::move(quantity), std::move(value), verdict,
                                   std::move(counterexample)});
  }

  /// Orders records by (n, quantity, patterns). Stable, so ties keep insertion order.
  void sort_records() {
    std::stable_sort(records.begin(), records.end(), [](const ReportRecord& a, const ReportRecord& b) {
      return std::tie(a.n, a.quantity, a.patterns) < std::tie(b.n, b.quantity, b.patterns);
    });
  }

  bool has_failure() const {
    return std::any_of(records.begin(), records.end(), [](const auto& r) { return r.verdict == Verdict::fail; });
  }

  /// "fail", "pass-up-to-<n>" (largest n with a pass and no fail), or "info".
  std::string summary() const {
    if (has_failure()) return "fail";
    std::size_t up_to = 0;
    bool any = false;
    for (const auto& r : records)
      if (r.verdict == Verdict::pass) {
        any = true;
        up_to = std::max(up_to, r.n);
      }
    return any ? "pass-up-to-" + std::to_string(up_to) : "info";
  }

  std::vector<const ReportRecord*> find(std::string_view quantity) const {
    std::vector<const ReportRecord*> out;
    for (const auto& r : records)
      if (r.quantity == quantity) out.push_back(&r);
    return out;
  }
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace detail

/// CSV: '#'-prefixed metadata lines, then "n,patterns,quantity,value,verdict,counterexample".
inline std::string to_csv(const EnumerationReport& r, bool include_timestamp = true) {
  std::ostringstream os;
  os << "# schema_version=" << r.schema_version << " tool_version=" << r.tool_version << '\n';
  if (include_timestamp) os << "# generated_at=" << r.timestamp << '\n';
  os << "# command=" << r.command << " patterns=" << r.patterns << " n=" << r.n_min << ".." << r.n_max
     << " summary=" << r.summary() << '\n';
  os << "n,patterns,quantity,value,verdict,counterexample\n";
  for (const auto& rec : r.records) {
    os << rec.n << ',' << detail::csv_field(rec.patterns) << ',' << detail::csv_field(rec.quantity) << ','
       << detail::csv_field(rec.value) << ',' << to_string(rec.verdict) << ','
       << detail::csv_field(rec.counterexample) << '\n';
  }
  return os.str();
}

inline nlohmann::ordered_json to_json(const EnumerationReport& r, bool include_timestamp = true) {
  nlohmann::ordered_json j;
  j["schema_version"] = r.schema_version;
  j["tool_version"] = r.tool_version;
  if (include_timestamp) j["generated_at"] = r.timestamp;
  j["command"] = r.command;
  j["patterns"] = r.patterns;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["summary"] = r.summary();
  auto& recs = j["records"] = nlohmann::ordered_json::array();
  for (const auto& rec : r.records) {
    nlohmann::ordered_json e;
    e["n"] = rec.n;
    e["patterns"] = rec.patterns;
    e["quantity"] = rec.quantity;
    e["value"] = rec.value;
    e["verdict"] = to_string(rec.verdict);
    if (rec.verdict == Verdict::fail) e["counterexample"] = rec.counterexample;
    recs.push_back(std::move(e));
  }
  return j;
}

/// The hashable body: everything but the timestamp.
inline std::string report_body(const EnumerationReport& r, bool json = false) {
  return json ? to_json(r, false).dump(2) : to_csv(r, false);
}

}  // namespace stacksort
