#include <sstream>

#include "json.hpp"
#include "qmhs/verify.hpp"

namespace qmhs {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kSkipPrefix = "skipped: ";

bool is_skip_note(const std::string& note) {
  return note.rfind(kSkipPrefix, 0) == 0;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

const char* status_word(Status s) {
  switch (s) {
    case Status::passed: return "passed";
    case Status::failed: return "failed";
    case Status::skipped: return "skipped";
  }
  return "?";
}

}  // namespace

std::string to_json(const Report& report) {
  ordered_json doc = ordered_json::object();
  ordered_json env = ordered_json::object();
  for (const auto& [key, val] : report.environment) env[key] = val;
  doc["environment"] = env;

  ordered_json summary = ordered_json::object();
  for (const auto& [id, s] : report.summary) {
    ordered_json row = ordered_json::object();
    row["passed"] = s.passed;
    row["failed"] = s.failed;
    row["skipped"] = s.skipped;
    summary[to_string(id)] = row;
  }
  doc["summary"] = summary;

  ordered_json results = ordered_json::array();
  for (const CheckResult& r : report.results) {
    ordered_json row = ordered_json::object();
    row["id"] = to_string(r.id);
    row["params"] = r.params;
    row["passed"] = r.status != Status::failed;
    row["witness"] = r.witness;
    row["note"] = r.note;
    results.push_back(row);
  }
  doc["results"] = results;
  return doc.dump(2) + "\n";
}

Report parse_report_json(const std::string& text) {
  ordered_json doc = ordered_json::parse(text);
  Report report;
  for (const auto& [key, val] : doc.at("environment").items())
    report.environment.emplace_back(key, val.get<std::string>());
  for (const auto& [key, val] : doc.at("summary").items()) {
    auto id = parse_check_id(key);
    if (!id) throw RingError("unknown check id in report: " + key);
    Summary s;
    s.passed = val.at("passed").get<long>();
    s.failed = val.at("failed").get<long>();
    s.skipped = val.at("skipped").get<long>();
    report.summary.emplace_back(*id, s);
  }
  for (const auto& row : doc.at("results")) {
    auto id = parse_check_id(row.at("id").get<std::string>());
    if (!id) throw RingError("unknown check id in report results");
    CheckResult r;
    r.id = *id;
    r.params = row.at("params").get<std::string>();
    r.witness = row.at("witness").get<std::string>();
    r.note = row.at("note").get<std::string>();
    const bool passed = row.at("passed").get<bool>();
    r.status = !passed            ? Status::failed
               : is_skip_note(r.note) ? Status::skipped
                                      : Status::passed;
    report.results.push_back(r);
  }
  return report;
}

std::string to_csv(const Report& report) {
  std::string out = "id,params,status,witness,note\n";
  for (const CheckResult& r : report.results) {
    out += to_string(r.id);
    out += ',';
    out += csv_quote(r.params);
    out += ',';
    out += status_word(r.status);
    out += ',';
    out += csv_quote(r.witness);
    out += ',';
    out += csv_quote(r.note);
    out += '\n';
  }
  return out;
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << "congruence verification report\n";
  for (const auto& [key, val] : report.environment)
    out << "  " << key << ": " << val << "\n";
  out << "\n";
  for (const CheckResult& r : report.results) {
    const char* tag = r.status == Status::passed   ? "[pass]"
                      : r.status == Status::failed ? "[FAIL]"
                                                   : "[skip]";
    out << tag << " " << to_string(r.id);
    if (!r.params.empty()) out << " " << r.params;
    if (r.status == Status::failed && !r.witness.empty())
      out << "  witness: " << r.witness;
    if (r.status == Status::skipped) out << "  (" << r.note << ")";
    out << "\n";
  }
  out << "\nsummary\n";
  long tp = 0, tf = 0, ts = 0;
  for (const auto& [id, s] : report.summary) {
    out << "  " << to_string(id) << ": " << s.passed << " passed, " << s.failed
        << " failed, " << s.skipped << " skipped\n";
    tp += s.passed;
    tf += s.failed;
    ts += s.skipped;
  }
  out << "total: " << tp << " passed, " << tf << " failed, " << ts
      << " skipped\n";
  return out.str();
}

}  // namespace qmhs
