#include <iomanip>
#include <sstream>

#include "cli.hpp"

namespace pgma::cli {

namespace {

using json = nlohmann::ordered_json;

std::string tuple(const std::vector<std::size_t>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + ")";
}

void report_text(std::ostream& os, const Report& r, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  os << pad << r.subject() << (r.passed() ? "" : "  [FAILED]")
     << (r.kernel_inconsistency() ? "  [KERNEL INCONSISTENCY]" : "") << "\n";
  for (const auto& c : r.checks()) {
    os << pad << "  " << std::left << std::setw(28) << c.tag << std::setw(14) << to_string(c.kind) << std::right
       << std::setw(7) << c.checked << " checked";
    if (!c.passed()) {
      os << "  " << c.failures << " FAILED  witness";
      for (const auto& w : c.witnesses) os << " " << tuple(w);
    }
    os << "\n";
  }
  for (const auto& p : r.parts()) report_text(os, p, indent + 2);
}

const char* status(int code) { return code == 0 ? "pass" : code == 1 ? "fail" : "input-error"; }

}  // namespace

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks()) {
    json w = json::array();
    for (const auto& x : c.witnesses) w.push_back(x);
    checks.push_back({{"tag", c.tag},
                      {"kind", to_string(c.kind)},
                      {"checked", c.checked},
                      {"failures", c.failures},
                      {"passed", c.passed()},
                      {"witnesses", w}});
  }
  json parts = json::array();
  for (const auto& p : r.parts()) parts.push_back(to_json(p));
  return {{"subject", r.subject()},
          {"passed", r.passed()},
          {"kernel_inconsistency", r.kernel_inconsistency()},
          {"checks", checks},
          {"parts", parts}};
}

json to_json(const Run& run) {
  json errors = json::array();
  for (const auto& e : run.errors) errors.push_back({{"line", e.line}, {"column", e.column}, {"message", e.message}});
  json results = json::array();
  for (const auto& r : run.results) {
    json o{{"section", r.section}, {"kind", r.kind}, {"step", r.step}, {"passed", r.passed}};
    if (!r.message.empty()) o["message"] = r.message;
    if (r.report) o["report"] = to_json(*r.report);
    results.push_back(std::move(o));
  }
  json out{{"schema", "pgma-report/1"},
           {"command", run.command},
           {"input", run.input},
           {"field", run.field},
           {"status", status(run.exit_code())},
           {"exit_code", run.exit_code()},
           {"errors", errors},
           {"results", results},
           {"outputs", run.outputs}};
  if (!run.emitted.empty()) {
    DefinitionFile f;
    f.field = run.source.field;
    f.sections = run.emitted;
    std::string body = serialize(f);
    out["emitted"] = body.substr(body.find('\n') + 2);  // sections only
  }
  return out;
}

std::string render_text(const Run& run) {
  std::ostringstream os;
  os << "pgma " << run.command;
  if (!run.input.empty()) os << ": " << run.input;
  if (!run.field.empty()) os << " (field " << run.field << ")";
  os << "\n";
  for (const auto& e : run.errors) os << "error: " << e.to_string() << "\n";
  for (const auto& r : run.results) {
    os << "\n[" << r.kind << " " << r.section << "] " << r.step << ": " << (r.passed ? "PASS" : "FAIL");
    if (!r.message.empty()) os << "  (" << r.message << ")";
    os << "\n";
    if (r.report) report_text(os, *r.report, 2);
  }
  for (const auto& t : run.text) os << "\n" << t;
  if (!run.emitted.empty()) {
    os << "\nemitted sections:\n";
    DefinitionFile f;
    f.field = run.source.field;
    f.sections = run.emitted;
    const std::string body = serialize(f);
    os << body.substr(body.find('\n') + 1);
  }
  os << "\nresult: " << status(run.exit_code()) << " (exit " << run.exit_code() << ")\n";
  return os.str();
}

}  // namespace pgma::cli
