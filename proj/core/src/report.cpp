#include "pgma/report.hpp"

#include <algorithm>

namespace pgma {

const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::axiom: return "axiom";
    case CheckKind::consequence: return "consequence";
    case CheckKind::informational: return "informational";
  }
  return "?";
}

IdentityCheck& Report::check(const std::string& tag, CheckKind kind) {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const IdentityCheck& c) { return c.tag == tag; });
  if (it != checks_.end()) return *it;
  checks_.push_back(IdentityCheck{tag, kind, 0, 0, {}});
  return checks_.back();
}

void Report::expect(const std::string& tag, bool ok, std::initializer_list<std::size_t> witness,
                    CheckKind kind) {
  expect(tag, ok, std::vector<std::size_t>(witness), kind);
}

void Report::expect(const std::string& tag, bool ok, std::vector<std::size_t> witness,
                    CheckKind kind) {
  IdentityCheck& c = check(tag, kind);
  ++c.checked;
  if (ok) return;
  ++c.failures;
  if (c.witnesses.size() < IdentityCheck::max_witnesses) c.witnesses.push_back(std::move(witness));
}

bool Report::passed() const {
  for (const auto& c : checks_)
    if (c.kind != CheckKind::informational && !c.passed()) return false;
  for (const auto& p : parts_)
    if (!p.passed()) return false;
  return true;
}

bool Report::kernel_inconsistency() const {
  bool axioms_ok = true;
  bool consequence_failed = false;
  for (const auto& c : checks_) {
    if (c.passed()) continue;
    if (c.kind == CheckKind::axiom) axioms_ok = false;
    if (c.kind == CheckKind::consequence) consequence_failed = true;
  }
  if (axioms_ok && consequence_failed) return true;
  for (const auto& p : parts_)
    if (p.kernel_inconsistency()) return true;
  return false;
}

std::string Report::first_failure() const {
  for (const auto& c : checks_)
    if (c.kind != CheckKind::informational && !c.passed()) return c.tag;
  for (const auto& p : parts_) {
    std::string t = p.first_failure();
    if (!t.empty()) return p.subject() + "/" + t;
  }
  return {};
}

const IdentityCheck* Report::find(const std::string& tag) const {
  for (const auto& c : checks_)
    if (c.tag == tag) return &c;
  for (const auto& p : parts_)
    if (const auto* c = p.find(tag)) return c;
  return nullptr;
}

static std::string failure_message(const std::string& stage, const Report& r) {
  std::string msg = stage + ": check failed";
  std::string first = r.first_failure();
  if (!first.empty()) msg += " (" + first + ")";
  return msg;
}

CheckFailed::CheckFailed(std::string stage, Report report)
    : std::runtime_error(failure_message(stage, report)),
      stage_(std::move(stage)),
      report_(std::move(report)) {}

void require(const Report& r, const std::string& stage) {
  if (!r.passed()) throw CheckFailed(stage, r);
}

}  // namespace pgma
