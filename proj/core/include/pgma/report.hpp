#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgma {

/// How a failed identity should be read.
enum class CheckKind {
  axiom,          ///< a defining axiom; failure means the input is invalid
  consequence,    ///< must follow from the axioms; failure flags a kernel bug
  informational,  ///< reported only, never affects the verdict
};

const char* to_string(CheckKind k);

/// One identity family evaluated over basis tuples.
struct IdentityCheck {
  static constexpr std::size_t max_witnesses = 16;

  std::string tag;
  CheckKind kind = CheckKind::axiom;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::vector<std::size_t>> witnesses;

  bool passed() const { return failures == 0; }
};

/// Ordered collection of identity checks about one subject. Nested reports
/// carry the checks of component objects (stage tags).
class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<IdentityCheck>& checks() const { return checks_; }
  const std::vector<Report>& parts() const { return parts_; }

  /// Find or create the check with this tag.
  IdentityCheck& check(const std::string& tag, CheckKind kind = CheckKind::axiom);
  /// Record one evaluation; witness indices are stored on failure (capped).
  void expect(const std::string& tag, bool ok, std::initializer_list<std::size_t> witness,
              CheckKind kind = CheckKind::axiom);
  void expect(const std::string& tag, bool ok, std::vector<std::size_t> witness,
              CheckKind kind = CheckKind::axiom);

  void add_part(Report r) { parts_.push_back(std::move(r)); }

  /// True iff every non-informational check here and in all parts passed.
  bool passed() const;
  /// True iff a consequence-kind check failed while all axioms held.
  bool kernel_inconsistency() const;
  /// Tag of the first failing non-informational check (depth first), or "".
  std::string first_failure() const;
  /// Lookup across this report and its parts; nullptr if absent.
  const IdentityCheck* find(const std::string& tag) const;

 private:
  std::string subject_;
  std::vector<IdentityCheck> checks_;
  std::vector<Report> parts_;
};

/// Thrown when an operation's precondition certificate fails.
class CheckFailed : public std::runtime_error {
 public:
  CheckFailed(std::string stage, Report report);
  const std::string& stage() const { return stage_; }
  const Report& report() const { return report_; }

 private:
  std::string stage_;
  Report report_;
};

/// Throw CheckFailed(stage, r) unless r passed.
void require(const Report& r, const std::string& stage);

}  // namespace pgma
