#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pgma/group_datum.hpp"
#include "pgma/morita.hpp"

namespace pgma {

/// One body line: keyword, integer/name arguments kept verbatim, and an
/// optional trailing scalar (numerator denominator, already reduced into
/// the file's field).
struct Statement {
  std::string keyword;
  std::vector<std::string> args;
  std::optional<Scalar> value;
  std::size_t line = 0;
  std::size_t column = 0;
  std::vector<std::size_t> arg_columns;

  /// Content equality; positions are ignored.
  friend bool operator==(const Statement& a, const Statement& b) {
    return a.keyword == b.keyword && a.args == b.args && a.value == b.value;
  }
};

struct Section {
  std::string kind;
  std::string name;
  std::vector<Statement> body;
  std::size_t line = 0;

  friend bool operator==(const Section& a, const Section& b) {
    return a.kind == b.kind && a.name == b.name && a.body == b.body;
  }
};

struct DefinitionFile {
  Field field;
  std::vector<Section> sections;

  const Section* find(std::string_view name) const;
  friend bool operator==(const DefinitionFile&, const DefinitionFile&) = default;
};

struct Diagnostic {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;

  /// "line:column: message"
  std::string to_string() const;
};

struct ParseResult {
  std::optional<DefinitionFile> file;
  std::vector<Diagnostic> errors;

  bool ok() const { return file.has_value(); }
};

/// Total: malformed input yields diagnostics, never an exception.
ParseResult parse_definition(std::string_view text);

/// Canonical form: one space between tokens, two-space indented bodies,
/// scalars as reduced "num den", a blank line between sections, no
/// comments. serialize(parse(s)) == s for every canonical s.
std::string serialize(const DefinitionFile& f);

/// Statement builders for emitters.
Statement stmt(std::string keyword, std::vector<std::string> args = {});
Statement stmt(std::string keyword, std::vector<std::size_t> indices, Scalar value);

struct MoritaEntry {
  MoritaContextData context;
  std::optional<std::vector<std::string>> actions;  // pa, pb, pr by name
};

using Object = std::variant<GroupTable, Algebra, HopfAlgebra, MatrixDatum, PartialAction, UnitalPartialGroupAction,
                            GroupDatum, MoritaEntry, BlockPartialData>;

/// Sections resolved into kernel objects, in file order. A section that
/// fails to resolve records a diagnostic; sections depending on it fail in
/// turn. Validation failures (a referenced datum that does not assemble, a
/// group action whose maps leave their domains) are told apart from input
/// errors so the CLI can map them to different exit codes.
class Workspace {
 public:
  struct Failure {
    std::string section;
    Diagnostic where;
    bool validation = false;
  };

  static Workspace resolve(const DefinitionFile& f);

  const DefinitionFile& file() const { return file_; }
  const Field& field() const { return file_.field; }
  const std::vector<std::string>& names() const { return order_; }
  const std::vector<Failure>& failures() const { return failures_; }
  bool has_input_errors() const;
  /// The failure recorded for a section, if any.
  const Failure* failure(const std::string& name) const;

  /// nullptr if the name is unknown or failed to resolve.
  const Object* get(const std::string& name) const;
  template <class T>
  const T* get_as(const std::string& name) const {
    const Object* o = get(name);
    return o ? std::get_if<T>(o) : nullptr;
  }
  const Section* section(const std::string& name) const { return file_.find(name); }

  /// The total algebra of a gma section or a Morita context (assembled, so
  /// CheckFailed if the datum is invalid).
  Algebra total_algebra(const std::string& name) const;

 private:
  DefinitionFile file_;
  std::vector<std::string> order_;
  std::map<std::string, Object> objects_;
  std::vector<Failure> failures_;
};

// Emitters produce sections in canonical statement order.
Section emit_algebra(const std::string& name, const Algebra& a);
/// `target` is the argument list of the `on` statement, e.g. {"block", "R", "0"}.
Section emit_partial_action(const std::string& name, const std::string& hopf, const std::vector<std::string>& target,
                            const PartialAction& p);
Section emit_group_action(const std::string& name, const std::string& group, const std::vector<std::string>& target,
                          const UnitalPartialGroupAction& u);
Section emit_block_data(const std::string& name, const std::string& gma, const std::string& hopf,
                        const std::vector<std::string>& diagonal, const BlockPartialData& d);
/// Only gammas that differ from skeleton_datum are written.
Section emit_group_datum(const std::string& name, const std::string& gma, const std::string& group,
                         const std::vector<std::string>& alpha, const GroupDatum& d);
Section emit_gma(const std::string& name, const MatrixDatum& d);
Section emit_morita_context(const std::string& name, const std::string& a, const std::string& b,
                            const MoritaContextData& c, const std::vector<std::string>& actions = {});

}  // namespace pgma
