#include "pgma/definition.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include "pgma/error.hpp"
#include "pgma/fixtures.hpp"

namespace pgma {

namespace {

// Argument signatures: i = index, n = name, w = free word, s = trailing
// scalar (two tokens). A trailing '+' repeats the last type one or more
// times; a trailing '?' makes it optional.
struct Keyword {
  const char* name;
  const char* sig;
};

struct SectionSchema {
  const char* kind;
  std::vector<Keyword> keywords;
};

const std::vector<SectionSchema>& schema() {
  static const std::vector<SectionSchema> s = {
      {"group", {{"cyclic", "i"}, {"symmetric3", ""}, {"trivial", ""}, {"order", "i"}, {"row", "i+"}}},
      {"algebra",
       {{"matrix", "i"},
        {"diagonal", "i"},
        {"ground", ""},
        {"dim", "i"},
        {"labels", "w+"},
        {"unit", "is"},
        {"mult", "iiis"}}},
      {"hopf",
       {{"group_algebra", "n"},
        {"sweedler", ""},
        {"op", "n"},
        {"cop", "n"},
        {"opcop", "n"},
        {"dim", "i"},
        {"unit", "is"},
        {"mult", "iiis"},
        {"comult", "iiis"},
        {"counit", "is"},
        {"antipode", "iis"},
        {"antipode_inv", "iis"}}},
      {"gma", {{"matrix_units", "i"}, {"blocks", "i"}, {"dims", "i+"}, {"theta", "iiiiis"}, {"eta", "iis"}}},
      {"partial_action",
       {{"from_group", "n"},
        {"hopf", "n"},
        {"on", "wni?"},
        {"side", "w"},
        {"trivial", ""},
        {"act", "iiis"}}},
      {"group_action", {{"group", "n"}, {"on", "wni?"}, {"unit", "iis"}, {"map", "iiis"}}},
      {"group_datum", {{"gma", "n"}, {"group", "n"}, {"alpha", "in"}, {"gamma", "iiiiis"}}},
      {"morita_context",
       {{"a", "n"},
        {"b", "n"},
        {"m_dim", "i"},
        {"n_dim", "i"},
        {"m_left", "iis"},
        {"m_right", "iis"},
        {"n_left", "iis"},
        {"n_right", "iis"},
        {"mu", "iis"},
        {"nu", "iis"},
        {"actions", "nnn"}}},
      {"block_data", {{"gma", "n"}, {"hopf", "n"}, {"diagonal", "in"}, {"left", "iiiis"}, {"right", "iiiis"}}},
  };
  return s;
}

const SectionSchema* find_schema(std::string_view kind) {
  for (const auto& s : schema())
    if (kind == s.kind) return &s;
  return nullptr;
}

const Keyword* find_keyword(const SectionSchema& s, std::string_view kw) {
  for (const auto& k : s.keywords)
    if (kw == k.name) return &k;
  return nullptr;
}

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != '#' && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '\v' && line[i] != '\f')
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool is_index(const std::string& t) {
  return !t.empty() && t.size() <= 9 && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool is_name(const std::string& t) {
  if (t.empty() || !(std::isalpha(static_cast<unsigned char>(t[0])) || t[0] == '_')) return false;
  return std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isalnum(c) || c == '_' || c == '-'; });
}

bool is_integer(const std::string& t, bool allow_sign) {
  std::size_t i = (allow_sign && !t.empty() && t[0] == '-') ? 1 : 0;
  if (i >= t.size()) return false;
  return std::all_of(t.begin() + static_cast<long>(i), t.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string describe_sig(std::string_view sig) {
  std::string out;
  for (char c : sig) {
    std::string word;
    switch (c) {
      case 'i': word = "index"; break;
      case 'n': word = "name"; break;
      case 'w': word = "word"; break;
      case 's': word = "numerator denominator"; break;
      case '+': word = "..."; break;
      case '?': word = "(optional)"; break;
    }
    if (!out.empty()) out += ' ';
    out += word;
  }
  return out.empty() ? "no arguments" : out;
}

bool token_fits(char type, const std::string& t) {
  if (type == 'i') return is_index(t);
  if (type == 'n') return is_name(t);
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParseResult run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      const std::size_t nl = text_.find('\n', pos);
      const std::size_t end = nl == std::string_view::npos ? text_.size() : nl;
      ++line_no;
      line(text_.substr(pos, end - pos), line_no);
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    if (open_) error(open_->line, 1, "section '" + open_->name + "' is missing 'end'");
    if (!have_field_) error(line_no, 1, "missing 'field' declaration");
    ParseResult r;
    r.errors = std::move(errors_);
    if (r.errors.empty()) r.file = std::move(file_);
    return r;
  }

 private:
  void error(std::size_t line, std::size_t col, std::string msg) {
    if (errors_.size() < 100) errors_.push_back({line, col, std::move(msg)});
  }

  void line(std::string_view raw, std::size_t no) {
    const std::vector<Token> toks = tokenize(raw);
    if (toks.empty()) return;
    const Token& head = toks.front();
    if (!have_field_) {
      if (head.text != "field") {
        error(no, head.column, "expected 'field rationals' or 'field prime <p>'");
        have_field_ = true;  // report once
        return;
      }
      have_field_ = true;
      field_decl(toks, no);
      return;
    }
    if (head.text == "field") {
      error(no, head.column, "duplicate 'field' declaration");
      return;
    }
    if (!open_) {
      section_header(toks, no);
      return;
    }
    if (head.text == "end") {
      if (toks.size() > 1) error(no, toks[1].column, "unexpected token after 'end'");
      if (open_schema_) file_.sections.push_back(std::move(*open_));
      open_.reset();
      open_schema_ = nullptr;
      return;
    }
    if (!open_schema_) return;  // body of an unknown section; already reported
    statement(toks, no);
  }

  void field_decl(const std::vector<Token>& toks, std::size_t no) {
    if (toks.size() == 2 && toks[1].text == "rationals") {
      file_.field = Field::rationals();
      return;
    }
    if (toks.size() >= 2 && toks[1].text == "prime") {
      if (toks.size() != 3) {
        error(no, toks[1].column, "prime required: 'field prime <p>'");
        return;
      }
      const std::string& p = toks[2].text;
      if (!is_integer(p, false)) {
        error(no, toks[2].column, "prime required: '" + p + "' is not a number");
        return;
      }
      if (p.size() > 10) {
        error(no, toks[2].column, "prime " + p + " is too large (limit 2^32)");
        return;
      }
      const std::uint64_t v = std::stoull(p);
      if (v > (std::uint64_t{1} << 32)) {
        error(no, toks[2].column, "prime " + p + " is too large (limit 2^32)");
        return;
      }
      if (v < 2) {
        error(no, toks[2].column, "prime required, got " + p);
        return;
      }
      try {
        file_.field = Field::prime(v);
      } catch (const DomainError&) {
        error(no, toks[2].column, "prime required: " + p + " is not prime");
      }
      return;
    }
    error(no, toks.size() > 1 ? toks[1].column : toks[0].column,
          "expected 'field rationals' or 'field prime <p>'");
  }

  void section_header(const std::vector<Token>& toks, std::size_t no) {
    const Token& kind = toks[0];
    if (kind.text == "end") {
      error(no, kind.column, "'end' outside a section");
      return;
    }
    const SectionSchema* s = find_schema(kind.text);
    if (!s) error(no, kind.column, "unknown section '" + kind.text + "'");
    Section sec;
    sec.kind = kind.text;
    sec.line = no;
    if (toks.size() != 2) {
      error(no, kind.column, "section header must be '<kind> <name>'");
    } else if (!is_name(toks[1].text)) {
      error(no, toks[1].column, "invalid section name '" + toks[1].text + "'");
    } else {
      sec.name = toks[1].text;
      auto [it, fresh] = defined_.emplace(sec.name, no);
      if (!fresh)
        error(no, toks[1].column,
              "duplicate name '" + sec.name + "' (first defined on line " + std::to_string(it->second) + ")");
    }
    open_ = std::move(sec);
    open_schema_ = s;
  }

  void statement(const std::vector<Token>& toks, std::size_t no) {
    const Token& head = toks[0];
    const Keyword* kw = find_keyword(*open_schema_, head.text);
    if (!kw) {
      error(no, head.column, "unknown statement '" + head.text + "' in " + open_->kind);
      return;
    }
    Statement st;
    st.keyword = kw->name;
    st.line = no;
    st.column = head.column;
    const std::string_view sig = kw->sig;
    const auto bad_arity = [&] {
      error(no, head.column, "'" + head.text + "' expects: " + describe_sig(sig));
    };
    std::size_t t = 1;
    for (std::size_t k = 0; k < sig.size(); ++k) {
      const char type = sig[k];
      if (type == '+' || type == '?') continue;
      const char mod = k + 1 < sig.size() ? sig[k + 1] : '\0';
      if (type == 's') {
        if (toks.size() - t != 2) return bad_arity();
        scalar(toks[t], toks[t + 1], no, st);
        t += 2;
        continue;
      }
      if (mod == '?' && t == toks.size()) break;
      if (t >= toks.size()) return bad_arity();
      const std::size_t stop = mod == '+' ? toks.size() : t + 1;
      for (; t < stop; ++t) {
        if (!token_fits(type, toks[t].text)) {
          error(no, toks[t].column,
                std::string("expected ") + (type == 'i' ? "an index" : "a name") + ", got '" + toks[t].text + "'");
          return;
        }
        st.args.push_back(toks[t].text);
        st.arg_columns.push_back(toks[t].column);
      }
    }
    if (t != toks.size()) return bad_arity();
    open_->body.push_back(std::move(st));
  }

  void scalar(const Token& num, const Token& den, std::size_t no, Statement& st) {
    if (!is_integer(num.text, true)) {
      error(no, num.column, "expected an integer numerator, got '" + num.text + "'");
      return;
    }
    if (!is_integer(den.text, false)) {
      error(no, den.column, "expected a positive integer denominator, got '" + den.text + "'");
      return;
    }
    const mpz_class n(num.text), d(den.text);
    if (d == 0) {
      error(no, den.column, "zero denominator");
      return;
    }
    const Field& f = file_.field;
    if (!f.is_rationals() && d % mpz_class(std::to_string(f.characteristic())) == 0) {
      error(no, den.column, "field mismatch: denominator " + den.text + " is not invertible mod " +
                                std::to_string(f.characteristic()));
      return;
    }
    st.value = f.from_fraction(n, d);
  }

  std::string_view text_;
  DefinitionFile file_;
  bool have_field_ = false;
  std::optional<Section> open_;
  const SectionSchema* open_schema_ = nullptr;
  std::map<std::string, std::size_t> defined_;
  std::vector<Diagnostic> errors_;
};

std::string scalar_text(const Scalar& s) { return s.numerator().get_str() + " " + s.denominator().get_str(); }

}  // namespace

const Section* DefinitionFile::find(std::string_view name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

std::string Diagnostic::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

ParseResult parse_definition(std::string_view text) {
  try {
    return Parser(text).run();
  } catch (const std::exception& e) {
    // Defensive: the parser itself should never throw.
    ParseResult r;
    r.errors.push_back({0, 0, std::string("internal parser error: ") + e.what()});
    return r;
  }
}

std::string serialize(const DefinitionFile& f) {
  std::ostringstream os;
  os << "field ";
  if (f.field.is_rationals())
    os << "rationals\n";
  else
    os << "prime " << f.field.characteristic() << "\n";
  for (const auto& s : f.sections) {
    os << "\n" << s.kind << " " << s.name << "\n";
    for (const auto& st : s.body) {
      os << "  " << st.keyword;
      for (const auto& a : st.args) os << " " << a;
      if (st.value) os << " " << scalar_text(*st.value);
      os << "\n";
    }
    os << "end\n";
  }
  return os.str();
}

Statement stmt(std::string keyword, std::vector<std::string> args) {
  Statement s;
  s.keyword = std::move(keyword);
  s.args = std::move(args);
  return s;
}

Statement stmt(std::string keyword, std::vector<std::size_t> indices, Scalar value) {
  Statement s;
  s.keyword = std::move(keyword);
  for (std::size_t i : indices) s.args.push_back(std::to_string(i));
  s.value = std::move(value);
  return s;
}

// ---------------------------------------------------------------------------
// Resolution

namespace {

struct ResolveError {
  Diagnostic where;
  bool validation = false;
};

[[noreturn]] void fail_at(const Statement& st, std::size_t arg, std::string msg) {
  const std::size_t col = arg < st.arg_columns.size() ? st.arg_columns[arg] : st.column;
  throw ResolveError{{st.line, col, std::move(msg)}, false};
}

[[noreturn]] void fail_section(const Section& s, std::string msg, bool validation = false) {
  throw ResolveError{{s.line, 1, s.kind + " " + s.name + ": " + std::move(msg)}, validation};
}

class SectionReader {
 public:
  SectionReader(const Section& s) : s_(s) {
    std::set<std::string> single, seen_entries;
    for (const auto& st : s.body) {
      // Entry statements carry a value; everything else may appear once,
      // except the repeatable row/alpha/diagonal lines keyed by their first index.
      std::string key = st.keyword;
      const bool keyed = st.value || st.keyword == "row" || st.keyword == "alpha" || st.keyword == "diagonal";
      if (keyed) {
        const std::size_t n = st.value ? st.args.size() : (st.keyword == "row" ? 0 : 1);
        for (std::size_t a = 0; a < n; ++a) key += " " + st.args[a];
        if (st.keyword == "row") continue;
        if (!seen_entries.insert(key).second) fail_at(st, 0, "duplicate entry '" + key + "'");
      } else if (!single.insert(key).second) {
        fail_at(st, 0, "'" + key + "' given twice");
      }
    }
  }

  const Statement* one(std::string_view kw) const {
    for (const auto& st : s_.body)
      if (st.keyword == kw) return &st;
    return nullptr;
  }
  const Statement& need(std::string_view kw) const {
    if (const Statement* st = one(kw)) return *st;
    fail_section(s_, "missing '" + std::string(kw) + "'");
  }
  std::vector<const Statement*> all(std::string_view kw) const {
    std::vector<const Statement*> out;
    for (const auto& st : s_.body)
      if (st.keyword == kw) out.push_back(&st);
    return out;
  }
  /// Exactly one of `forms` must be present; returns its keyword.
  std::string form(const std::vector<std::string>& forms) const {
    std::string found;
    for (const auto& st : s_.body)
      if (std::find(forms.begin(), forms.end(), st.keyword) != forms.end()) {
        if (!found.empty()) fail_at(st, 0, "'" + st.keyword + "' conflicts with '" + found + "'");
        found = st.keyword;
      }
    return found;
  }
  /// Only the listed keywords may appear.
  void only(const std::vector<std::string>& allowed, const std::string& because) const {
    for (const auto& st : s_.body)
      if (std::find(allowed.begin(), allowed.end(), st.keyword) == allowed.end())
        fail_at(st, 0, "'" + st.keyword + "' is not allowed with " + because);
  }
  const Section& section() const { return s_; }

 private:
  const Section& s_;
};

std::size_t index_arg(const Statement& st, std::size_t a, std::size_t bound, const std::string& what) {
  const std::size_t v = std::stoul(st.args[a]);
  if (v >= bound)
    fail_at(st, a, what + " " + st.args[a] + " out of range (must be below " + std::to_string(bound) + ")");
  return v;
}

// Sizes are capped so that a hostile file cannot ask for dim^3 storage.
std::size_t count_arg(const Statement& st, std::size_t a, std::size_t min = 1, std::size_t max = 64) {
  const std::size_t v = std::stoul(st.args[a]);
  if (v < min || v > max)
    fail_at(st, a, "size " + st.args[a] + " out of range [" + std::to_string(min) + ", " + std::to_string(max) + "]");
  return v;
}

}  // namespace

bool Workspace::has_input_errors() const {
  return std::any_of(failures_.begin(), failures_.end(), [](const Failure& f) { return !f.validation; });
}

const Workspace::Failure* Workspace::failure(const std::string& name) const {
  for (const auto& f : failures_)
    if (f.section == name) return &f;
  return nullptr;
}

const Object* Workspace::get(const std::string& name) const {
  auto it = objects_.find(name);
  return it == objects_.end() ? nullptr : &it->second;
}

Algebra Workspace::total_algebra(const std::string& name) const {
  if (const auto* d = get_as<MatrixDatum>(name)) return assemble(*d).total;
  if (const auto* m = get_as<MoritaEntry>(name)) return assemble(to_datum(m->context)).total;
  throw DomainError("'" + name + "' is neither a gma nor a morita_context");
}

namespace {

class Resolver {
 public:
  Resolver(const DefinitionFile& f, std::map<std::string, Object>& objects,
           std::map<std::string, const Workspace::Failure*>& failed)
      : file_(f), field_(f.field), objects_(objects), failed_(failed) {}

  Object resolve(const Section& s) {
    SectionReader r(s);
    if (s.kind == "group") return group(r);
    if (s.kind == "algebra") return algebra(r);
    if (s.kind == "hopf") return hopf(r);
    if (s.kind == "gma") return gma(r);
    if (s.kind == "partial_action") return partial_action(r);
    if (s.kind == "group_action") return group_action(r);
    if (s.kind == "group_datum") return group_datum(r);
    if (s.kind == "morita_context") return morita(r);
    return block_data(r);
  }

  void declare(const std::string& name, const std::string& kind) { kinds_[name] = kind; }

 private:
  template <class T>
  const T& ref(const Statement& st, std::size_t a, const std::string& kind) {
    const std::string& name = st.args[a];
    auto k = kinds_.find(name);
    if (k == kinds_.end()) fail_at(st, a, "unknown name '" + name + "' (names must be defined before use)");
    if (k->second != kind) fail_at(st, a, "'" + name + "' has kind " + k->second + ", expected " + kind);
    auto f = failed_.find(name);
    if (f != failed_.end())
      throw ResolveError{{st.line, st.arg_columns[a], "depends on '" + name + "', which failed to resolve"},
                         f->second->validation};
    return std::get<T>(objects_.at(name));
  }

  // Guarded calls into the kernel: CheckFailed is a validation failure,
  // every other kernel exception an input error.
  template <class F>
  auto guarded(const Section& s, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const CheckFailed& e) {
      fail_section(s, std::string("failed validation at stage '") + e.stage() + "': " + e.what(), true);
    } catch (const std::invalid_argument& e) {
      fail_section(s, e.what());
    }
  }

  Object group(const SectionReader& r) {
    const std::string form = r.form({"cyclic", "symmetric3", "trivial", "order"});
    const Section& s = r.section();
    if (form.empty()) fail_section(s, "expected one of cyclic, symmetric3, trivial, order");
    if (form != "order") {
      r.only({form}, "'" + form + "'");
      if (form == "cyclic") {
        const std::size_t n = count_arg(r.need("cyclic"), 0);
        return guarded(s, [&] { return GroupTable::cyclic(n); });
      }
      if (form == "symmetric3") return GroupTable::symmetric3();
      return GroupTable::trivial();
    }
    r.only({"order", "row"}, "'order'");
    const std::size_t n = count_arg(r.need("order"), 0);
    const auto rows = r.all("row");
    if (rows.size() != n) fail_section(s, "expected " + std::to_string(n) + " 'row' lines");
    std::vector<std::size_t> cayley;
    for (const Statement* row : rows) {
      if (row->args.size() != n) fail_at(*row, 0, "row must have " + std::to_string(n) + " entries");
      for (std::size_t a = 0; a < n; ++a) cayley.push_back(index_arg(*row, a, n, "element"));
    }
    return guarded(s, [&] { return GroupTable(n, std::move(cayley)); });
  }

  Object algebra(const SectionReader& r) {
    const Section& s = r.section();
    const std::string form = r.form({"matrix", "diagonal", "ground", "dim"});
    if (form.empty()) fail_section(s, "expected one of matrix, diagonal, ground, dim");
    if (form == "matrix") {
      r.only({"matrix"}, "'matrix'");
      const std::size_t n = count_arg(r.need("matrix"), 0, 1, 8);
      return endomorphism_algebra(field_, n);
    }
    if (form == "diagonal") {
      r.only({"diagonal"}, "'diagonal'");
      return diagonal_algebra(field_, count_arg(r.need("diagonal"), 0));
    }
    if (form == "ground") {
      r.only({"ground"}, "'ground'");
      return ground_algebra(field_);
    }
    const std::size_t d = count_arg(r.need("dim"), 0);
    std::vector<Scalar> mult(d * d * d, field_.zero());
    Vec unit = zero_vec(field_, d);
    for (const Statement* st : r.all("unit")) unit[index_arg(*st, 0, d, "basis index")] = *st->value;
    for (const Statement* st : r.all("mult")) {
      const std::size_t i = index_arg(*st, 0, d, "basis index"), j = index_arg(*st, 1, d, "basis index"),
                        k = index_arg(*st, 2, d, "basis index");
      mult[(i * d + j) * d + k] = *st->value;
    }
    std::vector<std::string> labels;
    if (const Statement* l = r.one("labels")) {
      if (l->args.size() != d) fail_at(*l, 0, "expected " + std::to_string(d) + " labels");
      labels = l->args;
    }
    return guarded(s, [&] { return Algebra(field_, d, std::move(mult), std::move(unit), std::move(labels)); });
  }

  Object hopf(const SectionReader& r) {
    const Section& s = r.section();
    const std::string form = r.form({"group_algebra", "sweedler", "op", "cop", "opcop", "dim"});
    if (form.empty()) fail_section(s, "expected one of group_algebra, sweedler, op, cop, opcop, dim");
    if (form != "dim") r.only({form}, "'" + form + "'");
    if (form == "group_algebra") return group_algebra(ref<GroupTable>(r.need(form), 0, "group"), field_);
    if (form == "sweedler") return guarded(s, [&] { return sweedler_h4(field_); });
    if (form == "op" || form == "cop" || form == "opcop") {
      const HopfAlgebra& base = ref<HopfAlgebra>(r.need(form), 0, "hopf");
      const Variant v = form == "op" ? Variant::op : form == "cop" ? Variant::cop : Variant::opcop;
      return guarded(s, [&] { return variants(base, v); });
    }
    const std::size_t d = count_arg(r.need("dim"), 0);
    std::vector<Scalar> mult(d * d * d, field_.zero());
    Vec unit = zero_vec(field_, d), counit = zero_vec(field_, d);
    Matrix comult(field_, d * d, d), s_mat(field_, d, d), s_inv(field_, d, d);
    for (const Statement* st : r.all("unit")) unit[index_arg(*st, 0, d, "basis index")] = *st->value;
    for (const Statement* st : r.all("counit")) counit[index_arg(*st, 0, d, "basis index")] = *st->value;
    for (const Statement* st : r.all("mult")) {
      const std::size_t i = index_arg(*st, 0, d, "basis index"), j = index_arg(*st, 1, d, "basis index"),
                        k = index_arg(*st, 2, d, "basis index");
      mult[(i * d + j) * d + k] = *st->value;
    }
    for (const Statement* st : r.all("comult")) {
      const std::size_t i = index_arg(*st, 0, d, "basis index"), j = index_arg(*st, 1, d, "basis index"),
                        k = index_arg(*st, 2, d, "basis index");
      comult.at(i * d + j, k) = *st->value;
    }
    for (const auto& [kw, m] : {std::pair<const char*, Matrix*>{"antipode", &s_mat}, {"antipode_inv", &s_inv}})
      for (const Statement* st : r.all(kw)) m->at(index_arg(*st, 0, d, "row"), index_arg(*st, 1, d, "column")) = *st->value;
    return guarded(s, [&] {
      return HopfAlgebra(Algebra(field_, d, std::move(mult), std::move(unit)), std::move(comult), std::move(counit),
                         std::move(s_mat), std::move(s_inv));
    });
  }

  Object gma(const SectionReader& r) {
    const Section& s = r.section();
    const std::string form = r.form({"matrix_units", "blocks"});
    if (form.empty()) fail_section(s, "expected 'matrix_units' or 'blocks'");
    if (form == "matrix_units") {
      r.only({"matrix_units"}, "'matrix_units'");
      const std::size_t n = count_arg(r.need(form), 0, 1, 8);
      return fixtures::full_matrix_blocks(field_, n).datum;
    }
    const std::size_t n = count_arg(r.need("blocks"), 0, 1, 8);
    const Statement& dims_st = r.need("dims");
    if (dims_st.args.size() != n * n) fail_at(dims_st, 0, "expected " + std::to_string(n * n) + " block dimensions");
    std::vector<std::size_t> dims;
    std::size_t total = 0;
    for (std::size_t a = 0; a < n * n; ++a) {
      dims.push_back(count_arg(dims_st, a, 0));
      total += dims.back();
    }
    if (total > 64) fail_at(dims_st, 0, "total dimension " + std::to_string(total) + " exceeds 64");
    MatrixDatum d(field_, n, dims);
    for (const Statement* st : r.all("theta")) {
      const std::size_t i = index_arg(*st, 0, n, "block"), j = index_arg(*st, 1, n, "block"),
                        k = index_arg(*st, 2, n, "block");
      Matrix& t = d.theta(i, j, k);
      t.at(index_arg(*st, 3, t.rows(), "row"), index_arg(*st, 4, t.cols(), "column")) = *st->value;
    }
    for (const Statement* st : r.all("eta")) {
      const std::size_t i = index_arg(*st, 0, n, "block");
      d.eta(i)[index_arg(*st, 1, d.dim(i, i), "basis index")] = *st->value;
    }
    return d;
  }

  // `on algebra A`, `on gma G`, `on block G i`, `on morita M`.
  Algebra target(const Statement& on) {
    const std::string& kind = on.args[0];
    const bool has_index = on.args.size() == 3;
    if (kind == "block") {
      if (!has_index) fail_at(on, 1, "'on block' needs a block index");
      const MatrixDatum& d = ref<MatrixDatum>(on, 1, "gma");
      return d.diagonal(index_arg(on, 2, d.order(), "block"));
    }
    if (has_index) fail_at(on, 2, "only 'on block' takes an index");
    if (kind == "algebra") return ref<Algebra>(on, 1, "algebra");
    if (kind == "gma") {
      const MatrixDatum& d = ref<MatrixDatum>(on, 1, "gma");
      return assembled(on, [&] { return assemble(d).total; });
    }
    if (kind == "morita") {
      const MoritaEntry& m = ref<MoritaEntry>(on, 1, "morita_context");
      return assembled(on, [&] { return assemble(to_datum(m.context)).total; });
    }
    fail_at(on, 0, "target must be algebra, gma, block or morita");
  }

  template <class F>
  Algebra assembled(const Statement& on, F&& f) {
    try {
      return f();
    } catch (const CheckFailed& e) {
      throw ResolveError{{on.line, on.arg_columns[1], "'" + on.args[1] + "' is not a valid datum: " + e.what()}, true};
    } catch (const std::invalid_argument& e) {
      fail_at(on, 1, e.what());
    }
  }

  Object partial_action(const SectionReader& r) {
    const Section& s = r.section();
    if (const Statement* fg = r.one("from_group")) {
      r.only({"from_group"}, "'from_group'");
      const UnitalPartialGroupAction& u = ref<UnitalPartialGroupAction>(*fg, 0, "group_action");
      return guarded(s, [&] { return group_to_hopf(u); });
    }
    const HopfAlgebra& h = ref<HopfAlgebra>(r.need("hopf"), 0, "hopf");
    const Algebra a = target(r.need("on"));
    Side side = Side::left;
    if (const Statement* sd = r.one("side")) {
      if (sd->args[0] == "right")
        side = Side::right;
      else if (sd->args[0] != "left")
        fail_at(*sd, 0, "side must be 'left' or 'right'");
    }
    if (r.one("trivial") && r.one("act")) fail_at(*r.one("act"), 0, "'act' conflicts with 'trivial'");
    const std::size_t nh = h.dim(), na = a.dim();
    Matrix m(field_, na, nh * na);
    if (r.one("trivial")) {
      for (std::size_t x = 0; x < nh; ++x)
        for (std::size_t y = 0; y < na; ++y)
          m.at(y, side == Side::left ? x * na + y : y * nh + x) = h.counit()[x];
    }
    for (const Statement* st : r.all("act")) {
      const std::size_t x = index_arg(*st, 0, nh, "Hopf basis index"), y = index_arg(*st, 1, na, "basis index"),
                        z = index_arg(*st, 2, na, "basis index");
      m.at(z, side == Side::left ? x * na + y : y * nh + x) = *st->value;
    }
    return guarded(s, [&] { return PartialAction(h, a, side, std::move(m)); });
  }

  Object group_action(const SectionReader& r) {
    const Section& s = r.section();
    const GroupTable& g = ref<GroupTable>(r.need("group"), 0, "group");
    const Algebra a = target(r.need("on"));
    const std::size_t n = g.order(), d = a.dim();
    std::vector<Vec> units(n, zero_vec(field_, d));
    std::vector<Matrix> maps(n, Matrix(field_, d, d));
    for (const Statement* st : r.all("unit"))
      units[index_arg(*st, 0, n, "group element")][index_arg(*st, 1, d, "basis index")] = *st->value;
    for (const Statement* st : r.all("map"))
      maps[index_arg(*st, 0, n, "group element")].at(index_arg(*st, 1, d, "row"), index_arg(*st, 2, d, "column")) =
          *st->value;
    try {
      return UnitalPartialGroupAction::from_full(g, a, std::move(units), maps);
    } catch (const DomainError& e) {
      fail_section(s, e.what(), true);
    } catch (const std::invalid_argument& e) {
      fail_section(s, e.what());
    }
  }

  Object group_datum(const SectionReader& r) {
    const Section& s = r.section();
    const MatrixDatum& d = ref<MatrixDatum>(r.need("gma"), 0, "gma");
    const GroupTable& g = ref<GroupTable>(r.need("group"), 0, "group");
    const std::size_t n = d.order();
    std::vector<std::optional<UnitalPartialGroupAction>> alpha(n);
    for (const Statement* st : r.all("alpha")) {
      const std::size_t i = index_arg(*st, 0, n, "block");
      const UnitalPartialGroupAction& u = ref<UnitalPartialGroupAction>(*st, 1, "group_action");
      if (!(u.group == g)) fail_at(*st, 1, "'" + st->args[1] + "' is an action of a different group");
      if (!(u.algebra == d.diagonal(i))) fail_at(*st, 1, "'" + st->args[1] + "' does not act on block " + st->args[0]);
      alpha[i] = u;
    }
    std::vector<UnitalPartialGroupAction> alphas;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alpha[i]) fail_section(s, "missing 'alpha " + std::to_string(i) + "'");
      alphas.push_back(*alpha[i]);
    }
    GroupDatum out = guarded(s, [&] { return skeleton_datum(d, g, std::move(alphas)); });
    std::set<std::size_t> cleared;
    for (const Statement* st : r.all("gamma")) {
      const std::size_t x = index_arg(*st, 0, g.order(), "group element"), i = index_arg(*st, 1, n, "block"),
                        j = index_arg(*st, 2, n, "block");
      Matrix& m = out.gamma_at(x, i, j);
      if (cleared.insert((x * n + i) * n + j).second) m = Matrix(field_, m.rows(), m.cols());
      m.at(index_arg(*st, 3, m.rows(), "row"), index_arg(*st, 4, m.cols(), "column")) = *st->value;
    }
    return out;
  }

  Object morita(const SectionReader& r) {
    MoritaEntry e;
    MoritaContextData& c = e.context;
    c.a = ref<Algebra>(r.need("a"), 0, "algebra");
    c.b = ref<Algebra>(r.need("b"), 0, "algebra");
    c.m_dim = count_arg(r.need("m_dim"), 0, 0);
    c.n_dim = count_arg(r.need("n_dim"), 0, 0);
    const std::size_t da = c.a.dim(), db = c.b.dim(), dm = c.m_dim, dn = c.n_dim;
    const std::pair<const char*, Matrix*> parts[] = {
        {"m_left", &(c.m_left = Matrix(field_, dm, da * dm))},  {"m_right", &(c.m_right = Matrix(field_, dm, dm * db))},
        {"n_left", &(c.n_left = Matrix(field_, dn, db * dn))},  {"n_right", &(c.n_right = Matrix(field_, dn, dn * da))},
        {"mu", &(c.mu = Matrix(field_, da, dm * dn))},         {"nu", &(c.nu = Matrix(field_, db, dn * dm))}};
    for (const auto& [kw, m] : parts)
      for (const Statement* st : r.all(kw))
        m->at(index_arg(*st, 0, m->rows(), "row"), index_arg(*st, 1, m->cols(), "column")) = *st->value;
    if (const Statement* act = r.one("actions")) e.actions = act->args;
    return e;
  }

  Object block_data(const SectionReader& r) {
    const Section& s = r.section();
    const MatrixDatum& d = ref<MatrixDatum>(r.need("gma"), 0, "gma");
    const HopfAlgebra& h = ref<HopfAlgebra>(r.need("hopf"), 0, "hopf");
    const std::size_t n = d.order();
    std::vector<std::optional<PartialAction>> diag(n);
    for (const Statement* st : r.all("diagonal")) {
      const std::size_t i = index_arg(*st, 0, n, "block");
      const PartialAction& p = ref<PartialAction>(*st, 1, "partial_action");
      if (!(p.hopf() == h)) fail_at(*st, 1, "'" + st->args[1] + "' is an action of a different Hopf algebra");
      if (!(p.algebra() == d.diagonal(i)) || p.side() != Side::left)
        fail_at(*st, 1, "'" + st->args[1] + "' is not a left action on block " + st->args[0]);
      diag[i] = p;
    }
    std::vector<PartialAction> diagonal;
    for (std::size_t i = 0; i < n; ++i) {
      if (!diag[i]) fail_section(s, "missing 'diagonal " + std::to_string(i) + "'");
      diagonal.push_back(*diag[i]);
    }
    BlockPartialData b = guarded(s, [&] { return make_block_data(d, h, std::move(diagonal)); });
    for (const Statement* st : r.all("left")) {
      const std::size_t i = index_arg(*st, 0, n, "block"), j = index_arg(*st, 1, n, "block");
      Matrix& m = b.left_module(i, j);
      m.at(index_arg(*st, 2, m.rows(), "row"), index_arg(*st, 3, m.cols(), "column")) = *st->value;
    }
    for (const Statement* st : r.all("right")) {
      const std::size_t i = index_arg(*st, 0, n, "block"), j = index_arg(*st, 1, n, "block");
      Matrix& m = b.right_module(i, j);
      m.at(index_arg(*st, 2, m.rows(), "row"), index_arg(*st, 3, m.cols(), "column")) = *st->value;
    }
    return b;
  }

  const DefinitionFile& file_;
  const Field field_;
  std::map<std::string, Object>& objects_;
  std::map<std::string, const Workspace::Failure*>& failed_;
  std::map<std::string, std::string> kinds_;
};

}  // namespace

Workspace Workspace::resolve(const DefinitionFile& f) {
  Workspace w;
  w.file_ = f;
  std::map<std::string, std::size_t> failed_index;
  std::map<std::string, const Failure*> failed;
  Resolver res(w.file_, w.objects_, failed);
  // failures_ may reallocate; rebuild the pointer map after each push.
  const auto refresh = [&] {
    failed.clear();
    for (const auto& [name, idx] : failed_index) failed[name] = &w.failures_[idx];
  };
  for (const Section& s : w.file_.sections) {
    w.order_.push_back(s.name);
    try {
      Object o = res.resolve(s);
      w.objects_.emplace(s.name, std::move(o));
    } catch (const ResolveError& e) {
      failed_index[s.name] = w.failures_.size();
      w.failures_.push_back({s.name, e.where, e.validation});
      refresh();
    } catch (const std::exception& e) {
      failed_index[s.name] = w.failures_.size();
      w.failures_.push_back({s.name, {s.line, 1, s.kind + " " + s.name + ": " + e.what()}, false});
      refresh();
    }
    res.declare(s.name, s.kind);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Emitters

namespace {

void entries(Section& s, const std::string& kw, std::vector<std::size_t> prefix, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) {
        std::vector<std::size_t> idx = prefix;
        idx.push_back(r);
        idx.push_back(c);
        s.body.push_back(stmt(kw, idx, m.at(r, c)));
      }
}

void entries(Section& s, const std::string& kw, std::vector<std::size_t> prefix, const Vec& v) {
  for (std::size_t r = 0; r < v.size(); ++r)
    if (!v[r].is_zero()) {
      std::vector<std::size_t> idx = prefix;
      idx.push_back(r);
      s.body.push_back(stmt(kw, idx, v[r]));
    }
}

Section make(const std::string& kind, const std::string& name) {
  Section s;
  s.kind = kind;
  s.name = name;
  return s;
}

}  // namespace

Section emit_algebra(const std::string& name, const Algebra& a) {
  Section s = make("algebra", name);
  const std::size_t d = a.dim();
  s.body.push_back(stmt("dim", {std::to_string(d)}));
  entries(s, "unit", {}, a.unit());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!a.coeff(i, j, k).is_zero()) s.body.push_back(stmt("mult", {i, j, k}, a.coeff(i, j, k)));
  return s;
}

Section emit_partial_action(const std::string& name, const std::string& hopf, const std::vector<std::string>& target,
                            const PartialAction& p) {
  Section s = make("partial_action", name);
  s.body.push_back(stmt("hopf", {hopf}));
  s.body.push_back(stmt("on", target));
  if (p.side() == Side::right) s.body.push_back(stmt("side", {"right"}));
  const std::size_t nh = p.hopf().dim(), na = p.algebra().dim();
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < na; ++b)
        if (!p.op(h).at(b, a).is_zero()) s.body.push_back(stmt("act", {h, a, b}, p.op(h).at(b, a)));
  return s;
}

Section emit_group_action(const std::string& name, const std::string& group, const std::vector<std::string>& target,
                          const UnitalPartialGroupAction& u) {
  Section s = make("group_action", name);
  s.body.push_back(stmt("group", {group}));
  s.body.push_back(stmt("on", target));
  const std::size_t d = u.algebra.dim();
  for (std::size_t g = 0; g < u.group.order(); ++g) entries(s, "unit", {g}, u.units[g]);
  for (std::size_t g = 0; g < u.group.order(); ++g) {
    Matrix full(u.algebra.field(), d, d);
    for (std::size_t c = 0; c < d; ++c) full.set_column(c, u.alpha(g, u.algebra.basis(c)));
    entries(s, "map", {g}, full);
  }
  return s;
}

Section emit_block_data(const std::string& name, const std::string& gma, const std::string& hopf,
                        const std::vector<std::string>& diagonal, const BlockPartialData& d) {
  Section s = make("block_data", name);
  s.body.push_back(stmt("gma", {gma}));
  s.body.push_back(stmt("hopf", {hopf}));
  for (std::size_t i = 0; i < diagonal.size(); ++i) s.body.push_back(stmt("diagonal", {std::to_string(i), diagonal[i]}));
  const std::size_t n = d.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries(s, "left", {i, j}, d.left_module(i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries(s, "right", {i, j}, d.right_module(i, j));
  return s;
}

Section emit_group_datum(const std::string& name, const std::string& gma, const std::string& group,
                         const std::vector<std::string>& alpha, const GroupDatum& d) {
  Section s = make("group_datum", name);
  s.body.push_back(stmt("gma", {gma}));
  s.body.push_back(stmt("group", {group}));
  for (std::size_t i = 0; i < alpha.size(); ++i) s.body.push_back(stmt("alpha", {std::to_string(i), alpha[i]}));
  const GroupDatum skeleton = skeleton_datum(d.datum, d.group, d.alpha);
  const std::size_t n = d.order();
  for (std::size_t g = 0; g < d.group.order(); ++g)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Matrix& m = d.gamma_at(g, i, j);
        if (m == skeleton.gamma_at(g, i, j)) continue;
        const std::size_t before = s.body.size();
        entries(s, "gamma", {g, i, j}, m);
        // an all-zero gamma still has to be named to be cleared
        if (s.body.size() == before) s.body.push_back(stmt("gamma", {g, i, j, 0, 0}, m.field().zero()));
      }
  return s;
}

Section emit_gma(const std::string& name, const MatrixDatum& d) {
  Section s = make("gma", name);
  const std::size_t n = d.order();
  s.body.push_back(stmt("blocks", {std::to_string(n)}));
  std::vector<std::string> dims;
  for (std::size_t x : d.dims()) dims.push_back(std::to_string(x));
  s.body.push_back(stmt("dims", dims));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) entries(s, "theta", {i, j, k}, d.theta(i, j, k));
  for (std::size_t i = 0; i < n; ++i) entries(s, "eta", {i}, d.eta(i));
  return s;
}

Section emit_morita_context(const std::string& name, const std::string& a, const std::string& b,
                            const MoritaContextData& c, const std::vector<std::string>& actions) {
  Section s = make("morita_context", name);
  s.body.push_back(stmt("a", {a}));
  s.body.push_back(stmt("b", {b}));
  s.body.push_back(stmt("m_dim", {std::to_string(c.m_dim)}));
  s.body.push_back(stmt("n_dim", {std::to_string(c.n_dim)}));
  entries(s, "m_left", {}, c.m_left);
  entries(s, "m_right", {}, c.m_right);
  entries(s, "n_left", {}, c.n_left);
  entries(s, "n_right", {}, c.n_right);
  entries(s, "mu", {}, c.mu);
  entries(s, "nu", {}, c.nu);
  if (!actions.empty()) s.body.push_back(stmt("actions", actions));
  return s;
}

}  // namespace pgma
