#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "pgma/error.hpp"
#include "pgma/group_datum.hpp"
#include "pgma/smash.hpp"

namespace pgma::cli {

namespace {

using json = nlohmann::ordered_json;

const Statement* find_stmt(const Section& s, std::string_view kw) {
  for (const auto& st : s.body)
    if (st.keyword == kw) return &st;
  return nullptr;
}

/// Thrown inside a command to abort with an input error.
struct InputError {
  Diagnostic where;
};

[[noreturn]] void input_error(const Section& s, std::string msg) {
  throw InputError{{s.line, 1, s.kind + " " + s.name + ": " + std::move(msg)}};
}

// Helpers shared by the command bodies.
class Context {
 public:
  Context(Run& run, const Workspace& ws, bool deep) : run_(run), ws_(ws), deep_(deep) {
    for (const auto& s : ws.file().sections) taken_.insert(s.name);
  }

  const Workspace& ws() const { return ws_; }
  bool deep() const { return deep_; }

  void result(const Section& s, std::string step, Report r) {
    const bool ok = r.passed();
    run_.results.push_back({s.name, s.kind, std::move(step), std::move(r), "", ok});
  }
  void fail(const Section& s, std::string step, const CheckFailed& e) {
    run_.results.push_back({s.name, s.kind, std::move(step), e.report(), "rejected at stage '" + e.stage() + "'", false});
  }
  void note(const Section& s, std::string step, std::string message, bool passed) {
    run_.results.push_back({s.name, s.kind, std::move(step), std::nullopt, std::move(message), passed});
  }
  void output(json o, std::string text) {
    run_.outputs.push_back(std::move(o));
    run_.text.push_back(std::move(text));
  }

  /// A fresh section name derived from `base`.
  std::string fresh(const std::string& base) {
    std::string name = base;
    for (int k = 2; taken_.count(name); ++k) name = base + "_" + std::to_string(k);
    taken_.insert(name);
    return name;
  }
  void emit(Section s) { run_.emitted.push_back(std::move(s)); }

  template <class T>
  const T& object(const Section& s) const {
    const T* p = ws_.get_as<T>(s.name);
    if (!p) input_error(s, "not resolved");
    return *p;
  }

  /// Name of a hopf section for a group algebra over `group` (emitting one if needed).
  std::string hopf_name_for_group(const std::string& group) {
    for (const auto& s : ws_.file().sections)
      if (s.kind == "hopf")
        if (const Statement* ga = find_stmt(s, "group_algebra"); ga && ga->args[0] == group) return s.name;
    const std::string name = fresh("k" + group);
    Section h{"hopf", name, {stmt("group_algebra", {group})}, 0};
    emit(std::move(h));
    return name;
  }

  /// The name under which the group of `h` is known (emitting a group section if needed).
  std::string group_name_for_hopf(const std::string& hopf_name, const HopfAlgebra& h) {
    if (const Section* s = ws_.section(hopf_name))
      if (const Statement* ga = find_stmt(*s, "group_algebra")) return ga->args[0];
    const GroupTable& g = *h.group();
    const std::string name = fresh(hopf_name + "_group");
    Section s{"group", name, {stmt("order", {std::to_string(g.order())})}, 0};
    for (std::size_t a = 0; a < g.order(); ++a) {
      std::vector<std::string> row;
      for (std::size_t b = 0; b < g.order(); ++b) row.push_back(std::to_string(g.mul(a, b)));
      s.body.push_back(stmt("row", row));
    }
    emit(std::move(s));
    return name;
  }

  /// Hopf section name behind a partial action section.
  std::string hopf_of_action(const Section& s) {
    if (const Statement* h = find_stmt(s, "hopf")) return h->args[0];
    const Statement* fg = find_stmt(s, "from_group");
    const Section* ga = ws_.section(fg->args[0]);
    return hopf_name_for_group(find_stmt(*ga, "group")->args[0]);
  }

 private:
  Run& run_;
  const Workspace& ws_;
  bool deep_;
  std::set<std::string> taken_;
};

// ---------------------------------------------------------------------------
// Formatting of elements for build-smash.

std::string combination(const Vec& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string coef = v[i].to_string();
    const bool neg = !coef.empty() && coef[0] == '-';
    if (neg) coef.erase(0, 1);
    std::string term = coef == "1" ? labels[i] : coef + " " + labels[i];
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

void smash_output(Context& cx, const Section& s, const SmashAlgebra& sm, const std::string& extra_text, json extra) {
  const Algebra& a = sm.action.algebra();
  const HopfAlgebra& h = sm.action.hopf();
  std::vector<std::string> ambient;
  if (sm.side == Side::left) {
    for (std::size_t x = 0; x < a.dim(); ++x)
      for (std::size_t y = 0; y < h.dim(); ++y) ambient.push_back(a.labels()[x] + "#" + h.algebra().labels()[y]);
  } else {
    for (std::size_t y = 0; y < h.dim(); ++y)
      for (std::size_t x = 0; x < a.dim(); ++x) ambient.push_back(h.algebra().labels()[y] + "#" + a.labels()[x]);
  }
  std::vector<std::string> names;
  for (std::size_t b = 0; b < sm.dim(); ++b) names.push_back("s" + std::to_string(b));

  json o;
  o["section"] = s.name;
  o["output"] = "smash";
  o["side"] = sm.side == Side::left ? "left" : "right";
  o["dimension"] = sm.dim();
  o["ambient_dimension"] = sm.ambient_dim;
  std::ostringstream t;
  t << "smash algebra of " << s.name << " (" << o["side"].get<std::string>() << ")\n";
  t << "dimension: " << sm.dim() << "\n";
  t << "basis:\n";
  json basis = json::array();
  for (std::size_t b = 0; b < sm.dim(); ++b) {
    const std::string c = combination(sm.image.basis()[b], ambient);
    basis.push_back(c);
    t << "  " << names[b] << " = " << c << "\n";
  }
  o["basis"] = basis;
  t << "multiplication:\n";
  json table = json::array();
  for (std::size_t x = 0; x < sm.dim(); ++x)
    for (std::size_t y = 0; y < sm.dim(); ++y) {
      const Vec p = sm.algebra.basis_product(x, y);
      if (is_zero(p)) continue;
      const std::string c = combination(p, names);
      table.push_back({{"left", x}, {"right", y}, {"product", c}});
      t << "  " << names[x] << " * " << names[y] << " = " << c << "\n";
    }
  o["multiplication"] = table;
  for (auto& [k, v] : extra.items()) o[k] = v;
  cx.output(std::move(o), t.str() + extra_text);
}

// ---------------------------------------------------------------------------
// Commands. Each takes one applicable section.

void check_section(Context& cx, const Section& s) {
  if (s.kind == "group") {
    cx.note(s, "check", "group of order " + std::to_string(cx.object<GroupTable>(s).order()), true);
  } else if (s.kind == "algebra") {
    cx.result(s, "check", check_algebra(cx.object<Algebra>(s)));
  } else if (s.kind == "hopf") {
    cx.result(s, "check", check_hopf(cx.object<HopfAlgebra>(s)));
  } else if (s.kind == "gma") {
    cx.result(s, "check", check_datum(cx.object<MatrixDatum>(s)));
  } else if (s.kind == "partial_action") {
    cx.result(s, "check", check_partial_action(cx.object<PartialAction>(s), cx.deep()));
  } else if (s.kind == "group_action") {
    cx.result(s, "check", check_group_action(cx.object<UnitalPartialGroupAction>(s)));
  } else if (s.kind == "group_datum") {
    cx.result(s, "check", check_group_datum(cx.object<GroupDatum>(s)));
  } else if (s.kind == "morita_context") {
    cx.result(s, "check", check_morita_context(cx.object<MoritaEntry>(s).context, false));
  } else if (s.kind == "block_data") {
    const BlockPartialData& b = cx.object<BlockPartialData>(s);
    Report r = check_block_data(b);
    const bool ok = r.passed();
    cx.result(s, "check", std::move(r));
    if (cx.deep() && ok) {
      cx.result(s, "c-prime", check_c_prime(b));
      cx.result(s, "rewrites", check_rewrites(b));
    }
  }
}

void build_smash(Context& cx, const Section& s) {
  if (s.kind == "group_action") {
    const UnitalPartialGroupAction& u = cx.object<UnitalPartialGroupAction>(s);
    Report gr = check_group_action(u);
    if (!gr.passed()) {
      cx.result(s, "check", std::move(gr));
      return;
    }
    const SmashAlgebra sm = left_smash(group_to_hopf(u));
    cx.result(s, "smash", check_algebra(sm.algebra));
    const CrossedProduct cp = crossed_product(u);
    IsoCertificate eta = crossed_iso(u, CrossedIso::eta);
    IsoCertificate lambda = crossed_iso(u, CrossedIso::lambda);
    cx.result(s, "eta", eta.report);
    cx.result(s, "lambda", lambda.report);
    std::ostringstream t;
    t << "crossed product dimension: " << cp.algebra.dim() << "\n";
    smash_output(cx, s, sm, t.str(), json{{"crossed_product_dimension", cp.algebra.dim()}});
    return;
  }
  const PartialAction& p = cx.object<PartialAction>(s);
  Report r = check_partial_action(p);
  if (!r.passed()) {
    cx.result(s, "check", std::move(r));
    return;
  }
  const SmashAlgebra sm = p.side() == Side::left ? left_smash(p) : right_smash(p);
  cx.result(s, "smash", check_algebra(sm.algebra));
  smash_output(cx, s, sm, "", json::object());
}

struct RingTarget {
  std::string gma_name;
  MatrixDatum datum;
};

RingTarget ring_of(Context& cx, const Section& action) {
  const Statement* on = find_stmt(action, "on");
  const std::string& name = on->args[1];
  if (on->args[0] == "gma") return {name, *cx.ws().get_as<MatrixDatum>(name)};
  const MatrixDatum d = to_datum(cx.ws().get_as<MoritaEntry>(name)->context);
  const std::string gma = cx.fresh(name + "_ring");
  cx.emit(emit_gma(gma, d));
  return {gma, d};
}

json bool_table(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& at) {
  json t = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(at(i, j));
    t.push_back(row);
  }
  return t;
}

std::string table_text(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& at) {
  std::ostringstream t;
  for (std::size_t i = 0; i < n; ++i) {
    t << "  ";
    for (std::size_t j = 0; j < n; ++j) t << (j ? " " : "") << (at(i, j) ? "yes" : " NO");
    t << "\n";
  }
  return t.str();
}

/// Emits diagonal actions and the block_data section; returns the block_data name.
std::string emit_blocks(Context& cx, const std::string& base, const std::string& gma, const std::string& hopf,
                        const BlockPartialData& d) {
  std::vector<std::string> diag;
  for (std::size_t i = 0; i < d.order(); ++i) {
    diag.push_back(cx.fresh(base + "_d" + std::to_string(i)));
    cx.emit(emit_partial_action(diag.back(), hopf, {"block", gma, std::to_string(i)}, d.diagonal[i]));
  }
  const std::string name = cx.fresh(base + "_blocks");
  cx.emit(emit_block_data(name, gma, hopf, diag, d));
  return name;
}

void decompose_gma(Context& cx, const Section& s) {
  const PartialAction& p = cx.object<PartialAction>(s);
  const RingTarget ring = ring_of(cx, s);
  const BlockedAlgebra r = assemble(ring.datum);
  InvarianceTable inv = check_block_invariance(r, p);
  const auto at = [&](std::size_t i, std::size_t j) { return inv.at(i, j); };
  json o{{"section", s.name}, {"output", "invariance"}, {"table", bool_table(inv.n, at)}};
  std::string text = "invariance of " + s.name + " (row i, column j: h . iMj inside iMj)\n" + table_text(inv.n, at);
  cx.output(std::move(o), text);
  const bool all = inv.all();
  cx.result(s, "invariance", std::move(inv.report));
  if (!all) return;

  Report lr = check_partial_action(p);
  if (!lr.passed()) {
    cx.result(s, "check", std::move(lr));
    return;
  }
  BlockPartialData d;
  try {
    d = decompose(r, p);
  } catch (const CheckFailed& e) {
    cx.fail(s, "decompose", e);
    return;
  }
  cx.result(s, "block-data", check_block_data(d));
  if (cx.deep()) {
    cx.result(s, "c-prime", check_c_prime(d));
    cx.result(s, "rewrites", check_rewrites(d));
  }
  emit_blocks(cx, s.name, ring.gma_name, cx.hopf_of_action(s), d);
}

void synthesize_gma(Context& cx, const Section& s) {
  const BlockPartialData& b = cx.object<BlockPartialData>(s);
  Report r = check_block_data(b);
  const bool ok = r.passed();
  cx.result(s, "block-data", std::move(r));
  if (!ok) return;
  const PartialAction p = synthesize(b);
  cx.result(s, "synthesized", check_partial_action(p, cx.deep()));
  const BlockedAlgebra ring = assemble(b.datum);
  cx.result(s, "invariance", check_block_invariance(ring, p).report);
  const std::string gma = find_stmt(s, "gma")->args[0], hopf = find_stmt(s, "hopf")->args[0];
  cx.emit(emit_partial_action(cx.fresh(s.name + "_action"), hopf, {"gma", gma}, p));
}

void group_datum_check(Context& cx, const Section& s) { cx.result(s, "check", check_group_datum(cx.object<GroupDatum>(s))); }

void group_datum_to_hopf(Context& cx, const Section& s) {
  const GroupDatum& d = cx.object<GroupDatum>(s);
  BlockPartialData b;
  try {
    b = datum_to_theorem_data(d);
  } catch (const CheckFailed& e) {
    cx.fail(s, "to-hopf", e);
    return;
  }
  cx.result(s, "a-prime", check_a_prime(b));
  cx.result(s, "block-data", check_block_data(b));
  const PartialAction p = synthesize(b);
  cx.result(s, "synthesized", check_partial_action(p, cx.deep()));
  const std::string gma = find_stmt(s, "gma")->args[0];
  const std::string hopf = cx.hopf_name_for_group(find_stmt(s, "group")->args[0]);
  emit_blocks(cx, s.name, gma, hopf, b);
  cx.emit(emit_partial_action(cx.fresh(s.name + "_action"), hopf, {"gma", gma}, p));
}

// Block data and its gma/hopf names from either a block_data or an action on a gma.
struct BlockSource {
  BlockPartialData data;
  std::string gma;
  std::string hopf;
};

std::optional<BlockSource> block_source(Context& cx, const Section& s) {
  if (s.kind == "block_data")
    return BlockSource{cx.object<BlockPartialData>(s), find_stmt(s, "gma")->args[0], find_stmt(s, "hopf")->args[0]};
  const PartialAction& p = cx.object<PartialAction>(s);
  const RingTarget ring = ring_of(cx, s);
  try {
    return BlockSource{decompose(assemble(ring.datum), p), ring.gma_name, cx.hopf_of_action(s)};
  } catch (const CheckFailed& e) {
    cx.fail(s, "decompose", e);
    return std::nullopt;
  }
}

void group_datum_from_hopf(Context& cx, const Section& s) {
  std::optional<BlockSource> src = block_source(cx, s);
  if (!src) return;
  if (!src->data.hopf.group()) input_error(s, "from-hopf needs a group algebra");
  GroupDatum d;
  try {
    d = theorem_data_to_datum(src->data);
  } catch (const CheckFailed& e) {
    cx.fail(s, "from-hopf", e);
    return;
  }
  cx.result(s, "group-datum", check_group_datum(d));
  const std::string group = cx.group_name_for_hopf(src->hopf, src->data.hopf);
  std::vector<std::string> alpha;
  for (std::size_t i = 0; i < d.order(); ++i) {
    alpha.push_back(cx.fresh(s.name + "_alpha" + std::to_string(i)));
    cx.emit(emit_group_action(alpha.back(), group, {"block", src->gma, std::to_string(i)}, d.alpha[i]));
  }
  cx.emit(emit_group_datum(cx.fresh(s.name + "_datum"), src->gma, group, alpha, d));
}

void group_datum_roundtrip(Context& cx, const Section& s) {
  if (s.kind == "group_datum") {
    const GroupDatum& d = cx.object<GroupDatum>(s);
    Report c = check_group_datum(d);
    if (!c.passed()) {
      cx.result(s, "check", std::move(c));
      return;
    }
    cx.result(s, "roundtrip", group_roundtrip(d));
    return;
  }
  const BlockPartialData& b = cx.object<BlockPartialData>(s);
  if (!b.hopf.group()) input_error(s, "roundtrip needs a group algebra");
  try {
    cx.result(s, "roundtrip", group_roundtrip(b));
  } catch (const CheckFailed& e) {
    cx.fail(s, "roundtrip", e);
  }
}

void morita_check_context(Context& cx, const Section& s) {
  cx.result(s, "context", check_morita_context(cx.object<MoritaEntry>(s).context, true));
}

void morita_check_equivalence(Context& cx, const Section& s) {
  const MoritaEntry& m = cx.object<MoritaEntry>(s);
  const Statement* act = find_stmt(s, "actions");
  std::vector<const PartialAction*> ps;
  for (std::size_t k = 0; k < 3; ++k) {
    const std::string& name = (*m.actions)[k];
    const PartialAction* p = cx.ws().get_as<PartialAction>(name);
    if (!p) {
      if (!cx.ws().section(name))
        throw InputError{{act->line, act->arg_columns[k], "unknown name '" + name + "'"}};
      if (cx.ws().section(name)->kind != "partial_action")
        throw InputError{{act->line, act->arg_columns[k], "'" + name + "' is not a partial_action"}};
      cx.note(s, "equivalence", "action '" + name + "' failed to resolve", false);
      return;
    }
    ps.push_back(p);
  }
  Report eq = check_morita_equivalent(*ps[0], *ps[1], m.context, *ps[2]);
  const bool eq_ok = eq.passed();
  cx.result(s, "equivalence", std::move(eq));
  bool mod_ok = false;
  try {
    const BlockPartialData d = decompose(assemble(to_datum(m.context)), *ps[2]);
    MoritaModuleCheck mc = check_morita_modules(*ps[0], *ps[1], m.context, d);
    mod_ok = mc.report.passed();
    cx.result(s, "module-conditions", std::move(mc.report));
  } catch (const CheckFailed& e) {
    cx.fail(s, "module-conditions", e);
  }
  cx.output(json{{"section", s.name}, {"output", "agreement"}, {"equivalence", eq_ok}, {"module_conditions", mod_ok},
                 {"agree", eq_ok == mod_ok}},
            std::string("equivalence and module conditions ") + (eq_ok == mod_ok ? "agree" : "DISAGREE") + "\n");
}

// ---------------------------------------------------------------------------

struct Command {
  std::function<bool(const Workspace&, const Section&)> applies;
  std::function<void(Context&, const Section&)> body;
};

bool action_on_ring(const Workspace& ws, const Section& s) {
  if (s.kind != "partial_action") return false;
  const Statement* on = find_stmt(s, "on");
  if (!on || (on->args[0] != "gma" && on->args[0] != "morita")) return false;
  const PartialAction* p = ws.get_as<PartialAction>(s.name);
  return !p || p->side() == Side::left;
}

std::optional<Command> lookup(const std::string& command, const std::string& sub) {
  const auto kind_is = [](std::initializer_list<const char*> kinds) {
    std::vector<std::string> ks(kinds.begin(), kinds.end());
    return [ks](const Workspace&, const Section& s) { return std::find(ks.begin(), ks.end(), s.kind) != ks.end(); };
  };
  if (command == "check") return Command{[](const Workspace&, const Section&) { return true; }, check_section};
  if (command == "build-smash") return Command{kind_is({"partial_action", "group_action"}), build_smash};
  if (command == "decompose-gma") return Command{action_on_ring, decompose_gma};
  if (command == "synthesize-gma") return Command{kind_is({"block_data"}), synthesize_gma};
  if (command == "group-datum") {
    if (sub == "check") return Command{kind_is({"group_datum"}), group_datum_check};
    if (sub == "to-hopf") return Command{kind_is({"group_datum"}), group_datum_to_hopf};
    if (sub == "from-hopf")
      return Command{[](const Workspace& ws, const Section& s) { return s.kind == "block_data" || action_on_ring(ws, s); },
                     group_datum_from_hopf};
    if (sub == "roundtrip") return Command{kind_is({"group_datum", "block_data"}), group_datum_roundtrip};
  }
  if (command == "morita") {
    if (sub == "check-context") return Command{kind_is({"morita_context"}), morita_check_context};
    if (sub == "check-equivalence")
      return Command{[](const Workspace&, const Section& s) {
                       return s.kind == "morita_context" && find_stmt(s, "actions") != nullptr;
                     },
                     morita_check_equivalence};
  }
  return std::nullopt;
}

std::optional<std::string> load(const Options& o, Run& run) {
  if (!o.fixture.empty() && !o.file.empty()) {
    run.errors.push_back({0, 0, "give either a file or --fixture, not both"});
    return std::nullopt;
  }
  if (!o.fixture.empty()) {
    run.input = "fixture:" + o.fixture;
    const FixtureSet* f = find_fixture(o.fixture);
    if (!f) {
      run.errors.push_back({0, 0, "unknown fixture '" + o.fixture + "'"});
      return std::nullopt;
    }
    return f->definition;
  }
  if (o.file.empty()) {
    run.errors.push_back({0, 0, "no input: give a definition file or --fixture <name>"});
    return std::nullopt;
  }
  run.input = o.file;
  std::ifstream in(o.file, std::ios::binary);
  if (!in) {
    run.errors.push_back({0, 0, "cannot read '" + o.file + "'"});
    return std::nullopt;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int Run::exit_code() const {
  if (!errors.empty()) return 2;
  for (const auto& r : results)
    if (!r.passed) return 1;
  return 0;
}

std::string Run::extended_definition() const {
  DefinitionFile f = source;
  for (const auto& s : emitted) f.sections.push_back(s);
  return serialize(f);
}

Run execute(const Options& o) {
  Run run;
  run.command = o.subcommand.empty() ? o.command : o.command + " " + o.subcommand;
  const std::optional<Command> cmd = lookup(o.command, o.subcommand);
  if (!cmd) {
    run.errors.push_back({0, 0, "unknown command '" + run.command + "'"});
    return run;
  }
  const std::optional<std::string> text = load(o, run);
  if (!text) return run;
  ParseResult parsed = parse_definition(*text);
  if (!parsed.file) {
    run.errors = std::move(parsed.errors);
    return run;
  }
  run.source = *parsed.file;
  run.field = parsed.file->field.describe();
  const Workspace ws = Workspace::resolve(*parsed.file);
  for (const auto& f : ws.failures())
    if (!f.validation) run.errors.push_back(f.where);
  if (!run.errors.empty()) return run;

  std::vector<const Section*> chosen;
  for (const auto& s : ws.file().sections)
    if ((o.target.empty() || s.name == o.target) && cmd->applies(ws, s)) chosen.push_back(&s);
  if (!o.target.empty() && chosen.empty()) {
    const Section* s = ws.section(o.target);
    run.errors.push_back({s ? s->line : 0, 1,
                          s ? "section '" + o.target + "' is not applicable to " + run.command
                            : "unknown target '" + o.target + "'"});
    return run;
  }
  if (chosen.empty()) {
    run.errors.push_back({0, 0, "no section applicable to " + run.command});
    return run;
  }

  Context cx(run, ws, o.deep);
  for (const Section* s : chosen) {
    // a section that failed validation during resolution is a failed result
    if (const Workspace::Failure* f = ws.failure(s->name)) {
      cx.note(*s, "resolve", f->where.to_string(), false);
      continue;
    }
    try {
      cmd->body(cx, *s);
    } catch (const InputError& e) {
      run.errors.push_back(e.where);
    } catch (const CheckFailed& e) {
      cx.fail(*s, "precondition", e);
    } catch (const std::exception& e) {
      run.errors.push_back({s->line, 1, s->kind + " " + s->name + ": " + e.what()});
    }
  }
  return run;
}

}  // namespace pgma::cli
