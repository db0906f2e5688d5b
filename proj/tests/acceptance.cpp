// Acceptance battery: one line per criterion, exit 0 iff every line passes.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pgma/error.hpp"
#include "pgma/fixtures.hpp"
#include "pgma/group_datum.hpp"
#include "pgma/morita.hpp"
#include "support.hpp"

using namespace pgma;
using testing::Q;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

// Collects failures with a short description of the first few.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  std::size_t checked() const { return checked_; }
  bool ok() const { return failed_ == 0; }
  Verdict verdict(const std::string& summary) const {
    if (ok()) return {true, summary};
    return {false, std::to_string(failed_) + " of " + std::to_string(checked_) + " failed: " + notes_};
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::string notes_;
};

struct NamedAction {
  std::string name;
  PartialAction action;
};

std::vector<NamedAction> left_fixtures() {
  return {
      {"trivial-z2-m2", fixtures::trivial_z2_m2(Q)},
      {"trivial-z3-upper", fixtures::trivial_z3_upper(Q)},
      {"trivial-s3-m2", fixtures::trivial_s3_m2(Q)},
      {"unit-zero", fixtures::unit_zero(Q)},
      {"z2-on-k2", group_to_hopf(fixtures::z2_on_k2(Q))},
      {"conjugation-m2", fixtures::conjugation_m2(Q)},
      {"swap-m2", fixtures::swap_m2(Q)},
      {"sweedler-trivial", fixtures::sweedler_trivial(Q)},
      {"sweedler-partial", fixtures::sweedler_partial(Q)},
      {"z3-conjugation-m3", fixtures::z3_conjugation_m3()},
      {"z3-restricted", group_to_hopf(fixtures::z3_restricted(Q))},
  };
}

BlockedAlgebra one_block(const Algebra& a) { return assemble(peirce(a, {a.unit()}).datum); }

struct Invariant {
  std::string name;
  BlockedAlgebra ring;
  PartialAction action;
  bool global;
};

std::vector<Invariant> invariant_fixtures() {
  const Algebra k2 = diagonal_algebra(Q, 2);
  return {
      {"trivial-z2-m2", fixtures::full_matrix_blocks(Q, 2), fixtures::trivial_z2_m2(Q), true},
      {"trivial-z3-upper", fixtures::upper_triangular_blocks(Q), fixtures::trivial_z3_upper(Q), true},
      {"trivial-s3-m2", fixtures::full_matrix_blocks(Q, 2), fixtures::trivial_s3_m2(Q), true},
      {"sweedler-trivial", one_block(k2), fixtures::sweedler_trivial(Q), true},
      {"conjugation-m2", fixtures::full_matrix_blocks(Q, 2), fixtures::conjugation_m2(Q), true},
      {"z3-conjugation-m3", fixtures::full_matrix_blocks(Field::prime(7), 3), fixtures::z3_conjugation_m3(), true},
      {"z3-restricted", one_block(k2), group_to_hopf(fixtures::z3_restricted(Q)), false},
      {"sweedler-partial", one_block(k2), fixtures::sweedler_partial(Q), false},
  };
}

std::vector<std::pair<std::string, GroupDatum>> unital_datums() {
  return {{"conjugation", fixtures::conjugation_datum(Q)},
          {"z3", fixtures::z3_datum()},
          {"off-diagonal-zero", fixtures::off_diagonal_zero_datum(Q)}};
}

PartialAction trivial_on(const Algebra& a) { return trivial_left_action(group_algebra(GroupTable::cyclic(2), Q), a); }

// Z2 on k^n with D_g spanned by the coordinates in `support` and alpha_g = id.
PartialAction restricted_identity(std::size_t n, const std::vector<bool>& support) {
  const Algebra a = diagonal_algebra(Q, n);
  Vec one_g = zero_vec(Q, n);
  for (std::size_t i = 0; i < n; ++i)
    if (support[i]) one_g[i] = Q.one();
  auto u = UnitalPartialGroupAction::from_full(GroupTable::cyclic(2), a, {a.unit(), one_g},
                                              {Matrix::identity(Q, n), Matrix::identity(Q, n)});
  return group_to_hopf(u);
}

// Conjugation by a block-diagonal involution U = P D P^-1 on M_n, carried to
// the Peirce datum of the block idempotents. A global Z2 action with every
// block invariant.
Invariant random_block_involution(std::mt19937_64& g) {
  std::uniform_int_distribution<std::size_t> size(2, 3), cut(0, 1);
  std::uniform_int_distribution<long> entry(-2, 2), sign(0, 1);
  const std::size_t n = size(g);
  std::vector<std::size_t> block_of(n);
  std::size_t blocks = 1;
  for (std::size_t k = 1; k < n; ++k) {
    if (cut(g)) ++blocks;
    block_of[k] = blocks - 1;
  }

  Matrix u = Matrix::identity(Q, n);
  for (std::size_t b = 0; b < blocks; ++b) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      if (block_of[k] == b) idx.push_back(k);
    const std::size_t s = idx.size();
    std::optional<Matrix> pinv;
    Matrix p;
    do {
      p = Matrix(Q, s, s);
      for (std::size_t r = 0; r < s; ++r)
        for (std::size_t c = 0; c < s; ++c) p.at(r, c) = Q.from_int(entry(g));
      pinv = inverse(p);
    } while (!pinv);
    Matrix d(Q, s, s);
    for (std::size_t r = 0; r < s; ++r) d.at(r, r) = Q.from_int(sign(g) ? 1 : -1);
    const Matrix ub = p * d * *pinv;
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t c = 0; c < s; ++c) u.at(idx[r], idx[c]) = ub.at(r, c);
  }

  const Algebra a = endomorphism_algebra(Q, n);
  Matrix conj(Q, n * n, n * n);
  for (std::size_t pq = 0; pq < n * n; ++pq) {
    const Matrix x = u * endomorphism_to_matrix(Q, n, a.basis(pq)) * u;  // U^-1 = U
    conj.set_column(pq, matrix_to_endomorphism(x));
  }
  std::vector<Vec> idems(blocks, zero_vec(Q, n * n));
  for (std::size_t k = 0; k < n; ++k) idems[block_of[k]][k * n + k] = Q.one();
  const IdempotentBlocks ib = peirce(a, idems);
  BlockedAlgebra r = assemble(ib.datum);
  const Matrix op = *inverse(ib.to_algebra) * conj * ib.to_algebra;
  PartialAction p = left_action_from_operators(group_algebra(GroupTable::cyclic(2), Q), r.total,
                                               {Matrix::identity(Q, r.total.dim()), op});
  return {"random-involution-n" + std::to_string(n), std::move(r), std::move(p), true};
}

std::vector<Invariant> random_involutions(std::size_t count) {
  auto g = testing::rng(808);
  std::vector<Invariant> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_block_involution(g));
  return out;
}

// Oracle for smash dimensions: rank of a (x) h -> sum a (h1 . 1) (x) h2 in A (x) H.
std::size_t generator_rank(const PartialAction& p) {
  const std::size_t na = p.algebra().dim(), nh = p.hopf().dim();
  std::vector<Vec> images;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t h = 0; h < nh; ++h) {
      Vec v = zero_vec(p.algebra().field(), na * nh);
      const Vec delta = p.hopf().coproduct(p.hopf().basis(h));
      for (std::size_t i = 0; i < nh; ++i)
        for (std::size_t j = 0; j < nh; ++j) {
          if (delta[i * nh + j].is_zero()) continue;
          const Vec x = p.algebra().multiply(p.algebra().basis(a), p.act_basis(i, p.algebra().unit()));
          for (std::size_t b = 0; b < na; ++b) v[b * nh + j] += delta[i * nh + j] * x[b];
        }
      images.push_back(v);
    }
  return row_space_basis(images).size();
}

bool passes(const Report& r, std::initializer_list<const char*> tags) {
  for (const char* t : tags) {
    const IdentityCheck* c = r.find(t);
    if (!c || !c->passed()) return false;
  }
  return true;
}

std::vector<int> perturbation_deltas() { return {2, 3, 5, -2}; }

// Adds a delta from the fixed set to one entry chosen uniformly among `slots`.
template <class Slot>
void perturb(std::mt19937_64& g, std::vector<Slot>& slots, const Field& f) {
  std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1), dpick(0, 3);
  *slots[pick(g)] += f.from_int(perturbation_deltas()[dpick(g)]);
}

// ---------------------------------------------------------------------------

Verdict axiom_soundness() {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  for (const auto& [name, p] : left_fixtures()) {
    t.expect(check_left_partial_action(p).passed(), name + " LPA");
    const PartialAction q = to_right(p);
    t.expect(check_right_partial_action(q).passed(), name + " RPA");
    const PartialRepresentation pi = induced_representation(p);
    t.expect(check_partial_representation(pi).passed(), name + " PR");
    t.expect(check_partial_representation(opcop_representation(pi)).passed(), name + " PR opcop");
    t.expect(check_covariant_pair(canonical_pair(left_smash(p)), p).passed(), name + " CP");
    t.expect(check_covariant_pair(canonical_pair(right_smash(q)), q).passed(), name + " OCP");
  }
  for (const auto& u : {fixtures::z2_on_k2(Q), fixtures::z3_restricted(Q)})
    t.expect(check_group_action(u).passed(), "group action");
  for (const auto& h : {group_algebra(GroupTable::cyclic(2), Q), group_algebra(GroupTable::cyclic(3), Q),
                        group_algebra(GroupTable::symmetric3(), Q), group_algebra(GroupTable::cyclic(3), Field::prime(7)),
                        sweedler_h4(Q)})
    t.expect(check_hopf(h).passed(), "hopf");
  for (const auto& d : {fixtures::full_matrix_blocks(Q, 2).datum, fixtures::full_matrix_blocks(Field::prime(7), 3).datum,
                        fixtures::upper_triangular_blocks(Q).datum, to_datum(fixtures::scalar_context(Q)),
                        to_datum(fixtures::column_context(Q))})
    t.expect(check_datum(d).passed(), "GMD");
  for (const auto& [name, d] : unital_datums()) t.expect(check_group_datum(d).passed(), name + " datum");
  t.expect(check_morita_context(fixtures::scalar_context(Q), true).passed(), "scalar context");
  t.expect(check_morita_context(fixtures::column_context(Q), true).passed(), "column context");
  // fixtures built to be rejected
  t.expect(!check_morita_context(fixtures::zero_mu_context(Q), true).passed(), "zero-mu context accepted");
  t.expect(!check_block_invariance(fixtures::full_matrix_blocks(Q, 2), fixtures::swap_m2(Q)).all(),
           "swap invariance accepted");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(secs < 10.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << t.checked() << " checker verdicts as intended in " << std::fixed;
  os.precision(2);
  os << secs << " s";
  return t.verdict(os.str());
}

Verdict mutation_sensitivity() {
  constexpr int kTrials = 20;
  auto g = testing::rng(2024);
  std::size_t fixtures_seen = 0, silent = 0, total = 0;
  std::string notes;
  const auto record = [&](const std::string& name, bool caught) {
    ++total;
    if (caught) return;
    if (++silent <= 3) notes += (notes.empty() ? "" : "; ") + name;
  };
  const auto caught = [](const std::function<bool()>& passes_checker) {
    try {
      return !passes_checker();
    } catch (const std::exception&) {
      return true;  // a refused construction is a detection too
    }
  };

  for (const auto& [name, p] : left_fixtures()) {
    ++fixtures_seen;
    for (int trial = 0; trial < kTrials; ++trial) {
      Matrix m = p.matrix();
      std::vector<Scalar*> slots;
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) slots.push_back(&m.at(r, c));
      perturb(g, slots, p.algebra().field());
      record(name, caught([&] { return check_partial_action(PartialAction(p.hopf(), p.algebra(), Side::left, m)).passed(); }));
    }
  }
  for (const auto& [name, u] : {std::pair{std::string("z2-on-k2"), fixtures::z2_on_k2(Q)},
                                std::pair{std::string("z3-restricted"), fixtures::z3_restricted(Q)}}) {
    ++fixtures_seen;
    for (int trial = 0; trial < kTrials; ++trial) {
      UnitalPartialGroupAction v = u;
      std::vector<Scalar*> slots;
      for (auto& m : v.maps)
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c) slots.push_back(&m.at(r, c));
      perturb(g, slots, Q);
      record(name, caught([&] { return check_group_action(v).passed(); }));
    }
  }
  for (const auto& [name, d] : unital_datums()) {
    ++fixtures_seen;
    for (int trial = 0; trial < kTrials; ++trial) {
      GroupDatum e = d;
      std::vector<Scalar*> slots;
      for (auto& m : e.gamma)
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c) slots.push_back(&m.at(r, c));
      perturb(g, slots, d.datum.field());
      record(name + " gamma", caught([&] { return check_group_datum(e).passed(); }));
    }
  }
  const std::pair<std::string, MatrixDatum> datums[] = {
      {"m2", fixtures::full_matrix_blocks(Q, 2).datum},
      {"m3-f7", fixtures::full_matrix_blocks(Field::prime(7), 3).datum},
      {"upper", fixtures::upper_triangular_blocks(Q).datum},
      {"scalar-context", to_datum(fixtures::scalar_context(Q))},
      {"column-context", to_datum(fixtures::column_context(Q))},
  };
  for (const auto& [name, d] : datums) {
    ++fixtures_seen;
    for (int trial = 0; trial < kTrials; ++trial) {
      MatrixDatum e = d;
      std::vector<Scalar*> slots;
      for (std::size_t i = 0; i < e.order(); ++i)
        for (std::size_t j = 0; j < e.order(); ++j)
          for (std::size_t k = 0; k < e.order(); ++k) {
            Matrix& th = e.theta(i, j, k);
            for (std::size_t r = 0; r < th.rows(); ++r)
              for (std::size_t c = 0; c < th.cols(); ++c) slots.push_back(&th.at(r, c));
          }
      perturb(g, slots, d.field());
      record(name + " theta", caught([&] { return check_datum(e).passed(); }));
    }
  }
  if (silent == 0)
    return {true, std::to_string(total) + " perturbations over " + std::to_string(fixtures_seen) +
                      " fixtures, 0 silent passes"};
  return {false, std::to_string(silent) + " silent passes of " + std::to_string(total) + ": " + notes};
}

Verdict derived_identities() {
  Tally t;
  std::vector<NamedAction> population = left_fixtures();
  auto g = testing::rng(303);
  std::uniform_int_distribution<std::size_t> size(1, 4), bit(0, 1);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = size(g);
    std::vector<bool> support(n);
    for (std::size_t k = 0; k < n; ++k) support[k] = bit(g) == 1;
    population.push_back({"restricted-identity", restricted_identity(n, support)});
  }
  for (const auto& inv : random_involutions(20)) population.push_back({inv.name, inv.action});
  // random operators: almost never actions, but any that pass must satisfy the consequences
  std::uniform_int_distribution<long> small(-1, 1);
  for (int i = 0; i < 40; ++i) {
    const Algebra a = diagonal_algebra(Q, 2);
    Matrix op(Q, 2, 2);
    for (std::size_t r = 0; r < 2; ++r) op.at(r, r) = Q.from_int(small(g));
    population.push_back(
        {"random-operator", left_action_from_operators(group_algebra(GroupTable::cyclic(2), Q), a, {Matrix::identity(Q, 2), op})});
  }

  std::size_t actions = 0, reps = 0;
  for (const auto& [name, p] : population) {
    const Report r = check_left_partial_action(p, true);
    if (!passes(r, {"LPA1", "LPA2", "LPA3-left", "LPA3-right"})) continue;
    ++actions;
    t.expect(passes(r, {"derived-left", "derived-right"}), name + " derived identities");
    const PartialRepresentation pi = induced_representation(p);
    for (const auto& rep : {pi, opcop_representation(pi)}) {
      const Report pr = check_partial_representation(rep);
      if (!passes(pr, {"PR1", "PR2", "PR3"})) continue;
      ++reps;
      t.expect(passes(pr, {"PR4", "PR5"}), name + " PR4-PR5");
    }
  }
  return t.verdict("derived identities on " + std::to_string(actions) + " actions, PR4-PR5 on " +
                   std::to_string(reps) + " representations");
}

Verdict smash_dimensions() {
  Tally t;
  const PartialAction unit_zero = fixtures::unit_zero(Q);
  const UnitalPartialGroupAction u = fixtures::z2_on_k2(Q);
  const PartialAction induced = group_to_hopf(u);
  const std::size_t oracle2 = generator_rank(unit_zero), oracle3 = generator_rank(induced);
  t.expect(oracle2 == 1, "oracle for unit-zero is " + std::to_string(oracle2));
  t.expect(oracle3 == 3, "oracle for z2-on-k2 is " + std::to_string(oracle3));
  t.expect(left_smash(unit_zero).dim() == oracle2, "unit-zero smash");
  t.expect(left_smash(induced).dim() == oracle3, "z2-on-k2 smash");
  t.expect(right_smash(to_right(induced)).dim() == oracle3, "z2-on-k2 right smash");
  const CrossedProduct cp = crossed_product(u);
  t.expect(cp.algebra.dim() == 3, "crossed product dimension");
  for (CrossedIso which : {CrossedIso::eta, CrossedIso::lambda}) {
    const IsoCertificate c = crossed_iso(u, which);
    const bool square = c.forward.rows() == c.forward.cols() && c.forward.rows() == 3;
    t.expect(c.report.passed() && square && (c.forward * c.inverse).is_identity() && (c.inverse * c.forward).is_identity() &&
                 check_algebra_morphism(LinearMap{c.forward}, c.domain, c.codomain).passed(),
             which == CrossedIso::eta ? "eta" : "lambda");
  }
  return t.verdict("dim 1 and dim 3 match the generator-rank oracle; crossed product 3; eta, lambda certified");
}

Verdict universal_property() {
  Tally t;
  const auto certified = [](const UniversalMorphism& u) {
    return passes(u.certificate, {"well-defined", "multiplicative", "unital", "factor-algebra-map",
                                  "factor-representation", "uniqueness"});
  };
  std::size_t pairs = 0;
  for (const auto& [name, p] : left_fixtures()) {
    const SmashAlgebra s = left_smash(p);
    const CovariantPair canon = canonical_pair(s);
    t.expect(check_covariant_pair(canon, p).passed(), name + " canonical pair");
    t.expect(certified(universal_morphism(canon, s)), name + " Phi of the canonical pair");

    // psi = left multiplication into End(A), pi = induced representation
    const Algebra& A = p.algebra();
    Matrix lm(A.field(), A.dim() * A.dim(), A.dim());
    for (std::size_t a = 0; a < A.dim(); ++a) lm.set_column(a, matrix_to_endomorphism(A.left_multiplication(A.basis(a))));
    const CovariantPair regular{LinearMap{lm}, induced_representation(p), PairKind::left};
    t.expect(check_covariant_pair(regular, p).passed(), name + " regular pair");
    t.expect(certified(universal_morphism(regular, s)), name + " Phi of the regular pair");

    const PartialAction q = to_right(p);
    const SmashAlgebra r = right_smash(q);
    const CovariantPair opp = canonical_pair(r);
    t.expect(check_covariant_pair(opp, q).passed(), name + " opposite pair");
    t.expect(certified(universal_morphism(opp, r)), name + " Gamma of the opposite pair");
    pairs += 3;
  }
  return t.verdict(std::to_string(pairs) + " pairs: multiplicative, unital, both factorizations, unique");
}

Verdict block_round_trips() {
  Tally t;
  std::size_t count = 0;
  for (const auto& fx : invariant_fixtures()) {
    if (!fx.global) continue;  // the conjugations and the epsilon-trivial family
    const BlockPartialData d = decompose(fx.ring, fx.action);
    const PartialAction back = synthesize(d);
    t.expect(back.matrix() == fx.action.matrix(), fx.name + " synthesize . decompose");
    const BlockPartialData again = decompose(fx.ring, back);
    t.expect(again.left_modules == d.left_modules && again.right_modules == d.right_modules,
             fx.name + " decompose . synthesize");
    ++count;
  }
  return t.verdict("both compositions are identities on " + std::to_string(count) + " fixtures");
}

Verdict datum_round_trips() {
  Tally t;
  const std::pair<GroupDatum, Invariant> pairs[] = {
      {fixtures::conjugation_datum(Q),
       {"conjugation-m2", fixtures::full_matrix_blocks(Q, 2), fixtures::conjugation_m2(Q), true}},
      {fixtures::z3_datum(),
       {"z3-conjugation-m3", fixtures::full_matrix_blocks(Field::prime(7), 3), fixtures::z3_conjugation_m3(), true}},
  };
  for (const auto& [d, fx] : pairs) {
    t.expect(theorem_data_to_datum(datum_to_theorem_data(d)) == d, fx.name + " datum -> data -> datum");
    const BlockPartialData b = decompose(fx.ring, fx.action);
    const BlockPartialData b2 = datum_to_theorem_data(theorem_data_to_datum(b));
    t.expect(b2.left_modules == b.left_modules && b2.right_modules == b.right_modules && b2.diagonal == b.diagonal,
             fx.name + " data -> datum -> data");
  }
  // I_g = R 1_g, with I_g assembled from the block domains independently of the checker
  std::size_t ideals = 0;
  for (const auto& [name, d] : unital_datums()) {
    const Report r = check_group_datum(d);
    t.expect(r.passed() && r.find("unital-ideal")->checked == d.group.order(), name + " unital-ideal");
    const BlockedAlgebra ring = assemble(d.datum);
    for (std::size_t g = 0; g < d.group.order(); ++g) {
      IdealFamily fam;
      for (std::size_t i = 0; i < d.order(); ++i) fam.ideals.push_back(d.alpha[i].domains[g]);
      const Subspace ig = block_ideal(ring, fam).ideal;
      const Vec one_g = d.unit_of(ring, g);
      std::vector<Vec> gens;
      for (std::size_t b = 0; b < ring.total.dim(); ++b) gens.push_back(ring.total.multiply(ring.total.basis(b), one_g));
      t.expect(ig == Subspace::span(ring.total.field(), ring.total.dim(), gens), name + " I_g at g=" + std::to_string(g));
      ++ideals;
    }
  }
  return t.verdict("mutually inverse on 2 fixtures; I_g = R 1_g on " + std::to_string(ideals) + " ideals");
}

std::vector<std::pair<std::string, BlockPartialData>> block_data_population(std::size_t random_count,
                                                                            std::vector<bool>* global) {
  std::vector<std::pair<std::string, BlockPartialData>> out;
  for (const auto& fx : invariant_fixtures()) {
    out.push_back({fx.name, decompose(fx.ring, fx.action)});
    if (global) global->push_back(fx.global);
  }
  for (const auto& [name, d] : unital_datums()) {
    out.push_back({name + "-datum", datum_to_theorem_data(d)});
    if (global) global->push_back(name != "off-diagonal-zero");  // its R_1 carries the partial z2_on_k2 action
  }
  for (const auto& inv : random_involutions(random_count)) {
    out.push_back({inv.name, decompose(inv.ring, inv.action)});
    if (global) global->push_back(true);
  }
  return out;
}

Verdict c_iff_c_prime() {
  Tally t;
  std::size_t random_valid = 0;
  auto pop = block_data_population(50, nullptr);
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const auto& [name, d] = pop[i];
    const bool valid = check_block_data(d).passed();
    t.expect(valid, name + " is not valid block data");
    const bool c = check_c(d).passed(), cp = check_c_prime(d).passed();
    t.expect(c == cp, name + " (c) and (c') disagree");
    if (i >= pop.size() - 50 && valid && c) ++random_valid;
  }
  return t.verdict("agree on " + std::to_string(pop.size() - 50) + " fixtures and " + std::to_string(random_valid) +
                   " random global instances");
}

Verdict rewrite_identities() {
  Tally t;
  std::vector<bool> global;
  auto pop = block_data_population(20, &global);
  bool partial_failure = false;
  std::size_t partial = 0;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const auto& [name, d] = pop[i];
    const Report r = check_rewrites(d);
    t.expect(passes(r, {"rewrite-left", "rewrite-right"}), name + " rewrites");
    const bool bimodule = r.find("bimodule")->passed();
    if (global[i]) t.expect(bimodule, name + " bimodule on a global action");
    if (!global[i]) ++partial;
    if (!global[i] && !bimodule) partial_failure = true;
  }
  t.expect(partial_failure, "no partial fixture fails the bimodule check");
  return t.verdict("rewrites hold on " + std::to_string(pop.size()) +
                   " instances; bimodule holds on all global ones, fails on a partial one (of " +
                   std::to_string(partial) + ")");
}

Verdict morita_ring_actions() {
  Tally t;
  struct Case {
    std::string name;
    PartialAction action;
    Vec e;
  };
  const fixtures::CornerFixture acc = fixtures::morita_accept(Q), rej = fixtures::morita_reject(Q);
  const Algebra m2 = fixtures::full_matrix_blocks(Q, 2).total;
  std::vector<Case> cases{
      {"accept", group_to_hopf(acc.action), acc.idempotent},
      {"reject", group_to_hopf(rej.action), rej.idempotent},
      {"z2-on-k2 e2", group_to_hopf(fixtures::z2_on_k2(Q)), testing::vec({0, 1})},
      {"conjugation E11", fixtures::conjugation_m2(Q), unit_vec(Q, 4, 0)},
      {"swap E11", fixtures::swap_m2(Q), unit_vec(Q, 4, 0)},
      {"trivial-z3-upper", fixtures::trivial_z3_upper(Q), unit_vec(Q, 3, 0)},
      {"sweedler-partial e1", fixtures::sweedler_partial(Q), testing::vec({1, 0})},
      {"sweedler-trivial e1", fixtures::sweedler_trivial(Q), testing::vec({1, 0})},
  };
  std::size_t accepted = 0;
  for (const auto& c : cases) {
    const HopfAlgebra& h = c.action.hopf();
    bool fixed = true;
    for (std::size_t x = 0; x < h.dim(); ++x)
      fixed = fixed && c.action.act_basis(x, c.e) == scale(h.epsilon(h.basis(x)), c.e);
    try {
      const MoritaRingAction m = morita_ring_action(c.action, c.e);
      t.expect(fixed, c.name + " accepted although h . e != eps(h) e");
      t.expect(check_block_invariance(m.ring, m.action).all() && check_left_partial_action(m.action).passed(),
               c.name + " output");
      ++accepted;
    } catch (const CheckFailed& e) {
      t.expect(!fixed && e.stage() == "fixed-idempotent", c.name + " rejected although fixed");
      if (c.name == "reject")
        t.expect(e.report().find("fixed-idempotent")->witnesses.front() == std::vector<std::size_t>{1},
                 "reject witness");
    }
  }
  return t.verdict(std::to_string(accepted) + " of " + std::to_string(cases.size()) +
                   " accepted, exactly the fixed idempotents; rejection witness h = g");
}

Verdict morita_consistency() {
  Tally t;
  const HopfAlgebra kz2 = group_algebra(GroupTable::cyclic(2), Q);
  struct Case {
    std::string name;
    MoritaContextData c;
    PartialAction pa, pb, pr;
  };
  const Algebra k = ground_algebra(Q);
  const MoritaContextData scalar = fixtures::scalar_context(Q), column = fixtures::column_context(Q);
  const BlockedAlgebra column_ring = assemble(to_datum(column));

  // conjugation of M3 by diag(1, -1, 1), read off the block positions of the column ring
  const auto sign = [](std::size_t i) { return i == 1 ? -1 : 1; };
  Matrix col_op(Q, column_ring.total.dim(), column_ring.total.dim());
  for (std::size_t b = 0; b < column_ring.total.dim(); ++b) {
    const BlockPosition& pos = column_ring.block_of_basis[b];
    int s = 1;
    if (pos.row == 0 && pos.col == 0) s = sign(pos.index / 2) * sign(pos.index % 2);
    if (pos.row == 0 && pos.col == 1) s = sign(pos.index);
    if (pos.row == 1 && pos.col == 0) s = sign(pos.index);
    col_op.at(b, b) = Q.from_int(s);
  }
  Matrix a_op(Q, 4, 4);
  for (std::size_t x = 0; x < 4; ++x) a_op.at(x, x) = Q.from_int(sign(x / 2) * sign(x % 2));
  const PartialAction col_conj = left_action_from_operators(kz2, column_ring.total, {Matrix::identity(Q, 9), col_op});
  const PartialAction a_conj = left_action_from_operators(kz2, column.a, {Matrix::identity(Q, 4), a_op});
  t.expect(check_left_partial_action(col_conj).passed() && check_left_partial_action(a_conj).passed(),
           "column-context actions");

  std::vector<Case> cases{
      {"scalar trivial", scalar, trivial_on(k), trivial_on(k), fixtures::trivial_z2_m2(Q)},
      {"scalar sign", scalar, trivial_on(k), trivial_on(k), fixtures::conjugation_m2(Q)},
      {"scalar mismatch A", scalar, fixtures::unit_zero(Q), trivial_on(k), fixtures::conjugation_m2(Q)},
      {"scalar mismatch B", scalar, trivial_on(k), fixtures::unit_zero(Q), fixtures::trivial_z2_m2(Q)},
      {"scalar swap", scalar, trivial_on(k), trivial_on(k), fixtures::swap_m2(Q)},
      {"column trivial", column, trivial_on(column.a), trivial_on(k), trivial_on(column_ring.total)},
      {"column conjugation", column, a_conj, trivial_on(k), col_conj},
      {"column mismatch", column, trivial_on(column.a), trivial_on(k), col_conj},
      {"zero-mu", fixtures::zero_mu_context(Q), trivial_on(k), trivial_on(k), fixtures::trivial_z2_m2(Q)},
  };
  std::size_t equivalent = 0;
  for (const auto& c : cases) {
    bool direct = false, modules = false;
    try {
      direct = check_morita_equivalent(c.pa, c.pb, c.c, c.pr).passed();
    } catch (const std::exception&) {
      direct = false;
    }
    try {
      const BlockPartialData d = decompose(assemble(to_datum(c.c)), c.pr);
      modules = check_morita_modules(c.pa, c.pb, c.c, d).report.passed();
    } catch (const std::exception&) {
      modules = false;
    }
    t.expect(direct == modules, c.name + " disagree");
    if (direct && modules) ++equivalent;
  }
  return t.verdict("agree on " + std::to_string(cases.size()) + " cases (" + std::to_string(equivalent) +
                   " equivalences)");
}

Verdict cli_stability() {
  Tally t;
  const char* battery[][2] = {{"check", ""},
                              {"build-smash", ""},
                              {"decompose-gma", ""},
                              {"synthesize-gma", ""},
                              {"group-datum", "check"},
                              {"group-datum", "to-hopf"},
                              {"group-datum", "from-hopf"},
                              {"group-datum", "roundtrip"},
                              {"morita", "check-context"},
                              {"morita", "check-equivalence"}};
  std::size_t runs = 0;
  for (const auto& f : builtin_fixtures()) {
    const ParseResult p = parse_definition(f.definition);
    t.expect(p.file && serialize(*p.file) == f.definition, f.name + " round trip");
    t.expect(cli::golden_report(f) == f.golden, f.name + " golden");
    for (const auto& b : battery) {
      cli::Options o;
      o.command = b[0];
      o.subcommand = b[1];
      o.fixture = f.name;
      o.deep = true;
      const cli::Run run = cli::execute(o);
      bool all = true;
      for (const auto& r : run.results) {
        if (r.report) t.expect(r.passed == r.report->passed(), f.name + " " + r.section + " verdict");
        all = all && r.passed;
      }
      t.expect(run.exit_code() == (!run.errors.empty() ? 2 : all ? 0 : 1), f.name + " " + run.command + " exit code");
      ++runs;
    }
  }
  // the entry point maps input errors to 2
  std::ostringstream out, err;
  t.expect(cli::run({"check", "--fixture", "no-such-fixture"}, out, err) == 2, "unknown fixture exit code");
  t.expect(cli::run({"check", "--fixture", "unit-zero"}, out, err) == 0, "unit-zero exit code");
  t.expect(cli::run({"decompose-gma", "--fixture", "swap-m2"}, out, err) == 1, "swap exit code");
  return t.verdict(std::to_string(builtin_fixtures().size()) + " fixtures byte-identical, goldens regenerate, " +
                   std::to_string(runs) + " runs with consistent exit codes");
}

struct Criterion {
  const char* name;
  Verdict (*run)();
};

constexpr Criterion kCriteria[] = {
    {"axiom-suite soundness", axiom_soundness},
    {"mutation sensitivity", mutation_sensitivity},
    {"derived identities", derived_identities},
    {"smash dimensions", smash_dimensions},
    {"universal property", universal_property},
    {"block decomposition round trips", block_round_trips},
    {"group datum round trips", datum_round_trips},
    {"(c) iff (c')", c_iff_c_prime},
    {"rewrite identities and bimodule check", rewrite_identities},
    {"Morita ring action", morita_ring_actions},
    {"Morita equivalence consistency", morita_consistency},
    {"CLI and golden stability", cli_stability},
};

}  // namespace

int main() {
  std::size_t passed = 0, index = 0;
  const std::size_t total = std::size(kCriteria);
  for (const auto& c : kCriteria) {
    ++index;
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    if (v.ok) ++passed;
    std::printf("[%2zu/%zu] %s  %s: %s\n", index, total, v.ok ? "PASS" : "FAIL", c.name, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", passed, total);
  return passed == total ? 0 : 1;
}
