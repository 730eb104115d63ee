// Acceptance suite: end-to-end checks of the enumeration, the worked
// question-algebra examples, the exhaustive exact rule sweeps on both
// lattices, the meet/join duality of the shared checker implementation,
// the negative controls, and the structural laws. Prints one line per
// criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "inquiry/cli.hpp"
#include "inquiry/inquiry.hpp"
#include "oracles.hpp"

using namespace inquiry;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool pass, double seconds) {
  std::printf("%s  criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", id, what.c_str(),
              seconds);
  if (!pass) ++failures;
}

void criterion(int id, const std::string& what, const std::function<bool()>& body) {
  const auto t0 = Clock::now();
  bool pass = false;
  try {
    pass = body();
  } catch (const std::exception& e) {
    std::printf("      exception: %s\n", e.what());
  }
  report(id, what, pass, std::chrono::duration<double>(Clock::now() - t0).count());
}

HypothesisSpace space_of(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return make_space(names);
}

Rational rand_weight(std::mt19937_64& rng) {
  return Rational(static_cast<std::int64_t>(rng() % 1000 + 1));
}

// ---- criterion 1 -----------------------------------------------------------

bool real_question_enumeration() {
  const auto t0 = Clock::now();
  const HypothesisSpace space = space_of(3);
  const auto enumerated = enumerate_real_questions(space);
  if (enumerated.size() != 9) return false;

  // the expected nine, written with both term spellings in circulation
  const std::vector<std::string> expected = {
      "ABC",    "AB v AC v BC", "AB v AC", "AB v BC",    "AC v BC",
      "AB v C", "AC v B",       "BC v A",  "A v B v C"};
  std::set<std::string> expected_canonical;
  for (const auto& e : expected)
    expected_canonical.insert(canonical_form(parse_expression(space, e)));

  std::set<std::string> got;
  std::vector<std::string> got_ordered;
  for (const auto& q : enumerated) {
    got.insert(canonical_form(q));
    got_ordered.push_back(canonical_form(q));
  }
  if (got != expected_canonical) return false;

  // ordered as listed: most ambiguous first, most concise last
  std::vector<std::string> expected_ordered;
  for (const auto& e : expected)
    expected_ordered.push_back(canonical_form(parse_expression(space, e)));
  if (got_ordered != expected_ordered) return false;

  const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
  return elapsed < 1.0;
}

// ---- criterion 2 -----------------------------------------------------------

bool worked_examples() {
  const HypothesisSpace space = space_of(3);
  const auto q = [&](const char* e) { return parse_expression(space, e); };
  const auto names = [](const Question& question) {
    std::set<std::string> out;
    for (const auto& s : question.answers()) out.insert(s.name());
    return out;
  };

  bool ok = true;
  ok = ok && names(q("AB v C")) == std::set<std::string>{"A", "B", "C", "AB"};
  ok = ok && names(q("AB v AC v BC")) == std::set<std::string>{"A", "B", "C", "AB", "AC", "BC"};
  ok = ok && names(q("A v B v C")) == std::set<std::string>{"A", "B", "C"};
  ok = ok && names(q("A v BC")) == std::set<std::string>{"A", "B", "C", "BC"};
  // the inclusion holds against either choice of the upper question
  ok = ok && answers_question(q("A v B v C"), q("A v BC"));
  ok = ok && answers_question(q("A v B v C"), q("AB v C"));
  ok = ok && canonical_form(meet_q(q("AB v C"), q("A v BC"))) == "A v B v C";
  ok = ok && canonical_form(join_q(q("AB v C"), q("A v BC"))) == "AB v BC";
  return ok;
}

// ---- criteria 3 and 4 ------------------------------------------------------

bool statement_side_sweeps(double budget_seconds) {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 4; ++n) {
    const HypothesisSpace space = space_of(n);
    const FiniteLattice lattice = boolean_lattice(space);
    const auto t0 = Clock::now();
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> weights;
      for (int i = 0; i < n; ++i) weights.push_back(rand_weight(rng));
      const BiValuation w =
          probability_bivaluation(ProbabilityMeasure(space, weights), lattice);
      if (!check_sum_rule(w, lattice).passed()) return false;
      if (!check_chain_upper(w, lattice).passed()) return false;
      if (!check_product_statements(w, lattice).passed()) return false;
      if (!check_derivation_steps(w, lattice, LatticeSide::statements).passed()) return false;
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    if (n == 4 && elapsed >= budget_seconds) return false;
  }
  return true;
}

bool question_side_sweeps(double budget_seconds) {
  // the independent brute-force count comes first and gates the sweep
  if (oracles::downsets(4, true).size() != 114) return false;

  std::mt19937_64 rng(2025);
  for (int n = 1; n <= 4; ++n) {
    const QuestionSystem sys = build_question_system(space_of(n));
    if (n == 4 && sys.questions.size() != 114) return false;
    const auto t0 = Clock::now();
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> weights(sys.space.top_mask() + 1, Rational(1));
      for (unsigned s = 1; s <= sys.space.top_mask(); ++s) weights[s] = rand_weight(rng);
      const Valuation u = weighted_covaluation(sys, weights, rand_weight(rng));
      const BiValuation d = relevance_bivaluation(u, sys.lattice);
      if (!check_sum_rule(d, sys.lattice).passed()) return false;
      if (!check_chain_lower(d, sys.lattice).passed()) return false;
      if (!check_product_questions(d, sys.lattice).passed()) return false;
      if (!check_derivation_steps(d, sys.lattice, LatticeSide::questions).passed()) return false;
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    if (n == 4 && elapsed >= budget_seconds) return false;
  }
  return true;
}

// ---- criterion 5 -----------------------------------------------------------

bool duality_of_checkers() {
  const HypothesisSpace space = space_of(3);
  const FiniteLattice statements = boolean_lattice(space);
  const QuestionSystem questions = build_question_system(space);
  const BiValuation prob =
      probability_bivaluation(ProbabilityMeasure::uniform(space), statements);
  const BiValuation rel =
      relevance_bivaluation(cocardinality_valuation(questions), questions.lattice);

  // Both sides run through the same parameterized sweeps; the public
  // entry points only choose the lattice operation. Confirm the wrappers
  // coincide with direct instantiations, and that both sides pass.
  const RuleReport s_deriv =
      check_derivation_steps(prob, statements, LatticeSide::statements);
  const RuleReport s_direct =
      detail::derivation_sweep(prob, statements, detail::MeetOp{statements}, Rational(0));
  const RuleReport q_deriv =
      check_derivation_steps(rel, questions.lattice, LatticeSide::questions);
  const RuleReport q_direct = detail::derivation_sweep(rel, questions.lattice,
                                                       detail::JoinOp{questions.lattice},
                                                       Rational(0));
  const RuleReport s_prod = check_product_statements(prob, statements);
  const RuleReport s_prod_direct = detail::product_rule_sweep(
      prob, statements, detail::MeetOp{statements}, "product_statements", Rational(0));
  const RuleReport q_prod = check_product_questions(rel, questions.lattice);
  const RuleReport q_prod_direct =
      detail::product_rule_sweep(rel, questions.lattice, detail::JoinOp{questions.lattice},
                                 "product_questions", Rational(0));

  const auto same = [](const RuleReport& a, const RuleReport& b) {
    return a.tuples_checked == b.tuples_checked && a.violation_count == b.violation_count;
  };
  return same(s_deriv, s_direct) && same(q_deriv, q_direct) && same(s_prod, s_prod_direct) &&
         same(q_prod, q_prod_direct) && s_deriv.passed() && q_deriv.passed() &&
         s_prod.passed() && q_prod.passed();
}

// ---- criterion 6 -----------------------------------------------------------

bool negative_controls() {
  const HypothesisSpace space = space_of(3);
  const FiniteLattice statements = boolean_lattice(space);
  const QuestionSystem questions = build_question_system(space);
  const BiValuation prob =
      probability_bivaluation(ProbabilityMeasure::uniform(space), statements);
  const BiValuation rel =
      relevance_bivaluation(cocardinality_valuation(questions), questions.lattice);
  const auto sidx = [&](const char* name) { return statements.poset().index_of(name); };
  const auto qidx = [&](const char* expr) {
    return questions.index_of(parse_expression(space, expr));
  };

  // one targeted entry per rule checker, each shifted by 1/100
  bool ok = true;
  ok = ok && check_sum_rule(perturbed(prob, sidx("A"), sidx("ABC")), statements)
                     .violation_count >= 1;
  ok = ok && check_sum_rule(perturbed(rel, qidx("AB v C"), qidx("A v B v C")), questions.lattice)
                     .violation_count >= 1;
  ok = ok && check_chain_upper(perturbed(prob, sidx("A"), sidx("AB")), statements)
                     .violation_count >= 1;
  ok = ok && check_chain_lower(perturbed(rel, qidx("ABC"), qidx("AB v C")), questions.lattice)
                     .violation_count >= 1;
  ok = ok && check_product_statements(perturbed(prob, sidx("BC"), sidx("AB")), statements)
                     .violation_count >= 1;
  ok = ok &&
       check_product_questions(perturbed(rel, qidx("A v BC"), qidx("AB v C")), questions.lattice)
               .violation_count >= 1;
  ok = ok && check_derivation_steps(perturbed(prob, sidx("B"), sidx("AB")), statements,
                                    LatticeSide::statements)
                     .violation_count >= 1;
  ok = ok && check_derivation_steps(perturbed(rel, qidx("A v BC"), qidx("AB v C")),
                                    questions.lattice, LatticeSide::questions)
                     .violation_count >= 1;
  if (!ok) return false;

  // and through the command line: perturbed file in, exit code 1 out
  const std::string path = "acceptance_perturbed.json";
  std::ostringstream out, err;
  int code = run_cli({"perturb", "--atoms", "a,b,c", "--side", "questions", "--element",
                      "A v BC", "--context", "AB v C", "--out", path},
                     out, err);
  if (code != 0) return false;
  code = run_cli({"check", "--bivaluation", path}, out, err);
  std::remove(path.c_str());
  return code == 1;
}

// ---- criterion 7 -----------------------------------------------------------

bool structural_laws() {
  for (int n = 1; n <= 4; ++n) {
    const HypothesisSpace space = space_of(n);

    const FiniteLattice bl = boolean_lattice(space);
    for (std::size_t a = 0; a < bl.size(); ++a)
      for (std::size_t b = 0; b < bl.size(); ++b) {
        if (bl.meet(a, bl.join(a, b)) != a) return false;
        if (bl.join(a, bl.meet(a, b)) != a) return false;
        for (std::size_t c = 0; c < bl.size(); ++c)
          if (bl.meet(a, bl.join(b, c)) != bl.join(bl.meet(a, b), bl.meet(a, c))) return false;
      }

    const QuestionSystem sys = build_question_system(space);
    const std::size_t count = sys.lattice.size();
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = 0; b < count; ++b) {
        if (sys.lattice.meet(a, sys.lattice.join(a, b)) != a) return false;
        if (sys.lattice.join(a, sys.lattice.meet(a, b)) != a) return false;
        // meets and joins stay downward closed (the constructor revalidates)
        const Question m = meet_q(sys.questions[a], sys.questions[b]);
        const Question j = join_q(sys.questions[a], sys.questions[b]);
        if (sys.index_of(m) != sys.lattice.meet(a, b)) return false;
        if (sys.index_of(j) != sys.lattice.join(a, b)) return false;
      }
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = 0; b < count; ++b)
        for (std::size_t c = 0; c < count; ++c)
          if (sys.lattice.meet(a, sys.lattice.join(b, c)) !=
              sys.lattice.join(sys.lattice.meet(a, b), sys.lattice.meet(a, c)))
            return false;

    // expression round trip over every enumerated question, real or not
    for (const auto& q : enumerate_questions(space, false))
      if (parse_expression(space, canonical_form(q)) != q) return false;
  }

  return hasse_covers(boolean_lattice(space_of(3)).poset()).size() == 12;
}

}  // namespace

int main() {
  criterion(1, "the three-atom space has exactly the nine real questions, in order",
            real_question_enumeration);
  criterion(2, "worked examples: answer sets, inclusions, meet and join", worked_examples);
  criterion(3, "statement rules exact over 100 seeded measures, n=1..4 (n=4 under 60s)",
            [] { return statement_side_sweeps(60.0); });
  criterion(4, "question rules exact over 100 seeded covaluations, n=1..4 (n=4 under 300s)",
            [] { return question_side_sweeps(300.0); });
  criterion(5, "one parameterized checker serves both lattices with meet and join swapped",
            duality_of_checkers);
  criterion(6, "each rule checker flags a 1/100 perturbation; cli exits 1", negative_controls);
  criterion(7, "distributivity, absorption, closure and round trips, n<=4; 12 covers at n=3",
            structural_laws);

  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
