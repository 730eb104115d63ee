#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "inquiry/errors.hpp"
#include "inquiry/lattice.hpp"
#include "inquiry/statements.hpp"

namespace inquiry {

// A question is the set of statements that answer it: a nonempty,
// downward-closed set of non-absurd statements. Bit s of the answer set
// (1 <= s <= 2^n - 1) marks the statement with atom mask s, so the whole
// set fits one 64-bit word for every supported space.
//
// Ordering is answer-set inclusion: if q1's answers are contained in q2's,
// answering q1 necessarily answers q2.
class Question {
 public:
  Question(HypothesisSpace space, std::uint64_t answer_bits)
      : space_(std::move(space)), bits_(answer_bits) {
    if (bits_ == 0) throw invalid_input("question: empty answer set");
    if (bits_ & 1u) throw invalid_input("question: the absurdity cannot answer anything");
    const unsigned top = space_.top_mask();
    const std::uint64_t all =
        top >= 63 ? ~std::uint64_t(1) : (std::uint64_t(1) << (top + 1)) - 2;
    if (bits_ & ~all) throw invalid_input("question: answer bits out of range");
    // Downward closure under implication. Checking the immediate
    // sub-statements (one atom removed) suffices by induction on atom count.
    for (unsigned s = 1; s <= top; ++s) {
      if (!(bits_ >> s & 1u) || std::popcount(s) == 1) continue;
      for (unsigned rest = s; rest != 0; rest &= rest - 1) {
        const unsigned sub = s & ~(rest & ~(rest - 1));
        if (!(bits_ >> sub & 1u))
          throw invalid_input("question: answer set not downward closed (" +
                              Statement(space_, s).name() + " without " +
                              Statement(space_, sub).name() + ")");
      }
    }
  }

  const HypothesisSpace& space() const { return space_; }
  std::uint64_t bits() const { return bits_; }
  int answer_count() const { return std::popcount(bits_); }

  bool contains(const Statement& s) const {
    detail::require_same_space(space_, s.space(), "question");
    return !s.is_absurdity() && (bits_ >> s.mask() & 1u);
  }

  // All answers, least informative last: (atom count, mask) ascending.
  std::vector<Statement> answers() const {
    std::vector<unsigned> masks;
    for (unsigned s = 1; s <= space_.top_mask(); ++s)
      if (bits_ >> s & 1u) masks.push_back(s);
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
      const int ca = std::popcount(a), cb = std::popcount(b);
      return ca != cb ? ca < cb : a < b;
    });
    std::vector<Statement> out;
    out.reserve(masks.size());
    for (unsigned m : masks) out.emplace_back(space_, m);
    return out;
  }

  // The irredundant generators: answers with no strictly larger answer.
  std::vector<Statement> maximal_answers() const {
    std::vector<Statement> out;
    for (unsigned s = 1; s <= space_.top_mask(); ++s) {
      if (!(bits_ >> s & 1u)) continue;
      bool maximal = true;
      for (unsigned t = 1; t <= space_.top_mask() && maximal; ++t)
        if (t != s && (bits_ >> t & 1u) && (s & ~t) == 0) maximal = false;
      if (maximal) out.emplace_back(space_, s);
    }
    return out;
  }

  friend bool operator==(const Question& a, const Question& b) {
    return a.space_ == b.space_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Question& a, const Question& b) { return !(a == b); }

 private:
  HypothesisSpace space_;
  std::uint64_t bits_;
};

// The down-set of a single statement: everything that implies it.
inline Question ideal_question(const Statement& s) {
  if (s.is_absurdity()) throw invalid_input("ideal: the absurdity generates no question");
  std::uint64_t bits = std::uint64_t(1) << s.mask();
  for (unsigned sub = (s.mask() - 1) & s.mask(); sub != 0; sub = (sub - 1) & s.mask())
    bits |= std::uint64_t(1) << sub;
  return Question(s.space(), bits);
}

// Parses the question expression DSL: terms of atom letters joined by the
// join symbol, e.g. "AB v C". Accepts "v", "|" and the Unicode vel sign as
// separators; letters are case-insensitive and order within a term does
// not matter. The result is the union of the ideal questions of the terms.
inline Question parse_expression(const HypothesisSpace& space, std::string_view text) {
  std::vector<std::string> tokens;  // alternating terms and "v" separators
  std::string current;
  const auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(current);
      current.clear();
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      flush();
    } else if (c == '|') {
      flush();
      tokens.emplace_back("v");
    } else if (i + 2 < text.size() && static_cast<unsigned char>(c) == 0xE2 &&
               static_cast<unsigned char>(text[i + 1]) == 0x88 &&
               static_cast<unsigned char>(text[i + 2]) == 0xA8) {
      flush();
      tokens.emplace_back("v");
      i += 2;
    } else {
      current.push_back(c);
    }
  }
  flush();

  std::vector<unsigned> term_masks;
  bool expect_term = true;
  for (auto& tok : tokens) {
    const bool is_sep = tok == "v" || tok == "V";
    if (is_sep) {
      if (expect_term) throw invalid_input("expression: empty term");
      expect_term = true;
      continue;
    }
    if (!expect_term) throw invalid_input("expression: missing join symbol before '" + tok + "'");
    unsigned mask = 0;
    for (char c : tok) {
      const int idx = space.atom_index_of_letter(c);
      if (idx < 0)
        throw invalid_input("expression: unknown atom letter '" + std::string(1, c) +
                            "' in term '" + tok + "' (join terms with a standalone 'v')");
      mask |= 1u << idx;
    }
    term_masks.push_back(mask);
    expect_term = false;
  }
  if (term_masks.empty()) throw invalid_input("expression: empty expression");
  if (expect_term) throw invalid_input("expression: trailing join symbol");

  std::uint64_t bits = 0;
  for (unsigned m : term_masks) bits |= ideal_question(Statement(space, m)).bits();
  return Question(space, bits);
}

// Canonical expression: the maximal answers, sorted by atom set, joined
// with " v ". parse_expression(canonical_form(q)) == q.
inline std::string canonical_form(const Question& q) {
  std::string out;
  for (const auto& s : q.maximal_answers()) {
    if (!out.empty()) out += " v ";
    out += s.name();
  }
  return out;
}

// Meet = intersection of answer sets: asking both questions at once. An
// empty intersection would be the vacuous question, which is excluded from
// this calculus; it is signaled rather than returned.
inline Question meet_q(const Question& a, const Question& b) {
  detail::require_same_space(a.space(), b.space(), "meet");
  const std::uint64_t bits = a.bits() & b.bits();
  if (bits == 0)
    throw invalid_input("meet: questions '" + canonical_form(a) + "' and '" + canonical_form(b) +
                        "' share no answer (vacuous question)");
  return Question(a.space(), bits);
}

// Join = union of answer sets: the question either one answers.
inline Question join_q(const Question& a, const Question& b) {
  detail::require_same_space(a.space(), b.space(), "join");
  return Question(a.space(), a.bits() | b.bits());
}

// q1 <= q2: answering q1 necessarily answers q2.
inline bool answers_question(const Question& q1, const Question& q2) {
  detail::require_same_space(q1.space(), q2.space(), "answers");
  return (q1.bits() & ~q2.bits()) == 0;
}

// A real question can be answered no matter which atomic state obtains:
// its answer set contains every atom.
inline bool is_real(const Question& q) {
  for (int i = 0; i < q.space().atom_count(); ++i)
    if (!(q.bits() >> (1u << i) & 1u)) return false;
  return true;
}

namespace detail {

// Depth-first enumeration of downward-closed answer sets. Statements are
// processed in a linear extension (atom count ascending), so closure only
// ever refers to statements already decided.
inline void enumerate_downsets(const HypothesisSpace& space, bool real_only,
                               std::vector<std::uint64_t>& out) {
  const unsigned top = space.top_mask();
  std::vector<unsigned> order;
  for (unsigned s = 1; s <= top; ++s) order.push_back(s);
  std::sort(order.begin(), order.end(), [](unsigned a, unsigned b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<std::uint64_t> required(top + 1, 0);  // proper non-absurd submasks
  for (unsigned s = 1; s <= top; ++s)
    for (unsigned sub = (s - 1) & s; sub != 0; sub = (sub - 1) & s)
      required[s] |= std::uint64_t(1) << sub;

  const auto rec = [&](const auto& self, std::size_t i, std::uint64_t chosen) -> void {
    if (i == order.size()) {
      if (chosen != 0) out.push_back(chosen);
      return;
    }
    const unsigned s = order[i];
    const std::uint64_t bit = std::uint64_t(1) << s;
    if (real_only && std::popcount(s) == 1) {
      self(self, i + 1, chosen | bit);  // atoms are mandatory
      return;
    }
    self(self, i + 1, chosen);
    if ((required[s] & ~chosen) == 0) self(self, i + 1, chosen | bit);
  };
  rec(rec, 0, 0);
}

}  // namespace detail

// All questions of the space (all real questions when real_only), ordered
// by answer-set cardinality descending, then ascending bit pattern: the
// most ambiguous question first, the most concise last. Spaces of six
// atoms enumerate millions of questions and must be requested explicitly.
inline std::vector<Question> enumerate_questions(const HypothesisSpace& space, bool real_only,
                                                 bool allow_six_atoms = false) {
  if (space.atom_count() == kMaxAtoms && !allow_six_atoms)
    throw capacity_error("enumerate: six-atom spaces require the explicit override");
  std::vector<std::uint64_t> sets;
  detail::enumerate_downsets(space, real_only, sets);
  std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca > cb : a < b;
  });
  std::vector<Question> out;
  out.reserve(sets.size());
  for (std::uint64_t bits : sets) out.emplace_back(space, bits);
  return out;
}

inline std::vector<Question> enumerate_real_questions(const HypothesisSpace& space,
                                                      bool allow_six_atoms = false) {
  return enumerate_questions(space, true, allow_six_atoms);
}

// An enumerated question set together with its order structure. Element i
// of the lattice is questions[i]; labels are canonical forms. The meet and
// join tables come from the generic bound search over the inclusion order,
// independently of the bitwise meet_q/join_q route.
struct QuestionSystem {
  HypothesisSpace space;
  std::vector<Question> questions;
  FiniteLattice lattice;
  std::unordered_map<std::uint64_t, std::size_t> index;

  std::size_t index_of(const Question& q) const {
    const auto it = index.find(q.bits());
    if (it == index.end()) throw invalid_input("question not part of this lattice");
    return it->second;
  }
};

inline QuestionSystem build_question_system(const HypothesisSpace& space, bool real_only = true,
                                            bool allow_six_atoms = false) {
  auto questions = enumerate_questions(space, real_only, allow_six_atoms);
  if (questions.size() > kMaxElements)
    throw capacity_error("question lattice: " + std::to_string(questions.size()) +
                         " questions exceed the element cap " + std::to_string(kMaxElements));
  std::vector<std::string> labels;
  labels.reserve(questions.size());
  for (const auto& q : questions) labels.push_back(canonical_form(q));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < questions.size(); ++i)
    for (std::size_t j = 0; j < questions.size(); ++j)
      if (i != j && answers_question(questions[i], questions[j]))
        pairs.emplace_back(labels[i], labels[j]);
  QuestionSystem sys{space, std::move(questions), lattice_from_poset(build_poset(labels, pairs)),
                     {}};
  for (std::size_t i = 0; i < sys.questions.size(); ++i) sys.index.emplace(sys.questions[i].bits(), i);
  return sys;
}

// {"terms": ["AB", "C"], "answers": ["A", "B", "C", "AB"]}
inline nlohmann::ordered_json question_to_json(const Question& q) {
  nlohmann::ordered_json doc;
  auto& terms = doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& s : q.maximal_answers()) terms.push_back(s.name());
  auto& answers = doc["answers"] = nlohmann::ordered_json::array();
  for (const auto& s : q.answers()) answers.push_back(s.name());
  return doc;
}

}  // namespace inquiry
