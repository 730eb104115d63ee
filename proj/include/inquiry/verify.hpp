#pragma once

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "inquiry/questions.hpp"
#include "inquiry/rules.hpp"
#include "inquiry/statements.hpp"
#include "inquiry/valuations.hpp"

namespace inquiry {

// What to verify: an additive measure for the statement side and a
// weighted co-valuation for the question side. Empty covaluation weights
// mean all ones, which together with offset 1 is the co-cardinality
// valuation.
struct MeasureSpec {
  ProbabilityMeasure probability;
  std::vector<Rational> covaluation_weights;
  Rational covaluation_offset = Rational(1);
};

struct VerifySuite {
  struct Part {
    std::string lattice;
    RuleReport report;
  };
  std::string name;
  std::vector<Part> parts;

  std::uint64_t tuples() const {
    std::uint64_t n = 0;
    for (const auto& p : parts) n += p.report.tuples_checked;
    return n;
  }
  std::uint64_t violations() const {
    std::uint64_t n = 0;
    for (const auto& p : parts) n += p.report.violation_count;
    return n;
  }
};

struct VerifySummary {
  std::vector<VerifySuite> suites;

  std::uint64_t total_violations() const {
    std::uint64_t n = 0;
    for (const auto& s : suites) n += s.violations();
    return n;
  }
  bool passed() const { return total_violations() == 0; }

  void merge(const VerifySummary& other) {
    if (suites.empty()) {
      suites = other.suites;
      return;
    }
    for (std::size_t i = 0; i < suites.size() && i < other.suites.size(); ++i) {
      for (std::size_t j = 0; j < suites[i].parts.size() && j < other.suites[i].parts.size(); ++j) {
        auto& dst = suites[i].parts[j].report;
        const auto& src = other.suites[i].parts[j].report;
        dst.tuples_checked += src.tuples_checked;
        dst.violation_count += src.violation_count;
        for (const auto& v : src.sample) {
          if (dst.sample.size() >= kViolationReportCap) break;
          dst.sample.push_back(v);
        }
      }
    }
  }
};

// The seven rule suites over a pair of bivaluations. The sum rule is a
// single rule that holds on both lattices, so it runs on both inside one
// suite; every other rule is specific to one side.
inline VerifySummary verify_bivaluations(const BiValuation& prob, const FiniteLattice& statements,
                                         const BiValuation& rel, const FiniteLattice& questions,
                                         const Rational& tolerance = Rational(0)) {
  VerifySummary out;
  out.suites.push_back(
      {"sum_rule",
       {{"statements", check_sum_rule(prob, statements, tolerance)},
        {"questions", check_sum_rule(rel, questions, tolerance)}}});
  out.suites.push_back({"chain_upper", {{"statements", check_chain_upper(prob, statements, tolerance)}}});
  out.suites.push_back({"chain_lower", {{"questions", check_chain_lower(rel, questions, tolerance)}}});
  out.suites.push_back(
      {"product_statements", {{"statements", check_product_statements(prob, statements, tolerance)}}});
  out.suites.push_back(
      {"product_questions", {{"questions", check_product_questions(rel, questions, tolerance)}}});
  out.suites.push_back(
      {"derivation_statements",
       {{"statements", check_derivation_steps(prob, statements, LatticeSide::statements, tolerance)}}});
  out.suites.push_back(
      {"derivation_questions",
       {{"questions", check_derivation_steps(rel, questions, LatticeSide::questions, tolerance)}}});
  return out;
}

// Builds both lattices and the reference bivaluations for the given
// measures, then runs all seven suites.
inline VerifySummary verify_all(const MeasureSpec& spec, const Rational& tolerance = Rational(0)) {
  const HypothesisSpace& space = spec.probability.space();
  const FiniteLattice statements = boolean_lattice(space);
  const BiValuation prob = probability_bivaluation(spec.probability, statements);

  const QuestionSystem questions = build_question_system(space);
  std::vector<Rational> weights = spec.covaluation_weights;
  if (weights.empty()) weights.assign(space.top_mask() + 1, Rational(1));
  const Valuation u = weighted_covaluation(questions, weights, spec.covaluation_offset);
  const BiValuation rel = relevance_bivaluation(u, questions.lattice);

  return verify_bivaluations(prob, statements, rel, questions.lattice, tolerance);
}

// The four suites that apply to a single externally supplied bivaluation.
inline VerifySummary verify_side(const BiValuation& w, const FiniteLattice& l, LatticeSide side,
                                 const Rational& tolerance = Rational(0)) {
  VerifySummary out;
  const std::string name = to_string(side);
  out.suites.push_back({"sum_rule", {{name, check_sum_rule(w, l, tolerance)}}});
  if (side == LatticeSide::statements) {
    out.suites.push_back({"chain_upper", {{name, check_chain_upper(w, l, tolerance)}}});
    out.suites.push_back({"product_statements", {{name, check_product_statements(w, l, tolerance)}}});
    out.suites.push_back(
        {"derivation_statements", {{name, check_derivation_steps(w, l, side, tolerance)}}});
  } else {
    out.suites.push_back({"chain_lower", {{name, check_chain_lower(w, l, tolerance)}}});
    out.suites.push_back({"product_questions", {{name, check_product_questions(w, l, tolerance)}}});
    out.suites.push_back(
        {"derivation_questions", {{name, check_derivation_steps(w, l, side, tolerance)}}});
  }
  return out;
}

inline nlohmann::ordered_json violation_to_json(const Violation& v) {
  nlohmann::ordered_json doc;
  doc["rule"] = v.rule;
  nlohmann::ordered_json witness;
  if (!v.x.empty()) witness["x"] = v.x;
  if (!v.y.empty()) witness["y"] = v.y;
  if (!v.z.empty()) witness["z"] = v.z;
  if (!v.t.empty()) witness["t"] = v.t;
  doc["witness"] = std::move(witness);
  doc["lhs"] = v.lhs;
  doc["rhs"] = v.rhs;
  doc["gap"] = v.gap;
  return doc;
}

inline nlohmann::ordered_json summary_to_json(const VerifySummary& summary) {
  nlohmann::ordered_json doc;
  auto& suites = doc["suites"] = nlohmann::ordered_json::array();
  for (const auto& suite : summary.suites) {
    nlohmann::ordered_json s;
    s["suite"] = suite.name;
    auto& parts = s["parts"] = nlohmann::ordered_json::array();
    for (const auto& part : suite.parts) {
      nlohmann::ordered_json p;
      p["lattice"] = part.lattice;
      p["tuples"] = part.report.tuples_checked;
      p["violations"] = part.report.violation_count;
      auto& sample = p["sample"] = nlohmann::ordered_json::array();
      for (const auto& v : part.report.sample) sample.push_back(violation_to_json(v));
      parts.push_back(std::move(p));
    }
    suites.push_back(std::move(s));
  }
  doc["total_violations"] = summary.total_violations();
  return doc;
}

inline std::string summary_to_text(const VerifySummary& summary) {
  std::ostringstream os;
  os << std::left << std::setw(24) << "suite" << std::setw(24) << "lattice" << std::right
     << std::setw(12) << "tuples" << std::setw(12) << "violations" << "\n";
  for (const auto& suite : summary.suites) {
    std::string lattices;
    for (const auto& part : suite.parts) {
      if (!lattices.empty()) lattices += ", ";
      lattices += part.lattice;
    }
    os << std::left << std::setw(24) << suite.name << std::setw(24) << lattices << std::right
       << std::setw(12) << suite.tuples() << std::setw(12) << suite.violations() << "\n";
  }
  os << "total: " << summary.total_violations() << " violations across "
     << summary.suites.size() << " rule suites\n";
  for (const auto& suite : summary.suites) {
    for (const auto& part : suite.parts) {
      for (const auto& v : part.report.sample) {
        os << "  " << v.rule << " [" << part.lattice << "]";
        if (!v.x.empty()) os << " x=" << v.x;
        if (!v.y.empty()) os << " y=" << v.y;
        if (!v.z.empty()) os << " z=" << v.z;
        if (!v.t.empty()) os << " t=" << v.t;
        os << ": " << v.lhs << " != " << v.rhs << " (gap " << v.gap << ")\n";
      }
    }
  }
  return os.str();
}

}  // namespace inquiry
