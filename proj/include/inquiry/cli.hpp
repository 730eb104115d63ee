#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "inquiry/diagram.hpp"
#include "inquiry/errors.hpp"
#include "inquiry/questions.hpp"
#include "inquiry/rational.hpp"
#include "inquiry/statements.hpp"
#include "inquiry/valuations.hpp"
#include "inquiry/verify.hpp"

namespace inquiry {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

namespace cli_detail {

inline std::vector<std::string> split_atoms(const std::string& csv) {
  std::vector<std::string> out;
  std::string current;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input("malformed JSON in '" + path + "': " + e.what());
  }
}

inline void write_output(const std::string& text, const std::string& out_path,
                         std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw invalid_input("cannot write '" + out_path + "'");
  f << text;
}

// Deterministic weight draws; plain modulo keeps results identical across
// platforms, which matters more here than distribution fine print.
inline Rational draw_weight(std::mt19937_64& rng) {
  return Rational(static_cast<std::int64_t>(rng() % 1000 + 1));
}

inline ProbabilityMeasure load_measure(const HypothesisSpace& space, const std::string& spec) {
  if (spec == "uniform") return ProbabilityMeasure::uniform(space);
  return measure_from_json(space, read_json_file(spec));
}

// {"offset": [1, 1], "weights": {"A": [1, 1], "AB": [2, 1], ...}}
inline void load_covaluation(const HypothesisSpace& space, const std::string& path,
                             std::vector<Rational>& weights, Rational& offset) {
  const nlohmann::json doc = read_json_file(path);
  if (!doc.is_object() || !doc.contains("weights"))
    throw invalid_input("covaluation: expected object with weights");
  const auto parse_pair = [](const nlohmann::json& v, const char* what) {
    if (!v.is_array() || v.size() != 2)
      throw invalid_input(std::string("covaluation: ") + what + " must be [num, den]");
    return Rational(v[0].get<std::int64_t>(), v[1].get<std::int64_t>());
  };
  offset = doc.contains("offset") ? parse_pair(doc["offset"], "offset") : Rational(1);
  weights.assign(space.top_mask() + 1, Rational(1));
  for (const auto& [key, value] : doc["weights"].items()) {
    const Statement s = statement_from_name(space, key);
    if (s.is_absurdity()) throw invalid_input("covaluation: the absurdity carries no weight");
    weights[s.mask()] = parse_pair(value, "weight");
  }
}

}  // namespace cli_detail

// Runs the command line given as arguments (program name excluded).
// Returns the process exit code; all output goes through the streams.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite lattice engine for the calculus of statements and questions"};
  app.require_subcommand(1);

  std::string atoms_csv;
  std::string format = "text";
  std::string out_path;

  auto* enumerate = app.add_subcommand("enumerate", "list the questions of a space");
  bool real_only = false;
  bool allow_six = false;
  enumerate->add_option("--atoms", atoms_csv, "comma-separated atom letters")->required();
  enumerate->add_flag("--real", real_only, "only real questions (answerable in every state)");
  enumerate->add_flag("--allow-six-atoms", allow_six, "permit the six-atom enumeration");
  enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  enumerate->add_option("--out", out_path, "write to file instead of stdout");

  auto* query = app.add_subcommand("query", "meet, join or compare question expressions");
  std::string op, expr1, expr2;
  query->add_option("--atoms", atoms_csv)->required();
  query->add_option("op", op, "meet | join | leq")->required()
      ->check(CLI::IsMember({"meet", "join", "leq"}));
  query->add_option("expr1", expr1)->required();
  query->add_option("expr2", expr2)->required();
  query->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "verify the rule suites");
  std::string measure_spec = "uniform";
  std::string covaluation_path, bivaluation_path, tolerance_text;
  unsigned trials = 1;
  std::uint64_t seed = 0;
  check->add_option("--atoms", atoms_csv, "space for the reference measures");
  check->add_option("--measure", measure_spec, "uniform or a JSON weight file");
  check->add_option("--covaluation", covaluation_path, "JSON covaluation weight file");
  check->add_option("--bivaluation", bivaluation_path, "check an external bivaluation file");
  check->add_option("--tolerance", tolerance_text, "absolute gap tolerance (default 0 exact)");
  check->add_option("--trials", trials, "extra seeded random-weight rounds")
      ->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "seed for the random rounds");
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  check->add_option("--out", out_path);

  auto* exportc = app.add_subcommand("export", "emit a lattice diagram");
  std::string which = "statements";
  std::string exformat = "dot";
  exportc->add_option("--atoms", atoms_csv)->required();
  exportc->add_option("--which", which)->check(CLI::IsMember({"statements", "questions"}));
  exportc->add_flag("--real", real_only, "restrict questions to real ones");
  exportc->add_option("--format", exformat)->check(CLI::IsMember({"dot", "json"}));
  exportc->add_option("--out", out_path);

  auto* perturb = app.add_subcommand("perturb", "write a negative-control bivaluation");
  std::string side_name = "statements";
  std::string element_label, context_label;
  std::string delta_text = "1/100";
  perturb->add_option("--atoms", atoms_csv)->required();
  perturb->add_option("--side", side_name)->check(CLI::IsMember({"statements", "questions"}));
  perturb->add_option("--measure", measure_spec);
  perturb->add_option("--covaluation", covaluation_path);
  perturb->add_option("--element", element_label, "element label of the entry to shift");
  perturb->add_option("--context", context_label, "context label of the entry to shift");
  perturb->add_option("--delta", delta_text, "shift amount (default 1/100)");
  perturb->add_option("--seed", seed, "pick the entry at random instead");
  perturb->add_option("--out", out_path);

  try {
    std::vector<const char*> argv;
    argv.push_back("inquiry");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream buffer;
    const int code = app.exit(e, buffer, buffer);
    (code == 0 ? out : err) << buffer.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) {
      const HypothesisSpace space = make_space(cli_detail::split_atoms(atoms_csv));
      const auto questions = enumerate_questions(space, real_only, allow_six);
      std::string text;
      if (format == "json") {
        nlohmann::ordered_json doc;
        auto& list = doc["questions"] = nlohmann::ordered_json::array();
        for (const auto& q : questions) list.push_back(question_to_json(q));
        doc["count"] = questions.size();
        text = doc.dump(2) + "\n";
      } else {
        std::ostringstream os;
        for (const auto& q : questions) os << canonical_form(q) << "\n";
        os << "count: " << questions.size() << "\n";
        text = os.str();
      }
      cli_detail::write_output(text, out_path, out);
      return kExitOk;
    }

    if (*query) {
      const HypothesisSpace space = make_space(cli_detail::split_atoms(atoms_csv));
      const Question q1 = parse_expression(space, expr1);
      const Question q2 = parse_expression(space, expr2);
      std::string result;
      if (op == "meet")
        result = canonical_form(meet_q(q1, q2));
      else if (op == "join")
        result = canonical_form(join_q(q1, q2));
      else
        result = answers_question(q1, q2) ? "true" : "false";
      if (format == "json") {
        nlohmann::ordered_json doc{{"op", op}, {"result", result}};
        out << doc.dump(2) << "\n";
      } else {
        out << result << "\n";
      }
      return kExitOk;
    }

    if (*check) {
      VerifySummary summary;
      Rational tolerance(0);
      if (!bivaluation_path.empty()) {
        const LoadedBiValuation loaded =
            load_bivaluation(cli_detail::read_json_file(bivaluation_path));
        tolerance = !tolerance_text.empty() ? Rational::parse(tolerance_text)
                    : loaded.had_float_values ? Rational(1, 1000000000)
                                              : Rational(0);
        summary = verify_side(loaded.bivaluation, loaded.lattice, loaded.kind, tolerance);
      } else {
        if (atoms_csv.empty())
          throw invalid_input("check: need --atoms (or --bivaluation FILE)");
        if (!tolerance_text.empty()) tolerance = Rational::parse(tolerance_text);
        const HypothesisSpace space = make_space(cli_detail::split_atoms(atoms_csv));
        MeasureSpec spec{cli_detail::load_measure(space, measure_spec), {}, Rational(1)};
        if (!covaluation_path.empty())
          cli_detail::load_covaluation(space, covaluation_path, spec.covaluation_weights,
                                       spec.covaluation_offset);
        summary = verify_all(spec, tolerance);
        std::mt19937_64 rng(seed);
        for (unsigned trial = 1; trial < trials; ++trial) {
          std::vector<Rational> atom_weights;
          for (int i = 0; i < space.atom_count(); ++i)
            atom_weights.push_back(cli_detail::draw_weight(rng));
          std::vector<Rational> statement_weights(space.top_mask() + 1, Rational(1));
          for (unsigned s = 1; s <= space.top_mask(); ++s)
            statement_weights[s] = cli_detail::draw_weight(rng);
          MeasureSpec random_spec{ProbabilityMeasure(space, std::move(atom_weights)),
                                  std::move(statement_weights),
                                  cli_detail::draw_weight(rng)};
          summary.merge(verify_all(random_spec, tolerance));
        }
      }
      const std::string text =
          format == "json" ? summary_to_json(summary).dump(2) + "\n" : summary_to_text(summary);
      cli_detail::write_output(text, out_path, out);
      return summary.passed() ? kExitOk : kExitViolations;
    }

    if (*exportc) {
      const HypothesisSpace space = make_space(cli_detail::split_atoms(atoms_csv));
      const DiagramFormat df = exformat == "dot" ? DiagramFormat::dot : DiagramFormat::json;
      std::string text;
      if (which == "statements") {
        text = export_diagram(boolean_lattice(space), df);
      } else {
        text = export_diagram(build_question_system(space, real_only).lattice, df);
      }
      cli_detail::write_output(text, out_path, out);
      return kExitOk;
    }

    if (*perturb) {
      const HypothesisSpace space = make_space(cli_detail::split_atoms(atoms_csv));
      const LatticeSide side =
          side_name == "statements" ? LatticeSide::statements : LatticeSide::questions;
      FiniteLattice lattice = side == LatticeSide::statements
                                  ? boolean_lattice(space)
                                  : build_question_system(space).lattice;
      BiValuation w(0);
      if (side == LatticeSide::statements) {
        w = probability_bivaluation(cli_detail::load_measure(space, measure_spec), lattice);
      } else {
        const QuestionSystem sys = build_question_system(space);
        std::vector<Rational> weights(space.top_mask() + 1, Rational(1));
        Rational offset(1);
        if (!covaluation_path.empty())
          cli_detail::load_covaluation(space, covaluation_path, weights, offset);
        w = relevance_bivaluation(weighted_covaluation(sys, weights, offset), lattice);
      }

      std::size_t element, context;
      if (!element_label.empty() || !context_label.empty()) {
        if (element_label.empty() || context_label.empty())
          throw invalid_input("perturb: need both --element and --context");
        element = lattice.poset().index_of(element_label);
        context = lattice.poset().index_of(context_label);
      } else {
        std::vector<std::pair<std::size_t, std::size_t>> defined;
        for (std::size_t t = 0; t < lattice.size(); ++t)
          for (std::size_t e = 0; e < lattice.size(); ++e)
            if (w.defined(e, t)) defined.emplace_back(e, t);
        std::mt19937_64 rng(seed);
        const auto& pick = defined[rng() % defined.size()];
        element = pick.first;
        context = pick.second;
      }
      const BiValuation shifted = perturbed(w, element, context, Rational::parse(delta_text));
      const std::string text =
          bivaluation_to_json(shifted, lattice, side, space).dump(2) + "\n";
      cli_detail::write_output(text, out_path, out);
      return kExitOk;
    }
  } catch (const capacity_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace inquiry
