// trilogic: command-line front end for the three-valued paraconsistent
// logic workbench.
//
// Exit codes: 0 success / relation holds, 1 usage or input error,
// 2 relation refuted (entails, equiv, check-law) or a replication mismatch.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trilogic/trilogic.hpp"

namespace {

using namespace trilogic;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_refuted = 2;

std::vector<Formula> parse_premises(const std::string& text) {
  std::vector<Formula> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_formula(item));
  }
  return out;
}

void print_law_verdict(std::ostream& os, const LawSchema& law, const LogicSpec& logic, bool& all_hold) {
  os << law.name << ": " << law.lhs << " == " << law.rhs << ": ";
  if (auto c = counterexample(law, logic)) {
    all_hold = false;
    os << "fails at " << to_string(c->assignment) << " (lhs=" << c->lhs_value << ", rhs=" << c->rhs_value << ")\n";
  } else {
    os << "holds\n";
  }
}

nlohmann::json report_json(const ReplicationReport& report) {
  nlohmann::json claims = nlohmann::json::array();
  for (const Claim& c : report.claims)
    claims.push_back({{"label", c.label},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"match", c.match},
                      {"witnesses", c.witnesses}});
  return {{"claims", claims}, {"all_match", report.all_match()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for three-valued paraconsistent propositional logics"};
  app.require_subcommand(1);

  std::string logic_name = "lp";
  auto add_logic = [&](CLI::App* sub) {
    sub->add_option("--logic", logic_name, "Logic: 'lp' or a family id in [0, 8191]")->capture_default_str();
  };

  // eval
  std::string assign, formula_text, second_text;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula under a valuation");
  add_logic(eval_cmd);
  eval_cmd->add_option("--assign", assign, "Valuation, e.g. p=t,q=b");
  eval_cmd->add_option("formula", formula_text)->required();

  // entails
  std::string premises_text;
  auto* entails_cmd = app.add_subcommand("entails", "Decide premises |= conclusion");
  add_logic(entails_cmd);
  entails_cmd->add_option("--premises", premises_text, "Premises separated by ';'");
  entails_cmd->add_option("conclusion", formula_text)->required();

  // equiv
  auto* equiv_cmd = app.add_subcommand("equiv", "Decide logical equivalence of two formulas");
  add_logic(equiv_cmd);
  equiv_cmd->add_option("left", formula_text)->required();
  equiv_cmd->add_option("right", second_text)->required();

  // check-law
  std::string law_set, law_file;
  auto* law_cmd = app.add_subcommand("check-law", "Check built-in or user-supplied equivalence laws");
  add_logic(law_cmd);
  auto* law_opt = law_cmd->add_option("--law", law_set, "Built-in law number(s), e.g. 9 or 1-8,10-12");
  auto* file_opt = law_cmd->add_option("--law-file", law_file, "File of 'NAME: LHS == RHS' lines");
  law_opt->excludes(file_opt);
  file_opt->excludes(law_opt);

  // enumerate
  std::string satisfying;
  bool show_tables = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "List family members satisfying a set of laws");
  enum_cmd->add_option("--satisfying", satisfying, "Law set, e.g. 1-8,10-12")->required();
  enum_cmd->add_flag("--tables", show_tables, "Print the tables of each match");

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "Export or verify the catalog of all 8192 logics");
  catalog_cmd->require_subcommand(1);
  std::string format = "jsonl", path;
  auto* export_cmd = catalog_cmd->add_subcommand("export", "Write all catalog records");
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"jsonl", "csv"}))->capture_default_str();
  export_cmd->add_option("--out", path, "Output file")->required();
  auto* verify_cmd = catalog_cmd->add_subcommand("verify", "Read a catalog and recheck every record");
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"jsonl", "csv"}))->capture_default_str();
  verify_cmd->add_option("--in", path, "Input file")->required()->check(CLI::ExistingFile);

  // replicate
  std::string report_format = "text";
  auto* replicate_cmd = app.add_subcommand("replicate", "Recompute the reference results and compare with expected values");
  replicate_cmd->add_option("--format", report_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  // tt
  auto* tt_cmd = app.add_subcommand("tt", "Render a truth table");
  add_logic(tt_cmd);
  tt_cmd->add_option("formula", formula_text)->required();

  // stage
  std::string connective_text;
  auto* stage_cmd = app.add_subcommand("stage", "Count tables of one connective compatible with laws");
  stage_cmd->add_option("--connective", connective_text, "neg, and, or or imp")->required();
  stage_cmd->add_option("--laws", law_set, "Law set")->required();

  // scan
  std::size_t depth = 2, atom_count = 1, limit = 20;
  auto* scan_cmd = app.add_subcommand("scan", "Compare tautologies with classical ones over small formulas");
  add_logic(scan_cmd);
  scan_cmd->add_option("--depth", depth)->capture_default_str();
  scan_cmd->add_option("--atoms", atom_count)->capture_default_str();
  scan_cmd->add_option("--limit", limit, "Print at most this many mismatches")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }
  if (*law_cmd && law_opt->count() + file_opt->count() == 0) {
    std::cerr << "check-law needs --law or --law-file\nRun with --help for more information.\n";
    return exit_usage;
  }

  try {
    if (*eval_cmd) {
      const LogicSpec logic = logic_by_name(logic_name);
      std::cout << eval(parse_formula(formula_text), parse_valuation(assign), logic) << '\n';
      return exit_ok;
    }
    if (*entails_cmd) {
      const LogicSpec logic = logic_by_name(logic_name);
      const auto premises = parse_premises(premises_text);
      const auto r = entails(premises, parse_formula(formula_text), logic);
      if (r.holds) {
        std::cout << "holds\n";
        return exit_ok;
      }
      std::cout << "refuted: " << to_string(*r.witness) << '\n';
      return exit_refuted;
    }
    if (*equiv_cmd) {
      const LogicSpec logic = logic_by_name(logic_name);
      const auto r = equivalent(parse_formula(formula_text), parse_formula(second_text), logic);
      if (r.holds) {
        std::cout << "equivalent\n";
        return exit_ok;
      }
      std::cout << "not equivalent: " << to_string(*r.witness) << " (left " << r.left_value << ", right "
                << r.right_value << ")\n";
      return exit_refuted;
    }
    if (*law_cmd) {
      const LogicSpec logic = logic_by_name(logic_name);
      std::vector<LawSchema> laws;
      if (!law_file.empty()) {
        std::ifstream in(law_file);
        if (!in) throw std::runtime_error("cannot open " + law_file);
        laws = read_laws(in);
      } else {
        for (int n : parse_law_set(law_set)) laws.push_back(builtin_law(n));
      }
      bool all_hold = true;
      for (const LawSchema& law : laws) print_law_verdict(std::cout, law, logic, all_hold);
      return all_hold ? exit_ok : exit_refuted;
    }
    if (*enum_cmd) {
      const auto ids = count_satisfying(parse_law_set(satisfying));
      for (LogicId id : ids) {
        std::cout << id;
        if (show_tables) {
          const LogicSpec l = decode(id);
          std::cout << "  neg=" << l.neg.str() << " and=" << l.conj.str() << " or=" << l.disj.str()
                    << " imp=" << l.imp.str();
        }
        std::cout << '\n';
      }
      std::cout << "count: " << ids.size() << '\n';
      return exit_ok;
    }
    if (*export_cmd) {
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write " + path);
      const auto records = build_catalog();
      if (format == "csv")
        write_csv(out, records);
      else
        write_jsonl(out, records);
      std::cout << "wrote " << records.size() << " records to " << path << '\n';
      return exit_ok;
    }
    if (*verify_cmd) {
      std::ifstream in(path);
      const auto records = format == "csv" ? read_csv(in) : read_jsonl(in);
      for (const auto& r : records) validate_record(r);
      std::cout << records.size() << " records verified\n";
      return exit_ok;
    }
    if (*replicate_cmd) {
      const ReplicationReport report = replicate_report();
      if (report_format == "json")
        std::cout << report_json(report).dump(2) << '\n';
      else
        print_report(std::cout, report);
      return report.all_match() ? exit_ok : exit_refuted;
    }
    if (*tt_cmd) {
      std::cout << render_truth_table(parse_formula(formula_text), logic_by_name(logic_name));
      return exit_ok;
    }
    if (*stage_cmd) {
      const StageResult r = stage_analysis(parse_connective(connective_text), parse_law_set(law_set));
      std::cout << "candidates: " << r.candidates << "\ncompatible: " << r.compatible << '\n';
      for (const auto& t : r.compatible_tables) std::cout << "  " << t << '\n';
      return exit_ok;
    }
    if (*scan_cmd) {
      const ScanResult r = tautology_coincidence_scan(depth, atom_count, logic_by_name(logic_name));
      std::cout << "scanned: " << r.scanned << "\ncommon tautologies: " << r.tautologies
                << "\nmismatches: " << r.mismatches.size() << '\n';
      for (std::size_t i = 0; i < r.mismatches.size() && i < limit; ++i) std::cout << "  " << r.mismatches[i] << '\n';
      return exit_ok;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
