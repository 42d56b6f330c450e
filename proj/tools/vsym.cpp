// Command-line front end. All results are JSON on stdout; diagnostics on
// stderr. Exit codes: 0 ok, 1 check failure, 2 usage or input error,
// 3 budget exceeded.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vsym/errors.hpp"
#include "vsym/io.hpp"
#include "vsym/verify.hpp"

using namespace vsym;

namespace {

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return json::parse(arg);
    } catch (const json::parse_error& e) {
      throw ParseError(e.what());
    }
  }
  return read_json_file(arg);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + tok + "' in list '" + s + "'");
    }
  }
  return out;
}

int rank_from_rho(const Presentation& p) {
  int n = 1;
  while (p.has_generator(rho(n))) ++n;
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"virtual twin and triplet group toolkit"};
  app.require_subcommand(1);
  int jobs = 1;
  double budget = 1e9;
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", budget, "hom-count limit on |target|^generators");

  std::string family_name;
  int n = 0;
  auto* present = app.add_subcommand("present", "print a family presentation");
  present->add_option("family", family_name)->required();
  present->add_option("n", n)->required();

  std::string input, transversal = "m2", split, alias, tietze = "none";
  bool values = false;
  auto* rs = app.add_subcommand("rs", "Reidemeister-Schreier subgroup presentation");
  rs->add_option("presentation", input)->required();
  rs->add_option("--transversal", transversal)->check(CLI::IsMember({"m2", "mn"}));
  rs->add_option("--split", split, "s1 or y1 (m2 only); inferred when omitted");
  rs->add_option("--n", n, "rank for the mn transversal; inferred from rho generators");
  rs->add_option("--alias", alias)->check(CLI::IsMember({"paper"}));
  rs->add_option("--tietze", tietze)->check(CLI::IsMember({"auto", "none"}));
  rs->add_flag("--values", values, "include the value of each generator");

  std::string word;
  auto* kappa_cmd = app.add_subcommand("kappa", "rewrite a pure word in kappa generators");
  kappa_cmd->add_option("n", n)->required();
  kappa_cmd->add_option("word", word)->required();

  auto* abelianize = app.add_subcommand("abelianize", "abelian invariants");
  abelianize->add_option("presentation", input)->required();
  auto* nilq2 = app.add_subcommand("nilq2", "class-two nilpotent quotient");
  nilq2->add_option("presentation", input)->required();

  std::string target;
  auto* homcount = app.add_subcommand("homcount", "count homomorphisms into a finite group");
  homcount->add_option("presentation", input)->required();
  homcount->add_option("--target", target)->required();

  auto* crysto = app.add_subcommand("crysto", "crystallographic quotient of the virtual triplet group");
  crysto->require_subcommand(1);
  std::string elem, cycle_type, params_file, action_file;
  auto* c_order = crysto->add_subcommand("order", "order of an element");
  c_order->add_option("n", n)->required();
  c_order->add_option("--elem", elem, "element JSON or a file holding it")->required();
  auto* c_torsion = crysto->add_subcommand("torsion", "torsion element of a given cycle type");
  c_torsion->add_option("n", n)->required();
  c_torsion->add_option("--cycle-type", cycle_type)->required();
  c_torsion->add_option("--params", params_file, "JSON array of exponents, or a file holding it");
  int max_n = 8;
  bool unsigned_action = false;
  auto* c_faithful = crysto->add_subcommand("faithful", "check that the holonomy action is faithful");
  c_faithful->add_option("n", n)->required();
  c_faithful->add_option("--max-n", max_n);
  c_faithful->add_flag("--unsigned", unsigned_action, "drop the orientation signs");
  auto* c_action = crysto->add_subcommand("action", "validate a user-supplied action");
  c_action->add_option("file", action_file)->required();

  auto* chordal = app.add_subcommand("chordal", "chordality of the PVT_n commutation graph");
  chordal->add_option("n", n)->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify-paper", "run reproduction suites");
  verify->add_option("--suite", suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*present) {
      emit(to_json(family(parse_kind(family_name), n)));
    } else if (*rs) {
      const auto p = read_presentation(input);
      SchreierTransversal t;
      if (transversal == "m2") {
        const GenSym sp = !split.empty() ? parse_gensym(split) : p.has_generator(s(1)) ? s(1) : y(1);
        t = transversal_m2(p, sp);
      } else {
        t = transversal_mn(n > 0 ? n : rank_from_rho(p), p);
      }
      const auto aliases = alias == "paper" ? paper_aliases(p) : GammaAliases{};
      auto sub = subgroup_presentation(p, t, aliases, jobs);
      if (tietze == "auto") sub = tietze_eliminate(sub);
      json out = to_json(sub);
      if (values) out["values"] = gamma_table(SchreierRewriter(t, p.generators, aliases));
      emit(out);
    } else if (*kappa_cmd) {
      emit(json{{"kappa", to_string(pure_to_kappa(n, parse_word(word)))}});
    } else if (*abelianize) {
      emit(to_json(abelianization(read_presentation(input))));
    } else if (*nilq2) {
      emit(to_json(class2_quotient(read_presentation(input))));
    } else if (*homcount) {
      const auto count = hom_count(read_presentation(input), FiniteGroup::by_name(target), {budget, jobs});
      emit(json{{"target", target}, {"count", count}});
    } else if (*c_order) {
      const auto e = element_from_json(n, json_arg(elem));
      const auto o = order(e);
      emit(json{{"element", to_json(e)}, {"order", o ? json(*o) : json("infinite")}});
    } else if (*c_torsion) {
      std::vector<long long> params;
      if (!params_file.empty()) {
        const auto j = json_arg(params_file);
        if (!j.is_array()) throw ParseError("params must be a JSON array");
        for (const auto& v : j) {
          if (!v.is_number_integer()) throw ParseError("params must be integers");
          params.push_back(v.get<long long>());
        }
      }
      const auto ct = parse_int_list(cycle_type);
      const auto e = torsion_element<long long>(n, ct, params);
      const auto o = order(e);
      emit(json{{"element", to_json(e)},
                {"freeParameters", torsion_free_parameters(n, ct)},
                {"order", o ? json(*o) : json("infinite")}});
    } else if (*c_faithful) {
      const auto r = holonomy_faithful(n, !unsigned_action, max_n);
      json out{{"n", n}, {"faithful", r.faithful}, {"checked", r.checked}};
      if (r.kernel_element) out["kernelElement"] = r.kernel_element->one_line();
      emit(out);
    } else if (*c_action) {
      const auto spec = action_from_json(read_json_file(action_file));
      const auto builtin = ActionSpec::virtual_triplet(spec.n());
      bool same = true;
      for (int i = 1; i < spec.n(); ++i) same = same && spec.generator(i) == builtin.generator(i);
      emit(json{{"n", spec.n()}, {"coxeterRelations", spec.coxeter_relations_hold()}, {"matchesTriplet", same}});
    } else if (*chordal) {
      const auto g = pvt_graph(n);
      emit(to_json(g, is_chordal(g)));
    } else if (*verify) {
      VerifyOptions opt;
      opt.jobs = jobs;
      opt.hom_budget = budget;
      const auto reports = verify_paper(suite, opt);
      bool ok = true;
      json out = json::array();
      for (const auto& r : reports) {
        for (const auto& c : r.checks)
          std::cerr << (c.pass ? "pass " : "FAIL ") << r.suite << '/' << c.id << " (" << c.seconds << " s)\n";
        ok = ok && r.passed();
        out.push_back(to_json(r));
      }
      emit(reports.size() == 1 ? out.front() : out);
      return ok ? 0 : kCheckFailed;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return 0;
}
