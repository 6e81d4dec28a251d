#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wordgrowth/automaton.hpp"
#include "wordgrowth/circular.hpp"
#include "wordgrowth/fad.hpp"
#include "wordgrowth/growth.hpp"
#include "wordgrowth/powerfree.hpp"

using namespace wordgrowth;
using nlohmann::json;

namespace {

struct Config {
  double delta = 1e-6;
  std::uint64_t budget = 20'000'000;
  std::string format = "auto";
  unsigned threads = 1;
  bool no_symmetry = false;
};

void emit(const Config& cfg, const json& doc) {
  if (cfg.format == "text") {
    for (auto it = doc.begin(); it != doc.end(); ++it)
      std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
  } else {
    std::cout << doc.dump(2) << '\n';
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Automaton files start with `dfa`, antidictionary files with `ad`.
Dfa load_language(const std::string& path) {
  const std::string text = slurp(path);
  std::istringstream probe(text);
  std::string line, head;
  while (std::getline(probe, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    if (fields >> head) break;
  }
  std::istringstream in(text);
  if (head == "ad") return fad_automaton(parse_antidictionary(in));
  return parse_dfa(in);
}

json report_json(const Dfa& raw, double delta) {
  const Dfa dfa = trim(raw);
  if (dfa.is_empty()) return {{"classification", "Finite"}, {"note", "empty language"}};
  return to_json(asymptotic_profile(dfa, delta));
}

int cmd_powerfree(const Config& cfg, int k, const std::string& beta, int cap, const std::string& mode) {
  const auto bound = ExponentBound::parse(beta);
  const CapMode cm = mode == "excess" ? CapMode::excess : CapMode::period;
  try {
    auto result = algorithm_u(k, bound, cap, cm, cfg.delta, {!cfg.no_symmetry, cfg.threads});
    emit(cfg, to_json(result));
  } catch (const FiniteLanguageError& e) {
    emit(cfg, {{"k", k}, {"beta", bound.to_string()}, {"mode", to_string(cm)}, {"cap", cap},
               {"finite", true}, {"note", e.what()}});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth of regular and power-free languages"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--delta", cfg.delta, "absolute error bound for growth rates")
      ->check([](const std::string& s) {
        return std::stod(s) > 0 && std::stod(s) < 1 ? std::string() : std::string("delta must lie in (0,1)");
      });
  app.add_option("--budget", cfg.budget, "search nodes per period for scans");
  app.add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"auto", "json", "csv", "text"}));
  app.add_option("--threads", cfg.threads, "worker threads, 0 for all cores");
  app.add_flag("--no-symmetry", cfg.no_symmetry, "build the full factor automaton");

  std::string path;
  auto* dfa_report = app.add_subcommand("dfa-report", "classification and growth profile of an automaton");
  dfa_report->add_option("file", path)->required()->check(CLI::ExistingFile);

  auto* fad = app.add_subcommand("fad", "growth profile of the language avoiding an antidictionary");
  fad->add_option("file", path)->required()->check(CLI::ExistingFile);
  bool print_automaton = false;
  fad->add_flag("--automaton", print_automaton, "print the automaton instead");

  int tm_index = 0;
  auto* tm = app.add_subcommand("tm-approx", "growth rate of a Thue-Morse approximation");
  tm->add_option("i", tm_index)->required()->check(CLI::Range(-1, 20));

  auto* ext = app.add_subcommand("extendable", "growth of a language and its extendable parts");
  ext->add_option("file", path)->required()->check(CLI::ExistingFile);

  int k = 0, n = 0, n_max = 0;
  auto* inter = app.add_subcommand("intermediate", "counts of the cyclic-order language");
  inter->add_option("k", k)->required()->check(CLI::Range(2, 26));
  inter->add_option("--n-max", n_max)->required()->check(CLI::PositiveNumber);

  std::string beta;
  int cap = 0;
  std::string mode = "period";
  auto* pf = app.add_subcommand("powerfree", "two-sided growth bounds for a power-free language");
  pf->add_option("k", k)->required()->check(CLI::Range(2, 255));
  pf->add_option("beta", beta, "exponent such as 3, 7/3 or 7/3+")->required();
  pf->add_option("--cap", cap)->required()->check(CLI::PositiveNumber);
  pf->add_option("--mode", mode)->check(CLI::IsMember({"period", "excess"}));

  auto* root = app.add_subcommand("root", "root complexity table");
  root->add_option("k", k)->required()->check(CLI::Range(2, 255));
  root->add_option("beta", beta)->required();
  root->add_option("--n-max", n_max)->required()->check(CLI::PositiveNumber);

  int letters = 3;
  auto* circ = app.add_subcommand("circular", "square-free circular words");
  auto* circ_n = circ->add_option("--n", n, "list the words of this length")->check(CLI::PositiveNumber);
  auto* circ_max = circ->add_option("--n-max", n_max, "count words of each length")->check(CLI::PositiveNumber);
  circ_n->excludes(circ_max);
  circ->add_option("--k", letters)->check(CLI::Range(1, 26));

  int p_max = 0;
  auto* scan = app.add_subcommand("scan", "periods with no minimal power");
  scan->add_option("k", k)->required()->check(CLI::Range(2, 255));
  scan->add_option("beta", beta)->required();
  scan->add_option("--p-max", p_max)->required()->check(CLI::PositiveNumber);

  auto* asym = app.add_subcommand("asymptotic", "closed-form growth estimate");
  asym->add_option("k", k)->required()->check(CLI::Range(2, 1000000));
  asym->add_option("beta", beta)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*dfa_report) {
      emit(cfg, report_json(parse_dfa_file(path), cfg.delta));
    } else if (*fad) {
      const Dfa dfa = fad_automaton(parse_antidictionary_file(path));
      if (print_automaton)
        std::cout << format_dfa(dfa);
      else
        emit(cfg, report_json(dfa, cfg.delta));
    } else if (*tm) {
      const Dfa dfa = fad_automaton(tm_antidictionary(tm_index));
      const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
      const double expected = std::pow(phi, std::ldexp(1.0, -(tm_index + 1)));
      emit(cfg, {{"i", tm_index},
                 {"states", dfa.state_count()},
                 {"gr", to_json(approximate_index(dfa, cfg.delta))},
                 {"expected", expected}});
    } else if (*ext) {
      const Dfa dfa = trim(load_language(path));
      if (dfa.is_empty()) throw std::runtime_error("empty language");
      json doc;
      doc["L"] = to_json(approximate_index(dfa, cfg.delta));
      const Dfa right = extendable_part(dfa, Side::right);
      const Dfa both = extendable_part(dfa, Side::two_sided);
      doc["re"] = right.is_empty() ? json(nullptr) : to_json(approximate_index(right, cfg.delta));
      doc["e"] = both.is_empty() ? json(nullptr) : to_json(approximate_index(both, cfg.delta));
      emit(cfg, doc);
    } else if (*inter) {
      std::cout << "n,count\n";
      for (int i = 1; i <= n_max; ++i) std::cout << i << ',' << intermediate_count(i, k) << '\n';
    } else if (*pf) {
      return cmd_powerfree(cfg, k, beta, cap, mode);
    } else if (*root) {
      const auto bound = ExponentBound::parse(beta);
      std::vector<RootComplexityRow> rows;
      for (int i = 1; i <= n_max; ++i) rows.push_back({k, bound, i, root_complexity(k, bound, i)});
      write_root_csv(std::cout, rows);
    } else if (*circ) {
      if (n > 0) {
        std::cout << "n,word\n";
        for (const auto& w : enumerate_circular_square_free(n, letters))
          std::cout << n << ',' << to_string(w.representative()) << '\n';
      } else if (n_max > 0) {
        std::cout << "n,count\n";
        for (int i = 1; i <= n_max; ++i)
          std::cout << i << ',' << enumerate_circular_square_free(i, letters).size() << '\n';
      } else {
        throw CLI::ValidationError("circular", "one of --n or --n-max is required");
      }
    } else if (*scan) {
      const auto forbidden =
          forbidden_period_scan(k, ExponentBound::parse(beta), p_max, {cfg.budget, cfg.threads});
      for (std::size_t i = 0; i < forbidden.size(); ++i) std::cout << (i ? "," : "") << forbidden[i];
      std::cout << '\n';
    } else if (*asym) {
      const auto bound = ExponentBound::parse(beta);
      const Rational value = asymptotic_formula(k, bound);
      std::ostringstream decimal;
      decimal.precision(12);
      decimal << static_cast<double>(value);
      emit(cfg, {{"k", k}, {"beta", bound.to_string()}, {"exact", value.str()}, {"value", decimal.str()}});
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
