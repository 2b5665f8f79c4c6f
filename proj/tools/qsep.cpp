// qsep: command-line front end for the finite semigroup analysis library.
//
// Exit codes: 0 success / verified, 1 violation, 2 usage or input error.

#include <cstddef>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsep/qsep.hpp"

namespace {

constexpr int exit_ok        = 0;
constexpr int exit_violation = 1;
constexpr int exit_input     = 2;

std::string read_source(std::string const& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) {
    throw qsep::Error("cannot open '" + path + "'");
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// A file path, "-" for standard input, or "zoo:<name><params>".
qsep::CayleyTable load_table(std::string const& source) {
  if (source.rfind("zoo:", 0) == 0) {
    return qsep::zoo_by_shorthand(std::string_view(source).substr(4));
  }
  return qsep::parse_table(read_source(source));
}

int cmd_analyze(std::string const& input) {
  auto const s = load_table(input);
  std::cout << "order: " << s.size() << '\n' << qsep::format_profile(qsep::classify(s));
  return exit_ok;
}

int cmd_decompose(std::string const& input, bool dot) {
  auto const s = load_table(input);
  auto const d = qsep::decompose(s);
  if (dot) {
    std::cout << qsep::semilattice_dot(d.quotient.quotient);
  } else {
    std::cout << qsep::format_decomposition(d);
  }
  return exit_ok;
}

int cmd_verify(std::optional<std::string> const& input,
               std::optional<std::size_t>        corpus_order,
               std::string const&                selector,
               std::size_t                       workers) {
  auto const selected = qsep::select_checks(selector);
  std::vector<qsep::CayleyTable> corpus;
  if (corpus_order) {
    for (std::size_t n = 1; n <= *corpus_order; ++n) {
      auto tables = qsep::enumerate_labeled(n);
      corpus.insert(corpus.end(), tables.begin(), tables.end());
    }
    std::cout << "corpus: labeled semigroups of order <= " << *corpus_order << " ("
              << corpus.size() << " tables)\n";
  } else if (input) {
    corpus.push_back(load_table(*input));
  } else {
    throw qsep::Error("verify needs an input or --corpus");
  }
  auto const reports = qsep::verify_corpus(corpus, selected, workers);
  bool       ok      = true;
  for (auto const& r : reports) {
    std::cout << qsep::format_report(r);
    ok = ok && r.outcome() != qsep::Outcome::violated;
    if (r.check == "diagram") {
      for (auto const& [arrow, names] : qsep::diagram_strictness()) {
        std::cout << "  strictness " << arrow << ": "
                  << (names.empty() ? std::string("(no named witness)")
                                    : qsep::detail::join(names))
                  << '\n';
      }
    }
  }
  return ok ? exit_ok : exit_violation;
}

bool profile_has(qsep::PropertyProfile const& p, std::string const& filter) {
  bool const  negate = !filter.empty() && filter.front() == '!';
  std::string name   = negate ? filter.substr(1) : filter;
  for (auto const& [key, v] : p.fields()) {
    if (key == name) {
      return v->holds != negate;
    }
  }
  throw qsep::Error("unknown property '" + name + "'");
}

int cmd_enumerate(std::size_t                       order,
                  bool                              canonical,
                  std::string const&                mode,
                  std::optional<std::string> const& filter,
                  bool                              count_only) {
  std::vector<qsep::CayleyTable> tables;
  if (canonical) {
    if (mode != "iso" && mode != "iso_anti") {
      throw qsep::Error("mode must be 'iso' or 'iso_anti'");
    }
    tables = qsep::enumerate_canonical(
        order, mode == "iso" ? qsep::CanonicalMode::iso : qsep::CanonicalMode::iso_anti);
  } else {
    tables = qsep::enumerate_labeled(order);
  }
  std::size_t count = 0;
  bool        first = true;
  for (auto const& t : tables) {
    if (filter && !profile_has(qsep::classify(t), *filter)) {
      continue;
    }
    ++count;
    if (!count_only) {
      std::cout << (first ? "" : "\n") << qsep::format_table(t);
      first = false;
    }
  }
  if (count_only) {
    std::cout << count << '\n';
  }
  return exit_ok;
}

int cmd_omega(std::string const& input, std::string const& relation) {
  auto const           s = load_table(input);
  qsep::BinaryRelation omega(s.size());
  if (relation == "omega_s") {
    omega = qsep::omega_S(s);
  } else if (relation == "all") {
    omega = qsep::BinaryRelation::full(s.size());
  } else if (relation == "diagonal") {
    omega = qsep::BinaryRelation::diagonal(s.size());
  } else if (relation.rfind("file:", 0) == 0) {
    omega = qsep::parse_relation(read_source(relation.substr(5)), s.size());
  } else {
    throw qsep::Error("unknown relation '" + relation + "'");
  }
  auto const report = qsep::check_omega_conditions(s, omega);
  std::cout << "relation: " << omega.size() << " pairs\n"
            << qsep::format_relation(omega) << qsep::format_omega_report(report);
  try {
    auto const c = qsep::sim_omega(s, omega);
    std::cout << "congruence: yes\n" << qsep::format_classes(c);
  } catch (qsep::NotACongruence const& e) {
    std::cout << "congruence: no (" << e.what() << ")\n";
  }
  return exit_ok;
}

int cmd_zoo(std::string const& name, std::vector<std::size_t> const& params) {
  std::cout << qsep::format_table(qsep::zoo_by_name(name, params));
  return exit_ok;
}

int cmd_search_converse(std::size_t max_order, std::size_t workers) {
  auto const r = qsep::search_cor15_converse(max_order, workers);
  for (std::size_t n = 0; n < r.examined.size(); ++n) {
    std::cout << "order " << n + 1 << ": examined " << r.examined[n] << " canonical tables\n";
  }
  if (r.counterexample) {
    std::cout << "found: quasi-separative, semilattice of weakly cancellative components, "
                 "not weakly balanced\n"
              << qsep::format_table(*r.counterexample);
  } else {
    std::cout << "exhausted order <= " << max_order << ", none found\n";
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroup analysis: congruences, semilattice decompositions, "
               "and class membership"};
  app.require_subcommand(1);

  std::string input;
  bool        dot = false;

  auto* analyze = app.add_subcommand("analyze", "classify a semigroup and print witnesses");
  analyze->add_option("input", input, "table file, '-' for stdin, or zoo:<name><params>")
      ->required();

  auto* decompose = app.add_subcommand("decompose", "semilattice decomposition");
  decompose->add_option("input", input, "table file, '-' or zoo:<...>")->required();
  decompose->add_flag("--dot", dot, "emit the quotient semilattice as a DOT digraph");

  std::optional<std::string> verify_input;
  std::optional<std::size_t> corpus_order;
  std::string                theorem = "all";
  std::size_t                workers = 1;
  auto* verify = app.add_subcommand("verify", "check the structure theorems");
  verify->add_option("input", verify_input, "table file, '-' or zoo:<...>");
  verify->add_option("--corpus", corpus_order, "all labeled semigroups up to this order")
      ->check(CLI::Range(1, 5));
  verify->add_option("--theorem", theorem,
                     "all, t4, t6 (t10), p7, p11, p14, c12, c15, eq14, drazin, relations, "
                     "diagram");
  verify->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

  std::size_t                order     = 1;
  bool                       canonical = false;
  std::string                mode      = "iso_anti";
  std::optional<std::string> filter;
  bool                       count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "all semigroups of a given order");
  enumerate->add_option("--order", order, "order (1..5)")->required()->check(CLI::Range(1, 5));
  enumerate->add_flag("--canonical", canonical, "one table per isomorphism class");
  enumerate->add_option("--mode", mode, "iso or iso_anti (with --canonical)");
  enumerate->add_option("--filter", filter, "keep tables with this property ('!p' negates)");
  enumerate->add_flag("--count-only", count_only, "print only the count");

  std::string relation = "omega_s";
  auto*       omega    = app.add_subcommand("omega", "check a relation against the omega conditions");
  omega->add_option("input", input, "table file, '-' or zoo:<...>")->required();
  omega->add_option("--relation", relation, "omega_s, all, diagonal or file:<path>");

  std::string              zoo_name;
  std::vector<std::size_t> zoo_params;
  auto* zoo = app.add_subcommand(
      "zoo", "print a named semigroup: left_zero n, right_zero n, rectangular_band p q, "
             "null n, chain n, cyclic n, monogenic index period");
  zoo->add_option("name", zoo_name)->required();
  zoo->add_option("params", zoo_params);

  std::size_t max_order = 4;
  auto*       search    = app.add_subcommand(
      "search-converse-c15", "look for a semilattice of weakly cancellative semigroups "
                             "that is not weakly balanced");
  search->add_option("--max-order", max_order)->check(CLI::Range(1, 5));
  search->add_option("--workers", workers)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    (void) app.exit(e);
    return exit_input;
  }

  try {
    if (*analyze) {
      return cmd_analyze(input);
    }
    if (*decompose) {
      return cmd_decompose(input, dot);
    }
    if (*verify) {
      return cmd_verify(verify_input, corpus_order, theorem, workers);
    }
    if (*enumerate) {
      return cmd_enumerate(order, canonical, mode, filter, count_only);
    }
    if (*omega) {
      return cmd_omega(input, relation);
    }
    if (*zoo) {
      return cmd_zoo(zoo_name, zoo_params);
    }
    if (*search) {
      return cmd_search_converse(max_order, workers);
    }
  } catch (qsep::NotACongruence const& e) {
    std::cerr << "qsep: " << e.what() << '\n';
    return exit_violation;
  } catch (qsep::Error const& e) {
    std::cerr << "qsep: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}
