#ifndef QSEP_VERIFICATION_HPP
#define QSEP_VERIFICATION_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "core.hpp"
#include "decomposition.hpp"
#include "enumeration.hpp"
#include "parallel.hpp"
#include "properties.hpp"
#include "relation.hpp"
#include "zoo.hpp"

namespace qsep {

enum class Outcome { verified, violated, not_applicable };

[[nodiscard]] inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::verified:
      return "verified";
    case Outcome::violated:
      return "violated";
    case Outcome::not_applicable:
      return "not-applicable";
  }
  return "?";
}

struct Witness {
  CayleyTable table;
  std::string detail;
};

// A sub-check of a report. `applicable` counts instances whose hypotheses
// held; `violations` counts those where the conclusion failed.
struct Tally {
  std::string name;
  std::size_t applicable = 0;
  std::size_t violations = 0;
};

// Aggregate outcome of one check over one or more tables. Reports for the
// same check merge associatively; witness lists keep the first
// `max_witnesses` in input order.
struct VerificationReport {
  static constexpr std::size_t max_witnesses = 8;

  std::string                                      check;
  std::size_t                                      instances  = 0;
  std::size_t                                      applicable = 0;
  std::size_t                                      violations = 0;
  std::vector<Tally>                               tallies;
  std::vector<std::pair<std::string, std::size_t>> counters;
  std::vector<Witness>                             witnesses;

  VerificationReport() = default;
  explicit VerificationReport(std::string name) : check(std::move(name)) {}

  [[nodiscard]] Outcome outcome() const noexcept {
    if (violations > 0) {
      return Outcome::violated;
    }
    return applicable > 0 ? Outcome::verified : Outcome::not_applicable;
  }

  Tally& tally(std::string_view name) {
    for (auto& t : tallies) {
      if (t.name == name) {
        return t;
      }
    }
    return tallies.emplace_back(Tally{std::string(name)});
  }

  std::size_t& counter(std::string_view name) {
    for (auto& c : counters) {
      if (c.first == name) {
        return c.second;
      }
    }
    return counters.emplace_back(std::string(name), 0).second;
  }

  // Records one applicable sub-check outcome.
  void record(std::string_view sub, bool ok, CayleyTable const& s, std::string detail = {}) {
    auto& t = tally(sub);
    ++t.applicable;
    if (!ok) {
      ++t.violations;
      if (witnesses.size() < max_witnesses) {
        witnesses.push_back({s, std::string(sub) + (detail.empty() ? "" : ": " + detail)});
      }
    }
  }

  // Sets `applicable`/`violations` for a single-table report from its tallies.
  void finish_instance() {
    instances       = 1;
    bool any        = false;
    bool any_failed = false;
    for (auto const& t : tallies) {
      any        = any || t.applicable > 0;
      any_failed = any_failed || t.violations > 0;
    }
    applicable = any ? 1 : 0;
    violations = any_failed ? 1 : 0;
  }

  void merge(VerificationReport const& other) {
    if (check.empty()) {
      check = other.check;
    }
    instances += other.instances;
    applicable += other.applicable;
    violations += other.violations;
    for (auto const& t : other.tallies) {
      auto& mine = tally(t.name);
      mine.applicable += t.applicable;
      mine.violations += t.violations;
    }
    for (auto const& [k, v] : other.counters) {
      counter(k) += v;
    }
    for (auto const& w : other.witnesses) {
      if (witnesses.size() >= max_witnesses) {
        break;
      }
      witnesses.push_back(w);
    }
  }
};

namespace detail {

  template <typename Range>
  std::string join(Range const& r) {
    std::ostringstream os;
    bool               first = true;
    for (auto const& x : r) {
      os << (first ? "" : ",") << x;
      first = false;
    }
    return os.str();
  }

  inline std::string describe(Verdict const& v) {
    return v.holds ? "holds" : "fails at (" + join(v.witness) + ")";
  }

  struct CandidateOmega {
    std::string_view name;
    BinaryRelation   relation;
  };

  // Delta always, plus Omega_S and S x S when they satisfy eq8-eq10.
  inline std::vector<CandidateOmega> admissible_omegas(CayleyTable const& s) {
    std::vector<CandidateOmega> out;
    out.push_back({"diagonal", BinaryRelation::diagonal(s.size())});
    auto os = omega_S(s);
    if (check_omega_conditions(s, os).satisfies_all()) {
      out.push_back({"omega_S", std::move(os)});
    }
    auto full = BinaryRelation::full(s.size());
    if (check_omega_conditions(s, full).satisfies_all()) {
      out.push_back({"full", std::move(full)});
    }
    return out;
  }

  inline std::optional<SemilatticeDecomposition> try_decompose(CayleyTable const& s) {
    try {
      return decompose(s);
    } catch (NotACongruence const&) {
      return std::nullopt;
    }
  }

  template <typename Pred>
  bool all_components(SemilatticeDecomposition const& d, Pred&& pred) {
    return std::all_of(d.components.begin(), d.components.end(), [&](Component const& c) {
      return c.table && static_cast<bool>(pred(*c.table));
    });
  }

}  // namespace detail

// ~_Omega is a congruence for every admissible Omega. Also records
// eq8-eq10 for Omega_S: eq8 on every table, eq9/eq10 on
// quasi-separative tables; failures of eq9/eq10 elsewhere are counted as data.
[[nodiscard]] inline VerificationReport verify_theorem4(CayleyTable const& s) {
  VerificationReport r{"t4"};
  for (auto const& [name, omega] : detail::admissible_omegas(s)) {
    std::string detail;
    bool        ok = true;
    try {
      (void) sim_omega(s, omega);
    } catch (NotACongruence const& e) {
      ok     = false;
      detail = e.what();
    }
    r.record("congruence(" + std::string(name) + ")", ok, s, detail);
    r.record("dual_partition(" + std::string(name) + ")", sim_omega_dual_check(s, omega), s);
  }
  auto const report = check_omega_conditions(s, omega_S(s));
  r.record("omega_S_eq8", report.satisfies_eq8(), s);
  bool const eq9_10 = report.satisfies_eq9() && report.satisfies_eq10();
  if (is_quasi_separative(s)) {
    r.record("omega_S_eq9_eq10(quasi_separative)", eq9_10, s);
  } else if (!eq9_10) {
    ++r.counter("omega_S_eq9_eq10_fail(not_quasi_separative)");
  }
  r.finish_instance();
  return r;
}

// On quasi-separative s: the Omega_S quotient is a semilattice and every
// component is quasi-separative and quasi-cancellative.
[[nodiscard]] inline VerificationReport verify_theorem6_10(CayleyTable const& s) {
  VerificationReport r{"t6_10"};
  if (!is_quasi_separative(s)) {
    r.finish_instance();
    return r;
  }
  std::optional<SemilatticeDecomposition> d;
  std::string                             error;
  try {
    d = decompose(s);
  } catch (NotACongruence const& e) {
    error = e.what();
  }
  r.record("congruence", d.has_value(), s, error);
  if (d) {
    auto const& omega = d->omega;
    bool        idempotent_law = true, commutation_law = true;
    for (element_id a = 0; a < s.size(); ++a) {
      auto const ea = omega & relation_E(s, a);
      idempotent_law = idempotent_law && ea == (omega & relation_E(s, s(a, a)));
      for (element_id b = 0; b < s.size(); ++b) {
        commutation_law
            = commutation_law
              && (omega & relation_E(s, s(a, b))) == (omega & relation_E(s, s(b, a)));
      }
    }
    r.record("class_of_a_equals_class_of_a2", idempotent_law, s);
    r.record("class_of_ab_equals_class_of_ba", commutation_law, s);
    r.record("quotient_semilattice", d->quotient_is_semilattice, s);
    r.record("components_quasi_separative",
             detail::all_components(*d, [](auto const& t) { return is_quasi_separative(t); }),
             s);
    r.record("components_quasi_cancellative",
             detail::all_components(*d, [](auto const& t) { return is_quasi_cancellative(t); }),
             s);
  }
  r.finish_instance();
  return r;
}

// On quasi-separative s: Omega_S & E(a) & (T x T) lies in the diagonal for
// every class T and every a in T.
[[nodiscard]] inline VerificationReport verify_prop7(CayleyTable const& s) {
  VerificationReport r{"p7"};
  if (!is_quasi_separative(s)) {
    r.finish_instance();
    return r;
  }
  auto const omega = omega_S(s);
  auto const cong  = sim_omega(s, omega);
  bool       ok    = true;
  std::string detail;
  for (auto const& cls : cong.classes()) {
    BinaryRelation square(s.size());
    for (auto x : cls) {
      for (auto y : cls) {
        square.insert(x, y);
      }
    }
    for (auto a : cls) {
      auto const meet = omega & relation_E(s, a) & square;
      if (!meet.is_subset_of(BinaryRelation::diagonal(s.size()))) {
        ok     = false;
        detail = "a=" + std::to_string(a);
        break;
      }
    }
    if (!ok) {
      break;
    }
  }
  r.record("class_meet_in_diagonal", ok, s, detail);
  r.finish_instance();
  return r;
}

// separative and quasi-cancellative => cancellative
[[nodiscard]] inline VerificationReport verify_prop11(CayleyTable const& s) {
  VerificationReport r{"p11"};
  if (is_separative(s) && is_quasi_cancellative(s)) {
    auto const v = is_cancellative(s);
    r.record("cancellative", v.holds, s, detail::describe(v));
  }
  r.finish_instance();
  return r;
}

// quasi-cancellative and weakly balanced => weakly cancellative
[[nodiscard]] inline VerificationReport verify_prop14(CayleyTable const& s) {
  VerificationReport r{"p14"};
  if (is_quasi_cancellative(s) && is_weakly_balanced(s)) {
    auto const v = is_weakly_cancellative(s);
    r.record("weakly_cancellative", v.holds, s, detail::describe(v));
  }
  r.finish_instance();
  return r;
}

// On separative s every Omega_S component is cancellative.
[[nodiscard]] inline VerificationReport verify_cor12(CayleyTable const& s) {
  VerificationReport r{"c12"};
  if (is_separative(s)) {
    auto const d = detail::try_decompose(s);
    r.record("components_cancellative",
             d && d->quotient_is_semilattice
                 && detail::all_components(*d, [](auto const& t) { return is_cancellative(t); }),
             s);
  }
  r.finish_instance();
  return r;
}

// On quasi-separative weakly balanced s every component is weakly
// cancellative.
[[nodiscard]] inline VerificationReport verify_cor15(CayleyTable const& s) {
  VerificationReport r{"c15"};
  if (is_quasi_separative(s) && is_weakly_balanced(s)) {
    auto const d = detail::try_decompose(s);
    r.record("components_weakly_cancellative",
             d && d->quotient_is_semilattice
                 && detail::all_components(*d,
                                           [](auto const& t) { return is_weakly_cancellative(t); }),
             s);
  }
  r.finish_instance();
  return r;
}

// Whether the Omega_S decomposition exhibits s as a semilattice of weakly
// cancellative semigroups.
[[nodiscard]] inline bool
is_semilattice_of_weakly_cancellative(std::optional<SemilatticeDecomposition> const& d) {
  return d && d->quotient_is_semilattice
         && detail::all_components(*d, [](auto const& t) { return is_weakly_cancellative(t); });
}

// A semilattice of weakly cancellative semigroups satisfies cond14.
[[nodiscard]] inline VerificationReport verify_eq14_claim(CayleyTable const& s) {
  VerificationReport r{"eq14"};
  if (is_semilattice_of_weakly_cancellative(detail::try_decompose(s))) {
    auto const v = satisfies_cond14(s);
    r.record("cond14", v.holds, s, detail::describe(v));
  }
  r.finish_instance();
  return r;
}

// The two quasi-separativity forms and the equalizer-relation formulation
// agree.
[[nodiscard]] inline VerificationReport verify_drazin(CayleyTable const& s) {
  VerificationReport r{"drazin"};
  bool const sym    = detail::quasi_separative_symmetric_form(s).holds;
  bool const drazin = detail::quasi_separative_drazin_form(s).holds;
  bool const rel    = quasi_separative_via_relations(s).holds;
  r.record("symmetric_vs_three_term", sym == drazin, s);
  r.record("symmetric_vs_equalizer", sym == rel, s);
  r.finish_instance();
  return r;
}

// The four inclusions between equalizer relations, the lemma
// Omega & E(a) <= Omega & E(ab) & E(ba) for every admissible Omega, and that
// E(a), F(a) are equivalences.
[[nodiscard]] inline VerificationReport verify_relation_laws(CayleyTable const& s) {
  VerificationReport          r{"relations"};
  auto const                  n = s.size();
  std::vector<BinaryRelation> E, F;
  for (element_id a = 0; a < n; ++a) {
    E.push_back(relation_E(s, a));
    F.push_back(relation_F(s, a));
  }
  auto is_equivalence = [n](BinaryRelation const& rel) {
    for (element_id x = 0; x < n; ++x) {
      if (!rel.contains(x, x)) {
        return false;
      }
      for (element_id y = 0; y < n; ++y) {
        if (rel.contains(x, y) != rel.contains(y, x)) {
          return false;
        }
        for (element_id z = 0; z < n; ++z) {
          if (rel.contains(x, y) && rel.contains(y, z) && !rel.contains(x, z)) {
            return false;
          }
        }
      }
    }
    return true;
  };
  bool equivalences = true;
  for (element_id a = 0; a < n; ++a) {
    equivalences = equivalences && is_equivalence(E[a]) && is_equivalence(F[a]);
  }
  r.record("E_F_equivalences", equivalences, s);
  bool law4 = true, law5 = true, law6 = true, law7 = true;
  for (element_id a = 0; a < n; ++a) {
    for (element_id b = 0; b < n; ++b) {
      auto const ab = s(a, b);
      law4          = law4 && E[b].is_subset_of(E[ab]);
      law5          = law5 && F[a].is_subset_of(F[ab]);
      law6          = law6 && translate_left(s, b, E[ab]).is_subset_of(E[a]);
      law7          = law7 && translate_right(s, F[ab], a).is_subset_of(F[b]);
    }
  }
  r.record("eq4_E(b)_in_E(ab)", law4, s);
  r.record("eq5_F(a)_in_F(ab)", law5, s);
  r.record("eq6_bE(ab)_in_E(a)", law6, s);
  r.record("eq7_F(ab)a_in_F(b)", law7, s);
  for (auto const& [name, omega] : detail::admissible_omegas(s)) {
    bool ok = true;
    for (element_id a = 0; a < n && ok; ++a) {
      auto const lhs = omega & E[a];
      for (element_id b = 0; b < n && ok; ++b) {
        ok = lhs.is_subset_of(omega & E[s(a, b)] & E[s(b, a)]);
      }
    }
    r.record("lemma3(" + std::string(name) + ")", ok, s);
  }
  r.finish_instance();
  return r;
}

// One arrow of the implication diagram between semigroup classes.
struct DiagramArrow {
  std::string_view name;
  bool (*antecedent)(PropertyProfile const&);
  bool (*consequent)(PropertyProfile const&);
};

[[nodiscard]] inline std::vector<DiagramArrow> const& diagram_arrows() {
  using P = PropertyProfile;
  static std::vector<DiagramArrow> const arrows{
      {"separative=>qs&wb",
       [](P const& p) { return p.separative.holds; },
       [](P const& p) { return p.quasi_separative.holds && p.weakly_balanced.holds; }},
      {"qs&wb=>qs",
       [](P const& p) { return p.quasi_separative.holds && p.weakly_balanced.holds; },
       [](P const& p) { return p.quasi_separative.holds; }},
      {"cancellative=>weakly_cancellative",
       [](P const& p) { return p.cancellative.holds; },
       [](P const& p) { return p.weakly_cancellative.holds; }},
      {"weakly_cancellative=>qs&qc",
       [](P const& p) { return p.weakly_cancellative.holds; },
       [](P const& p) { return p.quasi_separative.holds && p.quasi_cancellative.holds; }},
      {"cancellative=>separative",
       [](P const& p) { return p.cancellative.holds; },
       [](P const& p) { return p.separative.holds; }},
      {"weakly_cancellative=>qs&wb",
       [](P const& p) { return p.weakly_cancellative.holds; },
       [](P const& p) { return p.quasi_separative.holds && p.weakly_balanced.holds; }},
      {"qs&qc=>qs",
       [](P const& p) { return p.quasi_separative.holds && p.quasi_cancellative.holds; },
       [](P const& p) { return p.quasi_separative.holds; }},
  };
  return arrows;
}

// Every diagram arrow on s; counts tables separating each arrow (consequent
// true, antecedent false) as strictness data.
[[nodiscard]] inline VerificationReport verify_diagram(CayleyTable const& s) {
  VerificationReport r{"diagram"};
  auto const         p = classify(s);
  for (auto const& arrow : diagram_arrows()) {
    bool const ante = arrow.antecedent(p);
    bool const cons = arrow.consequent(p);
    if (ante) {
      r.record(arrow.name, cons, s);
    } else {
      (void) r.tally(arrow.name);
      if (cons) {
        ++r.counter("strict:" + std::string(arrow.name));
      }
    }
  }
  r.finish_instance();
  return r;
}

struct NamedTable {
  std::string name;
  CayleyTable table;
};

// The finite witnesses used to separate the classes of the diagram.
[[nodiscard]] inline std::vector<NamedTable> named_witnesses() {
  return {{"trivial", zoo::left_zero(1)},
          {"cyclic_group(2)", zoo::cyclic_group(2)},
          {"left_zero(2)", zoo::left_zero(2)},
          {"right_zero(2)", zoo::right_zero(2)},
          {"rectangular_band(2,2)", zoo::rectangular_band(2, 2)},
          {"null(2)", zoo::null_semigroup(2)},
          {"chain(2)", zoo::chain_semilattice(2)},
          {"monogenic(3,1)", zoo::monogenic(3, 1)}};
}

// For each arrow, the named witnesses in which the consequent holds and the
// antecedent fails.
[[nodiscard]] inline std::vector<std::pair<std::string, std::vector<std::string>>>
diagram_strictness() {
  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  auto const                                                   named = named_witnesses();
  std::vector<PropertyProfile>                                 profiles;
  for (auto const& nt : named) {
    profiles.push_back(classify(nt.table));
  }
  for (auto const& arrow : diagram_arrows()) {
    std::vector<std::string> separators;
    for (std::size_t k = 0; k < named.size(); ++k) {
      if (arrow.consequent(profiles[k]) && !arrow.antecedent(profiles[k])) {
        separators.push_back(named[k].name);
      }
    }
    out.emplace_back(std::string(arrow.name), std::move(separators));
  }
  return out;
}

using CheckFunction = VerificationReport (*)(CayleyTable const&);

struct CheckEntry {
  std::string_view name;
  CheckFunction    run;
};

// Stable order used by "all".
[[nodiscard]] inline std::vector<CheckEntry> const& checks() {
  static std::vector<CheckEntry> const table{{"t4", verify_theorem4},
                                             {"t6_10", verify_theorem6_10},
                                             {"p7", verify_prop7},
                                             {"p11", verify_prop11},
                                             {"p14", verify_prop14},
                                             {"c12", verify_cor12},
                                             {"c15", verify_cor15},
                                             {"eq14", verify_eq14_claim},
                                             {"drazin", verify_drazin},
                                             {"relations", verify_relation_laws},
                                             {"diagram", verify_diagram}};
  return table;
}

// "all" or a single check name; "t6" and "t10" are aliases for "t6_10".
[[nodiscard]] inline std::vector<CheckEntry> select_checks(std::string_view selector) {
  if (selector == "all") {
    return checks();
  }
  if (selector == "t6" || selector == "t10") {
    selector = "t6_10";
  }
  for (auto const& c : checks()) {
    if (c.name == selector) {
      return {c};
    }
  }
  throw Error("unknown check '" + std::string(selector) + "'");
}

// Runs the selected checks on every table; one merged report per check, in
// selection order. The result does not depend on `workers`.
[[nodiscard]] inline std::vector<VerificationReport>
verify_corpus(std::span<CayleyTable const> corpus,
              std::vector<CheckEntry> const& selected,
              std::size_t                    workers = 1) {
  std::vector<std::vector<VerificationReport>> partial(std::max<std::size_t>(workers, 1));
  auto const used = parallel_chunks(
      corpus.size(), workers, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        auto& out = partial[chunk];
        for (auto const& c : selected) {
          out.push_back(VerificationReport{std::string(c.name)});
        }
        for (std::size_t k = begin; k < end; ++k) {
          for (std::size_t c = 0; c < selected.size(); ++c) {
            out[c].merge(selected[c].run(corpus[k]));
          }
        }
      });
  std::vector<VerificationReport> merged;
  for (auto const& c : selected) {
    merged.push_back(VerificationReport{std::string(c.name)});
  }
  for (std::size_t w = 0; w < used; ++w) {
    for (std::size_t c = 0; c < selected.size(); ++c) {
      merged[c].merge(partial[w][c]);
    }
  }
  return merged;
}

struct ConverseSearchResult {
  std::size_t                max_order;
  std::vector<std::size_t>   examined;  // canonical tables scanned per order
  std::optional<CayleyTable> counterexample;
};

// Whether s is quasi-separative, its Omega_S components are all weakly
// cancellative, and s is not weakly balanced.
[[nodiscard]] inline bool is_cor15_converse_counterexample(CayleyTable const& s) {
  return is_quasi_separative(s) && !is_weakly_balanced(s)
         && is_semilattice_of_weakly_cancellative(detail::try_decompose(s));
}

// Scans canonical (iso + anti-iso) semigroups of order 1..max_order in
// enumeration order and stops at the first counterexample.
[[nodiscard]] inline ConverseSearchResult search_cor15_converse(std::size_t max_order,
                                                                std::size_t workers = 1) {
  detail::check_order(max_order);
  ConverseSearchResult result{max_order, {}, std::nullopt};
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto const               corpus = enumerate_canonical(n, CanonicalMode::iso_anti);
    std::vector<std::size_t> first_hit(std::max<std::size_t>(workers, 1), corpus.size());
    parallel_chunks(corpus.size(),
                    workers,
                    [&](std::size_t chunk, std::size_t begin, std::size_t end) {
                      for (std::size_t k = begin; k < end; ++k) {
                        if (is_cor15_converse_counterexample(corpus[k])) {
                          first_hit[chunk] = k;
                          return;
                        }
                      }
                    });
    auto const hit = *std::min_element(first_hit.begin(), first_hit.end());
    if (hit < corpus.size()) {
      result.examined.push_back(hit + 1);
      result.counterexample = corpus[hit];
      return result;
    }
    result.examined.push_back(corpus.size());
  }
  return result;
}

}  // namespace qsep

#endif  // QSEP_VERIFICATION_HPP
