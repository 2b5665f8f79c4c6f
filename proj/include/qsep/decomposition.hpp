#ifndef QSEP_DECOMPOSITION_HPP
#define QSEP_DECOMPOSITION_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "core.hpp"
#include "relation.hpp"

namespace qsep {

// One class of the decomposition. `elements[k]` is the source index of local
// element k. `table` is present only when the class is closed under the
// source product.
struct Component {
  std::vector<element_id>    elements;
  std::optional<CayleyTable> table;
};

struct SemilatticeDecomposition {
  CayleyTable            source;
  BinaryRelation         omega;
  Congruence             congruence;
  QuotientSemigroup      quotient;
  std::vector<Component> components;
  bool                   quotient_is_semilattice;

  [[nodiscard]] bool components_closed() const {
    for (auto const& c : components) {
      if (!c.table) {
        return false;
      }
    }
    return true;
  }
};

// Restriction of s to `elements` (sorted), or nullopt if not closed.
[[nodiscard]] inline std::optional<CayleyTable>
subsemigroup(CayleyTable const& s, std::vector<element_id> const& elements) {
  std::vector<long long> local(s.size(), -1);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    local[elements[k]] = static_cast<long long>(k);
  }
  auto const              m = elements.size();
  std::vector<element_id> out(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto const p = local[s(elements[i], elements[j])];
      if (p < 0) {
        return std::nullopt;
      }
      out[i * m + j] = static_cast<element_id>(p);
    }
  }
  return CayleyTable(unchecked, m, std::move(out));
}

// Omega_S, its congruence, the quotient and the component subsemigroups.
// Accepts any semigroup; throws NotACongruence if ~ fails compatibility,
// which cannot happen for quasi-separative input.
[[nodiscard]] inline SemilatticeDecomposition decompose(CayleyTable const& s) {
  auto omega = omega_S(s);
  auto cong  = sim_omega(s, omega);
  auto quot  = quotient(s, cong);
  std::vector<Component> components;
  for (auto const& cls : cong.classes()) {
    components.push_back({cls, subsemigroup(s, cls)});
  }
  bool const semilattice = is_semilattice(quot.quotient);
  return {s,
          std::move(omega),
          std::move(cong),
          std::move(quot),
          std::move(components),
          semilattice};
}

}  // namespace qsep

#endif  // QSEP_DECOMPOSITION_HPP
