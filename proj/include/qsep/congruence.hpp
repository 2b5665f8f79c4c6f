#ifndef QSEP_CONGRUENCE_HPP
#define QSEP_CONGRUENCE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core.hpp"
#include "relation.hpp"

namespace qsep {

class NotACongruence : public Error {
 public:
  NotACongruence(element_id a, element_id b, element_id c)
      : Error("not a congruence: " + std::to_string(a) + " ~ " + std::to_string(b)
              + " but multiplying by " + std::to_string(c)
              + " separates them"),
        a(a),
        b(b),
        c(c) {}
  element_id a;
  element_id b;
  element_id c;
};

// A partition of {0, ..., n-1}. Class indices are ordered by each class's
// minimal element.
class Congruence {
 public:
  explicit Congruence(std::vector<std::size_t> class_of)
      : class_of_(std::move(class_of)) {
    for (element_id x = 0; x < class_of_.size(); ++x) {
      if (class_of_[x] >= classes_.size()) {
        classes_.resize(class_of_[x] + 1);
      }
      classes_[class_of_[x]].push_back(x);
    }
  }

  [[nodiscard]] std::size_t carrier_size() const noexcept {
    return class_of_.size();
  }
  [[nodiscard]] std::size_t number_of_classes() const noexcept {
    return classes_.size();
  }
  [[nodiscard]] std::size_t class_of(element_id x) const {
    return class_of_[x];
  }
  [[nodiscard]] std::vector<std::size_t> const& class_map() const noexcept {
    return class_of_;
  }
  [[nodiscard]] std::vector<std::vector<element_id>> const& classes() const noexcept {
    return classes_;
  }
  [[nodiscard]] bool related(element_id x, element_id y) const {
    return class_of_[x] == class_of_[y];
  }

  friend bool operator==(Congruence const& l, Congruence const& r) {
    return l.class_of_ == r.class_of_;
  }

 private:
  std::vector<std::size_t>             class_of_;
  std::vector<std::vector<element_id>> classes_;
};

// Partition of the elements by equality of keys[x]. Classes are numbered in
// order of first occurrence, i.e. by minimal element.
[[nodiscard]] inline Congruence partition_by(std::vector<BinaryRelation> const& keys) {
  std::unordered_map<BinaryRelation, std::size_t, BinaryRelationHash> index;
  std::vector<std::size_t>                                            class_of;
  class_of.reserve(keys.size());
  for (auto const& k : keys) {
    auto [it, inserted] = index.try_emplace(k, index.size());
    class_of.push_back(it->second);
  }
  return Congruence(std::move(class_of));
}

// First (a, b, c) with a ~ b where ca and cb, or ac and bc, lie in different
// classes; b is the minimal element of the class of a.
[[nodiscard]] inline std::optional<std::array<element_id, 3>>
find_compatibility_violation(CayleyTable const& s, Congruence const& c) {
  for (element_id a = 0; a < s.size(); ++a) {
    element_id const b = c.classes()[c.class_of(a)].front();
    if (a == b) {
      continue;
    }
    for (element_id m = 0; m < s.size(); ++m) {
      if (!c.related(s(m, a), s(m, b)) || !c.related(s(a, m), s(b, m))) {
        return std::array<element_id, 3>{a, b, m};
      }
    }
  }
  return std::nullopt;
}

namespace detail {

  [[nodiscard]] inline std::vector<BinaryRelation>
  omega_meets(CayleyTable const& s, BinaryRelation const& omega, bool right) {
    std::vector<BinaryRelation> out;
    out.reserve(s.size());
    for (element_id a = 0; a < s.size(); ++a) {
      out.push_back(omega & (right ? relation_F(s, a) : relation_E(s, a)));
    }
    return out;
  }

}  // namespace detail

// a ~ b iff Omega & E(a) == Omega & E(b). Compatibility is verified
// exhaustively; throws NotACongruence when it fails.
[[nodiscard]] inline Congruence sim_omega(CayleyTable const& s, BinaryRelation const& omega) {
  Congruence c = partition_by(detail::omega_meets(s, omega, false));
  if (auto w = find_compatibility_violation(s, c)) {
    throw NotACongruence((*w)[0], (*w)[1], (*w)[2]);
  }
  return c;
}

// Whether partitioning by Omega & F(.) gives the same classes as by
// Omega & E(.).
[[nodiscard]] inline bool sim_omega_dual_check(CayleyTable const&    s,
                                               BinaryRelation const& omega) {
  return partition_by(detail::omega_meets(s, omega, false))
         == partition_by(detail::omega_meets(s, omega, true));
}

struct QuotientSemigroup {
  CayleyTable quotient;
  Congruence  origin;
};

[[nodiscard]] inline QuotientSemigroup quotient(CayleyTable const& s, Congruence const& c) {
  std::size_t const       k = c.number_of_classes();
  std::vector<element_id> entries(k * k);
  auto const&             classes = c.classes();
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) {
      entries[p * k + q]
          = static_cast<element_id>(c.class_of(s(classes[p].front(), classes[q].front())));
    }
  }
  for (element_id x = 0; x < s.size(); ++x) {
    for (element_id y = 0; y < s.size(); ++y) {
      if (c.class_of(s(x, y)) != entries[c.class_of(x) * k + c.class_of(y)]) {
        element_id const rx = classes[c.class_of(x)].front();
        element_id const ry = classes[c.class_of(y)].front();
        if (!c.related(s(x, y), s(rx, y))) {
          throw NotACongruence(x, rx, y);
        }
        throw NotACongruence(y, ry, rx);
      }
    }
  }
  return {CayleyTable(unchecked, k, std::move(entries)), c};
}

[[nodiscard]] inline bool is_band(CayleyTable const& s) {
  for (element_id x = 0; x < s.size(); ++x) {
    if (s(x, x) != x) {
      return false;
    }
  }
  return true;
}

[[nodiscard]] inline bool is_semilattice(CayleyTable const& s) {
  return is_band(s) && is_commutative(s);
}

}  // namespace qsep

#endif  // QSEP_CONGRUENCE_HPP
