#ifndef QSEP_RELATION_HPP
#define QSEP_RELATION_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "core.hpp"

namespace qsep {

// A binary relation on {0, ..., n-1} stored as an n x n bit matrix, one
// word-aligned bit row per first component.
class BinaryRelation {
 public:
  using word_type = std::uint64_t;

  explicit BinaryRelation(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  static BinaryRelation diagonal(std::size_t n) {
    BinaryRelation r(n);
    for (element_id x = 0; x < n; ++x) {
      r.insert(x, x);
    }
    return r;
  }

  static BinaryRelation full(std::size_t n) {
    BinaryRelation r(n);
    for (element_id x = 0; x < n; ++x) {
      for (element_id y = 0; y < n; ++y) {
        r.insert(x, y);
      }
    }
    return r;
  }

  [[nodiscard]] std::size_t carrier_size() const noexcept {
    return n_;
  }

  [[nodiscard]] bool contains(element_id x, element_id y) const {
    return (bits_[x * words_ + y / 64] >> (y % 64)) & 1U;
  }

  void insert(element_id x, element_id y) {
    bits_[x * words_ + y / 64] |= word_type{1} << (y % 64);
  }

  void erase(element_id x, element_id y) {
    bits_[x * words_ + y / 64] &= ~(word_type{1} << (y % 64));
  }

  [[nodiscard]] std::size_t size() const {
    std::size_t c = 0;
    for (auto w : bits_) {
      c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
  }

  [[nodiscard]] bool empty() const {
    for (auto w : bits_) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  [[nodiscard]] bool is_subset_of(BinaryRelation const& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if ((bits_[i] & ~other.bits_[i]) != 0) {
        return false;
      }
    }
    return true;
  }

  BinaryRelation& operator&=(BinaryRelation const& other) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      bits_[i] &= other.bits_[i];
    }
    return *this;
  }

  BinaryRelation& operator|=(BinaryRelation const& other) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      bits_[i] |= other.bits_[i];
    }
    return *this;
  }

  friend BinaryRelation operator&(BinaryRelation lhs, BinaryRelation const& rhs) {
    lhs &= rhs;
    return lhs;
  }

  friend BinaryRelation operator|(BinaryRelation lhs, BinaryRelation const& rhs) {
    lhs |= rhs;
    return lhs;
  }

  friend bool operator==(BinaryRelation const&, BinaryRelation const&) = default;

  // Pairs in lexicographic order.
  [[nodiscard]] std::vector<std::pair<element_id, element_id>> pairs() const {
    std::vector<std::pair<element_id, element_id>> out;
    for (element_id x = 0; x < n_; ++x) {
      for (element_id y = 0; y < n_; ++y) {
        if (contains(x, y)) {
          out.emplace_back(x, y);
        }
      }
    }
    return out;
  }

  [[nodiscard]] std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (auto w : bits_) {
      h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  std::size_t            n_;
  std::size_t            words_;
  std::vector<word_type> bits_;
};

struct BinaryRelationHash {
  std::size_t operator()(BinaryRelation const& r) const noexcept {
    return r.hash();
  }
};

// E(a) = {(x, y) : ax = ay}
[[nodiscard]] inline BinaryRelation relation_E(CayleyTable const& s, element_id a) {
  BinaryRelation r(s.size());
  auto const     row = s.row(a);
  for (element_id x = 0; x < s.size(); ++x) {
    for (element_id y = 0; y < s.size(); ++y) {
      if (row[x] == row[y]) {
        r.insert(x, y);
      }
    }
  }
  return r;
}

// F(a) = {(x, y) : xa = ya}
[[nodiscard]] inline BinaryRelation relation_F(CayleyTable const& s, element_id a) {
  BinaryRelation r(s.size());
  for (element_id x = 0; x < s.size(); ++x) {
    for (element_id y = 0; y < s.size(); ++y) {
      if (s(x, a) == s(y, a)) {
        r.insert(x, y);
      }
    }
  }
  return r;
}

// xR = {(xa, xb) : (a, b) in R}
[[nodiscard]] inline BinaryRelation
translate_left(CayleyTable const& s, element_id x, BinaryRelation const& r) {
  BinaryRelation out(s.size());
  for (auto [a, b] : r.pairs()) {
    out.insert(s(x, a), s(x, b));
  }
  return out;
}

// Rx = {(ax, bx) : (a, b) in R}
[[nodiscard]] inline BinaryRelation
translate_right(CayleyTable const& s, BinaryRelation const& r, element_id x) {
  BinaryRelation out(s.size());
  for (auto [a, b] : r.pairs()) {
    out.insert(s(a, x), s(b, x));
  }
  return out;
}

// Result of checking the three conditions a relation Omega must meet for
// ~_Omega to be a congruence:
//   eq8   Omega & E(a) == Omega & F(a)            for all a
//   eq9   b (Omega & E(ab)) is contained in Omega  for all a, b
//   eq10  (Omega & F(ab)) a is contained in Omega  for all a, b
// Each violation records the first witness found in lexicographic order.
struct OmegaReport {
  // (a, x, y): (x, y) in Omega and in exactly one of E(a), F(a).
  std::optional<std::array<element_id, 3>> eq8_violation;
  // (a, b, x, y): (x, y) in Omega & E(ab) but (bx, by) not in Omega.
  std::optional<std::array<element_id, 4>> eq9_violation;
  // (a, b, x, y): (x, y) in Omega & F(ab) but (xa, ya) not in Omega.
  std::optional<std::array<element_id, 4>> eq10_violation;

  [[nodiscard]] bool satisfies_eq8() const noexcept {
    return !eq8_violation.has_value();
  }
  [[nodiscard]] bool satisfies_eq9() const noexcept {
    return !eq9_violation.has_value();
  }
  [[nodiscard]] bool satisfies_eq10() const noexcept {
    return !eq10_violation.has_value();
  }
  [[nodiscard]] bool satisfies_all() const noexcept {
    return satisfies_eq8() && satisfies_eq9() && satisfies_eq10();
  }
};

[[nodiscard]] inline OmegaReport check_omega_conditions(CayleyTable const&    s,
                                                        BinaryRelation const& omega) {
  OmegaReport      report;
  auto const       n     = s.size();
  auto const       pairs = omega.pairs();
  for (element_id a = 0; a < n && !report.eq8_violation; ++a) {
    for (auto [x, y] : pairs) {
      if ((s(a, x) == s(a, y)) != (s(x, a) == s(y, a))) {
        report.eq8_violation = std::array<element_id, 3>{a, x, y};
        break;
      }
    }
  }
  for (element_id a = 0; a < n && !report.eq9_violation; ++a) {
    for (element_id b = 0; b < n && !report.eq9_violation; ++b) {
      element_id const ab = s(a, b);
      for (auto [x, y] : pairs) {
        if (s(ab, x) == s(ab, y) && !omega.contains(s(b, x), s(b, y))) {
          report.eq9_violation = std::array<element_id, 4>{a, b, x, y};
          break;
        }
      }
    }
  }
  for (element_id a = 0; a < n && !report.eq10_violation; ++a) {
    for (element_id b = 0; b < n && !report.eq10_violation; ++b) {
      element_id const ab = s(a, b);
      for (auto [x, y] : pairs) {
        if (s(x, ab) == s(y, ab) && !omega.contains(s(x, a), s(y, a))) {
          report.eq10_violation = std::array<element_id, 4>{a, b, x, y};
          break;
        }
      }
    }
  }
  return report;
}

namespace detail {

  // True iff for all a, b in S^1 the statements axb = ayb, xba = yba and
  // bax = bay are all true or all false.
  [[nodiscard]] inline bool in_omega_S(MonoidTable const& m, element_id x, element_id y) {
    auto const& t = m.table;
    auto const  n = t.size();
    for (element_id a = 0; a < n; ++a) {
      for (element_id b = 0; b < n; ++b) {
        bool const first  = t(t(a, x), b) == t(t(a, y), b);
        bool const second = t(t(x, b), a) == t(t(y, b), a);
        bool const third  = t(t(b, a), x) == t(t(b, a), y);
        if (first != second || second != third) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace detail

// The canonical relation Omega_S, evaluated directly from its definition with
// a and b ranging over S^1.
[[nodiscard]] inline BinaryRelation omega_S(CayleyTable const& s) {
  auto const     monoid = adjoin_identity(s);
  BinaryRelation r(s.size());
  for (element_id x = 0; x < s.size(); ++x) {
    r.insert(x, x);
    for (element_id y = x + 1; y < s.size(); ++y) {
      if (detail::in_omega_S(monoid, x, y)) {
        r.insert(x, y);
        r.insert(y, x);
      }
    }
  }
  return r;
}

}  // namespace qsep

#endif  // QSEP_RELATION_HPP
