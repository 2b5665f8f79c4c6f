#ifndef QSEP_ENUMERATION_HPP
#define QSEP_ENUMERATION_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"

namespace qsep {

class OrderTooLarge : public Error {
 public:
  explicit OrderTooLarge(std::size_t n)
      : Error("order " + std::to_string(n) + " is outside the supported range 1.."
              + std::to_string(5)) {}
};

inline constexpr std::size_t max_enumeration_order = 5;

enum class CanonicalMode { iso, iso_anti };

namespace detail {

  inline constexpr std::uint8_t unset = 0xff;

  class Enumerator {
   public:
    explicit Enumerator(std::size_t n) : n_(n) {
      cells_.fill(unset);
    }

    template <typename Visitor>
    void run(Visitor& visit) {
      fill(0, visit);
    }

   private:
    [[nodiscard]] std::uint8_t at(std::size_t x, std::size_t y) const {
      return cells_[x * n_ + y];
    }

    // False only if every cell needed for (xy)z = x(yz) is known and the two
    // sides differ.
    [[nodiscard]] bool consistent(std::size_t x, std::size_t y, std::size_t z) const {
      auto const xy = at(x, y);
      auto const yz = at(y, z);
      if (xy == unset || yz == unset) {
        return true;
      }
      auto const lhs = at(xy, z);
      auto const rhs = at(x, yz);
      return lhs == unset || rhs == unset || lhs == rhs;
    }

    // Every triple whose four cells include (i, j); a triple becomes fully
    // determined exactly when its last cell is filled, so checking these on
    // each assignment checks every triple once it is complete.
    [[nodiscard]] bool consistent_after(std::size_t i, std::size_t j) const {
      for (std::size_t k = 0; k < n_; ++k) {
        if (!consistent(i, j, k) || !consistent(k, i, j)) {
          return false;
        }
      }
      for (std::size_t u = 0; u < n_; ++u) {
        for (std::size_t v = 0; v < n_; ++v) {
          if (at(u, v) == i && !consistent(u, v, j)) {
            return false;
          }
          if (at(u, v) == j && !consistent(i, u, v)) {
            return false;
          }
        }
      }
      return true;
    }

    template <typename Visitor>
    void fill(std::size_t cell, Visitor& visit) {
      if (cell == n_ * n_) {
        std::vector<element_id> entries(cells_.begin(), cells_.begin() + n_ * n_);
        visit(CayleyTable(unchecked, n_, std::move(entries)));
        return;
      }
      std::size_t const i = cell / n_;
      std::size_t const j = cell % n_;
      for (std::uint8_t v = 0; v < n_; ++v) {
        cells_[cell] = v;
        if (consistent_after(i, j)) {
          fill(cell + 1, visit);
        }
      }
      cells_[cell] = unset;
    }

    std::size_t                                                       n_;
    std::array<std::uint8_t, max_enumeration_order * max_enumeration_order> cells_{};
  };

  inline void check_order(std::size_t n) {
    if (n == 0 || n > max_enumeration_order) {
      throw OrderTooLarge(n);
    }
  }

}  // namespace detail

// Calls visit(table) for every associative n x n table, in lexicographic
// row-major order.
template <typename Visitor>
void for_each_labeled(std::size_t n, Visitor&& visit) {
  detail::check_order(n);
  detail::Enumerator e(n);
  e.run(visit);
}

[[nodiscard]] inline std::vector<CayleyTable> enumerate_labeled(std::size_t n) {
  std::vector<CayleyTable> out;
  for_each_labeled(n, [&out](CayleyTable t) { out.push_back(std::move(t)); });
  return out;
}

// The lexicographically least row-major table over all relabelings (and, in
// iso_anti mode, all relabelings of the transpose).
class CanonicalForm {
 public:
  CanonicalForm(std::size_t n, std::vector<element_id> entries)
      : n_(n), entries_(std::move(entries)) {}

  [[nodiscard]] std::size_t size() const noexcept {
    return n_;
  }
  [[nodiscard]] std::vector<element_id> const& entries() const noexcept {
    return entries_;
  }
  [[nodiscard]] CayleyTable table() const {
    return {unchecked, n_, entries_};
  }

  friend auto operator<=>(CanonicalForm const&, CanonicalForm const&) = default;

 private:
  std::size_t             n_;
  std::vector<element_id> entries_;
};

[[nodiscard]] inline CanonicalForm canonical_form(CayleyTable const& s, CanonicalMode mode) {
  auto const              n = s.size();
  std::vector<element_id> perm(n);
  std::vector<element_id> best;
  std::vector<element_id> candidate(n * n);
  auto consider = [&](CayleyTable const& t) {
    std::iota(perm.begin(), perm.end(), element_id{0});
    do {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          candidate[perm[i] * n + perm[j]] = perm[t(i, j)];
        }
      }
      if (best.empty() || candidate < best) {
        best = candidate;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  consider(s);
  if (mode == CanonicalMode::iso_anti) {
    consider(s.transposed());
  }
  return {n, std::move(best)};
}

// One table per isomorphism (or iso/anti-iso) class, each given as its
// canonical form, in order of first appearance in the labeled stream.
[[nodiscard]] inline std::vector<CayleyTable> enumerate_canonical(std::size_t   n,
                                                                  CanonicalMode mode) {
  std::set<CanonicalForm>  seen;
  std::vector<CayleyTable> out;
  for_each_labeled(n, [&](CayleyTable const& t) {
    auto cf = canonical_form(t, mode);
    if (seen.insert(cf).second) {
      out.push_back(cf.table());
    }
  });
  return out;
}

}  // namespace qsep

#endif  // QSEP_ENUMERATION_HPP
