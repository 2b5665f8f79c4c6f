#ifndef QSEP_CORE_HPP
#define QSEP_CORE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsep {

// Dense 0-based index of an element of a finite semigroup.
using element_id = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidShape : public Error {
 public:
  using Error::Error;
};

class OutOfRangeEntry : public Error {
 public:
  OutOfRangeEntry(std::size_t row, std::size_t col, long long value)
      : Error("entry at (" + std::to_string(row) + "," + std::to_string(col)
              + ") = " + std::to_string(value) + " is out of range"),
        row(row),
        col(col),
        value(value) {}
  std::size_t row;
  std::size_t col;
  long long value;
};

class NotAssociative : public Error {
 public:
  NotAssociative(element_id i, element_id j, element_id k)
      : Error("not associative at triple (" + std::to_string(i) + ","
              + std::to_string(j) + "," + std::to_string(k) + ")"),
        i(i),
        j(j),
        k(k) {}
  element_id i;
  element_id j;
  element_id k;
};

class EmptyWord : public Error {
 public:
  EmptyWord() : Error("cannot evaluate the empty word") {}
};

struct unchecked_t {
  explicit unchecked_t() = default;
};
inline constexpr unchecked_t unchecked{};

// A finite semigroup given by its full multiplication table, stored row-major:
// entry (i, j) is the product i * j. Immutable once built.
class CayleyTable {
 public:
  // Builds without closure or associativity checks. Only for producers that
  // guarantee both (zoo constructors, the enumerator, quotients).
  CayleyTable(unchecked_t, std::size_t n, std::vector<element_id> entries)
      : n_(n), entries_(std::move(entries)) {}

  [[nodiscard]] std::size_t size() const noexcept {
    return n_;
  }

  [[nodiscard]] element_id operator()(element_id x, element_id y) const {
    return entries_[x * n_ + y];
  }

  [[nodiscard]] std::span<element_id const> row(element_id x) const {
    return {entries_.data() + x * n_, n_};
  }

  [[nodiscard]] std::span<element_id const> entries() const noexcept {
    return entries_;
  }

  // Anti-isomorphic copy: (x, y) -> y * x.
  [[nodiscard]] CayleyTable transposed() const {
    std::vector<element_id> out(entries_.size());
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        out[j * n_ + i] = entries_[i * n_ + j];
      }
    }
    return {unchecked, n_, std::move(out)};
  }

  // Relabels element x as perm[x].
  [[nodiscard]] CayleyTable relabeled(std::span<element_id const> perm) const {
    std::vector<element_id> out(entries_.size());
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        out[perm[i] * n_ + perm[j]] = perm[entries_[i * n_ + j]];
      }
    }
    return {unchecked, n_, std::move(out)};
  }

  friend bool operator==(CayleyTable const&, CayleyTable const&) = default;

 private:
  std::size_t n_;
  std::vector<element_id> entries_;
};

// First triple (i, j, k) in lexicographic order with (ij)k != i(jk).
[[nodiscard]] inline std::optional<std::array<element_id, 3>>
find_non_associative_triple(std::size_t n, std::span<element_id const> t) {
  for (element_id i = 0; i < n; ++i) {
    for (element_id j = 0; j < n; ++j) {
      element_id const ij = t[i * n + j];
      for (element_id k = 0; k < n; ++k) {
        if (t[ij * n + k] != t[i * n + t[j * n + k]]) {
          return std::array<element_id, 3>{i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

// Checks closure and associativity of a flat row-major n*n grid.
[[nodiscard]] inline CayleyTable validate(std::size_t                   n,
                                          std::span<long long const> grid) {
  if (n == 0) {
    throw InvalidShape("a semigroup needs at least one element");
  }
  if (grid.size() != n * n) {
    throw InvalidShape("expected " + std::to_string(n * n) + " entries, got "
                       + std::to_string(grid.size()));
  }
  std::vector<element_id> entries(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) {
    if (grid[p] < 0 || static_cast<unsigned long long>(grid[p]) >= n) {
      throw OutOfRangeEntry(p / n, p % n, grid[p]);
    }
    entries[p] = static_cast<element_id>(grid[p]);
  }
  if (auto w = find_non_associative_triple(n, entries)) {
    throw NotAssociative((*w)[0], (*w)[1], (*w)[2]);
  }
  return {unchecked, n, std::move(entries)};
}

[[nodiscard]] inline CayleyTable
validate(std::vector<std::vector<long long>> const& rows) {
  std::size_t const  n = rows.size();
  std::vector<long long> flat;
  flat.reserve(n * n);
  for (auto const& r : rows) {
    if (r.size() != n) {
      throw InvalidShape("grid is not square");
    }
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return validate(n, flat);
}

[[nodiscard]] inline CayleyTable
validate(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<long long>> v;
  for (auto const& r : rows) {
    v.emplace_back(r);
  }
  return validate(v);
}

// S^1: a CayleyTable together with a two-sided identity.
struct MonoidTable {
  CayleyTable table;
  element_id  identity;
};

// Always adjoins a fresh identity as element n, even if s is already a monoid.
[[nodiscard]] inline MonoidTable adjoin_identity(CayleyTable const& s) {
  std::size_t const       n = s.size();
  std::size_t const       m = n + 1;
  std::vector<element_id> out(m * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[i * m + j] = s(i, j);
    }
  }
  auto const e = static_cast<element_id>(n);
  for (element_id x = 0; x < m; ++x) {
    out[e * m + x] = x;
    out[x * m + e] = x;
  }
  return {CayleyTable(unchecked, m, std::move(out)), e};
}

// Left-to-right evaluation of a word.
[[nodiscard]] inline element_id product(CayleyTable const&          s,
                                        std::span<element_id const> word) {
  if (word.empty()) {
    throw EmptyWord();
  }
  element_id acc = word.front();
  for (auto x : word.subspan(1)) {
    acc = s(acc, x);
  }
  return acc;
}

[[nodiscard]] inline element_id product(CayleyTable const&                s,
                                        std::initializer_list<element_id> w) {
  return product(s, std::span<element_id const>(w.begin(), w.size()));
}

[[nodiscard]] inline bool is_commutative(CayleyTable const& s) {
  for (element_id i = 0; i < s.size(); ++i) {
    for (element_id j = i + 1; j < s.size(); ++j) {
      if (s(i, j) != s(j, i)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qsep

#endif  // QSEP_CORE_HPP
