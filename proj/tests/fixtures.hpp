// Shared small semigroups and test-only oracles. Nothing here calls into the
// library code paths it is used to check.
#ifndef QSEP_TESTS_FIXTURES_HPP
#define QSEP_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "qsep/core.hpp"

namespace qsep::test {

inline CayleyTable L2() {
  return validate({{0, 0}, {1, 1}});
}
inline CayleyTable R2() {
  return validate({{0, 1}, {0, 1}});
}
inline CayleyTable N2() {
  return validate({{0, 0}, {0, 0}});
}
inline CayleyTable Z2() {
  return validate({{0, 1}, {1, 0}});
}
// min as the product
inline CayleyTable chain2() {
  return validate({{0, 0}, {0, 1}});
}
inline CayleyTable trivial() {
  return validate({{0}});
}
// <c | c^4 = c^3>, element k is c^(k+1)
inline CayleyTable C31() {
  return validate({{1, 2, 2}, {2, 2, 2}, {2, 2, 2}});
}

// Plain associativity check on a flat grid.
inline bool brute_associative(std::size_t n, std::vector<element_id> const& t) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (t[t[i * n + j] * n + k] != t[i * n + t[j * n + k]]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Every associative grid of order n, by counting through all n^(n^2) grids.
inline std::vector<std::vector<element_id>> brute_force_semigroups(std::size_t n) {
  std::vector<std::vector<element_id>> out;
  std::size_t                          total = 1;
  for (std::size_t k = 0; k < n * n; ++k) {
    total *= n;
  }
  std::vector<element_id> t(n * n);
  for (std::size_t code = 0; code < total; ++code) {
    // most significant digit first, so the output is in lexicographic order
    std::size_t c = code;
    for (std::size_t p = n * n; p-- > 0;) {
      t[p] = static_cast<element_id>(c % n);
      c /= n;
    }
    if (brute_associative(n, t)) {
      out.push_back(t);
    }
  }
  return out;
}

// Number of orbits of `tables` under relabeling (and transposition when
// `anti`), by union-find over table indices.
inline std::size_t count_orbits(std::size_t n, std::vector<std::vector<element_id>> const& tables,
                                bool anti) {
  std::vector<std::size_t> parent(tables.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  auto index_of = [&](std::vector<element_id> const& t) {
    auto it = std::lower_bound(tables.begin(), tables.end(), t);
    return static_cast<std::size_t>(it - tables.begin());
  };
  std::vector<element_id> perm(n);
  for (std::size_t k = 0; k < tables.size(); ++k) {
    auto const& t = tables[k];
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (int flip = 0; flip < (anti ? 2 : 1); ++flip) {
        std::vector<element_id> img(n * n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            element_id const v = flip ? t[j * n + i] : t[i * n + j];
            img[perm[i] * n + perm[j]] = perm[v];
          }
        }
        parent[find(index_of(img))] = find(k);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::size_t roots = 0;
  for (std::size_t k = 0; k < tables.size(); ++k) {
    roots += find(k) == k ? 1 : 0;
  }
  return roots;
}

// Product in S^1 with the adjoined identity modelled as nullopt.
using maybe = std::optional<element_id>;
inline maybe mul1(CayleyTable const& s, maybe x, maybe y) {
  if (!x) {
    return y;
  }
  if (!y) {
    return x;
  }
  return s(*x, *y);
}

inline std::vector<maybe> s_one(CayleyTable const& s) {
  std::vector<maybe> out{std::nullopt};
  for (element_id x = 0; x < s.size(); ++x) {
    out.emplace_back(x);
  }
  return out;
}

// Omega_S membership straight from its definition.
inline bool oracle_in_omega_S(CayleyTable const& s, element_id x, element_id y) {
  auto const one = s_one(s);
  for (auto a : one) {
    for (auto b : one) {
      bool const p = mul1(s, mul1(s, a, x), b) == mul1(s, mul1(s, a, y), b);
      bool const q = mul1(s, mul1(s, x, b), a) == mul1(s, mul1(s, y, b), a);
      bool const r = mul1(s, mul1(s, b, a), x) == mul1(s, mul1(s, b, a), y);
      if (p != q || q != r) {
        return false;
      }
    }
  }
  return true;
}

// Quasi-cancellativity straight from its definition.
inline bool oracle_quasi_cancellative(CayleyTable const& s) {
  auto const one = s_one(s);
  for (element_id b = 0; b < s.size(); ++b) {
    for (element_id c = 0; c < s.size(); ++c) {
      if (b == c) {
        continue;
      }
      bool premise = true;
      for (auto x : one) {
        for (auto y : one) {
          bool const p = mul1(s, mul1(s, x, b), y) == mul1(s, mul1(s, x, c), y);
          bool const q = mul1(s, mul1(s, y, x), b) == mul1(s, mul1(s, y, x), c);
          bool const r = mul1(s, mul1(s, b, y), x) == mul1(s, mul1(s, c, y), x);
          premise      = premise && p == q && q == r;
        }
      }
      bool left = false;
      for (element_id a = 0; a < s.size(); ++a) {
        left = left || s(a, b) == s(a, c);
      }
      if (premise && left) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qsep::test

#endif  // QSEP_TESTS_FIXTURES_HPP
