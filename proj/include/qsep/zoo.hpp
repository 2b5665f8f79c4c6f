#ifndef QSEP_ZOO_HPP
#define QSEP_ZOO_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "core.hpp"

namespace qsep::zoo {

namespace detail {

  template <typename F>
  CayleyTable tabulate(std::size_t n, F&& f) {
    if (n == 0) {
      throw InvalidShape("a semigroup needs at least one element");
    }
    std::vector<element_id> out(n * n);
    for (element_id i = 0; i < n; ++i) {
      for (element_id j = 0; j < n; ++j) {
        out[i * n + j] = static_cast<element_id>(f(i, j));
      }
    }
    return {unchecked, n, std::move(out)};
  }

}  // namespace detail

[[nodiscard]] inline CayleyTable left_zero(std::size_t n) {
  return detail::tabulate(n, [](element_id x, element_id) { return x; });
}

[[nodiscard]] inline CayleyTable right_zero(std::size_t n) {
  return detail::tabulate(n, [](element_id, element_id y) { return y; });
}

// Element (i, j) has index i * q + j; (a, b)(c, d) = (a, d).
[[nodiscard]] inline CayleyTable rectangular_band(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) {
    throw InvalidShape("rectangular band dimensions must be positive");
  }
  return detail::tabulate(p * q, [q](element_id x, element_id y) {
    return (x / q) * q + (y % q);
  });
}

[[nodiscard]] inline CayleyTable null_semigroup(std::size_t n) {
  return detail::tabulate(n, [](element_id, element_id) { return 0; });
}

// x * y = min(x, y)
[[nodiscard]] inline CayleyTable chain_semilattice(std::size_t n) {
  return detail::tabulate(n, [](element_id x, element_id y) { return std::min(x, y); });
}

[[nodiscard]] inline CayleyTable cyclic_group(std::size_t n) {
  return detail::tabulate(n, [n](element_id x, element_id y) { return (x + y) % n; });
}

// <c | c^(index + period) = c^index>; element k stands for c^(k + 1).
[[nodiscard]] inline CayleyTable monogenic(std::size_t index, std::size_t period) {
  if (index == 0 || period == 0) {
    throw InvalidShape("monogenic index and period must be positive");
  }
  std::size_t const n = index + period - 1;
  return detail::tabulate(n, [index, period](element_id x, element_id y) {
    std::size_t e = (x + 1) + (y + 1);
    if (e >= index + period) {
      e = index + (e - index) % period;
    }
    return e - 1;
  });
}

// Pairs (x, y) with index x * |t| + y, multiplied componentwise.
[[nodiscard]] inline CayleyTable direct_product(CayleyTable const& s, CayleyTable const& t) {
  auto const m = t.size();
  return detail::tabulate(s.size() * m, [&](element_id x, element_id y) {
    return s(x / m, y / m) * m + t(x % m, y % m);
  });
}

// A structure homomorphism S_from -> S_to of a strong semilattice, where
// `to` lies below `from` in the semilattice (from * to == to).
struct StructureMap {
  std::size_t             from;
  std::size_t             to;
  std::vector<element_id> images;
};

// Strong semilattice of the given components over `semilattice`. Component k
// sits above vertex k; its elements occupy a contiguous block of indices in
// component order. For x in S_a and y in S_b the product is
// phi_{a,ab}(x) * phi_{b,ab}(y) computed in S_ab. Every strictly comparable
// pair of vertices needs a map; the result is validated, so maps that are not
// compatible homomorphisms surface as NotAssociative.
[[nodiscard]] inline CayleyTable
semilattice_of_components(CayleyTable const&              semilattice,
                          std::vector<CayleyTable> const& components,
                          std::vector<StructureMap> const& gluing) {
  if (!is_semilattice(semilattice)) {
    throw InvalidShape("the base of a strong semilattice must be a semilattice");
  }
  auto const k = semilattice.size();
  if (components.size() != k) {
    throw InvalidShape("need exactly one component per semilattice element");
  }
  std::vector<std::size_t> offset(k + 1, 0);
  for (std::size_t a = 0; a < k; ++a) {
    offset[a + 1] = offset[a] + components[a].size();
  }
  std::map<std::pair<std::size_t, std::size_t>, std::vector<element_id> const*> maps;
  for (auto const& g : gluing) {
    if (g.from >= k || g.to >= k || g.from == g.to
        || semilattice(g.from, g.to) != g.to) {
      throw InvalidShape("structure map must go from a vertex to one strictly below it");
    }
    if (g.images.size() != components[g.from].size()) {
      throw InvalidShape("structure map has the wrong number of images");
    }
    for (auto img : g.images) {
      if (img >= components[g.to].size()) {
        throw InvalidShape("structure map image out of range");
      }
    }
    maps[{g.from, g.to}] = &g.images;
  }
  auto phi = [&](std::size_t from, std::size_t to, element_id x) -> element_id {
    if (from == to) {
      return x;
    }
    auto it = maps.find({from, to});
    if (it == maps.end()) {
      throw InvalidShape("missing structure map " + std::to_string(from) + " -> "
                         + std::to_string(to));
    }
    return (*it->second)[x];
  };
  std::vector<std::size_t> vertex(offset[k]);
  for (std::size_t a = 0; a < k; ++a) {
    std::fill(vertex.begin() + offset[a], vertex.begin() + offset[a + 1], a);
  }
  std::size_t const  n = offset[k];
  std::vector<long long> grid(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto const a  = vertex[x];
      auto const b  = vertex[y];
      auto const ab = semilattice(a, b);
      auto const u  = phi(a, ab, static_cast<element_id>(x - offset[a]));
      auto const v  = phi(b, ab, static_cast<element_id>(y - offset[b]));
      grid[x * n + y] = static_cast<long long>(offset[ab] + components[ab](u, v));
    }
  }
  return validate(n, grid);
}

// a^m b^n in the bicyclic monoid <a, b | ba = 1>.
struct BicyclicElement {
  std::uint64_t m = 0;
  std::uint64_t n = 0;

  friend auto operator<=>(BicyclicElement const&, BicyclicElement const&) = default;
};

inline constexpr BicyclicElement bicyclic_identity{0, 0};
inline constexpr BicyclicElement bicyclic_a{1, 0};
inline constexpr BicyclicElement bicyclic_b{0, 1};

// a^m b^n . a^p b^q: the inner b^n a^p cancels to a^(p - n) or b^(n - p), so
// with t = max(n, p) the product is a^(m - n + t) b^(q - p + t).
[[nodiscard]] constexpr BicyclicElement bicyclic_mul(BicyclicElement x, BicyclicElement y) {
  std::uint64_t const t = std::max(x.n, y.m);
  return {x.m - x.n + t, y.n - y.m + t};
}

// The quadruple showing that the bicyclic monoid is not weakly balanced,
// with every product evaluated.
struct BicyclicWitness {
  BicyclicElement a, b, x, y;
  BicyclicElement ax, ay, xb, yb;
  BicyclicElement xa, ya, bx, by;

  [[nodiscard]] bool premise_holds() const {
    return ax == ay && xb == yb;
  }
  [[nodiscard]] bool conclusion_holds() const {
    return xa == ya && bx == by;
  }
};

// a = b^2, b = a, x = 1, y = ab: b^2 . 1 = b^2 . ab and 1 . a = ab . a, yet
// a . 1 != a . ab.
[[nodiscard]] inline BicyclicWitness bicyclic_weakly_balanced_witness() {
  BicyclicWitness w{};
  w.a  = bicyclic_mul(bicyclic_b, bicyclic_b);
  w.b  = bicyclic_a;
  w.x  = bicyclic_identity;
  w.y  = bicyclic_mul(bicyclic_a, bicyclic_b);
  w.ax = bicyclic_mul(w.a, w.x);
  w.ay = bicyclic_mul(w.a, w.y);
  w.xb = bicyclic_mul(w.x, w.b);
  w.yb = bicyclic_mul(w.y, w.b);
  w.xa = bicyclic_mul(w.x, w.a);
  w.ya = bicyclic_mul(w.y, w.a);
  w.bx = bicyclic_mul(w.b, w.x);
  w.by = bicyclic_mul(w.b, w.y);
  return w;
}

enum class BicyclicProperty { quasi_separative, quasi_cancellative };

inline constexpr std::size_t default_quasi_separative_bound   = 12;
inline constexpr std::size_t default_quasi_cancellative_bound = 6;

// All a^m b^n with m, n <= bound.
[[nodiscard]] inline std::vector<BicyclicElement> bicyclic_box(std::size_t bound) {
  std::vector<BicyclicElement> out;
  for (std::uint64_t m = 0; m <= bound; ++m) {
    for (std::uint64_t n = 0; n <= bound; ++n) {
      out.push_back({m, n});
    }
  }
  return out;
}

// Falsification probe: evaluates the defining quantifiers of the property on
// the box m, n <= bound. Returns true when no violation is found inside the
// box; this is not a proof for the infinite monoid.
[[nodiscard]] inline bool bicyclic_bounded_check(BicyclicProperty property, std::size_t bound) {
  auto const box = bicyclic_box(bound);
  auto const mul = bicyclic_mul;
  if (property == BicyclicProperty::quasi_separative) {
    for (auto const& x : box) {
      auto const xx = mul(x, x);
      for (auto const& y : box) {
        if (x != y && xx == mul(x, y) && xx == mul(y, x) && xx == mul(y, y)) {
          return false;
        }
      }
    }
    return true;
  }
  // B is a monoid, so S^1 = B and the identity (0, 0) is already in the box.
  for (std::size_t i = 0; i < box.size(); ++i) {
    for (std::size_t j = i + 1; j < box.size(); ++j) {
      auto const& b = box[i];
      auto const& c = box[j];
      bool left_equal = false;
      for (auto const& a : box) {
        if (mul(a, b) == mul(a, c)) {
          left_equal = true;
          break;
        }
      }
      if (!left_equal) {
        continue;
      }
      bool equivalent = true;
      for (auto const& x : box) {
        for (auto const& y : box) {
          bool const first  = mul(mul(x, b), y) == mul(mul(x, c), y);
          bool const second = mul(mul(y, x), b) == mul(mul(y, x), c);
          bool const third  = mul(mul(b, y), x) == mul(mul(c, y), x);
          if (first != second || second != third) {
            equivalent = false;
            break;
          }
        }
        if (!equivalent) {
          break;
        }
      }
      if (equivalent) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qsep::zoo

#endif  // QSEP_ZOO_HPP
