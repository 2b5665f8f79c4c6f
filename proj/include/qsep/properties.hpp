#ifndef QSEP_PROPERTIES_HPP
#define QSEP_PROPERTIES_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core.hpp"
#include "relation.hpp"

namespace qsep {

class InternalDisagreement : public Error {
 public:
  using Error::Error;
};

// Outcome of a universally quantified property. When the property fails,
// `witness` holds the lexicographically first violating tuple of the search.
struct Verdict {
  bool                    holds = true;
  std::vector<element_id> witness;

  static Verdict pass() {
    return {};
  }
  static Verdict fail(std::initializer_list<element_id> w) {
    return {false, std::vector<element_id>(w)};
  }

  explicit operator bool() const noexcept {
    return holds;
  }
};

[[nodiscard]] inline Verdict commutativity(CayleyTable const& s) {
  for (element_id x = 0; x < s.size(); ++x) {
    for (element_id y = x + 1; y < s.size(); ++y) {
      if (s(x, y) != s(y, x)) {
        return Verdict::fail({x, y});
      }
    }
  }
  return Verdict::pass();
}

[[nodiscard]] inline Verdict idempotency(CayleyTable const& s) {
  for (element_id x = 0; x < s.size(); ++x) {
    if (s(x, x) != x) {
      return Verdict::fail({x});
    }
  }
  return Verdict::pass();
}

// Witness (a, x, y): ax = ay with x != y.
[[nodiscard]] inline Verdict is_left_cancellative(CayleyTable const& s) {
  for (element_id a = 0; a < s.size(); ++a) {
    for (element_id x = 0; x < s.size(); ++x) {
      for (element_id y = x + 1; y < s.size(); ++y) {
        if (s(a, x) == s(a, y)) {
          return Verdict::fail({a, x, y});
        }
      }
    }
  }
  return Verdict::pass();
}

// Witness (a, x, y): xa = ya with x != y.
[[nodiscard]] inline Verdict is_right_cancellative(CayleyTable const& s) {
  for (element_id a = 0; a < s.size(); ++a) {
    for (element_id x = 0; x < s.size(); ++x) {
      for (element_id y = x + 1; y < s.size(); ++y) {
        if (s(x, a) == s(y, a)) {
          return Verdict::fail({a, x, y});
        }
      }
    }
  }
  return Verdict::pass();
}

[[nodiscard]] inline Verdict is_cancellative(CayleyTable const& s) {
  if (auto v = is_left_cancellative(s); !v) {
    return v;
  }
  return is_right_cancellative(s);
}

// Both implications
//   x^2 = xy, y^2 = yx  =>  x = y
//   x^2 = yx, y^2 = xy  =>  x = y
// Witness (x, y).
[[nodiscard]] inline Verdict is_separative(CayleyTable const& s) {
  for (element_id x = 0; x < s.size(); ++x) {
    for (element_id y = 0; y < s.size(); ++y) {
      if (x == y) {
        continue;
      }
      auto const xx = s(x, x), yy = s(y, y), xy = s(x, y), yx = s(y, x);
      if ((xx == xy && yy == yx) || (xx == yx && yy == xy)) {
        return Verdict::fail({x, y});
      }
    }
  }
  return Verdict::pass();
}

namespace detail {

  // x^2 = xy = yx = y^2 => x = y
  [[nodiscard]] inline Verdict quasi_separative_symmetric_form(CayleyTable const& s) {
    for (element_id x = 0; x < s.size(); ++x) {
      for (element_id y = 0; y < s.size(); ++y) {
        if (x == y) {
          continue;
        }
        auto const xx = s(x, x);
        if (xx == s(x, y) && xx == s(y, x) && xx == s(y, y)) {
          return Verdict::fail({x, y});
        }
      }
    }
    return Verdict::pass();
  }

  // x^2 = xy = y^2 => x = y
  [[nodiscard]] inline Verdict quasi_separative_drazin_form(CayleyTable const& s) {
    for (element_id x = 0; x < s.size(); ++x) {
      for (element_id y = 0; y < s.size(); ++y) {
        if (x == y) {
          continue;
        }
        auto const xx = s(x, x);
        if (xx == s(x, y) && xx == s(y, y)) {
          return Verdict::fail({x, y});
        }
      }
    }
    return Verdict::pass();
  }

}  // namespace detail

// (a, b) in E(a) & F(b) => a = b, phrased through the equalizer relations.
[[nodiscard]] inline Verdict quasi_separative_via_relations(CayleyTable const& s) {
  std::vector<BinaryRelation> E, F;
  for (element_id a = 0; a < s.size(); ++a) {
    E.push_back(relation_E(s, a));
    F.push_back(relation_F(s, a));
  }
  for (element_id a = 0; a < s.size(); ++a) {
    for (element_id b = 0; b < s.size(); ++b) {
      if (a != b && E[a].contains(a, b) && F[b].contains(a, b)) {
        return Verdict::fail({a, b});
      }
    }
  }
  return Verdict::pass();
}

// Evaluates both the symmetric form and the three-term form and throws
// InternalDisagreement if their verdicts differ.
[[nodiscard]] inline Verdict is_quasi_separative(CayleyTable const& s) {
  auto sym    = detail::quasi_separative_symmetric_form(s);
  auto drazin = detail::quasi_separative_drazin_form(s);
  if (sym.holds != drazin.holds) {
    throw InternalDisagreement("quasi-separativity forms disagree");
  }
  return sym;
}

// (ax = ay and xb = yb) => x = y. Witness (a, b, x, y).
[[nodiscard]] inline Verdict is_weakly_cancellative(CayleyTable const& s) {
  auto const n = s.size();
  for (element_id a = 0; a < n; ++a) {
    for (element_id b = 0; b < n; ++b) {
      for (element_id x = 0; x < n; ++x) {
        for (element_id y = 0; y < n; ++y) {
          if (x != y && s(a, x) == s(a, y) && s(x, b) == s(y, b)) {
            return Verdict::fail({a, b, x, y});
          }
        }
      }
    }
  }
  return Verdict::pass();
}

// (ax = ay and xb = yb) => (xa = ya and bx = by). Witness (a, b, x, y).
[[nodiscard]] inline Verdict is_weakly_balanced(CayleyTable const& s) {
  auto const n = s.size();
  for (element_id a = 0; a < n; ++a) {
    for (element_id b = 0; b < n; ++b) {
      for (element_id x = 0; x < n; ++x) {
        for (element_id y = 0; y < n; ++y) {
          if (s(a, x) == s(a, y) && s(x, b) == s(y, b)
              && (s(x, a) != s(y, a) || s(b, x) != s(b, y))) {
            return Verdict::fail({a, b, x, y});
          }
        }
      }
    }
  }
  return Verdict::pass();
}

namespace detail {

  // For all x, y in S^1 the statements xby = xcy, yxb = yxc, byx = cyx are
  // all true or all false.
  [[nodiscard]] inline bool
  three_way_equivalent(MonoidTable const& m, element_id b, element_id c) {
    auto const& t = m.table;
    for (element_id x = 0; x < t.size(); ++x) {
      for (element_id y = 0; y < t.size(); ++y) {
        bool const first  = t(t(x, b), y) == t(t(x, c), y);
        bool const second = t(t(y, x), b) == t(t(y, x), c);
        bool const third  = t(t(b, y), x) == t(t(c, y), x);
        if (first != second || second != third) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace detail

// For b != c: if the three-way equivalence holds over S^1 and ab = ac for
// some a in S, the semigroup is not quasi-cancellative. Witness (b, c, a).
[[nodiscard]] inline Verdict is_quasi_cancellative(CayleyTable const& s) {
  auto const monoid = adjoin_identity(s);
  for (element_id b = 0; b < s.size(); ++b) {
    for (element_id c = b + 1; c < s.size(); ++c) {
      for (element_id a = 0; a < s.size(); ++a) {
        if (s(a, b) == s(a, c)) {
          if (detail::three_way_equivalent(monoid, b, c)) {
            return Verdict::fail({b, c, a});
          }
          break;
        }
      }
    }
  }
  return Verdict::pass();
}

// (a^2 x = a^2 y and x a^2 = y a^2) => (ax = ay and xa = ya).
// Witness (a, x, y).
[[nodiscard]] inline Verdict satisfies_cond14(CayleyTable const& s) {
  auto const n = s.size();
  for (element_id a = 0; a < n; ++a) {
    element_id const aa = s(a, a);
    for (element_id x = 0; x < n; ++x) {
      for (element_id y = 0; y < n; ++y) {
        if (s(aa, x) == s(aa, y) && s(x, aa) == s(y, aa)
            && (s(a, x) != s(a, y) || s(x, a) != s(y, a))) {
          return Verdict::fail({a, x, y});
        }
      }
    }
  }
  return Verdict::pass();
}

struct PropertyProfile {
  Verdict commutative;
  Verdict band;
  Verdict cancellative;
  Verdict left_cancellative;
  Verdict right_cancellative;
  Verdict separative;
  Verdict quasi_separative;
  Verdict weakly_cancellative;
  Verdict weakly_balanced;
  Verdict quasi_cancellative;
  Verdict satisfies_cond14;

  // Stable serialization order.
  [[nodiscard]] std::vector<std::pair<std::string_view, Verdict const*>> fields() const {
    return {{"commutative", &commutative},
            {"band", &band},
            {"cancellative", &cancellative},
            {"left_cancellative", &left_cancellative},
            {"right_cancellative", &right_cancellative},
            {"separative", &separative},
            {"quasi_separative", &quasi_separative},
            {"weakly_cancellative", &weakly_cancellative},
            {"weakly_balanced", &weakly_balanced},
            {"quasi_cancellative", &quasi_cancellative},
            {"cond14", &satisfies_cond14}};
  }
};

[[nodiscard]] inline PropertyProfile classify(CayleyTable const& s) {
  return {commutativity(s),
          idempotency(s),
          is_cancellative(s),
          is_left_cancellative(s),
          is_right_cancellative(s),
          is_separative(s),
          is_quasi_separative(s),
          is_weakly_cancellative(s),
          is_weakly_balanced(s),
          is_quasi_cancellative(s),
          satisfies_cond14(s)};
}

}  // namespace qsep

#endif  // QSEP_PROPERTIES_HPP
