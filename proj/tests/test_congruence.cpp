#include <vector>

#include "catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "qsep/congruence.hpp"
#include "qsep/enumeration.hpp"
#include "qsep/properties.hpp"
#include "qsep/zoo.hpp"

namespace qsep {

TEST_CASE("sim_omega", "[congruence]") {
  SECTION("2-chain with the full relation separates both elements") {
    auto const c = sim_omega(test::chain2(), BinaryRelation::full(2));
    CHECK(c.number_of_classes() == 2);
    CHECK(c.classes() == std::vector<std::vector<element_id>>{{0}, {1}});
  }
  SECTION("left zero band with omega_S gives one class") {
    auto const c = sim_omega(test::L2(), omega_S(test::L2()));
    CHECK(c.classes() == std::vector<std::vector<element_id>>{{0, 1}});
  }
  SECTION("a group with the full relation gives one class") {
    CHECK(sim_omega(test::Z2(), BinaryRelation::full(2)).number_of_classes() == 1);
    CHECK(sim_omega(zoo::cyclic_group(5), BinaryRelation::full(5)).number_of_classes() == 1);
  }
  SECTION("class indices follow minimal representatives") {
    // min on 4 elements with Omega = S x S: E(a) are pairwise distinct
    auto const c = sim_omega(zoo::chain_semilattice(4), BinaryRelation::full(4));
    CHECK(c.class_map() == std::vector<std::size_t>{0, 1, 2, 3});
  }
}

TEST_CASE("sim_omega rejects relations that do not give a congruence", "[congruence]") {
  std::size_t rejected = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& s : enumerate_labeled(n)) {
      auto const omega = BinaryRelation::full(n);
      try {
        auto const c = sim_omega(s, omega);
        CHECK_FALSE(find_compatibility_violation(s, c));
      } catch (NotACongruence const& e) {
        ++rejected;
        // e.a ~ e.b by Omega & E, yet a multiple by e.c is separated
        CHECK((omega & relation_E(s, e.a)) == (omega & relation_E(s, e.b)));
        auto key = [&](element_id x) { return omega & relation_E(s, x); };
        CHECK((key(s(e.c, e.a)) != key(s(e.c, e.b)) || key(s(e.a, e.c)) != key(s(e.b, e.c))));
      }
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("sim_omega_dual_check", "[congruence]") {
  CHECK(sim_omega_dual_check(test::chain2(), BinaryRelation::full(2)));
  CHECK(sim_omega_dual_check(test::L2(), BinaryRelation::diagonal(2)));
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& s : enumerate_labeled(n)) {
      REQUIRE(sim_omega_dual_check(s, BinaryRelation::diagonal(n)));
      auto const os = omega_S(s);
      REQUIRE(sim_omega_dual_check(s, os));
    }
  }
}

TEST_CASE("quotient", "[congruence]") {
  SECTION("identity partition reproduces the table") {
    auto const c = sim_omega(test::chain2(), BinaryRelation::full(2));
    CHECK(quotient(test::chain2(), c).quotient == test::chain2());
  }
  SECTION("one class gives the trivial semigroup") {
    CHECK(quotient(test::L2(), Congruence({0, 0})).quotient == test::trivial());
    CHECK(quotient(test::Z2(), Congruence({0, 0})).quotient == test::trivial());
  }
  SECTION("representative dependence is detected") {
    // chain of 3 with {0, 2} | {1}: 1*0 = 0 but 1*2 = 1
    CHECK_THROWS_AS(quotient(zoo::chain_semilattice(3), Congruence({0, 1, 0})), NotACongruence);
  }
  SECTION("quotients by verified congruences are associative") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& s : enumerate_labeled(n)) {
        auto const q = quotient(s, sim_omega(s, omega_S(s))).quotient;
        auto const e = q.entries();
        REQUIRE_NOTHROW(validate(q.size(), std::vector<long long>(e.begin(), e.end())));
      }
    }
  }
}

TEST_CASE("is_band and is_semilattice", "[congruence]") {
  CHECK(is_band(test::chain2()));
  CHECK_FALSE(is_band(test::Z2()));
  CHECK(is_band(test::L2()));
  CHECK(is_semilattice(test::chain2()));
  CHECK_FALSE(is_semilattice(test::L2()));
  CHECK_FALSE(is_semilattice(test::N2()));
}

TEST_CASE("omega_S congruence laws on quasi-separative tables", "[congruence][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& s : enumerate_labeled(n)) {
      if (!is_quasi_separative(s)) {
        continue;
      }
      auto const omega = omega_S(s);
      auto const c     = sim_omega(s, omega);
      for (element_id a = 0; a < n; ++a) {
        REQUIRE((omega & relation_E(s, a)) == (omega & relation_E(s, s(a, a))));
        for (element_id b = 0; b < n; ++b) {
          REQUIRE((omega & relation_E(s, s(a, b))) == (omega & relation_E(s, s(b, a))));
        }
      }
      REQUIRE(is_semilattice(quotient(s, c).quotient));
    }
  }
}

}  // namespace qsep
