#include "doctest.h"
#include "splitpre/cones.hpp"
#include "splitpre/error.hpp"

using namespace splitpre;
using namespace splitpre::cones;

namespace {

  FiniteRelation from_mask(std::size_t n, std::uint64_t mask) {
    FiniteRelation r(n);
    for (std::size_t b = 0; b < n * n; ++b) {
      if ((mask >> b) & 1U) {
        r.insert(b / n, b % n);
      }
    }
    return r;
  }

  std::vector<std::vector<std::size_t>> values_of(std::vector<FuncTable> const& fs) {
    std::vector<std::vector<std::size_t>> out;
    for (auto const& f : fs) {
      out.emplace_back(f.values().begin(), f.values().end());
    }
    return out;
  }

}  // namespace

TEST_CASE("Chain") {
  CHECK_THROWS_AS(Chain(1), PreconditionError);
  CHECK_THROWS_AS(Chain(0), PreconditionError);
  Chain c(3);
  CHECK(c.least() == 0);
  CHECK(c.greatest() == 2);
}

TEST_CASE("codes are base p, index 0 least significant") {
  Chain c(3);
  CHECK(FuncTable{1, 2}.code(c) == 7);
  CHECK(FuncTable::decode(7, 2, c) == FuncTable{1, 2});
  for (code_type code = 0; code < 27; ++code) {
    CHECK(FuncTable::decode(code, 3, c).code(c) == code);
  }
  CHECK_THROWS_AS((void) FuncTable{3}.code(c), PreconditionError);
  CHECK(function_count(0, c) == 1);
  CHECK(function_count(3, c) == 27);
  CHECK_THROWS_AS(function_count(13, Chain(2)), BoundExceeded);
  CHECK(function_count(12, Chain(2)) == 4096);
}

TEST_CASE("cone_char") {
  Chain const two(2);
  auto        r = reflexive_closure(FiniteRelation(2, {{0, 1}}));
  CHECK(cone_char(r, 0, two) == FuncTable{1, 1});
  CHECK(cone_char(r, 1, two) == FuncTable{0, 1});
  CHECK(cone_char(FiniteRelation::diagonal(3), 1, two) == FuncTable{0, 1, 0});
  CHECK_THROWS_AS(cone_char(r, 2, two), PreconditionError);
}

TEST_CASE("monotone_set") {
  Chain const two(2);
  using V = std::vector<std::vector<std::size_t>>;
  CHECK(values_of(monotone_set(reflexive_closure(FiniteRelation(2, {{0, 1}})), two))
        == V{{0, 0}, {0, 1}, {1, 1}});
  CHECK(monotone_set(FiniteRelation::diagonal(2), two).size() == 4);
  CHECK(values_of(monotone_set(FiniteRelation::full(2), two)) == V{{0, 0}, {1, 1}});
  CHECK(monotone_set(FiniteRelation(0), two).size() == 1);
  CHECK_THROWS_AS(monotone_set(FiniteRelation(13), two), BoundExceeded);
  CHECK(monotone_set(FiniteRelation(13), two, 8192).size() == 8192);
}

TEST_CASE("cone checks on examples") {
  Chain const two(2);
  auto        d = FiniteRelation::diagonal(2);
  CHECK(check_prop1(d, two));
  CHECK(check_prop2(d, two));
  CHECK(check_prop3_star(d, two));
  CHECK_FALSE(check_prop1(FiniteRelation(2, {{0, 1}}), two));
  CHECK_FALSE(check_prop2(reflexive_closure(FiniteRelation(3, {{0, 1}, {1, 2}})), two));
}

TEST_CASE("reflexivity, transitivity and preorders via cones, every relation on 3 points") {
  for (std::size_t p : {2, 3}) {
    Chain const chain(p);
    for (std::size_t n = 0; n <= 3; ++n) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n * n)); ++mask) {
        auto r = from_mask(n, mask);
        INFO("p " << p << ", size " << n << ", mask " << mask);
        REQUIRE(check_prop1(r, chain) == is_reflexive(r));
        REQUIRE(check_prop2(r, chain) == is_transitive(r));
        REQUIRE(check_prop3_star(r, chain) == is_preorder(r));
      }
    }
  }
}

TEST_CASE("preorders are determined by their monotone sets") {
  Chain const two(2);
  auto const  all = enumerate_preorders(3);
  std::vector<std::vector<FuncTable>> sets;
  for (auto const& r : all) {
    sets.push_back(monotone_set(r, two));
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      REQUIRE((i == j) == (sets[i] == sets[j]));
    }
  }
}
