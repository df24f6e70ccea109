#include <random>
#include <set>

#include "doctest.h"
#include "splitpre/error.hpp"
#include "splitpre/split_preorder.hpp"

using namespace splitpre;

namespace {

  SplitPreorder arrow(std::size_t m, std::size_t n, std::initializer_list<NodePair> strict) {
    return SplitPreorder::closure_of(SplitRelation(m, n, strict));
  }

  std::set<std::pair<std::string, std::string>> strict_names(SplitPreorder const& r) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto const& [u, v] : r.strict_pairs()) {
      out.emplace(to_string(u), to_string(v));
    }
    return out;
  }

  // Composition recomputed from the definition with a naive closure over
  // labelled nodes: 'x'/'y'/'z' zones.
  using Lab = std::pair<char, std::size_t>;

  std::set<NodePair> naive_compose(SplitPreorder const& p, SplitPreorder const& r) {
    std::set<std::pair<Lab, Lab>> rel;
    auto r_lab = [](Node u) { return Lab{u.tag == Tag::source ? 'x' : 'y', u.index}; };
    auto p_lab = [](Node u) { return Lab{u.tag == Tag::source ? 'y' : 'z', u.index}; };
    for (auto const& [u, v] : r.pairs()) {
      rel.insert({r_lab(u), r_lab(v)});
    }
    for (auto const& [u, v] : p.pairs()) {
      rel.insert({p_lab(u), p_lab(v)});
    }
    bool changed = true;
    while (changed) {
      changed = false;
      auto copy = rel;
      for (auto const& [a, b] : copy) {
        for (auto const& [c, d] : copy) {
          if (b == c && rel.insert({a, d}).second) {
            changed = true;
          }
        }
      }
    }
    std::set<NodePair> out;
    for (auto const& [a, b] : rel) {
      if (a.first == 'y' || b.first == 'y') {
        continue;
      }
      auto node = [](Lab l) { return l.first == 'x' ? source(l.second) : target(l.second); };
      out.insert({node(a), node(b)});
    }
    return out;
  }

  std::set<NodePair> pair_set(SplitPreorder const& r) {
    auto p = r.pairs();
    return {p.begin(), p.end()};
  }

}  // namespace

TEST_CASE("identity") {
  CHECK(identity(0).pairs().empty());
  CHECK(identity(1).pairs().size() == 4);
  auto id2 = identity(2);
  CHECK(id2.pairs().size() == 8);
  for (auto const& [u, v] : id2.pairs()) {
    CHECK(u.index == v.index);
  }
  CHECK(id2.contains(target(1), source(1)));
  CHECK_FALSE(id2.contains(source(0), target(1)));
}

TEST_CASE("untarget and unsource") {
  // zones: X = [0, m), Y = [m, m+n), Z = [m+n, m+n+k)
  CHECK(untarget(identity(1), 0) == FiniteRelation(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}));
  CHECK(unsource(identity(1), 0) == FiniteRelation(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}));
  // with a nonempty other side the mirror images sit in different zones
  CHECK(untarget(identity(1), 1) == FiniteRelation(3, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}));
  CHECK(unsource(identity(1), 1) == FiniteRelation(3, {{1, 1}, {2, 2}, {1, 2}, {2, 1}}));
  auto r = arrow(0, 2, {{target(0), target(1)}});
  auto u = untarget(r, 0);
  CHECK(u == FiniteRelation(2, {{0, 0}, {1, 1}, {0, 1}}));
}

TEST_CASE("compose examples") {
  CHECK(compose(identity(2), identity(2)) == identity(2));

  auto r1 = arrow(1, 2, {{source(0), target(0)}});
  auto p1 = arrow(2, 1, {{source(0), target(0)}});
  CHECK(strict_names(compose(p1, r1)) == std::set<std::pair<std::string, std::string>>{{"s0", "t0"}});

  auto p2 = arrow(2, 1, {{source(1), target(0)}});
  CHECK(compose(p2, r1).strict_pairs().empty());

  auto r3 = arrow(1, 2, {{source(0), target(0)}, {target(0), target(1)}, {source(0), target(1)}});
  CHECK(strict_names(compose(p2, r3)) == std::set<std::pair<std::string, std::string>>{{"s0", "t0"}});

  CHECK_THROWS_AS(compose(identity(2), identity(1)), SizeMismatch);
}

TEST_CASE("compose agrees with the naive closure oracle") {
  std::uint64_t const seed = 77;
  std::mt19937_64     rng(seed);
  std::uniform_int_distribution<std::size_t> size(0, 3);
  for (int i = 0; i < 500; ++i) {
    std::size_t m = size(rng), n = size(rng), k = size(rng);
    auto        r = random_split_preorder(m, n, rng, 0.3);
    auto        p = random_split_preorder(n, k, rng, 0.3);
    auto        c = compose(p, r);
    INFO("seed " << seed << ", instance " << i);
    REQUIRE(is_split_preorder(c.split_relation()));
    REQUIRE(pair_set(c) == naive_compose(p, r));
  }
}

TEST_CASE("identity laws hold exhaustively") {
  std::size_t const counts[3][3] = {{1, 1, 4}, {1, 4, 29}, {4, 29, 355}};
  for (std::size_t m = 0; m <= 2; ++m) {
    for (std::size_t n = 0; n <= 2; ++n) {
      auto all = enumerate_split_preorders(m, n);
      CHECK(all.size() == counts[m][n]);
      for (auto const& r : all) {
        REQUIRE(compose(identity(n), r) == r);
        REQUIRE(compose(r, identity(m)) == r);
      }
    }
  }
}

TEST_CASE("associativity on small objects") {
  for (std::size_t a = 0; a <= 1; ++a) {
    for (std::size_t b = 0; b <= 1; ++b) {
      for (std::size_t c = 0; c <= 1; ++c) {
        for (std::size_t d = 0; d <= 1; ++d) {
          for (auto const& r : enumerate_split_preorders(a, b)) {
            for (auto const& p : enumerate_split_preorders(b, c)) {
              for (auto const& t : enumerate_split_preorders(c, d)) {
                REQUIRE(compose(t, compose(p, r)) == compose(compose(t, p), r));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("from_relation") {
  CHECK(from_relation(Relation(1, 1)).strict_pairs().empty());
  CHECK(strict_names(from_relation(Relation(1, 1, {{0, 0}})))
        == std::set<std::pair<std::string, std::string>>{{"s0", "t0"}});
  CHECK(from_relation(Relation(2, 3, {{0, 2}, {1, 0}})).strict_pairs().size() == 2);
}

TEST_CASE("to_split_equivalence") {
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(to_split_equivalence(identity(n)) == identity(n));
  }
  auto r = arrow(1, 1, {{source(0), target(0)}});
  CHECK(strict_names(to_split_equivalence(r))
        == std::set<std::pair<std::string, std::string>>{{"s0", "t0"}, {"t0", "s0"}});
  for (auto const& a : enumerate_split_preorders(2, 2)) {
    CHECK(is_equivalence(to_split_equivalence(a).relation()));
  }
}

TEST_CASE("converse") {
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(converse(identity(n)) == identity(n));
  }
  for (auto const& a : enumerate_split_preorders(1, 2)) {
    CHECK(converse(converse(a)) == a);
  }
  CHECK(strict_names(converse(from_relation(Relation(1, 1, {{0, 0}}))))
        == std::set<std::pair<std::string, std::string>>{{"t0", "s0"}});
}

TEST_CASE("converse distributes over compose") {
  // checked against the naive oracle before being relied upon
  std::uint64_t const seed = 4242;
  std::mt19937_64     rng(seed);
  std::uniform_int_distribution<std::size_t> size(0, 3);
  for (int i = 0; i < 1000; ++i) {
    std::size_t m = size(rng), n = size(rng), k = size(rng);
    auto        r   = random_split_preorder(m, n, rng, 0.3);
    auto        p   = random_split_preorder(n, k, rng, 0.3);
    auto        lhs = converse(compose(p, r));
    std::set<NodePair> flipped;
    for (auto const& [u, v] : naive_compose(p, r)) {
      flipped.insert({v, u});
    }
    INFO("seed " << seed << ", instance " << i);
    REQUIRE(pair_set(lhs) == flipped);
    REQUIRE(lhs == compose(converse(p), converse(r)));
  }
}

TEST_CASE("equals") {
  CHECK(equals(identity(2), identity(2)));
  CHECK_FALSE(equals(identity(1), from_relation(Relation(1, 1, {{0, 0}}))));
  CHECK_FALSE(equals(identity(1), identity(2)));
}

TEST_CASE("enumerate_split_preorders") {
  CHECK(enumerate_split_preorders(0, 0).size() == 1);
  CHECK(enumerate_split_preorders(1, 1).size() == 4);
  CHECK(enumerate_split_preorders(2, 2).size() == 355);
  CHECK(enumerate_split_preorders(0, 4).size() == 355);
  CHECK_THROWS_AS(enumerate_split_preorders(3, 2), BoundExceeded);
}

TEST_CASE("the constructor rejects non-preorders") {
  CHECK_THROWS_AS(SplitPreorder(SplitRelation(1, 1, {{source(0), target(0)}})), PreconditionError);
  CHECK_THROWS_AS(SplitRelation(1, 1, {{source(1), target(0)}}), std::out_of_range);
}
