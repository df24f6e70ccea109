#pragma once

// Exhaustive and seeded sweeps over the algebraic laws: the category laws
// of split preorders, the cone propositions, functoriality and faithfulness
// of the relational representation, the composition witness, and the
// embedding of plain relations.  Each sweep reports how many instances it
// checked and the first failure, rendered in the split preorder text format.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "splitpre/cones.hpp"
#include "splitpre/logic/derivation.hpp"

namespace splitpre::laws {

  struct LawReport {
    std::string law;
    std::size_t checked = 0;
    std::size_t failed  = 0;
    // Instance counts per shape, e.g. {"(2,2)", 355}.
    std::vector<std::pair<std::string, std::size_t>> shapes;
    std::string                                      counterexample;

    bool passed() const noexcept {
      return failed == 0;
    }
  };

  // compose(identity(n), r) == r == compose(r, identity(m)) for every arrow
  // m -> n with m, n <= max_size.
  LawReport identity_laws(std::size_t max_size);

  // Every composable triple with all objects <= exhaustive_max, then
  // random_triples seeded triples with objects <= random_max.
  LawReport associativity(std::size_t   exhaustive_max,
                          std::size_t   random_triples,
                          std::size_t   random_max,
                          std::uint64_t seed);

  // Every composable pair with all objects <= max_size.
  LawReport functoriality_exhaustive(cones::Chain const& chain, std::size_t max_size);
  LawReport functoriality_random(cones::Chain const& chain,
                                 std::size_t         pairs,
                                 std::size_t         max_size,
                                 std::uint64_t       seed);

  // Injectivity of the representation on all arrows m -> n.
  LawReport faithfulness(std::size_t m, std::size_t n, cones::Chain const& chain);

  // The image of every identity is the identity relation, for m <= max_size.
  LawReport identity_preservation(cones::Chain const& chain, std::size_t max_size);

  // For sample composable pairs (objects <= max_size) and every (f1, f2) in
  // the image of the composite, the glued witness lands in both factors.
  LawReport witness(cones::Chain const& chain,
                    std::size_t         sample,
                    std::size_t         max_size,
                    std::uint64_t       seed);

  // The cone characterisations over every relation on a universe of the
  // given size (2^(size^2) relations).
  LawReport cone_propositions(std::size_t size, cones::Chain const& chain);

  // from_relation preserves composition for all relations between objects
  // <= max_size, and the image of each plain identity is a two-sided unit
  // for the images.
  LawReport embedding(std::size_t max_size);

  // The product, terminal object and category equations (conjunctive
  // fragment) or their mirror images (disjunctive fragment) hold up to
  // proof_equiv on count seeded random instances.
  LawReport cartesian_equations(logic::Fragment fragment, std::size_t count, std::uint64_t seed);

  // On count seeded pairs of derivations with common endpoints, equal values
  // and equal split equivalence closures go together.  For conj_disj only the
  // forward implication is checked.
  LawReport closure_variant(logic::Fragment fragment, std::size_t count, std::uint64_t seed);

}  // namespace splitpre::laws
