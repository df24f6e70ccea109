#pragma once

// Seeded random formulas and well-typed derivations, for property tests.
//
// Formulas draw their variables from {p, q, r}.  Above depth 0 a derivation
// node is an axiom with probability 0.4, a composite with probability 0.3,
// and a pairing (or copairing) with probability 0.3 when one applies.

#include <cstdint>
#include <optional>
#include <random>

#include "splitpre/logic/derivation.hpp"
#include "splitpre/logic/formula.hpp"

namespace splitpre::logic {

  using Rng = std::mt19937_64;

  Formula random_formula(Fragment fragment, unsigned max_depth, Rng& rng);

  // A derivation with the given source; depth 0 gives id{source}.
  Derivation random_derivation_from(Fragment fragment, Formula const& source, unsigned depth, Rng& rng);

  // Deterministic per seed.
  Derivation random_derivation(Fragment fragment, unsigned max_depth, std::uint64_t seed);

  // Whether some derivation source -> target exists.  Only for the
  // conjunctive and disjunctive fragments; throws PreconditionError
  // otherwise.
  bool derivable(Fragment fragment, Formula const& source, Formula const& target);

  // A random derivation source -> target, or nullopt when there is none.
  // depth bounds the number of detours through random intermediate
  // formulas.  Same fragment restriction as derivable.
  std::optional<Derivation> random_derivation_between(Fragment       fragment,
                                                      Formula const& source,
                                                      Formula const& target,
                                                      unsigned       depth,
                                                      Rng&           rng);

}  // namespace splitpre::logic
