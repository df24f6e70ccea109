#pragma once

// The translation of formulas to finite ordinals and of derivations to split
// preorders, and the proof equivalence it induces.
//
// Variable occurrences are numbered 0, 1, ... from left to right, so in
// A /\ B (or A \/ B) the occurrences of B start at g_object(A).

#include <cstddef>
#include <cstdint>

#include "splitpre/logic/derivation.hpp"
#include "splitpre/logic/formula.hpp"
#include "splitpre/split_preorder.hpp"

namespace splitpre::logic {

  // Direction of the edges an axiom contributes between its source and target
  // occurrences.  Reversing all of them at once yields the converse of every
  // value, and equivalence of derivations does not change.
  enum class Orientation : std::uint8_t { source_to_target, target_to_source };

  // Number of variable occurrences.
  std::size_t g_object(Formula const& a);

  SplitPreorder g_arrow(Derivation const& d,
                        Orientation       orientation = Orientation::source_to_target);

  // f and g are equivalent iff they have the same value under g_arrow.
  // Throws EndpointMismatch unless f and g have equal sources and equal
  // targets.
  bool proof_equiv(Derivation const& f,
                   Derivation const& g,
                   Orientation       orientation = Orientation::source_to_target);

}  // namespace splitpre::logic
