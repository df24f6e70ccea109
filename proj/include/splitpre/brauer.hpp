#pragma once

// The representation of split preorders by ordinary binary relations.
//
// For a chain p, an object m goes to the set p^m of functions {0..m-1} -> p
// (numbered by their base-p codes), and an arrow R : m -> n goes to the
// relation that holds between f1 : m -> p and f2 : n -> p exactly when the
// glued function [f1, f2] on the tagged universe is monotone along R.  This
// is a faithful functor into Rel, which the verify_* functions check.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "splitpre/cones.hpp"
#include "splitpre/relation.hpp"
#include "splitpre/split_preorder.hpp"

namespace splitpre::brauer {

  using cones::Chain;
  using cones::code_type;
  using cones::FuncTable;

  // An arrow of Rel between p^m and p^n.
  using RelArrow = Relation;

  // [f1, f2]: f1 on the source nodes, f2 on the target nodes.
  FuncTable pair_glue(FuncTable const& f1, FuncTable const& f2);

  // The image of an object: the identity relation on p^m.
  RelArrow repr_identity(Chain const& chain, std::size_t m, code_type cap = cones::default_cap);

  // The image of an arrow.  Throws BoundExceeded if p^m or p^n exceed cap.
  RelArrow repr_arrow(Chain const& chain, SplitPreorder const& r, code_type cap = cones::default_cap);

  // Given r : m -> n, p : n -> k and (f1, f2) in the image of p * r, builds
  // f3 : n -> p with (f1, f3) in the image of r and (f3, f2) in the image of
  // p: f3(y) is the largest value of f1 on the sources and of f2 on the
  // targets that reach y in the glued working relation, and 0 when nothing
  // reaches y.  Throws PreconditionError when (f1, f2) is not in the image of
  // p * r.
  FuncTable glue_witness(SplitPreorder const& r,
                         SplitPreorder const& p,
                         FuncTable const&     f1,
                         FuncTable const&     f2,
                         Chain const&         chain);

  struct FunctorialityReport {
    bool holds = true;
    // First code pair on which the two sides disagree, and whether it belongs
    // to the image of the composite.
    std::optional<Pair> differing;
    bool                in_composite_image = false;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // Compares repr_arrow(q * r) with repr_arrow(r) followed by repr_arrow(q).
  FunctorialityReport verify_functoriality(Chain const&         chain,
                                           SplitPreorder const& r,
                                           SplitPreorder const& q,
                                           code_type            cap = cones::default_cap);

  struct FaithfulnessReport {
    bool        holds           = true;
    std::size_t arrows          = 0;
    std::size_t distinct_images = 0;
    // Two different arrows with the same image.
    std::optional<std::pair<SplitPreorder, SplitPreorder>> collision;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // Whether repr_arrow is injective on all split preorders m -> n.
  FaithfulnessReport verify_faithfulness(std::size_t  m,
                                         std::size_t  n,
                                         Chain const& chain,
                                         code_type    cap = cones::default_cap);

}  // namespace splitpre::brauer
