#pragma once

// Text syntax for formulas and derivations.
//
//   form := atom | form "/\" form | form "\/" form
//   atom := ident | "T" | "F" | "(" form ")"
//
// /\ binds tighter than \/ and both associate to the left.  T and F are the
// constants; every other identifier [A-Za-z_][A-Za-z0-9_]* is a variable.
//
//   der := "id{" form "}" | "pi1{" form "," form "}" | "pi2{" form "," form "}"
//        | "bang{" form "}" | "inl{" form "," form "}" | "inr{" form "," form "}"
//        | "abort{" form "}" | "comp(" der "," der ")" | "pair(" der "," der ")"
//        | "copair(" der "," der ")"
//
// comp(g, f) is g after f.  Whitespace may appear between any two tokens.

#include <string_view>

#include "splitpre/logic/derivation.hpp"
#include "splitpre/logic/formula.hpp"

namespace splitpre::logic {

  // Throw ParseError (with the byte offset of the problem) on bad syntax and
  // TypeError on ill-typed composites.
  Formula    parse_formula(std::string_view text);
  Derivation parse_derivation(std::string_view text);

  // Also checks the result against the fragment, throwing FragmentError.
  Formula    parse_formula(std::string_view text, Fragment fragment);
  Derivation parse_derivation(std::string_view text, Fragment fragment);

}  // namespace splitpre::logic
