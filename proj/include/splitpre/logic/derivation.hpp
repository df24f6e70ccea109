#pragma once

// Derivations of the conjunctive, disjunctive and combined deductive
// systems.  Every Derivation is well-typed by construction: the smart
// constructors compute source and target and throw TypeError when a
// composite does not line up.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "splitpre/logic/formula.hpp"

namespace splitpre::logic {

  enum class Rule : std::uint8_t {
    id,       // id{A}         : A -> A
    k1_conj,  // pi1{A,B}      : A /\ B -> A
    k2_conj,  // pi2{A,B}      : A /\ B -> B
    k_top,    // bang{A}       : A -> T
    comp,     // comp(g,f)     : g after f
    pair,     // pair(f,g)     : C -> A /\ B
    k1_disj,  // inl{A,B}      : A -> A \/ B
    k2_disj,  // inr{A,B}      : B -> A \/ B
    k_bot,    // abort{A}      : F -> A
    copair    // copair(f,g)   : A \/ B -> C
  };

  // Keyword of a rule in the derivation grammar.
  std::string_view keyword(Rule rule);

  enum class Fragment : std::uint8_t {
    conjunctive,     // /\, T
    disjunctive,     // \/, F
    conj_disj,       // /\, \/
    conj_disj_units  // /\, \/, T, F
  };

  std::string_view to_string(Fragment fragment);
  // Accepts "conj", "disj", "conjdisj", "units" and the to_string names.
  std::optional<Fragment> parse_fragment(std::string_view name);

  bool allows(Fragment fragment, Connective c);
  bool allows(Fragment fragment, Rule rule);

  class Derivation {
   public:
    static Derivation id(Formula a);
    static Derivation k1_conj(Formula a, Formula b);
    static Derivation k2_conj(Formula a, Formula b);
    static Derivation k_top(Formula a);
    // g after f; requires target(f) == source(g).
    static Derivation comp(Derivation g, Derivation f);
    // requires source(f) == source(g).
    static Derivation pair(Derivation f, Derivation g);
    static Derivation k1_disj(Formula a, Formula b);
    static Derivation k2_disj(Formula a, Formula b);
    static Derivation k_bot(Formula a);
    // requires target(f) == target(g).
    static Derivation copair(Derivation f, Derivation g);

    Rule rule() const noexcept;
    Formula const& source() const noexcept;
    Formula const& target() const noexcept;

    // Formula parameters of axioms: A, and B for the two-argument ones.
    Formula const& param_a() const;
    Formula const& param_b() const;
    // Subderivations of comp, pair and copair, in the order they are
    // written: comp(first, second) is first after second.
    Derivation const& first() const;
    Derivation const& second() const;

    std::string to_string() const;

    // Structural equality of derivation trees (not proof equivalence).
    friend bool operator==(Derivation const& a, Derivation const& b);

   private:
    struct Node;
    explicit Derivation(std::shared_ptr<Node const> node) : _node(std::move(node)) {}

    std::shared_ptr<Node const> _node;
  };

  // Throws FragmentError naming the first connective or rule the fragment
  // does not contain.
  void check_fragment(Formula const& a, Fragment fragment);
  void check_fragment(Derivation const& d, Fragment fragment);

  // The mirror derivation: f : A -> B becomes dual(f) : dual(B) -> dual(A),
  // with projections and injections, pairing and copairing exchanged.
  Derivation dual(Derivation const& d);

}  // namespace splitpre::logic
