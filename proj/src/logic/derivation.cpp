#include "splitpre/logic/derivation.hpp"

#include <utility>

#include "splitpre/error.hpp"

namespace splitpre::logic {

  std::string_view keyword(Rule rule) {
    switch (rule) {
      case Rule::id:
        return "id";
      case Rule::k1_conj:
        return "pi1";
      case Rule::k2_conj:
        return "pi2";
      case Rule::k_top:
        return "bang";
      case Rule::comp:
        return "comp";
      case Rule::pair:
        return "pair";
      case Rule::k1_disj:
        return "inl";
      case Rule::k2_disj:
        return "inr";
      case Rule::k_bot:
        return "abort";
      case Rule::copair:
        return "copair";
    }
    return "?";
  }

  std::string_view to_string(Fragment fragment) {
    switch (fragment) {
      case Fragment::conjunctive:
        return "conj";
      case Fragment::disjunctive:
        return "disj";
      case Fragment::conj_disj:
        return "conjdisj";
      case Fragment::conj_disj_units:
        return "units";
    }
    return "?";
  }

  std::optional<Fragment> parse_fragment(std::string_view name) {
    for (auto f : {Fragment::conjunctive,
                   Fragment::disjunctive,
                   Fragment::conj_disj,
                   Fragment::conj_disj_units}) {
      if (name == to_string(f)) {
        return f;
      }
    }
    if (name == "conjunctive") {
      return Fragment::conjunctive;
    }
    if (name == "disjunctive") {
      return Fragment::disjunctive;
    }
    return std::nullopt;
  }

  bool allows(Fragment fragment, Connective c) {
    switch (c) {
      case Connective::var:
        return true;
      case Connective::conj:
        return fragment != Fragment::disjunctive;
      case Connective::disj:
        return fragment != Fragment::conjunctive;
      case Connective::truth:
        return fragment == Fragment::conjunctive || fragment == Fragment::conj_disj_units;
      case Connective::falsum:
        return fragment == Fragment::disjunctive || fragment == Fragment::conj_disj_units;
    }
    return false;
  }

  bool allows(Fragment fragment, Rule rule) {
    switch (rule) {
      case Rule::id:
      case Rule::comp:
        return true;
      case Rule::k1_conj:
      case Rule::k2_conj:
      case Rule::pair:
        return allows(fragment, Connective::conj);
      case Rule::k_top:
        return allows(fragment, Connective::truth);
      case Rule::k1_disj:
      case Rule::k2_disj:
      case Rule::copair:
        return allows(fragment, Connective::disj);
      case Rule::k_bot:
        return allows(fragment, Connective::falsum);
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Derivation
  ////////////////////////////////////////////////////////////////////////

  struct Derivation::Node {
    Rule                      rule;
    Formula                   source;
    Formula                   target;
    std::optional<Formula>    a;
    std::optional<Formula>    b;
    std::optional<Derivation> first;
    std::optional<Derivation> second;
  };

  Derivation Derivation::id(Formula a) {
    return Derivation(std::make_shared<Node const>(Node{Rule::id, a, a, a, {}, {}, {}}));
  }

  Derivation Derivation::k1_conj(Formula a, Formula b) {
    return Derivation(std::make_shared<Node const>(
        Node{Rule::k1_conj, Formula::conj(a, b), a, a, b, {}, {}}));
  }

  Derivation Derivation::k2_conj(Formula a, Formula b) {
    return Derivation(std::make_shared<Node const>(
        Node{Rule::k2_conj, Formula::conj(a, b), b, a, b, {}, {}}));
  }

  Derivation Derivation::k_top(Formula a) {
    return Derivation(
        std::make_shared<Node const>(Node{Rule::k_top, a, Formula::truth(), a, {}, {}, {}}));
  }

  Derivation Derivation::k1_disj(Formula a, Formula b) {
    return Derivation(std::make_shared<Node const>(
        Node{Rule::k1_disj, a, Formula::disj(a, b), a, b, {}, {}}));
  }

  Derivation Derivation::k2_disj(Formula a, Formula b) {
    return Derivation(std::make_shared<Node const>(
        Node{Rule::k2_disj, b, Formula::disj(a, b), a, b, {}, {}}));
  }

  Derivation Derivation::k_bot(Formula a) {
    return Derivation(
        std::make_shared<Node const>(Node{Rule::k_bot, Formula::falsum(), a, a, {}, {}, {}}));
  }

  namespace {
    std::string endpoints(Derivation const& d) {
      return d.to_string() + " : " + d.source().to_string() + " -> " + d.target().to_string();
    }
  }  // namespace

  Derivation Derivation::comp(Derivation g, Derivation f) {
    if (!(f.target() == g.source())) {
      throw TypeError("type error in comp(" + g.to_string() + ", " + f.to_string()
                      + "): target " + f.target().to_string() + " of " + endpoints(f)
                      + " does not match source " + g.source().to_string() + " of "
                      + endpoints(g));
    }
    Formula src = f.source(), tgt = g.target();
    return Derivation(std::make_shared<Node const>(
        Node{Rule::comp, std::move(src), std::move(tgt), {}, {}, std::move(g), std::move(f)}));
  }

  Derivation Derivation::pair(Derivation f, Derivation g) {
    if (!(f.source() == g.source())) {
      throw TypeError("type error in pair(" + f.to_string() + ", " + g.to_string()
                      + "): sources differ, " + endpoints(f) + " and " + endpoints(g));
    }
    Formula src = f.source(), tgt = Formula::conj(f.target(), g.target());
    return Derivation(std::make_shared<Node const>(
        Node{Rule::pair, std::move(src), std::move(tgt), {}, {}, std::move(f), std::move(g)}));
  }

  Derivation Derivation::copair(Derivation f, Derivation g) {
    if (!(f.target() == g.target())) {
      throw TypeError("type error in copair(" + f.to_string() + ", " + g.to_string()
                      + "): targets differ, " + endpoints(f) + " and " + endpoints(g));
    }
    Formula src = Formula::disj(f.source(), g.source()), tgt = f.target();
    return Derivation(std::make_shared<Node const>(
        Node{Rule::copair, std::move(src), std::move(tgt), {}, {}, std::move(f), std::move(g)}));
  }

  Rule Derivation::rule() const noexcept {
    return _node->rule;
  }

  Formula const& Derivation::source() const noexcept {
    return _node->source;
  }

  Formula const& Derivation::target() const noexcept {
    return _node->target;
  }

  Formula const& Derivation::param_a() const {
    if (!_node->a) {
      throw PreconditionError(std::string(keyword(rule())) + " has no formula parameter");
    }
    return *_node->a;
  }

  Formula const& Derivation::param_b() const {
    if (!_node->b) {
      throw PreconditionError(std::string(keyword(rule())) + " has no second formula parameter");
    }
    return *_node->b;
  }

  Derivation const& Derivation::first() const {
    if (!_node->first) {
      throw PreconditionError(std::string(keyword(rule())) + " has no subderivations");
    }
    return *_node->first;
  }

  Derivation const& Derivation::second() const {
    if (!_node->second) {
      throw PreconditionError(std::string(keyword(rule())) + " has no subderivations");
    }
    return *_node->second;
  }

  std::string Derivation::to_string() const {
    std::string out(keyword(rule()));
    switch (rule()) {
      case Rule::id:
      case Rule::k_top:
      case Rule::k_bot:
        return out + "{" + param_a().to_string() + "}";
      case Rule::k1_conj:
      case Rule::k2_conj:
      case Rule::k1_disj:
      case Rule::k2_disj:
        return out + "{" + param_a().to_string() + ", " + param_b().to_string() + "}";
      case Rule::comp:
      case Rule::pair:
      case Rule::copair:
        return out + "(" + first().to_string() + ", " + second().to_string() + ")";
    }
    return out;
  }

  bool operator==(Derivation const& a, Derivation const& b) {
    if (a._node == b._node) {
      return true;
    }
    if (a.rule() != b.rule()) {
      return false;
    }
    auto const& x = *a._node;
    auto const& y = *b._node;
    return x.a == y.a && x.b == y.b && x.first == y.first && x.second == y.second;
  }

  void check_fragment(Formula const& a, Fragment fragment) {
    if (!allows(fragment, a.kind())) {
      throw FragmentError("formula " + a.to_string() + " uses a connective outside the "
                          + std::string(to_string(fragment)) + " fragment");
    }
    if (a.is(Connective::conj) || a.is(Connective::disj)) {
      check_fragment(a.left(), fragment);
      check_fragment(a.right(), fragment);
    }
  }

  void check_fragment(Derivation const& d, Fragment fragment) {
    if (!allows(fragment, d.rule())) {
      throw FragmentError("constructor " + std::string(keyword(d.rule())) + " in "
                          + d.to_string() + " is not allowed in the "
                          + std::string(to_string(fragment)) + " fragment");
    }
    switch (d.rule()) {
      case Rule::comp:
      case Rule::pair:
      case Rule::copair:
        check_fragment(d.first(), fragment);
        check_fragment(d.second(), fragment);
        break;
      default:
        check_fragment(d.source(), fragment);
        check_fragment(d.target(), fragment);
        break;
    }
  }

  Derivation dual(Derivation const& d) {
    switch (d.rule()) {
      case Rule::id:
        return Derivation::id(dual(d.param_a()));
      case Rule::k1_conj:
        return Derivation::k1_disj(dual(d.param_a()), dual(d.param_b()));
      case Rule::k2_conj:
        return Derivation::k2_disj(dual(d.param_a()), dual(d.param_b()));
      case Rule::k_top:
        return Derivation::k_bot(dual(d.param_a()));
      case Rule::k1_disj:
        return Derivation::k1_conj(dual(d.param_a()), dual(d.param_b()));
      case Rule::k2_disj:
        return Derivation::k2_conj(dual(d.param_a()), dual(d.param_b()));
      case Rule::k_bot:
        return Derivation::k_top(dual(d.param_a()));
      case Rule::comp:
        // (g after f) becomes dual(f) after dual(g).
        return Derivation::comp(dual(d.second()), dual(d.first()));
      case Rule::pair:
        return Derivation::copair(dual(d.first()), dual(d.second()));
      case Rule::copair:
        return Derivation::pair(dual(d.first()), dual(d.second()));
    }
    return d;
  }

}  // namespace splitpre::logic
