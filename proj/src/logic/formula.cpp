#include "splitpre/logic/formula.hpp"

#include <optional>
#include <utility>

#include "splitpre/error.hpp"

namespace splitpre::logic {

  struct Formula::Node {
    Connective             kind;
    std::string            name;
    std::optional<Formula> left;
    std::optional<Formula> right;
  };

  Formula Formula::var(std::string name) {
    return Formula(std::make_shared<Node const>(Node{Connective::var, std::move(name), {}, {}}));
  }

  Formula Formula::conj(Formula left, Formula right) {
    return Formula(std::make_shared<Node const>(
        Node{Connective::conj, {}, std::move(left), std::move(right)}));
  }

  Formula Formula::disj(Formula left, Formula right) {
    return Formula(std::make_shared<Node const>(
        Node{Connective::disj, {}, std::move(left), std::move(right)}));
  }

  Formula Formula::truth() {
    static Formula const t(std::make_shared<Node const>(Node{Connective::truth, {}, {}, {}}));
    return t;
  }

  Formula Formula::falsum() {
    static Formula const f(std::make_shared<Node const>(Node{Connective::falsum, {}, {}, {}}));
    return f;
  }

  Connective Formula::kind() const noexcept {
    return _node->kind;
  }

  std::string const& Formula::name() const {
    if (kind() != Connective::var) {
      throw PreconditionError("name() of a formula that is not a variable");
    }
    return _node->name;
  }

  Formula const& Formula::left() const {
    if (!_node->left) {
      throw PreconditionError("left() of a formula without a binary connective");
    }
    return *_node->left;
  }

  Formula const& Formula::right() const {
    if (!_node->right) {
      throw PreconditionError("right() of a formula without a binary connective");
    }
    return *_node->right;
  }

  bool operator==(Formula const& a, Formula const& b) {
    if (a._node == b._node) {
      return true;
    }
    if (a.kind() != b.kind()) {
      return false;
    }
    switch (a.kind()) {
      case Connective::var:
        return a.name() == b.name();
      case Connective::conj:
      case Connective::disj:
        return a.left() == b.left() && a.right() == b.right();
      default:
        return true;
    }
  }

  namespace {
    // Binding strength; /\ binds tighter than \/, both left-associative.
    int precedence(Connective c) {
      switch (c) {
        case Connective::disj:
          return 1;
        case Connective::conj:
          return 2;
        default:
          return 3;
      }
    }

    void write(Formula const& a, std::string& out);

    void write_operand(Formula const& a, std::string& out, int needed) {
      if (precedence(a.kind()) < needed) {
        out += '(';
        write(a, out);
        out += ')';
      } else {
        write(a, out);
      }
    }

    void write(Formula const& a, std::string& out) {
      switch (a.kind()) {
        case Connective::var:
          out += a.name();
          break;
        case Connective::truth:
          out += 'T';
          break;
        case Connective::falsum:
          out += 'F';
          break;
        case Connective::conj:
        case Connective::disj: {
          int const p = precedence(a.kind());
          write_operand(a.left(), out, p);
          out += a.is(Connective::conj) ? " /\\ " : " \\/ ";
          write_operand(a.right(), out, p + 1);
          break;
        }
      }
    }
  }  // namespace

  std::string Formula::to_string() const {
    std::string out;
    write(*this, out);
    return out;
  }

  Formula dual(Formula const& a) {
    switch (a.kind()) {
      case Connective::var:
        return a;
      case Connective::truth:
        return Formula::falsum();
      case Connective::falsum:
        return Formula::truth();
      case Connective::conj:
        return Formula::disj(dual(a.left()), dual(a.right()));
      case Connective::disj:
        return Formula::conj(dual(a.left()), dual(a.right()));
    }
    return a;
  }

}  // namespace splitpre::logic
