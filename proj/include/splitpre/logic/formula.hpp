#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace splitpre::logic {

  enum class Connective : std::uint8_t { var, conj, disj, truth, falsum };

  // Immutable propositional formula over /\, \/, T and F.  Copies share
  // structure.
  class Formula {
   public:
    static Formula var(std::string name);
    static Formula conj(Formula left, Formula right);
    static Formula disj(Formula left, Formula right);
    static Formula truth();
    static Formula falsum();

    Connective kind() const noexcept;

    bool is(Connective c) const noexcept {
      return kind() == c;
    }

    // Only for var.
    std::string const& name() const;
    // Only for conj and disj.
    Formula const& left() const;
    Formula const& right() const;

    // Written in the input grammar with the fewest parentheses that parse
    // back to the same tree.
    std::string to_string() const;

    friend bool operator==(Formula const& a, Formula const& b);

   private:
    struct Node;
    explicit Formula(std::shared_ptr<Node const> node) : _node(std::move(node)) {}

    std::shared_ptr<Node const> _node;
  };

  // Swaps /\ with \/ and T with F.
  Formula dual(Formula const& a);

}  // namespace splitpre::logic
