#pragma once

// Representing a relation R on {0..n-1} by the set F(R) of functions into a
// finite chain that are monotone along R.
//
// Functions W -> p are FuncTables.  They are numbered as base-p numerals with
// index 0 the least significant digit; the same code is used for the objects
// p^m of the relational representation in brauer.hpp.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "splitpre/relation.hpp"

namespace splitpre::cones {

  using code_type = std::uint64_t;

  // The linear order 0 < 1 < ... < size - 1, size >= 2.
  class Chain {
   public:
    // Throws PreconditionError when size < 2.
    explicit Chain(std::size_t size);

    std::size_t size() const noexcept {
      return _size;
    }

    std::size_t least() const noexcept {
      return 0;
    }

    std::size_t greatest() const noexcept {
      return _size - 1;
    }

    friend bool operator==(Chain const&, Chain const&) = default;

   private:
    std::size_t _size;
  };

  // Default cap on p^n for any function-space enumeration.
  inline constexpr code_type default_cap = 4096;

  // p^n, or BoundExceeded if that exceeds cap.
  code_type function_count(std::size_t domain_size, Chain const& chain, code_type cap = default_cap);

  class FuncTable {
   public:
    FuncTable() = default;
    explicit FuncTable(std::vector<std::size_t> values) : _values(std::move(values)) {}
    FuncTable(std::initializer_list<std::size_t> values) : _values(values) {}

    std::size_t domain_size() const noexcept {
      return _values.size();
    }

    std::size_t operator[](std::size_t x) const {
      return _values.at(x);
    }

    std::span<std::size_t const> values() const noexcept {
      return _values;
    }

    // Throws PreconditionError if a value is not an element of the chain.
    code_type        code(Chain const& chain) const;
    static FuncTable decode(code_type code, std::size_t domain_size, Chain const& chain);

    friend bool operator==(FuncTable const&, FuncTable const&) = default;

   private:
    std::vector<std::size_t> _values;
  };

  // Characteristic function of the cone {y | x r y}.
  FuncTable cone_char(FiniteRelation const& r, std::size_t x, Chain const& chain);

  // Whether x r y implies f(x) <= f(y) for all x, y.
  bool is_monotone(FiniteRelation const& r, FuncTable const& f);

  // F(r), in increasing code order.
  std::vector<FuncTable> monotone_set(FiniteRelation const& r,
                                      Chain const&          chain,
                                      code_type             cap = default_cap);

  // r reflexive iff every cone function takes value 1 at its apex.
  bool check_prop1(FiniteRelation const& r, Chain const& chain, code_type cap = default_cap);
  // r transitive iff every cone function is in F(r).
  bool check_prop2(FiniteRelation const& r, Chain const& chain, code_type cap = default_cap);
  // x r y iff f(x) <= f(y) for all f in F(r).
  bool check_prop3_star(FiniteRelation const& r, Chain const& chain, code_type cap = default_cap);

}  // namespace splitpre::cones
