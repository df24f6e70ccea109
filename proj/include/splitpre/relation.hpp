#pragma once

// Finite binary relations stored as dense bit matrices.
//
// FiniteRelation is an endorelation on the universe {0, ..., size - 1}; it is
// the substrate for closures, strictification and exhaustive enumeration.
// Relation is a heterogeneous relation a -> b, i.e. an arrow of the category
// of sets and binary relations, composed in the usual way.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace splitpre {

  namespace detail {

    class BitMatrix {
     public:
      using word_type = std::uint64_t;
      static constexpr std::size_t word_bits = 64;

      BitMatrix() = default;
      BitMatrix(std::size_t rows, std::size_t cols);

      std::size_t rows() const noexcept {
        return _rows;
      }

      std::size_t cols() const noexcept {
        return _cols;
      }

      bool test(std::size_t i, std::size_t j) const noexcept {
        return (_data[i * _words + j / word_bits] >> (j % word_bits)) & 1U;
      }

      void set(std::size_t i, std::size_t j, bool value = true) noexcept {
        auto&     w    = _data[i * _words + j / word_bits];
        word_type mask = word_type(1) << (j % word_bits);
        w              = value ? (w | mask) : (w & ~mask);
      }

      std::span<word_type const> row(std::size_t i) const noexcept {
        return {_data.data() + i * _words, _words};
      }

      std::span<word_type> row(std::size_t i) noexcept {
        return {_data.data() + i * _words, _words};
      }

      std::size_t count() const noexcept;

      friend bool operator==(BitMatrix const&, BitMatrix const&) = default;

     private:
      std::size_t            _rows  = 0;
      std::size_t            _cols  = 0;
      std::size_t            _words = 0;
      std::vector<word_type> _data;
    };

    // dst |= src, word by word; both spans have the same length.
    void or_into(std::span<BitMatrix::word_type>       dst,
                 std::span<BitMatrix::word_type const> src) noexcept;

  }  // namespace detail

  using Pair = std::pair<std::size_t, std::size_t>;

  class FiniteRelation {
   public:
    FiniteRelation() = default;
    explicit FiniteRelation(std::size_t size);
    FiniteRelation(std::size_t size, std::initializer_list<Pair> pairs);
    FiniteRelation(std::size_t size, std::span<Pair const> pairs);

    static FiniteRelation diagonal(std::size_t size);
    static FiniteRelation full(std::size_t size);

    std::size_t size() const noexcept {
      return _bits.rows();
    }

    // Throws std::out_of_range for coordinates outside the universe.
    bool contains(std::size_t i, std::size_t j) const;
    void insert(std::size_t i, std::size_t j);
    void erase(std::size_t i, std::size_t j);

    std::size_t count() const noexcept {
      return _bits.count();
    }

    bool empty() const noexcept {
      return count() == 0;
    }

    // All pairs in lexicographic order.
    std::vector<Pair> pairs() const;

    // Elements y with (x, y) in the relation, as a bit row.
    std::span<std::uint64_t const> row(std::size_t x) const {
      return _bits.row(x);
    }

    bool is_subset_of(FiniteRelation const& other) const;

    FiniteRelation& operator|=(FiniteRelation const& other);

    friend bool operator==(FiniteRelation const&, FiniteRelation const&)
        = default;

   private:
    friend FiniteRelation transitive_closure(FiniteRelation const&);

    void check(std::size_t i, std::size_t j) const;

    detail::BitMatrix _bits;
  };

  // Least transitive relation containing r (Warshall over bit rows).
  FiniteRelation transitive_closure(FiniteRelation const& r);
  FiniteRelation reflexive_closure(FiniteRelation const& r);
  FiniteRelation symmetric_closure(FiniteRelation const& r);
  FiniteRelation reflexive_transitive_closure(FiniteRelation const& r);
  // r without its diagonal.
  FiniteRelation strictify(FiniteRelation const& r);
  FiniteRelation converse(FiniteRelation const& r);

  bool is_reflexive(FiniteRelation const& r);
  bool is_irreflexive(FiniteRelation const& r);
  bool is_symmetric(FiniteRelation const& r);
  bool is_transitive(FiniteRelation const& r);
  bool is_preorder(FiniteRelation const& r);
  bool is_equivalence(FiniteRelation const& r);
  // Irreflexive, and x R y, y R z, x != z imply x R z.
  bool is_strictly_transitive(FiniteRelation const& r);

  // Largest universe enumerate_preorders accepts.
  inline constexpr std::size_t max_enumeration_size = 4;

  // Calls f on every preorder of the given universe, each exactly once, in
  // increasing order of the strict part read as a bitmask over the
  // off-diagonal pairs (row-major, bit 0 = first off-diagonal pair).
  // Throws BoundExceeded if size > max_enumeration_size.
  void for_each_preorder(std::size_t                                 size,
                         std::function<void(FiniteRelation const&)> const& f);
  std::vector<FiniteRelation> enumerate_preorders(std::size_t size);

  // A binary relation between {0..dom-1} and {0..cod-1}.
  class Relation {
   public:
    Relation() = default;
    Relation(std::size_t dom, std::size_t cod);
    Relation(std::size_t dom, std::size_t cod, std::initializer_list<Pair> pairs);

    static Relation identity(std::size_t n);

    std::size_t dom() const noexcept {
      return _bits.rows();
    }

    std::size_t cod() const noexcept {
      return _bits.cols();
    }

    bool contains(std::size_t x, std::size_t y) const;
    void insert(std::size_t x, std::size_t y);

    std::size_t count() const noexcept {
      return _bits.count();
    }

    std::vector<Pair> pairs() const;

    std::span<std::uint64_t const> row(std::size_t x) const {
      return _bits.row(x);
    }

    friend bool operator==(Relation const&, Relation const&) = default;

   private:
    friend Relation compose_plain(Relation const&, Relation const&);

    void check(std::size_t x, std::size_t y) const;

    detail::BitMatrix _bits;
  };

  // Relational composition of first : a -> b and second : b -> c, i.e.
  // {(x, y) | exists z, x first z and z second y}.  Throws SizeMismatch when
  // first.cod() != second.dom().
  Relation compose_plain(Relation const& first, Relation const& second);

}  // namespace splitpre
