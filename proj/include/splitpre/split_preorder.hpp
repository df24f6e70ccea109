#pragma once

// Split preorders on finite ordinals and their composition.
//
// An arrow m -> n is a preorder on the disjoint union of m source nodes and
// n target nodes.  Internally the universe is laid out as positions
// [0, m) for the source nodes followed by [m, m + n) for the target nodes,
// and the stored relation is always the full reflexive-transitive closure,
// so equality of arrows is equality of bit matrices.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "splitpre/relation.hpp"

namespace splitpre {

  enum class Tag : std::uint8_t { source, target };

  struct Node {
    Tag         tag;
    std::size_t index;

    friend auto operator<=>(Node const&, Node const&) = default;
  };

  inline Node source(std::size_t i) {
    return {Tag::source, i};
  }

  inline Node target(std::size_t i) {
    return {Tag::target, i};
  }

  // "s3", "t0"
  std::string to_string(Node const& node);

  using NodePair = std::pair<Node, Node>;

  // A relation on the tagged universe, without the preorder invariants.
  class SplitRelation {
   public:
    SplitRelation(std::size_t src, std::size_t tgt);
    SplitRelation(std::size_t src, std::size_t tgt, FiniteRelation rel);
    SplitRelation(std::size_t src, std::size_t tgt, std::initializer_list<NodePair> pairs);

    std::size_t src() const noexcept {
      return _src;
    }

    std::size_t tgt() const noexcept {
      return _tgt;
    }

    std::size_t universe_size() const noexcept {
      return _src + _tgt;
    }

    // Position of a node in the [sources | targets] layout; throws
    // std::out_of_range for an index outside its side.
    std::size_t position(Node const& node) const;
    Node        node_at(std::size_t position) const;

    bool contains(Node const& u, Node const& v) const;
    void insert(Node const& u, Node const& v);

    FiniteRelation const& relation() const noexcept {
      return _rel;
    }

    // Lexicographic: source < target, then index.
    std::vector<NodePair> pairs() const;

    friend bool operator==(SplitRelation const&, SplitRelation const&) = default;

   private:
    std::size_t    _src;
    std::size_t    _tgt;
    FiniteRelation _rel;
  };

  bool is_split_preorder(SplitRelation const& r);

  class SplitPreorder {
   public:
    // Throws PreconditionError unless r is reflexive and transitive.
    explicit SplitPreorder(SplitRelation r);

    // Reflexive-transitive closure of the given generators.
    static SplitPreorder closure_of(SplitRelation const& generators);

    std::size_t src() const noexcept {
      return _rel.src();
    }

    std::size_t tgt() const noexcept {
      return _rel.tgt();
    }

    bool contains(Node const& u, Node const& v) const {
      return _rel.contains(u, v);
    }

    SplitRelation const& split_relation() const noexcept {
      return _rel;
    }

    FiniteRelation const& relation() const noexcept {
      return _rel.relation();
    }

    std::vector<NodePair> pairs() const {
      return _rel.pairs();
    }

    // The strictification, as a sorted list of pairs.
    std::vector<NodePair> strict_pairs() const;

    friend bool operator==(SplitPreorder const&, SplitPreorder const&) = default;

   private:
    friend SplitPreorder compose(SplitPreorder const&, SplitPreorder const&);
    friend SplitPreorder to_split_equivalence(SplitPreorder const&);
    friend SplitPreorder converse(SplitPreorder const&);
    friend std::vector<SplitPreorder> enumerate_split_preorders(std::size_t, std::size_t);

    struct unchecked_t {};
    SplitPreorder(SplitRelation r, unchecked_t);

    SplitRelation _rel;
  };

  inline bool equals(SplitPreorder const& a, SplitPreorder const& b) {
    return a == b;
  }

  // 1_n: (u, v) related iff they carry the same index, whatever the tags.
  SplitPreorder identity(std::size_t n);

  // Three-zone working universe of m + n + k nodes laid out as
  // [X zone | Y zone | Z zone].  untarget places r : m -> n on the X and Y
  // zones, its target nodes becoming the (untagged) middle; unsource places
  // p : n -> k on the Y and Z zones, its source nodes becoming the middle.
  FiniteRelation untarget(SplitPreorder const& r, std::size_t k);
  FiniteRelation unsource(SplitPreorder const& p, std::size_t m);

  // p * r : m -> k for r : m -> n and p : n -> k, obtained by gluing the two
  // arrows along the middle zone, closing transitively and forgetting the
  // middle.  Throws SizeMismatch when r.tgt() != p.src().
  SplitPreorder compose(SplitPreorder const& p, SplitPreorder const& r);

  // The split preorder whose strict part is {(s_x, t_y) | x rel y}.
  SplitPreorder from_relation(Relation const& rel);

  // Transitive closure of the symmetric closure: a split equivalence.
  SplitPreorder to_split_equivalence(SplitPreorder const& r);

  SplitPreorder converse(SplitPreorder const& r);

  // Every split preorder m -> n, via enumerate_preorders(m + n).  Throws
  // BoundExceeded when m + n > max_enumeration_size.
  std::vector<SplitPreorder> enumerate_split_preorders(std::size_t m, std::size_t n);

  // Closure of a random relation in which each off-diagonal pair is present
  // with probability density.
  SplitPreorder random_split_preorder(std::size_t     m,
                                      std::size_t     n,
                                      std::mt19937_64& rng,
                                      double          density = 0.2);

}  // namespace splitpre
