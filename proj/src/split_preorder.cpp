#include "splitpre/split_preorder.hpp"

#include <stdexcept>

#include "splitpre/error.hpp"

namespace splitpre {

  std::string to_string(Node const& node) {
    return (node.tag == Tag::source ? "s" : "t") + std::to_string(node.index);
  }

  ////////////////////////////////////////////////////////////////////////
  // SplitRelation
  ////////////////////////////////////////////////////////////////////////

  SplitRelation::SplitRelation(std::size_t src, std::size_t tgt)
      : _src(src), _tgt(tgt), _rel(src + tgt) {}

  SplitRelation::SplitRelation(std::size_t src, std::size_t tgt, FiniteRelation rel)
      : _src(src), _tgt(tgt), _rel(std::move(rel)) {
    if (_rel.size() != src + tgt) {
      throw SizeMismatch("relation on " + std::to_string(_rel.size())
                         + " nodes cannot be split as " + std::to_string(src)
                         + " -> " + std::to_string(tgt));
    }
  }

  SplitRelation::SplitRelation(std::size_t                     src,
                               std::size_t                     tgt,
                               std::initializer_list<NodePair> pairs)
      : SplitRelation(src, tgt) {
    for (auto const& [u, v] : pairs) {
      insert(u, v);
    }
  }

  std::size_t SplitRelation::position(Node const& node) const {
    std::size_t bound = node.tag == Tag::source ? _src : _tgt;
    if (node.index >= bound) {
      throw std::out_of_range("node " + to_string(node) + " outside arrow "
                              + std::to_string(_src) + " -> "
                              + std::to_string(_tgt));
    }
    return node.tag == Tag::source ? node.index : _src + node.index;
  }

  Node SplitRelation::node_at(std::size_t pos) const {
    if (pos >= universe_size()) {
      throw std::out_of_range("position " + std::to_string(pos)
                              + " outside tagged universe");
    }
    return pos < _src ? source(pos) : target(pos - _src);
  }

  bool SplitRelation::contains(Node const& u, Node const& v) const {
    return _rel.contains(position(u), position(v));
  }

  void SplitRelation::insert(Node const& u, Node const& v) {
    _rel.insert(position(u), position(v));
  }

  std::vector<NodePair> SplitRelation::pairs() const {
    // Layout order already is the (tag, index) order.
    std::vector<NodePair> out;
    for (auto [i, j] : _rel.pairs()) {
      out.emplace_back(node_at(i), node_at(j));
    }
    return out;
  }

  bool is_split_preorder(SplitRelation const& r) {
    return is_preorder(r.relation());
  }

  ////////////////////////////////////////////////////////////////////////
  // SplitPreorder
  ////////////////////////////////////////////////////////////////////////

  SplitPreorder::SplitPreorder(SplitRelation r) : _rel(std::move(r)) {
    if (!is_split_preorder(_rel)) {
      throw PreconditionError("relation is not a preorder on the tagged universe");
    }
  }

  SplitPreorder::SplitPreorder(SplitRelation r, unchecked_t) : _rel(std::move(r)) {}

  SplitPreorder SplitPreorder::closure_of(SplitRelation const& generators) {
    return SplitPreorder(
        SplitRelation(generators.src(),
                      generators.tgt(),
                      reflexive_transitive_closure(generators.relation())),
        unchecked_t{});
  }

  std::vector<NodePair> SplitPreorder::strict_pairs() const {
    std::vector<NodePair> out;
    for (auto const& p : pairs()) {
      if (p.first != p.second) {
        out.push_back(p);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  SplitPreorder identity(std::size_t n) {
    SplitRelation r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (Node u : {source(i), target(i)}) {
        for (Node v : {source(i), target(i)}) {
          r.insert(u, v);
        }
      }
    }
    return SplitPreorder(std::move(r));
  }

  FiniteRelation untarget(SplitPreorder const& r, std::size_t k) {
    // r's layout [sources | targets] is already the [X | Y] prefix.
    std::size_t    width = r.src() + r.tgt() + k;
    FiniteRelation out(width);
    for (auto [i, j] : r.relation().pairs()) {
      out.insert(i, j);
    }
    return out;
  }

  FiniteRelation unsource(SplitPreorder const& p, std::size_t m) {
    std::size_t    width = m + p.src() + p.tgt();
    FiniteRelation out(width);
    for (auto [i, j] : p.relation().pairs()) {
      out.insert(m + i, m + j);
    }
    return out;
  }

  SplitPreorder compose(SplitPreorder const& p, SplitPreorder const& r) {
    if (r.tgt() != p.src()) {
      throw SizeMismatch("cannot compose " + std::to_string(r.src()) + " -> "
                         + std::to_string(r.tgt()) + " with "
                         + std::to_string(p.src()) + " -> "
                         + std::to_string(p.tgt()));
    }
    std::size_t const m = r.src(), n = r.tgt(), k = p.tgt();

    FiniteRelation work = untarget(r, k);
    work |= unsource(p, m);
    work = transitive_closure(work);

    auto keep = [m, n](std::size_t pos) { return pos < m ? pos : pos + n; };
    FiniteRelation rel(m + k);
    for (std::size_t i = 0; i < m + k; ++i) {
      for (std::size_t j = 0; j < m + k; ++j) {
        if (work.contains(keep(i), keep(j))) {
          rel.insert(i, j);
        }
      }
    }
    // Restricting a reflexive transitive relation keeps both properties.
    return SplitPreorder(SplitRelation(m, k, std::move(rel)), SplitPreorder::unchecked_t{});
  }

  SplitPreorder from_relation(Relation const& rel) {
    SplitRelation r(rel.dom(), rel.cod());
    for (auto [x, y] : rel.pairs()) {
      r.insert(source(x), target(y));
    }
    return SplitPreorder::closure_of(r);
  }

  SplitPreorder to_split_equivalence(SplitPreorder const& r) {
    return SplitPreorder(SplitRelation(r.src(),
                                       r.tgt(),
                                       transitive_closure(symmetric_closure(r.relation()))),
                         SplitPreorder::unchecked_t{});
  }

  SplitPreorder converse(SplitPreorder const& r) {
    return SplitPreorder(SplitRelation(r.src(), r.tgt(), converse(r.relation())),
                         SplitPreorder::unchecked_t{});
  }

  std::vector<SplitPreorder> enumerate_split_preorders(std::size_t m, std::size_t n) {
    if (m + n > max_enumeration_size) {
      throw BoundExceeded("split preorder enumeration needs m + n <= "
                          + std::to_string(max_enumeration_size) + ", got "
                          + std::to_string(m) + " + " + std::to_string(n));
    }
    std::vector<SplitPreorder> out;
    for_each_preorder(m + n, [&](FiniteRelation const& rel) {
      out.push_back(SplitPreorder(SplitRelation(m, n, rel), SplitPreorder::unchecked_t{}));
    });
    return out;
  }

  SplitPreorder random_split_preorder(std::size_t      m,
                                      std::size_t      n,
                                      std::mt19937_64& rng,
                                      double           density) {
    std::bernoulli_distribution coin(density);
    FiniteRelation              rel(m + n);
    for (std::size_t i = 0; i < m + n; ++i) {
      for (std::size_t j = 0; j < m + n; ++j) {
        if (i != j && coin(rng)) {
          rel.insert(i, j);
        }
      }
    }
    return SplitPreorder::closure_of(SplitRelation(m, n, std::move(rel)));
  }

}  // namespace splitpre
