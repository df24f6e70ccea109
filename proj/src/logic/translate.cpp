#include "splitpre/logic/translate.hpp"

#include <utility>
#include <vector>

#include "splitpre/error.hpp"

namespace splitpre::logic {

  std::size_t g_object(Formula const& a) {
    switch (a.kind()) {
      case Connective::var:
        return 1;
      case Connective::conj:
      case Connective::disj:
        return g_object(a.left()) + g_object(a.right());
      default:
        return 0;
    }
  }

  namespace {

    void add_edge(SplitRelation& out, std::size_t s, std::size_t t, Orientation o) {
      if (o == Orientation::source_to_target) {
        out.insert(source(s), target(t));
      } else {
        out.insert(target(t), source(s));
      }
    }

    // Arrow m -> n whose only cross edges connect s_(i + src_shift) with
    // t_(i + tgt_shift) for i < count.
    SplitPreorder matching(std::size_t m,
                           std::size_t n,
                           std::size_t count,
                           std::size_t src_shift,
                           std::size_t tgt_shift,
                           Orientation o) {
      SplitRelation r(m, n);
      for (std::size_t i = 0; i < count; ++i) {
        add_edge(r, i + src_shift, i + tgt_shift, o);
      }
      return SplitPreorder::closure_of(r);
    }

    // Copies the edges of part between a source and a target node into out,
    // shifting source and target indices.
    void add_cross_edges(SplitRelation&       out,
                         SplitPreorder const& part,
                         std::size_t          src_shift,
                         std::size_t          tgt_shift) {
      auto shift = [&](Node u) {
        u.index += u.tag == Tag::source ? src_shift : tgt_shift;
        return u;
      };
      for (auto const& [u, v] : part.strict_pairs()) {
        if (u.tag != v.tag) {
          out.insert(shift(u), shift(v));
        }
      }
    }

  }  // namespace

  SplitPreorder g_arrow(Derivation const& d, Orientation o) {
    std::size_t const m = g_object(d.source());
    std::size_t const n = g_object(d.target());
    switch (d.rule()) {
      case Rule::id:
        // One edge per occurrence, oriented like the axioms: the identity of
        // the relations between ordinals, not identity(m), whose edges point
        // both ways and would survive composition with a projection.
        return matching(m, m, m, 0, 0, o);
      case Rule::k1_conj:
        // A /\ B -> A: the occurrences of A go straight across.
        return matching(m, n, n, 0, 0, o);
      case Rule::k2_conj:
        // A /\ B -> B: occurrence j of B sits at G(A) + j in the source.
        return matching(m, n, n, m - n, 0, o);
      case Rule::k1_disj:
        return matching(m, n, m, 0, 0, o);
      case Rule::k2_disj:
        return matching(m, n, m, 0, n - m, o);
      case Rule::k_top:
      case Rule::k_bot:
        return SplitPreorder::closure_of(SplitRelation(m, n));
      case Rule::comp:
        return compose(g_arrow(d.first(), o), g_arrow(d.second(), o));
      case Rule::pair: {
        SplitRelation r(m, n);
        add_cross_edges(r, g_arrow(d.first(), o), 0, 0);
        add_cross_edges(r, g_arrow(d.second(), o), 0, g_object(d.first().target()));
        return SplitPreorder::closure_of(r);
      }
      case Rule::copair: {
        SplitRelation r(m, n);
        add_cross_edges(r, g_arrow(d.first(), o), 0, 0);
        add_cross_edges(r, g_arrow(d.second(), o), g_object(d.first().source()), 0);
        return SplitPreorder::closure_of(r);
      }
    }
    throw PreconditionError("unknown rule");
  }

  bool proof_equiv(Derivation const& f, Derivation const& g, Orientation o) {
    if (!(f.source() == g.source()) || !(f.target() == g.target())) {
      throw EndpointMismatch("cannot compare " + f.to_string() + " : " + f.source().to_string()
                             + " -> " + f.target().to_string() + " with " + g.to_string()
                             + " : " + g.source().to_string() + " -> "
                             + g.target().to_string());
    }
    return g_arrow(f, o) == g_arrow(g, o);
  }

}  // namespace splitpre::logic
