#include "splitpre/brauer.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "splitpre/error.hpp"

namespace splitpre::brauer {

  namespace {

    std::vector<FuncTable> all_functions(std::size_t domain_size, Chain const& chain, code_type cap) {
      code_type const        total = cones::function_count(domain_size, chain, cap);
      std::vector<FuncTable> out;
      out.reserve(total);
      for (code_type c = 0; c < total; ++c) {
        out.push_back(FuncTable::decode(c, domain_size, chain));
      }
      return out;
    }

    // Monotonicity of [f1, f2] along r without materializing the glued table.
    bool glued_monotone(std::vector<Pair> const& pairs,
                        std::size_t              m,
                        FuncTable const&         f1,
                        FuncTable const&         f2) {
      auto value = [&](std::size_t pos) { return pos < m ? f1[pos] : f2[pos - m]; };
      return std::all_of(pairs.begin(), pairs.end(), [&](Pair const& p) {
        return value(p.first) <= value(p.second);
      });
    }

  }  // namespace

  FuncTable pair_glue(FuncTable const& f1, FuncTable const& f2) {
    std::vector<std::size_t> values(f1.values().begin(), f1.values().end());
    values.insert(values.end(), f2.values().begin(), f2.values().end());
    return FuncTable(std::move(values));
  }

  RelArrow repr_identity(Chain const& chain, std::size_t m, code_type cap) {
    return RelArrow::identity(cones::function_count(m, chain, cap));
  }

  RelArrow repr_arrow(Chain const& chain, SplitPreorder const& r, code_type cap) {
    auto const sources = all_functions(r.src(), chain, cap);
    auto const targets = all_functions(r.tgt(), chain, cap);
    // The diagonal constrains nothing.
    auto const strict = strictify(r.relation()).pairs();

    RelArrow out(sources.size(), targets.size());
    for (std::size_t c1 = 0; c1 < sources.size(); ++c1) {
      for (std::size_t c2 = 0; c2 < targets.size(); ++c2) {
        if (glued_monotone(strict, r.src(), sources[c1], targets[c2])) {
          out.insert(c1, c2);
        }
      }
    }
    return out;
  }

  FuncTable glue_witness(SplitPreorder const& r,
                         SplitPreorder const& p,
                         FuncTable const&     f1,
                         FuncTable const&     f2,
                         Chain const&         chain) {
    if (r.tgt() != p.src()) {
      throw SizeMismatch("glue_witness needs composable arrows");
    }
    std::size_t const m = r.src(), n = r.tgt(), k = p.tgt();
    if (f1.domain_size() != m || f2.domain_size() != k) {
      throw SizeMismatch("glue_witness: functions do not match the outer objects");
    }
    // Also rejects values outside the chain.
    f1.code(chain);
    f2.code(chain);
    if (!glued_monotone(compose(p, r).relation().pairs(), m, f1, f2)) {
      throw PreconditionError("glue_witness: (f1, f2) is not in the image of the composite");
    }

    FiniteRelation work = untarget(r, k);
    work |= unsource(p, m);
    work = transitive_closure(work);

    std::vector<std::size_t> values(n, 0);
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t const mid     = m + y;
      bool              reached = false;
      std::size_t       best    = 0;
      for (std::size_t x = 0; x < m; ++x) {
        if (work.contains(x, mid)) {
          best    = reached ? std::max(best, f1[x]) : f1[x];
          reached = true;
        }
      }
      for (std::size_t z = 0; z < k; ++z) {
        if (work.contains(m + n + z, mid)) {
          best    = reached ? std::max(best, f2[z]) : f2[z];
          reached = true;
        }
      }
      values[y] = reached ? best : chain.least();
    }
    return FuncTable(std::move(values));
  }

  FunctorialityReport verify_functoriality(Chain const&         chain,
                                           SplitPreorder const& r,
                                           SplitPreorder const& q,
                                           code_type            cap) {
    RelArrow const composite = repr_arrow(chain, compose(q, r), cap);
    RelArrow const glued     = compose_plain(repr_arrow(chain, r, cap), repr_arrow(chain, q, cap));

    FunctorialityReport report;
    if (composite == glued) {
      return report;
    }
    report.holds = false;
    for (std::size_t x = 0; x < composite.dom(); ++x) {
      for (std::size_t y = 0; y < composite.cod(); ++y) {
        if (composite.contains(x, y) != glued.contains(x, y)) {
          report.differing          = Pair{x, y};
          report.in_composite_image = composite.contains(x, y);
          return report;
        }
      }
    }
    return report;
  }

  FaithfulnessReport verify_faithfulness(std::size_t m, std::size_t n, Chain const& chain, code_type cap) {
    auto const         arrows = enumerate_split_preorders(m, n);
    FaithfulnessReport report;
    report.arrows = arrows.size();

    // Keyed by the sorted pair list of the image.
    std::map<std::vector<Pair>, std::size_t> seen;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      auto [it, inserted] = seen.emplace(repr_arrow(chain, arrows[i], cap).pairs(), i);
      if (!inserted && report.holds) {
        report.holds     = false;
        report.collision = std::make_pair(arrows[it->second], arrows[i]);
      }
    }
    report.distinct_images = seen.size();
    return report;
  }

}  // namespace splitpre::brauer
