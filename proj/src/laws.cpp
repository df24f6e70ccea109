#include "splitpre/laws.hpp"

#include <map>
#include <random>
#include <sstream>

#include "splitpre/brauer.hpp"
#include "splitpre/error.hpp"
#include "splitpre/logic/generate.hpp"
#include "splitpre/logic/translate.hpp"
#include "splitpre/split_preorder.hpp"
#include "splitpre/text.hpp"

namespace splitpre::laws {

  namespace {

    std::string shape(std::size_t a, std::size_t b) {
      return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }

    std::string shape(std::size_t a, std::size_t b, std::size_t c) {
      return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    }

    std::string relation_text(FiniteRelation const& r) {
      std::ostringstream out;
      out << "relation on " << r.size() << " {";
      bool first = true;
      for (auto [i, j] : r.pairs()) {
        out << (first ? "" : ", ") << "(" << i << "," << j << ")";
        first = false;
      }
      out << "}\n";
      return out.str();
    }

    void fail(LawReport& report, std::string const& what) {
      if (report.failed++ == 0) {
        report.counterexample = what;
      }
    }

    // Every relation on a universe of the given size, as bitmasks.
    FiniteRelation relation_from_mask(std::size_t size, std::uint64_t mask) {
      FiniteRelation r(size);
      for (std::size_t b = 0; b < size * size; ++b) {
        if ((mask >> b) & 1U) {
          r.insert(b / size, b % size);
        }
      }
      return r;
    }

  }  // namespace

  LawReport identity_laws(std::size_t max_size) {
    LawReport report;
    report.law = "identity";
    for (std::size_t m = 0; m <= max_size; ++m) {
      for (std::size_t n = 0; n <= max_size; ++n) {
        auto const arrows = enumerate_split_preorders(m, n);
        auto const id_m   = identity(m);
        auto const id_n   = identity(n);
        for (auto const& r : arrows) {
          ++report.checked;
          if (compose(id_n, r) != r || compose(r, id_m) != r) {
            fail(report, text::to_text(r));
          }
        }
        report.shapes.emplace_back(shape(m, n), arrows.size());
      }
    }
    return report;
  }

  LawReport associativity(std::size_t   exhaustive_max,
                          std::size_t   random_triples,
                          std::size_t   random_max,
                          std::uint64_t seed) {
    LawReport report;
    report.law = "assoc";
    auto      check = [&report](SplitPreorder const& r, SplitPreorder const& p, SplitPreorder const& t) {
      ++report.checked;
      if (compose(t, compose(p, r)) != compose(compose(t, p), r)) {
        fail(report, text::to_text(r) + text::to_text(p) + text::to_text(t));
      }
    };

    std::size_t exhaustive = 0;
    for (std::size_t a = 0; a <= exhaustive_max; ++a) {
      for (std::size_t b = 0; b <= exhaustive_max; ++b) {
        for (std::size_t c = 0; c <= exhaustive_max; ++c) {
          for (std::size_t d = 0; d <= exhaustive_max; ++d) {
            for (auto const& r : enumerate_split_preorders(a, b)) {
              for (auto const& p : enumerate_split_preorders(b, c)) {
                for (auto const& t : enumerate_split_preorders(c, d)) {
                  check(r, p, t);
                  ++exhaustive;
                }
              }
            }
          }
        }
      }
    }
    report.shapes.emplace_back("exhaustive <= " + std::to_string(exhaustive_max), exhaustive);

    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> size(0, random_max);
    for (std::size_t i = 0; i < random_triples; ++i) {
      std::size_t a = size(rng), b = size(rng), c = size(rng), d = size(rng);
      auto        r = random_split_preorder(a, b, rng);
      auto        p = random_split_preorder(b, c, rng);
      auto        t = random_split_preorder(c, d, rng);
      check(r, p, t);
    }
    report.shapes.emplace_back("random <= " + std::to_string(random_max) + " seed "
                                   + std::to_string(seed),
                               random_triples);
    return report;
  }

  LawReport functoriality_exhaustive(cones::Chain const& chain, std::size_t max_size) {
    LawReport report;
    report.law = "functor";
    for (std::size_t m = 0; m <= max_size; ++m) {
      for (std::size_t n = 0; n <= max_size; ++n) {
        auto const first = enumerate_split_preorders(m, n);
        std::vector<brauer::RelArrow> first_images;
        for (auto const& r : first) {
          first_images.push_back(brauer::repr_arrow(chain, r));
        }
        for (std::size_t k = 0; k <= max_size; ++k) {
          auto const second = enumerate_split_preorders(n, k);
          std::vector<brauer::RelArrow> second_images;
          for (auto const& q : second) {
            second_images.push_back(brauer::repr_arrow(chain, q));
          }
          for (std::size_t i = 0; i < first.size(); ++i) {
            for (std::size_t j = 0; j < second.size(); ++j) {
              ++report.checked;
              auto const lhs = brauer::repr_arrow(chain, compose(second[j], first[i]));
              auto const rhs = compose_plain(first_images[i], second_images[j]);
              if (lhs != rhs) {
                fail(report, text::to_text(first[i]) + text::to_text(second[j]));
              }
            }
          }
          report.shapes.emplace_back(shape(m, n, k), first.size() * second.size());
        }
      }
    }
    return report;
  }

  LawReport functoriality_random(cones::Chain const& chain,
                                 std::size_t         pairs,
                                 std::size_t         max_size,
                                 std::uint64_t       seed) {
    LawReport report;
    report.law = "functor-random";
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> size(0, max_size);
    for (std::size_t i = 0; i < pairs; ++i) {
      std::size_t m = size(rng), n = size(rng), k = size(rng);
      auto        r = random_split_preorder(m, n, rng, 0.3);
      auto        q = random_split_preorder(n, k, rng, 0.3);
      ++report.checked;
      if (!brauer::verify_functoriality(chain, r, q)) {
        fail(report, text::to_text(r) + text::to_text(q));
      }
    }
    report.shapes.emplace_back("random <= " + std::to_string(max_size) + " seed "
                                   + std::to_string(seed),
                               pairs);
    return report;
  }

  LawReport faithfulness(std::size_t m, std::size_t n, cones::Chain const& chain) {
    LawReport report;
    report.law = "faithful";
    auto      result = brauer::verify_faithfulness(m, n, chain);
    report.checked   = result.arrows;
    report.shapes.emplace_back("distinct images " + shape(m, n), result.distinct_images);
    if (!result) {
      report.failed         = result.arrows - result.distinct_images;
      report.counterexample = text::to_text(result.collision->first)
                              + text::to_text(result.collision->second);
    }
    return report;
  }

  LawReport identity_preservation(cones::Chain const& chain, std::size_t max_size) {
    LawReport report;
    report.law = "repr-identity";
    for (std::size_t m = 0; m <= max_size; ++m) {
      ++report.checked;
      if (brauer::repr_arrow(chain, identity(m)) != brauer::repr_identity(chain, m)) {
        fail(report, text::to_text(identity(m)));
      }
    }
    return report;
  }

  LawReport witness(cones::Chain const& chain,
                    std::size_t         sample,
                    std::size_t         max_size,
                    std::uint64_t       seed) {
    LawReport report;
    report.law = "witness";
    std::mt19937_64 rng(seed);

    std::size_t const side = max_size + 1;
    std::vector<std::vector<SplitPreorder>> homs(side * side);
    for (std::size_t a = 0; a < side; ++a) {
      for (std::size_t b = 0; b < side; ++b) {
        homs[a * side + b] = enumerate_split_preorders(a, b);
      }
    }
    auto any = [&rng](std::size_t bound) {
      return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
    };

    std::size_t functions = 0;
    for (std::size_t i = 0; i < sample; ++i) {
      std::size_t m = any(side), n = any(side), k = any(side);
      auto const& rs = homs[m * side + n];
      auto const& ps = homs[n * side + k];
      auto const& r  = rs[any(rs.size())];
      auto const& p  = ps[any(ps.size())];
      ++report.checked;

      auto const image_r = brauer::repr_arrow(chain, r);
      auto const image_p = brauer::repr_arrow(chain, p);
      for (auto [c1, c2] : brauer::repr_arrow(chain, compose(p, r)).pairs()) {
        ++functions;
        auto f1 = cones::FuncTable::decode(c1, m, chain);
        auto f2 = cones::FuncTable::decode(c2, k, chain);
        auto c3 = brauer::glue_witness(r, p, f1, f2, chain).code(chain);
        if (!image_r.contains(c1, c3) || !image_p.contains(c3, c2)) {
          fail(report,
               text::to_text(r) + text::to_text(p) + "f1 code " + std::to_string(c1)
                   + ", f2 code " + std::to_string(c2) + "\n");
        }
      }
    }
    report.shapes.emplace_back("function pairs", functions);
    return report;
  }

  LawReport cone_propositions(std::size_t size, cones::Chain const& chain) {
    LawReport report;
    report.law = "cones";
    std::uint64_t const total = std::uint64_t(1) << (size * size);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      auto r = relation_from_mask(size, mask);
      ++report.checked;
      bool const star = cones::check_prop3_star(r, chain);
      if (cones::check_prop1(r, chain) != is_reflexive(r)) {
        fail(report, "reflexivity: " + relation_text(r));
      }
      if (cones::check_prop2(r, chain) != is_transitive(r)) {
        fail(report, "transitivity: " + relation_text(r));
      }
      if (is_preorder(r) && !star) {
        fail(report, "preorder without (*): " + relation_text(r));
      }
      if (is_preorder(r) != star) {
        fail(report, "(*) characterisation: " + relation_text(r));
      }
    }
    report.shapes.emplace_back("relations", total);

    auto const                          preorders = enumerate_preorders(size);
    std::vector<std::vector<cones::FuncTable>> sets;
    for (auto const& r : preorders) {
      sets.push_back(cones::monotone_set(r, chain));
    }
    for (std::size_t i = 0; i < preorders.size(); ++i) {
      for (std::size_t j = 0; j < preorders.size(); ++j) {
        ++report.checked;
        if ((preorders[i] == preorders[j]) != (sets[i] == sets[j])) {
          fail(report, "monotone sets: " + relation_text(preorders[i]) + relation_text(preorders[j]));
        }
      }
    }
    report.shapes.emplace_back("preorder pairs", preorders.size() * preorders.size());
    return report;
  }

  LawReport embedding(std::size_t max_size) {
    LawReport report;
    report.law = "embedding";
    auto all_relations = [](std::size_t a, std::size_t b) {
      std::vector<Relation> out;
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (a * b)); ++mask) {
        Relation r(a, b);
        for (std::size_t bit = 0; bit < a * b; ++bit) {
          if ((mask >> bit) & 1U) {
            r.insert(bit / b, bit % b);
          }
        }
        out.push_back(std::move(r));
      }
      return out;
    };
    // The image of Id is the identity of the image category, not of SplPre:
    // identity(1) also relates t0 to s0, which no plain relation produces.
    for (std::size_t m = 0; m <= max_size; ++m) {
      auto const unit_m = from_relation(Relation::identity(m));
      for (std::size_t n = 0; n <= max_size; ++n) {
        auto const unit_n = from_relation(Relation::identity(n));
        for (auto const& r : all_relations(m, n)) {
          auto const image = from_relation(r);
          ++report.checked;
          if (compose(image, unit_m) != image || compose(unit_n, image) != image) {
            fail(report, "identity on " + text::to_text(image));
          }
        }
      }
    }
    for (std::size_t m = 0; m <= max_size; ++m) {
      for (std::size_t n = 0; n <= max_size; ++n) {
        auto const first = all_relations(m, n);
        for (std::size_t k = 0; k <= max_size; ++k) {
          auto const second = all_relations(n, k);
          for (auto const& r : first) {
            for (auto const& q : second) {
              ++report.checked;
              if (compose(from_relation(q), from_relation(r)) != from_relation(compose_plain(r, q))) {
                fail(report, text::to_text(from_relation(r)) + text::to_text(from_relation(q)));
              }
            }
          }
          report.shapes.emplace_back(shape(m, n, k), first.size() * second.size());
        }
      }
    }
    return report;
  }

  LawReport cartesian_equations(logic::Fragment fragment, std::size_t count, std::uint64_t seed) {
    using logic::Derivation;
    using logic::Formula;
    using logic::Fragment;
    if (fragment != Fragment::conjunctive && fragment != Fragment::disjunctive) {
      throw PreconditionError("the equation suite needs the conj or disj fragment");
    }
    bool const conj = fragment == Fragment::conjunctive;

    LawReport report;
    report.law = conj ? "cartesian" : "cocartesian";
    std::map<std::string, std::size_t> tally;
    auto equation = [&](std::string const& name, Derivation const& lhs, Derivation const& rhs) {
      ++tally[name];
      if (!logic::proof_equiv(lhs, rhs)) {
        fail(report, name + ": " + lhs.to_string() + " vs " + rhs.to_string() + "\n");
      }
    };

    logic::Rng rng(seed);
    auto       from = [&](Formula const& a) { return logic::random_derivation_from(fragment, a, 3, rng); };
    for (std::size_t i = 0; i < count; ++i) {
      ++report.checked;
      Formula    a = logic::random_formula(fragment, 2, rng);
      Derivation f = from(a);
      if (conj) {
        // f : A -> B, g : A -> C, h : A -> B /\ C
        Derivation g = from(a);
        Formula    b = f.target(), c = g.target();
        Derivation h = *logic::random_derivation_between(fragment, a, Formula::conj(b, c), 2, rng);
        Derivation pair = Derivation::pair(f, g);
        equation("pi1 pair", Derivation::comp(Derivation::k1_conj(b, c), pair), f);
        equation("pi2 pair", Derivation::comp(Derivation::k2_conj(b, c), pair), g);
        equation("pair eta",
                 Derivation::pair(Derivation::comp(Derivation::k1_conj(b, c), h),
                                  Derivation::comp(Derivation::k2_conj(b, c), h)),
                 h);
        equation("bang", Derivation::comp(Derivation::k_top(b), f), Derivation::k_top(a));
      } else {
        // f : A -> C, g : B -> C, h : A \/ B -> C
        Formula                   c = f.target();
        std::optional<Derivation> g;
        for (int attempt = 0; attempt < 50 && !g; ++attempt) {
          g = logic::random_derivation_between(fragment, logic::random_formula(fragment, 2, rng), c, 2, rng);
        }
        if (!g) {
          g = f;
        }
        Formula    b = g->source();
        Derivation h = *logic::random_derivation_between(fragment, Formula::disj(a, b), c, 2, rng);
        Derivation copair = Derivation::copair(f, *g);
        equation("copair inl", Derivation::comp(copair, Derivation::k1_disj(a, b)), f);
        equation("copair inr", Derivation::comp(copair, Derivation::k2_disj(a, b)), *g);
        equation("copair eta",
                 Derivation::copair(Derivation::comp(h, Derivation::k1_disj(a, b)),
                                    Derivation::comp(h, Derivation::k2_disj(a, b))),
                 h);
        equation("abort", Derivation::comp(f, Derivation::k_bot(a)), Derivation::k_bot(c));
      }
      Derivation g = from(f.target());
      Derivation h = from(g.target());
      equation("left unit", Derivation::comp(Derivation::id(f.target()), f), f);
      equation("right unit", Derivation::comp(f, Derivation::id(f.source())), f);
      equation("assoc",
               Derivation::comp(h, Derivation::comp(g, f)),
               Derivation::comp(Derivation::comp(h, g), f));
    }
    for (auto const& [name, n] : tally) {
      report.shapes.emplace_back(name, n);
    }
    return report;
  }

  LawReport closure_variant(logic::Fragment fragment, std::size_t count, std::uint64_t seed) {
    using logic::Derivation;
    using logic::Fragment;
    LawReport report;
    report.law = "closure-variant";
    std::size_t equivalent = 0, distinct = 0;
    auto check = [&](Derivation const& f, Derivation const& g, bool both_ways) {
      ++report.checked;
      bool const same    = logic::proof_equiv(f, g);
      bool const closure = to_split_equivalence(logic::g_arrow(f)) == to_split_equivalence(logic::g_arrow(g));
      (same ? equivalent : distinct) += 1;
      if ((same && !closure) || (both_ways && closure && !same)) {
        fail(report, f.to_string() + " vs " + g.to_string() + "\n");
      }
    };

    logic::Rng rng(seed);
    if (fragment == Fragment::conjunctive || fragment == Fragment::disjunctive) {
      for (std::size_t i = 0; i < count; ++i) {
        auto source = logic::random_formula(fragment, 2, rng);
        auto f      = logic::random_derivation_from(fragment, source, 3, rng);
        auto g      = *logic::random_derivation_between(fragment, source, f.target(), 2, rng);
        check(f, g, true);
      }
    } else {
      // No search is available here: bucket random derivations by endpoints
      // until enough pairs turn up.
      std::map<std::string, std::vector<Derivation>> seen;
      for (std::size_t tries = 0; report.checked < count && tries < 200 * count; ++tries) {
        auto source = logic::random_formula(fragment, 1, rng);
        auto f      = logic::random_derivation_from(fragment, source, 2, rng);
        auto& bucket = seen[f.source().to_string() + " -> " + f.target().to_string()];
        if (!bucket.empty()) {
          check(f, bucket[std::uniform_int_distribution<std::size_t>(0, bucket.size() - 1)(rng)], false);
        }
        bucket.push_back(f);
      }
    }
    report.shapes.emplace_back("equivalent", equivalent);
    report.shapes.emplace_back("distinct", distinct);
    return report;
  }

}  // namespace splitpre::laws
