#include "splitpre/logic/generate.hpp"

#include <array>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "splitpre/error.hpp"

namespace splitpre::logic {

  namespace {

    template <typename T>
    T const& pick(std::vector<T> const& options, Rng& rng) {
      std::uniform_int_distribution<std::size_t> dist(0, options.size() - 1);
      return options[dist(rng)];
    }

    bool chance(double p, Rng& rng) {
      return std::bernoulli_distribution(p)(rng);
    }

    void variables(Formula const& a, std::set<std::string>& out) {
      if (a.is(Connective::var)) {
        out.insert(a.name());
      } else if (a.is(Connective::conj) || a.is(Connective::disj)) {
        variables(a.left(), out);
        variables(a.right(), out);
      }
    }

    // In the conjunctive fragment C -> A exists iff every variable of A
    // occurs in C.
    bool conj_derivable(Formula const& c, Formula const& a) {
      std::set<std::string> have, need;
      variables(c, have);
      variables(a, need);
      for (auto const& v : need) {
        if (!have.contains(v)) {
          return false;
        }
      }
      return true;
    }

    Derivation conj_solve(Formula const& c, Formula const& a, unsigned depth, Rng& rng) {
      std::vector<std::function<Derivation()>> options;
      if (c == a) {
        options.emplace_back([&] { return Derivation::id(c); });
      }
      if (a.is(Connective::truth)) {
        options.emplace_back([&] { return Derivation::k_top(c); });
      }
      if (a.is(Connective::conj)) {
        options.emplace_back([&] {
          Derivation f = conj_solve(c, a.left(), depth, rng);
          Derivation g = conj_solve(c, a.right(), depth, rng);
          return Derivation::pair(std::move(f), std::move(g));
        });
      }
      if (c.is(Connective::conj)) {
        if (conj_derivable(c.left(), a)) {
          options.emplace_back([&] {
            return Derivation::comp(conj_solve(c.left(), a, depth, rng),
                                    Derivation::k1_conj(c.left(), c.right()));
          });
        }
        if (conj_derivable(c.right(), a)) {
          options.emplace_back([&] {
            return Derivation::comp(conj_solve(c.right(), a, depth, rng),
                                    Derivation::k2_conj(c.left(), c.right()));
          });
        }
      }
      if (depth > 0 && chance(0.3, rng)) {
        Derivation f = random_derivation_from(Fragment::conjunctive, c, 1, rng);
        if (conj_derivable(f.target(), a)) {
          Derivation g = conj_solve(f.target(), a, depth - 1, rng);
          return Derivation::comp(std::move(g), std::move(f));
        }
      }
      // Nonempty whenever c -> a is derivable: peel a, then project c.
      return pick(options, rng)();
    }

    void require_simple(Fragment fragment) {
      if (fragment != Fragment::conjunctive && fragment != Fragment::disjunctive) {
        throw PreconditionError("derivability search is only available for the conj and disj "
                                "fragments, not "
                                + std::string(to_string(fragment)));
      }
    }

  }  // namespace

  Formula random_formula(Fragment fragment, unsigned max_depth, Rng& rng) {
    static std::array<char const*, 3> const names = {"p", "q", "r"};

    std::vector<Connective> leaves = {Connective::var, Connective::var, Connective::var};
    for (auto c : {Connective::truth, Connective::falsum}) {
      if (allows(fragment, c)) {
        leaves.push_back(c);
      }
    }
    std::vector<Connective> binaries;
    for (auto c : {Connective::conj, Connective::disj}) {
      if (allows(fragment, c)) {
        binaries.push_back(c);
      }
    }

    if (max_depth == 0 || chance(0.4, rng)) {
      switch (pick(leaves, rng)) {
        case Connective::truth:
          return Formula::truth();
        case Connective::falsum:
          return Formula::falsum();
        default:
          return Formula::var(pick(std::vector<std::string>(names.begin(), names.end()), rng));
      }
    }
    Formula l = random_formula(fragment, max_depth - 1, rng);
    Formula r = random_formula(fragment, max_depth - 1, rng);
    return pick(binaries, rng) == Connective::conj ? Formula::conj(std::move(l), std::move(r))
                                                   : Formula::disj(std::move(l), std::move(r));
  }

  Derivation random_derivation_from(Fragment fragment, Formula const& c, unsigned depth, Rng& rng) {
    if (depth == 0) {
      return Derivation::id(c);
    }
    double const roll = std::uniform_real_distribution<double>(0, 1)(rng);

    if (roll >= 0.7) {
      std::vector<std::function<Derivation()>> options;
      if (allows(fragment, Rule::pair)) {
        options.emplace_back([&] {
          Derivation f = random_derivation_from(fragment, c, depth - 1, rng);
          Derivation g = random_derivation_from(fragment, c, depth - 1, rng);
          return Derivation::pair(std::move(f), std::move(g));
        });
      }
      if (allows(fragment, Rule::copair) && c.is(Connective::disj)) {
        // Route both branches into the disjunction of their targets.
        options.emplace_back([&] {
          Derivation f  = random_derivation_from(fragment, c.left(), depth - 1, rng);
          Derivation g  = random_derivation_from(fragment, c.right(), depth - 1, rng);
          Formula    t1 = f.target(), t2 = g.target();
          return Derivation::copair(Derivation::comp(Derivation::k1_disj(t1, t2), std::move(f)),
                                    Derivation::comp(Derivation::k2_disj(t1, t2), std::move(g)));
        });
      }
      if (!options.empty()) {
        return pick(options, rng)();
      }
    } else if (roll >= 0.4) {
      Derivation f = random_derivation_from(fragment, c, depth - 1, rng);
      Derivation g = random_derivation_from(fragment, f.target(), depth - 1, rng);
      return Derivation::comp(std::move(g), std::move(f));
    }

    std::vector<std::function<Derivation()>> axioms;
    axioms.emplace_back([&] { return Derivation::id(c); });
    if (c.is(Connective::conj)) {
      axioms.emplace_back([&] { return Derivation::k1_conj(c.left(), c.right()); });
      axioms.emplace_back([&] { return Derivation::k2_conj(c.left(), c.right()); });
    }
    if (allows(fragment, Rule::k_top)) {
      axioms.emplace_back([&] { return Derivation::k_top(c); });
    }
    if (allows(fragment, Rule::k1_disj)) {
      axioms.emplace_back([&] { return Derivation::k1_disj(c, random_formula(fragment, 1, rng)); });
      axioms.emplace_back([&] { return Derivation::k2_disj(random_formula(fragment, 1, rng), c); });
    }
    if (allows(fragment, Rule::k_bot) && c.is(Connective::falsum)) {
      axioms.emplace_back([&] { return Derivation::k_bot(random_formula(fragment, 2, rng)); });
    }
    return pick(axioms, rng)();
  }

  Derivation random_derivation(Fragment fragment, unsigned max_depth, std::uint64_t seed) {
    Rng     rng(seed);
    Formula source = random_formula(fragment, 2, rng);
    return random_derivation_from(fragment, source, max_depth, rng);
  }

  bool derivable(Fragment fragment, Formula const& source, Formula const& target) {
    require_simple(fragment);
    if (fragment == Fragment::conjunctive) {
      return conj_derivable(source, target);
    }
    return conj_derivable(dual(target), dual(source));
  }

  std::optional<Derivation> random_derivation_between(Fragment       fragment,
                                                      Formula const& source,
                                                      Formula const& target,
                                                      unsigned       depth,
                                                      Rng&           rng) {
    if (!derivable(fragment, source, target)) {
      return std::nullopt;
    }
    if (fragment == Fragment::conjunctive) {
      return conj_solve(source, target, depth, rng);
    }
    // A disjunctive derivation C -> A is the mirror of a conjunctive A* -> C*.
    return dual(conj_solve(dual(target), dual(source), depth, rng));
  }

}  // namespace splitpre::logic
