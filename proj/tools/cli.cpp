#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "splitpre/brauer.hpp"
#include "splitpre/laws.hpp"
#include "splitpre/logic/parser.hpp"
#include "splitpre/logic/translate.hpp"
#include "splitpre/text.hpp"

namespace splitpre::cli {

  namespace {

    std::optional<SplitPreorder> load(std::string const& path, std::ostream& err) {
      std::ifstream in(path);
      if (!in) {
        err << "error: " << path << ": cannot open file\n";
        return std::nullopt;
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      try {
        return text::parse_split_preorder(buffer.str());
      } catch (text::FormatError const& e) {
        err << "error: " << path << ":" << e.line() << ": " << e.what() << '\n';
        return std::nullopt;
      }
    }

    int cmd_compose(std::string const& file_p,
                    std::string const& file_r,
                    std::ostream&      out,
                    std::ostream&      err) {
      auto p = load(file_p, err);
      auto r = load(file_r, err);
      if (!p || !r) {
        return failure;
      }
      if (r->tgt() != p->src()) {
        err << "error: " << file_r << " has target " << r->tgt() << " but " << file_p
            << " has source " << p->src() << '\n';
        return size_mismatch;
      }
      out << text::to_text(compose(*p, *r));
      return ok;
    }

    int cmd_repr(std::size_t p, std::uint64_t cap, std::string const& file, std::ostream& out,
                 std::ostream& err) {
      auto r = load(file, err);
      if (!r) {
        return failure;
      }
      try {
        out << text::to_text(brauer::repr_arrow(cones::Chain(p), *r, cap));
      } catch (BoundExceeded const& e) {
        err << "error: " << e.what() << '\n';
        return bound_exceeded;
      }
      return ok;
    }

    struct CheckOptions {
      std::vector<std::string> laws       = {"all"};
      std::size_t              max        = 2;
      std::size_t              random_max = 3;
      std::size_t              samples    = 1000;
      std::size_t              p          = 2;
      std::size_t              m          = 2;
      std::size_t              n          = 2;
      std::size_t              size       = 3;
      std::uint64_t            seed       = 1;
    };

    void print(laws::LawReport const& report, std::ostream& out) {
      out << report.law << ": " << (report.passed() ? "pass" : "FAIL") << ", " << report.checked
          << " checked";
      if (!report.passed()) {
        out << ", " << report.failed << " failed";
      }
      out << '\n';
      for (auto const& [name, count] : report.shapes) {
        out << "  " << name << ": " << count << '\n';
      }
      if (!report.passed()) {
        out << "first counterexample:\n" << report.counterexample;
      }
    }

    int cmd_check(CheckOptions const& o, std::ostream& out, std::ostream& err) {
      cones::Chain const chain(o.p);
      using Runner = std::function<laws::LawReport()>;
      std::vector<std::pair<std::string, Runner>> const all = {
          {"identity", [&] { return laws::identity_laws(o.max); }},
          {"assoc",
           [&] {
             return laws::associativity(std::min<std::size_t>(o.max, 1), o.samples, o.random_max, o.seed);
           }},
          {"functor", [&] { return laws::functoriality_exhaustive(chain, o.max); }},
          {"functor-random",
           [&] { return laws::functoriality_random(chain, o.samples, o.max, o.seed); }},
          {"faithful", [&] { return laws::faithfulness(o.m, o.n, chain); }},
          {"repr-identity", [&] { return laws::identity_preservation(chain, o.max + 1); }},
          {"witness", [&] { return laws::witness(chain, o.samples, o.max, o.seed); }},
          {"cones", [&] { return laws::cone_propositions(o.size, chain); }},
          {"embedding", [&] { return laws::embedding(o.max); }},
          {"cartesian",
           [&] { return laws::cartesian_equations(logic::Fragment::conjunctive, o.samples, o.seed); }},
          {"cocartesian",
           [&] { return laws::cartesian_equations(logic::Fragment::disjunctive, o.samples, o.seed); }},
          {"closure", [&] { return laws::closure_variant(logic::Fragment::conjunctive, o.samples, o.seed); }},
      };

      std::vector<std::string> wanted;
      for (auto const& law : o.laws) {
        if (law == "all") {
          for (auto const& [name, run] : all) {
            wanted.push_back(name);
          }
        } else if (std::none_of(all.begin(), all.end(), [&](auto const& e) { return e.first == law; })) {
          err << "error: unknown law '" << law << "'\n";
          return failure;
        } else {
          wanted.push_back(law);
        }
      }

      bool passed = true;
      for (auto const& name : wanted) {
        auto const& runner = std::find_if(all.begin(), all.end(), [&](auto const& e) { return e.first == name; })->second;
        try {
          auto report = runner();
          print(report, out);
          passed = passed && report.passed();
        } catch (BoundExceeded const& e) {
          err << "error: " << name << ": " << e.what() << '\n';
          return bound_exceeded;
        }
      }
      return passed ? ok : failure;
    }

    int cmd_proofeq(logic::Fragment    fragment,
                    bool               reversed,
                    std::string const& term1,
                    std::string const& term2,
                    std::ostream&      out,
                    std::ostream&      err) {
      try {
        auto f           = logic::parse_derivation(term1, fragment);
        auto g           = logic::parse_derivation(term2, fragment);
        auto orientation = reversed ? logic::Orientation::target_to_source
                                    : logic::Orientation::source_to_target;
        bool equivalent  = logic::proof_equiv(f, g, orientation);
        out << (equivalent ? "equivalent" : "distinct") << '\n';
        out << "# " << f.to_string() << " : " << f.source().to_string() << " -> "
            << f.target().to_string() << '\n'
            << text::to_text(logic::g_arrow(f, orientation));
        out << "# " << g.to_string() << '\n' << text::to_text(logic::g_arrow(g, orientation));
        return equivalent ? ok : failure;
      } catch (Error const& e) {
        err << "error: " << e.what() << '\n';
        return size_mismatch;
      }
    }

    int cmd_dot(logic::Fragment fragment, std::string const& input, std::ostream& out, std::ostream& err) {
      std::error_code ec;
      if (std::filesystem::is_regular_file(input, ec)) {
        auto r = load(input, err);
        if (!r) {
          return failure;
        }
        out << text::to_dot(*r);
        return ok;
      }
      try {
        out << text::to_dot(logic::g_arrow(logic::parse_derivation(input, fragment)));
        return ok;
      } catch (Error const& e) {
        err << "error: " << e.what() << '\n';
        return failure;
      }
    }

  }  // namespace

  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Split preorders, their relational representation, and proof equivalence", "splitpre"};
    app.require_subcommand(1);

    std::string file_p, file_r, input, term1, term2;
    std::size_t p   = 2;
    std::uint64_t cap = cones::default_cap;
    std::string fragment_name = "units";
    bool        reversed      = false;
    CheckOptions check;

    auto* compose = app.add_subcommand("compose", "Compose P after R and print P*R");
    compose->add_option("P", file_p, "Outer arrow file")->required();
    compose->add_option("R", file_r, "Inner arrow file")->required();

    auto* repr = app.add_subcommand("repr", "Print the relation representing an arrow");
    repr->add_option("--p", p, "Chain size")->check(CLI::Range(std::size_t(2), std::size_t(64)));
    repr->add_option("--cap", cap, "Largest function space to enumerate");
    repr->add_option("R", file_r, "Arrow file")->required();

    auto* chk = app.add_subcommand("check", "Verify laws by exhaustive and seeded sweeps");
    chk->add_option("--laws", check.laws,
                    "identity, assoc, functor, functor-random, faithful, repr-identity, witness, "
                    "cones, embedding, cartesian, cocartesian, closure or all")
        ->delimiter(',');
    chk->add_option("--max", check.max, "Largest object in exhaustive sweeps");
    chk->add_option("--random-max", check.random_max, "Largest object in random associativity triples");
    chk->add_option("--samples", check.samples, "Number of random instances");
    chk->add_option("--p", check.p, "Chain size")->check(CLI::Range(std::size_t(2), std::size_t(64)));
    chk->add_option("--m", check.m, "Source object for the faithfulness check");
    chk->add_option("--n", check.n, "Target object for the faithfulness check");
    chk->add_option("--size", check.size, "Universe size for the cone propositions");
    chk->add_option("--seed", check.seed, "Random seed");

    auto* proofeq = app.add_subcommand("proofeq", "Decide whether two derivations are equivalent");
    proofeq->add_option("--fragment", fragment_name, "conj, disj, conjdisj or units");
    proofeq->add_flag("--converse", reversed, "Orient edges from target to source");
    proofeq->add_option("f", term1, "First derivation")->required();
    proofeq->add_option("g", term2, "Second derivation")->required();

    auto* dot = app.add_subcommand("dot", "Render an arrow file or derivation as DOT");
    dot->add_option("--fragment", fragment_name, "conj, disj, conjdisj or units");
    dot->add_option("input", input, "Arrow file or derivation term")->required();

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::ParseError const& e) {
      return app.exit(e, out, err);
    }

    auto fragment = logic::parse_fragment(fragment_name);
    if (!fragment) {
      err << "error: unknown fragment '" << fragment_name << "'\n";
      return proofeq->parsed() ? size_mismatch : failure;
    }

    if (compose->parsed()) {
      return cmd_compose(file_p, file_r, out, err);
    }
    if (repr->parsed()) {
      return cmd_repr(p, cap, file_r, out, err);
    }
    if (chk->parsed()) {
      try {
        return cmd_check(check, out, err);
      } catch (Error const& e) {
        err << "error: " << e.what() << '\n';
        return failure;
      }
    }
    if (proofeq->parsed()) {
      return cmd_proofeq(*fragment, reversed, term1, term2, out, err);
    }
    return cmd_dot(*fragment, input, out, err);
  }

}  // namespace splitpre::cli
