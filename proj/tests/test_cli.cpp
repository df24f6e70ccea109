#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"

namespace {

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = splitpre::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }

  std::string fixture(std::string const& name) {
    return std::string(SPLITPRE_FIXTURES) + "/" + name;
  }

  bool has(std::string const& text, std::string const& needle) {
    return text.find(needle) != std::string::npos;
  }

}  // namespace

TEST_CASE("compose") {
  auto id = run({"compose", fixture("identity2.txt"), fixture("identity2.txt")});
  CHECK(id.code == 0);
  CHECK(id.out == "split 2 2\ns0 t0\ns1 t1\nt0 s0\nt1 s1\n");

  auto glued = run({"compose", fixture("p_2_1.txt"), fixture("r_1_2.txt")});
  CHECK(glued.code == 0);
  CHECK(glued.out == "split 1 1\ns0 t0\n");

  auto mismatch = run({"compose", fixture("identity1.txt"), fixture("identity2.txt")});
  CHECK(mismatch.code == 2);
  CHECK(has(mismatch.err, "identity2.txt"));

  auto bad = run({"compose", fixture("bad_index.txt"), fixture("identity1.txt")});
  CHECK(bad.code == 1);
  CHECK(has(bad.err, "bad_index.txt:4"));

  CHECK(run({"compose", fixture("missing.txt"), fixture("identity1.txt")}).code == 1);
}

TEST_CASE("repr") {
  auto id = run({"repr", "--p", "2", fixture("identity1.txt")});
  CHECK(id.code == 0);
  CHECK(id.out == "rel 2 2\n0 0\n1 1\n");
  CHECK(run({"repr", fixture("diagonal1.txt")}).out == "rel 2 2\n0 0\n0 1\n1 0\n1 1\n");
  CHECK(run({"repr", fixture("edge1.txt")}).out == "rel 2 2\n0 0\n0 1\n1 1\n");
  CHECK(run({"repr", "--p", "3", fixture("identity1.txt")}).out == "rel 3 3\n0 0\n1 1\n2 2\n");
  auto capped = run({"repr", "--p", "64", "--cap", "100", fixture("identity2.txt")});
  CHECK(capped.code == 3);
  CHECK(run({"repr", "--p", "1", fixture("identity1.txt")}).code != 0);
}

TEST_CASE("check") {
  auto identity = run({"check", "--laws", "identity", "--max", "2"});
  CHECK(identity.code == 0);
  CHECK(has(identity.out, "identity: pass"));
  CHECK(has(identity.out, "(2,2): 355"));

  auto functor = run({"check", "--laws", "functor", "--p", "2", "--max", "2"});
  CHECK(functor.code == 0);
  CHECK(has(functor.out, "functor: pass"));

  auto faithful = run({"check", "--laws", "faithful", "--p", "2", "--m", "2", "--n", "2"});
  CHECK(faithful.code == 0);
  CHECK(has(faithful.out, "distinct images (2,2): 355"));

  auto several = run({"check", "--laws", "cones,embedding", "--size", "2"});
  CHECK(several.code == 0);
  CHECK(has(several.out, "cones: pass"));
  CHECK(has(several.out, "embedding: pass"));

  CHECK(run({"check", "--laws", "identity", "--max", "3"}).code == 3);
  CHECK(run({"check", "--laws", "nonsense"}).code == 1);
}

TEST_CASE("proofeq") {
  auto eq = run({"proofeq", "pair(pi1{p,q},pi2{p,q})", "id{p/\\q}"});
  CHECK(eq.code == 0);
  CHECK(eq.out.rfind("equivalent\n", 0) == 0);
  CHECK(has(eq.out, "split 2 2\ns0 t0\ns1 t1\n"));

  auto distinct = run({"proofeq", "--fragment", "conj", "pi1{p,p}", "pi2{p,p}"});
  CHECK(distinct.code == 1);
  CHECK(distinct.out.rfind("distinct\n", 0) == 0);

  CHECK(run({"proofeq", "pi1{p,q}", "pi2{q,p}"}).code == 2);
  CHECK(run({"proofeq", "pi1{p,q", "pi1{p,q}"}).code == 2);
  CHECK(run({"proofeq", "--fragment", "disj", "pi1{p,q}", "pi1{p,q}"}).code == 2);
  CHECK(run({"proofeq", "--fragment", "modal", "id{p}", "id{p}"}).code == 2);

  auto flipped = run({"proofeq", "--converse", "pi1{p,q}", "pi1{p,q}"});
  CHECK(flipped.code == 0);
  CHECK(has(flipped.out, "t0 s0"));
}

TEST_CASE("dot") {
  auto file = run({"dot", fixture("identity2.txt")});
  CHECK(file.code == 0);
  CHECK(has(file.out, "s0 -> t0 [dir=both];"));

  auto term = run({"dot", "comp(pair(id{(p/\\q)/\\T}, id{(p/\\q)/\\T}), pi1{(p/\\q)/\\T, r})"});
  CHECK(term.code == 0);
  CHECK(has(term.out, "s0 -> t2;"));

  CHECK(run({"dot", "comp(pi1{p,q}, pi1{p,q})"}).code == 1);
  CHECK(run({"dot", fixture("bad_index.txt")}).code == 1);
}

TEST_CASE("usage") {
  CHECK(run({}).code != 0);
  CHECK(run({"--help"}).code == 0);
}
