#include "doctest.h"

#include <random>

#include "intspec/dgraph.hpp"
#include "intspec/mis.hpp"
#include "intspec/subgroups.hpp"

using namespace intspec;

TEST_CASE("trivial graphs")
{
  BitGraph empty(9);
  const SolveResult r = max_coclique(empty);
  CHECK(r.best == 9);
  CHECK(r.status == SolveStatus::Optimal);
  BitGraph complete(7);
  for (std::uint32_t u = 0; u < 7; ++u)
    for (std::uint32_t v = u + 1; v < 7; ++v) complete.add_edge(u, v);
  CHECK(max_coclique(complete).best == 1);
  CHECK(verify_coclique(complete, {3}));
  CHECK(verify_clique(complete, {3}));
  CHECK(verify_clique(complete, {0, 1, 2, 3, 4, 5, 6}));
}

TEST_CASE("derangement graph of PSL(2,7) on cosets of U_7")
{
  auto G = Group::psl2(7);
  CosetAction act(G, subgroup_U(*G));
  const DerangementGraph dg = build_derangement_graph(act);
  CHECK(verify_coclique(dg.graph, subgroup_V(*G).members));
  const SolveResult r = max_coclique(dg);
  CHECK(r.best == 8);
  CHECK(r.status == SolveStatus::Optimal);
  CHECK(r.certificate == "exhausted");
  CHECK(verify_coclique(dg.graph, r.witness));
  SolveOptions plain;
  plain.symmetry = false;
  CHECK(max_coclique(dg, plain).best == 8);
}

TEST_CASE("derangement graph of PSL(2,13) on cosets of M_3, stopped by the bound")
{
  auto G = Group::psl2(13);
  const Subgroup M = subgroup_M(*G, 3);
  const DerangementGraph dg = build_derangement_graph(CosetAction(G, M));
  SolveOptions so;
  so.seed = M.members;
  so.upper_bound = 26;
  const SolveResult r = max_coclique(dg, so);
  CHECK(r.best == 26);
  CHECK(r.certificate == "bound-matched");
  // The dihedral normalizer of the split torus contains derangements.
  const Subgroup D = normalizer(*G, subgroup_torus(*G));
  CHECK(D.order() == 12);
  CHECK_FALSE(verify_coclique(dg.graph, D.members));
}

TEST_CASE("GL(1,5) is a clique and the translations a coclique for AGL(1,5) on cosets of E_1")
{
  auto G = Group::agl(1, 5);
  const DerangementGraph dg = build_derangement_graph(CosetAction(G, subgroup_E(*G, 1)));
  CHECK(verify_clique(dg.graph, subgroup_linear(*G).members));
  CHECK_FALSE(verify_clique(dg.graph, subgroup_translations(*G).members));
  CHECK(verify_coclique(dg.graph, subgroup_translations(*G).members));
}

TEST_CASE("budget exhaustion reports a lower bound with a valid witness")
{
  auto G = Group::psl2(11);
  CosetAction act(G, subgroup_torus(*G));
  const DerangementGraph dg = build_derangement_graph(act);
  SolveOptions so;
  so.node_budget = 10;
  const SolveResult r = max_coclique(dg, so);
  CHECK(r.status == SolveStatus::LowerBoundOnly);
  CHECK(r.best <= 12);
  CHECK(verify_coclique(dg.graph, r.witness));
  CHECK(r.witness.size() == r.best);
}

TEST_CASE("a bound below a known coclique is rejected")
{
  auto G = Group::psl2(7);
  const DerangementGraph dg = build_derangement_graph(CosetAction(G, subgroup_U(*G)));
  SolveOptions so;
  so.seed = subgroup_V(*G).members;
  so.upper_bound = 7;
  CHECK_THROWS(max_coclique(dg, so));
}

TEST_CASE("adding edges never increases the coclique number")
{
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    const std::uint32_t n = 10 + rng() % 20;
    BitGraph g(n);
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    const std::uint64_t before = max_coclique(g).best;
    for (int k = 0; k < 5; ++k) {
      const std::uint32_t u = rng() % n, v = rng() % n;
      if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    CHECK(max_coclique(g).best <= before);
  }
}
