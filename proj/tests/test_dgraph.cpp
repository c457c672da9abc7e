#include "doctest.h"

#include <random>
#include <sstream>

#include "intspec/chartab.hpp"
#include "intspec/dgraph.hpp"
#include "intspec/subgroups.hpp"

using namespace intspec;

namespace {

void check_cayley_structure(const DerangementGraph& dg)
{
  const Group& G = *dg.group;
  const BitGraph& g = dg.graph;
  CHECK(g.is_symmetric_loopless());
  for (std::uint32_t v = 0; v < g.size(); ++v) CHECK(g.degree(v) == dg.valency());
  std::set<Elem> S(dg.connection.begin(), dg.connection.end());
  for (Elem s : dg.connection) {
    CHECK(S.count(G.inv(s)));
    for (Elem x : G.generators()) CHECK(S.count(G.conj(s, x)));
  }
  // x ~ y iff x^-1 y is a derangement, and left translation is an automorphism.
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    const Elem x = rng() % G.order(), y = rng() % G.order(), h = rng() % G.order();
    CHECK(g.has_edge(x, y) == (S.count(G.mul(G.inv(x), y)) == 1));
    CHECK(g.has_edge(x, y) == g.has_edge(G.mul(h, x), G.mul(h, y)));
  }
}

} // namespace

TEST_CASE("PSL(2,7) on cosets of U_7: valency from the order census")
{
  auto G = Group::psl2(7);
  CosetAction act(G, subgroup_U(*G));
  const DerangementGraph dg = build_derangement_graph(act, "family=U");
  std::uint32_t census = 0;
  for (Elem g = 0; g < G->order(); ++g) census += G->element_order(g) == 3 || G->element_order(g) == 7;
  CHECK(census == 104);
  CHECK(dg.graph.size() == 168);
  CHECK(dg.valency() == census);
  check_cayley_structure(dg);
}

TEST_CASE("AGL(1,5) on cosets of E_1: valency from a direct derangement scan")
{
  auto G = Group::agl(1, 5);
  CosetAction act(G, subgroup_E(*G, 1));
  const DerangementGraph dg = build_derangement_graph(act);
  std::uint32_t census = 0;
  for (Elem g = 0; g < G->order(); ++g) census += act.fix_count_direct(g) == 0;
  CHECK(dg.graph.size() == 20);
  CHECK(dg.valency() == census);
  check_cayley_structure(dg);
}

TEST_CASE("G/G gives the empty graph")
{
  auto G = Group::psl2(5);
  const DerangementGraph dg = build_derangement_graph(CosetAction(G, closure(*G, G->generators())));
  CHECK(dg.valency() == 0);
  CHECK(dg.graph.edge_count() == 0);
}

TEST_CASE("U_q weights for q = 7 and the weighted scheme")
{
  auto G = Group::psl2(7);
  CosetAction act(G, subgroup_U(*G));
  const DerangementGraph dg = build_derangement_graph(act);
  const auto w = weights_unipotent_split(*G);
  std::map<std::uint32_t, Rational> wm;
  for (std::uint32_t c = 0; c < w.size(); ++c) {
    const auto f = G->classes()[c].family;
    if (f == ClassFamily::Unipotent1 || f == ClassFamily::UnipotentDelta) CHECK(w[c] == Rational(1, 8));
    else if (f == ClassFamily::Split) CHECK(w[c] == Rational(2, 8));
    else CHECK(w[c] == 0);
    if (w[c] != 0) wm[c] = w[c];
  }
  WeightedScheme B(dg, wm);
  const Eigen::MatrixXd M = B.materialize();
  CHECK((M - M.transpose()).norm() == 0);
  CHECK(M.diagonal().norm() == 0);

  // Weight 1 on every derangement class reproduces the adjacency matrix.
  std::map<std::uint32_t, Rational> ones;
  for (auto c : dg.derangement_classes) ones[c] = 1;
  const Eigen::MatrixXd A = WeightedScheme(dg, ones).materialize();
  for (std::uint32_t x = 0; x < 168; x += 5)
    for (std::uint32_t y = 0; y < 168; ++y) CHECK(A(x, y) == (dg.graph.has_edge(x, y) ? 1.0 : 0.0));
}

TEST_CASE("weighted scheme rejects weights off the derangements or not inverse-symmetric")
{
  auto G = Group::psl2(7);
  const DerangementGraph dg = build_derangement_graph(CosetAction(G, subgroup_U(*G)));
  std::uint32_t u1 = 0, split = 0;
  for (std::uint32_t c = 0; c < G->classes().size(); ++c) {
    if (G->classes()[c].family == ClassFamily::Unipotent1) u1 = c;
    if (G->classes()[c].family == ClassFamily::Nonsplit) split = c;
  }
  // Nonsplit elements of order dividing 4 fix cosets of U_7.
  CHECK_THROWS_AS(WeightedScheme(dg, {{split, Rational(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedScheme(dg, {{u1, Rational(1)}}), std::invalid_argument);
}

TEST_CASE("DIMACS round trip")
{
  BitGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(3, 4);
  g.add_edge(1, 4);
  std::ostringstream out;
  g.write_dimacs(out);
  CHECK(out.str().find("p edge 5 3") != std::string::npos);
  CHECK(out.str().find("e 1 2") != std::string::npos);
  std::istringstream in(out.str());
  const BitGraph h = BitGraph::read_dimacs(in);
  CHECK(h.size() == 5);
  CHECK(h.edge_count() == 3);
  CHECK(h.has_edge(4, 1));
  std::istringstream bad("e 1 2\n");
  CHECK_THROWS(BitGraph::read_dimacs(bad));
}
