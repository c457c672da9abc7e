#include "doctest.h"

#include <numeric>

#include "intspec/action.hpp"
#include "intspec/spectrum.hpp"
#include "intspec/subgroups.hpp"

using namespace intspec;

TEST_CASE("coset action degrees")
{
  auto G7 = Group::psl2(7);
  CHECK(CosetAction(G7, subgroup_U(*G7)).degree() == 42);
  CHECK(CosetAction(G7, closure(*G7, G7->generators())).degree() == 1);
  auto G13 = Group::psl2(13);
  CHECK(CosetAction(G13, subgroup_M(*G13, 3)).degree() == 42);
}

TEST_CASE("non-subgroups are rejected")
{
  auto G = Group::psl2(7);
  Subgroup bad;
  bad.members = {G->identity(), G->classes()[1].rep};
  std::sort(bad.members.begin(), bad.members.end());
  CHECK_THROWS_AS(CosetAction(G, bad), GroupError);
}

TEST_CASE("fixed points of c2(1), c3(w^3) and the identity on cosets of M_3")
{
  auto G = Group::psl2(13);
  CosetAction act(G, subgroup_M(*G, 3));
  const auto& cls = G->classes();
  for (std::uint32_t c = 0; c < cls.size(); ++c) {
    if (cls[c].family == ClassFamily::Unipotent1) CHECK(act.fix_count(cls[c].rep) == 3);
    if (cls[c].family == ClassFamily::Split && cls[c].param == 3) CHECK(act.fix_count(cls[c].rep) == 6);
    if (cls[c].family == ClassFamily::Split && cls[c].param == 1) CHECK(act.is_derangement(cls[c].rep));
    if (cls[c].family == ClassFamily::Nonsplit) CHECK(act.is_derangement(cls[c].rep));
  }
  CHECK(act.fix_count(G->identity()) == 42);
  CHECK_FALSE(act.is_derangement(G->identity()));
}

TEST_CASE("fixed-point vector of M_r matches the class rules")
{
  for (auto [q, r] : {std::pair{5u, 1u}, std::pair{9u, 1u}, std::pair{13u, 1u}, std::pair{13u, 3u},
                      std::pair{17u, 1u}}) {
    CAPTURE(q);
    CAPTURE(r);
    auto G = Group::psl2(q);
    CosetAction act(G, subgroup_M(*G, r));
    for (const auto& c : G->classes()) {
      const std::uint64_t fix = act.fix_count(c.rep);
      switch (c.family) {
      case ClassFamily::Identity: CHECK(fix == r * (q + 1)); break;
      case ClassFamily::Unipotent1:
      case ClassFamily::UnipotentDelta: CHECK(fix == r); break;
      case ClassFamily::Split: CHECK(fix == (c.param % r == 0 ? 2 * r : 0)); break;
      case ClassFamily::SplitSqrtM1: CHECK(fix == 2 * r); break;
      case ClassFamily::Nonsplit: CHECK(fix == 0); break;
      default: FAIL("unexpected class family");
      }
    }
  }
}

TEST_CASE("derangements of the U_q action are the elements of order not dividing (q+1)/2")
{
  for (std::uint32_t q : {7u, 11u, 19u}) {
    auto G = Group::psl2(q);
    CosetAction act(G, subgroup_U(*G));
    for (Elem g = 0; g < G->order(); ++g)
      CHECK(act.is_derangement(g) == (((q + 1) / 2) % G->element_order(g) != 0));
  }
  // Order census for q = 7: derangement classes have element orders 3 and 7.
  auto G = Group::psl2(7);
  CosetAction act(G, subgroup_U(*G));
  std::set<std::uint32_t> orders;
  for (auto c : act.derangement_classes()) orders.insert(G->classes()[c].element_order);
  CHECK(orders == std::set<std::uint32_t>{3, 7});
}

TEST_CASE("the action on G/G has no derangements")
{
  auto G = Group::psl2(5);
  CosetAction act(G, closure(*G, G->generators()));
  CHECK(act.derangement_classes().empty());
  CHECK(act.derangements().empty());
}

TEST_CASE("Burnside count, class sums and class-function property over all subgroup classes")
{
  for (GroupPtr G : {Group::psl2(7), Group::agl(1, 7), Group::psl2(9)}) {
    CAPTURE(G->spec());
    for (const auto& H : subgroup_classes(G)) {
      CosetAction act(G, H);
      std::uint64_t total = 0, by_class = 0;
      for (Elem g = 0; g < G->order(); ++g) total += act.fix_count(g);
      for (std::uint32_t c = 0; c < G->classes().size(); ++c) by_class += G->classes()[c].size * act.class_fix()[c];
      CHECK(total == G->order()); // one orbit
      CHECK(by_class == G->order());
      if (G->order() <= 400)
        for (Elem g = 0; g < G->order(); ++g) CHECK(act.fix_count_direct(g) == act.fix_count(g));
    }
  }
}
