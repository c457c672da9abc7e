#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "intspec/group.hpp"
#include "intspec/subgroups.hpp"

using namespace intspec;

TEST_CASE("group orders")
{
  CHECK(Group::psl2(7)->order() == 168);
  CHECK(Group::psl2(9)->order() == 360);
  CHECK(Group::psl2(4)->order() == 60);
  CHECK(Group::agl(1, 5)->order() == 20);
  CHECK(Group::agl(2, 3)->order() == 432);
  CHECK(Group::agl(1, 9)->order() == 72);
  CHECK_THROWS_AS(Group::psl2(2), GroupError);
  CHECK_THROWS_AS(Group::agl(3, 5), GroupError);
}

TEST_CASE("multiplication table agrees with matrix arithmetic")
{
  auto G = Group::psl2(9);
  const Field& F = *G->field();
  for (Elem a = 0; a < G->order(); a += 7)
    for (Elem b = 0; b < G->order(); b += 11) {
      auto x = G->word(a), y = G->word(b);
      std::uint32_t p = F.add(F.mul(x[0], y[0]), F.mul(x[1], y[2]));
      std::uint32_t qq = F.add(F.mul(x[0], y[1]), F.mul(x[1], y[3]));
      std::uint32_t r = F.add(F.mul(x[2], y[0]), F.mul(x[3], y[2]));
      std::uint32_t s = F.add(F.mul(x[2], y[1]), F.mul(x[3], y[3]));
      auto z = G->word(G->mul(a, b));
      bool same = (z == std::vector<std::uint32_t>{p, qq, r, s}) ||
                  (z == std::vector<std::uint32_t>{F.neg(p), F.neg(qq), F.neg(r), F.neg(s)});
      CHECK(same);
    }
  for (Elem a = 0; a < G->order(); ++a) CHECK(G->mul(a, G->inv(a)) == G->identity());
}

TEST_CASE("AGL multiplication rule (A,b)(A',b') = (AA', Ab' + b)")
{
  auto G = Group::agl(1, 5);
  for (Elem x = 0; x < G->order(); ++x)
    for (Elem y = 0; y < G->order(); ++y) {
      auto u = G->word(x), v = G->word(y), w = G->word(G->mul(x, y));
      CHECK(w[0] == u[0] * v[0] % 5);
      CHECK(w[1] == (u[0] * v[1] + u[1]) % 5);
    }
}

TEST_CASE("PSL(2,q) conjugacy classes for odd q")
{
  for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u, 17u, 19u}) {
    CAPTURE(q);
    auto G = Group::psl2(q);
    const auto& cls = G->classes();
    CHECK(cls.size() == (q + 5) / 2);
    std::uint64_t total = 0;
    for (const auto& c : cls) total += c.size;
    CHECK(total == G->order());
    for (std::uint32_t i = 0; i < cls.size(); ++i) {
      const auto& c = cls[i];
      switch (c.family) {
      case ClassFamily::Identity: CHECK(c.size == 1); break;
      case ClassFamily::Unipotent1:
      case ClassFamily::UnipotentDelta: CHECK(c.size == (q * q - 1) / 2); break;
      case ClassFamily::Split: CHECK(c.size == q * (q + 1)); break;
      case ClassFamily::SplitSqrtM1: CHECK(c.size == q * (q + 1) / 2); break;
      case ClassFamily::Involution: CHECK(c.size == q * (q - 1) / 2); break;
      case ClassFamily::Nonsplit: CHECK(c.size == q * (q - 1)); break;
      default: CHECK(false);
      }
      // Conjugator map is consistent on every member.
      for (Elem m : G->class_members(i)) {
        const Elem t = G->conjugator(m);
        CHECK(G->conj(c.rep, t) == m);
      }
      CHECK(G->centralizer(i).size() * c.size == G->order());
    }
  }
}

TEST_CASE("class census for q = 5 and q = 7")
{
  auto G5 = Group::psl2(5);
  std::multiset<std::uint64_t> s5;
  std::size_t split = 0;
  for (const auto& c : G5->classes()) {
    s5.insert(c.size);
    split += c.family == ClassFamily::Split;
  }
  CHECK(s5 == std::multiset<std::uint64_t>{1, 12, 12, 15, 20});
  CHECK(split == 0);
  auto G7 = Group::psl2(7);
  std::size_t nonsplit = 0;
  for (const auto& c : G7->classes())
    nonsplit += c.family == ClassFamily::Nonsplit || c.family == ClassFamily::Involution;
  CHECK(nonsplit == 2);
}

TEST_CASE("class partition in even characteristic")
{
  auto G = Group::psl2(8);
  std::uint64_t total = 0;
  for (const auto& c : G->classes()) total += c.size;
  CHECK(total == 504);
  CHECK(G->classes().size() == 9); // q + 1
}

TEST_CASE("U, V and the normalizer")
{
  for (std::uint32_t q : {7u, 11u, 19u}) {
    CAPTURE(q);
    auto G = Group::psl2(q);
    auto U = subgroup_U(*G);
    CHECK(U.order() == (q + 1) / 2);
    CHECK(G->element_order(U.generators[0]) == (q + 1) / 2);
    auto V = subgroup_V(*G);
    CHECK(V.order() == q + 1);
    CHECK(isomorphism_label(*G, V) == "D" + std::to_string((q + 1) / 2));
    for (Elem v : V.members) CHECK(((q + 1) / 2) % G->element_order(v) == 0);
  }
  auto G = Group::psl2(7);
  Subgroup whole;
  for (Elem g = 0; g < G->order(); ++g) whole.members.push_back(g);
  whole.generators = G->generators();
  CHECK(normalizer(*G, whole).order() == 168);
  CHECK_THROWS_AS(subgroup_U(*Group::psl2(13)), GroupError);
}

TEST_CASE("M_r, Borel and torus")
{
  auto G = Group::psl2(13);
  auto M3 = subgroup_M(*G, 3);
  CHECK(M3.order() == 26);
  CHECK(G->order() / M3.order() == 42);
  auto B = subgroup_borel(*G);
  CHECK(B.order() == 78);
  CHECK(subgroup_M(*G, 1).members == B.members);
  CHECK(B.order() / M3.order() == 3);
  auto Hu = subgroup_unipotent(*G);
  CHECK(normalizer(*G, Hu).order() >= M3.order());
  for (Elem m : M3.members) CHECK(Hu.members == conjugate_set(*G, Hu.members, m));
  CHECK(subgroup_M(*Group::psl2(17), 1).order() == 136);
  CHECK_THROWS_AS(subgroup_M(*G, 2), GroupError);
  CHECK_THROWS_AS(subgroup_M(*G, 5), GroupError);
  CHECK(subgroup_torus(*G).order() == 6);
  CHECK(subgroup_torus(*Group::psl2(9)).order() == 4);
  CHECK(subgroup_torus(*Group::psl2(5)).order() == 2);
}

TEST_CASE("AGL translation subgroups")
{
  CHECK(subgroup_E(*Group::agl(1, 5), 1).order() == 5);
  CHECK(subgroup_E(*Group::agl(2, 3), 1).order() == 3);
  CHECK(subgroup_E(*Group::agl(1, 9), 1).order() == 3);
  CHECK(subgroup_E(*Group::agl(1, 9), 2).order() == 9);
  CHECK_THROWS_AS(subgroup_E(*Group::agl(1, 9), 3), GroupError);
  CHECK(subgroup_linear(*Group::agl(2, 3)).order() == 48);
}

TEST_CASE("subgroup enumeration counts and labels")
{
  const std::map<std::uint32_t, std::size_t> expected = {{3, 5}, {4, 9}, {5, 9}, {7, 15}, {8, 12}, {9, 22}};
  for (auto [q, count] : expected) {
    CAPTURE(q);
    auto G = Group::psl2(q);
    auto subs = enumerate_subgroups(*G);
    CHECK(subs.size() == count);
    for (const auto& S : subs) CHECK(is_subgroup(*G, S.members));
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = i + 1; j < subs.size(); ++j)
        if (subs[i].order() == subs[j].order()) CHECK_FALSE(conjugating_element(*G, subs[i], subs[j]));
  }
  auto G7 = Group::psl2(7);
  std::multiset<std::string> labels;
  for (const auto& S : enumerate_subgroups(*G7)) labels.insert(isomorphism_label(*G7, S));
  CHECK(labels == std::multiset<std::string>{"1", "C2", "C3", "C2 x C2", "C2 x C2", "C4", "S3", "C7", "D4", "A4",
                                             "A4", "C7 : C3", "S4", "S4", "PSL(3,2)"});
}

TEST_CASE("generic permutation groups")
{
  // S4 on 4 points.
  auto G = Group::from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  CHECK(G->order() == 24);
  CHECK(G->classes().size() == 5);
  CHECK(enumerate_subgroups(*G).size() == 11);
}

TEST_CASE("class sizes of PSL(2,5)")
{
  auto G = Group::psl2(5);
  std::multiset<std::uint64_t> sizes;
  for (const auto& c : G->classes()) sizes.insert(c.size);
  CHECK(sizes == std::multiset<std::uint64_t>{1, 12, 12, 15, 20});
}
