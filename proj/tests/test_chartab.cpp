#include "doctest.h"

#include "intspec/chartab.hpp"
#include "intspec/subgroups.hpp"

using namespace intspec;

namespace {

Rational exact_of(const CharEigenvalue& e)
{
  REQUIRE(e.exact);
  REQUIRE(e.exact->is_rational());
  return e.exact->to_rational();
}

} // namespace

TEST_CASE("Steinberg row for q = 13")
{
  auto G = Group::psl2(13);
  CharTable t(G);
  const auto& chi = t.characters()[t.index_of("rhobar(1)")];
  const std::uint32_t N = t.conductor();
  for (std::uint32_t c = 0; c < G->classes().size(); ++c) {
    Rational want;
    switch (G->classes()[c].family) {
    case ClassFamily::Identity: want = 13; break;
    case ClassFamily::Unipotent1:
    case ClassFamily::UnipotentDelta: want = 0; break;
    case ClassFamily::Split:
    case ClassFamily::SplitSqrtM1: want = 1; break;
    default: want = -1;
    }
    CHECK(*chi.values[c] == Cyclotomic::from_rational(N, want));
  }
}

TEST_CASE("degrees and split-class values")
{
  auto G7 = Group::psl2(7);
  CharTable t7(G7);
  CHECK(t7.characters()[t7.index_of("pi(chi_2)")].degree == 6);

  auto G = Group::psl2(13);
  CharTable t(G);
  const auto& rho = t.characters()[t.index_of("rho(alpha_4)")];
  for (std::uint32_t c = 0; c < G->classes().size(); ++c) {
    const auto& cls = G->classes()[c];
    if (cls.family != ClassFamily::Split) continue;
    // alpha_4(w^i) + alpha_4(w^-i)
    CHECK(*rho.values[c] == t.xi_power(4 * cls.param) + t.xi_power(-4 * std::int64_t(cls.param)));
  }
}

TEST_CASE("U_q weighting eigenvalues (q = 7, 11, 19)")
{
  for (std::uint32_t q : {7u, 11u, 19u}) {
    CAPTURE(q);
    auto G = Group::psl2(q);
    CharTable t(G);
    const auto eig = weighted_eigenvalues(t, weights_unipotent_split(*G));
    for (std::size_t i = 0; i < eig.size(); ++i) {
      switch (t.characters()[i].family) {
      case CharFamily::Trivial: CHECK(exact_of(eig[i]) == Rational(q * (q - 1) / 2 - 1)); break;
      case CharFamily::Steinberg: CHECK(exact_of(eig[i]) == Rational(q - 3, 2)); break;
      case CharFamily::PrincipalSeries:
      case CharFamily::Discrete: CHECK(exact_of(eig[i]) == -1); break;
      default:
        // Half-degree characters: the trace identity sum chi(1)^2 lambda = 0 forces -1.
        CHECK(exact_of(eig[i]) == -1);
      }
    }
  }
}

TEST_CASE("M_r weighting eigenvalues")
{
  for (auto [q, r] : {std::pair{13u, 3u}, std::pair{13u, 1u}, std::pair{17u, 1u}}) {
    CAPTURE(q);
    CAPTURE(r);
    auto G = Group::psl2(q);
    CharTable t(G);
    const auto eig = weighted_eigenvalues(t, weights_borel_family(*G, r));
    const Rational discrete = 2 * (Rational(r + 1, q - 1) + Rational(2 * r, (q - 1) * (q - 1)));
    CHECK(discrete > 0);
    for (std::size_t i = 0; i < eig.size(); ++i) {
      const auto& chi = t.characters()[i];
      switch (chi.family) {
      case CharFamily::Trivial: CHECK(exact_of(eig[i]) == Rational(r * (q + 1) - 1)); break;
      case CharFamily::Steinberg: CHECK(exact_of(eig[i]) == -1); break;
      case CharFamily::PrincipalSeries:
        CHECK(exact_of(eig[i]) == ((chi.param * r) % (q - 1) == 0 ? Rational(-1) : Rational(0)));
        break;
      case CharFamily::Discrete: CHECK(exact_of(eig[i]) == discrete); break;
      default: CHECK(exact_of(eig[i]) == 0);
      }
    }
  }
  // (q, r) = (13, 3): the discrete-series value is 3/4.
  CHECK(2 * (Rational(4, 12) + Rational(6, 144)) == Rational(3, 4));
  // (29, 7) beyond the table range: the value stays positive.
  CHECK(2 * (Rational(8, 28) + Rational(14, 28 * 28)) > 0);
}

TEST_CASE("unspecified entries need both unipotent weights equal or the numeric flag")
{
  auto G = Group::psl2(7);
  CharTable t(G);
  std::vector<Rational> w(G->classes().size(), Rational(0));
  for (std::uint32_t c = 0; c < w.size(); ++c)
    if (G->classes()[c].family == ClassFamily::Unipotent1) w[c] = 1;
  CHECK_THROWS_AS(weighted_eigenvalues(t, w), std::invalid_argument);
  const auto eig = weighted_eigenvalues(t, w, true);
  bool some_approx = false;
  for (const auto& e : eig) some_approx |= e.approx;
  CHECK(some_approx);
}

TEST_CASE("ratio and clique-coclique bounds")
{
  CHECK(ratio_bound(20, -1, 168) == 8);
  CHECK(ratio_bound(41, -1, 1092) == 26);
  CHECK(ratio_bound(5, -5, 100) == 50);
  CHECK_THROWS(ratio_bound(5, 0, 100));
  CHECK(clique_coclique_bound(432, 48) == 9);
  CHECK(clique_coclique_bound(17, 1) == 17);
  CHECK(clique_coclique_bound(17, 17) == 1);
}

TEST_CASE("character sums over J_q and Z_q")
{
  const std::uint32_t N = (13 * 13 - 1) / 2;
  CHECK(split_char_sum(13, 3, CharSum::SplitAlpha, 4) == Cyclotomic::from_rational(N, -2));
  CHECK(split_char_sum(13, 3, CharSum::SplitAlpha, 2).is_zero());
  for (std::uint32_t m = 2; m < 14; m += 2)
    CHECK(split_char_sum(13, 3, CharSum::Norm1, m) == Cyclotomic::from_rational(N, -1));
  CHECK(split_char_sum(13, 3, CharSum::Zeta).is_zero());
  CHECK(split_char_sum(29, 7, CharSum::Zeta).is_zero());
  CHECK(split_char_sum(29, 7, CharSum::SplitAlpha, 4) == Cyclotomic::from_rational(28 * 30 / 2, -2));
  CHECK_THROWS(split_char_sum(13, 3, CharSum::SplitAlpha, 3)); // alpha(-1) = -1
  CHECK_THROWS(split_char_sum(13, 3, CharSum::Norm1, 0));     // trivial character
  CHECK_THROWS(split_char_sum(13, 5, CharSum::Zeta));         // 5 does not divide 6
  CHECK_THROWS(split_char_sum(11, 1, CharSum::Zeta));         // q = 3 mod 4
}

TEST_CASE("permutation characters")
{
  auto G = Group::psl2(13);
  CharTable t(G);
  auto nonzero = [](const std::map<std::string, std::uint64_t>& m) {
    std::map<std::string, std::uint64_t> out;
    for (const auto& [k, v] : m)
      if (v) out[k] = v;
    return out;
  };
  using M = std::map<std::string, std::uint64_t>;
  CHECK(nonzero(perm_char_decompose(CosetAction(G, subgroup_M(*G, 3)), t)) ==
        M{{"rho'(1)", 1}, {"rhobar(1)", 1}, {"rho(alpha_4)", 2}});
  CHECK(nonzero(perm_char_decompose(CosetAction(G, subgroup_M(*G, 1)), t)) == M{{"rho'(1)", 1}, {"rhobar(1)", 1}});
  CHECK(nonzero(perm_char_decompose(CosetAction(G, closure(*G, G->generators())), t)) == M{{"rho'(1)", 1}});
  // The U_q action separates the unipotent classes only through the numeric path.
  auto G7 = Group::psl2(7);
  CharTable t7(G7);
  std::uint64_t deg = 0;
  for (const auto& [label, m] : perm_char_decompose(CosetAction(G7, subgroup_U(*G7)), t7))
    deg += m * t7.characters()[t7.index_of(label)].degree;
  CHECK(deg == 42);
}

TEST_CASE("eigenspace membership of M_3 and its cosets by a direct product")
{
  auto G = Group::psl2(13);
  const Subgroup M = subgroup_M(*G, 3);
  CosetAction act(G, M);
  const DerangementGraph dg = build_derangement_graph(act);
  const auto w = weights_borel_family(*G, 3);
  std::map<std::uint32_t, Rational> wm;
  for (std::uint32_t c = 0; c < w.size(); ++c)
    if (w[c] != 0) wm[c] = w[c];
  WeightedScheme B(dg, wm);

  // Oracle: (B v)(x) = sum_y w(x^-1 y) v(y), computed here without the scheme.
  const std::uint32_t n = G->order();
  std::vector<Rational> v(n, -Rational(M.order(), n));
  for (Elem m : M.members) v[m] += 1;
  for (Elem x = 0; x < n; x += 37) {
    Rational acc = 0;
    for (Elem y = 0; y < n; ++y) {
      const Rational& wy = w[G->class_of(G->mul(G->inv(x), y))];
      if (wy != 0) acc += wy * v[y];
    }
    CHECK(acc == -v[x]);
  }
  CHECK(eigenspace_membership(B, dg, M.members));
  std::vector<Elem> coset;
  for (Elem m : M.members) coset.push_back(G->mul(123, m));
  std::sort(coset.begin(), coset.end());
  CHECK(eigenspace_membership(B, dg, coset));
  CHECK_THROWS_AS(eigenspace_membership(B, dg, {dg.connection[0], G->identity()}), std::invalid_argument);
}
