#include "doctest.h"

#include <filesystem>

#include "intspec/reference.hpp"
#include "intspec/report.hpp"
#include "intspec/spectrum.hpp"

using namespace intspec;

namespace {

void check_report_invariants(const DensityReport& r)
{
  CHECK(r.rho >= 1);
  CHECK(r.rho <= Rational(static_cast<unsigned long long>(r.index)));
  CHECK(r.witness.size() == r.alpha);
  if (r.certified) CHECK(Rational(static_cast<unsigned long long>(r.alpha)) == Rational(floor_rational(r.bound_value)));
  CHECK(r.rho_upper >= r.rho);
}

} // namespace

TEST_CASE("density of U_7 is 2, certified by the ratio bound")
{
  auto G = Group::psl2(7);
  const DensityReport r = intersection_density(G, subgroup_U(*G), "family=U");
  CHECK(r.rho == 2);
  CHECK(r.certified);
  CHECK(r.alpha == 8);
  CHECK(r.bound_kind == BoundKind::Ratio);
  CHECK(r.bound_value == 8);
  CHECK(r.nodes == 0);
  check_report_invariants(r);
}

TEST_CASE("density of M_3 in PSL(2,13) is 1")
{
  auto G = Group::psl2(13);
  const DensityReport r = intersection_density(G, subgroup_M(*G, 3), "family=M,r=3");
  CHECK(r.rho == 1);
  CHECK(r.certified);
  check_report_invariants(r);
}

TEST_CASE("density of the split torus in PSL(2,11) is 12/5")
{
  auto G = Group::psl2(11);
  const DensityReport r = intersection_density(G, subgroup_torus(*G), "family=torus");
  CHECK(r.rho == Rational(12, 5));
  CHECK(r.certified);
  check_report_invariants(r);

  DensityOptions bound_only;
  bound_only.strategy = Strategy::BoundOnly;
  const DensityReport b = intersection_density(G, subgroup_torus(*G), "family=torus", bound_only);
  CHECK_FALSE(b.certified);
  CHECK(b.nodes == 0);
  CHECK(b.rho_upper >= Rational(12, 5));

  DensityOptions exact;
  exact.strategy = Strategy::ExactOnly;
  const DensityReport e = intersection_density(G, subgroup_torus(*G), "family=torus", exact);
  CHECK(e.rho == Rational(12, 5));
  CHECK(e.bound_kind == BoundKind::ExactSearch);
}

TEST_CASE("spectra of PSL(2,5) and PSL(2,8)")
{
  const SpectrumReport s5 = intersection_spectrum(Group::psl2(5));
  REQUIRE(s5.rows.size() == 9);
  std::vector<Rational> rho;
  for (const auto& r : s5.rows) {
    rho.push_back(r.rho);
    check_report_invariants(r);
  }
  CHECK(rho == std::vector<Rational>{1, 2, Rational(4, 3), 1, 1, 2, 1, 1, 1});
  CHECK(s5.sigma == std::vector<Rational>{1, Rational(4, 3), 2});
  CHECK(compare_with_reference(s5, 5).rows_match);

  const SpectrumReport s8 = intersection_spectrum(Group::psl2(8));
  bool c2 = false, c7 = false;
  for (const auto& r : s8.rows) {
    c2 |= r.label == "C2" && r.rho == 4;
    c7 |= r.label == "C7" && r.rho == Rational(10, 7);
  }
  CHECK(c2);
  CHECK(c7);
}

TEST_CASE("the trivial group")
{
  auto G = Group::from_permutations(1, {});
  const SpectrumReport s = intersection_spectrum(G);
  REQUIRE(s.rows.size() == 1);
  CHECK(s.sigma == std::vector<Rational>{1});
}

TEST_CASE("spectrum rows do not depend on the thread count")
{
  auto G = Group::psl2(7);
  CHECK(to_json(intersection_spectrum(G, {}, 1)).dump() == to_json(intersection_spectrum(G, {}, 3)).dump());
}

TEST_CASE("the cache returns stored rows")
{
  const auto dir = std::filesystem::temp_directory_path() / "intspec_test_cache";
  std::filesystem::remove_all(dir);
  ResultCache cache(dir.string());
  auto G = Group::psl2(7);
  const SpectrumReport a = intersection_spectrum(G, {}, 1, &cache);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) ==
        static_cast<long>(a.rows.size()));
  const SpectrumReport b = intersection_spectrum(G, {}, 1, &cache);
  CHECK(to_json(a).dump() == to_json(b).dump());
  std::filesystem::remove_all(dir);
}

TEST_CASE("AGL densities")
{
  const DensityReport a = agl_density_certificate(1, 5, 1);
  CHECK(a.rho == 1);
  CHECK(a.certified);
  CHECK(agl_density_certificate(2, 3, 1).rho == 3);
  CHECK(agl_density_certificate(1, 9, 1).rho == 3);
  CHECK(agl_density_certificate(1, 9, 2).rho == 1);
}

TEST_CASE("torus experiments are labelled")
{
  for (std::uint32_t q : {5u, 9u, 13u}) {
    const DensityReport r = conjecture_experiment(q);
    CHECK(r.experiment);
    CHECK(r.note.rfind("EXPERIMENT", 0) == 0);
    CHECK(r.rho == 2);
  }
  CHECK_THROWS(conjecture_experiment(7));
}

TEST_CASE("reference comparison flags wrong values")
{
  SpectrumReport s = intersection_spectrum(Group::psl2(3));
  CHECK(compare_with_reference(s, 3).rows_match);
  s.rows[1].rho = 3;
  const ReferenceComparison bad = compare_with_reference(s, 3);
  CHECK_FALSE(bad.rows_match);
  CHECK_FALSE(bad.mismatches.empty());
  CHECK_FALSE(reference_table(23).has_value());
  CHECK(reference_table(9)->size() == 22);
}
