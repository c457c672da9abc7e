#include "doctest.h"

#include "intspec/report.hpp"

using namespace intspec;

TEST_CASE("density JSON round trip")
{
  auto G = Group::psl2(11);
  const DensityReport r = intersection_density(G, subgroup_torus(*G), "family=torus");
  const auto j = to_json(r);
  CHECK(j["rho"] == "12/5");
  CHECK(j["schema"] == "intspec.density/1");
  const DensityReport back = density_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back == r);
  CHECK(back.rho == r.rho);
  CHECK(back.witness == r.witness);
}

TEST_CASE("spectrum JSON round trip")
{
  const SpectrumReport s = intersection_spectrum(Group::psl2(5));
  const SpectrumReport back = spectrum_from_json(nlohmann::json::parse(to_json(s).dump()));
  REQUIRE(back.rows.size() == s.rows.size());
  for (std::size_t i = 0; i < s.rows.size(); ++i) CHECK(back.rows[i] == s.rows[i]);
  CHECK(back.sigma == s.sigma);
  CHECK_THROWS(spectrum_from_json(nlohmann::json{{"schema", "other"}}));
}

TEST_CASE("tables")
{
  CHECK(short_fraction(Rational(4, 3)) == "4/3");
  CHECK(short_fraction(Rational(2)) == "2");
  const SpectrumReport s = intersection_spectrum(Group::psl2(11));
  const std::string csv = density_csv(s.rows);
  CHECK(csv.find("\"PSL(2,11)\"") != std::string::npos); // labels with commas are quoted
  const std::string md = spectrum_markdown(s);
  CHECK(md.find("| C5 | 5 | 12/5 | yes |") != std::string::npos);
  CHECK(md.find("sigma = {1, 12/5") == std::string::npos);
  CHECK(md.find("sigma = {1, 4/3, 17/10, 2, 12/5}") != std::string::npos);
}

TEST_CASE("eigenvalue report")
{
  auto G = Group::psl2(13);
  const EigenvalueReport e = weighted_spectrum(G, "eq7.3:r=3");
  CHECK(e.d == 41);
  CHECK(e.tau == -1);
  const auto j = to_json(e);
  CHECK(j["schema"] == "intspec.eigs/1");
  bool discrete = false;
  for (const auto& row : j["rows"]) discrete |= row["character"] == "pi(chi_2)" && row["value"] == "3/4";
  CHECK(discrete);
  CHECK_THROWS(weighted_spectrum(G, "eq6.1"));
  CHECK_THROWS(weighted_spectrum(G, "eq7.3:r=x"));
  CHECK_THROWS(weighted_spectrum(G, "uniform"));
  const Subgroup B = subgroup_borel(*G);
  const EigenvalueReport u = weighted_spectrum(G, "uniform", &B, "family=borel");
  // Fixed-point-free elements on the projective line: all but the identity,
  // 168 unipotents and 91 split tori with 5 nontrivial elements each.
  CHECK(u.d == 1092 - 1 - 168 - 91 * 5);
}

TEST_CASE("cache keys")
{
  DensityOptions a, b;
  b.node_budget = 5;
  const auto k1 = ResultCache::key("PSL2:q=7", "family=U", a);
  CHECK(k1.size() == 16);
  CHECK(k1 == ResultCache::key("PSL2:q=7", "family=U", a));
  CHECK(k1 != ResultCache::key("PSL2:q=7", "family=U", b));
  CHECK(k1 != ResultCache::key("PSL2:q=7", "index=4", a));
  CHECK(fnv1a64("") == 1469598103934665603ull);
}
