#include "doctest.h"

#include "intspec/specs.hpp"

using namespace intspec;

TEST_CASE("group specs")
{
  CHECK(parse_group_spec("PSL2:q=7")->order() == 168);
  CHECK(parse_group_spec("AGL:n=2,q=3")->order() == 432);
  CHECK(parse_group_spec("PSL2:q=7")->spec() == "PSL2:q=7");
  for (const char* bad : {"PSL2", "PSL2:q=6", "PSL2:q=x", "SL2:q=7", "AGL:q=3", "AGL:n=2,q=3,z=1", ""})
    CHECK_THROWS_AS(parse_group_spec(bad), SpecError);
}

TEST_CASE("subgroup specs")
{
  auto G = parse_group_spec("PSL2:q=13");
  CHECK(parse_subgroup_spec(*G, "family=M,r=3").order() == 26);
  CHECK(parse_subgroup_spec(*G, "family=M,r=1").order() == 78);
  CHECK(parse_subgroup_spec(*G, "family=torus").order() == 6);
  CHECK(parse_subgroup_spec(*G, "family=borel").order() == 78);
  CHECK(parse_subgroup_spec(*G, "family=whole").order() == 1092);
  CHECK(parse_subgroup_spec(*G, "family=trivial").order() == 1);
  CHECK(parse_subgroup_spec(*G, "index=0").order() == 1);
  auto A = parse_group_spec("AGL:n=1,q=9");
  CHECK(parse_subgroup_spec(*A, "family=Ei,i=1").order() == 3);
  CHECK(parse_subgroup_spec(*A, "family=linear").order() == 8);
  try {
    parse_subgroup_spec(*G, "family=nope");
    FAIL("no error");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find("subgroup spec must be") != std::string::npos);
  }
  CHECK_THROWS(parse_subgroup_spec(*G, "family=U"));   // q = 1 mod 4
  CHECK_THROWS(parse_subgroup_spec(*G, "family=M,r=5"));
  CHECK_THROWS(parse_subgroup_spec(*G, "index=999"));
  CHECK_THROWS(parse_subgroup_spec(*G, "family"));
}

TEST_CASE("key-value lists")
{
  const auto kv = parse_key_values("n=2,q=3", "rule");
  REQUIRE(kv.size() == 2);
  CHECK(kv[1] == std::pair<std::string, std::string>{"q", "3"});
  CHECK_THROWS_AS(parse_key_values("n=2,,q=3", "rule"), SpecError);
  CHECK_THROWS_AS(parse_key_values("n", "rule"), SpecError);
}
