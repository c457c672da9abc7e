#pragma once

#include <stdexcept>
#include <string>

#include "intspec/group.hpp"
#include "intspec/subgroups.hpp"

namespace intspec {

class SpecError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// "PSL2:q=7" or "AGL:n=2,q=3".
GroupPtr parse_group_spec(const std::string& text);

// "family=U", "family=V", "family=M,r=3", "family=torus", "family=borel",
// "family=unipotent", "family=Ei,i=1", "family=linear", "family=translations",
// "family=whole", "family=trivial", or "index=<n>" (0-based position in the
// enumerate_subgroups list).
Subgroup parse_subgroup_spec(const Group& G, const std::string& text);

// Splits "k=v,k=v" into pairs; throws SpecError naming the rule on malformed input.
std::vector<std::pair<std::string, std::string>> parse_key_values(const std::string& text, const std::string& rule);

} // namespace intspec
