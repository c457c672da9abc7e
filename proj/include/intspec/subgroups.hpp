#pragma once

#include <optional>
#include <string>
#include <vector>

#include "intspec/group.hpp"

namespace intspec {

struct Subgroup {
  std::vector<Elem> members; // sorted
  std::vector<Elem> generators;
  std::string family = "generic";

  std::size_t order() const { return members.size(); }
  bool contains(Elem g) const;
};

// Subgroup generated by gens.
Subgroup closure(const Group& G, const std::vector<Elem>& gens, std::string family = "generic");
bool is_subgroup(const Group& G, const std::vector<Elem>& members);
Subgroup normalizer(const Group& G, const Subgroup& H);
// x H x^-1, sorted.
std::vector<Elem> conjugate_set(const Group& G, const std::vector<Elem>& members, Elem x);
// Some x with x A x^-1 = B, if one exists.
std::optional<Elem> conjugating_element(const Group& G, const Subgroup& A, const Subgroup& B);
Subgroup derived_subgroup(const Group& G, const Subgroup& H);

// Named subgroups of PSL(2, q), q odd.
Subgroup subgroup_U(const Group& G);           // <A_e>, q = 3 mod 4
Subgroup subgroup_V(const Group& G);           // normalizer of U
Subgroup subgroup_unipotent(const Group& G);   // {[[1,x],[0,1]]}
Subgroup subgroup_torus(const Group& G);       // <diag(w, w^-1)>
Subgroup subgroup_M(const Group& G, std::uint32_t r); // <unipotent, A^r>, q = 1 mod 4
Subgroup subgroup_borel(const Group& G);

// Named subgroups of AGL(n, q).
Subgroup subgroup_E(const Group& G, std::uint32_t i); // translations of order p^i
Subgroup subgroup_linear(const Group& G);             // {(A, 0)}
Subgroup subgroup_translations(const Group& G);       // {(I, b)}

/// One subgroup per conjugacy class, sorted by (order, member list), each
/// given by the lexicographically smallest member list among its conjugates.
std::vector<Subgroup> enumerate_subgroups(const Group& G);

/// Structure name such as "C2 x C2", "D5", "A4", "C13 : C3", "PSL(2,8)".
std::string isomorphism_label(const Group& G, const Subgroup& H);

} // namespace intspec
