#pragma once

#include <vector>

#include "intspec/group.hpp"
#include "intspec/subgroups.hpp"

namespace intspec {

/// G acting on the left cosets of H by left multiplication.
class CosetAction {
public:
  CosetAction(GroupPtr G, Subgroup H);

  const Group& group() const { return *G_; }
  const GroupPtr& group_ptr() const { return G_; }
  const Subgroup& subgroup() const { return H_; }

  std::uint32_t degree() const { return static_cast<std::uint32_t>(reps_.size()); }
  // Smallest element index of each coset.
  const std::vector<Elem>& coset_reps() const { return reps_; }
  std::uint32_t coset_of(Elem g) const { return coset_of_[g]; }
  std::uint32_t act(Elem g, std::uint32_t coset) const { return coset_of_[G_->mul(g, reps_[coset])]; }

  // Number of fixed cosets, from the class data.
  std::uint64_t fix_count(Elem g) const { return class_fix_[G_->class_of(g)]; }
  // Same number by scanning all cosets.
  std::uint64_t fix_count_direct(Elem g) const;
  bool is_derangement(Elem g) const { return fix_count(g) == 0; }

  // Permutation character by class id.
  const std::vector<std::uint64_t>& class_fix() const { return class_fix_; }
  std::vector<std::uint32_t> derangement_classes() const;
  // All derangements, sorted.
  std::vector<Elem> derangements() const;

private:
  GroupPtr G_;
  Subgroup H_;
  std::vector<Elem> reps_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<std::uint64_t> class_fix_;
};

} // namespace intspec
