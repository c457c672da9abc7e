#include "intspec/action.hpp"

namespace intspec {

CosetAction::CosetAction(GroupPtr G, Subgroup H) : G_(std::move(G)), H_(std::move(H))
{
  if (!is_subgroup(*G_, H_.members)) throw GroupError("coset action: H is not a subgroup of " + G_->spec());
  const std::uint32_t N = G_->order();
  coset_of_.assign(N, UINT32_MAX);
  for (Elem g = 0; g < N; ++g) {
    if (coset_of_[g] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(g);
    for (Elem h : H_.members) coset_of_[G_->mul(g, h)] = id;
  }
  // fix(g) = |C_G(g)| * |g^G cap H| / |H|.
  const auto& cls = G_->classes();
  std::vector<std::uint64_t> meet(cls.size(), 0);
  for (Elem h : H_.members) ++meet[G_->class_of(h)];
  class_fix_.resize(cls.size());
  for (std::uint32_t c = 0; c < cls.size(); ++c) {
    const std::uint64_t num = G_->centralizer_order(c) * meet[c];
    if (num % H_.order() != 0) throw GroupError("internal: non-integral fixed point count");
    class_fix_[c] = num / H_.order();
  }
}

std::uint64_t CosetAction::fix_count_direct(Elem g) const
{
  std::uint64_t n = 0;
  for (std::uint32_t c = 0; c < degree(); ++c) n += act(g, c) == c;
  return n;
}

std::vector<std::uint32_t> CosetAction::derangement_classes() const
{
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < class_fix_.size(); ++c)
    if (class_fix_[c] == 0) out.push_back(c);
  return out;
}

std::vector<Elem> CosetAction::derangements() const
{
  std::vector<Elem> out;
  for (Elem g = 0; g < G_->order(); ++g)
    if (is_derangement(g)) out.push_back(g);
  return out;
}

} // namespace intspec
