#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "intspec/action.hpp"
#include "intspec/cyclotomic.hpp"
#include "intspec/dgraph.hpp"
#include "intspec/group.hpp"

namespace intspec {

enum class CharFamily {
  Trivial,         // rho'(1)
  Steinberg,       // rhobar(1)
  PrincipalSeries, // rho(alpha_i)
  Discrete,        // pi(chi_m)
  HalfPlus,        // omega_e^+ or omega_0^+
  HalfMinus        // omega_e^- or omega_0^-
};

struct Character {
  std::string label;
  CharFamily family = CharFamily::Trivial;
  std::uint32_t param = 0; // i of alpha_i, m of chi_m
  std::uint32_t degree = 0;
  // By class id; nullopt where the table leaves the value unspecified
  // (the half-degree characters on the unipotent classes).
  std::vector<std::optional<Cyclotomic>> values;
};

/// Character table of PSL(2, q), q odd, with exact values in Q(zeta_N),
/// N = (q^2 - 1) / 2. Column order is the class order of the group.
class CharTable {
public:
  explicit CharTable(GroupPtr G);

  const Group& group() const { return *G_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t conductor() const { return N_; }
  const std::vector<Character>& characters() const { return chars_; }
  std::size_t index_of(const std::string& label) const;
  bool fully_specified(std::size_t chi) const;

  // chi(c2(1)) + chi(c2(Delta)), exact, from orthogonality with the trivial character.
  Rational unipotent_pair_sum(std::size_t chi) const;
  // Every entry numerically, unspecified entries solved from column orthogonality.
  std::complex<double> numeric_value(std::size_t chi, std::uint32_t cls) const { return numeric_[chi][cls]; }

  // <a, b>_G exactly; both rows must be fully specified.
  Cyclotomic inner_product(std::size_t a, std::size_t b) const;
  std::complex<double> inner_product_numeric(std::size_t a, std::size_t b) const;

  // Building blocks, exposed for the character-sum checks.
  Cyclotomic xi_power(std::int64_t e) const;  // primitive (q-1)-th root to the e
  Cyclotomic eta_power(std::int64_t e) const; // primitive (q+1)-th root to the e

private:
  void resolve_unknowns();

  GroupPtr G_;
  std::uint32_t q_ = 0, N_ = 0;
  std::vector<Character> chars_;
  std::vector<std::vector<std::complex<double>>> numeric_;
};

struct CharEigenvalue {
  std::string label;
  std::uint32_t degree = 0;
  std::optional<Cyclotomic> exact;
  std::complex<double> numeric;
  bool approx = false; // true when exact is empty
};

// lambda_chi = (1/chi(1)) sum_C w_C |C| chi(C), one per irreducible character.
// Unspecified entries are handled exactly when both unipotent classes carry the
// same weight; otherwise allow_numeric must be set and the value is numeric.
std::vector<CharEigenvalue> weighted_eigenvalues(const CharTable& tbl, const std::vector<Rational>& class_weights,
                                                 bool allow_numeric = false);

// |G| / (1 - d / tau).
Rational ratio_bound(const Rational& d_max, const Rational& tau_min, std::uint64_t group_order);
Rational clique_coclique_bound(std::uint64_t group_order, std::uint64_t clique_size);

// Registered class weightings (one weight per class id).
std::vector<Rational> weights_unipotent_split(const Group& G); // q = 3 mod 4, Cayley matrix for U_q
std::vector<Rational> weights_borel_family(const Group& G, std::uint32_t r); // q = 1 mod 4, for M_r
std::vector<Rational> weights_uniform(const CosetAction& act);

enum class CharSum {
  SplitAlpha, // sum over J_q of alpha(w^i) + alpha(w^-i), alpha = alpha_param
  Norm1,      // sum over Z_q of chi(z) + chi(z^-1), chi = chi_param on E_q
  Zeta        // sum over J_q of zeta(w^i)
};

// Exact character sums over the split classes J_q = {1 <= i <= (q-5)/4 : r does not divide i}
// and the non-split representatives Z_q = {e^j : 1 <= j <= (q-1)/4}.
Cyclotomic split_char_sum(std::uint32_t q, std::uint32_t r, CharSum kind, std::uint32_t param = 0);

// <fix, chi> for every character, as nonnegative integers keyed by label.
std::map<std::string, std::uint64_t> perm_char_decompose(const CosetAction& act, const CharTable& tbl);

// True iff B (v_S - |S|/|G| 1) = tau (v_S - |S|/|G| 1) exactly.
// Throws when S is not a coclique of the graph.
bool eigenspace_membership(const WeightedScheme& B, const DerangementGraph& graph, const std::vector<Elem>& S,
                           const Rational& tau = Rational(-1));

} // namespace intspec
