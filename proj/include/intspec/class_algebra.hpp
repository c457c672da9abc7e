#pragma once

#include <vector>

#include <Eigen/Dense>

#include "intspec/group.hpp"
#include "intspec/poly.hpp"

namespace intspec {

// Matrix of multiplication by z = sum_C w_C (class sum of C) on the centre of
// the group algebra, in the class-sum basis. Its eigenvalues are exactly the
// distinct eigenvalues of the class-weighted Cayley matrix, one per
// irreducible character.
RationalMatrix class_multiplication_matrix(const Group& G, const std::vector<Rational>& class_weights);

struct SpectralCertificate {
  Rational d;                  // eigenvalue on the all-ones vector (row sum)
  RootBracket tau;             // least eigenvalue, exact or bracketed
  Rational lambda_max;         // exact when max_exact
  bool max_exact = false;
  Poly charpoly;
  std::vector<double> eigenvalues; // numeric, one per character, ascending
};

SpectralCertificate certify_spectrum(const Group& G, const std::vector<Rational>& class_weights);

// Inverse-closed class unions, one per pair {C, C^-1}, ordered by smallest class id.
std::vector<std::vector<std::uint32_t>> inverse_pairs(const Group& G);

/// Numeric central characters on inverse-closed class unions.
/// value(chi, P) = eigenvalue of sum_{C in P} A_C on the chi-isotypic part.
struct CentralCharacters {
  std::vector<std::vector<std::uint32_t>> pairs;
  Eigen::MatrixXd value; // rows: one per irreducible (trivial first), cols: pairs
};

CentralCharacters central_characters(const Group& G);

} // namespace intspec
