#include "intspec/class_algebra.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace intspec {

RationalMatrix class_multiplication_matrix(const Group& G, const std::vector<Rational>& w)
{
  const auto& cls = G.classes();
  const std::size_t k = cls.size();
  if (w.size() != k) throw std::invalid_argument("one weight per class required");
  RationalMatrix M(k, std::vector<Rational>(k, Rational(0)));
  for (std::size_t j = 0; j < k; ++j) {
    const Elem g = cls[j].rep;
    for (std::size_t c = 0; c < k; ++c) {
      if (w[c] == 0) continue;
      std::vector<std::uint64_t> hits(k, 0);
      for (Elem x : G.class_members(static_cast<std::uint32_t>(c))) ++hits[G.class_of(G.mul(G.inv(x), g))];
      for (std::size_t i = 0; i < k; ++i)
        if (hits[i]) M[j][i] += w[c] * static_cast<unsigned long long>(hits[i]);
    }
  }
  return M;
}

SpectralCertificate certify_spectrum(const Group& G, const std::vector<Rational>& w)
{
  SpectralCertificate cert;
  const auto& cls = G.classes();
  for (std::size_t c = 0; c < cls.size(); ++c) cert.d += w[c] * static_cast<unsigned long long>(cls[c].size);

  const RationalMatrix M = class_multiplication_matrix(G, w);
  cert.charpoly = charpoly(M);
  const std::size_t k = M.size();
  Eigen::MatrixXd Md(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) Md(Eigen::Index(i), Eigen::Index(j)) = to_double(M[i][j]);
  Eigen::EigenSolver<Eigen::MatrixXd> es(Md, false);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) cert.eigenvalues.push_back(es.eigenvalues()[i].real());
  std::sort(cert.eigenvalues.begin(), cert.eigenvalues.end());

  const Rational tol = make_rational(1, 1000000000000LL);
  cert.tau = smallest_root(cert.charpoly, cert.eigenvalues.front(), tol);
  const RootBracket top = largest_root(cert.charpoly, cert.eigenvalues.back(), tol);
  cert.max_exact = top.exact;
  cert.lambda_max = top.exact ? top.lo : top.hi;
  return cert;
}

std::vector<std::vector<std::uint32_t>> inverse_pairs(const Group& G)
{
  std::vector<std::vector<std::uint32_t>> out;
  const auto& cls = G.classes();
  for (std::uint32_t c = 0; c < cls.size(); ++c) {
    const std::uint32_t ic = cls[c].inverse_class;
    if (ic < c) continue;
    out.push_back(ic == c ? std::vector<std::uint32_t>{c} : std::vector<std::uint32_t>{c, ic});
  }
  return out;
}

CentralCharacters central_characters(const Group& G)
{
  CentralCharacters cc;
  cc.pairs = inverse_pairs(G);
  const std::size_t k = G.classes().size();
  std::vector<Eigen::MatrixXd> mats;
  for (const auto& P : cc.pairs) {
    std::vector<Rational> w(k, Rational(0));
    for (auto c : P) w[c] = 1;
    const RationalMatrix M = class_multiplication_matrix(G, w);
    Eigen::MatrixXd Md(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) Md(Eigen::Index(i), Eigen::Index(j)) = to_double(M[i][j]);
    mats.push_back(std::move(Md));
  }
  // A generic combination separates all characters up to complex conjugation,
  // which the pair sums cannot distinguish anyway.
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> U(0.5, 1.5);
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(Eigen::Index(k), Eigen::Index(k));
  for (const auto& Md : mats) R += U(rng) * Md;
  Eigen::EigenSolver<Eigen::MatrixXd> es(R, true);
  const auto V = es.eigenvectors();

  cc.value.resize(Eigen::Index(k), Eigen::Index(cc.pairs.size()));
  for (Eigen::Index j = 0; j < Eigen::Index(k); ++j) {
    Eigen::VectorXcd v = V.col(j);
    Eigen::Index piv = 0;
    v.cwiseAbs().maxCoeff(&piv);
    for (std::size_t p = 0; p < mats.size(); ++p) {
      const std::complex<double> lam = (mats[p].cast<std::complex<double>>() * v)(piv) / v(piv);
      cc.value(j, Eigen::Index(p)) = lam.real();
    }
  }
  // Trivial character first: it has the largest value on every pair.
  Eigen::Index best = 0;
  double best_sum = -1e300;
  for (Eigen::Index j = 0; j < cc.value.rows(); ++j) {
    const double s = cc.value.row(j).sum();
    if (s > best_sum) best_sum = s, best = j;
  }
  if (best != 0) cc.value.row(0).swap(cc.value.row(best));
  return cc;
}

} // namespace intspec
