#include "intspec/chartab.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace intspec {

namespace {

std::int64_t sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

bool is_unipotent(ClassFamily f) { return f == ClassFamily::Unipotent1 || f == ClassFamily::UnipotentDelta; }

} // namespace

Cyclotomic CharTable::xi_power(std::int64_t e) const { return cyclic_character(q_ - 1, 1, e, N_); }

Cyclotomic CharTable::eta_power(std::int64_t e) const { return cyclic_character(q_ + 1, 1, e, N_); }

CharTable::CharTable(GroupPtr G) : G_(std::move(G))
{
  if (G_->kind() != GroupKind::PSL2) throw std::invalid_argument("character tables are built for PSL(2, q) only");
  q_ = G_->q();
  if (q_ % 2 == 0) throw std::invalid_argument("character table needs odd q");
  if (q_ > 61) throw std::invalid_argument("exact character tables are limited to q <= 61");
  N_ = (q_ * q_ - 1) / 2;
  const bool one_mod_4 = q_ % 4 == 1;
  const auto& cls = G_->classes();
  const std::size_t k = cls.size();
  const std::int64_t q = q_;

  auto rat = [&](std::int64_t v) { return Cyclotomic::from_rational(N_, Rational(v)); };
  auto add_row = [&](std::string label, CharFamily fam, std::uint32_t param, std::uint32_t degree) -> Character& {
    Character c;
    c.label = std::move(label);
    c.family = fam;
    c.param = param;
    c.degree = degree;
    c.values.resize(k);
    chars_.push_back(std::move(c));
    return chars_.back();
  };

  // Trivial and Steinberg.
  {
    Character& t = add_row("rho'(1)", CharFamily::Trivial, 0, 1);
    for (std::size_t c = 0; c < k; ++c) t.values[c] = rat(1);
    Character& s = add_row("rhobar(1)", CharFamily::Steinberg, 0, q_);
    for (std::size_t c = 0; c < k; ++c) {
      switch (cls[c].family) {
      case ClassFamily::Identity: s.values[c] = rat(q); break;
      case ClassFamily::Unipotent1:
      case ClassFamily::UnipotentDelta: s.values[c] = rat(0); break;
      case ClassFamily::Split:
      case ClassFamily::SplitSqrtM1: s.values[c] = rat(1); break;
      case ClassFamily::Involution:
      case ClassFamily::Nonsplit: s.values[c] = rat(-1); break;
      case ClassFamily::Generic: throw std::logic_error("untagged class in PSL(2, q)");
      }
    }
  }
  // Principal series rho(alpha_i): i even, 0 < i < (q-1)/2, alpha_i^2 != 1.
  for (std::uint32_t i = 2; 2 * i < q_ - 1; i += 2) {
    Character& r = add_row("rho(alpha_" + std::to_string(i) + ")", CharFamily::PrincipalSeries, i, q_ + 1);
    for (std::size_t c = 0; c < k; ++c) {
      const std::int64_t p = cls[c].param;
      switch (cls[c].family) {
      case ClassFamily::Identity: r.values[c] = rat(q + 1); break;
      case ClassFamily::Unipotent1:
      case ClassFamily::UnipotentDelta: r.values[c] = rat(1); break;
      case ClassFamily::Split: r.values[c] = xi_power(i * p) + xi_power(-std::int64_t(i) * p); break;
      case ClassFamily::SplitSqrtM1: r.values[c] = xi_power(std::int64_t(i) * (q - 1) / 4) * Rational(2); break;
      default: r.values[c] = rat(0); break;
      }
    }
  }
  // Discrete series pi(chi_m): m even, 0 < m < (q+1)/2.
  for (std::uint32_t m = 2; 2 * m < q_ + 1; m += 2) {
    Character& d = add_row("pi(chi_" + std::to_string(m) + ")", CharFamily::Discrete, m, q_ - 1);
    for (std::size_t c = 0; c < k; ++c) {
      const std::int64_t p = cls[c].param;
      switch (cls[c].family) {
      case ClassFamily::Identity: d.values[c] = rat(q - 1); break;
      case ClassFamily::Unipotent1:
      case ClassFamily::UnipotentDelta: d.values[c] = rat(-1); break;
      case ClassFamily::Involution: d.values[c] = eta_power(std::int64_t(m) * (q + 1) / 4) * Rational(-2); break;
      case ClassFamily::Nonsplit: d.values[c] = -(eta_power(m * p) + eta_power(-std::int64_t(m) * p)); break;
      default: d.values[c] = rat(0); break;
      }
    }
  }
  // The two half-degree characters.
  const std::string tag = one_mod_4 ? "omega_e" : "omega_0";
  const std::uint32_t half = one_mod_4 ? (q_ + 1) / 2 : (q_ - 1) / 2;
  for (int sgn = 0; sgn < 2; ++sgn) {
    Character& w = add_row(tag + (sgn == 0 ? "+" : "-"), sgn == 0 ? CharFamily::HalfPlus : CharFamily::HalfMinus, 0, half);
    for (std::size_t c = 0; c < k; ++c) {
      const std::int64_t p = cls[c].param;
      switch (cls[c].family) {
      case ClassFamily::Identity: w.values[c] = rat(half); break;
      case ClassFamily::Unipotent1:
      case ClassFamily::UnipotentDelta: break; // unspecified
      case ClassFamily::Split: w.values[c] = rat(one_mod_4 ? sign_pow(p) : 0); break;
      case ClassFamily::SplitSqrtM1: w.values[c] = rat(sign_pow((q - 1) / 4)); break;
      case ClassFamily::Involution: w.values[c] = rat(-sign_pow((q + 1) / 4)); break;
      case ClassFamily::Nonsplit: w.values[c] = rat(one_mod_4 ? 0 : -sign_pow(p)); break;
      case ClassFamily::Generic: break;
      }
    }
  }
  if (chars_.size() != k) throw std::logic_error("character count differs from class count");
  resolve_unknowns();
}

std::size_t CharTable::index_of(const std::string& label) const
{
  for (std::size_t i = 0; i < chars_.size(); ++i)
    if (chars_[i].label == label) return i;
  throw std::out_of_range("no character labelled " + label);
}

bool CharTable::fully_specified(std::size_t chi) const
{
  for (const auto& v : chars_[chi].values)
    if (!v) return false;
  return true;
}

Rational CharTable::unipotent_pair_sum(std::size_t chi) const
{
  const auto& cls = G_->classes();
  const auto& row = chars_[chi].values;
  Cyclotomic known = Cyclotomic::zero(N_);
  Rational unip_size = 0;
  for (std::size_t c = 0; c < cls.size(); ++c) {
    if (is_unipotent(cls[c].family)) {
      unip_size = static_cast<unsigned long long>(cls[c].size);
      continue;
    }
    known += *row[c] * Rational(static_cast<unsigned long long>(cls[c].size));
  }
  // sum_C |C| chi(C) = 0 for nontrivial chi, both unipotent classes have the same size.
  if (chars_[chi].family == CharFamily::Trivial) return 2;
  const Cyclotomic s = -known * (Rational(1) / unip_size);
  return s.to_rational();
}

void CharTable::resolve_unknowns()
{
  const auto& cls = G_->classes();
  const std::size_t k = cls.size();
  numeric_.assign(chars_.size(), std::vector<std::complex<double>>(k));
  for (std::size_t i = 0; i < chars_.size(); ++i)
    for (std::size_t c = 0; c < k; ++c)
      if (chars_[i].values[c]) numeric_[i][c] = chars_[i].values[c]->to_complex();

  const std::size_t plus = chars_.size() - 2, minus = chars_.size() - 1;
  const double deg = chars_[plus].degree;
  const double s = to_double(unipotent_pair_sum(plus));
  std::uint32_t u1 = 0, ud = 0;
  for (std::uint32_t c = 0; c < k; ++c) {
    if (cls[c].family == ClassFamily::Unipotent1) u1 = c;
    if (cls[c].family == ClassFamily::UnipotentDelta) ud = c;
  }
  // Column relations at c2(1): sum chi(1) chi(u) = 0 and sum |chi(u)|^2 = q.
  std::complex<double> K1 = 0;
  double K2 = 0;
  for (std::size_t i = 0; i < plus; ++i) {
    K1 += double(chars_[i].degree) * numeric_[i][u1];
    K2 += std::norm(numeric_[i][u1]);
  }
  const double rest = double(q_) - K2;
  if (q_ % 4 == 1) {
    // Real values: u+ + u- = s1, u+^2 + u-^2 = rest.
    const double s1 = -K1.real() / deg;
    const double x = (s1 + std::sqrt(std::max(0.0, 2 * rest - s1 * s1))) / 2;
    numeric_[plus][u1] = x;
    numeric_[minus][u1] = s1 - x;
    numeric_[plus][ud] = s - x;
    numeric_[minus][ud] = s - (s1 - x);
  } else {
    // c2(-1) is the inverse class of c2(1): values are complex conjugates.
    const double a = s / 2;
    const double b = std::sqrt(std::max(0.0, rest / 2 - a * a));
    numeric_[plus][u1] = {a, b};
    numeric_[minus][u1] = {a, -b};
    numeric_[plus][ud] = {a, -b};
    numeric_[minus][ud] = {a, b};
  }
}

Cyclotomic CharTable::inner_product(std::size_t a, std::size_t b) const
{
  if (!fully_specified(a) || !fully_specified(b))
    throw std::invalid_argument("inner product needs fully specified characters");
  const auto& cls = G_->classes();
  Cyclotomic acc = Cyclotomic::zero(N_);
  for (std::size_t c = 0; c < cls.size(); ++c)
    acc += (*chars_[a].values[c] * chars_[b].values[c]->conj()) * Rational(static_cast<unsigned long long>(cls[c].size));
  return acc * Rational(1, G_->order());
}

std::complex<double> CharTable::inner_product_numeric(std::size_t a, std::size_t b) const
{
  const auto& cls = G_->classes();
  std::complex<double> acc = 0;
  for (std::size_t c = 0; c < cls.size(); ++c) acc += double(cls[c].size) * numeric_[a][c] * std::conj(numeric_[b][c]);
  return acc / double(G_->order());
}

std::vector<CharEigenvalue> weighted_eigenvalues(const CharTable& tbl, const std::vector<Rational>& w, bool allow_numeric)
{
  const Group& G = tbl.group();
  const auto& cls = G.classes();
  if (w.size() != cls.size()) throw std::invalid_argument("one weight per class required");
  std::uint32_t u1 = 0, ud = 0;
  for (std::uint32_t c = 0; c < cls.size(); ++c) {
    if (cls[c].family == ClassFamily::Unipotent1) u1 = c;
    if (cls[c].family == ClassFamily::UnipotentDelta) ud = c;
  }
  std::vector<CharEigenvalue> out;
  for (std::size_t i = 0; i < tbl.characters().size(); ++i) {
    const Character& chi = tbl.characters()[i];
    CharEigenvalue ev;
    ev.label = chi.label;
    ev.degree = chi.degree;
    std::complex<double> num = 0;
    for (std::size_t c = 0; c < cls.size(); ++c)
      num += to_double(w[c]) * double(cls[c].size) * tbl.numeric_value(i, static_cast<std::uint32_t>(c));
    ev.numeric = num / double(chi.degree);

    Cyclotomic acc = Cyclotomic::zero(tbl.conductor());
    bool exact = true;
    for (std::size_t c = 0; c < cls.size(); ++c) {
      if (w[c] == 0 || is_unipotent(cls[c].family)) continue;
      acc += *chi.values[c] * (w[c] * static_cast<unsigned long long>(cls[c].size));
    }
    const Rational size = static_cast<unsigned long long>(cls[u1].size);
    if (tbl.fully_specified(i)) {
      for (std::uint32_t c : {u1, ud})
        if (w[c] != 0) acc += *chi.values[c] * (w[c] * size);
    } else if (w[u1] == w[ud]) {
      if (w[u1] != 0) acc += Cyclotomic::from_rational(tbl.conductor(), w[u1] * size * tbl.unipotent_pair_sum(i));
    } else {
      if (!allow_numeric)
        throw std::invalid_argument("weights separate the unipotent classes where " + chi.label + " is unspecified");
      exact = false;
    }
    if (exact) ev.exact = acc * Rational(1, chi.degree);
    ev.approx = !exact;
    out.push_back(std::move(ev));
  }
  return out;
}

Rational ratio_bound(const Rational& d, const Rational& tau, std::uint64_t n)
{
  if (tau >= 0) throw std::invalid_argument("ratio bound needs a negative least eigenvalue");
  if (d <= 0) throw std::invalid_argument("ratio bound needs a positive largest eigenvalue");
  return Rational(static_cast<unsigned long long>(n)) / (1 - d / tau);
}

Rational clique_coclique_bound(std::uint64_t n, std::uint64_t clique)
{
  if (clique == 0) throw std::invalid_argument("clique size must be positive");
  return Rational(BigInt(n), BigInt(clique));
}

std::vector<Rational> weights_unipotent_split(const Group& G)
{
  if (G.kind() != GroupKind::PSL2 || G.q() % 4 != 3) throw std::invalid_argument("this weighting needs PSL(2, q), q = 3 mod 4");
  const Rational base(1, G.q() + 1);
  std::vector<Rational> w(G.classes().size(), Rational(0));
  for (std::size_t c = 0; c < w.size(); ++c) {
    const auto f = G.classes()[c].family;
    if (is_unipotent(f)) w[c] = base;
    if (f == ClassFamily::Split) w[c] = 2 * base;
  }
  return w;
}

std::vector<Rational> weights_borel_family(const Group& G, std::uint32_t r)
{
  if (G.kind() != GroupKind::PSL2 || G.q() % 4 != 1) throw std::invalid_argument("this weighting needs PSL(2, q), q = 1 mod 4");
  const std::int64_t q = G.q();
  if (r % 2 == 0 || ((q - 1) / 2) % r != 0) throw std::invalid_argument("r must be odd and divide (q-1)/2");
  const Rational R = static_cast<long long>(r);
  std::vector<Rational> w(G.classes().size(), Rational(0));
  Rational w3 = 0;
  if (r > 1) w3 = Rational((q + 1) * r - (q + 1)) / (2 * (Rational(q * (q * q - 1)) * (R - 1) / (4 * R)));
  const Rational w4 = Rational((q + 1) * r + (q - 1)) / (2 * Rational(q * (q - 1) * (q - 1), 4));
  for (std::size_t c = 0; c < w.size(); ++c) {
    const auto& cl = G.classes()[c];
    if (cl.family == ClassFamily::Split && cl.param % r != 0) w[c] = w3;
    if (cl.family == ClassFamily::Nonsplit) w[c] = w4;
  }
  return w;
}

std::vector<Rational> weights_uniform(const CosetAction& act)
{
  std::vector<Rational> w(act.group().classes().size(), Rational(0));
  for (auto c : act.derangement_classes()) w[c] = 1;
  return w;
}

Cyclotomic split_char_sum(std::uint32_t q, std::uint32_t r, CharSum kind, std::uint32_t param)
{
  if (q % 4 != 1) throw std::invalid_argument("character sums are stated for q = 1 mod 4");
  if (r % 2 == 0 || ((q - 1) / 2) % r != 0) throw std::invalid_argument("r must be odd and divide (q-1)/2");
  const std::uint32_t N = (q * q - 1) / 2;
  Cyclotomic acc = Cyclotomic::zero(N);
  switch (kind) {
  case CharSum::SplitAlpha: {
    const std::uint32_t i = param % (q - 1);
    if (i == 0 || i % 2 != 0) throw std::invalid_argument("alpha must be nontrivial with alpha(-1) = 1");
    for (std::uint32_t t = 1; 4 * t + 5 <= q; ++t) {
      if (t % r == 0) continue;
      acc += cyclic_character(q - 1, i, t, N) + cyclic_character(q - 1, i, -std::int64_t(t), N);
    }
    break;
  }
  case CharSum::Norm1: {
    const std::uint32_t m = param % (q + 1);
    if (m == 0 || m % 2 != 0) throw std::invalid_argument("chi must be nontrivial with chi(-1) = 1");
    for (std::uint32_t j = 1; 4 * j + 1 <= q; ++j)
      acc += cyclic_character(q + 1, m, j, N) + cyclic_character(q + 1, m, -std::int64_t(j), N);
    break;
  }
  case CharSum::Zeta:
    for (std::uint32_t t = 1; 4 * t + 5 <= q; ++t)
      if (t % r != 0) acc += cyclic_character(q - 1, (q - 1) / 2, t, N);
    break;
  }
  return acc;
}

std::map<std::string, std::uint64_t> perm_char_decompose(const CosetAction& act, const CharTable& tbl)
{
  if (&act.group() != &tbl.group()) throw std::invalid_argument("action and table belong to different groups");
  const Group& G = tbl.group();
  const auto& cls = G.classes();
  const auto& fix = act.class_fix();
  std::map<std::string, std::uint64_t> out;
  std::uint32_t u1 = 0, ud = 0;
  for (std::uint32_t c = 0; c < cls.size(); ++c) {
    if (cls[c].family == ClassFamily::Unipotent1) u1 = c;
    if (cls[c].family == ClassFamily::UnipotentDelta) ud = c;
  }
  std::uint64_t degree_check = 0;
  for (std::size_t i = 0; i < tbl.characters().size(); ++i) {
    const Character& chi = tbl.characters()[i];
    Rational m;
    if (tbl.fully_specified(i) || fix[u1] == fix[ud]) {
      Cyclotomic acc = Cyclotomic::zero(tbl.conductor());
      for (std::size_t c = 0; c < cls.size(); ++c) {
        if (!chi.values[c]) continue;
        acc += chi.values[c]->conj() * Rational(static_cast<unsigned long long>(cls[c].size * fix[c]));
      }
      if (!tbl.fully_specified(i))
        acc += Cyclotomic::from_rational(tbl.conductor(),
                                         Rational(static_cast<unsigned long long>(cls[u1].size * fix[u1])) *
                                             tbl.unipotent_pair_sum(i));
      acc *= Rational(1, G.order());
      if (!acc.is_rational()) throw std::logic_error("multiplicity of " + chi.label + " is not rational");
      m = acc.to_rational();
    } else {
      std::complex<double> acc = 0;
      for (std::size_t c = 0; c < cls.size(); ++c)
        acc += double(cls[c].size * fix[c]) * std::conj(tbl.numeric_value(i, static_cast<std::uint32_t>(c)));
      acc /= double(G.order());
      const double r = std::round(acc.real());
      if (std::abs(acc.real() - r) > 1e-6 || std::abs(acc.imag()) > 1e-6)
        throw std::logic_error("numeric multiplicity of " + chi.label + " is not an integer");
      m = Rational(static_cast<long long>(r));
    }
    if (denominator(m) != 1 || m < 0) throw std::logic_error("multiplicity of " + chi.label + " is not a nonnegative integer");
    const auto mult = numerator(m).convert_to<std::uint64_t>();
    out[chi.label] = mult;
    degree_check += mult * chi.degree;
  }
  if (degree_check != act.degree()) throw std::logic_error("multiplicities do not add up to the degree");
  return out;
}

bool eigenspace_membership(const WeightedScheme& B, const DerangementGraph& graph, const std::vector<Elem>& S,
                           const Rational& tau)
{
  const Group& G = B.group();
  const std::uint32_t n = G.order();
  std::vector<char> in(n, 0);
  for (Elem s : S) {
    if (s >= n) throw std::out_of_range("vertex out of range");
    in[s] = 1;
  }
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j)
      if (graph.graph.has_edge(S[i], S[j])) throw std::invalid_argument("vertex set is not a coclique");

  const auto& cls = G.classes();
  std::vector<std::pair<Elem, std::uint32_t>> support; // (element, class)
  std::vector<Rational> cw(cls.size(), Rational(0));
  for (const auto& [c, wt] : B.weights()) {
    cw[c] = wt;
    if (wt != 0)
      for (Elem x : G.class_members(c)) support.emplace_back(x, c);
  }
  Rational d = 0;
  for (std::size_t c = 0; c < cls.size(); ++c) d += cw[c] * static_cast<unsigned long long>(cls[c].size);
  const Rational mean = Rational(static_cast<unsigned long long>(S.size()), n);
  // (B v_S)(g) = sum_s w(s) [g s in S]; B 1 = d 1.
  std::vector<std::uint64_t> hits(cls.size());
  for (Elem g = 0; g < n; ++g) {
    std::fill(hits.begin(), hits.end(), 0);
    for (const auto& [x, c] : support)
      if (in[G.mul(g, x)]) ++hits[c];
    Rational lhs = -mean * d;
    for (std::size_t c = 0; c < cls.size(); ++c)
      if (hits[c]) lhs += cw[c] * static_cast<unsigned long long>(hits[c]);
    const Rational rhs = tau * (Rational(in[g] ? 1 : 0) - mean);
    if (lhs != rhs) return false;
  }
  return true;
}

} // namespace intspec
