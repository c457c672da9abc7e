#include "intspec/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <bitset>
#include <optional>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "intspec/action.hpp"
#include "intspec/reference.hpp"
#include "intspec/chartab.hpp"
#include "intspec/class_algebra.hpp"
#include "intspec/dgraph.hpp"
#include "intspec/mis.hpp"
#include "intspec/spectrum.hpp"
#include "intspec/subgroups.hpp"

namespace intspec {

namespace {

struct Check {
  CriterionResult& res;
  void operator()(bool ok, const std::string& what)
  {
    if (!ok) res.pass = false;
    res.details.push_back((ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { res.details.push_back("     " + what); }
};

std::string frac(const Rational& r) { return to_fraction_string(r); }

std::string sci(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Rational ull(std::uint64_t v) { return Rational(static_cast<unsigned long long>(v)); }

std::string cyclo_str(const Cyclotomic& c) { return c.is_rational() ? frac(c.to_rational()) : c.to_string(); }

// Every entry of the table by exact value or, failing that, the solved numeric value.
std::complex<double> value_at(const CharTable& t, std::size_t chi, std::uint32_t c)
{
  const auto& v = t.characters()[chi].values[c];
  return v ? v->to_complex() : t.numeric_value(chi, c);
}

void spectrum_against_reference(Check& check, std::uint32_t q, std::size_t allowed_uncertified)
{
  const SpectrumReport s = intersection_spectrum(Group::psl2(q));
  const ReferenceComparison cmp = compare_with_reference(s, q);
  std::ostringstream os;
  os << "PSL(2," << q << "): " << s.rows.size() << " rows, " << cmp.uncertified << " uncertified";
  check(cmp.rows_match && cmp.uncertified <= allowed_uncertified, os.str());
  for (const auto& m : cmp.mismatches) check(false, "PSL(2," + std::to_string(q) + ") " + m);
}

CriterionResult reference_core()
{
  CriterionResult res{1, "reference spectra, core tier", true, {}, 0};
  Check check{res};
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u, 11u}) spectrum_against_reference(check, q, 0);
  return res;
}

CriterionResult reference_extended()
{
  CriterionResult res{2, "reference spectra, extended tier", true, {}, 0};
  Check check{res};
  spectrum_against_reference(check, 13, 0);
  spectrum_against_reference(check, 17, 2);
  spectrum_against_reference(check, 19, 2);
  return res;
}

CriterionResult u_family()
{
  CriterionResult res{3, "U_q density 2 via V_q and the U_q weighting", true, {}, 0};
  Check check{res};
  for (std::uint32_t q : {7u, 11u, 19u}) {
    const std::string tag = "q=" + std::to_string(q) + ": ";
    GroupPtr G = Group::psl2(q);
    const Subgroup U = subgroup_U(*G);
    const Subgroup V = subgroup_V(*G);
    const DensityReport r = intersection_density(G, U, "family=U");
    const Rational d_want = ull(q * (q - 1) / 2 - 1);
    check(r.certified && r.rho == 2, tag + "rho = " + frac(r.rho) + (r.certified ? ", certified" : ", uncertified"));
    check(r.bound_kind == BoundKind::Ratio && r.nodes == 0 && r.solver_status.empty(),
          tag + "certified by " + to_string(r.bound_kind) + " with " + std::to_string(r.nodes) + " search nodes");
    check(r.witness == V.members, tag + "witness is V_q (order " + std::to_string(V.order()) + ")");
    check(r.ratio && r.ratio->weighting == "eq6.1" && r.ratio->d == d_want && r.ratio->tau_exact &&
              r.ratio->tau == -1 && r.ratio->bound == ull(q + 1),
          tag + "ratio certificate d=" + (r.ratio ? frac(r.ratio->d) : "-") +
              " tau=" + (r.ratio ? frac(r.ratio->tau) : "-") + " bound=" + (r.ratio ? frac(r.ratio->bound) : "-"));

    // Eigenvalues by character, against the published table.
    CharTable tbl(G);
    const auto eig = weighted_eigenvalues(tbl, weights_unipotent_split(*G));
    bool ok = true;
    std::string omega;
    for (std::size_t i = 0; i < eig.size(); ++i) {
      const auto& chi = tbl.characters()[i];
      Rational want;
      switch (chi.family) {
      case CharFamily::Trivial: want = d_want; break;
      case CharFamily::Steinberg: want = Rational(q - 3, 2); break;
      case CharFamily::PrincipalSeries:
      case CharFamily::Discrete: want = -1; break;
      default: want = -1; omega = chi.label + " = " + cyclo_str(*eig[i].exact); break;
      }
      if (!eig[i].exact || !eig[i].exact->is_rational() || eig[i].exact->to_rational() != want) ok = false;
    }
    check(ok, tag + "character eigenvalues (trivial, Steinberg, principal, discrete) match; " + omega);
  }
  return res;
}

CriterionResult m_family()
{
  CriterionResult res{4, "M_r density 1 via the M_r weighting", true, {}, 0};
  Check check{res};
  for (auto [q, r] : {std::pair{13u, 1u}, std::pair{13u, 3u}, std::pair{17u, 1u}}) {
    const std::string tag = "(q,r)=(" + std::to_string(q) + "," + std::to_string(r) + "): ";
    GroupPtr G = Group::psl2(q);
    const Subgroup M = subgroup_M(*G, r);
    const DensityReport rep = intersection_density(G, M, "family=M,r=" + std::to_string(r));
    check(rep.certified && rep.rho == 1 && rep.witness == M.members,
          tag + "rho = " + frac(rep.rho) + ", witness M_r of order " + std::to_string(M.order()));
    const std::string wname = "eq7.3:r=" + std::to_string(r);
    check(rep.ratio && rep.ratio->weighting == wname && rep.ratio->bound == ull(M.order()),
          tag + "ratio bound " + (rep.ratio ? rep.ratio->weighting + " = " + frac(rep.ratio->bound) : "missing"));

    CharTable tbl(G);
    const auto eig = weighted_eigenvalues(tbl, weights_borel_family(*G, r));
    const Rational qm1 = ull(q - 1);
    const Rational pi_want = 2 * (Rational(r + 1) / qm1 + Rational(2 * r) / (qm1 * qm1));
    Rational lmax = -1000, lmin = 1000;
    bool ok = true;
    for (std::size_t i = 0; i < eig.size(); ++i) {
      const auto& chi = tbl.characters()[i];
      Rational want;
      switch (chi.family) {
      case CharFamily::Trivial: want = ull(r * (q + 1) - 1); break;
      case CharFamily::Steinberg: want = -1; break;
      // alpha_i is trivial on <w^r> iff (q-1) | i r.
      case CharFamily::PrincipalSeries: want = (chi.param * r) % (q - 1) == 0 ? Rational(-1) : Rational(0); break;
      case CharFamily::Discrete: want = pi_want; break;
      default: want = 0; break;
      }
      if (!eig[i].exact || !eig[i].exact->is_rational() || eig[i].exact->to_rational() != want) {
        ok = false;
        check(false, tag + chi.label + " expected " + frac(want));
        continue;
      }
      lmax = std::max(lmax, want);
      lmin = std::min(lmin, want);
    }
    check(ok && lmax == ull(r * (q + 1) - 1) && lmin == -1,
          tag + "character eigenvalues match, max " + frac(lmax) + ", min " + frac(lmin) + ", discrete " + frac(pi_want));
  }
  return res;
}

CriterionResult agl_family()
{
  CriterionResult res{5, "AGL(n,q) densities p^(kn-i)", true, {}, 0};
  Check check{res};
  struct Case { std::uint32_t n, q, i, p, k; };
  for (Case c : {Case{1, 3, 1, 3, 1}, Case{1, 5, 1, 5, 1}, Case{1, 7, 1, 7, 1}, Case{1, 9, 1, 3, 2}, Case{1, 9, 2, 3, 2},
                 Case{2, 3, 1, 3, 1}, Case{2, 3, 2, 3, 1}}) {
    const DensityReport r = agl_density_certificate(c.n, c.q, c.i);
    Rational want = 1;
    for (std::uint32_t e = 0; e < c.k * c.n - c.i; ++e) want *= c.p;
    check(r.certified && r.rho == want && r.bound_kind == BoundKind::CliqueCoclique,
          "AGL(" + std::to_string(c.n) + "," + std::to_string(c.q) + "), i=" + std::to_string(c.i) + ": rho = " +
              frac(r.rho) + ", expected " + frac(want));
  }
  return res;
}

CriterionResult chartab_properties()
{
  CriterionResult res{6, "character table properties", true, {}, 0};
  Check check{res};
  for (std::uint32_t q : {5u, 9u, 13u, 7u, 11u, 19u}) {
    const std::string tag = "q=" + std::to_string(q) + ": ";
    GroupPtr G = Group::psl2(q);
    CharTable t(G);
    const auto& chars = t.characters();
    const auto& cls = G->classes();
    std::uint64_t sq = 0;
    for (const auto& c : chars) sq += std::uint64_t(c.degree) * c.degree;
    check(sq == G->order() && chars.size() == cls.size(),
          tag + std::to_string(chars.size()) + " characters, sum of squared degrees " + std::to_string(sq));

    // Rows: exact where both rows are fully given, numeric otherwise.
    bool rows_exact = true, rows_num = true;
    std::size_t exact_pairs = 0;
    for (std::size_t a = 0; a < chars.size(); ++a)
      for (std::size_t b = a; b < chars.size(); ++b) {
        if (t.fully_specified(a) && t.fully_specified(b)) {
          ++exact_pairs;
          if (t.inner_product(a, b) != Cyclotomic::from_rational(t.conductor(), Rational(a == b ? 1 : 0)))
            rows_exact = false;
        }
        if (std::abs(t.inner_product_numeric(a, b) - std::complex<double>(a == b ? 1 : 0)) > 1e-9) rows_num = false;
      }
    check(rows_exact && rows_num, tag + "row orthogonality (" + std::to_string(exact_pairs) + " pairs exact, all numeric)");

    // Columns: exact away from the two unipotent classes.
    auto unip = [&](std::uint32_t c) {
      return cls[c].family == ClassFamily::Unipotent1 || cls[c].family == ClassFamily::UnipotentDelta;
    };
    bool cols_exact = true, cols_num = true;
    for (std::uint32_t c = 0; c < cls.size(); ++c)
      for (std::uint32_t d = c; d < cls.size(); ++d) {
        const Rational want = c == d ? ull(G->centralizer_order(c)) : Rational(0);
        if (!unip(c) && !unip(d)) {
          Cyclotomic acc = Cyclotomic::zero(t.conductor());
          for (const auto& chi : chars) acc += *chi.values[c] * chi.values[d]->conj();
          if (acc != Cyclotomic::from_rational(t.conductor(), want)) cols_exact = false;
        }
        std::complex<double> acc = 0;
        for (std::size_t i = 0; i < chars.size(); ++i) acc += value_at(t, i, c) * std::conj(value_at(t, i, d));
        if (std::abs(acc - to_double(want)) > 1e-8) cols_num = false;
      }
    check(cols_exact && cols_num, tag + "column orthogonality");
  }

  // Permutation character of M_r for every admissible (q, r).
  for (std::uint32_t q : {5u, 9u, 13u, 17u}) {
    GroupPtr G = Group::psl2(q);
    CharTable t(G);
    for (std::uint32_t r = 1; r <= (q - 1) / 2; r += 2) {
      if (((q - 1) / 2) % r) continue;
      CosetAction act(G, subgroup_M(*G, r));
      const auto got = perm_char_decompose(act, t);
      std::map<std::string, std::uint64_t> want{{"rho'(1)", 1}, {"rhobar(1)", 1}};
      for (std::uint32_t j = 1; j <= (r - 1) / 2; ++j) want["rho(alpha_" + std::to_string((q - 1) / r * j) + ")"] = 2;
      std::map<std::string, std::uint64_t> nonzero;
      for (const auto& [k, v] : got)
        if (v) nonzero[k] = v;
      check(nonzero == want, "fix character of M_" + std::to_string(r) + " in PSL(2," + std::to_string(q) + ")");
    }
  }

  // Character sums over J_q and Z_q.
  std::size_t sums = 0;
  bool sums_ok = true;
  for (std::uint32_t q : {5u, 9u, 13u, 17u, 25u, 29u}) {
    const std::uint32_t N = (q * q - 1) / 2;
    for (std::uint32_t r = 1; r <= (q - 1) / 2; r += 2) {
      if (((q - 1) / 2) % r) continue;
      for (std::uint32_t i = 2; i < q - 1; i += 2) {
        const bool trivial_on_sub = (i * r) % (q - 1) == 0;
        const Rational want = trivial_on_sub ? -Rational(q - 1, 2 * r) : Rational(0);
        ++sums;
        if (split_char_sum(q, r, CharSum::SplitAlpha, i) != Cyclotomic::from_rational(N, want)) {
          sums_ok = false;
          check(false, "alpha sum q=" + std::to_string(q) + " r=" + std::to_string(r) + " i=" + std::to_string(i));
        }
      }
      for (std::uint32_t m = 2; m < q + 1; m += 2) {
        ++sums;
        if (split_char_sum(q, r, CharSum::Norm1, m) != Cyclotomic::from_rational(N, Rational(-1))) {
          sums_ok = false;
          check(false, "norm-one sum q=" + std::to_string(q) + " m=" + std::to_string(m));
        }
      }
      ++sums;
      if (!split_char_sum(q, r, CharSum::Zeta).is_zero()) {
        sums_ok = false;
        check(false, "quadratic sum q=" + std::to_string(q) + " r=" + std::to_string(r));
      }
    }
  }
  check(sums_ok, std::to_string(sums) + " character sums over J_q and Z_q for q = 1 mod 4, q <= 29");
  return res;
}

CriterionResult spectral_crosscheck()
{
  CriterionResult res{7, "numeric spectrum of the U_q weighting", true, {}, 0};
  Check check{res};
  for (std::uint32_t q : {7u, 11u}) {
    const std::string tag = "q=" + std::to_string(q) + ": ";
    GroupPtr G = Group::psl2(q);
    CosetAction act(G, subgroup_U(*G));
    const DerangementGraph dg = build_derangement_graph(act, "family=U");
    const auto w = weights_unipotent_split(*G);
    std::map<std::uint32_t, Rational> wm;
    for (std::uint32_t c = 0; c < w.size(); ++c)
      if (w[c] != 0) wm[c] = w[c];
    WeightedScheme B(dg, wm);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B.materialize(), Eigen::EigenvaluesOnly);
    std::vector<double> numeric(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());

    CharTable tbl(G);
    std::vector<double> predicted;
    for (const auto& e : weighted_eigenvalues(tbl, w)) {
      const double v = e.exact ? e.exact->to_complex().real() : e.numeric.real();
      predicted.insert(predicted.end(), std::size_t(e.degree) * e.degree, v);
    }
    std::sort(predicted.begin(), predicted.end());
    double worst = 0;
    for (std::size_t i = 0; i < std::min(numeric.size(), predicted.size()); ++i)
      worst = std::max(worst, std::abs(numeric[i] - predicted[i]));
    check(numeric.size() == predicted.size() && worst <= 1e-8,
          tag + "max deviation from character eigenvalues " + sci(worst));
    check(numeric.front() >= -1 - 1e-8, tag + "least eigenvalue " + sci(numeric.front()));
  }
  return res;
}

CriterionResult eigenspace_diagnostic()
{
  CriterionResult res{8, "maximum cocliques lie in the tau-eigenspace (q=13, r=3)", true, {}, 0};
  Check check{res};
  GroupPtr G = Group::psl2(13);
  const Subgroup M = subgroup_M(*G, 3);
  CosetAction act(G, M);
  const DerangementGraph dg = build_derangement_graph(act, "family=M,r=3");
  const auto w = weights_borel_family(*G, 3);
  std::map<std::uint32_t, Rational> wm;
  for (std::uint32_t c = 0; c < w.size(); ++c)
    if (w[c] != 0) wm[c] = w[c];
  WeightedScheme B(dg, wm);

  check(eigenspace_membership(B, dg, M.members), "M_3");
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<Elem> pick(0, G->order() - 1);
  auto sorted = [](std::vector<Elem> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  for (int k = 0; k < 5; ++k) {
    const Elem g = pick(rng), h = pick(rng), x = pick(rng);
    std::vector<Elem> left, both;
    for (Elem m : M.members) {
      left.push_back(G->mul(g, m));
      both.push_back(G->mul(G->mul(h, m), x));
    }
    check(eigenspace_membership(B, dg, sorted(left)), "left translate " + G->to_string(g) + " M_3");
    check(eigenspace_membership(B, dg, conjugate_set(*G, M.members, x)), "conjugate by " + G->to_string(x));
    check(eigenspace_membership(B, dg, sorted(both)), "two-sided translate");
  }
  SolveOptions so;
  so.upper_bound = M.order();
  const SolveResult sr = max_coclique(dg, so);
  check(sr.best == M.order() && eigenspace_membership(B, dg, sr.witness),
        "solver coclique of size " + std::to_string(sr.best));
  return res;
}

// Exhaustive over all independent sets; fine for up to about 24 vertices.
std::uint64_t enumerate_independent(const std::vector<std::uint32_t>& nbr, std::uint32_t n)
{
  std::uint64_t best = 0;
  std::function<void(std::uint32_t, std::uint32_t, std::uint64_t)> rec = [&](std::uint32_t v, std::uint32_t blocked,
                                                                             std::uint64_t size) {
    if (v == n) {
      best = std::max(best, size);
      return;
    }
    if (!((blocked >> v) & 1u)) rec(v + 1, blocked | nbr[v], size + 1);
    rec(v + 1, blocked, size);
  };
  rec(0, 0, 0);
  return best;
}

CriterionResult solver_oracle()
{
  CriterionResult res{9, "solver against brute force", true, {}, 0};
  Check check{res};
  std::mt19937_64 rng(7);
  int agree = 0;
  for (int t = 0; t < 50; ++t) {
    const std::uint32_t n = 4 + rng() % 21;
    const double p = 0.1 + 0.8 * double(rng() % 1000) / 1000.0;
    std::bernoulli_distribution edge(p);
    BitGraph g(n);
    std::vector<std::uint32_t> nbr(n, 0);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v)
        if (edge(rng)) {
          g.add_edge(u, v);
          nbr[u] |= 1u << v;
          nbr[v] |= 1u << u;
          adj[u][v] = adj[v][u] = true;
        }
    const std::uint64_t brute = enumerate_independent(nbr, n);
    const SolveResult sr = max_coclique(g);
    const bool ok = sr.best == brute && sr.status == SolveStatus::Optimal && verify_coclique(g, sr.witness) &&
                    reference_coclique_number(adj) == brute;
    if (ok) ++agree;
    else check(false, "random graph " + std::to_string(t) + " (n=" + std::to_string(n) + ")");
  }
  check(agree == 50, std::to_string(agree) + "/50 random graphs agree");

  std::vector<GroupPtr> groups{Group::psl2(3), Group::psl2(4), Group::psl2(5)};
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u, 11u}) groups.push_back(Group::agl(1, q));
  groups.push_back(Group::agl(2, 2));
  for (const auto& G : groups) {
    std::size_t rows = 0, good = 0;
    for (const auto& H : subgroup_classes(G)) {
      ++rows;
      CosetAction act(G, H);
      const DerangementGraph dg = build_derangement_graph(act);
      const std::uint32_t n = dg.graph.size();
      std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
      for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = 0; v < n; ++v) adj[u][v] = dg.graph.has_edge(u, v);
      // Vertex-transitive, so some maximum coclique contains the identity.
      const std::uint64_t oracle = reference_coclique_number(adj, G->identity());
      SolveOptions plain;
      plain.symmetry = false;
      const SolveResult a = max_coclique(dg), b = max_coclique(dg, plain), c = max_coclique(dg.graph);
      if (a.best == oracle && b.best == oracle && c.best == oracle && a.status == SolveStatus::Optimal &&
          verify_coclique(dg.graph, a.witness))
        ++good;
      else
        check(false, G->spec() + " subgroup of order " + std::to_string(H.order()) + ": oracle " +
                         std::to_string(oracle) + ", solver " + std::to_string(a.best) + "/" + std::to_string(b.best) +
                         "/" + std::to_string(c.best));
    }
    check(good == rows, G->spec() + ": " + std::to_string(good) + "/" + std::to_string(rows) + " actions agree");
  }
  return res;
}

CriterionResult torus_experiments()
{
  CriterionResult res{10, "torus experiments (reported, not asserted)", true, {}, 0};
  Check check{res};
  for (std::uint32_t q : {5u, 9u, 13u}) {
    const DensityReport r = conjecture_experiment(q);
    check(r.experiment && r.certified && r.note.rfind("EXPERIMENT", 0) == 0, r.note);
    // The published table lists rho = 2 for this row.
    const auto table = reference_table(q);
    bool listed = false;
    for (const auto& [label, rho] : *table) listed |= label == r.label && rho == r.rho;
    check(listed, "PSL(2," + std::to_string(q) + ") " + r.label + " row agrees with the published table");
  }
  return res;
}

} // namespace

namespace {

using VSet = std::bitset<256>;

// Exact maximum independent set of the subgraph induced on P: components are
// solved separately, vertices of degree <= 1 are taken greedily, maximum
// degree 2 leaves paths and cycles, otherwise branch on a vertex of maximum degree.
std::uint64_t mis(const std::vector<VSet>& nbr, VSet P)
{
  std::uint64_t taken = 0;
  for (;;) {
    if (P.none()) return taken;
    std::size_t vmin = 0, vmax = 0, dmin = SIZE_MAX, dmax = 0;
    for (std::size_t v = 0; v < nbr.size(); ++v) {
      if (!P.test(v)) continue;
      const std::size_t d = (nbr[v] & P).count();
      if (d < dmin) dmin = d, vmin = v;
      if (d > dmax) dmax = d, vmax = v;
    }
    if (dmin <= 1) {
      ++taken;
      P &= ~nbr[vmin];
      P.reset(vmin);
      continue;
    }
    // Component of vmax.
    VSet comp, frontier;
    comp.set(vmax);
    frontier.set(vmax);
    while (frontier.any()) {
      VSet next;
      for (std::size_t v = 0; v < nbr.size(); ++v)
        if (frontier.test(v)) next |= nbr[v] & P;
      frontier = next & ~comp;
      comp |= next;
    }
    if (comp != P) return taken + mis(nbr, comp) + mis(nbr, P & ~comp);
    // Every vertex has degree 2 here, so P is a single cycle.
    if (dmax == 2) return taken + P.count() / 2;
    VSet without = P, with = P & ~nbr[vmax];
    without.reset(vmax);
    with.reset(vmax);
    return taken + std::max(mis(nbr, without), 1 + mis(nbr, with));
  }
}

} // namespace

std::uint64_t reference_coclique_number(const std::vector<std::vector<bool>>& adj, std::optional<std::size_t> forced)
{
  const std::size_t n = adj.size();
  if (n > 256) throw std::invalid_argument("reference oracle handles at most 256 vertices");
  std::vector<VSet> nbr(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && adj[u][v]) nbr[u].set(v);
  VSet all;
  for (std::size_t v = 0; v < n; ++v) all.set(v);
  if (!forced) return mis(nbr, all);
  VSet rest = all & ~nbr[*forced];
  rest.reset(*forced);
  return 1 + mis(nbr, rest);
}

const std::vector<AcceptanceCriterion>& acceptance_criteria()
{
  static const std::vector<AcceptanceCriterion> list{
      {1, "reference spectra, core tier", reference_core},
      {2, "reference spectra, extended tier", reference_extended},
      {3, "U_q density 2 via V_q and the U_q weighting", u_family},
      {4, "M_r density 1 via the M_r weighting", m_family},
      {5, "AGL(n,q) densities p^(kn-i)", agl_family},
      {6, "character table properties", chartab_properties},
      {7, "numeric spectrum of the U_q weighting", spectral_crosscheck},
      {8, "maximum cocliques lie in the tau-eigenspace (q=13, r=3)", eigenspace_diagnostic},
      {9, "solver against brute force", solver_oracle},
      {10, "torus experiments (reported, not asserted)", torus_experiments},
  };
  return list;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& only,
                                            const std::function<void(const CriterionResult&)>& on_done)
{
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = CriterionResult{c.id, c.name, false, {std::string("FAIL exception: ") + e.what()}, 0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (on_done) on_done(r);
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace intspec
