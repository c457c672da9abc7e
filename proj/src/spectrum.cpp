#include "intspec/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "intspec/action.hpp"
#include "intspec/chartab.hpp"
#include "intspec/class_algebra.hpp"
#include "intspec/dgraph.hpp"

namespace intspec {

const char* to_string(Strategy s)
{
  switch (s) {
  case Strategy::Auto: return "auto";
  case Strategy::ExactOnly: return "exact-only";
  case Strategy::BoundOnly: return "bound-only";
  }
  return "?";
}

const char* to_string(BoundKind b)
{
  switch (b) {
  case BoundKind::None: return "none";
  case BoundKind::Ratio: return "ratio";
  case BoundKind::CliqueCoclique: return "clique-coclique";
  case BoundKind::ExactSearch: return "exact-search";
  }
  return "?";
}

Strategy parse_strategy(const std::string& s)
{
  if (s == "auto") return Strategy::Auto;
  if (s == "exact-only") return Strategy::ExactOnly;
  if (s == "bound-only") return Strategy::BoundOnly;
  throw std::invalid_argument("strategy must be auto, exact-only or bound-only");
}

BoundKind parse_bound_kind(const std::string& s)
{
  for (auto b : {BoundKind::None, BoundKind::Ratio, BoundKind::CliqueCoclique, BoundKind::ExactSearch})
    if (s == to_string(b)) return b;
  throw std::invalid_argument("unknown bound kind '" + s + "'");
}

const std::vector<Subgroup>& subgroup_classes(const GroupPtr& G)
{
  static std::mutex m;
  static std::map<const Group*, std::pair<GroupPtr, std::shared_ptr<std::vector<Subgroup>>>> cache;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(G.get());
    if (it != cache.end()) return *it->second.second;
  }
  auto subs = std::make_shared<std::vector<Subgroup>>(enumerate_subgroups(*G));
  std::lock_guard<std::mutex> lock(m);
  auto [it, inserted] = cache.emplace(G.get(), std::make_pair(G, subs));
  return *it->second.second;
}

namespace {

BigInt floor_of(const Rational& r) { return floor_rational(r); }

std::optional<RatioCertificate> certify_weighting(const Group& G, const std::string& name, const std::vector<Rational>& w,
                                                  const std::vector<char>& deranged)
{
  bool any = false;
  for (std::size_t c = 0; c < w.size(); ++c) {
    if (w[c] == 0) continue;
    if (!deranged[c] || w[c] < 0) return std::nullopt;
    any = true;
  }
  if (!any) return std::nullopt;
  const SpectralCertificate cert = certify_spectrum(G, w);
  if (cert.d <= 0 || cert.tau.lo >= 0) return std::nullopt;
  RatioCertificate rc;
  rc.weighting = name;
  rc.d = cert.d;
  rc.tau = cert.tau.lo;
  rc.tau_exact = cert.tau.exact;
  rc.bound = ratio_bound(rc.d, rc.tau, G.order());
  return rc;
}

// Largest subgroup all of whose non-identity elements are derangements.
Subgroup best_clique_subgroup(const GroupPtr& G, const std::vector<char>& deranged_elem)
{
  Subgroup best = closure(*G, {});
  auto consider = [&](const Subgroup& K) {
    if (K.order() <= best.order()) return;
    for (Elem x : K.members)
      if (x != G->identity() && !deranged_elem[x]) return;
    best = K;
  };
  if (G->order() <= 3600) {
    for (const auto& K : subgroup_classes(G)) consider(K);
  } else {
    for (const auto& c : G->classes()) consider(closure(*G, {c.rep}));
  }
  if (G->kind() == GroupKind::AGL) consider(subgroup_linear(*G));
  return best;
}

// Largest subgroup with no derangements (an intersecting subgroup).
Subgroup best_intersecting_subgroup(const GroupPtr& G, const Subgroup& H, const std::vector<char>& deranged_elem)
{
  Subgroup best = H;
  auto consider = [&](const Subgroup& K) {
    if (K.order() <= best.order()) return;
    for (Elem x : K.members)
      if (deranged_elem[x]) return;
    best = K;
  };
  consider(normalizer(*G, H));
  if (G->order() <= 3600)
    for (const auto& K : subgroup_classes(G)) consider(K);
  return best;
}

} // namespace

std::vector<RatioCertificate> ratio_bounds(const Group& G, const std::vector<std::uint32_t>& dclasses)
{
  std::vector<char> deranged(G.classes().size(), 0);
  for (auto c : dclasses) deranged[c] = 1;
  std::vector<RatioCertificate> out;
  if (G.kind() == GroupKind::PSL2 && G.q() % 2 == 1) {
    const std::uint32_t q = G.q();
    if (q % 4 == 3) {
      if (auto rc = certify_weighting(G, "eq6.1", weights_unipotent_split(G), deranged)) out.push_back(*rc);
    } else {
      for (std::uint32_t r = 1; r <= (q - 1) / 2; r += 2)
        if (((q - 1) / 2) % r == 0)
          if (auto rc = certify_weighting(G, "eq7.3:r=" + std::to_string(r), weights_borel_family(G, r), deranged))
            out.push_back(*rc);
    }
  }
  std::vector<Rational> uni(G.classes().size(), Rational(0));
  for (auto c : dclasses) uni[c] = 1;
  if (auto rc = certify_weighting(G, "uniform", uni, deranged)) out.push_back(*rc);
  return out;
}

DensityReport intersection_density(GroupPtr G, const Subgroup& H, const std::string& subgroup_spec,
                                   const DensityOptions& opts)
{
  DensityReport rep;
  rep.group_spec = G->spec();
  rep.subgroup_spec = subgroup_spec;
  rep.label = isomorphism_label(*G, H);
  rep.group_order = G->order();
  rep.subgroup_order = H.order();
  rep.index = G->order() / H.order();

  CosetAction act(G, H);
  const DerangementGraph dg = build_derangement_graph(act, subgroup_spec);
  std::vector<char> deranged_elem(G->order(), 0);
  for (Elem x : dg.connection) deranged_elem[x] = 1;

  // Lower bound: the largest intersecting subgroup we know of.
  const Subgroup W = best_intersecting_subgroup(G, H, deranged_elem);
  rep.witness = W.members;
  rep.alpha = W.order();
  rep.witness_source = W.members == H.members ? "subgroup H" : "intersecting subgroup";

  // Trivial bound: alpha <= |G|.
  Rational best_bound = Rational(static_cast<unsigned long long>(G->order()));
  BoundKind kind = BoundKind::None;
  if (opts.strategy != Strategy::ExactOnly) {
    const Subgroup K = best_clique_subgroup(G, deranged_elem);
    rep.clique_size = K.order();
    rep.clique_bound = clique_coclique_bound(G->order(), K.order());
    if (*rep.clique_bound <= best_bound) best_bound = *rep.clique_bound, kind = BoundKind::CliqueCoclique;
    for (const auto& rc : ratio_bounds(*G, dg.derangement_classes)) {
      if (!rep.ratio || rc.bound < rep.ratio->bound) rep.ratio = rc;
    }
    // Ties go to the ratio bound, which also carries the spectral certificate.
    if (rep.ratio && rep.ratio->bound <= best_bound) best_bound = rep.ratio->bound, kind = BoundKind::Ratio;
  }
  BigInt cap = floor_of(best_bound);

  if (opts.strategy == Strategy::BoundOnly || BigInt(rep.alpha) == cap) {
    rep.bound_kind = kind;
    rep.bound_value = best_bound;
    rep.certified = BigInt(rep.alpha) == cap && kind != BoundKind::None;
  } else {
    SolveOptions so;
    so.seed = rep.witness;
    so.node_budget = opts.node_budget;
    so.symmetry = opts.symmetry;
    if (opts.strategy == Strategy::Auto && kind != BoundKind::None) so.upper_bound = cap.convert_to<std::uint64_t>();
    const SolveResult sr = max_coclique(dg, so);
    rep.nodes = sr.nodes;
    if (sr.best > rep.alpha) {
      rep.alpha = sr.best;
      rep.witness = sr.witness;
      rep.witness_source = "search";
    }
    if (sr.status == SolveStatus::Optimal) {
      rep.solver_status = sr.certificate;
      rep.certified = true;
      if (sr.certificate == "bound-matched") {
        rep.bound_kind = kind;
        rep.bound_value = best_bound;
      } else {
        rep.bound_kind = BoundKind::ExactSearch;
        rep.bound_value = Rational(static_cast<unsigned long long>(rep.alpha));
      }
    } else {
      rep.solver_status = "budget";
      rep.bound_kind = kind;
      rep.bound_value = best_bound;
      rep.certified = false;
    }
  }
  if (!verify_coclique(dg.graph, rep.witness)) throw std::logic_error("witness is not a coclique");
  const Rational hsz = static_cast<unsigned long long>(H.order());
  rep.rho = Rational(static_cast<unsigned long long>(rep.alpha)) / hsz;
  rep.rho_upper = Rational(floor_of(rep.bound_value)) / hsz;
  if (rep.rho < 1) throw std::logic_error("density below 1");
  return rep;
}

SpectrumReport intersection_spectrum(GroupPtr G, const DensityOptions& opts, unsigned threads, const RowCache* cache)
{
  if (G->order() > 3600) throw std::invalid_argument("spectrum needs |G| <= 3600");
  SpectrumReport sp;
  sp.group_spec = G->spec();
  sp.group_order = G->order();
  const auto& subs = subgroup_classes(G);
  sp.rows.resize(subs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex fail_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= subs.size()) return;
      try {
        const std::string spec = "index=" + std::to_string(i);
        if (cache)
          if (auto hit = cache->lookup(sp.group_spec, spec, opts)) {
            sp.rows[i] = std::move(*hit);
            continue;
          }
        sp.rows[i] = intersection_density(G, subs[i], spec, opts);
        if (cache) cache->remember(sp.group_spec, spec, opts, sp.rows[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(fail_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(subs.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::set<Rational> sigma;
  for (const auto& r : sp.rows)
    if (r.certified) sigma.insert(r.rho);
  sp.sigma.assign(sigma.begin(), sigma.end());
  return sp;
}

DensityReport agl_density_certificate(std::uint32_t n, std::uint32_t q, std::uint32_t i)
{
  GroupPtr G = Group::agl(n, q);
  const Subgroup H = subgroup_E(*G, i);
  CosetAction act(G, H);
  const DerangementGraph dg = build_derangement_graph(act, "family=Ei,i=" + std::to_string(i));
  const Subgroup clique = subgroup_linear(*G);
  const Subgroup coclique = subgroup_translations(*G);
  if (!verify_clique(dg.graph, clique.members)) throw std::logic_error("GL(n, q) is not a clique");
  if (!verify_coclique(dg.graph, coclique.members)) throw std::logic_error("translations are not a coclique");

  DensityReport rep;
  rep.group_spec = G->spec();
  rep.subgroup_spec = dg.subgroup_spec;
  rep.label = isomorphism_label(*G, H);
  rep.group_order = G->order();
  rep.subgroup_order = H.order();
  rep.index = G->order() / H.order();
  rep.witness = coclique.members;
  rep.alpha = coclique.order();
  rep.witness_source = "translation subgroup";
  rep.clique_size = clique.order();
  rep.clique_bound = clique_coclique_bound(G->order(), clique.order());
  rep.bound_kind = BoundKind::CliqueCoclique;
  rep.bound_value = *rep.clique_bound;
  rep.certified = Rational(static_cast<unsigned long long>(rep.alpha)) == rep.bound_value;
  rep.rho = Rational(static_cast<unsigned long long>(rep.alpha), static_cast<unsigned long long>(H.order()));
  rep.rho_upper = rep.bound_value / static_cast<unsigned long long>(H.order());
  return rep;
}

DensityReport conjecture_experiment(std::uint32_t q, const DensityOptions& opts)
{
  if (q % 4 != 1) throw std::invalid_argument("the torus experiment needs q = 1 mod 4");
  GroupPtr G = Group::psl2(q);
  DensityReport rep = intersection_density(G, subgroup_torus(*G), "family=torus", opts);
  rep.experiment = true;
  rep.note = std::string("EXPERIMENT: rho(PSL(2,") + std::to_string(q) + "), torus) = " + to_fraction_string(rep.rho) +
             (rep.rho == 2 ? ", equal to 2" : ", not equal to 2");
  return rep;
}

EigenvalueReport weighted_spectrum(GroupPtr G, const std::string& weighting, const Subgroup* H,
                                   const std::string& subgroup_spec)
{
  EigenvalueReport rep;
  rep.group_spec = G->spec();
  rep.weighting = weighting;
  rep.subgroup_spec = subgroup_spec;
  std::vector<Rational> w;
  if (weighting == "eq6.1") {
    w = weights_unipotent_split(*G);
  } else if (weighting.rfind("eq7.3:r=", 0) == 0) {
    const std::string rs = weighting.substr(8);
    if (rs.empty() || rs.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("weighting eq7.3 needs r=<odd integer>, got '" + weighting + "'");
    w = weights_borel_family(*G, static_cast<std::uint32_t>(std::stoul(rs)));
  } else if (weighting == "uniform") {
    if (!H) throw std::invalid_argument("uniform weighting needs a subgroup");
    w = weights_uniform(CosetAction(G, *H));
  } else {
    throw std::invalid_argument("weighting must be eq6.1, eq7.3:r=<r> or uniform, got '" + weighting + "'");
  }
  const SpectralCertificate cert = certify_spectrum(*G, w);
  rep.d = cert.d;
  rep.tau = cert.tau.lo;
  rep.tau_exact = cert.tau.exact;
  if (G->kind() == GroupKind::PSL2 && G->q() % 2 == 1) {
    CharTable tbl(G);
    for (const auto& e : weighted_eigenvalues(tbl, w, true)) {
      EigenvalueRow row;
      row.character = e.label;
      row.degree = e.degree;
      row.value = e.numeric.real();
      row.approx = !e.exact;
      if (e.exact) row.exact = e.exact->is_rational() ? to_fraction_string(e.exact->to_rational()) : e.exact->to_string();
      rep.rows.push_back(std::move(row));
    }
  } else {
    for (std::size_t k = 0; k < cert.eigenvalues.size(); ++k) {
      EigenvalueRow row;
      row.character = "lambda_" + std::to_string(k);
      row.value = cert.eigenvalues[k];
      row.approx = true;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

} // namespace intspec
