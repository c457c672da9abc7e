#include "intspec/mis.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace intspec {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetExceeded {};

/// Branch and bound for a maximum clique of a compatibility graph on m local
/// vertices, with greedy colouring bounds over bitsets.
class CliqueSearch {
public:
  CliqueSearch(std::uint32_t m, std::uint64_t* nodes, std::uint64_t budget)
      : m_(m), w_((m + 63) / 64), adj_(std::size_t(m) * w_, 0), nodes_(nodes), budget_(budget) {}

  void set(std::uint32_t a, std::uint32_t b)
  {
    adj_[std::size_t(a) * w_ + (b >> 6)] |= 1ull << (b & 63);
    adj_[std::size_t(b) * w_ + (a >> 6)] |= 1ull << (a & 63);
  }

  // Finds a clique larger than `floor` if one exists, stopping at `target`.
  // Returns the best clique found (empty when none beats floor).
  std::vector<std::uint32_t> run(std::size_t floor, std::size_t target)
  {
    best_ = floor;
    target_ = target;
    best_set_.clear();
    cur_.clear();
    std::vector<std::uint64_t> P(w_, 0);
    for (std::uint32_t v = 0; v < m_; ++v) P[v >> 6] |= 1ull << (v & 63);
    levels_.assign(m_ + 2, Level{});
    expand(P, 0);
    return best_set_;
  }

private:
  struct Level {
    std::vector<std::uint32_t> order, color;
    std::vector<std::uint64_t> U, Q, next;
  };

  const std::uint64_t* row(std::uint32_t v) const { return &adj_[std::size_t(v) * w_]; }

  void expand(std::vector<std::uint64_t>& P, std::size_t depth)
  {
    if (++*nodes_ > budget_) throw BudgetExceeded{};
    Level& L = levels_[depth];
    L.order.clear();
    L.color.clear();
    L.U = P;
    L.Q.resize(w_);
    L.next.resize(w_);
    // Vertices whose colour cannot lift the clique above best_ are not branched on.
    const std::size_t kmin = best_ + 1 > cur_.size() + 1 ? best_ + 1 - cur_.size() : 1;
    std::uint32_t k = 0;
    bool any = true;
    while (any) {
      ++k;
      L.Q = L.U;
      any = false;
      for (std::uint32_t wi = 0; wi < w_; ++wi) {
        while (L.Q[wi]) {
          const std::uint32_t v = wi * 64 + static_cast<std::uint32_t>(std::countr_zero(L.Q[wi]));
          L.Q[wi] &= L.Q[wi] - 1;
          L.U[v >> 6] &= ~(1ull << (v & 63));
          const std::uint64_t* r = row(v);
          for (std::uint32_t t = wi; t < w_; ++t) L.Q[t] &= ~r[t];
          if (k >= kmin) {
            L.order.push_back(v);
            L.color.push_back(k);
          }
        }
      }
      for (std::uint32_t wi = 0; wi < w_ && !any; ++wi) any = L.U[wi] != 0;
    }
    for (std::size_t idx = L.order.size(); idx-- > 0;) {
      if (cur_.size() + L.color[idx] <= best_) return;
      const std::uint32_t v = L.order[idx];
      cur_.push_back(v);
      std::vector<std::uint64_t>& np = levels_[depth + 1].next;
      np.resize(w_);
      const std::uint64_t* r = row(v);
      bool empty = true;
      for (std::uint32_t t = 0; t < w_; ++t) {
        np[t] = P[t] & r[t];
        empty = empty && np[t] == 0;
      }
      if (empty) {
        if (cur_.size() > best_) {
          best_ = cur_.size();
          best_set_ = cur_;
        }
      } else {
        std::vector<std::uint64_t> copy = np;
        expand(copy, depth + 1);
      }
      cur_.pop_back();
      if (best_ >= target_) return;
      P[v >> 6] &= ~(1ull << (v & 63));
    }
  }

  std::uint32_t m_, w_;
  std::vector<std::uint64_t> adj_;
  std::uint64_t* nodes_;
  std::uint64_t budget_;
  std::size_t best_ = 0, target_ = 0;
  std::vector<std::uint32_t> cur_, best_set_;
  std::vector<Level> levels_;
};

/// Shared incumbent and bookkeeping for one solve.
struct Solver {
  const BitGraph& g;
  SolveResult res;
  std::uint64_t budget;
  std::uint64_t target;

  Solver(const BitGraph& graph, const SolveOptions& opts) : g(graph), budget(opts.node_budget)
  {
    target = opts.upper_bound ? *opts.upper_bound : g.size();
    if (!opts.seed.empty()) {
      if (!verify_coclique(g, opts.seed)) throw std::invalid_argument("seed is not a coclique");
      res.witness = opts.seed;
      std::sort(res.witness.begin(), res.witness.end());
      res.best = res.witness.size();
    }
  }

  bool done() const { return res.best >= target; }

  // Best coclique that contains all of `fixed` and otherwise uses `cands`.
  void search(const std::vector<std::uint32_t>& fixed, std::vector<std::uint32_t> cands)
  {
    if (fixed.size() > res.best) {
      res.witness = fixed;
      std::sort(res.witness.begin(), res.witness.end());
      res.best = fixed.size();
    }
    if (done()) return;
    if (fixed.size() + cands.size() <= res.best) return;
    // Order by compatibility degree, highest first, ties by index.
    const std::uint32_t m = static_cast<std::uint32_t>(cands.size());
    std::vector<std::uint32_t> deg(m, 0);
    for (std::uint32_t a = 0; a < m; ++a)
      for (std::uint32_t b = a + 1; b < m; ++b)
        if (!g.has_edge(cands[a], cands[b])) ++deg[a], ++deg[b];
    std::vector<std::uint32_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0u);
    std::stable_sort(idx.begin(), idx.end(), [&](auto x, auto y) { return deg[x] > deg[y]; });
    std::vector<std::uint32_t> local(m);
    for (std::uint32_t i = 0; i < m; ++i) local[i] = cands[idx[i]];

    CliqueSearch cs(m, &res.nodes, budget);
    for (std::uint32_t a = 0; a < m; ++a)
      for (std::uint32_t b = a + 1; b < m; ++b)
        if (!g.has_edge(local[a], local[b])) cs.set(a, b);
    const std::size_t floor = res.best > fixed.size() ? res.best - fixed.size() : 0;
    const std::size_t want = target > fixed.size() ? target - fixed.size() : 0;
    const auto found = cs.run(floor, want);
    if (!found.empty() && fixed.size() + found.size() > res.best) {
      std::vector<std::uint32_t> w = fixed;
      for (auto v : found) w.push_back(local[v]);
      std::sort(w.begin(), w.end());
      res.best = w.size();
      res.witness = std::move(w);
    }
  }
};

SolveResult finish(Solver& s, Clock::time_point t0, bool exhausted, const std::optional<std::uint64_t>& bound)
{
  SolveResult r = std::move(s.res);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (bound && r.best > *bound) throw std::logic_error("coclique exceeds the supplied upper bound");
  if (bound && r.best == *bound) {
    r.status = SolveStatus::Optimal;
    r.certificate = "bound-matched";
  } else if (exhausted || r.best == s.g.size()) {
    r.status = SolveStatus::Optimal;
    r.certificate = "exhausted";
  } else {
    r.status = SolveStatus::LowerBoundOnly;
  }
  return r;
}

} // namespace

bool verify_coclique(const BitGraph& g, const std::vector<std::uint32_t>& S)
{
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (S[i] >= g.size()) return false;
    for (std::size_t j = i + 1; j < S.size(); ++j)
      if (S[i] == S[j] || g.has_edge(S[i], S[j])) return false;
  }
  return true;
}

bool verify_clique(const BitGraph& g, const std::vector<std::uint32_t>& S)
{
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (S[i] >= g.size()) return false;
    for (std::size_t j = i + 1; j < S.size(); ++j)
      if (!g.has_edge(S[i], S[j])) return false;
  }
  return true;
}

SolveResult max_coclique(const BitGraph& g, const SolveOptions& opts)
{
  const auto t0 = Clock::now();
  Solver s(g, opts);
  // The explicit bound only counts as a certificate when it is attained.
  bool exhausted = false;
  try {
    std::vector<std::uint32_t> all(g.size());
    std::iota(all.begin(), all.end(), 0u);
    s.search({}, all);
    exhausted = true;
  } catch (const BudgetExceeded&) {
  }
  return finish(s, t0, exhausted, opts.upper_bound);
}

SolveResult max_coclique(const DerangementGraph& dg, const SolveOptions& opts)
{
  if (!opts.symmetry) return max_coclique(dg.graph, opts);
  const auto t0 = Clock::now();
  const Group& G = *dg.group;
  const BitGraph& g = dg.graph;
  Solver s(g, opts);
  if (s.res.best == 0) {
    s.res.best = 1;
    s.res.witness = {G.identity()};
  }
  bool exhausted = false;
  try {
    // Vertex-transitivity: some maximum coclique contains the identity.
    const Elem e = G.identity();
    std::vector<char> deranged(G.order(), 0);
    for (Elem x : dg.connection) deranged[x] = 1;
    // Level 1: orbits of {x -> t x t^-1, x -> x^-1} on the non-derangements.
    const auto& cls = G.classes();
    std::vector<std::vector<std::uint32_t>> orbits;
    std::vector<std::uint32_t> orbit_of(G.order(), UINT32_MAX);
    for (std::uint32_t c = 0; c < cls.size(); ++c) {
      const Elem rep = cls[c].rep;
      if (rep == e || deranged[rep] || cls[c].inverse_class < c) continue;
      std::vector<std::uint32_t> orb = G.class_members(c);
      if (cls[c].inverse_class != c) {
        const auto& other = G.class_members(cls[c].inverse_class);
        orb.insert(orb.end(), other.begin(), other.end());
      }
      orbits.push_back(std::move(orb));
    }
    std::stable_sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (std::uint32_t i = 0; i < orbits.size(); ++i)
      for (auto x : orbits[i]) orbit_of[x] = i;

    for (std::uint32_t j = 0; j < orbits.size() && !s.done(); ++j) {
      const Elem o = G.classes()[G.class_of(orbits[j].front())].rep;
      // Candidates compatible with o in orbits >= j.
      std::vector<std::uint32_t> cands;
      for (std::uint32_t i = j; i < orbits.size(); ++i)
        for (auto x : orbits[i])
          if (x != o && !g.has_edge(o, x)) cands.push_back(x);
      std::sort(cands.begin(), cands.end());
      if (s.res.best < 2) {
        s.res.best = 2;
        s.res.witness = {std::min(e, o), std::max(e, o)};
      }
      if (2 + cands.size() <= s.res.best) continue;
      // Level 2: orbits of the centralizer of o (and inversion if o is an involution).
      const auto& C = G.centralizer(G.class_of(o));
      const bool invol = G.inv(o) == o;
      std::vector<char> in_cands(G.order(), 0);
      for (auto x : cands) in_cands[x] = 1;
      std::vector<std::uint32_t> orb2(G.order(), UINT32_MAX);
      std::vector<std::vector<std::uint32_t>> orbits2;
      for (auto x : cands) {
        if (orb2[x] != UINT32_MAX) continue;
        std::vector<std::uint32_t> orb;
        auto add = [&](Elem y) {
          if (in_cands[y] && orb2[y] == UINT32_MAX) {
            orb2[y] = static_cast<std::uint32_t>(orbits2.size());
            orb.push_back(y);
          }
        };
        for (Elem t : C) {
          add(G.conj(x, t));
          if (invol) add(G.inv(G.conj(x, t)));
        }
        orbits2.push_back(std::move(orb));
      }
      std::vector<std::uint32_t> perm(orbits2.size());
      std::iota(perm.begin(), perm.end(), 0u);
      std::stable_sort(perm.begin(), perm.end(), [&](auto a, auto b) { return orbits2[a].size() > orbits2[b].size(); });
      std::vector<std::uint32_t> rank(orbits2.size());
      for (std::uint32_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;
      for (std::uint32_t kk = 0; kk < perm.size() && !s.done(); ++kk) {
        const auto& ob = orbits2[perm[kk]];
        const Elem p = *std::min_element(ob.begin(), ob.end());
        std::vector<std::uint32_t> c2;
        for (auto x : cands)
          if (x != p && rank[orb2[x]] >= kk && !g.has_edge(p, x)) c2.push_back(x);
        if (3 + c2.size() <= s.res.best) continue;
        s.search({e, o, p}, c2);
      }
    }
    exhausted = true;
  } catch (const BudgetExceeded&) {
  }
  return finish(s, t0, exhausted, opts.upper_bound);
}

} // namespace intspec
