#include "intspec/subgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace intspec {

namespace {

std::uint32_t gcd32(std::uint32_t a, std::uint32_t b)
{
  while (b != 0) {
    const std::uint32_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint32_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(static_cast<std::uint32_t>(p));
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

// Per-class element counts: a conjugacy invariant of subgroups.
std::vector<std::uint32_t> class_profile(const Group& G, const std::vector<Elem>& members)
{
  std::vector<std::uint32_t> prof(G.classes().size(), 0);
  for (Elem m : members) ++prof[G.class_of(m)];
  return prof;
}

Subgroup closure_with_bitmap(const Group& G, const std::vector<Elem>& gens, std::vector<char>& in,
                             std::string family)
{
  Subgroup S;
  S.family = std::move(family);
  S.generators = gens;
  S.members.push_back(G.identity());
  in[G.identity()] = 1;
  for (std::size_t head = 0; head < S.members.size(); ++head)
    for (Elem s : gens) {
      const Elem z = G.mul(S.members[head], s);
      if (!in[z]) {
        in[z] = 1;
        S.members.push_back(z);
      }
    }
  for (Elem m : S.members) in[m] = 0;
  std::sort(S.members.begin(), S.members.end());
  return S;
}

} // namespace

bool Subgroup::contains(Elem g) const { return std::binary_search(members.begin(), members.end(), g); }

Subgroup closure(const Group& G, const std::vector<Elem>& gens, std::string family)
{
  std::vector<char> in(G.order(), 0);
  return closure_with_bitmap(G, gens, in, std::move(family));
}

bool is_subgroup(const Group& G, const std::vector<Elem>& members)
{
  if (members.empty()) return false;
  std::vector<char> in(G.order(), 0);
  for (Elem m : members) {
    if (m >= G.order()) return false;
    in[m] = 1;
  }
  if (!in[G.identity()]) return false;
  for (Elem a : members) {
    if (!in[G.inv(a)]) return false;
    for (Elem b : members)
      if (!in[G.mul(a, b)]) return false;
  }
  return true;
}

std::vector<Elem> conjugate_set(const Group& G, const std::vector<Elem>& members, Elem x)
{
  std::vector<Elem> out;
  out.reserve(members.size());
  for (Elem m : members) out.push_back(G.conj(m, x));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup normalizer(const Group& G, const Subgroup& H)
{
  std::vector<char> in(G.order(), 0);
  for (Elem m : H.members) in[m] = 1;
  std::vector<Elem> gens = H.generators;
  if (gens.empty()) gens = H.members;
  std::vector<Elem> norm;
  for (Elem x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (Elem s : gens)
      if (!in[G.conj(s, x)]) {
        ok = false;
        break;
      }
    if (ok) norm.push_back(x);
  }
  Subgroup N;
  N.members = norm;
  N.family = "normalizer";
  // A small generating set, greedily.
  std::vector<char> got(G.order(), 0);
  std::vector<Elem> reached{G.identity()};
  got[G.identity()] = 1;
  for (Elem x : norm) {
    if (got[x]) continue;
    N.generators.push_back(x);
    for (std::size_t head = 0; head < reached.size(); ++head)
      for (Elem s : N.generators) {
        const Elem z = G.mul(reached[head], s);
        if (!got[z]) {
          got[z] = 1;
          reached.push_back(z);
        }
      }
  }
  return N;
}

std::optional<Elem> conjugating_element(const Group& G, const Subgroup& A, const Subgroup& B)
{
  if (A.order() != B.order()) return std::nullopt;
  std::vector<char> in(G.order(), 0);
  for (Elem m : B.members) in[m] = 1;
  std::vector<Elem> gens = A.generators;
  if (gens.empty()) gens = A.members;
  for (Elem x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (Elem s : gens)
      if (!in[G.conj(s, x)]) {
        ok = false;
        break;
      }
    if (ok) return x;
  }
  return std::nullopt;
}

Subgroup derived_subgroup(const Group& G, const Subgroup& H)
{
  // Normal closure in H of the commutators of generators of H.
  const std::vector<Elem>& gens = H.generators.empty() ? H.members : H.generators;
  std::vector<Elem> comms;
  for (Elem a : gens)
    for (Elem b : gens) comms.push_back(G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b)));
  std::vector<char> in(G.order(), 0);
  Subgroup D;
  D.family = "derived";
  D.members.push_back(G.identity());
  in[G.identity()] = 1;
  auto push = [&](Elem z) {
    if (!in[z]) {
      in[z] = 1;
      D.members.push_back(z);
    }
  };
  for (std::size_t head = 0; head < D.members.size(); ++head) {
    const Elem x = D.members[head];
    for (Elem c : comms) push(G.mul(x, c));
    for (Elem s : gens) push(G.conj(x, s));
  }
  std::sort(D.members.begin(), D.members.end());
  D.generators = D.members;
  return D;
}

static void require_odd_psl(const Group& G)
{
  if (G.kind() != GroupKind::PSL2 || G.q() % 2 == 0) throw GroupError("this subgroup family needs PSL(2, q), q odd");
}

Subgroup subgroup_U(const Group& G)
{
  require_odd_psl(G);
  if (G.q() % 4 != 3) throw GroupError("family U needs q = 3 (mod 4)");
  return closure(G, {G.nonsplit_element(1)}, "U");
}

Subgroup subgroup_V(const Group& G)
{
  Subgroup V = normalizer(G, subgroup_U(G));
  V.family = "V";
  return V;
}

Subgroup subgroup_unipotent(const Group& G)
{
  require_odd_psl(G);
  const Field& F = *G.field();
  std::vector<Elem> gens;
  // The additive group of F_q is generated by the basis x^0 .. x^{k-1}.
  for (std::uint32_t t = 0; t < F.k(); ++t) {
    std::uint32_t code = 1;
    for (std::uint32_t s = 0; s < t; ++s) code *= F.p();
    gens.push_back(G.matrix(1, code, 0, 1));
  }
  return closure(G, gens, "unipotent");
}

Subgroup subgroup_torus(const Group& G)
{
  require_odd_psl(G);
  const Field& F = *G.field();
  const Field::Code w = F.primitive();
  return closure(G, {G.matrix(w, 0, 0, F.inv(w))}, "torus");
}

Subgroup subgroup_M(const Group& G, std::uint32_t r)
{
  require_odd_psl(G);
  const std::uint32_t q = G.q();
  if (q % 4 != 1) throw GroupError("family M needs q = 1 (mod 4)");
  if (r == 0 || r % 2 == 0 || ((q - 1) / 2) % r != 0)
    throw GroupError("family M needs r odd dividing (q-1)/2, got r=" + std::to_string(r));
  const Field& F = *G.field();
  const Field::Code a = F.pow(F.primitive(), r);
  Subgroup U = subgroup_unipotent(G);
  std::vector<Elem> gens = U.generators;
  gens.push_back(G.matrix(a, 0, 0, F.inv(a)));
  return closure(G, gens, r == 1 ? "B" : "M_" + std::to_string(r));
}

Subgroup subgroup_borel(const Group& G)
{
  require_odd_psl(G);
  const Field& F = *G.field();
  const Field::Code a = F.primitive();
  Subgroup U = subgroup_unipotent(G);
  std::vector<Elem> gens = U.generators;
  gens.push_back(G.matrix(a, 0, 0, F.inv(a)));
  return closure(G, gens, "B");
}

static void require_agl(const Group& G)
{
  if (G.kind() != GroupKind::AGL) throw GroupError("this subgroup family needs AGL(n, q)");
}

Subgroup subgroup_E(const Group& G, std::uint32_t i)
{
  require_agl(G);
  const Field& F = *G.field();
  const std::uint32_t n = G.n(), k = F.k(), p = F.p();
  if (i < 1 || i > k * n)
    throw GroupError("family Ei needs 1 <= i <= kn = " + std::to_string(k * n) + ", got i=" + std::to_string(i));
  std::vector<Elem> gens;
  for (std::uint32_t t = 0; t < i; ++t) {
    std::vector<std::uint32_t> w(n * n + n, 0);
    for (std::uint32_t d = 0; d < n; ++d) w[d * n + d] = 1;
    std::uint32_t code = 1;
    for (std::uint32_t s = 0; s < t % k; ++s) code *= p;
    w[n * n + t / k] = code;
    gens.push_back(G.index_of(w));
  }
  return closure(G, gens, "E_" + std::to_string(i));
}

Subgroup subgroup_linear(const Group& G)
{
  require_agl(G);
  const std::uint32_t n = G.n();
  Subgroup S;
  S.family = "GL";
  for (Elem g = 0; g < G.order(); ++g) {
    const auto w = G.word(g);
    if (std::all_of(w.begin() + n * n, w.end(), [](std::uint32_t x) { return x == 0; })) S.members.push_back(g);
  }
  S.generators = S.members;
  return S;
}

Subgroup subgroup_translations(const Group& G)
{
  Subgroup S = subgroup_E(G, G.field()->k() * G.n());
  S.family = "translations";
  return S;
}

std::vector<Subgroup> enumerate_subgroups(const Group& G)
{
  if (G.order() > 3600) throw GroupError("subgroup enumeration is capped at |G| <= 3600");
  const std::uint32_t N = G.order();
  std::vector<Subgroup> reps;
  std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, std::vector<std::size_t>> by_profile;
  std::vector<char> scratch(N, 0);

  auto add_if_new = [&](Subgroup T) {
    auto key = std::make_pair(T.order(), class_profile(G, T.members));
    auto& bucket = by_profile[key];
    for (std::size_t idx : bucket)
      if (conjugating_element(G, T, reps[idx])) return;
    bucket.push_back(reps.size());
    reps.push_back(std::move(T));
  };

  add_if_new(closure(G, {}, "generic"));
  std::vector<char> marked(N, 0);
  for (std::size_t cur = 0; cur < reps.size(); ++cur) {
    const Subgroup S = reps[cur];
    if (S.order() == N) continue;
    const Subgroup NS = normalizer(G, S);
    std::fill(marked.begin(), marked.end(), 0);
    for (Elem m : S.members) marked[m] = 1;
    for (Elem g = 0; g < N; ++g) {
      if (marked[g]) continue;
      std::vector<Elem> gens = S.generators;
      gens.push_back(g);
      add_if_new(closure_with_bitmap(G, gens, scratch, "generic"));
      // Elements giving the same extension up to conjugacy by N_G(S).
      for (Elem n : NS.members)
        for (Elem s : S.members) {
          const Elem gs = G.mul(g, s);
          const std::uint32_t o = G.element_order(gs);
          Elem pw = gs;
          for (std::uint32_t k = 1; k < o; ++k, pw = G.mul(pw, gs))
            if (gcd32(k, o) == 1) marked[G.conj(pw, n)] = 1;
        }
    }
  }

  // Canonical representative: smallest member list among conjugates.
  for (auto& S : reps) {
    const Subgroup NS = normalizer(G, S);
    std::vector<char> seen(N, 0);
    std::vector<Elem> best = S.members;
    Elem best_x = G.identity();
    for (Elem x = 0; x < N; ++x) {
      if (seen[x]) continue;
      for (Elem n : NS.members) seen[G.mul(x, n)] = 1;
      auto c = conjugate_set(G, S.members, x);
      if (c < best) {
        best = std::move(c);
        best_x = x;
      }
    }
    std::vector<Elem> gens;
    for (Elem s : S.generators) gens.push_back(G.conj(s, best_x));
    S.members = std::move(best);
    S.generators = std::move(gens);
  }
  std::sort(reps.begin(), reps.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return reps;
}

std::string isomorphism_label(const Group& G, const Subgroup& H)
{
  const std::size_t n = H.order();
  if (n == 1) return "1";
  std::map<std::uint32_t, std::size_t> census; // element order -> count
  for (Elem m : H.members) ++census[G.element_order(m)];

  bool abelian = true;
  for (Elem a : H.generators.empty() ? H.members : H.generators) {
    for (Elem b : H.generators.empty() ? H.members : H.generators)
      if (G.mul(a, b) != G.mul(b, a)) {
        abelian = false;
        break;
      }
    if (!abelian) break;
  }

  auto count_dividing = [&](std::uint64_t d) {
    std::size_t c = 0;
    for (auto [o, k] : census)
      if (d % o == 0) c += k;
    return c;
  };

  if (abelian) {
    // Invariant factors from the counts of elements killed by p^j.
    std::vector<std::uint64_t> factors; // elementary divisors grouped later
    std::map<std::uint32_t, std::vector<std::uint64_t>> per_prime;
    for (std::uint32_t p : prime_factors(n)) {
      // rank sequence r_j = log_p(#{x : x^{p^j} = 1} / #{x : x^{p^{j-1}} = 1})
      std::vector<std::uint32_t> ranks;
      std::uint64_t pj = 1;
      std::size_t prev = 1;
      while (true) {
        pj *= p;
        const std::size_t c = count_dividing(pj);
        if (c == prev) break;
        std::size_t ratio = c / prev;
        std::uint32_t r = 0;
        while (ratio > 1) {
          ratio /= p;
          ++r;
        }
        ranks.push_back(r);
        prev = c;
      }
      // Number of cyclic factors of order >= p^j is ranks[j-1].
      std::vector<std::uint64_t> cyc;
      for (std::size_t j = 0; j < ranks.size(); ++j) {
        const std::uint32_t next = j + 1 < ranks.size() ? ranks[j + 1] : 0;
        std::uint64_t pe = 1;
        for (std::size_t t = 0; t <= j; ++t) pe *= p;
        for (std::uint32_t t = 0; t < ranks[j] - next; ++t) cyc.push_back(pe);
      }
      std::sort(cyc.rbegin(), cyc.rend());
      per_prime[p] = cyc;
    }
    std::size_t len = 0;
    for (auto& [p, c] : per_prime) len = std::max(len, c.size());
    std::vector<std::uint64_t> inv(len, 1);
    for (auto& [p, c] : per_prime)
      for (std::size_t i = 0; i < c.size(); ++i) inv[i] *= c[i];
    std::sort(inv.begin(), inv.end());
    std::string out;
    for (std::size_t i = 0; i < inv.size(); ++i) out += (i ? " x C" : "C") + std::to_string(inv[i]);
    return out;
  }

  // Perfect groups of the orders that occur in PSL(2, q), q <= 19.
  if (derived_subgroup(G, H).order() == n) {
    static const std::map<std::size_t, std::string> perfect = {
        {60, "A5"},         {168, "PSL(3,2)"},   {360, "A6"},          {504, "PSL(2,8)"},
        {660, "PSL(2,11)"}, {1092, "PSL(2,13)"}, {2448, "PSL(2,17)"}, {3420, "PSL(2,19)"}};
    if (auto it = perfect.find(n); it != perfect.end()) return it->second;
    return "Perfect(" + std::to_string(n) + ")";
  }

  // Dihedral: a cyclic subgroup of index 2 and involutions outside it.
  if (n % 2 == 0) {
    const std::size_t m = n / 2;
    for (Elem c : H.members) {
      if (G.element_order(c) != m) continue;
      std::vector<char> in_c(G.order(), 0);
      Elem x = G.identity();
      for (std::size_t t = 0; t < m; ++t, x = G.mul(x, c)) in_c[x] = 1;
      bool dihedral = true;
      for (Elem h : H.members)
        if (!in_c[h] && G.element_order(h) != 2) {
          dihedral = false;
          break;
        }
      if (dihedral) return m == 3 ? "S3" : "D" + std::to_string(m);
      break; // every cyclic subgroup of order m in a dihedral group is the same
    }
  }

  if (n == 12 && census[3] == 8) return "A4";
  if (n == 24 && census[2] == 9 && census[3] == 8 && census[4] == 6) return "S4";

  // Normal Sylow p-subgroup P with cyclic complement: "P : Cm".
  auto primes = prime_factors(n);
  std::sort(primes.rbegin(), primes.rend());
  for (std::uint32_t p : primes) {
    std::uint64_t pk = 1;
    while (n % (pk * p) == 0) pk *= p;
    const std::uint64_t m = n / pk;
    if (m == 1) continue;
    Subgroup P;
    for (Elem h : H.members) {
      std::uint64_t o = G.element_order(h);
      while (o % p == 0) o /= p;
      if (o == 1) P.members.push_back(h);
    }
    if (P.members.size() != pk) continue; // Sylow p not normal
    if (census.count(static_cast<std::uint32_t>(m)) == 0) continue;
    P.generators = P.members;
    std::string pl = isomorphism_label(G, P);
    if (pl.find(' ') != std::string::npos) pl = "(" + pl + ")";
    return pl + " : C" + std::to_string(m);
  }
  return "Grp(" + std::to_string(n) + ")";
}

} // namespace intspec
