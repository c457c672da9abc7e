#include "intspec/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace intspec {

namespace {

constexpr std::uint32_t kTableLimit = 4096;
constexpr std::uint64_t kOrderLimit = 1000000;
constexpr std::uint64_t kDenseKeyLimit = 1u << 24;

std::uint64_t ipow(std::uint64_t b, std::uint64_t e)
{
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// log_base(2^64) check: does base^width fit in 64 bits?
bool fits64(std::uint64_t base, std::uint64_t width)
{
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < width; ++i) {
    r *= base;
    if (r > (unsigned __int128)UINT64_MAX) return false;
  }
  return true;
}

// Determinant of an n x n matrix over F by elimination.
Field::Code determinant(const Field& F, std::vector<Field::Code> m, std::uint32_t n)
{
  Field::Code det = 1;
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t piv = col;
    while (piv < n && m[piv * n + col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::uint32_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[col * n + j]);
      det = F.neg(det);
    }
    const Field::Code p = m[col * n + col];
    det = F.mul(det, p);
    const Field::Code pinv = F.inv(p);
    for (std::uint32_t r = col + 1; r < n; ++r) {
      const Field::Code f = F.mul(m[r * n + col], pinv);
      if (f == 0) continue;
      for (std::uint32_t j = col; j < n; ++j) m[r * n + j] = F.sub(m[r * n + j], F.mul(f, m[col * n + j]));
    }
  }
  return det;
}

std::vector<Field::Code> mat_inverse(const Field& F, const std::uint32_t* a, std::uint32_t n)
{
  std::vector<Field::Code> m(a, a + n * n), out(n * n, 0);
  for (std::uint32_t i = 0; i < n; ++i) out[i * n + i] = 1;
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t piv = col;
    while (piv < n && m[piv * n + col] == 0) ++piv;
    if (piv == n) throw GroupError("singular matrix");
    for (std::uint32_t j = 0; j < n; ++j) {
      std::swap(m[piv * n + j], m[col * n + j]);
      std::swap(out[piv * n + j], out[col * n + j]);
    }
    const Field::Code pinv = F.inv(m[col * n + col]);
    for (std::uint32_t j = 0; j < n; ++j) {
      m[col * n + j] = F.mul(m[col * n + j], pinv);
      out[col * n + j] = F.mul(out[col * n + j], pinv);
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col || m[r * n + col] == 0) continue;
      const Field::Code f = m[r * n + col];
      for (std::uint32_t j = 0; j < n; ++j) {
        m[r * n + j] = F.sub(m[r * n + j], F.mul(f, m[col * n + j]));
        out[r * n + j] = F.sub(out[r * n + j], F.mul(f, out[col * n + j]));
      }
    }
  }
  return out;
}

std::mutex& cache_mutex()
{
  static std::mutex m;
  return m;
}

} // namespace

std::uint64_t psl2_order(std::uint64_t q)
{
  return q * (q * q - 1) / (q % 2 == 1 ? 2 : 1);
}

std::uint64_t gl_order(std::uint64_t n, std::uint64_t q)
{
  std::uint64_t qn = ipow(q, n), r = 1;
  for (std::uint64_t j = 0; j < n; ++j) r *= qn - ipow(q, j);
  return r;
}

std::uint64_t agl_order(std::uint64_t n, std::uint64_t q) { return ipow(q, n) * gl_order(n, q); }

std::shared_ptr<const Group> Group::psl2(std::uint32_t q)
{
  static std::map<std::uint32_t, std::shared_ptr<const Group>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    if (auto it = cache.find(q); it != cache.end()) return it->second;
  }
  if (q < 3) throw GroupError("PSL(2, q) needs q >= 3, got q=" + std::to_string(q));
  Field F = Field::make_order(q);
  if (psl2_order(q) > kOrderLimit) throw GroupError("PSL(2, " + std::to_string(q) + ") exceeds the size cap");
  std::shared_ptr<Group> g(new Group());
  g->kind_ = GroupKind::PSL2;
  g->q_ = q;
  g->n_ = 2;
  g->field_ = F;
  g->width_ = 4;
  auto canonical = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    const std::uint32_t first = a != 0 ? a : (b != 0 ? b : (c != 0 ? c : d));
    return F.p() == 2 || F.is_positive(first);
  };
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c) {
        if (a != 0) {
          const std::uint32_t d = F.div(F.add(1, F.mul(b, c)), a);
          if (canonical(a, b, c, d)) g->words_.insert(g->words_.end(), {a, b, c, d});
        } else if (F.neg(F.mul(b, c)) == 1) {
          for (std::uint32_t d = 0; d < q; ++d)
            if (canonical(a, b, c, d)) g->words_.insert(g->words_.end(), {a, b, c, d});
        }
      }
  g->finish();
  if (g->order_ != psl2_order(q)) throw GroupError("internal: PSL(2, q) element count mismatch");
  std::lock_guard<std::mutex> lock(cache_mutex());
  cache.emplace(q, g);
  return g;
}

std::shared_ptr<const Group> Group::agl(std::uint32_t n, std::uint32_t q)
{
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Group>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    if (auto it = cache.find({n, q}); it != cache.end()) return it->second;
  }
  if (n < 1) throw GroupError("AGL(n, q) needs n >= 1");
  Field F = Field::make_order(q);
  if (agl_order(n, q) > kOrderLimit)
    throw GroupError("AGL(" + std::to_string(n) + ", " + std::to_string(q) + ") exceeds the size cap of 10^6");
  std::shared_ptr<Group> g(new Group());
  g->kind_ = GroupKind::AGL;
  g->q_ = q;
  g->n_ = n;
  g->field_ = F;
  g->width_ = n * n + n;
  const std::uint64_t nmat = ipow(q, n * n), nvec = ipow(q, n);
  std::vector<std::uint32_t> A(n * n), w(n * n + n);
  for (std::uint64_t code = 0; code < nmat; ++code) {
    std::uint64_t c = code;
    for (std::uint32_t i = n * n; i-- > 0;) {
      A[i] = static_cast<std::uint32_t>(c % q);
      c /= q;
    }
    if (determinant(F, A, n) == 0) continue;
    for (std::uint64_t bc = 0; bc < nvec; ++bc) {
      std::copy(A.begin(), A.end(), w.begin());
      std::uint64_t c2 = bc;
      for (std::uint32_t i = n; i-- > 0;) {
        w[n * n + i] = static_cast<std::uint32_t>(c2 % q);
        c2 /= q;
      }
      g->words_.insert(g->words_.end(), w.begin(), w.end());
    }
  }
  g->finish();
  std::lock_guard<std::mutex> lock(cache_mutex());
  cache.emplace(std::make_pair(n, q), g);
  return g;
}

std::shared_ptr<const Group> Group::from_permutations(std::uint32_t degree,
                                                      const std::vector<std::vector<std::uint32_t>>& gens)
{
  std::shared_ptr<Group> g(new Group());
  g->kind_ = GroupKind::Permutation;
  g->degree_ = degree;
  g->width_ = degree;
  for (const auto& p : gens) {
    if (p.size() != degree) throw GroupError("permutation has wrong degree");
    std::vector<bool> seen(degree, false);
    for (auto x : p) {
      if (x >= degree || seen[x]) throw GroupError("not a permutation");
      seen[x] = true;
    }
  }
  // Closure by breadth-first search, then sort words for a deterministic indexing.
  std::vector<std::uint32_t> id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::map<std::vector<std::uint32_t>, bool> seen{{id, true}};
  std::vector<std::vector<std::uint32_t>> queue{id};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : gens) {
      std::vector<std::uint32_t> prod(degree);
      for (std::uint32_t x = 0; x < degree; ++x) prod[x] = queue[head][s[x]];
      if (seen.emplace(prod, true).second) {
        if (seen.size() > kOrderLimit) throw GroupError("permutation group exceeds the size cap");
        queue.push_back(std::move(prod));
      }
    }
  }
  for (const auto& [w, unused] : seen) g->words_.insert(g->words_.end(), w.begin(), w.end());
  g->finish();
  return g;
}

std::uint64_t Group::key_of(const std::uint32_t* w) const
{
  const std::uint64_t base = kind_ == GroupKind::Permutation ? degree_ : q_;
  std::uint64_t k = 0;
  for (std::uint32_t i = 0; i < width_; ++i) k = k * base + w[i];
  return k;
}

void Group::finish()
{
  order_ = static_cast<std::uint32_t>(words_.size() / width_);
  const std::uint64_t base = kind_ == GroupKind::Permutation ? degree_ : q_;
  packed_keys_ = fits64(std::max<std::uint64_t>(base, 2), width_);
  dense_keys_ = packed_keys_ && ipow(std::max<std::uint64_t>(base, 2), width_) <= kDenseKeyLimit;
  if (dense_keys_) {
    dense_index_.assign(ipow(std::max<std::uint64_t>(base, 2), width_), UINT32_MAX);
    for (Elem i = 0; i < order_; ++i) dense_index_[key_of(&words_[std::size_t(i) * width_])] = i;
  } else if (packed_keys_) {
    key_index_.reserve(order_ * 2);
    for (Elem i = 0; i < order_; ++i) key_index_.emplace(key_of(&words_[std::size_t(i) * width_]), i);
  } else {
    for (Elem i = 0; i < order_; ++i)
      word_index_.emplace(std::vector<std::uint32_t>(words_.begin() + std::size_t(i) * width_,
                                                     words_.begin() + std::size_t(i + 1) * width_),
                          i);
  }

  std::vector<std::uint32_t> idw(width_, 0);
  if (kind_ == GroupKind::PSL2) {
    idw = {1, 0, 0, 1};
  } else if (kind_ == GroupKind::AGL) {
    for (std::uint32_t i = 0; i < n_; ++i) idw[i * n_ + i] = 1;
  } else {
    std::iota(idw.begin(), idw.end(), 0u);
  }
  identity_ = index_of(idw);

  inverse_.resize(order_);
  for (Elem a = 0; a < order_; ++a) inverse_[a] = index_of(inverse_word(&words_[std::size_t(a) * width_]));
  build_table();
  compute_orders();
  compute_generators();
  compute_classes();
  if (kind_ == GroupKind::PSL2 && q_ % 2 == 1) tag_psl2_classes();
}

void Group::build_table()
{
  if (order_ > kTableLimit) return;
  std::vector<Elem> t(std::size_t(order_) * order_);
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b) t[std::size_t(a) * order_ + b] = mul_slow(a, b);
  table_ = std::move(t);
}

void Group::compute_orders()
{
  orders_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a) {
    if (orders_[a] != 0) continue;
    std::uint32_t k = 1;
    Elem x = a;
    while (x != identity_) {
      x = mul(x, a);
      ++k;
    }
    orders_[a] = k;
  }
}

void Group::canonicalize(std::uint32_t* w) const
{
  if (kind_ != GroupKind::PSL2) return;
  const Field& F = *field_;
  if (F.p() == 2) return;
  std::uint32_t first = w[0] != 0 ? w[0] : (w[1] != 0 ? w[1] : (w[2] != 0 ? w[2] : w[3]));
  if (!F.is_positive(first))
    for (int i = 0; i < 4; ++i) w[i] = F.neg(w[i]);
}

std::vector<std::uint32_t> Group::mul_words(const std::uint32_t* a, const std::uint32_t* b) const
{
  std::vector<std::uint32_t> out(width_);
  if (kind_ == GroupKind::Permutation) {
    for (std::uint32_t x = 0; x < degree_; ++x) out[x] = a[b[x]];
    return out;
  }
  const Field& F = *field_;
  const std::uint32_t n = n_;
  // Matrix part (PSL2 is the n = 2 case with no translation).
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      Field::Code s = 0;
      for (std::uint32_t t = 0; t < n; ++t) s = F.add(s, F.mul(a[i * n + t], b[t * n + j]));
      out[i * n + j] = s;
    }
  if (kind_ == GroupKind::AGL) {
    for (std::uint32_t i = 0; i < n; ++i) {
      Field::Code s = a[n * n + i];
      for (std::uint32_t t = 0; t < n; ++t) s = F.add(s, F.mul(a[i * n + t], b[n * n + t]));
      out[n * n + i] = s;
    }
  } else {
    canonicalize(out.data());
  }
  return out;
}

std::vector<std::uint32_t> Group::inverse_word(const std::uint32_t* a) const
{
  std::vector<std::uint32_t> out(width_);
  if (kind_ == GroupKind::Permutation) {
    for (std::uint32_t x = 0; x < degree_; ++x) out[a[x]] = x;
    return out;
  }
  const Field& F = *field_;
  if (kind_ == GroupKind::PSL2) {
    out = {a[3], F.neg(a[1]), F.neg(a[2]), a[0]};
    canonicalize(out.data());
    return out;
  }
  const std::uint32_t n = n_;
  const auto Ai = mat_inverse(F, a, n);
  std::copy(Ai.begin(), Ai.end(), out.begin());
  for (std::uint32_t i = 0; i < n; ++i) {
    Field::Code s = 0;
    for (std::uint32_t t = 0; t < n; ++t) s = F.add(s, F.mul(Ai[i * n + t], a[n * n + t]));
    out[n * n + i] = F.neg(s);
  }
  return out;
}

Elem Group::mul_slow(Elem a, Elem b) const
{
  return index_of(mul_words(&words_[std::size_t(a) * width_], &words_[std::size_t(b) * width_]));
}

std::vector<std::uint32_t> Group::word(Elem a) const
{
  return {words_.begin() + std::size_t(a) * width_, words_.begin() + std::size_t(a + 1) * width_};
}

std::optional<Elem> Group::find(const std::vector<std::uint32_t>& w) const
{
  if (w.size() != width_) return std::nullopt;
  const std::uint64_t base = kind_ == GroupKind::Permutation ? degree_ : q_;
  for (auto x : w)
    if (x >= base) return std::nullopt;
  if (dense_keys_) {
    const Elem e = dense_index_[key_of(w.data())];
    if (e == UINT32_MAX) return std::nullopt;
    return e;
  }
  if (packed_keys_) {
    auto it = key_index_.find(key_of(w.data()));
    if (it == key_index_.end()) return std::nullopt;
    return it->second;
  }
  auto it = word_index_.find(w);
  if (it == word_index_.end()) return std::nullopt;
  return it->second;
}

Elem Group::index_of(const std::vector<std::uint32_t>& w) const
{
  auto e = find(w);
  if (!e) throw GroupError("word is not an element of " + spec());
  return *e;
}

Elem Group::pow(Elem a, std::int64_t e) const
{
  std::int64_t ord = orders_.empty() ? 0 : orders_[a];
  if (ord > 0) {
    e %= ord;
    if (e < 0) e += ord;
  } else if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Elem result = identity_, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::string Group::spec() const
{
  switch (kind_) {
  case GroupKind::PSL2: return "PSL2:q=" + std::to_string(q_);
  case GroupKind::AGL: return "AGL:n=" + std::to_string(n_) + ",q=" + std::to_string(q_);
  default: return "Perm:degree=" + std::to_string(degree_) + ",order=" + std::to_string(order_);
  }
}

std::string Group::to_string(Elem a) const
{
  const auto w = word(a);
  std::ostringstream os;
  if (kind_ == GroupKind::Permutation) {
    os << "[";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
    os << "]";
    return os.str();
  }
  const Field& F = *field_;
  os << "[";
  for (std::uint32_t i = 0; i < n_; ++i) {
    os << (i ? ";" : "");
    for (std::uint32_t j = 0; j < n_; ++j) os << (j ? "," : "") << F.to_string(w[i * n_ + j]);
  }
  os << "]";
  if (kind_ == GroupKind::AGL) {
    os << "+(";
    for (std::uint32_t i = 0; i < n_; ++i) os << (i ? "," : "") << F.to_string(w[n_ * n_ + i]);
    os << ")";
  }
  return os.str();
}

void Group::compute_generators()
{
  // Greedy: take elements of largest order first until they generate G.
  std::vector<Elem> cand(order_);
  std::iota(cand.begin(), cand.end(), 0u);
  std::stable_sort(cand.begin(), cand.end(), [&](Elem x, Elem y) { return orders_[x] > orders_[y]; });
  std::vector<char> in(order_, 0);
  std::vector<Elem> members{identity_};
  in[identity_] = 1;
  for (Elem c : cand) {
    if (members.size() == order_) break;
    if (in[c]) continue;
    generators_.push_back(c);
    // Every member times every generator, including the new one.
    for (std::size_t head = 0; head < members.size(); ++head)
      for (Elem s : generators_) {
        const Elem z = mul(members[head], s);
        if (!in[z]) {
          in[z] = 1;
          members.push_back(z);
        }
      }
  }
}

void Group::compute_classes()
{
  class_id_.assign(order_, UINT32_MAX);
  conjugator_.assign(order_, identity_);
  std::vector<std::vector<Elem>> orbits;
  for (Elem x = 0; x < order_; ++x) {
    if (class_id_[x] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(orbits.size());
    std::vector<Elem> orbit{x};
    class_id_[x] = id;
    conjugator_[x] = identity_;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const Elem y = orbit[head];
      for (Elem s : generators_) {
        const Elem z = conj(y, s);
        if (class_id_[z] == UINT32_MAX) {
          class_id_[z] = id;
          conjugator_[z] = mul(s, conjugator_[y]);
          orbit.push_back(z);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }
  // Generic order: identity first, then by element order, then smallest member.
  std::vector<std::uint32_t> perm(orbits.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::stable_sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    const Elem ra = orbits[a][0], rb = orbits[b][0];
    if ((ra == identity_) != (rb == identity_)) return ra == identity_;
    if (orders_[ra] != orders_[rb]) return orders_[ra] < orders_[rb];
    return ra < rb;
  });
  std::vector<std::uint32_t> newid(orbits.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) newid[perm[i]] = i;
  classes_.resize(orbits.size());
  class_members_.resize(orbits.size());
  for (std::uint32_t old = 0; old < orbits.size(); ++old) {
    auto& c = classes_[newid[old]];
    c.rep = orbits[old][0];
    c.size = orbits[old].size();
    c.element_order = orders_[c.rep];
    std::sort(orbits[old].begin(), orbits[old].end());
    class_members_[newid[old]] = std::move(orbits[old]);
  }
  for (auto& id : class_id_) id = newid[id];
  for (std::uint32_t i = 0; i < classes_.size(); ++i) {
    classes_[i].inverse_class = class_id_[inverse_[classes_[i].rep]];
    classes_[i].tag = "k" + std::to_string(i);
  }
  if (!classes_.empty()) classes_[0].tag = "1";
}

Field::Code Group::delta() const
{
  if (kind_ != GroupKind::PSL2 || q_ % 2 == 0) throw GroupError("delta needs PSL(2, q) with q odd");
  return field_->nonsquare();
}

Elem Group::matrix(Field::Code a, Field::Code b, Field::Code c, Field::Code d) const
{
  if (kind_ != GroupKind::PSL2) throw GroupError("matrix() needs a PSL(2, q) group");
  std::vector<std::uint32_t> w{a, b, c, d};
  const Field& F = *field_;
  if (F.sub(F.mul(a, d), F.mul(b, c)) != 1) throw GroupError("matrix does not have determinant 1");
  canonicalize(w.data());
  return index_of(w);
}

std::pair<Field::Code, Field::Code> Group::norm_one_generator() const
{
  const Field& F = *field_;
  const Field::Code D = delta();
  auto emul = [&](std::pair<Field::Code, Field::Code> x, std::pair<Field::Code, Field::Code> y) {
    return std::make_pair(F.add(F.mul(x.first, y.first), F.mul(D, F.mul(x.second, y.second))),
                          F.add(F.mul(x.first, y.second), F.mul(x.second, y.first)));
  };
  for (Field::Code a = 0; a < q_; ++a)
    for (Field::Code b = 0; b < q_; ++b) {
      if (F.sub(F.mul(a, a), F.mul(D, F.mul(b, b))) != 1) continue;
      std::pair<Field::Code, Field::Code> z{a, b}, x{a, b};
      std::uint32_t ord = 1;
      while (!(x.first == 1 && x.second == 0)) {
        x = emul(x, z);
        ++ord;
      }
      if (ord == q_ + 1) return z;
    }
  throw GroupError("internal: no generator of the norm-one torus");
}

Elem Group::nonsplit_element(std::int64_t j) const
{
  const Field& F = *field_;
  const Field::Code D = delta();
  const auto eps = norm_one_generator();
  std::int64_t m = q_ + 1;
  j %= m;
  if (j < 0) j += m;
  std::pair<Field::Code, Field::Code> x{1, 0};
  for (std::int64_t t = 0; t < j; ++t)
    x = {F.add(F.mul(x.first, eps.first), F.mul(D, F.mul(x.second, eps.second))),
         F.add(F.mul(x.first, eps.second), F.mul(x.second, eps.first))};
  return matrix(x.first, F.mul(D, x.second), x.second, x.first);
}

void Group::tag_psl2_classes()
{
  const Field& F = *field_;
  const std::uint32_t q = q_;
  const bool one_mod_4 = q % 4 == 1;
  const Field::Code w = F.primitive();
  struct Named {
    Elem rep;
    ClassFamily family;
    std::uint32_t param;
    std::string tag;
  };
  std::vector<Named> named;
  named.push_back({identity_, ClassFamily::Identity, 0, "1"});
  named.push_back({matrix(1, 1, 0, 1), ClassFamily::Unipotent1, 0, "c2(1)"});
  named.push_back({matrix(1, delta(), 0, 1), ClassFamily::UnipotentDelta, 0, one_mod_4 ? "c2(D)" : "c2(-1)"});
  const std::uint32_t nsplit = one_mod_4 ? (q - 5) / 4 : (q - 3) / 4;
  for (std::uint32_t i = 1; i <= nsplit; ++i) {
    const Field::Code x = F.pow(w, i);
    named.push_back({matrix(x, 0, 0, F.inv(x)), ClassFamily::Split, i, "c3(w^" + std::to_string(i) + ")"});
  }
  if (one_mod_4) {
    const Field::Code s = F.pow(w, (q - 1) / 4);
    named.push_back({matrix(s, 0, 0, F.inv(s)), ClassFamily::SplitSqrtM1, (q - 1) / 4, "c3(sqrt-1)"});
  } else {
    named.push_back({matrix(0, F.neg(1), 1, 0), ClassFamily::Involution, 0, "c4(sqrt-1)"});
  }
  const std::uint32_t nnon = one_mod_4 ? (q - 1) / 4 : (q - 3) / 4;
  for (std::uint32_t j = 1; j <= nnon; ++j)
    named.push_back({nonsplit_element(j), ClassFamily::Nonsplit, j, "c4(e^" + std::to_string(j) + ")"});

  if (named.size() != classes_.size() || named.size() != (q + 5) / 2)
    throw GroupError("internal: PSL(2, q) class count mismatch");
  std::vector<std::uint32_t> newid(classes_.size(), UINT32_MAX);
  for (std::uint32_t i = 0; i < named.size(); ++i) {
    const std::uint32_t old = class_id_[named[i].rep];
    if (newid[old] != UINT32_MAX) throw GroupError("internal: two named representatives share a class");
    newid[old] = i;
  }
  std::vector<ConjClass> classes(classes_.size());
  std::vector<std::vector<Elem>> members(classes_.size());
  for (std::uint32_t old = 0; old < classes_.size(); ++old) {
    const std::uint32_t i = newid[old];
    classes[i] = classes_[old];
    members[i] = std::move(class_members_[old]);
    // Re-root conjugators at the named representative: if rep' = t rep t^-1
    // then y = u rep u^-1 = (u t^-1) rep' (u t^-1)^-1.
    const Elem t = conjugator_[named[i].rep];
    const Elem tinv = inverse_[t];
    for (Elem y : members[i]) conjugator_[y] = mul(conjugator_[y], tinv);
    classes[i].rep = named[i].rep;
    classes[i].family = named[i].family;
    classes[i].param = named[i].param;
    classes[i].tag = named[i].tag;
  }
  for (auto& id : class_id_) id = newid[id];
  classes_ = std::move(classes);
  class_members_ = std::move(members);
  for (auto& c : classes_) c.inverse_class = class_id_[inverse_[c.rep]];
}

const std::vector<Elem>& Group::centralizer(std::uint32_t c) const
{
  std::lock_guard<std::mutex> lock(centralizer_mutex_);
  auto it = centralizers_.find(c);
  if (it != centralizers_.end()) return it->second;
  return centralizers_.emplace(c, centralizer_of(classes_[c].rep)).first->second;
}

std::vector<Elem> Group::centralizer_of(Elem a) const
{
  std::vector<Elem> out;
  for (Elem g = 0; g < order_; ++g)
    if (mul(g, a) == mul(a, g)) out.push_back(g);
  return out;
}

} // namespace intspec
