#include "intspec/dgraph.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace intspec {

BitGraph::BitGraph(std::uint32_t n) : n_(n), w_((n + 63) / 64), bits_(std::size_t(n) * ((n + 63) / 64), 0) {}

void BitGraph::add_edge(std::uint32_t u, std::uint32_t v)
{
  if (u == v) throw std::invalid_argument("loops are not allowed");
  set_bit(u, v);
  set_bit(v, u);
}

std::uint32_t BitGraph::degree(std::uint32_t v) const
{
  std::uint32_t d = 0;
  for (std::uint32_t i = 0; i < w_; ++i) d += std::popcount(row(v)[i]);
  return d;
}

std::uint64_t BitGraph::edge_count() const
{
  std::uint64_t s = 0;
  for (std::uint32_t v = 0; v < n_; ++v) s += degree(v);
  return s / 2;
}

bool BitGraph::is_symmetric_loopless() const
{
  for (std::uint32_t u = 0; u < n_; ++u) {
    if (has_edge(u, u)) return false;
    for (std::uint32_t v = u + 1; v < n_; ++v)
      if (has_edge(u, v) != has_edge(v, u)) return false;
  }
  return true;
}

BitGraph BitGraph::complement() const
{
  BitGraph c(n_);
  for (std::uint32_t u = 0; u < n_; ++u)
    for (std::uint32_t v = 0; v < n_; ++v)
      if (u != v && !has_edge(u, v)) c.set_bit(u, v);
  return c;
}

BitGraph BitGraph::induced(const std::vector<std::uint32_t>& vertices) const
{
  BitGraph s(static_cast<std::uint32_t>(vertices.size()));
  for (std::uint32_t i = 0; i < vertices.size(); ++i)
    for (std::uint32_t j = 0; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j])) s.set_bit(i, j);
  return s;
}

void BitGraph::write_dimacs(std::ostream& out) const
{
  out << "p edge " << n_ << " " << edge_count() << "\n";
  for (std::uint32_t u = 0; u < n_; ++u)
    for (std::uint32_t v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out << "e " << u + 1 << " " << v + 1 << "\n";
}

BitGraph BitGraph::read_dimacs(std::istream& in)
{
  std::string line;
  BitGraph g;
  bool have_header = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string fmt;
      std::uint64_t n = 0, m = 0;
      if (!(ls >> fmt >> n >> m) || (fmt != "edge" && fmt != "col"))
        throw std::invalid_argument("DIMACS line " + std::to_string(lineno) + ": bad header");
      g = BitGraph(static_cast<std::uint32_t>(n));
      have_header = true;
    } else if (tag == "e") {
      std::uint64_t u = 0, v = 0;
      if (!have_header || !(ls >> u >> v) || u < 1 || v < 1 || u > g.size() || v > g.size())
        throw std::invalid_argument("DIMACS line " + std::to_string(lineno) + ": bad edge");
      if (u != v) g.add_edge(static_cast<std::uint32_t>(u - 1), static_cast<std::uint32_t>(v - 1));
    }
  }
  if (!have_header) throw std::invalid_argument("DIMACS input has no 'p edge' header");
  return g;
}

DerangementGraph build_derangement_graph(const CosetAction& act, std::string subgroup_spec)
{
  const Group& G = act.group();
  if (G.order() > 4000) throw GroupError("derangement graphs are capped at 4000 vertices");
  DerangementGraph d;
  d.group = act.group_ptr();
  d.subgroup = act.subgroup();
  d.connection = act.derangements();
  d.derangement_classes = act.derangement_classes();
  d.group_spec = G.spec();
  d.subgroup_spec = std::move(subgroup_spec);
  d.graph = BitGraph(G.order());
  for (Elem x = 0; x < G.order(); ++x)
    for (Elem s : d.connection) d.graph.set_bit(x, G.mul(x, s));
  return d;
}

WeightedScheme::WeightedScheme(const DerangementGraph& g, std::map<std::uint32_t, Rational> weights)
    : group_(g.group), weights_(std::move(weights))
{
  const auto& cls = group_->classes();
  class_weight_.assign(cls.size(), Rational(0));
  for (const auto& [c, w] : weights_) {
    if (c >= cls.size()) throw std::invalid_argument("weight on unknown class " + std::to_string(c));
    if (w == 0) continue;
    if (!std::binary_search(g.derangement_classes.begin(), g.derangement_classes.end(), c))
      throw std::invalid_argument("weight on non-derangement class " + cls[c].tag);
    class_weight_[c] = w;
  }
  for (std::uint32_t c = 0; c < cls.size(); ++c)
    if (class_weight_[c] != class_weight_[cls[c].inverse_class])
      throw std::invalid_argument("weights are not symmetric under inversion at class " + cls[c].tag);
}

Rational WeightedScheme::weight_of(Elem g) const { return class_weight_[group_->class_of(g)]; }

Eigen::MatrixXd WeightedScheme::materialize() const
{
  const Group& G = *group_;
  const std::uint32_t n = G.order();
  std::vector<double> cw(class_weight_.size());
  for (std::size_t i = 0; i < cw.size(); ++i) cw[i] = to_double(class_weight_[i]);
  Eigen::MatrixXd M(n, n);
  for (Elem x = 0; x < n; ++x) {
    const Elem xi = G.inv(x);
    for (Elem y = 0; y < n; ++y) M(x, y) = cw[G.class_of(G.mul(xi, y))];
  }
  return M;
}

std::vector<Rational> WeightedScheme::apply(const std::vector<Rational>& v) const
{
  const Group& G = *group_;
  const std::uint32_t n = G.order();
  if (v.size() != n) throw std::invalid_argument("vector length does not match the group order");
  std::vector<std::pair<Elem, Rational>> conn;
  for (Elem s = 0; s < n; ++s)
    if (class_weight_[G.class_of(s)] != 0) conn.emplace_back(s, class_weight_[G.class_of(s)]);
  // (M v)(x) = sum_s w(s) v(x s)
  std::vector<Rational> out(n, Rational(0));
  for (Elem x = 0; x < n; ++x) {
    Rational acc = 0;
    for (const auto& [s, w] : conn) acc += w * v[G.mul(x, s)];
    out[x] = acc;
  }
  return out;
}

} // namespace intspec
