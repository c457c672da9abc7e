#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "intspec/action.hpp"
#include "intspec/rational.hpp"

namespace intspec {

/// Undirected simple graph with dense bit rows.
class BitGraph {
public:
  BitGraph() = default;
  explicit BitGraph(std::uint32_t n);

  std::uint32_t size() const { return n_; }
  std::uint32_t words() const { return w_; }
  const std::uint64_t* row(std::uint32_t v) const { return &bits_[std::size_t(v) * w_]; }
  bool has_edge(std::uint32_t u, std::uint32_t v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }
  void add_edge(std::uint32_t u, std::uint32_t v);
  // Sets a directed bit only; callers keep the matrix symmetric.
  void set_bit(std::uint32_t u, std::uint32_t v) { bits_[std::size_t(u) * w_ + (v >> 6)] |= 1ull << (v & 63); }
  std::uint32_t degree(std::uint32_t v) const;
  std::uint64_t edge_count() const;
  bool is_symmetric_loopless() const;
  BitGraph complement() const;
  BitGraph induced(const std::vector<std::uint32_t>& vertices) const;

  void write_dimacs(std::ostream& out) const;
  static BitGraph read_dimacs(std::istream& in);

private:
  std::uint32_t n_ = 0, w_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Cayley graph on G whose connection set is the set of derangements.
struct DerangementGraph {
  GroupPtr group;
  Subgroup subgroup;
  std::vector<Elem> connection;               // sorted derangements
  std::vector<std::uint32_t> derangement_classes;
  BitGraph graph;                             // row x = x * connection
  std::string group_spec, subgroup_spec;

  std::uint32_t valency() const { return static_cast<std::uint32_t>(connection.size()); }
};

DerangementGraph build_derangement_graph(const CosetAction& act, std::string subgroup_spec = "");

/// Symmetric class-weighted adjacency sum_C w_C A_C over derangement classes.
class WeightedScheme {
public:
  WeightedScheme(const DerangementGraph& g, std::map<std::uint32_t, Rational> weights);

  const std::map<std::uint32_t, Rational>& weights() const { return weights_; }
  const Group& group() const { return *group_; }
  Rational weight_of(Elem g) const;
  // Dense numeric matrix M(x, y) = w(class(x^-1 y)).
  Eigen::MatrixXd materialize() const;
  // Exact y = M v for a rational vector v.
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
  GroupPtr group_;
  std::map<std::uint32_t, Rational> weights_;
  std::vector<Rational> class_weight_;
};

} // namespace intspec
