#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intspec/group.hpp"
#include "intspec/mis.hpp"
#include "intspec/rational.hpp"
#include "intspec/subgroups.hpp"

namespace intspec {

inline constexpr const char* kSolverVersion = "intspec-solver-1";

enum class Strategy { Auto, ExactOnly, BoundOnly };
enum class BoundKind { None, Ratio, CliqueCoclique, ExactSearch };

const char* to_string(Strategy s);
const char* to_string(BoundKind b);
Strategy parse_strategy(const std::string& s);
BoundKind parse_bound_kind(const std::string& s);

struct DensityOptions {
  Strategy strategy = Strategy::Auto;
  std::uint64_t node_budget = 100000000;
  bool symmetry = true;
};

struct RatioCertificate {
  std::string weighting;   // "uniform", "eq6.1", "eq7.3:r=3"
  Rational d, tau;         // tau is a lower bracket end when !tau_exact
  bool tau_exact = true;
  Rational bound;          // |G| / (1 - d / tau)
};

struct DensityReport {
  std::string group_spec, subgroup_spec, label;
  std::uint64_t group_order = 0, subgroup_order = 0, index = 0;

  std::uint64_t alpha = 0;           // witness size
  std::vector<Elem> witness;         // sorted coclique
  std::string witness_source;        // "subgroup H", "intersecting subgroup", "search"

  BoundKind bound_kind = BoundKind::None;
  Rational bound_value;              // upper bound on alpha actually used
  std::optional<RatioCertificate> ratio;
  std::optional<Rational> clique_bound;
  std::uint64_t clique_size = 0;

  Rational rho;                      // alpha / |H|
  Rational rho_upper;                // floor(bound_value) / |H|
  bool certified = false;
  std::string solver_status;         // "", "exhausted", "bound-matched", "budget"
  std::uint64_t nodes = 0;
  bool experiment = false;
  std::string note;
};

struct SpectrumReport {
  std::string group_spec;
  std::uint64_t group_order = 0;
  std::vector<DensityReport> rows;   // one per conjugacy class of subgroups
  std::vector<Rational> sigma;       // distinct certified densities, ascending
};

// Ratio bounds of every registered weighting supported on the derangement classes.
std::vector<RatioCertificate> ratio_bounds(const Group& G, const std::vector<std::uint32_t>& derangement_classes);

DensityReport intersection_density(GroupPtr G, const Subgroup& H, const std::string& subgroup_spec,
                                   const DensityOptions& opts = {});

/// Optional per-row result store consulted by intersection_spectrum.
class RowCache {
public:
  virtual ~RowCache() = default;
  virtual std::optional<DensityReport> lookup(const std::string& group_spec, const std::string& subgroup_spec,
                                              const DensityOptions& opts) const = 0;
  virtual void remember(const std::string& group_spec, const std::string& subgroup_spec, const DensityOptions& opts,
                        const DensityReport& r) const = 0;
};

SpectrumReport intersection_spectrum(GroupPtr G, const DensityOptions& opts = {}, unsigned threads = 1,
                                     const RowCache* cache = nullptr);

// rho(AGL(n, q), E_i) = p^(kn - i) via the linear-group clique and the translation coclique.
DensityReport agl_density_certificate(std::uint32_t n, std::uint32_t q, std::uint32_t i);

// rho(PSL(2, q), <A>) for q = 1 mod 4, reported as an experiment.
DensityReport conjecture_experiment(std::uint32_t q, const DensityOptions& opts = {});

struct EigenvalueRow {
  std::string character;   // character label, or "lambda_k" without a character table
  std::uint32_t degree = 0; // 0 when unknown
  std::string exact;       // "num/den" or a cyclotomic expression; empty when approx
  double value = 0;        // real part
  bool approx = false;
};

struct EigenvalueReport {
  std::string group_spec, weighting, subgroup_spec;
  Rational d;              // eigenvalue on the constant vector
  Rational tau;            // least eigenvalue (lower bracket end when !tau_exact)
  bool tau_exact = true;
  std::vector<EigenvalueRow> rows;
};

// Eigenvalues of a registered class weighting: "eq6.1", "eq7.3:r=R", or
// "uniform" (weight 1 on every derangement class of the action on cosets of H).
EigenvalueReport weighted_spectrum(GroupPtr G, const std::string& weighting, const Subgroup* H = nullptr,
                                   const std::string& subgroup_spec = "");

// Cached enumerate_subgroups.
const std::vector<Subgroup>& subgroup_classes(const GroupPtr& G);

} // namespace intspec
