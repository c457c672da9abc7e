#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intspec/dgraph.hpp"

namespace intspec {

struct SolveOptions {
  std::vector<std::uint32_t> seed;         // known coclique, used as the starting incumbent
  std::optional<std::uint64_t> upper_bound; // external bound; stop once reached
  bool symmetry = true;                    // derangement graphs only
  std::uint64_t node_budget = 100000000;
};

enum class SolveStatus { Optimal, LowerBoundOnly };

struct SolveResult {
  std::uint64_t best = 0;
  std::vector<std::uint32_t> witness; // sorted
  SolveStatus status = SolveStatus::LowerBoundOnly;
  std::string certificate;            // "exhausted" or "bound-matched" when optimal
  std::uint64_t nodes = 0;
  double seconds = 0;
};

/// Maximum coclique of an arbitrary graph (no symmetry assumptions).
SolveResult max_coclique(const BitGraph& g, const SolveOptions& opts = {});

/// Maximum coclique of a derangement graph. With opts.symmetry the identity is
/// placed in the coclique and the remaining choices branch over orbits of the
/// conjugation-and-inversion action, then over centralizer orbits.
SolveResult max_coclique(const DerangementGraph& g, const SolveOptions& opts = {});

bool verify_coclique(const BitGraph& g, const std::vector<std::uint32_t>& S);
bool verify_clique(const BitGraph& g, const std::vector<std::uint32_t>& S);

} // namespace intspec
