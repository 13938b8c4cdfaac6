#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "harary/duality.hpp"

namespace harary {

/// K4 minus one edge, all positive: edges 01, 02, 03, 12, 23 (1-3 missing).
SignedGraph k4_minus_edge();

struct SpectrumRow {
  std::string name;
  bool balanced = false;
  EigenSystem<double> system;
  std::uint64_t mask = 0;  // signing mask on k4_minus_edge()
};

/// Sigma0 (all positive), Sigma1 (v0 switched), Sigma2 ({v2, v3} switched)
/// and the first unbalanced signing whose spectrum is
/// {2-sqrt2, 3-sqrt3, 2+sqrt2, 3+sqrt3}, if one exists.
std::vector<SpectrumRow> reference_spectra();

struct PropertyOutcome {
  std::string name;
  bool passed = true;
  std::string detail;
  std::optional<SignedGraph> counterexample;
};

struct DualitySuiteOptions {
  Vertex n_max = 8;
  int trials = 20;
  std::uint64_t seed = 42;
  /// Feeds an unbalanced graph into the isospectrality check; the
  /// precondition violation is reported as a failed property.
  bool inject_unbalanced = false;
};

std::vector<PropertyOutcome> run_duality_suite(const DualitySuiteOptions& options);

/// Edge list "u v sign" lines, konect style.
std::string format_edge_list(const SignedGraph& g);

}  // namespace harary
