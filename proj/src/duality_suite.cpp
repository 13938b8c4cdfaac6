#include "harary/duality_suite.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "harary/generators.hpp"

namespace harary {

namespace {

constexpr double kSpectrumTol = 1e-8;

DenseVector<double> values_of(std::initializer_list<double> xs) {
  DenseVector<double> v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const double x : xs) v(i++) = x;
  std::sort(v.data(), v.data() + v.size());
  return v;
}

bool same_spectrum(const DenseVector<double>& a, const DenseVector<double>& b) {
  return a.size() == b.size() && (a - b).cwiseAbs().maxCoeff() <= kSpectrumTol;
}

DenseVector<double> balanced_k4_spectrum() { return values_of({0.0, 2.0, 4.0, 4.0}); }

DenseVector<double> unbalanced_k4_spectrum() {
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  return values_of({2.0 - r2, 3.0 - r3, 2.0 + r2, 3.0 + r3});
}

SwitchingFunction random_switching(Vertex n, Rng& rng) {
  std::bernoulli_distribution flip(0.5);
  SwitchingFunction s;
  for (Vertex v = 0; v < n; ++v) s.sigma.push_back(flip(rng) ? Sign{-1} : Sign{1});
  return s;
}

Vertex random_size(Rng& rng, Vertex lo, Vertex hi) {
  std::uniform_int_distribution<Vertex> pick(lo, std::max(lo, hi));
  return pick(rng);
}

PropertyOutcome fail(std::string name, std::string detail, const SignedGraph& g) {
  return {std::move(name), false, std::move(detail), g};
}

PropertyOutcome check_table_spectra() {
  const std::string name = "reference-spectra";
  const auto base = k4_minus_edge();
  if (!same_spectrum(laplacian_spectrum(base), balanced_k4_spectrum())) {
    return fail(name, "all-positive spectrum differs from {0,2,4,4}", base);
  }
  int balanced = 0;
  int unbalanced = 0;
  bool found_sigma5 = false;
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    const auto g = signing_from_mask(base, mask);
    const auto spectrum = laplacian_spectrum(g);
    if (is_balanced(g)) {
      ++balanced;
      if (!same_spectrum(spectrum, balanced_k4_spectrum())) {
        return fail(name, "balanced signing with a different spectrum", g);
      }
    } else {
      ++unbalanced;
      if (!(spectrum(0) > kSpectrumTol)) {
        return fail(name, "unbalanced signing with a zero eigenvalue", g);
      }
      found_sigma5 = found_sigma5 || same_spectrum(spectrum, unbalanced_k4_spectrum());
    }
  }
  if (!found_sigma5) {
    return {name, false, "no unbalanced signing attains {2-sqrt2,3-sqrt3,2+sqrt2,3+sqrt3}", {}};
  }
  std::ostringstream os;
  os << balanced << " balanced, " << unbalanced << " unbalanced signings";
  return {name, true, os.str(), {}};
}

PropertyOutcome check_isospectral(const DualitySuiteOptions& opt, Rng& rng) {
  const std::string name = "isospectral-switching";
  if (opt.inject_unbalanced) {
    const SignedGraph triangle(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}});
    const SwitchingFunction plus{{1, 1, 1}};
    try {
      (void)verify_isospectral(triangle, plus, plus);
    } catch (const PreconditionError& e) {
      return fail(name, e.what(), triangle);
    }
    return fail(name, "unbalanced input was accepted", triangle);
  }
  for (int t = 0; t < opt.trials; ++t) {
    const auto g = random_balanced_graph(random_size(rng, 2, opt.n_max), 0.5, rng);
    const auto s1 = random_switching(g.vertex_count(), rng);
    const auto s2 = random_switching(g.vertex_count(), rng);
    if (!verify_isospectral(g, s1, s2)) return fail(name, "spectra differ", g);

    // Eigenvectors map through the diagonal sign change between the two.
    const auto l1 = signed_laplacian<double>(g, s1);
    const auto l2 = signed_laplacian<double>(g, s2);
    const auto sys = eigen_symmetric(l1);
    DenseVector<double> d(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) d(v) = s1[v] * s2[v];
    for (Eigen::Index k = 0; k < sys.values.size(); ++k) {
      const DenseVector<double> mapped = d.asDiagonal() * sys.vectors.col(k);
      const double residual = (l2 * mapped - sys.values(k) * mapped).cwiseAbs().maxCoeff();
      if (residual > kSpectrumTol) return fail(name, "switched eigenvector residual too large", g);
    }
  }
  return {name, true, std::to_string(opt.trials) + " random balanced graphs", {}};
}

PropertyOutcome check_zero_multiplicity(const DualitySuiteOptions& opt, Rng& rng) {
  const std::string name = "zero-multiplicity-equals-components";
  for (int t = 0; t < opt.trials; ++t) {
    for (int c = 1; c <= 3; ++c) {
      const Vertex n = std::max<Vertex>(random_size(rng, 2, opt.n_max), c);
      const auto g = random_balanced_graph(n, 0.6, rng, c);
      const int mult = zero_multiplicity(laplacian_spectrum(g));
      const auto comps = static_cast<int>(connected_components(g).size());
      if (mult != comps) {
        return fail(name, "multiplicity " + std::to_string(mult) + " vs " +
                              std::to_string(comps) + " components", g);
      }
    }
  }
  return {name, true, "1-3 components", {}};
}

PropertyOutcome check_unbalanced_spectrum(const DualitySuiteOptions& opt, Rng& rng) {
  const std::string name = "unbalanced-has-no-zero-eigenvalue";
  int seen = 0;
  for (int t = 0; t < opt.trials; ++t) {
    const auto g = random_signed_graph(random_size(rng, 3, opt.n_max), 0.6, 0.5, rng, true);
    if (is_balanced(g)) continue;
    ++seen;
    const auto spectrum = laplacian_spectrum(g);
    if (!(spectrum(0) > kSpectrumTol)) return fail(name, "zero eigenvalue on unbalanced graph", g);
  }
  return {name, true, std::to_string(seen) + " unbalanced graphs", {}};
}

PropertyOutcome check_zero_eigenvector(const DualitySuiteOptions& opt, Rng& rng) {
  const std::string name = "zero-eigenvector-is-harary-bipartition";
  for (int t = 0; t < opt.trials; ++t) {
    const auto g = random_balanced_graph(random_size(rng, 2, opt.n_max), 0.5, rng);
    const auto witness = is_balanced(g);
    if (!witness) return fail(name, "generator produced an unbalanced graph", g);
    SpectralBipartition split;
    try {
      split = zero_eigenvector_bipartition(g);
    } catch (const PreconditionError& e) {
      return fail(name, e.what(), g);
    }
    const auto plus = witness->plus_side();
    const auto minus = witness->minus_side();
    const bool agrees = (split.plus == plus && split.minus == minus) ||
                        (split.plus == minus && split.minus == plus);
    if (!agrees) return fail(name, "bipartition differs from the balance witness", g);
  }
  return {name, true, std::to_string(opt.trials) + " random balanced graphs", {}};
}

}  // namespace

SignedGraph k4_minus_edge() {
  return SignedGraph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {2, 3, 1}});
}

std::vector<SpectrumRow> reference_spectra() {
  const auto base = k4_minus_edge();
  std::vector<SpectrumRow> rows;
  auto add = [&rows](std::string name, const SignedGraph& g, std::uint64_t mask) {
    rows.push_back({std::move(name), is_balanced(g).has_value(),
                    eigen_symmetric(signed_laplacian<double>(g)), mask});
  };
  auto mask_of = [](const SignedGraph& g) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      if (g.edges()[i].sign < 0) m |= std::uint64_t{1} << i;
    }
    return m;
  };
  add("Sigma0", base, 0);
  const auto s1 = switch_signs(base, SwitchingFunction{{-1, 1, 1, 1}});
  add("Sigma1", s1, mask_of(s1));
  const auto s2 = switch_signs(base, SwitchingFunction{{1, 1, -1, -1}});
  add("Sigma2", s2, mask_of(s2));
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    const auto g = signing_from_mask(base, mask);
    if (!is_balanced(g) && same_spectrum(laplacian_spectrum(g), unbalanced_k4_spectrum())) {
      add("Sigma5", g, mask);
      break;
    }
  }
  return rows;
}

std::vector<PropertyOutcome> run_duality_suite(const DualitySuiteOptions& options) {
  if (options.n_max < 2) throw ConfigError("n-max must be at least 2");
  if (options.trials < 0) throw ConfigError("trials must be non-negative");
  Rng rng(mix_seed(options.seed, 0xD0A1));
  std::vector<PropertyOutcome> out;
  out.push_back(check_table_spectra());
  out.push_back(check_isospectral(options, rng));
  out.push_back(check_zero_multiplicity(options, rng));
  out.push_back(check_unbalanced_spectrum(options, rng));
  out.push_back(check_zero_eigenvector(options, rng));
  return out;
}

std::string format_edge_list(const SignedGraph& g) {
  std::ostringstream os;
  os << "% " << g.edge_count() << ' ' << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << ' ' << int{e.sign} << '\n';
  return os.str();
}

}  // namespace harary
