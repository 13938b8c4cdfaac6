#pragma once

#include <Eigen/Dense>
#include <Eigen/Jacobi>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "harary/balance.hpp"
#include "harary/graph.hpp"

namespace harary {

template <typename Scalar>
using DenseSymMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Ascending eigenvalues with matching orthonormal eigenvector columns.
/// Each eigenvector is oriented so that its first non-negligible entry is
/// positive.
template <typename Scalar>
struct EigenSystem {
  DenseVector<Scalar> values;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vectors;
  int sweeps = 0;
};

inline constexpr Vertex kDenseVertexLimit = 2048;

namespace detail {

inline void check_dense_size(const SignedGraph& g) {
  if (g.vertex_count() > kDenseVertexLimit) {
    throw GraphError("dense Laplacian limited to " + std::to_string(kDenseVertexLimit) +
                     " vertices");
  }
}

template <typename Scalar>
Scalar jacobi_tolerance() {
  return std::max(Scalar(1e-12), Scalar(64) * Eigen::NumTraits<Scalar>::epsilon());
}

}  // namespace detail

/// L = D - A with A(u,v) = sign(u,v) and D(v,v) = deg(v).
template <typename Scalar = double>
DenseSymMatrix<Scalar> signed_laplacian(const SignedGraph& g) {
  detail::check_dense_size(g);
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  DenseSymMatrix<Scalar> L = DenseSymMatrix<Scalar>::Zero(n, n);
  for (const auto& e : g.edges()) {
    L(e.u, e.u) += Scalar(1);
    L(e.v, e.v) += Scalar(1);
    L(e.u, e.v) -= Scalar(e.sign);
    L(e.v, e.u) -= Scalar(e.sign);
  }
  return L;
}

/// Laplacian of `g` switched by sigma: I_W * L * I_W.
template <typename Scalar = double>
DenseSymMatrix<Scalar> signed_laplacian(const SignedGraph& g, const SwitchingFunction& sigma) {
  if (sigma.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw GraphError("switching function size does not match graph");
  }
  DenseVector<Scalar> d(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) d(v) = Scalar(sigma[v]);
  return d.asDiagonal() * signed_laplacian<Scalar>(g) * d.asDiagonal();
}

/// Cyclic Jacobi eigensolver for dense symmetric matrices. Converges when the
/// largest off-diagonal magnitude drops below 1e-12 (or a few ulps for
/// narrower scalars); throws Error after `max_sweeps` sweeps.
template <typename Derived>
EigenSystem<typename Derived::Scalar> eigen_symmetric(const Eigen::MatrixBase<Derived>& m,
                                                      int max_sweeps = 100) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (m.rows() != m.cols()) throw PreconditionError("eigen_symmetric needs a square matrix");
  const Scalar tol = detail::jacobi_tolerance<Scalar>();
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol) {
    throw PreconditionError("eigen_symmetric needs a symmetric matrix");
  }

  const Eigen::Index n = m.rows();
  Matrix a = m;
  Matrix v = Matrix::Identity(n, n);
  auto off_diagonal = [&a, n] {
    Scalar worst(0);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) worst = std::max(worst, std::abs(a(i, j)));
    }
    return worst;
  };

  int sweeps = 0;
  while (off_diagonal() >= tol) {
    if (sweeps == max_sweeps) throw Error("Jacobi eigensolver did not converge");
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == Scalar(0)) continue;
        Eigen::JacobiRotation<Scalar> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        v.applyOnTheRight(p, q, rot);
        a(p, q) = a(q, p) = Scalar(0);
      }
    }
    ++sweeps;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&a](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

  EigenSystem<Scalar> out;
  out.sweeps = sweeps;
  out.values.resize(n);
  out.vectors.resize(n, n);
  const Scalar negligible = Scalar(1e-9);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src);
    auto col = out.vectors.col(k);
    col = v.col(src);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(col(i)) > negligible) {
        if (col(i) < Scalar(0)) col = -col;
        break;
      }
    }
  }
  return out;
}

/// Ascending Laplacian eigenvalues of `g`.
template <typename Scalar = double>
DenseVector<Scalar> laplacian_spectrum(const SignedGraph& g) {
  return eigen_symmetric(signed_laplacian<Scalar>(g)).values;
}

/// Number of eigenvalues with magnitude at most `tol`.
template <typename Scalar>
int zero_multiplicity(const DenseVector<Scalar>& values, Scalar tol = Scalar(1e-8)) {
  return static_cast<int>((values.array().abs() <= tol).count());
}

/// True iff the switchings of `g` by sigma1 and sigma2 share their sorted
/// spectrum within 1e-8. Both switched graphs must be balanced; throws
/// PreconditionError otherwise.
inline bool verify_isospectral(const SignedGraph& g, const SwitchingFunction& sigma1,
                               const SwitchingFunction& sigma2, double tol = 1e-8) {
  for (const auto* s : {&sigma1, &sigma2}) {
    if (!is_balanced(switch_signs(g, *s))) {
      throw PreconditionError("isospectrality requires balanced signed graphs");
    }
  }
  const auto a = eigen_symmetric(signed_laplacian<double>(g, sigma1)).values;
  const auto b = eigen_symmetric(signed_laplacian<double>(g, sigma2)).values;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

struct SpectralBipartition {
  std::vector<Vertex> plus;   // entries near +1
  std::vector<Vertex> minus;  // entries near -1
  DenseVector<double> vector;  // 0-eigenvector scaled to max |entry| = 1
};

/// Splits a connected balanced graph along the signs of its 0-eigenvector.
/// Throws PreconditionError when the graph is disconnected, unbalanced
/// (smallest eigenvalue above 1e-6) or the entries are not +-1 within 1e-6.
inline SpectralBipartition zero_eigenvector_bipartition(const SignedGraph& g) {
  if (g.vertex_count() == 0 || connected_components(g).size() != 1) {
    throw PreconditionError("zero-eigenvector bipartition needs a connected graph");
  }
  const auto sys = eigen_symmetric(signed_laplacian<double>(g));
  if (sys.values(0) > 1e-6) {
    throw PreconditionError("graph is unbalanced: smallest eigenvalue " +
                            std::to_string(sys.values(0)));
  }
  SpectralBipartition out;
  out.vector = sys.vectors.col(0);
  out.vector /= out.vector.cwiseAbs().maxCoeff();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const double x = out.vector(v);
    if (std::abs(std::abs(x) - 1.0) > 1e-6) {
      throw PreconditionError("0-eigenvector entry is not +-1");
    }
    (x > 0 ? out.plus : out.minus).push_back(v);
  }
  return out;
}

/// The signing of `underlying` selected by the bits of `mask`: edge i is
/// negative iff bit i is set. Requires fewer than 64 edges.
inline SignedGraph signing_from_mask(const SignedGraph& underlying, std::uint64_t mask) {
  if (underlying.edge_count() >= 64) throw GraphError("signing mask limited to 63 edges");
  std::vector<SignedEdge> edges(underlying.edges().begin(), underlying.edges().end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edges[i].sign = ((mask >> i) & 1U) != 0 ? Sign{-1} : Sign{1};
  }
  return SignedGraph(underlying.vertex_count(), std::move(edges),
                     {underlying.vertex_names().begin(), underlying.vertex_names().end()});
}

}  // namespace harary
