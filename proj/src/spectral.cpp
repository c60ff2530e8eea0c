#include "nbnc/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "nbnc/error.hpp"

namespace nbnc {

double SymmetricMatrix::trace() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < order_; ++i) sum += (*this)(i, i);
  return sum;
}

double SymmetricMatrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

SymmetricMatrix laplacian(const Graph& g) {
  SymmetricMatrix l(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    auto row = g.neighbors(u);
    l.set(u, u, static_cast<double>(row.size()));
    for (NodeId v : row) l.set(u, v, -1.0);
  }
  return l;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) sum += a[p * n + q] * a[p * n + q];
  }
  return std::sqrt(2.0 * sum);
}

// Annihilates a[p][q] with a plane rotation applied from both sides.
void rotate(std::vector<double>& a, std::size_t n, std::size_t p, std::size_t q) {
  double apq = a[p * n + q];
  double app = a[p * n + p];
  double aqq = a[q * n + q];
  double theta = (aqq - app) / (2.0 * apq);
  double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  double c = 1.0 / std::sqrt(t * t + 1.0);
  double s = t * c;
  double tau = s / (1.0 + c);

  a[p * n + p] = app - t * apq;
  a[q * n + q] = aqq + t * apq;
  a[p * n + q] = a[q * n + p] = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    double arp = a[r * n + p];
    double arq = a[r * n + q];
    double new_rp = arp - s * (arq + tau * arp);
    double new_rq = arq + s * (arp - tau * arq);
    a[r * n + p] = a[p * n + r] = new_rp;
    a[r * n + q] = a[q * n + r] = new_rq;
  }
}

}  // namespace

Spectrum eigenvalues(const SymmetricMatrix& m) {
  const std::size_t n = m.order();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  }
  const double tolerance = kOffDiagonalTolerance * std::max(1.0, m.max_abs());

  double residual = off_diagonal_norm(a, n);
  int sweep = 0;
  while (residual >= tolerance) {
    if (sweep++ == kMaxJacobiSweeps) {
      throw NumericError("Jacobi eigensolver did not converge in " +
                             std::to_string(kMaxJacobiSweeps) + " sweeps",
                         residual);
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p * n + q] != 0.0) rotate(a, n, p, q);
      }
    }
    residual = off_diagonal_norm(a, n);
  }

  Spectrum spectrum;
  spectrum.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) spectrum.values.push_back(a[i * n + i]);
  std::sort(spectrum.values.begin(), spectrum.values.end());
  return spectrum;
}

double algebraic_connectivity(const Graph& g) {
  if (g.node_count() < 2) {
    throw ArgumentError("algebraic connectivity needs at least 2 nodes, got " +
                        std::to_string(g.node_count()));
  }
  if (connected_components(g).component_count > 1) return 0.0;
  double lambda2 = eigenvalues(laplacian(g)).values[1];
  return lambda2 <= kZeroEigenvalueTolerance ? 0.0 : lambda2;
}

double algebraic_connectivity_ratio(const Graph& g) {
  return algebraic_connectivity(g) / static_cast<double>(g.node_count());
}

}  // namespace nbnc
