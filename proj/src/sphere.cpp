#include "ect/sphere.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "ect/errors.hpp"

namespace ect {

Direction random_direction(Rng& rng, int d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> raw(d);
  for (;;) {
    double norm2 = 0.0;
    for (auto& x : raw) {
      x = gauss(rng);
      norm2 += x * x;
    }
    if (norm2 > 1e-24) return Direction::normalized(raw);
  }
}

Direction random_in_cap(Rng& rng, const Direction& center, double radius) {
  if (!(radius > 0.0) || !(radius < M_PI / 2)) {
    throw Error(ErrorKind::BadRadius, "cap radius must lie in (0, pi/2)");
  }
  const int d = static_cast<int>(center.dim());
  if (d == 1) return center;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // Polar angle has density proportional to sin(theta)^(d-2) on [0, radius).
  double theta = 0.0;
  const double top = std::pow(std::sin(radius), d - 2);
  for (;;) {
    theta = radius * unit(rng);
    if (d == 2 || unit(rng) * top <= std::pow(std::sin(theta), d - 2)) break;
  }

  // Tangent direction: Gaussian with the center component removed.
  std::vector<double> tangent(d);
  double norm2 = 0.0;
  do {
    double along = 0.0;
    for (int k = 0; k < d; ++k) {
      tangent[k] = gauss(rng);
      along += tangent[k] * center[k];
    }
    norm2 = 0.0;
    for (int k = 0; k < d; ++k) {
      tangent[k] -= along * center[k];
      norm2 += tangent[k] * tangent[k];
    }
  } while (norm2 < 1e-24);
  const double inv = 1.0 / std::sqrt(norm2);
  std::vector<double> out(d);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for (int k = 0; k < d; ++k) out[k] = c * center[k] + s * tangent[k] * inv;
  return Direction::normalized(out);
}

double euclidean_distance(const Direction& a, const Direction& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  double d2 = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const double diff = a[k] - b[k];
    d2 += diff * diff;
  }
  return std::sqrt(d2);
}

double geodesic_distance(const Direction& a, const Direction& b) {
  const double chord = std::min(2.0, euclidean_distance(a, b));
  return 2.0 * std::asin(chord / 2.0);
}

std::vector<double> random_orthogonal(Rng& rng, int d, bool proper) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd g(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) g(r, c) = gauss(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  // Sign fix makes the distribution Haar.
  for (int c = 0; c < d; ++c) {
    if (rmat(c, c) < 0) q.col(c) *= -1.0;
  }
  if (proper && q.determinant() < 0) q.col(0) *= -1.0;
  std::vector<double> out(static_cast<std::size_t>(d) * d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) out[r * d + c] = q(r, c);
  }
  return out;
}

Direction apply(std::span<const double> matrix, const Direction& v) {
  const std::size_t d = v.dim();
  if (matrix.size() != d * d) throw Error(ErrorKind::InvalidArgument, "matrix must be d x d");
  std::vector<double> out(d, 0.0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) out[r] += matrix[r * d + c] * v[c];
  }
  return Direction::normalized(out);
}

}  // namespace ect
