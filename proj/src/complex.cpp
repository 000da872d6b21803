#include "ect/complex.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "ect/errors.hpp"
#include "ect/kernels.hpp"

namespace ect {

namespace {

std::string describe(const Simplex& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << ']';
  return os.str();
}

// Every nonempty subset of `s`, excluding `s` itself.
void proper_faces(const Simplex& s, std::vector<Simplex>& out) {
  const std::size_t k = s.size();
  const std::uint32_t full = (1u << k) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    Simplex face;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) face.push_back(s[i]);
    }
    out.push_back(std::move(face));
  }
}

bool simplex_order(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Direction Direction::normalized(std::span<const double> raw) {
  double norm2 = 0.0;
  for (double x : raw) {
    if (!std::isfinite(x)) throw Error(ErrorKind::InvalidArgument, "direction has non-finite component");
    norm2 += x * x;
  }
  if (raw.empty() || norm2 == 0.0) {
    throw Error(ErrorKind::InvalidArgument, "cannot normalize a zero direction");
  }
  const double norm = std::sqrt(norm2);
  Direction d;
  d.c_.reserve(raw.size());
  for (double x : raw) d.c_.push_back(x / norm);
  return d;
}

Direction Direction::from_unit(std::span<const double> unit) {
  double norm2 = 0.0;
  for (double x : unit) norm2 += x * x;
  if (unit.empty() || !(std::abs(std::sqrt(norm2) - 1.0) <= kUnitTolerance)) {
    throw Error(ErrorKind::InvalidArgument, "direction is not a unit vector");
  }
  Direction d;
  d.c_.assign(unit.begin(), unit.end());
  return d;
}

double Direction::dot(std::span<const double> x) const {
  if (x.size() != c_.size()) {
    throw Error(ErrorKind::InvalidArgument, "dimension mismatch in dot product");
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < c_.size(); ++k) acc = acc + c_[k] * x[k];
  return acc;
}

Direction Direction::operator-() const {
  Direction d;
  d.c_.reserve(c_.size());
  for (double x : c_) d.c_.push_back(-x);
  return d;
}

SimplicialComplex::SimplicialComplex(int ambient_dim, std::vector<double> coordinates,
                                     std::vector<Simplex> simplices)
    : dim_(ambient_dim), coords_(std::move(coordinates)), simplices_(std::move(simplices)) {
  if (dim_ < 1) throw Error(ErrorKind::InvalidArgument, "ambient dimension must be positive");
  if (coords_.size() % static_cast<std::size_t>(dim_) != 0) {
    throw Error(ErrorKind::InvalidArgument, "coordinate count is not a multiple of the dimension");
  }
  n_ = coords_.size() / static_cast<std::size_t>(dim_);
  for (std::size_t i = 0; i < n_; ++i) {
    double norm2 = 0.0;
    for (int k = 0; k < dim_; ++k) norm2 += coords_[i * dim_ + k] * coords_[i * dim_ + k];
    max_norm_ = std::max(max_norm_, std::sqrt(norm2));
    for (std::size_t j = 0; j < i; ++j) {
      double d2 = 0.0;
      for (int k = 0; k < dim_; ++k) {
        const double diff = coords_[i * dim_ + k] - coords_[j * dim_ + k];
        d2 += diff * diff;
      }
      diameter_ = std::max(diameter_, std::sqrt(d2));
    }
  }
}

SimplicialComplex SimplicialComplex::from_generators(int ambient_dim,
                                                     std::vector<double> coordinates,
                                                     const std::vector<Simplex>& generators) {
  if (ambient_dim < 1) throw Error(ErrorKind::InvalidArgument, "ambient dimension must be positive");
  const std::size_t n = coordinates.size() / static_cast<std::size_t>(ambient_dim);
  std::set<Simplex> closed;
  for (std::size_t i = 0; i < n; ++i) closed.insert(Simplex{static_cast<int>(i)});
  std::vector<Simplex> faces;
  for (Simplex g : generators) {
    if (g.empty()) continue;
    if (g.size() > 31) throw Error(ErrorKind::InvalidArgument, "simplex too large");
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    faces.clear();
    proper_faces(g, faces);
    closed.insert(g);
    closed.insert(faces.begin(), faces.end());
  }
  std::vector<Simplex> simplices(closed.begin(), closed.end());
  std::stable_sort(simplices.begin(), simplices.end(), simplex_order);
  return SimplicialComplex(ambient_dim, std::move(coordinates), std::move(simplices));
}

std::span<const double> SimplicialComplex::vertex(std::size_t i) const {
  if (i >= n_) throw std::out_of_range("vertex index out of range");
  return std::span<const double>(coords_).subspan(i * dim_, dim_);
}

int SimplicialComplex::top_dimension() const noexcept {
  int top = -1;
  for (const auto& s : simplices_) top = std::max(top, simplex_dim(s));
  return top;
}

int SimplicialComplex::euler_characteristic() const noexcept { return euler_char(simplices_); }

SimplicialComplex SimplicialComplex::linear_image(std::span<const double> matrix) const {
  if (matrix.size() != static_cast<std::size_t>(dim_ * dim_)) {
    throw Error(ErrorKind::InvalidArgument, "matrix must be d x d");
  }
  std::vector<double> out(coords_.size());
  for (std::size_t i = 0; i < n_; ++i) {
    for (int r = 0; r < dim_; ++r) {
      double acc = 0.0;
      for (int c = 0; c < dim_; ++c) acc += matrix[r * dim_ + c] * coords_[i * dim_ + c];
      out[i * dim_ + r] = acc;
    }
  }
  return SimplicialComplex(dim_, std::move(out), simplices_);
}

SimplicialComplex SimplicialComplex::translated(std::span<const double> offset) const {
  if (offset.size() != static_cast<std::size_t>(dim_)) {
    throw Error(ErrorKind::InvalidArgument, "offset must have length d");
  }
  std::vector<double> out(coords_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (int k = 0; k < dim_; ++k) out[i * dim_ + k] += offset[k];
  }
  return SimplicialComplex(dim_, std::move(out), simplices_);
}

const char* to_string(Violation::Kind kind) noexcept {
  using K = Violation::Kind;
  switch (kind) {
    case K::IndexOutOfRange: return "index out of range";
    case K::UnsortedSimplex: return "unsorted simplex";
    case K::EmptySimplex: return "empty simplex";
    case K::DuplicateSimplex: return "duplicate simplex";
    case K::MissingFace: return "missing face";
    case K::MissingVertex: return "missing vertex";
    case K::DuplicateVertex: return "duplicate vertex";
    case K::NonFiniteCoordinate: return "non-finite coordinate";
    case K::AffinelyDependent: return "affinely dependent";
  }
  return "unknown";
}

ValidationReport validate(const SimplicialComplex& complex) {
  using K = Violation::Kind;
  ValidationReport report;
  auto flag = [&](K kind, const Simplex& s, const std::string& detail) {
    report.violations.push_back({kind, std::string(to_string(kind)) + ": " + detail, s});
  };

  const int d = complex.ambient_dim();
  const int n = static_cast<int>(complex.num_vertices());
  const auto coords = complex.coordinates();

  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k) {
      if (!std::isfinite(coords[i * d + k])) {
        flag(K::NonFiniteCoordinate, {i}, "vertex " + std::to_string(i));
        break;
      }
    }
  }
  std::map<std::vector<double>, int> seen_coords;
  for (int i = 0; i < n; ++i) {
    std::vector<double> key(coords.begin() + i * d, coords.begin() + (i + 1) * d);
    auto [it, inserted] = seen_coords.emplace(std::move(key), i);
    if (!inserted) {
      flag(K::DuplicateVertex, {i},
           "vertex " + std::to_string(i) + " coincides with vertex " + std::to_string(it->second));
    }
  }

  std::set<Simplex> present;
  std::vector<bool> structurally_ok(complex.num_simplices(), false);
  for (std::size_t idx = 0; idx < complex.num_simplices(); ++idx) {
    const Simplex& s = complex.simplices()[idx];
    if (s.empty()) {
      flag(K::EmptySimplex, s, "simplex #" + std::to_string(idx));
      continue;
    }
    bool ok = true;
    for (int v : s) {
      if (v < 0 || v >= n) {
        flag(K::IndexOutOfRange, s, describe(s) + " references vertex " + std::to_string(v));
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end()) {
      flag(K::UnsortedSimplex, s, describe(s) + " is not strictly increasing");
      continue;
    }
    if (!present.insert(s).second) {
      flag(K::DuplicateSimplex, s, describe(s));
      continue;
    }
    structurally_ok[idx] = true;
  }

  for (int i = 0; i < n; ++i) {
    if (!present.count(Simplex{i})) {
      flag(K::MissingVertex, {i}, "vertex " + std::to_string(i) + " has no 0-simplex");
    }
  }

  std::vector<Simplex> faces;
  const double affine_tol = kAffineTolerance * complex.diameter();
  for (std::size_t idx = 0; idx < complex.num_simplices(); ++idx) {
    if (!structurally_ok[idx]) continue;
    const Simplex& s = complex.simplices()[idx];
    if (s.size() > 1 && s.size() <= 31) {
      faces.clear();
      proper_faces(s, faces);
      for (const auto& f : faces) {
        if (!present.count(f)) {
          flag(K::MissingFace, s, describe(s) + " lacks face " + describe(f));
          break;
        }
      }
    }
    if (s.size() >= 2) {
      const int k = static_cast<int>(s.size()) - 1;
      if (k > d) {
        flag(K::AffinelyDependent, s, describe(s) + " has more than d+1 vertices");
        continue;
      }
      Eigen::MatrixXd edges(k, d);
      for (int r = 0; r < k; ++r) {
        for (int c = 0; c < d; ++c) {
          edges(r, c) = coords[s[r + 1] * d + c] - coords[s[0] * d + c];
        }
      }
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(edges);
      const double smallest = svd.singularValues()(k - 1);
      if (!(smallest > affine_tol)) {
        flag(K::AffinelyDependent, s, describe(s));
      }
    }
  }
  return report;
}

std::vector<double> heights(const SimplicialComplex& complex, const Direction& v) {
  if (v.dim() != static_cast<std::size_t>(complex.ambient_dim())) {
    throw Error(ErrorKind::InvalidArgument, "direction dimension does not match the complex");
  }
  std::vector<double> h(complex.num_vertices());
  kernels::dot_rows(complex.coordinates(), v.dim(), v.components(), h);
  return h;
}

double tie_tolerance(const SimplicialComplex& complex) noexcept {
  return kTieTolerance * complex.diameter();
}

void require_distinct_heights(std::span<const double> h, double tol) {
  if (h.size() < 2) return;
  std::vector<int> order(h.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return h[a] < h[b]; });
  int worst = -1;
  double worst_gap = 0.0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const double gap = h[order[i]] - h[order[i - 1]];
    if (gap <= tol && (worst < 0 || gap < worst_gap)) {
      worst = static_cast<int>(i);
      worst_gap = gap;
    }
  }
  if (worst >= 0) {
    const int a = std::min(order[worst - 1], order[worst]);
    const int b = std::max(order[worst - 1], order[worst]);
    throw TieError(a, b, h[order[worst]]);
  }
}

std::vector<int> simplex_owners(const SimplicialComplex& complex, std::span<const double> h) {
  std::vector<int> owners;
  owners.reserve(complex.num_simplices());
  for (const auto& s : complex.simplices()) {
    int best = s.front();
    for (int v : s) {
      if (h[v] >= h[best]) best = v;
    }
    owners.push_back(best);
  }
  return owners;
}

SimplexSet lower_star(const SimplicialComplex& complex, int vertex, const Direction& v) {
  if (vertex < 0 || static_cast<std::size_t>(vertex) >= complex.num_vertices()) {
    throw std::out_of_range("vertex index out of range");
  }
  const auto h = heights(complex, v);
  require_distinct_heights(h, tie_tolerance(complex));
  SimplexSet out;
  for (const auto& s : complex.simplices()) {
    if (!std::binary_search(s.begin(), s.end(), vertex)) continue;
    const bool is_max = std::all_of(s.begin(), s.end(), [&](int u) { return h[u] <= h[vertex]; });
    if (is_max) out.push_back(s);
  }
  return out;
}

SimplexSet star(const SimplicialComplex& complex, int vertex) {
  SimplexSet out;
  for (const auto& s : complex.simplices()) {
    if (std::binary_search(s.begin(), s.end(), vertex)) out.push_back(s);
  }
  return out;
}

int euler_char(const SimplexSet& set) noexcept {
  int chi = 0;
  for (const auto& s : set) chi += (simplex_dim(s) % 2 == 0) ? 1 : -1;
  return chi;
}

}  // namespace ect
