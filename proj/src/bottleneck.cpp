#include <algorithm>
#include <cmath>
#include <vector>

#include "ect/persistence.hpp"

namespace ect {

namespace {

struct Point {
  double birth;
  double death;
};

double linf(const Point& a, const Point& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double to_diagonal(const Point& p) { return 0.5 * (p.death - p.birth); }

// Perfect matching test on the diagonal-augmented bipartite graph, by
// repeated augmenting paths (Kuhn).
class Matcher {
 public:
  Matcher(const std::vector<Point>& a, const std::vector<Point>& b) : a_(a), b_(b) {}

  bool feasible(double delta) {
    const std::size_t na = a_.size();
    const std::size_t nb = b_.size();
    const std::size_t n = na + nb;
    // Left: a_0..a_{na-1}, then diagonal copies of b. Right: b_0..b_{nb-1},
    // then diagonal copies of a.
    adj_.assign(n, {});
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < nb; ++j) {
        if (linf(a_[i], b_[j]) <= delta) adj_[i].push_back(j);
      }
      if (to_diagonal(a_[i]) <= delta) adj_[i].push_back(nb + i);
    }
    for (std::size_t j = 0; j < nb; ++j) {
      if (to_diagonal(b_[j]) <= delta) adj_[na + j].push_back(j);
      for (std::size_t i = 0; i < na; ++i) adj_[na + j].push_back(nb + i);
    }
    match_right_.assign(n, -1);
    for (std::size_t u = 0; u < n; ++u) {
      visited_.assign(n, false);
      if (!augment(static_cast<int>(u))) return false;
    }
    return true;
  }

 private:
  bool augment(int u) {
    for (int r : adj_[u]) {
      if (visited_[r]) continue;
      visited_[r] = true;
      if (match_right_[r] < 0 || augment(match_right_[r])) {
        match_right_[r] = u;
        return true;
      }
    }
    return false;
  }

  const std::vector<Point>& a_;
  const std::vector<Point>& b_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_right_;
  std::vector<bool> visited_;
};

double finite_bottleneck(const std::vector<Point>& a, const std::vector<Point>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::vector<double> candidates{0.0};
  for (const auto& p : a) candidates.push_back(to_diagonal(p));
  for (const auto& q : b) candidates.push_back(to_diagonal(q));
  for (const auto& p : a) {
    for (const auto& q : b) candidates.push_back(linf(p, q));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  Matcher matcher(a, b);
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;  // always feasible: everything to the diagonal
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (matcher.feasible(candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

}  // namespace

double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  int max_degree = -1;
  for (const auto& p : a.points) max_degree = std::max(max_degree, p.degree);
  for (const auto& p : b.points) max_degree = std::max(max_degree, p.degree);

  double result = 0.0;
  for (int degree = 0; degree <= max_degree; ++degree) {
    std::vector<Point> fa, fb;
    std::vector<double> ea, eb;
    auto collect = [degree](const PersistenceDiagram& dgm, std::vector<Point>& finite,
                            std::vector<double>& essential) {
      for (const auto& p : dgm.points) {
        if (p.degree != degree) continue;
        for (int m = 0; m < p.multiplicity; ++m) {
          if (p.death == kInfinity) {
            essential.push_back(p.birth);
          } else {
            finite.push_back({p.birth, p.death});
          }
        }
      }
    };
    collect(a, fa, ea);
    collect(b, fb, eb);
    if (ea.size() != eb.size()) return kInfinity;
    // Sorted order is optimal for the bottleneck cost on a line.
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    for (std::size_t i = 0; i < ea.size(); ++i) result = std::max(result, std::abs(ea[i] - eb[i]));
    result = std::max(result, finite_bottleneck(fa, fb));
  }
  return result;
}

}  // namespace ect
