#include "ect/persistence.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "ect/errors.hpp"

namespace ect {

int PersistenceDiagram::total_multiplicity() const noexcept {
  int total = 0;
  for (const auto& p : points) total += p.multiplicity;
  return total;
}

int PersistenceDiagram::essential_count() const noexcept {
  int total = 0;
  for (const auto& p : points) {
    if (p.death == kInfinity) total += p.multiplicity;
  }
  return total;
}

PersistenceDiagram make_diagram(std::vector<DiagramPoint> points) {
  std::sort(points.begin(), points.end(), [](const DiagramPoint& a, const DiagramPoint& b) {
    return std::tie(a.degree, a.birth, a.death) < std::tie(b.degree, b.birth, b.death);
  });
  PersistenceDiagram out;
  for (const auto& p : points) {
    if (p.multiplicity <= 0) continue;
    if (!out.points.empty()) {
      auto& last = out.points.back();
      if (last.degree == p.degree && last.birth == p.birth && last.death == p.death) {
        last.multiplicity += p.multiplicity;
        continue;
      }
    }
    out.points.push_back(p);
  }
  return out;
}

Filtration lower_star_filtration(const SimplicialComplex& complex, const Direction& v) {
  const auto h = heights(complex, v);
  require_distinct_heights(h, tie_tolerance(complex));
  Filtration f;
  f.ambient_dim = complex.ambient_dim();
  f.entries.reserve(complex.num_simplices());
  for (const auto& s : complex.simplices()) {
    double top = h[s.front()];
    for (int u : s) top = std::max(top, h[u]);
    f.entries.push_back({s, top});
  }
  std::sort(f.entries.begin(), f.entries.end(),
            [](const FiltrationEntry& a, const FiltrationEntry& b) {
              if (a.height != b.height) return a.height < b.height;
              if (a.simplex.size() != b.simplex.size()) return a.simplex.size() < b.simplex.size();
              return a.simplex < b.simplex;
            });
  return f;
}

namespace {

using Column = std::vector<int>;  // sorted ascending row indices

void add_into(Column& target, const Column& source, Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

}  // namespace

std::vector<PersistenceDiagram> persistence_diagrams(const Filtration& filtration) {
  const auto& entries = filtration.entries;
  const int m = static_cast<int>(entries.size());

  std::map<Simplex, int> position;
  for (int i = 0; i < m; ++i) position.emplace(entries[i].simplex, i);

  std::vector<Column> columns(m);
  Simplex face;
  for (int j = 0; j < m; ++j) {
    const Simplex& s = entries[j].simplex;
    if (s.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      face.clear();
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k != drop) face.push_back(s[k]);
      }
      auto it = position.find(face);
      if (it == position.end() || it->second >= j) {
        throw Error(ErrorKind::InvalidArgument, "filtration is not face-closed or out of order");
      }
      columns[j].push_back(it->second);
    }
    std::sort(columns[j].begin(), columns[j].end());
  }

  // Standard reduction: pivot_owner[row] = column whose lowest entry is row.
  std::vector<int> pivot_owner(m, -1);
  std::vector<bool> paired(m, false);
  Column scratch;
  std::vector<DiagramPoint> points;
  for (int j = 0; j < m; ++j) {
    Column& col = columns[j];
    while (!col.empty() && pivot_owner[col.back()] >= 0) {
      add_into(col, columns[pivot_owner[col.back()]], scratch);
    }
    if (col.empty()) continue;
    const int birth_index = col.back();
    pivot_owner[birth_index] = j;
    paired[birth_index] = paired[j] = true;
    const double birth = entries[birth_index].height;
    const double death = entries[j].height;
    if (birth != death) {
      points.push_back({birth, death, simplex_dim(entries[birth_index].simplex), 1});
    }
  }
  for (int i = 0; i < m; ++i) {
    if (!paired[i]) points.push_back({entries[i].height, kInfinity, simplex_dim(entries[i].simplex), 1});
  }

  const int degrees = std::max(filtration.ambient_dim, 1);
  std::vector<std::vector<DiagramPoint>> by_degree(degrees);
  for (const auto& p : points) {
    if (p.degree >= 0 && p.degree < degrees) by_degree[p.degree].push_back(p);
  }
  std::vector<PersistenceDiagram> out;
  out.reserve(degrees);
  for (auto& pts : by_degree) out.push_back(make_diagram(std::move(pts)));
  return out;
}

std::vector<PersistenceDiagram> pht(const SimplicialComplex& complex, const Direction& v) {
  return persistence_diagrams(lower_star_filtration(complex, v));
}

EulerCurve betti_curve(const PersistenceDiagram& diagram, int degree) {
  std::vector<Jump> raw;
  for (const auto& p : diagram.points) {
    if (p.degree != degree) continue;
    raw.push_back({p.birth, p.multiplicity});
    if (p.death != kInfinity) raw.push_back({p.death, -p.multiplicity});
  }
  return EulerCurve::from_jumps(std::move(raw));
}

}  // namespace ect
