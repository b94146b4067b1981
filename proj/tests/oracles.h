// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference computations shared by the tests. None of them
// call into the simplex code.

#ifndef CTN_TESTS_ORACLES_H_
#define CTN_TESTS_ORACLES_H_

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <optional>
#include <vector>

namespace ctn::oracles {

// Vertex enumeration oracle: every basic solution is obtained by turning n of
// the inequalities into equalities and solving by Gaussian elimination.
// Only valid for bounded feasible regions given as inequalities.
struct Halfspace {
  std::vector<mpq_class> a;
  mpq_class b;  // a.x <= b
};

inline std::optional<std::vector<mpq_class>> SolveSquare(
    std::vector<std::vector<mpq_class>> m, std::vector<mpq_class> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const mpq_class f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<mpq_class> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

inline std::optional<mpq_class> VertexOracleMax(const std::vector<Halfspace>& hs,
                                         const std::vector<mpq_class>& c) {
  const std::size_t n = c.size();
  std::optional<mpq_class> best;
  std::vector<std::size_t> pick(n);
  // Iterate all n-subsets of the halfspaces.
  std::vector<bool> mask(hs.size(), false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(n), true);
  std::sort(mask.begin(), mask.end(), std::greater<>());
  do {
    std::vector<std::vector<mpq_class>> m;
    std::vector<mpq_class> rhs;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      if (!mask[i]) continue;
      m.push_back(hs[i].a);
      rhs.push_back(hs[i].b);
    }
    auto x = SolveSquare(m, rhs);
    if (!x) continue;
    bool ok = true;
    for (const Halfspace& h : hs) {
      mpq_class lhs = 0;
      for (std::size_t k = 0; k < n; ++k) lhs += h.a[k] * (*x)[k];
      if (lhs > h.b) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    mpq_class v = 0;
    for (std::size_t k = 0; k < n; ++k) v += c[k] * (*x)[k];
    if (!best || v > *best) best = v;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return best;
}

// Best lottery value over `points` (with `values`) whose mean satisfies
// every row of `rows` (a.x <= b over point coordinates). Enumerates the
// vertices of the weight polytope.
inline std::optional<mpq_class> LotteryOracleMax(
    const std::vector<std::vector<long>>& points,
    const std::vector<mpq_class>& values, const std::vector<Halfspace>& rows) {
  const std::size_t m = points.size();
  std::vector<Halfspace> hs;
  for (std::size_t j = 0; j < m; ++j) {
    Halfspace h{std::vector<mpq_class>(m, 0), 0};
    h.a[j] = -1;
    hs.push_back(h);
  }
  hs.push_back({std::vector<mpq_class>(m, 1), 1});
  hs.push_back({std::vector<mpq_class>(m, -1), -1});
  for (const Halfspace& r : rows) {
    Halfspace h{std::vector<mpq_class>(m, 0), r.b};
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < r.a.size(); ++k) h.a[j] += r.a[k] * points[j][k];
    }
    hs.push_back(h);
  }
  return VertexOracleMax(hs, values);
}

// Finite tables keyed by integer points; absent points are -inf.
using Point = std::vector<long>;
using Table = std::map<Point, mpq_class>;

// The exchange definition of M-natural concavity, checked literally:
// for x, y in dom and x_u > y_u, either moving a unit of u from x to y keeps
// the sum, or some v with x_v < y_v can be traded back.
inline bool MSharpConcaveOracle(const Table& f) {
  auto value = [&f](const Point& z) -> std::optional<mpq_class> {
    auto it = f.find(z);
    if (it == f.end()) return std::nullopt;
    return it->second;
  };
  for (const auto& [x, fx] : f) {
    for (const auto& [y, fy] : f) {
      for (std::size_t u = 0; u < x.size(); ++u) {
        if (x[u] <= y[u]) continue;
        Point xu = x, yu = y;
        --xu[u];
        ++yu[u];
        bool ok = false;
        auto a = value(xu), b = value(yu);
        if (a && b && fx + fy <= *a + *b) ok = true;
        for (std::size_t v = 0; !ok && v < x.size(); ++v) {
          if (x[v] >= y[v]) continue;
          Point xv = xu, yv = yu;
          ++xv[v];
          --yv[v];
          auto c = value(xv), d = value(yv);
          if (c && d && fx + fy <= *c + *d) ok = true;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

// Symmetric exchange for point sets.
inline bool MConvexSetOracle(const std::set<Point>& b) {
  for (const Point& x : b) {
    for (const Point& y : b) {
      for (std::size_t u = 0; u < x.size(); ++u) {
        if (x[u] <= y[u]) continue;
        bool ok = false;
        for (std::size_t v = 0; !ok && v < x.size(); ++v) {
          if (x[v] >= y[v]) continue;
          Point xv = x, yv = y;
          --xv[u];
          ++xv[v];
          ++yv[u];
          --yv[v];
          ok = b.count(xv) > 0 && b.count(yv) > 0;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

// values[S] over bitmasks of an n-element ground set.
inline bool SubmodularOracle(const std::vector<long>& values) {
  for (std::size_t s = 0; s < values.size(); ++s) {
    for (std::size_t t = 0; t < values.size(); ++t) {
      if (values[s] + values[t] < values[s | t] + values[s & t]) return false;
    }
  }
  return true;
}

inline bool MonotoneOracle(const std::vector<long>& values) {
  for (std::size_t s = 0; s < values.size(); ++s) {
    for (std::size_t t = 0; t < values.size(); ++t) {
      if ((s & t) == s && values[s] > values[t]) return false;
    }
  }
  return true;
}

}  // namespace ctn::oracles

#endif  // CTN_TESTS_ORACLES_H_
