#pragma once

// Reference computations that deliberately avoid the library routes they
// check: plain word expansion, Hermite normal forms of lattices over Z_(p),
// and naive Gaussian elimination.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "valtree/bttree.hpp"
#include "valtree/mat.hpp"
#include "valtree/multipoly.hpp"

namespace valtree::testing {

/// Every product of at most R letters from `letters`, kept once per matrix
/// (found by linear search with ==) with its minimal word length.
inline std::vector<std::pair<Mat, int>> brute_force_ball(const Field& f, std::size_t n, const std::vector<Mat>& letters,
                                                         int R) {
  std::vector<std::pair<Mat, int>> found{{Mat::identity(f, n), 0}};
  std::vector<Mat> words{Mat::identity(f, n)};
  for (int len = 1; len <= R; ++len) {
    std::vector<Mat> next;
    for (const auto& w : words)
      for (const auto& l : letters) next.push_back(w * l);
    for (const auto& m : next) {
      auto it = std::find_if(found.begin(), found.end(), [&](const auto& e) { return e.first == m; });
      if (it == found.end()) found.emplace_back(m, len);
    }
    words = std::move(next);
  }
  return found;
}

/// p-adic valuation of a nonzero rational, by repeated division.
inline std::int64_t naive_padic(const Rational& x, long p) {
  Integer num = x.num(), den = x.den();
  std::int64_t v = 0;
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  return v;
}

/// p^k for k >= 0.
inline Integer ipow(long p, std::int64_t k) {
  Integer r = 1;
  for (std::int64_t i = 0; i < k; ++i) r *= p;
  return r;
}

/// Canonical label of the homothety class spanned by the columns of a 2x2
/// rational basis over Z_(p): the normal form [[p^k, r], [0, 1]] with r a
/// fixed representative modulo p^k Z_(p).
inline std::string hermite_key(const Mat& basis, long p) {
  Rational a = basis(0, 0).as_rational(), b = basis(0, 1).as_rational();
  Rational c = basis(1, 0).as_rational(), d = basis(1, 1).as_rational();
  // Column operations over Z_(p): pivot on the bottom entry of least valuation.
  auto val = [&](const Rational& x) { return x.is_zero() ? INT64_MAX : naive_padic(x, p); };
  if (val(c) < val(d)) {
    std::swap(a, b);
    std::swap(c, d);
  }
  // Now d has least valuation in the bottom row; clear c.
  const Rational q = c / d;
  a = a - q * b;
  // Lattice columns (a, 0) and (b, d). Scale by the units to p-powers.
  const std::int64_t va = val(a), vd = val(d);
  const Rational ud = d / Rational(vd >= 0 ? ipow(p, vd) : Integer(1), vd >= 0 ? Integer(1) : ipow(p, -vd));
  b = b / ud;
  // Homothety by p^-vd: bottom entry 1, top-left p^(va - vd).
  const std::int64_t k = va - vd;
  const Rational scale = vd >= 0 ? Rational(Integer(1), ipow(p, vd)) : Rational(ipow(p, -vd));
  Rational r = b * scale;
  // r modulo p^k Z_(p): write r = p^v u/w with p not dividing u w.
  std::string rep = "0";
  if (!r.is_zero()) {
    const std::int64_t v = naive_padic(r, p);
    if (v < k) {
      const Integer mod = ipow(p, k - v);
      const Rational unit = r * (v >= 0 ? Rational(Integer(1), ipow(p, v)) : Rational(ipow(p, -v)));
      Integer u = unit.num(), w = unit.den(), winv;
      mpz_invert(winv.get_mpz_t(), w.get_mpz_t(), mod.get_mpz_t());
      Integer residue = (u * winv) % mod;
      if (residue < 0) residue += mod;
      rep = Rational(residue).str() + "*p^" + std::to_string(v);
    }
  }
  return std::to_string(k) + "|" + rep;
}

/// Vertices of the tree within `radius` of the base vertex, discovered through
/// the library's neighbour enumeration and identified by Hermite keys.
struct TreeBall {
  std::vector<Vertex> vertices;
  std::vector<int> depth;
  std::vector<std::vector<int>> adj;
};

inline TreeBall tree_ball(unsigned long p, int radius) {
  const Valuation v = Valuation::padic(p);
  TreeBall t;
  std::unordered_map<std::string, int> id;
  t.vertices.push_back(base_vertex(2, v));
  t.depth.push_back(0);
  t.adj.emplace_back();
  id.emplace(hermite_key(t.vertices[0].basis(), static_cast<long>(p)), 0);
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    if (t.depth[i] == radius) continue;
    for (auto& nb : neighbors(t.vertices[i])) {
      const std::string key = hermite_key(nb.basis(), static_cast<long>(p));
      auto it = id.find(key);
      int j;
      if (it == id.end()) {
        j = static_cast<int>(t.vertices.size());
        id.emplace(key, j);
        t.vertices.push_back(std::move(nb));
        t.depth.push_back(t.depth[i] + 1);
        t.adj.emplace_back();
      } else {
        j = it->second;
      }
      if (std::find(t.adj[i].begin(), t.adj[i].end(), j) == t.adj[i].end()) {
        t.adj[i].push_back(j);
        t.adj[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
      }
    }
  }
  return t;
}

/// Graph distances from `src` by breadth-first search.
inline std::vector<int> bfs(const TreeBall& t, int src) {
  std::vector<int> dist(t.vertices.size(), -1);
  std::vector<int> queue{src};
  dist[static_cast<std::size_t>(src)] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int u = queue[h];
    for (int w : t.adj[static_cast<std::size_t>(u)])
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

/// Rank of a list of rational rows by plain Gaussian elimination.
inline std::size_t naive_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Q-rank of polynomials from their coefficient table.
inline std::size_t poly_rank(const std::vector<MultiPoly>& ps) {
  std::map<Monomial, std::size_t> col;
  for (const auto& p : ps)
    for (const auto& [m, c] : p.terms()) col.emplace(m, col.size());
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : ps) {
    std::vector<Rational> r(col.size(), Rational(0));
    for (const auto& [m, c] : p.terms()) r[col.at(m)] = c;
    rows.push_back(std::move(r));
  }
  return naive_rank(rows);
}

/// Rank over Q of flattened rational matrices.
inline std::size_t flattened_rank(const std::vector<Mat>& ms) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& m : ms) {
    std::vector<Rational> r;
    for (const auto& e : m.entries()) r.push_back(e.as_rational());
    rows.push_back(std::move(r));
  }
  return naive_rank(rows);
}

}  // namespace valtree::testing
