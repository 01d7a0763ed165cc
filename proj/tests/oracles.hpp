#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's linear algebra: vectors are plain digit lists and
// field arithmetic is polynomial arithmetic done from scratch.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;
using VecSet = std::set<Vec>;

// GF(p^k) by explicit polynomial multiplication and reduction. Elements are
// digit-encoded, low coefficient first, as everywhere in the library.
struct PolyField {
  int p, k, q;
  std::vector<int> modulus;  // monic, low degree first, size k + 1

  PolyField(int p_, int k_, std::vector<int> mod) : p(p_), k(k_), q(1), modulus(std::move(mod)) {
    for (int i = 0; i < k; ++i) q *= p;
    if (k == 1) modulus = {0, 1};
  }

  std::vector<int> digits(int a) const {
    std::vector<int> d(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i, a /= p) d[i] = a % p;
    return d;
  }
  int encode(const std::vector<int>& d) const {
    int a = 0;
    for (int i = k - 1; i >= 0; --i) a = a * p + d[i];
    return a;
  }
  int add(int a, int b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < k; ++i) x[i] = (x[i] + y[i]) % p;
    return encode(x);
  }
  int neg(int a) const {
    auto x = digits(a);
    for (auto& c : x) c = (p - c) % p;
    return encode(x);
  }
  int mul(int a, int b) const {
    const auto x = digits(a), y = digits(b);
    std::vector<int> prod(static_cast<std::size_t>(2 * k), 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (int deg = 2 * k - 1; deg >= k; --deg) {
      const int c = prod[deg];
      if (!c) continue;
      for (int i = 0; i <= k; ++i) prod[deg - k + i] = ((prod[deg - k + i] - c * modulus[i]) % p + p) % p;
    }
    prod.resize(static_cast<std::size_t>(k));
    return encode(prod);
  }
};

// Monic polynomial over GF(p) with no factorization into two monic factors
// of positive degree, found by multiplying out every pair.
inline bool irreducible_by_products(int p, const std::vector<int>& poly) {
  const int deg = static_cast<int>(poly.size()) - 1;
  auto all_monic = [p](int d) {
    std::vector<std::vector<int>> out;
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int c = 0; c < count; ++c) {
      std::vector<int> f(static_cast<std::size_t>(d + 1));
      int x = c;
      for (int i = 0; i < d; ++i, x /= p) f[i] = x % p;
      f[d] = 1;
      out.push_back(f);
    }
    return out;
  };
  for (int d = 1; d < deg; ++d)
    for (const auto& f : all_monic(d))
      for (const auto& g : all_monic(deg - d)) {
        std::vector<int> h(static_cast<std::size_t>(deg + 1), 0);
        for (std::size_t i = 0; i < f.size(); ++i)
          for (std::size_t j = 0; j < g.size(); ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
        if (h == poly) return false;
      }
  return true;
}

// Every vector of F_q^n.
inline std::vector<Vec> all_vectors(int q, int n) {
  std::vector<Vec> out;
  Vec v(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(v);
    int i = n - 1;
    while (i >= 0 && ++v[i] == q) v[i--] = 0;
    if (i < 0) return out;
  }
}

// The set of all linear combinations of gens.
inline VecSet span(const PolyField& f, int n, const std::vector<Vec>& gens) {
  VecSet s{Vec(static_cast<std::size_t>(n), 0)};
  for (const auto& g : gens) {
    VecSet next;
    for (const auto& v : s)
      for (int c = 0; c < f.q; ++c) {
        Vec w = v;
        for (int i = 0; i < n; ++i) w[i] = f.add(w[i], f.mul(c, g[i]));
        next.insert(w);
      }
    s = std::move(next);
  }
  return s;
}

inline int log_q(std::size_t size, int q) {
  int d = 0;
  for (std::size_t s = 1; s < size; s *= static_cast<std::size_t>(q)) ++d;
  return d;
}

// Every subspace of F_q^n as a vector set, found by closing {0} under
// adjoining single vectors.
inline std::set<VecSet> all_subspaces(const PolyField& f, int n) {
  std::set<VecSet> seen;
  std::vector<VecSet> frontier{span(f, n, {})};
  seen.insert(frontier.front());
  const auto vecs = all_vectors(f.q, n);
  while (!frontier.empty()) {
    std::vector<VecSet> next;
    for (const auto& s : frontier)
      for (const auto& v : vecs) {
        if (s.count(v)) continue;
        std::vector<Vec> gens(s.begin(), s.end());
        gens.push_back(v);
        // Spanning all of s is wasteful but keeps the oracle obviously right.
        VecSet t = span(f, n, gens);
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    frontier = std::move(next);
  }
  return seen;
}

inline VecSet intersect(const VecSet& a, const VecSet& b) {
  VecSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

inline bool subset(const VecSet& a, const VecSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline int leading_index(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) return static_cast<int>(i) + 1;
  return 0;
}

// Rank of an integer matrix over Q by fraction-free elimination in long
// double-free exact arithmetic (entries stay small in the tests).
inline int rational_rank(std::vector<std::vector<long long>> m) {
  int rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    const auto& pr = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const long long a = pr[c], b = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] * a - pr[k] * b;
      long long g = 0;
      for (auto x : m[r]) g = std::gcd(g, x < 0 ? -x : x);
      if (g > 1)
        for (auto& x : m[r]) x /= g;
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
