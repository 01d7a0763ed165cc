#include "qshell/subspace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "qshell/errors.hpp"

namespace qshell {
namespace {

mpz_class mpz_pow(int base, int exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return r;
}

std::strong_ordering compare_entries(std::span<const Elem> a, std::span<const Elem> b, const ElementOrder& order) {
  for (std::size_t c = 0; c < a.size(); ++c) {
    const Elem x = order.rank(a[c]);
    const Elem y = order.rank(b[c]);
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

// Two equidimensional subspaces share U_1..U_{e-1} exactly when their bottom
// e-1 reduced rows agree, and the least vector of each layer is its reduced
// row (see layer_min). Comparing rows bottom-up is therefore the tower order.
std::strong_ordering tower_order(const Subspace& u, const Subspace& v, const ElementOrder& order) {
  for (int e = u.dim() - 1; e >= 0; --e) {
    auto c = compare_entries(u.row(e), v.row(e), order);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// Every reduced row echelon r x n matrix over GF(q), grouped by pivot set.
std::vector<Subspace> rref_matrices(int n, int r, int q) {
  std::vector<Subspace> out;
  if (r == 0) {
    out.push_back(Subspace::zero(n));
    return out;
  }
  std::vector<int> piv(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) piv[i] = i;
  while (true) {
    std::vector<std::pair<int, int>> free_slots;
    for (int i = 0; i < r; ++i)
      for (int c = piv[i] + 1; c < n; ++c)
        if (!std::binary_search(piv.begin(), piv.end(), c)) free_slots.emplace_back(i, c);
    std::vector<Elem> rows(static_cast<std::size_t>(r) * n, 0);
    for (int i = 0; i < r; ++i) rows[static_cast<std::size_t>(i) * n + piv[i]] = 1;
    std::vector<int> digit(free_slots.size(), 0);
    while (true) {
      for (std::size_t s = 0; s < free_slots.size(); ++s)
        rows[static_cast<std::size_t>(free_slots[s].first) * n + free_slots[s].second] = static_cast<Elem>(digit[s]);
      out.push_back(Subspace::from_reduced_rows(n, rows));
      std::size_t s = 0;
      while (s < digit.size() && ++digit[s] == q) digit[s++] = 0;
      if (s == digit.size()) break;
    }
    int i = r - 1;
    while (i >= 0 && piv[i] == n - r + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

}  // namespace

mpz_class gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) throw std::invalid_argument("gaussian_binomial: need 0 <= k <= n");
  if (q < 2) throw std::invalid_argument("gaussian_binomial: need q >= 2");
  mpz_class num = 1;
  mpz_class den = 1;
  for (int i = 0; i < k; ++i) {
    num *= mpz_pow(q, n - i) - 1;
    den *= mpz_pow(q, i + 1) - 1;
  }
  return num / den;
}

mpz_class count_all_subspaces(int n, int q) {
  mpz_class total = 0;
  for (int r = 0; r <= n; ++r) total += gaussian_binomial(n, r, q);
  return total;
}

ElementOrder ElementOrder::from_sequence(int q, const std::vector<int>& sequence) {
  if (static_cast<int>(sequence.size()) != q) throw std::invalid_argument("element order must list every element");
  if (q >= 2 && (sequence[0] != 0 || sequence[1] != 1))
    throw std::invalid_argument("element order must start with 0, 1");
  ElementOrder o;
  o.rank_.assign(static_cast<std::size_t>(q), 0);
  std::vector<bool> seen(static_cast<std::size_t>(q), false);
  for (int pos = 0; pos < q; ++pos) {
    const int e = sequence[pos];
    if (e < 0 || e >= q || seen[e]) throw std::invalid_argument("element order is not a permutation");
    seen[e] = true;
    o.rank_[e] = static_cast<Elem>(pos);
  }
  return o;
}

int leading_index(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return static_cast<int>(i) + 1;
  throw std::invalid_argument("leading_index of the zero vector");
}

Profile profile(std::span<const Vector> vectors) {
  std::set<int> idx;
  for (const auto& v : vectors)
    if (!v.is_zero()) idx.insert(leading_index(v));
  return Profile{{idx.begin(), idx.end()}};
}

std::strong_ordering vector_compare(const Vector& v, const Vector& w, const ElementOrder& order) {
  if (v.size() != w.size()) throw std::invalid_argument("vector_compare: ambient mismatch");
  return compare_entries(v.entries(), w.entries(), order);
}

TowerDecomposition tower_decomposition(const Ambient& amb, const Subspace& u) {
  amb.check(u);
  if (u.is_zero()) throw std::invalid_argument("tower_decomposition of the zero subspace");
  const int r = u.dim();
  const int n = amb.n();
  TowerDecomposition t;
  for (int i = 1; i <= r; ++i) {
    // The bottom i rows of a reduced echelon matrix are themselves reduced.
    std::vector<Elem> rows(u.data().begin() + static_cast<std::ptrdiff_t>(r - i) * n, u.data().end());
    t.layers.push_back(Subspace::from_reduced_rows(n, std::move(rows)));
  }
  return t;
}

Vector layer_min(const Ambient& amb, const Subspace& u, int i, const ElementOrder& order) {
  amb.check(u);
  const int r = u.dim();
  if (i < 1 || i > r) throw std::invalid_argument("layer_min: layer index out of range");
  const Field& f = amb.field();
  // Every vector of the layer is c*u_i + w with c != 0 and w in U_{i-1}; its
  // leading entry is c, so the minimum has c = 1. The rows of U_{i-1} have
  // leading ones at increasing columns right of p(u_i), and each coefficient
  // only affects its own pivot column and later ones, so zeroing the pivot
  // columns left to right is the lexicographic minimum.
  (void)order;  // 0 is least in every admissible order
  const int top = r - i;
  Vector x = u.row_vector(top);
  const auto piv = u.pivots();
  for (int j = top + 1; j < r; ++j) {
    const Elem c = x[piv[j]];
    if (c == 0) continue;
    auto rw = u.row(j);
    for (int k = piv[j]; k < amb.n(); ++k) x[k] = f.sub(x[k], f.mul(c, rw[k]));
  }
  return x;
}

Vector layer_min_by_scan(const Ambient& amb, const Subspace& u, int i, const ElementOrder& order) {
  amb.check(u);
  if (i < 1 || i > u.dim()) throw std::invalid_argument("layer_min_by_scan: layer index out of range");
  const auto tower = tower_decomposition(amb, u);
  const Subspace& layer = tower.layers[i - 1];
  const Subspace below = i == 1 ? amb.zero() : tower.layers[i - 2];
  bool found = false;
  Vector best;
  for (const auto& v : amb.elements(layer)) {
    if (amb.contains(below, v)) continue;
    if (!found || vector_compare(v, best, order) < 0) {
      best = v;
      found = true;
    }
  }
  return best;
}

std::strong_ordering subspace_compare(const Ambient& amb, const Subspace& u, const Subspace& v,
                                      const ElementOrder& order) {
  amb.check(u);
  amb.check(v);
  if (u.dim() != v.dim()) throw std::invalid_argument("subspace_compare: dimension mismatch");
  return tower_order(u, v, order);
}

bool CanonicalLess::operator()(const Subspace& a, const Subspace& b) const {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return tower_order(a, b, ElementOrder{}) < 0;
}

std::vector<Subspace> sort_facets(const Ambient& amb, std::vector<Subspace> facets, const ElementOrder& order) {
  for (const auto& f : facets) {
    amb.check(f);
    if (f.dim() != facets.front().dim()) throw std::invalid_argument("sort_facets: mixed dimensions");
  }
  std::sort(facets.begin(), facets.end(),
            [&](const Subspace& a, const Subspace& b) { return tower_order(a, b, order) < 0; });
  return facets;
}

std::vector<Subspace> enumerate_grassmannian(const Ambient& amb, int r, const ElementOrder& order) {
  if (r < 0 || r > amb.n()) throw std::invalid_argument("enumerate_grassmannian: need 0 <= r <= n");
  auto out = rref_matrices(amb.n(), r, amb.q());
  std::sort(out.begin(), out.end(), [&](const Subspace& a, const Subspace& b) { return tower_order(a, b, order) < 0; });
  return out;
}

std::vector<Subspace> enumerate_all_subspaces(const Ambient& amb, std::size_t max_subspaces) {
  const mpz_class count = count_all_subspaces(amb.n(), amb.q());
  if (count > mpz_class(static_cast<unsigned long>(max_subspaces)))
    throw ResourceCapExceeded("Sigma(F_" + std::to_string(amb.q()) + "^" + std::to_string(amb.n()) + ") has " +
                              count.get_str() + " subspaces, above the cap of " + std::to_string(max_subspaces));
  std::vector<Subspace> out;
  out.reserve(count.get_ui());
  for (int r = 0; r <= amb.n(); ++r) {
    auto layer = enumerate_grassmannian(amb, r);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Subspace> subspaces_of(const Ambient& amb, const Subspace& u, int k) {
  amb.check(u);
  if (k < 0 || k > u.dim()) throw std::invalid_argument("subspaces_of: need 0 <= k <= dim U");
  if (k == 0) return {amb.zero()};
  // Each reduced k x dim(U) coefficient matrix picks a distinct subspace.
  std::vector<Subspace> out;
  for (const auto& coeffs : rref_matrices(u.dim(), k, amb.q())) {
    std::vector<Vector> gens;
    for (int i = 0; i < k; ++i) gens.push_back(amb.combine(u, coeffs.row(i)));
    out.push_back(amb.span(gens));
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<Subspace> all_subspaces_of(const Ambient& amb, const Subspace& u) {
  std::vector<Subspace> out;
  for (int k = 0; k <= u.dim(); ++k) {
    auto layer = subspaces_of(amb, u, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

SubspaceIndex::SubspaceIndex(Ambient amb, std::size_t max_subspaces)
    : amb_(std::move(amb)), all_(enumerate_all_subspaces(amb_, max_subspaces)) {
  ids_.reserve(all_.size());
  for (std::size_t i = 0; i < all_.size(); ++i) ids_.emplace(all_[i], i);
}

std::size_t SubspaceIndex::id(const Subspace& s) const {
  amb_.check(s);
  auto it = ids_.find(s);
  if (it == ids_.end()) throw std::invalid_argument("subspace not in index");
  return it->second;
}

}  // namespace qshell
