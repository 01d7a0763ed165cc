#include <algorithm>

#include "qshell/kernels.hpp"

namespace qshell::reference {

namespace {

int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

}  // namespace

WitnessTable shelling_witnesses(const Ambient& amb, const std::vector<Subspace>& facets) {
  const int t = static_cast<int>(facets.size());
  WitnessTable out;
  out.witness.assign(static_cast<std::size_t>(t), {});
  for (int j = 1; j < t; ++j) {
    const int r = facets[j].dim();
    out.witness[j].assign(static_cast<std::size_t>(j), -1);
    for (int i = 0; i < j; ++i) {
      const Subspace fij = amb.intersect(facets[i], facets[j]);
      for (int k = 0; k < j; ++k) {
        const Subspace fkj = amb.intersect(facets[k], facets[j]);
        if (amb.is_subspace_of(fij, fkj) && fkj.dim() == r - 1) {
          out.witness[j][i] = k;
          break;
        }
      }
      if (out.witness[j][i] < 0) {
        out.violation = std::make_pair(i, j);
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

RankSweep rank_sweep(const SubspaceIndex& index, const std::vector<int>& ranks) {
  const Ambient& amb = index.ambient();
  RankSweep out;
  for (std::size_t a = 0; a < index.size(); ++a)
    for (std::size_t b = 0; b < index.size(); ++b) {
      const Subspace& sa = index.at(a);
      const Subspace& sb = index.at(b);
      if (a != b && amb.is_subspace_of(sa, sb) && ranks[a] > ranks[b]) out.monotonicity.emplace_back(a, b);
      if (a < b) {
        const int lhs = ranks[index.id(amb.sum(sa, sb))] + ranks[index.id(amb.intersect(sa, sb))];
        if (lhs > ranks[a] + ranks[b]) out.submodularity.emplace_back(a, b);
      }
    }
  return out;
}

OrderComplex order_complex(const Poset& poset) {
  OrderComplex out;
  out.vertex_count = poset.size();
  std::vector<Chain> layer;
  for (int v = 0; v < static_cast<int>(poset.size()); ++v) layer.push_back({v});
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    std::vector<Chain> next;
    for (const auto& c : layer)
      for (int w : poset.above(static_cast<std::size_t>(c.back()))) {
        Chain longer = c;
        longer.push_back(w);
        next.push_back(std::move(longer));
      }
    out.simplices.push_back(std::move(layer));
    layer = std::move(next);
  }
  return out;
}

SnfResult smith_normal_form(IntMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  SnfResult out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Move the least nonzero |entry| of the trailing block to (t, t).
      std::size_t pi = rows, pj = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (sgn(a(r, c)) != 0 && (pi == rows || cmpabs(a(r, c), a(pi, pj)) < 0)) {
            pi = r;
            pj = c;
          }
      if (pi == rows) return out;
      for (std::size_t c = 0; c < cols; ++c) swap(a(t, c), a(pi, c));
      for (std::size_t r = 0; r < rows; ++r) swap(a(r, t), a(r, pj));

      bool residue = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const mpz_class f = a(r, t) / a(t, t);
        for (std::size_t c = t; c < cols; ++c) a(r, c) -= f * a(t, c);
        residue = residue || sgn(a(r, t)) != 0;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const mpz_class f = a(t, c) / a(t, t);
        for (std::size_t r = t; r < rows; ++r) a(r, c) -= f * a(r, t);
        residue = residue || sgn(a(t, c)) != 0;
      }
      if (residue) continue;
      bool divides = true;
      for (std::size_t r = t + 1; r < rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (divides && sgn(a(r, c) % a(t, t)) != 0) {
            divides = false;
            for (std::size_t k = t; k < cols; ++k) a(t, k) += a(r, k);
          }
      if (divides) break;
    }
    out.invariant_factors.push_back(abs(a(t, t)));
    ++out.rank;
  }
  return out;
}

}  // namespace qshell::reference
