#include <algorithm>
#include <cstdint>

#include "qshell/kernels.hpp"

namespace qshell::kernels {

namespace {

int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
int cmpabs(const mpz_class& a, unsigned long b) { return mpz_cmpabs_ui(a.get_mpz_t(), b); }

}  // namespace

WitnessTable shelling_witnesses(const Ambient& amb, const std::vector<Subspace>& facets) {
  const int t = static_cast<int>(facets.size());
  WitnessTable out;
  out.witness.assign(static_cast<std::size_t>(t), {});
  std::vector<int> failed_i(static_cast<std::size_t>(t), -1);
  if (t == 0) {
    out.ok = true;
    return out;
  }
  const int r = facets.front().dim();

#pragma omp parallel for schedule(dynamic)
  for (int j = 1; j < t; ++j) {
    std::vector<Subspace> meets;
    meets.reserve(static_cast<std::size_t>(j));
    for (int k = 0; k < j; ++k) meets.push_back(amb.intersect(facets[k], facets[j]));
    std::vector<int> row(static_cast<std::size_t>(j), -1);
    for (int i = 0; i < j; ++i) {
      for (int k = 0; k < j; ++k) {
        if (meets[k].dim() == r - 1 && amb.is_subspace_of(meets[i], meets[k])) {
          row[i] = k;
          break;
        }
      }
      if (row[i] < 0) {
        failed_i[j] = i;
        break;
      }
    }
    out.witness[j] = std::move(row);
  }

  for (int j = 1; j < t; ++j)
    if (failed_i[j] >= 0) {
      out.violation = std::make_pair(failed_i[j], j);
      out.ok = false;
      for (int later = j + 1; later < t; ++later) out.witness[later].clear();
      return out;
    }
  out.ok = true;
  return out;
}

RankSweep rank_sweep(const SubspaceIndex& index, const std::vector<int>& ranks) {
  const Ambient& amb = index.ambient();
  const std::size_t n = index.size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> mono(n), sub(n);

#pragma omp parallel for schedule(dynamic)
  for (std::size_t a = 0; a < n; ++a) {
    const Subspace& sa = index.at(a);
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const Subspace& sb = index.at(b);
      if (sa.dim() < sb.dim() && ranks[a] > ranks[b] && amb.is_subspace_of(sa, sb)) mono[a].emplace_back(a, b);
      if (a < b) {
        const std::size_t s = index.id(amb.sum(sa, sb));
        const std::size_t m = index.id(amb.intersect(sa, sb));
        if (ranks[s] + ranks[m] > ranks[a] + ranks[b]) sub[a].emplace_back(a, b);
      }
    }
  }

  RankSweep out;
  for (std::size_t a = 0; a < n; ++a) {
    out.monotonicity.insert(out.monotonicity.end(), mono[a].begin(), mono[a].end());
    out.submodularity.insert(out.submodularity.end(), sub[a].begin(), sub[a].end());
  }
  return out;
}

namespace {

void extend_chains(const Poset& poset, Chain& chain, std::vector<std::vector<Chain>>& by_dim) {
  const std::size_t p = chain.size() - 1;
  if (by_dim.size() <= p) by_dim.resize(p + 1);
  by_dim[p].push_back(chain);
  for (int w : poset.above(static_cast<std::size_t>(chain.back()))) {
    chain.push_back(w);
    extend_chains(poset, chain, by_dim);
    chain.pop_back();
  }
}

}  // namespace

OrderComplex order_complex(const Poset& poset) {
  const int n = static_cast<int>(poset.size());
  // Chains grouped by their least element.
  std::vector<std::vector<std::vector<Chain>>> local(static_cast<std::size_t>(n));

#pragma omp parallel for schedule(dynamic)
  for (int v = 0; v < n; ++v) {
    Chain chain{v};
    extend_chains(poset, chain, local[v]);
  }

  OrderComplex out;
  out.vertex_count = poset.size();
  for (auto& per_vertex : local) {
    if (out.simplices.size() < per_vertex.size()) out.simplices.resize(per_vertex.size());
    for (std::size_t p = 0; p < per_vertex.size(); ++p)
      for (auto& c : per_vertex[p]) out.simplices[p].push_back(std::move(c));
  }
  for (auto& layer : out.simplices) std::sort(layer.begin(), layer.end());
  return out;
}

SnfResult smith_normal_form(IntMatrix a) {
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(a.rows());
  const std::ptrdiff_t cols = static_cast<std::ptrdiff_t>(a.cols());
  const std::ptrdiff_t diag = std::min(rows, cols);
  SnfResult out;

  auto swap_rows = [&](std::ptrdiff_t x, std::ptrdiff_t y) {
    if (x != y)
      for (std::ptrdiff_t c = 0; c < cols; ++c) swap(a(x, c), a(y, c));
  };
  auto swap_cols = [&](std::ptrdiff_t x, std::ptrdiff_t y) {
    if (x != y)
      for (std::ptrdiff_t r = 0; r < rows; ++r) swap(a(r, x), a(r, y));
  };

  for (std::ptrdiff_t t = 0; t < diag; ++t) {
    // Least nonzero |entry| of the trailing block; a unit cannot be beaten.
    std::ptrdiff_t pi = -1, pj = -1;
    for (std::ptrdiff_t r = t; r < rows && !(pi >= 0 && cmpabs(a(pi, pj), 1) == 0); ++r)
      for (std::ptrdiff_t c = t; c < cols; ++c) {
        if (sgn(a(r, c)) == 0) continue;
        if (pi < 0 || cmpabs(a(r, c), a(pi, pj)) < 0) {
          pi = r;
          pj = c;
          if (cmpabs(a(r, c), 1) == 0) break;
        }
      }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    while (true) {
      // Row pass: clear column t below the pivot using the pivot row's support.
      std::vector<std::ptrdiff_t> support;
      for (std::ptrdiff_t c = t; c < cols; ++c)
        if (sgn(a(t, c)) != 0) support.push_back(c);
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t r = t + 1; r < rows; ++r) {
        if (sgn(a(r, t)) == 0) continue;
        mpz_class f;
        mpz_tdiv_q(f.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
        if (sgn(f) == 0) continue;
        for (std::ptrdiff_t c : support) a(r, c) -= f * a(t, c);
      }
      // Column pass: clear row t right of the pivot.
      std::vector<std::ptrdiff_t> col_support;
      for (std::ptrdiff_t r = t; r < rows; ++r)
        if (sgn(a(r, t)) != 0) col_support.push_back(r);
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t c = t + 1; c < cols; ++c) {
        if (sgn(a(t, c)) == 0) continue;
        mpz_class f;
        mpz_tdiv_q(f.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
        if (sgn(f) == 0) continue;
        for (std::ptrdiff_t r : col_support) a(r, c) -= f * a(r, t);
      }

      // Any remainder left in row or column t becomes the new, smaller pivot.
      std::ptrdiff_t br = t, bc = t;
      for (std::ptrdiff_t r = t + 1; r < rows; ++r)
        if (sgn(a(r, t)) != 0 && cmpabs(a(r, t), a(br, bc)) < 0) {
          br = r;
          bc = t;
        }
      for (std::ptrdiff_t c = t + 1; c < cols; ++c)
        if (sgn(a(t, c)) != 0 && cmpabs(a(t, c), a(br, bc)) < 0) {
          br = t;
          bc = c;
        }
      bool clear = true;
      for (std::ptrdiff_t r = t + 1; r < rows && clear; ++r) clear = sgn(a(r, t)) == 0;
      for (std::ptrdiff_t c = t + 1; c < cols && clear; ++c) clear = sgn(a(t, c)) == 0;
      if (!clear) {
        swap_rows(t, br);
        swap_cols(t, bc);
        continue;
      }
      // The pivot must divide the remaining block.
      if (cmpabs(a(t, t), 1) == 0) break;
      std::ptrdiff_t bad = -1;
      for (std::ptrdiff_t r = t + 1; r < rows && bad < 0; ++r)
        for (std::ptrdiff_t c = t + 1; c < cols; ++c)
          if (sgn(a(r, c)) != 0 && !mpz_divisible_p(a(r, c).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      for (std::ptrdiff_t c = t; c < cols; ++c) a(t, c) += a(bad, c);
    }
    out.invariant_factors.push_back(abs(a(t, t)));
    ++out.rank;
  }
  return out;
}

}  // namespace qshell::kernels
