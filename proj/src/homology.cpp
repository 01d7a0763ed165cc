#include "qshell/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include "qshell/errors.hpp"
#include "qshell/kernels.hpp"

namespace qshell {

std::uint64_t HomologyReport::betti(int p) const {
  for (const auto& d : degrees)
    if (d.p == p) return d.betti;
  return 0;
}

const std::vector<mpz_class>& HomologyReport::torsion(int p) const {
  static const std::vector<mpz_class> none;
  for (const auto& d : degrees)
    if (d.p == p) return d.torsion;
  return none;
}

bool HomologyReport::acyclic() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const HomologyDegree& d) { return d.zero(); });
}

HomologyReport HomologyReport::truncated() const {
  HomologyReport out = *this;
  while (!out.degrees.empty() && out.degrees.back().zero()) out.degrees.pop_back();
  return out;
}

bool same_homology(const HomologyReport& a, const HomologyReport& b) {
  return a.truncated().degrees == b.truncated().degrees;
}

Poset inclusion_poset(const PuncturedComplex& complex) {
  const auto& faces = complex.faces;
  std::vector<std::vector<int>> above(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = 0; j < faces.size(); ++j)
      if (faces[i].dim() < faces[j].dim() && complex.ambient.is_subspace_of(faces[i], faces[j]))
        above[i].push_back(static_cast<int>(j));
  return Poset(std::move(above));
}

OrderComplex order_complex(const Poset& poset) { return kernels::order_complex(poset); }

std::vector<mpz_class> chain_counts(const Poset& poset) {
  const std::size_t n = poset.size();
  // from[v][p]: chains with p + 1 elements whose least element is v.
  std::vector<std::vector<mpz_class>> from(n);
  std::vector<char> done(n, 0);
  std::vector<std::pair<std::size_t, bool>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (done[root]) continue;
    stack.emplace_back(root, false);
    while (!stack.empty()) {
      auto [v, expanded] = stack.back();
      stack.pop_back();
      if (done[v]) continue;
      if (!expanded) {
        stack.emplace_back(v, true);
        for (int w : poset.above(v))
          if (!done[static_cast<std::size_t>(w)]) stack.emplace_back(static_cast<std::size_t>(w), false);
        continue;
      }
      auto& f = from[v];
      f.assign(1, mpz_class(1));
      for (int w : poset.above(v)) {
        const auto& g = from[static_cast<std::size_t>(w)];
        if (f.size() < g.size() + 1) f.resize(g.size() + 1);
        for (std::size_t p = 0; p < g.size(); ++p) f[p + 1] += g[p];
      }
      done[v] = 1;
    }
  }
  std::vector<mpz_class> total;
  for (const auto& f : from) {
    if (total.size() < f.size()) total.resize(f.size());
    for (std::size_t p = 0; p < f.size(); ++p) total[p] += f[p];
  }
  return total;
}

void check_homology_limits(const Poset& poset, const HomologyLimits& limits) {
  check_homology_limits(chain_counts(poset), limits);
}

void check_homology_limits(const std::vector<mpz_class>& counts, const HomologyLimits& limits) {
  mpz_class simplices = 0, entries = counts.empty() ? 0 : counts[0];
  for (std::size_t p = 0; p < counts.size(); ++p) {
    simplices += counts[p];
    if (p > 0) entries += counts[p - 1] * counts[p];
  }
  auto over = [](const mpz_class& x, std::uint64_t cap) { return x > mpz_class(static_cast<unsigned long>(cap)); };
  if (over(simplices, limits.max_simplices))
    throw ResourceCapExceeded("order complex has " + simplices.get_str() + " simplices, above the limit of " +
                              std::to_string(limits.max_simplices));
  if (over(entries, limits.max_boundary_entries))
    throw ResourceCapExceeded("boundary matrices would hold " + entries.get_str() + " entries, above the limit of " +
                              std::to_string(limits.max_boundary_entries));
}

std::vector<mpz_class> sphere_chain_counts(int n, int q) {
  if (n < 1 || q < 2) throw std::invalid_argument("sphere_chain_counts: need n >= 1, q >= 2");
  if (n > 30) throw std::invalid_argument("sphere_chain_counts: n too large");
  // A chain picks dimensions 0 < d_1 < ... < d_k < n; the flags with those
  // dimensions number [n, d_1] [n - d_1, d_2 - d_1] ...
  std::vector<mpz_class> counts(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
    mpz_class flags = 1;
    int prev = 0, k = 0;
    for (int d = 1; d < n; ++d)
      if (mask >> (d - 1) & 1) {
        flags *= gaussian_binomial(n - prev, d - prev, q);
        prev = d;
        ++k;
      }
    counts[static_cast<std::size_t>(k - 1)] += flags;
  }
  return counts;
}

IntMatrix boundary_matrix(const OrderComplex& k, int p) {
  if (p < 0) throw std::invalid_argument("boundary_matrix: negative degree");
  const std::size_t cols = k.count(p);
  if (p == 0) {
    IntMatrix m(1, cols);
    for (std::size_t c = 0; c < cols; ++c) m(0, c) = 1;
    return m;
  }
  const auto& lower = k.simplices.size() > static_cast<std::size_t>(p - 1) ? k.simplices[p - 1] : std::vector<Chain>{};
  IntMatrix m(lower.size(), cols);
  Chain face;
  for (std::size_t c = 0; c < cols; ++c) {
    const Chain& s = k.simplices[p][c];
    for (int i = 0; i <= p; ++i) {
      face.assign(s.begin(), s.end());
      face.erase(face.begin() + i);
      const auto it = std::lower_bound(lower.begin(), lower.end(), face);
      if (it == lower.end() || *it != face) throw std::logic_error("boundary_matrix: complex not closed under faces");
      m(static_cast<std::size_t>(it - lower.begin()), c) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

HomologyReport reduced_homology(const OrderComplex& k) {
  const int top = k.dim();  // -1 when empty
  // snf[p] describes the boundary out of degree p, p = 0..top.
  std::vector<SnfResult> snf(static_cast<std::size_t>(top + 1));
#pragma omp parallel for schedule(dynamic)
  for (int p = 0; p <= top; ++p) snf[p] = kernels::smith_normal_form(boundary_matrix(k, p));

  auto rank_out = [&](int p) -> std::size_t { return p >= 0 && p <= top ? snf[p].rank : 0; };
  HomologyReport out;
  for (int p = -1; p <= top; ++p) {
    HomologyDegree d;
    d.p = p;
    const std::size_t chains = p == -1 ? 1 : k.count(p);
    d.betti = chains - rank_out(p) - rank_out(p + 1);
    if (p + 1 <= top)
      for (const auto& f : snf[p + 1].invariant_factors)
        if (f > 1) d.torsion.push_back(f);
    out.degrees.push_back(std::move(d));
  }
  return out;
}

HomologyReport finite_space_homology(const PuncturedComplex& complex, const HomologyLimits& limits) {
  const Poset poset = inclusion_poset(complex);
  check_homology_limits(poset, limits);
  return reduced_homology(order_complex(poset));
}

HomologyReport expected_sphere_homology(int n, int q) {
  if (n < 1) throw std::invalid_argument("expected_sphere_homology: n must be at least 1");
  if (q < 2) throw std::invalid_argument("expected_sphere_homology: q must be at least 2");
  mpz_class c;
  mpz_ui_pow_ui(c.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n) * (n - 1) / 2);
  if (mpz_sizeinbase(c.get_mpz_t(), 2) > 64) throw std::overflow_error("expected_sphere_homology: rank exceeds 64 bits");
  HomologyReport out;
  for (int p = -1; p <= n - 2; ++p) {
    HomologyDegree d;
    d.p = p;
    if (p == n - 2) {
      mpz_class lo = c & mpz_class(0xffffffffUL);
      mpz_class hi = c >> 32;
      d.betti = (static_cast<std::uint64_t>(hi.get_ui()) << 32) | lo.get_ui();
    }
    out.degrees.push_back(std::move(d));
  }
  return out;
}

mpz_class reduced_euler_characteristic(const OrderComplex& k) {
  mpz_class chi = -1;
  for (int p = 0; p <= k.dim(); ++p) {
    if (p % 2 == 0)
      chi += static_cast<unsigned long>(k.count(p));
    else
      chi -= static_cast<unsigned long>(k.count(p));
  }
  return chi;
}

bool euler_check(const OrderComplex& k, const HomologyReport& report) {
  mpz_class alt = 0;
  for (const auto& d : report.degrees) {
    mpz_class b;
    mpz_import(b.get_mpz_t(), 1, 1, sizeof(d.betti), 0, 0, &d.betti);
    // (-1)^p with p = -1 gives -1.
    if (((d.p % 2) + 2) % 2 == 0)
      alt += b;
    else
      alt -= b;
  }
  return alt == reduced_euler_characteristic(k);
}

}  // namespace qshell
