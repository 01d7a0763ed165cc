#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "helpers.hpp"
#include "qshell/errors.hpp"
#include "qshell/homology.hpp"
#include "qshell/qcomplex.hpp"

using namespace qshell;

namespace {

using LMat = std::vector<std::vector<long long>>;
using Up = std::vector<std::vector<int>>;

IntMatrix to_int(const LMat& m) {
  IntMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = static_cast<long>(m[r][c]);
  return out;
}

long long det(const LMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    LMat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return total;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Invariant factors from determinantal divisors: D_k is the gcd of all k x k
// minors and d_k = D_k / D_{k-1}.
std::vector<long long> factors_by_minors(const LMat& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<long long> out;
  long long prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    long long g = 0;
    for (const auto& rs : combinations(rows, k))
      for (const auto& cs : combinations(cols, k)) {
        LMat sub;
        for (auto r : rs) {
          std::vector<long long> row;
          for (auto c : cs) row.push_back(m[r][c]);
          sub.push_back(row);
        }
        g = std::gcd(g, std::llabs(det(sub)));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Face poset of a simplicial complex given by its maximal simplices.
Poset face_poset(const std::vector<std::vector<int>>& maximal) {
  std::set<std::vector<int>> faces;
  for (const auto& m : maximal)
    for (unsigned mask = 1; mask < (1u << m.size()); ++mask) {
      std::vector<int> f;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (mask >> i & 1) f.push_back(m[i]);
      faces.insert(f);
    }
  std::vector<std::vector<int>> list(faces.begin(), faces.end());
  std::vector<std::vector<int>> above(list.size());
  for (std::size_t a = 0; a < list.size(); ++a)
    for (std::size_t b = 0; b < list.size(); ++b)
      if (a != b && std::includes(list[b].begin(), list[b].end(), list[a].begin(), list[a].end()))
        above[a].push_back(static_cast<int>(b));
  return Poset(above);
}

// Chains listed by scanning subsets of a small poset, boundary matrices built
// here, Betti numbers from ranks over Q.
std::vector<long long> betti_by_subsets(const Poset& p) {
  const int n = static_cast<int>(p.size());
  std::vector<std::vector<std::vector<int>>> chains;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> c;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) c.push_back(i);
    bool total = true;
    for (std::size_t a = 0; a < c.size() && total; ++a)
      for (std::size_t b = a + 1; b < c.size() && total; ++b)
        total = p.less(c[a], c[b]) || p.less(c[b], c[a]);
    if (!total) continue;
    std::sort(c.begin(), c.end(), [&](int x, int y) { return p.less(x, y); });
    const std::size_t d = c.size() - 1;
    if (chains.size() <= d) chains.resize(d + 1);
    chains[d].push_back(c);
  }
  const int top = static_cast<int>(chains.size()) - 1;
  auto dimc = [&](int d) -> long long {
    if (d == -1) return 1;
    return d >= 0 && d <= top ? static_cast<long long>(chains[d].size()) : 0;
  };
  auto rank_of = [&](int d) -> long long {  // boundary out of degree d
    if (d < 0 || d > top) return 0;
    if (d == 0) return chains[0].empty() ? 0 : 1;
    std::map<std::vector<int>, std::size_t> row;
    for (std::size_t i = 0; i < chains[d - 1].size(); ++i) row[chains[d - 1][i]] = i;
    LMat m(chains[d - 1].size(), std::vector<long long>(chains[d].size(), 0));
    for (std::size_t c = 0; c < chains[d].size(); ++c)
      for (std::size_t i = 0; i < chains[d][c].size(); ++i) {
        auto f = chains[d][c];
        f.erase(f.begin() + static_cast<long>(i));
        m[row.at(f)][c] = i % 2 ? -1 : 1;
      }
    return oracle::rational_rank(m);
  };
  std::vector<long long> out;
  for (int d = -1; d <= std::max(top, -1); ++d) out.push_back(dimc(d) - rank_of(d) - rank_of(d + 1));
  return out;
}

Poset random_poset(std::mt19937& rng, int n) {
  // random DAG on 0..n-1 with edges i -> j only for i < j, then transitive closure
  std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) lt[i][j] = rng() % 3 == 0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (lt[i][k] && lt[k][j]) lt[i][j] = 1;
  std::vector<std::vector<int>> above(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (lt[i][j]) above[i].push_back(j);
  return Poset(above);
}

HomologyReport sphere(int q, int n) { return finite_space_homology(q_sphere(Ambient(q, n)).puncture()); }

}  // namespace

TEST_CASE("poset validation") {
  CHECK_NOTHROW(Poset(Up{{1, 2}, {2}, {}}));
  CHECK_THROWS_AS(Poset(Up{{0}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(Up{{1}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(Up{{1}, {2}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(Up{{3}, {}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(Up{{1, 1}, {}}), std::invalid_argument);
  const Poset p(Up{{2}, {2}, {}});
  CHECK(p.less(0, 2));
  CHECK_FALSE(p.less(2, 0));
  CHECK_FALSE(p.less(0, 1));
}

TEST_CASE("order complexes of small posets") {
  const auto k = order_complex(Poset(Up{{}, {}, {}}));
  CHECK(k.vertex_count == 3);
  CHECK(k.dim() == 0);
  CHECK(k.count(0) == 3);
  const auto fig = order_complex(inclusion_poset(q_sphere(Ambient(2, 3)).puncture()));
  CHECK(fig.count(0) == 14);
  CHECK(fig.count(1) == 21);
  CHECK(fig.count(2) == 0);
  const auto big = order_complex(inclusion_poset(q_sphere(Ambient(2, 4)).puncture()));
  CHECK(big.count(0) == 65);
  CHECK(big.count(1) == 315);
  CHECK(big.count(2) == 315);
  // flags: [4 choose 1][3 choose 1][2 choose 1] over F_2
  CHECK(mpz_class(big.count(2)) == gaussian_binomial(4, 1, 2) * gaussian_binomial(3, 1, 2) * gaussian_binomial(2, 1, 2));
  for (const auto& layer : big.simplices) CHECK(std::is_sorted(layer.begin(), layer.end()));
}

TEST_CASE("chain counts match enumeration") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto p = random_poset(rng, 1 + static_cast<int>(rng() % 9));
    const auto counts = chain_counts(p);
    const auto k = order_complex(p);
    REQUIRE(counts.size() >= static_cast<std::size_t>(k.dim() + 1));
    for (std::size_t d = 0; d < counts.size(); ++d) CHECK(counts[d] == mpz_class(k.count(static_cast<int>(d))));
  }
  CHECK(chain_counts(Poset()).empty());
  const auto counts = chain_counts(inclusion_poset(q_sphere(Ambient(3, 3)).puncture()));
  CHECK(counts[0] == 26);
  CHECK(counts[1] == 13 * 4);
}

TEST_CASE("sphere chain counts by flag counting") {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 2}, {2, 3}, {3, 3}, {2, 4}, {4, 3}}) {
    const auto brute = chain_counts(inclusion_poset(q_sphere(Ambient(q, n)).puncture()));
    CHECK(sphere_chain_counts(n, q) == brute);
  }
  // far beyond anything enumerable, still immediate
  const auto big = sphere_chain_counts(6, 3);
  CHECK_THROWS_AS(check_homology_limits(big), ResourceCapExceeded);
  CHECK_NOTHROW(check_homology_limits(sphere_chain_counts(4, 2)));
}

TEST_CASE("homology limits refuse large inputs before enumerating") {
  const auto p = inclusion_poset(q_sphere(Ambient(2, 4)).puncture());
  CHECK_NOTHROW(check_homology_limits(p));
  CHECK_THROWS_AS(check_homology_limits(p, {100, 20'000'000}), ResourceCapExceeded);
  CHECK_THROWS_AS(check_homology_limits(p, {2'000'000, 1000}), ResourceCapExceeded);
  CHECK_THROWS_AS(finite_space_homology(q_sphere(Ambient(2, 4)).puncture(), {100, 1000}), ResourceCapExceeded);
}

TEST_CASE("boundary matrices") {
  const auto edge = order_complex(Poset(Up{{1}, {}}));
  const auto d1 = boundary_matrix(edge, 1);
  CHECK(d1.rows() == 2);
  CHECK(d1.cols() == 1);
  // chain (a, b): dropping a gives +b, dropping b gives -a
  CHECK(d1(0, 0) == -1);
  CHECK(d1(1, 0) == 1);
  const auto d0 = boundary_matrix(edge, 0);
  CHECK(d0.rows() == 1);
  CHECK(d0.cols() == 2);
  CHECK(d0(0, 0) == 1);

  const auto fig = order_complex(inclusion_poset(q_sphere(Ambient(2, 3)).puncture()));
  const auto b1 = boundary_matrix(fig, 1);
  CHECK(b1.rows() == 14);
  CHECK(b1.cols() == 21);
  const auto zero01 = boundary_matrix(fig, 0) * b1;
  for (std::size_t c = 0; c < zero01.cols(); ++c) CHECK(zero01(0, c) == 0);

  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto k = order_complex(random_poset(rng, 8));
    for (int p = 1; p <= k.dim(); ++p) {
      const auto dd = boundary_matrix(k, p - 1) * boundary_matrix(k, p);
      for (std::size_t r = 0; r < dd.rows(); ++r)
        for (std::size_t c = 0; c < dd.cols(); ++c) CHECK(dd(r, c) == 0);
    }
  }
  OrderComplex broken;
  broken.vertex_count = 2;
  broken.simplices = {{{0}}, {{0, 1}}};
  CHECK_THROWS_AS(boundary_matrix(broken, 1), std::logic_error);
}

TEST_CASE("smith normal form examples") {
  auto snf = smith_normal_form(to_int({{2, 0}, {0, 3}}));
  CHECK(snf.rank == 2);
  CHECK(snf.invariant_factors == std::vector<mpz_class>{1, 6});
  snf = smith_normal_form(to_int({{1, 0}, {0, 0}}));
  CHECK(snf.rank == 1);
  CHECK(snf.invariant_factors == std::vector<mpz_class>{1});
  snf = smith_normal_form(to_int({{0, 0, 0}, {0, 0, 0}}));
  CHECK(snf.rank == 0);
  CHECK(snf.invariant_factors.empty());
  CHECK(smith_normal_form(IntMatrix()).rank == 0);
  snf = smith_normal_form(to_int({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  CHECK(snf.invariant_factors == std::vector<mpz_class>{2, 6, 12});
}

TEST_CASE("smith normal form against determinantal divisors") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
    LMat m(rows, std::vector<long long>(cols));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<long long>(rng() % 13) - 6;
    if (t % 3 == 0)  // force rank deficiency
      for (std::size_t c = 0; c < cols; ++c) m[rows - 1][c] = 2 * m[0][c];
    const auto snf = smith_normal_form(to_int(m));
    const auto expected = factors_by_minors(m);
    CHECK(snf.rank == static_cast<std::size_t>(oracle::rational_rank(m)));
    REQUIRE(snf.invariant_factors.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(snf.invariant_factors[i] == static_cast<long>(expected[i]));
    for (std::size_t i = 1; i < snf.invariant_factors.size(); ++i)
      CHECK(mpz_class(snf.invariant_factors[i] % snf.invariant_factors[i - 1]) == 0);
  }
}

TEST_CASE("smith normal form with large entries") {
  IntMatrix m(2, 2);
  m(0, 0) = mpz_class("123456789012345678901234567890");
  m(0, 1) = mpz_class("987654321098765432109876543210");
  m(1, 0) = 7;
  m(1, 1) = 11;
  const auto snf = smith_normal_form(m);
  CHECK(snf.rank == 2);
  const mpz_class d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), m(0, 0).get_mpz_t(), m(0, 1).get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(1, 0).get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(1, 1).get_mpz_t());
  CHECK(snf.invariant_factors[0] == g);
  CHECK(snf.invariant_factors[0] * snf.invariant_factors[1] == abs(d));
}

TEST_CASE("reduced homology of small complexes") {
  // empty space
  const auto empty = reduced_homology(order_complex(Poset()));
  CHECK(empty.betti(-1) == 1);
  CHECK(empty.degrees.size() == 1);
  // chain a < b is a cone
  CHECK(reduced_homology(order_complex(Poset(Up{{1}, {}}))).acyclic());
  // three points
  const auto pts = reduced_homology(order_complex(Poset(Up{{}, {}, {}})));
  CHECK(pts.betti(0) == 2);
  CHECK(pts.betti(-1) == 0);
  // boundary of a triangle: a circle
  const auto circle = reduced_homology(order_complex(face_poset({{0, 1}, {1, 2}, {0, 2}})));
  CHECK(circle.betti(1) == 1);
  CHECK(circle.betti(0) == 0);
  // six-vertex projective plane: H_1 = Z/2, nothing else
  const auto rp2 = reduced_homology(order_complex(face_poset(
      {{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}})));
  CHECK(rp2.betti(0) == 0);
  CHECK(rp2.betti(1) == 0);
  CHECK(rp2.betti(2) == 0);
  CHECK(rp2.torsion(1) == std::vector<mpz_class>{2});
  CHECK(rp2.torsion(0).empty());
  CHECK_FALSE(rp2.acyclic());
}

TEST_CASE("betti numbers against subset enumeration and rational ranks") {
  std::mt19937 rng(99);
  for (int t = 0; t < 60; ++t) {
    const auto p = random_poset(rng, static_cast<int>(rng() % 10));
    const auto k = order_complex(p);
    const auto report = reduced_homology(k);
    const auto expected = betti_by_subsets(p);
    for (std::size_t i = 0; i < expected.size(); ++i)
      CHECK(report.betti(static_cast<int>(i) - 1) == static_cast<std::uint64_t>(expected[i]));
    CHECK(euler_check(k, report));
  }
}

TEST_CASE("q-sphere homology") {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}, {5, 2}}) {
    const auto got = sphere(q, n);
    const auto want = expected_sphere_homology(n, q);
    CHECK(same_homology(got, want));
    std::uint64_t c = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) c *= static_cast<std::uint64_t>(q);
    CHECK(got.betti(n - 2) == c);
    for (const auto& d : got.degrees) CHECK(d.torsion.empty());
  }
  CHECK(sphere(2, 2).betti(0) == 2);
  CHECK(sphere(2, 3).betti(1) == 8);
}

TEST_CASE("expected sphere homology") {
  CHECK(expected_sphere_homology(3, 2).betti(1) == 8);
  CHECK(expected_sphere_homology(1, 7).betti(-1) == 1);
  CHECK(expected_sphere_homology(4, 2).betti(2) == 64);
  CHECK(expected_sphere_homology(4, 2).betti(1) == 0);
  CHECK_THROWS_AS(expected_sphere_homology(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(expected_sphere_homology(3, 1), std::invalid_argument);
  CHECK(expected_sphere_homology(11, 2).betti(9) == std::uint64_t{1} << 55);
  CHECK_THROWS_AS(expected_sphere_homology(12, 2), std::overflow_error);  // 2^66
}

TEST_CASE("euler characteristic") {
  const auto fig = order_complex(inclusion_poset(q_sphere(Ambient(2, 3)).puncture()));
  CHECK(reduced_euler_characteristic(fig) == -8);
  CHECK(euler_check(fig, reduced_homology(fig)));
  const auto big = order_complex(inclusion_poset(q_sphere(Ambient(2, 4)).puncture()));
  CHECK(reduced_euler_characteristic(big) == 64);
  const auto empty = order_complex(Poset());
  CHECK(reduced_euler_characteristic(empty) == -1);
  CHECK(euler_check(empty, reduced_homology(empty)));
  HomologyReport wrong = reduced_homology(fig);
  wrong.degrees[2].betti = 7;
  CHECK_FALSE(euler_check(fig, wrong));
}

TEST_CASE("report helpers") {
  HomologyReport r;
  r.degrees = {{-1, 0, {}}, {0, 3, {}}, {1, 0, {}}, {2, 0, {}}};
  CHECK(r.truncated().degrees.size() == 2);
  CHECK(r.betti(0) == 3);
  CHECK(r.betti(5) == 0);
  CHECK(r.torsion(9).empty());
  CHECK_FALSE(r.acyclic());
  HomologyReport s;
  s.degrees = {{-1, 0, {}}, {0, 3, {}}};
  CHECK(same_homology(r, s));
  s.degrees[1].torsion = {2};
  CHECK_FALSE(same_homology(r, s));
}

TEST_CASE("complexes with a cone apex are acyclic") {
  std::mt19937 rng(17);
  const Ambient amb(2, 4);
  int cones = 0;
  for (int t = 0; t < 80; ++t) {
    std::vector<Subspace> gens;
    const auto planes = enumerate_grassmannian(amb, 2);
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) gens.push_back(planes[rng() % planes.size()]);
    const auto punctured = generate(amb, gens).puncture();
    const auto cone = cone_apex(punctured);
    const auto h = finite_space_homology(punctured);
    if (cone.kind == ConeResult::Kind::apex) {
      ++cones;
      CHECK(h.acyclic());
    }
  }
  CHECK(cones > 0);
}
