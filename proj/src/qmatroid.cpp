#include "qshell/qmatroid.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "qshell/errors.hpp"
#include "qshell/kernels.hpp"

namespace qshell {

RankOracle::RankOracle(SubspaceIndexPtr index, std::vector<int> ranks) : index_(std::move(index)), ranks_(std::move(ranks)) {
  if (!index_) throw std::invalid_argument("null subspace index");
  if (ranks_.size() != index_->size()) throw std::invalid_argument("rank table does not cover Sigma(E)");
  for (int r : ranks_)
    if (r < 0) throw std::invalid_argument("negative rank value");
}

RankOracle RankOracle::from_function(SubspaceIndexPtr index, const std::function<int(const Subspace&)>& rank) {
  std::vector<int> ranks;
  ranks.reserve(index->size());
  for (const auto& s : index->all()) ranks.push_back(rank(s));
  return RankOracle(std::move(index), std::move(ranks));
}

RankOracle uniform_matroid(int k, SubspaceIndexPtr index) {
  if (k < 1 || k > index->ambient().n()) throw std::invalid_argument("uniform_matroid: need 1 <= k <= n");
  return RankOracle::from_function(std::move(index), [k](const Subspace& s) { return std::min(s.dim(), k); });
}

RankOracle uniform_matroid(int k, int n, int q, std::size_t max_subspaces) {
  if (k < 1 || k > n) throw std::invalid_argument("uniform_matroid: need 1 <= k <= n");
  return uniform_matroid(k, std::make_shared<const SubspaceIndex>(Ambient(q, n), max_subspaces));
}

bool AxiomReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed(); });
}

const AxiomCheck& AxiomReport::at(const std::string& axiom) const {
  for (const auto& c : checks)
    if (c.axiom == axiom) return c;
  throw std::out_of_range("no axiom check named " + axiom);
}

std::vector<std::string> AxiomReport::failed() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed()) out.push_back(c.axiom);
  return out;
}

std::vector<Vector> projective_points(const Ambient& amb, const Subspace& u) {
  std::vector<Vector> out;
  for (auto& v : amb.elements(u)) {
    if (v.is_zero()) continue;
    if (v[leading_index(v) - 1] == 1) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const Vector& a, const Vector& b) { return vector_compare(a, b) < 0; });
  return out;
}

AxiomReport verify_rank_axioms(const RankOracle& m) {
  const SubspaceIndex& idx = m.index();
  AxiomReport report;
  AxiomCheck r1{"r1", {}};
  for (std::size_t id = 0; id < idx.size(); ++id) {
    const int r = m.rank_at(id);
    if (r < 0 || r > idx.at(id).dim())
      r1.violations.push_back({{idx.at(id)}, "rank " + std::to_string(r) + " outside [0, dim]"});
  }
  const RankSweep sweep = kernels::rank_sweep(idx, m.table());
  AxiomCheck r2{"r2", {}};
  for (auto [a, b] : sweep.monotonicity)
    r2.violations.push_back({{idx.at(a), idx.at(b)}, "A inside B but rank(A) > rank(B)"});
  AxiomCheck r3{"r3", {}};
  for (auto [a, b] : sweep.submodularity)
    r3.violations.push_back({{idx.at(a), idx.at(b)}, "rank(A+B) + rank(A n B) > rank(A) + rank(B)"});
  report.checks = {std::move(r1), std::move(r2), std::move(r3)};
  return report;
}

namespace {

void require_matroid(const RankOracle& m) {
  const auto report = verify_rank_axioms(m);
  if (!report.ok()) throw AxiomViolation("rank function violates axiom " + report.failed().front());
}

// Shared by (i4) and (b4): maxima[a] lists the ids of the maximal members of
// some family attached to subspace a. For every pair (A, B) and choices I, J
// of maxima, some maximum K of A + B must lie in I + J.
void check_maximal_sums(const SubspaceIndex& idx, const std::vector<std::vector<std::size_t>>& maxima, AxiomCheck& check) {
  const Ambient& amb = idx.ambient();
  const std::size_t n = idx.size();
  std::unordered_map<std::uint64_t, std::size_t> sums;
  auto sum_id = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    const std::uint64_t key = static_cast<std::uint64_t>(a) * n + b;
    auto it = sums.find(key);
    if (it != sums.end()) return it->second;
    const std::size_t s = idx.id(amb.sum(idx.at(a), idx.at(b)));
    sums.emplace(key, s);
    return s;
  };
  std::unordered_map<std::uint64_t, bool> found;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t c = sum_id(a, b);
      for (std::size_t i : maxima[a])
        for (std::size_t j : maxima[b]) {
          const std::size_t s = sum_id(i, j);
          const std::uint64_t key = static_cast<std::uint64_t>(s) * n + c;
          auto it = found.find(key);
          bool ok;
          if (it != found.end()) {
            ok = it->second;
          } else {
            ok = std::any_of(maxima[c].begin(), maxima[c].end(),
                             [&](std::size_t k) { return amb.is_subspace_of(idx.at(k), idx.at(s)); });
            found.emplace(key, ok);
          }
          if (!ok)
            check.violations.push_back({{idx.at(a), idx.at(b), idx.at(i), idx.at(j)},
                                        "no maximal member of A+B lies in I+J"});
        }
    }
}

// Ids of the inclusion-maximal elements among the given ids.
std::vector<std::size_t> maximal_ids(const SubspaceIndex& idx, std::vector<std::size_t> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<std::size_t> out;
  for (std::size_t a : ids) {
    bool maximal = true;
    for (std::size_t b : ids)
      if (idx.at(b).dim() > idx.at(a).dim() && idx.ambient().is_subspace_of(idx.at(a), idx.at(b))) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

}  // namespace

QComplex independent_spaces(const RankOracle& m) {
  require_matroid(m);
  std::vector<Subspace> faces;
  for (std::size_t id = 0; id < m.index().size(); ++id)
    if (m.rank_at(id) == m.index().at(id).dim()) faces.push_back(m.index().at(id));
  return QComplex::from_faces(m.ambient(), std::move(faces));
}

BasisFamily bases(const RankOracle& m) {
  require_matroid(m);
  BasisFamily out;
  const int r = m.matroid_rank();
  for (std::size_t id = 0; id < m.index().size(); ++id) {
    const Subspace& s = m.index().at(id);
    if (s.dim() == r && m.rank_at(id) == r) out.bases.push_back(s);
  }
  return out;
}

AxiomReport verify_independence_axioms(const SubspaceIndex& idx, const std::vector<Subspace>& family) {
  const Ambient& amb = idx.ambient();
  std::vector<std::size_t> member_ids;
  for (const auto& f : family) member_ids.push_back(idx.id(f));
  std::sort(member_ids.begin(), member_ids.end());
  member_ids.erase(std::unique(member_ids.begin(), member_ids.end()), member_ids.end());
  std::unordered_set<Subspace> members;
  for (auto id : member_ids) members.insert(idx.at(id));

  AxiomReport report;
  AxiomCheck i1{"i1", {}};
  if (members.empty()) i1.violations.push_back({{}, "family is empty"});

  AxiomCheck i2{"i2", {}};
  for (auto id : member_ids) {
    const Subspace& b = idx.at(id);
    if (b.dim() == 0) continue;
    for (const auto& h : subspaces_of(amb, b, b.dim() - 1))
      if (!members.count(h)) i2.violations.push_back({{h, b}, "subspace of a member is missing"});
  }

  AxiomCheck i3{"i3", {}};
  std::vector<std::vector<Vector>> points(member_ids.size());
  for (std::size_t k = 0; k < member_ids.size(); ++k) points[k] = projective_points(amb, idx.at(member_ids[k]));
  for (std::size_t ka = 0; ka < member_ids.size(); ++ka)
    for (std::size_t kb = 0; kb < member_ids.size(); ++kb) {
      const Subspace& a = idx.at(member_ids[ka]);
      const Subspace& b = idx.at(member_ids[kb]);
      if (a.dim() <= b.dim()) continue;
      const bool augments = std::any_of(points[ka].begin(), points[ka].end(), [&](const Vector& x) {
        return !amb.contains(b, x) && members.count(amb.add_vector(b, x));
      });
      if (!augments) i3.violations.push_back({{a, b}, "no x in A \\ B with B + <x> in the family"});
    }

  AxiomCheck i4{"i4", {}};
  std::vector<std::vector<std::size_t>> maxima(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    std::vector<std::size_t> inside;
    for (auto id : member_ids)
      if (amb.is_subspace_of(idx.at(id), idx.at(a))) inside.push_back(id);
    maxima[a] = maximal_ids(idx, std::move(inside));
  }
  check_maximal_sums(idx, maxima, i4);

  report.checks = {std::move(i1), std::move(i2), std::move(i3), std::move(i4)};
  return report;
}

RankOracle rank_from_independents(SubspaceIndexPtr index, const std::vector<Subspace>& family) {
  const auto report = verify_independence_axioms(*index, family);
  if (!report.ok()) throw AxiomViolation("family violates axiom " + report.failed().front());
  const Ambient& amb = index->ambient();
  return RankOracle::from_function(index, [&](const Subspace& a) {
    int best = 0;
    for (const auto& b : family)
      if (b.dim() > best && amb.is_subspace_of(b, a)) best = b.dim();
    return best;
  });
}

AxiomReport verify_basis_axioms(const SubspaceIndex& idx, const BasisFamily& family) {
  const Ambient& amb = idx.ambient();
  std::vector<Subspace> bs;
  {
    std::vector<std::size_t> ids;
    for (const auto& b : family.bases) ids.push_back(idx.id(b));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (auto id : ids) bs.push_back(idx.at(id));
  }
  std::unordered_set<Subspace> members(bs.begin(), bs.end());
  AxiomReport report;

  AxiomCheck b1{"b1", {}};
  if (bs.empty()) b1.violations.push_back({{}, "no bases"});

  AxiomCheck b2{"b2", {}};
  for (const auto& x : bs)
    for (const auto& y : bs)
      if (!(x == y) && amb.is_subspace_of(x, y)) b2.violations.push_back({{x, y}, "basis properly inside another"});

  AxiomCheck b3{"b3", {}};
  std::vector<std::vector<Vector>> points;
  for (const auto& b : bs) points.push_back(projective_points(amb, b));
  for (std::size_t k1 = 0; k1 < bs.size(); ++k1)
    for (std::size_t k2 = 0; k2 < bs.size(); ++k2) {
      const Subspace& x = bs[k1];
      const Subspace& y = bs[k2];
      const int cdim = x.dim() - 1;
      if (k1 == k2 || cdim < 0 || cdim > y.dim()) continue;
      const Subspace meet = amb.intersect(x, y);
      for (const auto& c : subspaces_of(amb, y, cdim)) {
        if (!amb.is_subspace_of(meet, c)) continue;
        const bool exchanged = std::any_of(points[k1].begin(), points[k1].end(), [&](const Vector& v) {
          return !amb.contains(c, v) && members.count(amb.add_vector(c, v));
        });
        if (!exchanged) b3.violations.push_back({{x, y, c}, "no x in B1 with C + <x> a basis"});
      }
    }

  AxiomCheck b4{"b4", {}};
  std::vector<std::vector<std::size_t>> maxima(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    std::vector<std::size_t> cuts;
    for (const auto& b : bs) cuts.push_back(idx.id(amb.intersect(b, idx.at(a))));
    maxima[a] = maximal_ids(idx, std::move(cuts));
  }
  check_maximal_sums(idx, maxima, b4);

  report.checks = {std::move(b1), std::move(b2), std::move(b3), std::move(b4)};
  return report;
}

namespace {

std::optional<Vector> first_point(const Ambient& amb, const Subspace& from, const Subspace& avoid) {
  for (auto& v : projective_points(amb, from))
    if (!amb.contains(avoid, v)) return v;
  return std::nullopt;
}

ExchangeResult exchange_step(const RankOracle& m, const Subspace& b1, const Subspace& b2, const Vector& y) {
  const Ambient& amb = m.ambient();
  const int r = m.matroid_rank();
  const Subspace meet = amb.intersect(b1, b2);
  const int s = r - meet.dim();
  if (s == 1) {
    auto x = first_point(amb, b1, b2);
    if (!x) throw AxiomViolation("dual basis exchange: B1 inside B2");
    return {meet, *x};
  }
  // B2 = A (+) <y> (+) <y'> with B1 n B2 inside A.
  const Subspace with_y = amb.add_vector(meet, y);
  const auto y2 = first_point(amb, b2, with_y);
  if (!y2) throw AxiomViolation("dual basis exchange: B2 too small");
  Subspace a = meet;
  Subspace spanned = amb.add_vector(with_y, *y2);
  while (spanned.dim() < b2.dim()) {
    const auto z = first_point(amb, b2, spanned);
    a = amb.add_vector(a, *z);
    spanned = amb.add_vector(spanned, *z);
  }
  const Subspace c = amb.add_vector(a, y);
  for (const auto& x : projective_points(amb, b1)) {
    if (amb.contains(b2, x)) continue;
    const Subspace candidate = amb.add_vector(c, x);
    if (candidate.dim() == r && m.is_basis(candidate)) return exchange_step(m, b1, candidate, y);
  }
  throw AxiomViolation("dual basis exchange: no basis exchange witness, input is not a q-matroid");
}

}  // namespace

ExchangeResult dual_basis_exchange(const RankOracle& m, const Subspace& b1, const Subspace& b2, const Vector& y) {
  const Ambient& amb = m.ambient();
  amb.check(b1);
  amb.check(b2);
  amb.check(y);
  if (!m.is_basis(b1) || !m.is_basis(b2)) throw std::invalid_argument("dual_basis_exchange: B1 and B2 must be bases");
  if (b1 == b2) throw std::invalid_argument("dual_basis_exchange: need B1 != B2");
  if (!amb.contains(b2, y) || amb.contains(b1, y)) throw std::invalid_argument("dual_basis_exchange: need y in B2 \\ B1");
  ExchangeResult result = exchange_step(m, b1, b2, y);
  if (!exchange_holds(m, b1, b2, y, result))
    throw AxiomViolation("dual basis exchange: result fails its postconditions");
  return result;
}

bool exchange_holds(const RankOracle& m, const Subspace& b1, const Subspace& b2, const Vector& y,
                    const ExchangeResult& result) {
  const Ambient& amb = m.ambient();
  const Subspace meet = amb.intersect(b1, b2);
  if (!amb.is_subspace_of(meet, result.u)) return false;
  if (result.x.is_zero() || !amb.contains(b1, result.x) || amb.contains(b2, result.x)) return false;
  const Subspace xline = amb.span(std::vector<Vector>{result.x});
  if (!amb.is_direct_sum(b1, result.u, xline)) return false;
  const Subspace yline = amb.span(std::vector<Vector>{y});
  const Subspace swapped = amb.sum(result.u, yline);
  return amb.is_direct_sum(swapped, result.u, yline) && m.is_basis(swapped);
}

}  // namespace qshell
