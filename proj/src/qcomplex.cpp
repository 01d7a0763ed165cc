#include "qshell/qcomplex.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "qshell/kernels.hpp"

namespace qshell {
namespace {

std::vector<Subspace> hyperplanes_of(const Ambient& amb, const Subspace& s) {
  return s.dim() == 0 ? std::vector<Subspace>{} : subspaces_of(amb, s, s.dim() - 1);
}

void require_index(int i, std::size_t t, const char* what) {
  if (i < 0 || static_cast<std::size_t>(i) >= t) throw std::invalid_argument(std::string(what) + ": index out of range");
}

std::string describe(const Subspace& s) {
  std::string out = "<";
  for (int i = 0; i < s.dim(); ++i) {
    if (i) out += "; ";
    for (int c = 0; c < s.ambient_dim(); ++c) {
      if (c) out += ",";
      out += std::to_string(s.row(i)[c]);
    }
  }
  return out + ">";
}

}  // namespace

void QComplex::index() {
  std::sort(faces_.begin(), faces_.end(), CanonicalLess{});
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  ids_.clear();
  for (std::size_t i = 0; i < faces_.size(); ++i) ids_.emplace(faces_[i], i);
  std::vector<bool> covered(faces_.size(), false);
  for (const auto& f : faces_)
    for (const auto& h : hyperplanes_of(amb_, f)) {
      auto it = ids_.find(h);
      if (it == ids_.end())
        throw std::invalid_argument("not downward closed: " + describe(h) + " missing below " + describe(f));
      covered[it->second] = true;
    }
  facets_.clear();
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (!covered[i]) facets_.push_back(faces_[i]);
}

QComplex QComplex::from_faces(Ambient amb, std::vector<Subspace> faces) {
  for (const auto& f : faces) amb.check(f);
  QComplex c(std::move(amb));
  c.faces_ = std::move(faces);
  c.index();
  return c;
}

QComplex QComplex::closure(Ambient amb, const std::vector<Subspace>& faces, bool* closure_added) {
  std::unordered_set<Subspace> seen;
  std::deque<Subspace> work;
  for (const auto& f : faces) {
    amb.check(f);
    if (seen.insert(f).second) work.push_back(f);
  }
  // the zero subspace is a face of every nonempty complex; it never counts
  // as added
  if (!seen.empty()) seen.insert(amb.zero());
  const std::size_t given = seen.size();
  while (!work.empty()) {
    Subspace s = std::move(work.front());
    work.pop_front();
    for (auto& h : hyperplanes_of(amb, s))
      if (seen.insert(h).second) work.push_back(std::move(h));
  }
  if (closure_added) *closure_added = seen.size() != given;
  return from_faces(std::move(amb), std::vector<Subspace>(seen.begin(), seen.end()));
}

bool QComplex::is_pure() const {
  for (const auto& f : facets_)
    if (f.dim() != facets_.front().dim()) return false;
  return true;
}

int QComplex::dim() const {
  if (faces_.empty()) throw std::invalid_argument("dimension of the empty complex");
  return faces_.back().dim();
}

PuncturedComplex QComplex::puncture() const {
  PuncturedComplex p{amb_, {}};
  for (const auto& f : faces_)
    if (!f.is_zero()) p.faces.push_back(f);
  return p;
}

QComplex generate(const Ambient& amb, const std::vector<Subspace>& generators) {
  return QComplex::closure(amb, generators);
}

QComplex q_sphere(const Ambient& amb, std::size_t max_subspaces) {
  auto all = enumerate_all_subspaces(amb, max_subspaces);
  all.pop_back();  // E is last in canonical order
  return QComplex::from_faces(amb, std::move(all));
}

namespace {

void require_pure_permutation(const QComplex& complex, const ShellingOrder& order) {
  if (!complex.is_pure()) throw std::invalid_argument("shelling requires a pure complex");
  const auto& facets = complex.facets();
  if (order.size() != facets.size()) throw std::invalid_argument("order is not a permutation of the facets");
  std::unordered_set<Subspace> facet_set(facets.begin(), facets.end());
  std::unordered_set<Subspace> used;
  for (const auto& f : order)
    if (!facet_set.count(f) || !used.insert(f).second)
      throw std::invalid_argument("order is not a permutation of the facets");
}

}  // namespace

ShellingCertificate is_shelling(const QComplex& complex, const ShellingOrder& order) {
  require_pure_permutation(complex, order);
  auto table = kernels::shelling_witnesses(complex.ambient(), order);
  ShellingCertificate cert;
  cert.is_shelling = table.ok;
  cert.violation = table.violation;
  if (table.ok) cert.witness = std::move(table.witness);
  return cert;
}

ShellingOrder shelling_via_order(const QComplex& complex, const ElementOrder& order) {
  if (!complex.is_pure()) throw std::invalid_argument("shelling requires a pure complex");
  return sort_facets(complex.ambient(), complex.facets(), order);
}

std::vector<Vector> restriction_set(const Ambient& amb, const ShellingOrder& order, int i, int j) {
  require_index(i, order.size(), "restriction_set");
  require_index(j, order.size(), "restriction_set");
  if (j >= i) throw std::invalid_argument("restriction_set: need j < i");
  const Subspace& fi = order[i];
  const Subspace meet = amb.intersect(fi, order[j]);
  std::vector<Vector> out;
  if (meet.dim() != fi.dim() - 1) return out;
  for (auto& x : amb.elements(fi))
    if (!amb.contains(meet, x)) out.push_back(std::move(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> interval(const Ambient& amb, const ShellingOrder& order, int i) {
  require_index(i, order.size(), "interval");
  const Subspace& fi = order[i];
  // A meets a nonempty R_{i,j} exactly when A is not inside the hyperplane
  // F_i n F_j of F_i.
  std::vector<Subspace> hyper;
  for (int j = 0; j < i; ++j) {
    Subspace meet = amb.intersect(fi, order[j]);
    if (meet.dim() == fi.dim() - 1) hyper.push_back(std::move(meet));
  }
  std::vector<Subspace> out;
  for (auto& a : all_subspaces_of(amb, fi)) {
    bool keep = true;
    for (const auto& g : hyper)
      if (amb.is_subspace_of(a, g)) {
        keep = false;
        break;
      }
    if (keep) out.push_back(std::move(a));
  }
  return out;
}

PartitionReport verify_interval_partition(const QComplex& complex, const ShellingOrder& order) {
  if (!is_shelling(complex, order).is_shelling)
    throw std::invalid_argument("verify_interval_partition: order is not a shelling");
  const Ambient& amb = complex.ambient();
  const int t = static_cast<int>(order.size());
  PartitionReport report;

  // first[A]: least i with A inside F_i, i.e. A enters the complex at step i.
  std::unordered_map<Subspace, int> first;
  for (const auto& a : complex.faces())
    for (int i = 0; i < t; ++i)
      if (amb.is_subspace_of(a, order[i])) {
        first.emplace(a, i);
        break;
      }

  std::unordered_map<Subspace, int> owner;
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < i; ++j) {
      auto r = restriction_set(amb, order, i, j);
      if (!r.empty()) report.partition.restriction_sets.push_back({{i, j}, std::move(r)});
    }
    auto block = interval(amb, order, i);
    for (const auto& a : block) {
      if (first.at(a) < i && report.violation.empty())
        report.violation = "I_" + std::to_string(i + 1) + " meets Delta_" + std::to_string(i) + " at " + describe(a);
      if (!owner.emplace(a, i).second && report.violation.empty())
        report.violation = "face " + describe(a) + " lies in two intervals";
    }
    report.partition.intervals.push_back(std::move(block));
  }
  for (const auto& [a, i] : first) {
    auto it = owner.find(a);
    if (it == owner.end() || it->second != i) {
      if (report.violation.empty())
        report.violation = "Delta_" + std::to_string(i + 1) + " is not I_" + std::to_string(i + 1) + " u Delta_" +
                           std::to_string(i) + ": " + describe(a) + " uncovered";
    }
  }
  std::size_t total = 0;
  for (const auto& block : report.partition.intervals) total += block.size();
  if (total != complex.size() && report.violation.empty())
    report.violation = "interval sizes sum to " + std::to_string(total) + ", complex has " + std::to_string(complex.size());
  report.ok = report.violation.empty();
  return report;
}

ConeResult cone_apex(const PuncturedComplex& punctured) {
  const Ambient& amb = punctured.ambient;
  const auto& faces = punctured.faces;
  ConeResult result;
  if (faces.empty()) return result;

  std::vector<Subspace> facets;
  for (const auto& a : faces) {
    bool maximal = true;
    for (const auto& b : faces)
      if (b.dim() > a.dim() && amb.is_subspace_of(a, b)) {
        maximal = false;
        break;
      }
    if (maximal) facets.push_back(a);
  }
  Subspace common = facets.front();
  for (const auto& f : facets) common = amb.intersect(common, f);
  for (const auto& a : faces)
    if (!a.is_zero() && amb.is_subspace_of(a, common) && (!result.apex || CanonicalLess{}(a, *result.apex)))
      result.apex = a;
  if (!result.apex) return result;

  // Every finite intersection of facets through a fixed face must be a face.
  std::unordered_set<Subspace> face_set(faces.begin(), faces.end());
  std::set<std::vector<int>> checked;
  bool hypothesis = true;
  for (const auto& c : faces) {
    std::vector<int> through;
    for (std::size_t k = 0; k < facets.size(); ++k)
      if (amb.is_subspace_of(c, facets[k])) through.push_back(static_cast<int>(k));
    if (!checked.insert(through).second) continue;
    std::unordered_set<Subspace> closed;
    std::vector<Subspace> frontier;
    for (int k : through)
      if (closed.insert(facets[k]).second) frontier.push_back(facets[k]);
    while (!frontier.empty() && hypothesis) {
      std::vector<Subspace> next;
      for (const auto& x : frontier)
        for (int k : through) {
          Subspace y = amb.intersect(x, facets[k]);
          if (closed.insert(y).second) {
            if (!face_set.count(y)) hypothesis = false;
            next.push_back(std::move(y));
          }
        }
      frontier = std::move(next);
    }
    if (!hypothesis) break;
  }
  result.kind = hypothesis ? ConeResult::Kind::apex : ConeResult::Kind::apex_without_hypothesis;
  return result;
}

std::vector<bool> acyclicity_hypothesis(const Ambient& amb, const ShellingOrder& order, int ell) {
  if (ell < 1 || static_cast<std::size_t>(ell) > order.size())
    throw std::invalid_argument("acyclicity_hypothesis: need 1 <= ell <= t");
  std::vector<bool> out;
  for (int i = 1; i < ell; ++i) {
    // The R_{i,j} cover F_i \ 0 unless some nonzero vector lies in every
    // hyperplane F_i n F_j.
    Subspace common = order[i];
    for (int j = 0; j < i; ++j) {
      Subspace meet = amb.intersect(order[i], order[j]);
      if (meet.dim() == order[i].dim() - 1) common = amb.intersect(common, meet);
    }
    out.push_back(!common.is_zero());
  }
  return out;
}

bool sphere_link_check(const Ambient& amb, const ShellingOrder& order, int i) {
  require_index(i, order.size(), "sphere_link_check");
  if (i < 1) throw std::invalid_argument("sphere_link_check: need i >= 1");
  const Subspace& fi = order[i];
  for (const auto& a : all_subspaces_of(amb, fi)) {
    if (a.is_zero()) continue;
    bool earlier = false;
    for (int k = 0; k < i && !earlier; ++k) earlier = amb.is_subspace_of(a, order[k]);
    const bool proper = a.dim() < fi.dim();
    if (earlier != proper) return false;
  }
  return true;
}

SphereShelling sphere_shelling(const Ambient& amb, const Vector& a) {
  amb.check(a);
  if (amb.n() < 2) throw std::invalid_argument("sphere_shelling: need n >= 2");
  if (a.is_zero()) throw std::invalid_argument("sphere_shelling: apex vector must be nonzero");
  SphereShelling s;
  s.apex_vector = a;
  std::vector<Subspace> rest;
  for (auto& h : enumerate_grassmannian(amb, amb.n() - 1)) {
    if (amb.contains(h, a))
      s.order.push_back(std::move(h));
    else
      rest.push_back(std::move(h));
  }
  s.ell = static_cast<int>(s.order.size());
  s.order.insert(s.order.end(), rest.begin(), rest.end());
  return s;
}

QComplex prefix_complex(const Ambient& amb, const ShellingOrder& order, int count) {
  if (count < 0 || static_cast<std::size_t>(count) > order.size())
    throw std::invalid_argument("prefix_complex: count out of range");
  return generate(amb, std::vector<Subspace>(order.begin(), order.begin() + count));
}

}  // namespace qshell
