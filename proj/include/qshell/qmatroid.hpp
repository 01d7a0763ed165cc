#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qshell/linalg.hpp"
#include "qshell/qcomplex.hpp"
#include "qshell/subspace.hpp"

namespace qshell {

/// A q-matroid given by its fully materialised rank table over Sigma(E).
/// Values are only required to be nonnegative; the rank axioms are checked
/// by verify_rank_axioms, not enforced here.
class RankOracle {
 public:
  // ranks[id] is the rank of index->at(id).
  RankOracle(SubspaceIndexPtr index, std::vector<int> ranks);
  static RankOracle from_function(SubspaceIndexPtr index, const std::function<int(const Subspace&)>& rank);

  const SubspaceIndex& index() const { return *index_; }
  const SubspaceIndexPtr& index_ptr() const { return index_; }
  const Ambient& ambient() const { return index_->ambient(); }
  const std::vector<int>& table() const { return ranks_; }

  int rank(const Subspace& s) const { return ranks_[index_->id(s)]; }
  int rank_at(std::size_t id) const { return ranks_[id]; }
  // rank(E)
  int matroid_rank() const { return ranks_.back(); }
  bool is_independent(const Subspace& s) const { return rank(s) == s.dim(); }
  bool is_basis(const Subspace& s) const { return is_independent(s) && rank(s) == matroid_rank(); }

  friend bool operator==(const RankOracle& a, const RankOracle& b) {
    return a.ambient() == b.ambient() && a.ranks_ == b.ranks_;
  }

 private:
  SubspaceIndexPtr index_;
  std::vector<int> ranks_;
};

/// U_q(k, n): rank(A) = min(dim A, k). Requires 1 <= k <= n.
RankOracle uniform_matroid(int k, SubspaceIndexPtr index);
RankOracle uniform_matroid(int k, int n, int q, std::size_t max_subspaces = kDefaultMaxSubspaces);

struct Violation {
  std::vector<Subspace> witnesses;
  std::string detail;
};

struct AxiomCheck {
  std::string axiom;  // "r1", "i3", "b4", ...
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  const AxiomCheck& at(const std::string& axiom) const;
  // Axiom names with at least one violation.
  std::vector<std::string> failed() const;
};

/// (r1) bounds, (r2) monotonicity over comparable pairs, (r3)
/// submodularity over all pairs.
AxiomReport verify_rank_axioms(const RankOracle& m);

/// Delta_M: the independent subspaces. Throws AxiomViolation if m fails the
/// rank axioms.
QComplex independent_spaces(const RankOracle& m);

struct BasisFamily {
  std::vector<Subspace> bases;  // CanonicalLess order
};

BasisFamily bases(const RankOracle& m);

/// (i1)-(i4) for an arbitrary family of subspaces.
AxiomReport verify_independence_axioms(const SubspaceIndex& index, const std::vector<Subspace>& family);

/// rank(A) = max{dim B : B in family, B inside A}. Throws AxiomViolation if
/// the family fails the independence axioms.
RankOracle rank_from_independents(SubspaceIndexPtr index, const std::vector<Subspace>& family);

/// (b1)-(b4) for a family of candidate bases.
AxiomReport verify_basis_axioms(const SubspaceIndex& index, const BasisFamily& family);

struct ExchangeResult {
  Subspace u;
  Vector x;
};

/// Given bases B1 != B2 and y in B2 \ B1, finds U and x in B1 \ B2 with
/// B1 n B2 inside U, B1 = U (+) <x> and U (+) <y> a basis. Built by induction
/// on r - dim(B1 n B2), each basis-exchange step found by search. Throws
/// std::invalid_argument on bad input and AxiomViolation when no exchange
/// witness exists.
ExchangeResult dual_basis_exchange(const RankOracle& m, const Subspace& b1, const Subspace& b2, const Vector& y);

/// Independent check of the three exchange clauses.
bool exchange_holds(const RankOracle& m, const Subspace& b1, const Subspace& b2, const Vector& y,
                    const ExchangeResult& result);

/// Nonzero vectors of U whose first nonzero entry is 1, ascending in the
/// vector order. Exchange witnesses are taken from here, least first.
std::vector<Vector> projective_points(const Ambient& amb, const Subspace& u);

}  // namespace qshell
