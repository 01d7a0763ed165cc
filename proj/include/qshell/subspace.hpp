#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "qshell/linalg.hpp"

namespace qshell {

inline constexpr std::size_t kDefaultMaxSubspaces = 100000;

/// Number of k-dimensional subspaces of F_q^n.
mpz_class gaussian_binomial(int n, int k, int q);
/// |Sigma(F_q^n)|.
mpz_class count_all_subspaces(int n, int q);

/// A total order on GF(q) with 0 first and 1 second. The default instance
/// orders elements by repr.
class ElementOrder {
 public:
  ElementOrder() = default;
  // sequence lists every repr exactly once, smallest first.
  static ElementOrder from_sequence(int q, const std::vector<int>& sequence);

  bool is_default() const { return rank_.empty(); }
  Elem rank(Elem e) const { return rank_.empty() ? e : rank_[e]; }

 private:
  std::vector<Elem> rank_;
};

/// 1-based position of the first nonzero entry. Throws on the zero vector.
int leading_index(const Vector& v);

struct Profile {
  std::vector<int> indices;  // sorted, 1-based
  friend bool operator==(const Profile&, const Profile&) = default;
};

Profile profile(std::span<const Vector> vectors);

/// Lexicographic extension of the element order, coordinate 1 most
/// significant. Nonzero v, w with p(v) < p(w) always give w < v.
std::strong_ordering vector_compare(const Vector& v, const Vector& w, const ElementOrder& order = {});

struct TowerDecomposition {
  // layers[i] is U_{i+1}: the span of the i+1 basis rows with the largest
  // leading indices. The last layer is the subspace itself.
  std::vector<Subspace> layers;
};

TowerDecomposition tower_decomposition(const Ambient& amb, const Subspace& u);

/// Least vector of U_i \ U_{i-1} (i is 1-based), computed greedily from the
/// echelon rows.
Vector layer_min(const Ambient& amb, const Subspace& u, int i, const ElementOrder& order = {});
/// Same quantity by scanning every vector of U_i \ U_{i-1}.
Vector layer_min_by_scan(const Ambient& amb, const Subspace& u, int i, const ElementOrder& order = {});

/// The tower order on equidimensional subspaces.
std::strong_ordering subspace_compare(const Ambient& amb, const Subspace& u, const Subspace& v,
                                      const ElementOrder& order = {});

/// Orders by dimension, then by the tower order. Used wherever a
/// deterministic listing of mixed-dimension subspaces is needed.
struct CanonicalLess {
  bool operator()(const Subspace& a, const Subspace& b) const;
};

std::vector<Subspace> sort_facets(const Ambient& amb, std::vector<Subspace> facets, const ElementOrder& order = {});

/// G_r(F_q^n) in ascending tower order.
std::vector<Subspace> enumerate_grassmannian(const Ambient& amb, int r, const ElementOrder& order = {});

/// Sigma(F_q^n) sorted by CanonicalLess. Throws ResourceCapExceeded when the
/// count exceeds max_subspaces.
std::vector<Subspace> enumerate_all_subspaces(const Ambient& amb, std::size_t max_subspaces = kDefaultMaxSubspaces);

/// All k-dimensional subspaces of U, in CanonicalLess order.
std::vector<Subspace> subspaces_of(const Ambient& amb, const Subspace& u, int k);
/// Every subspace of U (zero and U included), in CanonicalLess order.
std::vector<Subspace> all_subspaces_of(const Ambient& amb, const Subspace& u);

/// Dense ids for every subspace of an ambient, in CanonicalLess order.
class SubspaceIndex {
 public:
  explicit SubspaceIndex(Ambient amb, std::size_t max_subspaces = kDefaultMaxSubspaces);

  const Ambient& ambient() const { return amb_; }
  std::size_t size() const { return all_.size(); }
  const Subspace& at(std::size_t id) const { return all_[id]; }
  const std::vector<Subspace>& all() const { return all_; }
  // Throws std::invalid_argument for a subspace of a different ambient.
  std::size_t id(const Subspace& s) const;
  std::size_t full_id() const { return all_.size() - 1; }

 private:
  Ambient amb_;
  std::vector<Subspace> all_;
  std::unordered_map<Subspace, std::size_t> ids_;
};

using SubspaceIndexPtr = std::shared_ptr<const SubspaceIndex>;

}  // namespace qshell
