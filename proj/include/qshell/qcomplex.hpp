#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qshell/linalg.hpp"
#include "qshell/subspace.hpp"

namespace qshell {

/// A nonzero-face collection: Delta \ {0} viewed as a poset under inclusion.
struct PuncturedComplex {
  Ambient ambient;
  std::vector<Subspace> faces;  // CanonicalLess order, no zero subspace
};

/// A downward-closed family of subspaces of F_q^n. Every face is stored.
class QComplex {
 public:
  explicit QComplex(Ambient amb) : amb_(std::move(amb)) {}

  // Throws std::invalid_argument unless faces is downward closed.
  static QComplex from_faces(Ambient amb, std::vector<Subspace> faces);
  // Downward closure of faces. closure_added reports whether any face had
  // to be added (the zero subspace aside).
  static QComplex closure(Ambient amb, const std::vector<Subspace>& faces, bool* closure_added = nullptr);

  const Ambient& ambient() const { return amb_; }
  const std::vector<Subspace>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }
  bool contains(const Subspace& s) const { return ids_.count(s) != 0; }

  const std::vector<Subspace>& facets() const { return facets_; }
  bool is_pure() const;
  // Throws on the empty complex.
  int dim() const;
  PuncturedComplex puncture() const;

 private:
  void index();

  Ambient amb_;
  std::vector<Subspace> faces_;
  std::unordered_map<Subspace, std::size_t> ids_;
  std::vector<Subspace> facets_;
};

/// The q-complex generated by the given subspaces (empty input, empty complex).
QComplex generate(const Ambient& amb, const std::vector<Subspace>& generators);

/// S_q^{n-1}: every subspace except E.
QComplex q_sphere(const Ambient& amb, std::size_t max_subspaces = kDefaultMaxSubspaces);

using ShellingOrder = std::vector<Subspace>;

struct ShellingCertificate {
  bool is_shelling = false;
  // On success witness[j][i] (i < j, 0-based) is the least k < j with
  // F_i n F_j inside F_k n F_j and dim(F_k n F_j) = r - 1.
  std::vector<std::vector<int>> witness;
  // On failure, the first (i, j) with no such k.
  std::optional<std::pair<int, int>> violation;
};

/// Checks the pairwise shelling criterion. Throws std::invalid_argument if
/// the complex is impure or order is not a permutation of its facets.
ShellingCertificate is_shelling(const QComplex& complex, const ShellingOrder& order);

/// Facets sorted by the tower order. Throws on impure complexes.
ShellingOrder shelling_via_order(const QComplex& complex, const ElementOrder& order = {});

// Indices below are 0-based positions in a shelling order.

/// R_{i,j} = {x in F_i : <x> (+) (F_i n F_j) = F_i} for j < i, ascending.
std::vector<Vector> restriction_set(const Ambient& amb, const ShellingOrder& order, int i, int j);

/// I_i: faces of <F_i> meeting every nonempty R_{i,j}, j < i.
std::vector<Subspace> interval(const Ambient& amb, const ShellingOrder& order, int i);

struct IntervalPartition {
  std::vector<std::vector<Subspace>> intervals;
  // Nonempty restriction sets keyed by (i, j).
  std::vector<std::pair<std::pair<int, int>, std::vector<Vector>>> restriction_sets;
};

struct PartitionReport {
  bool ok = false;
  std::string violation;  // first failed identity when !ok
  IntervalPartition partition;
};

/// Checks Delta_i = I_i u Delta_{i-1}, I_i n Delta_{i-1} = {} for each i and
/// that the intervals cover Delta disjointly. Throws if order is not a shelling.
PartitionReport verify_interval_partition(const QComplex& complex, const ShellingOrder& order);

struct ConeResult {
  enum class Kind { none, apex, apex_without_hypothesis };
  Kind kind = Kind::none;
  std::optional<Subspace> apex;
};

/// Looks for a face inside every facet (the least such by dimension, then
/// tower order) and checks the intersection-closure hypothesis that makes the
/// collection contractible.
ConeResult cone_apex(const PuncturedComplex& punctured);

/// Entry i-2 answers, for i in [2, ell] (1-based), whether the union of the
/// R_{i,j}, j < i, misses some nonzero vector of F_i.
std::vector<bool> acyclicity_hypothesis(const Ambient& amb, const ShellingOrder& order, int ell);

/// True iff the nonzero faces of <F_i> lying in <F_1..F_{i-1}> are exactly
/// the proper nonzero subspaces of F_i. i is 0-based, i >= 1.
bool sphere_link_check(const Ambient& amb, const ShellingOrder& order, int i);

/// The shelling of S_q^{n-1} that lists the hyperplanes containing a first.
struct SphereShelling {
  ShellingOrder order;
  int ell = 0;  // number of facets through a
  Vector apex_vector;
};

SphereShelling sphere_shelling(const Ambient& amb, const Vector& a);

/// <F_0, ..., F_{count-1}>.
QComplex prefix_complex(const Ambient& amb, const ShellingOrder& order, int count);

}  // namespace qshell
