#pragma once

#include <cstddef>
#include <vector>

namespace qshell {

/// A finite poset given by its strict up-sets.
class Poset {
 public:
  Poset() = default;
  // above[i] lists every j with i < j. Throws std::invalid_argument unless
  // the relation is irreflexive, antisymmetric and transitive.
  explicit Poset(std::vector<std::vector<int>> above);

  std::size_t size() const { return above_.size(); }
  const std::vector<int>& above(std::size_t i) const { return above_[i]; }
  bool less(int i, int j) const;

 private:
  std::vector<std::vector<int>> above_;  // each sorted ascending
};

using Chain = std::vector<int>;

/// All nonempty chains of a poset; simplices[p] holds the p-simplices
/// (chains of p + 1 elements listed in increasing poset order), sorted.
struct OrderComplex {
  std::size_t vertex_count = 0;
  std::vector<std::vector<Chain>> simplices;

  int dim() const { return static_cast<int>(simplices.size()) - 1; }
  std::size_t count(int p) const {
    return p >= 0 && p < static_cast<int>(simplices.size()) ? simplices[p].size() : 0;
  }
};

}  // namespace qshell
