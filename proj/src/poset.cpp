#include "qshell/poset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qshell {

Poset::Poset(std::vector<std::vector<int>> above) : above_(std::move(above)) {
  const int n = static_cast<int>(above_.size());
  for (int i = 0; i < n; ++i) {
    auto& up = above_[i];
    std::sort(up.begin(), up.end());
    if (std::adjacent_find(up.begin(), up.end()) != up.end())
      throw std::invalid_argument("poset: repeated relation at " + std::to_string(i));
    for (int j : up) {
      if (j < 0 || j >= n) throw std::invalid_argument("poset: element out of range");
      if (j == i) throw std::invalid_argument("poset: relation is not irreflexive");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j : above_[i]) {
      if (less(j, i)) throw std::invalid_argument("poset: relation is not antisymmetric");
      for (int k : above_[j])
        if (!less(i, k)) throw std::invalid_argument("poset: relation is not transitive");
    }
}

bool Poset::less(int i, int j) const {
  const auto& up = above_[static_cast<std::size_t>(i)];
  return std::binary_search(up.begin(), up.end(), j);
}

}  // namespace qshell
