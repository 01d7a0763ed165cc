#pragma once

// Hot loops of the verification pipeline. Each kernel exists twice:
// qshell::kernels holds the OpenMP version used by the library, and
// qshell::reference a plain serial version kept for cross-checking and
// benchmarking. Both produce identical, deterministically ordered output.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qshell/linalg.hpp"
#include "qshell/poset.hpp"
#include "qshell/snf.hpp"
#include "qshell/subspace.hpp"

namespace qshell {

struct WitnessTable {
  bool ok = false;
  // witness[j][i], i < j; -1 where none. Rows after a violation are empty.
  std::vector<std::vector<int>> witness;
  std::optional<std::pair<int, int>> violation;  // least j, then least i
};

struct RankSweep {
  // (a, b) ids with A strictly inside B and rank(A) > rank(B).
  std::vector<std::pair<std::size_t, std::size_t>> monotonicity;
  // a < b ids with r(A+B) + r(A n B) > r(A) + r(B).
  std::vector<std::pair<std::size_t, std::size_t>> submodularity;

  friend bool operator==(const RankSweep&, const RankSweep&) = default;
};

namespace kernels {

WitnessTable shelling_witnesses(const Ambient& amb, const std::vector<Subspace>& facets);
RankSweep rank_sweep(const SubspaceIndex& index, const std::vector<int>& ranks);
OrderComplex order_complex(const Poset& poset);
SnfResult smith_normal_form(IntMatrix m);

}  // namespace kernels

namespace reference {

WitnessTable shelling_witnesses(const Ambient& amb, const std::vector<Subspace>& facets);
RankSweep rank_sweep(const SubspaceIndex& index, const std::vector<int>& ranks);
OrderComplex order_complex(const Poset& poset);
SnfResult smith_normal_form(IntMatrix m);

}  // namespace reference

}  // namespace qshell
