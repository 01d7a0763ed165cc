#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qshell/linalg.hpp"
#include "qshell/qmatroid.hpp"
#include "qshell/subspace.hpp"

namespace qshell {

// Text formats. Every file starts with a header line `q=<q> n=<n>`; blank
// lines separate blocks and `#` starts a comment.
//
// Subspace list: one block per subspace, one matrix row per line, entries
// as field reprs in [0, q). Any spanning set is accepted; a block of zero
// rows is the zero subspace.
//
// Rank table: one line per subspace, `r1;r2;... | rank` with each row a
// comma-separated list of reprs, and `0 | 0` for the zero subspace. Every
// subspace of F_q^n must occur exactly once.

struct SubspaceList {
  Ambient ambient;
  std::vector<Subspace> subspaces;  // file order
};

// All parsers throw ParseError with a line number.
SubspaceList parse_subspace_list(std::istream& in);
SubspaceList read_subspace_list(const std::string& path);
void write_subspace_list(std::ostream& out, const Ambient& amb, const std::vector<Subspace>& subspaces);

// Throws ResourceCapExceeded if the ambient has more than max_subspaces
// subspaces.
RankOracle parse_rank_table(std::istream& in, std::size_t max_subspaces = kDefaultMaxSubspaces);
RankOracle read_rank_table(const std::string& path, std::size_t max_subspaces = kDefaultMaxSubspaces);
void write_rank_table(std::ostream& out, const RankOracle& m);

// Compact one-line forms, as used in rank tables: "1,0,1;0,1,1", "0".
std::string format_subspace(const Subspace& s);
std::string format_vector(const Vector& v);

}  // namespace qshell
