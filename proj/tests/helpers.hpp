#pragma once

#include <vector>

#include "oracles.hpp"
#include "qshell/field.hpp"
#include "qshell/linalg.hpp"

// Bridges between library values and the brute-force oracles.
namespace testing_support {

inline oracle::PolyField poly_field(const qshell::Field& f) {
  return oracle::PolyField(f.characteristic(), f.degree(), f.modulus());
}

inline oracle::Vec to_vec(const qshell::Vector& v) { return oracle::Vec(v.begin(), v.end()); }

inline qshell::Vector from_vec(const oracle::Vec& v) {
  std::vector<qshell::Elem> e(v.begin(), v.end());
  return qshell::Vector(std::move(e));
}

inline oracle::VecSet vectors_of(const qshell::Ambient& amb, const qshell::Subspace& s) {
  std::vector<oracle::Vec> gens;
  for (int i = 0; i < s.dim(); ++i) gens.push_back(to_vec(s.row_vector(i)));
  return oracle::span(poly_field(amb.field()), amb.n(), gens);
}

}  // namespace testing_support
