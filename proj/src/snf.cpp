#include "qshell/snf.hpp"

#include <stdexcept>

#include "qshell/kernels.hpp"

namespace qshell {

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

SnfResult smith_normal_form(const IntMatrix& m) { return kernels::smith_normal_form(m); }

}  // namespace qshell
