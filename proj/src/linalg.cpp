#include "qshell/linalg.hpp"

#include <stdexcept>
#include <string>

namespace qshell {

Vector::Vector(std::initializer_list<int> entries) {
  e_.reserve(entries.size());
  for (int x : entries) e_.push_back(static_cast<Elem>(x));
}

bool Vector::is_zero() const {
  for (auto x : e_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<Vector> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  return from_rows(std::span<const Vector>(rows.begin(), rows.size()), cols);
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(std::vector<Elem>(s.begin(), s.end()));
}

Subspace Subspace::from_reduced_rows(int n, std::vector<Elem> rows) {
  if (n <= 0 || rows.size() % static_cast<std::size_t>(n) != 0)
    throw std::invalid_argument("row data does not match ambient dimension");
  const int r = static_cast<int>(rows.size() / static_cast<std::size_t>(n));
  int last = -1;
  for (int i = 0; i < r; ++i) {
    const Elem* row = rows.data() + static_cast<std::size_t>(i) * n;
    int c = 0;
    while (c < n && row[c] == 0) ++c;
    if (c == n || row[c] != 1 || c <= last) throw std::invalid_argument("rows are not in reduced row echelon form");
    for (int k = 0; k < r; ++k)
      if (k != i && rows[static_cast<std::size_t>(k) * n + c] != 0)
        throw std::invalid_argument("rows are not in reduced row echelon form");
    last = c;
  }
  return Subspace(n, r, std::move(rows));
}

Vector Subspace::row_vector(int i) const {
  auto s = row(i);
  return Vector(std::vector<Elem>(s.begin(), s.end()));
}

Matrix Subspace::basis() const {
  Matrix m(static_cast<std::size_t>(r_), static_cast<std::size_t>(n_));
  for (int i = 0; i < r_; ++i)
    for (int c = 0; c < n_; ++c) m(i, c) = row(i)[c];
  return m;
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> piv(static_cast<std::size_t>(r_));
  for (int i = 0; i < r_; ++i) {
    auto rw = row(i);
    int c = 0;
    while (rw[c] == 0) ++c;
    piv[i] = c;
  }
  return piv;
}

Ambient::Ambient(FieldPtr field, int n) : field_(std::move(field)), n_(n) {
  if (!field_) throw std::invalid_argument("null field");
  if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
}

void Ambient::check(const Subspace& u) const {
  if (u.ambient_dim() != n_)
    throw std::invalid_argument("ambient mismatch: subspace of F^" + std::to_string(u.ambient_dim()) + " in F^" + std::to_string(n_));
  for (auto x : u.data())
    if (x >= q()) throw std::invalid_argument("ambient mismatch: subspace entry outside the field");
}

void Ambient::check(const Vector& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("ambient mismatch: vector of length " + std::to_string(v.size()));
  for (auto x : v)
    if (x >= q()) throw std::invalid_argument("vector entry outside the field");
}

RrefResult Ambient::rref(const Matrix& input) const {
  const Field& f = *field_;
  RrefResult out{input, 0, {}};
  Matrix& m = out.reduced;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t sel = lead;
    while (sel < rows && m(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != lead)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(sel, k), m(lead, k));
    const Elem scale = f.inv(m(lead, c));
    for (std::size_t k = c; k < cols; ++k) m(lead, k) = f.mul(m(lead, k), scale);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Elem factor = m(r, c);
      for (std::size_t k = c; k < cols; ++k) m(r, k) = f.sub(m(r, k), f.mul(factor, m(lead, k)));
    }
    out.pivots.push_back(static_cast<int>(c));
    ++lead;
  }
  out.rank = static_cast<int>(lead);
  return out;
}

Subspace Ambient::span(const Matrix& generators) const {
  if (generators.rows() == 0) return zero();
  if (static_cast<int>(generators.cols()) != n_) throw std::invalid_argument("ambient mismatch: generator length");
  for (auto x : generators.data())
    if (x >= q()) throw std::invalid_argument("matrix entry outside the field");
  RrefResult res = rref(generators);
  std::vector<Elem> rows(res.reduced.data().begin(), res.reduced.data().begin() + static_cast<std::ptrdiff_t>(res.rank) * n_);
  return Subspace::from_reduced_rows(n_, std::move(rows));
}

Subspace Ambient::span(std::span<const Vector> vectors) const {
  for (const auto& v : vectors) check(v);
  return span(Matrix::from_rows(vectors, static_cast<std::size_t>(n_)));
}

Subspace Ambient::full() const {
  std::vector<Elem> rows(static_cast<std::size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i) rows[static_cast<std::size_t>(i) * n_ + i] = 1;
  return Subspace::from_reduced_rows(n_, std::move(rows));
}

bool Ambient::contains(const Subspace& u, std::span<const Elem> v) const {
  const Field& f = *field_;
  std::vector<Elem> w(v.begin(), v.end());
  const auto piv = u.pivots();
  for (int i = 0; i < u.dim(); ++i) {
    const Elem c = w[piv[i]];
    if (c == 0) continue;
    auto rw = u.row(i);
    for (int k = piv[i]; k < n_; ++k) w[k] = f.sub(w[k], f.mul(c, rw[k]));
  }
  for (auto x : w)
    if (x != 0) return false;
  return true;
}

bool Ambient::contains(const Subspace& u, const Vector& v) const {
  check(u);
  check(v);
  return contains(u, v.entries());
}

bool Ambient::is_subspace_of(const Subspace& v, const Subspace& u) const {
  check(u);
  check(v);
  if (v.dim() > u.dim()) return false;
  for (int i = 0; i < v.dim(); ++i)
    if (!contains(u, v.row(i))) return false;
  return true;
}

Subspace Ambient::sum(const Subspace& u, const Subspace& v) const {
  check(u);
  check(v);
  Matrix m(static_cast<std::size_t>(u.dim() + v.dim()), static_cast<std::size_t>(n_));
  for (int i = 0; i < u.dim(); ++i)
    for (int c = 0; c < n_; ++c) m(i, c) = u.row(i)[c];
  for (int i = 0; i < v.dim(); ++i)
    for (int c = 0; c < n_; ++c) m(u.dim() + i, c) = v.row(i)[c];
  return span(m);
}

Subspace Ambient::intersect(const Subspace& u, const Subspace& v) const {
  check(u);
  check(v);
  const int r = u.dim();
  const int s = v.dim();
  if (r == 0 || s == 0) return zero();
  // Kernel of the stacked basis: rows of [U; V | I] whose left block reduces
  // to zero carry coefficients (a, b) with aU = -bV, and aU spans U n V.
  const std::size_t rows = static_cast<std::size_t>(r + s);
  Matrix aug(rows, static_cast<std::size_t>(n_) + rows);
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < n_; ++c) aug(i, c) = u.row(i)[c];
  for (int i = 0; i < s; ++i)
    for (int c = 0; c < n_; ++c) aug(r + i, c) = v.row(i)[c];
  for (std::size_t i = 0; i < rows; ++i) aug(i, n_ + i) = 1;
  const RrefResult red = rref(aug);
  std::vector<Vector> common;
  for (std::size_t i = 0; i < rows; ++i) {
    bool left_zero = true;
    for (int c = 0; c < n_ && left_zero; ++c) left_zero = red.reduced(i, c) == 0;
    if (!left_zero) continue;
    std::vector<Elem> coeffs(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) coeffs[k] = red.reduced(i, n_ + k);
    common.push_back(combine(u, coeffs));
  }
  return span(common);
}

bool Ambient::is_direct_sum(const Subspace& w, const Subspace& u, const Subspace& v) const {
  return sum(u, v) == w && intersect(u, v).is_zero();
}

Subspace Ambient::add_vector(const Subspace& u, const Vector& x) const {
  check(x);
  Matrix m(static_cast<std::size_t>(u.dim() + 1), static_cast<std::size_t>(n_));
  for (int i = 0; i < u.dim(); ++i)
    for (int c = 0; c < n_; ++c) m(i, c) = u.row(i)[c];
  for (int c = 0; c < n_; ++c) m(u.dim(), c) = x[c];
  return span(m);
}

Vector Ambient::combine(const Subspace& u, std::span<const Elem> coeffs) const {
  const Field& f = *field_;
  Vector out(static_cast<std::size_t>(n_));
  for (int i = 0; i < u.dim(); ++i) {
    if (coeffs[i] == 0) continue;
    auto rw = u.row(i);
    for (int c = 0; c < n_; ++c) out[c] = f.add(out[c], f.mul(coeffs[i], rw[c]));
  }
  return out;
}

std::vector<Vector> Ambient::elements(const Subspace& u) const {
  check(u);
  const int r = u.dim();
  std::size_t total = 1;
  for (int i = 0; i < r; ++i) total *= static_cast<std::size_t>(q());
  std::vector<Vector> out;
  out.reserve(total);
  std::vector<Elem> coeffs(static_cast<std::size_t>(r), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int i = r - 1; i >= 0; --i) {
      coeffs[i] = static_cast<Elem>(rest % static_cast<std::size_t>(q()));
      rest /= static_cast<std::size_t>(q());
    }
    out.push_back(combine(u, coeffs));
  }
  return out;
}

bool Ambient::is_rref(const Matrix& m) const {
  int last_pivot = -1;
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    int piv = -1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) {
        piv = static_cast<int>(c);
        break;
      }
    if (piv < 0) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row || piv <= last_pivot || m(r, piv) != 1) return false;
    for (std::size_t k = 0; k < m.rows(); ++k)
      if (k != r && m(k, piv) != 0) return false;
    last_pivot = piv;
  }
  return true;
}

}  // namespace qshell
