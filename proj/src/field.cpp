#include "qshell/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qshell {
namespace {

using Poly = std::vector<int>;  // low degree first

int ipow(int base, int exp) {
  int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod_p(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw std::domain_error("no inverse mod p");
}

// Remainder of a modulo b (b nonzero) over GF(p).
Poly poly_mod(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  const int lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const int shift = static_cast<int>(a.size() - b.size());
    const int factor = a.back() * lead_inv % p;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i + shift] = ((a[i + shift] - factor * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits(int repr, int p, int k) {
  Poly d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = repr % p;
    repr /= p;
  }
  return d;
}

int encode(const Poly& d, int p) {
  int r = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) r = r * p + *it;
  return r;
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec prime_power(int q) {
  if (q < 2 || q > Field::kMaxOrder)
    throw std::invalid_argument("field order out of range: " + std::to_string(q));
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  return FieldSpec{p, k, {}};
}

bool is_irreducible(int p, const std::vector<int>& poly) {
  Poly f = poly;
  trim(f);
  const int k = static_cast<int>(f.size()) - 1;
  if (k < 1) return false;
  for (int d = 1; d <= k / 2; ++d) {
    // All monic polynomials of degree d.
    const int count = ipow(p, d);
    for (int c = 0; c < count; ++c) {
      Poly g = digits(c, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> default_modulus(int p, int k) {
  if (k == 1) return {0, 1};
  const int count = ipow(p, k);
  // Counting c upwards enumerates low-degree-first coefficient lists in
  // colexicographic order, so keep the lexicographic minimum explicitly.
  std::vector<int> best;
  for (int c = 0; c < count; ++c) {
    Poly cand = digits(c, p, k);
    cand.push_back(1);
    if (!is_irreducible(p, cand)) continue;
    if (best.empty() || std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end()))
      best = cand;
  }
  return best;
}

FieldPtr Field::make(int q) { return make(prime_power(q)); }

FieldPtr Field::make(const FieldSpec& spec) {
  if (!is_prime(spec.p)) throw std::invalid_argument("characteristic is not prime");
  if (spec.k < 1) throw std::invalid_argument("extension degree must be positive");
  if (ipow(spec.p, spec.k) > kMaxOrder) throw std::invalid_argument("field order too large");
  std::vector<int> modulus = spec.modulus;
  if (spec.k == 1) {
    modulus = {0, 1};
  } else if (modulus.empty()) {
    modulus = default_modulus(spec.p, spec.k);
  } else {
    if (static_cast<int>(modulus.size()) != spec.k + 1 || modulus.back() != 1)
      throw std::invalid_argument("modulus must be monic of degree k");
    for (int c : modulus)
      if (c < 0 || c >= spec.p) throw std::invalid_argument("modulus coefficient out of range");
    if (!is_irreducible(spec.p, modulus)) throw std::invalid_argument("modulus is reducible");
  }
  return FieldPtr(new Field(spec.p, spec.k, std::move(modulus)));
}

Field::Field(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), q_(ipow(p, k)), modulus_(std::move(modulus)) {
  const auto qq = static_cast<std::size_t>(q_);
  add_.resize(qq * qq);
  mul_.resize(qq * qq);
  neg_.resize(qq);
  inv_.assign(qq, 0);
  for (int a = 0; a < q_; ++a) {
    const Poly da = digits(a, p_, k_);
    Poly na(k_);
    for (int i = 0; i < k_; ++i) na[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<Elem>(encode(na, p_));
    for (int b = 0; b < q_; ++b) {
      const Poly db = digits(b, p_, k_);
      Poly sum(k_);
      for (int i = 0; i < k_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = static_cast<Elem>(encode(sum, p_));

      Poly prod(2 * k_, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      Poly red = k_ == 1 ? Poly{prod[0]} : poly_mod(prod, modulus_, p_);
      red.resize(k_, 0);
      mul_[a * q_ + b] = static_cast<Elem>(encode(red, p_));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

FieldElement::FieldElement(FieldPtr field, int repr) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("null field");
  if (repr < 0 || repr >= field_->order()) throw std::invalid_argument("repr out of range");
  repr_ = static_cast<Elem>(repr);
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field()->same_as(*b.field())) throw std::invalid_argument("field mismatch");
}
}  // namespace

FieldElement field_add(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field(), a.field()->add(a.repr(), b.repr())};
}

FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field(), a.field()->mul(a.repr(), b.repr())};
}

FieldElement field_inv(const FieldElement& a) { return {a.field(), a.field()->inv(a.repr())}; }

}  // namespace qshell
