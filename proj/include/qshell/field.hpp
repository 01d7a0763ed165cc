#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace qshell {

// Field elements are stored as their base-p digit encoding ("repr"), least
// significant coefficient first. The encoding fits a byte for every field the
// library supports (q < 256).
using Elem = std::uint8_t;

struct FieldSpec {
  int p = 2;
  int k = 1;
  // Coefficients c_0..c_k of a monic irreducible polynomial over GF(p),
  // low degree first. Empty means "use the default modulus".
  std::vector<int> modulus;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^k) with full addition and multiplication tables.
class Field {
 public:
  // Largest supported order; keeps every repr inside Elem.
  static constexpr int kMaxOrder = 255;

  static FieldPtr make(int q);
  static FieldPtr make(const FieldSpec& spec);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  // Throws std::domain_error on zero.
  Elem inv(Elem a) const;

  bool same_as(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  Field(int p, int k, std::vector<int> modulus);

  int p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

// Factorises q as p^k. Throws std::invalid_argument unless q is a prime
// power in [2, Field::kMaxOrder].
FieldSpec prime_power(int q);

bool is_prime(int p);

// Trial division by every monic polynomial of degree 1..k/2 over GF(p).
bool is_irreducible(int p, const std::vector<int>& poly);

// Lexicographically smallest (low-degree-first) monic irreducible of degree k.
std::vector<int> default_modulus(int p, int k);

/// A field element that remembers its field; mixing fields throws.
class FieldElement {
 public:
  FieldElement(FieldPtr field, int repr);

  const FieldPtr& field() const { return field_; }
  Elem repr() const { return repr_; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_->same_as(*b.field_) && a.repr_ == b.repr_;
  }

 private:
  FieldPtr field_;
  Elem repr_;
};

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_inv(const FieldElement& a);

}  // namespace qshell
