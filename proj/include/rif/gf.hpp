#pragma once

#include <vector>

namespace rif {

// GF(p^e) with elements encoded as 0..q−1 (base-p digits = polynomial
// coefficients, constant term least significant). Tables are precomputed from
// the lexicographically least irreducible monic modulus of degree e.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add_[idx(a, neg_[b])]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int inv(int a) const; // a ≠ 0
  int pow(int a, long long e) const;

 private:
  std::size_t idx(int a, int b) const { return std::size_t(a) * q_ + b; }

  int p_ = 0, e_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_;
};

// q = p^e with p prime, e ≥ 1; fills p and e when given.
bool is_prime_power(int q, int* p = nullptr, int* e = nullptr);

} // namespace rif
