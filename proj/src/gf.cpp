#include "rif/gf.hpp"

#include "rif/error.hpp"

#include <string>

namespace rif {

namespace {

// Polynomials over GF(p) as digit vectors, constant term first.
std::vector<int> decode(int v, int p) {
  std::vector<int> digits;
  while (v) {
    digits.push_back(v % p);
    v /= p;
  }
  return digits;
}

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  // m is monic of degree deg_m.
  const int deg_m = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) > deg_m) {
    const int lead = a.back();
    if (lead) {
      const int shift = static_cast<int>(a.size()) - 1 - deg_m;
      for (int i = 0; i <= deg_m; ++i) {
        int& c = a[shift + i];
        c = (c - lead * m[i]) % p;
        if (c < 0) c += p;
      }
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

bool divides(const std::vector<int>& d, std::vector<int> a, int p) {
  return poly_mod(std::move(a), d, p).empty();
}

// Irreducible over GF(p): no monic factor of degree 1..e/2.
bool is_irreducible(const std::vector<int>& m, int p) {
  const int e = static_cast<int>(m.size()) - 1;
  for (int d = 1; 2 * d <= e; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      std::vector<int> cand = decode(low, p);
      cand.resize(d + 1, 0);
      cand[d] = 1;
      if (divides(cand, m, p)) return false;
    }
  }
  return true;
}

} // namespace

bool is_prime_power(int q, int* p_out, int* e_out) {
  if (q < 2) return false;
  int p = 0, rest = q;
  for (int d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = rest; // q itself prime
  int e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return false;
  if (p_out) *p_out = p;
  if (e_out) *e_out = e;
  return true;
}

FiniteField::FiniteField(int q) {
  if (!is_prime_power(q, &p_, &e_))
    throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  q_ = q;

  // Lexicographically least irreducible monic modulus of degree e: scan the
  // non-leading coefficient vectors in increasing base-p value.
  if (e_ == 1) {
    modulus_ = {0, 1}; // unused in the prime case
  } else {
    int limit = 1;
    for (int i = 0; i < e_; ++i) limit *= p_;
    for (int low = 0; low < limit; ++low) {
      std::vector<int> cand = decode(low, p_);
      cand.resize(e_ + 1, 0);
      cand[e_] = 1;
      if (is_irreducible(cand, p_)) {
        modulus_ = cand;
        break;
      }
    }
    if (modulus_.empty())
      throw Error(ErrorCode::InvariantViolation, "no irreducible modulus found");
  }

  add_.resize(std::size_t(q_) * q_);
  mul_.resize(std::size_t(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    const auto pa = decode(a, p_);
    for (int b = 0; b < q_; ++b) {
      const auto pb = decode(b, p_);
      // add
      std::vector<int> s(std::max(pa.size(), pb.size()), 0);
      for (std::size_t i = 0; i < s.size(); ++i) {
        int c = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
        s[i] = c % p_;
      }
      int enc = 0;
      for (std::size_t i = s.size(); i-- > 0;) enc = enc * p_ + s[i];
      add_[idx(a, b)] = enc;
      // mul
      auto prod = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
      enc = 0;
      for (std::size_t i = prod.size(); i-- > 0;) enc = enc * p_ + prod[i];
      mul_[idx(a, b)] = enc;
    }
  }
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b)
      if (add_[idx(a, b)] == 0) neg_[a] = b;
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[idx(a, b)] == 1) inv_[a] = b;
}

int FiniteField::inv(int a) const {
  if (a == 0) throw Error(ErrorCode::InvalidParameters, "zero has no multiplicative inverse");
  return inv_[a];
}

int FiniteField::pow(int a, long long e) const {
  int result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

} // namespace rif
