#include "rif/numeric.hpp"

#include "rif/error.hpp"

#include <limits>

namespace rif {

Int binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Int res = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    res *= a - b + i;
    res /= i; // exact: the prefix product is i! times an integer
  }
  return res;
}

Int floor_rat(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  Int q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

bool is_integer(const Rat& r) { return denominator(r) == 1; }

std::string rat_str(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::int64_t to_int64(const Int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorCode::LimitExceeded, "value " + v.str() + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

} // namespace rif
