#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace rif {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(a, b), zero whenever b < 0 or b > a. Exact at every step.
Int binomial(std::int64_t a, std::int64_t b);

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

bool is_integer(const Rat& r);

// "p/q" in lowest terms, plain "p" when the denominator is 1.
std::string rat_str(const Rat& r);

std::int64_t to_int64(const Int& v);

} // namespace rif
