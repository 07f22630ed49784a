#include "rif/bounds.hpp"

#include "rif/error.hpp"

#include <numeric>
#include <string>

namespace rif {

namespace {

void need_n_2k(int n, int k) {
  if (k < 1 || n < 2 * k)
    throw Error(ErrorCode::InvalidParameters,
                "need 1 <= k and n >= 2k, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

} // namespace

Int ekr_bound(int n, int k) {
  need_n_2k(n, k);
  return binomial(n - 1, k - 1);
}

Int prop1_bound(int n, int k) {
  need_n_2k(n, k);
  return 3 * binomial(n - 3, k - 2) + binomial(n - 3, k - 3);
}

Rat hoffman_bound(int n, int k, int s) {
  need_n_2k(n, k);
  if (s < 1 || s % 2 == 0)
    throw Error(ErrorCode::InvalidS, "s must be odd and >= 1, got " + std::to_string(s));
  if (k < s + 2)
    throw Error(ErrorCode::InvalidS, "need k >= s+2, got k=" + std::to_string(k) +
                                         " s=" + std::to_string(s));
  const Rat v(binomial(n, k));
  const Rat tail = Rat(binomial(n - k, k)) / Rat(binomial(n - k - s - 2, k - s - 2));
  return v / (1 + tail);
}

TightnessCheck tightness_integrality_check(int n, int k, int s) {
  if (s != 1) throw Error(ErrorCode::InvalidS, "only s = 1 has a closed meet-count form");
  need_n_2k(n, k);
  if (k < 3) throw Error(ErrorCode::InvalidParameters, "meet-count check needs k >= 3");
  const Int num = Int(3) * k * (k - 1) * (k - 2);
  const Int den = Int(n) * n - Int(3) * k * n - n + Int(3) * k * k;
  TightnessCheck out;
  out.value = Rat(num, den);
  out.obstruction = !(is_integer(out.value) && out.value > 0);
  return out;
}

Int lower_bound_regular(int n, int k) {
  need_n_2k(n, k);
  if (Int(n) >= Int(k) * k)
    throw Error(ErrorCode::InvalidParameters, "lower bound needs n < k^2");
  return ceil_rat(1 + Rat(Int(k) * (n - k), Int(k) * k - n));
}

Int existence_threshold(int k) { return Int(k) * k - k + 1; }

bool nonexistent(int n, int k) { return Int(n) > existence_threshold(k); }

bool brc_obstruction(std::int64_t order) {
  const auto mod = order % 4;
  if (mod != 1 && mod != 2) return false;
  for (std::int64_t a = 0; a * a * 2 <= order; ++a) {
    const std::int64_t rest = order - a * a;
    std::int64_t b = 0;
    while (b * b < rest) ++b;
    if (b * b == rest) return false;
  }
  return true;
}

Int general_bound(int n, int k) {
  need_n_2k(n, k);
  const Int threshold = existence_threshold(k);
  if (Int(n) > threshold) return 0;
  if (Int(n) == threshold) return threshold;
  // Below the threshold k >= 3 always holds here, so the Hoffman form applies.
  const Int cap = floor_rat(hoffman_bound(n, k, 1));
  const Int step = Int(n) / std::gcd(std::int64_t(n), std::int64_t(k));
  return cap / step * step;
}

BoundReport bound_report(int n, int k, std::optional<int> s) {
  need_n_2k(n, k);
  BoundReport rep;
  rep.n = n;
  rep.k = k;

  rep.entries.push_back({"ekr", ekr_bound(n, k), true, BoundKind::Upper,
                         "holds for every intersecting family"});
  rep.entries.push_back({"prop1", prop1_bound(n, k), true, BoundKind::Upper,
                         "diversity cap for regular families"});

  if (k >= 3) {
    const Rat h = hoffman_bound(n, k, 1);
    rep.entries.push_back({"hoffman(s=1)", floor_rat(h), true, BoundKind::Upper,
                           "raw=" + rat_str(h)});
  } else {
    rep.entries.push_back({"hoffman(s=1)", std::nullopt, false, BoundKind::Upper,
                           "needs k >= 3"});
  }
  if (s && *s != 1) {
    const Rat h = hoffman_bound(n, k, *s); // throws InvalidS on a bad request
    rep.entries.push_back({"hoffman(s=" + std::to_string(*s) + ")", floor_rat(h), true,
                           BoundKind::Upper, "raw=" + rat_str(h) + ", needs " +
                                                 std::to_string(*s) + "-subset-regular"});
  }

  if (k >= 3) {
    const TightnessCheck tc = tightness_integrality_check(n, k, 1);
    rep.entries.push_back({"meet-integrality(s=1)", std::nullopt, true, BoundKind::Info,
                           "t=" + rat_str(tc.value) +
                               (tc.obstruction ? ", not a positive integer: hoffman(s=1) unattainable"
                                               : ", integral: tightness not excluded")});
  }

  const bool lower_ok = Int(n) < Int(k) * k;
  rep.entries.push_back({"lower-regular", lower_ok ? std::optional<Int>(lower_bound_regular(n, k))
                                                   : std::nullopt,
                         lower_ok, BoundKind::Lower,
                         lower_ok ? "minimum size if any regular family exists" : "needs n < k^2"});

  const Int threshold = existence_threshold(k);
  rep.entries.push_back({"existence-threshold", threshold, true, BoundKind::Info,
                         "largest n admitting a regular intersecting family"});

  bool brc_kills = false;
  if (Int(n) == threshold && k >= 3) {
    brc_kills = brc_obstruction(k - 1);
    rep.entries.push_back({"brc(order=" + std::to_string(k - 1) + ")", std::nullopt, true,
                           BoundKind::Info,
                           brc_kills ? "plane order ruled out (sum-of-two-squares test)"
                                     : "no obstruction"});
  }

  rep.entries.push_back({"general", general_bound(n, k), true, BoundKind::Upper,
                         "strongest closed-form cap with degree integrality"});

  rep.entries.push_back({"junta-degree-ratio", std::nullopt, false, BoundKind::Info,
                         "not computable (non-constructive constant)"});

  const Int gen = general_bound(n, k);
  const bool lower_beats_upper = lower_ok && lower_bound_regular(n, k) > gen;
  rep.verdict = (nonexistent(n, k) || brc_kills || lower_beats_upper) ? "Nonexistent" : "Open";
  return rep;
}

} // namespace rif
