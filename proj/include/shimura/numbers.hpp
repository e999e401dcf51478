#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "shimura/errors.hpp"

namespace shimura {

using Int = boost::multiprecision::cpp_int;
/// Exact rational numbers, kept in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

/// Quotient of the euclidean division of a by b: a = q*b + r with
/// 0 <= r < |b|.
inline Int euclid_quotient(const Int& a, const Int& b) {
  if (b == 0) throw DivisionByZero();
  Int q = a / b;  // truncates toward zero
  Int r = a - q * b;
  if (r < 0) q += (b > 0) ? -1 : 1;
  return q;
}

/// Quotient truncated toward zero, the convention of most computer algebra
/// quotient functions. a = q*b + r with |r| < |b| and sign(r) = sign(a).
inline Int trunc_quotient(const Int& a, const Int& b) {
  if (b == 0) throw DivisionByZero();
  return a / b;
}

inline std::string to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Rational enclosure of sqrt(v) with denominator 2^bits:
/// lo <= sqrt(v) <= hi and hi - lo = 2^-bits. Requires v >= 0.
struct SqrtEnclosure {
  Rat lo, hi;
};

inline SqrtEnclosure sqrt_enclosure(const Int& v, unsigned bits) {
  Int scale = Int(1) << bits;
  Int s = boost::multiprecision::sqrt(v * scale * scale);  // floor sqrt
  return {Rat(s, scale), Rat(s + 1, scale)};
}

}  // namespace shimura
