#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cyclink {

using BigInt = mpz_class;
using BigRational = mpq_class;  // gmp keeps it canonical after every arithmetic op

// "p/q" in lowest terms, "p" when q = 1, sign on the numerator.
std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

// Accepts "p", "-p", "p/q"; throws InvalidInput otherwise or for q = 0.
BigRational parse_rational(std::string_view text);

inline BigRational make_rational(long num, long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace cyclink
