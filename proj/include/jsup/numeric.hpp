#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace jsup {

using BigInteger = mpz_class;
using BigRational = mpq_class;  // always kept canonical (lowest terms, den > 0)

// "p/q", or "p" when q == 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInteger& z);

// Accepts "p" or "p/q" with optional sign; rejects q == 0. Non-canonical
// input is accepted and canonicalized; use parse_canonical_rational to reject it.
BigRational parse_rational(const std::string& text);
BigRational parse_canonical_rational(const std::string& text);

inline BigRational make_rational(std::int64_t num, std::int64_t den = 1) {
  BigRational q{BigInteger{static_cast<long>(num)}, BigInteger{static_cast<long>(den)}};
  q.canonicalize();
  return q;
}

inline bool is_integral(const BigRational& q) { return q.get_den() == 1; }

}  // namespace jsup
