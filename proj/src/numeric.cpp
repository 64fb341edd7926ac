#include "jsup/numeric.hpp"

#include <cctype>

#include "jsup/error.hpp"

namespace jsup {

std::string to_string(const BigInteger& z) { return z.get_str(); }

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(const std::string& s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

BigRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(ErrorCode::parse_error, "malformed rational '" + text + "'");
  }
  BigInteger p(num[0] == '+' ? num.substr(1) : num, 10);
  BigInteger q(den, 10);
  if (q == 0) throw Error(ErrorCode::parse_error, "zero denominator in '" + text + "'");
  BigRational r(p, q);
  r.canonicalize();
  return r;
}

BigRational parse_canonical_rational(const std::string& text) {
  BigRational r = parse_rational(text);
  if (to_string(r) != text) {
    throw Error(ErrorCode::parse_error, "rational '" + text + "' is not in lowest terms");
  }
  return r;
}

}  // namespace jsup
