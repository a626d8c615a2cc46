#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace chanorder {

// Exact arbitrary-precision rational scalar. The GMP backend keeps every
// value in lowest terms with a positive denominator, so operator== is plain
// value equality and printing is canonical "p/q" (or "p" for integers).
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Thrown when a deterministic-matrix enumeration (d^d vertices and friends)
// would exceed the configured guard. Mapped to its own exit code by the CLI.
class enumeration_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Rational& value) { return value.str(); }

// Parses "p/q" or "p", with an optional leading '-' on p only. The result is
// canonical even when the literal is not: "28/20" parses to 7/5.
inline Rational parse_rational(std::string_view text) {
  const auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };

  std::string_view numerator = text;
  std::string_view denominator = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    numerator = text.substr(0, slash);
    denominator = text.substr(slash + 1);
  }
  bool negative = false;
  if (!numerator.empty() && numerator.front() == '-') {
    negative = true;
    numerator.remove_prefix(1);
  }
  if (!all_digits(numerator) || !all_digits(denominator)) {
    throw std::invalid_argument("malformed rational literal \"" + std::string(text) + '"');
  }
  const BigInt p{std::string(numerator)};
  const BigInt q{std::string(denominator)};
  if (q == 0) {
    throw std::invalid_argument("zero denominator in rational literal \"" + std::string(text) +
                                '"');
  }
  const Rational value = Rational(p) / Rational(q);
  return negative ? Rational(-value) : value;
}

}  // namespace chanorder
