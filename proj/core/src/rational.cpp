#include "tverword/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace tvw {

Rational parse_rational(const std::string& token) {
  if (token.empty()) {
    throw std::runtime_error("empty rational token");
  }
  const auto slash = token.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(token));
    }
    const BigInt num(token.substr(0, slash));
    const BigInt den(token.substr(slash + 1));
    if (den == 0) {
      throw std::runtime_error("zero denominator in '" + token + "'");
    }
    // Division canonicalizes (positive denominator, reduced form).
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::runtime_error("malformed rational '" + token + "'");
  }
}

std::string format_rational(const Rational& value) {
  std::ostringstream out;
  out << numerator(value) << '/' << denominator(value);
  return out.str();
}

}  // namespace tvw
