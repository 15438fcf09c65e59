#include "tropgenus/rational.hpp"

#include "tropgenus/errors.hpp"

namespace tropgenus {

std::string to_fraction(const Rational& value) {
  std::string out = numerator(value).str();
  out += '/';
  out += denominator(value).str();
  return out;
}

Rational parse_fraction(const std::string& text) {
  if (text.empty()) fail(ErrorKind::InvalidInput, "empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator in '" + text + "'");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidInput, "malformed rational literal '" + text + "'");
  }
}

BigInt floor_of(const Rational& value) {
  BigInt q = numerator(value) / denominator(value);
  // Integer division truncates toward zero; fix up negatives.
  if (q * denominator(value) != numerator(value) && value < 0) --q;
  return q;
}

BigInt ceil_of(const Rational& value) {
  BigInt q = numerator(value) / denominator(value);
  if (q * denominator(value) != numerator(value) && value > 0) ++q;
  return q;
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

std::string to_fraction_list(const QVector& values) {
  std::string out = "(";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += to_fraction(values[i]);
  }
  out += ")";
  return out;
}

}  // namespace tropgenus
