#include "sigmatau/rational.hpp"

#include <cctype>
#include <sstream>

#include "sigmatau/errors.hpp"

namespace sigmatau {

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Integer to_integer(const Rational& r) {
  if (!is_integer(r)) {
    throw Error(Errc::BadInput, "not an integer: " + to_string(r));
  }
  return numerator(r);
}

bool divides(const Integer& a, const Integer& b) {
  if (a == 0) return b == 0;
  return b % a == 0;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(const std::string& s) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  if (!all_digits(body)) {
    throw Error(Errc::BadInput, "malformed integer: \"" + s + "\"");
  }
  Integer n(body);
  return neg ? Integer(-n) : n;
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_integer(s));
  }
  Integer num = parse_integer(s.substr(0, slash));
  std::string den_str = s.substr(slash + 1);
  if (!all_digits(den_str)) {
    throw Error(Errc::BadInput, "malformed rational: \"" + s + "\"");
  }
  Integer den(den_str);
  if (den == 0) {
    throw Error(Errc::BadInput, "zero denominator: \"" + s + "\"");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string to_string(const Integer& n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonCommutative: return "NonCommutative";
    case Errc::NonAssociative: return "NonAssociative";
    case Errc::BadUnit: return "BadUnit";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::DisallowedD: return "DisallowedD";
    case Errc::TooLargeToFactor: return "TooLargeToFactor";
    case Errc::SigmaEqualsTau: return "SigmaEqualsTau";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::BothZero: return "BothZero";
    case Errc::TauNotInvertible: return "TauNotInvertible";
    case Errc::SigmaNotInvertible: return "SigmaNotInvertible";
    case Errc::LeibnizViolated: return "LeibnizViolated";
    case Errc::DiagramBroken: return "DiagramBroken";
    case Errc::KernelNotContained: return "KernelNotContained";
    case Errc::InvertibleEndo: return "InvertibleEndo";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace sigmatau
