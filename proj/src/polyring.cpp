#include "sigmatau/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sigmatau {

Poly::Poly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::from_coeffs(std::vector<Rational> ascending) {
  Poly p;
  p.coeffs_ = std::move(ascending);
  p.trim();
  return p;
}

Poly Poly::x() { return monomial(1, 1); }

Poly Poly::monomial(const Rational& coeff, int degree) {
  Poly p;
  if (coeff != 0) {
    p.coeffs_.assign(static_cast<size_t>(degree) + 1, Rational(0));
    p.coeffs_.back() = coeff;
  }
  return p;
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(k)];
}

const Rational& Poly::leading() const {
  if (is_zero()) throw Error(Errc::BadInput, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return from_coeffs(std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return from_coeffs(std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return from_coeffs(std::move(out));
}

Poly Poly::operator*(const Rational& s) const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c *= s;
  return from_coeffs(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::BadInput, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> quot(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
  const Rational& lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational c = rem[static_cast<size_t>(k + db)] / lead;
    if (c == 0) continue;
    quot[static_cast<size_t>(k)] = c;
    for (int i = 0; i <= db; ++i) {
      rem[static_cast<size_t>(k + i)] -= c * b.coeff(i);
    }
  }
  return {Poly::from_coeffs(std::move(quot)), Poly::from_coeffs(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw Error(Errc::InexactDivision,
                "(" + to_string(a) + ") is not divisible by (" + to_string(b) + ")");
  }
  return q;
}

Poly monic(const Poly& f) {
  if (f.is_zero()) return f;
  return f * (Rational(1) / f.leading());
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) {
    throw Error(Errc::BothZero, "gcd(0, 0) is undefined");
  }
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly endo_apply(const PolyEndo& phi, const Poly& f) {
  Poly acc;
  for (int k = f.degree(); k >= 0; --k) {
    acc = acc * phi.image_of_x + Poly(f.coeff(k));
  }
  return acc;
}

DeltaGenerator::DeltaGenerator(PolyEndo sigma, PolyEndo tau)
    : sigma_(std::move(sigma)), tau_(std::move(tau)) {
  Poly g = tau_.image_of_x - sigma_.image_of_x;
  if (g.is_zero()) {
    throw Error(Errc::SigmaEqualsTau, "sigma(x) == tau(x)");
  }
  unit_ = g.leading();
  monic_g_ = monic(g);
}

Poly DeltaGenerator::apply(const Poly& f) const {
  Poly numerator = endo_apply(tau_, f) - endo_apply(sigma_, f);
  Poly q = exact_div(numerator, monic_g_);
  return q * (Rational(1) / unit_);
}

PolyDerivation::PolyDerivation(PolyEndo sigma, PolyEndo tau, Poly image_of_x)
    : delta_(std::move(sigma), std::move(tau)), image_(std::move(image_of_x)) {}

namespace {

struct PolyParser {
  const std::string& s;
  size_t pos = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::BadInput, "bad polynomial \"" + s + "\": " + why);
  }

  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }

  std::string read_digits() {
    size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start) fail("expected digits");
    return s.substr(start, pos - start);
  }

  // [digits[/digits]]
  Rational read_number() {
    Integer num(read_digits());
    if (!done() && peek() == '/') {
      ++pos;
      Integer den(read_digits());
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  // term := number ['*'] ['x' ['^' digits]] | 'x' ['^' digits]
  Poly read_term() {
    Rational coeff(1);
    bool have_coeff = false;
    if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = read_number();
      have_coeff = true;
      if (!done() && peek() == '*') ++pos;
    }
    int deg = 0;
    if (!done() && peek() == 'x') {
      ++pos;
      deg = 1;
      if (!done() && peek() == '^') {
        ++pos;
        try {
          deg = std::stoi(read_digits());
        } catch (const std::exception&) {
          fail("exponent out of range");
        }
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or x");
    }
    return Poly::monomial(coeff, deg);
  }

  Poly parse() {
    Poly out;
    bool first = true;
    while (!done()) {
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      if (done()) fail("dangling sign");
      out = out + read_term() * sign;
      first = false;
    }
    if (first) fail("empty input");
    return out;
  }
};

}  // namespace

Poly parse_poly(const std::string& text) {
  std::string compact;
  compact.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  PolyParser parser(compact);
  return parser.parse();
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = f.degree(); k >= 0; --k) {
    Rational c = f.coeff(k);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (k == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace sigmatau
