#include "sigmatau/quadring.hpp"

#include <sstream>

namespace sigmatau {

namespace {

// Certifies squarefreeness by trial division with primes up to this bound.
// Inputs whose unfactored cofactor could still hide a square (i.e. cofactor
// > bound^2 after stripping all primes <= bound) are rejected rather than
// accepted silently.
const long kTrialDivisionBound = 1'000'000;

void check_squarefree(const Integer& d) {
  Integer n = abs(d);
  Integer p = 2;
  while (p <= kTrialDivisionBound && p * p <= n) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) {
        throw Error(Errc::NotSquarefree,
                    "d = " + to_string(d) + " is divisible by " +
                        to_string(Integer(p * p)));
      }
    }
    p = (p == 2) ? Integer(3) : Integer(p + 2);
  }
  if (p * p <= n) {
    // Remaining cofactor exceeds bound^2: could be a prime square.
    throw Error(Errc::TooLargeToFactor,
                "squarefreeness of d = " + to_string(d) +
                    " is not certifiable by trial division up to 10^6");
  }
}

Integer mod4(const Integer& d) {
  Integer m = d % 4;
  return m < 0 ? Integer(m + 4) : m;
}

}  // namespace

QuadRing::QuadRing(const Integer& d) : d_(d) {
  if (d == 0 || d == 1) {
    throw Error(Errc::DisallowedD, "d must be a squarefree integer other than 0 and 1");
  }
  check_squarefree(d);
  branch_ = (mod4(d) == 1) ? Branch::Omega : Branch::Sqrt;
}

std::string QuadRing::gen_name() const {
  return branch_ == Branch::Sqrt ? "sqrt(" + to_string(d_) + ")" : "omega";
}

QuadInt qadd(const QuadInt& x, const QuadInt& y) { return {x.a + y.a, x.b + y.b}; }
QuadInt qsub(const QuadInt& x, const QuadInt& y) { return {x.a - y.a, x.b - y.b}; }
QuadInt qneg(const QuadInt& x) { return {-x.a, -x.b}; }

QuadInt qmul(const QuadRing& R, const QuadInt& x, const QuadInt& y) {
  if (R.branch() == Branch::Sqrt) {
    return {x.a * y.a + R.d() * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  // omega^2 = omega + (d-1)/4
  const Integer m = R.omega_constant();
  return {x.a * y.a + m * x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
}

QuadInt conj(const QuadRing& R, const QuadInt& x) {
  if (R.branch() == Branch::Sqrt) return {x.a, -x.b};
  return {x.a + x.b, -x.b};  // conj(omega) = 1 - omega
}

Integer norm(const QuadRing& R, const QuadInt& x) {
  QuadInt n = qmul(R, x, conj(R, x));
  if (n.b != 0) {
    throw Error(Errc::DiagramBroken, "norm has a nonzero gen coordinate");
  }
  return n.a;
}

QuadRat to_quadrat(const QuadRing& R, const QuadInt& x) {
  if (R.branch() == Branch::Sqrt) return {Rational(x.a), Rational(x.b)};
  // a + b*omega = (a + b/2) + (b/2) sqrt(d)
  return {Rational(x.a) + Rational(x.b, 2), Rational(x.b, 2)};
}

QuadRat qr_add(const QuadRat& x, const QuadRat& y) { return {x.u + y.u, x.v + y.v}; }
QuadRat qr_sub(const QuadRat& x, const QuadRat& y) { return {x.u - y.u, x.v - y.v}; }

QuadRat qr_mul(const QuadRing& R, const QuadRat& x, const QuadRat& y) {
  const Rational d(R.d());
  return {x.u * y.u + d * x.v * y.v, x.u * y.v + x.v * y.u};
}

QuadRat qr_div(const QuadRing& R, const QuadRat& x, const QuadRat& y) {
  const Rational d(R.d());
  const Rational n = y.u * y.u - d * y.v * y.v;  // field norm of y
  if (n == 0) {
    throw Error(Errc::BadInput, "division by zero in Q(sqrt(d))");
  }
  QuadRat num = qr_mul(R, x, {y.u, -y.v});
  return {num.u / n, num.v / n};
}

std::optional<QuadInt> member(const QuadRing& R, const QuadRat& z) {
  if (R.branch() == Branch::Sqrt) {
    if (!is_integer(z.u) || !is_integer(z.v)) return std::nullopt;
    return QuadInt{to_integer(z.u), to_integer(z.v)};
  }
  const Rational n = 2 * z.v;
  const Rational m = z.u - z.v;
  if (!is_integer(n) || !is_integer(m)) return std::nullopt;
  return QuadInt{to_integer(m), to_integer(n)};
}

StructAlgebra as_algebra(const QuadRing& R) {
  Vec unit(2);
  unit << Rational(1), Rational(0);
  // gen * gen: Sqrt branch d * 1; Omega branch (d-1)/4 * 1 + gen.
  Mat l0 = Mat::Identity(2, 2);
  Mat l1(2, 2);
  if (R.branch() == Branch::Sqrt) {
    l1 << Rational(0), Rational(R.d()), Rational(1), Rational(0);
  } else {
    l1 << Rational(0), Rational(R.omega_constant()), Rational(1), Rational(1);
  }
  return StructAlgebra(unit, {l0, l1});
}

std::string to_string(const QuadRing& R, const QuadInt& x) {
  std::ostringstream os;
  os << to_string(x.a);
  if (x.b != 0) {
    os << (x.b < 0 ? " - " : " + ");
    Integer ab = abs(x.b);
    if (ab != 1) os << to_string(ab) << "*";
    os << R.gen_name();
  }
  return os.str();
}

}  // namespace sigmatau
