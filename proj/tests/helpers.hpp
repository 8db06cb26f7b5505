#pragma once

// Small fixtures shared across the test suites.

#include <functional>
#include <vector>

#include "sigmatau/algebra.hpp"
#include "sigmatau/quadring.hpp"

namespace sigmatau::testing {

/// Runs f, expecting it to throw Error; returns the code (BadInput if f
/// unexpectedly succeeds, so a mismatching CHECK flags it).
inline Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::BadInput;
}

inline Vec vec2(const Rational& a, const Rational& b) {
  Vec v(2);
  v << a, b;
  return v;
}

inline Vec vec3(const Rational& a, const Rational& b, const Rational& c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

/// Dual numbers: basis {1, t}, t^2 = 0.
inline StructAlgebra dual_numbers() {
  Mat l0 = Mat::Identity(2, 2);
  Mat l1(2, 2);
  l1 << Rational(0), Rational(0), Rational(1), Rational(0);
  return StructAlgebra(vec2(1, 0), {l0, l1});
}

/// Q x Q with componentwise product; unit (1, 1).
inline StructAlgebra q_cross_q() {
  Mat l0(2, 2), l1(2, 2);
  l0 << Rational(1), Rational(0), Rational(0), Rational(0);
  l1 << Rational(0), Rational(0), Rational(0), Rational(1);
  return StructAlgebra(vec2(1, 1), {l0, l1});
}

/// Basis {1, x, y} with x^2 = y^2 = xy = 0.
inline StructAlgebra nilpotent_dim3() {
  Mat l0 = Mat::Identity(3, 3);
  Mat l1 = Mat::Zero(3, 3);
  l1(1, 0) = 1;  // x * 1 = x
  Mat l2 = Mat::Zero(3, 3);
  l2(2, 0) = 1;  // y * 1 = y
  return StructAlgebra(vec3(1, 0, 0), {l0, l1, l2});
}

/// sigma: 1 -> 1, x <-> y (invertible swap).
inline Mat swap_xy() {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = 1;
  m(2, 1) = 1;
  m(1, 2) = 1;
  return m;
}

/// tau: 1 -> 1, x -> x, y -> 0 (not invertible).
inline Mat keep_x_kill_y() {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = 1;
  m(1, 1) = 1;
  return m;
}

}  // namespace sigmatau::testing
