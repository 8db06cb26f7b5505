#pragma once

// Machine-checked universal factorizations of (sigma,tau)-derivations on
// finite-dimensional commutative algebras. Four constructions, depending on
// which of sigma, tau is invertible:
//
//   case 1 (tau invertible):   J inside A(x)A, delta(a) = 1(x)tau(a) - sigma(a)(x)1,
//                              f(x(x)y) = x * D(tau^-1(y)), f left A-linear.
//   case 2 (sigma invertible): same J and delta, f(x(x)y) = -D(sigma^-1(x)) * y,
//                              f right A-linear.
//   case 3 (tau not invertible, ker tau <= ker D): J inside A(x)(A/ker tau),
//                              delta(a) = 1(x)pi(a) - sigma(a)(x)1, f left A-linear
//                              through the well-defined drop of D to A/ker tau.
//   case 4 (sigma not invertible, ker sigma <= ker D): mirror of case 3 on
//                              (A/ker sigma)(x)A, f right A-linear.
//
// A certificate records the carrier ideal, the delta images, and the matrix
// of f restricted to the carrier; verify_certificate re-runs every identity
// from that data without trusting any cached flag.

#include <string>
#include <vector>

#include "sigmatau/algebra.hpp"
#include "sigmatau/twisted.hpp"

namespace sigmatau {

class GeneralDerivation {
 public:
  /// Requires sigma and tau to be verified endomorphisms of A, D(unit) = 0,
  /// and the twisted Leibniz law on every ordered basis pair; throws
  /// Error{LeibnizViolated} (or BadUnit for D(unit) != 0) otherwise.
  GeneralDerivation(StructAlgebra algebra, Mat sigma, Mat tau, Mat values);

  const StructAlgebra& algebra() const { return algebra_; }
  const Mat& sigma() const { return sigma_; }
  const Mat& tau() const { return tau_; }
  const Mat& values() const { return values_; }

 private:
  StructAlgebra algebra_;
  Mat sigma_;
  Mat tau_;
  Mat values_;
};

/// Basis (as value matrices) of the linear space of all (sigma,tau)-derivations
/// A -> A: solutions of D(unit) = 0 and the Leibniz constraints.
std::vector<Mat> derivation_space(const StructAlgebra& A, const Mat& sigma,
                                  const Mat& tau);

enum class UnivCase { Case1 = 1, Case2 = 2, Case3 = 3, Case4 = 4 };

struct CheckReport {
  std::vector<std::pair<std::string, bool>> items;

  bool all_pass() const {
    for (const auto& [name, ok] : items) {
      if (!ok) return false;
    }
    return true;
  }
  void add(std::string name, bool ok) { items.emplace_back(std::move(name), ok); }
};

struct FactorizationCertificate {
  UnivCase tag = UnivCase::Case1;
  StructAlgebra algebra;
  Mat sigma;
  Mat tau;
  Mat derivation;    // dim x dim, column i = D(e_i)
  Submodule carrier; // ideal inside the case's tensor algebra
  Mat delta_images;  // dim(tensor) x dim(A), column i = delta(e_i)
  Mat f_matrix;      // dim(A) x rank(carrier), carrier coordinates -> A
  CheckReport checks;
};

/// Case guards: 1 needs tau invertible (else Error{TauNotInvertible}),
/// 2 needs sigma invertible (else Error{SigmaNotInvertible}), 3 rejects an
/// invertible tau and 4 an invertible sigma (Error{InvertibleEndo}), and
/// 3/4 require the kernel containment (Error{KernelNotContained}). All four
/// require sigma != tau (Error{SigmaEqualsTau}) and throw
/// Error{DiagramBroken} if the finished certificate fails verification.
FactorizationCertificate build_case1(const GeneralDerivation& D);
FactorizationCertificate build_case2(const GeneralDerivation& D);
FactorizationCertificate build_case3(const GeneralDerivation& D);
FactorizationCertificate build_case4(const GeneralDerivation& D);

FactorizationCertificate build_case(UnivCase tag, const GeneralDerivation& D);

/// Re-checks every identity of the certificate from its raw matrices.
CheckReport verify_certificate(const FactorizationCertificate& cert);

/// Bridge from the quadratic-ring world: the derivation as a
/// GeneralDerivation over as_algebra(D.ring()).
GeneralDerivation general_from_twisted(const TwistedDerivation& D);

}  // namespace sigmatau
