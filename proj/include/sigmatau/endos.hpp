#pragma once

// Classification of the nonzero ring endomorphisms of a quadratic O_K.
// There are exactly two: the identity and the conjugation, obtained by
// solving the defining integer equations for the image of the generator.

#include <vector>

#include "sigmatau/quadring.hpp"

namespace sigmatau {

enum class EndoKind { Identity, Conjugation };

struct QuadEndo {
  QuadRing ring;
  EndoKind kind;

  bool operator==(const QuadEndo& o) const {
    return ring == o.ring && kind == o.kind;
  }
  bool operator!=(const QuadEndo& o) const { return !(*this == o); }
};

/// All nonzero ring endomorphisms of O_K, identity first. Each returned map
/// is verified multiplicative, unital and injective on as_algebra(R).
std::vector<QuadEndo> classify(const QuadRing& R);

QuadInt apply_endo(const QuadEndo& phi, const QuadInt& x);

/// Matrix over the integral basis {1, gen} of as_algebra(R).
Mat endo_matrix(const QuadEndo& phi);

/// Kernel rank 0; pre: phi passes check_endo.
bool check_injective(const StructAlgebra& A, const AlgMap& phi);

/// Integer solutions (a, b) of gen -> a + b*gen being a ring endomorphism.
/// Sqrt branch: 2ab = 0 and a^2 + d b^2 = d. Omega branch:
/// (2a + b - 1)^2 + d b^2 = d and 2b(2a + b - 1) = 0.
std::vector<std::pair<Integer, Integer>> endo_equation_solutions(const QuadRing& R);

}  // namespace sigmatau
