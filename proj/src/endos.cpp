#include "sigmatau/endos.hpp"

#include <algorithm>

namespace sigmatau {

namespace {

bool is_perfect_square(const Integer& n, Integer* root) {
  if (n < 0) return false;
  Integer r = sqrt(n);
  if (r * r == n) {
    if (root) *root = r;
    return true;
  }
  return false;
}

}  // namespace

std::vector<std::pair<Integer, Integer>> endo_equation_solutions(const QuadRing& R) {
  std::vector<std::pair<Integer, Integer>> sols;
  const Integer d = R.d();
  if (R.branch() == Branch::Sqrt) {
    // 2ab = 0 and a^2 + d b^2 = d.
    // a = 0: b^2 = 1 (d != 0), so b = +-1.
    sols.emplace_back(0, 1);
    sols.emplace_back(0, -1);
    // b = 0: a^2 = d has no solution, d being squarefree and != 1.
    Integer r;
    if (is_perfect_square(d, &r)) {
      sols.emplace_back(r, 0);
      sols.emplace_back(-r, 0);
    }
  } else {
    // 2b(2a + b - 1) = 0 and (2a + b - 1)^2 + d b^2 = d.
    // b = 0: (2a - 1)^2 = d needs an odd square root of d; none exists for
    // valid d, but solve it literally.
    Integer r;
    if (is_perfect_square(d, &r) && (r - 1) % 2 == 0) {
      sols.emplace_back((r + 1) / 2, 0);
      sols.emplace_back((-r + 1) / 2, 0);
    }
    // 2a + b - 1 = 0: d b^2 = d, so b = +-1.
    // b = 1 -> a = 0 (identity); b = -1 -> a = 1 (omega -> 1 - omega).
    sols.emplace_back(0, 1);
    sols.emplace_back(1, -1);
  }
  std::sort(sols.begin(), sols.end());
  sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
  return sols;
}

std::vector<QuadEndo> classify(const QuadRing& R) {
  auto sols = endo_equation_solutions(R);
  std::vector<QuadEndo> out;
  for (const auto& [a, b] : sols) {
    if (a == 0 && b == 1) {
      out.push_back(QuadEndo{R, EndoKind::Identity});
    } else {
      QuadInt image{a, b};
      QuadInt expected = conj(R, QuadInt{0, 1});
      if (image != expected) {
        throw Error(Errc::DiagramBroken,
                    "unexpected endomorphism solution for d = " + to_string(R.d()));
      }
      out.push_back(QuadEndo{R, EndoKind::Conjugation});
    }
  }
  std::stable_partition(out.begin(), out.end(),
                        [](const QuadEndo& e) { return e.kind == EndoKind::Identity; });

  StructAlgebra A = as_algebra(R);
  for (const QuadEndo& e : out) {
    AlgMap phi{endo_matrix(e), MapKind::EndomorphismClaimed};
    if (!check_endo(A, phi) || !check_injective(A, phi)) {
      throw Error(Errc::DiagramBroken,
                  "classified endomorphism fails verification for d = " +
                      to_string(R.d()));
    }
  }
  return out;
}

QuadInt apply_endo(const QuadEndo& phi, const QuadInt& x) {
  return phi.kind == EndoKind::Identity ? x : conj(phi.ring, x);
}

Mat endo_matrix(const QuadEndo& phi) {
  Mat m = Mat::Identity(2, 2);
  if (phi.kind == EndoKind::Conjugation) {
    QuadInt image = conj(phi.ring, QuadInt{0, 1});
    m(0, 1) = Rational(image.a);
    m(1, 1) = Rational(image.b);
  }
  return m;
}

bool check_injective(const StructAlgebra& A, const AlgMap& phi) {
  if (phi.src_dim() != A.dim() || phi.dst_dim() != A.dim()) return false;
  return kernel(phi).rank() == 0;
}

}  // namespace sigmatau
