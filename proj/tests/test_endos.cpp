#include <doctest.h>

#include "helpers.hpp"
#include "sigmatau/endos.hpp"

using namespace sigmatau;
using namespace sigmatau::testing;

TEST_CASE("classify returns identity and conjugation with the right matrices") {
  QuadRing r3(Integer(3));
  auto e3 = classify(r3);
  REQUIRE(e3.size() == 2);
  CHECK(e3[0].kind == EndoKind::Identity);
  CHECK(e3[1].kind == EndoKind::Conjugation);
  CHECK(endo_matrix(e3[0]) == Mat(Mat::Identity(2, 2)));
  Mat conj3(2, 2);
  conj3 << Rational(1), Rational(0), Rational(0), Rational(-1);
  CHECK(endo_matrix(e3[1]) == conj3);

  QuadRing r5(Integer(5));
  auto e5 = classify(r5);
  REQUIRE(e5.size() == 2);
  Mat conj5(2, 2);
  conj5 << Rational(1), Rational(1), Rational(0), Rational(-1);
  CHECK(endo_matrix(e5[1]) == conj5);  // columns (1,0) and (1,-1)

  auto em5 = classify(QuadRing(Integer(-5)));
  REQUIRE(em5.size() == 2);
  CHECK(em5[1].kind == EndoKind::Conjugation);
}

TEST_CASE("the omega-branch equation solver reproduces the proof's solution set") {
  for (std::int64_t d : {5, 13, -3, -7, 17}) {
    auto sols = endo_equation_solutions(QuadRing(Integer(d)));
    REQUIRE(sols.size() == 2);
    CHECK(sols[0] == std::pair<Integer, Integer>{0, 1});   // identity
    CHECK(sols[1] == std::pair<Integer, Integer>{1, -1});  // omega -> 1 - omega
  }
}

TEST_CASE("apply_endo") {
  QuadRing r3(Integer(3));
  QuadEndo id{r3, EndoKind::Identity};
  QuadEndo cj{r3, EndoKind::Conjugation};
  CHECK(apply_endo(id, {5, 7}) == QuadInt{5, 7});
  CHECK(apply_endo(cj, {1, 1}) == QuadInt{1, -1});

  QuadRing r5(Integer(5));
  QuadEndo cj5{r5, EndoKind::Conjugation};
  CHECK(apply_endo(cj5, {2, 3}) == QuadInt{5, -3});
}

TEST_CASE("both classified endomorphisms are injective; the zero map is not an endo") {
  QuadRing r7(Integer(7));
  StructAlgebra A = as_algebra(r7);
  for (const QuadEndo& e : classify(r7)) {
    AlgMap m{endo_matrix(e), MapKind::EndomorphismClaimed};
    CHECK(check_endo(A, m));
    CHECK(check_injective(A, m));
  }
  AlgMap zero{Mat::Zero(2, 2)};
  CHECK(!check_endo(A, zero));  // unit not preserved
}

TEST_CASE("conjugation composed with itself is the identity") {
  for (std::int64_t d : {2, 3, 5, -1, -5, 13}) {
    QuadRing r{Integer(d)};
    Mat c = endo_matrix(QuadEndo{r, EndoKind::Conjugation});
    CHECK(Mat(c * c) == Mat(Mat::Identity(2, 2)));
  }
}

TEST_CASE("classification sweep over squarefree |d| <= 200") {
  int checked = 0;
  for (std::int64_t d = -200; d <= 200; ++d) {
    if (d == 0 || d == 1) continue;
    std::optional<QuadRing> ring;
    try {
      ring.emplace(Integer(d));
    } catch (const Error&) {
      continue;  // not squarefree
    }
    const QuadRing& r = *ring;
    StructAlgebra A = as_algebra(r);
    auto endos = classify(r);
    REQUIRE(endos.size() == 2);
    CHECK(endos[0].kind == EndoKind::Identity);
    CHECK(endos[1].kind == EndoKind::Conjugation);
    for (const QuadEndo& e : endos) {
      AlgMap m{endo_matrix(e), MapKind::EndomorphismClaimed};
      CHECK(check_endo(A, m));
      CHECK(check_injective(A, m));
    }
    // the two maps differ exactly on the generator
    CHECK(apply_endo(endos[0], {0, 1}) != apply_endo(endos[1], {0, 1}));
    CHECK(apply_endo(endos[0], {1, 0}) == apply_endo(endos[1], {1, 0}));
    ++checked;
  }
  CHECK(checked > 200);  // plenty of squarefree values in range
}
