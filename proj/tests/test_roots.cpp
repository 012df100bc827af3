#include <doctest.h>

#include <stdexcept>
#include <random>

#include "cyclo/catalog.hpp"
#include "cyclo/roots.hpp"
#include "test_util.hpp"

using namespace cyclo;
using cyclo::test::I;

namespace {

CharPoly poly(std::vector<RingElement> ascending) {
  CharPoly p;
  p.c = std::move(ascending);
  return p;
}

}  // namespace

TEST_CASE("interlaces examples") {
  CharPoly parent = poly({I(-4), I(0), I(1)});  // x^2 - 4
  CHECK(interlaces(parent, poly({I(0), I(1)})));   // root 0
  CHECK(!interlaces(parent, poly({I(-3), I(1)}))); // root 3
  CHECK_THROWS_AS(interlaces(parent, parent), std::invalid_argument);

  RGraph s7 = build_sporadic("S7");
  CharPoly p7 = char_poly(s7.matrix());
  for (int v = 0; v < 7; ++v)
    CHECK(interlaces(p7, char_poly(s7.matrix().with_vertex_deleted(v))));
}

TEST_CASE("interlaces handles repeated and shared roots") {
  // (x^2-4)^2 against (x-2)(x+2)x
  CharPoly parent = poly({I(16), I(0), I(-8), I(0), I(1)});
  CHECK(interlaces(parent, poly({I(0), I(-4), I(0), I(1)})));
  // (x-2)^2 x fails: three roots of the child must straddle the parent's
  CHECK(!interlaces(parent, poly({I(0), I(4), I(-4), I(1)})));
}

TEST_CASE("interlaces with irrational coefficients") {
  SymMatrix m(2, RingId::Zsqrt2);
  m.set(0, 0, RingElement::sqrt2());
  m.set(0, 1, I(1));
  CharPoly parent = char_poly(m);  // x^2 - sqrt2 x - 1
  CHECK(interlaces(parent, char_poly(m.with_vertex_deleted(1))));
  CHECK(interlaces(parent, char_poly(m.with_vertex_deleted(0))));
  // a constant shifted outside the root interval fails
  CHECK(!interlaces(parent, poly({I(-3), I(1)})));
}

TEST_CASE("interlacing holds for principal submatrices of random members") {
  std::mt19937 rng(4242);
  int done = 0;
  while (done < 12) {
    int n = 3 + static_cast<int>(rng() % 3);
    SymMatrix a = cyclo::test::random_matrix(rng, n, RingId::Zphi, 0.5);
    if (!in_s_prime(a)) continue;
    CharPoly p = char_poly(a);
    for (int v = 0; v < n; ++v)
      CHECK(interlaces(p, char_poly(a.with_vertex_deleted(v))));
    ++done;
  }
}

TEST_CASE("interlaces rejects shifted spectra") {
  // parent with roots {-2,-1,1,2}; child with roots {-1.5, 0.5, 1.8}
  // approximated by rationals via scaled integer polynomials is awkward in
  // a monic setting, so test the clean failing case: child root outside.
  CharPoly parent = poly({I(4), I(0), I(-5), I(0), I(1)});  // (x^2-1)(x^2-4)
  CHECK(interlaces(parent, poly({I(2), I(-1), I(-2), I(1)})));  // roots -sqrt2? no:
  // x^3 - 2x^2 - x + 2 = (x-2)(x-1)(x+1): -2 <= -1 <= -1 <= 1 <= 1 <= 2 <= 2
  CHECK(!interlaces(parent, poly({I(12), I(-7), I(-3), I(1)})));  // root 3 outside
}
