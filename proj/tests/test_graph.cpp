#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cyclo/catalog.hpp"
#include "cyclo/graph.hpp"
#include "test_util.hpp"

using namespace cyclo;
using cyclo::test::I;

namespace {

RGraph two_path(RingElement w, RingId ring = RingId::Z) {
  SymMatrix m(2, ring);
  m.set(0, 1, w);
  return RGraph(std::move(m));
}

std::string raw_bytes(const SymMatrix& m) {
  std::string s;
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      for (int64_t v : m.at(i, j).scaled2()) s += std::to_string(v) + ",";
  return s;
}

// Every matrix in the orbit of g under signed permutations x Galois x
// global sign.  Exponential; for n <= 4 only.
std::set<std::string> full_orbit(const RGraph& g) {
  const int n = g.n();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::set<std::string> orbit;
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      for (Automorphism s : automorphisms(g.ring())) {
        for (int neg = 0; neg < 2; ++neg) {
          SymMatrix m(n, g.ring());
          for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
              RingElement e = g.matrix().at(perm[i], perm[j]).galois_raw(s);
              int sgn = (((signs >> i) & 1) ? -1 : 1) *
                        (((signs >> j) & 1) ? -1 : 1) * (neg ? -1 : 1);
              if (sgn < 0) e = -e;
              m.set(i, j, e);
            }
          orbit.insert(raw_bytes(m));
        }
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return orbit;
}

}  // namespace

TEST_CASE("switch examples") {
  RGraph g = two_path(I(-1));
  RGraph h = switched(g, 0);
  CHECK(h.matrix().at(0, 1) == I(1));
  CHECK(switched(h, 0).matrix().at(0, 1) == I(-1));  // involution
  CHECK_THROWS_AS(switched(g, 5), std::out_of_range);

  RGraph q3 = build_family({FamilyKind::Q, 3, {}});
  RGraph sw = switched(q3, 2);
  int negatives = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (sw.matrix().at(i, j).sign() < 0) ++negatives;
  CHECK(negatives == 2);
  CHECK(char_poly(sw.matrix()).c == char_poly(q3.matrix()).c);
  CHECK(sw.matrix().at(2, 2) == q3.matrix().at(2, 2));  // charge unchanged
}

TEST_CASE("canonical examples") {
  CHECK(canonical_key(two_path(I(-1))) == canonical_key(two_path(I(1))));
  RGraph s4 = build_sporadic("S4phi2");
  CHECK(canonical_key(s4) == canonical_key(galois(s4, 4)));
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    RGraph g = cyclo::test::random_connected_graph(rng, 2 + rng() % 5,
                                                   RingId::Compositum);
    CanonicalKey key = canonical_key(g);
    for (int u = 0; u < 10; ++u) {
      RGraph h = cyclo::test::random_group_image(rng, g, true, true);
      CHECK(canonical_key(h) == key);
    }
  }
}

TEST_CASE("canonical keys decode to an equivalent representative") {
  std::mt19937 rng(6);
  for (int t = 0; t < 20; ++t) {
    RGraph g = cyclo::test::random_connected_graph(rng, 2 + rng() % 4,
                                                   RingId::Compositum);
    CanonicalKey key = canonical_key(g);
    RGraph rep(key_to_matrix(key, g.ring()));
    CHECK(equivalent(g, rep));
    CHECK(canonical_key(rep) == key);
  }
}

TEST_CASE("canonical separates inequivalent graphs (full orbit check)") {
  std::mt19937 rng(17);
  int pairs = 0;
  while (pairs < 40) {
    int n = 2 + static_cast<int>(rng() % 3);
    RGraph g(cyclo::test::random_matrix(rng, n, RingId::Zphi, 0.7));
    RGraph h(cyclo::test::random_matrix(rng, n, RingId::Zphi, 0.7));
    bool equal_keys = canonical_key(g) == canonical_key(h);
    bool in_orbit = full_orbit(g).count(raw_bytes(h.matrix())) > 0;
    CHECK(equal_keys == in_orbit);
    ++pairs;
  }
}

TEST_CASE("equivalent is an equivalence relation on sampled triples") {
  std::mt19937 rng(23);
  for (int t = 0; t < 20; ++t) {
    RGraph g = cyclo::test::random_connected_graph(rng, 3 + rng() % 4,
                                                   RingId::Compositum);
    RGraph h = cyclo::test::random_group_image(rng, g, true, true);
    RGraph k = cyclo::test::random_group_image(rng, h, true, true);
    CHECK(equivalent(g, g));
    CHECK(equivalent(g, h));
    CHECK(equivalent(h, g));
    CHECK(equivalent(h, k));
    CHECK(equivalent(g, k));
  }
}

TEST_CASE("equivalence examples") {
  RGraph g = build_sporadic("S7");
  CHECK(equivalent(g, switched(g, 3)));
  CHECK(equivalent(g, negated(g)));
  CHECK(!equivalent(build_sporadic("S2"), build_sporadic("S2ddag")));
}

TEST_CASE("strong equivalence examples") {
  std::mt19937 rng(29);
  RGraph g = cyclo::test::random_connected_graph(rng, 5, RingId::Zphi);
  CHECK(is_strongly_equivalent(g, cyclo::test::random_group_image(rng, g, false, false)));

  SymMatrix s1(1, RingId::Z);
  s1.set(0, 0, I(2));
  SymMatrix neg = s1.negated();
  CHECK(!is_strongly_equivalent(RGraph(s1), RGraph(neg)));

  RGraph s4 = build_sporadic("S4phi2");
  CHECK(!is_strongly_equivalent(s4, galois(s4, 4)));
}

TEST_CASE("galois invariance examples") {
  CHECK(!is_galois_invariant(build_sporadic("S4phi2")));
  CHECK(is_galois_invariant(build_family({FamilyKind::C2k, 2, {}})));
  CHECK(is_galois_invariant(build_sporadic("S7")));  // Z-graph
  CHECK(is_galois_invariant(build_sporadic("S3")));
}

TEST_CASE("char polys across the strong-equivalence group") {
  std::mt19937 rng(31);
  for (int t = 0; t < 20; ++t) {
    RGraph g = cyclo::test::random_connected_graph(rng, 4, RingId::Zphi);
    CharPoly p = char_poly(g.matrix());
    // signed permutation: identical char poly
    RGraph h = cyclo::test::random_group_image(rng, g, false, false);
    CHECK(char_poly(h.matrix()).c == p.c);
    // Galois: conjugated char poly
    CHECK(char_poly(galois(g, 4).matrix()).c == p.galois(4).c);
  }
}

TEST_CASE("sqrt2 cycle parity examples") {
  CHECK(sqrt2_cycle_parity_ok(build_family({FamilyKind::C2k, 2, {}})));
  // triangle with exactly one sqrt2 edge
  SymMatrix tri(3, RingId::Zsqrt2);
  tri.set(0, 1, RingElement::sqrt2());
  tri.set(1, 2, I(1));
  tri.set(0, 2, I(1));
  CHECK(!sqrt2_cycle_parity_ok(RGraph(std::move(tri))));
  CHECK(sqrt2_cycle_parity_ok(build_family({FamilyKind::P1, 5, {}})));  // tree
  CHECK_THROWS_AS(sqrt2_cycle_parity_ok(build_sporadic("S3")),
                  std::invalid_argument);
}

TEST_CASE("dominates examples") {
  RGraph q4 = build_family({FamilyKind::Q, 4, {}});
  RGraph q3 = build_family({FamilyKind::Q, 3, {}});
  CHECK(!dominates(q4, q3));

  SymMatrix tri(3, RingId::Zsqrt2);
  tri.set(0, 1, RingElement::sqrt2());
  tri.set(1, 2, I(1));
  tri.set(0, 2, I(1));
  RGraph heavy(std::move(tri));
  CHECK(dominates(heavy, q3));
  CHECK(dominates_strictly(heavy, q3));
  CHECK(!in_s_prime(heavy.matrix()));  // strict domination forces radius > 2

  CHECK(dominates(q3, q3));
  CHECK(!dominates_strictly(q3, q3));
}

TEST_CASE("strict domination of a radius-2 family kills membership") {
  for (int n : {4, 5, 6}) {
    RGraph p3 = build_family({FamilyKind::P3, n, {}});
    SymMatrix m = p3.matrix();
    m.set(0, 0, I(2));  // bump an end charge
    RGraph g(std::move(m));
    CHECK(dominates_strictly(g, p3));
    CHECK(!in_s_prime(g.matrix()));
  }
}

TEST_CASE("is_connected examples") {
  CHECK(is_connected(build_sporadic("S16")));
  SymMatrix two(2, RingId::Z);
  two.set(0, 0, I(2));
  two.set(1, 1, I(2));
  CHECK(!is_connected(RGraph(std::move(two))));
  SymMatrix one(1, RingId::Z);
  CHECK(is_connected(RGraph(std::move(one))));
}

TEST_CASE("canonical handles disconnected graphs") {
  SymMatrix a(3, RingId::Z);
  a.set(0, 1, I(1));
  a.set(2, 2, I(2));
  SymMatrix b(3, RingId::Z);
  b.set(1, 2, I(-1));
  b.set(0, 0, I(2));
  CHECK(canonical_key(RGraph(std::move(a))) == canonical_key(RGraph(std::move(b))));
}

TEST_CASE("Galois invariance forces an integral char poly") {
  auto levels = enumerate_s_prime(RingId::Zphi, 4);
  int invariant_members = 0;
  for (const auto& lvl : levels)
    for (const auto& m : lvl.members)
      if (is_galois_invariant(m.graph)) {
        ++invariant_members;
        CHECK(m.integral);
      }
  CHECK(invariant_members > 0);
}

TEST_CASE("strictly dominating any radius-2 family breaks membership") {
  auto widen = [](const SymMatrix& src) {
    SymMatrix m(src.n(), RingId::Compositum);
    for (int i = 0; i < src.n(); ++i)
      for (int j = i; j < src.n(); ++j) m.set(i, j, src.at(i, j));
    return m;
  };
  // entrywise bumps above Q_k, P1, P2 force spectral radius beyond 2
  for (int k : {3, 4, 5}) {
    RGraph q = build_family({FamilyKind::Q, k, {}});
    SymMatrix m = widen(q.matrix());
    m.set(0, 1, RingElement::sqrt2());
    RGraph g(std::move(m));
    CHECK(dominates_strictly(g, q));
    CHECK(!in_s_prime(g.matrix()));
  }
  RGraph p1 = build_family({FamilyKind::P1, 4, {}});
  SymMatrix m1 = widen(p1.matrix());
  m1.set(1, 2, RingElement::sqrt2());
  RGraph g1(std::move(m1));
  CHECK(dominates_strictly(g1, p1));
  CHECK(!in_s_prime(g1.matrix()));
  RGraph p2 = build_family({FamilyKind::P2, 3, {}});
  SymMatrix m2 = p2.matrix();
  m2.set(0, 0, RingElement::from_int(2));
  RGraph g2(std::move(m2));
  CHECK(dominates_strictly(g2, p2));
  CHECK(!in_s_prime(g2.matrix()));
}
