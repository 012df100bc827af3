#pragma once

#include <span>
#include <vector>

#include "cyclo/ring.hpp"

namespace cyclo {

// Symmetric matrix of ring elements.  The diagonal carries the vertex
// charges of the associated weighted graph.  Immutable in practice: built
// once, then only read.
class SymMatrix {
 public:
  SymMatrix(int n, RingId ring);

  // Row-major entries; throws if the matrix is not symmetric or an entry
  // falls outside the declared ring.
  static SymMatrix from_entries(int n, RingId ring,
                                std::span<const RingElement> entries);

  int n() const { return n_; }
  RingId ring() const { return ring_; }
  const RingElement& at(int i, int j) const { return a_[i * n_ + j]; }
  void set(int i, int j, const RingElement& v);  // keeps symmetry

  SymMatrix galois(Automorphism s) const;
  SymMatrix negated() const;
  SymMatrix with_vertex_deleted(int v) const;
  SymMatrix principal_submatrix(std::span<const int> keep) const;

  // Smallest ring containing every entry.
  RingId minimal_ring() const;
  // True when every entry lies in the admissible entry set (conjugates
  // squaring to at most 4) or is zero.
  bool entries_in_standard_set() const;

  friend bool operator==(const SymMatrix& a, const SymMatrix& b);

 private:
  int n_;
  RingId ring_;
  std::vector<RingElement> a_;
};

// Monic characteristic polynomial; c[k] is the coefficient of x^k,
// c[n] == 1.
struct CharPoly {
  std::vector<RingElement> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  CharPoly galois(Automorphism s) const;
};

// Exact characteristic polynomial via the division-free Berkowitz scheme;
// coefficients stay inside the entry ring.
CharPoly char_poly(const SymMatrix& A);

// Coefficients of p(x + t) for integer t.
CharPoly taylor_shift(const CharPoly& p, int64_t t);

bool is_integral(const CharPoly& p);

// Exact test that all roots of a monic real-rooted polynomial lie in
// [-2, 2], via the sign-alternation criterion on p(x-2) and its reflection.
bool roots_in_pm2(const CharPoly& p);

// Membership in S'_n: every Galois conjugate of A has spectrum in [-2, 2].
bool in_s_prime(const SymMatrix& A);

// Membership in S_n: in S'_n with integral characteristic polynomial;
// equivalently, A is cyclotomic.
bool in_s(const SymMatrix& A);

// Sum of squared incident weights, charge included.
RingElement vertex_degree(const SymMatrix& A, int v);

// True when every vertex of every Galois conjugate has degree at most 4.
bool degree_bound_ok(const SymMatrix& A);

// Exact check that A x = lambda x.
bool is_eigenpair(const SymMatrix& A, std::span<const RingElement> x,
                  const RingElement& lambda);

}  // namespace cyclo
