#include "cyclo/matrix.hpp"

#include <stdexcept>

namespace cyclo {

SymMatrix::SymMatrix(int n, RingId ring) : n_(n), ring_(ring), a_(n * n) {
  if (n <= 0) throw std::invalid_argument("matrix dimension must be positive");
}

SymMatrix SymMatrix::from_entries(int n, RingId ring,
                                  std::span<const RingElement> entries) {
  if (static_cast<int>(entries.size()) != n * n)
    throw std::invalid_argument("entry count does not match dimension");
  SymMatrix m(n, ring);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const RingElement& e = entries[i * n + j];
      if (e != entries[j * n + i])
        throw std::invalid_argument("matrix is not symmetric");
      if (!ring_contains(ring, e.minimal_ring()))
        throw std::invalid_argument("entry outside the declared ring");
      m.a_[i * n + j] = e;
    }
  return m;
}

void SymMatrix::set(int i, int j, const RingElement& v) {
  if (!ring_contains(ring_, v.minimal_ring()))
    throw std::invalid_argument("entry outside the declared ring");
  a_[i * n_ + j] = v;
  a_[j * n_ + i] = v;
}

SymMatrix SymMatrix::galois(Automorphism s) const {
  if (!automorphism_valid(ring_, s))
    throw std::invalid_argument("automorphism does not act on this ring");
  SymMatrix m(n_, ring_);
  for (int i = 0; i < n_ * n_; ++i) m.a_[i] = a_[i].galois_raw(s);
  return m;
}

SymMatrix SymMatrix::negated() const {
  SymMatrix m(n_, ring_);
  for (int i = 0; i < n_ * n_; ++i) m.a_[i] = -a_[i];
  return m;
}

SymMatrix SymMatrix::with_vertex_deleted(int v) const {
  std::vector<int> keep;
  keep.reserve(n_ - 1);
  for (int i = 0; i < n_; ++i)
    if (i != v) keep.push_back(i);
  return principal_submatrix(keep);
}

SymMatrix SymMatrix::principal_submatrix(std::span<const int> keep) const {
  SymMatrix m(static_cast<int>(keep.size()), ring_);
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j)
      m.a_[i * keep.size() + j] = at(keep[i], keep[j]);
  return m;
}

RingId SymMatrix::minimal_ring() const {
  RingId r = RingId::Z;
  for (const auto& e : a_) r = ring_join(r, e.minimal_ring());
  return r;
}

bool SymMatrix::entries_in_standard_set() const {
  const RingElement four = RingElement::from_int(4);
  for (const auto& e : a_) {
    if (e.is_zero()) continue;
    // Conjugates over the full group, regardless of the element's tag.
    for (Automorphism s : automorphisms(RingId::Compositum)) {
      RingElement g = e.galois_raw(s);
      if ((four - g * g).sign() < 0) return false;
    }
  }
  return true;
}

bool operator==(const SymMatrix& a, const SymMatrix& b) {
  return a.n_ == b.n_ && a.a_ == b.a_;
}

CharPoly CharPoly::galois(Automorphism s) const {
  CharPoly q;
  q.c.reserve(c.size());
  for (const auto& e : c) q.c.push_back(e.galois_raw(s));
  return q;
}

CharPoly char_poly(const SymMatrix& A) {
  const int n = A.n();
  const RingId ring = A.ring();
  const RingElement one = RingElement::from_int(1, ring);
  // v holds the coefficients of the leading k x k block, highest power
  // first: v[0] x^k + v[1] x^(k-1) + ...
  std::vector<RingElement> v{one, -A.at(0, 0)};
  std::vector<RingElement> t, w, w2, v2;
  for (int k = 2; k <= n; ++k) {
    t.assign(k + 1, RingElement::from_int(0, ring));
    t[0] = one;
    t[1] = -A.at(k - 1, k - 1);
    w.resize(k - 1);
    for (int i = 0; i < k - 1; ++i) w[i] = A.at(i, k - 1);
    for (int m = 2; m <= k; ++m) {
      RingElement acc;
      for (int i = 0; i < k - 1; ++i) acc += A.at(k - 1, i) * w[i];
      t[m] = -acc;
      if (m < k) {
        w2.assign(k - 1, RingElement());
        for (int i = 0; i < k - 1; ++i) {
          RingElement s;
          for (int j = 0; j < k - 1; ++j) {
            if (A.at(i, j).is_zero() || w[j].is_zero()) continue;
            s += A.at(i, j) * w[j];
          }
          w2[i] = s;
        }
        w.swap(w2);
      }
    }
    v2.assign(k + 1, RingElement());
    for (int i = 0; i <= k; ++i) {
      RingElement s;
      for (int j = 0; j < static_cast<int>(v.size()); ++j) {
        int d = i - j;
        if (d < 0 || d > k) continue;
        if (t[d].is_zero() || v[j].is_zero()) continue;
        s += t[d] * v[j];
      }
      v2[i] = s;
    }
    v.swap(v2);
  }
  CharPoly p;
  p.c.resize(n + 1);
  for (int i = 0; i <= n; ++i) p.c[n - i] = v[i];
  return p;
}

CharPoly taylor_shift(const CharPoly& p, int64_t t) {
  CharPoly q = p;
  const RingElement tt = RingElement::from_int(t);
  const int n = q.degree();
  for (int j = 0; j < n; ++j)
    for (int i = n - 1; i >= j; --i) q.c[i] += tt * q.c[i + 1];
  return q;
}

bool is_integral(const CharPoly& p) {
  for (const auto& e : p.c)
    if (!e.is_rational_integer()) return false;
  return true;
}

namespace {

// Roots of a monic real-rooted polynomial are all >= 0 iff the k-th
// coefficient is zero or has sign (-1)^(n-k).
bool roots_all_nonneg(const CharPoly& p) {
  const int n = p.degree();
  for (int k = 0; k <= n; ++k) {
    int s = p.c[k].sign();
    if (s == 0) continue;
    int want = ((n - k) % 2 == 0) ? 1 : -1;
    if (s != want) return false;
  }
  return true;
}

CharPoly reflect(const CharPoly& p) {
  CharPoly q = p;
  const int n = q.degree();
  for (int k = 0; k <= n; ++k)
    if ((n - k) % 2 == 1) q.c[k] = -q.c[k];
  return q;
}

}  // namespace

bool roots_in_pm2(const CharPoly& p) {
  return roots_all_nonneg(taylor_shift(p, -2)) &&
         roots_all_nonneg(taylor_shift(reflect(p), -2));
}

bool in_s_prime(const SymMatrix& A) {
  CharPoly p = char_poly(A);
  for (Automorphism s : automorphisms(A.ring())) {
    if (!roots_in_pm2(p.galois(s))) return false;
  }
  return true;
}

bool in_s(const SymMatrix& A) {
  CharPoly p = char_poly(A);
  if (!is_integral(p)) return false;
  return roots_in_pm2(p);
}

RingElement vertex_degree(const SymMatrix& A, int v) {
  if (v < 0 || v >= A.n()) throw std::out_of_range("vertex index out of range");
  RingElement d;
  for (int u = 0; u < A.n(); ++u) {
    const RingElement& w = A.at(u, v);
    if (!w.is_zero()) d += w * w;
  }
  return d;
}

bool degree_bound_ok(const SymMatrix& A) {
  const RingElement four = RingElement::from_int(4);
  for (int v = 0; v < A.n(); ++v) {
    RingElement d = vertex_degree(A, v);
    for (Automorphism s : automorphisms(A.ring()))
      if ((four - d.galois_raw(s)).sign() < 0) return false;
  }
  return true;
}

bool is_eigenpair(const SymMatrix& A, std::span<const RingElement> x,
                  const RingElement& lambda) {
  if (static_cast<int>(x.size()) != A.n())
    throw std::invalid_argument("eigenvector dimension mismatch");
  for (int i = 0; i < A.n(); ++i) {
    RingElement s;
    for (int j = 0; j < A.n(); ++j) {
      if (A.at(i, j).is_zero() || x[j].is_zero()) continue;
      s += A.at(i, j) * x[j];
    }
    if (s != lambda * x[i]) return false;
  }
  return true;
}

}  // namespace cyclo
