#include "cyclo/roots.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cyclo {

namespace {

using boost::multiprecision::cpp_int;
using Rat = boost::rational<cpp_int>;

// Element of the field Q(sqrt2, sqrt3, sqrt5), rational coordinates over the
// same radical basis as RingElement.  Supports division, which the order
// elements do not; used only by the root-counting machinery.
struct FElem {
  std::array<Rat, 8> c{};

  static FElem from_ring(const RingElement& e) {
    FElem f;
    for (int i = 0; i < 8; ++i) f.c[i] = Rat(cpp_int(e.num()[i]), cpp_int(e.den()));
    return f;
  }
  static FElem from_rat(const Rat& r) {
    FElem f;
    f.c[0] = r;
    return f;
  }
  bool is_zero() const {
    for (const auto& v : c)
      if (v.numerator() != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (int i = 1; i < 8; ++i)
      if (c[i].numerator() != 0) return false;
    return true;
  }
};

constexpr int gcd_int(int a, int b) { return b == 0 ? a : gcd_int(b, a % b); }

FElem operator+(const FElem& a, const FElem& b) {
  FElem r;
  for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

FElem operator-(const FElem& a, const FElem& b) {
  FElem r;
  for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

FElem operator-(const FElem& a) {
  FElem r;
  for (int i = 0; i < 8; ++i) r.c[i] = -a.c[i];
  return r;
}

FElem operator*(const FElem& a, const FElem& b) {
  FElem r;
  for (int i = 0; i < 8; ++i) {
    if (a.c[i].numerator() == 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (b.c[j].numerator() == 0) continue;
      int ri = kBasisRadicand[i], rj = kBasisRadicand[j];
      int g = gcd_int(ri, rj);
      int rk = (ri / g) * (rj / g);
      int k = 0;
      while (kBasisRadicand[k] != rk) ++k;
      r.c[k] += a.c[i] * b.c[j] * Rat(g);
    }
  }
  return r;
}

FElem galois(const FElem& a, int s) {
  constexpr int primes[3] = {2, 3, 5};
  FElem r = a;
  for (int i = 0; i < 8; ++i) {
    int sign = 1;
    for (int b = 0; b < 3; ++b)
      if ((s >> b) & 1 && kBasisRadicand[i] % primes[b] == 0) sign = -sign;
    if (sign < 0) r.c[i] = -r.c[i];
  }
  return r;
}

FElem inverse(const FElem& a) {
  if (a.is_zero()) throw std::domain_error("division by zero field element");
  FElem prod = FElem::from_rat(Rat(1));
  for (int s = 1; s < 8; ++s) prod = prod * galois(a, s);
  FElem norm = a * prod;
  if (!norm.is_rational() || norm.c[0].numerator() == 0)
    throw std::logic_error("field norm must be a nonzero rational");
  FElem r;
  for (int i = 0; i < 8; ++i) r.c[i] = prod.c[i] / norm.c[0];
  return r;
}

int sign_of(const FElem& a) {
  if (a.is_zero()) return 0;
  // Clear denominators, then interval-refine the radicals exactly.
  cpp_int den = 1;
  for (const auto& v : a.c)
    den = den / boost::multiprecision::gcd(den, v.denominator()) *
          v.denominator();
  std::array<cpp_int, 8> num;
  for (int i = 0; i < 8; ++i) num[i] = a.c[i].numerator() * (den / a.c[i].denominator());
  for (int bits = 64;; bits *= 2) {
    if (bits > 1 << 20) throw std::logic_error("sign refinement failed");
    cpp_int scale = cpp_int(1) << bits;
    cpp_int scale2 = scale * scale;
    cpp_int lo = 0, hi = 0;
    for (int i = 0; i < 8; ++i) {
      if (num[i] == 0) continue;
      cpp_int rlo, rhi;
      if (i == 0) {
        rlo = scale;
        rhi = scale;
      } else {
        rlo = boost::multiprecision::sqrt(cpp_int(kBasisRadicand[i]) * scale2);
        rhi = rlo + 1;
      }
      if (num[i] > 0) {
        lo += num[i] * rlo;
        hi += num[i] * rhi;
      } else {
        lo += num[i] * rhi;
        hi += num[i] * rlo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

// Rational upper bound on |a|.
Rat abs_upper(const FElem& a) {
  // ceil-ish rational overestimates of the basis radicals
  static const Rat bound[8] = {Rat(1),      Rat(3, 2),  Rat(7, 4),  Rat(9, 4),
                               Rat(5, 2),   Rat(16, 5), Rat(4),     Rat(11, 2)};
  Rat s(0);
  for (int i = 0; i < 8; ++i) {
    Rat v = a.c[i].numerator() < 0 ? -a.c[i] : a.c[i];
    s += v * bound[i];
  }
  return s;
}

// Polynomials with FElem coefficients, ascending powers, no trailing zeros.
using FPoly = std::vector<FElem>;

void trim(FPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const FPoly& p) { return static_cast<int>(p.size()) - 1; }

FPoly from_charpoly(const CharPoly& p) {
  FPoly q;
  q.reserve(p.c.size());
  for (const auto& e : p.c) q.push_back(FElem::from_ring(e));
  trim(q);
  return q;
}

FPoly derivative(const FPoly& p) {
  FPoly d;
  for (size_t k = 1; k < p.size(); ++k)
    d.push_back(p[k] * FElem::from_rat(Rat(cpp_int(k))));
  trim(d);
  return d;
}

FElem eval(const FPoly& p, const Rat& x) {
  FElem r;
  FElem fx = FElem::from_rat(x);
  for (size_t k = p.size(); k-- > 0;) r = r * fx + p[k];
  return r;
}

// Divides by the absolute value of the leading coefficient.  Positive
// scaling preserves signs everywhere, which Sturm counting relies on.
void normalize_positive(FPoly& p) {
  if (p.empty()) return;
  FElem lead = p.back();
  if (sign_of(lead) < 0) lead = -lead;
  FElem inv = inverse(lead);
  for (auto& c : p) c = c * inv;
}

// Remainder of a by b (b nonzero).
FPoly rem(const FPoly& a, const FPoly& b) {
  FPoly r = a;
  FElem inv_lead = inverse(b.back());
  while (degree(r) >= degree(b) && !r.empty()) {
    FElem q = r.back() * inv_lead;
    int shift = degree(r) - degree(b);
    for (int i = 0; i <= degree(b); ++i)
      r[i + shift] = r[i + shift] - q * b[i];
    r.pop_back();
    trim(r);
  }
  return r;
}

FPoly gcd_monic(FPoly a, FPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FPoly r = rem(a, b);
    normalize_positive(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    FElem inv = inverse(a.back());
    for (auto& c : a) c = c * inv;
  }
  return a;
}

struct SturmChain {
  std::vector<FPoly> seq;
  mutable std::map<Rat, int> cache;

  explicit SturmChain(const FPoly& p) {
    seq.push_back(p);
    FPoly d = derivative(p);
    if (!d.empty()) seq.push_back(d);
    while (seq.size() >= 2 && !seq.back().empty()) {
      FPoly r = rem(seq[seq.size() - 2], seq.back());
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      normalize_positive(r);
      seq.push_back(std::move(r));
    }
  }

  int variations_at(const Rat& x) const {
    auto it = cache.find(x);
    if (it != cache.end()) return it->second;
    int v = 0, prev = 0;
    for (const auto& p : seq) {
      int s = sign_of(eval(p, x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    cache.emplace(x, v);
    return v;
  }

  int variations_at_minus_inf() const {
    int v = 0, prev = 0;
    for (const auto& p : seq) {
      if (p.empty()) continue;
      int s = sign_of(p.back());
      if (degree(p) % 2 == 1) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  // Number of distinct real roots in (-inf, x]; x must not be a root.
  int count_leq(const Rat& x) const {
    return variations_at_minus_inf() - variations_at(x);
  }
};

// Multiplicity-aware root counting: chains for p, gcd(p, p'), gcd(...), ...
// A root of multiplicity m is counted by the first m chains.
struct RootCounter {
  std::vector<SturmChain> chains;

  explicit RootCounter(FPoly p) {
    while (degree(p) >= 1) {
      chains.emplace_back(p);
      FPoly g = gcd_monic(p, derivative(p));
      if (degree(g) < 1) break;
      p = std::move(g);
    }
  }

  int count_leq(const Rat& x) const {
    int n = 0;
    for (const auto& ch : chains) n += ch.count_leq(x);
    return n;
  }

  int distinct_in(const Rat& a, const Rat& b) const {
    if (chains.empty()) return 0;
    return chains.front().variations_at(a) - chains.front().variations_at(b);
  }
};

bool is_root(const FPoly& p, const Rat& x) { return eval(p, x).is_zero(); }

}  // namespace

bool interlaces(const CharPoly& parent, const CharPoly& child) {
  if (parent.degree() != child.degree() + 1)
    throw std::invalid_argument("interlaces: parent degree must exceed child by 1");
  FPoly p = from_charpoly(parent);
  FPoly c = from_charpoly(child);
  if (degree(c) < 1) {
    // A constant child interlaces any monic degree-1 parent.
    return true;
  }

  RootCounter np(p), nc(c);
  FPoly h = gcd_monic(p, c);
  std::optional<SturmChain> hc;
  if (degree(h) >= 1) hc.emplace(h);

  // All roots lie strictly inside (-L, L) by the Cauchy bound.
  Rat L(1);
  for (const auto& coef : p) L = std::max(L, abs_upper(coef));
  for (const auto& coef : c) L = std::max(L, abs_upper(coef));
  L += 1;

  // Refine cut points until each cell holds at most one distinct root of
  // p and of c, and when it holds one of each they coincide (h has a root
  // there).  Cut points are kept off the roots of p*c.
  std::vector<Rat> cuts = {-L, L};
  size_t i = 0;
  while (i + 1 < cuts.size()) {
    const Rat a = cuts[i], b = cuts[i + 1];
    int dp = np.distinct_in(a, b);
    int dc = nc.distinct_in(a, b);
    bool ok = dp <= 1 && dc <= 1;
    if (ok && dp == 1 && dc == 1)
      ok = hc && hc->variations_at(a) - hc->variations_at(b) == 1;
    if (ok) {
      ++i;
      continue;
    }
    Rat m = (a + b) / 2;
    for (int k = 1; is_root(p, m) || is_root(c, m); ++k) {
      if (k > 64) throw std::logic_error("failed to find a non-root cut");
      m = a + (b - a) * Rat(2 * k + 1, 4 * k + 4);
    }
    cuts.insert(cuts.begin() + i + 1, m);
  }

  // The counting criterion at the cut points covers every real x, because
  // counts are constant between consecutive distinct roots and each cell
  // holds at most one.
  for (const Rat& x : cuts) {
    int a = np.count_leq(x);
    int b = nc.count_leq(x);
    if (b > a || a > b + 1) return false;
  }
  return true;
}

}  // namespace cyclo
