#include "cyclo/ring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cmath>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cyclo {

namespace {

using boost::multiprecision::cpp_int;

constexpr int gcd_int(int a, int b) { return b == 0 ? a : gcd_int(b, a % b); }

struct MulEntry {
  uint8_t idx;
  int8_t factor;
};

constexpr std::array<std::array<MulEntry, 8>, 8> build_mul_table() {
  std::array<std::array<MulEntry, 8>, 8> t{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      int ri = kBasisRadicand[i], rj = kBasisRadicand[j];
      int g = gcd_int(ri, rj);
      int rk = (ri / g) * (rj / g);
      int k = -1;
      for (int m = 0; m < 8; ++m)
        if (kBasisRadicand[m] == rk) k = m;
      t[i][j] = MulEntry{static_cast<uint8_t>(k), static_cast<int8_t>(g)};
    }
  }
  return t;
}

constexpr auto kMul = build_mul_table();

// kGaloisSign[s][i]: sign picked up by basis element i under automorphism s.
constexpr std::array<std::array<int8_t, 8>, 8> build_galois_signs() {
  std::array<std::array<int8_t, 8>, 8> t{};
  constexpr int primes[3] = {2, 3, 5};
  for (int s = 0; s < 8; ++s) {
    for (int i = 0; i < 8; ++i) {
      int sign = 1;
      for (int b = 0; b < 3; ++b)
        if ((s >> b) & 1 && kBasisRadicand[i] % primes[b] == 0) sign = -sign;
      t[s][i] = static_cast<int8_t>(sign);
    }
  }
  return t;
}

constexpr auto kGaloisSign = build_galois_signs();

// Parity-linked coordinate pairs for denominator-2 elements.
constexpr int kParityPair[8] = {3, 5, 6, 0, 7, 1, 2, 4};

const double kBasisValue[8] = {
    1.0,
    1.4142135623730950488,   // sqrt2
    1.7320508075688772935,   // sqrt3
    2.2360679774997896964,   // sqrt5
    2.4494897427831780982,   // sqrt6
    3.1622776601683793320,   // sqrt10
    3.8729833462074168852,   // sqrt15
    5.4772255750516611346};  // sqrt30

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("RingElement addition overflow");
  return r;
}

int64_t checked_dbl(int64_t a) { return checked_add(a, a); }

}  // namespace

const char* ring_name(RingId r) {
  switch (r) {
    case RingId::Z: return "z";
    case RingId::Zsqrt2: return "zsqrt2";
    case RingId::Zsqrt3: return "zsqrt3";
    case RingId::Zphi: return "zphi";
    case RingId::Compositum: return "compositum";
  }
  return "?";
}

std::optional<RingId> ring_from_name(std::string_view s) {
  for (RingId r : {RingId::Z, RingId::Zsqrt2, RingId::Zsqrt3, RingId::Zphi,
                   RingId::Compositum})
    if (s == ring_name(r)) return r;
  return std::nullopt;
}

RingId ring_join(RingId a, RingId b) {
  if (a == b) return a;
  if (a == RingId::Z) return b;
  if (b == RingId::Z) return a;
  return RingId::Compositum;
}

bool ring_contains(RingId outer, RingId inner) {
  return ring_join(outer, inner) == outer;
}

std::span<const Automorphism> automorphisms(RingId r) {
  static const Automorphism z[] = {0};
  static const Automorphism s2[] = {0, 1};
  static const Automorphism s3[] = {0, 2};
  static const Automorphism s5[] = {0, 4};
  static const Automorphism all[] = {0, 1, 2, 3, 4, 5, 6, 7};
  switch (r) {
    case RingId::Z: return z;
    case RingId::Zsqrt2: return s2;
    case RingId::Zsqrt3: return s3;
    case RingId::Zphi: return s5;
    case RingId::Compositum: return all;
  }
  return z;
}

bool automorphism_valid(RingId r, Automorphism s) {
  for (Automorphism a : automorphisms(r))
    if (a == s) return true;
  return false;
}

void RingElement::reduce() {
  if (den_ == 2) {
    bool all_even = true;
    for (int64_t v : num_)
      if (v & 1) { all_even = false; break; }
    if (all_even) {
      for (auto& v : num_) v /= 2;
      den_ = 1;
    }
  }
}

RingElement RingElement::make_raw(const std::array<int64_t, 8>& num, int den,
                                  RingId ring) {
  RingElement e;
  e.num_ = num;
  e.den_ = den;
  e.ring_ = ring;
  e.reduce();
  return e;
}

RingElement RingElement::from_int(int64_t v, RingId ring) {
  RingElement e;
  e.num_[0] = v;
  e.ring_ = ring;
  return e;
}

RingElement RingElement::from_coords(const std::array<int64_t, 8>& num, int den,
                                     RingId ring) {
  if (den != 1 && den != 2)
    throw std::invalid_argument("element denominator must be 1 or 2");
  if (den == 2) {
    for (int i = 0; i < 8; ++i)
      if (((num[i] ^ num[kParityPair[i]]) & 1) != 0)
        throw std::invalid_argument(
            "half-integral coordinates must come in matching parity pairs");
  }
  RingElement e = make_raw(num, den, ring);
  if (!ring_contains(ring, e.minimal_ring()))
    throw std::invalid_argument("element does not lie in the declared ring");
  return e;
}

RingElement RingElement::sqrt2() {
  RingElement e;
  e.num_[1] = 1;
  e.ring_ = RingId::Zsqrt2;
  return e;
}

RingElement RingElement::sqrt3() {
  RingElement e;
  e.num_[2] = 1;
  e.ring_ = RingId::Zsqrt3;
  return e;
}

RingElement RingElement::sqrt5() {
  RingElement e;
  e.num_[3] = 1;
  e.ring_ = RingId::Zphi;
  return e;
}

RingElement RingElement::phi() {
  RingElement e;
  e.num_[0] = 1;
  e.num_[3] = 1;
  e.den_ = 2;
  e.ring_ = RingId::Zphi;
  return e;
}

RingElement RingElement::phi_bar() {
  RingElement e;
  e.num_[0] = 1;
  e.num_[3] = -1;
  e.den_ = 2;
  e.ring_ = RingId::Zphi;
  return e;
}

RingElement RingElement::with_ring(RingId r) const {
  if (!ring_contains(r, minimal_ring()))
    throw std::invalid_argument("value does not lie in the requested ring");
  RingElement e = *this;
  e.ring_ = r;
  return e;
}

RingId RingElement::minimal_ring() const {
  bool extra = false;  // any coordinate outside the quadratic subrings
  for (int i : {4, 5, 6, 7})
    if (num_[i] != 0) extra = true;
  bool s2 = num_[1] != 0, s3 = num_[2] != 0, s5 = num_[3] != 0;
  if (extra || (s2 && s3) || (s2 && s5) || (s3 && s5)) return RingId::Compositum;
  if (s2) return RingId::Zsqrt2;
  if (s3) return RingId::Zsqrt3;
  if (s5) return RingId::Zphi;
  return RingId::Z;
}

bool RingElement::is_zero() const {
  for (int64_t v : num_)
    if (v != 0) return false;
  return true;
}

bool RingElement::is_rational_integer() const {
  if (den_ != 1) return false;
  for (int i = 1; i < 8; ++i)
    if (num_[i] != 0) return false;
  return true;
}

std::optional<int64_t> RingElement::as_rational_integer() const {
  if (!is_rational_integer()) return std::nullopt;
  return num_[0];
}

RingElement RingElement::galois(Automorphism s) const {
  if (!automorphism_valid(ring_, s))
    throw std::invalid_argument("automorphism does not act on this ring");
  return galois_raw(s);
}

RingElement RingElement::galois_raw(Automorphism s) const {
  RingElement e = *this;
  for (int i = 0; i < 8; ++i)
    if (kGaloisSign[s][i] < 0) e.num_[i] = -e.num_[i];
  return e;
}

int RingElement::sign() const {
  if (is_zero()) return 0;
  // Fast path: double evaluation with a conservative error bound.
  double v = 0, a = 0;
  for (int i = 0; i < 8; ++i) {
    double t = static_cast<double>(num_[i]) * kBasisValue[i];
    v += t;
    a += std::abs(t);
  }
  if (std::abs(v) > a * 1e-12) return v > 0 ? 1 : -1;
  // Exact fallback: interval refinement of the radicals at growing precision.
  for (int bits = 64; bits <= 8192; bits *= 2) {
    cpp_int scale = cpp_int(1) << bits;
    cpp_int scale2 = scale * scale;
    cpp_int lo = 0, hi = 0;
    for (int i = 0; i < 8; ++i) {
      if (num_[i] == 0) continue;
      cpp_int rlo, rhi;
      if (i == 0) {
        rlo = scale;
        rhi = scale;
      } else {
        rlo = boost::multiprecision::sqrt(cpp_int(kBasisRadicand[i]) * scale2);
        rhi = rlo + 1;
      }
      if (num_[i] > 0) {
        lo += num_[i] * rlo;
        hi += num_[i] * rhi;
      } else {
        lo += num_[i] * rhi;
        hi += num_[i] * rlo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  throw std::logic_error("sign(): interval refinement failed to separate");
}

RingElement RingElement::abs() const { return sign() < 0 ? -*this : *this; }

double RingElement::approx() const {
  double v = 0;
  for (int i = 0; i < 8; ++i)
    v += static_cast<double>(num_[i]) * kBasisValue[i];
  return v / den_;
}

RingElement RingElement::operator-() const {
  RingElement e = *this;
  for (auto& v : e.num_) v = -v;
  return e;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  std::array<int64_t, 8> num;
  int den;
  if (a.den_ == b.den_) {
    for (int i = 0; i < 8; ++i) num[i] = checked_add(a.num_[i], b.num_[i]);
    den = a.den_;
  } else {
    const RingElement& h = a.den_ == 2 ? a : b;  // half-integral side
    const RingElement& w = a.den_ == 2 ? b : a;
    for (int i = 0; i < 8; ++i)
      num[i] = checked_add(h.num_[i], checked_dbl(w.num_[i]));
    den = 2;
  }
  return RingElement::make_raw(num, den, ring_join(a.ring_, b.ring_));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  return a + (-b);
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  __int128 acc[8] = {};
  for (int i = 0; i < 8; ++i) {
    if (a.num_[i] == 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (b.num_[j] == 0) continue;
      const MulEntry& m = kMul[i][j];
      acc[m.idx] += static_cast<__int128>(a.num_[i]) * b.num_[j] * m.factor;
    }
  }
  int den = a.den_ * b.den_;
  if (den == 4) {
    // Products of order elements stay in the order, so halving is exact.
    for (auto& v : acc) {
      assert((v & 1) == 0);
      v >>= 1;
    }
    den = 2;
  }
  std::array<int64_t, 8> num;
  for (int i = 0; i < 8; ++i) {
    if (acc[i] > INT64_MAX || acc[i] < INT64_MIN)
      throw std::overflow_error("RingElement multiplication overflow");
    num[i] = static_cast<int64_t>(acc[i]);
  }
  return RingElement::make_raw(num, den, ring_join(a.ring_, b.ring_));
}

int RingElement::compare(const RingElement& a, const RingElement& b) {
  if (a.den_ == b.den_) {
    for (int i = 0; i < 8; ++i) {
      if (a.num_[i] != b.num_[i]) return a.num_[i] < b.num_[i] ? -1 : 1;
    }
    return 0;
  }
  for (int i = 0; i < 8; ++i) {
    int64_t x = a.den_ == 2 ? a.num_[i] : checked_dbl(a.num_[i]);
    int64_t y = b.den_ == 2 ? b.num_[i] : checked_dbl(b.num_[i]);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

std::array<int64_t, 8> RingElement::scaled2() const {
  std::array<int64_t, 8> r = num_;
  if (den_ == 1)
    for (auto& v : r) v = checked_dbl(v);
  return r;
}

std::string RingElement::str() const {
  if (is_zero()) return "0";
  static const char* names[8] = {"",     "s2",  "s3",  "s5",
                                 "s6",   "s10", "s15", "s30"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 8; ++i) {
    if (num_[i] == 0) continue;
    int64_t v = num_[i];
    if (!first) os << (v > 0 ? "+" : "-");
    else if (v < 0) os << "-";
    int64_t av = v < 0 ? -v : v;
    if (i == 0 || av != 1) os << av;
    if (i > 0) os << names[i];
    first = false;
  }
  std::string body = os.str();
  if (den_ == 2) return "(" + body + ")/2";
  return body;
}

std::ostream& operator<<(std::ostream& os, const RingElement& e) {
  return os << e.str();
}

std::span<const RingElement> ring_entry_set(RingId r) {
  static std::vector<RingElement> sets[5];
  static std::once_flag once;
  std::call_once(once, [] {
    const RingElement one = RingElement::from_int(1);
    const RingElement two = RingElement::from_int(2);
    auto add_pm = [](std::vector<RingElement>& v, const RingElement& e,
                     RingId ring) {
      v.push_back(e.with_ring(ring));
      v.push_back((-e).with_ring(ring));
    };
    auto& z = sets[static_cast<int>(RingId::Z)];
    add_pm(z, one, RingId::Z);
    add_pm(z, two, RingId::Z);
    auto& s2 = sets[static_cast<int>(RingId::Zsqrt2)];
    add_pm(s2, one, RingId::Zsqrt2);
    add_pm(s2, RingElement::sqrt2(), RingId::Zsqrt2);
    add_pm(s2, two, RingId::Zsqrt2);
    auto& s3 = sets[static_cast<int>(RingId::Zsqrt3)];
    add_pm(s3, one, RingId::Zsqrt3);
    add_pm(s3, RingElement::sqrt3(), RingId::Zsqrt3);
    add_pm(s3, two, RingId::Zsqrt3);
    auto& s5 = sets[static_cast<int>(RingId::Zphi)];
    add_pm(s5, one, RingId::Zphi);
    add_pm(s5, RingElement::phi(), RingId::Zphi);
    add_pm(s5, RingElement::phi_bar(), RingId::Zphi);
    add_pm(s5, two, RingId::Zphi);
    auto& c = sets[static_cast<int>(RingId::Compositum)];
    add_pm(c, one, RingId::Compositum);
    add_pm(c, RingElement::sqrt2(), RingId::Compositum);
    add_pm(c, RingElement::phi(), RingId::Compositum);
    add_pm(c, RingElement::phi_bar(), RingId::Compositum);
    add_pm(c, RingElement::sqrt3(), RingId::Compositum);
    add_pm(c, two, RingId::Compositum);
  });
  return sets[static_cast<int>(r)];
}

}  // namespace cyclo
