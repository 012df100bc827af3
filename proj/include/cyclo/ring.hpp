#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace cyclo {

// The rings the engine works over.  Compositum is the order
// Z[sqrt2, sqrt3, phi] inside Q(sqrt2, sqrt3, sqrt5).
enum class RingId : uint8_t { Z = 0, Zsqrt2, Zsqrt3, Zphi, Compositum };

const char* ring_name(RingId r);
std::optional<RingId> ring_from_name(std::string_view s);

// Smallest ring containing both arguments.
RingId ring_join(RingId a, RingId b);
bool ring_contains(RingId outer, RingId inner);

// Galois automorphism of Q(sqrt2, sqrt3, sqrt5), encoded as a bitmask:
// bit 0 sends sqrt2 -> -sqrt2, bit 1 sends sqrt3 -> -sqrt3,
// bit 2 sends sqrt5 -> -sqrt5.  Composite radicals follow multiplicatively.
using Automorphism = uint8_t;

// The automorphisms that act on elements of the given ring (identity first).
std::span<const Automorphism> automorphisms(RingId r);
bool automorphism_valid(RingId r, Automorphism s);

// Radicands of the fixed basis {1, s2, s3, s5, s6, s10, s15, s30}.
inline constexpr std::array<int, 8> kBasisRadicand = {1, 2, 3, 5, 6, 10, 15, 30};

// An element of the compositum order, stored as eight integer numerators
// over the radical basis with a common denominator in {1, 2}.  With
// denominator 2 the numerator parities must match in the pairs
// (1,s5), (s2,s10), (s3,s15), (s6,s30); that is exactly membership in
// Z[sqrt2, sqrt3, phi].  Values are immutable and all operations are pure.
class RingElement {
 public:
  RingElement() = default;  // zero

  static RingElement from_int(int64_t v, RingId ring = RingId::Z);
  // Validates denominator/parity invariants and ring containment; reduces.
  static RingElement from_coords(const std::array<int64_t, 8>& num, int den,
                                 RingId ring);

  static RingElement sqrt2();
  static RingElement sqrt3();
  static RingElement sqrt5();
  static RingElement phi();      // (1 + sqrt5)/2
  static RingElement phi_bar();  // (1 - sqrt5)/2

  const std::array<int64_t, 8>& num() const { return num_; }
  int den() const { return den_; }
  RingId ring() const { return ring_; }

  // Same value tagged with a larger ring.  Throws if the value does not lie
  // in the requested ring.
  RingElement with_ring(RingId r) const;
  // Smallest RingId whose basis supports the nonzero coordinates.
  RingId minimal_ring() const;

  bool is_zero() const;
  bool is_rational_integer() const;
  std::optional<int64_t> as_rational_integer() const;

  // Applies the automorphism componentwise.  Throws std::invalid_argument
  // if the automorphism does not act on this element's ring.
  RingElement galois(Automorphism s) const;
  // Coordinate-level action without the ring check; internal machinery
  // validates the automorphism against the enclosing matrix's ring instead.
  RingElement galois_raw(Automorphism s) const;

  // Exact sign of the real embedding: -1, 0, +1.
  int sign() const;
  RingElement abs() const;
  double approx() const;

  RingElement operator-() const;
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
  RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
  RingElement& operator*=(const RingElement& o) { return *this = *this * o; }

  // Value equality; the ring tag is context, not part of the value.
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const RingElement& a, const RingElement& b) {
    return !(a == b);
  }

  // Total order on values: lexicographic on the coordinates scaled to the
  // common denominator 2.  Used by the canonical-form machinery.
  static int compare(const RingElement& a, const RingElement& b);

  // Numerators rescaled to denominator 2.
  std::array<int64_t, 8> scaled2() const;

  std::string str() const;

 private:
  std::array<int64_t, 8> num_{};
  int32_t den_ = 1;
  RingId ring_ = RingId::Z;

  void reduce();
  static RingElement make_raw(const std::array<int64_t, 8>& num, int den,
                              RingId ring);
};

std::ostream& operator<<(std::ostream& os, const RingElement& e);

// The nonzero entries admissible in matrices over the given ring: the
// elements of the ring all of whose conjugates square to at most 4.
std::span<const RingElement> ring_entry_set(RingId r);

}  // namespace cyclo
