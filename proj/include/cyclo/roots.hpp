#pragma once

#include "cyclo/matrix.hpp"

namespace cyclo {

// Exact test that the roots of `child` interlace those of `parent`:
// l1 <= m1 <= l2 <= ... <= m_{n-1} <= l_n.  Both polynomials must be monic
// and real-rooted (they are characteristic polynomials of symmetric
// matrices in every intended use) and deg(parent) == deg(child) + 1,
// otherwise std::invalid_argument.
//
// Decided by exact root counting: Sturm sequences over Q(sqrt2,sqrt3,sqrt5)
// give multiplicity-aware counting functions N(x); interlacing holds iff
// N_child(x) <= N_parent(x) <= N_child(x) + 1 everywhere, which is checked
// at rational sample points separating the distinct roots.
bool interlaces(const CharPoly& parent, const CharPoly& child);

}  // namespace cyclo
