#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclo/enumerate.hpp"
#include "cyclo/graph.hpp"

namespace cyclo {

// The named graphs of the classification: four parametric families of
// maximal cyclotomic graphs, four spectral-radius-2 path/cycle families
// with known eigenvectors, and the sporadic maximal graphs.
enum class FamilyKind {
  T2k,    // 2k-vertex toral Z-graphs, k >= 3
  C2k,    // 2k-vertex Z[sqrt2]-graphs, k >= 2
  C2kPP,  // 2k-vertex charged Z-graphs (+/+), k >= 2
  C2kPM,  // 2k-vertex charged Z-graphs (+/-), k >= 2
  C2k1,   // (2k+1)-vertex Z[sqrt2]-graphs, k >= 1
  P1,     // sqrt2-ended path, n >= 3, spectral radius 2
  P2,     // charged path with one sqrt2 end, n >= 2
  P3,     // doubly charged unit path, n >= 2
  Q,      // unit cycle, n >= 3
  Sporadic
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::Sporadic;
  int param = 0;        // k for the C/T families, n for P/Q
  std::string sporadic; // sporadic name when kind == Sporadic

  std::string str() const;
};

// Constructs the named graph; throws std::invalid_argument when the
// parameter is outside the family's range.
RGraph build_family(const FamilySpec& spec);

const std::vector<std::string>& sporadic_names();
RGraph build_sporadic(const std::string& name);

// Positive eigenvector with eigenvalue 2 for the P/Q families.
std::vector<RingElement> family_eigenvector(const FamilySpec& spec);

// All maximal catalog instances checked by verify_catalog: every sporadic
// plus the parametric families with k up to max_k.
std::vector<std::pair<std::string, RGraph>> catalog_maximals(int max_k = 6);

// Identifies g (up to equivalence) with a catalog instance of its size.
std::optional<FamilySpec> match_family(const RGraph& g);

struct CatalogCheck {
  std::string graph;
  std::string check;
  bool pass;
};

struct CatalogReport {
  std::vector<CatalogCheck> checks;
  bool all_pass() const;
};

// Verifies the whole catalog: membership in S, the maximality certificate,
// Galois invariance (with its unique sporadic exception), and the
// eigenvector data of the spectral-radius-2 families.
CatalogReport verify_catalog(int max_k = 6);

}  // namespace cyclo
