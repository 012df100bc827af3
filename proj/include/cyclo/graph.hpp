#pragma once

#include <string>
#include <vector>

#include "cyclo/matrix.hpp"

namespace cyclo {

// Weighted-graph view of a symmetric matrix: vertices are indices, u ~ v
// iff the entry w(u,v) is nonzero, charges sit on the diagonal.
// Connectivity is computed once at construction.
class RGraph {
 public:
  explicit RGraph(SymMatrix m);

  const SymMatrix& matrix() const { return m_; }
  int n() const { return m_.n(); }
  RingId ring() const { return m_.ring(); }
  bool connected() const { return connected_; }
  // Neighbor bitmask of v (bit u set iff w(u,v) != 0, u != v).
  uint64_t adjacency_mask(int v) const { return adj_[v]; }
  std::vector<std::vector<int>> components() const;

 private:
  SymMatrix m_;
  std::vector<uint64_t> adj_;
  bool connected_;
};

// All incident edge weights of v negated; the charge stays.  Involution.
RGraph switched(const RGraph& g, int v);

RGraph galois(const RGraph& g, Automorphism s);
RGraph negated(const RGraph& g);

// Byte string encoding the orbit-minimal matrix; equal keys iff equivalent
// graphs.  Orbit group: signed permutations x Galois x global sign.
using CanonicalKey = std::string;

CanonicalKey canonical_key(const RGraph& g);

// Minimal encoding under signed permutations only.
CanonicalKey perm_canonical_key(const RGraph& g);

// Rebuilds the representative matrix encoded by a canonical key.
SymMatrix key_to_matrix(const CanonicalKey& key, RingId ring);

std::string key_to_hex(const CanonicalKey& key);

// Equivalence: equal canonical keys (switching, permutation, entrywise
// Galois, global sign).
bool equivalent(const RGraph& g, const RGraph& h);

// Reachability under signed permutations alone (no Galois twist, no global
// sign): H = Q G Q^T for some signed permutation Q.
bool is_strongly_equivalent(const RGraph& g, const RGraph& h);

// True when every Galois conjugate of g is strongly equivalent to g.
bool is_galois_invariant(const RGraph& g);

// Every cycle carries an even number of +-sqrt2 edges; input must be a
// Z[sqrt2]-graph.  Decided on a fundamental cycle basis.
bool sqrt2_cycle_parity_ok(const RGraph& g);

// True when some principal submatrix S of g (|S| = n(h)) has S - h
// entrywise nonnegative; h is expected to be nonnegative.
bool dominates(const RGraph& g, const RGraph& h);
// Domination with a strict excess: sizes differ or the difference is
// nonzero for some witness injection.
bool dominates_strictly(const RGraph& g, const RGraph& h);

bool is_connected(const RGraph& g);

}  // namespace cyclo
