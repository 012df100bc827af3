#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>

#include "cyclo/graph.hpp"

namespace cyclo {

struct LevelMember {
  RGraph graph;
  CanonicalKey key;
  bool integral;  // integral characteristic polynomial, i.e. in S_n
  std::vector<CanonicalKey> parents;
};

// One level of the enumeration: all classes of S'_n over a ring, one
// canonical representative each, sorted by key.
struct EnumerationLevel {
  int n = 0;
  RingId ring = RingId::Z;
  std::vector<LevelMember> members;

  const LevelMember* find(const CanonicalKey& key) const;
};

// All classes of connected one-vertex supergraphs of g that stay in S',
// with the new vertex's charge and edge weights drawn from the ring's
// admissible entries.  Deduplicated by canonical key, sorted.
std::vector<std::pair<CanonicalKey, RGraph>> extensions_keyed(const RGraph& g,
                                                              RingId ring);
std::vector<RGraph> extensions(const RGraph& g, RingId ring);

using ProgressFn = std::function<void(const EnumerationLevel&)>;

// Seed-growing enumeration of S'_1 ... S'_n_max.  Complete for connected
// members: every connected member of level k+1 extends a member of level k.
std::vector<EnumerationLevel> enumerate_s_prime(RingId ring, int n_max,
                                                const ProgressFn& progress = {});

// Members of S_n and of S'_n \ S_n.
std::pair<std::vector<const LevelMember*>, std::vector<const LevelMember*>>
split_level(const EnumerationLevel& level);

struct Table1Row {
  int n;
  int total;
  int zphi;
  int zsqrt2;
  int zsqrt3;
};

// Counts of S'_n \ S_n classes per ring for n = 1..n_max.
std::vector<Table1Row> table1(int n_max = 6, const ProgressFn& progress = {});

// The five two-vertex seed graphs whose supergraph closures decide the
// mixed-entry question, over the compositum.
std::array<RGraph, 5> excluded_seeds();

struct ClosureResult {
  std::vector<RGraph> members;  // seeds plus every S' descendant
  bool completed;               // false only if the size cap was hit
};

// Full extension closure of the excluded seeds within S' over the
// compositum entry set.
ClosureResult mixed_seed_closure(int size_cap = 12);

enum class MaxStatus { Maximal, Extendable, UndecidedAtHorizon };

const char* max_status_name(MaxStatus s);

struct MaximalityEntry {
  int n = 0;
  CanonicalKey key;
  MaxStatus status = MaxStatus::UndecidedAtHorizon;
  // A strictly larger member of S containing the graph, when extendable.
  std::optional<RGraph> witness;
};

// Decides whether g is contained in a strictly larger member of S over the
// given ring.  Extensions in S witness immediately; extensions that lie in
// S' \ S are chased through S' (a finite search, since S' \ S is empty for
// n > 6) before g is declared maximal.
MaximalityEntry classify_maximality(const RGraph& g, RingId ring,
                                    int chase_cap = 8);

struct MaximalityReport {
  std::vector<MaximalityEntry> entries;
};

MaximalityReport maximality_report(const std::vector<EnumerationLevel>& levels);

}  // namespace cyclo
