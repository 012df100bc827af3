#include "cyclo/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace cyclo {

namespace {

const RingElement kFour = RingElement::from_int(4);

bool within_budget(const RingElement& d, RingId ring) {
  for (Automorphism s : automorphisms(ring))
    if ((kFour - d.galois_raw(s)).sign() < 0) return false;
  return true;
}

// Enumerates all admissible borders (edge weights to each existing vertex
// plus the new charge) and filters by exact membership.
class ExtensionSearch {
 public:
  ExtensionSearch(const RGraph& g, RingId ring) : g_(g), ring_(ring), n_(g.n()) {
    std::vector<RingElement> sorted_entries(ring_entry_set(ring).begin(),
                                            ring_entry_set(ring).end());
    std::sort(sorted_entries.begin(), sorted_entries.end(),
              [](const RingElement& a, const RingElement& b) {
                return RingElement::compare(a, b) < 0;
              });
    weight_options_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      RingElement dv = vertex_degree(g.matrix(), v);
      for (const RingElement& w : sorted_entries)
        if (within_budget(dv + w * w, ring_)) weight_options_[v].push_back(w);
    }
    charges_.push_back(RingElement::from_int(0, ring));
    for (const RingElement& c : sorted_entries) charges_.push_back(c);
    border_.assign(n_, RingElement());
  }

  std::map<CanonicalKey, RGraph> run() {
    descend(0, RingElement(), false);
    return std::move(out_);
  }

 private:
  const RGraph& g_;
  RingId ring_;
  int n_;
  std::vector<std::vector<RingElement>> weight_options_;
  std::vector<RingElement> charges_;
  std::vector<RingElement> border_;
  std::map<CanonicalKey, RGraph> out_;

  void descend(int v, const RingElement& sum_w2, bool any_edge) {
    if (v == n_) {
      if (any_edge) try_charges(sum_w2);
      return;
    }
    border_[v] = RingElement();
    descend(v + 1, sum_w2, any_edge);
    for (const RingElement& w : weight_options_[v]) {
      // The new vertex's switching class is fixed by normalizing the sign
      // of its first nonzero edge.
      if (!any_edge && RingElement::compare(w, -w) > 0) continue;
      RingElement s = sum_w2 + w * w;
      if (!within_budget(s, ring_)) continue;
      border_[v] = w;
      descend(v + 1, s, true);
    }
    border_[v] = RingElement();
  }

  void try_charges(const RingElement& sum_w2) {
    for (const RingElement& c : charges_) {
      if (!within_budget(sum_w2 + c * c, ring_)) continue;
      SymMatrix m(n_ + 1, ring_join(ring_, g_.ring()));
      for (int i = 0; i < n_; ++i) {
        for (int j = i; j < n_; ++j) m.set(i, j, g_.matrix().at(i, j));
        m.set(i, n_, border_[i]);
      }
      m.set(n_, n_, c);
      if (!in_s_prime(m)) continue;
      RGraph cand(std::move(m));
      CanonicalKey key = canonical_key(cand);
      out_.emplace(std::move(key), std::move(cand));
    }
  }
};

RGraph single_vertex(const RingElement& c, RingId ring) {
  SymMatrix m(1, ring);
  m.set(0, 0, c);
  return RGraph(std::move(m));
}

}  // namespace

const LevelMember* EnumerationLevel::find(const CanonicalKey& key) const {
  auto it = std::lower_bound(
      members.begin(), members.end(), key,
      [](const LevelMember& m, const CanonicalKey& k) { return m.key < k; });
  if (it == members.end() || it->key != key) return nullptr;
  return &*it;
}

std::vector<std::pair<CanonicalKey, RGraph>> extensions_keyed(const RGraph& g,
                                                              RingId ring) {
  if (!g.connected())
    throw std::invalid_argument("extensions require a connected graph");
  auto found = ExtensionSearch(g, ring).run();
  std::vector<std::pair<CanonicalKey, RGraph>> out;
  out.reserve(found.size());
  for (auto& [k, v] : found) out.emplace_back(k, std::move(v));
  return out;
}

std::vector<RGraph> extensions(const RGraph& g, RingId ring) {
  std::vector<RGraph> out;
  for (auto& [k, v] : extensions_keyed(g, ring)) out.push_back(std::move(v));
  return out;
}

std::vector<EnumerationLevel> enumerate_s_prime(RingId ring, int n_max,
                                                const ProgressFn& progress) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  std::vector<EnumerationLevel> levels;

  EnumerationLevel l1;
  l1.n = 1;
  l1.ring = ring;
  {
    std::map<CanonicalKey, LevelMember> found;
    std::vector<RingElement> charges{RingElement::from_int(0, ring)};
    for (const RingElement& c : ring_entry_set(ring)) charges.push_back(c);
    for (const RingElement& c : charges) {
      RGraph g = single_vertex(c, ring);
      if (!in_s_prime(g.matrix())) continue;
      CanonicalKey key = canonical_key(g);
      bool integral = is_integral(char_poly(g.matrix()));
      found.emplace(key, LevelMember{std::move(g), key, integral, {}});
    }
    for (auto& [k, m] : found) l1.members.push_back(std::move(m));
  }
  if (progress) progress(l1);
  levels.push_back(std::move(l1));

  for (int k = 2; k <= n_max; ++k) {
    EnumerationLevel lvl;
    lvl.n = k;
    lvl.ring = ring;
    std::map<CanonicalKey, LevelMember> found;
    for (const LevelMember& parent : levels.back().members) {
      for (auto& [key, g] : extensions_keyed(parent.graph, ring)) {
        auto it = found.find(key);
        if (it == found.end()) {
          bool integral = is_integral(char_poly(g.matrix()));
          found.emplace(key,
                        LevelMember{std::move(g), key, integral, {parent.key}});
        } else {
          it->second.parents.push_back(parent.key);
        }
      }
    }
    for (auto& [key, m] : found) {
      std::sort(m.parents.begin(), m.parents.end());
      m.parents.erase(std::unique(m.parents.begin(), m.parents.end()),
                      m.parents.end());
      lvl.members.push_back(std::move(m));
    }
    if (progress) progress(lvl);
    levels.push_back(std::move(lvl));
  }
  return levels;
}

std::pair<std::vector<const LevelMember*>, std::vector<const LevelMember*>>
split_level(const EnumerationLevel& level) {
  std::pair<std::vector<const LevelMember*>, std::vector<const LevelMember*>> r;
  for (const LevelMember& m : level.members)
    (m.integral ? r.first : r.second).push_back(&m);
  return r;
}

std::vector<Table1Row> table1(int n_max, const ProgressFn& progress) {
  std::vector<Table1Row> rows(n_max);
  for (int i = 0; i < n_max; ++i) rows[i] = Table1Row{i + 1, 0, 0, 0, 0};
  struct Col {
    RingId ring;
    int Table1Row::*field;
  };
  const Col cols[3] = {{RingId::Zphi, &Table1Row::zphi},
                       {RingId::Zsqrt2, &Table1Row::zsqrt2},
                       {RingId::Zsqrt3, &Table1Row::zsqrt3}};
  for (const Col& col : cols) {
    auto levels = enumerate_s_prime(col.ring, n_max, progress);
    for (const auto& lvl : levels) {
      int nonintegral = 0;
      for (const auto& m : lvl.members)
        if (!m.integral) ++nonintegral;
      rows[lvl.n - 1].*col.field = nonintegral;
      rows[lvl.n - 1].total += nonintegral;
    }
  }
  return rows;
}

std::array<RGraph, 5> excluded_seeds() {
  const RingId R = RingId::Compositum;
  const RingElement one = RingElement::from_int(1, R);
  auto charged_pair = [&](const RingElement& w) {
    SymMatrix m(2, R);
    m.set(0, 0, one);
    m.set(1, 1, -one);
    m.set(0, 1, w);
    return RGraph(std::move(m));
  };
  SymMatrix x1(2, R);
  x1.set(0, 0, RingElement::phi());
  x1.set(0, 1, RingElement::phi_bar());
  return {RGraph(std::move(x1)), charged_pair(RingElement::sqrt2()),
          charged_pair(RingElement::sqrt3()), charged_pair(RingElement::phi()),
          charged_pair(one)};
}

ClosureResult mixed_seed_closure(int size_cap) {
  ClosureResult res{{}, true};
  std::set<CanonicalKey> seen;
  for (RGraph& s : excluded_seeds()) {
    CanonicalKey key = canonical_key(s);
    if (!seen.insert(key).second) continue;
    res.members.push_back(std::move(s));
  }
  // res.members doubles as the worklist; copy before growing it.
  for (size_t next = 0; next < res.members.size(); ++next) {
    const RGraph g = res.members[next];
    if (g.n() >= size_cap) {
      res.completed = false;
      continue;
    }
    for (auto& [key, ext] : extensions_keyed(g, RingId::Compositum)) {
      if (!seen.insert(key).second) continue;
      res.members.push_back(std::move(ext));
    }
  }
  return res;
}

const char* max_status_name(MaxStatus s) {
  switch (s) {
    case MaxStatus::Maximal: return "maximal";
    case MaxStatus::Extendable: return "extendable";
    case MaxStatus::UndecidedAtHorizon: return "undecided-at-horizon";
  }
  return "?";
}

MaximalityEntry classify_maximality(const RGraph& g, RingId ring,
                                    int chase_cap) {
  MaximalityEntry entry;
  entry.n = g.n();
  entry.key = canonical_key(g);
  std::set<CanonicalKey> seen;
  std::vector<RGraph> queue;
  for (auto& [key, ext] : extensions_keyed(g, ring)) {
    if (in_s(ext.matrix())) {
      entry.status = MaxStatus::Extendable;
      entry.witness = std::move(ext);
      return entry;
    }
    if (seen.insert(key).second) queue.push_back(std::move(ext));
  }
  // Everything reachable sits in S' \ S; chase it until it either reaches
  // an integral supergraph or dies out.
  size_t next = 0;
  while (next < queue.size()) {
    RGraph h = queue[next++];
    if (h.n() - g.n() >= chase_cap) {
      entry.status = MaxStatus::UndecidedAtHorizon;
      return entry;
    }
    for (auto& [key, ext] : extensions_keyed(h, ring)) {
      if (in_s(ext.matrix())) {
        entry.status = MaxStatus::Extendable;
        entry.witness = std::move(ext);
        return entry;
      }
      if (seen.insert(key).second) queue.push_back(std::move(ext));
    }
  }
  entry.status = MaxStatus::Maximal;
  return entry;
}

MaximalityReport maximality_report(const std::vector<EnumerationLevel>& levels) {
  MaximalityReport report;
  for (const auto& lvl : levels)
    for (const auto& m : lvl.members)
      report.entries.push_back(classify_maximality(m.graph, lvl.ring));
  return report;
}

}  // namespace cyclo
