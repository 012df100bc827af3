#include "cyclo/graph.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <unordered_set>

namespace cyclo {

namespace {

constexpr int kBytesPerElem = 16;

void append_elem(std::string& out, const RingElement& e) {
  for (int64_t v : e.scaled2()) {
    if (v < -32768 || v > 32767)
      throw std::overflow_error("matrix entry too large for key encoding");
    uint16_t u = static_cast<uint16_t>(v + 32768);
    out.push_back(static_cast<char>(u >> 8));
    out.push_back(static_cast<char>(u & 0xff));
  }
}

RingElement decode_elem(const char* p) {
  std::array<int64_t, 8> s2;
  for (int i = 0; i < 8; ++i) {
    uint16_t u = (static_cast<uint8_t>(p[2 * i]) << 8) |
                 static_cast<uint8_t>(p[2 * i + 1]);
    s2[i] = static_cast<int64_t>(u) - 32768;
  }
  return RingElement::from_coords(s2, 2, RingId::Compositum);
}

void append_u16(std::string& out, int v) {
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

// Lexicographically minimal column-major upper-triangle encoding of one
// connected component under signed permutations.  Vertices are appended one
// at a time; the switching sign of each new vertex is forced by lex
// minimality of its connection block, so the search branches only over
// tied vertex choices.
class ComponentCanon {
 public:
  ComponentCanon(const SymMatrix& a, const std::vector<int>& verts)
      : a_(a), verts_(verts), m_(static_cast<int>(verts.size())) {
    adj_.assign(m_, 0);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j)
        if (i != j && !a_.at(verts_[i], verts_[j]).is_zero())
          adj_[i] |= uint64_t(1) << j;
    order_.reserve(m_);
    sign_.reserve(m_);
  }

  std::string run() {
    best_.clear();
    have_best_ = false;
    cur_.clear();
    dfs(0, 0);
    return best_;
  }

 private:
  const SymMatrix& a_;
  const std::vector<int>& verts_;
  int m_;
  std::vector<uint64_t> adj_;
  std::vector<int> order_;
  std::vector<int8_t> sign_;
  std::string cur_, best_;
  bool have_best_ = false;

  // Connection block of candidate v at depth k with its forced sign.
  std::pair<std::string, int8_t> block_for(int v, int k) const {
    int8_t s = 1;
    for (int i = 0; i < k; ++i) {
      const RingElement& e = a_.at(verts_[order_[i]], verts_[v]);
      if (e.is_zero()) continue;
      RingElement w = sign_[i] > 0 ? e : -e;
      s = RingElement::compare(w, -w) <= 0 ? 1 : -1;
      break;
    }
    std::string b;
    b.reserve((k + 1) * kBytesPerElem);
    for (int i = 0; i < k; ++i) {
      RingElement e = a_.at(verts_[order_[i]], verts_[v]);
      if (sign_[i] * s < 0) e = -e;
      append_elem(b, e);
    }
    append_elem(b, a_.at(verts_[v], verts_[v]));
    return {std::move(b), s};
  }

  void dfs(uint64_t used, uint64_t frontier) {
    const int k = static_cast<int>(order_.size());
    if (k == m_) {
      if (!have_best_ || cur_ < best_) {
        best_ = cur_;
        have_best_ = true;
      }
      return;
    }
    uint64_t cand = k == 0 ? (m_ == 64 ? ~uint64_t(0) : (uint64_t(1) << m_) - 1)
                           : (frontier & ~used);
    std::string bmin;
    std::vector<std::pair<int, int8_t>> ties;
    for (uint64_t c = cand; c;) {
      int v = __builtin_ctzll(c);
      c &= c - 1;
      auto [b, s] = block_for(v, k);
      if (ties.empty() || b < bmin) {
        bmin = std::move(b);
        ties.clear();
        ties.emplace_back(v, s);
      } else if (b == bmin) {
        ties.emplace_back(v, s);
      }
    }
    const size_t len = cur_.size();
    cur_ += bmin;
    for (auto [v, s] : ties) {
      order_.push_back(v);
      sign_.push_back(s);
      dfs(used | (uint64_t(1) << v), frontier | adj_[v]);
      order_.pop_back();
      sign_.pop_back();
    }
    cur_.resize(len);
  }
};

std::string canon_encoding(const SymMatrix& a,
                           const std::vector<std::vector<int>>& comps) {
  std::vector<std::string> keys;
  keys.reserve(comps.size());
  for (const auto& comp : comps) {
    std::string k;
    append_u16(k, static_cast<int>(comp.size()));
    k += ComponentCanon(a, comp).run();
    keys.push_back(std::move(k));
  }
  std::sort(keys.begin(), keys.end());
  std::string out;
  append_u16(out, a.n());
  append_u16(out, static_cast<int>(comps.size()));
  for (auto& k : keys) out += k;
  return out;
}

}  // namespace

RGraph::RGraph(SymMatrix m) : m_(std::move(m)) {
  const int n = m_.n();
  if (n > 64) throw std::invalid_argument("graphs limited to 64 vertices");
  adj_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !m_.at(i, j).is_zero()) adj_[i] |= uint64_t(1) << j;
  // BFS over the underlying graph
  uint64_t seen = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (uint64_t c = adj_[v] & ~seen; c;) {
      int u = __builtin_ctzll(c);
      c &= c - 1;
      seen |= uint64_t(1) << u;
      stack.push_back(u);
    }
  }
  connected_ = seen == (n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1);
}

std::vector<std::vector<int>> RGraph::components() const {
  const int n = m_.n();
  std::vector<std::vector<int>> comps;
  uint64_t seen = 0;
  for (int s = 0; s < n; ++s) {
    if (seen & (uint64_t(1) << s)) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen |= uint64_t(1) << s;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (uint64_t c = adj_[v] & ~seen; c;) {
        int u = __builtin_ctzll(c);
        c &= c - 1;
        seen |= uint64_t(1) << u;
        stack.push_back(u);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

RGraph switched(const RGraph& g, int v) {
  if (v < 0 || v >= g.n()) throw std::out_of_range("vertex index out of range");
  SymMatrix m = g.matrix();
  for (int u = 0; u < g.n(); ++u) {
    if (u == v) continue;
    m.set(u, v, -m.at(u, v));
  }
  return RGraph(std::move(m));
}

RGraph galois(const RGraph& g, Automorphism s) {
  return RGraph(g.matrix().galois(s));
}

RGraph negated(const RGraph& g) { return RGraph(g.matrix().negated()); }

CanonicalKey canonical_key(const RGraph& g) {
  const auto comps = g.components();
  std::string best;
  bool have = false;
  std::vector<SymMatrix> seen;
  for (Automorphism s : automorphisms(g.ring())) {
    SymMatrix m = g.matrix().galois(s);
    for (int eps = 0; eps < 2; ++eps) {
      SymMatrix v = eps ? m.negated() : m;
      bool dup = false;
      for (const auto& w : seen)
        if (w == v) { dup = true; break; }
      if (dup) continue;
      std::string k = canon_encoding(v, comps);
      if (!have || k < best) {
        best = std::move(k);
        have = true;
      }
      seen.push_back(std::move(v));
    }
  }
  return best;
}

CanonicalKey perm_canonical_key(const RGraph& g) {
  return canon_encoding(g.matrix(), g.components());
}

SymMatrix key_to_matrix(const CanonicalKey& key, RingId ring) {
  size_t pos = 0;
  auto read_u16 = [&](void) {
    int v = (static_cast<uint8_t>(key[pos]) << 8) |
            static_cast<uint8_t>(key[pos + 1]);
    pos += 2;
    return v;
  };
  int n = read_u16();
  int ncomps = read_u16();
  SymMatrix m(n, ring);
  int base = 0;
  for (int c = 0; c < ncomps; ++c) {
    int cn = read_u16();
    for (int j = 0; j < cn; ++j)
      for (int i = 0; i <= j; ++i) {
        RingElement e = decode_elem(key.data() + pos).with_ring(ring);
        pos += kBytesPerElem;
        m.set(base + i, base + j, e);
      }
    base += cn;
  }
  if (pos != key.size() || base != n)
    throw std::invalid_argument("malformed canonical key");
  return m;
}

std::string key_to_hex(const CanonicalKey& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (unsigned char c : key) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

bool equivalent(const RGraph& g, const RGraph& h) {
  if (g.n() != h.n()) return false;
  return canonical_key(g) == canonical_key(h);
}

bool is_strongly_equivalent(const RGraph& g, const RGraph& h) {
  if (g.n() != h.n()) return false;
  return perm_canonical_key(g) == perm_canonical_key(h);
}

bool is_galois_invariant(const RGraph& g) {
  const CanonicalKey base = perm_canonical_key(g);
  for (Automorphism s : automorphisms(g.ring())) {
    if (s == 0) continue;
    if (perm_canonical_key(galois(g, s)) != base) return false;
  }
  return true;
}

bool sqrt2_cycle_parity_ok(const RGraph& g) {
  if (!ring_contains(RingId::Zsqrt2, g.matrix().minimal_ring()))
    throw std::invalid_argument("sqrt2 cycle parity requires a Z[sqrt2]-graph");
  const RingElement s2 = RingElement::sqrt2();
  auto is_sqrt2 = [&](const RingElement& e) { return e == s2 || e == -s2; };
  const int n = g.n();
  // parity of sqrt2 edges along tree paths from each root
  std::vector<int> par(n, -1);
  for (int root = 0; root < n; ++root) {
    if (par[root] >= 0) continue;
    par[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (uint64_t c = g.adjacency_mask(v); c;) {
        int u = __builtin_ctzll(c);
        c &= c - 1;
        if (par[u] >= 0) continue;
        par[u] = par[v] ^ (is_sqrt2(g.matrix().at(u, v)) ? 1 : 0);
        stack.push_back(u);
      }
    }
  }
  // Parity is linear over the cycle space, so checking the fundamental
  // cycles of any spanning forest suffices.
  for (int v = 0; v < n; ++v)
    for (int u = v + 1; u < n; ++u) {
      const RingElement& e = g.matrix().at(u, v);
      if (e.is_zero()) continue;
      if ((par[u] ^ par[v] ^ (is_sqrt2(e) ? 1 : 0)) != 0) return false;
    }
  return true;
}

namespace {

bool find_injection(const SymMatrix& g, const SymMatrix& h, size_t k,
                    std::vector<int>& map, uint64_t used, bool need_strict,
                    bool have_strict) {
  const int hn = h.n();
  if (static_cast<int>(k) == hn)
    return !need_strict || have_strict || g.n() > hn;
  for (int v = 0; v < g.n(); ++v) {
    if (used & (uint64_t(1) << v)) continue;
    bool ok = true, strict = have_strict;
    for (size_t i = 0; i <= k && ok; ++i) {
      int u = i == k ? v : map[i];
      RingElement d = g.at(u, v) - h.at(static_cast<int>(i), static_cast<int>(k));
      int s = d.sign();
      if (s < 0) ok = false;
      if (s > 0) strict = true;
    }
    if (!ok) continue;
    map.push_back(v);
    if (find_injection(g, h, k + 1, map, used | (uint64_t(1) << v),
                       need_strict, strict))
      return true;
    map.pop_back();
  }
  return false;
}

}  // namespace

bool dominates(const RGraph& g, const RGraph& h) {
  if (g.n() < h.n()) return false;
  std::vector<int> map;
  return find_injection(g.matrix(), h.matrix(), 0, map, 0, false, false);
}

bool dominates_strictly(const RGraph& g, const RGraph& h) {
  if (g.n() < h.n()) return false;
  std::vector<int> map;
  return find_injection(g.matrix(), h.matrix(), 0, map, 0, true, false);
}

bool is_connected(const RGraph& g) { return g.connected(); }

}  // namespace cyclo
