#include "cyclo/catalog.hpp"

#include <map>
#include <stdexcept>

namespace cyclo {

namespace {

RingElement I(int64_t v) { return RingElement::from_int(v); }
RingElement S2() { return RingElement::sqrt2(); }
RingElement S3() { return RingElement::sqrt3(); }
RingElement PHI() { return RingElement::phi(); }
RingElement PHB() { return RingElement::phi_bar(); }

struct Builder {
  SymMatrix m;
  explicit Builder(int n, RingId ring) : m(n, ring) {}
  Builder& charge(int v, const RingElement& c) {
    m.set(v, v, c);
    return *this;
  }
  Builder& edge(int u, int v, const RingElement& w) {
    if (u == v || !m.at(u, v).is_zero())
      throw std::logic_error("bad catalog edge");
    m.set(u, v, w);
    return *this;
  }
  RGraph done() { return RGraph(std::move(m)); }
};

RGraph make_sporadic(const std::string& name) {
  if (name == "S1") {
    return Builder(1, RingId::Z).charge(0, I(2)).done();
  }
  if (name == "S2") {
    return Builder(2, RingId::Z).edge(0, 1, I(2)).done();
  }
  if (name == "S2p") {  // charges +-sqrt3, unit edge
    return Builder(2, RingId::Zsqrt3)
        .charge(0, S3())
        .charge(1, -S3())
        .edge(0, 1, I(1))
        .done();
  }
  if (name == "S2dag") {  // charges +-1, sqrt3 edge
    return Builder(2, RingId::Zsqrt3)
        .charge(0, I(1))
        .charge(1, -I(1))
        .edge(0, 1, S3())
        .done();
  }
  if (name == "S2ddag") {  // charges +-sqrt2, sqrt2 edge
    return Builder(2, RingId::Zsqrt2)
        .charge(0, S2())
        .charge(1, -S2())
        .edge(0, 1, S2())
        .done();
  }
  if (name == "S3") {
    return Builder(3, RingId::Zphi)
        .charge(0, PHI())
        .charge(1, PHB())
        .charge(2, I(1))
        .edge(0, 1, I(1))
        .edge(0, 2, PHB())
        .edge(1, 2, PHI())
        .done();
  }
  if (name == "S4s3") {
    return Builder(4, RingId::Zsqrt3)
        .edge(0, 1, S3())
        .edge(2, 3, S3())
        .edge(1, 3, I(1))
        .edge(0, 2, -I(1))
        .done();
  }
  if (name == "S4phi1") {
    return Builder(4, RingId::Zphi)
        .charge(0, I(1))
        .charge(1, -I(1))
        .charge(2, -I(1))
        .charge(3, I(1))
        .edge(0, 1, PHI())
        .edge(0, 2, PHB())
        .edge(1, 3, PHB())
        .edge(2, 3, -PHI())
        .done();
  }
  if (name == "S4phi2") {
    return Builder(4, RingId::Zphi)
        .charge(0, PHI())
        .charge(1, -PHI())
        .charge(2, -PHI())
        .charge(3, PHI())
        .edge(0, 2, PHB())
        .edge(1, 3, PHB())
        .edge(0, 1, I(1))
        .edge(2, 3, -I(1))
        .done();
  }
  if (name == "S4phi3") {
    return Builder(4, RingId::Zphi)
        .charge(1, PHI())
        .charge(2, PHB())
        .charge(3, -I(1))
        .edge(0, 1, PHB())
        .edge(0, 2, PHI())
        .edge(1, 3, I(1))
        .edge(2, 3, I(1))
        .edge(0, 3, I(1))
        .done();
  }
  if (name == "S4rt2_1") {
    return Builder(4, RingId::Zsqrt2)
        .charge(0, I(1))
        .charge(1, -I(1))
        .charge(2, -I(1))
        .charge(3, I(1))
        .edge(0, 1, S2())
        .edge(2, 3, -S2())
        .edge(1, 3, I(1))
        .edge(0, 2, I(1))
        .done();
  }
  if (name == "S4rt2_2") {
    return Builder(4, RingId::Zsqrt2)
        .charge(0, S2())
        .charge(2, -S2())
        .edge(1, 3, S2())
        .edge(0, 1, -I(1))
        .edge(2, 3, I(1))
        .edge(1, 2, I(1))
        .edge(0, 3, I(1))
        .done();
  }
  if (name == "S4rt2_3") {
    return Builder(4, RingId::Zsqrt2)
        .charge(0, S2())
        .charge(1, -S2())
        .charge(2, -S2())
        .charge(3, S2())
        .edge(0, 1, I(1))
        .edge(2, 3, -I(1))
        .edge(1, 3, I(1))
        .edge(0, 2, I(1))
        .done();
  }
  if (name == "S6") {  // phi/phi-bar alternating 6-cycle with unit chords
    return Builder(6, RingId::Zphi)
        .edge(0, 1, PHI())
        .edge(1, 4, PHB())
        .edge(0, 3, PHB())
        .edge(2, 3, PHI())
        .edge(2, 5, PHB())
        .edge(4, 5, PHI())
        .edge(1, 2, I(1))
        .edge(3, 4, I(1))
        .edge(0, 5, I(1))
        .done();
  }
  if (name == "S7") {
    return Builder(7, RingId::Z)
        .charge(0, I(1))
        .charge(3, -I(1))
        .charge(4, I(1))
        .charge(5, I(1))
        .edge(0, 1, I(1))
        .edge(0, 2, -I(1))
        .edge(0, 3, I(1))
        .edge(2, 5, I(1))
        .edge(5, 6, -I(1))
        .edge(1, 6, I(1))
        .edge(3, 4, I(1))
        .edge(3, 5, I(1))
        .edge(1, 4, -I(1))
        .edge(2, 6, I(1))
        .edge(4, 6, I(1))
        .edge(1, 2, I(1))
        .done();
  }
  if (name == "S8") {
    return Builder(8, RingId::Z)
        .charge(0, -I(1))
        .charge(1, I(1))
        .charge(2, I(1))
        .charge(3, -I(1))
        .charge(4, I(1))
        .charge(5, -I(1))
        .charge(6, -I(1))
        .charge(7, I(1))
        .edge(0, 1, I(1))
        .edge(0, 2, -I(1))
        .edge(0, 4, I(1))
        .edge(2, 6, I(1))
        .edge(2, 3, I(1))
        .edge(1, 5, -I(1))
        .edge(1, 3, I(1))
        .edge(4, 5, I(1))
        .edge(4, 6, I(1))
        .edge(6, 7, -I(1))
        .edge(5, 7, I(1))
        .edge(3, 7, I(1))
        .done();
  }
  if (name == "S8p") {
    return Builder(8, RingId::Z)
        .charge(0, -I(1))
        .charge(1, I(1))
        .charge(6, I(1))
        .charge(7, -I(1))
        .edge(0, 1, I(1))
        .edge(0, 2, I(1))
        .edge(0, 4, I(1))
        .edge(2, 6, I(1))
        .edge(2, 3, -I(1))
        .edge(1, 5, -I(1))
        .edge(1, 3, I(1))
        .edge(4, 5, I(1))
        .edge(4, 6, -I(1))
        .edge(6, 7, I(1))
        .edge(5, 7, I(1))
        .edge(3, 7, I(1))
        .edge(3, 5, I(1))
        .edge(2, 4, I(1))
        .done();
  }
  if (name == "S8dag") {
    return Builder(8, RingId::Zsqrt2)
        .edge(0, 1, S2())
        .edge(4, 5, S2())
        .edge(2, 3, -S2())
        .edge(6, 7, S2())
        .edge(1, 3, I(1))
        .edge(1, 5, -I(1))
        .edge(4, 6, -I(1))
        .edge(2, 6, I(1))
        .edge(5, 7, I(1))
        .edge(0, 4, I(1))
        .edge(3, 7, I(1))
        .edge(0, 2, I(1))
        .done();
  }
  if (name == "S8dagdag") {
    return Builder(8, RingId::Zphi)
        .edge(0, 1, PHB())
        .edge(4, 5, PHB())
        .edge(2, 3, -PHB())
        .edge(1, 5, -PHI())
        .edge(2, 6, PHI())
        .edge(6, 7, PHB())
        .edge(0, 4, PHI())
        .edge(3, 7, PHI())
        .edge(1, 3, I(1))
        .edge(4, 6, -I(1))
        .edge(5, 7, I(1))
        .edge(0, 2, I(1))
        .done();
  }
  if (name == "S8ddag") {
    return Builder(8, RingId::Zphi)
        .edge(0, 1, PHI())
        .edge(1, 5, PHB())
        .edge(2, 6, PHI())
        .edge(6, 7, PHB())
        .edge(5, 7, PHI())
        .edge(0, 2, PHB())
        .edge(4, 5, I(1))
        .edge(2, 3, I(1))
        .edge(1, 3, I(1))
        .edge(4, 6, I(1))
        .edge(3, 4, -I(1))
        .edge(0, 4, I(1))
        .edge(3, 7, I(1))
        .done();
  }
  if (name == "S14") {
    // 4-regular signed graph realizing a 14-line system of E7 roots:
    // 2I - A is the rank-7 Gram matrix of the lines, so the spectrum is
    // {2, -2} with multiplicity 7 each.
    struct SE { int u, v, w; };
    static constexpr SE edges[] = {
        {0, 2, -1}, {0, 3, -1},  {0, 10, -1}, {0, 11, -1}, {1, 2, -1},
        {1, 3, 1},  {1, 12, -1}, {1, 13, -1}, {2, 4, -1},  {2, 5, -1},
        {3, 6, -1}, {3, 7, -1},  {4, 8, -1},  {4, 11, 1},  {4, 13, 1},
        {5, 8, 1},  {5, 10, 1},  {5, 12, 1},  {6, 8, -1},  {6, 10, 1},
        {6, 13, -1}, {7, 8, 1},  {7, 11, 1},  {7, 12, -1}, {9, 10, 1},
        {9, 11, -1}, {9, 12, -1}, {9, 13, 1}};
    Builder b(14, RingId::Z);
    for (const SE& e : edges) b.edge(e.u, e.v, I(e.w));
    return b.done();
  }
  if (name == "S16") {
    // outer cycle 0..7, inner 8-cycle of step 3 on 8..15, signed matching
    Builder b(16, RingId::Z);
    for (int j = 0; j < 8; ++j) {
      b.edge(j, (j + 1) % 8, I(1));
      b.edge(8 + j, 8 + (j + 3) % 8, I(1));
      b.edge(j, 8 + (j + 1) % 8, -I(1));
      b.edge(j, 8 + (j + 7) % 8, I(1));
    }
    return b.done();
  }
  throw std::invalid_argument("unknown sporadic graph: " + name);
}

void check_param(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("parameter out of range for ") + what);
}

// Column blocks shared by the toral and cylinder families: top-to-top and
// top-to-bottom edges +1, bottom-to-anything -1.
void pair_block(Builder& b, int t0, int u0, int t1, int u1) {
  b.edge(t0, t1, I(1));
  b.edge(t0, u1, I(1));
  b.edge(u0, t1, -I(1));
  b.edge(u0, u1, -I(1));
}

RGraph make_T2k(int k) {
  check_param(k >= 3, "T2k");
  Builder b(2 * k, RingId::Z);
  for (int j = 0; j < k; ++j) {
    int j2 = (j + 1) % k;
    pair_block(b, 2 * j, 2 * j + 1, 2 * j2, 2 * j2 + 1);
  }
  return b.done();
}

RGraph make_C2k(int k) {
  check_param(k >= 2, "C2k");
  Builder b(2 * k, RingId::Zsqrt2);
  const int L = 0, R = 2 * k - 1;
  auto t = [](int j) { return 1 + 2 * j; };
  auto u = [](int j) { return 2 + 2 * j; };
  b.edge(L, t(0), S2());
  b.edge(L, u(0), S2());
  for (int j = 0; j + 1 <= k - 2; ++j) pair_block(b, t(j), u(j), t(j + 1), u(j + 1));
  b.edge(t(k - 2), R, S2());
  b.edge(u(k - 2), R, -S2());
  return b.done();
}

RGraph make_C2k_charged(int k, bool minus) {
  check_param(k >= 2, minus ? "C2k+-" : "C2k++");
  Builder b(2 * k, RingId::Z);
  auto t = [](int i) { return 2 * i; };
  auto u = [](int i) { return 2 * i + 1; };
  b.charge(t(0), I(1)).charge(u(0), I(1)).edge(t(0), u(0), I(1));
  RingElement end_charge = minus ? -I(1) : I(1);
  RingElement end_edge = minus ? I(1) : -I(1);
  b.charge(t(k - 1), end_charge).charge(u(k - 1), end_charge);
  b.edge(t(k - 1), u(k - 1), end_edge);
  for (int i = 0; i + 1 <= k - 1; ++i) pair_block(b, t(i), u(i), t(i + 1), u(i + 1));
  return b.done();
}

RGraph make_C2k1(int k) {
  check_param(k >= 1, "C2k+1");
  Builder b(2 * k + 1, RingId::Zsqrt2);
  auto t = [](int i) { return 2 * i + 1; };
  auto u = [](int i) { return 2 * i + 2; };
  b.edge(0, t(0), S2());
  b.edge(0, u(0), S2());
  for (int i = 0; i + 1 <= k - 1; ++i) pair_block(b, t(i), u(i), t(i + 1), u(i + 1));
  b.charge(t(k - 1), I(1)).charge(u(k - 1), I(1));
  b.edge(t(k - 1), u(k - 1), -I(1));
  return b.done();
}

RGraph make_P1(int n) {
  check_param(n >= 3, "P1");
  Builder b(n, RingId::Zsqrt2);
  for (int i = 0; i + 1 < n; ++i)
    b.edge(i, i + 1, (i == 0 || i == n - 2) ? S2() : I(1));
  return b.done();
}

RGraph make_P2(int n) {
  check_param(n >= 2, "P2");
  Builder b(n, RingId::Zsqrt2);
  b.charge(0, I(1));
  for (int i = 0; i + 1 < n; ++i)
    b.edge(i, i + 1, i == n - 2 ? S2() : I(1));
  return b.done();
}

RGraph make_P3(int n) {
  check_param(n >= 2, "P3");
  Builder b(n, RingId::Z);
  b.charge(0, I(1)).charge(n - 1, I(1));
  for (int i = 0; i + 1 < n; ++i) b.edge(i, i + 1, I(1));
  return b.done();
}

RGraph make_Q(int n) {
  check_param(n >= 3, "Q");
  Builder b(n, RingId::Z);
  for (int i = 0; i < n; ++i) b.edge(i, (i + 1) % n, I(1));
  return b.done();
}

}  // namespace

std::string FamilySpec::str() const {
  switch (kind) {
    case FamilyKind::T2k: return "T" + std::to_string(2 * param);
    case FamilyKind::C2k: return "C" + std::to_string(2 * param);
    case FamilyKind::C2kPP: return "C" + std::to_string(2 * param) + "++";
    case FamilyKind::C2kPM: return "C" + std::to_string(2 * param) + "+-";
    case FamilyKind::C2k1: return "C" + std::to_string(2 * param + 1);
    case FamilyKind::P1: return "P1_" + std::to_string(param);
    case FamilyKind::P2: return "P2_" + std::to_string(param);
    case FamilyKind::P3: return "P3_" + std::to_string(param);
    case FamilyKind::Q: return "Q" + std::to_string(param);
    case FamilyKind::Sporadic: return sporadic;
  }
  return "?";
}

RGraph build_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::T2k: return make_T2k(spec.param);
    case FamilyKind::C2k: return make_C2k(spec.param);
    case FamilyKind::C2kPP: return make_C2k_charged(spec.param, false);
    case FamilyKind::C2kPM: return make_C2k_charged(spec.param, true);
    case FamilyKind::C2k1: return make_C2k1(spec.param);
    case FamilyKind::P1: return make_P1(spec.param);
    case FamilyKind::P2: return make_P2(spec.param);
    case FamilyKind::P3: return make_P3(spec.param);
    case FamilyKind::Q: return make_Q(spec.param);
    case FamilyKind::Sporadic: return make_sporadic(spec.sporadic);
  }
  throw std::invalid_argument("bad family spec");
}

const std::vector<std::string>& sporadic_names() {
  static const std::vector<std::string> names = {
      "S1",      "S2",      "S2p",      "S2dag",    "S2ddag",  "S3",
      "S4s3",    "S4phi1",  "S4phi2",   "S4phi3",   "S4rt2_1", "S4rt2_2",
      "S4rt2_3", "S6",      "S7",       "S8",       "S8p",     "S8dag",
      "S8dagdag", "S8ddag", "S14",      "S16"};
  return names;
}

RGraph build_sporadic(const std::string& name) { return make_sporadic(name); }

std::vector<RingElement> family_eigenvector(const FamilySpec& spec) {
  const int n = spec.param;
  std::vector<RingElement> x;
  switch (spec.kind) {
    case FamilyKind::P1:
      x.assign(n, I(2));
      x.front() = S2();
      x.back() = S2();
      return x;
    case FamilyKind::P2:
      x.assign(n, I(2));
      x.back() = S2();
      return x;
    case FamilyKind::P3:
    case FamilyKind::Q:
      x.assign(n, I(1));
      return x;
    default:
      throw std::invalid_argument("no eigenvector data for this family");
  }
}

std::vector<std::pair<std::string, RGraph>> catalog_maximals(int max_k) {
  std::vector<std::pair<std::string, RGraph>> out;
  for (const std::string& s : sporadic_names())
    out.emplace_back(s, build_sporadic(s));
  for (int k = 3; k <= max_k; ++k) {
    FamilySpec f{FamilyKind::T2k, k, {}};
    out.emplace_back(f.str(), build_family(f));
  }
  for (int k = 2; k <= max_k; ++k) {
    for (FamilyKind kind : {FamilyKind::C2k, FamilyKind::C2kPP, FamilyKind::C2kPM}) {
      FamilySpec f{kind, k, {}};
      out.emplace_back(f.str(), build_family(f));
    }
  }
  for (int k = 1; k <= max_k; ++k) {
    FamilySpec f{FamilyKind::C2k1, k, {}};
    out.emplace_back(f.str(), build_family(f));
  }
  return out;
}

std::optional<FamilySpec> match_family(const RGraph& g) {
  const int n = g.n();
  std::vector<FamilySpec> candidates;
  for (const std::string& s : sporadic_names()) {
    RGraph h = build_sporadic(s);
    if (h.n() == n) candidates.push_back({FamilyKind::Sporadic, 0, s});
  }
  if (n % 2 == 0) {
    int k = n / 2;
    if (k >= 3) candidates.push_back({FamilyKind::T2k, k, {}});
    if (k >= 2) {
      candidates.push_back({FamilyKind::C2k, k, {}});
      candidates.push_back({FamilyKind::C2kPP, k, {}});
      candidates.push_back({FamilyKind::C2kPM, k, {}});
    }
  } else if (n >= 3) {
    candidates.push_back({FamilyKind::C2k1, (n - 1) / 2, {}});
  }
  if (n >= 3) {
    candidates.push_back({FamilyKind::P1, n, {}});
    candidates.push_back({FamilyKind::Q, n, {}});
  }
  if (n >= 2) {
    candidates.push_back({FamilyKind::P2, n, {}});
    candidates.push_back({FamilyKind::P3, n, {}});
  }
  if (candidates.empty()) return std::nullopt;
  const CanonicalKey key = canonical_key(g);
  for (const FamilySpec& spec : candidates) {
    if (canonical_key(build_family(spec)) == key) return spec;
  }
  return std::nullopt;
}

bool CatalogReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

CatalogReport verify_catalog(int max_k) {
  CatalogReport report;
  auto add = [&](const std::string& g, const std::string& check, bool pass) {
    report.checks.push_back({g, check, pass});
  };

  for (const auto& [name, g] : catalog_maximals(max_k)) {
    add(name, "in_s", in_s(g.matrix()));
    MaximalityEntry me = classify_maximality(g, RingId::Compositum);
    add(name, "maximal", me.status == MaxStatus::Maximal);
    bool gi = is_galois_invariant(g);
    add(name, "galois_invariance", name == "S4phi2" ? !gi : gi);
  }

  auto check_eigen_family = [&](FamilyKind kind, int n_lo, int n_hi) {
    for (int n = n_lo; n <= n_hi; ++n) {
      FamilySpec spec{kind, n, {}};
      RGraph g = build_family(spec);
      std::vector<RingElement> x = family_eigenvector(spec);
      add(spec.str(), "eigenvector_2",
          is_eigenpair(g.matrix(), x, RingElement::from_int(2)));
      add(spec.str(), "in_s", in_s(g.matrix()));
    }
  };
  check_eigen_family(FamilyKind::P1, 3, 8);
  check_eigen_family(FamilyKind::P2, 2, 8);
  check_eigen_family(FamilyKind::P3, 2, 8);
  check_eigen_family(FamilyKind::Q, 3, 8);

  return report;
}

}  // namespace cyclo
