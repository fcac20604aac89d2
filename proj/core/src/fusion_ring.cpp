#include "svirlab/fusion_ring.hpp"

#include "svirlab/types.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace svirlab {

ModularData su2_s_matrix(int k) {
  if (k < 1) fail(ErrorCode::invalid_argument, "level must be >= 1");
  ModularData md;
  const int n = k + 1;
  md.S.resize(n, n);
  const double norm = std::sqrt(2.0 / (k + 2));
  for (int a = 0; a < n; ++a) {
    md.labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) md.S(a, b) = norm * std::sin(std::numbers::pi * (a + 1) * (b + 1) / (k + 2));
  }
  return md;
}

ModularChecks check_modular(const ModularData& md) {
  ModularChecks c;
  const int n = md.size();
  c.unitarity = (md.S * md.S.adjoint() - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
  c.symmetry = (md.S - md.S.transpose()).cwiseAbs().maxCoeff();
  for (int b = 0; b < n; ++b)
    if (!(md.S(md.vacuum_index, b).real() > 0) || std::abs(md.S(md.vacuum_index, b).imag()) > 1e-12)
      c.first_row_positive = false;
  return c;
}

double quantum_dimension(const ModularData& md, int a) {
  if (a < 0 || a >= md.size()) fail(ErrorCode::invalid_argument, "label out of range");
  return (md.S(md.vacuum_index, a) / md.S(md.vacuum_index, md.vacuum_index)).real();
}

int FusionTensor::conjugate(int a) const {
  for (int b = 0; b < n; ++b)
    if (at(a, b, 0) == 1) return b;
  fail(ErrorCode::numerical, "label without conjugate");
}

FusionTensor verlinde_fusion(const ModularData& md, double tol) {
  FusionTensor f;
  const int n = md.size();
  const int v = md.vacuum_index;
  f.n = n;
  f.N.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        cplx s = 0.0;
        for (int x = 0; x < n; ++x) s += md.S(a, x) * md.S(b, x) * std::conj(md.S(c, x)) / md.S(v, x);
        const double r = std::round(s.real());
        const double dev = std::max(std::abs(s.real() - r), std::abs(s.imag()));
        f.max_deviation = std::max(f.max_deviation, dev);
        if (dev > tol)
          fail(ErrorCode::numerical, "non-integral Verlinde coefficient N_{" + md.labels[a] + "," + md.labels[b] +
                                         "}^{" + md.labels[c] + "} = " + std::to_string(s.real()));
        f.N[(static_cast<std::size_t>(a) * n + b) * n + c] = static_cast<int>(r);
      }
  return f;
}

FusionChecks check_fusion(const FusionTensor& f) {
  FusionChecks c;
  const int n = f.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e) {
        if (f.at(a, b, e) < 0) c.nonnegative = false;
        if (f.at(a, b, e) != f.at(b, a, e)) c.commutative = false;
        if (a == 0 && f.at(0, b, e) != (b == e ? 1 : 0)) c.unit = false;
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)
        for (int d = 0; d < n; ++d) {
          long l = 0, r = 0;
          for (int e = 0; e < n; ++e) {
            l += static_cast<long>(f.at(a, b, e)) * f.at(e, cc, d);
            r += static_cast<long>(f.at(b, cc, e)) * f.at(a, e, d);
          }
          if (l != r) c.associative = false;
        }
  return c;
}

std::vector<int> automorphism_sectors(const ModularData& md, const FusionTensor& f, bool* closed) {
  std::vector<int> out;
  for (int a = 0; a < md.size(); ++a)
    if (std::abs(quantum_dimension(md, a) - 1.0) < 1e-9) out.push_back(a);
  if (closed) {
    *closed = true;
    for (int a : out)
      for (int b : out) {
        int total = 0;
        for (int c = 0; c < f.n; ++c) {
          total += f.at(a, b, c);
          if (f.at(a, b, c) && std::find(out.begin(), out.end(), c) == out.end()) *closed = false;
        }
        if (total != 1) *closed = false;
      }
  }
  return out;
}

std::string CosetSector::str() const {
  std::string s = "(" + std::to_string(j) + std::to_string(k) + std::to_string(l) + ")";
  if (branch > 0) s += "+";
  if (branch < 0) s += "-";
  return s;
}

bool CosetSector::same_orbit(const CosetSector& o) const {
  if (branch != o.branch) return false;
  return (j == o.j && k == o.k && l == o.l) || (j == 2 - o.j && k == 4 - o.k && l == 2 - o.l);
}

int CosetData::index_of(const CosetSector& s) const {
  for (std::size_t i = 0; i < sectors.size(); ++i)
    if (sectors[i].same_orbit(s)) return static_cast<int>(i);
  return -1;
}

CosetData coset_sectors() {
  CosetData cd;
  for (int j = 0; j <= 2; ++j)
    for (int k = 0; k <= 4; ++k)
      for (int l = 0; l <= 2; ++l) {
        if ((j + k + l) % 2) continue;
        CosetSector a{j, k, l, 0}, b{2 - j, 4 - k, 2 - l, 0};
        // representative: smallest l, then largest k
        const auto rank = [](const CosetSector& x) { return std::make_tuple(x.l, -x.k, x.j); };
        CosetSector rep = rank(b) < rank(a) ? b : a;
        if (cd.index_of(rep) >= 0 || cd.index_of({rep.j, rep.k, rep.l, 1}) >= 0) continue;
        if (a == b) {
          cd.sectors.push_back({j, k, l, 1});
          cd.sectors.push_back({j, k, l, -1});
        } else {
          cd.sectors.push_back(rep);
        }
      }
  std::stable_sort(cd.sectors.begin(), cd.sectors.end(), [](const CosetSector& a, const CosetSector& b) {
    return std::tie(a.j, a.k, a.l) < std::tie(b.j, b.k, b.l);
  });
  const ModularData s2 = su2_s_matrix(2), s4 = su2_s_matrix(4);
  const int n = static_cast<int>(cd.sectors.size());
  cd.md.S.resize(n, n);
  for (int a = 0; a < n; ++a) {
    const auto& x = cd.sectors[a];
    cd.md.labels.push_back(x.str());
    for (int b = 0; b < n; ++b) {
      const auto& y = cd.sectors[b];
      cplx v = 2.0 * s2.S(x.j, y.j) * std::conj(s4.S(x.k, y.k)) * s2.S(x.l, y.l);
      if (x.branch) v /= 2.0;
      if (y.branch) v /= 2.0;
      if (x.branch && y.branch) v += (x.branch == y.branch ? 1.0 : -1.0) * cd.resolution / 2.0;
      cd.md.S(a, b) = v;
    }
  }
  cd.fusion = verlinde_fusion(cd.md);
  return cd;
}

std::vector<CosetSector> ramond_labels() { return {{1, 2, 1, 1}, {1, 2, 1, -1}}; }

std::vector<CosetSector> expected_delta() {
  return {{0, 0, 0, 0}, {1, 1, 0, 0}, {1, 3, 0, 0}, {0, 3, 1, 0},
          {1, 2, 1, 1}, {1, 2, 1, -1}, {1, 4, 1, 0}, {2, 3, 1, 0}};
}

std::vector<CosetSector> disjointness_filter(const CosetData& cd, const std::vector<CosetSector>& ramond) {
  std::vector<int> r;
  for (const auto& x : ramond) {
    int i = cd.index_of(x);
    if (i < 0) fail(ErrorCode::invalid_argument, "unknown Ramond label " + x.str());
    r.push_back(i);
  }
  std::vector<CosetSector> out;
  for (int rho = 0; rho < cd.fusion.n; ++rho) {
    bool keep = rho == cd.md.vacuum_index;
    if (!keep) {
      keep = true;
      for (int a : r)
        for (int b : r)
          if (cd.fusion.at(a, rho, b) != 0) keep = false;
    }
    if (keep) out.push_back(cd.sectors[rho]);
  }
  return out;
}

PairingTable pairing_table(const CosetData& cd, const std::vector<CosetSector>& delta,
                           const std::vector<CosetSector>& ramond, int index_value) {
  if (delta.empty()) fail(ErrorCode::invalid_argument, "empty sector set");
  PairingTable t;
  t.cols = {"s(pi_R)"};
  t.note = "model-level prediction from fusion containment";
  for (const auto& rho : delta) {
    const int i = cd.index_of(rho);
    if (i < 0) fail(ErrorCode::invalid_argument, "unknown sector " + rho.str());
    int contained = 0;
    for (const auto& a : ramond)
      for (const auto& b : ramond) contained += cd.fusion.at(cd.index_of(a), i, cd.index_of(b));
    t.rows.push_back(rho.str());
    t.value.push_back({contained > 0 ? index_value : 0});
  }
  return t;
}

PairingTable pairing_table(const FusionTensor& f, const std::vector<std::string>& labels, int value) {
  PairingTable t;
  t.rows = labels;
  t.cols = labels;
  t.note = "model-level prediction from fusion containment";
  t.value.assign(f.n, std::vector<int>(f.n, 0));
  for (int a = 0; a < f.n; ++a)
    for (int b = 0; b < f.n; ++b) t.value[a][b] = value * f.at(f.conjugate(a), b, 0);
  return t;
}

FusionTensor spin_level1_fusion(int d, std::vector<std::string>* labels) {
  if (d < 2 || d % 2) fail(ErrorCode::invalid_argument, "level-1 Spin(d) sectors need even d >= 2");
  // elements as Z4 (d = 2 mod 4) or Z2 x Z2 (d = 0 mod 4): 0, v, s, c
  auto mul = [&](int a, int b) {
    if (d % 4 == 2) {
      static const int z4[4] = {0, 2, 1, 3};  // 0, v, s, c as 0, 2, 1, 3 in Z4
      const int s = (z4[a] + z4[b]) % 4;
      for (int x = 0; x < 4; ++x)
        if (z4[x] == s) return x;
    }
    static const int k[4][2] = {{0, 0}, {1, 1}, {1, 0}, {0, 1}};
    const int p = (k[a][0] + k[b][0]) % 2, q = (k[a][1] + k[b][1]) % 2;
    for (int x = 0; x < 4; ++x)
      if (k[x][0] == p && k[x][1] == q) return x;
    return 0;
  };
  FusionTensor f;
  f.n = 4;
  f.N.assign(64, 0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) f.N[(a * 4 + b) * 4 + mul(a, b)] = 1;
  if (labels) *labels = {"0", "v", "s", "c"};
  return f;
}

}  // namespace svirlab
