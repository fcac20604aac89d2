#include "svirlab/fermion_fock.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <sstream>

namespace svirlab {

namespace {

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

std::vector<Mat> clifford_generators(int d, ZeroModeVariant variant) {
  Mat sx(2, 2), sy(2, 2), sz(2, 2), id2 = Mat::Identity(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, -I, I, 0;
  sz << 1, 0, 0, -1;
  const int nq = d / 2;
  auto chain = [&](int site, const Mat& m) {
    Mat r = Mat::Identity(1, 1);
    for (int s = 0; s < nq; ++s) r = kron(r, s < site ? sz : (s == site ? m : id2));
    return r;
  };
  std::vector<Mat> g;
  for (int j = 0; j < nq; ++j) {
    g.push_back(chain(j, sx));
    g.push_back(chain(j, sy));
  }
  if (d % 2 == 1) {
    Mat z = Mat::Identity(1, 1);
    for (int s = 0; s < nq; ++s) z = kron(z, sz);
    g.push_back(variant == ZeroModeVariant::minus ? Mat(-z) : z);
  }
  return g;
}

}  // namespace

int zero_mode_dimension(int d, Sector sector) { return sector == Sector::R ? (1 << (d / 2)) : 1; }

FockSpace::FockSpace(int d, FermionSector sector, HalfInt cutoff) : d_(d), sector_(sector) {
  if (d < 1) fail(ErrorCode::invalid_argument, "fermion space needs d >= 1");
  const bool needs_variant = sector.kind == Sector::R && d % 2 == 1;
  if (needs_variant == (sector.variant == ZeroModeVariant::unique))
    fail(ErrorCode::invalid_argument, needs_variant ? "R sector with odd d needs variant plus or minus"
                                                    : "zero-mode variant only applies to R sector with odd d");
  cutoff = floor_cutoff(sector.kind, cutoff);
  module_.cutoff = cutoff;
  module_.lowest_energy = sector.kind == Sector::R ? Rational(d, 16) : Rational(0);

  if (sector.kind == Sector::R) {
    zdim_ = 1 << (d / 2);
    gamma_ = clifford_generators(d, sector.variant);
  }
  const int first = sector.kind == Sector::R ? 2 : 1;  // twice |r| of the lowest creation mode
  for (int t = first; t <= cutoff.twice(); t += 2)
    for (int a = 0; a < d; ++a) modes_.emplace_back(a, HalfInt::from_twice(-t));
  if (modes_.size() > 62) fail(ErrorCode::budget, "too many fermion modes for the bitmask basis");

  std::vector<std::pair<std::uint64_t, HalfInt>> masks;
  auto dfs = [&](auto&& self, std::size_t from, std::uint64_t mask, HalfInt e) -> void {
    masks.emplace_back(mask, e);
    for (std::size_t m = from; m < modes_.size(); ++m) {
      HalfInt e2 = e - modes_[m].second;
      if (e2 > cutoff) break;  // modes are sorted by |r|
      self(self, m + 1, mask | (std::uint64_t{1} << m), e2);
    }
  };
  dfs(dfs, 0, 0, HalfInt(0));

  for (int z = 0; z < zdim_; ++z)
    for (auto [mask, e] : masks) states_.push_back({z, mask, e});
  auto occupied = [](std::uint64_t m) {
    std::vector<int> v;
    while (m) {
      v.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    return v;
  };
  std::sort(states_.begin(), states_.end(), [&](const State& x, const State& y) {
    if (x.energy != y.energy) return x.energy < y.energy;
    if (x.z != y.z) return x.z < y.z;
    return occupied(x.mask) < occupied(y.mask);
  });

  const bool graded = sector.kind == Sector::NS || d % 2 == 0;
  if (graded) module_.parity.emplace();
  for (std::size_t i = 0; i < states_.size(); ++i) {
    const auto& s = states_[i];
    key_index_.emplace_back(s.mask * static_cast<std::uint64_t>(zdim_) + s.z, static_cast<int>(i));
    module_.level.push_back(s.energy);
    if (graded) {
      int p = (std::popcount(s.mask) % 2 ? -1 : 1) * (std::popcount(static_cast<unsigned>(s.z)) % 2 ? -1 : 1);
      module_.parity->push_back(p);
    }
    std::ostringstream os;
    if (sector.kind == Sector::R) os << "z" << s.z;
    for (int m : occupied(s.mask)) os << (os.tellp() > 0 ? " " : "") << "F" << modes_[m].first + 1 << "("
                                      << modes_[m].second.str() << ")";
    module_.label.push_back(os.str().empty() ? "vac" : os.str());
  }
  std::sort(key_index_.begin(), key_index_.end());
}

int FockSpace::mode_index(int a, HalfInt r) const {
  // modes_ is laid out as blocks of d colours per |r|
  const int first = sector_.kind == Sector::R ? 2 : 1;
  const int block = (-r.twice() - first) / 2;
  return block * d_ + a;
}

int FockSpace::lookup(int z, std::uint64_t mask) const {
  const std::uint64_t key = mask * static_cast<std::uint64_t>(zdim_) + z;
  auto it = std::lower_bound(key_index_.begin(), key_index_.end(), std::make_pair(key, -1));
  if (it == key_index_.end() || it->first != key) return -1;
  return it->second;
}

std::optional<std::pair<int, int>> FockSpace::apply_nonzero(int a, HalfInt r, int state) const {
  if (r == HalfInt(0)) fail(ErrorCode::invalid_argument, "apply_nonzero called with a zero mode");
  if (abs(r) > module_.cutoff) return std::nullopt;
  const int m = mode_index(a, -abs(r));
  const std::uint64_t bit = std::uint64_t{1} << m;
  const auto& s = states_[state];
  const int sign = std::popcount(s.mask & (bit - 1)) % 2 ? -1 : 1;
  if (r < HalfInt(0)) {
    if (s.mask & bit) return std::nullopt;
    int t = lookup(s.z, s.mask | bit);
    if (t < 0) return std::nullopt;
    return std::make_pair(t, sign);
  }
  if (!(s.mask & bit)) return std::nullopt;
  return std::make_pair(lookup(s.z, s.mask & ~bit), sign);
}

SpMat FockSpace::mode(int a, HalfInt r) const {
  if (a < 0 || a >= d_) fail(ErrorCode::invalid_argument, "fermion colour out of range");
  if (!on_grid(sector_.kind, r))
    fail(ErrorCode::invalid_argument, "mode " + r.str() + " is off the " + to_string(sector_.kind) + " grid");
  const int n = dim();
  std::vector<Eigen::Triplet<cplx>> t;
  if (r == HalfInt(0)) {
    const double s2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i) {
      const auto& s = states_[i];
      const double sign = std::popcount(s.mask) % 2 ? -1.0 : 1.0;
      for (int z2 = 0; z2 < zdim_; ++z2) {
        cplx g = gamma_[a](z2, s.z);
        if (g != 0.0) t.emplace_back(lookup(z2, s.mask), i, sign * s2 * g);
      }
    }
  } else if (abs(r) <= module_.cutoff) {
    for (int i = 0; i < n; ++i)
      if (auto res = apply_nonzero(a, r, i)) t.emplace_back(res->first, i, static_cast<double>(res->second));
  }
  SpMat m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

ModeOperator FockSpace::mode_matrix(int a, HalfInt r) const { return {mode(a, r), r, abs(r)}; }

SpMat FockSpace::smeared(const TrigPoly& f) const {
  if (f.max_abs_mode() > module_.cutoff) fail(ErrorCode::invalid_argument, "smearing modes exceed the cutoff");
  SpMat s(dim(), dim());
  for (const auto& [k, c] : f.coeff)
    if (c != 0.0) s += c * mode(k.first, k.second);
  return s;
}

void FockSpace::write_basis_csv(std::ostream& os) const {
  os << "index,energy,parity,occupation\n";
  for (int i = 0; i < dim(); ++i) {
    os << i << "," << module_.level[i].str() << ",";
    if (module_.parity) os << (*module_.parity)[i];
    os << "," << module_.label[i] << "\n";
  }
}

QSeries fermion_character(int d, Sector sector, HalfInt order) {
  QSeries s = QSeries::constant(zero_mode_dimension(d, sector), order);
  const int first = sector == Sector::R ? 2 : 1;
  for (int t = first; t <= order.twice(); t += 2) {
    QSeries f = QSeries::constant(1, order);
    f.add(HalfInt::from_twice(t), 1);
    for (int a = 0; a < d; ++a) s = s * f;
  }
  return s;
}

QSeries fermion_graded_character(int d, Sector sector, HalfInt order) {
  if (sector == Sector::R && d % 2 == 1) fail(ErrorCode::unsupported, "R sector with odd d is ungraded");
  // tr Gamma over the zero modes vanishes for R with d even
  QSeries s = QSeries::constant(sector == Sector::R ? 0 : 1, order);
  const int first = sector == Sector::R ? 2 : 1;
  for (int t = first; t <= order.twice(); t += 2) {
    QSeries f = QSeries::constant(1, order);
    f.add(HalfInt::from_twice(t), -1);
    for (int a = 0; a < d; ++a) s = s * f;
  }
  return s;
}

}  // namespace svirlab
