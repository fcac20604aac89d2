#include "svirlab/pbw.hpp"

#include <algorithm>
#include <cmath>

namespace svirlab::pbw {

Engine::Engine(std::shared_ptr<const ModeAlgebra> alg, TopSpace top, HalfInt cutoff, Rational lowest_energy,
               EngineOptions opts)
    : alg_(std::move(alg)), top_(std::move(top)), cutoff_(cutoff), opts_(opts) {
  if (cutoff < HalfInt(0)) fail(ErrorCode::invalid_argument, "cutoff must be nonnegative");
  if (top_.dim < 1 || static_cast<int>(top_.gram.size()) != top_.dim ||
      static_cast<int>(top_.parity.size()) != top_.dim)
    fail(ErrorCode::invalid_argument, "inconsistent top space");
  module_.cutoff = cutoff;
  module_.lowest_energy = lowest_energy;
  for (int t = 0; t < alg_->num_types(); ++t) {
    const int step = 2;
    const int start = alg_->half_odd_modes(t) ? -1 : -2;
    for (int tm = start; -tm <= cutoff.twice(); tm -= step) creators_.push_back({t, tm});
  }
  std::sort(creators_.begin(), creators_.end(), [&](Gen a, Gen b) { return precedes(a, b); });
  enumerate_words();
  build_blocks();
}

bool Engine::precedes(Gen a, Gen b) const {
  if (a.twice_mode != b.twice_mode) return a.twice_mode < b.twice_mode;
  return a.type < b.type;
}

HalfInt Engine::word_level(const Word& w) const {
  HalfInt l(0);
  for (const auto& g : w) l -= g.mode();
  return l;
}

int Engine::word_parity(const Key& k) const {
  int p = top_.parity[k.top];
  for (const auto& g : k.word) p += alg_->odd(g.type) ? 1 : 0;
  return p % 2;
}

void Engine::enumerate_words() {
  std::vector<Word> words;
  Word cur;
  auto rec = [&](auto&& self, std::size_t from, HalfInt lvl) -> void {
    words.push_back(cur);
    for (std::size_t i = from; i < creators_.size(); ++i) {
      const Gen g = creators_[i];
      HalfInt l2 = lvl - g.mode();
      if (l2 > cutoff_) continue;
      cur.push_back(g);
      self(self, alg_->odd(g.type) ? i + 1 : i, l2);
      cur.pop_back();
    }
  };
  rec(rec, 0, HalfInt(0));
  for (const auto& w : words)
    for (int t = 0; t < top_.dim; ++t) {
      Key k{w, t};
      const HalfInt lvl = word_level(w);
      const int par = word_parity(k);
      auto [it, inserted] = block_of_.try_emplace({lvl, par}, static_cast<int>(blocks_.size()));
      if (inserted) {
        blocks_.emplace_back();
        blocks_.back().level = lvl;
        blocks_.back().parity = par;
      }
      Block& b = blocks_[it->second];
      b.pos[k] = static_cast<int>(b.keys.size());
      b.keys.push_back(std::move(k));
    }
  std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) {
    return a.level != b.level ? a.level < b.level : a.parity < b.parity;
  });
  block_of_.clear();
  for (std::size_t i = 0; i < blocks_.size(); ++i) block_of_[{blocks_[i].level, blocks_[i].parity}] = static_cast<int>(i);
}

void Engine::accumulate(Vector& acc, const Vector& v, const Rational& c) {
  if (c == 0) return;
  for (const auto& [k, x] : v) {
    auto [it, inserted] = acc.try_emplace(k, x * c);
    if (!inserted) {
      it->second += x * c;
      if (it->second == 0) acc.erase(it);
    }
  }
}

Engine::Vector Engine::mul_scalar(const Vector& v, const Rational& c) const {
  Vector r;
  accumulate(r, v, c);
  return r;
}

Engine::Vector Engine::apply(Gen x, const Vector& v) const {
  Vector out;
  for (const auto& [k, c] : v) accumulate(out, apply(x, k), c);
  return out;
}

Engine::Vector Engine::apply(Gen x, const Key& k) const {
  auto mk = std::make_pair(x, k);
  if (auto it = memo_.find(mk); it != memo_.end()) return it->second;

  Vector out;
  const HalfInt lvl = word_level(k.word);
  if (lvl - x.mode() > cutoff_ || lvl - x.mode() < HalfInt(0)) {
    memo_.emplace(mk, out);
    return out;
  }
  if (k.word.empty()) {
    if (x.twice_mode == 0) {
      auto it = top_.zero_modes.find(x.type);
      if (it == top_.zero_modes.end())
        fail(ErrorCode::invalid_argument, "no zero-mode action for " + alg_->type_name(x.type));
      for (int j = 0; j < top_.dim; ++j)
        if (it->second[j][k.top] != 0) out[Key{{}, j}] = it->second[j][k.top];
    } else if (x.twice_mode < 0) {
      out[Key{{x}, k.top}] = Rational(1);
    }
    memo_.emplace(mk, out);
    return out;
  }

  const Gen y = k.word.front();
  const Key rest{Word(k.word.begin() + 1, k.word.end()), k.top};
  if (x.twice_mode < 0 && precedes(x, y)) {
    Key nk{k.word, k.top};
    nk.word.insert(nk.word.begin(), x);
    out[nk] = Rational(1);
  } else if (x.twice_mode < 0 && x == y) {
    if (!alg_->odd(x.type)) {
      Key nk{k.word, k.top};
      nk.word.insert(nk.word.begin(), x);
      out[nk] = Rational(1);
    } else {
      // x x = (1/2) [x, x}
      Bracket b = alg_->bracket(x, x);
      for (const auto& t : b.terms) accumulate(out, apply(t.gen, rest), t.coef / 2);
      if (b.central != 0) accumulate(out, Vector{{rest, Rational(1)}}, b.central / 2);
    }
  } else {
    const Rational s = (alg_->odd(x.type) && alg_->odd(y.type)) ? Rational(-1) : Rational(1);
    accumulate(out, apply(y, apply(x, rest)), s);
    Bracket b = alg_->bracket(x, y);
    for (const auto& t : b.terms) accumulate(out, apply(t.gen, rest), t.coef);
    if (b.central != 0) accumulate(out, Vector{{rest, Rational(1)}}, b.central);
  }
  memo_.emplace(mk, out);
  return out;
}

Rational Engine::inner(const Key& a, const Key& b) const {
  Vector v{{b, Rational(1)}};
  for (const auto& y : a.word) {
    Term adj = alg_->adjoint(y);
    v = mul_scalar(apply(adj.gen, v), adj.coef);
    if (v.empty()) return Rational(0);
  }
  Rational s = 0;
  for (const auto& [k, c] : v) {
    if (!k.word.empty()) fail(ErrorCode::numerical, "Shapovalov reduction left a non-top word");
    s += c * top_.gram[a.top][k.top];
  }
  return s;
}

void Engine::build_blocks() {
  int offset = 0;
  for (auto& b : blocks_) {
    const int n = static_cast<int>(b.keys.size());
    RatMatrix exact(n, std::vector<Rational>(n));
    b.gram.resize(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Rational g = inner(b.keys[i], b.keys[j]);
        exact[i][j] = exact[j][i] = g;
        b.gram(i, j) = b.gram(j, i) = to_double(g);
      }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b.gram);
    const auto& ev = es.eigenvalues();
    const double scale = std::max(1.0, b.gram.cwiseAbs().maxCoeff());
    LevelSpectrum spec{b.level, b.parity, n, 0, {}};
    std::vector<int> keep;
    for (int i = 0; i < n; ++i) {
      spec.eigenvalues.push_back(ev[i]);
      if (ev[i] < -opts_.negative_threshold * scale)
        fail(ErrorCode::numerical, "indefinite Shapovalov form at level " + b.level.str() + " (eigenvalue " +
                                       std::to_string(ev[i]) + ")");
      if (ev[i] > opts_.null_threshold * scale) keep.push_back(i);
    }
    spec.rank = static_cast<int>(keep.size());
    b.basis.resize(n, spec.rank);
    for (int c = 0; c < spec.rank; ++c) b.basis.col(c) = es.eigenvectors().col(keep[c]) / std::sqrt(ev[keep[c]]);
    b.gram_basis = b.gram * b.basis;
    b.offset = offset;
    offset += spec.rank;
    if (opts_.exact_rank_check) exact_ranks_.push_back(exact_rank(exact));
    for (int c = 0; c < spec.rank; ++c) {
      module_.level.push_back(b.level);
      if (!module_.parity) module_.parity.emplace();
      module_.parity->push_back(b.parity ? -1 : 1);
      module_.label.push_back("L" + b.level.str() + (b.parity ? "odd" : "even") + "#" + std::to_string(c));
    }
    spectra_.push_back(std::move(spec));
  }
}

int Engine::words_at(HalfInt level) const {
  int n = 0;
  for (const auto& b : blocks_)
    if (b.level == level) n += static_cast<int>(b.keys.size());
  return n;
}

SpMat Engine::generator(Gen x) const {
  const int n = module_.dim();
  std::vector<Eigen::Triplet<cplx>> trip;
  const int flip = alg_->odd(x.type) ? 1 : 0;
  for (const auto& src : blocks_) {
    if (src.basis.cols() == 0) continue;
    const HalfInt tl = src.level - x.mode();
    if (tl < HalfInt(0) || tl > cutoff_) continue;
    auto bt = block_of_.find({tl, src.parity ^ flip});
    if (bt == block_of_.end()) continue;
    const Block& dst = blocks_[bt->second];
    if (dst.basis.cols() == 0) continue;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<int>(dst.keys.size()), static_cast<int>(src.keys.size()));
    for (std::size_t w = 0; w < src.keys.size(); ++w) {
      for (const auto& [key, c] : apply(x, src.keys[w])) {
        auto p = dst.pos.find(key);
        if (p == dst.pos.end()) fail(ErrorCode::numerical, "generator image outside the PBW block");
        a(p->second, static_cast<int>(w)) = to_double(c);
      }
    }
    Eigen::MatrixXd m = dst.gram_basis.transpose() * a * src.basis;
    for (int j = 0; j < m.cols(); ++j)
      for (int i = 0; i < m.rows(); ++i)
        if (std::abs(m(i, j)) > 1e-15) trip.emplace_back(dst.offset + i, src.offset + j, m(i, j));
  }
  SpMat out(n, n);
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

int exact_rank(RatMatrix m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace svirlab::pbw
