#include "svirlab/exact_charge.hpp"

#include "svirlab/fermion_fock.hpp"

#include <algorithm>
#include <vector>

namespace svirlab {

namespace {

struct Letter {
  int leg;  // 0 left, 1 right
  int colour;
  HalfInt mode;
};

struct Word {
  QI2 coef;
  std::vector<Letter> letters;  // rightmost acts first
};

using State = std::map<std::pair<int, int>, QI2>;

class Evaluator {
 public:
  Evaluator(const FockSpace& l, const FockSpace& r) : left_(l), right_(r) {}

  State apply(const std::vector<Word>& op, const State& v) const {
    State out;
    for (const auto& w : op)
      for (const auto& [k, c] : v) {
        std::pair<int, int> s = k;
        int sign = 1;
        bool alive = true;
        for (auto it = w.letters.rbegin(); it != w.letters.rend() && alive; ++it) {
          const FockSpace& sp = it->leg == 0 ? left_ : right_;
          int& idx = it->leg == 0 ? s.first : s.second;
          auto res = sp.apply_nonzero(it->colour, it->mode, idx);
          if (!res) alive = false;
          else {
            idx = res->first;
            sign *= res->second;
          }
        }
        if (!alive) continue;
        out[s] += w.coef * c * QI2{Rational(sign), 0};
      }
    for (auto it = out.begin(); it != out.end();) it = it->second.zero() ? out.erase(it) : std::next(it);
    return out;
  }

 private:
  const FockSpace& left_;
  const FockSpace& right_;
};

// ordered product of fermion letters on one leg, largest mode acting first
Word ordered(QI2 coef, std::vector<Letter> ls) {
  int sign = 1;
  for (std::size_t i = 1; i < ls.size(); ++i)
    for (std::size_t j = i; j > 0 && ls[j - 1].mode > ls[j].mode; --j) {
      // letters on different legs commute; same leg anticommute (distinct colours or non-conjugate modes)
      if (ls[j - 1].leg == ls[j].leg) sign = -sign;
      std::swap(ls[j - 1], ls[j]);
    }
  return {coef * QI2{Rational(sign), 0}, std::move(ls)};
}

std::vector<HalfInt> ns_modes(HalfInt N) {
  std::vector<HalfInt> m;
  for (int t = -N.twice(); t <= N.twice(); ++t)
    if (t % 2 != 0) m.push_back(HalfInt::from_twice(t));
  return m;
}

// J^a_m = -(i/2) sum_{bc} f_abc sum_r F^b_{m-r} F^c_r on the left leg
std::vector<Word> current(const SimpleLieAlgebra& g, int a, int m, HalfInt N) {
  std::vector<Word> out;
  for (int b = 0; b < g.d; ++b)
    for (int c = 0; c < g.d; ++c) {
      const Rational q = g.f_coeff(a, b, c);
      if (q == 0) continue;
      for (HalfInt r : ns_modes(N)) {
        const HalfInt x = HalfInt(m) - r;
        if (abs(x) > N) continue;
        out.push_back(ordered(QI2{0, -q / 2}, {{0, b, x}, {0, c, r}}));
      }
    }
  return out;
}

std::vector<Word> product(const std::vector<Word>& x, const std::vector<Word>& y) {
  std::vector<Word> out;
  for (const auto& a : x)
    for (const auto& b : y) {
      Word w{a.coef * b.coef, a.letters};
      w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
      out.push_back(std::move(w));
    }
  return out;
}

Rational norm2(const State& v) {
  Rational s = 0;
  for (const auto& [k, c] : v) s += c.norm2();
  return s;
}

}  // namespace

ExactCentralCharge exact_central_charge_fermionic(const SimpleLieAlgebra& g) {
  const HalfInt N(2);
  FockSpace left(g.d, {Sector::NS, ZeroModeVariant::unique}, N);
  FockSpace right(g.d, {Sector::NS, ZeroModeVariant::unique}, N);
  Evaluator ev(left, right);
  const Rational l = g.h_vee;
  const Rational khat = l + g.h_vee;
  if (khat == 0) fail(ErrorCode::invalid_argument, "fermionic currents need h_vee > 0");
  State vac{{{0, 0}, QI2{1, 0}}};

  // sqrt(khat) G_{-3/2} = sum_m J^a_m F^a_{-3/2-m} - i sum_{a<b<c} f_abc F F F
  std::vector<Word> g32;
  const HalfInt r = HalfInt::from_twice(-3);
  for (int a = 0; a < g.d; ++a)
    for (int m = -2; m <= 2; ++m) {
      const HalfInt x = r - HalfInt(m);
      if (abs(x) > N) continue;
      for (auto w : current(g, a, m, N)) {
        w.letters.insert(w.letters.begin(), Letter{1, a, x});
        g32.push_back(std::move(w));
      }
    }
  for (int a = 0; a < g.d; ++a)
    for (int b = a + 1; b < g.d; ++b)
      for (int c = b + 1; c < g.d; ++c) {
        const Rational q = g.f_coeff(a, b, c);
        if (q == 0) continue;
        for (HalfInt x : ns_modes(N))
          for (HalfInt y : ns_modes(N)) {
            const HalfInt z = r - x - y;
            if (abs(z) > N) continue;
            g32.push_back(ordered(QI2{0, -q}, {{1, a, x}, {1, b, y}, {1, c, z}}));
          }
      }

  // L_{-2} = (2 khat)^{-1} sum :J J: + 1/2 sum_r (r + 1) :F_{-2-r} F_r:
  std::vector<Word> l2;
  for (int a = 0; a < g.d; ++a)
    for (int m = -2; m <= 2; ++m) {
      const int p = -2 - m;
      if (std::abs(p) > 2) continue;
      auto jj = product(current(g, a, std::min(m, p), N), current(g, a, std::max(m, p), N));
      for (auto& w : jj) w.coef = w.coef * QI2{1 / (2 * khat), 0};
      l2.insert(l2.end(), jj.begin(), jj.end());
    }
  for (int a = 0; a < g.d; ++a)
    for (HalfInt y : ns_modes(N)) {
      const HalfInt x = HalfInt(-2) - y;
      if (abs(x) > N || x == y) continue;
      const Rational coef = (y.rational() + 1) / 2;
      l2.push_back(ordered(QI2{coef, 0}, {{1, a, x}, {1, a, y}}));
    }

  ExactCentralCharge out;
  out.formula = Rational(g.d, 2) + Rational(g.d) * l / khat;
  out.from_g = Rational(3, 2) * norm2(ev.apply(g32, vac)) / khat;
  out.from_l = 2 * norm2(ev.apply(l2, vac));
  return out;
}

}  // namespace svirlab
