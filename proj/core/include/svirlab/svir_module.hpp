#pragma once

#include "svirlab/pbw.hpp"
#include "svirlab/sugawara.hpp"

#include <map>
#include <memory>
#include <vector>

namespace svirlab {

// Super-Virasoro modes: type 0 = L_n (even, integer), type 1 = G_r (odd, on the sector grid).
class SuperVirasoroAlgebra final : public pbw::ModeAlgebra {
 public:
  SuperVirasoroAlgebra(Rational c, Sector sector) : c_(std::move(c)), sector_(sector) {}
  int num_types() const override { return 2; }
  bool odd(int type) const override { return type == 1; }
  bool half_odd_modes(int type) const override { return type == 1 && sector_ == Sector::NS; }
  pbw::Bracket bracket(pbw::Gen x, pbw::Gen y) const override;
  pbw::Term adjoint(pbw::Gen x) const override { return {Rational(1), pbw::Gen{x.type, -x.twice_mode}}; }
  std::string type_name(int type) const override { return type == 0 ? "L" : "G"; }

 private:
  Rational c_;
  Sector sector_;
};

struct SvirModuleOptions {
  HalfInt max_cutoff = HalfInt(6);
  bool exact_rank_check = false;
};

struct AbstractSvirModule {
  Rational c, h;
  Sector sector = Sector::NS;
  HalfInt cutoff;
  std::shared_ptr<pbw::Engine> engine;
  SvirGenerators gens;

  const TruncatedModule& module() const { return engine->module(); }
  std::map<HalfInt, int> graded_dimensions() const { return module().level_dims(); }
  // per (level, parity) block: float rank vs exact rank (when requested)
  bool exact_ranks_agree() const;
};

// Highest-weight module of lowest energy h. In the Ramond sector the lowest space is spanned by v and G_0 v
// with ||G_0 v||^2 = h - c/24; v is declared even.
AbstractSvirModule build_svir_module(const Rational& c, const Rational& h, Sector sector, HalfInt cutoff,
                                     SvirModuleOptions opts = {});

struct IndexResult {
  int index = 0;
  int ker_plus = 0, ker_minus = 0;
  double gap = 0.0;  // smallest |eigenvalue| of Q above the kernel threshold
};

// dim ker Q_+ - dim ker Q_- with Q = G_0 on the truncated module.
IndexResult ramond_ground_index(const AbstractSvirModule& m, double tol = 1e-8);

}  // namespace svirlab
