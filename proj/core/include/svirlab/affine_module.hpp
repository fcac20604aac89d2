#pragma once

#include "svirlab/fermion_fock.hpp"
#include "svirlab/lie_core.hpp"
#include "svirlab/module.hpp"
#include "svirlab/pbw.hpp"
#include "svirlab/smearing.hpp"

#include <iosfwd>
#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace svirlab {

// Current modes J^a_n (colour a = 0..d-1) on a host module, in an orthonormal basis of g.
struct CurrentSet {
  int d = 0;
  int cutoff = 0;
  int host_dim = 0;
  Rational level;           // nominal level
  double measured_level = 0.0;
  Rational lowest_energy;
  std::map<std::pair<int, int>, SpMat> J;

  const SpMat& at(int a, int n) const;
  bool has(int a, int n) const { return J.count({a, n}) > 0; }
};

// Affine su(2) in Cartan-Weyl modes T3, T+, T-, rational brackets:
// [T3_m,T3_n] = (l/2) m delta, [T3_m,T+-_n] = +-T+-_{m+n}, [T+_m,T-_n] = 2 T3_{m+n} + l m delta.
class AffineSu2Algebra final : public pbw::ModeAlgebra {
 public:
  explicit AffineSu2Algebra(int level) : level_(level) {}
  int num_types() const override { return 3; }
  bool odd(int) const override { return false; }
  bool half_odd_modes(int) const override { return false; }
  pbw::Bracket bracket(pbw::Gen x, pbw::Gen y) const override;
  pbw::Term adjoint(pbw::Gen x) const override;
  std::string type_name(int type) const override;

 private:
  int level_;
};

// u(1)^d Heisenberg modes: [J^a_m, J^b_n] = l m delta_ab delta_{m+n,0}.
class HeisenbergAlgebra final : public pbw::ModeAlgebra {
 public:
  HeisenbergAlgebra(int d, Rational level) : d_(d), level_(std::move(level)) {}
  int num_types() const override { return d_; }
  bool odd(int) const override { return false; }
  bool half_odd_modes(int) const override { return false; }
  pbw::Bracket bracket(pbw::Gen x, pbw::Gen y) const override;
  pbw::Term adjoint(pbw::Gen x) const override;
  std::string type_name(int type) const override;

 private:
  int d_;
  Rational level_;
};

struct AffineModule {
  SimpleLieAlgebra algebra;
  int level = 0;
  WeightLabel weight;
  std::vector<Rational> charge;  // abelian case: J^a_0 eigenvalues
  int cutoff = 0;
  std::shared_ptr<pbw::Engine> engine;
  CurrentSet currents;

  const TruncatedModule& module() const { return engine->module(); }
  std::map<HalfInt, int> graded_dimensions() const { return module().level_dims(); }
  void write_dimensions_csv(std::ostream& os) const;
};

struct AffineOptions {
  int max_cutoff = 4;
  bool exact_rank_check = false;
};

AffineModule build_pbw_module(const SimpleLieAlgebra& g, int level, WeightLabel weight, int cutoff,
                              AffineOptions opts = {});
// Heisenberg module of u(1)^d at level l with charge mu (J^a_0 = mu_a); lowest energy mu^2 / (2l).
AffineModule build_heisenberg_module(int d, Rational level, std::vector<Rational> charge, int cutoff,
                                     AffineOptions opts = {});

// J^a_n = -(i/2) sum_{b,c} f_abc sum_r F^b_{n-r} F^c_r (annihilating factor to the right).
CurrentSet fermionic_currents(const FockSpace& space, const SimpleLieAlgebra& g);

// Chooses the order of a product of two fermion modes of different colour so that the
// annihilating (larger) mode acts first; returns the sign relative to F^b_x F^c_y.
int ordered_pair_sign(HalfInt x, HalfInt y);

// J (x) 1 + 1 (x) J on a tensor product.
CurrentSet diagonal_currents(const CurrentSet& left, const CurrentSet& right, const TensorProduct& tp);
double measure_level(const CurrentSet& cs, const std::vector<int>& vacuum_states);

// J(f) = sum f_{a,n} J^a_n
SpMat smear_current(const CurrentSet& cs, const TrigPoly& f);

// Frobenius residual of [J^a_m,J^b_n] - i f_abc J^c_{m+n} - delta m level on states below cutoff-|m|-|n|.
double affine_relation_residual(const CurrentSet& cs, const SimpleLieAlgebra& g, const TruncatedModule& host, int a,
                                int m, int b, int n);

}  // namespace svirlab
