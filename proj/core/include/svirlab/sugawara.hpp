#pragma once

#include "svirlab/affine_module.hpp"
#include "svirlab/fermion_fock.hpp"
#include "svirlab/module.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace svirlab {

// L_n (integer n) and G_r (r on the sector grid) on a truncated host, |n|, |r| <= mode cutoff.
struct SvirGenerators {
  TruncatedModule host;
  Sector sector = Sector::NS;
  Rational c;
  double measured_c = 0.0;
  Rational h;
  std::map<int, SpMat> L;
  std::map<int, SpMat> G;  // keyed by twice r
  std::optional<SpMat> grading;

  int dim() const { return host.dim(); }
  HalfInt cutoff() const { return host.cutoff; }
  const SpMat& l(int n) const;
  const SpMat& g(HalfInt r) const;
  bool has_l(int n) const { return L.count(n) > 0; }
  bool has_g(HalfInt r) const { return G.count(r.twice()) > 0; }
};

// Fields living on the same host: diagonal currents J = J^bos + J^f and fermions F^a_r.
struct FieldContent {
  int d = 0;
  Rational khat;  // l + h_vee
  Sector sector = Sector::NS;
  CurrentSet bosonic;   // J^bos on the host
  CurrentSet diagonal;  // J^bos + J^f on the host
  std::map<std::pair<int, int>, SpMat> F;  // (colour, twice r)

  const SpMat& fermion(int a, HalfInt r) const;
  SpMat smeared_fermion(const TrigPoly& f) const;
  SpMat smeared_current(const TrigPoly& f) const { return smear_current(diagonal, f); }
};

struct SugawaraModel {
  std::shared_ptr<TensorProduct> tp;
  FieldContent fields;
  SvirGenerators gens;
};

Rational central_charge(int d, int l, int h_vee);

// Super-Sugawara construction on bosonic (x) fermionic:
//   G_r = khat^{-1/2} [ sum_m J^a_m F^a_{r-m} - (i/6) sum f_abc F^a F^b F^c ]
//   L_n = (2 khat)^{-1} sum_m :J^a_m J^a_{n-m}: + 1/2 sum_r (r - n/2) :F^a_{n-r} F^a_r: (+ d/16 for R, n = 0)
// with khat = l + h_vee and every product ordered so that the largest mode acts first.
SugawaraModel build_svir_generators(const TruncatedModule& bosonic_host, const CurrentSet& bosonic,
                                    const FockSpace& fermions, const SimpleLieAlgebra& g, HalfInt cutoff);

// Measured central charge from the [G_r, G_-r]_+ central term on the lowest states.
double measure_central_charge(const SvirGenerators& gens);

// Q = G_0
SpMat supercharge(const SvirGenerators& gens);

struct RelationResidual {
  std::string id;
  double residual = 0.0;
  HalfInt safe_bound;
};

struct SvirSample {
  enum Kind { LL, LG, GG } kind = LL;
  HalfInt a, b;
};

// Residuals of the super-Virasoro relations on states of level <= cutoff - |a| - |b|.
std::vector<RelationResidual> verify_svir_relations(const SvirGenerators& gens, const std::vector<SvirSample>& samples);
// All samples with |a|, |b| <= max_mode and |a| + |b| <= cutoff.
std::vector<SvirSample> default_svir_samples(const SvirGenerators& gens, HalfInt max_mode);
double max_residual(const std::vector<RelationResidual>& r);

// Q^2 - L_0 + c/24 on states below cutoff
RelationResidual supercharge_identity(const SvirGenerators& gens);

// e^{iX} for Hermitian X
Mat weyl_exponential(const Mat& x, double herm_tol = 1e-10);

// Derivation identities for real g-valued f with integer modes (for the exponential, f = phi X with X fixed):
//   [Q, F(f)]_+ = khat^{-1/2} J(f),  [Q, J(f)] = i khat^{1/2} F(f'),
//   [Q, e^{iJ(f)}] = s khat^{1/2} F(f') e^{iJ(f)}
// with s = +1 (literal) and s = -1 (the sign implied by the second identity).
// The exponential identity is checked on the lowest level only, where the truncation tail is smallest.
std::vector<RelationResidual> susy_relation_report(const SugawaraModel& model, const TrigPoly& f);
// Truncation tail of e^{iJ(f)} on the lowest level: weight of the image above cutoff - 1.
double weyl_tail(const SugawaraModel& model, const TrigPoly& f);

// f: scalar modes on colour 0; sup ||G(f) psi|| / ||(1 + L_0)^{1/2} psi|| over states whose image is untruncated.
double leb_ratio(const SugawaraModel& model, const TrigPoly& f);

}  // namespace svirlab
