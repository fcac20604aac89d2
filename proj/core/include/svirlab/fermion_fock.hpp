#pragma once

#include "svirlab/module.hpp"
#include "svirlab/qseries.hpp"
#include "svirlab/smearing.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace svirlab {

struct FermionSector {
  Sector kind = Sector::NS;
  ZeroModeVariant variant = ZeroModeVariant::unique;
};

// Truncated Fock space of d real fermions with {F^a_r, F^b_s} = delta_{r+s,0} delta_ab and
// (F^a_r)* = F^a_{-r}. States are |z, S> = F_{s1} ... F_{sk} |z> with s1 < ... < sk in the
// canonical mode order (|r| ascending, then colour) and z a basis vector of the zero-mode module.
class FockSpace {
 public:
  FockSpace(int d, FermionSector sector, HalfInt cutoff);

  int d() const { return d_; }
  FermionSector sector() const { return sector_; }
  HalfInt cutoff() const { return module_.cutoff; }
  const TruncatedModule& module() const { return module_; }
  int dim() const { return module_.dim(); }
  int zero_mode_dim() const { return zdim_; }
  bool graded() const { return module_.graded(); }

  // colour a = 0..d-1
  SpMat mode(int a, HalfInt r) const;
  ModeOperator mode_matrix(int a, HalfInt r) const;
  SpMat smeared(const TrigPoly& f) const;
  SpMat grading() const { return module_.grading(); }
  const Mat& clifford(int a) const { return gamma_[a]; }

  // Action of a non-zero mode on one basis state: (target index, sign), or nothing.
  std::optional<std::pair<int, int>> apply_nonzero(int a, HalfInt r, int state) const;

  int vacuum_index() const { return 0; }
  void write_basis_csv(std::ostream& os) const;

 private:
  struct State {
    int z;
    std::uint64_t mask;
    HalfInt energy;
  };
  int mode_index(int a, HalfInt r) const;  // creation mode (r < 0)
  int lookup(int z, std::uint64_t mask) const;

  int d_;
  FermionSector sector_;
  int zdim_ = 1;
  std::vector<Mat> gamma_;
  std::vector<std::pair<int, HalfInt>> modes_;  // creation modes in canonical order
  std::vector<State> states_;
  std::vector<std::pair<std::uint64_t, int>> key_index_;  // sorted (key, index)
  TruncatedModule module_;
};

// Character: coefficient of q^E is the number of basis states at energy E.
QSeries fermion_character(int d, Sector sector, HalfInt order);
// Graded character tr(Gamma q^E) when a grading exists.
QSeries fermion_graded_character(int d, Sector sector, HalfInt order);
int zero_mode_dimension(int d, Sector sector);

}  // namespace svirlab
