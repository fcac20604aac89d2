#pragma once

#include "svirlab/affine_module.hpp"
#include "svirlab/fermion_fock.hpp"
#include "svirlab/sugawara.hpp"

#include <memory>
#include <string>

namespace svirlab {

// A bosonic current module tensored with d fermions; the super-Sugawara generators act on the product.
struct LoopModel {
  std::string name;
  int d = 0;
  SimpleLieAlgebra algebra;
  Rational level;
  std::shared_ptr<AffineModule> bosonic;          // PBW or Heisenberg realization
  std::shared_ptr<FockSpace> bosonic_fermions;    // fermion-bilinear realization, if used
  std::shared_ptr<FockSpace> fermions;
  SugawaraModel sugawara;

  const SvirGenerators& gens() const { return sugawara.gens; }
  const FieldContent& fields() const { return sugawara.fields; }
};

// d = 2, 4: u(1)^d at level 1 with charge (1, 0, ...), Ramond fermions (graded).
// d = 3: su(2) at level 2, vacuum weight, Ramond fermions with the given zero-mode variant (ungraded).
LoopModel loop_model(int d, int cutoff, ZeroModeVariant variant = ZeroModeVariant::plus);

// u(1)^d at level 1 with charge (1, 0, ...) tensored with d fermions in the given sector.
LoopModel heisenberg_model(int d, FermionSector sector, HalfInt cutoff);

// su(2) level 2 realized by d = 3 NS fermions, tensored with d = 3 fermions in the given sector.
LoopModel fermionic_pair_model(FermionSector sector, HalfInt cutoff);

// su(2) PBW module of level l and weight 2j, tensored with d = 3 fermions.
LoopModel pbw_model(int level, int twice_spin, FermionSector sector, HalfInt cutoff);

}  // namespace svirlab
