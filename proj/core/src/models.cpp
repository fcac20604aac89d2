#include "svirlab/models.hpp"

namespace svirlab {

namespace {

int int_cutoff(HalfInt c) { return c.twice() / 2; }

}  // namespace

LoopModel loop_model(int d, int cutoff, ZeroModeVariant variant) {
  LoopModel m;
  m.d = d;
  if (d == 2 || d == 4) {
    return heisenberg_model(d, FermionSector{Sector::R, ZeroModeVariant::unique}, HalfInt(cutoff));
  } else if (d == 3) {
    m.name = "loop-su2_2";
    m.algebra = build_su2();
    m.level = 2;
    m.bosonic = std::make_shared<AffineModule>(build_pbw_module(m.algebra, 2, {0, 2}, cutoff));
    m.fermions = std::make_shared<FockSpace>(3, FermionSector{Sector::R, variant}, HalfInt(cutoff));
  } else {
    fail(ErrorCode::unsupported, "loop models exist for d in {2, 3, 4}");
  }
  m.sugawara = build_svir_generators(m.bosonic->module(), m.bosonic->currents, *m.fermions, m.algebra, HalfInt(cutoff));
  return m;
}

LoopModel heisenberg_model(int d, FermionSector sector, HalfInt cutoff) {
  if (d < 1) fail(ErrorCode::invalid_argument, "d must be positive");
  LoopModel m;
  m.name = "loop-u1^" + std::to_string(d) + "-" + to_string(sector.kind);
  m.d = d;
  m.algebra = build_abelian(d);
  m.level = 1;
  cutoff = floor_cutoff(sector.kind, cutoff);
  std::vector<Rational> charge(d, Rational(0));
  charge[0] = 1;
  const int ci = int_cutoff(cutoff) + (cutoff.is_integer() ? 0 : 1);
  m.bosonic = std::make_shared<AffineModule>(build_heisenberg_module(d, m.level, charge, ci));
  m.fermions = std::make_shared<FockSpace>(d, sector, cutoff);
  m.sugawara = build_svir_generators(m.bosonic->module(), m.bosonic->currents, *m.fermions, m.algebra, cutoff);
  return m;
}

LoopModel fermionic_pair_model(FermionSector sector, HalfInt cutoff) {
  LoopModel m;
  m.name = "fermionic-su2_2-" + to_string(sector.kind);
  m.d = 3;
  m.algebra = build_su2();
  m.level = 2;
  cutoff = floor_cutoff(sector.kind, cutoff);
  m.bosonic_fermions = std::make_shared<FockSpace>(3, FermionSector{Sector::NS, ZeroModeVariant::unique}, cutoff);
  m.fermions = std::make_shared<FockSpace>(3, sector, cutoff);
  CurrentSet cs = fermionic_currents(*m.bosonic_fermions, m.algebra);
  m.sugawara = build_svir_generators(m.bosonic_fermions->module(), cs, *m.fermions, m.algebra, cutoff);
  return m;
}

LoopModel pbw_model(int level, int twice_spin, FermionSector sector, HalfInt cutoff) {
  LoopModel m;
  m.name = "pbw-su2_" + std::to_string(level) + "-2j" + std::to_string(twice_spin);
  m.d = 3;
  m.algebra = build_su2();
  m.level = level;
  cutoff = floor_cutoff(sector.kind, cutoff);
  const int ci = int_cutoff(cutoff) + (cutoff.is_integer() ? 0 : 1);
  m.bosonic = std::make_shared<AffineModule>(build_pbw_module(m.algebra, level, {twice_spin, level}, ci));
  m.fermions = std::make_shared<FockSpace>(3, sector, cutoff);
  m.sugawara = build_svir_generators(m.bosonic->module(), m.bosonic->currents, *m.fermions, m.algebra, cutoff);
  return m;
}

}  // namespace svirlab
