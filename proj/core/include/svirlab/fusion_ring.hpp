#pragma once

#include "svirlab/linalg.hpp"

#include <string>
#include <vector>

namespace svirlab {

struct ModularData {
  std::vector<std::string> labels;
  Mat S;
  int vacuum_index = 0;

  int size() const { return static_cast<int>(labels.size()); }
};

struct ModularChecks {
  double unitarity = 0.0;  // ||S S^dagger - 1||_max
  double symmetry = 0.0;
  bool first_row_positive = true;
};

// S_ab = sqrt(2/(k+2)) sin(pi (a+1)(b+1)/(k+2)), labels a = 2j in 0..k
ModularData su2_s_matrix(int k);
ModularChecks check_modular(const ModularData& md);
double quantum_dimension(const ModularData& md, int a);

struct FusionTensor {
  int n = 0;
  std::vector<int> N;  // N[(a*n + b)*n + c] = N_{ab}^c
  double max_deviation = 0.0;  // distance of the Verlinde sums from the integers

  int at(int a, int b, int c) const { return N[(static_cast<std::size_t>(a) * n + b) * n + c]; }
  int conjugate(int a) const;  // the b with N_{ab}^0 = 1
};

struct FusionChecks {
  bool unit = true;
  bool commutative = true;
  bool associative = true;
  bool nonnegative = true;
};

// N_ab^c = sum_x S_ax S_bx conj(S_cx) / S_0x; entries farther than tol from an integer are an error.
FusionTensor verlinde_fusion(const ModularData& md, double tol = 1e-6);
FusionChecks check_fusion(const FusionTensor& f);
// labels of quantum dimension 1 and whether they are closed under fusion
std::vector<int> automorphism_sectors(const ModularData& md, const FusionTensor& f, bool* closed = nullptr);

// Coset SU(2)_4 in SU(2)_2 x SU(2)_2: (j, k, l) with j, l the SU(2)_2 labels (twice spin) and k the SU(2)_4
// label, j + k + l even, (j,k,l) ~ (2-j, 4-k, 2-l), fixed point (1,2,1) split into two branches.
// Orbits are named by the member with the smallest l, then the largest k.
struct CosetSector {
  int j = 0, k = 0, l = 0;
  int branch = 0;  // 0, +1, -1

  std::string str() const;
  bool same_orbit(const CosetSector& o) const;
  bool operator==(const CosetSector& o) const = default;
};

struct CosetData {
  std::vector<CosetSector> sectors;
  ModularData md;
  FusionTensor fusion;
  double resolution = 1.0;  // fixed-point correction X in the resolved S-matrix

  int index_of(const CosetSector& s) const;  // by orbit and branch, -1 if absent
};

CosetData coset_sectors();

// rho with N_{a rho}^{b} = 0 for all a, b in the Ramond labels, plus the vacuum
std::vector<CosetSector> disjointness_filter(const CosetData& cd, const std::vector<CosetSector>& ramond);
std::vector<CosetSector> ramond_labels();
std::vector<CosetSector> expected_delta();

struct PairingTable {
  std::vector<std::string> rows, cols;
  std::vector<std::vector<int>> value;
  std::string note;
};

// tau_rho(s(pi_R)) predicted from containment: index_value when some N_{pi rho}^{pi'} != 0 (the vacuum), else 0.
PairingTable pairing_table(const CosetData& cd, const std::vector<CosetSector>& delta,
                           const std::vector<CosetSector>& ramond, int index_value);
// tau_{rho_lambda}(rho_mu^{-1}(p)) = value N_{bar lambda mu}^0 on the sectors of a fusion ring
PairingTable pairing_table(const FusionTensor& f, const std::vector<std::string>& labels, int value);

// Level-1 Spin(d) sectors {0, v, s, c} for even d: group Z4 (d = 2 mod 4) or Z2 x Z2 (d = 0 mod 4).
FusionTensor spin_level1_fusion(int d, std::vector<std::string>* labels = nullptr);

}  // namespace svirlab
