#pragma once

#include "svirlab/module.hpp"
#include "svirlab/types.hpp"

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace svirlab::pbw {

// Mode generator X^type_m, mode stored as twice its value.
struct Gen {
  int type = 0;
  int twice_mode = 0;
  auto operator<=>(const Gen&) const = default;
  HalfInt mode() const { return HalfInt::from_twice(twice_mode); }
};

struct Term {
  Rational coef;
  Gen gen;
};

// Super-bracket [x,y} = xy - (-1)^{|x||y|} yx as a combination of generators plus a central scalar.
struct Bracket {
  std::vector<Term> terms;
  Rational central;
};

// A mode Lie superalgebra with a star operation X^* = coef * gen.
class ModeAlgebra {
 public:
  virtual ~ModeAlgebra() = default;
  virtual int num_types() const = 0;
  virtual bool odd(int type) const = 0;
  virtual bool half_odd_modes(int type) const = 0;  // type lives on 1/2 + Z
  virtual Bracket bracket(Gen x, Gen y) const = 0;
  virtual Term adjoint(Gen x) const = 0;
  virtual std::string type_name(int type) const = 0;
};

using RatMatrix = std::vector<std::vector<Rational>>;

// Lowest-energy space: basis v_0..v_{n-1} with its Gram matrix, the action of zero modes and
// parities (0 even, 1 odd).
struct TopSpace {
  int dim = 1;
  RatMatrix gram{{Rational(1)}};
  std::map<int, RatMatrix> zero_modes;  // type -> matrix, column j = action on v_j
  std::vector<int> parity{0};
};

struct LevelSpectrum {
  HalfInt level;
  int parity = 0;
  int words = 0;
  int rank = 0;
  std::vector<double> eigenvalues;
};

struct EngineOptions {
  double null_threshold = 1e-9;     // relative to max(1, |gram|)
  double negative_threshold = 1e-9;
  bool exact_rank_check = false;
};

// PBW basis, Shapovalov form, null quotient, and generator matrices in the orthonormal basis.
class Engine {
 public:
  Engine(std::shared_ptr<const ModeAlgebra> alg, TopSpace top, HalfInt cutoff, Rational lowest_energy,
         EngineOptions opts = {});

  const TruncatedModule& module() const { return module_; }
  // Matrix of a single generator; modes beyond the cutoff give zero.
  SpMat generator(Gen x) const;
  const std::vector<LevelSpectrum>& spectra() const { return spectra_; }
  // Exact ranks per (level, parity) block, filled when exact_rank_check was requested.
  const std::vector<int>& exact_ranks() const { return exact_ranks_; }
  int words_at(HalfInt level) const;

  using Word = std::vector<Gen>;
  struct Key {
    Word word;
    int top = 0;
    auto operator<=>(const Key&) const = default;
  };
  using Vector = std::map<Key, Rational>;

  // Exact PBW straightening: x . (word v_top).
  Vector apply(Gen x, const Key& k) const;
  Vector apply(Gen x, const Vector& v) const;
  Rational inner(const Key& a, const Key& b) const;

 private:
  struct Block {
    HalfInt level;
    int parity = 0;
    std::vector<Key> keys;
    std::map<Key, int> pos;
    Eigen::MatrixXd gram;
    Eigen::MatrixXd basis;  // columns: orthonormal vectors in PBW coordinates (B = U / sqrt(sigma))
    Eigen::MatrixXd gram_basis;  // gram * basis
    int offset = 0;  // first index in the orthonormal module basis
  };

  bool precedes(Gen a, Gen b) const;
  int word_parity(const Key& k) const;
  HalfInt word_level(const Word& w) const;
  void enumerate_words();
  void build_blocks();
  Vector mul_scalar(const Vector& v, const Rational& c) const;
  static void accumulate(Vector& acc, const Vector& v, const Rational& c);

  std::shared_ptr<const ModeAlgebra> alg_;
  TopSpace top_;
  HalfInt cutoff_;
  EngineOptions opts_;
  std::vector<Gen> creators_;
  std::vector<Block> blocks_;
  std::map<std::pair<HalfInt, int>, int> block_of_;
  std::vector<LevelSpectrum> spectra_;
  std::vector<int> exact_ranks_;
  TruncatedModule module_;
  mutable std::map<std::pair<Gen, Key>, Vector> memo_;
};

// Rank of a rational matrix by exact Gaussian elimination.
int exact_rank(RatMatrix m);

}  // namespace svirlab::pbw
