#include "svirlab/module.hpp"

#include <algorithm>
#include <numeric>

namespace svirlab {

std::vector<int> TruncatedModule::states_up_to(HalfInt bound) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (level[i] <= bound) out.push_back(i);
  return out;
}

std::vector<int> TruncatedModule::states_at(HalfInt lvl) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (level[i] == lvl) out.push_back(i);
  return out;
}

std::map<HalfInt, int> TruncatedModule::level_dims() const {
  std::map<HalfInt, int> m;
  for (auto l : level) ++m[l];
  return m;
}

SpMat TruncatedModule::grading() const {
  if (!parity) fail(ErrorCode::unsupported, "module carries no grading");
  RVec d(dim());
  for (int i = 0; i < dim(); ++i) d[i] = (*parity)[i];
  return sparse_diagonal(d);
}

RVec TruncatedModule::level_values() const {
  RVec v(dim());
  for (int i = 0; i < dim(); ++i) v[i] = level[i].value();
  return v;
}

TensorProduct::TensorProduct(const TruncatedModule& left, const TruncatedModule& right, HalfInt cutoff)
    : left_dim_(left.dim()), right_dim_(right.dim()) {
  for (int i = 0; i < left.dim(); ++i)
    for (int j = 0; j < right.dim(); ++j)
      if (left.level[i] + right.level[j] <= cutoff) pairs_.emplace_back(i, j);
  std::stable_sort(pairs_.begin(), pairs_.end(), [&](const auto& a, const auto& b) {
    return left.level[a.first] + right.level[a.second] < left.level[b.first] + right.level[b.second];
  });
  index_.assign(static_cast<std::size_t>(left_dim_) * right_dim_, -1);
  module_.cutoff = cutoff;
  module_.lowest_energy = left.lowest_energy + right.lowest_energy;
  if (right.parity) module_.parity.emplace();
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    auto [i, j] = pairs_[k];
    index_[static_cast<std::size_t>(i) * right_dim_ + j] = static_cast<int>(k);
    module_.level.push_back(left.level[i] + right.level[j]);
    if (right.parity) module_.parity->push_back((*right.parity)[j]);
    std::string li = i < static_cast<int>(left.label.size()) ? left.label[i] : std::to_string(i);
    std::string rj = j < static_cast<int>(right.label.size()) ? right.label[j] : std::to_string(j);
    module_.label.push_back(li + " x " + rj);
  }
}

int TensorProduct::index(int i, int j) const {
  return index_[static_cast<std::size_t>(i) * right_dim_ + j];
}

SpMat TensorProduct::product(const SpMat& a, const SpMat& b) const {
  const int n = static_cast<int>(pairs_.size());
  std::vector<Eigen::Triplet<cplx>> t;
  // column-wise: for each state (i,j), a(:,i) (x) b(:,j)
  for (int k = 0; k < n; ++k) {
    auto [i, j] = pairs_[k];
    for (SpMat::InnerIterator ia(a, i); ia; ++ia)
      for (SpMat::InnerIterator ib(b, j); ib; ++ib) {
        int r = index(static_cast<int>(ia.row()), static_cast<int>(ib.row()));
        if (r >= 0) t.emplace_back(r, k, ia.value() * ib.value());
      }
  }
  SpMat m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

SpMat TensorProduct::left(const SpMat& a) const { return product(a, sparse_identity(right_dim_)); }

SpMat TensorProduct::right(const SpMat& b) const { return product(sparse_identity(left_dim_), b); }

}  // namespace svirlab
