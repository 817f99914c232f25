#include "tcode/subspace.hpp"

#include <stdexcept>

namespace tcode {

namespace {

// Reduced row echelon form over F_3. Returns the nonzero rows and their pivot columns.
void rref(std::vector<TernaryVector> rows, int n, std::vector<TernaryVector>& out, std::vector<int>& pivots) {
  out.clear();
  pivots.clear();
  std::size_t top = 0;
  for (int col = 0; col < n && top < rows.size(); ++col) {
    std::size_t piv = top;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[top], rows[piv]);
    // 1 and 2 are self-inverse in F_3.
    rows[top] = rows[top][col] * rows[top];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || rows[r][col].is_zero()) continue;
      rows[r] = rows[r] - rows[r][col] * rows[top];
    }
    pivots.push_back(col);
    ++top;
  }
  rows.resize(top);
  out = std::move(rows);
}

}  // namespace

SubspaceSpec::SubspaceSpec(int ambient_n) : n_(ambient_n) {
  if (ambient_n < 0 || ambient_n > kMaxDim) throw std::invalid_argument("subspace: ambient dimension out of range");
}

SubspaceSpec::SubspaceSpec(int ambient_n, std::vector<TernaryVector> basis) : SubspaceSpec(ambient_n) {
  for (const auto& v : basis)
    if (v.size() != n_) throw std::invalid_argument("subspace: basis vector has wrong dimension");
  rref(basis, n_, echelon_, pivots_);
  if (echelon_.size() != basis.size()) throw std::invalid_argument("subspace: basis vectors are linearly dependent");
  basis_ = std::move(basis);
}

SubspaceSpec SubspaceSpec::coordinate(int ambient_n, int first, int count) {
  if (first < 0 || count < 0 || first + count > ambient_n) throw std::invalid_argument("coordinate subspace out of range");
  std::vector<TernaryVector> b;
  for (int i = 0; i < count; ++i) b.push_back(TernaryVector::unit(ambient_n, first + i));
  return SubspaceSpec(ambient_n, std::move(b));
}

bool SubspaceSpec::contains(const TernaryVector& v) const {
  if (v.size() != n_) throw std::invalid_argument("subspace: membership test dimension mismatch");
  TernaryVector r = v;
  for (std::size_t i = 0; i < echelon_.size(); ++i) {
    const Trit c = r[pivots_[i]];
    if (!c.is_zero()) r = r - c * echelon_[i];
  }
  return r.is_zero();
}

std::vector<Rank> SubspaceSpec::elements() const {
  std::vector<Rank> out{0};
  for (const auto& b : basis_) {
    const Rank br = b.rank();
    const Rank b2 = rank_scale(br, 2, n_);
    const std::size_t cur = out.size();
    for (std::size_t i = 0; i < cur; ++i) {
      out.push_back(rank_add(out[i], br, n_));
      out.push_back(rank_add(out[i], b2, n_));
    }
  }
  return out;
}

std::vector<std::uint8_t> SubspaceSpec::indicator() const {
  std::vector<std::uint8_t> ind(pow3(n_), 0);
  for (Rank r : elements()) ind[r] = 1;
  return ind;
}

SubspaceSpec dual_subspace(const SubspaceSpec& E) {
  const int n = E.ambient_n();
  std::vector<TernaryVector> red;
  std::vector<int> piv;
  rref(E.basis(), n, red, piv);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<TernaryVector> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    TernaryVector v = TernaryVector::unit(n, free);
    for (std::size_t i = 0; i < red.size(); ++i) v.set(piv[i], -red[i][free]);
    basis.push_back(v);
  }
  return SubspaceSpec(n, std::move(basis));
}

bool linearly_independent(const std::vector<TernaryVector>& vs) {
  if (vs.empty()) return true;
  std::vector<TernaryVector> red;
  std::vector<int> piv;
  rref(vs, vs.front().size(), red, piv);
  return red.size() == vs.size();
}

}  // namespace tcode
