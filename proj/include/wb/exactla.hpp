#ifndef WB_EXACTLA_HPP
#define WB_EXACTLA_HPP

#include <gmpxx.h>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb {

// All arithmetic in the workbench is exact rational arithmetic.
using Scalar = mpq_class;

inline Scalar frac(long num, long den = 1) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

// Sparse vector: index -> nonzero coefficient.
using SparseVec = std::map<int, Scalar>;

inline void vec_add(SparseVec &v, int i, const Scalar &c) {
  if (c == 0) return;
  auto it = v.find(i);
  if (it == v.end()) {
    v.emplace(i, c);
  } else {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

inline void vec_axpy(SparseVec &v, const Scalar &c, const SparseVec &w) {
  if (c == 0) return;
  for (auto &[i, x] : w) vec_add(v, i, c * x);
}

inline SparseVec vec_scale(const SparseVec &v, const Scalar &c) {
  SparseVec r;
  if (c == 0) return r;
  for (auto &[i, x] : v) r.emplace(i, c * x);
  return r;
}

// Sparse rational matrix, stored row-wise; no zero entries are kept.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const Scalar &v) {
    check_index(r, c);
    if (v == 0)
      row_[r].erase(c);
    else
      row_[r][c] = v;
  }
  void add(int r, int c, const Scalar &v) {
    check_index(r, c);
    vec_add(row_[r], c, v);
  }
  Scalar get(int r, int c) const {
    check_index(r, c);
    auto it = row_[r].find(c);
    return it == row_[r].end() ? Scalar(0) : it->second;
  }
  const SparseVec &row(int r) const { return row_[r]; }

  void set_column(int c, const SparseVec &col) {
    for (auto &[r, v] : col) set(r, c, v);
  }

  SparseMatrix transposed() const {
    SparseMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (auto &[c, v] : row_[r]) t.row_[c].emplace(r, v);
    return t;
  }

  SparseVec apply(const SparseVec &x) const {
    SparseVec y;
    for (int r = 0; r < rows_; ++r) {
      Scalar acc = 0;
      for (auto &[c, v] : row_[r]) {
        auto it = x.find(c);
        if (it != x.end()) acc += v * it->second;
      }
      vec_add(y, r, acc);
    }
    return y;
  }

private:
  void check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("SparseMatrix index out of range");
  }
  int rows_ = 0, cols_ = 0;
  std::vector<SparseVec> row_;
};

struct ReduceResult {
  int rank = 0;
  std::vector<int> pivot_cols;          // increasing
  std::vector<SparseVec> kernel_basis;  // reduced, one per free column
};

// Row-reduce to RREF with deterministic pivoting: for each column, the pivot
// is the not-yet-used row of smallest index with a nonzero entry.
ReduceResult reduce(const SparseMatrix &m);

// Solve m x = b; free variables are set to 0 under the pivot order.
std::optional<SparseVec> solve(const SparseMatrix &m, const SparseVec &b);

// Solve m x = b_j for many right-hand sides with a single elimination.
std::vector<std::optional<SparseVec>> solve_multi(
    const SparseMatrix &m, const std::vector<SparseVec> &rhs);

}  // namespace wb

#endif
