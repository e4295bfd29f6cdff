#include "wb/exactla.hpp"

#include <set>

namespace wb {
namespace {

// Working state for Gaussian elimination.  Keeps a column -> rows index so
// pivot searches do not scan the whole matrix.
struct Elim {
  int nrows, ncols;
  std::vector<SparseVec> row;
  std::vector<std::set<int>> colrows;
  std::vector<int> pivot_row_of_col;  // -1 if free
  std::vector<char> used;

  Elim(const SparseMatrix &m, int extra_cols, const std::vector<SparseVec> *rhs)
      : nrows(m.rows()),
        ncols(m.cols() + extra_cols),
        row(m.rows()),
        colrows(ncols),
        pivot_row_of_col(ncols, -1),
        used(m.rows(), 0) {
    for (int r = 0; r < nrows; ++r) {
      row[r] = m.row(r);
      for (auto &[c, v] : row[r]) colrows[c].insert(r);
    }
    if (rhs) {
      for (int j = 0; j < (int)rhs->size(); ++j)
        for (auto &[r, v] : (*rhs)[j]) {
          if (v == 0) continue;
          row[r][m.cols() + j] = v;
          colrows[m.cols() + j].insert(r);
        }
    }
  }

  void set_entry(int r, int c, const Scalar &v) {
    if (v == 0) {
      row[r].erase(c);
      colrows[c].erase(r);
    } else {
      row[r][c] = v;
      colrows[c].insert(r);
    }
  }

  // row[r] += f * row[src]
  void axpy(int r, const Scalar &f, int src) {
    if (f == 0) return;
    for (auto &[c, v] : row[src]) {
      auto it = row[r].find(c);
      Scalar nv = (it == row[r].end() ? Scalar(0) : it->second) + f * v;
      set_entry(r, c, nv);
    }
  }

  void scale_row(int r, const Scalar &f) {
    for (auto &[c, v] : row[r]) v *= f;
  }

  // RREF over the first `main_cols` columns; pivot = smallest-index unused
  // row with a nonzero entry in the current column.
  void run(int main_cols) {
    for (int c = 0; c < main_cols; ++c) {
      int piv = -1;
      for (int r : colrows[c])
        if (!used[r]) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      used[piv] = 1;
      pivot_row_of_col[c] = piv;
      Scalar p = row[piv][c];
      if (p != 1) scale_row(piv, Scalar(1) / p);
      auto elim_rows = colrows[c];  // snapshot, axpy mutates the index
      for (int r : elim_rows)
        if (r != piv) axpy(r, -row[r][c], piv);
    }
  }
};

}  // namespace

ReduceResult reduce(const SparseMatrix &m) {
  Elim e(m, 0, nullptr);
  e.run(m.cols());
  ReduceResult res;
  for (int c = 0; c < m.cols(); ++c)
    if (e.pivot_row_of_col[c] >= 0) res.pivot_cols.push_back(c);
  res.rank = (int)res.pivot_cols.size();
  for (int f = 0; f < m.cols(); ++f) {
    if (e.pivot_row_of_col[f] >= 0) continue;
    SparseVec v;
    v[f] = 1;
    for (int c : res.pivot_cols) {
      int r = e.pivot_row_of_col[c];
      auto it = e.row[r].find(f);
      if (it != e.row[r].end()) v[c] = -it->second;
    }
    res.kernel_basis.push_back(std::move(v));
  }
  return res;
}

std::vector<std::optional<SparseVec>> solve_multi(
    const SparseMatrix &m, const std::vector<SparseVec> &rhs) {
  for (auto &b : rhs)
    for (auto &[r, v] : b)
      if (r < 0 || r >= m.rows())
        throw std::invalid_argument("solve: rhs length mismatch");
  Elim e(m, (int)rhs.size(), &rhs);
  e.run(m.cols());
  std::vector<std::optional<SparseVec>> out;
  for (int j = 0; j < (int)rhs.size(); ++j) {
    int bc = m.cols() + j;
    bool consistent = true;
    for (int r : e.colrows[bc])
      if (!e.used[r]) {
        consistent = false;
        break;
      }
    if (!consistent) {
      out.emplace_back(std::nullopt);
      continue;
    }
    SparseVec x;
    for (int c = 0; c < m.cols(); ++c) {
      int r = e.pivot_row_of_col[c];
      if (r < 0) continue;
      auto it = e.row[r].find(bc);
      if (it != e.row[r].end()) x[c] = it->second;
    }
    out.emplace_back(std::move(x));
  }
  return out;
}

std::optional<SparseVec> solve(const SparseMatrix &m, const SparseVec &b) {
  return solve_multi(m, {b})[0];
}

}  // namespace wb
