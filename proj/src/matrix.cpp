#include "negaconv/matrix.hpp"

#include <stdexcept>

namespace negaconv {

Mat Mat::identity(const Field& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

bool Mat::is_zero() const {
  for (uint32_t v : a)
    if (v) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(*F, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::conj_pow(uint64_t e) const {
  Mat t(*F, rows, cols);
  for (size_t k = 0; k < a.size(); ++k) t.a[k] = F->pow(a[k], e);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (F != o.F || cols != o.rows) throw std::invalid_argument("matrix product shape mismatch");
  Mat r(*F, rows, o.cols);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      uint32_t v = at(i, k);
      if (!v) continue;
      for (int j = 0; j < o.cols; ++j) {
        uint32_t w = o.at(k, j);
        if (!w) continue;
        r.at(i, j) = F->add(r.at(i, j), F->mul(v, w));
      }
    }
  }
  return r;
}

Mat Mat::vstack(const Mat& o) const {
  if (F != o.F || cols != o.cols) throw std::invalid_argument("vstack column mismatch");
  Mat r(*F, rows + o.rows, cols);
  std::copy(a.begin(), a.end(), r.a.begin());
  std::copy(o.a.begin(), o.a.end(), r.a.begin() + a.size());
  return r;
}

Mat Mat::select_cols(std::span<const int> idx) const {
  Mat r(*F, rows, int(idx.size()));
  for (int i = 0; i < rows; ++i)
    for (size_t j = 0; j < idx.size(); ++j) r.at(i, int(j)) = at(i, idx[j]);
  return r;
}

Mat Mat::select_rows(std::span<const int> idx) const {
  Mat r(*F, int(idx.size()), cols);
  for (size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < cols; ++j) r.at(int(i), j) = at(idx[i], j);
  return r;
}

int rank_of(Mat m) {
  const Field& f = *m.F;
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (m.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = col; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    uint32_t pinv = f.inv(m.at(rank, col));
    for (int i = rank + 1; i < m.rows; ++i) {
      uint32_t v = m.at(i, col);
      if (!v) continue;
      uint32_t c = f.mul(v, pinv);
      m.at(i, col) = 0;
      for (int j = col + 1; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

Rref rref(Mat m) {
  const Field& f = *m.F;
  Rref out;
  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    uint32_t pinv = f.inv(m.at(r, col));
    for (int j = col; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), pinv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      uint32_t v = m.at(i, col);
      if (!v) continue;
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(v, m.at(r, j)));
    }
    out.pivot_cols.push_back(col);
    ++r;
  }
  out.rank = r;
  out.R = std::move(m);
  return out;
}

Mat nullspace(const Mat& m) {
  const Field& f = *m.F;
  Rref rr = rref(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : rr.pivot_cols) is_pivot[c] = 1;
  Mat basis(f, m.cols - rr.rank, m.cols);
  int bi = 0;
  for (int fc = 0; fc < m.cols; ++fc) {
    if (is_pivot[fc]) continue;
    basis.at(bi, fc) = f.one();
    for (int r = 0; r < rr.rank; ++r) {
      int pc = rr.pivot_cols[r];
      if (pc < fc && rr.R.at(r, fc)) basis.at(bi, pc) = f.neg(rr.R.at(r, fc));
    }
    ++bi;
  }
  return basis;
}

std::vector<int> independent_row_filter(const Mat& m) {
  const Field& f = *m.F;
  std::vector<int> kept;
  // echelon basis of the kept rows; pivcol[k] = leading column of basis row k
  std::vector<std::vector<uint32_t>> basis;
  std::vector<int> pivcol;
  for (int i = 0; i < m.rows; ++i) {
    std::vector<uint32_t> row(m.row(i).begin(), m.row(i).end());
    for (size_t k = 0; k < basis.size(); ++k) {
      uint32_t v = row[pivcol[k]];
      if (!v) continue;
      for (int j = 0; j < m.cols; ++j)
        row[j] = f.sub(row[j], f.mul(v, basis[k][j]));
    }
    int lead = -1;
    for (int j = 0; j < m.cols; ++j)
      if (row[j]) {
        lead = j;
        break;
      }
    if (lead < 0) continue;  // dependent on kept predecessors
    uint32_t pinv = f.inv(row[lead]);
    for (int j = 0; j < m.cols; ++j) row[j] = f.mul(row[j], pinv);
    basis.push_back(std::move(row));
    pivcol.push_back(lead);
    kept.push_back(i);
  }
  return kept;
}

uint32_t det(Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  const Field& f = *m.F;
  uint32_t d = f.one();
  for (int col = 0; col < m.cols; ++col) {
    int piv = -1;
    for (int i = col; i < m.rows; ++i)
      if (m.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = col; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = f.neg(d);
    }
    d = f.mul(d, m.at(col, col));
    uint32_t pinv = f.inv(m.at(col, col));
    for (int i = col + 1; i < m.rows; ++i) {
      uint32_t v = m.at(i, col);
      if (!v) continue;
      uint32_t c = f.mul(v, pinv);
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(col, j)));
    }
  }
  return d;
}

}  // namespace negaconv
