#pragma once

// Dense matrices over a finite field with the exact linear algebra the code
// constructions need: rank, RREF, null spaces, earliest-independent-row
// filtering.

#include <cstdint>
#include <span>
#include <vector>

#include "negaconv/field.hpp"

namespace negaconv {

struct Mat {
  const Field* F = nullptr;
  int rows = 0;
  int cols = 0;
  std::vector<uint32_t> a;

  Mat() = default;
  Mat(const Field& f, int r, int c) : F(&f), rows(r), cols(c), a(size_t(r) * c, 0) {}

  uint32_t& at(int i, int j) { return a[size_t(i) * cols + j]; }
  uint32_t at(int i, int j) const { return a[size_t(i) * cols + j]; }
  std::span<const uint32_t> row(int i) const { return {a.data() + size_t(i) * cols, size_t(cols)}; }

  static Mat identity(const Field& f, int n);

  bool is_zero() const;
  Mat transpose() const;
  Mat conj_pow(uint64_t e) const;  // entrywise x^e
  Mat operator*(const Mat& o) const;
  Mat vstack(const Mat& o) const;
  Mat select_cols(std::span<const int> idx) const;
  Mat select_rows(std::span<const int> idx) const;
  bool operator==(const Mat& o) const { return F == o.F && rows == o.rows && cols == o.cols && a == o.a; }
};

int rank_of(Mat m);  // works on a copy

struct Rref {
  Mat R;
  std::vector<int> pivot_cols;
  int rank = 0;
};
Rref rref(Mat m);

// Basis of { x row vector : m * x^T = 0 }, one row per free column of the
// RREF, free columns in ascending order.
Mat nullspace(const Mat& m);

// Indices of the rows kept by the deterministic dependent-row removal: rows
// are scanned in order and dropped exactly when they lie in the span of the
// rows already kept.
std::vector<int> independent_row_filter(const Mat& m);

uint32_t det(Mat m);  // square only

}  // namespace negaconv
