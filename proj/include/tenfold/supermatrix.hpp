#pragma once

#include <Eigen/Dense>

#include "tenfold/grassmann.hpp"

namespace tenfold::superalg {

/// Block dimensions (m even | n odd) of one side of a graded matrix.
struct Grading {
  int m = 0, n = 0;
  int total() const { return m + n; }
  bool operator==(const Grading&) const = default;
};

struct dim_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Block matrix over a Grassmann algebra.  Diagonal blocks carry even
/// entries, off-diagonal blocks odd entries; the constructor and setters
/// enforce the pattern.  Row and column gradings are independent, so
/// rectangular maps such as Hom(W,V) with V purely even fit in the same
/// type.
class SuperMatrix {
 public:
  SuperMatrix() = default;
  SuperMatrix(Grading rows, Grading cols)
      : rows_(rows), cols_(cols), e_(size_t(rows.total()) * cols.total()) {}
  static SuperMatrix identity(Grading g);
  /// Even numeric matrix (rejects entries in odd positions).
  static SuperMatrix from_complex(Grading rows, Grading cols, const Eigen::MatrixXcd& m);

  Grading rows() const { return rows_; }
  Grading cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const GrassmannElement& at(int i, int j) const { return e_[size_t(i) * cols_.total() + j]; }
  void set(int i, int j, const GrassmannElement& v);
  /// No parity validation; for kernels whose algebra preserves the pattern.
  void set_raw(int i, int j, GrassmannElement v) { mut(i, j) = std::move(v); }
  /// Entry parity demanded by position (i,j): +1 even block, -1 odd block.
  int slot_parity(int i, int j) const {
    return ((i < rows_.m) == (j < cols_.m)) ? 1 : -1;
  }

  /// Ordinary complex matrix of block-diagonal bodies (odd slots dropped).
  Eigen::MatrixXcd body() const;

  SuperMatrix operator+(const SuperMatrix& o) const;
  SuperMatrix operator-(const SuperMatrix& o) const;
  SuperMatrix operator*(const SuperMatrix& o) const;
  friend SuperMatrix operator*(const GrassmannElement& s, const SuperMatrix& a);
  friend SuperMatrix operator*(cplx s, const SuperMatrix& a) { return GrassmannElement(s) * a; }
  friend SuperMatrix operator*(double s, const SuperMatrix& a) { return GrassmannElement(cplx(s)) * a; }

  double norm_inf() const;

 private:
  Grading rows_, cols_;
  std::vector<GrassmannElement> e_;
  GrassmannElement& mut(int i, int j) { return e_[size_t(i) * cols_.total() + j]; }
  friend SuperMatrix s_transpose(const SuperMatrix&);
};

/// Supertransposition: (AB)^T = B^T A^T and A^TT = sigma A sigma.
SuperMatrix s_transpose(const SuperMatrix& a);

/// STr = Tr over the even block minus Tr over the odd block.
GrassmannElement s_trace(const SuperMatrix& a);

/// SDet via the Schur formula Det(g00 - g01 g11^{-1} g10) / Det(g11).
GrassmannElement s_det(const SuperMatrix& a);

/// Block (Schur-complement based) inverse; bodies of both diagonal blocks
/// must be invertible.
SuperMatrix s_inv(const SuperMatrix& a);

/// Matrix exponential by scaling and squaring; exact in the nilpotent
/// directions, Taylor-converged in the body.
SuperMatrix s_exp(const SuperMatrix& a);

/// Superparity matrix sigma = diag(1_m, -1_n).
SuperMatrix superparity(Grading g);

/// Determinant of a square even-entry Grassmann matrix (Gauss elimination
/// with body-magnitude pivoting).
GrassmannElement g_mat_det(const SuperMatrix& even_block);

}  // namespace tenfold::superalg
