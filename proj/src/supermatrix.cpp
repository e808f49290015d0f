#include "tenfold/supermatrix.hpp"

#include <cmath>

namespace tenfold::superalg {

namespace {

using Grid = std::vector<std::vector<GrassmannElement>>;

Grid make_grid(int r, int c) { return Grid(r, std::vector<GrassmannElement>(c)); }

// Gauss-Jordan inverse of a square matrix of even Grassmann elements.
// Pivots are chosen by body magnitude; odd/nilpotent entries can never
// be pivots because their body vanishes.
Grid grid_inverse(Grid a) {
  int n = int(a.size());
  Grid inv = make_grid(n, n);
  for (int i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a[k][k].body());
    for (int r = k + 1; r < n; ++r) {
      double v = std::abs(a[r][k].body());
      if (v > best) best = v, piv = r;
    }
    if (best == 0.0) throw singular_body_error("grid_inverse: singular body");
    std::swap(a[k], a[piv]);
    std::swap(inv[k], inv[piv]);
    GrassmannElement d = g_inv(a[k][k]);
    for (int j = 0; j < n; ++j) {
      a[k][j] = d * a[k][j];
      inv[k][j] = d * inv[k][j];
    }
    for (int r = 0; r < n; ++r) {
      if (r == k || a[r][k].is_zero()) continue;
      GrassmannElement f = a[r][k];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[k][j];
        inv[r][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

GrassmannElement grid_det(Grid a) {
  int n = int(a.size());
  if (n == 0) return 1.0;
  GrassmannElement det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a[k][k].body());
    for (int r = k + 1; r < n; ++r) {
      double v = std::abs(a[r][k].body());
      if (v > best) best = v, piv = r;
    }
    if (best == 0.0) throw singular_body_error("grid_det: singular body");
    if (piv != k) {
      std::swap(a[k], a[piv]);
      det = -1.0 * det;
    }
    det = det * a[k][k];
    GrassmannElement d = g_inv(a[k][k]);
    for (int r = k + 1; r < n; ++r) {
      if (a[r][k].is_zero()) continue;
      GrassmannElement f = a[r][k] * d;
      for (int j = k; j < n; ++j) a[r][j] -= f * a[k][j];
    }
  }
  return det;
}

Grid grid_mul(const Grid& a, const Grid& b) {
  int r = int(a.size()), m = int(b.size()), c = m ? int(b[0].size()) : 0;
  Grid out = make_grid(r, c);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < m; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Grid grid_sub(Grid a, const Grid& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) a[i][j] -= b[i][j];
  return a;
}

}  // namespace

SuperMatrix SuperMatrix::identity(Grading g) {
  SuperMatrix m(g, g);
  for (int i = 0; i < g.total(); ++i) m.mut(i, i) = 1.0;
  return m;
}

SuperMatrix SuperMatrix::from_complex(Grading rows, Grading cols, const Eigen::MatrixXcd& m) {
  if (m.rows() != rows.total() || m.cols() != cols.total())
    throw dim_error("from_complex: size mismatch");
  SuperMatrix out(rows, cols);
  for (int i = 0; i < rows.total(); ++i)
    for (int j = 0; j < cols.total(); ++j) {
      if (m(i, j) == 0.0) continue;
      if (out.slot_parity(i, j) < 0)
        throw parity_error("from_complex: numeric entry in an odd slot");
      out.mut(i, j) = m(i, j);
    }
  return out;
}

void SuperMatrix::set(int i, int j, const GrassmannElement& v) {
  if (!v.is_zero()) {
    int want = slot_parity(i, j);
    if (v.parity() != want)
      throw parity_error("entry parity does not match block position");
  }
  mut(i, j) = v;
}

Eigen::MatrixXcd SuperMatrix::body() const {
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(rows_.total(), cols_.total());
  for (int i = 0; i < rows_.total(); ++i)
    for (int j = 0; j < cols_.total(); ++j)
      if (slot_parity(i, j) > 0) b(i, j) = at(i, j).body();
  return b;
}

SuperMatrix SuperMatrix::operator+(const SuperMatrix& o) const {
  if (!(rows_ == o.rows_ && cols_ == o.cols_)) throw dim_error("add: grading mismatch");
  SuperMatrix out = *this;
  for (size_t k = 0; k < e_.size(); ++k) out.e_[k] += o.e_[k];
  return out;
}

SuperMatrix SuperMatrix::operator-(const SuperMatrix& o) const {
  if (!(rows_ == o.rows_ && cols_ == o.cols_)) throw dim_error("sub: grading mismatch");
  SuperMatrix out = *this;
  for (size_t k = 0; k < e_.size(); ++k) out.e_[k] -= o.e_[k];
  return out;
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
  if (!(cols_ == o.rows_)) throw dim_error("mul: grading mismatch");
  SuperMatrix out(rows_, o.cols_);
  int r = rows_.total(), m = cols_.total(), c = o.cols_.total();
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < m; ++k) {
      const GrassmannElement& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < c; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.mut(i, j) += aik * o.at(k, j);
      }
    }
  return out;
}

SuperMatrix operator*(const GrassmannElement& s, const SuperMatrix& a) {
  SuperMatrix out = a;
  for (auto& v : out.e_) v = s * v;
  return out;
}

double SuperMatrix::norm_inf() const {
  double best = 0;
  for (int i = 0; i < rows_.total(); ++i) {
    double row = 0;
    for (int j = 0; j < cols_.total(); ++j) row += at(i, j).norm_inf();
    best = std::max(best, row);
  }
  return best;
}

SuperMatrix s_transpose(const SuperMatrix& a) {
  SuperMatrix out(a.cols(), a.rows());
  for (int i = 0; i < a.rows().total(); ++i)
    for (int j = 0; j < a.cols().total(); ++j) {
      bool row_even = i < a.rows().m, col_even = j < a.cols().m;
      double sign = (row_even && !col_even) ? -1.0 : 1.0;
      out.mut(j, i) = sign * a.at(i, j);
    }
  return out;
}

GrassmannElement s_trace(const SuperMatrix& a) {
  if (!a.is_square()) throw dim_error("s_trace: square matrix required");
  GrassmannElement t;
  for (int i = 0; i < a.rows().m; ++i) t += a.at(i, i);
  for (int i = a.rows().m; i < a.rows().total(); ++i) t -= a.at(i, i);
  return t;
}

SuperMatrix superparity(Grading g) {
  SuperMatrix s(g, g);
  for (int i = 0; i < g.total(); ++i) s.set_raw(i, i, (i < g.m) ? 1.0 : -1.0);
  return s;
}

namespace {

struct Blocks {
  Grid b00, b01, b10, b11;
};

Blocks split(const SuperMatrix& a) {
  int m = a.rows().m, n = a.rows().n;
  Blocks b{make_grid(m, m), make_grid(m, n), make_grid(n, m), make_grid(n, n)};
  for (int i = 0; i < m + n; ++i)
    for (int j = 0; j < m + n; ++j) {
      const GrassmannElement& v = a.at(i, j);
      if (i < m && j < m)
        b.b00[i][j] = v;
      else if (i < m)
        b.b01[i][j - m] = v;
      else if (j < m)
        b.b10[i - m][j] = v;
      else
        b.b11[i - m][j - m] = v;
    }
  return b;
}

SuperMatrix join(Grading g, const Blocks& b) {
  SuperMatrix out(g, g);
  int m = g.m, n = g.n;
  for (int i = 0; i < m + n; ++i)
    for (int j = 0; j < m + n; ++j) {
      const GrassmannElement& v = (i < m && j < m)  ? b.b00[i][j]
                                  : (i < m)         ? b.b01[i][j - m]
                                  : (j < m)         ? b.b10[i - m][j]
                                                    : b.b11[i - m][j - m];
      out.set_raw(i, j, v);
    }
  return out;
}

}  // namespace

GrassmannElement s_det(const SuperMatrix& a) {
  if (!a.is_square()) throw dim_error("s_det: square matrix required");
  Blocks b = split(a);
  int n = a.rows().n;
  if (n == 0) return grid_det(b.b00);
  Grid inv11 = grid_inverse(b.b11);
  GrassmannElement d11 = grid_det(b.b11);
  if (a.rows().m == 0) return g_inv(d11);
  Grid schur = grid_sub(b.b00, grid_mul(b.b01, grid_mul(inv11, b.b10)));
  return grid_det(schur) * g_inv(d11);
}

SuperMatrix s_inv(const SuperMatrix& a) {
  if (!a.is_square()) throw dim_error("s_inv: square matrix required");
  int m = a.rows().m, n = a.rows().n;
  Blocks b = split(a);
  if (n == 0) return join(a.rows(), {grid_inverse(b.b00), {}, {}, {}});
  if (m == 0) return join(a.rows(), {{}, {}, {}, grid_inverse(b.b11)});
  Grid inv11 = grid_inverse(b.b11);
  Grid s = grid_sub(b.b00, grid_mul(b.b01, grid_mul(inv11, b.b10)));
  Grid invS = grid_inverse(s);
  // [[S^-1, -S^-1 B D^-1], [-D^-1 C S^-1, D^-1 + D^-1 C S^-1 B D^-1]]
  Grid i01 = grid_mul(invS, grid_mul(b.b01, inv11));
  for (auto& row : i01)
    for (auto& v : row) v = -1.0 * v;
  Grid i10 = grid_mul(inv11, grid_mul(b.b10, invS));
  for (auto& row : i10)
    for (auto& v : row) v = -1.0 * v;
  Grid corr = grid_mul(inv11, grid_mul(b.b10, grid_mul(invS, grid_mul(b.b01, inv11))));
  Grid i11 = inv11;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) i11[i][j] += corr[i][j];
  return join(a.rows(), {invS, i01, i10, i11});
}

SuperMatrix s_exp(const SuperMatrix& a) {
  if (!a.is_square()) throw dim_error("s_exp: square matrix required");
  double scale = a.norm_inf();
  int squarings = 0;
  while (scale > 0.5 && squarings < 40) {
    scale /= 2;
    ++squarings;
  }
  SuperMatrix t = (1.0 / std::pow(2.0, squarings)) * a;
  SuperMatrix sum = SuperMatrix::identity(a.rows());
  SuperMatrix term = sum;
  for (int k = 1; k <= 40; ++k) {
    term = (1.0 / double(k)) * (term * t);
    sum = sum + term;
    if (term.norm_inf() < 1e-18 * std::max(1.0, sum.norm_inf())) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

GrassmannElement g_mat_det(const SuperMatrix& even_block) {
  if (!even_block.is_square()) throw dim_error("g_mat_det: square matrix required");
  int t = even_block.rows().total();
  Grid g = make_grid(t, t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) g[i][j] = even_block.at(i, j);
  return grid_det(std::move(g));
}

}  // namespace tenfold::superalg
