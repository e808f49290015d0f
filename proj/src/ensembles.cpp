#include "tenfold/ensembles.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <thread>

#include "tenfold/spectrum.hpp"

namespace tenfold::ensembles {

namespace {

const cplx kI(0.0, 1.0);

Matrix pauli_x() { return (Matrix(2, 2) << 0, 1, 1, 0).finished(); }
Matrix pauli_y() { return (Matrix(2, 2) << 0, -kI, kI, 0).finished(); }
Matrix pauli_z() { return (Matrix(2, 2) << 1, 0, 0, -1).finished(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix eye(int n) { return Matrix::Identity(n, n); }

}  // namespace

const char* label(SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::A: return "A";
    case SymmetryClass::AI: return "AI";
    case SymmetryClass::AII: return "AII";
    case SymmetryClass::AIII: return "AIII";
    case SymmetryClass::BDI: return "BDI";
    case SymmetryClass::CII: return "CII";
    case SymmetryClass::C: return "C";
    case SymmetryClass::CI: return "CI";
    case SymmetryClass::D: return "D";
    case SymmetryClass::DIII: return "DIII";
  }
  return "?";
}

std::optional<SymmetryClass> parse_class(std::string_view s) {
  for (SymmetryClass c : kAllClasses)
    if (s == label(c)) return c;
  return std::nullopt;
}

int physical_dim(SymmetryClass cls, int N) {
  switch (cls) {
    case SymmetryClass::A:
    case SymmetryClass::AI: return N;
    case SymmetryClass::AII:
    case SymmetryClass::AIII:
    case SymmetryClass::BDI:
    case SymmetryClass::C:
    case SymmetryClass::CI:
    case SymmetryClass::D: return 2 * N;
    case SymmetryClass::CII:
    case SymmetryClass::DIII: return 4 * N;
  }
  return N;
}

bool has_particle_hole(SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::A:
    case SymmetryClass::AI:
    case SymmetryClass::AII: return false;
    default: return true;
  }
}

int saddle_count(SymmetryClass cls) {
  return (cls == SymmetryClass::D || cls == SymmetryClass::DIII) ? 2 : 1;
}

double Constraint::residual(const Matrix& H) const {
  Matrix rhs = (kind == Kind::Transpose) ? Matrix(mat * H.transpose() * mat.inverse())
                                         : Matrix(mat * H * mat.inverse());
  return (H - sign * rhs).norm();
}

namespace {

std::vector<Constraint> physical_constraints(SymmetryClass cls, int N) {
  std::vector<Constraint> cs;
  using K = Constraint::Kind;
  switch (cls) {
    case SymmetryClass::A: break;
    case SymmetryClass::AI:
      cs.push_back({K::Transpose, 1.0, eye(N), "H = H^T"});
      break;
    case SymmetryClass::AII:
      cs.push_back({K::Transpose, 1.0, kron(kI * pauli_y(), eye(N)), "H = T H^T T^-1"});
      break;
    case SymmetryClass::AIII:
      cs.push_back({K::Similarity, -1.0, kron(pauli_z(), eye(N)), "H = -P H P^-1"});
      break;
    case SymmetryClass::BDI:
      cs.push_back({K::Similarity, -1.0, kron(pauli_z(), eye(N)), "H = -P H P^-1"});
      cs.push_back({K::Transpose, 1.0, eye(2 * N), "H = H^T"});
      break;
    case SymmetryClass::CII:
      cs.push_back({K::Similarity, -1.0, kron(pauli_z(), eye(2 * N)), "H = -P H P^-1"});
      cs.push_back(
          {K::Transpose, -1.0, kron(eye(2), kron(kI * pauli_y(), eye(N))), "H = -T H^T T^-1"});
      break;
    case SymmetryClass::C:
      cs.push_back({K::Transpose, -1.0, kron(kI * pauli_y(), eye(N)), "H = -C H^T C^-1"});
      break;
    case SymmetryClass::CI:
      cs.push_back({K::Transpose, -1.0, kron(kI * pauli_y(), eye(N)), "H = -C H^T C^-1"});
      cs.push_back({K::Transpose, 1.0, eye(2 * N), "H = H^T"});
      break;
    case SymmetryClass::D:
      cs.push_back({K::Transpose, -1.0, kron(pauli_x(), eye(N)), "H = -C H^T C^-1"});
      break;
    case SymmetryClass::DIII:
      cs.push_back({K::Transpose, -1.0, kron(pauli_x(), eye(2 * N)), "H = -C H^T C^-1"});
      cs.push_back(
          {K::Transpose, 1.0, kron(eye(2), kron(kI * pauli_y(), eye(N))), "H = T H^T T^-1"});
      break;
  }
  return cs;
}

int tangent_dim_closed_form(SymmetryClass cls, int N) {
  switch (cls) {
    case SymmetryClass::A: return N * N;
    case SymmetryClass::AI: return N * (N + 1) / 2;
    case SymmetryClass::AII: return N * (2 * N - 1);
    case SymmetryClass::AIII: return 2 * N * N;
    case SymmetryClass::BDI: return N * N;
    case SymmetryClass::CII: return 4 * N * N;
    case SymmetryClass::C: return N * (2 * N + 1);
    case SymmetryClass::CI: return N * (N + 1);
    case SymmetryClass::D: return N * (2 * N - 1);
    case SymmetryClass::DIII: return 2 * N * (2 * N - 1);
  }
  return 0;
}

// Real dimension of {H hermitian : all constraints hold}, by SVD nullity.
int tangent_dim_numeric(SymmetryClass cls, int N) {
  int d = physical_dim(cls, N);
  auto constraints = physical_constraints(cls, N);
  if (constraints.empty()) return d * d;
  // real parameters of a hermitian matrix: diag + re/im above diagonal
  int npar = d * d;
  auto param_to_matrix = [&](int p) {
    Matrix H = Matrix::Zero(d, d);
    if (p < d) {
      H(p, p) = 1.0;
      return H;
    }
    int q = p - d;
    int off = q / 2, part = q % 2;
    int i = 0, j = 1;
    for (int c = 0; c < off; ++c) {
      if (++j >= d) {
        ++i;
        j = i + 1;
      }
    }
    if (part == 0) {
      H(i, j) = 0.5;
      H(j, i) = 0.5;
    } else {
      H(i, j) = 0.5 * kI;
      H(j, i) = -0.5 * kI;
    }
    return H;
  };
  Eigen::MatrixXd R(int(constraints.size()) * 2 * d * d, npar);
  for (int p = 0; p < npar; ++p) {
    Matrix H = param_to_matrix(p);
    int row = 0;
    for (const auto& c : constraints) {
      Matrix rhs = (c.kind == Constraint::Kind::Transpose)
                       ? Matrix(c.mat * H.transpose() * c.mat.inverse())
                       : Matrix(c.mat * H * c.mat.inverse());
      Matrix res = H - c.sign * rhs;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          R(row++, p) = res(i, j).real();
          R(row++, p) = res(i, j).imag();
        }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(R);
  double tol = 1e-8 * svd.singularValues()(0);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++rank;
  return npar - rank;
}

}  // namespace

ClassStructure class_structure(SymmetryClass cls, int N, int n) {
  if (N < 1 || n < 1) throw unsupported_error("class_structure: N and n must be >= 1");
  ClassStructure s;
  s.cls = cls;
  s.N = N;
  s.n = n;
  s.physical = physical_constraints(cls, N);
  s.tangent_dim_formula = tangent_dim_closed_form(cls, N);
  s.tangent_dim = (physical_dim(cls, N) <= 12) ? tangent_dim_numeric(cls, N)
                                               : s.tangent_dim_formula;
  Matrix sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  Matrix one_n = eye(n), one2 = eye(2);
  switch (cls) {
    case SymmetryClass::A:
      s.w_dim = n;
      s.beta = one_n;
      s.c_exponent = 1.0;
      s.q_condition = "none (Q ranges over all of gl(n|n))";
      break;
    case SymmetryClass::C:
      s.w_dim = 2 * n;
      s.gamma_b = kron(sx, one_n);
      s.gamma_f = kron(kI * sy, one_n);
      s.beta = kron(sz, one_n);
      s.c_exponent = 0.5;
      s.q_condition = "Q = -gamma Q^T gamma^-1";
      break;
    case SymmetryClass::D:
      s.w_dim = 2 * n;
      s.gamma_b = kron(kI * sy, one_n);
      s.gamma_f = kron(sx, one_n);
      s.beta = kron(sz, one_n);
      s.c_exponent = 0.5;
      s.q_condition = "Q = -gamma Q^T gamma^-1";
      break;
    case SymmetryClass::CI:
      s.w_dim = 4 * n;
      s.gamma_b = kron(sx, kron(sz, one_n));
      s.gamma_f = kron(kI * sy, kron(one2, one_n));
      s.tau_b = kron(one2, kron(sx, one_n));
      s.tau_f = kron(sz, kron(kI * sy, one_n));
      s.beta = kron(sz, kron(one2, one_n));
      s.c_exponent = 0.25;
      s.q_condition = "Q = -gamma Q^T gamma^-1 = +tau Q^T tau^-1";
      break;
    case SymmetryClass::DIII:
      s.w_dim = 4 * n;
      s.gamma_b = kron(kI * sy, kron(one2, one_n));
      s.gamma_f = kron(sx, kron(sz, one_n));
      s.tau_b = kron(sz, kron(kI * sy, one_n));
      s.tau_f = kron(one2, kron(sx, one_n));
      s.beta = kron(sz, kron(one2, one_n));
      s.c_exponent = 0.25;
      s.q_condition = "Q = -gamma Q^T gamma^-1 = +tau Q^T tau^-1";
      break;
    case SymmetryClass::AIII:
      s.w_dim = 2 * n;
      s.pi = kron(kI * sy, one_n);
      s.beta = kron(sz, one_n);
      s.q_condition = "Q = -pi Q pi^-1";
      break;
    case SymmetryClass::BDI:
      s.w_dim = 4 * n;
      s.pi = kron(kI * sy, kron(one2, one_n));
      s.tau_b = kron(one2, kron(sx, one_n));
      s.tau_f = kron(one2, kron(kI * sy, one_n));
      s.beta = kron(sz, kron(one2, one_n));
      s.q_condition = "Q = -pi Q pi^-1 = +tau Q^T tau^-1";
      break;
    case SymmetryClass::CII:
      s.w_dim = 4 * n;
      s.pi = kron(kI * sy, kron(one2, one_n));
      s.tau_b = kron(one2, kron(kI * sy, one_n));
      s.tau_f = kron(one2, kron(sx, one_n));
      s.beta = kron(sz, kron(one2, one_n));
      s.q_condition = "Q = -pi Q pi^-1 = +tau Q^T tau^-1";
      break;
    case SymmetryClass::AI:
      s.w_dim = 2 * n;
      s.tau_b = kron(sx, one_n);
      s.tau_f = kron(kI * sy, one_n);
      s.q_condition = "Q = +tau Q^T tau^-1";
      break;
    case SymmetryClass::AII:
      s.w_dim = 2 * n;
      s.tau_b = kron(kI * sy, one_n);
      s.tau_f = kron(sx, one_n);
      s.q_condition = "Q = +tau Q^T tau^-1";
      break;
  }
  return s;
}

double ClassStructure::structure_residual() const {
  double r = 0;
  auto nz = [](const Matrix& m) { return m.size() > 0; };
  int w = w_dim;
  Matrix idw = eye(w);
  switch (cls) {
    case SymmetryClass::C:
      r += (gamma_b - gamma_b.transpose()).norm();
      r += (gamma_f + gamma_f.transpose()).norm();
      break;
    case SymmetryClass::D:
      r += (gamma_b + gamma_b.transpose()).norm();
      r += (gamma_f - gamma_f.transpose()).norm();
      break;
    case SymmetryClass::CI:
      r += (gamma_b * gamma_b - idw).norm() + (gamma_f * gamma_f + idw).norm();
      r += (tau_b * tau_b - idw).norm() + (tau_f * tau_f + idw).norm();
      r += (gamma_b * tau_b + tau_b * gamma_b).norm();
      r += (gamma_f * tau_f + tau_f * gamma_f).norm();
      break;
    case SymmetryClass::DIII:
      r += (gamma_b * gamma_b + idw).norm() + (gamma_f * gamma_f - idw).norm();
      r += (tau_b * tau_b + idw).norm() + (tau_f * tau_f - idw).norm();
      r += (gamma_b * tau_b + tau_b * gamma_b).norm();
      r += (gamma_f * tau_f + tau_f * gamma_f).norm();
      break;
    case SymmetryClass::AI:
      r += (tau_b - tau_b.transpose()).norm() + (tau_f + tau_f.transpose()).norm();
      r += (tau_b * tau_b - idw).norm() + (tau_f * tau_f + idw).norm();
      break;
    case SymmetryClass::AII:
      r += (tau_b + tau_b.transpose()).norm() + (tau_f - tau_f.transpose()).norm();
      r += (tau_b * tau_b + idw).norm() + (tau_f * tau_f - idw).norm();
      break;
    case SymmetryClass::BDI:
      r += (pi * pi + idw).norm();
      r += (tau_b - tau_b.transpose()).norm() + (tau_f + tau_f.transpose()).norm();
      break;
    case SymmetryClass::CII:
      r += (pi * pi + idw).norm();
      r += (tau_b + tau_b.transpose()).norm() + (tau_f - tau_f.transpose()).norm();
      break;
    case SymmetryClass::AIII:
      r += (pi * pi + idw).norm();
      break;
    case SymmetryClass::A:
      break;
  }
  if (nz(beta)) r += (beta * beta - eye(int(beta.rows()))).norm();
  return r;
}

namespace {

using rng::GaussianStream;

// Component samplers.  Weights are the coefficients of the squared
// parameter in Tr H^2; the component standard deviation is v/sqrt(N w).
Matrix sample_hermitian(int N, double sd, double so, GaussianStream& g) {
  Matrix a = Matrix::Zero(N, N);
  for (int i = 0; i < N; ++i) a(i, i) = sd * g.gaussian();
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      cplx v(so * g.gaussian(), so * g.gaussian());
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  return a;
}

Matrix sample_real_sym(int N, double sd, double so, GaussianStream& g) {
  Matrix a = Matrix::Zero(N, N);
  for (int i = 0; i < N; ++i) a(i, i) = sd * g.gaussian();
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) a(i, j) = a(j, i) = so * g.gaussian();
  return a;
}

Matrix sample_complex_sym(int N, double sd, double so, GaussianStream& g) {
  Matrix b = Matrix::Zero(N, N);
  for (int i = 0; i < N; ++i) b(i, i) = cplx(sd * g.gaussian(), sd * g.gaussian());
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      cplx v(so * g.gaussian(), so * g.gaussian());
      b(i, j) = b(j, i) = v;
    }
  return b;
}

Matrix sample_complex_skew(int N, double so, GaussianStream& g) {
  Matrix b = Matrix::Zero(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      cplx v(so * g.gaussian(), so * g.gaussian());
      b(i, j) = v;
      b(j, i) = -v;
    }
  return b;
}

Matrix sample_complex_full(int N, double s, GaussianStream& g) {
  Matrix z(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) z(i, j) = cplx(s * g.gaussian(), s * g.gaussian());
  return z;
}

Matrix sample_real_full(int N, double s, GaussianStream& g) {
  Matrix z(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) z(i, j) = s * g.gaussian();
  return z;
}

}  // namespace

Matrix sample_h(const EnsembleSpec& spec, rng::GaussianStream& g) {
  int N = spec.N;
  double v = spec.v;
  auto sig = [&](double w) { return v / std::sqrt(double(N) * w); };
  switch (spec.cls) {
    case SymmetryClass::A: return sample_hermitian(N, sig(1), sig(2), g);
    case SymmetryClass::AI: return sample_real_sym(N, sig(1), sig(2), g);
    case SymmetryClass::AII: {
      Matrix a = sample_hermitian(N, sig(2), sig(4), g);
      Matrix b = sample_complex_skew(N, sig(4), g);
      Matrix H(2 * N, 2 * N);
      H << a, b, b.adjoint(), a.transpose();
      return H;
    }
    case SymmetryClass::AIII: {
      Matrix z = sample_complex_full(N, sig(2), g);
      Matrix H = Matrix::Zero(2 * N, 2 * N);
      H.topRightCorner(N, N) = z;
      H.bottomLeftCorner(N, N) = z.adjoint();
      return H;
    }
    case SymmetryClass::BDI: {
      Matrix z = sample_real_full(N, sig(2), g);
      Matrix H = Matrix::Zero(2 * N, 2 * N);
      H.topRightCorner(N, N) = z;
      H.bottomLeftCorner(N, N) = z.adjoint();
      return H;
    }
    case SymmetryClass::CII: {
      Matrix a = sample_complex_full(N, sig(4), g);
      Matrix b = sample_complex_full(N, sig(4), g);
      Matrix z(2 * N, 2 * N);
      z << a, b, -b.conjugate(), a.conjugate();
      Matrix H = Matrix::Zero(4 * N, 4 * N);
      H.topRightCorner(2 * N, 2 * N) = z;
      H.bottomLeftCorner(2 * N, 2 * N) = z.adjoint();
      return H;
    }
    case SymmetryClass::C: {
      Matrix a = sample_hermitian(N, sig(2), sig(4), g);
      Matrix b = sample_complex_sym(N, sig(2), sig(4), g);
      Matrix H(2 * N, 2 * N);
      H << a, b, b.adjoint(), -a.transpose();
      return H;
    }
    case SymmetryClass::CI: {
      Matrix a = sample_real_sym(N, sig(2), sig(4), g);
      Matrix b = sample_real_sym(N, sig(2), sig(4), g);
      Matrix H(2 * N, 2 * N);
      H << a, b, b, -a;
      return H;
    }
    case SymmetryClass::D: {
      Matrix a = sample_hermitian(N, sig(2), sig(4), g);
      Matrix b = sample_complex_skew(N, sig(4), g);
      Matrix H(2 * N, 2 * N);
      H << a, b, b.adjoint(), -a.transpose();
      return H;
    }
    case SymmetryClass::DIII: {
      Matrix a = sample_hermitian(N, sig(4), sig(8), g);
      Matrix d = sample_hermitian(N, sig(4), sig(8), g);
      Matrix b = sample_complex_skew(N, sig(8), g);
      Matrix c = sample_complex_skew(N, sig(8), g);
      Matrix H(4 * N, 4 * N);
      H << a, b, c, d,
           b.adjoint(), a.transpose(), -d.transpose(), -c.adjoint(),
           c.adjoint(), -d.transpose(), -a.transpose(), b.adjoint(),
           d, -c, b, -a;
      return H;
    }
  }
  throw unsupported_error("sample_h: unknown class");
}

double symmetry_residual(const EnsembleSpec& spec, const Matrix& H) {
  int d = physical_dim(spec.cls, spec.N);
  if (H.rows() != d || H.cols() != d)
    throw unsupported_error("symmetry_residual: size mismatch for class layout");
  double r = (H - H.adjoint()).norm();
  for (const auto& c : physical_constraints(spec.cls, spec.N))
    r = std::max(r, c.residual(H));
  return r;
}

cplx second_moment_exact(const EnsembleSpec& spec, const Matrix& A, const Matrix& B) {
  int N = spec.N;
  double v = spec.v;
  auto cs = physical_constraints(spec.cls, spec.N);
  auto tr = [](const Matrix& m) { return m.trace(); };
  switch (spec.cls) {
    case SymmetryClass::A: return v * v / double(N) * tr(A * B);
    case SymmetryClass::AI:
      return v * v / (2.0 * N) * (tr(A * B) + tr(A * B.transpose()));
    case SymmetryClass::AII: {
      const Matrix& T = cs[0].mat;
      return v * v / (2.0 * N) * (tr(A * B) + tr(A * T * B.transpose() * T.inverse()));
    }
    case SymmetryClass::AIII: {
      const Matrix& P = cs[0].mat;
      return v * v / (2.0 * N) * (tr(A * B) - tr(A * P * B * P.inverse()));
    }
    case SymmetryClass::BDI: {
      const Matrix& P = cs[0].mat;
      Matrix Bs = B + B.transpose();
      return v * v / (4.0 * N) * (tr(A * Bs) - tr(A * P * Bs * P.inverse()));
    }
    case SymmetryClass::CII: {
      const Matrix& P = cs[0].mat;
      const Matrix& T = cs[1].mat;
      Matrix left = A - P * A * P.inverse();
      Matrix right = B - T * B.transpose() * T.inverse();
      return v * v / (4.0 * N) * tr(left * right);
    }
    case SymmetryClass::C:
    case SymmetryClass::D: {
      const Matrix& C = cs[0].mat;
      return v * v / (2.0 * N) * (tr(A * B) - tr(A * C * B.transpose() * C.inverse()));
    }
    case SymmetryClass::CI: {
      const Matrix& C = cs[0].mat;
      Matrix Bs = B + B.transpose();
      return v * v / (4.0 * N) * (tr(A * Bs) - tr(A * C * Bs * C.inverse()));
    }
    case SymmetryClass::DIII: {
      const Matrix& C = cs[0].mat;
      const Matrix& T = cs[1].mat;
      Matrix CT = C * T;
      return v * v / (4.0 * N) *
             (tr(A * B) - tr(A * C * B.transpose() * C.inverse()) +
              tr(A * T * B.transpose() * T.inverse()) - tr(A * CT * B * CT.inverse()));
    }
  }
  throw unsupported_error("second_moment_exact: unknown class");
}

MomentEstimate second_moment_mc(const EnsembleSpec& spec, const Matrix& A, const Matrix& B,
                                int nsamples, uint64_t seed, int workers) {
  if (nsamples < 2) throw unsupported_error("second_moment_mc: nsamples >= 2 required");
  if (workers <= 0) workers = int(std::thread::hardware_concurrency());
  if (workers <= 0) workers = 1;
  workers = std::min(workers, nsamples);

  std::vector<rng::Accumulator> sr(workers), si(workers), sr2(workers);
  auto body = [&](int w) {
    int lo = int(int64_t(nsamples) * w / workers);
    int hi = int(int64_t(nsamples) * (w + 1) / workers);
    for (int k = lo; k < hi; ++k) {
      GaussianStream g(seed, uint64_t(k));
      Matrix H = sample_h(spec, g);
      cplx x = (A * H).trace() * (B * H).trace();
      sr[w].add(x.real());
      si[w].add(x.imag());
      sr2[w].add(x.real() * x.real() + x.imag() * x.imag());
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> ts;
    for (int w = 0; w < workers; ++w) ts.emplace_back(body, w);
    for (auto& t : ts) t.join();
  }
  double mr = 0, mi = 0, m2 = 0;
  for (int w = 0; w < workers; ++w) {
    mr += sr[w].value();
    mi += si[w].value();
    m2 += sr2[w].value();
  }
  mr /= nsamples;
  mi /= nsamples;
  m2 /= nsamples;
  double var = std::max(0.0, m2 - (mr * mr + mi * mi));
  MomentEstimate out;
  out.estimate = cplx(mr, mi);
  out.std_error = std::sqrt(var / nsamples);
  return out;
}

std::vector<double> eigenvalues(const Matrix& H) {
  double herm = (H - H.adjoint()).norm();
  if (herm > 1e-10 * std::max(1.0, H.norm()))
    throw unsupported_error("eigenvalues: input is not self-adjoint");
  return linalg::hermitian_eigenvalues(0.5 * (H + H.adjoint()));
}

namespace {

// Conditions cutting the auxiliary symmetry algebra out of gl(w|w).
struct AuxCondition {
  enum class Kind { MinusGammaTranspose, PiSimilarity } kind;
  Matrix b, f;  // B- and F-block structure matrices
};

std::vector<AuxCondition> aux_conditions(const ClassStructure& s) {
  std::vector<AuxCondition> conds;
  using K = AuxCondition::Kind;
  switch (s.cls) {
    case SymmetryClass::A: break;
    case SymmetryClass::C:
    case SymmetryClass::D:
      conds.push_back({K::MinusGammaTranspose, s.gamma_b, s.gamma_f});
      break;
    case SymmetryClass::CI:
    case SymmetryClass::DIII:
      conds.push_back({K::MinusGammaTranspose, s.gamma_b, s.gamma_f});
      conds.push_back({K::MinusGammaTranspose, s.tau_b, s.tau_f});
      break;
    case SymmetryClass::AIII:
      conds.push_back({K::PiSimilarity, s.pi, s.pi});
      break;
    case SymmetryClass::BDI:
    case SymmetryClass::CII:
      conds.push_back({K::PiSimilarity, s.pi, s.pi});
      conds.push_back({K::MinusGammaTranspose, s.tau_b, s.tau_f});
      break;
    case SymmetryClass::AI:
    case SymmetryClass::AII:
      conds.push_back({K::MinusGammaTranspose, s.tau_b, s.tau_f});
      break;
  }
  return conds;
}

int nullity(const Eigen::MatrixXcd& M) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  if (svd.singularValues().size() == 0) return int(M.cols());
  double tol = 1e-9 * std::max(1.0, svd.singularValues()(0));
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++rank;
  return int(M.cols()) - rank;
}

}  // namespace

std::pair<int, int> normalizer_dims(SymmetryClass cls, int n) {
  ClassStructure s = class_structure(cls, 1, n);
  int w = s.w_dim;
  auto conds = aux_conditions(s);
  if (conds.empty()) return {2 * w * w, 2 * w * w};

  // even sector: variables (X_BB, X_FF)
  auto even_residual = [&](const Matrix& xbb, const Matrix& xff, const AuxCondition& c,
                           Matrix& rb, Matrix& rf) {
    if (c.kind == AuxCondition::Kind::MinusGammaTranspose) {
      rb = xbb + c.b * xbb.transpose() * c.b.inverse();
      rf = xff + c.f * xff.transpose() * c.f.inverse();
    } else {
      rb = xbb - c.b * xbb * c.b.inverse();
      rf = xff - c.f * xff * c.f.inverse();
    }
  };
  // odd sector: variables (X_BF, X_FB); supertransposition maps
  // (X^T)_BF = +X_FB^T and (X^T)_FB = -X_BF^T
  auto odd_residual = [&](const Matrix& xbf, const Matrix& xfb, const AuxCondition& c,
                          Matrix& rbf, Matrix& rfb) {
    if (c.kind == AuxCondition::Kind::MinusGammaTranspose) {
      rbf = xbf + c.b * xfb.transpose() * c.f.inverse();
      rfb = xfb - c.f * xbf.transpose() * c.b.inverse();
    } else {
      rbf = xbf - c.b * xbf * c.f.inverse();
      rfb = xfb - c.f * xfb * c.b.inverse();
    }
  };

  int nvar = 2 * w * w;
  Eigen::MatrixXcd Me(int(conds.size()) * nvar, nvar), Mo(int(conds.size()) * nvar, nvar);
  for (int blk = 0; blk < 2; ++blk) {
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < w; ++j) {
        int col = blk * w * w + i * w + j;
        Matrix e = Matrix::Zero(w, w);
        e(i, j) = 1.0;
        Matrix zero = Matrix::Zero(w, w);
        int row = 0;
        for (const auto& c : conds) {
          Matrix rb, rf;
          even_residual(blk == 0 ? e : zero, blk == 0 ? zero : e, c, rb, rf);
          for (int a = 0; a < w; ++a)
            for (int b2 = 0; b2 < w; ++b2) {
              Me(row + a * w + b2, col) = rb(a, b2);
              Me(row + w * w + a * w + b2, col) = rf(a, b2);
            }
          Matrix rbf, rfb;
          odd_residual(blk == 0 ? e : zero, blk == 0 ? zero : e, c, rbf, rfb);
          for (int a = 0; a < w; ++a)
            for (int b2 = 0; b2 < w; ++b2) {
              Mo(row + a * w + b2, col) = rbf(a, b2);
              Mo(row + w * w + a * w + b2, col) = rfb(a, b2);
            }
          row += nvar;
        }
      }
  }
  return {nullity(Me), nullity(Mo)};
}

std::pair<int, int> normalizer_dims_expected(SymmetryClass cls, int n) {
  switch (cls) {
    case SymmetryClass::A: return {2 * n * n, 2 * n * n};
    case SymmetryClass::C:
    case SymmetryClass::D:
    case SymmetryClass::AI:
    case SymmetryClass::AII: return {4 * n * n, 4 * n * n};
    case SymmetryClass::CI:
    case SymmetryClass::DIII: return {8 * n * n, 8 * n * n};
    case SymmetryClass::AIII: return {4 * n * n, 4 * n * n};
    case SymmetryClass::BDI:
    case SymmetryClass::CII: return {8 * n * n, 8 * n * n};
  }
  return {0, 0};
}

const char* normalizer_name(SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::A: return "gl(n|n)";
    case SymmetryClass::C:
    case SymmetryClass::D:
    case SymmetryClass::AI:
    case SymmetryClass::AII: return "osp(2n|2n)";
    case SymmetryClass::CI:
    case SymmetryClass::DIII: return "osp(2n|2n) + osp(2n|2n)";
    case SymmetryClass::AIII: return "gl(n|n) + gl(n|n)";
    case SymmetryClass::BDI:
    case SymmetryClass::CII: return "gl(2n|2n)";
  }
  return "?";
}

}  // namespace tenfold::ensembles
