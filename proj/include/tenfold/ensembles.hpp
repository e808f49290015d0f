#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "tenfold/rng.hpp"

namespace tenfold::ensembles {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

enum class SymmetryClass { A, AI, AII, AIII, BDI, CII, C, CI, D, DIII };

inline constexpr std::array<SymmetryClass, 10> kAllClasses = {
    SymmetryClass::A,   SymmetryClass::AI,  SymmetryClass::AII, SymmetryClass::AIII,
    SymmetryClass::BDI, SymmetryClass::CII, SymmetryClass::C,   SymmetryClass::CI,
    SymmetryClass::D,   SymmetryClass::DIII};

const char* label(SymmetryClass cls);
std::optional<SymmetryClass> parse_class(std::string_view s);

/// Side of the sampled matrix: N, 2N or 4N depending on the class layout.
int physical_dim(SymmetryClass cls, int N);

/// True for the seven classes whose spectra are symmetric about zero.
bool has_particle_hole(SymmetryClass cls);

/// 2 for D and DIII (two dominant saddle orbits), otherwise 1.
int saddle_count(SymmetryClass cls);

struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnsembleSpec {
  SymmetryClass cls = SymmetryClass::A;
  int N = 1;
  double v = 1.0;
};

/// One linear condition H = sign * M H^T M^{-1} (Transpose) or
/// H = sign * M H M^{-1} (Similarity), on top of hermiticity.
struct Constraint {
  enum class Kind { Transpose, Similarity };
  Kind kind;
  double sign;
  Matrix mat;
  std::string name;
  double residual(const Matrix& H) const;
};

/// Physical constraint set plus the auxiliary-space structure matrices.
/// Structure matrices that do not occur for a class are left empty.
struct ClassStructure {
  SymmetryClass cls;
  int N = 1, n = 1;
  std::vector<Constraint> physical;
  int tangent_dim = 0;          // real dimension, from the numerical nullspace
  int tangent_dim_formula = 0;  // classical closed form

  // auxiliary space W = C^{w|w}; block-diagonal structure matrices act on
  // the w-dimensional B and F halves separately
  int w_dim = 0;
  Matrix gamma_b, gamma_f, tau_b, tau_f, pi, beta;
  double c_exponent = 0.0;  // gaussian-identity exponent where stated (1, 1/2, 1/4)
  std::string q_condition;  // human-readable auxiliary linear condition

  /// Residuals of the defining identities of the structure matrices
  /// (gamma = +-gamma^T sigma, gamma^2 = +-sigma = tau^2, ...).
  double structure_residual() const;
};

/// Constraint matrices and auxiliary structure for (cls, N, n).
/// Chiral classes are built at p = q; asking for p != q is rejected where
/// the interface allows expressing it.
ClassStructure class_structure(SymmetryClass cls, int N, int n);

/// Gaussian sample distributed as exp(-N Tr H^2 / 2 v^2) restricted to the
/// class's constraint space (independent gaussians on an orthogonal basis,
/// component variances induced by the quadratic form).
Matrix sample_h(const EnsembleSpec& spec, rng::GaussianStream& rng);

/// Max Frobenius residual over hermiticity plus the class constraints.
double symmetry_residual(const EnsembleSpec& spec, const Matrix& H);

/// The printed closed-form second moment E[Tr(AH) Tr(BH)].
cplx second_moment_exact(const EnsembleSpec& spec, const Matrix& A, const Matrix& B);

struct MomentEstimate {
  cplx estimate;
  double std_error;
};
MomentEstimate second_moment_mc(const EnsembleSpec& spec, const Matrix& A, const Matrix& B,
                                int nsamples, uint64_t seed, int workers = 0);

/// Ascending real spectrum; rejects visibly non-hermitian input.
std::vector<double> eigenvalues(const Matrix& H);

/// Even/odd complex dimensions of the auxiliary symmetry algebra
/// {X in gl(w|w) : class conditions}, by numerical rank.
std::pair<int, int> normalizer_dims(SymmetryClass cls, int n);
/// The same dimensions from the named superalgebra (gl(n|n), osp(2n|2n), ...).
std::pair<int, int> normalizer_dims_expected(SymmetryClass cls, int n);
const char* normalizer_name(SymmetryClass cls);

}  // namespace tenfold::ensembles
