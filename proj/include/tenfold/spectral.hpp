#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "tenfold/ensembles.hpp"

namespace tenfold::spectral {

using cplx = std::complex<double>;
using ensembles::EnsembleSpec;
using ensembles::SymmetryClass;

/// Semicircle density (N / pi v) sqrt(1 - (E/2v)^2) on |E| <= 2v, else 0.
double semicircle_density(double E, int N, double v);

/// Source parameters of the spectral-determinant ratio generating
/// function: Z = E[ prod_i Det(H - beta_i) / Det(H - alpha_i) ].
/// Particle-hole classes require Im alpha_i < 0; for the Wigner-Dyson
/// classes the alphas are ordered with the n_A lower-half entries first.
struct SourceMatrix {
  std::vector<cplx> alphas;
  std::vector<cplx> betas;
  int n_lower(SymmetryClass cls) const;  // n_A
  void validate(SymmetryClass cls) const;
};

struct source_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpectralHistogram {
  std::vector<double> edges;    // size bins+1
  std::vector<double> counts;   // eigenvalues per bin, total
  std::vector<double> density;  // per matrix, per unit energy
  std::vector<double> std_err;  // of density
  int nsamples = 0;
  EnsembleSpec spec;
};

/// Eigenvalue histogram over nsamples draws, normalized to the density of
/// levels per matrix.
SpectralHistogram dos_estimate(const EnsembleSpec& spec, int nsamples, int bins,
                               uint64_t seed, double emax = 0.0, int workers = 0);

struct ZEstimate {
  cplx value;
  double std_error;  // max of the component standard errors
  int nsamples = 0;
};

/// Monte Carlo estimate of the generating function.
ZEstimate z_gen_mc(const EnsembleSpec& spec, const SourceMatrix& src, int nsamples,
                   uint64_t seed, int workers = 0);

/// Deterministic quadrature of the N=1 ensemble integral; classes A
/// (1 real dimension) and C (3 real dimensions).
cplx z_gen_quadrature(const EnsembleSpec& spec, const SourceMatrix& src,
                      double abs_tol = 1e-9);

/// Determinant ratio from an eigenvalue list.
cplx det_ratio(const std::vector<double>& eigs, const SourceMatrix& src);

}  // namespace tenfold::spectral
