#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pslab/potential.hpp"

namespace pslab {

// The 2k x 2k letter-transition matrix A(delta)[next][cur]:
// exp(-delta w(next)) when next != inv(cur), else 0.  Its Perron root is
// strictly decreasing in delta, and the critical exponent is the unique
// delta with spectral radius 1.
class TransferMatrix {
 public:
  TransferMatrix(const WeightedPotential& p, double delta);

  unsigned dim() const noexcept { return n_; }
  double entry(Letter next, Letter cur) const {
    return (next == inverse_letter(cur)) ? 0.0 : column_[next];
  }

  // Power iteration; converges fast (the matrix is primitive for k >= 2).
  double spectral_radius(double tol = 1e-14) const;

  // The positive solution of h_s = sum_{s' != inv(s)} e^{-delta w(s')} h_{s'},
  // normalized to max entry 1.  Throws PerronFailure if iteration stalls.
  std::vector<double> perron_profile(double tol = 1e-14) const;

 private:
  unsigned n_;
  std::vector<double> column_;  // e^{-delta w(s)} per letter
};

struct SpectralOptions {
  double tol = 1e-12;
  std::optional<std::pair<double, double>> bracket;  // default [1e-6, 50/min_w]
};

// The unique delta with rho(A(delta)) = 1, by bisection.
double critical_exponent_spectral(const WeightedPotential& p, double tol = 1e-12);
double critical_exponent_spectral(const WeightedPotential& p, const SpectralOptions& options);

struct FitResult {
  double delta = 0.0;
  double residual = 0.0;  // rms residual of the least-squares line
  bool undetermined = false;
  std::vector<std::pair<double, std::size_t>> counts;  // (r, N(r)) samples
};

// Least-squares slope of log N(r) against r over r in [R/2, R].
FitResult critical_exponent_fit(const WeightedPotential& p, double R, unsigned letter_limit = 0);

enum class SeriesVerdict { Divergent, Convergent, Undetermined };

struct DivergenceReport {
  SeriesVerdict verdict = SeriesVerdict::Undetermined;
  double s = 0.0;
  double slope = 0.0;              // least-squares slope of partial sums in R
  double relative_residual = 0.0;  // rms residual / mean partial sum
  std::vector<std::pair<double, double>> partials;  // (R, partial sum)
};

// Linear growth of the partial sums at s (default: the critical exponent)
// signals divergence; flattening signals convergence.  A numerical check,
// not a proof.
DivergenceReport divergence_verdict(const WeightedPotential& p,
                                    std::optional<double> s = std::nullopt,
                                    unsigned letter_limit = 0);

struct ExponentReport {
  double delta_spectral = 0.0;
  double delta_fit = 0.0;
  double fit_residual = 0.0;
  SeriesVerdict verdict = SeriesVerdict::Undetermined;
};

ExponentReport exponent_report(const WeightedPotential& p, double R);

const char* to_string(SeriesVerdict v);

}  // namespace pslab
