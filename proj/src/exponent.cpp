#include "pslab/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pslab/ball.hpp"
#include "pslab/errors.hpp"

namespace pslab {
namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
};

LineFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    sq += r * r;
  }
  fit.rms_residual = std::sqrt(sq / n);
  return fit;
}

}  // namespace

TransferMatrix::TransferMatrix(const WeightedPotential& p, double delta)
    : n_(p.alphabet().letter_count()), column_(n_) {
  for (Letter l = 0; l < n_; ++l) column_[l] = std::exp(-delta * p.weight(l));
}

double TransferMatrix::spectral_radius(double tol) const {
  std::vector<double> v(n_, 1.0), next(n_);
  double rho = 0.0;
  for (unsigned iter = 0; iter < 100000; ++iter) {
    double total = std::accumulate(v.begin(), v.end(), 0.0);
    for (Letter s = 0; s < n_; ++s)
      next[s] = column_[s] * (total - v[inverse_letter(s)]);
    double norm = 0.0;
    for (double x : next) norm = std::max(norm, x);
    for (double& x : next) x /= norm;
    if (std::abs(norm - rho) < tol * std::max(1.0, rho)) return norm;
    rho = norm;
    v.swap(next);
  }
  throw PerronFailure("TransferMatrix::spectral_radius: power iteration stalled");
}

std::vector<double> TransferMatrix::perron_profile(double tol) const {
  // h_s = sum_{s' != inv(s)} e^{-delta w(s')} h_{s'}: iterate and renormalize.
  std::vector<double> h(n_, 1.0), next(n_);
  for (unsigned iter = 0; iter < 100000; ++iter) {
    double weighted_total = 0.0;
    for (Letter t = 0; t < n_; ++t) weighted_total += column_[t] * h[t];
    for (Letter s = 0; s < n_; ++s) {
      const Letter inv = inverse_letter(s);
      next[s] = weighted_total - column_[inv] * h[inv];
    }
    double norm = 0.0;
    for (double x : next) norm = std::max(norm, x);
    double change = 0.0;
    for (Letter s = 0; s < n_; ++s) {
      next[s] /= norm;
      change = std::max(change, std::abs(next[s] - h[s]));
    }
    h.swap(next);
    if (change < tol) {
      for (double x : h)
        if (!(x > 0.0)) throw PerronFailure("perron_profile: nonpositive entry");
      return h;
    }
  }
  throw PerronFailure("TransferMatrix::perron_profile: iteration stalled");
}

double critical_exponent_spectral(const WeightedPotential& p, double tol) {
  return critical_exponent_spectral(p, SpectralOptions{tol, std::nullopt});
}

double critical_exponent_spectral(const WeightedPotential& p, const SpectralOptions& options) {
  double lo = 1e-6;
  double hi = 50.0 / p.min_weight();
  if (options.bracket) {
    lo = options.bracket->first;
    hi = options.bracket->second;
  }
  const auto rho = [&](double delta) { return TransferMatrix(p, delta).spectral_radius(); };
  if (!(rho(lo) > 1.0 && rho(hi) < 1.0))
    throw BracketFailure("critical_exponent_spectral: bracket does not straddle rho = 1");
  // rho is strictly decreasing and continuous in delta; plain bisection.
  while (hi - lo > options.tol * std::max(1.0, lo)) {
    const double mid = 0.5 * (lo + hi);
    if (rho(mid) > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

FitResult critical_exponent_fit(const WeightedPotential& p, double R, unsigned letter_limit) {
  FitResult result;
  std::vector<double> mags;
  for_each_in_ball(p, R, [&](std::span<const Letter>, double mag) { mags.push_back(mag); },
                   letter_limit);
  std::sort(mags.begin(), mags.end());
  if (mags.size() < 1000) {
    result.undetermined = true;
    return result;
  }

  // N(r) is a staircase; sample log N at the attained jump magnitudes inside
  // [R/2, R] (an off-grid sample would bias the slope low), thinned to a
  // manageable count.
  std::vector<double> jumps;
  for (std::size_t i = 0; i < mags.size(); ++i) {
    if (mags[i] < R / 2.0) continue;
    if (i + 1 < mags.size() && mags[i + 1] - mags[i] < 1e-9) continue;  // same sphere
    if (jumps.empty() || mags[i] - jumps.back() > 1e-9) jumps.push_back(mags[i]);
  }
  if (jumps.size() < 2) {
    result.undetermined = true;
    return result;
  }
  std::vector<double> rs, logs;
  const std::size_t stride = std::max<std::size_t>(1, jumps.size() / 64);
  for (std::size_t j = 0; j < jumps.size(); j += stride) {
    const double r = jumps[j];
    const auto count = static_cast<std::size_t>(
        std::upper_bound(mags.begin(), mags.end(), r + 1e-12) - mags.begin());
    rs.push_back(r);
    logs.push_back(std::log(static_cast<double>(count)));
    result.counts.emplace_back(r, count);
  }
  const LineFit fit = least_squares(rs, logs);
  result.delta = fit.slope;
  result.residual = fit.rms_residual;
  return result;
}

DivergenceReport divergence_verdict(const WeightedPotential& p, std::optional<double> s,
                                    unsigned letter_limit) {
  DivergenceReport report;
  report.s = s ? *s : critical_exponent_spectral(p);

  double mean_w = 0.0;
  for (double w : p.weights()) mean_w += w;
  mean_w /= p.weights().size();

  // Partial sums along the word-length filtration, computed exactly as
  // sphere sums of the transfer matrix at s (direct enumeration is hopeless
  // at these radii).  The sphere of length n contributes 1^T A(s)^{n-1} v.
  const unsigned letters = (letter_limit == 0) ? p.alphabet().letter_count() : letter_limit;
  constexpr unsigned kMaxLength = 30;
  constexpr unsigned kMinLength = 10;
  std::vector<double> sphere(letters);
  for (Letter l = 0; l < letters; ++l) sphere[l] = std::exp(-report.s * p.weight(l));

  std::vector<double> rs, sums;
  double partial = 1.0;
  for (unsigned n = 1; n <= kMaxLength; ++n) {
    double total = 0.0;
    for (double x : sphere) total += x;
    partial += total;
    if (n >= kMinLength) {
      rs.push_back(mean_w * n);
      sums.push_back(partial);
    }
    std::vector<double> next(letters);
    for (Letter l = 0; l < letters; ++l)
      next[l] = std::exp(-report.s * p.weight(l)) * (total - sphere[inverse_letter(l)]);
    sphere.swap(next);
  }
  const std::size_t kSamples = rs.size();

  for (unsigned i = 0; i < kSamples; ++i) report.partials.emplace_back(rs[i], sums[i]);

  const LineFit fit = least_squares(rs, sums);
  const double mean_sum = std::accumulate(sums.begin(), sums.end(), 0.0) / kSamples;
  report.slope = fit.slope;
  report.relative_residual = fit.rms_residual / mean_sum;

  // Linear growth with a clean fit: divergent.  Flat tail: convergent.
  const double tail_increment = sums.back() - sums[kSamples - 3];
  if (fit.slope * (rs.back() - rs.front()) > 0.1 * mean_sum &&
      report.relative_residual < 0.10) {
    report.verdict = SeriesVerdict::Divergent;
  } else if (tail_increment < 1e-3 * sums.back()) {
    report.verdict = SeriesVerdict::Convergent;
  } else {
    report.verdict = SeriesVerdict::Undetermined;
  }
  return report;
}

ExponentReport exponent_report(const WeightedPotential& p, double R) {
  ExponentReport report;
  report.delta_spectral = critical_exponent_spectral(p);
  const FitResult fit = critical_exponent_fit(p, R);
  report.delta_fit = fit.delta;
  report.fit_residual = fit.residual;
  report.verdict =
      fit.undetermined ? SeriesVerdict::Undetermined : divergence_verdict(p).verdict;
  return report;
}

const char* to_string(SeriesVerdict v) {
  switch (v) {
    case SeriesVerdict::Divergent: return "DIVERGENT";
    case SeriesVerdict::Convergent: return "CONVERGENT";
    case SeriesVerdict::Undetermined: return "UNDETERMINED";
  }
  return "UNDETERMINED";
}

}  // namespace pslab
