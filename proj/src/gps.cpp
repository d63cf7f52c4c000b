#include "pslab/gps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pslab/ball.hpp"
#include "pslab/exponent.hpp"

namespace pslab {

double BmsMeasure::mass_pair(const Cylinder& a, const Cylinder& b) const {
  if (a.is_all() || b.is_all() || is_prefix_of(a.stem(), b.stem()) ||
      is_prefix_of(b.stem(), a.stem()))
    throw NonConstantG("BmsMeasure::mass_pair: cylinders must be disjoint");
  // On disjoint cylinders the confluence of (x, y) is pinned to the stems'
  // meet, so the Gromov product is constant on A x B.
  const ReducedWord c = confluence(a.stem(), b.stem());
  const double g = potential.magnitude(invert(c)) + potential.magnitude(c);
  return std::exp(delta * g) * mu_bar.mass(a) * mu.mass(b);
}

BmsMeasure bms_measure(const WeightedPotential& p, double tol) {
  BoundaryMeasure mu = markov_ps(p, tol);
  BoundaryMeasure mu_bar = markov_ps(p.dual(), tol);
  const double delta = mu.delta();
  return BmsMeasure{p, std::move(mu_bar), std::move(mu), delta};
}

double bms_invariance_defect(const BmsMeasure& bms, const ReducedWord& g, std::size_t depth) {
  if (depth < g.size() + 1)
    throw DepthTooShallow("bms_invariance_defect: depth must exceed |g|");
  const Alphabet& alphabet = bms.potential.alphabet();
  const auto stems = all_stems_of_depth(alphabet, depth);
  double worst = 0.0;
  for (const auto& a : stems) {
    const ReducedWord ga = multiply(g, a);
    for (const auto& b : stems) {
      if (a == b) continue;
      const double before = bms.mass_pair(Cylinder(a), Cylinder(b));
      const double after = bms.mass_pair(Cylinder(ga), Cylinder(multiply(g, b)));
      worst = std::max(worst, std::abs(after / before - 1.0));
    }
  }
  return worst;
}

double duality_gap(const WeightedPotential& p, double R) {
  const WeightedPotential dual = p.dual();
  double worst = 0.0;
  for_each_in_ball(p, R, [&](std::span<const Letter> letters, double mag) {
    const ReducedWord g(std::vector<Letter>(letters.begin(), letters.end()));
    worst = std::max(worst, std::abs(mag - dual.magnitude(invert(g))));
  });
  return worst;
}

RigidityReport rigidity_statistic(const WeightedPotential& p0, const WeightedPotential& p1,
                                  double r_min, double r_max, unsigned samples) {
  RigidityReport report;
  report.delta0 = critical_exponent_spectral(p0);
  report.delta1 = critical_exponent_spectral(p1);

  std::vector<double> rs(samples), ds(samples, 0.0);
  for (unsigned i = 0; i < samples; ++i)
    rs[i] = r_min + (r_max - r_min) * static_cast<double>(i) / (samples - 1);

  for_each_in_ball(p0, r_max, [&](std::span<const Letter> letters, double mag0) {
    const ReducedWord g(std::vector<Letter>(letters.begin(), letters.end()));
    const double diff = std::abs(report.delta0 * mag0 - report.delta1 * p1.magnitude(g));
    for (unsigned i = 0; i < samples; ++i)
      if (mag0 <= rs[i]) ds[i] = std::max(ds[i], diff);
  });
  for (unsigned i = 0; i < samples; ++i) report.grid.emplace_back(rs[i], ds[i]);

  // Least-squares slope of D against R.
  const double mr = std::accumulate(rs.begin(), rs.end(), 0.0) / samples;
  const double md = std::accumulate(ds.begin(), ds.end(), 0.0) / samples;
  double srr = 0.0, srd = 0.0, sq = 0.0;
  for (unsigned i = 0; i < samples; ++i) {
    srr += (rs[i] - mr) * (rs[i] - mr);
    srd += (rs[i] - mr) * (ds[i] - md);
  }
  report.slope = srd / srr;
  for (unsigned i = 0; i < samples; ++i) {
    const double r = ds[i] - (md + report.slope * (rs[i] - mr));
    sq += r * r;
  }
  const double scale = std::max(md, 1e-30);
  report.relative_residual = std::sqrt(sq / samples) / scale;

  const bool flat_top_half = ds.back() - ds[samples / 2] <= 1e-9 * std::max(1.0, ds.back());
  const bool linear = report.slope > 0.01 * std::min(report.delta0, report.delta1) &&
                      report.relative_residual < 0.10;
  report.verdict = (linear && !flat_top_half) ? GrowthVerdict::Linear : GrowthVerdict::Bounded;
  return report;
}

WeightedPotential normalize_to_unit_exponent(const WeightedPotential& p) {
  const double delta = critical_exponent_spectral(p);
  std::vector<double> weights(p.weights());
  for (double& w : weights) w *= delta;
  return WeightedPotential(p.alphabet(), std::move(weights));
}

ConvexityReport convexity_experiment(const WeightedPotential& p0, const WeightedPotential& p1,
                                     double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("convexity_experiment: lambda must lie in (0, 1)");
  const WeightedPotential q0 = normalize_to_unit_exponent(p0);
  const WeightedPotential q1 = normalize_to_unit_exponent(p1);
  std::vector<double> weights(q0.weights().size());
  for (std::size_t l = 0; l < weights.size(); ++l)
    weights[l] = lambda * q0.weights()[l] + (1.0 - lambda) * q1.weights()[l];
  WeightedPotential combined(p0.alphabet(), std::move(weights));

  ConvexityReport report{lambda, critical_exponent_spectral(combined), ConvexityVerdict::Equal,
                         combined};
  report.verdict =
      (report.delta_lambda < 1.0 - 1e-6) ? ConvexityVerdict::Strict : ConvexityVerdict::Equal;
  return report;
}

EntropyGapReport entropy_gap_experiment(unsigned ambient_k, unsigned sub_k) {
  if (!(sub_k >= 2 && sub_k < ambient_k))
    throw std::invalid_argument(
        "entropy_gap_experiment: need 2 <= sub_k < ambient_k for a strict free factor");
  const Alphabet ambient(ambient_k);
  const WeightedPotential unit = WeightedPotential::uniform(ambient);

  EntropyGapReport report;
  report.delta_ambient = critical_exponent_spectral(unit);
  // The subgroup is the free factor on the first sub_k generators; its
  // magnitudes are the restrictions of the ambient ones, so its exponent is
  // the Perron solve over the restricted alphabet.
  const WeightedPotential sub_unit = WeightedPotential::uniform(Alphabet(sub_k));
  report.delta_sub = critical_exponent_spectral(sub_unit);

  const DivergenceReport div = divergence_verdict(unit, report.delta_sub, 2 * sub_k);
  report.subgroup_verdict = div.verdict;
  report.subgroup_slope = div.slope;
  return report;
}

const char* to_string(GrowthVerdict v) {
  return v == GrowthVerdict::Bounded ? "BOUNDED" : "LINEAR";
}

const char* to_string(ConvexityVerdict v) {
  return v == ConvexityVerdict::Strict ? "STRICT" : "EQUAL";
}

}  // namespace pslab
