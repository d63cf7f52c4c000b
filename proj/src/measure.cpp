#include "pslab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pslab/ball.hpp"
#include "pslab/errors.hpp"
#include "pslab/exponent.hpp"
#include "pslab/parallel.hpp"

#include "json.hpp"

namespace pslab {

BoundaryMeasure::BoundaryMeasure(const Alphabet& alphabet, double delta,
                                 std::vector<double> initial,
                                 std::vector<std::vector<double>> transition)
    : alphabet_(alphabet),
      delta_(delta),
      initial_(std::move(initial)),
      transition_(std::move(transition)) {
  const unsigned n = alphabet_.letter_count();
  if (initial_.size() != n || transition_.size() != n)
    throw std::invalid_argument("BoundaryMeasure: dimension mismatch");
  double total = 0.0;
  for (double m : initial_) total += m;
  if (std::abs(total - 1.0) > 1e-10)
    throw std::invalid_argument("BoundaryMeasure: initial masses must sum to 1");
  for (Letter s = 0; s < n; ++s) {
    if (transition_[s].size() != n)
      throw std::invalid_argument("BoundaryMeasure: transition row size");
    if (transition_[s][inverse_letter(s)] != 0.0)
      throw std::invalid_argument("BoundaryMeasure: backtracking transition must vanish");
    double row = 0.0;
    for (double x : transition_[s]) row += x;
    if (std::abs(row - 1.0) > 1e-10)
      throw std::invalid_argument("BoundaryMeasure: transition rows must sum to 1");
  }
}

double BoundaryMeasure::mass(const Cylinder& c) const {
  if (c.is_all()) return 1.0;
  const auto& w = c.stem();
  double m = initial_[w[0]];
  for (std::size_t i = 1; i < w.size(); ++i) m *= transition_[w[i - 1]][w[i]];
  return m;
}

double BoundaryMeasure::mass(const CylinderSet& s) const {
  double m = 0.0;
  for (const auto& stem : s.stems()) m += mass(Cylinder(stem));
  return m;
}

std::string BoundaryMeasure::to_json() const {
  nlohmann::json j;
  j["delta"] = delta_;
  j["initial"] = initial_;
  j["transition"] = transition_;
  return j.dump(2);
}

BoundaryMeasure BoundaryMeasure::from_json(const Alphabet& alphabet, const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  return BoundaryMeasure(alphabet, j.at("delta").get<double>(),
                         j.at("initial").get<std::vector<double>>(),
                         j.at("transition").get<std::vector<std::vector<double>>>());
}

BoundaryMeasure markov_ps(const WeightedPotential& p, double tol) {
  const Alphabet& alphabet = p.alphabet();
  const unsigned n = alphabet.letter_count();
  const double delta = critical_exponent_spectral(p, tol);
  const TransferMatrix A(p, delta);
  const std::vector<double> h = A.perron_profile();

  std::vector<double> edge(n);
  for (Letter s = 0; s < n; ++s) edge[s] = std::exp(-delta * p.weight(s)) * h[s];

  std::vector<std::vector<double>> transition(n, std::vector<double>(n, 0.0));
  for (Letter s = 0; s < n; ++s) {
    // Normalize the row exactly; h solves the profile equation only up to
    // the spectral tolerance.
    double row = 0.0;
    for (Letter t = 0; t < n; ++t)
      if (t != inverse_letter(s)) row += edge[t];
    for (Letter t = 0; t < n; ++t)
      if (t != inverse_letter(s)) transition[s][t] = edge[t] / row;
  }
  double z = 0.0;
  for (Letter s = 0; s < n; ++s) z += edge[s];
  std::vector<double> initial(n);
  for (Letter s = 0; s < n; ++s) initial[s] = edge[s] / z;

  return BoundaryMeasure(alphabet, delta, std::move(initial), std::move(transition));
}

double EmpiricalMeasure::mass(const ReducedWord& stem) const {
  const auto it = std::lower_bound(stems.begin(), stems.end(), stem, lex_less);
  if (it == stems.end() || !(*it == stem)) return 0.0;
  return masses[static_cast<std::size_t>(it - stems.begin())];
}

std::string EmpiricalMeasure::to_json(const Alphabet& alphabet) const {
  nlohmann::json j;
  j["depth"] = depth;
  j["s"] = s;
  j["R"] = R;
  j["shallow_fraction"] = shallow_fraction;
  nlohmann::json m = nlohmann::json::object();
  for (std::size_t i = 0; i < stems.size(); ++i) m[to_string(alphabet, stems[i])] = masses[i];
  j["masses"] = m;
  return j.dump(2);
}

EmpiricalMeasure patterson_construct(const WeightedPotential& p, double s, double R,
                                     std::size_t depth, unsigned workers) {
  const Alphabet& alphabet = p.alphabet();
  const double delta = critical_exponent_spectral(p);
  if (!(s > delta)) throw SubcriticalS("patterson_construct: s must exceed the critical exponent");
  if (depth == 0) throw std::invalid_argument("patterson_construct: depth must be positive");

  EmpiricalMeasure out;
  out.depth = depth;
  out.s = s;
  out.R = R;
  out.stems = all_stems_of_depth(alphabet, depth);
  std::sort(out.stems.begin(), out.stems.end(), lex_less);

  // Index of a depth-d stem in lex order, computable letter by letter.
  const unsigned n = alphabet.letter_count();
  const auto stem_index = [&](std::span<const Letter> w) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < out.depth; ++i) {
      std::size_t pos = 0;
      if (i == 0) {
        pos = w[0];
        idx = pos;
      } else {
        const Letter banned = inverse_letter(w[i - 1]);
        pos = w[i] - (w[i] > banned ? 1 : 0);
        idx = idx * (n - 1) + pos;
      }
    }
    return idx;
  };

  // One enumeration block per first letter; blocks merge in letter order so
  // the float sums are identical for every worker count.
  struct BlockSums {
    std::vector<double> bins;
    double shallow = 0.0;
  };
  const auto per_block = run_blocks<BlockSums>(n, workers, [&](std::size_t first) -> BlockSums {
    BlockSums sums;
    sums.bins.assign(out.stems.size(), 0.0);
    const double w0 = p.weight(static_cast<Letter>(first));
    if (w0 > R) return sums;
    // Enumerate words starting with `first` by hanging the ball of the
    // remaining radius off that letter, rejecting backtracking starts.
    std::vector<Letter> buf{static_cast<Letter>(first)};
    const std::function<void(double)> walk = [&](double mag) {
      if (buf.size() >= depth)
        sums.bins[stem_index(std::span<const Letter>(buf.data(), depth))] += std::exp(-s * mag);
      else
        sums.shallow += std::exp(-s * mag);
      for (Letter l = 0; l < n; ++l) {
        if (l == inverse_letter(buf.back())) continue;
        const double next = mag + p.weight(l);
        if (next > R) continue;
        buf.push_back(l);
        walk(next);
        buf.pop_back();
      }
    };
    walk(w0);
    return sums;
  });

  std::vector<double> bins(out.stems.size(), 0.0);
  double shallow = 1.0;  // the identity
  for (const auto& b : per_block) {
    shallow += b.shallow;
    for (std::size_t i = 0; i < bins.size(); ++i) bins[i] += b.bins[i];
  }
  double deep = 0.0;
  for (double b : bins) deep += b;
  if (deep <= 0.0)
    throw std::invalid_argument("patterson_construct: truncation radius below the cylinder depth");
  out.masses.resize(bins.size());
  for (std::size_t i = 0; i < bins.size(); ++i) out.masses[i] = bins[i] / deep;
  out.shallow_fraction = shallow / (shallow + deep);
  return out;
}

double suggest_truncation(const WeightedPotential& p, double s, double rel_tol) {
  const double rho = TransferMatrix(p, s).spectral_radius();
  if (!(rho < 1.0)) throw SubcriticalS("suggest_truncation: series does not converge at s");
  // Sphere sums decay like rho^length; bound the tail by the geometric series.
  const double min_w = p.min_weight();
  double R = 2.0 * p.max_weight();
  double sphere = p.alphabet().letter_count() * std::exp(-s * min_w);
  double partial = 1.0 + sphere;
  for (unsigned len = 2; len < 10000; ++len) {
    sphere *= rho;
    const double tail = sphere * rho / (1.0 - rho);
    if (tail < rel_tol * partial) return R;
    partial += sphere;
    R += min_w;
  }
  throw NoConvergence("suggest_truncation: tail bound did not close");
}

double quasi_invariance_defect(const BoundaryMeasure& mu, const Cocycle& c, const ReducedWord& g,
                               std::size_t depth) {
  if (depth < g.size() + 1)
    throw DepthTooShallow("quasi_invariance_defect: depth must exceed |g|");
  const Alphabet& alphabet = mu.alphabet();
  const ReducedWord g_inv = invert(g);
  double worst = 0.0;
  for (const auto& w : all_stems_of_depth(alphabet, depth)) {
    const ReducedWord image = multiply(g, w);  // single cylinder: depth > |g|
    const double ratio = mu.mass(Cylinder(image)) / mu.mass(Cylinder(w));
    const auto s = sigma_on_cylinder(c, g_inv, Cylinder(image));
    if (!s) throw NonConstantG("quasi_invariance_defect: image cylinder too shallow");
    worst = std::max(worst, std::abs(ratio * std::exp(-mu.delta() * *s) - 1.0));
  }
  return worst;
}

std::pair<double, double> coarse_uniqueness_ratio(const BoundaryMeasure& a,
                                                  const BoundaryMeasure& b, std::size_t depth) {
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const auto& w : all_stems_of_depth(a.alphabet(), depth)) {
    const double r = a.mass(Cylinder(w)) / b.mass(Cylinder(w));
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return {lo, hi};
}

std::pair<double, double> coarse_uniqueness_ratio(const EmpiricalMeasure& a,
                                                  const BoundaryMeasure& b, std::size_t depth) {
  if (depth != a.depth)
    throw std::invalid_argument("coarse_uniqueness_ratio: depth mismatch with empirical measure");
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (std::size_t i = 0; i < a.stems.size(); ++i) {
    const double r = a.masses[i] / b.mass(Cylinder(a.stems[i]));
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return {lo, hi};
}

}  // namespace pslab
