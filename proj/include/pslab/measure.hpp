#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pslab/cylinder.hpp"
#include "pslab/potential.hpp"

namespace pslab {

// A Patterson-Sullivan measure on dF_k in Markov-chain form: dimension
// delta, an initial mass per first letter, and a row-stochastic transition
// matrix vanishing on inverse pairs.  Cylinder masses are products, so the
// measure is evaluable exactly on any cylinder set.
class BoundaryMeasure {
 public:
  BoundaryMeasure(const Alphabet& alphabet, double delta, std::vector<double> initial,
                  std::vector<std::vector<double>> transition);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  double delta() const noexcept { return delta_; }
  const std::vector<double>& initial() const noexcept { return initial_; }
  const std::vector<std::vector<double>>& transition() const noexcept { return transition_; }

  double mass(const Cylinder& c) const;
  double mass(const CylinderSet& s) const;

  std::string to_json() const;
  static BoundaryMeasure from_json(const Alphabet& alphabet, const std::string& text);

 private:
  Alphabet alphabet_;
  double delta_;
  std::vector<double> initial_;
  std::vector<std::vector<double>> transition_;
};

// The exact Patterson-Sullivan measure of the potential: with delta the
// critical exponent and h the Perron profile of the transfer matrix, the
// chain p(s -> s') = e^{-delta w(s')} h_{s'} / h_s started from
// m(s) = e^{-delta w(s)} h_s / Z.  Cylinder masses collapse to
// mu(C_w) = e^{-delta ||w||} h_{last(w)} / Z.
BoundaryMeasure markov_ps(const WeightedPotential& p, double tol = 1e-12);

// Truncated orbital sum: group elements with ||g|| <= R weighted by
// e^{-s ||g||}, binned by their depth-`depth` prefix.  Masses are normalized
// over the binned part; elements shorter than the cylinder depth are
// reported separately as the shallow fraction.
struct EmpiricalMeasure {
  std::size_t depth = 0;
  double s = 0.0;
  double R = 0.0;
  std::vector<ReducedWord> stems;  // all depth-d stems, lex order
  std::vector<double> masses;      // sums to 1
  double shallow_fraction = 0.0;   // share of the orbit sum below the depth

  double mass(const ReducedWord& stem) const;
  std::string to_json(const Alphabet& alphabet) const;
};

EmpiricalMeasure patterson_construct(const WeightedPotential& p, double s, double R,
                                     std::size_t depth, unsigned workers = 1);

// Suggests a truncation radius R with spectral tail estimate below rel_tol
// of the partial sum.
double suggest_truncation(const WeightedPotential& p, double s, double rel_tol = 1e-4);

// max over depth-d cylinders C of |mu(gC)/mu(C) e^{-delta sigma(g^-1, gC)} - 1|,
// using the constant value of sigma on the image cylinder.  Zero for the
// exact measure: this model realizes the defining density with C = 0.
double quasi_invariance_defect(const BoundaryMeasure& mu, const Cocycle& c, const ReducedWord& g,
                               std::size_t depth);

// Extremal ratios of depth-d cylinder masses.
std::pair<double, double> coarse_uniqueness_ratio(const BoundaryMeasure& a,
                                                  const BoundaryMeasure& b, std::size_t depth);
std::pair<double, double> coarse_uniqueness_ratio(const EmpiricalMeasure& a,
                                                  const BoundaryMeasure& b, std::size_t depth);

}  // namespace pslab
