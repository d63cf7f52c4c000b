#pragma once

#include <optional>
#include <vector>

#include "pslab/boundary.hpp"
#include "pslab/cylinder.hpp"
#include "pslab/errors.hpp"
#include "pslab/rational.hpp"
#include "pslab/word.hpp"

namespace pslab {

// A positive weight per letter.  psi(p, q) sums the weights of the letters
// of reduce(p^-1 q) read left to right, i.e. along the tree geodesic from p
// to q, which makes psi left-invariant and exactly additive at every vertex
// of the geodesic.  Templated on the scalar so the regression tests can run
// the same formulas over exact rationals.
template <typename T>
class BasicWeightedPotential {
 public:
  BasicWeightedPotential(const Alphabet& alphabet, std::vector<T> weights)
      : alphabet_(alphabet), w_(std::move(weights)) {
    if (w_.size() != alphabet_.letter_count())
      throw std::invalid_argument("WeightedPotential: need one weight per letter");
    for (const T& x : w_)
      if (!(x > T(0))) throw NonPositiveWeight("WeightedPotential: weights must be positive");
  }

  static BasicWeightedPotential uniform(const Alphabet& alphabet, T value = T(1)) {
    return BasicWeightedPotential(alphabet, std::vector<T>(alphabet.letter_count(), value));
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<T>& weights() const noexcept { return w_; }
  T weight(Letter l) const { return w_[l]; }

  T min_weight() const {
    T m = w_[0];
    for (const T& x : w_)
      if (x < m) m = x;
    return m;
  }
  T max_weight() const {
    T m = w_[0];
    for (const T& x : w_)
      if (m < x) m = x;
    return m;
  }

  // The magnitude ||g|| = psi(o, g o).
  T magnitude(const ReducedWord& g) const {
    T sum(0);
    for (Letter l : g.letters()) sum += w_[l];
    return sum;
  }

  T eval(const ReducedWord& p, const ReducedWord& q) const {
    return magnitude(multiply(invert(p), q));
  }

  // The dual potential psi-bar(p, q) = psi(q, p), realized by the weight
  // table w(s^-1).
  BasicWeightedPotential dual() const {
    std::vector<T> dw(w_.size());
    for (std::size_t l = 0; l < w_.size(); ++l) dw[l] = w_[inverse_letter(static_cast<Letter>(l))];
    return BasicWeightedPotential(alphabet_, std::move(dw));
  }

  bool symmetric() const {
    for (std::size_t l = 0; l < w_.size(); l += 2)
      if (!(w_[l] == w_[l + 1])) return false;
    return true;
  }

 private:
  Alphabet alphabet_;
  std::vector<T> w_;
};

using WeightedPotential = BasicWeightedPotential<double>;

// A cocycle induced by a weighted potential: the primal
//   sigma(g, x) = psi(g^-1 o, c) - psi(o, c),  c = confluence of g^-1 and x,
// or its dual, which is the primal cocycle of the dual potential.  Both are
// continuous cocycles here (the defect vanishes identically on a tree).
template <typename T>
struct BasicCocycle {
  BasicWeightedPotential<T> potential;
  bool dual = false;

  BasicWeightedPotential<T> effective() const {
    return dual ? potential.dual() : potential;
  }
};

using Cocycle = BasicCocycle<double>;

template <typename T>
BasicCocycle<T> primal_cocycle(BasicWeightedPotential<T> p) {
  return BasicCocycle<T>{std::move(p), false};
}

template <typename T>
BasicCocycle<T> dual_cocycle(BasicWeightedPotential<T> p) {
  return BasicCocycle<T>{std::move(p), true};
}

// sigma(g, x), exact: the limit defining the cocycle stabilizes as soon as
// the approach point passes the confluence of g^-1 and x.
template <typename T>
T sigma(const BasicCocycle<T>& c, const ReducedWord& g, const BoundaryPoint& x) {
  const BasicWeightedPotential<T> psi = c.effective();
  const ReducedWord g_inv = invert(g);
  const ReducedWord meet = confluence(g_inv, x);
  return psi.eval(g_inv, meet) - psi.magnitude(meet);
}

// The constant value of sigma(g, .) on C_w, when constant.  sigma varies on
// C_w exactly when w is a strict prefix of word(g^-1): past that stem the
// confluence with g^-1 is still undetermined.  Any refinement to depth
// |g| + 1 resolves it.
template <typename T>
std::optional<T> sigma_on_cylinder(const BasicCocycle<T>& c, const ReducedWord& g,
                                   const Cylinder& w) {
  const BasicWeightedPotential<T> psi = c.effective();
  const ReducedWord g_inv = invert(g);
  if (w.stem().size() < g_inv.size() && is_prefix_of(w.stem(), g_inv)) return std::nullopt;
  const std::size_t cp = common_prefix_len(g_inv, w.stem());
  const ReducedWord meet = g_inv.prefix(cp == kInfinitePrefix ? g_inv.size() : cp);
  return psi.eval(g_inv, meet) - psi.magnitude(meet);
}

// Magnitude of the cocycle: ||g||_sigma = psi(o, g o) for the primal and the
// dual weight sum for the dual.
template <typename T>
T cocycle_magnitude(const BasicCocycle<T>& c, const ReducedWord& g) {
  return c.effective().magnitude(g);
}

// max over the sample of |sigma(g1 g2, x) - sigma(g1, g2 x) - sigma(g2, x)|;
// identically zero in this model.
template <typename T>
T cocycle_identity_defect(
    const BasicCocycle<T>& c,
    const std::vector<std::tuple<ReducedWord, ReducedWord, BoundaryPoint>>& sample) {
  T worst(0);
  for (const auto& [g1, g2, x] : sample) {
    const T lhs = sigma(c, multiply(g1, g2), x);
    const T rhs = sigma(c, g1, act(g2, x)) + sigma(c, g2, x);
    const T d = abs(lhs - rhs);
    if (worst < d) worst = d;
  }
  return worst;
}

// Smallest C with |sigma(g, x) - ||g||| <= C over all ||g|| <= R and all x
// outside the 2^-m ball around g^-1, computed exactly on the depth-(m+1)
// cylinder partition.
double expansion_constant(const Cocycle& c, unsigned m, double R);

// |sigma(alpha, x) - (||alpha g_d|| - ||g_d||)| for g_d the depth-d prefix
// of x; zero whenever depth >= |alpha| + 1.
double nice_magnitude_defect(const Cocycle& c, const ReducedWord& alpha, const BoundaryPoint& x,
                             std::size_t depth);

// Rebuilds the potential from a magnitude table psi(p, q) = ||p^-1 q||; the
// per-letter weights are the magnitudes of the generators.
WeightedPotential cocycle_to_potential(const Cocycle& c);

using Triple = std::tuple<ReducedWord, ReducedWord, BoundaryPoint>;

}  // namespace pslab
