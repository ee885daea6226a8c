#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rigidsum/cyclo.hpp"
#include "rigidsum/matrix.hpp"
#include "rigidsum/oracle.hpp"
#include "rigidsum/sigma_nabla.hpp"

namespace rigidsum {

// det(1 - t F) on a cohomology space, ascending coefficients, coeffs[0] = 1.
// Coefficients carry their certified precision; `exact` is set once the
// polynomial has been identified with an oracle candidate (agreement at or
// above the identification threshold), after which it is authoritative.
struct CharPoly {
  unsigned p = 0;
  uint64_t q = 0;
  std::vector<PiAdicApprox> coeffs;
  std::optional<std::vector<CycloElem>> exact;
  long tate_twist = 0;

  unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }
};

// Dimension of H^1 for a module with uniform twist degree d: rank * (d - 1).
// Throws unless every summand has the same break d >= 1 with p not dividing
// d, the connection is diagonal, and each diagonal entry has degree d - 1
// with nonzero leading coefficient.
size_t h1_dim(const SigmaNablaModule& m);

// Reduce a vector of series (the e_k-components of a 1-form) to coordinates
// in the basis {x^i e_k dx : 0 <= i <= d-2}, index k*(d-1) + i.  Inputs are
// weakened to precision `work` so that compression keeps heights bounded;
// outputs carry the propagated precision.
std::vector<PiAdicApprox> h1_reduce(const SigmaNablaModule& m,
                                    const std::vector<TruncatedSeries>& form,
                                    const Rat& work);

// Matrix of F on H^1 in the basis above: the image of x^i e_j dx is
// q x^(qi+q-1) Phi_col_j, reduced.  Single truncation; the result's
// precision does not account for the discarded Frobenius tail.  The
// reduction runs at floor work + trunc internally: the downward cascade
// amplifies compression noise, so the floor must sit well below the
// budget the caller wants certified.
Mat<PiAdicApprox> frobenius_on_h1(const SigmaNablaModule& m, const Rat& work);

// Two-truncation certification: evaluate the matrix on builder(N) and
// builder(N + bump) and keep the refined values with the entrywise agreement
// valuation as precision.  This is what callers should use; the agreement
// accounts for the discarded tails empirically.
Mat<PiAdicApprox> frobenius_on_h1_certified(
    const std::function<SigmaNablaModule(long)>& builder, long trunc, long bump,
    const Rat& work);

// Truncation order that experience says certifies about `target` digits
// (v(p) = 1 units) for a twist of degree d: the Frobenius tail has slope
// (p-1)/(p^2 d), plus room for the shift by d q and the reduction.
long suggested_trunc(unsigned p, unsigned q, long d, const Rat& target);

// det(1 - t F) by Faddeev-LeVerrier (divisions only by 1..dim).
CharPoly char_poly(const Mat<PiAdicApprox>& f, unsigned p, uint64_t q);

// Try to match coeffs against the embedded oracle polynomial; on agreement
// of every coefficient to at least `threshold` valuation units, freeze the
// oracle coefficients into `exact` and return true.
bool identify_with_oracle(CharPoly& cp, const std::vector<CycloElem>& oracle_h1,
                          const Rat& threshold);

// Poincare duality: inverse roots alpha of H^1_c are q / beta over the
// inverse roots beta of H^1.  w_j = c_{D-j} q^j / c_D; requires the top
// coefficient to be certified nonzero.
CharPoly h1c_via_duality(const CharPoly& h1);

// Multiply the k-th coefficient by q^(i k) (inverse roots scale by q^i).
CharPoly tate_twist(const CharPoly& cp, long i);

// Euler characteristic bookkeeping for a direct sum of nontrivial twists.
struct SwanPrediction {
  size_t rank = 0;
  std::vector<long> breaks;
  long swan = 0;
  long chi = 0;
  size_t dim_h0 = 0;      // always 0 here
  size_t dim_h1 = 0;      // swan - rank
  size_t dim_h0_loc = 0;  // no finite singularities
  size_t dim_h1_loc = 0;
};
SwanPrediction swan_predict(const SigmaNablaModule& m);

// Power sums of the inverse roots of det(1 - tF), via Newton's identities.
std::vector<PiAdicApprox> inverse_root_power_sums(const CharPoly& cp, unsigned n);

// Compare -sum alpha^n (plus q^n for each trivial summand, which contributes
// through H^2_c) against the embedded oracle sums; returns the worst
// certified agreement valuation over n = 1..n_max.
Val lefschetz_verify(const CharPoly& h1c, size_t trivial_summands,
                     const SumSeries& sums, unsigned n_max);

// Slopes of the certified Newton polygon of det(1 - tF), one entry per root,
// ascending.  Throws if some coefficient's uncertainty could dent the hull.
std::vector<Rat> newton_slopes(const CharPoly& cp);

// Check |alpha| = q^(w/2) in every complex embedding of the identified
// polynomial, within |.| tolerance tol * q^(w/2).  Requires `exact`.
struct WeightReport {
  bool ok = false;
  double worst_deviation = 0.0;  // max over roots of ||alpha| - q^(w/2)|
};
WeightReport weight_check(const CharPoly& cp, const Rat& w, double tol);

}  // namespace rigidsum
