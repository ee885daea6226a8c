#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rigidsum/cohomology.hpp"
#include "rigidsum/pifield.hpp"
#include "rigidsum/polyk.hpp"
#include "rigidsum/series.hpp"

namespace rigidsum {

// Element of the pi-normalized Weyl algebra K<x, dd> / (dd x - x dd - 1/pi),
// stored in normal order (every x to the left of every dd).  The 1/pi
// commutator is what makes the Fourier substitution x -> dd, dd -> -x an
// algebra automorphism whose square is the parity involution.
struct WeylOperator {
  unsigned p = 0;
  std::map<std::pair<long, long>, PiFieldElem> terms;  // (i, j) -> c x^i dd^j

  static WeylOperator zero(unsigned p) { return WeylOperator{p, {}}; }
  static WeylOperator monomial(unsigned p, long i, long j,
                               const PiFieldElem& c);
  static WeylOperator one(unsigned p) {
    return monomial(p, 0, 0, PiFieldElem::from_int(p, 1));
  }

  bool is_zero() const { return terms.empty(); }
};

WeylOperator operator+(const WeylOperator& a, const WeylOperator& b);
WeylOperator operator-(const WeylOperator& a, const WeylOperator& b);
WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);
bool operator==(const WeylOperator& a, const WeylOperator& b);

// Normal-order a word in the letters 'x' and 'd', leftmost letter acting
// last (so "dx" is the operator dd followed by... composed as dd o x).
WeylOperator normal_form(unsigned p, const std::string& word);

// Fourier substitution x -> dd, dd -> -x, re-expressed in normal order.
WeylOperator rho(const WeylOperator& op);

// Apply op to a polynomial, with dd acting as the normalized twisted
// derivation (1/pi)(d/dx + n) and x as multiplication.
PolyK weyl_act(const WeylOperator& op, const PolyK& n, const PolyK& v);

// exp(pi(x^q - x)), the series intertwining Frobenius with the Fourier
// substitution (it is the Frobenius of the twist by -x).
TruncatedSeries frobenius_commutation_series(unsigned p, unsigned q, long trunc);

// One fiber of the Fourier transform of the twist by P: the twist by
// P + a x with a the Teichmueller lift of the fiber point, pushed through
// H^1 and identified against the character-sum oracle.  Non-exact lifts
// (a outside {0, 1, -1} mod p) are run at two lift precisions and the
// entrywise agreement folded into the certified matrix.
struct FourierFiber {
  long a = 0;  // fiber point reduced mod p
  size_t dim = 0;
  CharPoly cp;
  bool identified = false;
  Val lift_agreement = Val::inf();  // finite only for approximated lifts
};
FourierFiber fourier_fiber(const std::vector<long>& P, long a, unsigned p,
                           const Rat& target);

// Constructive inverse for D + pi y on polynomials in y over K[x], where
// D = d/dx + n.  Solving from the top y-degree down gives
//   w_i = sum_j (-1)^j pi^-(j+1) D^j v_{i+j+1},
// which satisfies D w_i + pi w_{i-1} = v_i for every i >= 1; the only
// obstruction to (D + pi y) w = v is the y^0 residual v_0 - D w_0.
struct ProbeResult {
  std::vector<PolyK> w;
  PolyK residual;
};
ProbeResult fourier_surjectivity_probe(unsigned p, const PolyK& n,
                                       const std::vector<PolyK>& v);

}  // namespace rigidsum
