#pragma once

#include <cstdint>
#include <vector>

#include "rigidsum/cyclo.hpp"
#include "rigidsum/ffield.hpp"

namespace rigidsum {

// Hard cap on brute-force enumeration size.
inline constexpr uint64_t kEnumerationBudget = 10'000'000;

// S = sum over x in F_{p^n} of zeta_p^(Tr(P(x))), exact in Z[zeta_p].
// P has integer coefficients (reduced mod p internally).  The reversed flag
// only changes the enumeration order; it exists so tests can confirm the
// result is order-independent.
CycloElem char_sum(const std::vector<long>& P, unsigned p, unsigned n,
                   bool reversed_order = false);

// Same sum over the field of ctx, with coefficients already living there
// (used for twists with coefficients in an extension of F_p; the character
// is zeta^(absolute trace)).
CycloElem char_sum_ext(const FFContext& ctx, const std::vector<FFElem>& P);

// The sums S_1..S_D for a twist polynomial, S_k over F_{p^k}.
struct SumSeries {
  unsigned p = 0;
  uint64_t q = 0;  // base field size (p, or p^m for extension-base series)
  std::vector<long> twist;
  std::vector<CycloElem> values;  // values[k-1] = S_k
};

SumSeries sum_series(const std::vector<long>& P, unsigned p, unsigned n_max);

// L-polynomial data recovered from power sums.  With vanishing outer
// cohomology the zeta function exp(sum S_n t^n / n) is the polynomial
// det(1 - F t | H^1_c) itself; the inverse-root power sums are -S_n.
struct LPolynomial {
  unsigned p = 0;
  uint64_t q = 0;
  std::vector<CycloElem> h1;        // ascending, h1[0] = 1
  unsigned h2_tate = 0;             // multiplicity of the 1/(1 - q t) factor
  unsigned degree = 0;              // actual degree of h1
  bool integral = false;            // h1 coefficients lie in Z[zeta_p]
  bool consistent = false;          // sums beyond the degree matched exactly
  unsigned consistency_checked_to = 0;
};

// Invert exp(sum S_n t^n / n) into a polynomial of the expected degree.
// Requires sums.size() >= expected_degree; orders strictly beyond the degree
// are the over-determined consistency check (exact equalities in Q(zeta_p)).
LPolynomial l_poly_from_sums(const std::vector<CycloElem>& sums, unsigned p,
                             uint64_t q, unsigned expected_degree);

}  // namespace rigidsum
