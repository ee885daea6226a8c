#pragma once

#include <vector>

#include "rigidsum/matrix.hpp"
#include "rigidsum/piadic.hpp"
#include "rigidsum/polyk.hpp"
#include "rigidsum/series.hpp"

namespace rigidsum {

// Free module over the dagger line with connection nabla = d/dx + N(x) dx
// and a semilinear Frobenius F(v) = Phi(x) v(x^q), trivial on scalars.
// Everything built here is a direct sum of rank-1 exponential twists (or a
// tensor product of such, which is again one); `twists` records the twist
// polynomial of each summand and `breaks` its break at infinity (= degree).
struct SigmaNablaModule {
  unsigned p = 0;
  unsigned q = 0;
  long trunc = 0;
  size_t rank = 0;
  Mat<PolyK> connection;            // N, so nabla(e_j) = sum_i N_ij e_i dx
  Mat<TruncatedSeries> frobenius;   // Phi, so F(e_j) = sum_i Phi_ij e_i
  std::vector<PolyK> twists;
  std::vector<long> breaks;
};

// The unit object: zero connection, Frobenius 1.
SigmaNablaModule trivial_module(unsigned p, unsigned q, long trunc);

// The exponential twist attached to P: connection -pi P'(x) dx and Frobenius
// exp(pi (P(x) - P(x^q))), the unique pairing of the two signs that commutes
// with the connection.  The Frobenius series carries the growth certificate
// with slope (p-1)/(p^2 deg P), measured on the stored range.  P must have
// zero constant term: the module cannot see a constant, so accepting one
// would silently drop its character contribution.  Integer coefficients are
// their own Teichmuller lifts mod p; other coefficients should be Teichmuller
// approximations, and the approximation error propagates into every
// downstream value.
SigmaNablaModule make_dwork_module(const PolyK& P, unsigned q, long trunc);
SigmaNablaModule make_dwork_module(unsigned p, const std::vector<long>& P,
                                   unsigned q, long trunc);

SigmaNablaModule tensor(const SigmaNablaModule& a, const SigmaNablaModule& b);
SigmaNablaModule direct_sum(const SigmaNablaModule& a,
                            const SigmaNablaModule& b);
// -N^T and the inverse transpose of Phi (degreewise inversion; Phi(0) = I
// for every module built here).
SigmaNablaModule dual(const SigmaNablaModule& a);

// The commutation residual Phi' + N Phi - q x^(q-1) Phi N(x^q), which the
// stored coefficients determine exactly in degrees 0..trunc-1.  ok means the
// residual vanishes identically on that window.
struct CompatibilityReport {
  bool ok = false;
  long window = -1;
  long first_failure = -1;   // -1 when ok
  Val deficit = Val::inf();  // valuation of the first failing coefficient
};
CompatibilityReport check_compatibility(const SigmaNablaModule& m);

// Horizontal sections: the unique U with U' + N U = 0, U(0) = I, as a matrix
// of truncated series.  Exact rational arithmetic; denominators grow like l!.
Mat<TruncatedSeries> horizontal_basis(const SigmaNablaModule& m);

// The root of t^(p-1) = 1 with t == a (mod p), to precision m; exact (and
// rational) for a == 0, +-1 mod p.  Newton iteration; the derivative is a
// unit, so the error doubles every step.
PiAdicApprox teichmuller_lift(long a, unsigned p, const Rat& m);

// Frobenius on the fiber at a Teichmuller point (q = p, degree-1 points):
// the matrix Phi(t).  Every entry must carry a tail certificate, since the
// evaluation point sits on the boundary v(t) = 0.
Mat<PiAdicApprox> fiber_frobenius(const SigmaNablaModule& m,
                                  const PiAdicApprox& t);

}  // namespace rigidsum
