#pragma once

#include <string>
#include <vector>

#include "rigidsum/pifield.hpp"

namespace rigidsum {

// Dense polynomial over K = Q(pi), ascending coefficients.
using PolyK = std::vector<PiFieldElem>;

PolyK poly_zero(unsigned p);
PolyK poly_from_ints(unsigned p, const std::vector<long>& coeffs);

long poly_deg(const PolyK& f);  // -1 for the zero polynomial
PolyK& poly_trim(PolyK& f);
bool poly_is_zero(const PolyK& f);

PolyK poly_add(const PolyK& a, const PolyK& b);
PolyK poly_sub(const PolyK& a, const PolyK& b);
PolyK poly_neg(PolyK a);
PolyK poly_mul(const PolyK& a, const PolyK& b);
PolyK poly_scale(PolyK a, const PiFieldElem& c);
PolyK poly_derivative(const PolyK& f);
// f(x^q).
PolyK poly_compose_xq(const PolyK& f, unsigned q);
PiFieldElem poly_eval(const PolyK& f, const PiFieldElem& x);
PiFieldElem poly_leading(const PolyK& f);

std::string poly_to_string(const PolyK& f);

}  // namespace rigidsum
