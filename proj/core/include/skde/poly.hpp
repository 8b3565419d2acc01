#pragma once

#include <vector>

namespace skde {

//! Values of one polynomial family at a fixed argument, indices 0..N.
using PolySequence = std::vector<double>;

//! Legendre polynomials P_0(u)..P_N(u) by the three-term recurrence
//! (nu+1) P_{nu+1} = (2nu+1) u P_nu - nu P_{nu-1}. Requires |u| <= 1.
PolySequence legendre_all(double u, int trunc);

//! Gegenbauer polynomials of order 1, C^1_0(u)..C^1_N(u), by
//! C_nu = 2u C_{nu-1} - C_{nu-2} with C_0 = 1, C_1 = 2u. Requires |u| <= 1.
PolySequence gegenbauer1_all(double u, int trunc);

}  // namespace skde
