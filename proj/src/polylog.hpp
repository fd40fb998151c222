#pragma once

#include <complex>

namespace hyptet {

using cplx = std::complex<double>;

// Complex dilogarithm Li2(z) = -int_0^z log(1-s)/s ds with the principal
// branch (cut along [1,inf)).  On-cut inputs evaluate as the limit from the
// lower half-plane.  Relative accuracy ~1e-15 for |z| <= 4.
cplx dilog(cplx z);

// Bloch-Wigner function B(z) = Im Li2(z) + arg(1-z) log|z|.
// Continuous across the dilogarithm cut; vanishes on the real line.
// Throws degenerate_error at z = 0 and z = 1.
double bloch_wigner(cplx z);

// Lobachevsky function Lambda(x) = Im Li2(e^{2ix}) / 2.  Odd, pi-periodic.
double lobachevsky(double x);

// ell(z) = Li2(1-z) + log(z)^2 / 4, analytic off (-inf, 0], ell(1) = 0.
// Satisfies ell(1/z) = -ell(z).  Throws branch_cut_error on the cut.
cplx ell(cplx z);

// kay(z) = (Li2(1-z) - Li2(1-1/z)) / 2.  Equal to ell(z) off the cut and
// manifestly antisymmetric under z -> 1/z.
cplx kay(cplx z);

// aitch(w) = ell((1-w)/(1+w)), odd, cuts (-inf,-1] and [1,inf), aitch(0) = 0.
cplx aitch(cplx w);

}  // namespace hyptet
