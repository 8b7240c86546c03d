#ifndef TENSORDIM_BUILDERS_HPP
#define TENSORDIM_BUILDERS_HPP

#include "tensordim/algebra.hpp"
#include "tensordim/spectral_profile.hpp"

namespace tensordim {

/// Profile of a field K with t.d.(K) = m: a single prime class, all
/// heights zero.
SpectralProfile build_field(int m);

/// Profile of a generic finitely generated domain of dimension d: a chain
/// of d+1 prime classes with constant height sequences (such domains
/// satisfy the altitude formula and stay that way under polynomial
/// extension). Chains realize every height because these rings are
/// catenary, so the finite abstraction is faithful for the max-formulas.
SpectralProfile build_fg_domain(int d);

/// Profile of the rank-one discrete valuation overring of a polynomial
/// ring in two variables whose residue field is the base field: two prime
/// classes, t.d.(A) = 2, ht(p[n]) = 1 for all n. Noetherian, hence locally
/// Jaffard, yet no polynomial extension of it satisfies the altitude
/// formula.
SpectralProfile build_example_2_8();

/// Profile of the pullback of the base field along the residue map of a
/// one-dimensional quasilocal domain T whose residue field has t.d. r:
/// nodes {0, M}, t.d.(A) = r+1, ht(M[n]) = min(1+n, 1+r). The extension
/// A[n] satisfies the altitude formula exactly when n >= r. The values
/// between ht(M[0]) = 1 and ht(M[r]) = r+1 interpolate linearly, the
/// least profile consistent with the nondecreasing and superadditive laws.
SpectralProfile build_pullback_field(int r);

/// Profile of a presented algebra: the oracle computes d = dim(A) and the
/// result is the d-dimensional finitely generated domain chain (presented
/// domains satisfy the altitude formula, and are locally Jaffard, so the
/// chain profile is exact). Requires the primality assertion; the unit
/// ideal raises EmptySpectrumError.
SpectralProfile profile_from_presentation(const AlgebraPresentation& a);

}  // namespace tensordim

#endif
