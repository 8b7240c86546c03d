#ifndef TENSORDIM_GROEBNER_HPP
#define TENSORDIM_GROEBNER_HPP

#include <optional>
#include <vector>

#include "tensordim/algebra.hpp"
#include "tensordim/monomial_order.hpp"
#include "tensordim/polynomial.hpp"

namespace tensordim {

/// Remainder of multivariate division of f by the basis: no monomial of the
/// result is divisible by any basis leading monomial, and f minus the result
/// lies in the ideal generated by the basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

/// Reduced Groebner basis of the ideal generated by `gens`: monic elements,
/// no term of any element divisible by another element's leading monomial,
/// sorted ascending by leading monomial. Reduced bases are unique per order,
/// so the output is deterministic regardless of generator order.
///
/// Pair selection follows the normal strategy (smallest lcm first) with the
/// coprime-leading-monomial and chain criteria.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& order);

/// Krull dimension of Q[x1..xn]/I via the maximal-independent-set criterion
/// on the leading-term ideal: the largest variable subset S such that no
/// basis leading monomial is supported inside S. Returns nullopt for the
/// unit ideal (empty spectrum). Works for non-prime ideals too.
std::optional<int> ideal_dimension(const AlgebraPresentation& p,
                                   const MonomialOrder& order);
std::optional<int> ideal_dimension(const AlgebraPresentation& p);

/// Height of the asserted-prime ideal I in Q[x1..xn]: n - dim(Q[x]/I).
/// Valid because polynomial rings over a field are catenary and
/// equidimensional (the oracle's foundational identity). Throws
/// PreconditionError when primality is not asserted, EmptySpectrumError for
/// the unit ideal.
int prime_height(const AlgebraPresentation& p);

}  // namespace tensordim

#endif
