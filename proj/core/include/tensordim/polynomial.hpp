#ifndef TENSORDIM_POLYNOMIAL_HPP
#define TENSORDIM_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tensordim/monomial.hpp"
#include "tensordim/monomial_order.hpp"
#include "tensordim/rational.hpp"

namespace tensordim {

/// Multivariate polynomial over the rationals with exact coefficients.
/// Terms live in a canonical sorted map, so equality is structural and
/// iteration order is deterministic. Zero coefficients are never stored.
/// Immutable by convention: all operations return new values.
class Polynomial {
 public:
  explicit Polynomial(std::size_t var_count) : var_count_(var_count) {}

  static Polynomial zero(std::size_t var_count) { return Polynomial(var_count); }
  static Polynomial constant(std::size_t var_count, const Rational& c);
  /// The single term c * x_index^exp.
  static Polynomial variable(std::size_t var_count, std::size_t index,
                             unsigned exp = 1, const Rational& c = 1);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t var_count() const { return var_count_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  /// True when the polynomial is a nonzero constant (a unit of Q[x]).
  bool is_nonzero_constant() const;

  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;
  bool operator==(const Polynomial& other) const = default;

  /// Adds c * m * other into this (the division-step workhorse).
  void add_scaled(const Monomial& m, const Rational& c, const Polynomial& other);

  /// Order-maximal term. Throws ZeroPolynomialError on the zero polynomial.
  std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const;
  Monomial leading_monomial(const MonomialOrder& order) const;

  /// Same polynomial scaled so its leading coefficient is 1.
  Polynomial monic(const MonomialOrder& order) const;

 private:
  void insert_term(const Monomial& m, const Rational& c);

  std::size_t var_count_;
  std::map<Monomial, Rational> terms_;
};

/// S(f, g) = (lcm/LT(f)) f - (lcm/LT(g)) g, the Buchberger pair combination
/// whose leading terms cancel. Throws on zero inputs.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

/// Renders with terms in descending `order`, e.g. "x^3 - 3/2*x*y + 1".
/// Parseable back by the script grammar.
std::string to_string(const Polynomial& f, const std::vector<std::string>& names,
                      const MonomialOrder& order);

}  // namespace tensordim

#endif
