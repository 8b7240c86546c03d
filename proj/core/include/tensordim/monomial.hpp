#ifndef TENSORDIM_MONOMIAL_HPP
#define TENSORDIM_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <vector>

namespace tensordim {

/// A power product x1^e1 ... xn^en, stored as its exponent vector.
/// Immutable after construction.
class Monomial {
 public:
  explicit Monomial(std::vector<unsigned> exponents);

  /// The constant monomial 1 in `var_count` variables.
  static Monomial one(std::size_t var_count);

  std::size_t var_count() const { return exponents_.size(); }
  unsigned exponent(std::size_t i) const { return exponents_[i]; }
  const std::vector<unsigned>& exponents() const { return exponents_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Componentwise divisibility. Throws DimensionMismatchError on arity
  /// mismatch, as do the other binary operations.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;

  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const = default;

  /// Container key order (lexicographic on exponent vectors). This is a
  /// fixed structural order for canonical term maps; ranking for algebraic
  /// purposes goes through MonomialOrder.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.exponents_ < b.exponents_;
  }

 private:
  std::vector<unsigned> exponents_;
  unsigned degree_;
};

}  // namespace tensordim

#endif
