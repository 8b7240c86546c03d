#ifndef TENSORDIM_MONOMIAL_ORDER_HPP
#define TENSORDIM_MONOMIAL_ORDER_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "tensordim/monomial.hpp"

namespace tensordim {

enum class OrderKind { lex, grevlex };

/// A total, multiplicative, well-founded monomial order: lexicographic or
/// graded reverse lexicographic, over an arbitrary variable precedence.
/// precedence[0] is the most significant variable position.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence);

  static MonomialOrder lex(std::size_t var_count);
  static MonomialOrder grevlex(std::size_t var_count);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  OrderKind kind() const { return kind_; }
  std::size_t var_count() const { return precedence_.size(); }
  const std::vector<std::size_t>& precedence() const { return precedence_; }
  std::string name() const;

 private:
  OrderKind kind_;
  std::vector<std::size_t> precedence_;
};

}  // namespace tensordim

#endif
