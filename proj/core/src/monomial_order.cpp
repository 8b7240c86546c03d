#include "tensordim/monomial_order.hpp"

#include <numeric>
#include <vector>

#include "tensordim/errors.hpp"

namespace tensordim {

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<bool> seen(precedence_.size(), false);
  for (std::size_t pos : precedence_) {
    if (pos >= precedence_.size() || seen[pos]) {
      throw InvalidParamError("variable precedence is not a permutation");
    }
    seen[pos] = true;
  }
}

MonomialOrder MonomialOrder::lex(std::size_t var_count) {
  std::vector<std::size_t> id(var_count);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return MonomialOrder(OrderKind::lex, std::move(id));
}

MonomialOrder MonomialOrder::grevlex(std::size_t var_count) {
  std::vector<std::size_t> id(var_count);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return MonomialOrder(OrderKind::grevlex, std::move(id));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a,
                                            const Monomial& b) const {
  if (a.var_count() != var_count() || b.var_count() != var_count()) {
    throw DimensionMismatchError("monomial arity does not match the order");
  }
  if (kind_ == OrderKind::lex) {
    for (std::size_t pos : precedence_) {
      unsigned ea = a.exponent(pos), eb = b.exponent(pos);
      if (ea != eb) {
        return ea > eb ? std::strong_ordering::greater
                       : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }
  // grevlex: compare total degree, then break ties from the least
  // significant variable upward with the inequality reversed.
  if (a.degree() != b.degree()) {
    return a.degree() > b.degree() ? std::strong_ordering::greater
                                   : std::strong_ordering::less;
  }
  for (std::size_t k = precedence_.size(); k-- > 0;) {
    unsigned ea = a.exponent(precedence_[k]), eb = b.exponent(precedence_[k]);
    if (ea != eb) {
      return ea < eb ? std::strong_ordering::greater
                     : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  return kind_ == OrderKind::lex ? "lex" : "grevlex";
}

}  // namespace tensordim
