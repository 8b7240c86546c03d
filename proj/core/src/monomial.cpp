#include "tensordim/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "tensordim/errors.hpp"

namespace tensordim {

namespace {

void require_same_arity(const Monomial& a, const Monomial& b) {
  if (a.var_count() != b.var_count()) {
    throw DimensionMismatchError("monomials over " +
                                 std::to_string(a.var_count()) + " and " +
                                 std::to_string(b.var_count()) + " variables");
  }
}

}  // namespace

Monomial::Monomial(std::vector<unsigned> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0u)) {}

Monomial Monomial::one(std::size_t var_count) {
  return Monomial(std::vector<unsigned>(var_count, 0u));
}

bool Monomial::divides(const Monomial& other) const {
  require_same_arity(*this, other);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_arity(*this, other);
  std::vector<unsigned> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = exponents_[i] + other.exponents_[i];
  }
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
  require_same_arity(*this, other);
  std::vector<unsigned> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (other.exponents_[i] > exponents_[i]) {
      throw InvalidParamError("monomial quotient is not a monomial");
    }
    e[i] = exponents_[i] - other.exponents_[i];
  }
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<unsigned> e(a.var_count());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = std::max(a.exponents_[i], b.exponents_[i]);
  }
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  for (std::size_t i = 0; i < a.var_count(); ++i) {
    if (a.exponents_[i] > 0 && b.exponents_[i] > 0) return false;
  }
  return true;
}

}  // namespace tensordim
