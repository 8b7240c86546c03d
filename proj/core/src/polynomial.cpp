#include "tensordim/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "tensordim/errors.hpp"

namespace tensordim {

namespace {

void require_same_arity(const Polynomial& a, const Polynomial& b) {
  if (a.var_count() != b.var_count()) {
    throw DimensionMismatchError("polynomials over " +
                                 std::to_string(a.var_count()) + " and " +
                                 std::to_string(b.var_count()) + " variables");
  }
}

}  // namespace

Polynomial Polynomial::constant(std::size_t var_count, const Rational& c) {
  Polynomial f(var_count);
  f.insert_term(Monomial::one(var_count), c);
  return f;
}

Polynomial Polynomial::variable(std::size_t var_count, std::size_t index,
                                unsigned exp, const Rational& c) {
  if (index >= var_count) {
    throw InvalidParamError("variable index out of range");
  }
  std::vector<unsigned> e(var_count, 0u);
  e[index] = exp;
  Polynomial f(var_count);
  f.insert_term(Monomial(std::move(e)), c);
  return f;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial f(m.var_count());
  f.insert_term(m, c);
  return f;
}

bool Polynomial::is_nonzero_constant() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::insert_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.var_count() != var_count_) {
    throw DimensionMismatchError("term arity does not match the polynomial");
  }
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(var_count_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_arity(*this, other);
  Polynomial r = *this;
  for (const auto& [m, c] : other.terms_) r.insert_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_arity(*this, other);
  Polynomial r = *this;
  for (const auto& [m, c] : other.terms_) r.insert_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_arity(*this, other);
  Polynomial r(var_count_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      r.insert_term(ma * mb, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  Polynomial r(var_count_);
  if (scalar == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * scalar);
  return r;
}

void Polynomial::add_scaled(const Monomial& m, const Rational& c,
                            const Polynomial& other) {
  require_same_arity(*this, other);
  for (const auto& [mo, co] : other.terms_) insert_term(m * mo, c * co);
}

std::pair<Monomial, Rational> Polynomial::leading_term(
    const MonomialOrder& order) const {
  if (terms_.empty()) {
    throw ZeroPolynomialError("the zero polynomial has no leading term");
  }
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (order.less(best->first, it->first)) best = it;
  }
  return {best->first, best->second};
}

Monomial Polynomial::leading_monomial(const MonomialOrder& order) const {
  return leading_term(order).first;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  auto [m, c] = leading_term(order);
  return *this * (Rational(1) / c);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) {
    throw ZeroPolynomialError("s-polynomial of a zero polynomial");
  }
  auto [mf, cf] = f.leading_term(order);
  auto [mg, cg] = g.leading_term(order);
  Monomial l = Monomial::lcm(mf, mg);
  Polynomial s(f.var_count());
  s.add_scaled(l / mf, Rational(1) / cf, f);
  s.add_scaled(l / mg, Rational(-1) / cg, g);
  return s;
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& names,
                      const MonomialOrder& order) {
  if (f.var_count() != names.size()) {
    throw DimensionMismatchError("variable name list does not match arity");
  }
  if (f.is_zero()) return "0";

  std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(),
                                                   f.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return order.less(b.first, a.first);
  });

  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool coeff_shown = (a != 1) || m.is_one();
    if (coeff_shown) out << to_string(a);
    bool any_var = false;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (m.exponent(i) == 0) continue;
      if (coeff_shown || any_var) out << "*";
      out << names[i];
      if (m.exponent(i) > 1) out << "^" << m.exponent(i);
      any_var = true;
    }
  }
  return out.str();
}

}  // namespace tensordim
