#include "tensordim/algebra.hpp"

#include <set>

#include "tensordim/errors.hpp"

namespace tensordim {

AlgebraPresentation::AlgebraPresentation(std::vector<std::string> variables,
                                         std::vector<Polynomial> generators,
                                         bool asserted_prime)
    : variables_(std::move(variables)), asserted_prime_(asserted_prime) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty() || !seen.insert(v).second) {
      throw InvalidParamError("variable names must be distinct and nonempty");
    }
  }
  for (auto& g : generators) {
    if (g.var_count() != variables_.size()) {
      throw DimensionMismatchError(
          "generator arity does not match the variable list");
    }
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
  if (generators_.empty()) asserted_prime_ = true;  // zero ideal: a domain
}

AlgebraPresentation AlgebraPresentation::polynomial_ring(
    std::vector<std::string> variables) {
  return AlgebraPresentation(std::move(variables), {}, true);
}

namespace {

Polynomial embed(const Polynomial& f, std::size_t total, std::size_t offset) {
  Polynomial r(total);
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e(total, 0u);
    for (std::size_t i = 0; i < m.var_count(); ++i) e[offset + i] = m.exponent(i);
    r = r + Polynomial::term(Monomial(std::move(e)), c);
  }
  return r;
}

}  // namespace

AlgebraPresentation tensor_presentation(const AlgebraPresentation& a,
                                        const AlgebraPresentation& b) {
  std::vector<std::string> names = a.variables();
  std::set<std::string> taken(names.begin(), names.end());
  for (const auto& v : b.variables()) {
    std::string candidate = v;
    while (taken.count(candidate)) candidate += "_r";
    taken.insert(candidate);
    names.push_back(candidate);
  }

  std::size_t total = names.size();
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() + b.generators().size());
  for (const auto& g : a.generators()) gens.push_back(embed(g, total, 0));
  for (const auto& g : b.generators()) {
    gens.push_back(embed(g, total, a.var_count()));
  }
  return AlgebraPresentation(std::move(names), std::move(gens),
                             a.asserted_prime() && b.asserted_prime());
}

}  // namespace tensordim
