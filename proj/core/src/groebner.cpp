#include "tensordim/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>

#include "tensordim/errors.hpp"

namespace tensordim {

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  for (const auto& g : basis) {
    if (!g.is_zero() && g.var_count() != f.var_count()) {
      throw DimensionMismatchError("basis arity does not match the dividend");
    }
  }
  Polynomial remainder(f.var_count());
  Polynomial h = f;
  while (!h.is_zero()) {
    auto [mh, ch] = h.leading_term(order);
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      auto [mg, cg] = g.leading_term(order);
      if (mg.divides(mh)) {
        h.add_scaled(mh / mg, -ch / cg, g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder = remainder + Polynomial::term(mh, ch);
      h = h - Polynomial::term(mh, ch);
    }
  }
  return remainder;
}

namespace {

using PairKey = std::pair<std::size_t, std::size_t>;

PairKey make_pair_key(std::size_t a, std::size_t b) {
  return a < b ? PairKey{a, b} : PairKey{b, a};
}

/// Minimize leading monomials, fully tail-reduce, normalize monic, and sort.
/// One reduction pass suffices once leading monomials are minimal: the
/// element with a given leading monomial and no tail monomial in the
/// leading-term ideal is unique.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis,
                                     const MonomialOrder& order) {
  std::erase_if(basis, [](const Polynomial& g) { return g.is_zero(); });
  std::sort(basis.begin(), basis.end(), [&](const auto& a, const auto& b) {
    return order.less(a.leading_monomial(order), b.leading_monomial(order));
  });
  std::vector<Polynomial> minimal;
  for (const auto& g : basis) {
    Monomial mg = g.leading_monomial(order);
    bool redundant = false;
    for (const auto& kept : minimal) {
      if (kept.leading_monomial(order).divides(mg)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g.monic(order));
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i] = normal_form(minimal[i], others, order);
  }
  return minimal;
}

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& order) {
  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    if (!g.is_zero()) basis.push_back(g.monic(order));
  }

  std::set<PairKey> pending;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) pending.insert({i, j});
  }

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first, ties by index pair.
    auto best = pending.begin();
    Monomial best_lcm = Monomial::lcm(basis[best->first].leading_monomial(order),
                                      basis[best->second].leading_monomial(order));
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = Monomial::lcm(basis[it->first].leading_monomial(order),
                                 basis[it->second].leading_monomial(order));
      if (order.less(l, best_lcm)) {
        best = it;
        best_lcm = l;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    Monomial mi = basis[i].leading_monomial(order);
    Monomial mj = basis[j].leading_monomial(order);
    if (Monomial::coprime(mi, mj)) continue;  // product criterion

    // Chain criterion: skip when some other basis leading monomial divides
    // the pair lcm and both side pairs have already been handled.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!basis[k].leading_monomial(order).divides(best_lcm)) continue;
      if (!pending.count(make_pair_key(i, k)) &&
          !pending.count(make_pair_key(j, k))) {
        skip = true;
      }
    }
    if (skip) continue;

    Polynomial h =
        normal_form(s_polynomial(basis[i], basis[j], order), basis, order);
    if (h.is_zero()) continue;
    basis.push_back(h.monic(order));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) {
      pending.insert({k, basis.size() - 1});
    }
  }

  std::vector<Polynomial> reduced = reduce_basis(std::move(basis), order);

  // Postcondition: every S-polynomial of the result reduces to zero.
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    for (std::size_t j = i + 1; j < reduced.size(); ++j) {
      Polynomial s = s_polynomial(reduced[i], reduced[j], order);
      if (!normal_form(s, reduced, order).is_zero()) {
        throw std::logic_error("groebner basis postcondition failed");
      }
    }
  }
  return reduced;
}

std::optional<int> ideal_dimension(const AlgebraPresentation& p,
                                   const MonomialOrder& order) {
  const std::size_t n = p.var_count();
  if (n > 20) {
    throw InvalidParamError("independent-set search limited to 20 variables");
  }
  std::vector<Polynomial> gb = buchberger(p.generators(), order);
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb) {
    if (g.is_nonzero_constant()) return std::nullopt;  // empty spectrum
    Monomial m = g.leading_monomial(order);
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m.exponent(i) > 0) s |= std::uint32_t{1} << i;
    }
    supports.push_back(s);
  }

  // Largest S with no leading-monomial support contained in S.
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (std::uint32_t s : supports) {
      if ((s & ~mask) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::optional<int> ideal_dimension(const AlgebraPresentation& p) {
  return ideal_dimension(p, MonomialOrder::grevlex(p.var_count()));
}

int prime_height(const AlgebraPresentation& p) {
  if (!p.asserted_prime()) {
    throw PreconditionError(
        "height requires the primality assertion; heights of non-primes "
        "need a minimal-prime decomposition");
  }
  std::optional<int> dim = ideal_dimension(p);
  if (!dim) {
    throw EmptySpectrumError("the unit ideal has no primes to measure");
  }
  return static_cast<int>(p.var_count()) - *dim;
}

}  // namespace tensordim
