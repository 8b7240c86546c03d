#ifndef TENSORDIM_ALGEBRA_HPP
#define TENSORDIM_ALGEBRA_HPP

#include <string>
#include <vector>

#include "tensordim/polynomial.hpp"

namespace tensordim {

/// A finitely generated Q-algebra Q[x1..xn]/I, presented by variable names
/// and ideal generators. Primality of I is a caller assertion, never
/// decided here; an empty generator set presents the full polynomial ring,
/// which is a domain.
class AlgebraPresentation {
 public:
  AlgebraPresentation(std::vector<std::string> variables,
                      std::vector<Polynomial> generators,
                      bool asserted_prime = false);

  /// The polynomial ring itself (zero ideal).
  static AlgebraPresentation polynomial_ring(std::vector<std::string> variables);

  std::size_t var_count() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool asserted_prime() const { return asserted_prime_; }

 private:
  std::vector<std::string> variables_;
  std::vector<Polynomial> generators_;
  bool asserted_prime_;
};

/// Presentation of A (x) B over Q: disjoint-union variable set, union of the
/// two generator images. The left factor keeps its names; a right-factor
/// name that collides gains the suffix "_r" (repeated until free), so
/// reports are stable. The primality assertion carries over only when both
/// factors assert it.
AlgebraPresentation tensor_presentation(const AlgebraPresentation& a,
                                        const AlgebraPresentation& b);

}  // namespace tensordim

#endif
