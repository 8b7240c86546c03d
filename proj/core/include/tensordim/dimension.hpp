#ifndef TENSORDIM_DIMENSION_HPP
#define TENSORDIM_DIMENSION_HPP

#include <string>
#include <vector>

#include "tensordim/spectral_profile.hpp"

namespace tensordim {

struct TraceTerm {
  std::string label;
  int value;
};

struct WitnessEntry {
  std::string role;  // "q1", "q", "p1", "p"
  NodeId node;
  std::string name;
};

/// Result of a max-formula evaluation: the value, the node tuple achieving
/// it (ties broken by the lexicographically smallest (q1, q, p1, p) tuple),
/// and the summands of the winning tuple labeled by their roles. The value
/// always equals the sum of the terms.
struct FormulaTrace {
  int value = 0;
  std::vector<WitnessEntry> witness;
  std::vector<TraceTerm> terms;

  /// Stable single-line rendering: "q1=0 q=M : ht(q1[t.d.(A)])=0 + ...".
  std::string render() const;
};

/// dim(K (x) L) for field extensions of t.d. m and n: min(m, n).
int dim_tensor_fields(int m, int n);

/// Wadsworth's D-function
///   D(s, d, B) = max over q of ht(q[s]) + min(s, d + t.d.(B/q)),
/// for an altitude-formula domain abstracted by (t.d., dim) = (s, d).
FormulaTrace wadsworth_d(int s, int d, const SpectralProfile& B);

/// dim(A1 (x) A2) for two altitude-formula domains:
/// min(dim A1 + t.d. A2, t.d. A1 + dim A2).
int dim_tensor_af_pair(int dim_a, int td_a, int dim_b, int td_b);

/// dim(A (x) B) = D(t.d.(A), dim(A), B) for an altitude-formula domain A
/// and arbitrary B. Refuses with a witness node when A fails the formula.
FormulaTrace dim_tensor_af(const SpectralProfile& A, const SpectralProfile& B);

/// Height of the mixed ideal p(x)B + A(x)q:
///   max over p1 <= p, q1 <= q of
///     ht(q1[t.d.(A)]) + ht(p1[t.d.(B/q1)])
///     + ht((q/q1)[t.d.(A/p1)]) + ht((p/p1)[t.d.(B/q)]).
/// Requires a chain-decomposable A (see the refusal message for the
/// admitted classes).
FormulaTrace ht_mixed_ideal(const SpectralProfile& A, const SpectralProfile& B,
                            NodeId p, NodeId q);

/// Height of the prime abstracted by `desc`, decomposed as
/// ht(mixed ideal) + residual. The residual is bounded by
/// min(t.d.(A/p), t.d.(B/q)).
FormulaTrace gsct_height(const SpectralProfile& A, const SpectralProfile& B,
                         const TensorPrimeDescriptor& desc);

/// Special chain theorem height for an altitude-formula domain A:
/// ht(q[t.d.(A)]) + ht(P/(A(x)q)).
int sct_height(const SpectralProfile& A, const SpectralProfile& B, NodeId q,
               int delta_over_aq);

/// Height of every minimal prime of p(x)B for a domain B: ht(p[t.d.(B)]).
int ht_min_over_extension(const SpectralProfile& B, const SpectralProfile& A,
                          NodeId p);

/// dim(A (x) B) for any A whose one-variable polynomial extension satisfies
/// the altitude formula, and arbitrary B:
///   max over p1 <= p, q1 <= q of the four mixed-ideal heights
///   plus min(t.d.(A/p), t.d.(B/q)).
FormulaTrace dim_tensor_general(const SpectralProfile& A,
                                const SpectralProfile& B);

/// Height formula for one-dimensional A with some A[n] satisfying the
/// altitude formula:
///   max over q1 <= q of ht(q1[t.d.(A)]) + ht((q/q1)[t.d.(A/p)])
///   + ht(p[t.d.(B/q1)]), plus the residual height.
FormulaTrace onedim_tensor_height(const SpectralProfile& A,
                                  const SpectralProfile& B, NodeId p, NodeId q,
                                  int delta);

}  // namespace tensordim

#endif
