#ifndef TENSORDIM_SPECTRAL_PROFILE_HPP
#define TENSORDIM_SPECTRAL_PROFILE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tensordim {

/// The function n -> ht(p[n]): a finite prefix of values h(0..m-1) followed
/// by a constant tail. Nondecreasing in any semantically valid profile; the
/// validator reports violations rather than the constructor rejecting them.
class HeightSequence {
 public:
  HeightSequence(std::vector<int> prefix, int tail);

  /// The constant sequence h(n) = value.
  static HeightSequence constant(int value);

  int at(int n) const;
  const std::vector<int>& prefix() const { return prefix_; }
  int tail() const { return tail_; }
  /// Index from which the sequence is provably constant.
  int stable_index() const { return static_cast<int>(prefix_.size()); }

  bool is_nondecreasing() const;
  bool is_constant() const;

  bool operator==(const HeightSequence& other) const = default;

 private:
  std::vector<int> prefix_;
  int tail_;
};

using NodeId = int;

/// One violated profile invariant, with the witnessing nodes and, when the
/// failure is index-dependent, the polynomial-extension index n.
struct ProfileViolation {
  std::string rule;
  std::vector<NodeId> nodes;
  std::optional<int> index;
  std::string detail;
};

struct ValidationReport {
  std::vector<ProfileViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Finite annotated poset abstraction of a prime spectrum. Each node is a
/// prime class carrying t.d.(A/p); each comparable pair (p1 <= p2) carries
/// the height sequence n -> ht((p2/p1)[n]) computed in (A/p1)[n].
///
/// Construction enforces structural coherence only (index ranges, arity,
/// reflexivity); the mathematical invariants are the business of
/// validate_profile so that deliberately broken profiles can be built and
/// reported on.
class SpectralProfile {
 public:
  struct Data {
    int td_total = 0;
    bool domain = false;
    std::vector<std::string> node_names;
    std::vector<int> td_quotient;
    /// Strict or non-strict order pairs (p1, p2) meaning p1 <= p2.
    /// Reflexive pairs are implied and need not be listed.
    std::vector<std::pair<NodeId, NodeId>> order;
    /// Height sequence per listed order pair. Diagonal entries default to
    /// the zero sequence and need not be listed.
    std::map<std::pair<NodeId, NodeId>, HeightSequence> relheight;
    std::optional<NodeId> min_node;
  };

  explicit SpectralProfile(Data data);

  int td_total() const { return td_total_; }
  bool is_domain() const { return domain_; }
  int node_count() const { return static_cast<int>(node_names_.size()); }
  const std::string& node_name(NodeId p) const;
  /// Node id for a name; nullopt when absent.
  std::optional<NodeId> find_node(const std::string& name) const;
  int td_quotient(NodeId p) const;
  NodeId min_node() const;  // throws on non-domain profiles
  bool leq(NodeId p1, NodeId p2) const;
  const HeightSequence& relheight(NodeId p1, NodeId p2) const;

  /// Nodes with no strictly smaller node.
  std::vector<NodeId> minimal_nodes() const;

  /// Absolute height ht(p[n]): relheight from the designated minimum for
  /// domain profiles; otherwise the max over minimal nodes below p, which
  /// is what a longest chain bottoming out at a minimal prime yields.
  int height(NodeId p, int n) const;

  /// Krull dimension of the profile: max over nodes of ht(p)(0).
  int dim() const;

  bool operator==(const SpectralProfile& other) const = default;

 private:
  void check_node(NodeId p) const;

  int td_total_;
  bool domain_;
  std::vector<std::string> node_names_;
  std::vector<int> td_quotient_;
  std::vector<std::vector<bool>> leq_;
  std::map<std::pair<NodeId, NodeId>, HeightSequence> relheight_;
  std::optional<NodeId> min_node_;
};

/// A prime P of A (x) B abstracted by its contractions p = P /\ A and
/// q = P /\ B plus the residual height above the mixed ideal
/// p(x)B + A(x)q. The residual is free data determined by P, bounded by
/// min(t.d.(A/p), t.d.(B/q)).
struct TensorPrimeDescriptor {
  NodeId p;
  NodeId q;
  int delta;
};

/// Checks every profile invariant and reports all violations: partial-order
/// axioms, designated minimum, sequence well-formedness, zero diagonal,
/// t.d. monotonicity, the Nagata bound ht(p2/p1) + t.d.(A/p2) <= t.d.(A/p1),
/// and height superadditivity ht(p1,p2)[n] + ht(p2,p3)[n] <= ht(p1,p3)[n]
/// along every chain and index.
ValidationReport validate_profile(const SpectralProfile& s);

/// Altitude formula test: ht(p) + t.d.(A/p) = t.d.(A) at every node.
/// Refuses (PreconditionError) on non-domain profiles.
bool is_af_domain(const SpectralProfile& s);

/// Altitude formula for the polynomial extension A[n]:
/// ht(p[n]) + t.d.(A/p) = t.d.(A) at every node. is_afn(s, 0) == is_af_domain(s).
bool is_afn(const SpectralProfile& s, int n);

/// True when every height sequence of the profile is constant.
bool is_locally_jaffard(const SpectralProfile& s);

}  // namespace tensordim

#endif
