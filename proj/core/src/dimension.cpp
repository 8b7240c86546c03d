#include "tensordim/dimension.hpp"

#include <algorithm>
#include <sstream>

#include "tensordim/errors.hpp"

namespace tensordim {

std::string FormulaTrace::render() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    out << (i ? " " : "") << witness[i].role << "=" << witness[i].name;
  }
  if (!witness.empty() && !terms.empty()) out << " : ";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out << (i ? " + " : "") << terms[i].label << "=" << terms[i].value;
  }
  return out.str();
}

namespace {

void require_nonnegative(int v, const char* what) {
  if (v < 0) throw InvalidParamError(std::string(what) + " must be >= 0");
}

void require_valid(const SpectralProfile& s, const char* side) {
  ValidationReport r = validate_profile(s);
  if (!r.ok()) {
    const ProfileViolation& v = r.violations.front();
    throw PreconditionError(std::string(side) +
                            " profile fails validation: " + v.rule + " (" +
                            v.detail + ")");
  }
}

/// First node violating ht(p[n]) + t.d.(A/p) = t.d.(A), if any.
std::optional<NodeId> afn_witness(const SpectralProfile& A, int n) {
  NodeId m = A.min_node();
  for (NodeId p = 0; p < A.node_count(); ++p) {
    if (A.relheight(m, p).at(n) + A.td_quotient(p) != A.td_total()) return p;
  }
  return std::nullopt;
}

void require_af(const SpectralProfile& A) {
  if (!A.is_domain()) {
    throw PreconditionError("the left factor must be a domain profile");
  }
  if (auto p = afn_witness(A, 0)) {
    throw PreconditionError(
        "not an altitude-formula domain: node " + A.node_name(*p) +
        " has ht(p) + t.d.(A/p) = " +
        std::to_string(A.relheight(A.min_node(), *p).at(0) +
                       A.td_quotient(*p)) +
        " != " + std::to_string(A.td_total()) + " = t.d.(A)");
  }
}

void require_afn1(const SpectralProfile& A) {
  if (!A.is_domain()) {
    throw PreconditionError("the left factor must be a domain profile");
  }
  if (auto p = afn_witness(A, 1)) {
    throw PreconditionError(
        "A[X] is not an altitude-formula domain: node " + A.node_name(*p) +
        " has ht(p[1]) + t.d.(A/p) = " +
        std::to_string(A.relheight(A.min_node(), *p).at(1) +
                       A.td_quotient(*p)) +
        " != " + std::to_string(A.td_total()) + " = t.d.(A)");
  }
}

/// Gate for the height decomposition ht(P) = ht(mixed) + residual. Admits
/// the classes for which the four-term mixed-ideal formula is established:
///  - A[X] satisfies the altitude formula;
///  - dim(A) = 1 and some A[n], n <= t.d.(A) + t.d.(B), satisfies it
///    (the profile has no class strictly between a minimal and a maximal
///    one, so the four-term max collapses to the one-dimensional formula);
///  - A locally Jaffard with every nonminimal class algebraic over the
///    base field (each tensor prime then contracts to (0) or lies minimally
///    over its mixed ideal).
void require_chain_decomposable(const SpectralProfile& A,
                                const SpectralProfile& B) {
  if (!A.is_domain()) {
    throw PreconditionError("the left factor must be a domain profile");
  }
  if (!afn_witness(A, 1)) return;
  if (A.dim() == 1) {
    int bound = A.td_total() + B.td_total();
    for (int n = 0; n <= bound; ++n) {
      if (!afn_witness(A, n)) return;
    }
  }
  if (is_locally_jaffard(A)) {
    bool residually_algebraic = true;
    for (NodeId p = 0; p < A.node_count(); ++p) {
      if (p != A.min_node() && A.td_quotient(p) != 0) {
        residually_algebraic = false;
        break;
      }
    }
    if (residually_algebraic) return;
  }
  NodeId w = *afn_witness(A, 1);
  throw PreconditionError(
      "height decomposition requires A[X] to satisfy the altitude formula, "
      "or dim(A) = 1 with some A[n] satisfying it: node " +
      A.node_name(w) + " violates it at n = 1");
}

void check_node(const SpectralProfile& s, NodeId p, const char* side) {
  if (p < 0 || p >= s.node_count()) {
    throw InvalidParamError(std::string("node index out of range for the ") +
                            side + " profile");
  }
}

}  // namespace

int dim_tensor_fields(int m, int n) {
  require_nonnegative(m, "t.d.");
  require_nonnegative(n, "t.d.");
  return std::min(m, n);
}

FormulaTrace wadsworth_d(int s, int d, const SpectralProfile& B) {
  require_nonnegative(s, "t.d.");
  require_nonnegative(d, "dim");
  if (d > s) {
    throw PreconditionError("dim exceeds t.d. in the D-function arguments");
  }
  require_valid(B, "right");

  FormulaTrace best;
  bool first = true;
  for (NodeId q = 0; q < B.node_count(); ++q) {
    int ht = B.height(q, s);
    int cap = std::min(s, d + B.td_quotient(q));
    int value = ht + cap;
    if (first || value > best.value) {
      first = false;
      best.value = value;
      best.witness = {{"q", q, B.node_name(q)}};
      best.terms = {{"ht(q[t.d.(A)])", ht},
                    {"min(t.d.(A), dim(A) + t.d.(B/q))", cap}};
    }
  }
  return best;
}

int dim_tensor_af_pair(int dim_a, int td_a, int dim_b, int td_b) {
  require_nonnegative(dim_a, "dim");
  require_nonnegative(dim_b, "dim");
  require_nonnegative(td_a, "t.d.");
  require_nonnegative(td_b, "t.d.");
  if (dim_a > td_a || dim_b > td_b) {
    throw PreconditionError("an altitude-formula domain has dim <= t.d.");
  }
  return std::min(dim_a + td_b, td_a + dim_b);
}

FormulaTrace dim_tensor_af(const SpectralProfile& A, const SpectralProfile& B) {
  require_valid(A, "left");
  require_af(A);
  return wadsworth_d(A.td_total(), A.dim(), B);
}

namespace {

struct MixedTerms {
  int ht_q1;
  int ht_p1;
  int ht_q_over_q1;
  int ht_p_over_p1;
  int total() const { return ht_q1 + ht_p1 + ht_q_over_q1 + ht_p_over_p1; }
};

MixedTerms mixed_terms(const SpectralProfile& A, const SpectralProfile& B,
                       NodeId p1, NodeId q1, NodeId p, NodeId q) {
  return MixedTerms{
      B.height(q1, A.td_total()),
      A.height(p1, B.td_quotient(q1)),
      B.relheight(q1, q).at(A.td_quotient(p1)),
      A.relheight(p1, p).at(B.td_quotient(q)),
  };
}

std::vector<TraceTerm> mixed_trace_terms(const MixedTerms& t) {
  return {{"ht(q1[t.d.(A)])", t.ht_q1},
          {"ht(p1[t.d.(B/q1)])", t.ht_p1},
          {"ht((q/q1)[t.d.(A/p1)])", t.ht_q_over_q1},
          {"ht((p/p1)[t.d.(B/q)])", t.ht_p_over_p1}};
}

}  // namespace

FormulaTrace ht_mixed_ideal(const SpectralProfile& A, const SpectralProfile& B,
                            NodeId p, NodeId q) {
  check_node(A, p, "left");
  check_node(B, q, "right");
  require_valid(A, "left");
  require_valid(B, "right");
  require_chain_decomposable(A, B);

  FormulaTrace best;
  bool first = true;
  for (NodeId q1 = 0; q1 < B.node_count(); ++q1) {
    if (!B.leq(q1, q)) continue;
    for (NodeId p1 = 0; p1 < A.node_count(); ++p1) {
      if (!A.leq(p1, p)) continue;
      MixedTerms t = mixed_terms(A, B, p1, q1, p, q);
      if (first || t.total() > best.value) {
        first = false;
        best.value = t.total();
        best.witness = {{"q1", q1, B.node_name(q1)},
                        {"p1", p1, A.node_name(p1)}};
        best.terms = mixed_trace_terms(t);
      }
    }
  }
  return best;
}

FormulaTrace gsct_height(const SpectralProfile& A, const SpectralProfile& B,
                         const TensorPrimeDescriptor& desc) {
  check_node(A, desc.p, "left");
  check_node(B, desc.q, "right");
  require_nonnegative(desc.delta, "residual height");
  int bound = std::min(A.td_quotient(desc.p), B.td_quotient(desc.q));
  if (desc.delta > bound) {
    throw PreconditionError(
        "residual height " + std::to_string(desc.delta) +
        " exceeds min(t.d.(A/p), t.d.(B/q)) = " + std::to_string(bound));
  }
  FormulaTrace trace = ht_mixed_ideal(A, B, desc.p, desc.q);
  trace.value += desc.delta;
  trace.terms.push_back({"ht(P/mixed(p,q))", desc.delta});
  return trace;
}

int sct_height(const SpectralProfile& A, const SpectralProfile& B, NodeId q,
               int delta_over_aq) {
  check_node(B, q, "right");
  require_nonnegative(delta_over_aq, "residual height");
  require_valid(A, "left");
  require_valid(B, "right");
  require_af(A);
  return B.height(q, A.td_total()) + delta_over_aq;
}

int ht_min_over_extension(const SpectralProfile& B, const SpectralProfile& A,
                          NodeId p) {
  check_node(A, p, "coefficient");
  require_valid(B, "extension");
  require_valid(A, "coefficient");
  if (!B.is_domain()) {
    throw PreconditionError("the extension factor must be a domain profile");
  }
  return A.height(p, B.td_total());
}

FormulaTrace dim_tensor_general(const SpectralProfile& A,
                                const SpectralProfile& B) {
  require_valid(A, "left");
  require_valid(B, "right");
  require_afn1(A);

  FormulaTrace best;
  bool first = true;
  for (NodeId q1 = 0; q1 < B.node_count(); ++q1) {
    for (NodeId q = 0; q < B.node_count(); ++q) {
      if (!B.leq(q1, q)) continue;
      for (NodeId p1 = 0; p1 < A.node_count(); ++p1) {
        for (NodeId p = 0; p < A.node_count(); ++p) {
          if (!A.leq(p1, p)) continue;
          MixedTerms t = mixed_terms(A, B, p1, q1, p, q);
          int cap = std::min(A.td_quotient(p), B.td_quotient(q));
          int value = t.total() + cap;
          if (first || value > best.value) {
            first = false;
            best.value = value;
            best.witness = {{"q1", q1, B.node_name(q1)},
                            {"q", q, B.node_name(q)},
                            {"p1", p1, A.node_name(p1)},
                            {"p", p, A.node_name(p)}};
            best.terms = mixed_trace_terms(t);
            best.terms.push_back({"min(t.d.(A/p), t.d.(B/q))", cap});
          }
        }
      }
    }
  }
  return best;
}

FormulaTrace onedim_tensor_height(const SpectralProfile& A,
                                  const SpectralProfile& B, NodeId p, NodeId q,
                                  int delta) {
  check_node(A, p, "left");
  check_node(B, q, "right");
  require_nonnegative(delta, "residual height");
  require_valid(A, "left");
  require_valid(B, "right");
  if (!A.is_domain()) {
    throw PreconditionError("the left factor must be a domain profile");
  }
  if (A.dim() != 1) {
    throw PreconditionError("the one-dimensional height formula needs "
                            "dim(A) = 1, got " +
                            std::to_string(A.dim()));
  }
  int bound = A.td_total() + B.td_total();
  bool some_afn = false;
  for (int n = 0; n <= bound && !some_afn; ++n) {
    some_afn = !afn_witness(A, n);
  }
  if (!some_afn) {
    throw PreconditionError(
        "no polynomial extension A[n], n <= " + std::to_string(bound) +
        ", satisfies the altitude formula");
  }

  FormulaTrace best;
  bool first = true;
  for (NodeId q1 = 0; q1 < B.node_count(); ++q1) {
    if (!B.leq(q1, q)) continue;
    int ht_q1 = B.height(q1, A.td_total());
    int ht_q_over_q1 = B.relheight(q1, q).at(A.td_quotient(p));
    int ht_p = A.height(p, B.td_quotient(q1));
    int value = ht_q1 + ht_q_over_q1 + ht_p;
    if (first || value > best.value) {
      first = false;
      best.value = value;
      best.witness = {{"q1", q1, B.node_name(q1)}};
      best.terms = {{"ht(q1[t.d.(A)])", ht_q1},
                    {"ht((q/q1)[t.d.(A/p)])", ht_q_over_q1},
                    {"ht(p[t.d.(B/q1)])", ht_p}};
    }
  }
  best.value += delta;
  best.terms.push_back({"ht(P/mixed(p,q))", delta});
  return best;
}

}  // namespace tensordim
