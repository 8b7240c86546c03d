#include "tensordim/spectral_profile.hpp"

#include <algorithm>
#include <sstream>

#include "tensordim/errors.hpp"

namespace tensordim {

HeightSequence::HeightSequence(std::vector<int> prefix, int tail)
    : prefix_(std::move(prefix)), tail_(tail) {
  for (int v : prefix_) {
    if (v < 0) throw InvalidParamError("heights are nonnegative");
  }
  if (tail_ < 0) throw InvalidParamError("heights are nonnegative");
}

HeightSequence HeightSequence::constant(int value) {
  return HeightSequence({}, value);
}

int HeightSequence::at(int n) const {
  if (n < 0) throw InvalidParamError("negative polynomial-extension index");
  if (n < static_cast<int>(prefix_.size())) return prefix_[n];
  return tail_;
}

bool HeightSequence::is_nondecreasing() const {
  for (std::size_t i = 1; i < prefix_.size(); ++i) {
    if (prefix_[i] < prefix_[i - 1]) return false;
  }
  return prefix_.empty() || tail_ >= prefix_.back();
}

bool HeightSequence::is_constant() const {
  return std::all_of(prefix_.begin(), prefix_.end(),
                     [&](int v) { return v == tail_; });
}

SpectralProfile::SpectralProfile(Data data)
    : td_total_(data.td_total),
      domain_(data.domain),
      node_names_(std::move(data.node_names)),
      td_quotient_(std::move(data.td_quotient)),
      relheight_(std::move(data.relheight)),
      min_node_(data.min_node) {
  const int n = node_count();
  if (n == 0) throw InvalidParamError("a profile needs at least one node");
  if (static_cast<int>(td_quotient_.size()) != n) {
    throw InvalidParamError("td_quotient size does not match the node set");
  }
  leq_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq_[i][i] = true;
  for (auto [a, b] : data.order) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw InvalidParamError("order pair references an unknown node");
    }
    leq_[a][b] = true;
  }
  for (const auto& entry : relheight_) {
    auto [a, b] = entry.first;
    if (a < 0 || a >= n || b < 0 || b >= n || !leq_[a][b]) {
      throw InvalidParamError("relheight on a pair not declared comparable");
    }
  }
  // Diagonal sequences default to zero.
  for (int i = 0; i < n; ++i) {
    relheight_.try_emplace({i, i}, HeightSequence::constant(0));
  }
  if (domain_) {
    if (!min_node_) {
      throw InvalidParamError("a domain profile designates a minimum node");
    }
    if (*min_node_ < 0 || *min_node_ >= n) {
      throw InvalidParamError("minimum node out of range");
    }
  }
  // Every declared comparable pair needs its sequence.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (leq_[i][j] && !relheight_.count({i, j})) {
        throw InvalidParamError("comparable pair (" + node_names_[i] + ", " +
                                node_names_[j] + ") lacks a height sequence");
      }
    }
  }
}

void SpectralProfile::check_node(NodeId p) const {
  if (p < 0 || p >= node_count()) {
    throw InvalidParamError("node id out of range");
  }
}

const std::string& SpectralProfile::node_name(NodeId p) const {
  check_node(p);
  return node_names_[p];
}

std::optional<NodeId> SpectralProfile::find_node(const std::string& name) const {
  for (int i = 0; i < node_count(); ++i) {
    if (node_names_[i] == name) return i;
  }
  return std::nullopt;
}

int SpectralProfile::td_quotient(NodeId p) const {
  check_node(p);
  return td_quotient_[p];
}

NodeId SpectralProfile::min_node() const {
  if (!min_node_) {
    throw PreconditionError("profile is not domain-flagged: no minimum node");
  }
  return *min_node_;
}

bool SpectralProfile::leq(NodeId p1, NodeId p2) const {
  check_node(p1);
  check_node(p2);
  return leq_[p1][p2];
}

const HeightSequence& SpectralProfile::relheight(NodeId p1, NodeId p2) const {
  check_node(p1);
  check_node(p2);
  auto it = relheight_.find({p1, p2});
  if (it == relheight_.end()) {
    throw PreconditionError("nodes " + node_names_[p1] + " and " +
                            node_names_[p2] + " are not comparable");
  }
  return it->second;
}

std::vector<NodeId> SpectralProfile::minimal_nodes() const {
  std::vector<NodeId> result;
  for (int p = 0; p < node_count(); ++p) {
    bool minimal = true;
    for (int q = 0; q < node_count(); ++q) {
      if (q != p && leq_[q][p]) {
        minimal = false;
        break;
      }
    }
    if (minimal) result.push_back(p);
  }
  return result;
}

int SpectralProfile::height(NodeId p, int n) const {
  check_node(p);
  if (domain_ && min_node_) return relheight(*min_node_, p).at(n);
  int best = 0;
  for (NodeId m : minimal_nodes()) {
    if (leq_[m][p]) best = std::max(best, relheight(m, p).at(n));
  }
  return best;
}

int SpectralProfile::dim() const {
  int best = 0;
  for (int p = 0; p < node_count(); ++p) best = std::max(best, height(p, 0));
  return best;
}

namespace {

std::string seq_to_string(const HeightSequence& h) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < h.prefix().size(); ++i) {
    out << h.prefix()[i] << ", ";
  }
  out << h.tail() << "...]";
  return out.str();
}

}  // namespace

ValidationReport validate_profile(const SpectralProfile& s) {
  ValidationReport report;
  const int n = s.node_count();
  auto flag = [&](std::string rule, std::vector<NodeId> nodes,
                  std::optional<int> index, std::string detail) {
    report.violations.push_back(
        {std::move(rule), std::move(nodes), index, std::move(detail)});
  };

  // Partial-order axioms over the declared comparabilities.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && s.leq(a, b) && s.leq(b, a)) {
        flag("antisymmetry", {a, b}, std::nullopt,
             "distinct nodes are mutually comparable");
      }
      for (int c = 0; c < n; ++c) {
        if (s.leq(a, b) && s.leq(b, c) && !s.leq(a, c)) {
          flag("transitivity", {a, b, c}, std::nullopt,
               "order is not transitively closed");
        }
      }
    }
  }
  if (s.is_domain()) {
    NodeId m = s.min_node();
    for (int p = 0; p < n; ++p) {
      if (!s.leq(m, p)) {
        flag("minimum", {m, p}, std::nullopt,
             "designated minimum is not below every node");
      }
    }
  }
  int td_sup = 0;
  for (int p = 0; p < n; ++p) {
    if (s.td_quotient(p) < 0) {
      flag("nonnegative-td", {p}, std::nullopt, "negative t.d.(A/p)");
    }
    td_sup = std::max(td_sup, s.td_quotient(p));
  }
  if (s.td_total() < 0) {
    flag("nonnegative-td", {}, std::nullopt, "negative t.d.(A)");
  }
  // t.d.(A) is the sup of t.d.(A/p) over the spectrum.
  if (s.td_total() != td_sup) {
    flag("td-consistency", {}, std::nullopt,
         "t.d.(A) = " + std::to_string(s.td_total()) +
             " differs from the largest quotient t.d. " +
             std::to_string(td_sup));
  }

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!s.leq(a, b)) continue;
      const HeightSequence& h = s.relheight(a, b);
      if (!h.is_nondecreasing()) {
        flag("nondecreasing", {a, b}, std::nullopt,
             "height sequence decreases: " + seq_to_string(h));
      }
      if (a == b && (h.tail() != 0 || !h.is_constant())) {
        flag("zero-diagonal", {a}, std::nullopt,
             "relheight(p, p) is not the zero sequence");
      }
      if (s.td_quotient(a) < s.td_quotient(b)) {
        flag("td-monotone", {a, b}, std::nullopt,
             "t.d.(A/p1) < t.d.(A/p2) on a comparable pair");
      }
      // The bound ht((p2/p1)[n]) + t.d.(A/p2) <= t.d.(A/p1) is uniform in n:
      // both sides of the inequality in (A/p1)[n] gain the same n.
      for (int i = 0; i <= h.stable_index(); ++i) {
        if (h.at(i) + s.td_quotient(b) > s.td_quotient(a)) {
          flag("nagata-bound", {a, b}, i,
               "ht((p2/p1)[n]) + t.d.(A/p2) = " +
                   std::to_string(h.at(i) + s.td_quotient(b)) + " > " +
                   std::to_string(s.td_quotient(a)) + " = t.d.(A/p1)");
          break;
        }
      }
    }
  }

  // Superadditivity along chains, checked out to an index beyond which all
  // three sequences are constant.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!s.leq(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (!s.leq(b, c)) continue;
        const HeightSequence& hab = s.relheight(a, b);
        const HeightSequence& hbc = s.relheight(b, c);
        const HeightSequence& hac = s.relheight(a, c);
        int horizon = std::max({hab.stable_index(), hbc.stable_index(),
                                hac.stable_index()}) +
                      1;
        for (int i = 0; i < horizon; ++i) {
          if (hab.at(i) + hbc.at(i) > hac.at(i)) {
            flag("superadditivity", {a, b, c}, i,
                 "ht(p2/p1)[n] + ht(p3/p2)[n] = " +
                     std::to_string(hab.at(i) + hbc.at(i)) + " > " +
                     std::to_string(hac.at(i)) + " = ht(p3/p1)[n]");
            break;
          }
        }
      }
    }
  }
  return report;
}

bool is_af_domain(const SpectralProfile& s) { return is_afn(s, 0); }

bool is_afn(const SpectralProfile& s, int n) {
  if (!s.is_domain()) {
    throw PreconditionError(
        "altitude-formula predicates require a domain profile");
  }
  if (n < 0) throw InvalidParamError("negative polynomial-extension index");
  NodeId m = s.min_node();
  for (int p = 0; p < s.node_count(); ++p) {
    if (s.relheight(m, p).at(n) + s.td_quotient(p) != s.td_total()) {
      return false;
    }
  }
  return true;
}

bool is_locally_jaffard(const SpectralProfile& s) {
  for (int a = 0; a < s.node_count(); ++a) {
    for (int b = 0; b < s.node_count(); ++b) {
      if (s.leq(a, b) && !s.relheight(a, b).is_constant()) return false;
    }
  }
  return true;
}

}  // namespace tensordim
