#include "tensordim/interpreter.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "tensordim/dimension.hpp"
#include "tensordim/errors.hpp"
#include "tensordim/groebner.hpp"

namespace tensordim::script {

namespace {

NodeId resolve_node(const SpectralProfile& s, const NodeRef& ref) {
  switch (ref.kind) {
    case NodeRef::Kind::min:
      return s.min_node();
    case NodeRef::Kind::max: {
      std::vector<NodeId> maximal;
      for (NodeId p = 0; p < s.node_count(); ++p) {
        bool is_max = true;
        for (NodeId q = 0; q < s.node_count(); ++q) {
          if (q != p && s.leq(p, q)) {
            is_max = false;
            break;
          }
        }
        if (is_max) maximal.push_back(p);
      }
      if (maximal.size() != 1) {
        throw PreconditionError("'max' is ambiguous: the profile has " +
                                std::to_string(maximal.size()) +
                                " maximal nodes");
      }
      return maximal.front();
    }
    case NodeRef::Kind::index:
    default:
      if (ref.index < 0 || ref.index >= s.node_count()) {
        throw InvalidParamError("node index out of range");
      }
      return ref.index;
  }
}

std::string render_basis(const std::vector<Polynomial>& basis,
                         const std::vector<std::string>& names,
                         const MonomialOrder& order) {
  std::string out = "{";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) out += ", ";
    out += to_string(basis[i], names, order);
  }
  return out + "}";
}

std::string render_violations(const ValidationReport& report,
                              const SpectralProfile& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    const ProfileViolation& v = report.violations[i];
    if (i) out << "; ";
    out << v.rule << "(";
    for (std::size_t j = 0; j < v.nodes.size(); ++j) {
      if (j) out << ", ";
      out << s.node_name(v.nodes[j]);
    }
    if (v.index) out << (v.nodes.empty() ? "" : ", ") << "n=" << *v.index;
    out << ")";
  }
  return out.str();
}

struct QueryOutcome {
  std::string value;
  std::string witness = "-";
};

QueryOutcome run_query(const Environment& env, const Query& q) {
  auto algebra = [&](std::size_t i) -> const AlgebraPresentation& {
    return env.algebras.at(q.args[i].name);
  };
  auto profile = [&](std::size_t i) -> const SpectralProfile& {
    return env.profiles.at(q.args[i].name);
  };
  auto node = [&](std::size_t i, const SpectralProfile& s) -> NodeId {
    return resolve_node(s, q.args[i].node);
  };
  auto integer = [&](std::size_t i) -> int {
    return static_cast<int>(q.args[i].integer);
  };
  auto from_trace = [](const FormulaTrace& t) -> QueryOutcome {
    return {std::to_string(t.value), t.render()};
  };

  if (q.qname == "dim") {
    if (env.algebras.count(q.args[0].name)) {
      std::optional<int> d = ideal_dimension(algebra(0));
      return {d ? std::to_string(*d) : "empty-spectrum"};
    }
    return {std::to_string(profile(0).dim())};
  }
  if (q.qname == "height") {
    return {std::to_string(prime_height(algebra(0)))};
  }
  if (q.qname == "groebner") {
    const AlgebraPresentation& a = algebra(0);
    MonomialOrder order = MonomialOrder::grevlex(a.var_count());
    return {render_basis(buchberger(a.generators(), order), a.variables(),
                         order)};
  }
  if (q.qname == "dim_tensor") {
    if (env.algebras.count(q.args[0].name)) {
      std::optional<int> d =
          ideal_dimension(tensor_presentation(algebra(0), algebra(1)));
      return {d ? std::to_string(*d) : "empty-spectrum"};
    }
    return from_trace(dim_tensor_general(profile(0), profile(1)));
  }
  if (q.qname == "dim_tensor_af") {
    return from_trace(dim_tensor_af(profile(0), profile(1)));
  }
  if (q.qname == "dim_tensor_fields") {
    return {std::to_string(dim_tensor_fields(integer(0), integer(1)))};
  }
  if (q.qname == "wadsworth_D") {
    return from_trace(wadsworth_d(integer(0), integer(1), profile(2)));
  }
  if (q.qname == "ht_mixed") {
    const SpectralProfile& a = profile(0);
    const SpectralProfile& b = profile(1);
    return from_trace(ht_mixed_ideal(a, b, node(2, a), node(3, b)));
  }
  if (q.qname == "gsct") {
    const SpectralProfile& a = profile(0);
    const SpectralProfile& b = profile(1);
    TensorPrimeDescriptor desc{node(2, a), node(3, b), integer(4)};
    return from_trace(gsct_height(a, b, desc));
  }
  if (q.qname == "sct") {
    const SpectralProfile& a = profile(0);
    const SpectralProfile& b = profile(1);
    return {std::to_string(sct_height(a, b, node(2, b), integer(3)))};
  }
  if (q.qname == "ht_min_ext") {
    const SpectralProfile& b = profile(0);
    const SpectralProfile& a = profile(1);
    return {std::to_string(ht_min_over_extension(b, a, node(2, a)))};
  }
  if (q.qname == "onedim_ht") {
    const SpectralProfile& a = profile(0);
    const SpectralProfile& b = profile(1);
    return from_trace(
        onedim_tensor_height(a, b, node(2, a), node(3, b), integer(4)));
  }
  if (q.qname == "af") {
    return {is_af_domain(profile(0)) ? "true" : "false"};
  }
  if (q.qname == "afn") {
    return {is_afn(profile(0), integer(1)) ? "true" : "false"};
  }
  if (q.qname == "locally_jaffard") {
    return {is_locally_jaffard(profile(0)) ? "true" : "false"};
  }
  // validate
  const SpectralProfile& s = profile(0);
  ValidationReport report = validate_profile(s);
  if (report.ok()) return {"ok"};
  return {"invalid", render_violations(report, s)};
}

}  // namespace

std::vector<ReportRecord> execute_script(const Script& s) {
  Environment env = check_script(s);
  std::vector<ReportRecord> records;
  records.reserve(s.queries.size());
  int id = 0;
  for (const Query& q : s.queries) {
    ReportRecord record;
    record.id = ++id;
    record.op = q.qname;
    auto start = std::chrono::steady_clock::now();
    try {
      QueryOutcome outcome = run_query(env, q);
      record.value = std::move(outcome.value);
      record.witness = std::move(outcome.witness);
    } catch (const Error& e) {
      record.refused = true;
      record.value = "-";
      record.witness = e.what();
    } catch (const std::exception& e) {
      record.refused = true;
      record.value = "-";
      record.witness = std::string("internal error: ") + e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    record.elapsed_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    records.push_back(std::move(record));
  }
  return records;
}

bool any_refused(const std::vector<ReportRecord>& records) {
  return std::any_of(records.begin(), records.end(),
                     [](const ReportRecord& r) { return r.refused; });
}

std::string format_report(const std::vector<ReportRecord>& records,
                          ReportMode mode) {
  std::ostringstream out;
  if (mode == ReportMode::machine) {
    for (const ReportRecord& r : records) {
      out << r.id << '\t' << r.op << '\t' << (r.refused ? "refused" : "ok")
          << '\t' << r.value << '\t' << (r.witness.empty() ? "-" : r.witness)
          << '\n';
    }
    return out.str();
  }

  std::size_t op_width = 2, value_width = 5;
  for (const ReportRecord& r : records) {
    op_width = std::max(op_width, r.op.size());
    value_width = std::max(value_width, r.value.size());
  }
  out << std::left << std::setw(5) << "id" << std::setw(op_width + 2) << "op"
      << std::setw(9) << "status" << std::setw(value_width + 2) << "value"
      << "time\n";
  for (const ReportRecord& r : records) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(2) << r.elapsed_ms << "ms";
    out << std::left << std::setw(5) << r.id << std::setw(op_width + 2) << r.op
        << std::setw(9) << (r.refused ? "refused" : "ok")
        << std::setw(value_width + 2) << r.value << ms.str() << "\n";
    if (r.witness != "-" && !r.witness.empty()) {
      out << "     " << (r.refused ? "reason: " : "witness: ") << r.witness
          << "\n";
    }
  }
  return out.str();
}

}  // namespace tensordim::script
