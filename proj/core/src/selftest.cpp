#include "tensordim/selftest.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "tensordim/builders.hpp"
#include "tensordim/dimension.hpp"
#include "tensordim/errors.hpp"
#include "tensordim/groebner.hpp"

namespace tensordim::selftest {

namespace {

struct Checker {
  int checks = 0;
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }

  void expect_eq(int actual, int expected, const std::string& what) {
    expect(actual == expected, what + ": got " + std::to_string(actual) +
                                   ", expected " + std::to_string(expected));
  }
};

Polynomial var(std::size_t n, std::size_t i, unsigned e = 1) {
  return Polynomial::variable(n, i, e);
}

/// The presented fixtures: zero ideals in 1-3 variables, the cuspidal
/// cubic, the quadric cone, and two variable-subset primes.
std::vector<AlgebraPresentation> presented_fixtures() {
  std::vector<AlgebraPresentation> out;
  out.push_back(AlgebraPresentation::polynomial_ring({"x"}));
  out.push_back(AlgebraPresentation::polynomial_ring({"x", "y"}));
  out.push_back(AlgebraPresentation::polynomial_ring({"x", "y", "z"}));
  out.push_back(AlgebraPresentation({"x", "y"},
                                    {var(2, 1, 2) - var(2, 0, 3)}, true));
  out.push_back(AlgebraPresentation(
      {"x", "y", "z", "w"}, {var(4, 0) * var(4, 3) - var(4, 1) * var(4, 2)},
      true));
  out.push_back(AlgebraPresentation({"x", "y"}, {var(2, 0)}, true));
  out.push_back(AlgebraPresentation({"x", "y"}, {var(2, 0), var(2, 1)}, true));
  return out;
}

std::vector<SpectralProfile> fixture_profiles() {
  std::vector<SpectralProfile> out;
  for (int m = 0; m <= 3; ++m) out.push_back(build_field(m));
  for (int d = 0; d <= 3; ++d) out.push_back(build_fg_domain(d));
  out.push_back(build_example_2_8());
  for (int r = 1; r <= 3; ++r) out.push_back(build_pullback_field(r));
  return out;
}

CriterionResult sharp_formula() {
  Checker c;
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      int expected = std::min(m, n);
      c.expect_eq(dim_tensor_fields(m, n), expected,
                  "dim_tensor_fields(" + std::to_string(m) + ", " +
                      std::to_string(n) + ")");
      c.expect_eq(
          dim_tensor_general(build_field(m), build_field(n)).value, expected,
          "dim_tensor over field profiles (" + std::to_string(m) + ", " +
              std::to_string(n) + ")");
    }
  }
  return {1, "field tensor dimension is min of the t.d.s", c.ok, c.checks,
          c.detail};
}

CriterionResult oracle_formula_equivalence() {
  Checker c;
  std::vector<AlgebraPresentation> fixtures = presented_fixtures();
  for (const auto& a : fixtures) {
    for (const auto& b : fixtures) {
      std::optional<int> da = ideal_dimension(a);
      std::optional<int> db = ideal_dimension(b);
      std::optional<int> dt = ideal_dimension(tensor_presentation(a, b));
      c.expect(da && db && dt, "fixture dimension defined");
      if (!(da && db && dt)) continue;
      int af_pair = dim_tensor_af_pair(*da, *da, *db, *db);
      int general = dim_tensor_general(profile_from_presentation(a),
                                       profile_from_presentation(b))
                        .value;
      c.expect_eq(*dt, af_pair, "oracle vs pair formula");
      c.expect_eq(*dt, general, "oracle vs general formula");
    }
  }
  return {2, "oracle tensor dimension matches both formulas", c.ok, c.checks,
          c.detail};
}

CriterionResult general_formula_reduces_to_d() {
  Checker c;
  std::mt19937 rng(12345);
  std::vector<SpectralProfile> bs = fixture_profiles();
  for (int i = 0; i < 50; ++i) {
    SpectralProfile a = (rng() % 2 == 0)
                            ? build_fg_domain(static_cast<int>(rng() % 6))
                            : build_field(static_cast<int>(rng() % 6));
    for (const auto& b : bs) {
      c.expect_eq(dim_tensor_general(a, b).value, dim_tensor_af(a, b).value,
                  "general formula vs D-function");
    }
  }
  return {3, "general formula agrees with the D-function on AF profiles",
          c.ok, c.checks, c.detail};
}

CriterionResult example_2_8_fixture() {
  Checker c;
  SpectralProfile e = build_example_2_8();
  c.expect(!is_af_domain(e), "example profile is not AF");
  for (int n = 1; n <= 10; ++n) {
    c.expect(!is_afn(e, n), "example profile A[n] is not AF at n = " +
                                std::to_string(n));
  }
  c.expect(is_locally_jaffard(e), "example profile is locally Jaffard");
  c.expect(validate_profile(e).ok(), "example profile validates");

  std::vector<SpectralProfile> bs;
  for (int m = 0; m <= 3; ++m) bs.push_back(build_field(m));
  for (int d = 0; d <= 3; ++d) bs.push_back(build_fg_domain(d));
  for (const auto& b : bs) {
    for (NodeId p = 0; p < e.node_count(); ++p) {
      for (NodeId q = 0; q < b.node_count(); ++q) {
        int bound = std::min(e.td_quotient(p), b.td_quotient(q));
        for (int delta = 0; delta <= bound; ++delta) {
          try {
            FormulaTrace g = gsct_height(e, b, {p, q, delta});
            FormulaTrace m = ht_mixed_ideal(e, b, p, q);
            c.expect_eq(g.value, m.value + delta,
                        "height decomposition is the mixed height plus the "
                        "residual");
          } catch (const Error& err) {
            c.expect(false, std::string("decomposition refused: ") +
                                err.what());
          }
        }
      }
    }
  }
  return {4, "example profile behaves as a generalized AF-domain", c.ok,
          c.checks, c.detail};
}

CriterionResult pullback_fixture() {
  Checker c;
  for (int r = 1; r <= 3; ++r) {
    SpectralProfile p = build_pullback_field(r);
    c.expect(!is_af_domain(p),
             "pullback(r=" + std::to_string(r) + ") is not AF");
    for (int n = 0; n <= r + 5; ++n) {
      c.expect(is_afn(p, n) == (n >= r),
               "pullback(r=" + std::to_string(r) + ") A[n] AF iff n >= r, n=" +
                   std::to_string(n));
    }
  }
  SpectralProfile p1 = build_pullback_field(1);
  FormulaTrace t = dim_tensor_general(p1, p1);
  c.expect_eq(t.value, 3, "tensor square of pullback(1) has dimension 3");
  for (const auto& w : t.witness) {
    if (w.role == "p1" || w.role == "q1") {
      c.expect(w.name == "0", "witness " + w.role + " is the minimal class");
    } else {
      c.expect(w.name == "M", "witness " + w.role + " is the maximal class");
    }
  }
  return {5, "pullback profiles gain the altitude formula at n = r", c.ok,
          c.checks, c.detail};
}

CriterionResult extension_height_vs_oracle() {
  Checker c;
  struct Triple {
    AlgebraPresentation a;
    std::vector<Polynomial> prime_gens;  // over a's variables
    int node;                            // height of the prime in a
    AlgebraPresentation b;
    int expected;
  };
  std::vector<Triple> triples;
  triples.push_back({AlgebraPresentation::polynomial_ring({"x", "y"}),
                     {var(2, 0), var(2, 1)},
                     2,
                     AlgebraPresentation::polynomial_ring({"u"}),
                     2});
  triples.push_back({AlgebraPresentation::polynomial_ring({"x", "y"}),
                     {var(2, 0)},
                     1,
                     AlgebraPresentation::polynomial_ring({"u", "v"}),
                     1});
  triples.push_back({AlgebraPresentation({"x", "y"},
                                         {var(2, 1, 2) - var(2, 0, 3)}, true),
                     {var(2, 0), var(2, 1)},
                     1,
                     AlgebraPresentation::polynomial_ring({"u"}),
                     1});

  for (const auto& t : triples) {
    // Oracle route: the extension of the prime into the tensor ring, its
    // height read off as a dimension drop.
    AlgebraPresentation tensor = tensor_presentation(t.a, t.b);
    std::vector<Polynomial> ext_gens = tensor.generators();
    for (const auto& g : t.prime_gens) {
      Polynomial embedded(tensor.var_count());
      for (const auto& [m, coeff] : g.terms()) {
        std::vector<unsigned> e(tensor.var_count(), 0u);
        for (std::size_t i = 0; i < m.var_count(); ++i) e[i] = m.exponent(i);
        embedded = embedded + Polynomial::term(Monomial(std::move(e)), coeff);
      }
      ext_gens.push_back(std::move(embedded));
    }
    AlgebraPresentation extended(tensor.variables(), ext_gens, true);
    std::optional<int> dim_tensor_ring = ideal_dimension(tensor);
    std::optional<int> dim_quotient = ideal_dimension(extended);
    c.expect(dim_tensor_ring && dim_quotient, "oracle dimensions defined");
    if (!(dim_tensor_ring && dim_quotient)) continue;
    int oracle = *dim_tensor_ring - *dim_quotient;
    c.expect_eq(oracle, t.expected, "oracle height of the extended prime");

    int formula = ht_min_over_extension(profile_from_presentation(t.b),
                                        profile_from_presentation(t.a), t.node);
    c.expect_eq(formula, t.expected, "profile height of the extended prime");
  }
  return {6, "extension heights match the oracle", c.ok, c.checks, c.detail};
}

CriterionResult validator_criterion() {
  Checker c;

  SpectralProfile::Data bad;
  bad.td_total = 3;
  bad.domain = true;
  bad.node_names = {"0", "a", "b"};
  bad.td_quotient = {3, 2, 1};
  bad.min_node = 0;
  bad.order = {{0, 1}, {1, 2}, {0, 2}};
  bad.relheight.emplace(std::pair<NodeId, NodeId>{0, 1},
                        HeightSequence::constant(1));
  bad.relheight.emplace(std::pair<NodeId, NodeId>{1, 2},
                        HeightSequence::constant(1));
  bad.relheight.emplace(std::pair<NodeId, NodeId>{0, 2},
                        HeightSequence::constant(1));
  ValidationReport report = validate_profile(SpectralProfile(bad));
  bool found = false;
  for (const auto& v : report.violations) found |= v.rule == "superadditivity";
  c.expect(found, "superadditivity violation detected");

  std::mt19937 rng(67890);
  for (int i = 0; i < 220; ++i) {
    SpectralProfile s = [&]() {
      switch (rng() % 4) {
        case 0: return build_field(static_cast<int>(rng() % 9));
        case 1: return build_fg_domain(static_cast<int>(rng() % 9));
        case 2: return build_example_2_8();
        default: return build_pullback_field(1 + static_cast<int>(rng() % 8));
      }
    }();
    c.expect(validate_profile(s).ok(), "builder output validates");
  }
  return {7, "validator rejects broken profiles, accepts builders", c.ok,
          c.checks, c.detail};
}

CriterionResult sct_reduction() {
  Checker c;
  std::vector<SpectralProfile> afs;
  for (int m = 0; m <= 3; ++m) afs.push_back(build_field(m));
  for (int d = 0; d <= 3; ++d) afs.push_back(build_fg_domain(d));
  for (const auto& a : afs) {
    for (const auto& b : fixture_profiles()) {
      for (NodeId q = 0; q < b.node_count(); ++q) {
        int bound = std::min(a.td_total(), b.td_quotient(q));
        for (int delta = 0; delta <= bound; ++delta) {
          FormulaTrace g = gsct_height(a, b, {a.min_node(), q, delta});
          c.expect_eq(g.value, sct_height(a, b, q, delta),
                      "decomposition at p = (0) is the special chain height");
        }
      }
    }
  }
  return {8, "decomposition at p = (0) reduces to the special chain theorem",
          c.ok, c.checks, c.detail};
}

CriterionResult groebner_soundness() {
  Checker c;
  std::mt19937 rng(24680);
  for (const auto& a : presented_fixtures()) {
    MonomialOrder grevlex = MonomialOrder::grevlex(a.var_count());
    MonomialOrder lex = MonomialOrder::lex(a.var_count());
    std::vector<Polynomial> gb = buchberger(a.generators(), grevlex);

    auto render = [&](const std::vector<Polynomial>& basis) {
      std::string out;
      for (const auto& g : basis) out += to_string(g, a.variables(), grevlex) + ";";
      return out;
    };
    std::string canonical = render(gb);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Polynomial> shuffled = a.generators();
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      c.expect(render(buchberger(shuffled, grevlex)) == canonical,
               "reduced basis is canonical under generator reordering");
    }

    for (std::size_t i = 0; i < gb.size(); ++i) {
      for (std::size_t j = i + 1; j < gb.size(); ++j) {
        Polynomial s = s_polynomial(gb[i], gb[j], grevlex);
        c.expect(normal_form(s, gb, grevlex).is_zero(),
                 "every S-polynomial of the basis reduces to zero");
      }
    }

    c.expect(ideal_dimension(a, lex) == ideal_dimension(a, grevlex),
             "dimension is order-independent");
  }
  return {9, "Groebner engine is canonical and order-independent", c.ok,
          c.checks, c.detail};
}

}  // namespace

std::vector<CriterionResult> run_all() {
  return {
      sharp_formula(),
      oracle_formula_equivalence(),
      general_formula_reduces_to_d(),
      example_2_8_fixture(),
      pullback_fixture(),
      extension_height_vs_oracle(),
      validator_criterion(),
      sct_reduction(),
      groebner_soundness(),
  };
}

std::string format_results(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << "criterion " << r.id << " (" << r.name << "): "
        << (r.passed ? "PASS" : "FAIL") << " (" << r.checks << " checks)";
    if (!r.passed) out << " -- " << r.detail;
    out << "\n";
  }
  return out.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.passed; });
}

}  // namespace tensordim::selftest
