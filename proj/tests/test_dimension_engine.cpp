#include <doctest.h>

#include <random>

#include "tensordim/builders.hpp"
#include "tensordim/dimension.hpp"
#include "tensordim/errors.hpp"
#include "tensordim/groebner.hpp"

using namespace tensordim;

namespace {

std::vector<SpectralProfile> fixture_profiles() {
  std::vector<SpectralProfile> out;
  for (int m = 0; m <= 3; ++m) out.push_back(build_field(m));
  for (int d = 0; d <= 3; ++d) out.push_back(build_fg_domain(d));
  out.push_back(build_example_2_8());
  for (int r = 1; r <= 3; ++r) out.push_back(build_pullback_field(r));
  return out;
}

int term_sum(const FormulaTrace& t) {
  int sum = 0;
  for (const auto& term : t.terms) sum += term.value;
  return sum;
}

}  // namespace

TEST_CASE("field tensor dimension") {
  CHECK(dim_tensor_fields(0, 5) == 0);
  CHECK(dim_tensor_fields(2, 3) == 2);
  CHECK(dim_tensor_fields(4, 4) == 4);
  CHECK_THROWS_AS(dim_tensor_fields(-1, 2), InvalidParamError);
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      CHECK(dim_tensor_fields(m, n) == dim_tensor_fields(n, m));
    }
  }
}

TEST_CASE("the D-function") {
  // D(0, 0, B) leaves only the height term: dim(B)
  for (const auto& b : fixture_profiles()) {
    CHECK(wadsworth_d(0, 0, b).value == b.dim());
  }
  // single-node profiles contribute no height
  CHECK(wadsworth_d(3, 2, build_field(4)).value == 3);
  CHECK(wadsworth_d(3, 2, build_field(0)).value == 2);
  // two-node profile with constant height 1: the nonzero class wins
  FormulaTrace t = wadsworth_d(1, 1, build_example_2_8());
  CHECK(t.value == 2);
  CHECK(t.witness.size() == 1);
  CHECK(t.witness[0].name == "p");
  CHECK(term_sum(t) == t.value);

  CHECK_THROWS_AS(wadsworth_d(1, 2, build_field(0)), PreconditionError);
}

TEST_CASE("tensor dimension of two altitude-formula domains") {
  CHECK(dim_tensor_af_pair(0, 3, 0, 2) == 2);  // fields
  CHECK(dim_tensor_af_pair(2, 2, 3, 3) == 5);  // polynomial rings
  CHECK(dim_tensor_af_pair(1, 1, 2, 2) == 3);
  CHECK(dim_tensor_af_pair(1, 2, 1, 3) == 3);
  CHECK_THROWS_AS(dim_tensor_af_pair(3, 2, 1, 1), PreconditionError);
}

TEST_CASE("dim_tensor_af delegates to the D-function") {
  CHECK(dim_tensor_af(build_fg_domain(2), build_field(3)).value == 2);
  CHECK(dim_tensor_af(build_fg_domain(1), build_example_2_8()).value == 2);
  // the base field is neutral
  for (const auto& b : fixture_profiles()) {
    CHECK(dim_tensor_af(build_field(0), b).value == b.dim());
  }
  // refusal names a witness class
  try {
    dim_tensor_af(build_pullback_field(1), build_field(1));
    FAIL("expected a refusal");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("M") != std::string::npos);
  }
}

TEST_CASE("mixed-ideal heights") {
  SpectralProfile fg1 = build_fg_domain(1);
  CHECK(ht_mixed_ideal(fg1, fg1, 0, 0).value == 0);
  CHECK(ht_mixed_ideal(fg1, fg1, 1, 1).value == 2);

  SpectralProfile pb1 = build_pullback_field(1);
  FormulaTrace t = ht_mixed_ideal(pb1, pb1, 1, 1);
  CHECK(t.value == 3);
  CHECK(term_sum(t) == 3);
  // ties resolve to the smallest witness tuple
  for (const auto& w : t.witness) CHECK(w.name == "0");
}

TEST_CASE("height decomposition over a descriptor") {
  SpectralProfile fg1 = build_fg_domain(1);
  SpectralProfile fg2 = build_fg_domain(2);
  SpectralProfile pb1 = build_pullback_field(1);

  CHECK(gsct_height(fg1, fg2, {0, 0, 0}).value == 0);
  CHECK(gsct_height(pb1, pb1, {1, 1, 0}).value == 3);
  // mixed part ht(q[t.d.(A)]) = 1 plus residual 1
  CHECK(gsct_height(fg1, fg2, {0, 1, 1}).value == 2);

  // the residual is capped by min(t.d.(A/p), t.d.(B/q))
  CHECK_THROWS_AS(gsct_height(fg1, fg2, {1, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(gsct_height(fg1, fg2, {0, 0, -1}), InvalidParamError);
}

TEST_CASE("special chain heights") {
  SpectralProfile fg1 = build_fg_domain(1);
  SpectralProfile fg2 = build_fg_domain(2);
  CHECK(sct_height(fg2, build_example_2_8(), 0, 0) == 0);
  CHECK(sct_height(fg2, build_example_2_8(), 1, 0) == 1);
  CHECK(sct_height(fg1, fg1, 1, 1) == 2);
  CHECK_THROWS_AS(sct_height(build_example_2_8(), fg1, 0, 0),
                  PreconditionError);
}

TEST_CASE("extension heights of minimal covering primes") {
  CHECK(ht_min_over_extension(build_field(1), build_example_2_8(), 1) == 1);
  CHECK(ht_min_over_extension(build_fg_domain(2), build_pullback_field(1), 1) ==
        2);
  CHECK(ht_min_over_extension(build_field(3), build_fg_domain(2), 0) == 0);
  // the extension factor must be a domain
  SpectralProfile::Data d;
  d.td_total = 0;
  d.domain = false;
  d.node_names = {"a", "b"};
  d.td_quotient = {0, 0};
  CHECK_THROWS_AS(
      ht_min_over_extension(SpectralProfile(std::move(d)), build_fg_domain(1), 0),
      PreconditionError);
}

TEST_CASE("general tensor dimension") {
  CHECK(dim_tensor_general(build_field(2), build_field(3)).value == 2);
  CHECK(dim_tensor_general(build_fg_domain(2), build_fg_domain(3)).value == 5);

  SpectralProfile pb1 = build_pullback_field(1);
  FormulaTrace t = dim_tensor_general(pb1, pb1);
  CHECK(t.value == 3);
  REQUIRE(t.witness.size() == 4);
  for (const auto& w : t.witness) {
    CHECK(w.name == ((w.role == "p" || w.role == "q") ? "M" : "0"));
  }
  CHECK(term_sum(t) == 3);

  // hypothesis: A[X] satisfies the altitude formula
  CHECK_THROWS_AS(dim_tensor_general(build_example_2_8(), build_field(1)),
                  PreconditionError);
  CHECK_THROWS_AS(dim_tensor_general(build_pullback_field(2), build_field(1)),
                  PreconditionError);
}

TEST_CASE("one-dimensional height formula") {
  SpectralProfile pb1 = build_pullback_field(1);
  CHECK(onedim_tensor_height(pb1, pb1, 0, 0, 0).value == 0);
  for (int m = 1; m <= 3; ++m) {
    CHECK(onedim_tensor_height(pb1, build_field(m), 1, 0, 0).value == 2);
  }
  FormulaTrace t = onedim_tensor_height(pb1, pb1, 1, 1, 0);
  CHECK(t.value == 3);
  CHECK(t.value == gsct_height(pb1, pb1, {1, 1, 0}).value);

  // works exactly where some A[n] satisfies the altitude formula
  SpectralProfile pb3 = build_pullback_field(3);
  CHECK(onedim_tensor_height(pb3, pb3, 1, 1, 0).value ==
        gsct_height(pb3, pb3, {1, 1, 0}).value);
  CHECK_THROWS_AS(
      onedim_tensor_height(build_fg_domain(2), pb1, 0, 0, 0),
      PreconditionError);
  CHECK_THROWS_AS(
      onedim_tensor_height(build_example_2_8(), build_field(1), 1, 0, 0),
      PreconditionError);
}

TEST_CASE("mixed-ideal heights match the oracle on polynomial rings") {
  // A = Q[x,y], B = Q[u,v]; the mixed ideal of two variable-subset primes
  // is itself a variable-subset prime of Q[x,y,u,v], so the oracle can
  // measure it directly.
  const std::vector<std::string> names = {"x", "y", "u", "v"};
  SpectralProfile chain = build_fg_domain(2);
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 2; ++j) {
      std::vector<Polynomial> gens;
      for (int a = 0; a < i; ++a) gens.push_back(Polynomial::variable(4, a));
      for (int b = 0; b < j; ++b) {
        gens.push_back(Polynomial::variable(4, 2 + b));
      }
      int oracle = prime_height(AlgebraPresentation(names, gens, true));
      CHECK(ht_mixed_ideal(chain, chain, i, j).value == oracle);
    }
  }
}

TEST_CASE("every trace value is the sum of its breakdown terms") {
  std::vector<SpectralProfile> profiles = fixture_profiles();
  for (const auto& a : profiles) {
    if (!a.is_domain() || !validate_profile(a).ok()) continue;
    bool afn1 = is_afn(a, 1);
    for (const auto& b : profiles) {
      if (!afn1) continue;
      FormulaTrace general = dim_tensor_general(a, b);
      CHECK(general.value == term_sum(general));
      for (NodeId p = 0; p < a.node_count(); ++p) {
        for (NodeId q = 0; q < b.node_count(); ++q) {
          FormulaTrace mixed = ht_mixed_ideal(a, b, p, q);
          CHECK(mixed.value == term_sum(mixed));
          int bound = std::min(a.td_quotient(p), b.td_quotient(q));
          FormulaTrace g = gsct_height(a, b, {p, q, bound});
          CHECK(g.value == term_sum(g));
        }
      }
    }
    if (is_af_domain(a)) {
      for (const auto& b : profiles) {
        FormulaTrace d = dim_tensor_af(a, b);
        CHECK(d.value == term_sum(d));
      }
    }
  }
}

TEST_CASE("reduction and consistency properties") {
  std::mt19937 rng(2468);
  std::vector<SpectralProfile> bs = fixture_profiles();
  for (int trial = 0; trial < 25; ++trial) {
    SpectralProfile a = (rng() % 2 == 0)
                            ? build_fg_domain(static_cast<int>(rng() % 6))
                            : build_field(static_cast<int>(rng() % 6));
    // AF profiles: the general formula, the D-function and the pair formula
    // tell one story
    for (const auto& b : bs) {
      int general = dim_tensor_general(a, b).value;
      CHECK(general == dim_tensor_af(a, b).value);
      CHECK(general <= a.td_total() + b.td_total());
    }
    for (int trial_b = 0; trial_b < 4; ++trial_b) {
      SpectralProfile b = (rng() % 2 == 0)
                              ? build_fg_domain(static_cast<int>(rng() % 6))
                              : build_field(static_cast<int>(rng() % 6));
      int general = dim_tensor_general(a, b).value;
      CHECK(general == dim_tensor_af_pair(a.dim(), a.td_total(), b.dim(),
                                          b.td_total()));
      // symmetry between AF factors
      CHECK(general == dim_tensor_general(b, a).value);
    }
  }

  // every dimension is capped by t.d.(A) + t.d.(B); the sharper pair bound
  // holds when both factors satisfy the altitude formula
  for (const auto& a :
       {build_pullback_field(1), build_fg_domain(2), build_field(3)}) {
    for (const auto& b : bs) {
      int value = dim_tensor_general(a, b).value;
      CHECK(value <= a.td_total() + b.td_total());
      if (is_af_domain(a) && is_af_domain(b)) {
        CHECK(value <= dim_tensor_af_pair(a.dim(), a.td_total(), b.dim(),
                                          b.td_total()));
      }
    }
  }
}
