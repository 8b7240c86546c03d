#include "tensordim/builders.hpp"

#include <string>

#include "tensordim/errors.hpp"
#include "tensordim/groebner.hpp"

namespace tensordim {

SpectralProfile build_field(int m) {
  if (m < 0) throw InvalidParamError("field profile needs t.d. >= 0");
  SpectralProfile::Data d;
  d.td_total = m;
  d.domain = true;
  d.node_names = {"0"};
  d.td_quotient = {m};
  d.min_node = 0;
  return SpectralProfile(std::move(d));
}

SpectralProfile build_fg_domain(int dim) {
  if (dim < 0) throw InvalidParamError("fg_domain profile needs dim >= 0");
  SpectralProfile::Data d;
  d.td_total = dim;
  d.domain = true;
  d.min_node = 0;
  for (int i = 0; i <= dim; ++i) {
    d.node_names.push_back("p" + std::to_string(i));
    d.td_quotient.push_back(dim - i);
    for (int j = i + 1; j <= dim; ++j) {
      d.order.emplace_back(i, j);
      d.relheight.emplace(std::pair<NodeId, NodeId>{i, j},
                          HeightSequence::constant(j - i));
    }
  }
  return SpectralProfile(std::move(d));
}

SpectralProfile build_example_2_8() {
  SpectralProfile::Data d;
  d.td_total = 2;
  d.domain = true;
  d.node_names = {"0", "p"};
  d.td_quotient = {2, 0};
  d.min_node = 0;
  d.order = {{0, 1}};
  d.relheight.emplace(std::pair<NodeId, NodeId>{0, 1},
                      HeightSequence::constant(1));
  return SpectralProfile(std::move(d));
}

SpectralProfile build_pullback_field(int r) {
  if (r < 1) throw InvalidParamError("pullback_field profile needs r >= 1");
  SpectralProfile::Data d;
  d.td_total = r + 1;
  d.domain = true;
  d.node_names = {"0", "M"};
  d.td_quotient = {r + 1, 0};
  d.min_node = 0;
  d.order = {{0, 1}};
  std::vector<int> prefix;
  for (int n = 0; n < r; ++n) prefix.push_back(1 + n);
  d.relheight.emplace(std::pair<NodeId, NodeId>{0, 1},
                      HeightSequence(std::move(prefix), r + 1));
  return SpectralProfile(std::move(d));
}

SpectralProfile profile_from_presentation(const AlgebraPresentation& a) {
  if (!a.asserted_prime()) {
    throw PreconditionError(
        "profiles are derived only from asserted-prime presentations");
  }
  std::optional<int> dim = ideal_dimension(a);
  if (!dim) {
    throw EmptySpectrumError("the unit ideal presents the zero ring");
  }
  return build_fg_domain(*dim);
}

}  // namespace tensordim
