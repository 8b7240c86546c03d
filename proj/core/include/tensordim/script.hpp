#ifndef TENSORDIM_SCRIPT_HPP
#define TENSORDIM_SCRIPT_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tensordim/algebra.hpp"
#include "tensordim/spectral_profile.hpp"

namespace tensordim::script {

/// Reference to a profile node: `min`, `max`, or `node(i)`.
struct NodeRef {
  enum class Kind { min, max, index };
  Kind kind = Kind::index;
  int index = 0;
};

struct Arg {
  enum class Kind { name, integer, node };
  Kind kind = Kind::integer;
  std::string name;
  long integer = 0;
  NodeRef node;
  int line = 0;
  int column = 0;
};

struct AlgebraBinding {
  std::string name;
  std::vector<std::string> variables;
  std::vector<Polynomial> generators;
  bool prime = false;
  int line = 0;
};

struct ProfileBinding {
  std::string name;
  std::string kind;  // field | fg_domain | example_2_8 | pullback_field | from_algebra
  std::vector<std::pair<std::string, long>> int_params;  // key may be empty
  std::string algebra_arg;  // for from_algebra
  int line = 0;
};

struct Query {
  std::string qname;
  std::vector<Arg> args;
  int line = 0;
};

/// Parsed script: named definitions plus queries in source order. Bindings
/// are order-insensitive (a profile may reference an algebra defined later);
/// queries execute in listed order.
struct Script {
  std::vector<AlgebraBinding> algebras;
  std::vector<ProfileBinding> profiles;
  std::vector<Query> queries;
};

/// Parses the line-oriented input language (`#` starts a comment):
///
///   algebra NAME = ring(x, y) / ideal(y^2 - x^3) [prime]
///   profile NAME = pullback_field(r = 1)
///   query dim_tensor(P, Q)
///
/// Throws ParseError (with line/column) on the first syntax error,
/// duplicate name, unknown builder kind, or unknown query name.
Script parse_script(std::string_view text);

/// Live bindings: every algebra and profile constructed.
struct Environment {
  std::map<std::string, AlgebraPresentation> algebras;
  std::map<std::string, SpectralProfile> profiles;
};

/// Constructs every binding. Throws ParseError (carrying the binding's
/// line) on invalid builder parameters, unresolved references, or an
/// algebra that cannot present (e.g. from_algebra on a non-prime ideal).
Environment bind_script(const Script& s);

/// bind_script plus static validation of every query: arity, argument
/// kinds, name resolution, and node references in range.
Environment check_script(const Script& s);

}  // namespace tensordim::script

#endif
