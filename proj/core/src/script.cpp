#include "tensordim/script.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "tensordim/builders.hpp"
#include "tensordim/errors.hpp"
#include "tensordim/groebner.hpp"

namespace tensordim::script {

namespace {

struct Token {
  enum class Kind {
    ident,
    integer,
    lparen,
    rparen,
    comma,
    slash,
    caret,
    star,
    plus,
    minus,
    equals,
    end
  };
  Kind kind;
  std::string text;
  long value = 0;
  int column = 0;
};

std::vector<Token> tokenize(const std::string& line, int line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) ||
              line[j] == '_')) {
        ++j;
      }
      tokens.push_back({Token::Kind::ident, line.substr(i, j - i), 0, col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() &&
             std::isdigit(static_cast<unsigned char>(line[j]))) {
        ++j;
      }
      std::string digits = line.substr(i, j - i);
      long v = 0;
      try {
        v = std::stol(digits);
      } catch (const std::exception&) {
        throw ParseError("integer literal out of range", line_no, col);
      }
      tokens.push_back({Token::Kind::integer, digits, v, col});
      i = j;
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '(': kind = Token::Kind::lparen; break;
      case ')': kind = Token::Kind::rparen; break;
      case ',': kind = Token::Kind::comma; break;
      case '/': kind = Token::Kind::slash; break;
      case '^': kind = Token::Kind::caret; break;
      case '*': kind = Token::Kind::star; break;
      case '+': kind = Token::Kind::plus; break;
      case '-': kind = Token::Kind::minus; break;
      case '=': kind = Token::Kind::equals; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line_no, col);
    }
    tokens.push_back({kind, std::string(1, c), 0, col});
    ++i;
  }
  int end_col = static_cast<int>(line.size()) + 1;
  tokens.push_back({Token::Kind::end, "", 0, end_col});
  return tokens;
}

const std::set<std::string> kProfileKinds = {
    "field", "fg_domain", "example_2_8", "pullback_field", "from_algebra"};

const std::set<std::string> kQueryNames = {
    "dim",          "height",         "groebner",
    "dim_tensor",   "dim_tensor_af",  "dim_tensor_fields",
    "wadsworth_D",  "ht_mixed",       "gsct",
    "sct",          "ht_min_ext",     "onedim_ht",
    "af",           "afn",            "locally_jaffard",
    "validate"};

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line_no)
      : tokens_(std::move(tokens)), line_(line_no) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at_end() const { return peek().kind == Token::Kind::end; }

  Token next() { return tokens_[pos_++]; }

  Token expect(Token::Kind kind, const std::string& what) {
    if (peek().kind != kind) {
      throw ParseError("expected " + what, line_, peek().column);
    }
    return next();
  }

  bool accept(Token::Kind kind) {
    if (peek().kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string expect_ident(const std::string& what) {
    return expect(Token::Kind::ident, what).text;
  }

  void expect_keyword(const std::string& word) {
    const Token& t = peek();
    if (t.kind != Token::Kind::ident || t.text != word) {
      throw ParseError("expected '" + word + "'", line_, t.column);
    }
    next();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, peek().column);
  }

  int line() const { return line_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
};

Rational parse_rational(LineParser& p) {
  Token num = p.expect(Token::Kind::integer, "a number");
  if (p.accept(Token::Kind::slash)) {
    Token den = p.expect(Token::Kind::integer, "a denominator");
    if (den.value == 0) {
      throw ParseError("zero denominator", p.line(), den.column);
    }
    return Rational(num.value) / den.value;
  }
  return Rational(num.value);
}

/// factor+ with '*' optional between factors: "3/2 x^2 y" == "3/2*x^2*y".
Polynomial parse_term(LineParser& p, const std::vector<std::string>& vars) {
  Polynomial term = Polynomial::constant(vars.size(), 1);
  bool saw_factor = false;
  for (;;) {
    const Token& t = p.peek();
    if (t.kind == Token::Kind::integer) {
      term = term * parse_rational(p);
      saw_factor = true;
    } else if (t.kind == Token::Kind::ident) {
      auto it = std::find(vars.begin(), vars.end(), t.text);
      if (it == vars.end()) {
        throw ParseError("unknown variable '" + t.text + "'", p.line(),
                         t.column);
      }
      std::size_t index = static_cast<std::size_t>(it - vars.begin());
      p.next();
      unsigned exp = 1;
      if (p.accept(Token::Kind::caret)) {
        Token e = p.expect(Token::Kind::integer, "an exponent");
        if (e.value < 0) {
          throw ParseError("negative exponent", p.line(), e.column);
        }
        exp = static_cast<unsigned>(e.value);
      }
      term = term * Polynomial::variable(vars.size(), index, exp);
      saw_factor = true;
    } else if (t.kind == Token::Kind::star) {
      if (!saw_factor) p.fail("unexpected '*'");
      p.next();
    } else {
      break;
    }
  }
  if (!saw_factor) p.fail("expected a polynomial term");
  return term;
}

Polynomial parse_polynomial(LineParser& p, const std::vector<std::string>& vars) {
  Polynomial result = Polynomial::zero(vars.size());
  bool negate = p.accept(Token::Kind::minus);
  if (!negate) p.accept(Token::Kind::plus);
  for (;;) {
    Polynomial term = parse_term(p, vars);
    result = negate ? result - term : result + term;
    if (p.accept(Token::Kind::plus)) {
      negate = false;
    } else if (p.accept(Token::Kind::minus)) {
      negate = true;
    } else {
      break;
    }
  }
  return result;
}

AlgebraBinding parse_algebra(LineParser& p) {
  AlgebraBinding binding;
  binding.line = p.line();
  binding.name = p.expect_ident("a binding name");
  p.expect(Token::Kind::equals, "'='");
  p.expect_keyword("ring");
  p.expect(Token::Kind::lparen, "'('");
  if (!p.accept(Token::Kind::rparen)) {
    for (;;) {
      binding.variables.push_back(p.expect_ident("a variable name"));
      if (p.accept(Token::Kind::comma)) continue;
      p.expect(Token::Kind::rparen, "')'");
      break;
    }
  }
  if (p.accept(Token::Kind::slash)) {
    p.expect_keyword("ideal");
    p.expect(Token::Kind::lparen, "'('");
    if (!p.accept(Token::Kind::rparen)) {
      for (;;) {
        binding.generators.push_back(parse_polynomial(p, binding.variables));
        if (p.accept(Token::Kind::comma)) continue;
        p.expect(Token::Kind::rparen, "')'");
        break;
      }
    }
  }
  if (p.peek().kind == Token::Kind::ident && p.peek().text == "prime") {
    p.next();
    binding.prime = true;
  }
  if (!p.at_end()) p.fail("trailing input after algebra binding");
  return binding;
}

ProfileBinding parse_profile(LineParser& p) {
  ProfileBinding binding;
  binding.line = p.line();
  binding.name = p.expect_ident("a binding name");
  p.expect(Token::Kind::equals, "'='");
  Token kind = p.expect(Token::Kind::ident, "a profile kind");
  if (!kProfileKinds.count(kind.text)) {
    throw ParseError("unknown builder kind '" + kind.text + "'", p.line(),
                     kind.column);
  }
  binding.kind = kind.text;
  p.expect(Token::Kind::lparen, "'('");
  if (!p.accept(Token::Kind::rparen)) {
    for (;;) {
      if (binding.kind == "from_algebra") {
        binding.algebra_arg = p.expect_ident("an algebra name");
      } else {
        std::string key;
        if (p.peek().kind == Token::Kind::ident) {
          key = p.next().text;
          p.expect(Token::Kind::equals, "'='");
        }
        bool negative = p.accept(Token::Kind::minus);
        Token v = p.expect(Token::Kind::integer, "an integer parameter");
        binding.int_params.emplace_back(key, negative ? -v.value : v.value);
      }
      if (p.accept(Token::Kind::comma)) continue;
      p.expect(Token::Kind::rparen, "')'");
      break;
    }
  }
  if (!p.at_end()) p.fail("trailing input after profile binding");
  return binding;
}

Query parse_query(LineParser& p) {
  Query q;
  q.line = p.line();
  Token name = p.expect(Token::Kind::ident, "a query name");
  if (!kQueryNames.count(name.text)) {
    throw ParseError("unknown query '" + name.text + "'", p.line(),
                     name.column);
  }
  q.qname = name.text;
  p.expect(Token::Kind::lparen, "'('");
  if (!p.accept(Token::Kind::rparen)) {
    for (;;) {
      Arg arg;
      arg.line = p.line();
      arg.column = p.peek().column;
      const Token& t = p.peek();
      if (t.kind == Token::Kind::ident && t.text == "min") {
        p.next();
        arg.kind = Arg::Kind::node;
        arg.node = {NodeRef::Kind::min, 0};
      } else if (t.kind == Token::Kind::ident && t.text == "max") {
        p.next();
        arg.kind = Arg::Kind::node;
        arg.node = {NodeRef::Kind::max, 0};
      } else if (t.kind == Token::Kind::ident && t.text == "node") {
        p.next();
        p.expect(Token::Kind::lparen, "'('");
        Token idx = p.expect(Token::Kind::integer, "a node index");
        p.expect(Token::Kind::rparen, "')'");
        arg.kind = Arg::Kind::node;
        arg.node = {NodeRef::Kind::index, static_cast<int>(idx.value)};
      } else if (t.kind == Token::Kind::ident) {
        arg.kind = Arg::Kind::name;
        arg.name = p.next().text;
      } else if (t.kind == Token::Kind::integer ||
                 t.kind == Token::Kind::minus) {
        bool negative = p.accept(Token::Kind::minus);
        Token v = p.expect(Token::Kind::integer, "an integer");
        arg.kind = Arg::Kind::integer;
        arg.integer = negative ? -v.value : v.value;
      } else {
        p.fail("expected a query argument");
      }
      q.args.push_back(std::move(arg));
      if (p.accept(Token::Kind::comma)) continue;
      p.expect(Token::Kind::rparen, "')'");
      break;
    }
  }
  if (!p.at_end()) p.fail("trailing input after query");
  return q;
}

}  // namespace

Script parse_script(std::string_view text) {
  Script script;
  std::set<std::string> names;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    LineParser p(tokenize(line, line_no), line_no);
    if (p.at_end()) continue;
    Token head = p.expect(Token::Kind::ident, "'algebra', 'profile' or 'query'");
    if (head.text == "algebra") {
      AlgebraBinding b = parse_algebra(p);
      if (!names.insert(b.name).second) {
        throw ParseError("duplicate name '" + b.name + "'", line_no,
                         head.column);
      }
      script.algebras.push_back(std::move(b));
    } else if (head.text == "profile") {
      ProfileBinding b = parse_profile(p);
      if (!names.insert(b.name).second) {
        throw ParseError("duplicate name '" + b.name + "'", line_no,
                         head.column);
      }
      script.profiles.push_back(std::move(b));
    } else if (head.text == "query") {
      script.queries.push_back(parse_query(p));
    } else {
      throw ParseError("expected 'algebra', 'profile' or 'query'", line_no,
                       head.column);
    }
  }
  return script;
}

namespace {

long single_int_param(const ProfileBinding& b, const std::string& key) {
  if (b.int_params.size() != 1) {
    throw ParseError(b.kind + " takes exactly one parameter", b.line, 1);
  }
  const auto& [name, value] = b.int_params.front();
  if (!name.empty() && name != key) {
    throw ParseError("unknown parameter '" + name + "' for " + b.kind +
                         " (expected '" + key + "')",
                     b.line, 1);
  }
  return value;
}

}  // namespace

Environment bind_script(const Script& s) {
  Environment env;
  for (const auto& b : s.algebras) {
    try {
      env.algebras.emplace(
          b.name, AlgebraPresentation(b.variables, b.generators, b.prime));
    } catch (const Error& e) {
      throw ParseError(std::string("algebra '") + b.name + "': " + e.what(),
                       b.line, 1);
    }
  }
  for (const auto& b : s.profiles) {
    try {
      if (b.kind == "field") {
        env.profiles.emplace(b.name,
                             build_field(static_cast<int>(
                                 single_int_param(b, "m"))));
      } else if (b.kind == "fg_domain") {
        env.profiles.emplace(b.name,
                             build_fg_domain(static_cast<int>(
                                 single_int_param(b, "d"))));
      } else if (b.kind == "example_2_8") {
        if (!b.int_params.empty()) {
          throw ParseError("example_2_8 takes no parameters", b.line, 1);
        }
        env.profiles.emplace(b.name, build_example_2_8());
      } else if (b.kind == "pullback_field") {
        env.profiles.emplace(b.name,
                             build_pullback_field(static_cast<int>(
                                 single_int_param(b, "r"))));
      } else {  // from_algebra
        auto it = env.algebras.find(b.algebra_arg);
        if (it == env.algebras.end()) {
          throw ParseError("from_algebra references unknown algebra '" +
                               b.algebra_arg + "'",
                           b.line, 1);
        }
        env.profiles.emplace(b.name, profile_from_presentation(it->second));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string("profile '") + b.name + "': " + e.what(),
                       b.line, 1);
    }
  }
  return env;
}

namespace {

enum class ArgSpec { integer, algebra, profile, either_name, node_of_0, node_of_1 };

const std::map<std::string, std::vector<ArgSpec>>& query_signatures() {
  static const std::map<std::string, std::vector<ArgSpec>> table = {
      {"dim", {ArgSpec::either_name}},
      {"height", {ArgSpec::algebra}},
      {"groebner", {ArgSpec::algebra}},
      {"dim_tensor", {ArgSpec::either_name, ArgSpec::either_name}},
      {"dim_tensor_af", {ArgSpec::profile, ArgSpec::profile}},
      {"dim_tensor_fields", {ArgSpec::integer, ArgSpec::integer}},
      {"wadsworth_D", {ArgSpec::integer, ArgSpec::integer, ArgSpec::profile}},
      {"ht_mixed",
       {ArgSpec::profile, ArgSpec::profile, ArgSpec::node_of_0,
        ArgSpec::node_of_1}},
      {"gsct",
       {ArgSpec::profile, ArgSpec::profile, ArgSpec::node_of_0,
        ArgSpec::node_of_1, ArgSpec::integer}},
      {"sct",
       {ArgSpec::profile, ArgSpec::profile, ArgSpec::node_of_1,
        ArgSpec::integer}},
      {"ht_min_ext", {ArgSpec::profile, ArgSpec::profile, ArgSpec::node_of_1}},
      {"onedim_ht",
       {ArgSpec::profile, ArgSpec::profile, ArgSpec::node_of_0,
        ArgSpec::node_of_1, ArgSpec::integer}},
      {"af", {ArgSpec::profile}},
      {"afn", {ArgSpec::profile, ArgSpec::integer}},
      {"locally_jaffard", {ArgSpec::profile}},
      {"validate", {ArgSpec::profile}},
  };
  return table;
}

const SpectralProfile& profile_arg(const Environment& env, const Query& q,
                                   std::size_t index) {
  const Arg& a = q.args[index];
  auto it = env.profiles.find(a.name);
  if (it == env.profiles.end()) {
    throw ParseError("'" + a.name + "' is not a defined profile", a.line,
                     a.column);
  }
  return it->second;
}

void check_query(const Environment& env, const Query& q) {
  const auto& table = query_signatures();
  const std::vector<ArgSpec>& spec = table.at(q.qname);
  if (q.args.size() != spec.size()) {
    throw ParseError(q.qname + " takes " + std::to_string(spec.size()) +
                         " argument(s), got " + std::to_string(q.args.size()),
                     q.line, 1);
  }
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const Arg& a = q.args[i];
    switch (spec[i]) {
      case ArgSpec::integer:
        if (a.kind != Arg::Kind::integer) {
          throw ParseError("expected an integer argument", a.line, a.column);
        }
        break;
      case ArgSpec::algebra:
        if (a.kind != Arg::Kind::name || !env.algebras.count(a.name)) {
          throw ParseError("expected a defined algebra name", a.line,
                           a.column);
        }
        break;
      case ArgSpec::profile:
        if (a.kind != Arg::Kind::name || !env.profiles.count(a.name)) {
          throw ParseError("expected a defined profile name", a.line,
                           a.column);
        }
        break;
      case ArgSpec::either_name:
        if (a.kind != Arg::Kind::name ||
            (!env.algebras.count(a.name) && !env.profiles.count(a.name))) {
          throw ParseError("'" + a.name + "' is not a defined name", a.line,
                           a.column);
        }
        break;
      case ArgSpec::node_of_0:
      case ArgSpec::node_of_1: {
        if (a.kind != Arg::Kind::node) {
          throw ParseError("expected a node reference (min, max or node(i))",
                           a.line, a.column);
        }
        std::size_t which = spec[i] == ArgSpec::node_of_0 ? 0 : 1;
        const SpectralProfile& s = profile_arg(env, q, which);
        if (a.node.kind == NodeRef::Kind::index &&
            (a.node.index < 0 || a.node.index >= s.node_count())) {
          throw ParseError("node index out of range (profile has " +
                               std::to_string(s.node_count()) + " nodes)",
                           a.line, a.column);
        }
        break;
      }
    }
  }
  if (q.qname == "dim_tensor") {
    bool a0 = env.algebras.count(q.args[0].name) > 0;
    bool a1 = env.algebras.count(q.args[1].name) > 0;
    if (a0 != a1) {
      throw ParseError(
          "dim_tensor takes two algebras (oracle route) or two profiles "
          "(formula route), not a mix",
          q.line, 1);
    }
  }
}

}  // namespace

Environment check_script(const Script& s) {
  Environment env = bind_script(s);
  for (const Query& q : s.queries) check_query(env, q);
  return env;
}

}  // namespace tensordim::script
