#include "planeaut/parser.hpp"

#include <array>
#include <cctype>
#include <set>
#include <utility>

namespace planeaut {

namespace {

struct Token {
  enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Int, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_'))
        ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Plus; break;
      case '-': k = Token::Minus; break;
      case '*': k = Token::Star; break;
      case '/': k = Token::Slash; break;
      case '^': k = Token::Caret; break;
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

// One parsed additive term: a coefficient and the three variable exponents.
struct RawTerm {
  ParamPoly coeff;
  int e[3] = {0, 0, 0};
  size_t pos = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  // Parses the whole input as a sum of terms.  When variables are barred the
  // result is the terms' coefficient sum (used inside parentheses and for
  // standalone coefficients).
  std::vector<RawTerm> parse_sum_to_end(bool allow_vars) {
    std::vector<RawTerm> terms = parse_sum(allow_vars);
    expect(Token::End, "end of input");
    return terms;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& take() { return toks_[at_++]; }

  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k)
      throw ParseError("expected " + std::string(what) + ", found '" +
                           (peek().kind == Token::End ? "end of input"
                                                      : peek().text) +
                           "'",
                       peek().pos);
    take();
  }

  long small_int(const char* what, long max) {
    const Token& t = peek();
    if (t.kind != Token::Int)
      throw ParseError("expected " + std::string(what) + ", found '" +
                           (t.kind == Token::End ? "end of input" : t.text) +
                           "'",
                       t.pos);
    if (t.text.size() > 9)
      throw ParseError(std::string(what) + " is unreasonably large", t.pos);
    take();
    long v = std::stol(t.text);
    if (v > max)
      throw ParseError(std::string(what) + " exceeds " + std::to_string(max),
                       t.pos);
    return v;
  }

  // optional '^' exponent; defaults to 1
  int exponent() {
    if (peek().kind != Token::Caret) return 1;
    take();
    return static_cast<int>(small_int("exponent", 512));
  }

  // leading/separating sign run, folded into +-1; empty run allowed
  int sign_run() {
    int s = 1;
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      if (take().kind == Token::Minus) s = -s;
    }
    return s;
  }

  std::vector<RawTerm> parse_sum(bool allow_vars) {
    std::vector<RawTerm> terms;
    int s = sign_run();
    while (true) {
      terms.push_back(parse_term(allow_vars, s));
      if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
        s = sign_run();
        continue;
      }
      return terms;
    }
  }

  RawTerm parse_term(bool allow_vars, int sign) {
    RawTerm t;
    t.pos = peek().pos;
    t.coeff = ParamPoly(Rat(sign));
    parse_factor(t, allow_vars);
    while (peek().kind == Token::Star) {
      take();
      parse_factor(t, allow_vars);
    }
    return t;
  }

  void parse_factor(RawTerm& t, bool allow_vars) {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::Int: {
        Rat v(std::string(take().text), 10);
        if (peek().kind == Token::Slash) {
          take();
          const Token& den = peek();
          long d = small_int("denominator", 1000000000L);
          if (d == 0) throw ParseError("division by zero", den.pos);
          v /= d;
        }
        v.canonicalize();
        const int e = exponent();
        Rat p(1);
        for (int q = 0; q < e; ++q) p *= v;
        t.coeff = t.coeff * ParamPoly(p);
        return;
      }
      case Token::Ident: {
        if (tok.text == "zeta") {
          take();
          expect(Token::LParen, "'(' after zeta");
          long n = small_int("root order", 10000);
          if (n <= 0) throw ParseError("root order must be positive", tok.pos);
          expect(Token::RParen, "')'");
          const int e = exponent();
          t.coeff = t.coeff * ParamPoly(CycNum::zeta(static_cast<int>(n),
                                                     e % static_cast<int>(n)));
          return;
        }
        if (tok.text == "X" || tok.text == "Y" || tok.text == "Z") {
          if (!allow_vars)
            throw ParseError("variable " + tok.text +
                                 " inside a coefficient group",
                             tok.pos);
          const int idx = tok.text == "X" ? 0 : (tok.text == "Y" ? 1 : 2);
          take();
          t.e[idx] += exponent();
          return;
        }
        if (tok.text == "x" || tok.text == "y" || tok.text == "z")
          throw ParseError("variables are uppercase; found '" + tok.text + "'",
                           tok.pos);
        take();
        t.coeff = t.coeff * ParamPoly::parameter(tok.text, exponent());
        return;
      }
      case Token::LParen: {
        take();
        std::vector<RawTerm> sub = parse_sum(false);
        expect(Token::RParen, "')'");
        ParamPoly grp;
        for (const RawTerm& st : sub) grp += st.coeff;
        const int e = exponent();
        ParamPoly p(Rat(1));
        for (int q = 0; q < e; ++q) p = p * grp;
        t.coeff = t.coeff * p;
        return;
      }
      default:
        throw ParseError("expected a coefficient, parameter or variable, "
                         "found '" +
                             (tok.kind == Token::End ? "end of input"
                                                     : tok.text) +
                             "'",
                         tok.pos);
    }
  }

  std::vector<Token> toks_;
  size_t at_ = 0;
};

}  // namespace

TernaryForm parse_form(const std::string& text) {
  Parser p(text);
  const std::vector<RawTerm> terms = p.parse_sum_to_end(true);
  int degree = -1;
  for (const RawTerm& t : terms) {
    const int d = t.e[0] + t.e[1] + t.e[2];
    if (degree == -1) {
      degree = d;
    } else if (d != degree) {
      throw NotHomogeneous("term starting at position " +
                           std::to_string(t.pos) + " has degree " +
                           std::to_string(d) + "; expected " +
                           std::to_string(degree));
    }
  }
  // the text "0" (or an all-cancelling sum) yields the zero form
  TernaryForm f(degree <= 0 ? 0 : degree);
  for (const RawTerm& t : terms)
    f.add(Monomial{t.e[0], t.e[1], t.e[2]}, t.coeff);
  return f;
}

CycNum parse_coefficient(const std::string& text) {
  Parser p(text);
  const std::vector<RawTerm> terms = p.parse_sum_to_end(false);
  ParamPoly sum;
  for (const RawTerm& t : terms) sum += t.coeff;
  const std::optional<CycNum> c = sum.as_constant();
  if (!c)
    throw ParseError("coefficient mentions parameters: " + sum.str(), 0);
  return *c;
}

DiagAction parse_type(const std::string& text) {
  std::array<long, 3> v{};
  size_t start = 0;
  for (int slot = 0; slot < 3; ++slot) {
    const size_t comma = text.find(',', start);
    const bool last = slot == 2;
    if (last != (comma == std::string::npos))
      throw ParseError("type takes exactly three comma-separated integers",
                       start);
    std::string piece =
        text.substr(start, last ? std::string::npos : comma - start);
    size_t used = 0;
    try {
      v[slot] = std::stol(piece, &used);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + piece + "' in type", start);
    }
    while (used < piece.size() &&
           std::isspace(static_cast<unsigned char>(piece[used])))
      ++used;
    if (used != piece.size() || piece.empty())
      throw ParseError("bad integer '" + piece + "' in type", start);
    start = comma + 1;
  }
  return DiagAction(static_cast<int>(v[0]), static_cast<int>(v[1]),
                    static_cast<int>(v[2]));
}

TernaryForm CurveSpec::specialized_form() const {
  return form.specialized(assignments);
}

CurveSpec make_curve_spec(const std::string& text,
                          const std::vector<std::string>& set_args,
                          const std::string& type_arg) {
  CurveSpec spec;
  spec.source = text;
  spec.form = parse_form(text);
  const std::set<std::string> declared = spec.form.parameter_names();
  for (const std::string& arg : set_args) {
    const size_t eq = arg.find('=');
    if (eq == std::string::npos)
      throw ParseError("assignment must look like name=value: " + arg, 0);
    const std::string name = arg.substr(0, eq);
    if (!declared.count(name))
      throw ParseError("assignment names unknown parameter '" + name + "'", 0);
    spec.assignments[name] = parse_coefficient(arg.substr(eq + 1));
  }
  if (!type_arg.empty()) spec.action = parse_type(type_arg);
  return spec;
}

}  // namespace planeaut
