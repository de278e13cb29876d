#include "tame/parse.hpp"

#include <cctype>
#include <functional>
#include <memory>

namespace tame {

namespace {

using boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Expression AST

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Integer, Variable, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind;
  cpp_int value;       // Integer
  std::string name;    // Variable
  ExprPtr lhs, rhs;    // binary / Neg (lhs) / Pow (lhs)
  std::int64_t exponent = 0;  // Pow
};

ExprPtr make_node(ExprNode n) { return std::make_shared<ExprNode>(std::move(n)); }

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eof() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char take() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of expression");
    return s_[pos_++];
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  cpp_int integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected an integer at position " + std::to_string(pos_) +
                       " of \"" + s_ + "\"");
    cpp_int v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = v * 10 + (s_[pos_++] - '0');
    return v;
  }
  std::string ident() {
    skip_ws();
    std::string out;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      out += s_[pos_++];
    if (out.empty())
      throw ParseError("expected a name at position " + std::to_string(pos_) +
                       " of \"" + s_ + "\"");
    return out;
  }
  std::size_t pos() const { return pos_; }
  const std::string& text() const { return s_; }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : lex_(s) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (!lex_.eof())
      throw ParseError("trailing input at position " + std::to_string(lex_.pos()) +
                       " of \"" + lex_.text() + "\"");
    return e;
  }

 private:
  Lexer lex_;

  ExprPtr expr() {
    ExprPtr e = lex_.accept('-')
                    ? make_node({ExprNode::Kind::Neg, 0, "", term(), nullptr, 0})
                    : term();
    for (;;) {
      if (lex_.accept('+'))
        e = make_node({ExprNode::Kind::Add, 0, "", e, term(), 0});
      else if (lex_.accept('-'))
        e = make_node({ExprNode::Kind::Sub, 0, "", e, term(), 0});
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    for (;;) {
      if (lex_.accept('*'))
        e = make_node({ExprNode::Kind::Mul, 0, "", e, factor(), 0});
      else if (lex_.accept('/'))
        e = make_node({ExprNode::Kind::Div, 0, "", e, factor(), 0});
      else
        return e;
    }
  }

  ExprPtr factor() {
    ExprPtr b = base();
    if (lex_.accept('^')) {
      bool neg = false;
      bool paren = lex_.accept('(');
      if (lex_.accept('-')) neg = true;
      cpp_int e = lex_.integer();
      if (paren && !lex_.accept(')'))
        throw ParseError("unbalanced parentheses in exponent");
      if (e > 1'000'000) throw ParseError("exponent out of range");
      std::int64_t k = static_cast<std::int64_t>(e);
      return make_node(
          {ExprNode::Kind::Pow, 0, "", b, nullptr, neg ? -k : k});
    }
    return b;
  }

  ExprPtr base() {
    char c = lex_.peek();
    if (c == '(') {
      lex_.take();
      ExprPtr e = expr();
      if (!lex_.accept(')')) throw ParseError("unbalanced parentheses");
      return e;
    }
    if (c == '-') {
      lex_.take();
      return make_node({ExprNode::Kind::Neg, 0, "", factor(), nullptr, 0});
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return make_node({ExprNode::Kind::Integer, lex_.integer(), "", nullptr, nullptr, 0});
    std::string name = lex_.ident();
    return make_node({ExprNode::Kind::Variable, 0, std::move(name), nullptr, nullptr, 0});
  }
};

FieldElem field_from_integer(const FieldSpecPtr& spec, const cpp_int& z) {
  if (spec->is_rationals()) return FieldElem::from_rational(spec, Rational(z));
  cpp_int r = z % spec->characteristic();
  if (r < 0) r += spec->characteristic();
  return FieldElem::from_integer(spec, static_cast<std::int64_t>(r));
}

/// Generic evaluator: a domain provides constants, named values, and pow.
template <class V>
V eval_expr(const ExprPtr& e, const std::function<V(const cpp_int&)>& constant,
            const std::function<V(const std::string&)>& variable,
            const std::function<V(const V&, std::int64_t)>& power) {
  auto rec = [&](auto&& self, const ExprPtr& n) -> V {
    switch (n->kind) {
      case ExprNode::Kind::Integer:
        return constant(n->value);
      case ExprNode::Kind::Variable:
        return variable(n->name);
      case ExprNode::Kind::Add:
        return self(self, n->lhs) + self(self, n->rhs);
      case ExprNode::Kind::Sub:
        return self(self, n->lhs) - self(self, n->rhs);
      case ExprNode::Kind::Mul:
        return self(self, n->lhs) * self(self, n->rhs);
      case ExprNode::Kind::Div:
        return self(self, n->lhs) / self(self, n->rhs);
      case ExprNode::Kind::Neg:
        return constant(-1) * self(self, n->lhs);
      case ExprNode::Kind::Pow:
        return power(self(self, n->lhs), n->exponent);
    }
    throw ParseError("bad expression node");
  };
  return rec(rec, e);
}

ExprPtr parse_tree(const std::string& text) { return ExprParser(text).parse(); }

}  // namespace

FieldSpecPtr parse_field_spec(const std::string& text) {
  if (text == "Q") return FieldSpec::rationals();
  if (text.size() < 2 || text[0] != 'F')
    throw ParseError("bad field spec: " + text);
  std::size_t caret = text.find('^');
  std::size_t colon = text.find(':');
  auto parse_int = [&](const std::string& s) {
    try {
      return std::stoll(s);
    } catch (...) {
      throw ParseError("bad number in field spec: " + text);
    }
  };
  if (caret == std::string::npos) {
    if (colon != std::string::npos) throw ParseError("bad field spec: " + text);
    std::int64_t p = parse_int(text.substr(1));
    return FieldSpec::prime(p);
  }
  if (colon == std::string::npos || colon < caret)
    throw ParseError("extension spec needs a modulus: " + text);
  std::int64_t p = parse_int(text.substr(1, caret - 1));
  std::int64_t d = parse_int(text.substr(caret + 1, colon - caret - 1));
  FieldSpecPtr base = FieldSpec::prime(p);
  // the modulus is a polynomial in T over the prime field
  ExprPtr tree = parse_tree(text.substr(colon + 1));
  Poly modulus = eval_expr<RatFunc>(
                     tree,
                     [&](const cpp_int& z) {
                       return RatFunc::from_poly(
                           Poly::constant(field_from_integer(base, z), "T"));
                     },
                     [&](const std::string& name) {
                       if (name != "T")
                         throw ParseError("modulus must be a polynomial in T");
                       return RatFunc::from_poly(
                           Poly::monomial(FieldElem::one(base), 1, "T"));
                     },
                     [](const RatFunc& v, std::int64_t k) { return v.pow(k); })
                     .num();
  if (modulus.degree() != d)
    throw ParseError("modulus degree does not match the declared degree in " +
                     text);
  try {
    return FieldSpec::extension(base, modulus.coeffs(), "T");
  } catch (const UnsupportedBase& e) {
    throw ParseError(e.what());
  }
}

FieldElem parse_field_elem(const FieldSpecPtr& spec, const std::string& text) {
  ExprPtr tree = parse_tree(text);
  return eval_expr<FieldElem>(
      tree, [&](const cpp_int& z) { return field_from_integer(spec, z); },
      [&](const std::string& name) {
        if (spec->is_extension() && name == spec->var())
          return FieldElem::from_coords(
              spec, {FieldElem::zero(spec->base()), FieldElem::one(spec->base())});
        throw ParseError("unknown name in a constant: " + name);
      },
      [](const FieldElem& v, std::int64_t k) { return v.pow(k); });
}

RatFunc parse_rat_func(const FieldSpecPtr& spec, const std::string& text) {
  ExprPtr tree = parse_tree(text);
  return eval_expr<RatFunc>(
      tree,
      [&](const cpp_int& z) {
        return RatFunc::from_poly(Poly::constant(field_from_integer(spec, z), "T"));
      },
      [&](const std::string& name) {
        if (name == "T")
          return RatFunc::from_poly(Poly::monomial(FieldElem::one(spec), 1, "T"));
        throw ParseError("unknown variable (expected T): " + name);
      },
      [](const RatFunc& v, std::int64_t k) { return v.pow(k); });
}

BivariateRational parse_bivariate(const FieldSpecPtr& spec,
                                  const std::string& text) {
  ExprPtr tree = parse_tree(text);
  return eval_expr<BivariateRational>(
      tree,
      [&](const cpp_int& z) {
        return BivariateRational::from_poly(
            BivarPoly::constant(field_from_integer(spec, z)));
      },
      [&](const std::string& name) {
        if (name == "u")
          return BivariateRational::from_poly(
              BivarPoly::monomial(FieldElem::one(spec), 1, 0));
        if (name == "v")
          return BivariateRational::from_poly(
              BivarPoly::monomial(FieldElem::one(spec), 0, 1));
        throw ParseError("unknown variable (expected u or v): " + name);
      },
      [](const BivariateRational& v, std::int64_t k) { return v.pow(k); });
}

namespace {

struct SeriesValue {
  LaurentSeries1 s;
  std::int64_t hint;
  SeriesValue operator+(const SeriesValue& o) const { return {s + o.s, hint}; }
  SeriesValue operator-(const SeriesValue& o) const { return {s - o.s, hint}; }
  SeriesValue operator*(const SeriesValue& o) const { return {s * o.s, hint}; }
  SeriesValue operator/(const SeriesValue& o) const {
    return {s.div(o.s, hint), hint};
  }
};

struct Series2Value {
  LaurentSeries2 s;
  std::int64_t s_hint, t_hint;
  Series2Value operator+(const Series2Value& o) const {
    return {s + o.s, s_hint, t_hint};
  }
  Series2Value operator-(const Series2Value& o) const {
    return {s - o.s, s_hint, t_hint};
  }
  Series2Value operator*(const Series2Value& o) const {
    return {s * o.s, s_hint, t_hint};
  }
  Series2Value operator/(const Series2Value& o) const {
    return {s.div(o.s, s_hint, t_hint), s_hint, t_hint};
  }
};

}  // namespace

LaurentSeries1 parse_series1(const FieldSpecPtr& spec, const std::string& text,
                             std::int64_t prec) {
  ExprPtr tree = parse_tree(text);
  SeriesValue r = eval_expr<SeriesValue>(
      tree,
      [&](const cpp_int& z) {
        return SeriesValue{LaurentSeries1::constant(field_from_integer(spec, z)),
                           prec};
      },
      [&](const std::string& name) {
        if (name == "t")
          return SeriesValue{
              LaurentSeries1::monomial(FieldElem::one(spec), 1), prec};
        if (spec->is_extension() && name == spec->var())
          return SeriesValue{
              LaurentSeries1::constant(parse_field_elem(spec, name)), prec};
        throw ParseError("unknown variable (expected t): " + name);
      },
      [](const SeriesValue& v, std::int64_t k) {
        return SeriesValue{v.s.pow(k, v.hint), v.hint};
      });
  return r.s;
}

LaurentSeries2 parse_series2(const FieldSpecPtr& spec, const std::string& text,
                             std::int64_t s_prec, std::int64_t t_prec) {
  ExprPtr tree = parse_tree(text);
  Series2Value r = eval_expr<Series2Value>(
      tree,
      [&](const cpp_int& z) {
        return Series2Value{LaurentSeries2::constant(field_from_integer(spec, z)),
                            s_prec, t_prec};
      },
      [&](const std::string& name) {
        if (name == "t")
          return Series2Value{
              LaurentSeries2::monomial(FieldElem::one(spec), 1, 0), s_prec,
              t_prec};
        if (name == "s")
          return Series2Value{
              LaurentSeries2::monomial(FieldElem::one(spec), 0, 1), s_prec,
              t_prec};
        if (spec->is_extension() && name == spec->var())
          return Series2Value{
              LaurentSeries2::constant(parse_field_elem(spec, name)), s_prec,
              t_prec};
        throw ParseError("unknown variable (expected t or s): " + name);
      },
      [](const Series2Value& v, std::int64_t k) {
        return Series2Value{v.s.pow(k, v.s_hint, v.t_hint), v.s_hint, v.t_hint};
      });
  return r.s;
}

SurfacePoint parse_surface_point(const FieldSpecPtr& spec,
                                 const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw ParseError("point must be written u0,v0: " + text);
  SurfacePoint p;
  p.chart = 0;
  p.u0 = parse_field_elem(spec, text.substr(0, comma));
  p.v0 = parse_field_elem(spec, text.substr(comma + 1));
  return p;
}

LineCurve parse_line_curve(const FieldSpecPtr& spec, const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw ParseError("curve must be written x(T),y(T): " + text);
  RatFunc x = parse_rat_func(spec, text.substr(0, comma));
  RatFunc y = parse_rat_func(spec, text.substr(comma + 1));
  if (x.den().degree() != 0 || y.den().degree() != 0)
    throw ParseError("curve components must be polynomials in T");
  Poly xn = x.num() * x.den().coeff(0).inverse();
  Poly yn = y.num() * y.den().coeff(0).inverse();
  if (xn.degree() > 1 || yn.degree() > 1)
    throw ParseError("only lines (degree <= 1 parametrizations) are supported");
  LineCurve c;
  c.a = xn.coeff(0);
  c.b = xn.coeff(1);
  c.c = yn.coeff(0);
  c.d = yn.coeff(1);
  if (c.b.is_zero() && c.d.is_zero())
    throw ParseError("constant parametrization is not a curve");
  return c;
}

}  // namespace tame
