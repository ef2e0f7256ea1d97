#pragma once

#include <cctype>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccn/forms.hpp"
#include "ccn/rational.hpp"

namespace ccn {

// Small calculator for coefficient expressions like "-f2/f1" or
// "f0+f1+f2". Variables are f0..f9; juxtaposition multiplies; '^' takes a
// non-negative integer exponent.
class Expr {
 public:
  static Expr parse(const std::string& text) {
    Parser p{text, 0};
    Expr e;
    e.root_ = p.expr();
    p.skip();
    if (p.pos != text.size())
      throw std::invalid_argument("trailing input in expression: " + text);
    e.text_ = text;
    return e;
  }

  const std::string& text() const { return text_; }

  // Numeric value; if min_den is given it receives the smallest |denominator|
  // met while evaluating, so callers can reject near-pole sample points.
  double eval(const std::vector<double>& f, double* min_den = nullptr) const {
    double md = HUGE_VAL;
    double v = eval_num(*root_, f, md);
    if (min_den) *min_den = md;
    return v;
  }

  // Exact value; throws std::domain_error on division by zero.
  Rat eval_exact(const std::vector<Rat>& f) const {
    return eval_rat(*root_, f);
  }

  int max_var() const { return max_var_of(*root_); }

 private:
  struct Node {
    enum Kind { Num, Var, Add, Sub, Mul, Div, Pow, Neg } kind;
    long long value = 0;  // Num
    int var = 0;          // Var
    int expo = 0;         // Pow
    std::unique_ptr<Node> a, b;
  };
  using NodePtr = std::unique_ptr<Node>;

  struct Parser {
    const std::string& s;
    size_t pos;

    void skip() {
      while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    char peek() {
      skip();
      return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
      throw std::invalid_argument(what + " at offset " + std::to_string(pos) +
                                  " in expression: " + s);
    }

    NodePtr expr() {
      int sign = 1;
      while (peek() == '+' || peek() == '-') {
        if (s[pos] == '-') sign = -sign;
        ++pos;
      }
      NodePtr v = term();
      if (sign < 0) v = wrap(Node::Neg, std::move(v));
      while (true) {
        char c = peek();
        if (c == '+' || c == '-') {
          ++pos;
          NodePtr rhs = term();
          v = join(c == '+' ? Node::Add : Node::Sub, std::move(v),
                   std::move(rhs));
        } else {
          break;
        }
      }
      return v;
    }

    NodePtr term() {
      NodePtr v = factor();
      while (true) {
        char c = peek();
        if (c == '*') {
          ++pos;
          v = join(Node::Mul, std::move(v), factor());
        } else if (c == '/') {
          ++pos;
          v = join(Node::Div, std::move(v), factor());
        } else if (std::isdigit((unsigned char)c) || c == 'f' || c == '(') {
          v = join(Node::Mul, std::move(v), factor());
        } else {
          break;
        }
      }
      return v;
    }

    NodePtr factor() {
      NodePtr v = primary();
      if (peek() == '^') {
        ++pos;
        if (!std::isdigit((unsigned char)peek())) fail("expected exponent");
        long long e = integer();
        auto n = std::make_unique<Node>();
        n->kind = Node::Pow;
        n->expo = (int)e;
        n->a = std::move(v);
        v = std::move(n);
      }
      return v;
    }

    NodePtr primary() {
      char c = peek();
      if (c == '-') {
        ++pos;
        return wrap(Node::Neg, primary());
      }
      if (c == '(') {
        ++pos;
        NodePtr v = expr();
        if (peek() != ')') fail("expected ')'");
        ++pos;
        return v;
      }
      if (c == 'f') {
        ++pos;
        if (!std::isdigit((unsigned char)peek())) fail("expected variable index");
        long long idx = integer();
        auto n = std::make_unique<Node>();
        n->kind = Node::Var;
        n->var = (int)idx;
        return n;
      }
      if (std::isdigit((unsigned char)c)) {
        auto n = std::make_unique<Node>();
        n->kind = Node::Num;
        n->value = integer();
        return n;
      }
      fail("unexpected character");
    }

    long long integer() {
      long long v = 0;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
        v = v * 10 + (s[pos] - '0');
        ++pos;
      }
      return v;
    }

    static NodePtr wrap(Node::Kind k, NodePtr a) {
      auto n = std::make_unique<Node>();
      n->kind = k;
      n->a = std::move(a);
      return n;
    }
    static NodePtr join(Node::Kind k, NodePtr a, NodePtr b) {
      auto n = std::make_unique<Node>();
      n->kind = k;
      n->a = std::move(a);
      n->b = std::move(b);
      return n;
    }
  };

  static double eval_num(const Node& n, const std::vector<double>& f,
                         double& md) {
    switch (n.kind) {
      case Node::Num: return (double)n.value;
      case Node::Var:
        if (n.var >= (int)f.size())
          throw std::out_of_range("variable f" + std::to_string(n.var) +
                                  " not supplied");
        return f[n.var];
      case Node::Add: return eval_num(*n.a, f, md) + eval_num(*n.b, f, md);
      case Node::Sub: return eval_num(*n.a, f, md) - eval_num(*n.b, f, md);
      case Node::Mul: return eval_num(*n.a, f, md) * eval_num(*n.b, f, md);
      case Node::Div: {
        double den = eval_num(*n.b, f, md);
        if (std::fabs(den) < md) md = std::fabs(den);
        return eval_num(*n.a, f, md) / den;
      }
      case Node::Pow: return std::pow(eval_num(*n.a, f, md), n.expo);
      case Node::Neg: return -eval_num(*n.a, f, md);
    }
    throw std::logic_error("bad node");
  }

  static Rat eval_rat(const Node& n, const std::vector<Rat>& f) {
    switch (n.kind) {
      case Node::Num: return Rat(n.value);
      case Node::Var:
        if (n.var >= (int)f.size())
          throw std::out_of_range("variable f" + std::to_string(n.var) +
                                  " not supplied");
        return f[n.var];
      case Node::Add: return eval_rat(*n.a, f) + eval_rat(*n.b, f);
      case Node::Sub: return eval_rat(*n.a, f) - eval_rat(*n.b, f);
      case Node::Mul: return eval_rat(*n.a, f) * eval_rat(*n.b, f);
      case Node::Div: return eval_rat(*n.a, f) / eval_rat(*n.b, f);
      case Node::Pow: {
        Rat base = eval_rat(*n.a, f), r(1);
        for (int i = 0; i < n.expo; ++i) r *= base;
        return r;
      }
      case Node::Neg: return -eval_rat(*n.a, f);
    }
    throw std::logic_error("bad node");
  }

  static int max_var_of(const Node& n) {
    int m = n.kind == Node::Var ? n.var : -1;
    if (n.a) m = std::max(m, max_var_of(*n.a));
    if (n.b) m = std::max(m, max_var_of(*n.b));
    return m;
  }

  NodePtr root_;
  std::string text_;
};

namespace detail {
inline std::vector<Rat> unit_point(int k, int i, long long scale) {
  std::vector<Rat> f(k + 1);
  if (i >= 0) f[i] = Rat(scale);
  return f;
}
}  // namespace detail

// Reconstruct a homogeneous linear form from an expression by exact
// evaluation at unit points; rejects anything that is not linear.
inline LinearForm linear_form_from_expr(const std::string& text, int k) {
  Expr e = Expr::parse(text);
  LinearForm out(k);
  Rat c0 = e.eval_exact(detail::unit_point(k, -1, 0));
  if (!c0.is_zero())
    throw std::invalid_argument("expression has a constant term: " + text);
  for (int i = 0; i <= k; ++i) {
    Rat v1 = e.eval_exact(detail::unit_point(k, i, 1));
    Rat v2 = e.eval_exact(detail::unit_point(k, i, 2));
    if (v2 != v1 * Rat(2))
      throw std::invalid_argument("expression is not linear: " + text);
    out.c[i] = v1;
  }
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      auto f = detail::unit_point(k, i, 1);
      f[j] = Rat(1);
      if (e.eval_exact(f) != out.c[i] + out.c[j])
        throw std::invalid_argument("expression is not linear: " + text);
    }
  return out;
}

// Reconstruct a homogeneous quadratic form the same way.
inline QuadraticForm quadratic_form_from_expr(const std::string& text, int k) {
  Expr e = Expr::parse(text);
  QuadraticForm out(k);
  if (!e.eval_exact(detail::unit_point(k, -1, 0)).is_zero())
    throw std::invalid_argument("expression has a constant term: " + text);
  for (int i = 0; i <= k; ++i) {
    Rat v1 = e.eval_exact(detail::unit_point(k, i, 1));
    Rat v2 = e.eval_exact(detail::unit_point(k, i, 2));
    // v1 = L + Q, v2 = 2L + 4Q
    Rat q = (v2 - v1 * Rat(2)) / Rat(2);
    Rat l = v1 - q;
    if (!l.is_zero())
      throw std::invalid_argument("expression has a linear part: " + text);
    out.m[i][i] = q;
  }
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      auto f = detail::unit_point(k, i, 1);
      f[j] = Rat(1);
      Rat cross = e.eval_exact(f) - out.m[i][i] - out.m[j][j];
      out.m[i][j] = cross / Rat(2);
      out.m[j][i] = out.m[i][j];
    }
  // Confirm degree two on an independent point.
  std::vector<Rat> probe(k + 1);
  for (int i = 0; i <= k; ++i) probe[i] = Rat(i + 1);
  Rat direct = e.eval_exact(probe), viaform(0);
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) viaform += out.m[i][j] * probe[i] * probe[j];
  if (direct != viaform)
    throw std::invalid_argument("expression is not quadratic: " + text);
  return out;
}

}  // namespace ccn
