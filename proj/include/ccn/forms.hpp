#pragma once

#include <string>
#include <vector>

#include "ccn/rational.hpp"

namespace ccn {

// Linear form in the first-order coefficients f0..fk.
struct LinearForm {
  std::vector<Rat> c;  // size k+1, index 0 is f0

  explicit LinearForm(int k = 0) : c(k + 1) {}
  int order() const { return (int)c.size() - 1; }

  bool is_zero() const {
    for (const auto& v : c)
      if (!v.is_zero()) return false;
    return true;
  }
  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.c == b.c;
  }
  friend bool operator!=(const LinearForm& a, const LinearForm& b) {
    return !(a == b);
  }
  friend LinearForm operator+(const LinearForm& a, const LinearForm& b) {
    LinearForm r(a.order());
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend LinearForm operator-(const LinearForm& a, const LinearForm& b) {
    LinearForm r(a.order());
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  LinearForm operator-() const {
    LinearForm r(order());
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = -c[i];
    return r;
  }
  LinearForm scaled(const Rat& s) const {
    LinearForm r(order());
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] * s;
    return r;
  }
  double eval(const std::vector<double>& f) const {
    double s = 0;
    for (size_t i = 0; i < c.size(); ++i) s += c[i].to_double() * f[i];
    return s;
  }
};

// Quadratic form in f0..fk, stored as a symmetric coefficient matrix.
struct QuadraticForm {
  std::vector<std::vector<Rat>> m;  // (k+1) x (k+1), symmetric

  explicit QuadraticForm(int k = 0)
      : m(k + 1, std::vector<Rat>(k + 1)) {}
  int order() const { return (int)m.size() - 1; }

  bool is_zero() const {
    for (const auto& row : m)
      for (const auto& v : row)
        if (!v.is_zero()) return false;
    return true;
  }
  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.m == b.m;
  }
  friend bool operator!=(const QuadraticForm& a, const QuadraticForm& b) {
    return !(a == b);
  }
  friend QuadraticForm operator+(const QuadraticForm& a,
                                 const QuadraticForm& b) {
    QuadraticForm r(a.order());
    for (size_t i = 0; i < r.m.size(); ++i)
      for (size_t j = 0; j < r.m.size(); ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
    return r;
  }
  friend QuadraticForm operator-(const QuadraticForm& a,
                                 const QuadraticForm& b) {
    QuadraticForm r(a.order());
    for (size_t i = 0; i < r.m.size(); ++i)
      for (size_t j = 0; j < r.m.size(); ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
    return r;
  }
  QuadraticForm scaled(const Rat& s) const {
    QuadraticForm r(order());
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m.size(); ++j) r.m[i][j] = m[i][j] * s;
    return r;
  }
  double eval(const std::vector<double>& f) const {
    double s = 0;
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m.size(); ++j)
        s += m[i][j].to_double() * f[i] * f[j];
    return s;
  }
};

// Symmetrised product of two linear forms, so that eval(outer(a,b)) == a*b.
inline QuadraticForm outer(const LinearForm& a, const LinearForm& b) {
  QuadraticForm q(a.order());
  Rat half(1, 2);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < a.c.size(); ++j)
      q.m[i][j] = (a.c[i] * b.c[j] + a.c[j] * b.c[i]) * half;
  return q;
}

namespace detail {
inline void append_term(std::string& out, const Rat& coeff,
                        const std::string& mono) {
  if (coeff.is_zero()) return;
  Rat mag = coeff.abs();
  if (out.empty()) {
    if (coeff.sign() < 0) out += "-";
  } else {
    out += coeff.sign() < 0 ? " - " : " + ";
  }
  if (mag != Rat(1) || mono.empty()) out += mag.str();
  out += mono;
}
}  // namespace detail

// Canonical text: terms in index order, unit coefficients implicit,
// e.g. "f0 + f1 - f2", "2f1".
inline std::string to_string(const LinearForm& l) {
  std::string out;
  for (size_t i = 0; i < l.c.size(); ++i)
    detail::append_term(out, l.c[i], "f" + std::to_string(i));
  return out.empty() ? "0" : out;
}

// Canonical text with i<=j term order and doubled off-diagonal coefficients,
// e.g. "f1^2 + 4f2^2", "4f1f2".
inline std::string to_string(const QuadraticForm& q) {
  std::string out;
  for (size_t i = 0; i < q.m.size(); ++i)
    for (size_t j = i; j < q.m.size(); ++j) {
      Rat coeff = (i == j) ? q.m[i][i] : q.m[i][j] * Rat(2);
      std::string mono = (i == j)
                             ? "f" + std::to_string(i) + "^2"
                             : "f" + std::to_string(i) + "f" + std::to_string(j);
      detail::append_term(out, coeff, mono);
    }
  return out.empty() ? "0" : out;
}

}  // namespace ccn
