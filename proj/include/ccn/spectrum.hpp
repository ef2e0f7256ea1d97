#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "ccn/forms.hpp"
#include "ccn/linear_equivalence.hpp"
#include "ccn/network.hpp"

namespace ccn {

// Symbolic Jacobian at a synchronous point: J[i][j] collects f0 on the
// diagonal plus f_l for every type-l arrow from cell j+1 into cell i+1.
inline std::vector<std::vector<LinearForm>> jacobian_form(const Network& net) {
  int k = net.k();
  std::vector<std::vector<LinearForm>> J(
      net.n, std::vector<LinearForm>(net.n, LinearForm(k)));
  for (int i = 0; i < net.n; ++i) J[i][i].c[0] = Rat(1);
  for (int l = 1; l <= k; ++l)
    for (int i = 0; i < net.n; ++i)
      J[i][net.sigma[l - 1][i] - 1].c[l] += Rat(1);
  return J;
}

// Row sum of the Jacobian; the eigenvalue on the fully synchronous direction.
inline LinearForm valency_form(const Network& net) {
  LinearForm v(net.k());
  for (int i = 0; i <= net.k(); ++i) v.c[i] = Rat(1);
  return v;
}

inline Eigen::MatrixXd jacobian_at(const Network& net,
                                   const std::vector<double>& f) {
  auto J = jacobian_form(net);
  Eigen::MatrixXd M(net.n, net.n);
  for (int i = 0; i < net.n; ++i)
    for (int j = 0; j < net.n; ++j) M(i, j) = J[i][j].eval(f);
  return M;
}

// Invariants of the Jacobian restricted transverse to the synchronous
// direction, for three-cell networks: the reduced trace alpha1, reduced
// determinant alpha0, and discriminant
// D = alpha1^2 - 4 alpha0, which is independent of f0.
struct SpectralInvariants {
  LinearForm valency;
  LinearForm alpha1;
  QuadraticForm alpha0;
  QuadraticForm discriminant;
};

inline SpectralInvariants spectral_invariants(const Network& net) {
  if (net.n != 3)
    throw CcnError(ErrorCode::WrongCellCount,
                   "spectral invariants need a 3-cell network, got " +
                       std::to_string(net.n));
  auto J = jacobian_form(net);
  // Change of basis sending (1,1,1) to the last basis vector; the reduced
  // block acts on coordinates (x1 - x3, x2 - x3).
  LinearForm S11 = J[0][0] - J[2][0];
  LinearForm S12 = J[0][1] - J[2][1];
  LinearForm S21 = J[1][0] - J[2][0];
  LinearForm S22 = J[1][1] - J[2][1];
  SpectralInvariants inv;
  inv.valency = valency_form(net);
  inv.alpha1 = S11 + S22;
  inv.alpha0 = outer(S11, S22) - outer(S12, S21);
  inv.discriminant = outer(inv.alpha1, inv.alpha1) - inv.alpha0.scaled(Rat(4));
  for (size_t j = 0; j < inv.discriminant.m.size(); ++j)
    if (!inv.discriminant.m[0][j].is_zero())
      throw CcnError(ErrorCode::CorruptFixture,
                     "discriminant acquired an f0 dependence");
  return inv;
}

// Generic geometric multiplicity of the eigenvalue given by a linear form,
// from exact ranks of J - mu*I at a few rational sample points. The generic
// rank is the maximum over samples.
inline int generic_geometric_multiplicity(const Network& net,
                                          const LinearForm& mu) {
  auto J = jacobian_form(net);
  int max_rank = 0;
  for (int sample = 0; sample < 3; ++sample) {
    std::vector<Rat> f(net.k() + 1);
    for (int i = 0; i <= net.k(); ++i) {
      long long v = i + 1;
      if (sample == 1) v = 2 * i + 3;
      if (sample == 2) v = (i + 2) * (i + 2);
      f[i] = Rat(v);
    }
    Rat muval(0);
    for (size_t i = 0; i < f.size(); ++i) muval += mu.c[i] * f[i];
    std::vector<std::vector<Rat>> M(net.n, std::vector<Rat>(net.n));
    for (int i = 0; i < net.n; ++i)
      for (int j = 0; j < net.n; ++j) {
        Rat v(0);
        for (size_t l = 0; l < f.size(); ++l) v += J[i][j].c[l] * f[l];
        if (i == j) v -= muval;
        M[i][j] = v;
      }
    max_rank = std::max(max_rank, (int)detail::rref(std::move(M)).size());
  }
  return net.n - max_rank;
}

enum class RealClass { Always, Never, OnOpenSet };

inline const char* to_cstr(RealClass r) {
  switch (r) {
    case RealClass::Always: return "always-real";
    case RealClass::Never: return "never-real";
    case RealClass::OnOpenSet: return "real-on-open-set";
  }
  return "?";
}

// One eigenvalue of the symbolic Jacobian, as a function of the first-order
// coefficients. QuadraticRoot stands for (alpha1 + branch*sqrt(D)) / 2.
struct Eigenfunction {
  enum class Kind { Valency, Linear, QuadraticRoot } kind;
  LinearForm lin;        // Valency, Linear
  LinearForm alpha1;     // QuadraticRoot
  QuadraticForm alpha0;  // QuadraticRoot
  int branch = 0;        // QuadraticRoot: +1 or -1
  int alg = 1;
  int geo = 1;
  RealClass real = RealClass::Always;
};

inline std::string value_string(const Eigenfunction& e) {
  switch (e.kind) {
    case Eigenfunction::Kind::Valency:
    case Eigenfunction::Kind::Linear: return to_string(e.lin);
    case Eigenfunction::Kind::QuadraticRoot: {
      QuadraticForm D =
          outer(e.alpha1, e.alpha1) - e.alpha0.scaled(Rat(4));
      return "(" + to_string(e.alpha1) + (e.branch > 0 ? " + " : " - ") +
             "sqrt(" + to_string(D) + "))/2";
    }
  }
  return "?";
}

// Identity of the eigenvalue as a function (multiplicities ignored).
inline std::string eig_key(const Eigenfunction& e) {
  switch (e.kind) {
    case Eigenfunction::Kind::Valency:
    case Eigenfunction::Kind::Linear: return "lin:" + to_string(e.lin);
    case Eigenfunction::Kind::QuadraticRoot:
      return "quad:" + to_string(e.alpha1) + ";" + to_string(e.alpha0) + ";" +
             (e.branch > 0 ? "+" : "-");
  }
  return "?";
}

inline bool same_function(const Eigenfunction& a, const Eigenfunction& b) {
  return eig_key(a) == eig_key(b);
}

enum class DiscClass {
  IdenticallyZero,
  PositiveDefiniteOrPSD,
  NegativeDefiniteOrNSD,
  Indefinite,
};

inline const char* to_cstr(DiscClass d) {
  switch (d) {
    case DiscClass::IdenticallyZero: return "IdenticallyZero";
    case DiscClass::PositiveDefiniteOrPSD: return "PositiveDefiniteOrPSD";
    case DiscClass::NegativeDefiniteOrNSD: return "NegativeDefiniteOrNSD";
    case DiscClass::Indefinite: return "Indefinite";
  }
  return "?";
}

namespace detail {

// Characteristic polynomial of a small rational symmetric matrix by the
// Faddeev-LeVerrier recursion: x^m + cs[1] x^(m-1) + ... + cs[m].
inline std::vector<Rat> charpoly(const std::vector<std::vector<Rat>>& M) {
  int m = (int)M.size();
  std::vector<Rat> cs(m + 1);
  cs[0] = Rat(1);
  std::vector<std::vector<Rat>> Mk(m, std::vector<Rat>(m));
  auto matmul = [&](const std::vector<std::vector<Rat>>& A,
                    const std::vector<std::vector<Rat>>& B) {
    std::vector<std::vector<Rat>> C(m, std::vector<Rat>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int l = 0; l < m; ++l) C[i][j] += A[i][l] * B[l][j];
    return C;
  };
  // Mk = M * (previous Mk + c_k I)
  std::vector<std::vector<Rat>> acc(m, std::vector<Rat>(m));
  for (int i = 0; i < m; ++i) acc[i][i] = Rat(1);
  for (int kstep = 1; kstep <= m; ++kstep) {
    acc = matmul(M, acc);
    Rat tr(0);
    for (int i = 0; i < m; ++i) tr += acc[i][i];
    cs[kstep] = -tr / Rat(kstep);
    for (int i = 0; i < m; ++i) acc[i][i] += cs[kstep];
  }
  return cs;
}

struct Signature {
  int zero = 0, pos = 0, neg = 0;
};

// Root signs of a real-rooted monic polynomial via Descartes' rule, exact.
inline Signature root_signature(const std::vector<Rat>& cs) {
  int m = (int)cs.size() - 1;
  Signature sig;
  int last = m;
  while (last > 0 && cs[last].is_zero()) {
    ++sig.zero;
    --last;
  }
  int prev = 0;
  for (int i = 0; i <= last; ++i) {
    int s = cs[i].sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++sig.pos;
    prev = s;
  }
  sig.neg = m - sig.zero - sig.pos;
  return sig;
}

}  // namespace detail

struct DiscriminantReport {
  DiscClass cls = DiscClass::IdenticallyZero;
  int rank = 0;
  // When D is a perfect square of a linear form, the exact square root.
  std::optional<LinearForm> linear_factor;
};

inline DiscriminantReport classify_discriminant(const QuadraticForm& D) {
  DiscriminantReport out;
  if (D.is_zero()) return out;
  auto sig = detail::root_signature(detail::charpoly(D.m));
  out.rank = sig.pos + sig.neg;
  if (sig.neg == 0)
    out.cls = DiscClass::PositiveDefiniteOrPSD;
  else if (sig.pos == 0)
    out.cls = DiscClass::NegativeDefiniteOrNSD;
  else
    out.cls = DiscClass::Indefinite;
  if (out.cls == DiscClass::PositiveDefiniteOrPSD && out.rank == 1) {
    int m = (int)D.m.size(), i0 = -1;
    for (int i = 0; i < m && i0 < 0; ++i)
      if (!D.m[i][i].is_zero()) i0 = i;
    Rat s;
    if (i0 >= 0 && rational_sqrt(D.m[i0][i0], s)) {
      LinearForm root(m - 1);
      for (int j = 0; j < m; ++j) root.c[j] = D.m[i0][j] / s;
      if (outer(root, root) == D) out.linear_factor = root;
    }
  }
  return out;
}

// A genericity requirement: the listed form must not vanish at the sampled
// first-order coefficients.
struct Degeneracy {
  bool quadratic = false;
  LinearForm lin;
  QuadraticForm quad;

  double eval(const std::vector<double>& f) const {
    return quadratic ? quad.eval(f) : lin.eval(f);
  }
  std::string str() const {
    return (quadratic ? to_string(quad) : to_string(lin)) + " != 0";
  }
};

enum class SpectrumCase {
  ValencyTriple,   // J is a multiple of a symmetric pattern; all three equal
  ValencyDouble,   // valency with multiplicity two, semisimple
  SemisimplePair,  // a non-valency eigenvalue of multiplicity two, semisimple
  DefectivePair,   // a non-valency eigenvalue of multiplicity two, defective
  Distinct,        // three generically distinct eigenvalues
};

inline const char* to_cstr(SpectrumCase c) {
  switch (c) {
    case SpectrumCase::ValencyTriple: return "valency-triple";
    case SpectrumCase::ValencyDouble: return "valency-double";
    case SpectrumCase::SemisimplePair: return "semisimple-double";
    case SpectrumCase::DefectivePair: return "defective";
    case SpectrumCase::Distinct: return "distinct";
  }
  return "?";
}

struct SpectralReport {
  SpectralInvariants inv;
  SpectrumCase kase = SpectrumCase::Distinct;
  std::vector<Eigenfunction> eigenfunctions;
  std::vector<Degeneracy> degeneracies;
  DiscriminantReport disc;
};

// Full generic spectrum of a three-cell network, as exact functions of the
// first-order coefficients.
inline SpectralReport classify_spectrum(const Network& net) {
  SpectralReport rep;
  rep.inv = spectral_invariants(net);
  const LinearForm& ups = rep.inv.valency;
  const LinearForm& a1 = rep.inv.alpha1;
  const QuadraticForm& a0 = rep.inv.alpha0;
  const QuadraticForm& D = rep.inv.discriminant;
  int k = net.k();

  auto val_eig = [&](int alg, int geo) {
    Eigenfunction e;
    e.kind = Eigenfunction::Kind::Valency;
    e.lin = ups;
    e.alg = alg;
    e.geo = geo;
    return e;
  };
  auto lin_eig = [&](const LinearForm& l, int alg, int geo) {
    Eigenfunction e;
    e.kind = Eigenfunction::Kind::Linear;
    e.lin = l;
    e.alg = alg;
    e.geo = geo;
    return e;
  };
  auto lin_deg = [&](const LinearForm& l) {
    Degeneracy d;
    d.lin = l;
    return d;
  };
  auto quad_deg = [&](const QuadraticForm& q) {
    Degeneracy d;
    d.quadratic = true;
    d.quad = q;
    return d;
  };

  LinearForm two_ups = ups.scaled(Rat(2));
  if (a1 == two_ups && a0 == outer(ups, ups)) {
    rep.kase = SpectrumCase::ValencyTriple;
    rep.eigenfunctions.push_back(
        val_eig(3, generic_geometric_multiplicity(net, ups)));
    return rep;
  }
  if (a0 == outer(ups, a1 - ups) && a1 != two_ups) {
    // upsilon is a reduced-block eigenvalue too; the remaining one is
    // alpha1 - upsilon.
    rep.kase = SpectrumCase::ValencyDouble;
    rep.eigenfunctions.push_back(
        val_eig(2, generic_geometric_multiplicity(net, ups)));
    rep.eigenfunctions.push_back(lin_eig(a1 - ups, 1, 1));
    rep.degeneracies.push_back(lin_deg(a1 - two_ups));
    return rep;
  }
  if (D.is_zero()) {
    // Double root alpha1/2 of the reduced block.
    LinearForm mu = a1.scaled(Rat(1, 2));
    auto J = jacobian_form(net);
    LinearForm t1 = J[1][0] - J[2][0];                        // c - e
    LinearForm t2 = J[0][1] - J[2][1];                        // b - f
    LinearForm t3 = J[1][1] - J[0][0] + J[2][0] - J[2][1];    // d - a + e - f
    bool diagonalizable = t1.is_zero() && t2.is_zero() && t3.is_zero();
    rep.kase = diagonalizable ? SpectrumCase::SemisimplePair
                              : SpectrumCase::DefectivePair;
    rep.eigenfunctions.push_back(val_eig(1, 1));
    rep.eigenfunctions.push_back(lin_eig(mu, 2, diagonalizable ? 2 : 1));
    rep.degeneracies.push_back(lin_deg(a1 - two_ups));
    return rep;
  }
  rep.kase = SpectrumCase::Distinct;
  rep.disc = classify_discriminant(D);
  rep.eigenfunctions.push_back(val_eig(1, 1));
  // upsilon must not be a root of the reduced characteristic polynomial.
  QuadraticForm ups_root =
      outer(ups, ups) - outer(a1, ups) + a0;
  rep.degeneracies.push_back(quad_deg(ups_root));
  rep.degeneracies.push_back(quad_deg(D));
  if (rep.disc.linear_factor) {
    const LinearForm& root = *rep.disc.linear_factor;
    Rat half(1, 2);
    rep.eigenfunctions.push_back(lin_eig((a1 + root).scaled(half), 1, 1));
    rep.eigenfunctions.push_back(lin_eig((a1 - root).scaled(half), 1, 1));
    return rep;
  }
  RealClass real = RealClass::Always;
  if (rep.disc.cls == DiscClass::NegativeDefiniteOrNSD)
    real = RealClass::Never;
  else if (rep.disc.cls == DiscClass::Indefinite)
    real = RealClass::OnOpenSet;
  for (int branch : {+1, -1}) {
    Eigenfunction e;
    e.kind = Eigenfunction::Kind::QuadraticRoot;
    e.alpha1 = a1;
    e.alpha0 = a0;
    e.branch = branch;
    e.real = real;
    rep.eigenfunctions.push_back(e);
    (void)k;
  }
  return rep;
}

// Eigenvalues of a quotient on 1..3 cells, as functions of the coefficients.
inline std::vector<Eigenfunction> quotient_eigenfunctions(const Network& net) {
  std::vector<Eigenfunction> out;
  LinearForm ups = valency_form(net);
  if (net.n == 1) {
    Eigenfunction e;
    e.kind = Eigenfunction::Kind::Valency;
    e.lin = ups;
    out.push_back(e);
    return out;
  }
  if (net.n == 2) {
    auto J = jacobian_form(net);
    LinearForm other = (J[0][0] + J[1][1]) - ups;
    Eigenfunction v;
    v.kind = Eigenfunction::Kind::Valency;
    v.lin = ups;
    if (other == ups) {
      v.alg = v.geo = 2;
      out.push_back(v);
    } else {
      out.push_back(v);
      Eigenfunction e;
      e.kind = Eigenfunction::Kind::Linear;
      e.lin = other;
      out.push_back(e);
    }
    return out;
  }
  if (net.n == 3) return classify_spectrum(net).eigenfunctions;
  throw CcnError(ErrorCode::WrongCellCount,
                 "eigenfunctions computed for quotients of up to 3 cells");
}

// Does the eigenvalue function mu appear in the spectrum of this quotient?
inline bool is_member(const Eigenfunction& mu, const Network& quot) {
  LinearForm ups = valency_form(quot);
  if (mu.kind == Eigenfunction::Kind::QuadraticRoot) {
    if (quot.n != 3) return false;
    auto inv = spectral_invariants(quot);
    return inv.alpha1 == mu.alpha1 && inv.alpha0 == mu.alpha0;
  }
  const LinearForm& L = mu.lin;
  if (L == ups) return true;
  if (quot.n == 1) return false;
  if (quot.n == 2) {
    auto J = jacobian_form(quot);
    return L == (J[0][0] + J[1][1]) - ups;
  }
  if (quot.n == 3) {
    auto inv = spectral_invariants(quot);
    QuadraticForm res = outer(L, L) - outer(inv.alpha1, L) + inv.alpha0;
    return res.is_zero();
  }
  return false;
}

// Numeric spectrum at concrete coefficients, with clustered multiplicities.
struct NumericSpectrum {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;
  std::vector<std::vector<int>> clusters;  // indices grouped within tolerance
  std::vector<int> geometric;              // one entry per cluster
};

inline NumericSpectrum numeric_spectrum(const Network& net,
                                        const std::vector<double>& f,
                                        double tol = 1e-7) {
  Eigen::MatrixXd J = jacobian_at(net, f);
  Eigen::EigenSolver<Eigen::MatrixXd> es(J);
  NumericSpectrum out;
  out.values = es.eigenvalues();
  out.vectors = es.eigenvectors();
  double scale = std::max(1.0, J.norm());
  std::vector<char> used(net.n, 0);
  for (int i = 0; i < net.n; ++i) {
    if (used[i]) continue;
    std::vector<int> cluster{i};
    used[i] = 1;
    for (int j = i + 1; j < net.n; ++j)
      if (!used[j] && std::abs(out.values(i) - out.values(j)) <= tol * scale) {
        used[j] = 1;
        cluster.push_back(j);
      }
    Eigen::MatrixXcd shifted =
        J.cast<std::complex<double>>() -
        out.values(i) * Eigen::MatrixXcd::Identity(net.n, net.n);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
    int rank = 0;
    for (int s = 0; s < svd.singularValues().size(); ++s)
      if (svd.singularValues()(s) > tol * scale) ++rank;
    out.clusters.push_back(cluster);
    out.geometric.push_back(net.n - rank);
  }
  return out;
}

}  // namespace ccn
