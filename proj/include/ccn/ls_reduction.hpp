#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "ccn/network.hpp"
#include "ccn/rng.hpp"
#include "ccn/spectrum.hpp"

namespace ccn {

// Taylor data of the cell dynamics at the origin: first-order coefficients
// f[l] per input slot (f[0] is the internal one), the lambda cross term on
// the internal slot, symmetric second-order coefficients fpq, and the cubic
// internal coefficient f000.
struct DerivativeProfile {
  std::vector<double> f;                   // size k+1
  double f0l = 1.0;                        // d^2 f / dx0 dlambda
  std::vector<std::vector<double>> fpq;    // (k+1)x(k+1), symmetric
  double f000 = 0.0;

  int order() const { return (int)f.size() - 1; }
};

inline std::vector<Eigen::MatrixXd> adjacency_matrices(const Network& net) {
  std::vector<Eigen::MatrixXd> out;
  for (int l = 0; l <= net.k(); ++l) {
    auto a = adjacency(net, l);
    Eigen::MatrixXd m(net.n, net.n);
    for (int i = 0; i < net.n; ++i)
      for (int j = 0; j < net.n; ++j) m(i, j) = a[i][j];
    out.push_back(std::move(m));
  }
  return out;
}

// Second differential of the network field at the origin applied to (u, w).
inline Eigen::VectorXd d2f(const std::vector<Eigen::MatrixXd>& A,
                           const DerivativeProfile& prof,
                           const Eigen::VectorXd& u, const Eigen::VectorXd& w) {
  int k = prof.order();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(u.size());
  for (int p = 0; p <= k; ++p) {
    Eigen::VectorXd Au = A[p] * u;
    for (int q = 0; q <= k; ++q)
      out += prof.fpq[p][q] * Au.cwiseProduct(A[q] * w);
  }
  return out;
}

// Picks f0 so that the eigenvalue mu vanishes at the given f1..fk. For a
// square-root eigenvalue the discriminant must clear real_margin.
inline double solve_bifurcation_condition(const SpectralReport& rep,
                                          const Eigenfunction& mu,
                                          const std::vector<double>& f,
                                          double real_margin = 0.0) {
  if (mu.kind != Eigenfunction::Kind::QuadraticRoot) {
    double c0 = mu.lin.c[0].to_double();
    if (c0 == 0.0)
      throw CcnError(ErrorCode::UnhandledConfiguration,
                     "eigenvalue does not involve f0");
    double rest = 0;
    for (size_t l = 1; l < mu.lin.c.size(); ++l)
      rest += mu.lin.c[l].to_double() * f[l];
    return -rest / c0;
  }
  if (mu.real == RealClass::Never)
    throw CcnError(ErrorCode::NotRealAtThisPoint,
                   "eigenvalue has negative discriminant everywhere off a "
                   "null set");
  double D = rep.inv.discriminant.eval(f);  // independent of f[0]
  if (D <= real_margin)
    throw CcnError(ErrorCode::NotRealAtThisPoint,
                   "discriminant " + std::to_string(D) +
                       " not positive at this draw");
  if (mu.alpha1.c[0] != Rat(2))
    throw CcnError(ErrorCode::UnhandledConfiguration,
                   "unexpected f0 coefficient in alpha1");
  double ell = 0;
  for (size_t l = 1; l < mu.alpha1.c.size(); ++l)
    ell += mu.alpha1.c[l].to_double() * f[l];
  return -(ell + mu.branch * std::sqrt(D)) / 2.0;
}

// The reduced bifurcation data on the kernel of J at a bifurcation point.
struct ReducedSystem {
  enum class Mode { Simple, SemisimplePair, DefectivePair } mode;
  double mu_lambda = 1.0;
  Eigen::MatrixXd kernel;    // rows v_1..v_m (generalized basis if defective)
  Eigen::MatrixXd cokernel;  // rows v*_1..v*_m with <v*_i, v_j> = delta_ij
  double biorth_residual = 0.0;
  double g2 = 0.0;                       // Simple
  std::array<std::array<std::array<double, 2>, 2>, 2> quad{};  // Semisimple
  // Defective extras: Jv2 = v1, w2 corrects v2 into the range complement.
  Eigen::VectorXd v1, v2, w2;
  double vstar_cross = 0.0;  // <v*_1, v*_2>, recorded, not forced to zero
};

namespace detail {

inline int small_singular_count(const Eigen::JacobiSVD<Eigen::MatrixXd>& svd,
                                double tol) {
  int c = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) <= tol) ++c;
  return c;
}

inline void canonical_sign(Eigen::VectorXd& v) {
  int imax = 0;
  for (int i = 1; i < v.size(); ++i)
    if (std::fabs(v(i)) > std::fabs(v(imax))) imax = i;
  v /= v(imax);
}

}  // namespace detail

inline ReducedSystem reduced_coefficients(const Network& net,
                                          const Eigenfunction& mu,
                                          const DerivativeProfile& prof) {
  auto A = adjacency_matrices(net);
  Eigen::MatrixXd J = jacobian_at(net, prof.f);
  double scale = std::max(1.0, J.norm());
  double tol = 1e-7 * scale;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      J, Eigen::ComputeFullU | Eigen::ComputeFullV);
  int null_dim = detail::small_singular_count(svd, tol);

  ReducedSystem rs;
  rs.mu_lambda = prof.f0l;
  int n = net.n;

  if (mu.alg == 1) {
    rs.mode = ReducedSystem::Mode::Simple;
    if (null_dim != 1)
      throw CcnError(ErrorCode::KernelDimensionMismatch,
                     "kernel dimension " + std::to_string(null_dim) +
                         ", expected 1");
    Eigen::VectorXd v = svd.matrixV().col(n - 1);
    detail::canonical_sign(v);
    Eigen::VectorXd vs = svd.matrixU().col(n - 1);
    double ip = vs.dot(v);
    if (std::fabs(ip) < 1e-10)
      throw CcnError(ErrorCode::SingularRangeRestriction,
                     "left and right kernel vectors are orthogonal");
    vs /= ip;
    rs.kernel = v.transpose();
    rs.cokernel = vs.transpose();
    rs.biorth_residual = std::fabs(vs.dot(v) - 1.0);
    rs.g2 = vs.dot(d2f(A, prof, v, v));
    return rs;
  }

  if (mu.geo == 2) {
    rs.mode = ReducedSystem::Mode::SemisimplePair;
    if (null_dim != 2)
      throw CcnError(ErrorCode::KernelDimensionMismatch,
                     "kernel dimension " + std::to_string(null_dim) +
                         ", expected 2");
    Eigen::MatrixXd K = svd.matrixV().rightCols(2).transpose();  // rows
    Eigen::MatrixXd C = svd.matrixU().rightCols(2).transpose();
    Eigen::Matrix2d gram = C * K.transpose();
    if (std::fabs(gram.determinant()) < 1e-12)
      throw CcnError(ErrorCode::SingularRangeRestriction,
                     "cokernel does not pair with the kernel");
    C = gram.inverse() * C;
    rs.kernel = K;
    rs.cokernel = C;
    rs.biorth_residual =
        (C * K.transpose() - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff();
    for (int i = 0; i < 2; ++i)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          rs.quad[i][a][b] = C.row(i).dot(
              d2f(A, prof, K.row(a).transpose(), K.row(b).transpose()));
    return rs;
  }

  // Defective pair: one kernel vector, one generalized.
  rs.mode = ReducedSystem::Mode::DefectivePair;
  if (null_dim != 1)
    throw CcnError(ErrorCode::KernelDimensionMismatch,
                   "kernel dimension " + std::to_string(null_dim) +
                       ", expected 1 (defective)");
  Eigen::VectorXd v1 = svd.matrixV().col(n - 1);
  detail::canonical_sign(v1);
  svd.setThreshold(1e-10);  // keep the null direction out of the solve
  Eigen::VectorXd v2 = svd.solve(v1);  // least squares, minimum norm
  if ((J * v2 - v1).norm() > 1e-8 * scale)
    throw CcnError(ErrorCode::NotDefectiveHere,
                   "no generalized kernel vector: the eigenvalue is "
                   "semisimple at this point");
  Eigen::MatrixXd J2 = J * J;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd2(
      J2, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (detail::small_singular_count(svd2, 1e-7 * std::max(1.0, J2.norm())) != 2)
    throw CcnError(ErrorCode::KernelDimensionMismatch,
                   "generalized kernel of J^2 is not two-dimensional");
  Eigen::MatrixXd B = svd2.matrixU().rightCols(2);  // basis of ker((J^2)^T)
  Eigen::Matrix2d M;
  M << B.col(0).dot(v2), B.col(1).dot(v2), B.col(0).dot(v1), B.col(1).dot(v1);
  if (std::fabs(M.determinant()) < 1e-12)
    throw CcnError(ErrorCode::SingularRangeRestriction,
                   "generalized cokernel does not pair with (v1, v2)");
  Eigen::Vector2d c2 = M.inverse() * Eigen::Vector2d(1, 0);
  Eigen::Vector2d c1 = M.inverse() * Eigen::Vector2d(0, 1);
  Eigen::VectorXd v2s = B * c2;  // <v2s,v2>=1, <v2s,v1>=0
  Eigen::VectorXd v1s = B * c1;  // <v1s,v2>=0, <v1s,v1>=1
  // Range of J^2 is one-dimensional; shift v2 into the complement of it.
  Eigen::VectorXd r = svd2.matrixU().col(0);
  double denom = r.dot(J * r);
  if (std::fabs(denom) < 1e-12)
    throw CcnError(ErrorCode::SingularRangeRestriction,
                   "range vector is annihilated by J");
  double t = -r.dot(v1) / denom;
  rs.v1 = v1;
  rs.v2 = v2;
  rs.w2 = r * t;
  rs.kernel = Eigen::MatrixXd(2, n);
  rs.kernel.row(0) = v1.transpose();
  rs.kernel.row(1) = v2.transpose();
  rs.cokernel = Eigen::MatrixXd(2, n);
  rs.cokernel.row(0) = v1s.transpose();
  rs.cokernel.row(1) = v2s.transpose();
  rs.biorth_residual = (rs.cokernel * rs.kernel.transpose() -
                        Eigen::Matrix2d::Identity())
                           .cwiseAbs()
                           .maxCoeff();
  rs.vstar_cross = v1s.dot(v2s);
  return rs;
}

// Cubic coefficient of the one-dimensional reduced equation:
// <v*, d3f(v,v,v)> - 3 <v*, d2f(v, J^+ P d2f(v,v))>.
inline double cubic_coefficient(const Network& net, const ReducedSystem& rs,
                                const DerivativeProfile& prof) {
  auto A = adjacency_matrices(net);
  Eigen::MatrixXd J = jacobian_at(net, prof.f);
  Eigen::VectorXd v = rs.kernel.row(0).transpose();
  Eigen::VectorXd vs = rs.cokernel.row(0).transpose();
  Eigen::VectorXd q = d2f(A, prof, v, v);
  Eigen::VectorXd pq = q - vs * (vs.dot(q) / vs.dot(vs));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      J, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-10);
  Eigen::VectorXd w = svd.solve(pq);
  Eigen::VectorXd cube =
      prof.f000 * v.cwiseProduct(v).cwiseProduct(v);
  return vs.dot(cube) - 3.0 * vs.dot(d2f(A, prof, v, w));
}

// All solutions of the two-dimensional reduced quadratic system
// y + q(y) = 0 at lambda = 1, found from a deterministic start battery.
struct QuadBranchReport {
  std::vector<Eigen::Vector2d> solutions;  // deduplicated, trivial included
  std::vector<int> rank;                   // of [Dh | y] at each solution
  bool common_factor = false;              // the two quadratics share a root
  double resultant = 0.0;
};

inline QuadBranchReport quadratic_branch_system(const ReducedSystem& rs) {
  const auto& g = rs.quad;
  double scale = 0;
  for (int i = 0; i < 2; ++i)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) scale = std::max(scale, std::fabs(g[i][a][b]));
  if (scale < 1e-12)
    throw CcnError(ErrorCode::DegenerateQuadratic,
                   "second-order coefficients vanish on the kernel");

  auto q = [&](const Eigen::Vector2d& y) {
    Eigen::Vector2d out;
    for (int i = 0; i < 2; ++i) {
      double s = 0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) s += g[i][a][b] * y(a) * y(b);
      out(i) = 0.5 * s;
    }
    return out;
  };
  auto h = [&](const Eigen::Vector2d& y) -> Eigen::Vector2d {
    return rs.mu_lambda * y + q(y);
  };
  auto dh = [&](const Eigen::Vector2d& y) {
    Eigen::Matrix2d m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double s = (i == j) ? rs.mu_lambda : 0.0;
        for (int b = 0; b < 2; ++b)
          s += 0.5 * (g[i][j][b] + g[i][b][j]) * y(b);
        m(i, j) = s;
      }
    return m;
  };

  // The direction fan must include the coordinate axes: structural zeros in
  // the quadratics put ray solutions exactly on an axis, and when the
  // surviving coefficient is small the solution sits far out where only the
  // targeted start along its own ray reaches it.
  std::vector<Eigen::Vector2d> starts{Eigen::Vector2d::Zero()};
  for (int t = 0; t < 32; ++t) {
    double a = 2.0 * 3.14159265358979323846 * t / 32.0;
    Eigen::Vector2d d(std::cos(a), std::sin(a));
    double denom = d.dot(q(d));
    if (std::fabs(denom) > 1e-12) starts.push_back(d * (-1.0 / denom));
    for (double r : {0.5, 2.0, 8.0, 32.0, 128.0, 512.0})
      starts.push_back(d * r);
  }

  QuadBranchReport out;
  for (const auto& s0 : starts) {
    Eigen::Vector2d y = s0;
    bool ok = false;
    for (int it = 0; it < 100; ++it) {
      Eigen::Vector2d hy = h(y);
      double rn = hy.norm();
      if (rn <= 1e-13 * (1.0 + y.norm())) {
        ok = true;
        break;
      }
      Eigen::Matrix2d m = dh(y);
      Eigen::Vector2d step = m.fullPivLu().solve(hy);
      if (!step.allFinite()) break;
      double base = rn;
      Eigen::Vector2d cand = y - step;
      int halvings = 0;
      while (halvings < 40 && h(cand).norm() >= base) {
        step *= 0.5;
        cand = y - step;
        ++halvings;
      }
      if (halvings == 40) break;
      y = cand;
    }
    if (!ok && h(y).norm() < 1e-11) ok = true;
    if (!ok) continue;
    bool dup = false;
    for (const auto& sol : out.solutions)
      if ((sol - y).norm() <= 1e-6 * (1.0 + y.norm())) {
        dup = true;
        break;
      }
    if (!dup) out.solutions.push_back(y);
  }
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
              if (a.norm() != b.norm()) return a.norm() < b.norm();
              return a(0) < b(0);
            });
  for (const auto& y : out.solutions) {
    Eigen::MatrixXd ext(2, 3);
    ext.leftCols(2) = dh(y);
    ext.col(2) = rs.mu_lambda * y;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(ext);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > 1e-8 * std::max(1.0, ext.norm())) ++r;
    out.rank.push_back(r);
  }
  // Shared linear factor of the two quadratics via their resultant.
  double a1 = 0.5 * g[0][0][0], b1 = g[0][0][1], c1 = 0.5 * g[0][1][1];
  double a2 = 0.5 * g[1][0][0], b2 = g[1][0][1], c2 = 0.5 * g[1][1][1];
  double ac = a1 * c2 - a2 * c1;
  out.resultant = ac * ac - (a1 * b2 - a2 * b1) * (b1 * c2 - b2 * c1);
  out.common_factor = std::fabs(out.resultant) < 1e-10 * scale * scale *
                                                     scale * scale;
  return out;
}

// Second-order coefficient along the defective direction: the first pair
// (p, q) whose product term acts nontrivially on z = v2 + w2.
struct DefectiveWitness {
  bool nonzero = false;
  int p = -1, q = -1;
  double value = 0.0;
};

inline DefectiveWitness defective_condition(const Network& net,
                                            const ReducedSystem& rs) {
  if (rs.mode != ReducedSystem::Mode::DefectivePair)
    throw CcnError(ErrorCode::NotDefectiveHere,
                   "defective condition queried on a non-defective point");
  auto A = adjacency_matrices(net);
  Eigen::VectorXd z = rs.v2 + rs.w2;
  Eigen::VectorXd v2s = rs.cokernel.row(1).transpose();
  DefectiveWitness out;
  for (int p = 0; p <= net.k(); ++p)
    for (int q = 0; q <= net.k(); ++q) {
      double T = v2s.dot((A[p] * z).cwiseProduct(A[q] * z));
      if (std::fabs(T) > 1e-10) {
        out.nonzero = true;
        out.p = p;
        out.q = q;
        out.value = T;
        return out;
      }
    }
  return out;
}

// Lowest order at which the reduced equation is determined, for a simple
// eigenvalue given by a linear form: 2 if the quadratic term survives
// generic sampling, else 3 if the cubic does, else 0 (undecided).
inline int determinacy_order(const Network& net,
                             const std::vector<Degeneracy>& degeneracies,
                             const Eigenfunction& mu, Rng& rng,
                             int samples = 50, double draw_margin = 0.2,
                             double deg_margin = 0.02,
                             double zero_tol = 1e-10) {
  if (mu.kind == Eigenfunction::Kind::QuadraticRoot)
    throw CcnError(ErrorCode::UnhandledConfiguration,
                   "determinacy sweep works on linear eigenvalues");
  double c0 = mu.lin.c[0].to_double();
  if (c0 == 0.0)
    throw CcnError(ErrorCode::UnhandledConfiguration,
                   "eigenvalue does not involve f0");
  int k = net.k();
  bool quad_seen = false, cubic_seen = false;
  for (int trial = 0; trial < samples; ++trial) {
    DerivativeProfile prof;
    prof.f.assign(k + 1, 0.0);
    int guard = 0;
    for (;;) {
      for (int l = 1; l <= k; ++l) prof.f[l] = rng.away_from_zero(draw_margin);
      double rest = 0;
      for (int l = 1; l <= k; ++l)
        rest += mu.lin.c[l].to_double() * prof.f[l];
      prof.f[0] = -rest / c0;
      bool degenerate = false;
      for (const auto& d : degeneracies)
        if (std::fabs(d.eval(prof.f)) < deg_margin) degenerate = true;
      if (!degenerate) break;
      if (++guard > 200)
        throw CcnError(ErrorCode::UnhandledConfiguration,
                       "could not draw a nondegenerate sample");
    }
    prof.fpq.assign(k + 1, std::vector<double>(k + 1, 0.0));
    for (int p = 0; p <= k; ++p)
      for (int q = p; q <= k; ++q)
        prof.fpq[p][q] = prof.fpq[q][p] = rng.symmetric();
    prof.f000 = rng.sign() * rng.uniform(0.3, 1.0);
    ReducedSystem rs = reduced_coefficients(net, mu, prof);
    if (std::fabs(rs.g2) > zero_tol) quad_seen = true;
    if (quad_seen) break;
    if (std::fabs(cubic_coefficient(net, rs, prof)) > zero_tol)
      cubic_seen = true;
  }
  if (quad_seen) return 2;
  if (cubic_seen) return 3;
  return 0;
}

// Genericity forms for a quotient on up to three cells.
inline std::vector<Degeneracy> generic_degeneracies(const Network& net) {
  if (net.n == 3) return classify_spectrum(net).degeneracies;
  std::vector<Degeneracy> out;
  if (net.n == 2) {
    auto J = jacobian_form(net);
    LinearForm gap = (J[0][0] + J[1][1]) - valency_form(net).scaled(Rat(2));
    if (!gap.is_zero()) {
      Degeneracy d;
      d.lin = gap;
      out.push_back(d);
    }
  }
  return out;
}

}  // namespace ccn
