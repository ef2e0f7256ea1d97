#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ccn/ls_reduction.hpp"
#include "ccn/network.hpp"
#include "ccn/rng.hpp"
#include "ccn/spectrum.hpp"
#include "ccn/synchrony.hpp"

namespace ccn {

// Polynomial vector field on the network: linear part from the profile's
// first-order coefficients plus lambda on the internal slot, the quadratic
// input products, and the cubic internal term.
class PolynomialField {
 public:
  PolynomialField(const Network& net, const DerivativeProfile& prof)
      : A_(adjacency_matrices(net)), prof_(prof), n_(net.n) {}

  Eigen::VectorXd value(const Eigen::VectorXd& x, double lam) const {
    int k = prof_.order();
    Eigen::VectorXd out = prof_.f0l * lam * x;
    std::vector<Eigen::VectorXd> ax(k + 1);
    for (int j = 0; j <= k; ++j) ax[j] = A_[j] * x;
    for (int j = 0; j <= k; ++j) out += prof_.f[j] * ax[j];
    for (int p = 0; p <= k; ++p)
      for (int q = 0; q <= k; ++q)
        out += 0.5 * prof_.fpq[p][q] * ax[p].cwiseProduct(ax[q]);
    out += (prof_.f000 / 6.0) * x.cwiseProduct(x).cwiseProduct(x);
    return out;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x, double lam) const {
    int k = prof_.order();
    Eigen::MatrixXd out =
        prof_.f0l * lam * Eigen::MatrixXd::Identity(n_, n_);
    std::vector<Eigen::VectorXd> ax(k + 1);
    for (int j = 0; j <= k; ++j) ax[j] = A_[j] * x;
    for (int j = 0; j <= k; ++j) out += prof_.f[j] * A_[j];
    for (int p = 0; p <= k; ++p)
      for (int q = 0; q <= k; ++q)
        out += prof_.fpq[p][q] * ax[p].asDiagonal() * A_[q];
    out += (prof_.f000 / 2.0) *
           Eigen::MatrixXd(x.cwiseProduct(x).asDiagonal());
    return out;
  }

 private:
  std::vector<Eigen::MatrixXd> A_;
  DerivativeProfile prof_;
  int n_;
};

struct ContinuationOptions {
  double lambda_max = 0.05;
  int grid = 41;
  int starts = 200;
  double start_radius = 0.5;
  std::uint64_t cloud_seed = 0;
  double newton_tol = 1e-12;
  int newton_iters = 60;
  double accept_norm = 2.0;
  double cluster_tol = 1e-6;
  double node_tol = 1e-7;
  double link_tol = 1e-3;
};

// Smallest lattice node whose equalities the point satisfies within tol.
// Nodes are ordered smallest subspace first, so the first match wins.
inline int node_of_point(const SynchronyLattice& lat, const Eigen::VectorXd& x,
                         double tol = 1e-7) {
  for (int idx = 0; idx < lat.size(); ++idx) {
    const auto& p = lat.nodes[idx].partition;
    bool ok = true;
    for (int i = 0; i < (int)p.size() && ok; ++i)
      for (int j = i + 1; j < (int)p.size() && ok; ++j)
        if (p[i] == p[j] && std::fabs(x(i) - x(j)) > tol) ok = false;
    if (ok) return idx;
  }
  return lat.top();
}

// Minimal node containing every point of a sampled branch.
inline int detect_synchrony(const SynchronyLattice& lat,
                            const std::vector<Eigen::VectorXd>& pts,
                            double tol = 1e-7) {
  for (int idx = 0; idx < lat.size(); ++idx) {
    const auto& p = lat.nodes[idx].partition;
    bool ok = true;
    for (const auto& x : pts) {
      for (int i = 0; i < (int)p.size() && ok; ++i)
        for (int j = i + 1; j < (int)p.size() && ok; ++j)
          if (p[i] == p[j] && std::fabs(x(i) - x(j)) > tol) ok = false;
      if (!ok) break;
    }
    if (ok) return idx;
  }
  return lat.top();
}

struct BranchPoint {
  int layer = 0;
  Eigen::VectorXd x;
  double residual = 0.0;
};

struct Branch {
  int node = -1;
  std::vector<BranchPoint> points;
  bool through_origin = false;

  double max_norm() const {
    double m = 0;
    for (const auto& p : points) m = std::max(m, p.x.norm());
    return m;
  }
  bool nontrivial() const { return max_norm() >= 1e-7; }
};

struct BranchObservation {
  std::vector<double> lambdas;
  std::vector<Branch> branches;
  ContinuationOptions options;
};

namespace detail {

inline std::vector<Eigen::VectorXd> start_cloud(int n,
                                                const ContinuationOptions& o) {
  Rng rng(o.cloud_seed);
  std::vector<Eigen::VectorXd> out{Eigen::VectorXd::Zero(n)};
  for (int m = 1; m < o.starts; ++m) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.normal();
    double u = std::pow(rng.unit(), 1.0 / n);
    double nv = v.norm();
    if (nv < 1e-12) nv = 1.0;
    out.push_back(v / nv * o.start_radius * u);
  }
  return out;
}

struct Cluster {
  Eigen::VectorXd x;
  double residual;
  int node;
};

inline std::vector<Cluster> equilibria_at(
    const PolynomialField& field, const SynchronyLattice& lat, double lam,
    const std::vector<Eigen::VectorXd>& starts, const ContinuationOptions& o) {
  std::vector<Cluster> out;
  for (const auto& s0 : starts) {
    Eigen::VectorXd x = s0;
    bool ok = false;
    double rn = 0;
    for (int it = 0; it < o.newton_iters; ++it) {
      Eigen::VectorXd fx = field.value(x, lam);
      rn = fx.norm();
      if (rn < o.newton_tol) {
        ok = true;
        break;
      }
      Eigen::MatrixXd J = field.jacobian(x, lam);
      Eigen::VectorXd step = J.partialPivLu().solve(fx);
      if (!step.allFinite()) break;
      double sn = step.norm();
      if (sn > 10.0) step *= 10.0 / sn;
      x -= step;
      if (!x.allFinite()) break;
    }
    if (!ok || x.norm() >= o.accept_norm) continue;
    bool dup = false;
    for (const auto& c : out)
      if ((c.x - x).norm() <= o.cluster_tol) {
        dup = true;
        break;
      }
    if (dup) continue;
    out.push_back({x, rn, node_of_point(lat, x, o.node_tol)});
  }
  return out;
}

inline bool passes_through_origin(const std::vector<double>& lams,
                                  const Branch& br, double dlam) {
  std::vector<double> xs;
  for (const auto& p : br.points) xs.push_back(p.x.norm());
  double mx = *std::max_element(xs.begin(), xs.end());
  if (mx < 1e-9) return false;
  size_t mi = std::min_element(xs.begin(), xs.end()) - xs.begin();
  double lam_star = lams[br.points[mi].layer];
  if (xs[mi] <= 1e-4 && std::fabs(lam_star) <= dlam + 1e-12) return true;
  // Branch may enter the window from one end with its small end cut off:
  // the crossing sits at lambda = 0 by construction and the point there is
  // absorbed into the trivial cluster, so the surviving minimum lies at
  // least one grid step away.  Require a clear monotone decay toward that
  // end; a branch whose minimum sits at the crossing itself but well away
  // from zero is a distant solution sweeping past, not a bifurcation.
  if ((mi == 0 || mi == xs.size() - 1) && xs[mi] <= 0.25 &&
      std::fabs(lam_star) <= 2 * dlam + 1e-12 &&
      std::fabs(lam_star) >= 0.5 * dlam - 1e-12) {
    // A branch admitted under the 0.25 cap stays below the norm cutoff
    // across the whole half-window, so it always carries many points; a
    // two-point stub here is a linking artifact near a fold.
    if (xs.size() < 3) return false;
    std::vector<double> seq;
    if (mi == 0)
      seq = {xs[0], xs[1], xs[2]};
    else
      seq = {xs[xs.size() - 1], xs[xs.size() - 2], xs[xs.size() - 3]};
    if (!(seq[0] < seq[1] && seq[1] < seq[2] && seq[0] <= 0.9 * seq[1]))
      return false;
    // Secant-extend the last two points to the crossing.  The admissible
    // shapes land well short of the last norm (a linear branch at 0, a
    // square-root branch at (2 - sqrt 2) of it); a secondary branch that
    // leaves the window toward a nonzero limit lands at about the full
    // norm and is rejected.
    const Eigen::VectorXd& xm = br.points[mi].x;
    const Eigen::VectorXd& xp = br.points[mi == 0 ? 1 : mi - 1].x;
    double steps = std::fabs(lam_star) / dlam;
    Eigen::VectorXd limit = (1 + steps) * xm - steps * xp;
    return limit.norm() <= 0.7 * xm.norm();
  }
  return false;
}

}  // namespace detail

// Sweep lambda over a symmetric grid, solve for equilibria from a fixed
// start cloud at each value, and link same-synchrony clusters into branches.
inline BranchObservation continue_equilibria(const Network& net,
                                             const SynchronyLattice& lat,
                                             const DerivativeProfile& prof,
                                             ContinuationOptions opt = {}) {
  PolynomialField field(net, prof);
  auto starts = detail::start_cloud(net.n, opt);
  BranchObservation obs;
  obs.options = opt;
  for (int i = 0; i < opt.grid; ++i)
    obs.lambdas.push_back(-opt.lambda_max +
                          2.0 * opt.lambda_max * i / (opt.grid - 1));
  double dlam = 2.0 * opt.lambda_max / (opt.grid - 1);

  std::vector<std::vector<detail::Cluster>> layers;
  for (double lam : obs.lambdas)
    layers.push_back(detail::equilibria_at(field, lat, lam, starts, opt));

  std::vector<Branch>& branches = obs.branches;
  for (int li = 0; li < (int)layers.size(); ++li) {
    std::vector<char> claimed(layers[li].size(), 0);
    for (auto& br : branches) {
      const BranchPoint& last = br.points.back();
      if (last.layer != li - 1) continue;
      double r = last.x.norm();
      double tol;
      Eigen::VectorXd pred;
      if (br.points.size() == 1) {
        // First link: a linear branch can double its distance from the
        // origin between the first two grid points, so the tolerance must
        // scale with the point itself.
        tol = opt.link_tol + 1.3 * r;
        pred = last.x;
      } else {
        const BranchPoint& prev = br.points[br.points.size() - 2];
        double step = (last.x - prev.x).norm();
        tol = opt.link_tol + 0.5 * step + 0.05 * r;
        pred = 2.0 * last.x - prev.x;
      }
      int best = -1;
      double best_d = tol;
      for (int ci = 0; ci < (int)layers[li].size(); ++ci) {
        if (claimed[ci] || layers[li][ci].node != br.node) continue;
        double d = (layers[li][ci].x - pred).norm();
        if (d <= best_d) {
          best_d = d;
          best = ci;
        }
      }
      if (best >= 0) {
        claimed[best] = 1;
        br.points.push_back(
            {li, layers[li][best].x, layers[li][best].residual});
      }
    }
    for (int ci = 0; ci < (int)layers[li].size(); ++ci) {
      if (claimed[ci]) continue;
      Branch nb;
      nb.node = layers[li][ci].node;
      nb.points.push_back({li, layers[li][ci].x, layers[li][ci].residual});
      branches.push_back(std::move(nb));
    }
  }
  for (auto& br : branches)
    br.through_origin = br.points.size() >= 2 &&
                        detail::passes_through_origin(obs.lambdas, br, dlam);
  return obs;
}

// Draw a generic profile at which the chosen eigenvalue crosses zero:
// coefficients bounded away from zero, the genericity forms cleared, the
// discriminant positive when a square root is involved.
inline DerivativeProfile synthesize(const Network& net,
                                    const SpectralReport& rep,
                                    const Eigenfunction& mu,
                                    std::uint64_t seed) {
  if (mu.real == RealClass::Never)
    throw CcnError(ErrorCode::NotRealizableReal,
                   "eigenvalue is never real off a null set");
  int k = net.k();
  Rng rng(1000 + seed);
  DerivativeProfile prof;
  prof.f.assign(k + 1, 0.0);
  int guard = 0;
  for (;;) {
    if (++guard > 200)
      throw CcnError(ErrorCode::NotRealAtThisPoint,
                     "no admissible coefficient draw in 200 attempts");
    for (int l = 1; l <= k; ++l) prof.f[l] = rng.away_from_zero(0.25);
    try {
      prof.f[0] = solve_bifurcation_condition(rep, mu, prof.f, 1e-2);
    } catch (const CcnError& e) {
      if (e.code() == ErrorCode::NotRealAtThisPoint) continue;
      throw;
    }
    bool degenerate = false;
    for (const auto& d : rep.degeneracies)
      if (std::fabs(d.eval(prof.f)) < 0.05) degenerate = true;
    if (!degenerate) break;
  }
  prof.fpq.assign(k + 1, std::vector<double>(k + 1, 0.0));
  for (int p = 0; p <= k; ++p)
    for (int q = p; q <= k; ++q)
      prof.fpq[p][q] = prof.fpq[q][p] = rng.symmetric();
  prof.f000 = rng.sign() * rng.uniform(0.3, 1.0);
  return prof;
}

inline std::string branches_csv(const BranchObservation& obs,
                                const SynchronyLattice& lat) {
  std::string out = "lambda";
  for (int i = 1; i <= lat.net.n; ++i) out += ",x" + std::to_string(i);
  out += ",branch,node\n";
  char buf[64];
  for (size_t bi = 0; bi < obs.branches.size(); ++bi) {
    for (const auto& p : obs.branches[bi].points) {
      snprintf(buf, sizeof buf, "%.12g", obs.lambdas[p.layer]);
      out += buf;
      for (int i = 0; i < p.x.size(); ++i) {
        snprintf(buf, sizeof buf, ",%.12g", p.x(i));
        out += buf;
      }
      std::string label =
          partition_label(lat.nodes[obs.branches[bi].node].partition);
      for (auto& ch : label)
        if (ch == ',') ch = ';';
      out += "," + std::to_string(bi) + "," + label + "\n";
    }
  }
  return out;
}

}  // namespace ccn
