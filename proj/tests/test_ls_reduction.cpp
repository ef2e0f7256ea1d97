#include <catch2/catch_amalgamated.hpp>

#include "ccn/catalog.hpp"
#include "ccn/numerics.hpp"

using namespace ccn;

namespace {

// Smallest |eigenvalue| of the first-order part at the profile's
// coefficients; zero at a bifurcation point.
double smallest_eigenvalue(const Network& net, const std::vector<double>& f) {
  Eigen::MatrixXd J = jacobian_at(net, f);
  Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(J).eigenvalues();
  double m = HUGE_VAL;
  for (int i = 0; i < ev.size(); ++i) m = std::min(m, std::abs(ev(i)));
  return m;
}

}  // namespace

TEST_CASE("simple reduction produces a biorthogonal pair") {
  const CatalogEntry* f = catalog_find("F");
  REQUIRE(f != nullptr);
  SpectralReport rep = classify_spectrum(f->net);
  const Eigenfunction& mu = rep.eigenfunctions[1];  // f0, simple
  REQUIRE(mu.alg == 1);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    DerivativeProfile prof = synthesize(f->net, rep, mu, seed);
    prof.f0l = 2.5;
    CHECK(smallest_eigenvalue(f->net, prof.f) < 1e-9);
    ReducedSystem rs = reduced_coefficients(f->net, mu, prof);
    CHECK(rs.mode == ReducedSystem::Mode::Simple);
    CHECK(rs.mu_lambda == 2.5);
    CHECK(rs.biorth_residual < 1e-9);
    double pair = rs.cokernel.row(0).dot(rs.kernel.row(0));
    CHECK(pair == Catch::Approx(1.0).margin(1e-9));
    // The kernel row really is a null vector of J.
    Eigen::MatrixXd J = jacobian_at(f->net, prof.f);
    CHECK((J * rs.kernel.row(0).transpose()).norm() < 1e-7);
  }
}

TEST_CASE("semisimple reduction pairs a two dimensional kernel") {
  const CatalogEntry* c = catalog_find("C");
  REQUIRE(c != nullptr);
  SpectralReport rep = classify_spectrum(c->net);
  const Eigenfunction& mu = rep.eigenfunctions[1];
  REQUIRE((mu.alg == 2 && mu.geo == 2));
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    DerivativeProfile prof = synthesize(c->net, rep, mu, seed);
    ReducedSystem rs = reduced_coefficients(c->net, mu, prof);
    CHECK(rs.mode == ReducedSystem::Mode::SemisimplePair);
    CHECK(rs.biorth_residual < 1e-8);
    Eigen::MatrixXd J = jacobian_at(c->net, prof.f);
    CHECK((J * rs.kernel.transpose()).norm() < 1e-6);
    Eigen::Matrix2d gram = rs.cokernel * rs.kernel.transpose();
    CHECK((gram - Eigen::Matrix2d::Identity()).norm() < 1e-8);
  }
}

TEST_CASE("defective reduction solves for the generalized vector") {
  const CatalogEntry* d = catalog_find("D");
  REQUIRE(d != nullptr);
  SpectralReport rep = classify_spectrum(d->net);
  const Eigenfunction& mu = rep.eigenfunctions[1];
  REQUIRE((mu.alg == 2 && mu.geo == 1));
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    DerivativeProfile prof = synthesize(d->net, rep, mu, seed);
    ReducedSystem rs = reduced_coefficients(d->net, mu, prof);
    CHECK(rs.mode == ReducedSystem::Mode::DefectivePair);
    CHECK(rs.biorth_residual < 1e-8);
    Eigen::MatrixXd J = jacobian_at(d->net, prof.f);
    CHECK((J * rs.v1).norm() < 1e-7);
    CHECK((J * rs.v2 - rs.v1).norm() < 1e-7);
    CHECK((rs.kernel.row(0).transpose() - rs.v1).norm() == 0.0);
    DefectiveWitness w = defective_condition(d->net, rs);
    CHECK(w.nonzero);
    CHECK(w.p == 0);
    CHECK(w.q == 0);
    CHECK(w.value != 0.0);
  }
}

TEST_CASE("mode mismatches are reported, not silently reduced") {
  const CatalogEntry* c = catalog_find("C");
  REQUIRE(c != nullptr);
  SpectralReport rep = classify_spectrum(c->net);
  Eigenfunction mu = rep.eigenfunctions[1];
  DerivativeProfile prof = synthesize(c->net, rep, mu, 0);
  Eigenfunction as_simple = mu;
  as_simple.alg = as_simple.geo = 1;
  try {
    reduced_coefficients(c->net, as_simple, prof);
    FAIL("expected a throw");
  } catch (const CcnError& e) {
    CHECK(e.code() == ErrorCode::KernelDimensionMismatch);
  }
  Eigenfunction as_defective = mu;
  as_defective.geo = 1;
  CHECK_THROWS_AS(reduced_coefficients(c->net, as_defective, prof), CcnError);

  // Querying the defective witness on a simple reduction is an error.
  const CatalogEntry* f = catalog_find("F");
  SpectralReport frep = classify_spectrum(f->net);
  DerivativeProfile fprof = synthesize(f->net, frep, frep.eigenfunctions[1], 0);
  ReducedSystem simple_rs =
      reduced_coefficients(f->net, frep.eigenfunctions[1], fprof);
  try {
    defective_condition(f->net, simple_rs);
    FAIL("expected a throw");
  } catch (const CcnError& e) {
    CHECK(e.code() == ErrorCode::NotDefectiveHere);
  }
}

TEST_CASE("quadratic systems with a shared factor are flagged") {
  ReducedSystem rs;
  rs.mode = ReducedSystem::Mode::SemisimplePair;
  rs.mu_lambda = 1.0;
  // q1 = y1 (a y1 + b y2), q2 = y2 (a y1 + b y2): both vanish on a line.
  double a = 0.8, b = -1.1;
  rs.quad[0][0][0] = 2 * a;
  rs.quad[0][0][1] = rs.quad[0][1][0] = b;
  rs.quad[0][1][1] = 0;
  rs.quad[1][0][0] = 0;
  rs.quad[1][0][1] = rs.quad[1][1][0] = a;
  rs.quad[1][1][1] = 2 * b;
  QuadBranchReport qb = quadratic_branch_system(rs);
  CHECK(qb.common_factor);
  CHECK(std::fabs(qb.resultant) < 1e-12);
}

TEST_CASE("a generic quadratic system has four isolated ray solutions") {
  ReducedSystem rs;
  rs.mode = ReducedSystem::Mode::SemisimplePair;
  rs.mu_lambda = 1.0;
  // q1 = y1^2, q2 = y2^2: solutions are the corners of {0,-1}^2.
  rs.quad[0][0][0] = 2;
  rs.quad[1][1][1] = 2;
  QuadBranchReport qb = quadratic_branch_system(rs);
  CHECK_FALSE(qb.common_factor);
  REQUIRE(qb.solutions.size() == 4);
  auto has = [&](double y1, double y2) {
    for (const auto& s : qb.solutions)
      if ((s - Eigen::Vector2d(y1, y2)).norm() < 1e-9) return true;
    return false;
  };
  CHECK(has(0, 0));
  CHECK(has(-1, 0));
  CHECK(has(0, -1));
  CHECK(has(-1, -1));
  for (size_t s = 0; s < qb.solutions.size(); ++s)
    if (qb.solutions[s].norm() > 1e-8) CHECK(qb.rank[s] == 2);

  ReducedSystem zero;
  zero.mode = ReducedSystem::Mode::SemisimplePair;
  CHECK_THROWS_AS(quadratic_branch_system(zero), CcnError);
}

TEST_CASE("determinacy order separates vanishing quadratic terms") {
  const CatalogEntry* b1f1 = catalog_find("B1_F1");
  REQUIRE(b1f1 != nullptr);
  SpectralReport rep = classify_spectrum(b1f1->net);
  const Eigenfunction* target = nullptr;
  for (const auto& mu : rep.eigenfunctions)
    if (mu.kind != Eigenfunction::Kind::QuadraticRoot &&
        value_string(mu) == "f0 + f1 - f2")
      target = &mu;
  REQUIRE(target != nullptr);
  Rng rng(12345);
  CHECK(determinacy_order(b1f1->net, rep.degeneracies, *target, rng) == 3);

  const CatalogEntry* f = catalog_find("F");
  SpectralReport frep = classify_spectrum(f->net);
  Rng rng2(12345);
  CHECK(determinacy_order(f->net, frep.degeneracies, frep.eigenfunctions[1],
                          rng2) == 2);

  // Quadratic-root eigenvalues and f0-free eigenvalues are out of scope.
  const CatalogEntry* a = catalog_find("A");
  SpectralReport arep = classify_spectrum(a->net);
  Rng rng3(1);
  CHECK_THROWS_AS(determinacy_order(a->net, arep.degeneracies,
                                    arep.eigenfunctions[1], rng3),
                  CcnError);
  Eigenfunction nof0;
  nof0.kind = Eigenfunction::Kind::Linear;
  nof0.lin = LinearForm(1);
  nof0.lin.c[1] = Rat(1);
  CHECK_THROWS_AS(determinacy_order(f->net, frep.degeneracies, nof0, rng3),
                  CcnError);
}

TEST_CASE("the bifurcation condition solver lands on a zero eigenvalue") {
  const CatalogEntry* f = catalog_find("F");
  REQUIRE(f != nullptr);
  SpectralReport rep = classify_spectrum(f->net);
  std::vector<double> coeffs{0.0, 0.7};
  double f0 = solve_bifurcation_condition(rep, rep.eigenfunctions[0], coeffs);
  CHECK(f0 == Catch::Approx(-0.7));

  const CatalogEntry* dd = catalog_find("D1_D2");
  REQUIRE(dd != nullptr);
  SpectralReport drep = classify_spectrum(dd->net);
  const Eigenfunction* root = nullptr;
  for (const auto& mu : drep.eigenfunctions)
    if (mu.kind == Eigenfunction::Kind::QuadraticRoot && mu.branch > 0)
      root = &mu;
  REQUIRE(root != nullptr);
  REQUIRE(root->real == RealClass::OnOpenSet);
  std::vector<double> good{0.0, 0.5, 0.5};
  double solved = solve_bifurcation_condition(drep, *root, good, 1e-2);
  good[0] = solved;
  CHECK(smallest_eigenvalue(dd->net, good) < 1e-9);
  std::vector<double> bad{0.0, 0.5, -0.5};
  try {
    solve_bifurcation_condition(drep, *root, bad, 1e-2);
    FAIL("expected a throw");
  } catch (const CcnError& e) {
    CHECK(e.code() == ErrorCode::NotRealAtThisPoint);
  }
}

TEST_CASE("generic degeneracies for small quotients") {
  Network one = make_network("pt", 1, {{1}});
  CHECK(generic_degeneracies(one).empty());
  Network two = make_network("pair", 2, {{1, 1}});
  auto degs = generic_degeneracies(two);
  REQUIRE(degs.size() == 1);
  CHECK(degs[0].str() == "-f1 != 0");
}
