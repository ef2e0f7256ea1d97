#include <catch2/catch_amalgamated.hpp>

#include "ccn/catalog.hpp"
#include "ccn/numerics.hpp"
#include "ccn/verify.hpp"

using namespace ccn;

namespace {

DerivativeProfile random_profile(int k, Rng& rng) {
  DerivativeProfile prof;
  prof.f.resize(k + 1);
  for (auto& v : prof.f) v = rng.symmetric();
  prof.fpq.assign(k + 1, std::vector<double>(k + 1, 0.0));
  for (int p = 0; p <= k; ++p)
    for (int q = p; q <= k; ++q)
      prof.fpq[p][q] = prof.fpq[q][p] = rng.symmetric();
  prof.f000 = rng.symmetric();
  return prof;
}

}  // namespace

TEST_CASE("the polynomial field leaves every balanced subspace invariant") {
  Rng rng(909);
  for (const char* id : {"C", "D1_D2", "M6"}) {
    const CatalogEntry* e = catalog_find(id);
    REQUIRE(e != nullptr);
    DerivativeProfile prof = random_profile(e->net.k(), rng);
    PolynomialField field(e->net, prof);
    SynchronyLattice lat = enumerate_synchrony(e->net);
    for (const auto& node : lat.nodes) {
      Eigen::VectorXd x(e->net.n);
      std::vector<double> y(node.classes);
      for (auto& v : y) v = rng.symmetric();
      for (int i = 0; i < e->net.n; ++i) x(i) = y[node.partition[i]];
      Eigen::VectorXd fx = field.value(x, 0.013);
      for (int i = 0; i < e->net.n; ++i)
        for (int j = i + 1; j < e->net.n; ++j)
          if (node.partition[i] == node.partition[j])
            CHECK(fx(i) == Catch::Approx(fx(j)).margin(1e-12));
      // The field restricted to the subspace equals the quotient field.
      PolynomialField qfield(node.quotient, prof);
      Eigen::VectorXd yq(node.classes);
      for (int c = 0; c < node.classes; ++c) yq(c) = y[c];
      Eigen::VectorXd fq = qfield.value(yq, 0.013);
      for (int i = 0; i < e->net.n; ++i)
        CHECK(fx(i) == Catch::Approx(fq(node.partition[i])).margin(1e-12));
    }
  }
}

TEST_CASE("the field jacobian matches finite differences") {
  Rng rng(910);
  const CatalogEntry* e = catalog_find("F");
  REQUIRE(e != nullptr);
  DerivativeProfile prof = random_profile(e->net.k(), rng);
  PolynomialField field(e->net, prof);
  Eigen::VectorXd x(3);
  x << 0.3, -0.5, 0.8;
  double lam = 0.02, h = 1e-6;
  Eigen::MatrixXd J = field.jacobian(x, lam);
  for (int j = 0; j < 3; ++j) {
    Eigen::VectorXd xp = x, xm = x;
    xp(j) += h;
    xm(j) -= h;
    Eigen::VectorXd col = (field.value(xp, lam) - field.value(xm, lam)) / (2 * h);
    for (int i = 0; i < 3; ++i)
      CHECK(J(i, j) == Catch::Approx(col(i)).margin(1e-6));
  }
}

TEST_CASE("node detection picks the smallest matching subspace") {
  const CatalogEntry* f = catalog_find("F");
  REQUIRE(f != nullptr);
  SynchronyLattice lat = enumerate_synchrony(f->net);
  Eigen::VectorXd x(3);
  x << 0, 0, 0;
  CHECK(node_of_point(lat, x) == lat.bottom());
  x << 5, 5, 1;
  CHECK(lat.nodes[node_of_point(lat, x)].partition == Partition{0, 0, 1});
  x << 2, 1, 1;
  CHECK(lat.nodes[node_of_point(lat, x)].partition == Partition{0, 1, 1});
  x << 1, 2, 3;
  CHECK(node_of_point(lat, x) == lat.top());
  x << 1, 1 + 1e-9, 2;
  CHECK(lat.nodes[node_of_point(lat, x)].partition == Partition{0, 0, 1});
}

TEST_CASE("the start cloud is deterministic and bounded") {
  ContinuationOptions opt;
  opt.starts = 57;
  opt.start_radius = 0.35;
  auto cloud = detail::start_cloud(3, opt);
  REQUIRE(cloud.size() == 57);
  CHECK(cloud[0].norm() == 0.0);
  for (const auto& v : cloud) CHECK(v.norm() <= 0.35 + 1e-12);
  auto again = detail::start_cloud(3, opt);
  for (size_t i = 0; i < cloud.size(); ++i)
    CHECK((cloud[i] - again[i]).norm() == 0.0);
  opt.cloud_seed = 99;
  auto other = detail::start_cloud(3, opt);
  CHECK((cloud[1] - other[1]).norm() > 0.0);
}

TEST_CASE("synthesized profiles respect the margins") {
  const CatalogEntry* f = catalog_find("F");
  REQUIRE(f != nullptr);
  SpectralReport rep = classify_spectrum(f->net);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    DerivativeProfile prof = synthesize(f->net, rep, rep.eigenfunctions[1], seed);
    for (int l = 1; l <= f->net.k(); ++l)
      CHECK(std::fabs(prof.f[l]) >= 0.25);
    for (const auto& d : rep.degeneracies)
      CHECK(std::fabs(d.eval(prof.f)) >= 0.05);
  }
  // Same seed, same profile.
  DerivativeProfile a = synthesize(f->net, rep, rep.eigenfunctions[1], 4);
  DerivativeProfile b = synthesize(f->net, rep, rep.eigenfunctions[1], 4);
  CHECK(a.f == b.f);
  CHECK(a.fpq == b.fpq);
  CHECK(a.f000 == b.f000);

  const CatalogEntry* dd = catalog_find("D1_D2");
  SpectralReport drep = classify_spectrum(dd->net);
  for (const auto& mu : drep.eigenfunctions)
    if (mu.kind == Eigenfunction::Kind::QuadraticRoot)
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        DerivativeProfile prof = synthesize(dd->net, drep, mu, seed);
        CHECK(drep.inv.discriminant.eval(prof.f) > 1e-2);
      }

  const CatalogEntry* a_ent = catalog_find("A");
  SpectralReport arep = classify_spectrum(a_ent->net);
  try {
    synthesize(a_ent->net, arep, arep.eigenfunctions[1], 0);
    FAIL("expected a throw");
  } catch (const CcnError& e) {
    CHECK(e.code() == ErrorCode::NotRealizableReal);
  }
}

TEST_CASE("continuation always carries the trivial branch") {
  const CatalogEntry* f = catalog_find("F");
  REQUIRE(f != nullptr);
  SpectralReport rep = classify_spectrum(f->net);
  SynchronyLattice lat = enumerate_synchrony(f->net);
  DerivativeProfile prof = synthesize(f->net, rep, rep.eigenfunctions[1], 0);
  BranchObservation obs = continue_equilibria(f->net, lat, prof);
  REQUIRE(obs.lambdas.size() == 41);
  CHECK(obs.lambdas.front() == Catch::Approx(-0.05));
  CHECK(obs.lambdas.back() == Catch::Approx(0.05));
  int trivial = 0;
  for (const auto& br : obs.branches)
    if (br.max_norm() < 1e-9) {
      ++trivial;
      CHECK(br.points.size() == 41);
      CHECK(br.node == lat.bottom());
      CHECK_FALSE(br.nontrivial());
      CHECK_FALSE(br.through_origin);
      for (const auto& p : br.points) CHECK(p.residual < 1e-12);
    }
  CHECK(trivial == 1);
  // The crossing eigenvalue is f0: some branch through the origin must
  // realize the x1=x2 pattern.
  bool cut = false;
  for (const auto& br : obs.branches)
    if (br.through_origin && br.nontrivial() &&
        lat.nodes[br.node].partition == Partition{0, 0, 1})
      cut = true;
  CHECK(cut);
}

TEST_CASE("continuation output is reproducible") {
  const CatalogEntry* d = catalog_find("D");
  REQUIRE(d != nullptr);
  SpectralReport rep = classify_spectrum(d->net);
  SynchronyLattice lat = enumerate_synchrony(d->net);
  DerivativeProfile prof = synthesize(d->net, rep, rep.eigenfunctions[1], 1);
  BranchObservation o1 = continue_equilibria(d->net, lat, prof);
  BranchObservation o2 = continue_equilibria(d->net, lat, prof);
  std::string csv1 = branches_csv(o1, lat);
  std::string csv2 = branches_csv(o2, lat);
  CHECK(csv1 == csv2);
  CHECK(csv1.rfind("lambda,x1,x2,x3,branch,node\n", 0) == 0);
  // Every data line carries a lambda, three coordinates, an id and a label.
  size_t lines = 0;
  for (size_t pos = csv1.find('\n'); pos != std::string::npos;
       pos = csv1.find('\n', pos + 1))
    ++lines;
  size_t commas = 0;
  for (char ch : csv1)
    if (ch == ',') ++commas;
  CHECK(commas == 5 * lines);
}

TEST_CASE("numeric verification confirms a full lattice of verdicts") {
  const CatalogEntry* a = catalog_find("A");
  REQUIRE(a != nullptr);
  AnnotatedLattice al = annotate(a->net);
  auto preds = predict(al);
  VerifyReport rep = verify_predictions(al, preds);
  CHECK(rep.ok());
  REQUIRE(rep.lines.size() == preds.size());
  int pass = 0, skip = 0;
  for (const auto& line : rep.lines) {
    CHECK(line.status != VerifyLine::Status::Fail);
    if (line.status == VerifyLine::Status::Pass) ++pass;
    if (line.status == VerifyLine::Status::Skip) ++skip;
  }
  CHECK(pass == 2);
  CHECK(skip == 2);
  CHECK(rep.continuations > 0);
  std::string text = verify_text(al, rep);
  CHECK(text.find("[PASS]") != std::string::npos);
  CHECK(text.find("[FAIL]") == std::string::npos);
}
