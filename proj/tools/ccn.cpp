// Command line front end: network analysis, synchrony lattices, spectrum
// classification, branching predictions, and numerical verification.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ccn/catalog.hpp"
#include "ccn/verify.hpp"

using namespace ccn;
namespace fs = std::filesystem;

namespace {

struct GlobalOpts {
  std::string format = "text";
  bool no_header = false;
};

void header(const GlobalOpts& g, const std::string& line) {
  if (!g.no_header && g.format == "text") std::cout << "# " << line << "\n";
}

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Network load_net(const std::string& ref) {
  if (ref == "-") return parse_network_text(read_stream(std::cin), "<stdin>");
  if (fs::exists(ref)) {
    std::ifstream in(ref);
    if (!in)
      throw CcnError(ErrorCode::ParseError, ref + ": cannot open");
    return parse_network_text(read_stream(in), ref);
  }
  if (const CatalogEntry* e = catalog_find(ref)) return e->net;
  throw CcnError(ErrorCode::ParseError,
                 ref + ": no such file or catalog id");
}

std::string eig_label(const Eigenfunction& e) {
  return value_string(e) + " (alg " + std::to_string(e.alg) + ", geo " +
         std::to_string(e.geo) + ")";
}

nlohmann::json lattice_json(const SynchronyLattice& lat) {
  nlohmann::json nodes = nlohmann::json::array();
  for (size_t i = 0; i < lat.nodes.size(); ++i) {
    nlohmann::json n;
    n["index"] = i;
    n["label"] = partition_label(lat.nodes[i].partition);
    n["partition"] = lat.nodes[i].partition;
    n["classes"] = lat.nodes[i].classes;
    nodes.push_back(n);
  }
  nlohmann::json edges = nlohmann::json::array();
  for (auto [lo, hi] : lat.cover_edges()) edges.push_back({lo, hi});
  return {{"nodes", nodes}, {"cover_edges", edges}};
}

nlohmann::json spectrum_json(const SpectralReport& rep) {
  nlohmann::json j;
  j["case"] = to_cstr(rep.kase);
  j["valency"] = to_string(rep.inv.valency);
  j["alpha1"] = to_string(rep.inv.alpha1);
  j["alpha0"] = to_string(rep.inv.alpha0);
  j["discriminant"] = to_string(rep.inv.discriminant);
  nlohmann::json eigs = nlohmann::json::array();
  for (const auto& e : rep.eigenfunctions) {
    nlohmann::json je;
    je["value"] = value_string(e);
    je["algebraic"] = e.alg;
    je["geometric"] = e.geo;
    eigs.push_back(je);
  }
  j["eigenvalues"] = eigs;
  nlohmann::json degs = nlohmann::json::array();
  for (const auto& d : rep.degeneracies) degs.push_back(d.str());
  j["degeneracies"] = degs;
  return j;
}

int cmd_analyze(const GlobalOpts& g, const std::string& ref) {
  Network net = load_net(ref);
  AnnotatedLattice al = annotate(net);
  if (g.format == "json") {
    nlohmann::json j;
    j["network"] = network_to_json(net);
    j["valency"] = to_string(valency_form(net));
    j["lattice"] = lattice_json(al.lattice);
    j["spectrum"] = spectrum_json(al.report);
    j["structure"] = structure_type(al);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  header(g, "ccn analyze " + ref);
  std::cout << "network " << net.name << ": " << net.n << " cells, "
            << net.k() << (net.k() == 1 ? " input type\n" : " input types\n");
  std::cout << "valency: " << to_string(valency_form(net)) << "\n";
  std::cout << "synchrony subspaces (" << al.lattice.size() << "):\n";
  for (size_t i = 0; i < al.lattice.nodes.size(); ++i)
    std::cout << "  [" << i << "] "
              << partition_label(al.lattice.nodes[i].partition) << " ("
              << al.lattice.nodes[i].classes << " classes)\n";
  std::cout << "spectrum: " << to_cstr(al.report.kase) << "\n";
  for (const auto& e : al.report.eigenfunctions)
    std::cout << "  " << eig_label(e) << "\n";
  if (!al.report.degeneracies.empty()) {
    std::cout << "generic when:\n";
    for (const auto& d : al.report.degeneracies)
      std::cout << "  " << d.str() << "\n";
  }
  std::cout << "structure type: " << structure_type(al) << "\n";
  return 0;
}

int cmd_lattice(const GlobalOpts& g, const std::string& ref) {
  Network net = load_net(ref);
  SynchronyLattice lat = enumerate_synchrony(net);
  if (g.format == "dot") {
    std::cout << lattice_dot(lat);
    return 0;
  }
  if (g.format == "json") {
    nlohmann::json j;
    j["network"] = network_to_json(net);
    j["lattice"] = lattice_json(lat);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  header(g, "ccn lattice " + ref);
  for (size_t i = 0; i < lat.nodes.size(); ++i)
    std::cout << "[" << i << "] "
              << partition_label(lat.nodes[i].partition) << "\n";
  std::cout << "cover edges:\n";
  for (auto [lo, hi] : lat.cover_edges())
    std::cout << "  " << partition_label(lat.nodes[lo].partition) << " < "
              << partition_label(lat.nodes[hi].partition) << "\n";
  return 0;
}

void dump_reduced(const Network& net, const AnnotatedLattice& al,
                  std::uint64_t seed) {
  for (const auto& mu : al.report.eigenfunctions) {
    if (mu.real == RealClass::Never) continue;
    std::cout << "reduced system at " << value_string(mu) << " = 0:\n";
    try {
      DerivativeProfile prof = synthesize(net, al.report, mu, seed);
      ReducedSystem rs = reduced_coefficients(net, mu, prof);
      switch (rs.mode) {
        case ReducedSystem::Mode::Simple: {
          std::cout << "  simple kernel, g2 = " << rs.g2 << "\n";
          double g3 = cubic_coefficient(net, rs, prof);
          std::cout << "  cubic coefficient g3 = " << g3 << "\n";
          break;
        }
        case ReducedSystem::Mode::SemisimplePair: {
          std::cout << "  two-dimensional kernel, quadratic map:\n";
          for (int i = 0; i < 2; ++i)
            std::cout << "    Q" << i + 1 << " = [" << rs.quad[i][0][0]
                      << ", " << rs.quad[i][0][1] << "; " << rs.quad[i][1][0]
                      << ", " << rs.quad[i][1][1] << "]\n";
          QuadBranchReport qb = quadratic_branch_system(rs);
          std::cout << "  ray solutions: " << qb.solutions.size()
                    << ", shared factor: "
                    << (qb.common_factor ? "yes" : "no") << "\n";
          break;
        }
        case ReducedSystem::Mode::DefectivePair: {
          DefectiveWitness w = defective_condition(net, rs);
          std::cout << "  defective pair, second-order witness ("
                    << w.p << "," << w.q << ") = " << w.value << "\n";
          break;
        }
      }
      std::cout << "  biorthogonality residual " << rs.biorth_residual
                << "\n";
    } catch (const CcnError& e) {
      std::cout << "  unavailable: " << e.what() << "\n";
    }
  }
}

int cmd_classify(const GlobalOpts& g, const std::string& ref, bool dump_ls,
                 std::uint64_t seed) {
  Network net = load_net(ref);
  AnnotatedLattice al = annotate(net);
  if (g.format == "dot") {
    std::cout << annotated_dot(al);
    return 0;
  }
  if (g.format == "json") {
    nlohmann::json j;
    j["network"] = network_to_json(net);
    j["structure"] = structure_type(al);
    j["spectrum"] = spectrum_json(al.report);
    nlohmann::json nodes = nlohmann::json::array();
    for (size_t i = 0; i < al.lattice.nodes.size(); ++i) {
      nlohmann::json n;
      n["label"] = partition_label(al.lattice.nodes[i].partition);
      nlohmann::json eigs = nlohmann::json::array();
      for (const auto& e : al.annotations[i]) {
        nlohmann::json je;
        je["value"] = value_string(e);
        je["algebraic"] = e.alg;
        je["geometric"] = e.geo;
        eigs.push_back(je);
      }
      n["eigenvalues"] = eigs;
      nodes.push_back(n);
    }
    j["nodes"] = nodes;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  header(g, "ccn classify " + ref);
  std::cout << "structure type: " << structure_type(al) << "\n";
  for (size_t i = 0; i < al.lattice.nodes.size(); ++i) {
    std::cout << partition_label(al.lattice.nodes[i].partition) << ":\n";
    for (const auto& e : al.annotations[i])
      std::cout << "  " << eig_label(e) << "\n";
  }
  if (dump_ls) {
    header(g, "reduced systems at seed " + std::to_string(seed));
    dump_reduced(net, al, seed);
  }
  return 0;
}

int cmd_predict(const GlobalOpts& g, const std::string& ref) {
  Network net = load_net(ref);
  AnnotatedLattice al = annotate(net);
  auto preds = predict(al);
  if (g.format == "json") {
    nlohmann::json j = predictions_json(al, preds);
    j["top_branching"] = branch_summary(al, preds);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  header(g, "ccn predict " + ref);
  std::cout << predictions_text(al, preds);
  std::cout << "top-level branching: " << branch_summary(al, preds) << "\n";
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& ref,
               const VerifyOptions& vo) {
  Network net = load_net(ref);
  AnnotatedLattice al = annotate(net);
  auto preds = predict(al);
  VerifyReport rep = verify_predictions(al, preds, vo);
  if (g.format == "json") {
    nlohmann::json j;
    j["network"] = net.name;
    j["seeds"] = vo.seeds;
    nlohmann::json lines = nlohmann::json::array();
    for (const auto& l : rep.lines) {
      nlohmann::json jl;
      jl["subspace"] = partition_label(al.lattice.nodes[l.pred.node].partition);
      jl["condition"] = value_string(l.pred.condition);
      jl["verdict"] = to_cstr(l.pred.verdict);
      jl["status"] = to_cstr(l.status);
      jl["detail"] = l.detail;
      lines.push_back(jl);
    }
    j["lines"] = lines;
    j["ok"] = rep.ok();
    std::cout << j.dump(2) << "\n";
    return rep.ok() ? 0 : 2;
  }
  header(g, "ccn verify " + ref + " (seeds " + std::to_string(vo.seeds) +
                ", starts " + std::to_string(vo.cont.starts) + ", grid " +
                std::to_string(vo.cont.grid) + ", lambda-max " +
                std::to_string(vo.cont.lambda_max) + ")");
  std::cout << verify_text(al, rep);
  std::cout << (rep.ok() ? "all verdicts confirmed" : "MISMATCH") << " ("
            << rep.continuations << " continuation runs)\n";
  return rep.ok() ? 0 : 2;
}

int cmd_equiv(const GlobalOpts& g, const std::string& a,
              const std::string& b) {
  Network na = load_net(a), nb = load_net(b);
  bool eq = linearly_equivalent(na, nb);
  if (g.format == "json") {
    nlohmann::json j;
    j["first"] = na.name;
    j["second"] = nb.name;
    j["equivalent"] = eq;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  header(g, "ccn equiv " + a + " " + b);
  std::cout << na.name << " and " << nb.name << " are "
            << (eq ? "linearly equivalent" : "not linearly equivalent")
            << "\n";
  return 0;
}

const Eigenfunction* match_eig(const SpectralReport& rep,
                               const std::string& want) {
  for (const auto& e : rep.eigenfunctions) {
    if (want == "val" && e.kind == Eigenfunction::Kind::Valency) return &e;
    if ((want == "quad+" || want == "quad-") &&
        e.kind == Eigenfunction::Kind::QuadraticRoot &&
        e.branch == (want == "quad+" ? 1 : -1))
      return &e;
    if (eig_key(e) == want || eig_key(e) == "lin:" + want) return &e;
  }
  return nullptr;
}

int cmd_branches(const GlobalOpts& g, const std::string& ref,
                 const std::string& eig, std::uint64_t seed,
                 const ContinuationOptions& copt) {
  Network net = load_net(ref);
  AnnotatedLattice al = annotate(net);
  const Eigenfunction* mu = match_eig(al.report, eig);
  if (!mu)
    throw CcnError(ErrorCode::UnhandledConfiguration,
                   "no eigenvalue matches '" + eig + "'");
  DerivativeProfile prof = synthesize(net, al.report, *mu, seed);
  BranchObservation obs = continue_equilibria(net, al.lattice, prof, copt);
  if (g.format == "csv") {
    std::cout << branches_csv(obs, al.lattice);
    return 0;
  }
  header(g, "ccn branches " + ref + " --eig " + eig + " --seed " +
                std::to_string(seed));
  std::cout << "condition " << value_string(*mu) << " = 0, profile f = [";
  for (size_t i = 0; i < prof.f.size(); ++i)
    std::cout << (i ? ", " : "") << prof.f[i];
  std::cout << "]\n";
  for (size_t i = 0; i < obs.branches.size(); ++i) {
    const Branch& br = obs.branches[i];
    std::cout << "branch " << i << ": "
              << partition_label(al.lattice.nodes[br.node].partition) << ", "
              << br.points.size() << " points, max |x| " << br.max_norm()
              << (br.through_origin ? ", through origin" : "") << "\n";
  }
  return 0;
}

int cmd_catalog_list(const GlobalOpts& g) {
  if (g.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : catalog()) j.push_back(entry_expected_json(e));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  header(g, "ccn catalog list");
  for (const auto& e : catalog())
    printf("%-8s %d cells  %zu input type%s  2d=%d  %-6s %-20s top=%s\n",
           e.id.c_str(), e.net.n, e.net.sigma.size(),
           e.net.sigma.size() == 1 ? "" : "s", e.two_dimensional,
           e.structure.c_str(), e.spectrum.c_str(), e.top_branch.c_str());
  return 0;
}

int cmd_catalog_show(const GlobalOpts& g, const std::string& id) {
  const CatalogEntry* e = catalog_find(id);
  if (!e)
    throw CcnError(ErrorCode::ParseError, id + ": not in the catalog");
  if (g.format == "json") {
    nlohmann::json j;
    j["network"] = entry_network_json(*e);
    j["expected"] = entry_expected_json(*e);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  header(g, "ccn catalog show " + id);
  std::cout << "id: " << e->id << "\n";
  std::cout << "input table:\n";
  for (const auto& row : e->net.sigma) {
    std::cout << " ";
    for (int v : row) std::cout << " " << v;
    std::cout << "\n";
  }
  std::cout << "jacobian: " << e->jacobian << "\n";
  std::cout << "two-dimensional subspaces: " << e->two_dimensional << "\n";
  std::cout << "structure: " << e->structure << "\n";
  std::cout << "spectrum: " << e->spectrum << "\n";
  if (e->discriminant)
    std::cout << "discriminant: " << *e->discriminant << "\n";
  for (const auto& r : e->eig_rows)
    std::cout << "eigenvalue " << r.value << (r.defective ? " (defective)" : "")
              << ": (" << r.vec[0] << ", " << r.vec[1] << ", " << r.vec[2]
              << ")\n";
  std::cout << "top-level branching: " << e->top_branch << "\n";
  return 0;
}

int cmd_catalog_export(const GlobalOpts& g, const std::string& dir) {
  fs::create_directories(dir);
  for (const auto& e : catalog()) {
    std::ofstream net_out(fs::path(dir) / (e.id + ".json"));
    net_out << entry_network_json(e).dump(2) << "\n";
    std::ofstream exp_out(fs::path(dir) / (e.id + ".expected.json"));
    exp_out << entry_expected_json(e).dump(2) << "\n";
  }
  header(g, "ccn catalog export " + dir);
  if (g.format == "text")
    std::cout << "wrote " << catalog().size() << " entries to " << dir
              << "\n";
  return 0;
}

int cmd_catalog_check(const GlobalOpts& g, std::vector<std::string> ids) {
  std::vector<const CatalogEntry*> targets;
  if (ids.empty()) {
    for (const auto& e : catalog()) targets.push_back(&e);
  } else {
    for (const auto& id : ids) {
      const CatalogEntry* e = catalog_find(id);
      if (!e)
        throw CcnError(ErrorCode::ParseError, id + ": not in the catalog");
      targets.push_back(e);
    }
  }
  header(g, "ccn catalog check");
  bool all_ok = true;
  nlohmann::json out = nlohmann::json::array();
  for (const CatalogEntry* e : targets) {
    CrossCheckReport rep = cross_check(*e);
    all_ok = all_ok && rep.ok();
    if (g.format == "json") {
      nlohmann::json jr;
      jr["id"] = rep.id;
      nlohmann::json items = nlohmann::json::array();
      for (const auto& it : rep.items)
        items.push_back(
            {{"aspect", it.aspect}, {"ok", it.ok}, {"detail", it.detail}});
      jr["items"] = items;
      jr["ok"] = rep.ok();
      out.push_back(jr);
      continue;
    }
    printf("%-8s %s\n", rep.id.c_str(), rep.ok() ? "ok" : "MISMATCH");
    for (const auto& it : rep.items)
      if (!it.ok)
        printf("    %s: %s\n", it.aspect.c_str(), it.detail.c_str());
  }
  if (g.format == "json") std::cout << out.dump(2) << "\n";
  return all_ok ? 0 : 2;
}

int cmd_catalog_predictions(const GlobalOpts& g) {
  header(g, "ccn catalog predictions");
  for (const auto& e : catalog()) {
    AnnotatedLattice al = annotate(e.net);
    std::cout << predictions_text(al, predict(al));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coupled cell networks: synchrony, spectrum, bifurcation"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot", "csv"}))
      ->capture_default_str();
  app.add_flag("--no-header", g.no_header, "omit the comment header");

  std::string ref, ref_b, eig = "val", out_dir = "data/catalog";
  std::vector<std::string> ids;
  std::uint64_t seed = 0;
  bool dump_ls = false;
  VerifyOptions vo;
  ContinuationOptions copt;

  auto* analyze = app.add_subcommand("analyze", "full structural report");
  analyze->add_option("network", ref, "network file or catalog id")
      ->required();

  auto* lattice = app.add_subcommand("lattice", "synchrony subspace lattice");
  lattice->add_option("network", ref)->required();

  auto* classify = app.add_subcommand("classify", "annotated lattice");
  classify->add_option("network", ref)->required();
  classify->add_flag("--dump-ls", dump_ls,
                     "print reduced systems at a sampled profile");
  classify->add_option("--seed", seed, "profile seed")->capture_default_str();

  auto* predict_cmd = app.add_subcommand("predict", "branching predictions");
  predict_cmd->add_option("network", ref)->required();

  auto* verify = app.add_subcommand("verify", "check predictions numerically");
  verify->add_option("network", ref)->required();
  verify->add_option("--seeds", vo.seeds, "profile seeds per condition")
      ->capture_default_str();
  verify->add_option("--starts", vo.cont.starts)->capture_default_str();
  verify->add_option("--grid", vo.cont.grid)->capture_default_str();
  verify->add_option("--lambda-max", vo.cont.lambda_max)
      ->capture_default_str();

  auto* equiv = app.add_subcommand("equiv", "test linear equivalence");
  equiv->add_option("first", ref)->required();
  equiv->add_option("second", ref_b)->required();

  auto* branches = app.add_subcommand("branches", "continue equilibria");
  branches->add_option("network", ref)->required();
  branches->add_option("--eig", eig,
                       "eigenvalue to drive through zero "
                       "(val, quad+, quad-, or a linear form)")
      ->capture_default_str();
  branches->add_option("--seed", seed)->capture_default_str();
  branches->add_option("--starts", copt.starts)->capture_default_str();
  branches->add_option("--grid", copt.grid)->capture_default_str();
  branches->add_option("--lambda-max", copt.lambda_max)
      ->capture_default_str();

  auto* cat = app.add_subcommand("catalog", "bundled three-cell networks");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "one line per entry");
  auto* cat_show = cat->add_subcommand("show", "entry details");
  cat_show->add_option("id", ref)->required();
  auto* cat_export = cat->add_subcommand("export", "write JSON files");
  cat_export->add_option("dir", out_dir)->capture_default_str();
  auto* cat_check = cat->add_subcommand("check", "recompute tabulated data");
  cat_check->add_option("ids", ids, "entries to check (default all)");
  cat->add_subcommand("predictions", "prediction report for every entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    if (*analyze) return cmd_analyze(g, ref);
    if (*lattice) return cmd_lattice(g, ref);
    if (*classify) return cmd_classify(g, ref, dump_ls, seed);
    if (*predict_cmd) return cmd_predict(g, ref);
    if (*verify) return cmd_verify(g, ref, vo);
    if (*equiv) return cmd_equiv(g, ref, ref_b);
    if (*branches) return cmd_branches(g, ref, eig, seed, copt);
    if (*cat) {
      if (cat->get_subcommand("list")->parsed()) return cmd_catalog_list(g);
      if (cat_show->parsed()) return cmd_catalog_show(g, ref);
      if (cat_export->parsed()) return cmd_catalog_export(g, out_dir);
      if (cat_check->parsed()) return cmd_catalog_check(g, ids);
      if (cat->get_subcommand("predictions")->parsed())
        return cmd_catalog_predictions(g);
    }
  } catch (const CcnError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 64;
}
