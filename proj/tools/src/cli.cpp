#include "facenum_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "facenum/errors.hpp"
#include "facenum/fct_io.hpp"
#include "facenum/generators.hpp"
#include "facenum/pipeline.hpp"

namespace facenum::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string kind;
  std::vector<std::string> inputs;
  std::string field = "2";
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
  // gen parameters
  std::string family;
  int d = 0;
  int n = 0;
  int dim = 0;
  int b = 1;
  int m = 1;
  std::string name;
};

std::string seq_text(const nlohmann::json& values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += values[i].dump();
  }
  return s + ")";
}

std::string vectors_text(const nlohmann::json& v) {
  static const std::vector<std::pair<const char*, const char*>> rows = {
      {"f", "f"},           {"h", "h"},
      {"g", "g"},           {"betti", "β̃"},
      {"h_prime", "h′"},    {"h_dprime", "h″"},
      {"f_interior", "f°"}, {"h_interior", "h°"},
      {"g_boundary", "g(∂)"}, {"gbar", "ḡ(∂)"},
      {"im_psi", "dim Im ψ"}, {"betti_boundary", "β̃(∂)"},
      {"betti_relative", "β(Δ,∂)"}};
  std::ostringstream os;
  os << "field " << v["field"].get<std::string>() << ", d = " << v["d"].get<int>() << "\n";
  for (const auto& [key, symbol] : rows) {
    if (!v.contains(key)) continue;
    os << symbol << " = " << (v[key].is_null() ? std::string("undefined") : seq_text(v[key]))
       << "\n";
  }
  return os.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write " + cfg.output);
  file << text;
}

SimplicialComplex input(const RunConfig& cfg, std::size_t i) {
  if (cfg.inputs.size() <= i) throw Error(ErrorCode::BadParams, "missing input file");
  return read_fct_file(cfg.inputs[i]);
}

int cmd_info(const RunConfig& cfg, std::ostream& out) {
  const SimplicialComplex c = input(cfg, 0);
  nlohmann::json j = info_json(c);
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "vertices " << j["vertices"] << "\ndim " << j["dim"] << "\nfacets " << j["facets"]
       << "\nf = " << seq_text(j["f"]) << "\npure " << j["pure"] << "\ncomponents "
       << j["components"] << "\nreduced euler " << j["reduced_euler"] << "\n";
    emit(cfg, os.str(), out);
  } else {
    emit(cfg, j.dump(2) + "\n", out);
  }
  return kPass;
}

int cmd_vectors(const RunConfig& cfg, std::ostream& out) {
  const Analysis a = analyze(input(cfg, 0), FieldSpec::parse(cfg.field));
  const nlohmann::json j = vectors_json(a);
  emit(cfg, cfg.format == "text" ? vectors_text(j) : j.dump(2) + "\n", out);
  return kPass;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const FieldSpec field = FieldSpec::parse(cfg.field);
  const Analysis a = analyze(input(cfg, 0), field);
  std::vector<CheckReport> reports;
  const std::string& k = cfg.kind;
  if (k == "manifold") {
    reports.push_back(manifold_check(a));
  } else if (k == "ds") {
    reports = ds_checks(a);
  } else if (k == "schenzel") {
    reports.push_back(schenzel_check(a, cfg.seed));
  } else if (k == "bounds") {
    reports = bound_checks(a);
  } else if (k == "rigidity") {
    reports.push_back(rigidity_check(a, cfg.seed));
  } else if (k == "h2") {
    reports.push_back(h2_check(a));
  } else if (k == "lefschetz") {
    reports = lefschetz_checks(a, cfg.seed);
  } else {
    reports = all_checks(a, cfg.seed);
  }
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;

  if (cfg.format == "text") {
    std::string text;
    for (const auto& r : reports) text += r.to_text();
    text += pass ? "PASS\n" : "FAIL\n";
    emit(cfg, text, out);
  } else {
    nlohmann::json j = {{"command", "check"},
                        {"kind", k},
                        {"input", cfg.inputs.front()},
                        {"field", field.to_string()},
                        {"seed", cfg.seed},
                        {"pass", pass}};
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(r.to_json());
    emit(cfg, j.dump(2) + "\n", out);
  }
  return pass ? kPass : kCheckFailed;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  const std::string& f = cfg.family;
  SimplicialComplex c;
  if (f == "simplex") {
    c = simplex(cfg.dim);
  } else if (f == "boundary-simplex") {
    c = boundary_simplex(cfg.dim);
  } else if (f == "cyclic") {
    c = cyclic_polytope_boundary(cfg.n, cfg.d);
  } else if (f == "kuhnel-lassman") {
    c = kuhnel_lassman(cfg.d, cfg.n);
  } else if (f == "fixture") {
    c = fixtures::by_name(cfg.name);
  } else if (f == "cone") {
    c = cone(input(cfg, 0));
  } else if (f == "suspension") {
    c = suspension(input(cfg, 0));
  } else if (f == "join") {
    c = join(input(cfg, 0), input(cfg, 1));
  } else if (f == "disjoint-union") {
    std::vector<SimplicialComplex> parts;
    for (std::size_t i = 0; i < cfg.inputs.size(); ++i) parts.push_back(input(cfg, i));
    c = disjoint_union(parts);
  } else if (f == "connected-sum") {
    c = iterated_boundary_connected_sum(input(cfg, 0), cfg.b);
  } else if (f == "subdivide") {
    c = stacked_subdivisions(input(cfg, 0), cfg.m);
  } else {  // punch
    const SimplicialComplex base = input(cfg, 0);
    const InteriorFacet inner = make_interior_facet(base, base.labeled_facets().front());
    c = remove_facet(inner.complex, inner.facet);
  }
  emit(cfg, to_fct(c), out);
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Face numbers, Betti numbers and face-ring checks for simplicial manifolds",
               "facenum"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool field, bool seed) {
    if (field) {
      sub->add_option("--field", cfg.field, "Coefficient field p or p^m")->capture_default_str();
    }
    if (seed) sub->add_option("--seed", cfg.seed, "Seed for generic linear forms")->capture_default_str();
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "Write to FILE instead of stdout");
  };

  CLI::App* info = app.add_subcommand("info", "Basic counts of a complex");
  info->add_option("input", cfg.inputs, "Facet file")->required()->expected(1);
  add_common(info, false, false);

  CLI::App* vec = app.add_subcommand("vectors", "f, h, g, h', h'' and Betti numbers");
  vec->add_option("input", cfg.inputs, "Facet file")->required()->expected(1);
  add_common(vec, true, false);

  CLI::App* check = app.add_subcommand("check", "Run identity and inequality checks");
  check->add_option("kind", cfg.kind, "Which checks")
      ->required()
      ->check(CLI::IsMember(
          {"manifold", "ds", "schenzel", "bounds", "rigidity", "h2", "lefschetz", "all"}));
  check->add_option("input", cfg.inputs, "Facet file")->required()->expected(1);
  add_common(check, true, true);

  CLI::App* gen = app.add_subcommand("gen", "Generate a complex as a facet file");
  gen->add_option("family", cfg.family, "Construction")
      ->required()
      ->check(CLI::IsMember({"simplex", "boundary-simplex", "cyclic", "kuhnel-lassman", "fixture",
                             "cone", "suspension", "join", "disjoint-union", "connected-sum",
                             "subdivide", "punch"}));
  gen->add_option("inputs", cfg.inputs, "Input facet files");
  gen->add_option("--d", cfg.d, "Rank d (dimension + 1)");
  gen->add_option("--n", cfg.n, "Number of vertices");
  gen->add_option("--dim", cfg.dim, "Dimension");
  gen->add_option("--b", cfg.b, "Number of summands")->capture_default_str();
  gen->add_option("--m", cfg.m, "Number of subdivisions")->capture_default_str();
  gen->add_option("--name", cfg.name, "Fixture name");
  gen->add_option("-o,--output", cfg.output, "Write to FILE instead of stdout");

  std::vector<std::string> argv_store{"facenum"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (info->parsed()) return cmd_info(cfg, out);
    if (vec->parsed()) return cmd_vectors(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out);
    return cmd_gen(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace facenum::cli
