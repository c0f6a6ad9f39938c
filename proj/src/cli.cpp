#include "atfkit/cli.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "atfkit/io.hpp"
#include "atfkit/laglab.hpp"
#include "atfkit/markov.hpp"
#include "atfkit/triangle.hpp"

namespace atfkit::cli {

namespace {

constexpr double kPi = std::numbers::pi;

Json vec_json(const Vec2Z& v) { return Json::array({to_string(v.x), to_string(v.y)}); }

Json weights_json(const WeightTriple& w) {
  return Json::array({to_string(w.w[0]), to_string(w.w[1]), to_string(w.w[2])});
}

Json triple_json(const MarkovTriple& t) {
  return Json::array({to_string(t.entries()[0]), to_string(t.entries()[1]), to_string(t.entries()[2])});
}

Json matrix_json(const Unimodular& u) {
  const Mat2Z& m = u.matrix();
  return Json::array({Json::array({to_string(m.a11), to_string(m.a12)}), Json::array({to_string(m.a21), to_string(m.a22)})});
}

std::string triple_text(const MarkovTriple& t) {
  return "(" + to_string(t.entries()[0]) + "," + to_string(t.entries()[1]) + "," + to_string(t.entries()[2]) + ")";
}

std::string weights_text(const WeightTriple& w) {
  return "(" + to_string(w.w[0]) + "," + to_string(w.w[1]) + "," + to_string(w.w[2]) + ")";
}

void print_tree(const TreeNode& n, int indent, std::ostream& err) {
  err << std::string(static_cast<std::size_t>(2 * indent), ' ') << triple_text(n.triple) << '\n';
  for (const auto& c : n.children) print_tree(c, indent + 1, err);
}

// Identities every triangle of the mutation tree satisfies.
Json identity_checks(const BaseTriangle& t, bool& all_ok) {
  const InvariantReport r = invariant_report(t);
  Json checks;
  auto record = [&](const char* name, bool ok) {
    checks[name] = ok;
    all_ok = all_ok && ok;
  };
  record("twice_area_9", r.twice_area == 9);
  record("perimeter_9", r.perimeter == 9);
  record("length_products_9", std::all_of(r.length_products.begin(), r.length_products.end(),
                                          [](const Rational& p) { return p == 9; }));
  record("weight_identity", r.nine_w_product == r.weight_sum_squared);
  bool shear = true;
  for (int i = 1; i <= 3; ++i) shear = shear && verify_shear_lemma(t, i);
  record("shear_lemma", shear);
  return checks;
}

struct Outcome {
  Json report;
  std::string summary;
  bool ok = true;
};

// ---- markov / atf verbs ----------------------------------------------------

Outcome markov_tree_verb(int depth, const std::string& json_path, std::ostream& err) {
  const TreeNode root = markov_tree(depth);
  Outcome o;
  o.report["verb"] = "markov tree";
  o.report["depth"] = depth;
  o.report["nodes"] = flatten(root).size();
  if (json_path.empty()) {
    o.report["tree"] = tree_to_json(root);
  } else {
    write_file(json_path, tree_to_json(root).dump(2) + "\n");
    o.report["json"] = json_path;
  }
  print_tree(root, 0, err);
  o.summary = std::to_string(flatten(root).size()) + " triples to depth " + std::to_string(depth);
  return o;
}

Outcome mutate_verb(const std::string& in, int vertex, const std::string& out_path) {
  const BaseTriangle t = parse_triangle(read_file(in));
  const MutationResult m = mutate(t, vertex);
  Outcome o;
  o.report["verb"] = "atf mutate";
  o.report["vertex"] = vertex;
  o.report["triangle"] = triangle_to_json(m.triangle);
  o.report["new_vertex_index"] = m.new_vertex_index;
  o.report["cut_direction"] = vec_json(m.cut_direction);
  o.report["shear"] = matrix_json(m.shear);
  o.report["source_index"] = m.source_index;
  o.report["weights"] = weights_json(weights(m.triangle));
  if (!out_path.empty()) {
    write_file(out_path, serialize_triangle(m.triangle));
    o.report["out"] = out_path;
  }
  o.summary = "mutated at vertex " + std::to_string(vertex) + ", weights " + weights_text(weights(m.triangle));
  return o;
}

Outcome path_verb(const std::string& path_text) {
  const std::vector<int> path = parse_path(path_text);
  const GeometricMatch g = match_geometric(path);
  Outcome o;
  o.report["verb"] = "atf path";
  o.report["path"] = path;
  o.report["triangle"] = triangle_to_json(g.triangle);
  o.report["weights"] = weights_json(g.weights);
  o.report["markov"] = triple_json(g.triple);
  o.report["vertex_position"] = g.vertex_position;
  o.report["multiset_match"] = g.multiset_match;
  o.report["aligned"] = g.aligned;
  o.ok = g.multiset_match;
  o.summary = "path [" + path_text + "]: weights " + weights_text(g.weights) + ", Markov " + triple_text(g.triple) +
              (g.multiset_match ? ", squares match" : ", MISMATCH");
  return o;
}

Outcome weights_verb(const std::string& in) {
  const WeightTriple w = weights(parse_triangle(read_file(in)));
  Outcome o;
  o.report["verb"] = "atf weights";
  o.report["weights"] = weights_json(w);
  o.summary = "weights " + weights_text(w);
  return o;
}

Outcome dual_verb(const std::string& in) {
  const auto normals = dual_triangle(parse_triangle(read_file(in)));
  Outcome o;
  o.report["verb"] = "atf dual";
  Json list = Json::array();
  std::string text;
  for (const Vec2Z& n : normals) {
    list.push_back(vec_json(n));
    text += " (" + to_string(n.x) + "," + to_string(n.y) + ")";
  }
  o.report["normals"] = std::move(list);
  o.summary = "dual vertices" + text;
  return o;
}

Outcome invariants_verb(const std::string& in) {
  const BaseTriangle t = parse_triangle(read_file(in));
  const InvariantReport r = invariant_report(t);
  Outcome o;
  o.report["verb"] = "atf invariants";
  o.report["twice_area"] = to_string(r.twice_area);
  o.report["perimeter"] = to_string(r.perimeter);
  Json products = Json::array();
  for (const Rational& p : r.length_products) products.push_back(to_string(p));
  o.report["length_products"] = std::move(products);
  o.report["nine_w_product"] = to_string(r.nine_w_product);
  o.report["weight_sum_squared"] = to_string(r.weight_sum_squared);
  Json roots = Json::array();
  for (const auto& n : r.weight_roots) roots.push_back(n ? Json(to_string(*n)) : Json(nullptr));
  o.report["weight_roots"] = std::move(roots);
  o.report["checks"] = identity_checks(t, o.ok);
  o.summary = o.ok ? "all identities hold" : "identity check FAILED";
  return o;
}

Outcome equiv_verb(const std::string& a_path, const std::string& b_path) {
  const BaseTriangle a = parse_triangle(read_file(a_path));
  const BaseTriangle b = parse_triangle(read_file(b_path));
  const auto m = gl2z_equivalent(a, b);
  Outcome o;
  o.report["verb"] = "atf equiv";
  o.report["equivalent"] = m.has_value();
  o.report["witness"] = m ? matrix_json(*m) : Json(nullptr);
  o.report["weights_distinct"] = distinguish_by_weights(a, b) == Distinction::kProvablyDistinct;
  if (m) {
    o.ok = is_witness(*m, a, b);
    o.report["witness_verified"] = o.ok;
  }
  o.summary = m ? "equivalent" : "not equivalent";
  return o;
}

Outcome verify_verb(int depth, unsigned seed) {
  const auto nodes = geometric_tree(depth, TreeMode::kAllPaths);
  Outcome o;
  o.report["verb"] = "atf verify";
  o.report["depth"] = depth;
  o.report["seed"] = seed;
  Json rows = Json::array();
  std::size_t failures = 0;
  for (const GeometricNode& n : nodes) {
    const GeometricMatch g = match_geometric(n.path);
    bool ok = g.multiset_match && g.triangle == n.triangle;
    Json row;
    row["path"] = n.path;
    row["weights"] = weights_json(g.weights);
    row["markov"] = triple_json(g.triple);
    row["weights_are_markov_squares"] = g.multiset_match;
    row["identities"] = identity_checks(n.triangle, ok);
    row["ok"] = ok;
    failures += ok ? 0 : 1;
    rows.push_back(std::move(row));
  }
  o.report["triangles"] = std::move(rows);

  // Mutating twice at the fresh vertex returns an equivalent triangle.
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
  std::uniform_int_distribution<int> corner(1, 3);
  std::size_t involution_failures = 0;
  const int trials = 100;
  for (int k = 0; k < trials; ++k) {
    const BaseTriangle& t = nodes[pick(rng)].triangle;
    const MutationResult once = mutate(t, corner(rng));
    const MutationResult twice = mutate(once.triangle, once.new_vertex_index);
    const auto m = gl2z_equivalent(twice.triangle, t);
    if (!m || !is_witness(*m, twice.triangle, t)) ++involution_failures;
  }
  o.report["involution_trials"] = trials;
  o.report["involution_failures"] = involution_failures;
  o.ok = failures == 0 && involution_failures == 0;
  o.summary = std::to_string(nodes.size()) + " triangles checked, " + std::to_string(failures) + " failures; " +
              std::to_string(trials) + " involution trials, " + std::to_string(involution_failures) + " failures";
  return o;
}

Outcome render_verb(const std::string& in, const std::string& out_path, std::optional<int> cut) {
  const BaseTriangle t = parse_triangle(read_file(in));
  SvgOptions opt;
  opt.cut_vertex = cut;
  write_file(out_path, render_svg(t, opt));
  Outcome o;
  o.report["verb"] = "atf render";
  o.report["out"] = out_path;
  o.report["weights"] = weights_json(weights(t));
  o.summary = "wrote " + out_path;
  return o;
}

// ---- lag verbs ---------------------------------------------------------------

struct LagOptions {
  std::string family;
  int samples = 256;
  double fd_step = 1e-4;
  double tol = 1e-6;
  int n = 1;
  int k = 2;
  double c = 0.5;
  bool convergence = false;
};

const std::vector<std::string> kFamilies = {"chekanov", "clifford", "ta-gamma", "whitney", "nemirovski", "e-n"};

lag::ParamSurface surface_family(const std::string& f) {
  if (f == "chekanov") return lag::chekanov_torus(lag::default_chekanov_curve());
  if (f == "clifford") return lag::product_torus(1.0, 1.0);
  if (f == "ta-gamma") return lag::t_a_gamma(0.0, lag::gamma_circle({0.25, 0.0}, 1.0));
  throw std::invalid_argument("family " + f + " is not a torus in C^2");
}

// Defect at fd_step on the requested grid, plus the optional convergence sweep.
template <typename Map>
void defect_checks(const Map& map, const LagOptions& opt, Json& report, bool& ok) {
  lag::FDConfig cfg;
  cfg.step = opt.fd_step;
  cfg.grid = opt.samples;
  cfg.tolerance = opt.tol;
  const double d = lag::lagrangian_defect(map, cfg);
  report["defect"] = d;
  report["defect_ok"] = d < opt.tol;
  ok = ok && d < opt.tol;
  if (!opt.convergence) return;
  Json sweep = Json::array();
  double prev = 0.0;
  bool conv = true;
  const std::array<double, 3> steps{1e-3, 5e-4, 2.5e-4};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const double h = steps[i];
    cfg.step = h;
    const double v = lag::lagrangian_defect(map, cfg);
    Json row;
    row["h"] = h;
    row["defect"] = v;
    if (i > 0) {
      const double ratio = v > 0 ? prev / v : std::numeric_limits<double>::infinity();
      row["ratio"] = std::isfinite(ratio) ? Json(ratio) : Json(nullptr);
      conv = conv && ratio >= 3.5 && ratio <= 4.5;
    }
    prev = v;
    sweep.push_back(std::move(row));
  }
  report["convergence"] = std::move(sweep);
  report["convergence_ok"] = conv;
  ok = ok && conv;
}

Outcome lag_check_verb(const LagOptions& opt) {
  Outcome o;
  o.report["verb"] = "lag check";
  o.report["family"] = opt.family;
  o.report["samples"] = opt.samples;
  o.report["fd_step"] = opt.fd_step;
  const std::string& f = opt.family;
  if (f == "chekanov" || f == "clifford" || f == "ta-gamma") {
    const lag::ParamSurface s = surface_family(f);
    defect_checks(s, opt, o.report, o.ok);
    const int per = 64;
    double h_err = 0.0, f_err = 0.0;
    std::size_t violations = 0;
    const auto gamma = lag::gamma_circle({0.25, 0.0}, 1.0);
    for (int i = 0; i < per; ++i)
      for (int j = 0; j < per; ++j) {
        const double u = double(i) / per, t = double(j) / per;
        const lag::Point4 p = s(u, t);
        h_err = std::max(h_err, std::abs(lag::hamiltonian_H(p)));
        if (f == "ta-gamma") f_err = std::max(f_err, std::abs(lag::map_F(p) - gamma(t)));
        const Eigen::Vector2d mu = lag::moment_map(p);
        if (!(mu(0) + mu(1) < 3 && mu(0) < 2 && mu(1) < 2)) ++violations;
      }
    if (f == "chekanov" || f == "ta-gamma") {
      o.report["max_abs_H"] = h_err;
      o.ok = o.ok && h_err < 1e-9;
    }
    if (f == "ta-gamma") {
      o.report["max_F_off_curve"] = f_err;
      o.ok = o.ok && f_err < 1e-9;
    }
    if (f == "chekanov") {
      o.report["containment_samples"] = per * per;
      o.report["containment_violations"] = violations;
      o.ok = o.ok && violations == 0;
    }
    if (f == "clifford") {
      o.report["monotone"] = lag::is_monotone_product(1.0, 1.0);
      o.ok = o.ok && lag::is_monotone_product(1.0, 1.0);
    }
  } else if (f == "whitney") {
    const auto w = lag::whitney_immersion(opt.k);
    defect_checks(w, opt, o.report, o.ok);
    Eigen::VectorXd north = Eigen::VectorXd::Zero(opt.k + 2), south = north;
    north(opt.k + 1) = 1;
    south(opt.k + 1) = -1;
    const bool poles = w.eval(north).norm() == 0.0 && w.eval(south).norm() == 0.0;
    o.report["poles_to_origin"] = poles;
    o.ok = o.ok && poles;
  } else if (f == "nemirovski") {
    const auto m = lag::nemirovski_embedding(opt.k);
    defect_checks(m, opt, o.report, o.ok);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(opt.k + 1);
    x(0) = 1;
    Eigen::VectorXd expect = Eigen::VectorXd::Zero(2 * opt.k + 2);
    expect(0) = 1.5;
    const double err = (m.eval(x, kPi / 2) - expect).norm();
    o.report["quarter_turn_error"] = err;
    o.ok = o.ok && err < 1e-12;
  } else if (f == "e-n") {
    // e_n is an embedding but not Lagrangian; check injectivity and the
    // preimage count that feeds the Whitney invariant.
    const auto e = lag::e_n_embedding(opt.k, opt.n, opt.c);
    o.report["k"] = opt.k;
    o.report["n"] = opt.n;
    o.report["c"] = opt.c;
    if (opt.k <= 3) {
      const int res = opt.k == 2 ? 64 : 32;
      const auto dp = lag::double_points(e, res);
      o.report["double_points"] = dp.size();
      o.report["double_point_resolution"] = res;
      o.ok = o.ok && dp.empty();
    }
    if (opt.k == 2) {
      const int count = lag::count_antipodal_preimages(2, opt.n);
      o.report["antipodal_preimages"] = count;
      o.ok = o.ok && count == std::abs(opt.n);
    } else if (opt.k >= 3) {
      const auto w = lag::whitney_invariant_e_n(opt.k, opt.n);
      o.report["whitney_invariant"] = w.value;
      o.report["whitney_modulus"] = w.modulus;
    }
  } else {
    throw std::invalid_argument("unknown family " + f);
  }
  o.summary = "lag check " + f + (o.ok ? ": PASS" : ": FAIL");
  return o;
}

Outcome lag_moment_verb(const std::string& family, int samples, const std::string& out_path) {
  const lag::ParamSurface s = surface_family(family);
  write_file(out_path, surface_csv(s, samples, true));
  Outcome o;
  o.report["verb"] = "lag moment";
  o.report["family"] = family;
  o.report["rows"] = samples * samples;
  o.report["out"] = out_path;
  if (family == "chekanov") {
    std::size_t violations = 0;
    for (int i = 0; i < samples; ++i)
      for (int j = 0; j < samples; ++j) {
        const Eigen::Vector2d mu = lag::moment_map(s(double(i) / samples, double(j) / samples));
        if (!(mu(0) + mu(1) < 3 && mu(0) < 2 && mu(1) < 2)) ++violations;
      }
    o.report["containment_violations"] = violations;
    o.ok = violations == 0;
  }
  o.summary = "wrote " + std::to_string(samples * samples) + " rows to " + out_path;
  return o;
}

Outcome lag_double_points_verb(const std::string& family, int k, int resolution, double tol, int n, double c) {
  std::vector<lag::DoublePoint> dps;
  if (family == "whitney") dps = lag::double_points(lag::whitney_immersion(k), resolution, tol);
  else if (family == "nemirovski") dps = lag::double_points(lag::nemirovski_embedding(k), resolution, tol);
  else if (family == "round-sphere") dps = lag::double_points(lag::round_sphere(k), resolution, tol);
  else if (family == "e-n") dps = lag::double_points(lag::e_n_embedding(k, n, c), resolution, tol);
  else throw std::invalid_argument("unknown family " + family);
  Outcome o;
  o.report["verb"] = "lag double-points";
  o.report["family"] = family;
  o.report["k"] = k;
  o.report["resolution"] = resolution;
  o.report["count"] = dps.size();
  Json list = Json::array();
  auto vec = [](const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); };
  for (const auto& d : dps) {
    Json row;
    row["first"] = vec(d.first);
    row["second"] = vec(d.second);
    row["image"] = vec(d.image);
    row["image_distance"] = d.image_distance;
    list.push_back(std::move(row));
  }
  o.report["double_points"] = std::move(list);
  o.summary = std::to_string(dps.size()) + " double point(s) at resolution " + std::to_string(resolution);
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact base-triangle mutations, Markov triples and Lagrangian sampling checks.", "atfkit"};
  app.require_subcommand(1);

  auto* markov = app.add_subcommand("markov", "Markov triples")->require_subcommand(1);
  auto* mtree = markov->add_subcommand("tree", "Print the Markov tree");
  int depth = 5;
  std::string json_path;
  mtree->add_option("--depth", depth, "Depth in edges from (1,1,1)")->required()->check(CLI::Range(0, 40));
  mtree->add_option("--json", json_path, "Write the tree as JSON here");

  auto* atf = app.add_subcommand("atf", "Base triangles and mutations")->require_subcommand(1);
  atf->footer(
      "Vertices are numbered 1,2,3 counterclockwise; a path such as \"1,2,1\" lists the vertex mutated at each step,\n"
      "counted in the current triangle after the previous mutation (the new vertex takes the mutated slot).");
  std::string in, out_path, a_path, b_path, path_text;
  int vertex = 1;
  unsigned seed = 1;
  std::optional<int> cut;
  auto* amutate = atf->add_subcommand("mutate", "Mutate a triangle at one vertex");
  amutate->add_option("--in", in, "Triangle JSON")->required();
  amutate->add_option("--vertex", vertex, "Vertex 1, 2 or 3")->required()->check(CLI::Range(1, 3));
  amutate->add_option("--out", out_path, "Write the mutated triangle here");
  auto* apath = atf->add_subcommand("path", "Mutate the root triangle along a path");
  apath->add_option("--path", path_text, "Comma-separated vertex indices")->required();
  std::vector<CLI::App*> single_input;
  for (const char* verb : {"weights", "dual", "invariants"}) {
    auto* sub = atf->add_subcommand(verb, std::string("Report ") + verb + " of a triangle");
    sub->add_option("--in", in, "Triangle JSON")->required();
    single_input.push_back(sub);
  }
  auto* aequiv = atf->add_subcommand("equiv", "Search for a GL(2,Z) equivalence");
  aequiv->add_option("--a", a_path, "First triangle JSON")->required();
  aequiv->add_option("--b", b_path, "Second triangle JSON")->required();
  auto* averify = atf->add_subcommand("verify", "Check the weight/Markov correspondence and identities on the tree");
  averify->add_option("--depth", depth, "Tree depth")->required()->check(CLI::Range(0, 12));
  averify->add_option("--seed", seed, "Seed for the random involution trials");
  auto* arender = atf->add_subcommand("render", "Draw a triangle as SVG");
  arender->add_option("--in", in, "Triangle JSON")->required();
  arender->add_option("--out", out_path, "SVG output path")->required();
  arender->add_option("--cut-vertex", cut, "Draw the cut through this vertex")->check(CLI::Range(1, 3));

  auto* lag = app.add_subcommand("lag", "Lagrangian sampling checks")->require_subcommand(1);
  LagOptions lo;
  auto* lcheck = lag->add_subcommand("check", "Finite-difference and family-specific checks");
  lcheck->add_option("--family", lo.family, "Family")->required()->check(CLI::IsMember(kFamilies));
  lcheck->add_option("--samples", lo.samples, "Grid samples per parameter")->check(CLI::PositiveNumber);
  lcheck->add_option("--fd-step", lo.fd_step, "Finite-difference step")->check(CLI::PositiveNumber);
  lcheck->add_option("--tol", lo.tol, "Defect tolerance")->check(CLI::PositiveNumber);
  lcheck->add_option("--n", lo.n, "Degree for e-n");
  lcheck->add_option("--k", lo.k, "Sphere dimension")->check(CLI::Range(1, 8));
  lcheck->add_option("--c", lo.c, "Radius parameter for e-n");
  lcheck->add_flag("--convergence", lo.convergence, "Also measure defect ratios as h halves");
  std::string mfamily;
  int msamples = 64;
  auto* lmoment = lag->add_subcommand("moment", "Dump torus samples with moment-map values as CSV");
  lmoment->add_option("--family", mfamily, "chekanov, clifford or ta-gamma")
      ->required()
      ->check(CLI::IsMember({"chekanov", "clifford", "ta-gamma"}));
  lmoment->add_option("--out", out_path, "CSV output path")->required();
  lmoment->add_option("--samples", msamples, "Samples per parameter")->check(CLI::PositiveNumber);
  std::string dfamily;
  int dk = 2, resolution = 64, dn = 1;
  double dtol = 1e-6, dc = 0.5;
  auto* ldouble = lag->add_subcommand("double-points", "Grid search for double points");
  ldouble->add_option("--family", dfamily, "whitney, nemirovski, round-sphere or e-n")
      ->required()
      ->check(CLI::IsMember({"whitney", "nemirovski", "round-sphere", "e-n"}));
  ldouble->add_option("--k", dk, "Sphere dimension")->check(CLI::Range(1, 6));
  ldouble->add_option("--resolution", resolution, "Samples per great circle")->check(CLI::Range(8, 1024));
  ldouble->add_option("--tol", dtol, "Image-distance tolerance")->check(CLI::PositiveNumber);
  ldouble->add_option("--n", dn, "Degree for e-n");
  ldouble->add_option("--c", dc, "Radius parameter for e-n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    Outcome o;
    if (mtree->parsed()) o = markov_tree_verb(depth, json_path, err);
    else if (amutate->parsed()) o = mutate_verb(in, vertex, out_path);
    else if (apath->parsed()) o = path_verb(path_text);
    else if (single_input[0]->parsed()) o = weights_verb(in);
    else if (single_input[1]->parsed()) o = dual_verb(in);
    else if (single_input[2]->parsed()) o = invariants_verb(in);
    else if (aequiv->parsed()) o = equiv_verb(a_path, b_path);
    else if (averify->parsed()) o = verify_verb(depth, seed);
    else if (arender->parsed()) o = render_verb(in, out_path, cut);
    else if (lcheck->parsed()) o = lag_check_verb(lo);
    else if (lmoment->parsed()) o = lag_moment_verb(mfamily, msamples, out_path);
    else if (ldouble->parsed()) o = lag_double_points_verb(dfamily, dk, resolution, dtol, dn, dc);
    o.report["ok"] = o.ok;
    out << o.report.dump(2) << '\n';
    err << o.summary << '\n';
    return o.ok ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace atfkit::cli
