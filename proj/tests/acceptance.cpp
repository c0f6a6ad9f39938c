// Acceptance gate: one PASS/FAIL line per criterion.
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "atfkit/cli.hpp"
#include "atfkit/io.hpp"
#include "atfkit/laglab.hpp"
#include "atfkit/markov.hpp"
#include "atfkit/triangle.hpp"

using namespace atfkit;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string vertex_key(const Vec2Q& v) { return "(" + to_string(v.x) + "," + to_string(v.y) + ")"; }

// 1. Markov tree through the CLI.
Verdict markov_tree_fidelity() {
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"markov", "tree", "--depth", "5"}, out, err);
  const double secs = seconds_since(t0);
  if (code != 0) return {false, "cli exit " + std::to_string(code)};
  const Json tree = Json::parse(out.str())["tree"];
  std::set<std::string> shallow, all;
  std::function<void(const Json&)> walk = [&](const Json& n) {
    const std::string key = n["triple"][0].get<std::string>() + "," + n["triple"][1].get<std::string>() + "," +
                            n["triple"][2].get<std::string>();
    all.insert(key);
    if (n["path"].size() <= 4) shallow.insert(key);
    for (const Json& c : n["children"]) walk(c);
  };
  walk(tree);
  const std::set<std::string> expect = {"1,1,1",    "2,1,1",     "5,2,1",     "13,5,1",   "29,5,2",
                                        "34,13,1", "194,13,5", "433,29,5", "169,29,2"};
  const bool contained = std::includes(all.begin(), all.end(), expect.begin(), expect.end());
  const bool exact = shallow == expect;
  return {exact && contained && secs < 1.0, std::to_string(all.size()) + " triples; depth<=4 set " +
                                                (exact ? "exact" : "MISMATCH") + "; " + fmt("%.3f s", secs)};
}

// 2. Weights are Markov squares along every path to depth 6.
Verdict proposition_depth6() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto nodes = geometric_tree(6, TreeMode::kAllPaths);
  std::size_t bad = 0;
  for (const auto& n : nodes) {
    const GeometricMatch g = match_geometric(n.path);
    std::array<Integer, 3> sq;
    for (std::size_t k = 0; k < 3; ++k) sq[k] = g.triple.entries()[k] * g.triple.entries()[k];
    auto w = weights(n.triangle).w;
    std::sort(sq.begin(), sq.end());
    std::sort(w.begin(), w.end());
    if (w != sq || !(g.triangle == n.triangle)) ++bad;
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs < 30.0,
          std::to_string(nodes.size()) + " triangles, " + std::to_string(bad) + " mismatches; " + fmt("%.2f s", secs)};
}

// 3. Exact identities on every depth-6 triangle.
Verdict identities_depth6() {
  const auto nodes = geometric_tree(6, TreeMode::kAllPaths);
  std::size_t bad = 0;
  for (const auto& n : nodes) {
    const BaseTriangle& t = n.triangle;
    const auto e = edge_data(t);
    const WeightTriple w = weights(t);
    bool ok = twice_area(t) == 9;
    Rational per = 0;
    for (const auto& ed : e) per += ed.length;
    ok = ok && per == 9;
    const Integer lhs = 9 * w.w[0] * w.w[1] * w.w[2];
    const Integer sum = w.w[0] + w.w[1] + w.w[2];
    ok = ok && lhs == sum * sum;
    for (int i = 1; i <= 3; ++i) {
      const auto& cur = e[static_cast<std::size_t>(i - 1)];
      const auto& prev = e[static_cast<std::size_t>((i + 1) % 3)];  // edge i-1
      ok = ok && prev.length * cur.length * Rational(w[i]) == 9;
      const auto root = exact_sqrt(w[i]);
      if (!root) {
        ok = false;
        continue;
      }
      const Vec2Z vhat = vertex_direction(t, i);
      const Vec2Z diff = prev.direction - cur.direction;
      ok = ok && Vec2Z{*root * vhat.x, *root * vhat.y} == diff;
      ok = ok && apply(shear_by(vhat), cur.direction) == prev.direction;
    }
    if (!ok) ++bad;
  }
  return {bad == 0, std::to_string(nodes.size()) + " triangles, " + std::to_string(bad) + " with a failed identity"};
}

// 4. Mutating twice at the new vertex gives a GL(2,Z)-equivalent triangle.
Verdict involution() {
  const auto nodes = geometric_tree(5, TreeMode::kAllPaths);
  std::mt19937 rng(20260101u);
  std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
  std::uniform_int_distribution<int> corner(1, 3);
  int bad = 0;
  for (int k = 0; k < 100; ++k) {
    const BaseTriangle& t = nodes[pick(rng)].triangle;
    const MutationResult once = mutate(t, corner(rng));
    const MutationResult twice = mutate(once.triangle, once.new_vertex_index);
    const auto m = gl2z_equivalent(twice.triangle, t);
    if (!m || !is_witness(*m, twice.triangle, t)) ++bad;
  }
  return {bad == 0, "100 trials, " + std::to_string(bad) + " without a verified witness"};
}

// 5. Weight multisets separate the triangles of the tree to depth 5.
Verdict distinguishing() {
  const auto nodes = geometric_tree(5, TreeMode::kDeduplicated);
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "atfkit_acceptance_equiv";
  fs::create_directories(dir);
  std::vector<std::string> files;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    files.push_back((dir / ("t" + std::to_string(i) + ".json")).string());
    write_file(files.back(), serialize_triangle(nodes[i].triangle));
  }
  int same_weights = 0, equivalent = 0, pairs = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      ++pairs;
      if (same_multiset(weights(nodes[i].triangle), weights(nodes[j].triangle))) {
        ++same_weights;
        continue;
      }
      std::ostringstream out, err;
      cli::run({"atf", "equiv", "--a", files[i], "--b", files[j]}, out, err);
      if (Json::parse(out.str())["equivalent"].get<bool>()) ++equivalent;
    }
  }
  fs::remove_all(dir);
  return {same_weights == 0 && equivalent == 0,
          std::to_string(nodes.size()) + " triangles, " + std::to_string(pairs) + " pairs; " +
              std::to_string(same_weights) + " share weights, " + std::to_string(equivalent) + " reported equivalent"};
}

// 6. First mutation.
Verdict first_mutation() {
  const BaseTriangle m = mutate(root_triangle(), 1).triangle;
  std::vector<std::string> got;
  for (const auto& v : m.vertices()) got.push_back(vertex_key(v));
  // Counterclockwise order up to rotation.
  const std::vector<std::string> ccw = {"(-1,1/2)", "(-1,-1)", "(5,-1)"};
  bool rotation = false;
  for (std::size_t r = 0; r < 3; ++r) {
    bool eq = true;
    for (std::size_t k = 0; k < 3; ++k) eq = eq && got[k] == ccw[(k + r) % 3];
    rotation = rotation || eq;
  }
  const auto w = weights(m).sorted();
  const bool weights_ok = w == std::array<Integer, 3>{1, 1, 4};
  return {rotation && weights_ok, "vertices " + got[0] + " " + got[1] + " " + got[2] + ", weights " +
                                      to_string(w[2]) + "," + to_string(w[1]) + "," + to_string(w[0])};
}

// 7. Dual of the root.
Verdict dual_root() {
  std::set<std::string> got;
  for (const Vec2Z& n : dual_triangle(root_triangle())) got.insert("(" + to_string(n.x) + "," + to_string(n.y) + ")");
  const std::set<std::string> expect = {"(1,1)", "(-1,0)", "(0,-1)"};
  std::string text;
  for (const auto& s : got) text += s + " ";
  return {got == expect, text};
}

// 8. Lagrangian defect suite.
Verdict defect_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  struct Row {
    std::string name;
    std::function<double(double)> defect;
  };
  auto cfg = [](double h) {
    lag::FDConfig c;
    c.step = h;
    c.grid = 256;
    return c;
  };
  const lag::ParamSurface product = lag::product_torus(1.0, 1.0);
  const lag::ParamSurface chekanov = lag::chekanov_torus(lag::default_chekanov_curve());
  const lag::ParamSurface ta = lag::t_a_gamma(0.0, lag::gamma_circle({0.25, 0.0}, 1.0));
  const lag::SphereMap whitney = lag::whitney_immersion(2);
  const lag::SphereCircleMap nem = lag::nemirovski_embedding(2);
  const std::vector<Row> rows = {
      {"product T(1,1)", [&](double h) { return lag::lagrangian_defect(product, cfg(h)); }},
      {"Chekanov", [&](double h) { return lag::lagrangian_defect(chekanov, cfg(h)); }},
      {"T_0(gamma)", [&](double h) { return lag::lagrangian_defect(ta, cfg(h)); }},
      {"Whitney k=2", [&](double h) { return lag::lagrangian_defect(whitney, cfg(h)); }},
      {"embedding k=2", [&](double h) { return lag::lagrangian_defect(nem, cfg(h)); }},
  };
  bool pass = true;
  std::string detail;
  for (const Row& r : rows) {
    const double d = r.defect(1e-4);
    const double d1 = r.defect(1e-3), d2 = r.defect(5e-4), d3 = r.defect(2.5e-4);
    const double r1 = d1 / d2, r2 = d2 / d3;
    const bool bound = d < 1e-6;
    const bool conv = r1 >= 3.5 && r1 <= 4.5 && r2 >= 3.5 && r2 <= 4.5;
    pass = pass && bound && conv;
    detail += "\n    " + r.name + ": defect " + fmt("%.2e", d) + (bound ? "" : " (over bound)") + ", ratios " +
              fmt("%.2f", r1) + " " + fmt("%.2f", r2) + (conv ? "" : " (no h^2 trend)");
  }
  const double secs = seconds_since(t0);
  pass = pass && secs < 60.0;
  return {pass, fmt("%.1f s", secs) + detail};
}

// 9. Moment-map containment of the Chekanov torus.
Verdict containment() {
  const lag::ParamSurface s = lag::chekanov_torus(lag::default_chekanov_curve());
  int violations = 0;
  double worst_sum = 0, worst_single = 0;
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) {
      const Eigen::Vector2d mu = lag::moment_map(s(i / 64.0, j / 64.0));
      worst_sum = std::max(worst_sum, mu(0) + mu(1));
      worst_single = std::max({worst_single, mu(0), mu(1)});
      if (!(mu(0) + mu(1) < 3 && mu(0) < 2 && mu(1) < 2)) ++violations;
    }
  return {violations == 0, "4096 samples, " + std::to_string(violations) + " violations; max mu1+mu2 " +
                               fmt("%.4f", worst_sum) + ", max mu_i " + fmt("%.4f", worst_single)};
}

// 10. Double points.
Verdict double_point_counts() {
  bool pass = true;
  std::string detail;
  for (int res : {64, 128}) {
    const auto w = lag::double_points(lag::whitney_immersion(2), res);
    const bool w_ok = w.size() == 1 && w[0].image.norm() < 1e-6;
    const auto n = lag::double_points(lag::nemirovski_embedding(2), res);
    pass = pass && w_ok && n.empty();
    detail += "res " + std::to_string(res) + ": Whitney " + std::to_string(w.size()) +
              (w.empty() ? "" : " (|image| " + fmt("%.1e", w[0].image.norm()) + ")") + ", embedding " +
              std::to_string(n.size()) + "; ";
  }
  return {pass, detail};
}

// 11. Preimage counts and the Whitney invariant case split.
Verdict preimages() {
  bool pass = true;
  std::string detail = "counts";
  for (int n = 0; n <= 5; ++n) {
    const int a = lag::count_antipodal_preimages(2, n, 64);
    const int b = lag::count_antipodal_preimages(2, n, 128);
    pass = pass && a == n && b == n;
    detail += " " + std::to_string(a) + "/" + std::to_string(b);
  }
  int split_bad = 0;
  for (int k = 3; k <= 5; ++k)
    for (int n = 0; n <= 5; ++n) {
      const auto w = lag::whitney_invariant_e_n(k, n);
      const bool expect = k % 2 == 0 ? (w.value == n && w.modulus == 0) : (w.value == n % 2 && w.modulus == 2);
      const int count = lag::count_antipodal_preimages(2, n, 64);
      const bool cross = w.modulus == 0 ? count == w.value : count % 2 == w.value;
      if (!expect || !cross) ++split_bad;
    }
  pass = pass && split_bad == 0;
  return {pass, detail + "; invariant case split " + (split_bad == 0 ? "ok" : std::to_string(split_bad) + " bad")};
}

struct Criterion {
  const char* title;
  Verdict (*run)();
};

const Criterion kCriteria[] = {
    {"Markov tree fidelity", markov_tree_fidelity},
    {"weights = Markov squares at depth 6", proposition_depth6},
    {"exact identities at depth 6", identities_depth6},
    {"mutation involution", involution},
    {"weight multisets distinguish", distinguishing},
    {"first mutation regression", first_mutation},
    {"dual triangle regression", dual_root},
    {"Lagrangian defect suite", defect_suite},
    {"moment-map containment", containment},
    {"double points", double_point_counts},
    {"preimage counts and invariant", preimages},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  const int total = static_cast<int>(std::size(kCriteria));
  if (only < 0 || only > total) {
    std::fprintf(stderr, "criterion must be 1..%d\n", total);
    return 2;
  }
  bool all = true;
  for (int i = 1; i <= total; ++i) {
    if (only && i != only) continue;
    Verdict v;
    try {
      v = kCriteria[i - 1].run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all = all && v.pass;
    std::printf("%s criterion %d (%s): %s\n", v.pass ? "PASS" : "FAIL", i, kCriteria[i - 1].title, v.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
