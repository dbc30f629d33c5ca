// cliffsym: rotation decompositions, stereographic projection of the
// Clifford torus, and numerically certified generalized symmetry.
//
// Subcommands: decompose, torus-mesh, symmetry-report, steiner-figure.
// Exit codes: 0 success (and certificate pass), 1 usage error, 2 invalid
// input or geometry error, 3 certificate verdict fail.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cliffsym/clifford.hpp"
#include "cliffsym/decompose.hpp"
#include "cliffsym/inversive.hpp"
#include "cliffsym/rotation.hpp"
#include "cliffsym/stereographic.hpp"
#include "json_writer.hpp"
#include "rotation_spec.hpp"

using namespace cliffsym;
using cliffsymtool::fmt17;
using cliffsymtool::JsonWriter;
using cliffsymtool::RotationSpec;

#ifndef CLIFFSYM_VERSION
#define CLIFFSYM_VERSION "0.0.0"
#endif

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + path + "'");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("failed writing output file '" + path + "'");
  }
}

template <int N>
void json_matrix(JsonWriter& jw, const Mat<N>& m) {
  jw.begin_array();
  for (int i = 0; i < N; ++i) {
    jw.begin_array();
    for (int j = 0; j < N; ++j) jw.value(m(i, j));
    jw.end_array();
  }
  jw.end_array();
}

void json_vec3(JsonWriter& jw, const Vec3& v) {
  jw.begin_array();
  for (int i = 0; i < 3; ++i) jw.value(v[i]);
  jw.end_array();
}

template <int N>
void print_matrix(std::ostream& os, const Mat<N>& m, const char* indent) {
  for (int i = 0; i < N; ++i) {
    os << indent << "[";
    for (int j = 0; j < N; ++j) os << (j ? ", " : " ") << fmt17(m(i, j));
    os << " ]\n";
  }
}

Vec2 parse_vec2(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("expected 'x,y', got '" + text + "'");
  }
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

std::string trim(const std::string& s) {
  const std::size_t from = s.find_first_not_of(" \t\r");
  if (from == std::string::npos) return "";
  return s.substr(from, s.find_last_not_of(" \t\r") - from + 1);
}

// Flat "key = value" config support: keys name long options of the chosen
// subcommand; anything given on the command line wins over the file.
std::vector<std::string> layer_config_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);

  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file '" + path + "'");
  }

  std::vector<std::string> extra;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) continue;

    bool onCommandLine = false;
    for (const std::string& a : args) {
      if (a == "--" + key || a.rfind("--" + key + "=", 0) == 0) {
        onCommandLine = true;
        break;
      }
    }
    if (!onCommandLine) extra.push_back("--" + key + "=" + value);
  }

  // Insert after the subcommand name (the first non-flag argument).
  auto at = args.begin();
  while (at != args.end() && !at->empty() && (*at)[0] == '-') ++at;
  if (at != args.end()) ++at;
  args.insert(at, extra.begin(), extra.end());
  return args;
}

// ---------------------------------------------------------------------------
// decompose

struct DecomposeConfig {
  std::string rotation = "identity";
  int dim = 4;
  std::string out;
  std::string config;
};

template <int N>
void report_factors_and_blocks(JsonWriter& jw, std::ostream& os, const Rotation<N>& r) {
  const ElementaryFactorization<N> fact = elementary_factorization<N>(r);
  const double factResidual = max_abs_diff(fact.compose().matrix(), r.matrix());
  os << "elementary factors (k j angle):\n";
  for (const ElementaryFactor& f : fact.factors) {
    os << "  " << f.k << " " << f.j << " " << fmt17(f.angle) << "\n";
  }
  if (fact.factors.empty()) os << "  (none: identity)\n";
  os << "factorization residual = " << fmt17(factResidual) << "\n";

  const PlaneBlockForm<N> block = plane_block_form<N>(r);
  const Mat<N> conj = block.basis.matrix().transposed() * r.matrix() * block.basis.matrix();
  const double blockResidual = max_abs_diff(conj, block.block_matrix());
  os << "block form: fixed_dim " << block.fixed_dim << ", angles [";
  for (std::size_t i = 0; i < block.angles.size(); ++i) {
    os << (i ? ", " : "") << fmt17(block.angles[i]);
  }
  os << "]\n";
  os << "block residual = " << fmt17(blockResidual) << "\n";

  jw.key("factors");
  jw.begin_array();
  for (const ElementaryFactor& f : fact.factors) {
    jw.begin_object();
    jw.key_value("k", f.k);
    jw.key_value("j", f.j);
    jw.key_value("angle", f.angle);
    jw.end_object();
  }
  jw.end_array();
  jw.key_value("factorization_residual", factResidual);

  jw.key("block_form");
  jw.begin_object();
  jw.key_value("fixed_dim", block.fixed_dim);
  jw.key("angles");
  jw.begin_array();
  for (double a : block.angles) jw.value(a);
  jw.end_array();
  jw.key("basis");
  json_matrix<N>(jw, block.basis.matrix());
  jw.key_value("residual", blockResidual);
  jw.end_object();
}

int run_decompose(const DecomposeConfig& cfg) {
  const RotationSpec spec = cliffsymtool::parse_rotation_spec(cfg.rotation, cfg.dim);

  JsonWriter jw;
  jw.begin_object();
  jw.key_value("schema", 1);
  jw.key_value("command", "decompose");
  jw.key_value("software_version", CLIFFSYM_VERSION);
  jw.key_value("dim", spec.dim);

  std::ostream& os = std::cout;
  os << "decompose (dim " << spec.dim << ", rotation '" << cfg.rotation << "')\n";

  if (spec.dim == 3) {
    jw.key("rotation_matrix");
    json_matrix<3>(jw, spec.r3.matrix());
    const ZyzAngles a = decompose_so3(spec.r3);
    const double residual = max_abs_diff(zyz_rotation(a).matrix(), spec.r3.matrix());
    os << "zyz angles: theta = " << fmt17(a.theta) << ", phi = " << fmt17(a.phi)
       << ", psi = " << fmt17(a.psi) << "\n";
    os << "reconstruction residual = " << fmt17(residual) << "\n";
    jw.key("zyz");
    jw.begin_object();
    jw.key_value("theta", a.theta);
    jw.key_value("phi", a.phi);
    jw.key_value("psi", a.psi);
    jw.key_value("reconstruction_residual", residual);
    jw.end_object();
    report_factors_and_blocks<3>(jw, os, spec.r3);
  } else {
    jw.key("rotation_matrix");
    json_matrix<4>(jw, spec.r4.matrix());
    const So4Decomposition d = decompose_so4(spec.r4);
    const double residual = max_abs_diff(so4_rotation(d).matrix(), spec.r4.matrix());
    os << "so4 angles: psi = " << fmt17(d.psi) << ", phi = " << fmt17(d.phi)
       << ", theta = " << fmt17(d.theta) << "\n";
    os << "r0 (fixes e4):\n";
    print_matrix<4>(os, d.r0.matrix(), "  ");
    os << "reconstruction residual = " << fmt17(residual) << "\n";

    Mat3 r0block{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r0block(i, j) = d.r0.matrix()(i, j);
    const ZyzAngles r0angles = decompose_so3(Rotation3::validate(r0block, 1e-6));

    jw.key("so4");
    jw.begin_object();
    jw.key_value("psi", d.psi);
    jw.key_value("phi", d.phi);
    jw.key_value("theta", d.theta);
    jw.key("r0");
    json_matrix<4>(jw, d.r0.matrix());
    jw.key("r0_zyz");
    jw.begin_object();
    jw.key_value("theta", r0angles.theta);
    jw.key_value("phi", r0angles.phi);
    jw.key_value("psi", r0angles.psi);
    jw.end_object();
    jw.key_value("reconstruction_residual", residual);
    jw.end_object();
    report_factors_and_blocks<4>(jw, os, spec.r4);
  }
  jw.end_object();

  if (!cfg.out.empty()) {
    write_file(cfg.out, jw.str() + "\n");
    os << "wrote " << cfg.out << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// torus-mesh

struct MeshConfig {
  std::string rotation = "identity";
  int n_alpha = 64;
  int n_beta = 64;
  std::string out;
  bool centers_line = false;
  int n_centers = 11;
  double center_span = 3.0;
  std::string config;
};

int run_torus_mesh(const MeshConfig& cfg) {
  const RotationSpec spec = cliffsymtool::parse_rotation_spec(cfg.rotation, 4);
  if (spec.dim != 4) {
    throw std::invalid_argument("torus-mesh needs a rotation of R^4");
  }
  if (cfg.out.empty()) {
    throw std::invalid_argument("torus-mesh needs --out");
  }

  const std::vector<TorusPoint> grid = sample_torus(cfg.n_alpha, cfg.n_beta);
  std::vector<Vec3> verts;
  std::vector<int> vertexOf(grid.size(), -1);  // grid index -> 1-based OBJ index
  int excluded = 0;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const Vec4 x = spec.r4.apply(grid[g].point);
    if (1.0 - x[3] < kSamplePoleGuard) {
      ++excluded;
      continue;
    }
    const double f = 1.0 / (1.0 - x[3]);
    verts.push_back({f * x[0], f * x[1], f * x[2]});
    vertexOf[g] = static_cast<int>(verts.size());
  }

  std::string text;
  text += "# cliffsym torus-mesh\n";
  text += "# rotation " + cfg.rotation + "\n";
  text += "# n-alpha " + std::to_string(cfg.n_alpha) + " n-beta " + std::to_string(cfg.n_beta) +
          " excluded " + std::to_string(excluded) + "\n";
  for (const Vec3& v : verts) {
    text += "v " + fmt17(v[0]) + " " + fmt17(v[1]) + " " + fmt17(v[2]) + "\n";
  }

  // Quads between neighbouring parameter samples, wrapping both directions;
  // faces touching an excluded vertex are dropped.
  int faces = 0;
  for (int i = 0; i < cfg.n_alpha; ++i) {
    const int inext = (i + 1) % cfg.n_alpha;
    for (int j = 0; j < cfg.n_beta; ++j) {
      const int jnext = (j + 1) % cfg.n_beta;
      const int a = vertexOf[static_cast<std::size_t>(i * cfg.n_beta + j)];
      const int b = vertexOf[static_cast<std::size_t>(inext * cfg.n_beta + j)];
      const int c = vertexOf[static_cast<std::size_t>(inext * cfg.n_beta + jnext)];
      const int d = vertexOf[static_cast<std::size_t>(i * cfg.n_beta + jnext)];
      if (a < 0 || b < 0 || c < 0 || d < 0) continue;
      text += "f " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) + " " +
              std::to_string(d) + "\n";
      ++faces;
    }
  }

  if (cfg.centers_line) {
    int next = static_cast<int>(verts.size()) + 1;
    const std::vector<SymmetryLine> lines = symmetry_lines(spec.r4);
    for (std::size_t li = 0; li < lines.size(); ++li) {
      text += "# symmetry line " + std::to_string(li) + "\n";
      std::string record = "l";
      for (int k = 0; k < cfg.n_centers; ++k) {
        const double t = cfg.n_centers == 1
                             ? 0.0
                             : -cfg.center_span + 2.0 * cfg.center_span * k / (cfg.n_centers - 1);
        const Vec3 p = lines[li].base + t * lines[li].direction;
        text += "v " + fmt17(p[0]) + " " + fmt17(p[1]) + " " + fmt17(p[2]) + "\n";
        record += " " + std::to_string(next++);
      }
      text += record + "\n";
    }
  }

  write_file(cfg.out, text);
  std::cout << "torus-mesh: " << verts.size() << " vertices (" << excluded << " excluded), "
            << faces << " faces -> " << cfg.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// symmetry-report

struct ReportConfig {
  std::string rotation = "identity";
  int n_alpha = 64;
  int n_beta = 64;
  int n_centers = 11;
  double center_span = 3.0;
  double tol = 1e-9;
  std::string out;
  double debug_rho0_offset = 0.0;
  double debug_center_offset = 0.0;
  std::string config;
};

int run_symmetry_report(const ReportConfig& cfg) {
  const RotationSpec spec = cliffsymtool::parse_rotation_spec(cfg.rotation, 4);
  if (spec.dim != 4) {
    throw std::invalid_argument("symmetry-report needs a rotation of R^4");
  }

  VerifyOptions opts;
  opts.n_alpha = cfg.n_alpha;
  opts.n_beta = cfg.n_beta;
  opts.n_centers = cfg.n_centers;
  opts.center_span = cfg.center_span;
  opts.tol = cfg.tol;
  opts.rho0_offset = cfg.debug_rho0_offset;
  opts.center_offset = cfg.debug_center_offset;

  const SymmetryCertificate cert = verify_symmetry(spec.r4, opts);

  JsonWriter jw;
  jw.begin_object();
  jw.key_value("schema", 1);
  jw.key_value("command", "symmetry-report");
  jw.key_value("software_version", CLIFFSYM_VERSION);
  jw.key("config");
  jw.begin_object();
  jw.key_value("rotation", cfg.rotation);
  jw.key_value("n_alpha", cfg.n_alpha);
  jw.key_value("n_beta", cfg.n_beta);
  jw.key_value("n_centers", cfg.n_centers);
  jw.key_value("center_span", cfg.center_span);
  jw.key_value("tol", cfg.tol);
  jw.key_value("rho0_offset", cfg.debug_rho0_offset);
  jw.key_value("center_offset", cfg.debug_center_offset);
  jw.end_object();
  jw.key("rotation_matrix");
  json_matrix<4>(jw, spec.r4.matrix());
  jw.key("lines");
  jw.begin_array();
  for (const SymmetryLine& line : cert.lines) {
    jw.begin_object();
    jw.key("base");
    json_vec3(jw, line.base);
    jw.key("direction");
    json_vec3(jw, line.direction);
    jw.key_value("rho0", line.rho0);
    jw.end_object();
  }
  jw.end_array();
  jw.key("samples");
  jw.begin_object();
  jw.key_value("total", cert.total_samples);
  jw.key_value("excluded", cert.excluded_samples);
  jw.end_object();
  jw.key("centers");
  jw.begin_array();
  for (const CenterResidual& row : cert.per_center) {
    jw.begin_object();
    jw.key_value("line", row.line_index);
    jw.key_value("t", row.t);
    jw.key("center");
    json_vec3(jw, row.center);
    jw.key_value("radius", row.radius);
    jw.key_value("max_residual", row.max_residual);
    jw.end_object();
  }
  jw.end_array();
  jw.key_value("tolerance", cert.tolerance);
  jw.key_value("max_residual", cert.max_residual);
  jw.key_value("verdict", cert.pass ? "pass" : "fail");
  jw.end_object();

  std::cout << "symmetry-report: rotation '" << cfg.rotation << "', " << cfg.n_alpha << "x"
            << cfg.n_beta << " samples (" << cert.excluded_samples << " excluded), "
            << cert.lines.size() << " line(s), " << cert.per_center.size() << " spheres\n";
  std::cout << "max residual = " << fmt17(cert.max_residual) << " (tol " << fmt17(cert.tolerance)
            << "): " << (cert.pass ? "PASS" : "FAIL") << "\n";

  if (!cfg.out.empty()) {
    write_file(cfg.out, jw.str() + "\n");
    std::cout << "wrote " << cfg.out << "\n";
  }
  return cert.pass ? 0 : 3;
}

// ---------------------------------------------------------------------------
// steiner-figure

struct FigureConfig {
  std::string a1 = "-1,0";
  std::string a2 = "1,0";
  int steiner_count = 6;
  int apollonius_count = 8;
  std::string out;
  std::string config;
};

int run_steiner_figure(const FigureConfig& cfg) {
  if (cfg.out.empty()) {
    throw std::invalid_argument("steiner-figure needs --out (base path for .svg/.csv)");
  }
  const SteinerPair pair{parse_vec2(cfg.a1), parse_vec2(cfg.a2)};
  const Vec2 m0 = 0.5 * (pair.a1 + pair.a2);
  const double rho0 = 0.5 * distance(pair.a1, pair.a2);
  if (rho0 < 1e-12) {
    throw std::invalid_argument("steiner-figure: points coincide");
  }
  const Vec2 along = normalized(pair.a2 - pair.a1);
  const Vec2 up = perp(along);

  const std::vector<CircleOrLine> steiner = steiner_circles(pair, cfg.steiner_count);

  // Apollonius centers walk toward the base points on alternating sides:
  // d_j = rho0 (1 + 2^-level), so the circles nest without touching.
  std::vector<CircleR2> apollonius;
  for (int i = 1; i <= cfg.apollonius_count; ++i) {
    const int level = (i + 1) / 2;
    const double d = rho0 * (1.0 + std::ldexp(1.0, -level));
    const double side = (i % 2 == 1) ? 1.0 : -1.0;
    apollonius.push_back(apollonius_circle(pair, m0 + side * d * along));
  }

  // CSV: one row per family member, the line of the Steiner family included.
  std::string csv = "family,center_x,center_y,radius\n";
  for (const CircleOrLine& member : steiner) {
    if (std::holds_alternative<CircleR2>(member)) {
      const CircleR2& c = std::get<CircleR2>(member);
      csv += "steiner," + fmt17(c.center[0]) + "," + fmt17(c.center[1]) + "," + fmt17(c.radius) +
             "\n";
    } else {
      csv += "line," + fmt17(m0[0]) + "," + fmt17(m0[1]) + ",inf\n";
    }
  }
  for (const CircleR2& c : apollonius) {
    csv += "apollonius," + fmt17(c.center[0]) + "," + fmt17(c.center[1]) + "," + fmt17(c.radius) +
           "\n";
  }

  // SVG: fixed viewBox, math orientation, circles clipped by the viewport.
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-5 -5 10 10\" "
      "width=\"640\" height=\"640\">\n";
  svg += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"0.02\">\n";
  const auto lineSegment = [](const Vec2& p, const Vec2& d, const char* style) {
    const Vec2 a = p - 20.0 * d;
    const Vec2 b = p + 20.0 * d;
    return std::string("<line x1=\"") + fmt17(a[0]) + "\" y1=\"" + fmt17(a[1]) + "\" x2=\"" +
           fmt17(b[0]) + "\" y2=\"" + fmt17(b[1]) + "\" " + style + "/>\n";
  };
  // Line of centers of the Apollonius family, and the perpendicular line of
  // Steiner centers.
  svg += lineSegment(m0, along, "stroke=\"#999999\" stroke-dasharray=\"0.1,0.06\"");
  svg += lineSegment(m0, up, "stroke=\"#cccccc\" stroke-dasharray=\"0.04,0.04\"");
  for (const CircleOrLine& member : steiner) {
    if (std::holds_alternative<CircleR2>(member)) {
      const CircleR2& c = std::get<CircleR2>(member);
      svg += "<circle cx=\"" + fmt17(c.center[0]) + "\" cy=\"" + fmt17(c.center[1]) + "\" r=\"" +
             fmt17(c.radius) + "\" stroke=\"#1f77b4\"/>\n";
    } else {
      svg += lineSegment(m0, along, "stroke=\"#1f77b4\"");
    }
  }
  for (const CircleR2& c : apollonius) {
    svg += "<circle cx=\"" + fmt17(c.center[0]) + "\" cy=\"" + fmt17(c.center[1]) + "\" r=\"" +
           fmt17(c.radius) + "\" stroke=\"#d62728\"/>\n";
  }
  for (const Vec2& p : {pair.a1, pair.a2}) {
    svg += "<circle cx=\"" + fmt17(p[0]) + "\" cy=\"" + fmt17(p[1]) +
           "\" r=\"0.06\" fill=\"#000000\" stroke=\"none\"/>\n";
  }
  svg += "</g>\n</svg>\n";

  write_file(cfg.out + ".csv", csv);
  write_file(cfg.out + ".svg", svg);
  std::cout << "steiner-figure: " << cfg.steiner_count << " steiner + " << cfg.apollonius_count
            << " apollonius circles -> " << cfg.out << ".svg, " << cfg.out << ".csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inversive geometry of rotated Clifford tori: decompositions, meshes, and "
               "symmetry certificates"};
  app.require_subcommand(1);

  DecomposeConfig dc;
  CLI::App* decompose = app.add_subcommand("decompose", "decompose a rotation of R^3 or R^4");
  decompose->add_option("--rotation", dc.rotation, "rotation spec (see README)");
  decompose->add_option("--dim", dc.dim, "dimension for dimension-agnostic presets")
      ->check(CLI::IsMember({3, 4}));
  decompose->add_option("--out", dc.out, "write a JSON report here");
  decompose->add_option("--config", dc.config, "flat key = value config file; command-line flags take precedence");

  MeshConfig mc;
  CLI::App* mesh = app.add_subcommand("torus-mesh", "export the projected torus as a v/f mesh");
  mesh->add_option("--rotation", mc.rotation, "rotation spec");
  mesh->add_option("--n-alpha", mc.n_alpha, "grid count in the first torus angle");
  mesh->add_option("--n-beta", mc.n_beta, "grid count in the second torus angle");
  mesh->add_option("--out", mc.out, "output mesh path")->required();
  mesh->add_flag("--centers-line", mc.centers_line, "append the symmetry lines as polylines");
  mesh->add_option("--n-centers", mc.n_centers, "points per symmetry-line polyline");
  mesh->add_option("--center-span", mc.center_span, "parameter span of the polylines");
  mesh->add_option("--config", mc.config, "flat key = value config file; command-line flags take precedence");

  ReportConfig rc;
  CLI::App* report =
      app.add_subcommand("symmetry-report", "certify the generalized symmetry numerically");
  report->add_option("--rotation", rc.rotation, "rotation spec");
  report->add_option("--n-alpha", rc.n_alpha, "grid count in the first torus angle");
  report->add_option("--n-beta", rc.n_beta, "grid count in the second torus angle");
  report->add_option("--n-centers", rc.n_centers, "sphere centers per symmetry line");
  report->add_option("--center-span", rc.center_span, "line parameter range [-span, span]");
  report->add_option("--tol", rc.tol, "pass/fail residual tolerance");
  report->add_option("--out", rc.out, "write the JSON certificate here");
  report->add_option("--debug-rho0-offset", rc.debug_rho0_offset,
                     "fault injection: add this to every rho0");
  report->add_option("--debug-center-offset", rc.debug_center_offset,
                     "fault injection: push sphere centers off the line by this distance");
  report->add_option("--config", rc.config, "flat key = value config file; command-line flags take precedence");

  FigureConfig fc;
  CLI::App* figure =
      app.add_subcommand("steiner-figure", "SVG/CSV of Steiner and Apollonius circle families");
  figure->add_option("--a1", fc.a1, "first base point 'x,y'");
  figure->add_option("--a2", fc.a2, "second base point 'x,y'");
  figure->add_option("--steiner-count", fc.steiner_count, "number of Steiner circles");
  figure->add_option("--apollonius-count", fc.apollonius_count, "number of Apollonius circles");
  figure->add_option("--out", fc.out, "base output path (writes .svg and .csv)")->required();
  figure->add_option("--config", fc.config, "flat key = value config file; command-line flags take precedence");

  try {
    std::vector<std::string> args = layer_config_args(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(decompose)) return run_decompose(dc);
    if (app.got_subcommand(mesh)) return run_torus_mesh(mc);
    if (app.got_subcommand(report)) return run_symmetry_report(rc);
    if (app.got_subcommand(figure)) return run_steiner_figure(fc);
  } catch (const std::exception& e) {
    // geometry_error carries its kind (NotOrthogonal, DeterminantMinusOne,
    // ...) in the message
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
