// bast: command-line front end for the bounded-angle tree and spanner library.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "bast/approx.hpp"
#include "bast/error.hpp"
#include "bast/generate.hpp"
#include "bast/io.hpp"
#include "bast/oracle.hpp"
#include "bast/report.hpp"
#include "bast/spanner.hpp"

namespace {

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bast::Error(bast::ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bast::Error(bast::ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << text;
}

bast::InstanceFormat format_of(const std::string& name) {
  if (name == "json") return bast::InstanceFormat::kJson;
  if (name == "csv") return bast::InstanceFormat::kCsv;
  return bast::InstanceFormat::kAuto;
}

struct Options {
  std::string in = "-";
  std::string out = "-";
  std::string svg;
  std::string result;
  std::string format = "json";
  std::string generator = "uniform-square";
  std::uint64_t seed = 1;
  double alpha = 120.0;
  std::size_t seeds = 20;
  bool dedupe = false;
  bast::GeneratorParams params;
};

bast::Instance load(const Options& o) {
  return bast::parse_instance(read_text(o.in), bast::InstanceFormat::kAuto,
                              o.dedupe ? bast::DuplicatePolicy::kDeduplicate : bast::DuplicatePolicy::kReject);
}

void maybe_svg(const Options& o, const bast::Instance& inst, const bast::ResultFile& r) {
  if (o.svg.empty()) return;
  const auto wedges = bast::from_records(inst.points, r.wedges);
  write_text(o.svg, bast::emit_svg(inst.points, wedges, r.edges));
}

int cmd_gen(const Options& o) {
  const auto g = bast::generate(o.generator, o.params, o.seed);
  write_text(o.out, bast::emit_instance(bast::to_instance(g), format_of(o.format)));
  return 0;
}

int cmd_solve(const Options& o) {
  if (o.alpha != 90.0 && o.alpha != 120.0 && o.alpha != 180.0) {
    throw bast::Error(bast::ErrorCode::kInvalidArgument, "--alpha must be 90, 120 or 180");
  }
  const auto inst = load(o);
  const auto st = bast::build_alpha_st(inst.points, o.alpha);
  const auto r = bast::make_alpha_result(inst.points, st, bast::verify_alpha_st(inst.points, st));
  write_text(o.out, bast::emit_result(r));
  maybe_svg(o, inst, r);
  return r.pass ? 0 : 1;
}

int cmd_convert(const Options& o) {
  const auto inst = load(o);
  const auto r = bast::make_spanner_result(bast::build_spanner(inst.points));
  write_text(o.out, bast::emit_result(r));
  maybe_svg(o, inst, r);
  return r.pass ? 0 : 1;
}

int cmd_verify(const Options& o) {
  const auto inst = load(o);
  const auto r = bast::parse_result(read_text(o.result));
  const auto v = bast::verify_result(inst.points, r);
  for (const auto& f : v.failures) std::cerr << "FAIL: " << f << '\n';
  std::cout << (v.pass ? "verified" : "verification failed") << '\n';
  return v.pass ? 0 : 1;
}

int cmd_oracle(const Options& o) {
  const auto inst = load(o);
  const auto tree = bast::brute_force_alpha_mst(inst.points, o.alpha);
  if (!tree) std::cerr << "no alpha-ST exists\n";
  const auto r = bast::make_oracle_result(inst.points, o.alpha, tree);
  write_text(o.out, bast::emit_result(r));
  return 0;
}

int cmd_render(const Options& o) {
  const auto inst = load(o);
  std::vector<bast::Wedge> wedges;
  std::vector<bast::Edge> edges;
  if (!o.result.empty()) {
    const auto r = bast::parse_result(read_text(o.result));
    wedges = bast::from_records(inst.points, r.wedges);
    edges = r.edges;
  }
  write_text(o.svg.empty() ? o.out : o.svg, bast::emit_svg(inst.points, wedges, edges));
  return 0;
}

int cmd_bench(const Options& o) {
  bool ok = true;
  std::cout << "seed,n,alpha,ratio,runtime_ms\n";
  for (std::size_t k = 0; k < o.seeds; ++k) {
    const std::uint64_t seed = o.seed + k;
    const auto g = bast::generate(o.generator, o.params, seed);
    const auto t0 = std::chrono::steady_clock::now();
    const auto st = bast::build_alpha_st(g.points, o.alpha);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const auto rep = bast::verify_alpha_st(g.points, st);
    ok = ok && rep.pass;
    char line[160];
    std::snprintf(line, sizeof line, "%llu,%zu,%g,%.9g,%.3f\n", static_cast<unsigned long long>(seed),
                  g.points.size(), o.alpha, rep.ratio, ms);
    std::cout << line;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded-angle spanning trees and directional-antenna hop spanners"};
  app.require_subcommand(1);
  Options o;

  auto add_in = [&](CLI::App* c) {
    c->add_option("--in", o.in, "Instance file (JSON or CSV), '-' for stdin");
    c->add_flag("--dedupe", o.dedupe, "Drop exact duplicate points instead of rejecting them");
  };
  auto add_generator = [&](CLI::App* c) {
    c->add_option("--generator", o.generator, "Generator name");
    c->add_option("--seed", o.seed, "64-bit seed");
    c->add_option("--n", o.params.n, "Number of points");
    c->add_option("--side", o.params.side, "Square side length");
    c->add_option("--clusters", o.params.clusters, "Cluster count (clustered)");
    c->add_option("--spread", o.params.spread, "Cluster radius (clustered)");
    c->add_option("--gap", o.params.gap, "Spacing (collinear)");
    c->add_option("--width", o.params.width, "Comb width (square-grid-reduction)");
    c->add_option("--height", o.params.height, "Comb height (square-grid-reduction)");
    c->add_option("--rows", o.params.rows, "Hexagon rows (hex-grid)");
  };

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  add_generator(gen);
  gen->add_option("--out", o.out, "Output path");
  gen->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* solve = app.add_subcommand("solve", "Build and verify an alpha-ST");
  add_in(solve);
  solve->add_option("--alpha", o.alpha, "Angle in degrees: 90, 120 or 180");
  solve->add_option("--out", o.out, "Result path");
  solve->add_option("--svg", o.svg, "Also render to this SVG file");

  auto* convert = app.add_subcommand("convert", "Build and verify the 120-degree hop spanner");
  add_in(convert);
  convert->add_option("--out", o.out, "Result path");
  convert->add_option("--svg", o.svg, "Also render to this SVG file");

  auto* verify = app.add_subcommand("verify", "Re-check a result file against its instance");
  add_in(verify);
  verify->add_option("--result", o.result, "Result file")->required();

  auto* oracle = app.add_subcommand("oracle", "Exact minimum alpha-ST by enumeration (n <= 8)");
  add_in(oracle);
  oracle->add_option("--alpha", o.alpha, "Any angle in degrees");
  oracle->add_option("--out", o.out, "Result path");

  auto* render = app.add_subcommand("render", "Draw an instance and optional result as SVG");
  add_in(render);
  render->add_option("--result", o.result, "Result file to overlay");
  render->add_option("--svg,--out", o.svg, "SVG path");

  auto* bench = app.add_subcommand("bench", "Ratio and timing table over consecutive seeds");
  add_generator(bench);
  bench->add_option("--alpha", o.alpha, "Angle in degrees: 90, 120 or 180");
  bench->add_option("--seeds", o.seeds, "Number of seeds");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return cmd_gen(o);
    if (*solve) return cmd_solve(o);
    if (*convert) return cmd_convert(o);
    if (*verify) return cmd_verify(o);
    if (*oracle) return cmd_oracle(o);
    if (*render) return cmd_render(o);
    if (*bench) return cmd_bench(o);
  } catch (const bast::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
