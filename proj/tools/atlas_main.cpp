#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "atlas/verify.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 64;
constexpr int kExitInternal = 70;
constexpr int kExitIo = 74;

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p);
  if (!out) throw atlas::IoError("cannot open " + p.string() + " for writing");
  out << content;
  if (!out) throw atlas::IoError("write failed: " + p.string());
}

int cmd_verify_all(const atlas::RunConfig& cfg) {
  atlas::VerifyContext ctx(cfg);
  atlas::VerifyRunResult res = atlas::run_verification(ctx);
  fs::create_directories(cfg.out_dir);
  write_file(fs::path(cfg.out_dir) / "report.json", atlas::render_report_json(res.records));
  std::cout << atlas::render_report_text(res.records);
  int pass = 0, fail = 0, uncert = 0, skipped = 0;
  for (const auto& r : res.records) {
    switch (r.status) {
      case atlas::ClaimStatus::Pass: ++pass; break;
      case atlas::ClaimStatus::Fail: ++fail; break;
      case atlas::ClaimStatus::Uncertified: ++uncert; break;
      case atlas::ClaimStatus::Skipped: ++skipped; break;
    }
  }
  std::cout << "\n" << pass << " pass, " << fail << " fail, " << uncert << " uncertified, "
            << skipped << " skipped\n";
  return res.exit_code;
}

int cmd_geometry(const atlas::RunConfig& cfg) {
  atlas::VerifyContext ctx(cfg);
  const atlas::Geometry& geom = ctx.geometry(2);
  auto tags = atlas::classify_line_entanglement(geom);
  auto spread_list = atlas::spreads(geom);
  auto grid = atlas::ring_projective_line_grid(geom);
  fs::create_directories(cfg.out_dir);
  {
    std::ostringstream dot;
    atlas::write_commutation_dot(geom, tags, dot);
    write_file(fs::path(cfg.out_dir) / "pauli_graph.dot", dot.str());
  }
  {
    std::ostringstream js;
    atlas::write_geometry_json(geom, spread_list, tags, grid, js);
    write_file(fs::path(cfg.out_dir) / "geometry.json", js.str());
  }
  std::cout << "wrote pauli_graph.dot and geometry.json: " << geom.points.size() << " points, "
            << geom.lines.size() << " lines, " << spread_list.size() << " spreads\n";
  return 0;
}

int cmd_steiner(const atlas::RunConfig& cfg) {
  atlas::VerifyContext ctx(cfg);
  fs::create_directories(cfg.out_dir);
  {
    std::ostringstream os;
    atlas::write_codewords(ctx.golay(), os);
    write_file(fs::path(cfg.out_dir) / "golay.codewords", os.str());
  }
  auto dump = [&](const atlas::SteinerSystem& s, const std::string& name) {
    std::ostringstream os;
    atlas::write_design(s, os);
    write_file(fs::path(cfg.out_dir) / name, os.str());
  };
  dump(ctx.octads(), "s5_8_24.design");
  dump(ctx.s4723(), "s4_7_23.design");
  dump(ctx.s3622(), "s3_6_22.design");
  std::cout << "S(5,8,24): " << ctx.octads().blocks.size() << " blocks\n";
  std::cout << "S(4,7,23): " << ctx.s4723().blocks.size() << " blocks\n";
  std::cout << "S(3,6,22): " << ctx.s3622().blocks.size() << " blocks\n";
  std::cout << "|Aut(S(3,6,22))| = " << ctx.design_aut().order() << "\n";
  std::cout << "|M22| = " << ctx.m22().order() << "\n";
  std::cout << "hexad stabilizer order = " << ctx.hexad_group()->order() << "\n";
  return 0;
}

int cmd_report(const atlas::RunConfig& cfg) {
  fs::path path = fs::path(cfg.out_dir) / "report.json";
  std::ifstream in(path);
  if (!in) throw atlas::IoError("no verification records at " + path.string() +
                                " (run verify-all first)");
  std::stringstream buf;
  buf << in.rdbuf();
  auto records = atlas::parse_report_json(buf.str());
  if (cfg.format == "json") std::cout << atlas::render_report_json(records);
  else std::cout << atlas::render_report_text(records);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"atlas: exact verification toolkit for one- and two-qubit Clifford group "
               "structure, the W(2) quadrangle, and the Witt designs"};
  app.require_subcommand(1);

  atlas::RunConfig cfg;
  std::string qubits = "both";
  app.add_option("--filter", cfg.filters,
                 "restrict to claim areas (pauli, clifford1, clifford2, outer, geometry, "
                 "designs, bridge, oracle)");
  app.add_option("--qubits", qubits, "qubit scope: 1, 2 or both");
  app.add_option("--budget-iso", cfg.budget_iso, "isomorphism search budget (extension attempts)");
  app.add_option("--budget-aut", cfg.budget_aut, "automorphism enumeration budget");
  app.add_option("--threads", cfg.threads, "worker threads (default: ATLAS_THREADS or hardware)");
  app.add_option("--cache", cfg.cache_path, "two-qubit Clifford closure cache file");
  app.add_option("--out-dir", cfg.out_dir, "output directory");
  app.add_option("--format", cfg.format, "report format: json or text");

  auto* verify_cmd = app.add_subcommand("verify-all", "run every claim and write report.json");
  auto* geometry_cmd = app.add_subcommand("geometry", "emit DOT/JSON geometry dumps");
  auto* steiner_cmd = app.add_subcommand("steiner", "emit design files and automorphism orders");
  auto* report_cmd = app.add_subcommand("report", "re-render an existing report.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (qubits == "both") cfg.qubit_scope = 0;
    else if (qubits == "1") cfg.qubit_scope = 1;
    else if (qubits == "2") cfg.qubit_scope = 2;
    else throw atlas::ConfigError("--qubits must be 1, 2 or both");
    if (cfg.threads == 0) {
      if (const char* env = std::getenv("ATLAS_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v < 1) throw atlas::ConfigError("ATLAS_THREADS must be positive");
        cfg.threads = static_cast<unsigned>(v);
      }
    }
    cfg.validate();
    if (verify_cmd->parsed()) return cmd_verify_all(cfg);
    if (geometry_cmd->parsed()) return cmd_geometry(cfg);
    if (steiner_cmd->parsed()) return cmd_steiner(cfg);
    if (report_cmd->parsed()) return cmd_report(cfg);
    return kExitConfig;
  } catch (const atlas::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const atlas::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
