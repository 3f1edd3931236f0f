#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tropt/io.hpp"

// Command-line front end. Exit codes: 0 success, 1 input error,
// 2 infeasible instance, 3 verification failure.
int main(int argc, char** argv) {
  CLI::App app{"closed-form minimax rectilinear facility location (max-plus algebra)"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto* solve = app.add_subcommand("solve", "solve an instance file");
  std::string solve_path;
  std::string format = "text";
  std::string svg_path;
  solve->add_option("file", solve_path, "instance document (JSON)")->required();
  solve->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--svg", svg_path, "also write an SVG figure to this path");
  solve->callback([&] {
    const auto fmt =
        format == "json" ? tropt::io::OutputFormat::json : tropt::io::OutputFormat::text;
    std::optional<std::string> svg;
    if (!svg_path.empty()) svg = svg_path;
    exit_code = tropt::io::cmd_solve(solve_path, fmt, svg, std::cout, std::cerr);
  });

  auto* verify = app.add_subcommand(
      "verify", "solve an instance, then check the result against a grid search");
  std::string verify_path;
  double step = 0.01;
  double tol = 1e-9;
  double fault_offset = 0.0;
  verify->add_option("file", verify_path, "instance document (JSON)")->required();
  verify->add_option("--step", step, "grid step (default 0.01)");
  verify->add_option("--tol", tol, "tolerance for exact checks (default 1e-9)");
  verify->add_option("--fault-offset", fault_offset,
                     "perturb the claimed optimum before checking (verifier self-test)");
  verify->callback([&] {
    exit_code = tropt::io::cmd_verify(verify_path, step, tol, std::cout, std::cerr,
                                      fault_offset);
  });

  auto* cctv = app.add_subcommand(
      "cctv", "build an instance for placing a monitoring facility among cameras");
  std::string cameras_path;
  double cable = 0.0;
  double strip_left = 0.0;
  double strip_right = 0.0;
  cctv->add_option("file", cameras_path, "camera list, one \"x y height\" per line")
      ->required();
  cctv->add_option("--cable", cable, "common cable length")->required();
  auto* left_opt = cctv->add_option("--strip-left", strip_left, "left strip boundary");
  auto* right_opt =
      cctv->add_option("--strip-right", strip_right, "right strip boundary");
  left_opt->needs(right_opt);
  right_opt->needs(left_opt);
  cctv->callback([&] {
    std::optional<tropt::io::StripRecord> strip;
    if (left_opt->count() > 0) strip = tropt::io::StripRecord{strip_left, strip_right};
    exit_code = tropt::io::cmd_cctv(cameras_path, cable, strip, std::cout, std::cerr);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int cli_code = app.exit(e);
    return cli_code == 0 ? 0 : 1;  // fold CLI11's error variety into "input error"
  }
  return exit_code;
}
