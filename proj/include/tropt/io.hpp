#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tropt/location.hpp"
#include "tropt/oracle.hpp"

// File formats and command entry points. Instance files are strict JSON
// documents with an explicit schema version; unknown fields are
// rejected. All output is deterministic: the same invocation produces
// byte-identical text, JSON and SVG.
namespace tropt::io {

struct PointRecord {
  double x = 0.0;
  double y = 0.0;
  double addend = 0.0;
  std::optional<double> max_distance;

  friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

struct StripRecord {
  double left = 0.0;
  double right = 0.0;

  friend bool operator==(const StripRecord&, const StripRecord&) = default;
};

struct InstanceDocument {
  std::string schema_version = "1";
  std::vector<PointRecord> points;
  std::optional<StripRecord> strip;
  std::string mode = "unconstrained";  // full | distance | boundary | unconstrained

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

// Throws ParseError on malformed JSON and ValidationError when the
// document breaks an invariant (each with field context in the message).
InstanceDocument parse_instance(const std::string& text);
std::string serialize_instance(const InstanceDocument& doc);

location::LocationInstance to_location(const InstanceDocument& doc);
InstanceDocument from_location(const location::LocationInstance& inst);

struct SolutionDocument {
  bool feasible = true;
  double theta = 0.0;
  std::vector<location::PlanePoint> endpoints;  // first and last polyline vertex
  std::vector<location::PlanePoint> polyline;
  std::vector<double> alpha_breakpoints;
  location::DerivedScalars derived_scalars{};
  std::optional<location::FeasibilityTerm> diagnostics;  // set when infeasible
};

SolutionDocument solution_document(const location::LocationInstance& inst,
                                   const location::LocationSolution& sol);
SolutionDocument infeasible_document(const location::LocationInstance& inst,
                                     const location::FeasibilityTerm& term);

std::string to_json(const SolutionDocument& doc);
std::string to_text(const SolutionDocument& doc);

std::string to_text(const oracle::VerificationReport& report);

// Figure of the instance and its solution: filled circles at the demand
// points, a diamond of half-diagonal d_j around each bounded point, the
// strip as two vertical lines, the solution set as a thick polyline (a
// dot when degenerate), and the coordinate axes. SVG 1.1, y up.
std::string render_svg(const location::LocationInstance& inst,
                       const location::LocationSolution& sol);

enum class OutputFormat { text, json };

// Exit codes shared by all commands:
//   0 success, 1 input error, 2 infeasible, 3 verification failure.
int cmd_solve(const std::string& instance_path, OutputFormat format,
              const std::optional<std::string>& svg_path, std::ostream& out,
              std::ostream& err);

// fault_offset perturbs the claimed optimum before verification; nonzero
// values exist to prove the verifier can fail (a verifier self-test).
int cmd_verify(const std::string& instance_path, double step, double tol,
               std::ostream& out, std::ostream& err, double fault_offset = 0.0);

int cmd_cctv(const std::string& cameras_path, double cable_length,
             const std::optional<StripRecord>& strip, std::ostream& out,
             std::ostream& err);

}  // namespace tropt::io
