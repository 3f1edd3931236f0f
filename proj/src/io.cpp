#include "tropt/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace tropt::io {

namespace {

using json = nlohmann::json;
using location::LocationInstance;
using location::Mode;
using location::PlanePoint;

std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v + 0.0);  // +0.0 folds -0 into 0
  return buf;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known) {
      if (it.key() == k) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw ValidationError("unknown field \"" + it.key() + "\" in " + where);
    }
  }
}

double require_number(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) {
    throw ValidationError(std::string("missing field \"") + key + "\" in " + where);
  }
  if (!obj[key].is_number()) {
    throw ValidationError(std::string("field \"") + key + "\" in " + where +
                          " must be a number");
  }
  return obj[key].get<double>();
}

Mode mode_from_string(const std::string& s) {
  if (s == "full") return Mode::full;
  if (s == "distance") return Mode::distance;
  if (s == "boundary") return Mode::boundary;
  if (s == "unconstrained") return Mode::unconstrained;
  throw ValidationError("mode must be one of full, distance, boundary, unconstrained; got \"" +
                        s + "\"");
}

std::string mode_to_string(Mode m) {
  switch (m) {
    case Mode::full:
      return "full";
    case Mode::distance:
      return "distance";
    case Mode::boundary:
      return "boundary";
    case Mode::unconstrained:
      return "unconstrained";
  }
  throw ValidationError("unknown mode");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json point_to_json(const PlanePoint& p) { return json::array({p.x1, p.x2}); }

json scalar_or_null(double v) {
  if (std::isfinite(v)) return json(v);
  return json();  // null for the unused -inf/+inf sentinels
}

std::string point_text(const PlanePoint& p) {
  return "(" + fmt_num(p.x1) + ", " + fmt_num(p.x2) + ")";
}

}  // namespace

InstanceDocument parse_instance(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed instance document: ") + e.what());
  }
  if (!root.is_object()) throw ValidationError("instance document must be a JSON object");
  reject_unknown_keys(root, {"schema_version", "points", "strip", "mode"}, "document");

  InstanceDocument doc;
  if (!root.contains("schema_version") || !root["schema_version"].is_string()) {
    throw ValidationError("missing or non-string field \"schema_version\"");
  }
  doc.schema_version = root["schema_version"].get<std::string>();
  if (doc.schema_version != "1") {
    throw ValidationError("unsupported schema_version \"" + doc.schema_version + "\"");
  }

  if (!root.contains("mode") || !root["mode"].is_string()) {
    throw ValidationError("missing or non-string field \"mode\"");
  }
  doc.mode = root["mode"].get<std::string>();
  const Mode mode = mode_from_string(doc.mode);

  if (!root.contains("points") || !root["points"].is_array() || root["points"].empty()) {
    throw ValidationError("field \"points\" must be a non-empty array");
  }
  std::size_t index = 0;
  for (const json& p : root["points"]) {
    ++index;
    const std::string where = "points[" + std::to_string(index - 1) + "]";
    if (!p.is_object()) throw ValidationError(where + " must be an object");
    reject_unknown_keys(p, {"x", "y", "addend", "max_distance"}, where);
    PointRecord rec;
    rec.x = require_number(p, "x", where);
    rec.y = require_number(p, "y", where);
    rec.addend = require_number(p, "addend", where);
    if (p.contains("max_distance")) {
      rec.max_distance = require_number(p, "max_distance", where);
      if (*rec.max_distance < 0.0) {
        throw ValidationError(where + ": max_distance must be >= 0");
      }
    }
    doc.points.push_back(rec);
  }

  if (root.contains("strip")) {
    const json& s = root["strip"];
    if (!s.is_object()) throw ValidationError("\"strip\" must be an object");
    reject_unknown_keys(s, {"left", "right"}, "strip");
    StripRecord rec;
    rec.left = require_number(s, "left", "strip");
    rec.right = require_number(s, "right", "strip");
    if (rec.left > rec.right) {
      throw ValidationError("strip requires left <= right");
    }
    doc.strip = rec;
  }

  const bool needs_bounds = mode == Mode::full || mode == Mode::distance;
  const bool needs_strip = mode == Mode::full || mode == Mode::boundary;
  for (std::size_t i = 0; i < doc.points.size(); ++i) {
    if (needs_bounds && !doc.points[i].max_distance) {
      throw ValidationError("mode \"" + doc.mode + "\" requires max_distance on points[" +
                            std::to_string(i) + "]");
    }
    if (!needs_bounds && doc.points[i].max_distance) {
      throw ValidationError("mode \"" + doc.mode +
                            "\" does not use max_distance, but points[" +
                            std::to_string(i) + "] carries one");
    }
  }
  if (needs_strip && !doc.strip) {
    throw ValidationError("mode \"" + doc.mode + "\" requires a strip");
  }
  if (!needs_strip && doc.strip) {
    throw ValidationError("mode \"" + doc.mode + "\" does not use a strip, but one is present");
  }
  return doc;
}

std::string serialize_instance(const InstanceDocument& doc) {
  json root;
  root["schema_version"] = doc.schema_version;
  root["mode"] = doc.mode;
  json points = json::array();
  for (const PointRecord& p : doc.points) {
    json rec;
    rec["x"] = p.x;
    rec["y"] = p.y;
    rec["addend"] = p.addend;
    if (p.max_distance) rec["max_distance"] = *p.max_distance;
    points.push_back(rec);
  }
  root["points"] = points;
  if (doc.strip) {
    root["strip"] = json{{"left", doc.strip->left}, {"right", doc.strip->right}};
  }
  return root.dump(2);
}

LocationInstance to_location(const InstanceDocument& doc) {
  LocationInstance inst;
  inst.mode = mode_from_string(doc.mode);
  const bool needs_bounds = inst.mode == Mode::full || inst.mode == Mode::distance;
  std::vector<double> bounds;
  for (const PointRecord& p : doc.points) {
    inst.points.push_back(PlanePoint{p.x, p.y});
    inst.addends.push_back(p.addend);
    if (needs_bounds) bounds.push_back(*p.max_distance);
  }
  if (needs_bounds) inst.distance_bounds = std::move(bounds);
  if (doc.strip) inst.strip = location::Strip{doc.strip->left, doc.strip->right};
  return inst;
}

InstanceDocument from_location(const LocationInstance& inst) {
  InstanceDocument doc;
  doc.mode = mode_to_string(inst.mode);
  const bool wants_bounds = inst.mode == Mode::full || inst.mode == Mode::distance;
  for (std::size_t j = 0; j < inst.points.size(); ++j) {
    PointRecord rec;
    rec.x = inst.points[j].x1;
    rec.y = inst.points[j].x2;
    rec.addend = inst.addends[j];
    if (wants_bounds) rec.max_distance = (*inst.distance_bounds)[j];
    doc.points.push_back(rec);
  }
  if (inst.mode == Mode::full || inst.mode == Mode::boundary) {
    doc.strip = StripRecord{inst.strip->s, inst.strip->t};
  }
  return doc;
}

SolutionDocument solution_document(const LocationInstance& inst,
                                   const location::LocationSolution& sol) {
  SolutionDocument doc;
  doc.feasible = true;
  doc.theta = sol.theta;
  doc.endpoints = {sol.endpoint0, sol.endpoint1};
  doc.polyline = sol.polyline;
  doc.alpha_breakpoints = sol.alpha_breakpoints;
  doc.derived_scalars = derive_scalars(inst);
  return doc;
}

SolutionDocument infeasible_document(const LocationInstance& inst,
                                     const location::FeasibilityTerm& term) {
  SolutionDocument doc;
  doc.feasible = false;
  doc.derived_scalars = derive_scalars(inst);
  doc.diagnostics = term;
  return doc;
}

std::string to_json(const SolutionDocument& doc) {
  json root;
  root["feasible"] = doc.feasible;
  const auto& sc = doc.derived_scalars;
  root["derived_scalars"] =
      json{{"p1", sc.p1},
           {"p2", sc.p2},
           {"q1", sc.q1},
           {"q2", sc.q2},
           {"g1", scalar_or_null(sc.g1)},
           {"g2", scalar_or_null(sc.g2)},
           {"h1", scalar_or_null(sc.h1)},
           {"h2", scalar_or_null(sc.h2)}};
  if (doc.feasible) {
    root["theta"] = doc.theta;
    json endpoints = json::array();
    for (const PlanePoint& p : doc.endpoints) endpoints.push_back(point_to_json(p));
    root["endpoints"] = endpoints;
    json polyline = json::array();
    for (const PlanePoint& p : doc.polyline) polyline.push_back(point_to_json(p));
    root["polyline"] = polyline;
    root["alpha_breakpoints"] = doc.alpha_breakpoints;
  }
  if (doc.diagnostics) {
    root["diagnostics"] =
        json{{"term", doc.diagnostics->label}, {"value", doc.diagnostics->value}};
  }
  return root.dump(2);
}

std::string to_text(const SolutionDocument& doc) {
  std::ostringstream out;
  const auto& sc = doc.derived_scalars;
  if (doc.feasible) {
    out << "status: optimal\n";
    out << "theta: " << fmt_num(doc.theta) << "\n";
    out << "endpoints:";
    for (const PlanePoint& p : doc.endpoints) out << ' ' << point_text(p);
    out << "\n";
    out << "alpha breakpoints:";
    if (doc.alpha_breakpoints.empty()) {
      out << " none";
    } else {
      for (double a : doc.alpha_breakpoints) out << ' ' << fmt_num(a);
    }
    out << "\n";
    out << "polyline:";
    for (const PlanePoint& p : doc.polyline) out << ' ' << point_text(p);
    out << "\n";
  } else {
    out << "status: infeasible\n";
    if (doc.diagnostics) {
      out << "violated term: " << doc.diagnostics->label << " = "
          << fmt_num(doc.diagnostics->value) << "\n";
    }
  }
  out << "scalars: p1=" << fmt_num(sc.p1) << " p2=" << fmt_num(sc.p2)
      << " q1=" << fmt_num(sc.q1) << " q2=" << fmt_num(sc.q2);
  if (std::isfinite(sc.g1)) {
    out << " g1=" << fmt_num(sc.g1) << " g2=" << fmt_num(sc.g2)
        << " h1=" << fmt_num(sc.h1) << " h2=" << fmt_num(sc.h2);
  }
  out << "\n";
  return out.str();
}

std::string to_text(const oracle::VerificationReport& report) {
  std::ostringstream out;
  out << "theta closed form: " << fmt_num(report.theta_closed_form) << "\n";
  out << "theta grid: " << fmt_num(report.theta_grid) << "\n";
  out << "max constraint violation: " << fmt_num(report.max_constraint_violation)
      << "\n";
  out << "max objective gap on solution set: "
      << fmt_num(report.max_objective_gap_on_solution_set) << "\n";
  out << "counterexamples:";
  if (report.counterexamples.empty()) {
    out << " none";
  } else {
    std::size_t shown = 0;
    for (const PlanePoint& p : report.counterexamples) {
      if (++shown > 8) {
        out << " ... (" << report.counterexamples.size() << " total)";
        break;
      }
      out << ' ' << point_text(p);
    }
  }
  out << "\n";
  out << "verdict: " << (report.verdict == oracle::Verdict::pass ? "pass" : "fail")
      << "\n";
  return out.str();
}

int cmd_solve(const std::string& instance_path, OutputFormat format,
              const std::optional<std::string>& svg_path, std::ostream& out,
              std::ostream& err) {
  try {
    const InstanceDocument doc = parse_instance(read_file(instance_path));
    const LocationInstance inst = to_location(doc);
    location::LocationSolution sol;
    try {
      sol = location::solve(inst);
    } catch (const Infeasible& e) {
      const SolutionDocument report =
          infeasible_document(inst, {e.term_label, e.term_value});
      out << (format == OutputFormat::json ? to_json(report) : to_text(report)) << "\n";
      err << "infeasible: " << e.what() << "\n";
      return 2;
    }
    const SolutionDocument report = solution_document(inst, sol);
    out << (format == OutputFormat::json ? to_json(report) : to_text(report)) << "\n";
    if (svg_path) {
      std::ofstream svg(*svg_path, std::ios::binary);
      if (!svg) {
        err << "error: cannot write SVG to " << *svg_path << "\n";
        return 1;
      }
      svg << render_svg(inst, sol);
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_verify(const std::string& instance_path, double step, double tol,
               std::ostream& out, std::ostream& err, double fault_offset) {
  try {
    if (!(step > 0.0)) throw ValidationError("step must be positive");
    if (!(tol >= 0.0)) throw ValidationError("tol must be nonnegative");
    const InstanceDocument doc = parse_instance(read_file(instance_path));
    const LocationInstance inst = to_location(doc);
    location::LocationSolution sol;
    try {
      sol = location::solve(inst);
    } catch (const Infeasible& e) {
      err << "infeasible: " << e.what() << "\n";
      return 2;
    }
    if (fault_offset != 0.0) {
      sol.theta += fault_offset;
      err << "note: claimed optimum perturbed by " << fmt_num(fault_offset)
          << " for a verifier self-test\n";
    }
    const oracle::GridSpec grid = oracle::auto_grid(inst, step);
    if (grid.coarsened) {
      err << "warning: grid step widened to " << fmt_num(grid.step)
          << " to stay within the evaluation cap\n";
    }
    const oracle::VerificationReport report =
        oracle::verify_solution(inst, sol, tol, grid);
    out << to_text(report);
    return report.verdict == oracle::Verdict::pass ? 0 : 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_cctv(const std::string& cameras_path, double cable_length,
             const std::optional<StripRecord>& strip, std::ostream& out,
             std::ostream& err) {
  try {
    const std::string text = read_file(cameras_path);
    std::vector<location::Camera> cameras;
    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream fields(line);
      location::Camera cam;
      if (!(fields >> cam.x1)) continue;  // blank or comment-only line
      if (!(fields >> cam.x2 >> cam.height)) {
        throw ParseError("camera file line " + std::to_string(lineno) +
                         ": expected \"x y height\"");
      }
      double extra;
      if (fields >> extra) {
        throw ParseError("camera file line " + std::to_string(lineno) +
                         ": trailing data after \"x y height\"");
      }
      cameras.push_back(cam);
    }
    std::optional<location::Strip> strip_arg;
    if (strip) {
      if (strip->left > strip->right) {
        throw ValidationError("strip requires left <= right");
      }
      strip_arg = location::Strip{strip->left, strip->right};
    }
    const LocationInstance inst = cctv_instance(cameras, cable_length, strip_arg);
    out << serialize_instance(from_location(inst)) << "\n";
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tropt::io
