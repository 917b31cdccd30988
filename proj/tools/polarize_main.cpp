// polarize: convert monomial-form polynomial / rational curves and
// surfaces into Bezier control nets over arbitrary affine frames.

#include "polarize/netio.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace {

using polarize::JobSpec;

void add_common_flags(CLI::App* cmd, JobSpec& spec, std::string& format, std::string& bidegree) {
  cmd->add_option("--coord", spec.coords,
                  "Coordinate expression (repeat once per coordinate), e.g. \"4t(1-t^2)^2\"")
      ->required();
  cmd->add_option("--denom", spec.denom, "Shared denominator expression (default: 1)");
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "paper", "obj"}))
      ->capture_default_str();
  cmd->add_option("--name", spec.paper_name, "Listing name used by --format paper")
      ->capture_default_str();
  cmd->add_option("--samples", spec.obj.samples, "Samples per axis for --format obj")
      ->capture_default_str();
  cmd->add_option("--precision", spec.obj.precision,
                  "Significant decimal digits for --format obj")
      ->capture_default_str();
  cmd->add_flag("--skip-zero-weight", spec.obj.skip_zero_weight,
                "Skip obj samples whose weight vanishes instead of failing");
  cmd->add_option("--drop-coord", spec.drop_coords,
                  "Drop this 0-based affine coordinate (repeatable); weights are kept");
  cmd->add_flag("--homogeneous", spec.homogeneous,
                "Emit raw (numerator, weight) points without dividing by the weight");
  cmd->add_flag("--verify", spec.verify,
                "Cross-check every control point against the defining-sum oracle "
                "(size-gated by POLARIZE_MAX_ORACLE)");
  if (cmd->get_name() == "rect") {
    cmd->add_option("--bidegree", bidegree, "Bidegree \"p,q\" (default: inferred from the map)");
  } else {
    cmd->add_option("--degree", spec.degree, "Degree m (default: inferred from the map)");
  }
}

int parse_format(const std::string& text, JobSpec& spec) {
  if (text == "json") {
    spec.format = JobSpec::Format::json;
  } else if (text == "paper") {
    spec.format = JobSpec::Format::paper;
  } else {
    spec.format = JobSpec::Format::obj;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Computes Bezier control points / nets of polynomial and rational maps\n"
      "given in monomial form, via scaled polar-value recurrences in exact\n"
      "rational arithmetic.\n\n"
      "Exit status: 0 ok, 2 parse error, 3 degree/frame/parameter error,\n"
      "4 zero weight, 5 verification mismatch."};
  app.require_subcommand(1);

  JobSpec curve_spec, rect_spec, tri_spec;
  curve_spec.kind = JobSpec::Kind::curve;
  rect_spec.kind = JobSpec::Kind::rect;
  tri_spec.kind = JobSpec::Kind::tri;
  std::string curve_format = "json", rect_format = "json", tri_format = "json";
  std::string rect_bidegree;
  std::string unused;

  CLI::App* curve = app.add_subcommand("curve", "Control polygon of a curve x(t), y(t), ...");
  add_common_flags(curve, curve_spec, curve_format, unused);
  curve->add_option("--frame", curve_spec.frame, "Affine frame \"r,s\"")->capture_default_str();

  CLI::App* rect = app.add_subcommand(
      "rect", "Rectangular control net of a bipolynomial patch x(u,v), ...");
  add_common_flags(rect, rect_spec, rect_format, rect_bidegree);
  rect->add_option("--frame-u", rect_spec.frame_u, "u-line frame \"r,s\"")->capture_default_str();
  rect->add_option("--frame-v", rect_spec.frame_v, "v-line frame \"r,s\"")->capture_default_str();

  CLI::App* tri = app.add_subcommand(
      "tri", "Triangular control net of a total-degree patch x(u,v), ...");
  add_common_flags(tri, tri_spec, tri_format, unused);
  tri->add_option("--tri-frame", tri_spec.tri_frame, "Plane frame \"(a,b);(c,d);(e,f)\"")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return polarize::kExitParse;
  }

  JobSpec* spec = nullptr;
  std::string format;
  if (curve->parsed()) {
    spec = &curve_spec;
    format = curve_format;
  } else if (rect->parsed()) {
    spec = &rect_spec;
    format = rect_format;
  } else {
    spec = &tri_spec;
    format = tri_format;
  }
  parse_format(format, *spec);
  if (spec->kind == JobSpec::Kind::rect && !rect_bidegree.empty()) {
    const auto comma = rect_bidegree.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("missing comma");
      spec->bidegree = {std::stoi(rect_bidegree.substr(0, comma)),
                        std::stoi(rect_bidegree.substr(comma + 1))};
    } catch (const std::exception&) {
      std::cerr << "error: --bidegree: expected \"p,q\", got \"" << rect_bidegree << "\"\n";
      return polarize::kExitParse;
    }
  }

  return polarize::run_job(*spec, std::cout, std::cerr);
}
