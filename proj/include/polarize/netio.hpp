#pragma once

#include "polarize/nets.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polarize {

// Process exit statuses shared by run_job and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;        // expression / rational / flag-value syntax
inline constexpr int kExitDegreeFrame = 3;  // degree bounds, frames, job parameters
inline constexpr int kExitZeroWeight = 4;   // vanishing weight in affine mode
inline constexpr int kExitVerify = 5;       // oracle cross-check mismatch

/// Canonical JSON forms (rational values as exact "n/d" strings).
nlohmann::ordered_json net_to_json(const CurveNet& net);
nlohmann::ordered_json net_to_json(const RectNet& net);
nlohmann::ordered_json net_to_json(const TriNet& net);

CurveNet curve_net_from_json(const nlohmann::ordered_json& j);
RectNet rect_net_from_json(const nlohmann::ordered_json& j);
TriNet tri_net_from_json(const nlohmann::ordered_json& j);

/// One-string canonical rendering (2-space indent, trailing newline).
std::string json_text(const nlohmann::ordered_json& j);

/// Nested-brace listing "name = {{...}, ...};" with the weight as the
/// last entry of each tuple.
std::string net_to_paper(const CurveNet& net, const std::string& name);
std::string net_to_paper(const RectNet& net, const std::string& name);
std::string net_to_paper(const TriNet& net, const std::string& name);

/// Decimal rendering of an exact rational (significant digits); the only
/// lossy conversion in the library.
std::string to_decimal(const Ratio& r, int digits);

struct ObjOptions {
  int samples = 16;      // per axis; >= 2
  int precision = 12;    // significant decimal digits
  bool skip_zero_weight = false;
};

/// Tessellates the net into Wavefront OBJ text by de Casteljau sampling
/// on a uniform grid of the frame (barycentric grid for triangular nets).
/// Nets must carry 2 or 3 affine coordinates. Zero-weight samples throw
/// ZeroWeightError unless options.skip_zero_weight, in which case the
/// vertex and its faces are dropped and a warning goes to diag.
std::string net_to_obj(const CurveNet& net, const ObjOptions& options, std::ostream& diag);
std::string net_to_obj(const RectNet& net, const ObjOptions& options, std::ostream& diag);
std::string net_to_obj(const TriNet& net, const ObjOptions& options, std::ostream& diag);

/// A complete CLI job: expressions in, one net out.
struct JobSpec {
  enum class Kind { curve, rect, tri };
  enum class Format { json, paper, obj };

  Kind kind = Kind::curve;
  std::vector<std::string> coords;       // coordinate expressions (>= 1)
  std::string denom;                     // empty: polynomial map (denominator 1)
  std::optional<int> degree;             // curve / tri; inferred when absent
  std::optional<std::pair<int, int>> bidegree;  // rect; inferred when absent
  std::string frame = "0,1";             // curve: "r,s"
  std::string frame_u = "0,1";           // rect
  std::string frame_v = "0,1";
  std::string tri_frame = "(1,0);(0,1);(0,0)";
  Format format = Format::json;
  std::string paper_name = "net";
  ObjOptions obj;
  std::vector<int> drop_coords;          // 0-based affine coordinate indices
  bool homogeneous = false;
  bool verify = false;                   // oracle cross-check, gated by POLARIZE_MAX_ORACLE
};

/// Runs the job, writing the formatted net to out only on success and
/// diagnostics to diag. Returns one of the kExit* statuses.
int run_job(const JobSpec& spec, std::ostream& out, std::ostream& diag);

}  // namespace polarize
