#include "polarize/netio.hpp"

#include "polarize/expr.hpp"
#include "polarize/oracle.hpp"
#include "polarize/polar_curve.hpp"
#include "polarize/polar_rect.hpp"
#include "polarize/polar_tri.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace polarize {

namespace {

nlohmann::ordered_json ratio_array(const std::vector<Ratio>& values) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Ratio& v : values) arr.push_back(v.str());
  return arr;
}

nlohmann::ordered_json frame1_json(const AffineFrame1& f) {
  return nlohmann::ordered_json::array({f.r.str(), f.s.str()});
}

nlohmann::ordered_json point_json(const WeightedPoint& pt, bool homogeneous,
                                  std::vector<int> index) {
  nlohmann::ordered_json j;
  j["index"] = index;
  j[homogeneous ? "coords" : "affine"] = ratio_array(pt.coords);
  j["weight"] = pt.weight.str();
  return j;
}

WeightedPoint point_from_json(const nlohmann::ordered_json& j, bool homogeneous) {
  WeightedPoint pt;
  for (const auto& c : j.at(homogeneous ? "coords" : "affine")) {
    pt.coords.push_back(Ratio::parse(c.get<std::string>()));
  }
  pt.weight = Ratio::parse(j.at("weight").get<std::string>());
  return pt;
}

AffineFrame1 frame1_from_json(const nlohmann::ordered_json& j) {
  return {Ratio::parse(j.at(0).get<std::string>()), Ratio::parse(j.at(1).get<std::string>())};
}

void check_kind(const nlohmann::ordered_json& j, const char* expected) {
  if (j.at("kind").get<std::string>() != expected) {
    throw std::invalid_argument(std::string("expected kind \"") + expected + "\"");
  }
}

}  // namespace

nlohmann::ordered_json net_to_json(const CurveNet& net) {
  nlohmann::ordered_json j;
  j["kind"] = "curve";
  j["degree"] = net.degree;
  j["frame"] = frame1_json(net.frame);
  if (net.homogeneous) j["homogeneous"] = true;
  auto points = nlohmann::ordered_json::array();
  for (int i = 0; i < static_cast<int>(net.points.size()); ++i) {
    points.push_back(point_json(net.points[i], net.homogeneous, {i}));
  }
  j["points"] = std::move(points);
  return j;
}

nlohmann::ordered_json net_to_json(const RectNet& net) {
  nlohmann::ordered_json j;
  j["kind"] = "rect";
  j["bidegree"] = {net.degree_u, net.degree_v};
  j["frame_u"] = frame1_json(net.frames.u);
  j["frame_v"] = frame1_json(net.frames.v);
  if (net.homogeneous) j["homogeneous"] = true;
  auto points = nlohmann::ordered_json::array();
  for (int i = 0; i <= net.degree_u; ++i) {
    for (int jj = 0; jj <= net.degree_v; ++jj) {
      points.push_back(point_json(net.at(i, jj), net.homogeneous, {i, jj}));
    }
  }
  j["points"] = std::move(points);
  return j;
}

nlohmann::ordered_json net_to_json(const TriNet& net) {
  nlohmann::ordered_json j;
  j["kind"] = "tri";
  j["degree"] = net.degree;
  j["frame"] = nlohmann::ordered_json::array(
      {nlohmann::ordered_json::array({net.frame.r.u.str(), net.frame.r.v.str()}),
       nlohmann::ordered_json::array({net.frame.s.u.str(), net.frame.s.v.str()}),
       nlohmann::ordered_json::array({net.frame.t.u.str(), net.frame.t.v.str()})});
  if (net.homogeneous) j["homogeneous"] = true;
  auto points = nlohmann::ordered_json::array();
  for (int i = 0; i <= net.degree; ++i) {
    for (int jj = 0; i + jj <= net.degree; ++jj) {
      const int k = net.degree - i - jj;
      points.push_back(point_json(net.at(i, jj, k), net.homogeneous, {i, jj, k}));
    }
  }
  j["points"] = std::move(points);
  return j;
}

CurveNet curve_net_from_json(const nlohmann::ordered_json& j) {
  check_kind(j, "curve");
  CurveNet net;
  net.degree = j.at("degree").get<int>();
  net.frame = frame1_from_json(j.at("frame"));
  net.homogeneous = j.value("homogeneous", false);
  for (const auto& pj : j.at("points")) net.points.push_back(point_from_json(pj, net.homogeneous));
  if (static_cast<int>(net.points.size()) != net.degree + 1) {
    throw std::invalid_argument("curve net: wrong point count");
  }
  return net;
}

RectNet rect_net_from_json(const nlohmann::ordered_json& j) {
  check_kind(j, "rect");
  RectNet net;
  net.degree_u = j.at("bidegree").at(0).get<int>();
  net.degree_v = j.at("bidegree").at(1).get<int>();
  net.frames.u = frame1_from_json(j.at("frame_u"));
  net.frames.v = frame1_from_json(j.at("frame_v"));
  net.homogeneous = j.value("homogeneous", false);
  for (const auto& pj : j.at("points")) net.points.push_back(point_from_json(pj, net.homogeneous));
  if (net.points.size() != static_cast<std::size_t>(net.degree_u + 1) * (net.degree_v + 1)) {
    throw std::invalid_argument("rect net: wrong point count");
  }
  return net;
}

TriNet tri_net_from_json(const nlohmann::ordered_json& j) {
  check_kind(j, "tri");
  TriNet net;
  net.degree = j.at("degree").get<int>();
  const auto& f = j.at("frame");
  auto pt = [](const nlohmann::ordered_json& p) {
    return Point2{Ratio::parse(p.at(0).get<std::string>()),
                  Ratio::parse(p.at(1).get<std::string>())};
  };
  net.frame = AffineFrame2(pt(f.at(0)), pt(f.at(1)), pt(f.at(2)));
  net.homogeneous = j.value("homogeneous", false);
  for (const auto& pj : j.at("points")) net.points.push_back(point_from_json(pj, net.homogeneous));
  if (net.points.size() != static_cast<std::size_t>(net.degree + 1) * (net.degree + 2) / 2) {
    throw std::invalid_argument("tri net: wrong point count");
  }
  return net;
}

std::string json_text(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

namespace {

std::string paper_entry(const WeightedPoint& pt) {
  std::string out = "{";
  for (const Ratio& c : pt.coords) {
    out += c.str();
    out += ", ";
  }
  out += pt.weight.str();
  out += "}";
  return out;
}

std::string paper_listing(const std::string& name, const std::vector<WeightedPoint>& points) {
  std::string body = name + " = {";
  std::size_t column = body.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::string entry = paper_entry(points[i]);
    if (i + 1 < points.size()) entry += ",";
    if (column + entry.size() > 76 && column > 3) {
      body += "\n   ";
      column = 3;
    }
    body += entry;
    column += entry.size();
    if (i + 1 < points.size()) {
      body += " ";
      ++column;
    }
  }
  body += "};\n";
  return body;
}

}  // namespace

std::string net_to_paper(const CurveNet& net, const std::string& name) {
  return paper_listing(name, net.points);
}
std::string net_to_paper(const RectNet& net, const std::string& name) {
  return paper_listing(name, net.points);
}
std::string net_to_paper(const TriNet& net, const std::string& name) {
  return paper_listing(name, net.points);
}

std::string to_decimal(const Ratio& r, int digits) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  Float x(r.numerator());
  x /= Float(r.denominator());
  std::ostringstream os;
  os << std::setprecision(std::max(1, digits)) << x;
  return os.str();
}

namespace {

// Accumulates OBJ vertices/faces, dropping faces that touch skipped samples.
class ObjBuilder {
public:
  ObjBuilder(const ObjOptions& options, std::ostream& diag) : options_(options), diag_(diag) {}

  // Returns the 1-based OBJ index, or 0 when the sample was skipped.
  template <class Eval>
  int add_vertex(const Eval& eval, const std::string& where) {
    std::vector<Ratio> value;
    try {
      value = eval();
    } catch (const ZeroWeightError& e) {
      if (!options_.skip_zero_weight) throw;
      diag_ << "warning: skipping sample with " << e.what() << "\n";
      return 0;
    }
    if (value.size() != 2 && value.size() != 3) {
      throw std::invalid_argument("obj output needs 2 or 3 coordinates, got " +
                                  std::to_string(value.size()) + " at " + where);
    }
    vertices_ << "v";
    for (const Ratio& c : value) vertices_ << " " << to_decimal(c, options_.precision);
    if (value.size() == 2) vertices_ << " 0";
    vertices_ << "\n";
    return ++count_;
  }

  void add_face(std::initializer_list<int> idx) {
    for (int i : idx) {
      if (i == 0) return;  // touches a skipped vertex
    }
    faces_ << "f";
    for (int i : idx) faces_ << " " << i;
    faces_ << "\n";
  }

  void add_polyline(const std::vector<int>& idx) {
    // emit maximal runs of valid vertices
    std::vector<int> run;
    auto flush = [&] {
      if (run.size() >= 2) {
        faces_ << "l";
        for (int i : run) faces_ << " " << i;
        faces_ << "\n";
      }
      run.clear();
    };
    for (int i : idx) {
      if (i == 0) {
        flush();
      } else {
        run.push_back(i);
      }
    }
    flush();
  }

  std::string str() const { return vertices_.str() + faces_.str(); }

private:
  ObjOptions options_;
  std::ostream& diag_;
  std::ostringstream vertices_;
  std::ostringstream faces_;
  int count_ = 0;
};

Ratio grid_param(const Ratio& a, const Ratio& b, int step, int last) {
  return a + (b - a) * Ratio(BigInt(step), BigInt(last));
}

void check_samples(int samples) {
  if (samples < 2) {
    throw std::invalid_argument("obj output needs samples >= 2, got " + std::to_string(samples));
  }
}

}  // namespace

std::string net_to_obj(const CurveNet& net, const ObjOptions& options, std::ostream& diag) {
  check_samples(options.samples);
  ObjBuilder builder(options, diag);
  std::vector<int> line;
  for (int s = 0; s < options.samples; ++s) {
    const Ratio t = grid_param(net.frame.r, net.frame.s, s, options.samples - 1);
    line.push_back(builder.add_vertex([&] { return decasteljau_curve(net, t); },
                                      "t = " + t.str()));
  }
  builder.add_polyline(line);
  return builder.str();
}

std::string net_to_obj(const RectNet& net, const ObjOptions& options, std::ostream& diag) {
  check_samples(options.samples);
  const int n = options.samples;
  ObjBuilder builder(options, diag);
  std::vector<std::vector<int>> grid(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    const Ratio u = grid_param(net.frames.u.r, net.frames.u.s, a, n - 1);
    for (int b = 0; b < n; ++b) {
      const Ratio v = grid_param(net.frames.v.r, net.frames.v.s, b, n - 1);
      grid[a][b] = builder.add_vertex([&] { return decasteljau_rect(net, u, v); },
                                      "(u, v) = (" + u.str() + ", " + v.str() + ")");
    }
  }
  for (int a = 0; a + 1 < n; ++a) {
    for (int b = 0; b + 1 < n; ++b) {
      builder.add_face({grid[a][b], grid[a + 1][b], grid[a + 1][b + 1], grid[a][b + 1]});
    }
  }
  return builder.str();
}

std::string net_to_obj(const TriNet& net, const ObjOptions& options, std::ostream& diag) {
  check_samples(options.samples);
  const int n = options.samples;
  ObjBuilder builder(options, diag);
  // barycentric grid: lambda = (a, b, n-1-a-b) / (n-1) against (r, s, t)
  std::vector<std::vector<int>> grid(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; a + b < n; ++b) {
      const Ratio la(BigInt(a), BigInt(n - 1));
      const Ratio lb(BigInt(b), BigInt(n - 1));
      const Ratio lt = Ratio(1) - la - lb;
      const Point2 uv{la * net.frame.r.u + lb * net.frame.s.u + lt * net.frame.t.u,
                      la * net.frame.r.v + lb * net.frame.s.v + lt * net.frame.t.v};
      grid[a][b] = builder.add_vertex([&] { return decasteljau_tri(net, uv); },
                                      "(u, v) = (" + uv.u.str() + ", " + uv.v.str() + ")");
    }
  }
  for (int a = 0; a + 1 < n; ++a) {
    for (int b = 0; a + b + 1 < n; ++b) {
      builder.add_face({grid[a][b], grid[a + 1][b], grid[a][b + 1]});
      if (a + b + 2 < n) {
        builder.add_face({grid[a + 1][b], grid[a + 1][b + 1], grid[a][b + 1]});
      }
    }
  }
  return builder.str();
}

namespace {

// --- job running ---------------------------------------------------------

struct JobError {
  int status;
  std::string message;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

AffineFrame1 parse_frame1(const std::string& text, const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw JobError{kExitParse, what + ": expected \"r,s\", got \"" + text + "\""};
  Ratio r, s;
  try {
    r = Ratio::parse(parts[0]);
    s = Ratio::parse(parts[1]);
  } catch (const std::invalid_argument& e) {
    throw JobError{kExitParse, what + ": " + e.what()};
  }
  try {
    return AffineFrame1(r, s);  // degenerate frames are a frame error, not a parse error
  } catch (const std::invalid_argument& e) {
    throw JobError{kExitDegreeFrame, what + ": " + e.what()};
  }
}

Point2 parse_point2(std::string text, const std::string& what) {
  // strip enclosing parentheses and blanks
  std::erase_if(text, [](char c) { return c == ' ' || c == '\t'; });
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw JobError{kExitParse, what + ": expected \"(u,v)\", got \"" + text + "\""};
  }
  const auto parts = split(text.substr(1, text.size() - 2), ',');
  // Two components are Cartesian. Three are barycentric w.r.t. the
  // standard frame (they must sum to 1) and reduce to (first, second).
  if (parts.size() != 2 && parts.size() != 3) {
    throw JobError{kExitParse, what + ": expected \"(u,v)\" or \"(a,b,c)\", got \"" + text + "\""};
  }
  try {
    const Ratio u = Ratio::parse(parts[0]);
    const Ratio v = Ratio::parse(parts[1]);
    if (parts.size() == 3) {
      if (u + v + Ratio::parse(parts[2]) != Ratio(1)) {
        throw JobError{kExitDegreeFrame,
                       what + ": barycentric components of \"" + text + "\" do not sum to 1"};
      }
    }
    return Point2{u, v};
  } catch (const std::invalid_argument& e) {
    throw JobError{kExitParse, what + ": " + e.what()};
  }
}

AffineFrame2 parse_frame2(const std::string& text) {
  const auto parts = split(text, ';');
  if (parts.size() != 3) {
    throw JobError{kExitParse, "tri frame: expected \"(a,b);(c,d);(e,f)\", got \"" + text + "\""};
  }
  try {
    return AffineFrame2(parse_point2(parts[0], "tri frame point r"),
                        parse_point2(parts[1], "tri frame point s"),
                        parse_point2(parts[2], "tri frame point t"));
  } catch (const std::invalid_argument& e) {
    throw JobError{kExitDegreeFrame, std::string("tri frame: ") + e.what()};
  }
}

template <class ParseFn>
auto parse_coords(const JobSpec& spec, const ParseFn& parse) {
  using P = decltype(parse(std::string_view{}));
  std::vector<P> numerators;
  for (std::size_t i = 0; i < spec.coords.size(); ++i) {
    try {
      numerators.push_back(parse(spec.coords[i]));
    } catch (const ParseError& e) {
      throw JobError{kExitParse, "coordinate " + std::to_string(i) + ": " + e.what()};
    }
  }
  P den = P::constant(1);
  if (!spec.denom.empty()) {
    try {
      den = parse(spec.denom);
    } catch (const ParseError& e) {
      throw JobError{kExitParse, std::string("denominator: ") + e.what()};
    }
  }
  return RationalMap<P>(std::move(numerators), std::move(den));
}

int oracle_gate(int hard_limit) {
  const char* env = std::getenv("POLARIZE_MAX_ORACLE");
  if (env == nullptr || *env == '\0') return hard_limit;
  try {
    return std::min(std::stoi(env), hard_limit);
  } catch (const std::exception&) {
    throw JobError{kExitParse, std::string("POLARIZE_MAX_ORACLE: not an integer: ") + env};
  }
}

// Recomputes every control point from the defining-sum oracle and
// compares exactly.
template <class Map, class NaivePolar>
void verify_point(const Map& map, const NaivePolar& naive, const WeightedPoint& got,
                  const LiftOptions& options, const std::string& where) {
  std::vector<Ratio> values;
  for (const auto& num : map.numerators()) values.push_back(naive(num));
  Ratio weight = naive(map.denominator());
  const WeightedPoint expected =
      lift_point(std::move(values), std::move(weight), options, where);
  if (!(expected == got)) {
    throw JobError{kExitVerify, "verification mismatch at " + where};
  }
}

Ratio naive_poly1(const Poly1& p, const std::vector<Ratio>& args) {
  Ratio acc = 0;
  for (const auto& [k, a] : p.terms()) acc += a * naive_polar_curve(k, args);
  return acc;
}

Ratio naive_poly2_rect(const Poly2& p, const std::vector<Ratio>& u_args,
                       const std::vector<Ratio>& v_args) {
  Ratio acc = 0;
  for (const auto& [exp, a] : p.terms()) acc += a * naive_polar_rect(exp.u, exp.v, u_args, v_args);
  return acc;
}

Ratio naive_poly2_tri(const Poly2& p, const std::vector<Point2>& args) {
  Ratio acc = 0;
  for (const auto& [exp, a] : p.terms()) acc += a * naive_polar_tri(exp.u, exp.v, args);
  return acc;
}

int resolve_degree(const std::optional<int>& requested, int inferred, const std::string& what) {
  if (!requested) return inferred;
  if (*requested < inferred) {
    throw JobError{kExitDegreeFrame, what + ": requested " + std::to_string(*requested) +
                                         " is below the inferred " + std::to_string(inferred)};
  }
  return *requested;
}

template <class Net>
int emit(const Net& net, const JobSpec& spec, std::ostream& out, std::ostream& diag) {
  std::string text;
  switch (spec.format) {
    case JobSpec::Format::json:
      text = json_text(net_to_json(net));
      break;
    case JobSpec::Format::paper:
      text = net_to_paper(net, spec.paper_name);
      break;
    case JobSpec::Format::obj:
      text = net_to_obj(net, spec.obj, diag);
      break;
  }
  out << text;
  return kExitOk;
}

int run_curve(const JobSpec& spec, std::ostream& out, std::ostream& diag) {
  const CurveMap map = parse_coords(spec, [](std::string_view s) { return parse_poly1(s); });
  const AffineFrame1 frame = parse_frame1(spec.frame, "frame");
  const int m = resolve_degree(spec.degree, curve_degree(map), "degree");
  const LiftOptions options{spec.homogeneous};
  const CurveNet net = curve_control_points(map, m, frame, options);
  if (spec.verify) {
    if (m > oracle_gate(kNaiveCurveLimit)) {
      throw JobError{kExitDegreeFrame,
                     "verify: degree " + std::to_string(m) + " exceeds the oracle gate"};
    }
    for (int j = 0; j <= m; ++j) {
      const auto args = control_args_curve(frame, m, j);
      verify_point(map, [&](const Poly1& p) { return naive_poly1(p, args); }, net.at(j), options,
                   "control point b_" + std::to_string(j));
    }
    diag << "verify: " << m + 1 << " control points match the defining-sum oracle\n";
  }
  return emit(project_coordinates(net, keep_after_drop(dimension(net), spec.drop_coords)), spec,
              out, diag);
}

int run_rect(const JobSpec& spec, std::ostream& out, std::ostream& diag) {
  const SurfaceMap map = parse_coords(spec, [](std::string_view s) { return parse_poly2(s); });
  const FramePair frames{parse_frame1(spec.frame_u, "frame-u"), parse_frame1(spec.frame_v, "frame-v")};
  const auto inferred = bidegree(map);
  int p = inferred.first;
  int q = inferred.second;
  if (spec.bidegree) {
    p = resolve_degree(std::optional<int>(spec.bidegree->first), inferred.first, "bidegree p");
    q = resolve_degree(std::optional<int>(spec.bidegree->second), inferred.second, "bidegree q");
  }
  const LiftOptions options{spec.homogeneous};
  const RectNet net = rect_control_net(map, p, q, frames, options);
  if (spec.verify) {
    if (p + q > oracle_gate(kNaiveRectLimit)) {
      throw JobError{kExitDegreeFrame,
                     "verify: p + q = " + std::to_string(p + q) + " exceeds the oracle gate"};
    }
    for (int i = 0; i <= p; ++i) {
      for (int j = 0; j <= q; ++j) {
        const auto u_args = control_args_rect_u(frames, p, i);
        const auto v_args = control_args_rect_v(frames, q, j);
        verify_point(map, [&](const Poly2& f) { return naive_poly2_rect(f, u_args, v_args); },
                     net.at(i, j), options,
                     "control point b_{" + std::to_string(i) + "," + std::to_string(j) + "}");
      }
    }
    diag << "verify: " << (p + 1) * (q + 1) << " control points match the defining-sum oracle\n";
  }
  return emit(project_coordinates(net, keep_after_drop(dimension(net), spec.drop_coords)), spec,
              out, diag);
}

int run_tri(const JobSpec& spec, std::ostream& out, std::ostream& diag) {
  const SurfaceMap map = parse_coords(spec, [](std::string_view s) { return parse_poly2(s); });
  const AffineFrame2 frame = parse_frame2(spec.tri_frame);
  const int m = resolve_degree(spec.degree, total_degree(map), "degree");
  const LiftOptions options{spec.homogeneous};
  const TriNet net = tri_control_net(map, m, frame, options);
  if (spec.verify) {
    if (m > oracle_gate(kNaiveTriLimit)) {
      throw JobError{kExitDegreeFrame,
                     "verify: degree " + std::to_string(m) + " exceeds the oracle gate"};
    }
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; i + j <= m; ++j) {
        const int k = m - i - j;
        const auto args = control_args_tri(frame, i, j, k);
        verify_point(map, [&](const Poly2& f) { return naive_poly2_tri(f, args); },
                     net.at(i, j, k), options,
                     "control point b_{" + std::to_string(i) + "," + std::to_string(j) + "," +
                         std::to_string(k) + "}");
      }
    }
    diag << "verify: " << net.points.size() << " control points match the defining-sum oracle\n";
  }
  return emit(project_coordinates(net, keep_after_drop(dimension(net), spec.drop_coords)), spec,
              out, diag);
}

}  // namespace

int run_job(const JobSpec& spec, std::ostream& out, std::ostream& diag) {
  std::ostringstream buffer;
  int status = kExitOk;
  try {
    if (spec.coords.empty()) {
      throw JobError{kExitParse, "no coordinate expressions given"};
    }
    switch (spec.kind) {
      case JobSpec::Kind::curve: status = run_curve(spec, buffer, diag); break;
      case JobSpec::Kind::rect: status = run_rect(spec, buffer, diag); break;
      case JobSpec::Kind::tri: status = run_tri(spec, buffer, diag); break;
    }
  } catch (const JobError& e) {
    diag << "error: " << e.message << "\n";
    return e.status;
  } catch (const ParseError& e) {
    diag << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ZeroWeightError& e) {
    diag << "error: " << e.what() << " (use --homogeneous to keep such nets)\n";
    return kExitZeroWeight;
  } catch (const std::invalid_argument& e) {
    diag << "error: " << e.what() << "\n";
    return kExitDegreeFrame;
  } catch (const std::domain_error& e) {
    diag << "error: " << e.what() << "\n";
    return kExitDegreeFrame;
  }
  // nothing reaches the sink unless the whole job succeeded
  out << buffer.str();
  return status;
}

}  // namespace polarize
