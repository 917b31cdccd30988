// Python bindings for the polarize core: exact rationals, polynomial
// parsing, control-point conversion, projection and the verification
// oracles.

#include "polarize/combinatorics.hpp"
#include "polarize/expr.hpp"
#include "polarize/lift.hpp"
#include "polarize/netio.hpp"
#include "polarize/oracle.hpp"
#include "polarize/polar_curve.hpp"
#include "polarize/polar_rect.hpp"
#include "polarize/polar_tri.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

namespace py = pybind11;
using namespace polarize;

namespace {

py::object to_py_int(const BigInt& n) {
  return py::module_::import("builtins").attr("int")(n.str());
}

LiftOptions options_for(bool homogeneous) {
  LiftOptions options;
  options.homogeneous = homogeneous;
  return options;
}

template <class Net>
void bind_net_common(py::class_<Net>& cls) {
  cls.def_readonly("homogeneous", &Net::homogeneous)
      .def_readonly("points", &Net::points)
      .def("to_json", [](const Net& net) { return json_text(net_to_json(net)); })
      .def("to_paper", [](const Net& net, const std::string& name) {
        return net_to_paper(net, name);
      }, py::arg("name") = "net")
      .def("to_obj", [](const Net& net, int samples, int precision, bool skip_zero_weight) {
        ObjOptions options;
        options.samples = samples;
        options.precision = precision;
        options.skip_zero_weight = skip_zero_weight;
        std::ostringstream diag;
        return net_to_obj(net, options, diag);
      }, py::arg("samples") = 16, py::arg("precision") = 12,
         py::arg("skip_zero_weight") = false);
}

}  // namespace

PYBIND11_MODULE(_polarize, m) {
  m.doc() = "Bezier control points and nets from monomial-form polynomial and "
            "rational maps, computed by scaled polar-value recurrences in exact "
            "rational arithmetic";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<ZeroWeightError>(m, "ZeroWeightError");

  py::class_<Ratio>(m, "Ratio")
      .def(py::init<long long>(), py::arg("value") = 0)
      .def(py::init([](long long num, long long den) {
        return Ratio(BigInt(num), BigInt(den));
      }), py::arg("numerator"), py::arg("denominator"))
      .def(py::init([](const std::string& text) { return Ratio::parse(text); }),
           py::arg("text"))
      .def_property_readonly("numerator", [](const Ratio& r) { return to_py_int(r.numerator()); })
      .def_property_readonly("denominator",
                             [](const Ratio& r) { return to_py_int(r.denominator()); })
      .def("is_zero", &Ratio::is_zero)
      .def("is_integer", &Ratio::is_integer)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__str__", &Ratio::str)
      .def("__repr__", [](const Ratio& r) { return "Ratio(\"" + r.str() + "\")"; })
      .def("__hash__", [](const Ratio& r) { return py::hash(py::str(r.str())); });
  py::implicitly_convertible<py::int_, Ratio>();
  py::implicitly_convertible<py::str, Ratio>();

  m.def("binomial", [](int n, int k) { return to_py_int(binomial(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("multinomial3", [](int mm, int h, int l) { return to_py_int(multinomial3(mm, h, l)); },
        py::arg("m"), py::arg("h"), py::arg("l"));

  py::class_<Poly1>(m, "Poly1")
      .def(py::init([](const std::string& src) { return parse_poly1(src); }), py::arg("text"))
      .def("eval", &Poly1::eval, py::arg("t"))
      .def("degree", &Poly1::degree)
      .def("coeff", &Poly1::coeff, py::arg("exponent"))
      .def("terms", [](const Poly1& p) {
        std::vector<std::pair<int, Ratio>> out(p.terms().begin(), p.terms().end());
        return out;
      })
      .def(py::self == py::self)
      .def("__str__", &Poly1::str)
      .def("__repr__", [](const Poly1& p) { return "Poly1(\"" + p.str() + "\")"; });

  py::class_<Poly2>(m, "Poly2")
      .def(py::init([](const std::string& src) { return parse_poly2(src); }), py::arg("text"))
      .def("eval", &Poly2::eval, py::arg("u"), py::arg("v"))
      .def("maxdeg_u", &Poly2::maxdeg_u)
      .def("maxdeg_v", &Poly2::maxdeg_v)
      .def("total_degree", &Poly2::total_degree)
      .def("coeff", [](const Poly2& p, int u_exp, int v_exp) { return p.coeff({u_exp, v_exp}); },
           py::arg("u_exp"), py::arg("v_exp"))
      .def("terms", [](const Poly2& p) {
        std::vector<std::tuple<int, int, Ratio>> out;
        for (const auto& [exp, c] : p.terms()) out.emplace_back(exp.u, exp.v, c);
        return out;
      })
      .def(py::self == py::self)
      .def("__str__", &Poly2::str)
      .def("__repr__", [](const Poly2& p) { return "Poly2(\"" + p.str() + "\")"; });

  m.def("parse_poly1", &parse_poly1, py::arg("text"));
  m.def("parse_poly2", &parse_poly2, py::arg("text"));

  py::class_<CurveMap>(m, "CurveMap")
      .def(py::init<std::vector<Poly1>, Poly1>(), py::arg("numerators"),
           py::arg("denominator") = Poly1::constant(1))
      .def_property_readonly("numerators", &CurveMap::numerators)
      .def_property_readonly("denominator", &CurveMap::denominator)
      .def("dimension", &CurveMap::dimension)
      .def("is_polynomial", &CurveMap::is_polynomial)
      .def("degree", [](const CurveMap& map) { return curve_degree(map); });

  py::class_<SurfaceMap>(m, "SurfaceMap")
      .def(py::init<std::vector<Poly2>, Poly2>(), py::arg("numerators"),
           py::arg("denominator") = Poly2::constant(1))
      .def_property_readonly("numerators", &SurfaceMap::numerators)
      .def_property_readonly("denominator", &SurfaceMap::denominator)
      .def("dimension", &SurfaceMap::dimension)
      .def("is_polynomial", &SurfaceMap::is_polynomial)
      .def("bidegree", [](const SurfaceMap& map) { return bidegree(map); })
      .def("total_degree", [](const SurfaceMap& map) { return total_degree(map); });

  py::class_<AffineFrame1>(m, "AffineFrame1")
      .def(py::init<Ratio, Ratio>(), py::arg("r") = Ratio(0), py::arg("s") = Ratio(1))
      .def_readonly("r", &AffineFrame1::r)
      .def_readonly("s", &AffineFrame1::s)
      .def("__repr__", [](const AffineFrame1& f) {
        return "AffineFrame1(" + f.r.str() + ", " + f.s.str() + ")";
      });

  py::class_<Point2>(m, "Point2")
      .def(py::init([](Ratio u, Ratio v) { return Point2{std::move(u), std::move(v)}; }),
           py::arg("u"), py::arg("v"))
      .def_readonly("u", &Point2::u)
      .def_readonly("v", &Point2::v)
      .def(py::self == py::self)
      .def("__repr__", [](const Point2& p) {
        return "Point2(" + p.u.str() + ", " + p.v.str() + ")";
      });

  py::class_<FramePair>(m, "FramePair")
      .def(py::init([](AffineFrame1 u, AffineFrame1 v) {
        return FramePair{std::move(u), std::move(v)};
      }), py::arg("u") = AffineFrame1(), py::arg("v") = AffineFrame1())
      .def_readonly("u", &FramePair::u)
      .def_readonly("v", &FramePair::v);

  py::class_<AffineFrame2>(m, "AffineFrame2")
      .def(py::init<Point2, Point2, Point2>(), py::arg("r") = Point2{1, 0},
           py::arg("s") = Point2{0, 1}, py::arg("t") = Point2{0, 0})
      .def_readonly("r", &AffineFrame2::r)
      .def_readonly("s", &AffineFrame2::s)
      .def_readonly("t", &AffineFrame2::t);

  py::class_<WeightedPoint>(m, "WeightedPoint")
      .def_readonly("coords", &WeightedPoint::coords)
      .def_readonly("weight", &WeightedPoint::weight)
      .def(py::self == py::self)
      .def("__repr__", [](const WeightedPoint& pt) {
        std::string out = "WeightedPoint([";
        for (std::size_t i = 0; i < pt.coords.size(); ++i) {
          if (i) out += ", ";
          out += pt.coords[i].str();
        }
        return out + "], " + pt.weight.str() + ")";
      });

  auto curve_net = py::class_<CurveNet>(m, "CurveNet");
  curve_net.def_readonly("degree", &CurveNet::degree)
      .def_readonly("frame", &CurveNet::frame)
      .def("at", &CurveNet::at, py::arg("j"), py::return_value_policy::reference_internal);
  bind_net_common(curve_net);

  auto rect_net = py::class_<RectNet>(m, "RectNet");
  rect_net.def_readonly("degree_u", &RectNet::degree_u)
      .def_readonly("degree_v", &RectNet::degree_v)
      .def_readonly("frames", &RectNet::frames)
      .def("at", &RectNet::at, py::arg("i"), py::arg("j"),
           py::return_value_policy::reference_internal);
  bind_net_common(rect_net);

  auto tri_net = py::class_<TriNet>(m, "TriNet");
  tri_net.def_readonly("degree", &TriNet::degree)
      .def_readonly("frame", &TriNet::frame)
      .def("at", &TriNet::at, py::arg("i"), py::arg("j"), py::arg("k"),
           py::return_value_policy::reference_internal);
  bind_net_common(tri_net);

  m.def("curve_control_points",
        [](const CurveMap& map, int degree, const AffineFrame1& frame, bool homogeneous) {
          return curve_control_points(map, degree, frame, options_for(homogeneous));
        },
        py::arg("map"), py::arg("degree"), py::arg("frame") = AffineFrame1(),
        py::arg("homogeneous") = false);
  m.def("rect_control_net",
        [](const SurfaceMap& map, int p, int q, const FramePair& frames, bool homogeneous) {
          return rect_control_net(map, p, q, frames, options_for(homogeneous));
        },
        py::arg("map"), py::arg("p"), py::arg("q"), py::arg("frames") = FramePair{},
        py::arg("homogeneous") = false);
  m.def("tri_control_net",
        [](const SurfaceMap& map, int degree, const AffineFrame2& frame, bool homogeneous) {
          return tri_control_net(map, degree, frame, options_for(homogeneous));
        },
        py::arg("map"), py::arg("degree"), py::arg("frame") = AffineFrame2(),
        py::arg("homogeneous") = false);

  m.def("project_coordinates",
        [](const CurveNet& net, const std::vector<int>& keep) {
          return project_coordinates(net, keep);
        }, py::arg("net"), py::arg("keep"));
  m.def("project_coordinates",
        [](const RectNet& net, const std::vector<int>& keep) {
          return project_coordinates(net, keep);
        }, py::arg("net"), py::arg("keep"));
  m.def("project_coordinates",
        [](const TriNet& net, const std::vector<int>& keep) {
          return project_coordinates(net, keep);
        }, py::arg("net"), py::arg("keep"));
  m.def("keep_after_drop", &keep_after_drop, py::arg("dimension"), py::arg("drop"));

  m.def("polar_value_curve",
        [](const Poly1& p, std::vector<Ratio> args) {
          return polar_value_curve(p, std::move(args));
        }, py::arg("p"), py::arg("args"));
  m.def("polar_value_rect",
        [](const Poly2& p, std::vector<Ratio> u_args, std::vector<Ratio> v_args) {
          return polar_value_rect(p, std::move(u_args), std::move(v_args));
        }, py::arg("p"), py::arg("u_args"), py::arg("v_args"));
  m.def("polar_value_tri",
        [](const Poly2& p, std::vector<Point2> args) {
          return polar_value_tri(p, std::move(args));
        }, py::arg("p"), py::arg("args"));

  m.def("closed_form_polar_curve", &closed_form_polar_curve, py::arg("count_r"),
        py::arg("count_s"), py::arg("r"), py::arg("s"), py::arg("k"));
  m.def("closed_form_rect", &closed_form_rect, py::arg("p"), py::arg("q"), py::arg("zeros_u"),
        py::arg("zeros_v"), py::arg("h"), py::arg("k"));
  m.def("closed_form_tri", &closed_form_tri, py::arg("m"), py::arg("count_r"), py::arg("count_s"),
        py::arg("count_t"), py::arg("h"), py::arg("k"));

  m.def("naive_polar_curve", &naive_polar_curve, py::arg("k"), py::arg("args"));
  m.def("naive_polar_rect", &naive_polar_rect, py::arg("h"), py::arg("k"), py::arg("u_args"),
        py::arg("v_args"));
  m.def("naive_polar_tri", &naive_polar_tri, py::arg("h"), py::arg("k"), py::arg("args"));

  m.def("decasteljau_curve", &decasteljau_curve, py::arg("net"), py::arg("t"));
  m.def("decasteljau_rect", &decasteljau_rect, py::arg("net"), py::arg("u"), py::arg("v"));
  m.def("decasteljau_tri", &decasteljau_tri, py::arg("net"), py::arg("uv"));
  m.def("barycentric", &barycentric, py::arg("frame"), py::arg("uv"));
  m.def("bernstein_value", &bernstein_value, py::arg("m"), py::arg("k"), py::arg("t"));
  m.def("bernstein_eval", &bernstein_eval, py::arg("net"), py::arg("t"));
}
