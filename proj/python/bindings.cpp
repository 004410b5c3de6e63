#include <sstream>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uslev/cli.hpp"
#include "uslev/efficiency.hpp"
#include "uslev/io.hpp"
#include "uslev/norms.hpp"
#include "uslev/order.hpp"
#include "uslev/phi.hpp"
#include "uslev/scalarize.hpp"

namespace py = pybind11;
using namespace uslev;

namespace {

PointCloud cloud(const Matrix& rows) {
  if (rows.rows() == 0) throw InputError("point cloud is empty");
  return PointCloud::from_rows(rows);
}

AuditOptions audit(std::uint64_t seed) {
  AuditOptions o;
  o.seed = seed;
  return o;
}

std::string report(const io::Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_uslev, m) {
  m.doc() = "Scalarization functionals, efficient points and order-unit norms";

  py::register_exception<Refusal>(m, "RefusalError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<Unsupported>(m, "UnsupportedError", PyExc_NotImplementedError);

  py::class_<ExtScalar>(m, "ExtScalar")
      .def_property_readonly("kind", &ExtScalar::class_name)
      .def_property_readonly("is_real", &ExtScalar::is_real)
      .def_property_readonly("is_neg_inf", &ExtScalar::is_neg_inf)
      .def_property_readonly("is_nu", &ExtScalar::is_nu)
      .def_property_readonly("value",
                             [](const ExtScalar& v) -> py::object {
                               return v.is_real() ? py::cast(v.value()) : py::none();
                             })
      .def("__repr__", [](const ExtScalar& v) { return "ExtScalar(" + v.to_string() + ")"; });

  py::class_<SetExpr>(m, "SetExpr")
      .def_static("from_json", [](const std::string& text) { return io::set_from_json(io::Json::parse(text)); },
                  py::arg("text"))
      .def("to_json", [](const SetExpr& s) { return io::set_to_json(s).dump(); })
      .def_property_readonly("dim", &SetExpr::dim)
      .def("contains", [](const SetExpr& s, const Vector& y) { return contains(s, y); }, py::arg("y"))
      .def("contains_core", [](const SetExpr& s, const Vector& y) { return contains_core(s, y); }, py::arg("y"));

  m.def("phi", [](const SetExpr& a, const Vector& k, const Vector& y, bool oracle) {
    const PhiProblem p(a, k);
    return oracle ? phi_oracle(p, y) : phi_value(p, y);
  }, py::arg("set_expr"), py::arg("k"), py::arg("y"), py::arg("oracle") = false);

  m.def("minkowski", [](const SetExpr& s, const Vector& y) { return minkowski_eval(s, y); },
        py::arg("set_expr"), py::arg("y"));

  m.def("order_unit_norm", [](const SetExpr& cone, const Vector& k, const Vector& y) {
    return order_unit_norm(OrderUnitSpec::make(cone, k), y);
  }, py::arg("cone"), py::arg("k"), py::arg("y"));

  m.def("eff", [](const Matrix& points, const SetExpr& d, bool weak) {
    const PointCloud f = cloud(points);
    return (weak ? weff(f, d) : eff(f, d)).indices;
  }, py::arg("points"), py::arg("set_expr"), py::arg("weak") = false);

  m.def("min_points", [](const Matrix& points, const SetExpr& d) {
    return min_points({d, false}, cloud(points));
  }, py::arg("points"), py::arg("set_expr"));

  m.def("characterize", [](const Matrix& points, const SetExpr& d, const Vector& k, bool weak, std::uint64_t seed) {
    const PointCloud f = cloud(points);
    return report(io::to_json(weak ? characterize_weff_report(f, d, k, audit(seed))
                                   : characterize_eff_report(f, d, k, audit(seed))));
  }, py::arg("points"), py::arg("set_expr"), py::arg("k"), py::arg("weak") = false, py::arg("seed") = 42);

  m.def("reference_scalarize", [](const Matrix& points, const SetExpr& h, const Vector& a, const Vector& k,
                                  const SetExpr& d, std::uint64_t seed) {
    return report(io::to_json(reference_scalarize(cloud(points), h, a, k, d, audit(seed))));
  }, py::arg("points"), py::arg("set_expr"), py::arg("ref"), py::arg("k"), py::arg("dom"), py::arg("seed") = 42);

  m.def("bound_scalarize", [](const Matrix& points, const SetExpr& d, const Vector& a, const std::string& orientation,
                              std::uint64_t seed) {
    Orientation o;
    if (orientation == "below") o = Orientation::Below;
    else if (orientation == "above") o = Orientation::Above;
    else throw InputError("orientation must be 'below' or 'above'");
    return report(io::to_json(bound_scalarize(cloud(points), d, a, o, audit(seed))));
  }, py::arg("points"), py::arg("set_expr"), py::arg("ref"), py::arg("orientation") = "below", py::arg("seed") = 42);

  m.def("norm_characterize", [](const Matrix& points, const SetExpr& d, const Vector& a, std::uint64_t seed) {
    return report(io::to_json(norm_characterize(cloud(points), d, a, audit(seed))));
  }, py::arg("points"), py::arg("set_expr"), py::arg("ref"), py::arg("seed") = 42);

  m.def("separate", [](const SetExpr& a, const Vector& k, const Matrix& points, std::uint64_t seed) {
    return report(io::to_json(separate(a, k, cloud(points), audit(seed))));
  }, py::arg("set_expr"), py::arg("k"), py::arg("points"), py::arg("seed") = 42);

  m.def("run_cli", [](std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
