#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "captrans/json_io.hpp"
#include "captrans/oracle.hpp"
#include "captrans/transport.hpp"

namespace py = pybind11;
using namespace captrans;

PYBIND11_MODULE(_captrans, m) {
    m.doc() = "Optimal transport for non-additive measures on finite sets";

    py::register_exception<Error>(m, "CaptransError", PyExc_ValueError);

    py::enum_<VectorKind>(m, "VectorKind")
        .value("generic", VectorKind::Generic)
        .value("mobius", VectorKind::Mobius)
        .value("maxplus", VectorKind::MaxPlus)
        .value("bpa", VectorKind::Bpa);

    py::enum_<Method>(m, "Method")
        .value("classical", Method::Classical)
        .value("bpa", Method::Bpa)
        .value("mobius", Method::Mobius)
        .value("maxplus", Method::MaxPlus);

    py::enum_<LPStatus>(m, "LPStatus")
        .value("optimal", LPStatus::Optimal)
        .value("infeasible", LPStatus::Infeasible)
        .value("unbounded", LPStatus::Unbounded)
        .value("iteration_limit", LPStatus::IterationLimit);

    py::class_<Universe>(m, "Universe")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, std::vector<std::string>>(), py::arg("n"), py::arg("labels"))
        .def_property_readonly("n", &Universe::size)
        .def_property_readonly("labels", &Universe::labels)
        .def("subset_name", &Universe::subset_name)
        .def("__eq__", [](const Universe& a, const Universe& b) { return a == b; })
        .def("__repr__", [](const Universe& u) {
            return "Universe(n=" + std::to_string(u.size()) + ")";
        });

    py::class_<Capacity>(m, "Capacity")
        .def_property_readonly("universe", &Capacity::universe)
        .def_property_readonly("values", &Capacity::values)
        .def_property_readonly("normalized", &Capacity::is_normalized)
        .def("at", &Capacity::at, py::arg("subset"))
        .def("singleton_values", &Capacity::singleton_values);

    py::class_<SetVector>(m, "SetVector")
        .def(py::init<std::vector<double>, const Universe&, VectorKind>(), py::arg("values"),
             py::arg("universe"), py::arg("kind") = VectorKind::Generic)
        .def_property_readonly("universe", &SetVector::universe)
        .def_property_readonly("values", &SetVector::values)
        .def_property_readonly("kind", &SetVector::kind)
        .def("at", &SetVector::at, py::arg("subset"))
        .def("sum", &SetVector::sum);

    py::class_<GroundCost>(m, "GroundCost")
        .def(py::init<const Universe&, const Universe&, std::vector<double>>(), py::arg("x"),
             py::arg("y"), py::arg("values"))
        .def_property_readonly("x", &GroundCost::x)
        .def_property_readonly("y", &GroundCost::y)
        .def("at", &GroundCost::at, py::arg("i"), py::arg("j"))
        .def("max_value", &GroundCost::max_value);

    py::class_<CostMatrix>(m, "CostMatrix")
        .def(py::init<const Universe&, const Universe&, std::vector<double>>(), py::arg("x"),
             py::arg("y"), py::arg("values"))
        .def_property_readonly("x", &CostMatrix::x)
        .def_property_readonly("y", &CostMatrix::y)
        .def_property_readonly("values", &CostMatrix::values)
        .def("at", &CostMatrix::at, py::arg("a"), py::arg("b"));

    py::class_<TransportPlan>(m, "TransportPlan")
        .def(py::init<const Universe&, const Universe&, Method>(), py::arg("x"), py::arg("y"),
             py::arg("method"))
        .def_readonly("x", &TransportPlan::x)
        .def_readonly("y", &TransportPlan::y)
        .def_readonly("method", &TransportPlan::method)
        .def_readwrite("mass", &TransportPlan::mass)
        .def_readonly("objective", &TransportPlan::objective)
        .def_readonly("status", &TransportPlan::status)
        .def_readonly("iterations", &TransportPlan::iterations)
        .def("at", &TransportPlan::at, py::arg("a"), py::arg("b"))
        .def("point_mass", &TransportPlan::point_mass, py::arg("i"), py::arg("j"))
        .def("set", &TransportPlan::set, py::arg("a"), py::arg("b"), py::arg("mass"))
        .def("lack_mu", &TransportPlan::lack_mu, py::arg("a"))
        .def("lack_nu", &TransportPlan::lack_nu, py::arg("b"))
        .def("total_mass", &TransportPlan::total_mass);

    py::class_<PlanValidation>(m, "PlanValidation")
        .def_readonly("sign_ok", &PlanValidation::sign_ok)
        .def_readonly("issues", &PlanValidation::issues)
        .def_readonly("max_transform_violation", &PlanValidation::max_transform_violation)
        .def_readonly("max_cumulative_violation", &PlanValidation::max_cumulative_violation)
        .def("max_violation", &PlanValidation::max_violation)
        .def("accepted", &PlanValidation::accepted, py::arg("tol") = kTol);

    m.def("validate_capacity", &validate_capacity, py::arg("values"), py::arg("universe"));
    m.def("mobius", &mobius, py::arg("mu"));
    m.def("mobius_inverse", &mobius_inverse, py::arg("m"));
    m.def("is_belief", &is_belief, py::arg("mu"));
    m.def("maxplus", &maxplus, py::arg("mu"));
    m.def("maxplus_inverse", &maxplus_inverse, py::arg("m"));
    m.def("is_additive", &is_additive, py::arg("mu"));

    m.def("ground_absdiff", py::overload_cast<const Universe&>(&ground_absdiff), py::arg("x"));
    m.def("ground_absdiff", py::overload_cast<const Universe&, const Universe&>(&ground_absdiff),
          py::arg("x"), py::arg("y"));
    m.def("ground_absdiff",
          py::overload_cast<const Universe&, const std::vector<double>&>(&ground_absdiff),
          py::arg("x"), py::arg("positions"));
    m.def("lift_kappa", &lift_kappa, py::arg("c"), py::arg("kappa"), py::arg("bpa_mode") = false);
    m.def("lift_tiered", &lift_tiered, py::arg("c"), py::arg("kappa"), py::arg("kappa_plus"));
    m.def("lift_equalized", &lift_equalized, py::arg("c"), py::arg("mu"), py::arg("nu"),
          py::arg("kappa"));
    m.def("refines", &refines, py::arg("pointwise"), py::arg("subsetwise"));

    m.def("solve_classical", &solve_classical, py::arg("p"), py::arg("q"), py::arg("c"));
    m.def("solve_bpa", &solve_bpa, py::arg("mu"), py::arg("nu"), py::arg("cost"));
    m.def("solve_mobius", &solve_mobius, py::arg("mu"), py::arg("nu"), py::arg("cost"));
    m.def("solve_maxplus", &solve_maxplus, py::arg("mu"), py::arg("nu"), py::arg("cost"));
    m.def("validate_plan", &validate_plan, py::arg("plan"), py::arg("mu"), py::arg("nu"));
    m.def("discrepancy", &discrepancy, py::arg("mu"), py::arg("nu"), py::arg("cost"));

    m.def("measure_from_json", &measure_from_json_text, py::arg("text"));
    m.def("measure_to_json", &measure_to_json_text, py::arg("mu"));
    m.def("plan_to_json", &plan_to_json_text, py::arg("plan"));
    m.def("plan_from_json", &plan_from_json_text, py::arg("text"));
}
