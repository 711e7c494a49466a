#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qotto/deformed_math.hpp"
#include "qotto/otto_cycle.hpp"
#include "qotto/potential.hpp"
#include "qotto/sweep.hpp"
#include "qotto/thermo.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_qotto, m) {
    m.doc() = "quantum Otto machine with a q-deformed Poschl-Teller working substance";

    py::register_exception<qotto::TruncationError>(m, "TruncationError", PyExc_RuntimeError);
    py::register_exception<qotto::OverflowError>(m, "OverflowError", PyExc_OverflowError);

    // deformed math
    m.def("cosh_q", &qotto::cosh_q, py::arg("y"), py::arg("q"));
    m.def("sinh_q", &qotto::sinh_q, py::arg("y"), py::arg("q"));
    m.def("tanh_q", &qotto::tanh_q, py::arg("y"), py::arg("q"));
    m.def("erf", &qotto::erf, py::arg("x"));
    m.def("erfc", &qotto::erfc, py::arg("x"));
    m.def("dawson", &qotto::dawson, py::arg("x"));
    m.def("erfi", &qotto::erfi, py::arg("x"));
    m.def("erfi_scaled", &qotto::erfi_scaled, py::arg("x"));
    m.def("hyp2f1_poly", &qotto::hyp2f1_poly, py::arg("n"), py::arg("b"), py::arg("c"),
          py::arg("x"));

    // potential and spectrum
    py::class_<qotto::PotentialParams>(m, "PotentialParams")
        .def(py::init<double, double, double>(), py::arg("q"), py::arg("delta"),
             py::arg("alpha"))
        .def_readwrite("q", &qotto::PotentialParams::q)
        .def_readwrite("delta", &qotto::PotentialParams::delta)
        .def_readwrite("alpha", &qotto::PotentialParams::alpha)
        .def("validate", &qotto::PotentialParams::validate)
        .def("__repr__", [](const qotto::PotentialParams& p) {
            return "PotentialParams(q=" + std::to_string(p.q) +
                   ", delta=" + std::to_string(p.delta) + ", alpha=" + std::to_string(p.alpha) +
                   ")";
        });

    py::class_<qotto::Spectrum>(m, "Spectrum")
        .def_readonly("params", &qotto::Spectrum::params)
        .def_readonly("n_max_real", &qotto::Spectrum::n_max_real)
        .def_readonly("energies", &qotto::Spectrum::energies)
        .def_property_readonly("num_levels", &qotto::Spectrum::num_levels);

    py::class_<qotto::ReducedVariables>(m, "ReducedVariables")
        .def_readonly("xi", &qotto::ReducedVariables::xi)
        .def_readonly("w_tilde", &qotto::ReducedVariables::w_tilde)
        .def("nu", &qotto::ReducedVariables::nu, py::arg("n"))
        .def_property_readonly("bound_levels", &qotto::ReducedVariables::bound_levels);

    m.def("potential", &qotto::potential, py::arg("x"), py::arg("params"));
    m.def("potential_minimum_location", &qotto::potential_minimum_location, py::arg("params"));
    m.def("n_max", &qotto::n_max, py::arg("params"));
    m.def("spectrum", &qotto::spectrum, py::arg("params"));
    m.def("reduced_variables", &qotto::reduced_variables, py::arg("params"));
    m.def("eigenvalue", &qotto::eigenvalue, py::arg("n"), py::arg("params"));
    m.def("wavefunction", &qotto::wavefunction, py::arg("n"), py::arg("x"), py::arg("params"));
    m.def("normalization_constant",
          py::overload_cast<int, const qotto::PotentialParams&>(&qotto::normalization_constant),
          py::arg("n"), py::arg("params"));
    m.def("schrodinger_residual", &qotto::schrodinger_residual, py::arg("n"), py::arg("params"),
          py::arg("h") = 1e-3);

    // thermodynamics
    py::class_<qotto::ThermalState>(m, "ThermalState")
        .def_readonly("beta", &qotto::ThermalState::beta)
        .def_readonly("log_z", &qotto::ThermalState::log_z)
        .def_readonly("z_value", &qotto::ThermalState::z_value)
        .def_readonly("probs", &qotto::ThermalState::probs);

    m.def("partition_sum", &qotto::partition_sum, py::arg("spectrum"), py::arg("T"));
    m.def("log_partition_sum", &qotto::log_partition_sum, py::arg("spectrum"), py::arg("T"));
    m.def("partition_closed", &qotto::partition_closed, py::arg("params"), py::arg("T"));
    m.def("log_partition_closed", &qotto::log_partition_closed, py::arg("params"), py::arg("T"));
    m.def("thermal_state", &qotto::thermal_state, py::arg("spectrum"), py::arg("T"));

    // Otto cycle
    py::enum_<qotto::Method>(m, "Method")
        .value("ClosedForm", qotto::Method::ClosedForm)
        .value("DiscreteSum", qotto::Method::DiscreteSum);

    py::enum_<qotto::Regime>(m, "Regime")
        .value("Engine", qotto::Regime::Engine)
        .value("Refrigerator", qotto::Regime::Refrigerator)
        .value("Heater", qotto::Regime::Heater)
        .value("Accelerator", qotto::Regime::Accelerator)
        .value("Idle", qotto::Regime::Idle);

    py::class_<qotto::CycleConfig>(m, "CycleConfig")
        .def(py::init([](double q, double delta, double alpha_h, double alpha_c, double t_h,
                         double t_c, double truncation_bound) {
                 return qotto::CycleConfig{q, delta, alpha_h, alpha_c, t_h, t_c,
                                           truncation_bound};
             }),
             py::arg("q"), py::arg("delta"), py::arg("alpha_h"), py::arg("alpha_c"),
             py::arg("t_h"), py::arg("t_c"), py::arg("truncation_bound") = 1e-3)
        .def_readwrite("q", &qotto::CycleConfig::q)
        .def_readwrite("delta", &qotto::CycleConfig::delta)
        .def_readwrite("alpha_h", &qotto::CycleConfig::alpha_h)
        .def_readwrite("alpha_c", &qotto::CycleConfig::alpha_c)
        .def_readwrite("t_h", &qotto::CycleConfig::t_h)
        .def_readwrite("t_c", &qotto::CycleConfig::t_c)
        .def_readwrite("truncation_bound", &qotto::CycleConfig::truncation_bound)
        .def("validate", &qotto::CycleConfig::validate);

    py::class_<qotto::CycleResult>(m, "CycleResult")
        .def_readonly("q_hot", &qotto::CycleResult::q_hot)
        .def_readonly("q_cold", &qotto::CycleResult::q_cold)
        .def_readonly("work", &qotto::CycleResult::work)
        .def_readonly("efficiency", &qotto::CycleResult::efficiency)
        .def_readonly("cop", &qotto::CycleResult::cop)
        .def_readonly("regime", &qotto::CycleResult::regime)
        .def_readonly("method", &qotto::CycleResult::method)
        .def_readonly("truncation_loss", &qotto::CycleResult::truncation_loss);

    m.def("q_hot_closed", &qotto::q_hot_closed, py::arg("config"));
    m.def("q_cold_closed", &qotto::q_cold_closed, py::arg("config"));
    m.def(
        "q_hot_sum",
        [](const qotto::CycleConfig& c) {
            const qotto::SumHeat h = qotto::q_hot_sum(c);
            return py::make_tuple(h.value, h.truncation_loss);
        },
        py::arg("config"));
    m.def(
        "q_cold_sum",
        [](const qotto::CycleConfig& c) {
            const qotto::SumHeat h = qotto::q_cold_sum(c);
            return py::make_tuple(h.value, h.truncation_loss);
        },
        py::arg("config"));
    m.def("work", &qotto::work, py::arg("config"), py::arg("method"));
    m.def("classify_regime", &qotto::classify_regime, py::arg("q_hot"), py::arg("q_cold"),
          py::arg("work"), py::arg("tol") = qotto::kRegimeTol);
    m.def("efficiency", &qotto::efficiency, py::arg("config"), py::arg("method"));
    m.def("cop", &qotto::cop, py::arg("config"), py::arg("method"));
    m.def("evaluate_cycle", &qotto::evaluate_cycle, py::arg("config"), py::arg("method"));

    // sweeps
    py::enum_<qotto::SweepMethod>(m, "SweepMethod")
        .value("ClosedForm", qotto::SweepMethod::ClosedForm)
        .value("DiscreteSum", qotto::SweepMethod::DiscreteSum)
        .value("Both", qotto::SweepMethod::Both);

    py::enum_<qotto::Metric>(m, "Metric")
        .value("Efficiency", qotto::Metric::Efficiency)
        .value("COP", qotto::Metric::COP)
        .value("Work", qotto::Metric::Work)
        .value("QCold", qotto::Metric::QCold);

    py::class_<qotto::SweepSpec>(m, "SweepSpec")
        .def(py::init([](double q_min, double q_max, double delta_min, double delta_max,
                         int n_q, int n_delta, const qotto::CycleConfig& base,
                         qotto::SweepMethod method) {
                 qotto::SweepSpec s;
                 s.q_min = q_min;
                 s.q_max = q_max;
                 s.delta_min = delta_min;
                 s.delta_max = delta_max;
                 s.n_q = n_q;
                 s.n_delta = n_delta;
                 s.base = base;
                 s.method = method;
                 return s;
             }),
             py::arg("q_min"), py::arg("q_max"), py::arg("delta_min"), py::arg("delta_max"),
             py::arg("n_q"), py::arg("n_delta"), py::arg("base"),
             py::arg("method") = qotto::SweepMethod::ClosedForm)
        .def_readwrite("q_min", &qotto::SweepSpec::q_min)
        .def_readwrite("q_max", &qotto::SweepSpec::q_max)
        .def_readwrite("delta_min", &qotto::SweepSpec::delta_min)
        .def_readwrite("delta_max", &qotto::SweepSpec::delta_max)
        .def_readwrite("n_q", &qotto::SweepSpec::n_q)
        .def_readwrite("n_delta", &qotto::SweepSpec::n_delta)
        .def_readwrite("base", &qotto::SweepSpec::base)
        .def_readwrite("method", &qotto::SweepSpec::method)
        .def("config_at", &qotto::SweepSpec::config_at, py::arg("i_delta"), py::arg("i_q"));

    py::class_<qotto::CellOutcome>(m, "CellOutcome")
        .def_readonly("result", &qotto::CellOutcome::result)
        .def_readonly("error", &qotto::CellOutcome::error)
        .def_property_readonly("ok", &qotto::CellOutcome::ok);

    py::class_<qotto::SweepCell>(m, "SweepCell")
        .def_readonly("i_delta", &qotto::SweepCell::i_delta)
        .def_readonly("i_q", &qotto::SweepCell::i_q)
        .def_readonly("q", &qotto::SweepCell::q)
        .def_readonly("delta", &qotto::SweepCell::delta)
        .def_readonly("closed", &qotto::SweepCell::closed)
        .def_readonly("sum", &qotto::SweepCell::sum);

    py::class_<qotto::SweepFailure>(m, "SweepFailure")
        .def_readonly("i_delta", &qotto::SweepFailure::i_delta)
        .def_readonly("i_q", &qotto::SweepFailure::i_q)
        .def_readonly("method", &qotto::SweepFailure::method)
        .def_readonly("error", &qotto::SweepFailure::error);

    py::class_<qotto::Optimum>(m, "Optimum")
        .def_readonly("i_delta", &qotto::Optimum::i_delta)
        .def_readonly("i_q", &qotto::Optimum::i_q)
        .def_readonly("value", &qotto::Optimum::value);

    py::class_<qotto::SweepGrid>(m, "SweepGrid")
        .def_readonly("spec", &qotto::SweepGrid::spec)
        .def_readonly("cells", &qotto::SweepGrid::cells)
        .def("failures", &qotto::SweepGrid::failures);

    m.def("run_sweep", &qotto::run_sweep, py::arg("spec"),
          py::call_guard<py::gil_scoped_release>());
    m.def("find_optimum", &qotto::find_optimum, py::arg("grid"), py::arg("metric"),
          py::arg("method") = std::nullopt);
    m.def("to_csv", &qotto::to_csv, py::arg("grid"));
    m.def("to_json_string", &qotto::to_json_string, py::arg("grid"));
    m.def("write_csv_file", &qotto::write_csv_file, py::arg("grid"), py::arg("path"));
    m.def("write_json_file", &qotto::write_json_file, py::arg("grid"), py::arg("path"));
}
