#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "zetapair/bounds.hpp"
#include "zetapair/kernels.hpp"
#include "zetapair/pair_sums.hpp"
#include "zetapair/quadrature.hpp"
#include "zetapair/synthetic.hpp"
#include "zetapair/zero_file.hpp"
#include "zetapair/zeta_zeros.hpp"

namespace py = pybind11;
using namespace zetapair;

namespace {

quad::QuadratureConfig make_cfg(double abs_tol, double rel_tol, int max_panels) {
    quad::QuadratureConfig cfg;
    cfg.abs_tol = abs_tol;
    cfg.rel_tol = rel_tol;
    cfg.max_panels = max_panels;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_zetapair, m) {
    m.doc() = "pair-correlation toolkit for zeros of the zeta function";

    py::enum_<kernels::KernelId>(m, "KernelId")
        .value("Fejer", kernels::KernelId::Fejer)
        .value("MontgomeryTaylor", kernels::KernelId::MontgomeryTaylor);

    py::class_<quad::QuadratureConfig>(m, "QuadratureConfig")
        .def(py::init(&make_cfg), py::arg("abs_tol") = 1e-10,
             py::arg("rel_tol") = 1e-10, py::arg("max_panels") = 40000)
        .def_readwrite("abs_tol", &quad::QuadratureConfig::abs_tol)
        .def_readwrite("rel_tol", &quad::QuadratureConfig::rel_tol)
        .def_readwrite("max_panels", &quad::QuadratureConfig::max_panels);

    py::class_<kernels::TsangParams>(m, "TsangParams")
        .def(py::init([](double b, kernels::KernelId k) {
                 return kernels::TsangParams{b, k};
             }),
             py::arg("b"), py::arg("kernel"))
        .def_readwrite("b", &kernels::TsangParams::b)
        .def_readwrite("kernel", &kernels::TsangParams::kernel);

    m.def("fejer", &kernels::fejer, py::arg("alpha"));
    m.def("fejer_hat", &kernels::fejer_hat, py::arg("t"));
    m.def("mt", &kernels::mt, py::arg("alpha"));
    m.def("mt_hat", &kernels::mt_hat, py::arg("w"));
    m.def("cosh_ratio", &kernels::cosh_ratio, py::arg("y"), py::arg("b"),
          py::arg("t"));
    m.def("cosh_ratio_hat", &kernels::cosh_ratio_hat, py::arg("y"), py::arg("b"),
          py::arg("x"));
    m.def("tsang_K", &kernels::tsang_K, py::arg("params"), py::arg("z"),
          py::arg("cfg") = make_cfg(1e-12, 1e-12, 40000));
    m.def("tsang_K_re", &kernels::tsang_K_re, py::arg("params"), py::arg("x"),
          py::arg("y"), py::arg("cfg") = make_cfg(1e-12, 1e-12, 40000));

    py::class_<bounds::BoundRow>(m, "BoundRow")
        .def_readonly("b", &bounds::BoundRow::b)
        .def_readonly("c_b", &bounds::BoundRow::c_b)
        .def_readonly("simple_coeff", &bounds::BoundRow::simple_coeff)
        .def_readonly("critical_coeff", &bounds::BoundRow::critical_coeff)
        .def_readonly("simple_critical_coeff",
                      &bounds::BoundRow::simple_critical_coeff);

    py::enum_<bounds::BoundKind>(m, "BoundKind")
        .value("Simple", bounds::BoundKind::Simple)
        .value("SimpleCritical", bounds::BoundKind::SimpleCritical);

    m.def("c_b", &bounds::c_b, py::arg("kernel"), py::arg("b"),
          py::arg("cfg") = make_cfg(1e-12, 1e-12, 40000));
    m.def("proportions", &bounds::proportions, py::arg("kernel"), py::arg("b"),
          py::arg("cfg") = make_cfg(1e-12, 1e-12, 40000));
    m.def("bound_table", &bounds::table, py::arg("kernel"), py::arg("b_values"),
          py::arg("cfg") = make_cfg(1e-12, 1e-12, 40000));
    m.def("failure_threshold", &bounds::failure_threshold, py::arg("kernel"),
          py::arg("which"), py::arg("cfg") = make_cfg(1e-12, 1e-12, 40000));

    py::class_<zeros::Zero>(m, "Zero")
        .def(py::init([](double beta, double gamma, int mult) {
                 return zeros::Zero{beta, gamma, mult};
             }),
             py::arg("beta") = 0.5, py::arg("gamma") = 0.0,
             py::arg("multiplicity") = 1)
        .def_readwrite("beta", &zeros::Zero::beta)
        .def_readwrite("gamma", &zeros::Zero::gamma)
        .def_readwrite("multiplicity", &zeros::Zero::multiplicity);

    py::class_<zeros::ZeroDataset>(m, "ZeroDataset")
        .def(py::init<>())
        .def_readwrite("zeros", &zeros::ZeroDataset::zeros)
        .def_readwrite("t_min", &zeros::ZeroDataset::t_min)
        .def_readwrite("t_max", &zeros::ZeroDataset::t_max)
        .def_readwrite("on_line", &zeros::ZeroDataset::on_line)
        .def_readonly("count_warning", &zeros::ZeroDataset::count_warning)
        .def("__len__", &zeros::ZeroDataset::size);

    m.def("rs_theta", &zeros::rs_theta, py::arg("t"));
    m.def("hardy_Z", &zeros::hardy_Z, py::arg("t"));
    m.def("compute_zeros", &zeros::compute_zeros, py::arg("t_min"),
          py::arg("t_max"), py::arg("cfg") = make_cfg(1e-10, 1e-10, 40000));
    m.def("n_of_T", &zeros::n_of_T, py::arg("T"));
    m.def("density_check", &zeros::density_check, py::arg("dataset"),
          py::arg("t"));

    py::enum_<pairsum::PairWeight>(m, "PairWeight")
        .value("Montgomery", pairsum::PairWeight::Montgomery)
        .value("Complex", pairsum::PairWeight::Complex);

    py::class_<pairsum::PairSumSpec>(m, "PairSumSpec")
        .def(py::init<>())
        .def_readwrite("x", &pairsum::PairSumSpec::x)
        .def_readwrite("t_lo", &pairsum::PairSumSpec::t_lo)
        .def_readwrite("t_hi", &pairsum::PairSumSpec::t_hi)
        .def_readwrite("weight", &pairsum::PairSumSpec::weight)
        .def_readwrite("truncation_gap", &pairsum::PairSumSpec::truncation_gap);

    py::class_<pairsum::PairSumResult>(m, "PairSumResult")
        .def_readonly("value", &pairsum::PairSumResult::value)
        .def_readonly("n_zeros", &pairsum::PairSumResult::n_zeros)
        .def_readonly("n_pairs_evaluated",
                      &pairsum::PairSumResult::n_pairs_evaluated)
        .def_readonly("truncation_error_bound",
                      &pairsum::PairSumResult::truncation_error_bound);

    py::class_<pairsum::FormFactorPoint>(m, "FormFactorPoint")
        .def_readonly("alpha", &pairsum::FormFactorPoint::alpha)
        .def_readonly("empirical", &pairsum::FormFactorPoint::empirical)
        .def_readonly("theory", &pairsum::FormFactorPoint::theory);

    m.def("F_pair_sum", &pairsum::F_pair_sum, py::arg("dataset"), py::arg("spec"));
    m.def("calF_pair_sum", &pairsum::calF_pair_sum, py::arg("dataset"),
          py::arg("spec"), py::arg("T"));
    m.def("F_integral_oracle", &pairsum::F_integral_oracle, py::arg("dataset"),
          py::arg("x"), py::arg("cfg") = make_cfg(1e-9, 1e-9, 60000));
    m.def("calF_integral_oracle", &pairsum::calF_integral_oracle,
          py::arg("dataset"), py::arg("x"),
          py::arg("cfg") = make_cfg(1e-9, 1e-9, 60000));
    m.def("kernel_weighted_sum", &pairsum::kernel_weighted_sum, py::arg("dataset"),
          py::arg("params"), py::arg("T"),
          py::arg("cfg") = make_cfg(1e-10, 1e-10, 40000));
    m.def("form_factor_curve", &pairsum::form_factor_curve, py::arg("dataset"),
          py::arg("T"), py::arg("alpha_grid"));

    m.def("parse_zero_file", &io::parse_zero_file, py::arg("path"));
    m.def("write_zero_file", &io::write_zero_file, py::arg("path"),
          py::arg("dataset"));

    m.def("synthetic_online_set", &synthetic::online_set, py::arg("seed"),
          py::arg("n"), py::arg("t_lo"), py::arg("t_hi"),
          py::arg("min_gap") = 0.05);
    m.def("synthetic_offline_set", &synthetic::offline_set, py::arg("seed"),
          py::arg("n"), py::arg("n_pairs"), py::arg("delta"), py::arg("t_lo"),
          py::arg("t_hi"), py::arg("min_gap") = 0.05);
}
