#include "qgw/errors.hpp"
#include "qgw/ifunction.hpp"
#include "qgw/report.hpp"
#include "qgw/verify.hpp"
#include "qgw/wallcross.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <utility>
#include <vector>

namespace py = pybind11;

namespace {

qgw::GeometrySpec make_spec(int n, const std::vector<int>& l, const std::vector<int>& lp)
{
    qgw::GeometrySpec spec;
    spec.n = n;
    spec.l = l;
    spec.lp = lp;
    spec.validate();
    return spec;
}

py::object to_py(const qgw::json& value)
{
    using value_t = qgw::json::value_t;
    switch (value.type()) {
    case value_t::null:
        return py::none();
    case value_t::boolean:
        return py::bool_(value.get<bool>());
    case value_t::number_integer:
        return py::int_(value.get<long long>());
    case value_t::number_unsigned:
        return py::int_(value.get<unsigned long long>());
    case value_t::string:
        return py::str(value.get<std::string>());
    case value_t::array: {
        py::list out;
        for (const qgw::json& element : value)
            out.append(to_py(element));
        return out;
    }
    case value_t::object: {
        py::dict out;
        for (auto it = value.begin(); it != value.end(); ++it)
            out[py::str(it.key())] = to_py(it.value());
        return std::move(out);
    }
    default:
        return py::none();
    }
}

std::vector<std::string> series_strings(const qgw::PowerSeries& series)
{
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(series.order()) + 1);
    for (const qgw::Rational& c : series.coeffs())
        out.push_back(qgw::to_string(c));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact genus-1 quasimap and Gromov-Witten potentials of local "
              "Calabi-Yau complete intersections in projective space.";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const qgw::InvalidSpec& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "compute",
        [](int n, const std::vector<int>& l, const std::vector<int>& lp, int order) {
            return to_py(qgw::report_to_json(qgw::compute_report(make_spec(n, l, lp), order)));
        },
        py::arg("n"), py::arg("l"), py::arg("lp"), py::arg("order") = 10,
        "Full report as a dict: I0, I1, C, F_qm, F_gw_q, Q_of_q, N, chi_top, "
        "chern_coeff, diagnostics. Rationals are canonical 'p/q' strings.");

    m.def(
        "i_function",
        [](int n, const std::vector<int>& l, const std::vector<int>& lp, int order) {
            const auto [i0, i1] =
                qgw::extract_i0_i1(qgw::expand_i(make_spec(n, l, lp), order, 1));
            return py::make_tuple(series_strings(i0), series_strings(i1));
        },
        py::arg("n"), py::arg("l"), py::arg("lp"), py::arg("order") = 10,
        "The I-function heads (I0, I1) as coefficient-string lists.");

    m.def(
        "initial_constants",
        [](int n, const std::vector<int>& l, const std::vector<int>& lp, int order) {
            std::vector<std::vector<std::string>> out;
            for (const qgw::PowerSeries& ck :
                 qgw::compute_ck(make_spec(n, l, lp), order).C)
                out.push_back(series_strings(ck));
            return out;
        },
        py::arg("n"), py::arg("l"), py::arg("lp"), py::arg("order") = 10,
        "The initial constants C_0..C_{n-1} as coefficient-string lists.");

    m.def(
        "gw_invariants",
        [](int n, const std::vector<int>& l, const std::vector<int>& lp, int order) {
            std::vector<std::string> out;
            for (const qgw::Rational& nd :
                 qgw::compute_report(make_spec(n, l, lp), order).N)
                out.push_back(qgw::to_string(nd));
            return out;
        },
        py::arg("n"), py::arg("l"), py::arg("lp"), py::arg("order") = 10,
        "The genus-1 invariants N_1..N_order as rational strings.");

    m.def(
        "mirror_map_series",
        [](int n, const std::vector<int>& l, const std::vector<int>& lp, int order) {
            const auto [i0, i1] =
                qgw::extract_i0_i1(qgw::expand_i(make_spec(n, l, lp), order, 1));
            return series_strings(qgw::mirror_map(i0, i1));
        },
        py::arg("n"), py::arg("l"), py::arg("lp"), py::arg("order") = 10,
        "The mirror coordinate Q(q) = q exp(I1/I0).");

    m.def(
        "pf_check",
        [](int n, const std::vector<int>& l, const std::vector<int>& lp, int order) {
            const qgw::GeometrySpec spec = make_spec(n, l, lp);
            return qgw::pf_check(spec, qgw::expand_i(spec, order, spec.n + 1));
        },
        py::arg("n"), py::arg("l"), py::arg("lp"), py::arg("order") = 6,
        "Whether the Picard-Fuchs operator annihilates the I-function "
        "expansion at this truncation.");

    m.def(
        "verify",
        [] {
            std::ostringstream log;
            const bool ok = qgw::run_verification(log);
            return py::make_tuple(ok, log.str());
        },
        "Run the built-in verification suite; returns (passed, log_text).");

    m.attr("__version__") = "0.1.0";
}
