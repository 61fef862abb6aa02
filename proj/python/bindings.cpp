#include <pybind11/pybind11.h>

#include "heron4/report.hpp"

namespace py = pybind11;

namespace {

using heron4::Rational;
using heron4::report::Json;
using heron4::report::Options;

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::object: {
            py::dict d;
            for (const auto& [key, value] : j.items()) d[py::str(key)] = json_to_py(value);
            return d;
        }
        case Json::value_t::array: {
            py::list l;
            for (const auto& value : j) l.append(json_to_py(value));
            return l;
        }
        case Json::value_t::string:
            return py::str(j.get<std::string>());
        case Json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case Json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float:
            return py::float_(j.get<double>());
        default:
            return py::none();
    }
}

Rational to_rational(py::handle v) {
    return Rational::parse(py::str(v).cast<std::string>());
}

Options make_options(const py::object& svg_dir, const py::object& timestamp) {
    Options opt;
    if (!svg_dir.is_none()) opt.svg_dir = svg_dir.cast<std::string>();
    if (!timestamp.is_none()) opt.timestamp = timestamp.cast<std::string>();
    return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact 4-dimensional dissection certificates for Heron's formula";

    m.def(
        "heron",
        [](py::object p, py::object r, py::object h, py::object svg_dir, py::object timestamp) {
            return json_to_py(heron4::report::heron_report(to_rational(p), to_rational(r),
                                                           to_rational(h),
                                                           make_options(svg_dir, timestamp)));
        },
        py::arg("p"), py::arg("r"), py::arg("h"), py::arg("svg_dir") = py::none(),
        py::arg("timestamp") = py::none(),
        "Verify the full Heron chain for the triangle with base p and apex (r, h); "
        "rationals are ints or 'num/den' strings.");

    m.def(
        "cube",
        [](int n, py::object svg_dir, py::object timestamp) {
            return json_to_py(heron4::report::cube_report(n, make_options(svg_dir, timestamp)));
        },
        py::arg("n"), py::arg("svg_dir") = py::none(), py::arg("timestamp") = py::none(),
        "Decompose the n-cube into its n! right simplices.");

    m.def(
        "pyramids",
        [](int n, py::object svg_dir, py::object timestamp) {
            return json_to_py(
                heron4::report::pyramids_report(n, make_options(svg_dir, timestamp)));
        },
        py::arg("n"), py::arg("svg_dir") = py::none(), py::arg("timestamp") = py::none(),
        "Decompose the n-cube into n congruent pyramids.");

    m.def(
        "quarter",
        [](py::object edge, py::object svg_dir, py::object timestamp) {
            return json_to_py(heron4::report::quarter_report(to_rational(edge),
                                                             make_options(svg_dir, timestamp)));
        },
        py::arg("edge") = 1, py::arg("svg_dir") = py::none(), py::arg("timestamp") = py::none(),
        "Quarter the 4-cube into four triangle-times-triangle products.");

    m.def(
        "multinomial",
        [](int k, int n, py::object timestamp) {
            return json_to_py(
                heron4::report::multinomial_report(k, n, make_options(py::none(), timestamp)));
        },
        py::arg("k"), py::arg("n"), py::arg("timestamp") = py::none(),
        "Lattice classes of (x_1 + ... + x_k)^n.");

    m.def(
        "heron_expand",
        [](py::object a2, py::object b2, py::object c, py::object timestamp) {
            return json_to_py(heron4::report::heron_expand_report(
                to_rational(a2), to_rational(b2), to_rational(c),
                make_options(py::none(), timestamp)));
        },
        py::arg("a2"), py::arg("b2"), py::arg("c"), py::arg("timestamp") = py::none(),
        "The 81-term signed expansion of the Heron right-hand side and its cancellation.");

    m.def(
        "pythag",
        [](py::object legs1, py::object legs2, py::object svg_dir, py::object timestamp) {
            auto l1 = legs1.cast<py::tuple>();
            auto l2 = legs2.cast<py::tuple>();
            if (l1.size() != 2 || l2.size() != 2)
                throw py::value_error("legs1 and legs2 must be pairs");
            return json_to_py(heron4::report::pythag_report(
                to_rational(l1[0]), to_rational(l1[1]), to_rational(l2[0]), to_rational(l2[1]),
                make_options(svg_dir, timestamp)));
        },
        py::arg("legs1"), py::arg("legs2"), py::arg("svg_dir") = py::none(),
        py::arg("timestamp") = py::none(),
        "25-piece product dissection of R_zzww and its reassembly into four boxes.");

    m.def(
        "nicomachus",
        [](int n, py::object timestamp) {
            return json_to_py(
                heron4::report::nicomachus_report(n, make_options(py::none(), timestamp)));
        },
        py::arg("n"), py::arg("timestamp") = py::none(),
        "Sum of the first n cubes against the squared triangular number.");
}
