// Python bindings for the main operations. Rational coordinates cross the
// boundary as "p/q" strings so nothing is lost to floating point.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chirogrid/experiments.hpp"

namespace py = pybind11;
using namespace chirogrid;

namespace {

Rat rat_from_str(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw py::value_error("malformed rational: " + s);
    r.canonicalize();
    return r;
}

using PyPoints = std::vector<std::vector<std::string>>;

std::vector<Point> points_in(const PyPoints& pts) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        Point q;
        q.reserve(p.size());
        for (const auto& s : p) q.push_back(rat_from_str(s));
        out.push_back(std::move(q));
    }
    return out;
}

PyPoints points_out(const std::vector<Point>& pts) {
    PyPoints out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        std::vector<std::string> q;
        q.reserve(p.size());
        for (const auto& x : p) q.push_back(x.get_str());
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_chirogrid, m) {
    m.doc() = "Exact chirotopes of rational point sets, grid rounding, and "
              "the rounding-experiment harness.";

    m.def(
        "sample",
        [](long n, int d, uint64_t seed, const std::string& domain, int bits) {
            SamplerConfig cfg{domain_from_name(domain), d, n, bits, seed};
            return points_out(sample_config(cfg).points);
        },
        py::arg("n"), py::arg("d"), py::arg("seed") = 0, py::arg("domain") = "ball",
        py::arg("bits") = 96);

    m.def(
        "grid_denominator",
        [](long n, int d, const std::string& eps) {
            return grid_from_params(n, d, rat_from_str(eps)).M.get_str();
        },
        py::arg("n"), py::arg("d"), py::arg("eps") = "0");

    m.def(
        "round_config",
        [](const PyPoints& pts, const std::string& m_str) {
            GridSpec g{Int(m_str)};
            return points_out(round_config(points_in(pts), g));
        },
        py::arg("points"), py::arg("m"));

    m.def(
        "chirotope",
        [](const PyPoints& pts, int d) {
            Chirotope c = compute_chirotope(points_in(pts), d);
            std::string s;
            s.reserve(c.signs.size());
            for (Sign sg : c.signs) s.push_back(sign_char(sg));
            return s;
        },
        py::arg("points"), py::arg("d"),
        "Signs of all increasing (d+1)-subsets in lex order, as a +/-/0 string.");

    m.def(
        "orientation",
        [](const PyPoints& tuple) {
            return static_cast<int>(orientation(points_in(tuple)));
        },
        py::arg("tuple"));

    m.def(
        "encode",
        [](const PyPoints& pts, const std::string& m_str) {
            GridSpec g{Int(m_str)};
            auto bytes = serialize(encode(points_in(pts), g));
            return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
        },
        py::arg("points"), py::arg("m"));

    m.def("decode", [](const py::bytes& blob) {
        std::string s = blob;
        std::vector<uint8_t> bytes(s.begin(), s.end());
        return points_out(decode(deserialize(bytes)));
    });

    m.def(
        "success_lower_bound",
        [](long n, int d, const std::string& eps) {
            BoundValues b = success_lower_bound(n, d, rat_from_str(eps));
            return py::make_tuple(b.paper, b.exact);
        },
        py::arg("n"), py::arg("d"), py::arg("eps") = "0",
        "(paper, exact) lower bounds on the preservation probability.");

    m.def(
        "run_theorem_experiment",
        [](long n, int d, const std::string& eps, long trials, uint64_t seed,
           const std::string& domain) {
            ExperimentParams p{n, d, rat_from_str(eps), trials, seed,
                               domain_from_name(domain), 96};
            return summary_to_json(run_theorem_experiment(p));
        },
        py::arg("n"), py::arg("d"), py::arg("eps") = "0", py::arg("trials") = 10,
        py::arg("seed") = 0, py::arg("domain") = "ball",
        "Returns the experiment summary as a JSON string.");

    m.def(
        "verify_lemma1",
        [](int d, long trials, uint64_t seed) {
            return lemma1_falsify(d, trials, seed).counterexamples;
        },
        py::arg("d"), py::arg("trials"), py::arg("seed") = 0);

    m.def(
        "verify_lemma2",
        [](int d, long trials, const std::string& m_str, uint64_t seed) {
            return lemma2_property_run(d, trials, Int(m_str), seed).violations;
        },
        py::arg("d"), py::arg("trials"), py::arg("m"), py::arg("seed") = 0);
}
