#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyc/compute.hpp"
#include "cyc/suites.hpp"
#include "cyc/witt.hpp"

namespace py = pybind11;
using namespace cyc;

namespace {

Witt2 witt(int p, int d, const std::pair<int, int>& u) {
    RingPtr R = Ring::get(p, d);
    if (u.first < 0 || u.second < 0 || u.first >= R->size() || u.second >= R->size()) throw usage_error("Witt coordinates out of range");
    return {R, static_cast<Elt>(u.first), static_cast<Elt>(u.second)};
}

std::pair<int, int> pair_of(const Witt2& w) { return {w.x0, w.x1}; }

std::string verify(const std::vector<std::string>& suites, unsigned long long seed, int sizes, const std::string& ring,
                   const std::vector<int>& ps, int d) {
    SuiteOptions opt;
    opt.seed = seed;
    opt.sizes = sizes;
    opt.ring = ring;
    opt.ps = ps;
    opt.d = d;
    std::vector<SuiteResult> rs;
    for (const auto& s : suites.empty() ? suite_names() : suites) {
        SuiteResult r{s, {}};
        for (int id : suite_criteria(s)) r.criteria.push_back(run_criterion(id, opt));
        rs.push_back(std::move(r));
    }
    return report_json(rs, opt, false).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "cyclic powers, second Witt vectors and splittings over finite chain rings";
    py::register_exception_translator([](std::exception_ptr e) {
        try {
            if (e) std::rethrow_exception(e);
        } catch (const schema_error& x) {
            PyErr_SetString(PyExc_ValueError, ((x.pointer.empty() ? "/" : x.pointer) + ": " + x.what()).c_str());
        }
    });

    m.def("witt_add", [](int p, int d, std::pair<int, int> u, std::pair<int, int> v) {
        return pair_of(witt_add(witt(p, d, u), witt(p, d, v)));
    }, py::arg("p"), py::arg("d"), py::arg("u"), py::arg("v"));
    m.def("witt_mul", [](int p, int d, std::pair<int, int> u, std::pair<int, int> v) {
        return pair_of(witt_mul(witt(p, d, u), witt(p, d, v)));
    }, py::arg("p"), py::arg("d"), py::arg("u"), py::arg("v"));
    m.def("witt_ghost", [](int p, std::pair<int, int> u) { return witt_ghost_iso(witt(p, 1, u)); }, py::arg("p"), py::arg("u"));
    m.def("witt_elements", [](int p, int d) {
        std::vector<std::pair<int, int>> out;
        for (auto& w : witt_elements(Ring::get(p, d))) out.push_back(pair_of(w));
        return out;
    }, py::arg("p"), py::arg("d") = 1);
    m.def("demo_witt", &demo_witt, py::arg("p"), py::arg("d"));

    m.def("_compute", [](const std::string& kind, const std::string& text) {
        json in;
        try {
            in = json::parse(text);
        } catch (const json::parse_error& e) {
            throw schema_error("", e.what());
        }
        if (kind == "tate") return compute_tate(in).dump();
        if (kind == "cyclic") return compute_cyclic(in).dump();
        if (kind == "splitting") return compute_splitting(in).dump();
        throw usage_error("unknown kind '" + kind + "'");
    });
    m.def("_verify", &verify, py::arg("suites"), py::arg("seed"), py::arg("sizes"), py::arg("ring"), py::arg("ps"), py::arg("d"));
    m.def("criterion_title", &criterion_title);
    m.def("suite_criteria", &suite_criteria);
}
