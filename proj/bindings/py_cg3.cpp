// Python surface: decompositions, expansions, and verification entry points.
#include "cg3/cli.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cg3;

namespace {

py::object frac(const Rational& r) {
    py::object F = py::module_::import("fractions").attr("Fraction");
    py::object I = py::module_::import("builtins").attr("int");
    return F(I(boost::multiprecision::numerator(r).str()),
             I(boost::multiprecision::denominator(r).str()));
}

py::list diagram_list(const GTDiagram& d) {
    py::list l;
    for (int v : {d.m1, d.m2, d.m3, d.k1, d.k2, d.s}) l.append(v);
    return l;
}

py::list terms_list(const std::vector<CGTerm>& ts) {
    py::list out;
    for (auto& t : ts) {
        py::dict e;
        e["diagram_u"] = diagram_list(t.diagram_u);
        e["diagram_v"] = diagram_list(t.diagram_v);
        e["coefficient"] = frac(t.coeff);
        out.append(e);
    }
    return out;
}

HighestVectorLabel label_from(const std::vector<int>& sel,
                              const std::vector<int>& w1,
                              const std::vector<int>& w2) {
    if (sel.size() != 5 || w1.size() != 2 || w2.size() != 2)
        throw std::invalid_argument("expected label[5], w1[2], w2[2]");
    return detail::make_label({w1[0], w1[1], w2[0], w2[1]}, sel);
}

}  // namespace

PYBIND11_MODULE(_cg3, m) {
    m.doc() = "exact gl3 Clebsch-Gordan coefficients in the GT basis";

    m.def("decompose", [](std::vector<int> w1, std::vector<int> w2) {
        WeightPair wp{w1.at(0), w1.at(1), w2.at(0), w2.at(1)};
        if (!wp.valid()) throw std::invalid_argument("bad weights");
        py::list out;
        for (auto& l : enumerate_labels(wp)) {
            py::dict e;
            py::list sel;
            for (int v : {l.vtype, l.omega, l.phi, l.psi, l.theta})
                sel.append(v);
            e["label"] = sel;
            auto W = label_weight(l);
            py::list w;
            for (int v : W) w.append(v);
            e["weight"] = w;
            out.append(e);
        }
        return out;
    });

    m.def("cg", [](std::vector<int> w1, std::vector<int> w2,
                   std::vector<int> sel, std::vector<int> descent,
                   const std::string& mode) {
        auto l = label_from(sel, w1, w2);
        if (descent.size() != 3) throw std::invalid_argument("bad descent");
        DescentTriple d{descent[0], descent[1], descent[2]};
        py::dict out;
        if (mode == "formula") {
            out["terms"] = terms_list(cg_expansion(l, d));
        } else if (mode == "oracle") {
            out["terms"] = terms_list(oracle_expansion(l, d));
        } else {
            auto f = cg_expansion(l, d);
            auto o = oracle_expansion(l, d);
            out["terms"] = terms_list(f);
            out["verified"] = compare(f, o).empty();
        }
        return out;
    }, py::arg("w1"), py::arg("w2"), py::arg("label"), py::arg("descent"),
       py::arg("mode") = "both");

    m.def("gamma_eval_at_one", [](int g1, int g2, int g13, int g23) {
        return frac(eval_at_one({g1, g2, g13, g23}));
    });

    m.def("verify", [](int max_weight) {
        std::ostringstream out, err;
        int rc = run_command(
            {"verify", "--max-weight", std::to_string(max_weight)}, out, err);
        return py::make_tuple(rc, out.str());
    });

    m.def("run_command", [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int rc = run_command(args, out, err);
        return py::make_tuple(rc, out.str(), err.str());
    });
}
