#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "posetder/criteria.hpp"
#include "posetder/derivations.hpp"
#include "posetder/errors.hpp"
#include "posetder/fixtures.hpp"
#include "posetder/homology.hpp"
#include "posetder/report.hpp"
#include "posetder/survey.hpp"

namespace py = pybind11;
using namespace posetder;

namespace {

std::vector<long long> to_ints(const std::vector<mpz_class>& v) {
    std::vector<long long> out;
    for (const auto& x : v) {
        if (!x.fits_slong_p()) throw std::overflow_error("value does not fit in a machine integer");
        out.push_back(x.get_si());
    }
    return out;
}

IntegerMatrix to_matrix(const std::vector<std::vector<long long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InputError("matrix rows must have equal length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rows[r][c]);
    }
    return m;
}

std::vector<std::string> ring_list(const std::optional<std::vector<std::string>>& rings) {
    return rings ? *rings : AnalyzeOptions{}.rings;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Outer derivations, order-complex homology and conclusiveness of finite posets";

    auto base = py::register_exception<Error>(m, "PosetError", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", base.ptr());
    py::register_exception<PathLimitExceeded>(m, "PathLimitExceeded", base.ptr());

    py::class_<Poset>(m, "Poset")
        .def(py::init(&Poset::from_covers), py::arg("elements"), py::arg("covers"))
        .def_static("from_json", [](const std::string& text) { return poset_from_json(Json::parse(text)); })
        .def("to_json", [](const Poset& p) { return poset_to_json(p).dump(); })
        .def("__len__", &Poset::size)
        .def_property_readonly("elements", &Poset::elements)
        .def_property_readonly("covers",
                               [](const Poset& p) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (const auto& e : p.covers()) out.emplace_back(p.name(e.lower), p.name(e.upper));
                                   return out;
                               })
        .def("compare",
             [](const Poset& p, const std::string& x, const std::string& y) {
                 switch (compare(p, x, y)) {
                     case Comparison::less: return "less";
                     case Comparison::greater: return "greater";
                     case Comparison::equal: return "equal";
                     default: return "incomparable";
                 }
             })
        .def("canonical_hash", &canonical_hash)
        .def("__repr__", [](const Poset& p) {
            return "<Poset " + std::to_string(p.size()) + " elements, " + std::to_string(p.covers().size()) + " covers>";
        });

    m.def("fixture", [](const std::string& name) { return fixtures::by_name(name); }, py::arg("name"));
    m.def("fixture_json", [](const std::string& name) { return fixture_json(name).dump(); }, py::arg("name"));

    m.def("shape_stats", [](const Poset& p) {
        const auto s = shape_stats(p);
        py::dict d;
        d["vertex_count"] = s.vertex_count;
        d["edge_count"] = s.edge_count;
        d["component_count"] = s.component_count;
        d["height"] = s.height;
        d["minimal_count"] = s.minimal_count;
        d["maximal_count"] = s.maximal_count;
        d["middle_count"] = s.middle_count;
        return d;
    });
    m.def("beat_points", [](const Poset& p) {
        std::vector<std::string> out;
        for (int x : beat_points(p)) out.push_back(p.name(x));
        return out;
    });
    m.def("core", &core);

    m.def(
        "homology",
        [](const Poset& p, int dim) {
            const auto h = homology(p, dim);
            return py::make_tuple(h.betti, to_ints(h.torsion));
        },
        py::arg("poset"), py::arg("dim") = 1);
    m.def("euler_characteristic", [](const Poset& p) { return euler_characteristic(order_complex(p, -1)); });
    m.def("classify", [](const Poset& p) { return verdict_to_json(classify(p)).dump(); });

    m.def(
        "der_pot_dims",
        [](const Poset& p, const std::string& ring, std::size_t path_limit) {
            const auto d = der_pot_dims(p, Ring::parse(ring), path_limit);
            return py::make_tuple(d.der_dim, d.pot_dim);
        },
        py::arg("poset"), py::arg("ring") = "q", py::arg("path_limit") = kDefaultPathLimit);
    m.def(
        "has_outer_derivation",
        [](const Poset& p, const std::string& ring) { return has_outer_derivation(p, Ring::parse(ring)); },
        py::arg("poset"), py::arg("ring") = "q");
    m.def(
        "witness",
        [](const Poset& p, std::uint64_t prime) { return witness_json(p, prime).dump(); }, py::arg("poset"),
        py::arg("prime"));
    m.def(
        "verify",
        [](const Poset& p, const std::string& function_json) {
            return verify_derivation(p, cover_assignment_from_json(p, Json::parse(function_json))).dump();
        },
        py::arg("poset"), py::arg("function_json"));

    m.def("smith_divisors",
          [](const std::vector<std::vector<long long>>& rows) { return to_ints(smith_divisors(to_matrix(rows))); });
    m.def("rank_over", [](const std::vector<std::vector<long long>>& rows, const std::string& ring) {
        return rank_over(to_matrix(rows), Ring::parse(ring));
    });

    m.def(
        "analyze",
        [](const Poset& p, const std::optional<std::vector<std::string>>& rings, std::optional<std::uint64_t> witness) {
            AnalyzeOptions o;
            o.rings = ring_list(rings);
            o.witness_prime = witness;
            return report_to_json(p, analyze(p, o)).dump();
        },
        py::arg("poset"), py::arg("rings") = py::none(), py::arg("witness") = py::none());
    m.def(
        "criteria",
        [](const Poset& p) {
            const auto r = evaluate_criteria(p);
            std::optional<ConclusiveVerdict> v;
            if (r.table2_case) v = classify(p);
            return criteria_to_json(p, r, v).dump();
        },
        py::arg("poset"));

    m.def("poset_counts", [](int max_n) {
        std::vector<std::size_t> out;
        for (const auto& level : enumerate_posets_up_to(max_n)) out.push_back(level.size());
        return out;
    });
    m.def(
        "sweep",
        [](int max_n, int jobs) {
            py::gil_scoped_release release;
            const auto r = sweep(max_n, jobs);
            return sweep_to_json(r, false).dump();
        },
        py::arg("max_n"), py::arg("jobs") = 1);
}
