#include <packram/arrow.hpp>
#include <packram/exp1.hpp>
#include <packram/exp2.hpp>
#include <packram/io.hpp>
#include <packram/largeness.hpp>
#include <packram/packed.hpp>
#include <packram/reversal.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

using namespace packram;

namespace
{
    auto as_lists(const std::vector<number_set> & sets) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> out;
        out.reserve(sets.size());
        for (const auto & s : sets)
            out.push_back(s.elements());
        return out;
    }
}

PYBIND11_MODULE(_packram, m)
{
    m.doc() = "finite packed-Ramsey toolkit";

    py::register_exception<error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<bad_input_error>(m, "BadInputError", PyExc_ValueError);
    py::register_exception<budget_exhausted_error>(m, "BudgetExhaustedError");
    py::register_exception<hypothesis_error>(m, "HypothesisError");
    py::register_exception<bounds_error>(m, "BoundsError");
    py::register_exception<invariant_violation_error>(m, "InvariantViolationError");
    py::register_exception<type_absent_error>(m, "TypeAbsentError");
    py::register_exception<ambiguous_color_error>(m, "AmbiguousColorError");

    py::class_<growth_function>(m, "Growth")
            .def_static("constant", &growth_function::constant, py::arg("value"))
            .def_static("ceil_div", &growth_function::ceil_div, py::arg("divisor"))
            .def_static("identity", &growth_function::identity)
            .def_static("log2_offset", &growth_function::log2_offset,
                    py::arg("offset"), py::arg("floor") = 1)
            .def_static("from_table", &growth_function::from_table, py::arg("values"))
            .def_static("parse", &parse_growth, py::arg("spec"))
            .def("__call__", &growth_function::operator(), py::arg("w"))
            .def("is_order_function", &growth_function::is_order_function)
            .def("describe", &growth_function::describe)
            .def("__repr__", [](const growth_function & phi) {
                return "Growth('" + phi.describe() + "')";
            });

    py::class_<coloring_rule>(m, "Coloring")
            .def_static("from_table", &coloring_rule::from_table,
                    py::arg("n"), py::arg("k"), py::arg("horizon"), py::arg("colors"))
            .def_static("constant", &coloring_rule::constant,
                    py::arg("n"), py::arg("k"), py::arg("horizon"), py::arg("color"))
            .def_static("parity_min", &coloring_rule::parity_min,
                    py::arg("n"), py::arg("horizon"))
            .def_static("parity_sum", &coloring_rule::parity_sum,
                    py::arg("n"), py::arg("horizon"))
            .def_static("seeded_random", &coloring_rule::seeded_random,
                    py::arg("seed"), py::arg("n"), py::arg("k"), py::arg("horizon"))
            .def_static("stable_random", &coloring_rule::stable_random,
                    py::arg("seed"), py::arg("k"), py::arg("horizon"), py::arg("max_lag"))
            .def_static("chunked", &coloring_rule::chunked,
                    py::arg("k"), py::arg("class_size"), py::arg("horizon"))
            .def_static("parse", &parse_rule,
                    py::arg("spec"), py::arg("n"), py::arg("k"), py::arg("horizon"))
            .def_property_readonly("exponent", &coloring_rule::exponent)
            .def_property_readonly("palette", &coloring_rule::palette)
            .def_property_readonly("horizon", &coloring_rule::horizon)
            .def_property_readonly("tag", &coloring_rule::tag)
            .def("color_of", [](const coloring_rule & f, const std::vector<int> & z) {
                return f.color_of(number_set(z));
            }, py::arg("subset"))
            .def("color_of_pair", &coloring_rule::color_of_pair, py::arg("x"), py::arg("y"))
            .def("color_of_point", &coloring_rule::color_of_point, py::arg("x"))
            .def("tabulated", &coloring_rule::tabulated)
            .def("__repr__", [](const coloring_rule & f) {
                return "Coloring('" + f.tag() + "', n=" + std::to_string(f.exponent())
                        + ", k=" + std::to_string(f.palette())
                        + ", horizon=" + std::to_string(f.horizon()) + ")";
            });

    m.def("colors_used", [](const coloring_rule & f, const std::vector<int> & a) {
        return colors_used(f, number_set(a));
    }, py::arg("coloring"), py::arg("members"));
    m.def("is_semi_homogeneous", [](const coloring_rule & f, const std::vector<int> & a) {
        return is_semi_homogeneous(f, number_set(a));
    }, py::arg("coloring"), py::arg("members"));
    m.def("is_homogeneous", [](const coloring_rule & f, const std::vector<int> & a) {
        auto h = is_homogeneous(f, number_set(a));
        return py::make_tuple(h.homogeneous, h.vacuous, h.color);
    }, py::arg("coloring"), py::arg("members"),
            "returns (homogeneous, vacuous, color)");

    m.def("arrow_holds", [](int w, int mm, int n, int k, std::uint64_t budget) {
        auto answer = arrow_holds(arrow_query{w, mm, n, k}, budget);
        return py::make_tuple(answer.holds, answer.stats.nodes);
    }, py::arg("w"), py::arg("m"), py::arg("n"), py::arg("k"),
            py::arg("budget") = default_budget,
            "returns (holds, nodes)");
    m.def("phi_max", &phi_max, py::arg("w"), py::arg("n"), py::arg("k"),
            py::arg("budget") = default_budget);
    m.def("separation_witness", &separation_witness,
            py::arg("m"), py::arg("k"), py::arg("phi"), py::arg("cap") = 100000000LL);
    m.def("find_homogeneous_subset", [](const coloring_rule & f, int size) {
        auto found = find_homogeneous_subset(f, size);
        return found ? py::cast(found->elements()) : py::none().cast<py::object>();
    }, py::arg("coloring"), py::arg("size"));

    m.def("packed_witnesses", [](const std::vector<int> & a, const growth_function & phi,
            int horizon, int threshold) {
        auto report = make_packed_report(number_set(a), phi, horizon, threshold);
        return py::make_tuple(report.packed_at_horizon, report.witnesses);
    }, py::arg("members"), py::arg("phi"), py::arg("horizon"), py::arg("threshold") = 0,
            "returns (packed, witnesses)");

    py::class_<exp1_solution>(m, "Exp1Solution")
            .def_property_readonly("boundaries", [](const exp1_solution & s) {
                return s.ladder.boundaries();
            })
            .def_property_readonly("blocks", [](const exp1_solution & s) {
                return as_lists(s.blocks);
            })
            .def_readonly("induced", &exp1_solution::induced)
            .def_readonly("chosen_color", &exp1_solution::chosen_color)
            .def_readonly("selected", &exp1_solution::selected)
            .def_property_readonly("result", [](const exp1_solution & s) {
                return s.result.elements();
            });

    m.def("solve_exp1",
            static_cast<exp1_solution (*)(const coloring_rule &, const growth_function &,
                    int, long long)>(&solve_exp1),
            py::arg("coloring"), py::arg("phi"),
            py::arg("blocks"), py::arg("cap") = 100000000LL);
    m.def("build_ladder_exp1", [](const growth_function & phi, int k, int count, long long cap) {
        return build_ladder_exp1(phi, k, count, cap).boundaries();
    }, py::arg("phi"), py::arg("k"), py::arg("blocks"), py::arg("cap") = 100000000LL);

    py::class_<largeness_verdict>(m, "LargenessVerdict")
            .def_property_readonly("kind", [](const largeness_verdict & v) {
                switch (v.kind) {
                case verdict_kind::large: return "large";
                case verdict_kind::small_up_to: return "small";
                default: return "unknown";
                }
            })
            .def_readonly("witness", &largeness_verdict::witness)
            .def_readonly("w_max", &largeness_verdict::w_max)
            .def_readonly("reached", &largeness_verdict::reached)
            .def_readonly("counterexamples", &largeness_verdict::counterexamples)
            .def_property_readonly("nodes", [](const largeness_verdict & v) {
                return v.stats.nodes;
            });

    m.def("check_large", [](const std::vector<int> & members, const coloring_rule & f,
            const growth_function & phi, int mm, int p, int w_max, std::uint64_t budget) {
        largeness_query q{membership(number_set(members), w_max), f, phi, mm, p, w_max, budget};
        return check_large(q);
    }, py::arg("members"), py::arg("coloring"), py::arg("phi"), py::arg("m"),
            py::arg("p"), py::arg("w_max"), py::arg("budget") = default_budget);
    m.def("check_large_all", [](const coloring_rule & f, const growth_function & phi,
            int mm, int p, int w_max, std::uint64_t budget) {
        largeness_query q{membership::everything(w_max), f, phi, mm, p, w_max, budget};
        return check_large(q);
    }, py::arg("coloring"), py::arg("phi"), py::arg("m"), py::arg("p"),
            py::arg("w_max"), py::arg("budget") = default_budget);

    py::class_<exp2_pipeline>(m, "Exp2Pipeline")
            .def_property_readonly("helper", [](const exp2_pipeline & s) {
                return s.helper.values();
            })
            .def_property_readonly("boundaries", [](const exp2_pipeline & s) {
                return s.seq.boundaries().boundaries();
            })
            .def_property_readonly("blocks", [](const exp2_pipeline & s) {
                std::vector<std::vector<int>> out;
                for (int i = 1 ; i <= s.seq.block_count() ; ++i)
                    out.push_back(s.seq.block(i).elements());
                return out;
            })
            .def_readonly("induced_between", &exp2_pipeline::induced_between)
            .def_readonly("induced_within", &exp2_pipeline::induced_within)
            .def_readonly("selected", &exp2_pipeline::selected)
            .def_property_readonly("result", [](const exp2_pipeline & s) {
                return s.result.elements();
            })
            .def_readonly("downgrades", &exp2_pipeline::downgrades);

    m.def("build_pipeline", [](const coloring_rule & f, const growth_function & phi,
            int blocks, int w_max, int p, int mm, std::uint64_t budget) {
        return build_pipeline(f, phi, blocks, exp2_bounds{w_max, p, mm, budget});
    }, py::arg("coloring"), py::arg("phi"), py::arg("blocks"), py::arg("w_max"),
            py::arg("p") = 0, py::arg("m") = 0, py::arg("budget") = default_budget);

    py::class_<sharp_coloring>(m, "SharpColoring")
            .def_readonly("n", &sharp_coloring::n)
            .def_property_readonly("boundaries", [](const sharp_coloring & g) {
                return g.ladder.boundaries();
            })
            .def_readonly("rule", &sharp_coloring::rule);

    m.def("build_sharp_ladder", [](const growth_function & phi, int n, int count,
            long long scan_cap) {
        return build_sharp_ladder(phi, n, count, scan_cap).boundaries();
    }, py::arg("phi"), py::arg("n"), py::arg("count"), py::arg("cap") = 100000000LL);
    m.def("sharp_g", [](const std::vector<int> & boundaries, int n) {
        return sharp_g(interval_ladder(boundaries), n);
    }, py::arg("boundaries"), py::arg("n"));
    m.def("merge_h", &merge_h, py::arg("coloring"), py::arg("sharp"));
    m.def("extract_homogeneous", [](const std::vector<int> & a,
            const std::vector<int> & boundaries) {
        return extract_homogeneous(number_set(a), interval_ladder(boundaries)).elements();
    }, py::arg("members"), py::arg("boundaries"));
    m.def("unique_allones_color", [](const coloring_rule & f, const sharp_coloring & g,
            const std::vector<int> & a) {
        return unique_allones_color(f, g, number_set(a));
    }, py::arg("coloring"), py::arg("sharp"), py::arg("members"));

    m.def("coloring_to_text", [](const coloring_rule & f) {
        std::ostringstream out;
        write_coloring(out, f);
        return out.str();
    }, py::arg("coloring"));
    m.def("coloring_from_text", [](const std::string & text) {
        std::istringstream in(text);
        return read_coloring(in);
    }, py::arg("text"));
}
