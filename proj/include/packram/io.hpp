#pragma once

#include <packram/coloring.hpp>
#include <packram/exp1.hpp>
#include <packram/exp2.hpp>
#include <packram/growth.hpp>
#include <packram/largeness.hpp>
#include <packram/reversal.hpp>
#include <packram/set.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace packram
{
    /// Growth specs: "const C", "ceildiv D", "id", "log2 OFFSET FLOOR",
    /// "table V1 V2 ...". The inverse of growth_function::describe for the
    /// named forms.
    auto parse_growth(const std::string & spec) -> growth_function;

    /// Rule specs: "const C", "parity", "sumparity", "cycle5", "random SEED",
    /// "stablerandom SEED LAG", "chunked SIZE". The shape parameters n, k,
    /// horizon come from the surrounding context (file header or flags).
    auto parse_rule(const std::string & spec, int n, int k, int horizon) -> coloring_rule;

    /// Coloring files ("packram-coloring v1"): header keys n, k, horizon, an
    /// optional rule line, then a "colors" block holding the full table in
    /// colex order, then "end". A rule line must parse, and the table must
    /// match the rule everywhere.
    auto read_coloring(std::istream & in) -> coloring_rule;
    auto write_coloring(std::ostream & out, const coloring_rule & f) -> void;

    /// Set files: one integer per line; # comments and blank lines skipped.
    auto read_set(std::istream & in) -> number_set;
    auto write_set(std::ostream & out, const number_set & a) -> void;

    /// One envelope ("packram-solution v1") for both solver outputs. The
    /// within / helper / downgrades fields are used only by the pair solver,
    /// chosen only by the singleton solver.
    struct solution_record
    {
        std::string kind;
        std::vector<int> boundaries;
        std::vector<std::vector<int>> blocks;
        std::vector<int> between;
        std::vector<int> within;
        std::vector<int> helper;
        int chosen = 0;
        std::vector<int> selected;
        std::vector<int> result;
        int downgrades = 0;
    };

    auto to_record(const exp1_solution & s) -> solution_record;
    auto to_record(const exp2_pipeline & s) -> solution_record;
    auto read_solution(std::istream & in) -> solution_record;
    auto write_solution(std::ostream & out, const solution_record & r) -> void;

    /// Sharp files ("packram-sharp v1"): the exponent and the ladder
    /// boundaries; the interval coloring is rebuilt on load.
    auto read_sharp(std::istream & in) -> sharp_coloring;
    auto write_sharp(std::ostream & out, const sharp_coloring & g) -> void;

    /// Verdict reports ("packram-verdict v1"): kind, witness / reached / wmax
    /// / nodes, and one "counterexample W RHO..." line per refuted w.
    auto read_verdict(std::istream & in) -> largeness_verdict;
    auto write_verdict(std::ostream & out, const largeness_verdict & v) -> void;

    auto load_coloring(const std::string & path) -> coloring_rule;
    auto save_coloring(const std::string & path, const coloring_rule & f) -> void;
    auto load_set(const std::string & path) -> number_set;
    auto save_set(const std::string & path, const number_set & a) -> void;
    auto load_solution(const std::string & path) -> solution_record;
    auto save_solution(const std::string & path, const solution_record & r) -> void;
    auto load_sharp(const std::string & path) -> sharp_coloring;
    auto save_sharp(const std::string & path, const sharp_coloring & g) -> void;
}
