#pragma once

#include <packram/coloring.hpp>
#include <packram/growth.hpp>
#include <packram/partition.hpp>
#include <packram/set.hpp>

namespace packram
{
    /// Boundaries 0 and w_1 = 1, then each w_i (i >= 2, up to count of them)
    /// is the least w > w_{i-1} with phi(w) >= n * i. The leading 0 makes the
    /// covered span start at 1, with {1} as the first interval. phi must be
    /// an order function; a boundary not reached within cap scanned values
    /// throws bounds_error.
    auto build_sharp_ladder(const growth_function & phi, int n, int count,
            long long cap = 100000000) -> interval_ladder;

    /// An interval coloring: each n-subset maps to the serial number of its
    /// partition type across the ladder, types numbered 1..2^(n-1) in
    /// lexicographic order with all-ones first.
    struct sharp_coloring
    {
        int n;
        interval_ladder ladder;
        coloring_rule rule;
    };

    auto sharp_g(const interval_ladder & ladder, int n) -> sharp_coloring;

    /// h(Z) = f(Z) when Z has the all-ones type, otherwise k + (lexicographic
    /// position of the type). Palette k + 2^(n-1) - 1; the non-all-ones type
    /// colors sit above the f colors.
    auto merge_h(const coloring_rule & f, const sharp_coloring & g) -> coloring_rule;

    /// The least member of a in each nonempty ladder interval; at most one
    /// point per interval, so every n-subset of the result has the all-ones
    /// type.
    auto extract_homogeneous(const number_set & a, const interval_ladder & ladder) -> number_set;

    /// The single f-color taken by the all-ones-type n-subsets of a.
    /// Throws type_absent_error when a type needed by the precondition never
    /// occurs among the n-subsets of a, and ambiguous_color_error when
    /// all-ones subsets with two different f-colors are found.
    auto unique_allones_color(const coloring_rule & f, const sharp_coloring & g,
            const number_set & a) -> int;
}
