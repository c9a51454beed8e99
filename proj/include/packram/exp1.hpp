#pragma once

#include <packram/arrow.hpp>
#include <packram/coloring.hpp>
#include <packram/growth.hpp>
#include <packram/set.hpp>

#include <vector>

namespace packram
{
    /// Everything the exponent-1 construction produces. The ladder has
    /// boundaries w_0 = 1 < w_1 < ... < w_count; block i lives in
    /// (w_{i-1}, w_i], is f-monochromatic of size exactly phi(w_i), and has
    /// least canonical code among all such subsets of its interval. The
    /// selected indices carry the most frequent induced color (ties to the
    /// smallest color) and the result is the union of their blocks.
    struct exp1_solution
    {
        interval_ladder ladder;
        std::vector<number_set> blocks;
        std::vector<int> induced;
        int chosen_color;
        std::vector<int> selected;
        number_set result;
    };

    /// Boundaries w_0 = 1, then count applications of separation_witness:
    /// w_{i+1} is the least w > w_i with w - w_i >= k (phi(w) - 1) + 1, the
    /// pigeonhole guarantee of a monochromatic phi(w)-set in any k-coloring
    /// of the interval. Scanned w failing the w -> (phi(w))^1_{k+1} closed
    /// form throw hypothesis_error.
    auto build_ladder_exp1(const growth_function & phi, int k, int count,
            long long cap = 100000000) -> interval_ladder;

    /// Run the whole construction against an exponent-1 coloring.
    auto solve_exp1(const coloring_rule & f, const growth_function & phi, int count,
            long long cap = 100000000) -> exp1_solution;

    /// Same construction over a ladder built beforehand, so one ladder can
    /// serve many colorings of the same palette. The ladder must start at 1
    /// and satisfy the separation guarantee for f's palette.
    auto solve_exp1(const coloring_rule & f, const growth_function & phi,
            interval_ladder ladder) -> exp1_solution;
}
