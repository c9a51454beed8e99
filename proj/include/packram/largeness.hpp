#pragma once

#include <packram/arrow.hpp>
#include <packram/coloring.hpp>
#include <packram/growth.hpp>
#include <packram/set.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace packram
{
    /// A bounded membership predicate: the members of X within {1..bound},
    /// held explicitly.
    class membership
    {
    public:
        membership(number_set elements, int bound);

        static auto everything(int bound) -> membership;
        static auto where(const std::function<bool (int)> & pred, int bound) -> membership;

        auto elements() const -> const number_set & { return _elements; }
        auto bound() const -> int { return _bound; }

    private:
        number_set _elements;
        int _bound;
    };

    /// {y in x : y > anchor and f({anchor, y}) = color}: the tail refinement
    /// used to grow helper colorings one anchor at a time.
    auto refine_by_color(const membership & x, const coloring_rule & f, int anchor, int color) -> membership;

    /// Bounded form of the largeness question for a pair coloring f: is
    /// there a w in (m, w_max] such that every p-partition of X intersect
    /// (m, w] leaves some class holding an f-homogeneous set of size at
    /// least phi(w)?
    struct largeness_query
    {
        membership x;
        coloring_rule f;
        growth_function phi;
        int m;
        int p;
        int w_max;
        std::uint64_t budget = default_budget;
    };

    enum class verdict_kind { large, small_up_to, unknown };

    /// large: witness is the smallest good w, certified by an exhausted
    /// partition search. small_up_to: every w in (m, w_max] has a stored
    /// defeating partition (element -> class, positions 1..w, non-members
    /// marked class 1), each re-verified by an independent homogeneous-set
    /// search. unknown: the node budget ran out at w = reached.
    struct largeness_verdict
    {
        verdict_kind kind = verdict_kind::small_up_to;
        int witness = 0;
        int w_max = 0;
        int reached = 0;
        std::map<int, std::vector<int>> counterexamples;
        search_stats stats;
    };

    auto check_large(const largeness_query & q) -> largeness_verdict;
}
