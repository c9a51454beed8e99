#pragma once

#include <packram/coloring.hpp>
#include <packram/growth.hpp>
#include <packram/largeness.hpp>
#include <packram/packed.hpp>
#include <packram/set.hpp>

#include <cstdint>
#include <vector>

namespace packram
{
    /// A finite string tau with tau(x) in {1..k}, indexed 1..length. Carries
    /// the helper values committed so far along a path through the tree of
    /// candidate helper colorings.
    class helper_string
    {
    public:
        helper_string() = default;
        explicit helper_string(std::vector<int> values);

        auto length() const -> int { return int(_values.size()); }
        auto empty() const -> bool { return _values.empty(); }

        /// Positions are 1-indexed.
        auto value(int x) const -> int;
        auto values() const -> const std::vector<int> & { return _values; }

        auto extended(int color) const -> helper_string;
        auto is_prefix_of(const helper_string & rho) const -> bool;

        auto operator==(const helper_string & other) const -> bool = default;

    private:
        std::vector<int> _values;
    };

    /// Shared knobs for the bounded largeness questions asked while growing
    /// a helper path. p = 0 means "use the palette of the pair coloring".
    struct exp2_bounds
    {
        int w_max;
        int p = 0;
        int m = 0;
        std::uint64_t budget = default_budget;
    };

    /// The tail set of tau below the given bound: every y > |tau| with
    /// f({x, y}) = tau(x) for all x <= |tau|, built by iterated refinement.
    auto tail_set(const helper_string & tau, const coloring_rule & f, int bound) -> membership;

    /// Is tau on the helper tree at these bounds, i.e. is its tail set large?
    auto in_tree(const helper_string & tau, const coloring_rule & f, const growth_function & phi,
            const exp2_bounds & bounds) -> largeness_verdict;

    struct path_extension
    {
        helper_string path;
        int color;
        bool downgraded;
    };

    /// tau extended by the smallest color whose tail stays large. When no
    /// color is decidedly large, the smallest unknown-verdict color is taken
    /// and flagged as a downgrade; all colors small throws bounds_error.
    auto extend_path(const helper_string & tau, const coloring_rule & f, const growth_function & phi,
            const exp2_bounds & bounds) -> path_extension;

    struct block_find
    {
        int w;
        number_set y;
    };

    /// The smallest w > m, then the least-code Y inside (m, w] intersected
    /// with x, such that |Y| >= phi(w), Y is f-homogeneous, and the helper
    /// path is constant on Y. The path is extended in place as the scan
    /// needs helper values at new positions; downgrades counts unknown-
    /// verdict extensions taken along the way.
    auto next_block(helper_string & path, const membership & x, int m, const coloring_rule & f,
            const growth_function & phi, const exp2_bounds & bounds, int & downgrades) -> block_find;

    /// The finished construction: every block is homogeneous for both f and
    /// the helper; pairs straddling blocks i < j take the helper's color at
    /// their left endpoint; selected blocks share one (between, within)
    /// color pair, making the union semi-homogeneous.
    struct exp2_pipeline
    {
        helper_string helper;
        block_sequence seq;
        std::vector<int> induced_between;
        std::vector<int> induced_within;
        std::vector<int> selected;
        number_set result;
        int downgrades = 0;
    };

    auto build_pipeline(const coloring_rule & f, const growth_function & phi, int num_blocks,
            const exp2_bounds & bounds) -> exp2_pipeline;
}
