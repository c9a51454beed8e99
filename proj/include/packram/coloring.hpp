#pragma once

#include <packram/errors.hpp>
#include <packram/set.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace packram
{
    /// A k-coloring of the n-element subsets of {1..horizon}, colors 1..k.
    ///
    /// A coloring is backed by a closed-form rule, by a flat table in colex
    /// order of the n-subsets, or by both (a parsed file whose rule tag was
    /// recognised keeps the rule and the table is checked against it).
    class coloring_rule
    {
    public:
        /// Table in colex order of n-subsets of {1..horizon}; must have
        /// exactly binomial(horizon, n) entries, each in 1..k.
        static auto from_table(int n, int k, int horizon, std::vector<int> colors) -> coloring_rule;

        /// Every subset gets color c.
        static auto constant(int n, int k, int horizon, int c) -> coloring_rule;

        /// Color 1 + (min(Z) mod 2); the classic stable pair coloring, but
        /// defined for any exponent. Palette 2.
        static auto parity_min(int n, int horizon) -> coloring_rule;

        /// Color 1 + (sum(Z) mod 2). Palette 2.
        static auto parity_sum(int n, int horizon) -> coloring_rule;

        /// Pairs of {1..5}: color 1 on the cycle 1-2-3-4-5-1, color 2 on the
        /// complement. Neither color contains a triangle.
        static auto cycle5() -> coloring_rule;

        /// Deterministic pseudorandom coloring keyed by (seed, Z). Never
        /// needs a table, so the horizon may be large.
        static auto seeded_random(std::uint64_t seed, int n, int k, int horizon) -> coloring_rule;

        /// Pairs only: f({x,y}) settles to a per-x limit color once
        /// y - x exceeds a small per-x lag; below the lag it is pseudorandom.
        static auto stable_random(std::uint64_t seed, int k, int horizon, int max_lag) -> coloring_rule;

        /// Points only: x gets color 1 + (x-1) / class_size, capped at k.
        /// Every color class has at most class_size members when
        /// horizon <= k * class_size.
        static auto chunked(int k, int class_size, int horizon) -> coloring_rule;

        /// Arbitrary evaluator with a descriptive tag. The function must be
        /// pure and is trusted to return colors in 1..k.
        static auto from_function(int n, int k, int horizon, std::string tag,
                std::function<int (const number_set &)> fn) -> coloring_rule;

        auto exponent() const -> int { return _n; }
        auto palette() const -> int { return _k; }
        auto horizon() const -> int { return _horizon; }

        /// Rule tag, e.g. "const 1" or "random 7"; empty for table-only.
        auto tag() const -> const std::string & { return _tag; }

        auto has_table() const -> bool { return _has_table; }
        auto table() const -> const std::vector<int> & { return _table; }

        /// Number of n-subsets of {1..horizon}.
        auto subset_count() const -> std::uint64_t;

        /// The color of Z; Z must have exactly n elements within the horizon.
        auto color_of(const number_set & z) const -> int;

        /// Pair fast path; requires exponent 2 and 1 <= x < y <= horizon.
        auto color_of_pair(int x, int y) const -> int;

        /// Point fast path; requires exponent 1 and 1 <= x <= horizon.
        auto color_of_point(int x) const -> int;

        /// A copy whose table is materialised (rule kept for the tag line).
        auto tabulated() const -> coloring_rule;

    private:
        coloring_rule() = default;

        auto evaluate(const number_set & z) const -> int;

        enum class kind { table_only, constant, parity_min, parity_sum, cycle5, hashed, stable_hashed, chunked, custom };

        kind _kind = kind::table_only;
        int _n = 0, _k = 0, _horizon = 0;
        int _a = 0, _b = 0;
        std::uint64_t _seed = 0;
        std::string _tag;
        bool _has_table = false;
        std::vector<int> _table;
        std::function<int (const number_set &)> _fn;
    };

    /// The distinct colors f takes on n-subsets of a, in increasing order.
    /// Subsets of a smaller than the exponent contribute nothing.
    auto colors_used(const coloring_rule & f, const number_set & a) -> std::vector<int>;

    /// Does f use at most 2^(n-1) colors on the n-subsets of a?
    auto is_semi_homogeneous(const coloring_rule & f, const number_set & a) -> bool;

    /// Outcome of a homogeneity check: sets smaller than the exponent are
    /// vacuously homogeneous and carry no color.
    struct homogeneity
    {
        bool homogeneous;
        bool vacuous;
        int color;  // 0 when vacuous or not homogeneous
    };

    /// Does f give every n-subset of a the same color?
    auto is_homogeneous(const coloring_rule & f, const number_set & a) -> homogeneity;

    /// Well-mixed 64-bit hash used by the pseudorandom colorings.
    auto splitmix64(std::uint64_t z) -> std::uint64_t;
}
