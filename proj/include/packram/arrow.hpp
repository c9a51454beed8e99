#pragma once

#include <packram/coloring.hpp>
#include <packram/growth.hpp>
#include <packram/set.hpp>

#include <cstdint>
#include <optional>

namespace packram
{
    /// Does every k-coloring of the n-subsets of {1..w} admit an m-element
    /// homogeneous set? The quadruple is validated loosely: degenerate
    /// shapes (m < n, m > w, ...) are answered directly instead of rejected.
    struct arrow_query
    {
        int w;
        int m;
        int n;
        int k;
    };

    struct search_stats
    {
        std::uint64_t nodes = 0;
        double seconds = 0.0;
    };

    /// Answer to an arrow query. When the relation fails, certificate holds
    /// a coloring with no m-homogeneous set, already re-verified by an
    /// independent homogeneous-subset search before being returned.
    struct arrow_answer
    {
        bool holds;
        std::optional<coloring_rule> certificate;
        search_stats stats;
    };

    inline constexpr std::uint64_t default_budget = 1000000;

    /// Decide the arrow relation by exhaustive counterexample search with
    /// color-symmetry canonicalisation. Throws budget_exhausted_error when
    /// the node budget runs out before the search finishes.
    auto arrow_holds(const arrow_query & q, std::uint64_t budget = default_budget) -> arrow_answer;

    /// Any m-element f-homogeneous subset of within (defaults to the full
    /// ground set {1..horizon}), or nullopt. Deterministic: colors are tried
    /// in increasing order, elements in increasing order.
    auto find_homogeneous_subset(const coloring_rule & f, int m) -> std::optional<number_set>;
    auto find_homogeneous_subset(const coloring_rule & f, const number_set & within, int m) -> std::optional<number_set>;

    /// The largest m such that w -> (m)^n_{k+1}, i.e. with one spare color.
    /// Exponent 1 uses the pigeonhole closed form ceil(w / (k+1)); otherwise
    /// m descends from w, one arrow search per step.
    auto phi_max(int w, int n, int k, std::uint64_t budget = default_budget) -> int;

    /// The least w > m with w - m >= k * (phi(w) - 1) + 1, scanning at most
    /// cap values of w. Every scanned w is first checked against the
    /// pigeonhole closed form ceil(w / (k+1)) >= phi(w); a failure throws
    /// hypothesis_error naming the offending w.
    auto separation_witness(long long m, int k, const growth_function & phi, long long cap = 100000000) -> long long;

    namespace detail
    {
        /// The raw counterexample search, with no closed-form shortcuts.
        /// Exposed so tests can cross-check the shortcuts against it.
        auto arrow_search(const arrow_query & q, std::uint64_t budget) -> arrow_answer;
    }
}
