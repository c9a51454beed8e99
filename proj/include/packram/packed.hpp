#pragma once

#include <packram/coloring.hpp>
#include <packram/growth.hpp>
#include <packram/set.hpp>

#include <vector>

namespace packram
{
    /// Finite shadow of "A is packed for phi": the witnesses are the w up to
    /// the horizon with |A intersect {1..w}| >= phi(w), and the verdict asks
    /// for a witness beyond the caller's threshold.
    struct packed_report
    {
        int horizon;
        int threshold;
        std::vector<int> witnesses;
        bool packed_at_horizon;
    };

    auto make_packed_report(const number_set & a, const growth_function & phi,
            int horizon, int threshold = 0) -> packed_report;

    /// A ladder of boundaries w_0 < ... < w_t together with a member set;
    /// block i is members intersect (w_{i-1}, w_i]. Members must lie inside
    /// the covered span.
    class block_sequence
    {
    public:
        block_sequence(number_set members, interval_ladder boundaries);

        auto members() const -> const number_set & { return _members; }
        auto boundaries() const -> const interval_ladder & { return _boundaries; }
        auto block_count() const -> int { return _boundaries.interval_count(); }
        auto block(int i) const -> number_set;

    private:
        number_set _members;
        interval_ladder _boundaries;
    };

    /// Is y a finite f-homogeneous set whose size reaches phi(w) for some
    /// w >= max(y) within f's horizon? For order functions only w = max(y)
    /// needs checking; otherwise the whole range is scanned.
    auto is_block(const number_set & y, const coloring_rule & f, const growth_function & phi) -> bool;

    /// Does every derived block come out nonempty, f-homogeneous, and of
    /// size at least phi of its closing boundary?
    auto is_increasing_block_sequence(const block_sequence & seq,
            const coloring_rule & f, const growth_function & phi) -> bool;
}
