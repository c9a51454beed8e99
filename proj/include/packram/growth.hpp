#pragma once

#include <packram/errors.hpp>

#include <optional>
#include <string>
#include <vector>

namespace packram
{
    /// A growth function phi : {1, 2, ...} -> {0, 1, ...}, given either by a
    /// named closed form or by a finite table. Order functions (total,
    /// non-decreasing, unbounded range) additionally carry a flag; the flag is
    /// asserted by construction for the closed forms that qualify and is
    /// checked on prefixes by verify_order_prefix.
    class growth_function
    {
    public:
        /// phi(w) = c. Not an order function.
        static auto constant(int c) -> growth_function;

        /// phi(w) = ceil(w / d), d >= 1. Order function.
        static auto ceil_div(int d) -> growth_function;

        /// phi(w) = w. Order function.
        static auto identity() -> growth_function;

        /// phi(w) = max(floor, floor(log2(w)) + offset). Order function.
        static auto log2_offset(int offset, int floor) -> growth_function;

        /// phi(w) = table[w - 1]; queries past the table throw bounds_error.
        /// Not flagged as an order function (a table cannot witness an
        /// unbounded range).
        static auto from_table(std::vector<int> values) -> growth_function;

        auto operator() (long long w) const -> int;

        auto is_order_function() const -> bool { return _order; }

        /// Round-trippable description, e.g. "ceildiv 4" or "table".
        auto describe() const -> std::string;

        /// Checks non-decrease on 1..limit and that the value strictly
        /// increases somewhere in the window; returns the first offending w
        /// for a decrease, nullopt when the prefix is consistent with the
        /// order-function claim.
        auto verify_order_prefix(int limit) const -> std::optional<int>;

    private:
        enum class kind { constant, ceil_div, identity, log2_offset, table };

        kind _kind = kind::constant;
        int _a = 0, _b = 0;
        std::vector<int> _table;
        bool _order = false;
    };
}
