#include <packram/reversal.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace packram
{
    using std::map;
    using std::move;
    using std::ostringstream;
    using std::string;
    using std::to_string;
    using std::vector;

    namespace
    {
        auto describe_type(const partition_type & type) -> string
        {
            ostringstream out;
            out << "(";
            for (int i = 0 ; i < type.length() ; ++i)
                out << (i ? "," : "") << type.parts()[std::size_t(i)];
            out << ")";
            return out.str();
        }

        auto type_serials(int n) -> map<partition_type, int>
        {
            map<partition_type, int> serial;
            int next = 1;
            for (const auto & type : partition_types(n))
                serial.emplace(type, next++);
            return serial;
        }
    }

    auto build_sharp_ladder(const growth_function & phi, int n, int count, long long cap) -> interval_ladder
    {
        if (!phi.is_order_function())
            throw bad_input_error("the sharp ladder needs an order function");
        if (n < 1)
            throw bad_input_error("the sharp ladder needs exponent at least 1");
        if (count < 1)
            throw bad_input_error("the sharp ladder needs at least one boundary");
        if (cap < 1)
            throw bad_input_error("the sharp ladder scan cap must be positive");

        vector<int> boundaries{0, 1};
        long long previous = 1;
        for (int i = 2 ; i <= count ; ++i) {
            long long needed = static_cast<long long>(n) * i;
            long long w = previous + 1;
            for ( ; w <= previous + cap ; ++w)
                if (phi(w) >= needed)
                    break;
            if (w > previous + cap)
                throw bounds_error("phi never reaches " + to_string(needed)
                        + " within " + to_string(cap) + " values past " + to_string(previous));
            if (w > 2000000000)
                throw bounds_error("sharp ladder boundary overflows int");
            boundaries.push_back(int(w));
            previous = w;
        }
        return interval_ladder(move(boundaries));
    }

    auto sharp_g(const interval_ladder & ladder, int n) -> sharp_coloring
    {
        if (n < 1)
            throw bad_input_error("sharp coloring exponent must be at least 1");
        if (n > 20)
            throw bad_input_error("sharp coloring exponent is limited to 20");
        if (ladder.span_hi() < n)
            throw bad_input_error("the ladder span is too short to hold an n-subset");

        int palette = 1 << (n - 1);
        auto serial = type_serials(n);
        auto copy = ladder;
        auto fn = [serial, copy](const number_set & z) -> int {
            return serial.at(partition_type_of(z, copy));
        };
        auto rule = coloring_rule::from_function(n, palette, ladder.span_hi(), "sharp", fn);
        return sharp_coloring{n, ladder, move(rule)};
    }

    auto merge_h(const coloring_rule & f, const sharp_coloring & g) -> coloring_rule
    {
        if (f.exponent() != g.n)
            throw bad_input_error("merged coloring needs matching exponents, got "
                    + to_string(f.exponent()) + " and " + to_string(g.n));

        int n = g.n;
        int k = f.palette();
        int palette = k + (1 << (n - 1)) - 1;
        int horizon = std::min(f.horizon(), g.ladder.span_hi());
        if (horizon < n)
            throw bad_input_error("merged coloring horizon is too short for an n-subset");

        auto serial = type_serials(n);
        auto ladder = g.ladder;
        auto base = f;
        auto fn = [serial, ladder, base, k](const number_set & z) -> int {
            auto type = partition_type_of(z, ladder);
            if (type.is_all_ones())
                return base.color_of(z);
            return k + serial.at(type) - 1;
        };
        return coloring_rule::from_function(n, palette, horizon, "merged", fn);
    }

    auto extract_homogeneous(const number_set & a, const interval_ladder & ladder) -> number_set
    {
        if (!a.empty() && (a.min() <= ladder.span_lo() || a.max() > ladder.span_hi()))
            throw bad_input_error("the set must lie inside the ladder span ("
                    + to_string(ladder.span_lo()) + ", " + to_string(ladder.span_hi()) + "]");

        vector<int> mins;
        for (int i = 1 ; i <= ladder.interval_count() ; ++i) {
            auto inside = a.slice(ladder.lower(i), ladder.upper(i));
            if (!inside.empty())
                mins.push_back(inside.min());
        }
        return number_set(move(mins));
    }

    auto unique_allones_color(const coloring_rule & f, const sharp_coloring & g, const number_set & a) -> int
    {
        if (f.exponent() != g.n)
            throw bad_input_error("exponents of the base and sharp colorings must match");
        if (!a.empty() && (a.min() <= g.ladder.span_lo() || a.max() > g.ladder.span_hi()))
            throw bad_input_error("the set must lie inside the ladder span");
        if (!a.empty() && a.max() > f.horizon())
            throw bad_input_error("the set exceeds the base coloring horizon");

        map<partition_type, bool> seen;
        for (const auto & type : partition_types(g.n))
            seen.emplace(type, false);

        vector<int> allones_colors;
        for (const auto & z : enumerate_subsets(a, g.n)) {
            auto type = partition_type_of(z, g.ladder);
            seen[type] = true;
            if (type.is_all_ones()) {
                int c = f.color_of(z);
                if (!std::count(allones_colors.begin(), allones_colors.end(), c))
                    allones_colors.push_back(c);
            }
        }

        for (const auto & [type, present] : seen)
            if (!present)
                throw type_absent_error("partition type " + describe_type(type)
                        + " never occurs among the n-subsets of the set");
        if (allones_colors.size() > 1) {
            std::sort(allones_colors.begin(), allones_colors.end());
            throw ambiguous_color_error("all-ones subsets take base colors "
                    + to_string(allones_colors[0]) + " and " + to_string(allones_colors[1]));
        }
        return allones_colors[0];
    }
}
