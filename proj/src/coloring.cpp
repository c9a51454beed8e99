#include <packram/coloring.hpp>

#include <algorithm>
#include <string>
#include <utility>

using std::function;
using std::min;
using std::move;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace packram
{
    auto splitmix64(uint64_t z) -> uint64_t
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    namespace
    {
        auto hash_subset(uint64_t seed, const number_set & z) -> uint64_t
        {
            uint64_t h = splitmix64(seed);
            for (auto & x : z)
                h = splitmix64(h ^ (uint64_t(x) * 0x9e3779b97f4a7c15ULL));
            return h;
        }

        auto hash_pair(uint64_t seed, int x, int y) -> uint64_t
        {
            uint64_t h = splitmix64(seed);
            h = splitmix64(h ^ (uint64_t(x) * 0x9e3779b97f4a7c15ULL));
            h = splitmix64(h ^ (uint64_t(y) * 0x9e3779b97f4a7c15ULL));
            return h;
        }

        auto stable_limit_color(uint64_t seed, int k, int x) -> int
        {
            return 1 + int(splitmix64(seed ^ 0x51ab1eULL ^ (uint64_t(x) << 20)) % uint64_t(k));
        }

        auto stable_lag(uint64_t seed, int max_lag, int x) -> int
        {
            if (max_lag <= 0)
                return 0;
            return int(splitmix64(seed ^ 0x1a6ULL ^ (uint64_t(x) << 24)) % uint64_t(max_lag + 1));
        }

        auto base_checks(int n, int k, int horizon) -> void
        {
            if (n < 1)
                throw bad_input_error{ "coloring exponent must be >= 1" };
            if (k < 1)
                throw bad_input_error{ "coloring palette must be >= 1" };
            if (horizon < 0)
                throw bad_input_error{ "coloring horizon must be >= 0" };
        }
    }

    auto coloring_rule::from_table(int n, int k, int horizon, vector<int> colors) -> coloring_rule
    {
        base_checks(n, k, horizon);
        coloring_rule f;
        f._kind = kind::table_only;
        f._n = n;
        f._k = k;
        f._horizon = horizon;
        if (uint64_t(colors.size()) != f.subset_count())
            throw bad_input_error{ "coloring table has " + to_string(colors.size()) + " entries, expected " + to_string(f.subset_count()) };
        for (auto & c : colors)
            if (c < 1 || c > k)
                throw bad_input_error{ "coloring table entry " + to_string(c) + " outside 1.." + to_string(k) };
        f._table = move(colors);
        f._has_table = true;
        return f;
    }

    auto coloring_rule::constant(int n, int k, int horizon, int c) -> coloring_rule
    {
        base_checks(n, k, horizon);
        if (c < 1 || c > k)
            throw bad_input_error{ "constant color outside the palette" };
        coloring_rule f;
        f._kind = kind::constant;
        f._n = n;
        f._k = k;
        f._horizon = horizon;
        f._a = c;
        f._tag = "const " + to_string(c);
        return f;
    }

    auto coloring_rule::parity_min(int n, int horizon) -> coloring_rule
    {
        base_checks(n, 2, horizon);
        coloring_rule f;
        f._kind = kind::parity_min;
        f._n = n;
        f._k = 2;
        f._horizon = horizon;
        f._tag = "parity";
        return f;
    }

    auto coloring_rule::parity_sum(int n, int horizon) -> coloring_rule
    {
        base_checks(n, 2, horizon);
        coloring_rule f;
        f._kind = kind::parity_sum;
        f._n = n;
        f._k = 2;
        f._horizon = horizon;
        f._tag = "sumparity";
        return f;
    }

    auto coloring_rule::cycle5() -> coloring_rule
    {
        coloring_rule f;
        f._kind = kind::cycle5;
        f._n = 2;
        f._k = 2;
        f._horizon = 5;
        f._tag = "cycle5";
        return f;
    }

    auto coloring_rule::seeded_random(uint64_t seed, int n, int k, int horizon) -> coloring_rule
    {
        base_checks(n, k, horizon);
        coloring_rule f;
        f._kind = kind::hashed;
        f._n = n;
        f._k = k;
        f._horizon = horizon;
        f._seed = seed;
        f._tag = "random " + to_string(seed);
        return f;
    }

    auto coloring_rule::stable_random(uint64_t seed, int k, int horizon, int max_lag) -> coloring_rule
    {
        base_checks(2, k, horizon);
        if (max_lag < 0)
            throw bad_input_error{ "stable_random lag must be >= 0" };
        coloring_rule f;
        f._kind = kind::stable_hashed;
        f._n = 2;
        f._k = k;
        f._horizon = horizon;
        f._seed = seed;
        f._a = max_lag;
        f._tag = "stablerandom " + to_string(seed) + " " + to_string(max_lag);
        return f;
    }

    auto coloring_rule::chunked(int k, int class_size, int horizon) -> coloring_rule
    {
        base_checks(1, k, horizon);
        if (class_size < 1)
            throw bad_input_error{ "chunked class size must be >= 1" };
        coloring_rule f;
        f._kind = kind::chunked;
        f._n = 1;
        f._k = k;
        f._horizon = horizon;
        f._a = class_size;
        f._tag = "chunked " + to_string(class_size);
        return f;
    }

    auto coloring_rule::from_function(int n, int k, int horizon, string tag,
            function<int (const number_set &)> fn) -> coloring_rule
    {
        base_checks(n, k, horizon);
        coloring_rule f;
        f._kind = kind::custom;
        f._n = n;
        f._k = k;
        f._horizon = horizon;
        f._tag = move(tag);
        f._fn = move(fn);
        return f;
    }

    auto coloring_rule::subset_count() const -> uint64_t
    {
        return binomial(_horizon, _n);
    }

    auto coloring_rule::evaluate(const number_set & z) const -> int
    {
        switch (_kind) {
        case kind::table_only:
            return _table[colex_rank(z)];
        case kind::constant:
            return _a;
        case kind::parity_min:
            return 1 + (z.min() % 2);
        case kind::parity_sum: {
            int sum = 0;
            for (auto & x : z)
                sum += x;
            return 1 + (sum % 2);
        }
        case kind::cycle5: {
            int d = z.max() - z.min();
            return (1 == d || 4 == d) ? 1 : 2;
        }
        case kind::hashed:
            return 1 + int(hash_subset(_seed, z) % uint64_t(_k));
        case kind::stable_hashed: {
            int x = z.min(), y = z.max();
            if (y - x > stable_lag(_seed, _a, x))
                return stable_limit_color(_seed, _k, x);
            return 1 + int(hash_pair(_seed, x, y) % uint64_t(_k));
        }
        case kind::chunked:
            return min(_k, 1 + (z.min() - 1) / _a);
        case kind::custom:
            return _fn(z);
        }
        throw invariant_violation_error{ "unreachable coloring kind" };
    }

    auto coloring_rule::color_of(const number_set & z) const -> int
    {
        if (z.size() != _n)
            throw bad_input_error{ "coloring of exponent " + to_string(_n) + " queried with a set of size " + to_string(z.size()) };
        if (z.max() > _horizon)
            throw bad_input_error{ "set reaches " + to_string(z.max()) + " but the coloring's horizon is " + to_string(_horizon) };
        return evaluate(z);
    }

    auto coloring_rule::color_of_pair(int x, int y) const -> int
    {
        if (2 != _n)
            throw bad_input_error{ "color_of_pair on a coloring of exponent " + to_string(_n) };
        if (x < 1 || y <= x || y > _horizon)
            throw bad_input_error{ "bad pair query" };

        switch (_kind) {
        case kind::table_only:
            return _table[uint64_t(y - 1) * uint64_t(y - 2) / 2 + uint64_t(x - 1)];
        case kind::constant:
            return _a;
        case kind::parity_min:
            return 1 + (x % 2);
        case kind::parity_sum:
            return 1 + ((x + y) % 2);
        case kind::cycle5:
            return (1 == y - x || 4 == y - x) ? 1 : 2;
        case kind::hashed:
            return 1 + int(hash_pair(_seed, x, y) % uint64_t(_k));
        case kind::stable_hashed:
            if (y - x > stable_lag(_seed, _a, x))
                return stable_limit_color(_seed, _k, x);
            return 1 + int(hash_pair(_seed, x, y) % uint64_t(_k));
        case kind::chunked:
        case kind::custom:
            break;
        }
        return evaluate(number_set{ { x, y } });
    }

    auto coloring_rule::color_of_point(int x) const -> int
    {
        if (1 != _n)
            throw bad_input_error{ "color_of_point on a coloring of exponent " + to_string(_n) };
        if (x < 1 || x > _horizon)
            throw bad_input_error{ "point " + to_string(x) + " outside the horizon" };

        switch (_kind) {
        case kind::table_only:
            return _table[uint64_t(x) - 1];
        case kind::constant:
            return _a;
        case kind::parity_min:
        case kind::parity_sum:
            return 1 + (x % 2);
        case kind::hashed: {
            uint64_t h = splitmix64(splitmix64(_seed) ^ (uint64_t(x) * 0x9e3779b97f4a7c15ULL));
            return 1 + int(h % uint64_t(_k));
        }
        case kind::chunked:
            return min(_k, 1 + (x - 1) / _a);
        default:
            break;
        }
        return evaluate(number_set{ { x } });
    }

    auto coloring_rule::tabulated() const -> coloring_rule
    {
        if (_has_table)
            return *this;
        if (subset_count() > 50000000ULL)
            throw bounds_error{ "refusing to tabulate " + to_string(subset_count()) + " entries" };

        coloring_rule f = *this;
        f._table.reserve(subset_count());
        first_subset_colex(number_set::range(1, _horizon), _n, [&] (const number_set & z) {
            f._table.push_back(evaluate(z));
            return false;
        });
        f._has_table = true;
        return f;
    }

    auto colors_used(const coloring_rule & f, const number_set & a) -> vector<int>
    {
        vector<bool> seen(std::size_t(f.palette()) + 1, false);
        first_subset_colex(a, f.exponent(), [&] (const number_set & z) {
            seen[std::size_t(f.color_of(z))] = true;
            return false;
        });
        vector<int> result;
        for (int c = 1 ; c <= f.palette() ; ++c)
            if (seen[std::size_t(c)])
                result.push_back(c);
        return result;
    }

    auto is_semi_homogeneous(const coloring_rule & f, const number_set & a) -> bool
    {
        auto bound = uint64_t(1) << (f.exponent() - 1);
        return uint64_t(colors_used(f, a).size()) <= bound;
    }

    auto is_homogeneous(const coloring_rule & f, const number_set & a) -> homogeneity
    {
        if (a.size() < f.exponent())
            return homogeneity{ true, true, 0 };

        if (1 == f.exponent()) {
            int color = f.color_of_point(a.min());
            for (auto & x : a)
                if (f.color_of_point(x) != color)
                    return homogeneity{ false, false, 0 };
            return homogeneity{ true, false, color };
        }

        if (2 == f.exponent()) {
            int color = 0;
            auto & xs = a.elements();
            for (std::size_t i = 0 ; i < xs.size() ; ++i)
                for (std::size_t j = i + 1 ; j < xs.size() ; ++j) {
                    int c = f.color_of_pair(xs[i], xs[j]);
                    if (0 == color)
                        color = c;
                    else if (c != color)
                        return homogeneity{ false, false, 0 };
                }
            return homogeneity{ true, false, color };
        }

        int color = 0;
        bool uniform = true;
        first_subset_colex(a, f.exponent(), [&] (const number_set & z) {
            int c = f.color_of(z);
            if (0 == color)
                color = c;
            else if (c != color) {
                uniform = false;
                return true;
            }
            return false;
        });

        if (! uniform)
            return homogeneity{ false, false, 0 };
        return homogeneity{ true, false, color };
    }
}
