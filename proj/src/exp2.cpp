#include <packram/exp2.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace packram
{
    using std::map;
    using std::move;
    using std::pair;
    using std::size_t;
    using std::to_string;
    using std::vector;

    helper_string::helper_string(vector<int> values) :
        _values(move(values))
    {
        for (int v : _values)
            if (v < 1)
                throw bad_input_error("helper values must be at least 1");
    }

    auto helper_string::value(int x) const -> int
    {
        if (x < 1 || x > length())
            throw bad_input_error("helper position " + to_string(x)
                    + " is outside 1.." + to_string(length()));
        return _values[size_t(x) - 1];
    }

    auto helper_string::extended(int color) const -> helper_string
    {
        auto values = _values;
        values.push_back(color);
        return helper_string(move(values));
    }

    auto helper_string::is_prefix_of(const helper_string & rho) const -> bool
    {
        if (length() > rho.length())
            return false;
        return std::equal(_values.begin(), _values.end(), rho._values.begin());
    }

    namespace
    {
        auto effective_p(const coloring_rule & f, const exp2_bounds & bounds) -> int
        {
            return bounds.p >= 1 ? bounds.p : f.palette();
        }
    }

    auto tail_set(const helper_string & tau, const coloring_rule & f, int bound) -> membership
    {
        auto x = membership::everything(bound);
        for (int a = 1 ; a <= tau.length() ; ++a)
            x = refine_by_color(x, f, a, tau.value(a));
        return x;
    }

    auto in_tree(const helper_string & tau, const coloring_rule & f, const growth_function & phi,
            const exp2_bounds & bounds) -> largeness_verdict
    {
        if (tau.length() >= bounds.w_max)
            throw bad_input_error("helper path length " + to_string(tau.length())
                    + " must stay below w_max " + to_string(bounds.w_max));
        largeness_query q{
            tail_set(tau, f, bounds.w_max),
            f,
            phi,
            bounds.m,
            effective_p(f, bounds),
            bounds.w_max,
            bounds.budget,
        };
        return check_large(q);
    }

    auto extend_path(const helper_string & tau, const coloring_rule & f, const growth_function & phi,
            const exp2_bounds & bounds) -> path_extension
    {
        if (tau.length() + 1 >= bounds.w_max)
            throw bounds_error("helper path cannot grow to length " + to_string(tau.length() + 1)
                    + " with w_max " + to_string(bounds.w_max));

        int first_unknown = 0;
        for (int c = 1 ; c <= f.palette() ; ++c) {
            auto verdict = in_tree(tau.extended(c), f, phi, bounds);
            if (verdict_kind::large == verdict.kind)
                return {tau.extended(c), c, false};
            if (verdict_kind::unknown == verdict.kind && 0 == first_unknown)
                first_unknown = c;
        }
        if (first_unknown > 0)
            return {tau.extended(first_unknown), first_unknown, true};
        throw bounds_error("every one-color extension of the helper path at length "
                + to_string(tau.length()) + " has a small tail up to w_max "
                + to_string(bounds.w_max));
    }

    auto next_block(helper_string & path, const membership & x, int m, const coloring_rule & f,
            const growth_function & phi, const exp2_bounds & bounds, int & downgrades) -> block_find
    {
        if (2 != f.exponent())
            throw bad_input_error("block extraction needs a pair coloring");
        if (m < 0)
            throw bad_input_error("block cutoff must be nonnegative");

        for (int w = m + 1 ; w < bounds.w_max ; ++w) {
            while (path.length() < w) {
                auto step = extend_path(path, f, phi, bounds);
                path = move(step.path);
                if (step.downgraded)
                    ++downgrades;
            }
            int t = phi(w);
            if (t < 1)
                throw bad_input_error("block search needs phi >= 1, got phi("
                        + to_string(w) + ") = " + to_string(t));

            vector<int> pool;
            for (int y : x.elements())
                if (y > m && y <= w)
                    pool.push_back(y);
            if (int(pool.size()) < t)
                continue;

            auto accept = [&path, &f](const number_set & y) -> bool {
                int h = path.value(y.min());
                for (int z : y)
                    if (path.value(z) != h)
                        return false;
                return is_homogeneous(f, y).homogeneous;
            };
            auto found = first_subset_colex(number_set(pool), t, accept);
            if (found.has_value())
                return {w, *found};
        }
        throw bounds_error("no block found inside (" + to_string(m) + ", "
                + to_string(bounds.w_max) + ") at these bounds");
    }

    auto build_pipeline(const coloring_rule & f, const growth_function & phi, int num_blocks,
            const exp2_bounds & bounds) -> exp2_pipeline
    {
        if (2 != f.exponent())
            throw bad_input_error("the pipeline needs a pair coloring");
        if (num_blocks < 1)
            throw bad_input_error("the pipeline needs at least one block");
        if (bounds.w_max < 2 || bounds.w_max > f.horizon())
            throw bad_input_error("pipeline w_max must lie in 2..horizon, got "
                    + to_string(bounds.w_max));

        helper_string path;
        int downgrades = 0;
        auto x = membership::everything(bounds.w_max);
        vector<int> boundaries{1};
        vector<number_set> blocks;
        int m = 1;
        int refined_to = 0;

        for (int i = 1 ; i <= num_blocks ; ++i) {
            auto found = next_block(path, x, m, f, phi, bounds, downgrades);
            blocks.push_back(found.y);
            boundaries.push_back(found.w);
            for (int a = refined_to + 1 ; a <= found.w ; ++a)
                x = refine_by_color(x, f, a, path.value(a));
            refined_to = found.w;
            m = found.w;
        }

        vector<int> between(size_t(num_blocks), 0);
        vector<int> within(size_t(num_blocks), 0);
        for (int i = 0 ; i < num_blocks ; ++i) {
            const auto & y = blocks[size_t(i)];
            int h = path.value(y.min());
            for (int z : y)
                if (path.value(z) != h)
                    throw invariant_violation_error("block " + to_string(i + 1)
                            + " is not helper-constant");
            between[size_t(i)] = h;
            auto homog = is_homogeneous(f, y);
            if (!homog.homogeneous)
                throw invariant_violation_error("block " + to_string(i + 1)
                        + " is not pair-homogeneous");
            within[size_t(i)] = homog.vacuous ? 0 : homog.color;
        }

        for (int i = 0 ; i < num_blocks ; ++i)
            for (int j = i + 1 ; j < num_blocks ; ++j)
                for (int a : blocks[size_t(i)])
                    for (int b : blocks[size_t(j)])
                        if (f.color_of_pair(a, b) != between[size_t(i)])
                            throw invariant_violation_error("pair {" + to_string(a) + ", "
                                    + to_string(b) + "} disagrees with the helper color of block "
                                    + to_string(i + 1));

        map<pair<int, int>, vector<int>> buckets;
        for (int i = 0 ; i < num_blocks ; ++i)
            buckets[{between[size_t(i)], within[size_t(i)]}].push_back(i + 1);
        vector<int> selected;
        for (const auto & [key, indices] : buckets)
            if (indices.size() > selected.size())
                selected = indices;

        vector<int> all_members;
        vector<int> chosen_members;
        for (int i = 0 ; i < num_blocks ; ++i)
            for (int z : blocks[size_t(i)])
                all_members.push_back(z);
        for (int i : selected)
            for (int z : blocks[size_t(i) - 1])
                chosen_members.push_back(z);
        number_set a(move(chosen_members));

        if (!is_semi_homogeneous(f, a))
            throw invariant_violation_error("the selected union takes more than two pair colors");

        return exp2_pipeline{
            move(path),
            block_sequence(number_set(move(all_members)), interval_ladder(move(boundaries))),
            move(between),
            move(within),
            move(selected),
            move(a),
            downgrades,
        };
    }
}
