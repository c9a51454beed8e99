#include <packram/exp1.hpp>

#include <limits>
#include <string>
#include <utility>

using std::move;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace packram
{
    auto build_ladder_exp1(const growth_function & phi, int k, int count, long long cap) -> interval_ladder
    {
        if (count < 1)
            throw bad_input_error{ "ladders need at least one interval" };

        vector<int> boundaries{ 1 };
        long long current = 1;
        for (int i = 0 ; i < count ; ++i) {
            current = separation_witness(current, k, phi, cap);
            if (current > std::numeric_limits<int>::max())
                throw bounds_error{ "ladder boundary " + to_string(current) + " does not fit in int" };
            boundaries.push_back(int(current));
        }
        return interval_ladder{ move(boundaries) };
    }

    auto solve_exp1(const coloring_rule & f, const growth_function & phi, int count, long long cap) -> exp1_solution
    {
        if (1 != f.exponent())
            throw bad_input_error{ "solve_exp1 needs an exponent-1 coloring" };
        return solve_exp1(f, phi, build_ladder_exp1(phi, f.palette(), count, cap));
    }

    auto solve_exp1(const coloring_rule & f, const growth_function & phi,
            interval_ladder ladder) -> exp1_solution
    {
        if (1 != f.exponent())
            throw bad_input_error{ "solve_exp1 needs an exponent-1 coloring" };
        if (1 != ladder.span_lo())
            throw bad_input_error{ "exponent-1 ladders start at w = 1" };

        int k = f.palette();
        int count = ladder.interval_count();
        if (ladder.span_hi() > f.horizon())
            throw bounds_error{ "ladder reaches w = " + to_string(ladder.span_hi())
                    + " but the coloring's horizon is " + to_string(f.horizon())
                    + "; rerun with a larger horizon" };

        vector<number_set> blocks;
        vector<int> induced;
        for (int i = 1 ; i <= count ; ++i) {
            int t = phi(ladder.upper(i));

            // The least-code monochromatic t-subset of the interval: scan
            // upward and stop the moment any color accumulates t elements;
            // minimising the top element this way minimises the canonical
            // code, and within that color the smaller elements are forced.
            vector<vector<int>> classes(size_t(k) + 1);
            int winner = 0;
            if (t > 0)
                for (int x = ladder.lower(i) + 1 ; x <= ladder.upper(i) && 0 == winner ; ++x) {
                    int c = f.color_of_point(x);
                    auto & cls = classes[size_t(c)];
                    cls.push_back(x);
                    if (int(cls.size()) >= t)
                        winner = c;
                }
            if (0 == winner && t > 0)
                throw invariant_violation_error{ "interval " + to_string(i)
                        + " has no monochromatic set of size " + to_string(t) };

            if (0 == winner)
                blocks.push_back(number_set{});
            else
                blocks.push_back(number_set{ move(classes[size_t(winner)]) });
            induced.push_back(winner);
        }

        // Most frequent induced color, ties to the smaller color.
        vector<int> frequency(size_t(k) + 1, 0);
        for (auto & c : induced)
            ++frequency[size_t(c)];
        int chosen = 1;
        for (int c = 2 ; c <= k ; ++c)
            if (frequency[size_t(c)] > frequency[size_t(chosen)])
                chosen = c;

        vector<int> selected;
        vector<int> result;
        for (int i = 1 ; i <= count ; ++i)
            if (induced[size_t(i) - 1] == chosen) {
                selected.push_back(i);
                auto & y = blocks[size_t(i) - 1].elements();
                result.insert(result.end(), y.begin(), y.end());
            }

        return exp1_solution{ move(ladder), move(blocks), move(induced),
                chosen, move(selected), number_set{ move(result) } };
    }
}
