#include <packram/packed.hpp>

#include <string>
#include <utility>

using std::move;
using std::to_string;

namespace packram
{
    auto make_packed_report(const number_set & a, const growth_function & phi,
            int horizon, int threshold) -> packed_report
    {
        if (horizon < 1)
            throw bad_input_error{ "packed reports need horizon >= 1" };

        packed_report report{ horizon, threshold, {}, false };
        int count = 0;
        auto next = a.begin();
        for (int w = 1 ; w <= horizon ; ++w) {
            while (next != a.end() && *next <= w)
                ++count, ++next;
            if (count >= phi(w)) {
                report.witnesses.push_back(w);
                if (w > threshold)
                    report.packed_at_horizon = true;
            }
        }
        return report;
    }

    block_sequence::block_sequence(number_set members, interval_ladder boundaries) :
        _members(move(members)),
        _boundaries(move(boundaries))
    {
        for (auto & x : _members)
            if (x <= _boundaries.span_lo() || x > _boundaries.span_hi())
                throw bad_input_error{ "member " + to_string(x) + " lies outside the ladder's span" };
    }

    auto block_sequence::block(int i) const -> number_set
    {
        return _members.slice(_boundaries.lower(i), _boundaries.upper(i));
    }

    auto is_block(const number_set & y, const coloring_rule & f, const growth_function & phi) -> bool
    {
        if (y.empty())
            throw bad_input_error{ "is_block needs a nonempty set" };
        if (y.max() > f.horizon())
            throw bad_input_error{ "set reaches past the coloring's horizon" };

        if (! is_homogeneous(f, y).homogeneous)
            return false;

        if (phi.is_order_function())
            return y.size() >= phi(y.max());

        for (int w = y.max() ; w <= f.horizon() ; ++w)
            if (y.size() >= phi(w))
                return true;
        return false;
    }

    auto is_increasing_block_sequence(const block_sequence & seq,
            const coloring_rule & f, const growth_function & phi) -> bool
    {
        if (seq.boundaries().span_hi() > f.horizon())
            throw bad_input_error{ "ladder reaches past the coloring's horizon" };

        for (int i = 1 ; i <= seq.block_count() ; ++i) {
            auto y = seq.block(i);
            if (y.empty())
                return false;
            if (y.size() < phi(seq.boundaries().upper(i)))
                return false;
            if (! is_homogeneous(f, y).homogeneous)
                return false;
        }
        return true;
    }
}
