#include <packram/set.hpp>

#include <algorithm>
#include <string>
#include <utility>

using std::binary_search;
using std::lower_bound;
using std::move;
using std::nullopt;
using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace packram
{
    number_set::number_set(vector<int> elements) :
        _elements(move(elements))
    {
        int previous = 0;
        for (auto & x : _elements) {
            if (x <= previous)
                throw bad_input_error{ "number_set elements must be strictly increasing and >= 1" };
            previous = x;
        }
    }

    auto number_set::range(int lo, int hi) -> number_set
    {
        number_set result;
        if (lo < 1)
            throw bad_input_error{ "number_set::range needs lo >= 1" };
        for (int x = lo ; x <= hi ; ++x)
            result._elements.push_back(x);
        return result;
    }

    auto number_set::contains(int x) const -> bool
    {
        return binary_search(_elements.begin(), _elements.end(), x);
    }

    auto number_set::min() const -> int
    {
        if (empty())
            throw bad_input_error{ "min() of an empty set" };
        return _elements.front();
    }

    auto number_set::max() const -> int
    {
        if (empty())
            throw bad_input_error{ "max() of an empty set" };
        return _elements.back();
    }

    auto number_set::slice(int lo, int hi) const -> number_set
    {
        number_set result;
        for (auto & x : _elements)
            if (x > lo && x <= hi)
                result._elements.push_back(x);
        return result;
    }

    auto number_set::canonical_code() const -> uint64_t
    {
        if (! empty() && max() > 64)
            throw bounds_error{ "canonical code of a set reaching " + to_string(max()) + " does not fit in 64 bits" };
        uint64_t code = 0;
        for (auto & x : _elements)
            code |= uint64_t{ 1 } << (x - 1);
        return code;
    }

    auto canonical_less(const number_set & a, const number_set & b) -> bool
    {
        // Walk both element lists from the top. The first position where they
        // disagree carries the highest differing bit of the two codes.
        auto ai = a.elements().rbegin(), ae = a.elements().rend();
        auto bi = b.elements().rbegin(), be = b.elements().rend();
        for ( ; ai != ae && bi != be ; ++ai, ++bi)
            if (*ai != *bi)
                return *ai < *bi;
        return ai == ae && bi != be;
    }

    namespace
    {
        auto subsets_with_suffix(const vector<int> & ground, int t, vector<int> & chosen,
                const std::function<bool (const number_set &)> & accept) -> optional<number_set>
        {
            // chosen holds the top part of the subset, in increasing order; we
            // still need t more elements, all below chosen's minimum. Trying
            // larger new elements last keeps the walk in colex order.
            if (0 == t) {
                number_set candidate{ vector<int>(chosen) };
                if (accept(candidate))
                    return candidate;
                return nullopt;
            }

            int limit = chosen.empty() ? int(ground.size()) : int(lower_bound(ground.begin(), ground.end(), chosen.front()) - ground.begin());
            for (int i = t - 1 ; i < limit ; ++i) {
                chosen.insert(chosen.begin(), ground[size_t(i)]);
                if (auto found = subsets_with_suffix(ground, t - 1, chosen, accept))
                    return found;
                chosen.erase(chosen.begin());
            }
            return nullopt;
        }
    }

    auto first_subset_colex(const number_set & ground, int t,
            const std::function<bool (const number_set &)> & accept) -> optional<number_set>
    {
        if (t < 0)
            throw bad_input_error{ "subset size must be >= 0" };
        if (t > ground.size())
            return nullopt;
        vector<int> chosen;
        return subsets_with_suffix(ground.elements(), t, chosen, accept);
    }

    auto enumerate_subsets(const number_set & ground, int t) -> vector<number_set>
    {
        vector<number_set> result;
        first_subset_colex(ground, t, [&] (const number_set & s) {
            result.push_back(s);
            return false;
        });
        return result;
    }

    auto binomial(long long n, long long k) -> uint64_t
    {
        if (k < 0 || n < 0 || k > n)
            return 0;
        k = std::min(k, n - k);
        uint64_t result = 1;
        for (long long i = 1 ; i <= k ; ++i) {
            // multiply then divide stays integral along partial products
            uint64_t numerator = uint64_t(n - k + i);
            if (result > ~uint64_t{ 0 } / numerator)
                throw bounds_error{ "binomial(" + to_string(n) + ", " + to_string(k) + ") overflows" };
            result = result * numerator / uint64_t(i);
        }
        return result;
    }

    auto colex_rank(const number_set & subset) -> uint64_t
    {
        uint64_t rank = 0;
        long long position = 1;
        for (auto & x : subset)
            rank += binomial(x - 1, position++);
        return rank;
    }

    interval_ladder::interval_ladder(vector<int> boundaries) :
        _boundaries(move(boundaries))
    {
        if (_boundaries.empty())
            throw bad_input_error{ "an interval ladder needs at least one boundary" };
        for (size_t i = 0 ; i < _boundaries.size() ; ++i) {
            if (_boundaries[i] < 0 || (i > 0 && _boundaries[i] <= _boundaries[i - 1]))
                throw bad_input_error{ "ladder boundaries must be nonnegative and strictly increasing" };
        }
    }

    auto interval_ladder::lower(int i) const -> int
    {
        if (i < 1 || i > interval_count())
            throw bad_input_error{ "interval index " + to_string(i) + " out of range" };
        return _boundaries[size_t(i) - 1];
    }

    auto interval_ladder::upper(int i) const -> int
    {
        if (i < 1 || i > interval_count())
            throw bad_input_error{ "interval index " + to_string(i) + " out of range" };
        return _boundaries[size_t(i)];
    }

    auto interval_ladder::interval_of(int x) const -> optional<int>
    {
        if (x <= span_lo() || x > span_hi())
            return nullopt;
        // First boundary >= x closes the interval holding x; its index is
        // also the 1-based interval number.
        auto where = lower_bound(_boundaries.begin(), _boundaries.end(), x);
        return int(where - _boundaries.begin());
    }
}
