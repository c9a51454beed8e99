#include <packram/partition.hpp>

#include <algorithm>
#include <string>
#include <utility>

using std::move;
using std::nullopt;
using std::optional;
using std::to_string;
using std::vector;

namespace packram
{
    partition_type::partition_type(vector<int> parts) :
        _parts(move(parts))
    {
        if (_parts.empty())
            throw bad_input_error{ "a partition type needs at least one part" };
        for (auto & r : _parts)
            if (r < 1)
                throw bad_input_error{ "partition type parts must be >= 1" };
    }

    auto partition_type::sum() const -> int
    {
        int total = 0;
        for (auto & r : _parts)
            total += r;
        return total;
    }

    auto partition_type::is_all_ones() const -> bool
    {
        return all_of(_parts.begin(), _parts.end(), [] (int r) { return 1 == r; });
    }

    namespace
    {
        auto compositions_into(int n, vector<int> & prefix, vector<partition_type> & out) -> void
        {
            if (0 == n) {
                out.push_back(partition_type{ prefix });
                return;
            }
            for (int first = 1 ; first <= n ; ++first) {
                prefix.push_back(first);
                compositions_into(n - first, prefix, out);
                prefix.pop_back();
            }
        }
    }

    auto partition_types(int n) -> vector<partition_type>
    {
        if (n < 1)
            throw bad_input_error{ "partition types need exponent >= 1" };
        vector<partition_type> result;
        vector<int> prefix;
        compositions_into(n, prefix, result);
        return result;
    }

    auto partition_type_of(const number_set & z, const interval_ladder & ladder) -> partition_type
    {
        if (z.empty())
            throw bad_input_error{ "partition type of an empty set" };

        vector<int> parts;
        int current_interval = 0;
        for (auto & x : z) {
            auto interval = ladder.interval_of(x);
            if (! interval)
                throw bad_input_error{ "element " + to_string(x) + " lies outside the ladder's span" };
            if (*interval == current_interval)
                ++parts.back();
            else {
                parts.push_back(1);
                current_interval = *interval;
            }
        }
        return partition_type{ move(parts) };
    }

    auto find_coherence_violation(const helper_family & helpers,
            const number_set & w, const number_set & z) -> optional<coherence_violation>
    {
        if (! w.empty() && ! z.empty() && w.max() >= z.min())
            throw bad_input_error{ "coherence check needs max(w) < min(z)" };

        for (auto & [type, helper] : helpers) {
            if (type.length() < 2)
                continue;

            auto & parts = type.parts();
            int r1 = parts[0], r2 = parts[1];
            if (helper.exponent() != r1)
                throw bad_input_error{ "helper for a type starting with " + to_string(r1)
                        + " has exponent " + to_string(helper.exponent()) };

            // The merged type (r_1 + r_2, r_3, ..., r_j) must also have a
            // helper; its coloring consumes U union V.
            vector<int> merged_parts{ r1 + r2 };
            merged_parts.insert(merged_parts.end(), parts.begin() + 2, parts.end());
            auto merged = helpers.find(partition_type{ move(merged_parts) });
            if (merged == helpers.end())
                throw bad_input_error{ "no helper supplied for the merged type" };

            optional<coherence_violation> found;
            first_subset_colex(w, r1, [&] (const number_set & u) {
                int left = helper.color_of(u);
                first_subset_colex(z, r2, [&] (const number_set & v) {
                    vector<int> joined(u.elements());
                    joined.insert(joined.end(), v.begin(), v.end());
                    int right = merged->second.color_of(number_set{ move(joined) });
                    if (left != right) {
                        found = coherence_violation{ type, u, v, left, right };
                        return true;
                    }
                    return false;
                });
                return found.has_value();
            });
            if (found)
                return found;
        }
        return nullopt;
    }

    auto is_good_with(const helper_family & helpers,
            const number_set & w, const number_set & z) -> bool
    {
        return ! find_coherence_violation(helpers, w, z).has_value();
    }
}
