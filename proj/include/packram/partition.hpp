#pragma once

#include <packram/coloring.hpp>
#include <packram/set.hpp>

#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace packram
{
    /// An ordered composition (r_1, ..., r_l) of the ambient exponent n,
    /// recording how an n-set splits across consecutive ladder intervals.
    class partition_type
    {
    public:
        explicit partition_type(std::vector<int> parts);

        auto parts() const -> const std::vector<int> & { return _parts; }
        auto length() const -> int { return int(_parts.size()); }
        auto sum() const -> int;

        /// The type (1, 1, ..., 1): one element per interval.
        auto is_all_ones() const -> bool;

        auto operator<=>(const partition_type & other) const = default;

    private:
        std::vector<int> _parts;
    };

    /// All 2^(n-1) compositions of n, in lexicographic order on the part
    /// lists; the all-ones type always comes first.
    auto partition_types(int n) -> std::vector<partition_type>;

    /// How z splits across the ladder's intervals: the sizes of the nonempty
    /// intersections, left to right. Throws bad_input_error when some element
    /// of z lies outside the ladder's span.
    auto partition_type_of(const number_set & z, const interval_ladder & ladder) -> partition_type;

    /// A coloring for each partition type: the type (n) maps to the base
    /// coloring, a type (r_1, ...) to a coloring of exponent r_1.
    using helper_family = std::map<partition_type, coloring_rule>;

    /// One concrete failure of the helper-coherence condition.
    struct coherence_violation
    {
        partition_type type;
        number_set u;
        number_set v;
        int helper_color;
        int merged_color;
    };

    /// Checks, for every supplied type (r_1, r_2, ..., r_j) with j >= 2,
    /// every U in [w]^{r_1} and V in [z]^{r_2}, that the type's helper at U
    /// agrees with the (r_1 + r_2, r_3, ..., r_j) helper at U union V.
    /// Requires max(w) < min(z) and every needed helper to be present.
    auto find_coherence_violation(const helper_family & helpers,
            const number_set & w, const number_set & z) -> std::optional<coherence_violation>;

    /// True when find_coherence_violation finds nothing.
    auto is_good_with(const helper_family & helpers,
            const number_set & w, const number_set & z) -> bool;
}
