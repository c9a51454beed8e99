#pragma once

#include <packram/errors.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace packram
{
    /// A finite set of positive integers, stored strictly increasing.
    ///
    /// Sets are ordered by canonical code, the sum of 2^(x-1) over elements x.
    /// That order is computed positionally (largest differing element decides)
    /// so it never overflows, and `canonical_code` is only evaluable for sets
    /// whose maximum fits in 64 bits.
    class number_set
    {
    public:
        number_set() = default;

        /// Takes a strictly increasing list of integers >= 1.
        explicit number_set(std::vector<int> elements);

        /// The contiguous set {lo, lo+1, ..., hi}; empty when hi < lo.
        static auto range(int lo, int hi) -> number_set;

        auto size() const -> int { return int(_elements.size()); }
        auto empty() const -> bool { return _elements.empty(); }
        auto contains(int x) const -> bool;

        /// Elements are 1-indexed: at(1) is the minimum.
        auto at(int i) const -> int { return _elements.at(std::size_t(i) - 1); }
        auto min() const -> int;
        auto max() const -> int;

        auto elements() const -> const std::vector<int> & { return _elements; }
        auto begin() const { return _elements.begin(); }
        auto end() const { return _elements.end(); }

        /// The elements inside the half-open-from-below interval (lo, hi].
        auto slice(int lo, int hi) const -> number_set;

        /// Sum of 2^(x-1) over elements; throws bounds_error if max() > 64.
        auto canonical_code() const -> std::uint64_t;

        auto operator==(const number_set & other) const -> bool = default;

    private:
        std::vector<int> _elements;
    };

    /// Canonical-code order without evaluating the code: compare the largest
    /// element where the two sets differ; the set holding it is the larger.
    auto canonical_less(const number_set & a, const number_set & b) -> bool;

    /// All t-element subsets of ground, in colex order (compare largest
    /// differing element, exactly the canonical-code order at fixed size).
    auto enumerate_subsets(const number_set & ground, int t) -> std::vector<number_set>;

    /// Walk the t-element subsets of ground in colex order until the visitor
    /// returns true; returns the accepted subset, if any.
    auto first_subset_colex(const number_set & ground, int t,
            const std::function<bool (const number_set &)> & accept)
        -> std::optional<number_set>;

    /// Colex rank of a t-subset within subsets of {1..anything}: the number of
    /// t-subsets strictly before it. Standard combinatorial number system.
    auto colex_rank(const number_set & subset) -> std::uint64_t;

    /// Binomial coefficient as uint64, throwing bounds_error on overflow.
    auto binomial(long long n, long long k) -> std::uint64_t;

    /// A strictly increasing boundary list w_0 < w_1 < ... < w_t carving the
    /// intervals (w_{i-1}, w_i]; intervals are 1-indexed.
    class interval_ladder
    {
    public:
        /// Takes at least one boundary; boundaries must be strictly increasing
        /// and nonnegative.
        explicit interval_ladder(std::vector<int> boundaries);

        auto boundaries() const -> const std::vector<int> & { return _boundaries; }
        auto interval_count() const -> int { return int(_boundaries.size()) - 1; }

        /// Interval i is (lower(i), upper(i)].
        auto lower(int i) const -> int;
        auto upper(int i) const -> int;

        /// Which interval x falls in, or nullopt when x is outside the span.
        auto interval_of(int x) const -> std::optional<int>;

        /// The covered span is (span_lo(), span_hi()].
        auto span_lo() const -> int { return _boundaries.front(); }
        auto span_hi() const -> int { return _boundaries.back(); }

        auto operator==(const interval_ladder & other) const -> bool = default;

    private:
        std::vector<int> _boundaries;
    };
}
