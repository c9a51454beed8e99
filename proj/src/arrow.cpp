#include <packram/arrow.hpp>

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>
#include <vector>

using std::max;
using std::min;
using std::move;
using std::nullopt;
using std::optional;
using std::size_t;
using std::to_string;
using std::uint64_t;
using std::vector;

using std::chrono::duration;
using std::chrono::steady_clock;

namespace packram
{
    namespace
    {
        /// Shared state for one counterexample search.
        struct counterexample_search
        {
            int w, m, n, k;
            uint64_t budget;
            uint64_t nodes = 0;

            vector<number_set> slots;          // all n-subsets, colex order
            vector<int> colors;                // 0 = unassigned
            vector<vector<uint64_t>> choose;   // binomial table

            counterexample_search(const arrow_query & q, uint64_t budget) :
                w(q.w), m(q.m), n(q.n), k(q.k), budget(budget)
            {
                slots = enumerate_subsets(number_set::range(1, w), n);
                colors.assign(slots.size(), 0);
                choose.assign(size_t(w) + 1, vector<uint64_t>(size_t(n) + 1, 0));
                for (int a = 0 ; a <= w ; ++a)
                    for (int b = 0 ; b <= min(a, n) ; ++b)
                        choose[size_t(a)][size_t(b)] = (0 == b || b == a) ? 1
                            : choose[size_t(a) - 1][size_t(b) - 1] + choose[size_t(a) - 1][size_t(b)];
            }

            auto rank_of(const vector<int> & subset) const -> size_t
            {
                uint64_t rank = 0;
                for (size_t j = 0 ; j < subset.size() ; ++j)
                    rank += choose[size_t(subset[j]) - 1][j + 1];
                return size_t(rank);
            }

            /// Would x extend chosen to a set all of whose new n-subsets are
            /// already assigned color c? chosen is sorted and x is not in it.
            auto extension_stays_mono(const vector<int> & chosen, int x, int c) -> bool
            {
                // every (n-1)-subset of chosen, each completed by x
                vector<int> pick(size_t(n) - 1, 0);
                vector<int> subset(size_t(n), 0);
                auto walk = [&] (auto & self, size_t from, int depth) -> bool {
                    if (depth == n - 1) {
                        size_t at = 0;
                        bool x_placed = false;
                        for (int j = 0 ; j < n - 1 ; ++j) {
                            if (! x_placed && x < pick[size_t(j)])
                                subset[at++] = x, x_placed = true;
                            subset[at++] = pick[size_t(j)];
                        }
                        if (! x_placed)
                            subset[at] = x;
                        return colors[rank_of(subset)] == c;
                    }
                    for (size_t i = from ; i < chosen.size() ; ++i) {
                        if (chosen.size() - i < size_t(n - 1 - depth))
                            break;
                        pick[size_t(depth)] = chosen[i];
                        if (! self(self, i + 1, depth + 1))
                            return false;
                    }
                    return true;
                };
                return walk(walk, 0, 0);
            }

            /// After coloring slot i with c: is there an m-set containing
            /// slots[i] whose n-subsets are all assigned color c?
            auto creates_mono_set(size_t i, int c) -> bool
            {
                auto & z = slots[i].elements();
                vector<int> chosen(z);
                auto grow = [&] (auto & self, int next, int still_needed) -> bool {
                    if (0 == still_needed)
                        return true;
                    for (int x = next ; x <= w ; ++x) {
                        if (w - x + 1 < still_needed)
                            break;
                        if (binary_search(z.begin(), z.end(), x))
                            continue;
                        if (! extension_stays_mono(chosen, x, c))
                            continue;
                        chosen.insert(upper_bound(chosen.begin(), chosen.end(), x), x);
                        if (self(self, x + 1, still_needed - 1))
                            return true;
                        chosen.erase(find(chosen.begin(), chosen.end(), x));
                    }
                    return false;
                };
                return grow(grow, 1, m - n);
            }

            /// Depth-first over slots in colex order. A fresh color may only
            /// be used when all smaller colors have appeared, which quotients
            /// out color permutations. Returns true when a full coloring with
            /// no monochromatic m-set has been built.
            auto search(size_t i, int used) -> bool
            {
                if (i == slots.size())
                    return true;
                int cap = min(k, used + 1);
                for (int c = 1 ; c <= cap ; ++c) {
                    if (++nodes > budget)
                        throw budget_exhausted_error{ "arrow search for w=" + to_string(w) + " m=" + to_string(m)
                                + " n=" + to_string(n) + " k=" + to_string(k)
                                + " undecided after " + to_string(budget) + " nodes", nodes };
                    colors[i] = c;
                    if (! creates_mono_set(i, c) && search(i + 1, max(used, c)))
                        return true;
                }
                colors[i] = 0;
                return false;
            }
        };

        auto verified_failure(const arrow_query & q, coloring_rule certificate, search_stats stats) -> arrow_answer
        {
            if (find_homogeneous_subset(certificate, q.m))
                throw invariant_violation_error{ "arrow counterexample admits a homogeneous set after all" };
            return arrow_answer{ false, move(certificate), stats };
        }
    }

    namespace detail
    {
        auto arrow_search(const arrow_query & q, uint64_t budget) -> arrow_answer
        {
            auto started = steady_clock::now();
            counterexample_search state{ q, budget };
            bool found = state.search(0, 0);
            search_stats stats{ state.nodes, duration<double>(steady_clock::now() - started).count() };

            if (! found)
                return arrow_answer{ true, nullopt, stats };
            return verified_failure(q,
                    coloring_rule::from_table(q.n, q.k, q.w, move(state.colors)), stats);
        }
    }

    auto arrow_holds(const arrow_query & q, uint64_t budget) -> arrow_answer
    {
        if (q.n < 1 || q.k < 1)
            throw bad_input_error{ "arrow queries need n >= 1 and k >= 1" };
        if (q.w < 0 || q.m < 0)
            throw bad_input_error{ "arrow queries need w >= 0 and m >= 0" };

        // No m-subset to find: false, and any coloring is a counterexample.
        if (q.m > q.w)
            return verified_failure(q, coloring_rule::constant(q.n, q.k, q.w, 1), search_stats{});

        // An m-set has at most one n-subset once m <= n, so every coloring
        // is homogeneous on it.
        if (q.m <= q.n)
            return arrow_answer{ true, nullopt, search_stats{} };

        // Pigeonhole closed form: w -> (m)^1_k iff w >= k(m-1)+1. The
        // balanced chunk coloring is a counterexample otherwise.
        if (1 == q.n) {
            if (uint64_t(q.w) >= uint64_t(q.k) * uint64_t(q.m - 1) + 1)
                return arrow_answer{ true, nullopt, search_stats{} };
            return verified_failure(q, coloring_rule::chunked(q.k, q.m - 1, q.w), search_stats{});
        }

        return detail::arrow_search(q, budget);
    }

    auto find_homogeneous_subset(const coloring_rule & f, int m) -> optional<number_set>
    {
        return find_homogeneous_subset(f, number_set::range(1, f.horizon()), m);
    }

    namespace
    {
        /// Extend a partial mono-color clique by elements of cands from
        /// position at onward; for exponent 2 the candidate list has already
        /// been filtered against every chosen element.
        auto grow_homogeneous(const coloring_rule & f, int c, int m,
                vector<int> & chosen, const vector<int> & cands, size_t at) -> optional<number_set>
        {
            if (int(chosen.size()) == m)
                return number_set{ chosen };

            int needed = m - int(chosen.size());
            for (size_t i = at ; i < cands.size() ; ++i) {
                if (int(cands.size() - i) < needed)
                    break;
                int x = cands[i];

                if (2 == f.exponent()) {
                    vector<int> filtered;
                    for (size_t j = i + 1 ; j < cands.size() ; ++j)
                        if (f.color_of_pair(x, cands[j]) == c)
                            filtered.push_back(cands[j]);
                    if (int(filtered.size()) < needed - 1)
                        continue;
                    chosen.push_back(x);
                    if (auto found = grow_homogeneous(f, c, m, chosen, filtered, 0))
                        return found;
                    chosen.pop_back();
                }
                else {
                    // check every n-subset of chosen+x that contains x
                    bool ok = true;
                    if (int(chosen.size()) >= f.exponent() - 1) {
                        number_set chosen_set{ chosen };
                        first_subset_colex(chosen_set, f.exponent() - 1, [&] (const number_set & t) {
                            vector<int> joined(t.elements());
                            joined.push_back(x);
                            if (f.color_of(number_set{ move(joined) }) != c) {
                                ok = false;
                                return true;
                            }
                            return false;
                        });
                    }
                    if (ok) {
                        chosen.push_back(x);
                        if (auto found = grow_homogeneous(f, c, m, chosen, cands, i + 1))
                            return found;
                        chosen.pop_back();
                    }
                }
            }
            return nullopt;
        }
    }

    auto find_homogeneous_subset(const coloring_rule & f, const number_set & within, int m) -> optional<number_set>
    {
        if (m < 0)
            throw bad_input_error{ "homogeneous subset size must be >= 0" };
        if (! within.empty() && within.max() > f.horizon())
            throw bad_input_error{ "search ground exceeds the coloring's horizon" };
        if (m > within.size())
            return nullopt;

        // Below the exponent any m elements are vacuously homogeneous.
        if (m < f.exponent()) {
            vector<int> first(within.begin(), within.begin() + m);
            return number_set{ move(first) };
        }

        if (1 == f.exponent()) {
            vector<vector<int>> classes(size_t(f.palette()) + 1);
            for (auto & x : within) {
                auto & cls = classes[size_t(f.color_of_point(x))];
                if (int(cls.size()) < m) {
                    cls.push_back(x);
                    if (int(cls.size()) == m)
                        return number_set{ cls };
                }
            }
            return nullopt;
        }

        for (int c = 1 ; c <= f.palette() ; ++c) {
            vector<int> chosen;
            if (auto found = grow_homogeneous(f, c, m, chosen, within.elements(), 0))
                return found;
        }
        return nullopt;
    }

    auto phi_max(int w, int n, int k, uint64_t budget) -> int
    {
        if (w < 1 || n < 1 || k < 1)
            throw bad_input_error{ "phi_max needs w, n, k >= 1" };

        if (1 == n)
            return int((uint64_t(w) + uint64_t(k)) / (uint64_t(k) + 1));

        for (int m = w ; m >= 1 ; --m)
            if (arrow_holds(arrow_query{ w, m, n, k + 1 }, budget).holds)
                return m;
        throw invariant_violation_error{ "phi_max found no m at all" };
    }

    auto separation_witness(long long m, int k, const growth_function & phi, long long cap) -> long long
    {
        if (m < 0 || k < 1)
            throw bad_input_error{ "separation_witness needs m >= 0 and k >= 1" };

        for (long long w = m + 1 ; w <= m + cap ; ++w) {
            long long value = phi(w);
            if ((w + k) / (k + 1) < value)
                throw hypothesis_error{ "growth function fails w -> (phi(w))^1_" + to_string(k + 1)
                        + " at w = " + to_string(w) + " (ceil(w/" + to_string(k + 1) + ") = "
                        + to_string((w + k) / (k + 1)) + " < " + to_string(value) + ")", w };
            if (w - m >= k * (value - 1) + 1)
                return w;
        }
        throw bounds_error{ "no separation witness above m = " + to_string(m)
                + " within " + to_string(cap) + " steps" };
    }
}
