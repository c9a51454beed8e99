#include <packram/largeness.hpp>

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>

namespace packram
{
    using std::chrono::duration;
    using std::chrono::steady_clock;
    using std::function;
    using std::move;
    using std::size_t;
    using std::string;
    using std::to_string;
    using std::uint64_t;
    using std::vector;

    membership::membership(number_set elements, int bound) :
        _elements(move(elements)),
        _bound(bound)
    {
        if (_bound < 0)
            throw bad_input_error("membership bound must be nonnegative");
        if (!_elements.empty() && _elements.max() > _bound)
            throw bad_input_error("membership element " + to_string(_elements.max())
                    + " exceeds the bound " + to_string(_bound));
    }

    auto membership::everything(int bound) -> membership
    {
        return membership(number_set::range(1, bound), bound);
    }

    auto membership::where(const function<bool (int)> & pred, int bound) -> membership
    {
        vector<int> kept;
        for (int x = 1 ; x <= bound ; ++x)
            if (pred(x))
                kept.push_back(x);
        return membership(number_set(move(kept)), bound);
    }

    auto refine_by_color(const membership & x, const coloring_rule & f, int anchor, int color) -> membership
    {
        if (2 != f.exponent())
            throw bad_input_error("refinement needs a pair coloring");
        if (anchor < 1)
            throw bad_input_error("refinement anchor must be at least 1");
        if (color < 1 || color > f.palette())
            throw bad_input_error("refinement color " + to_string(color) + " is outside the palette 1.."
                    + to_string(f.palette()));
        if (x.bound() > f.horizon())
            throw bad_input_error("membership bound " + to_string(x.bound())
                    + " exceeds the coloring horizon " + to_string(f.horizon()));

        vector<int> kept;
        for (int y : x.elements())
            if (y > anchor && color == f.color_of_pair(anchor, y))
                kept.push_back(y);
        return membership(number_set(move(kept)), x.bound());
    }

    namespace
    {
        /// Backtracking search for a p-partition of the given elements in
        /// which no class holds an f-homogeneous t-subset. Classes are
        /// interchangeable, so each element may only join an already open
        /// class or the single next empty one.
        class partition_search
        {
        public:
            partition_search(vector<int> elements, const coloring_rule & f, int t, int p,
                    uint64_t budget, uint64_t & nodes) :
                _elements(move(elements)),
                _f(f),
                _t(t),
                _p(p),
                _budget(budget),
                _nodes(nodes),
                _classes(size_t(p))
            {
            }

            auto run() -> bool { return place(0, 0); }
            auto stopped() const -> bool { return _stopped; }
            auto classes() const -> const vector<vector<int>> & { return _classes; }

        private:
            auto place(size_t idx, int open) -> bool
            {
                if (idx == _elements.size())
                    return true;
                int y = _elements[idx];
                int limit = std::min(open + 1, _p);
                for (int ci = 0 ; ci < limit ; ++ci) {
                    if (++_nodes > _budget) {
                        _stopped = true;
                        return false;
                    }
                    auto & cls = _classes[size_t(ci)];
                    if (joining_builds_homogeneous(cls, y))
                        continue;
                    cls.push_back(y);
                    if (place(idx + 1, std::max(open, ci + 1)))
                        return true;
                    cls.pop_back();
                    if (_stopped)
                        return false;
                }
                return false;
            }

            /// Would adding y give cls an f-homogeneous subset of size t
            /// through y? Only subsets ending at y need checking here; older
            /// ones were ruled out when their own maximum was placed.
            auto joining_builds_homogeneous(const vector<int> & cls, int y) -> bool
            {
                if (_t == 1)
                    return true;
                if (_t == 2)
                    return !cls.empty();
                for (int c = 1 ; c <= _f.palette() ; ++c) {
                    vector<int> neighbors;
                    for (int x : cls)
                        if (c == _f.color_of_pair(x, y))
                            neighbors.push_back(x);
                    if (has_clique(neighbors, _t - 1, c))
                        return true;
                }
                return false;
            }

            auto has_clique(const vector<int> & candidates, int need, int color) -> bool
            {
                if (need == 0)
                    return true;
                if (int(candidates.size()) < need)
                    return false;
                for (size_t i = 0 ; i < candidates.size() ; ++i) {
                    if (++_nodes > _budget) {
                        _stopped = true;
                        return false;
                    }
                    vector<int> narrowed;
                    for (size_t j = i + 1 ; j < candidates.size() ; ++j)
                        if (color == _f.color_of_pair(candidates[i], candidates[j]))
                            narrowed.push_back(candidates[j]);
                    if (has_clique(narrowed, need - 1, color))
                        return true;
                    if (_stopped)
                        return false;
                }
                return false;
            }

            vector<int> _elements;
            const coloring_rule & _f;
            int _t;
            int _p;
            uint64_t _budget;
            uint64_t & _nodes;
            vector<vector<int>> _classes;
            bool _stopped = false;
        };
    }

    auto check_large(const largeness_query & q) -> largeness_verdict
    {
        if (2 != q.f.exponent())
            throw bad_input_error("largeness needs a pair coloring");
        if (q.m < 0)
            throw bad_input_error("largeness base m must be nonnegative");
        if (q.w_max <= q.m)
            throw bad_input_error("largeness scan bound w_max must exceed m");
        if (q.w_max > q.f.horizon())
            throw bad_input_error("largeness scan bound " + to_string(q.w_max)
                    + " exceeds the coloring horizon " + to_string(q.f.horizon()));
        if (q.w_max > q.x.bound())
            throw bad_input_error("largeness scan bound " + to_string(q.w_max)
                    + " exceeds the membership bound " + to_string(q.x.bound()));
        if (q.p < 1)
            throw bad_input_error("largeness needs at least one partition class");

        auto started = steady_clock::now();
        largeness_verdict v;
        v.w_max = q.w_max;

        uint64_t nodes = 0;
        for (int w = q.m + 1 ; w <= q.w_max ; ++w) {
            v.reached = w;
            int t = q.phi(w);
            if (t <= 0) {
                v.kind = verdict_kind::large;
                v.witness = w;
                break;
            }

            vector<int> pool;
            for (int x : q.x.elements())
                if (x > q.m && x <= w)
                    pool.push_back(x);

            partition_search search(move(pool), q.f, t, q.p, q.budget, nodes);
            bool defeated = search.run();
            if (search.stopped()) {
                v.kind = verdict_kind::unknown;
                break;
            }
            if (!defeated) {
                v.kind = verdict_kind::large;
                v.witness = w;
                break;
            }

            vector<int> rho(size_t(w), 1);
            const auto & classes = search.classes();
            for (size_t ci = 0 ; ci < classes.size() ; ++ci) {
                for (int x : classes[ci])
                    rho[size_t(x) - 1] = int(ci) + 1;
                auto homog = find_homogeneous_subset(q.f, number_set(classes[ci]), t);
                if (homog.has_value())
                    throw invariant_violation_error("partition search returned a class"
                            " holding a homogeneous set of size " + to_string(t));
            }
            v.counterexamples[w] = move(rho);
        }

        v.stats.nodes = nodes;
        v.stats.seconds = duration<double>(steady_clock::now() - started).count();
        return v;
    }
}
