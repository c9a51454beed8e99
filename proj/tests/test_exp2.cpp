#include <doctest.h>

#include <packram/coloring.hpp>
#include <packram/errors.hpp>
#include <packram/exp2.hpp>

#include <vector>

using namespace packram;

TEST_CASE("helper strings")
{
    helper_string tau{ { 2, 1, 2 } };
    CHECK(tau.length() == 3);
    CHECK(tau.value(1) == 2);
    CHECK(tau.value(3) == 2);
    CHECK(tau.extended(1).values() == std::vector<int>{ 2, 1, 2, 1 });
    CHECK(tau.is_prefix_of(tau.extended(1)));
    CHECK(!tau.extended(1).is_prefix_of(tau));
    CHECK(helper_string{}.is_prefix_of(tau));
    CHECK_THROWS_AS(helper_string{ { 1, 0 } }, bad_input_error);
}

TEST_CASE("tail sets under left-parity pairs")
{
    // f({x, y}) = 1 + (x mod 2): the tail of tau survives exactly when
    // tau(x) = 1 + (x mod 2) at every committed position.
    auto f = coloring_rule::parity_min(2, 30);

    CHECK(tail_set(helper_string{ { 2 } }, f, 30).elements().elements()
            == number_set::range(2, 30).elements());
    CHECK(tail_set(helper_string{ { 2, 1 } }, f, 30).elements().elements()
            == number_set::range(3, 30).elements());
    CHECK(tail_set(helper_string{ { 1 } }, f, 30).elements().empty());
    CHECK(tail_set(helper_string{}, f, 30).elements().size() == 30);
}

TEST_CASE("tree membership via tail largeness")
{
    auto f = coloring_rule::parity_min(2, 30);
    auto phi = growth_function::constant(2);
    exp2_bounds bounds{ 30, 2, 0 };

    CHECK(in_tree(helper_string{ { 2 } }, f, phi, bounds).kind == verdict_kind::large);
    CHECK(in_tree(helper_string{ { 1 } }, f, phi, bounds).kind == verdict_kind::small_up_to);
    CHECK(in_tree(helper_string{ { 2, 1, 2 } }, f, phi, bounds).kind == verdict_kind::large);
}

TEST_CASE("path extension prefers the smallest large color")
{
    auto f = coloring_rule::parity_min(2, 30);
    auto phi = growth_function::constant(2);
    exp2_bounds bounds{ 30, 2, 0 };

    auto ext = extend_path(helper_string{}, f, phi, bounds);
    CHECK(ext.color == 2);
    CHECK(ext.path.values() == std::vector<int>{ 2 });
    CHECK(!ext.downgraded);

    auto further = extend_path(ext.path, f, phi, bounds);
    CHECK(further.color == 1);
    CHECK(further.path.values() == std::vector<int>{ 2, 1 });
}

TEST_CASE("path extension downgrades to unknown on a starved budget")
{
    auto f = coloring_rule::parity_min(2, 30);
    auto phi = growth_function::constant(2);
    exp2_bounds bounds{ 30, 2, 0, 1 };

    auto ext = extend_path(helper_string{}, f, phi, bounds);
    CHECK(ext.color == 2);
    CHECK(ext.downgraded);
}

TEST_CASE("path extension fails when every tail is small")
{
    // Constant color 1 pairs: the tail of the string (2) is already empty,
    // so neither one-color extension can be large.
    auto f = coloring_rule::constant(2, 2, 30, 1);
    auto phi = growth_function::constant(2);
    exp2_bounds bounds{ 30, 2, 0 };

    CHECK_THROWS_AS(extend_path(helper_string{ { 2 } }, f, phi, bounds), bounds_error);
}

TEST_CASE("next block under left-parity pairs")
{
    auto f = coloring_rule::parity_min(2, 30);
    auto phi = growth_function::constant(2);
    exp2_bounds bounds{ 30, 2, 0 };

    helper_string path;
    int downgrades = 0;
    auto x = membership::everything(30);

    auto first = next_block(path, x, 1, f, phi, bounds, downgrades);
    CHECK(first.w == 4);
    CHECK(first.y.elements() == std::vector<int>{ 2, 4 });

    auto second = next_block(path, x, first.w, f, phi, bounds, downgrades);
    CHECK(second.w == 7);
    CHECK(second.y.elements() == std::vector<int>{ 5, 7 });
    CHECK(downgrades == 0);
    CHECK(path.length() >= 6);
    for (int i = 1 ; i <= path.length() ; ++i)
        CHECK(path.value(i) == 1 + i % 2);
}

TEST_CASE("pipeline on left-parity pairs")
{
    auto f = coloring_rule::parity_min(2, 30);
    auto phi = growth_function::constant(2);
    exp2_bounds bounds{ 30, 0, 0 };

    auto s = build_pipeline(f, phi, 3, bounds);

    CHECK(s.helper.length() >= 8);
    CHECK(s.seq.boundaries().boundaries() == std::vector<int>{ 1, 4, 7, 10 });
    CHECK(s.seq.block(1).elements() == std::vector<int>{ 2, 4 });
    CHECK(s.seq.block(2).elements() == std::vector<int>{ 5, 7 });
    CHECK(s.seq.block(3).elements() == std::vector<int>{ 8, 10 });
    CHECK(s.induced_between == std::vector<int>{ 1, 2, 1 });
    CHECK(s.induced_within == std::vector<int>{ 1, 2, 1 });
    CHECK(s.selected == std::vector<int>{ 1, 3 });
    CHECK(s.result.elements() == std::vector<int>{ 2, 4, 8, 10 });
    CHECK(s.downgrades == 0);

    CHECK(is_homogeneous(f, s.result).color == 1);
    CHECK(is_semi_homogeneous(f, s.result));
}

TEST_CASE("pipeline output properties on seeded stable pairs")
{
    int completed = 0;
    for (std::uint64_t seed = 1 ; seed <= 8 ; ++seed) {
        auto f = coloring_rule::stable_random(seed, 2, 120, 4);
        auto phi = growth_function::constant(2);
        exp2_bounds bounds{ 120, 0, 0, 4000000 };

        exp2_pipeline s = [&] {
            try {
                return build_pipeline(f, phi, 3, bounds);
            } catch (const bounds_error &) {
                return exp2_pipeline{ {}, block_sequence{ number_set{}, interval_ladder{ { 1 } } },
                        {}, {}, {}, number_set{}, -1 };
            }
        }();
        if (s.downgrades < 0)
            continue;
        ++completed;

        CHECK(is_semi_homogeneous(f, s.result));

        // Every block is homogeneous for f and constant for the helper.
        for (int i = 1 ; i <= s.seq.block_count() ; ++i) {
            auto y = s.seq.block(i);
            CHECK(y.size() >= 2);
            CHECK(is_homogeneous(f, y).homogeneous);
            int h = s.helper.value(y.min());
            for (int v : y.elements())
                CHECK(s.helper.value(v) == h);
            CHECK(h == s.induced_between[std::size_t(i) - 1]);
        }

        // Cross-block pairs take the left block's between color.
        for (int i = 1 ; i < s.seq.block_count() ; ++i)
            for (int j = i + 1 ; j <= s.seq.block_count() ; ++j)
                for (int a : s.seq.block(i).elements())
                    for (int b : s.seq.block(j).elements())
                        CHECK(f.color_of_pair(a, b) == s.induced_between[std::size_t(i) - 1]);
    }
    CHECK(completed >= 4);
}
