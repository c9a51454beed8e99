#include <packram/growth.hpp>

#include <bit>
#include <string>
#include <utility>

using std::max;
using std::move;
using std::nullopt;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace packram
{
    auto growth_function::constant(int c) -> growth_function
    {
        if (c < 0)
            throw bad_input_error{ "growth values must be >= 0" };
        growth_function phi;
        phi._kind = kind::constant;
        phi._a = c;
        return phi;
    }

    auto growth_function::ceil_div(int d) -> growth_function
    {
        if (d < 1)
            throw bad_input_error{ "ceil_div divisor must be >= 1" };
        growth_function phi;
        phi._kind = kind::ceil_div;
        phi._a = d;
        phi._order = true;
        return phi;
    }

    auto growth_function::identity() -> growth_function
    {
        growth_function phi;
        phi._kind = kind::identity;
        phi._order = true;
        return phi;
    }

    auto growth_function::log2_offset(int offset, int floor) -> growth_function
    {
        if (floor < 0)
            throw bad_input_error{ "log2_offset floor must be >= 0" };
        growth_function phi;
        phi._kind = kind::log2_offset;
        phi._a = offset;
        phi._b = floor;
        phi._order = true;
        return phi;
    }

    auto growth_function::from_table(vector<int> values) -> growth_function
    {
        for (auto & v : values)
            if (v < 0)
                throw bad_input_error{ "growth values must be >= 0" };
        growth_function phi;
        phi._kind = kind::table;
        phi._table = move(values);
        return phi;
    }

    auto growth_function::operator() (long long w) const -> int
    {
        if (w < 1)
            throw bad_input_error{ "growth functions are defined on w >= 1" };
        switch (_kind) {
        case kind::constant:
            return _a;
        case kind::ceil_div:
            return int((w + _a - 1) / _a);
        case kind::identity:
            if (w > 1000000000)
                throw bounds_error{ "identity growth value would not fit" };
            return int(w);
        case kind::log2_offset:
            return max(_b, int(std::bit_width(std::uint64_t(w))) - 1 + _a);
        case kind::table:
            if (w > static_cast<long long>(_table.size()))
                throw bounds_error{ "growth table has no entry for w = " + to_string(w) };
            return _table[std::size_t(w) - 1];
        }
        throw invariant_violation_error{ "unreachable growth kind" };
    }

    auto growth_function::describe() const -> string
    {
        switch (_kind) {
        case kind::constant: return "const " + to_string(_a);
        case kind::ceil_div: return "ceildiv " + to_string(_a);
        case kind::identity: return "id";
        case kind::log2_offset: return "log2 " + to_string(_a) + " " + to_string(_b);
        case kind::table: return "table";
        }
        throw invariant_violation_error{ "unreachable growth kind" };
    }

    auto growth_function::verify_order_prefix(int limit) const -> optional<int>
    {
        bool increased = false;
        int previous = (*this)(1);
        for (int w = 2 ; w <= limit ; ++w) {
            int value = (*this)(w);
            if (value < previous)
                return w;
            if (value > previous)
                increased = true;
            previous = value;
        }
        if (limit >= 2 && ! increased && _order)
            return limit;
        return nullopt;
    }
}
