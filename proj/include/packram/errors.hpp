#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace packram
{
    /// Base class for everything this library throws on purpose.
    class error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Malformed argument, file, or query (CLI exit code 3).
    class bad_input_error : public error
    {
    public:
        using error::error;
    };

    /// A bounded search ran out of node budget before deciding (CLI exit code 2).
    class budget_exhausted_error : public error
    {
    public:
        budget_exhausted_error(const std::string & what, std::uint64_t nodes_used) :
            error(what),
            nodes_used(nodes_used)
        {
        }

        std::uint64_t nodes_used;
    };

    /// A growth function failed the pigeonhole closed form at some scanned w.
    class hypothesis_error : public error
    {
    public:
        hypothesis_error(const std::string & what, long long w) :
            error(what),
            w(w)
        {
        }

        long long w;
    };

    /// A scan hit its cap, or a coloring's horizon is too small for the request.
    class bounds_error : public error
    {
    public:
        using error::error;
    };

    /// A constructed object violates one of its own guarantees. Always a bug
    /// in this library or a corrupted input, never a routine failure.
    class invariant_violation_error : public error
    {
    public:
        using error::error;
    };

    /// Reversal extraction: some non-trivial partition type never occurs on
    /// the candidate set, so the unique-color question is not well posed.
    class type_absent_error : public error
    {
    public:
        using error::error;
    };

    /// Reversal extraction: two all-ones subsets carry different base colors.
    class ambiguous_color_error : public error
    {
    public:
        using error::error;
    };
}
