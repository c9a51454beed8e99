#include <packram/io.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace packram
{
    using std::ifstream;
    using std::istream;
    using std::istringstream;
    using std::move;
    using std::ofstream;
    using std::ostream;
    using std::size_t;
    using std::string;
    using std::to_string;
    using std::vector;

    namespace
    {
        /// Next content line: comments and blank lines skipped, trailing
        /// carriage returns stripped.
        auto next_line(istream & in, string & line) -> bool
        {
            while (std::getline(in, line)) {
                if (!line.empty() && '\r' == line.back())
                    line.pop_back();
                auto start = line.find_first_not_of(" \t");
                if (string::npos == start)
                    continue;
                if ('#' == line[start])
                    continue;
                return true;
            }
            return false;
        }

        auto tokens_of(const string & line) -> vector<string>
        {
            istringstream in(line);
            vector<string> out;
            string token;
            while (in >> token)
                out.push_back(token);
            return out;
        }

        auto int_of(const string & token) -> int
        {
            size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(token, &used);
            } catch (const std::exception &) {
                throw bad_input_error("not an integer: " + token);
            }
            if (used != token.size())
                throw bad_input_error("not an integer: " + token);
            return value;
        }

        auto u64_of(const string & token) -> std::uint64_t
        {
            size_t used = 0;
            std::uint64_t value = 0;
            try {
                value = std::stoull(token, &used);
            } catch (const std::exception &) {
                throw bad_input_error("not an unsigned integer: " + token);
            }
            if (used != token.size() || '-' == token.front())
                throw bad_input_error("not an unsigned integer: " + token);
            return value;
        }

        auto rest_ints(const vector<string> & tokens) -> vector<int>
        {
            vector<int> out;
            for (size_t i = 1 ; i < tokens.size() ; ++i)
                out.push_back(int_of(tokens[i]));
            return out;
        }

        auto write_ints(ostream & out, const string & key, const vector<int> & values) -> void
        {
            out << key;
            for (int v : values)
                out << " " << v;
            out << "\n";
        }
    }

    auto parse_growth(const string & spec) -> growth_function
    {
        auto tokens = tokens_of(spec);
        if (tokens.empty())
            throw bad_input_error("empty growth spec");
        const auto & name = tokens[0];
        if ("const" == name && 2 == tokens.size())
            return growth_function::constant(int_of(tokens[1]));
        if ("ceildiv" == name && 2 == tokens.size())
            return growth_function::ceil_div(int_of(tokens[1]));
        if ("id" == name && 1 == tokens.size())
            return growth_function::identity();
        if ("log2" == name && 3 == tokens.size())
            return growth_function::log2_offset(int_of(tokens[1]), int_of(tokens[2]));
        if ("table" == name && tokens.size() >= 2)
            return growth_function::from_table(rest_ints(tokens));
        throw bad_input_error("unrecognised growth spec: " + spec);
    }

    auto parse_rule(const string & spec, int n, int k, int horizon) -> coloring_rule
    {
        auto tokens = tokens_of(spec);
        if (tokens.empty())
            throw bad_input_error("empty rule spec");
        const auto & name = tokens[0];
        if ("const" == name && 2 == tokens.size())
            return coloring_rule::constant(n, k, horizon, int_of(tokens[1]));
        if ("parity" == name && 1 == tokens.size()) {
            if (2 != k)
                throw bad_input_error("parity rules use palette 2");
            return coloring_rule::parity_min(n, horizon);
        }
        if ("sumparity" == name && 1 == tokens.size()) {
            if (2 != k)
                throw bad_input_error("sumparity rules use palette 2");
            return coloring_rule::parity_sum(n, horizon);
        }
        if ("cycle5" == name && 1 == tokens.size()) {
            if (2 != n || 2 != k || 5 != horizon)
                throw bad_input_error("cycle5 is fixed at n=2, k=2, horizon=5");
            return coloring_rule::cycle5();
        }
        if ("random" == name && 2 == tokens.size())
            return coloring_rule::seeded_random(u64_of(tokens[1]), n, k, horizon);
        if ("stablerandom" == name && 3 == tokens.size()) {
            if (2 != n)
                throw bad_input_error("stablerandom rules are pair colorings");
            return coloring_rule::stable_random(u64_of(tokens[1]), k, horizon, int_of(tokens[2]));
        }
        if ("chunked" == name && 2 == tokens.size()) {
            if (1 != n)
                throw bad_input_error("chunked rules are point colorings");
            return coloring_rule::chunked(k, int_of(tokens[1]), horizon);
        }
        throw bad_input_error("unrecognised rule spec: " + spec);
    }

    auto read_coloring(istream & in) -> coloring_rule
    {
        string line;
        if (!next_line(in, line) || "packram-coloring v1" != line)
            throw bad_input_error("expected header line: packram-coloring v1");

        int n = 0, k = 0, horizon = 0;
        bool have_n = false, have_k = false, have_horizon = false;
        string rule_spec;
        while (true) {
            if (!next_line(in, line))
                throw bad_input_error("coloring file ended before its colors block");
            auto tokens = tokens_of(line);
            if ("colors" == tokens[0] && 1 == tokens.size())
                break;
            if ("n" == tokens[0] && 2 == tokens.size()) {
                n = int_of(tokens[1]);
                have_n = true;
            } else if ("k" == tokens[0] && 2 == tokens.size()) {
                k = int_of(tokens[1]);
                have_k = true;
            } else if ("horizon" == tokens[0] && 2 == tokens.size()) {
                horizon = int_of(tokens[1]);
                have_horizon = true;
            } else if ("rule" == tokens[0] && tokens.size() >= 2) {
                rule_spec = tokens[1];
                for (size_t i = 2 ; i < tokens.size() ; ++i)
                    rule_spec += " " + tokens[i];
            } else {
                throw bad_input_error("unexpected coloring header line: " + line);
            }
        }
        if (!have_n || !have_k || !have_horizon)
            throw bad_input_error("coloring header must set n, k, and horizon");

        vector<int> colors;
        bool ended = false;
        while (next_line(in, line)) {
            auto tokens = tokens_of(line);
            if ("end" == tokens[0] && 1 == tokens.size()) {
                ended = true;
                break;
            }
            for (const auto & token : tokens)
                colors.push_back(int_of(token));
        }
        if (!ended)
            throw bad_input_error("coloring file is missing its end line");

        auto tabled = coloring_rule::from_table(n, k, horizon, move(colors));
        if (rule_spec.empty())
            return tabled;

        auto rule = parse_rule(rule_spec, n, k, horizon);
        const auto & stored = tabled.table();
        size_t at = 0;
        for (const auto & z : enumerate_subsets(number_set::range(1, horizon), n)) {
            if (rule.color_of(z) != stored[at])
                throw bad_input_error("stored colors disagree with rule '" + rule_spec
                        + "' at table position " + to_string(at));
            ++at;
        }
        return rule.tabulated();
    }

    auto write_coloring(ostream & out, const coloring_rule & f) -> void
    {
        auto filled = f.tabulated();
        out << "packram-coloring v1\n";
        out << "n " << f.exponent() << "\n";
        out << "k " << f.palette() << "\n";
        out << "horizon " << f.horizon() << "\n";
        if (!f.tag().empty()) {
            bool reconstructible = true;
            try {
                parse_rule(f.tag(), f.exponent(), f.palette(), f.horizon());
            } catch (const error &) {
                reconstructible = false;
            }
            if (reconstructible)
                out << "rule " << f.tag() << "\n";
        }
        out << "colors\n";
        const auto & table = filled.table();
        for (size_t i = 0 ; i < table.size() ; ++i) {
            out << table[i];
            out << ((0 == (i + 1) % 20 || i + 1 == table.size()) ? "\n" : " ");
        }
        out << "end\n";
    }

    auto read_set(istream & in) -> number_set
    {
        vector<int> elements;
        string line;
        while (next_line(in, line))
            for (const auto & token : tokens_of(line))
                elements.push_back(int_of(token));
        return number_set(move(elements));
    }

    auto write_set(ostream & out, const number_set & a) -> void
    {
        for (int x : a)
            out << x << "\n";
    }

    auto to_record(const exp1_solution & s) -> solution_record
    {
        solution_record r;
        r.kind = "exp1";
        r.boundaries = s.ladder.boundaries();
        for (const auto & block : s.blocks)
            r.blocks.push_back(block.elements());
        r.between = s.induced;
        r.chosen = s.chosen_color;
        r.selected = s.selected;
        r.result = s.result.elements();
        return r;
    }

    auto to_record(const exp2_pipeline & s) -> solution_record
    {
        solution_record r;
        r.kind = "exp2";
        r.boundaries = s.seq.boundaries().boundaries();
        for (int i = 1 ; i <= s.seq.block_count() ; ++i)
            r.blocks.push_back(s.seq.block(i).elements());
        r.between = s.induced_between;
        r.within = s.induced_within;
        r.helper = s.helper.values();
        r.selected = s.selected;
        r.result = s.result.elements();
        r.downgrades = s.downgrades;
        return r;
    }

    auto read_solution(istream & in) -> solution_record
    {
        string line;
        if (!next_line(in, line) || "packram-solution v1" != line)
            throw bad_input_error("expected header line: packram-solution v1");

        solution_record r;
        bool ended = false;
        while (next_line(in, line)) {
            auto tokens = tokens_of(line);
            const auto & key = tokens[0];
            if ("end" == key && 1 == tokens.size()) {
                ended = true;
                break;
            }
            if ("kind" == key && 2 == tokens.size())
                r.kind = tokens[1];
            else if ("boundaries" == key)
                r.boundaries = rest_ints(tokens);
            else if ("block" == key)
                r.blocks.push_back(rest_ints(tokens));
            else if ("between" == key)
                r.between = rest_ints(tokens);
            else if ("within" == key)
                r.within = rest_ints(tokens);
            else if ("helper" == key)
                r.helper = rest_ints(tokens);
            else if ("chosen" == key && 2 == tokens.size())
                r.chosen = int_of(tokens[1]);
            else if ("selected" == key)
                r.selected = rest_ints(tokens);
            else if ("result" == key)
                r.result = rest_ints(tokens);
            else if ("downgrades" == key && 2 == tokens.size())
                r.downgrades = int_of(tokens[1]);
            else
                throw bad_input_error("unexpected solution line: " + line);
        }
        if (!ended)
            throw bad_input_error("solution file is missing its end line");
        if ("exp1" != r.kind && "exp2" != r.kind)
            throw bad_input_error("solution kind must be exp1 or exp2");
        if (r.boundaries.size() != r.blocks.size() + 1)
            throw bad_input_error("solution needs one more boundary than blocks");
        return r;
    }

    auto write_solution(ostream & out, const solution_record & r) -> void
    {
        out << "packram-solution v1\n";
        out << "kind " << r.kind << "\n";
        write_ints(out, "boundaries", r.boundaries);
        for (const auto & block : r.blocks)
            write_ints(out, "block", block);
        write_ints(out, "between", r.between);
        if ("exp2" == r.kind) {
            write_ints(out, "within", r.within);
            write_ints(out, "helper", r.helper);
        }
        if ("exp1" == r.kind)
            out << "chosen " << r.chosen << "\n";
        write_ints(out, "selected", r.selected);
        write_ints(out, "result", r.result);
        if ("exp2" == r.kind)
            out << "downgrades " << r.downgrades << "\n";
        out << "end\n";
    }

    auto read_sharp(istream & in) -> sharp_coloring
    {
        string line;
        if (!next_line(in, line) || "packram-sharp v1" != line)
            throw bad_input_error("expected header line: packram-sharp v1");

        int n = 0;
        bool have_n = false;
        vector<int> boundaries;
        bool ended = false;
        while (next_line(in, line)) {
            auto tokens = tokens_of(line);
            if ("end" == tokens[0] && 1 == tokens.size()) {
                ended = true;
                break;
            }
            if ("n" == tokens[0] && 2 == tokens.size()) {
                n = int_of(tokens[1]);
                have_n = true;
            } else if ("boundaries" == tokens[0]) {
                boundaries = rest_ints(tokens);
            } else {
                throw bad_input_error("unexpected sharp line: " + line);
            }
        }
        if (!ended)
            throw bad_input_error("sharp file is missing its end line");
        if (!have_n || boundaries.empty())
            throw bad_input_error("sharp file must set n and boundaries");
        return sharp_g(interval_ladder(move(boundaries)), n);
    }

    auto write_sharp(ostream & out, const sharp_coloring & g) -> void
    {
        out << "packram-sharp v1\n";
        out << "n " << g.n << "\n";
        write_ints(out, "boundaries", g.ladder.boundaries());
        out << "end\n";
    }

    auto read_verdict(istream & in) -> largeness_verdict
    {
        string line;
        if (!next_line(in, line) || "packram-verdict v1" != line)
            throw bad_input_error("expected header line: packram-verdict v1");

        largeness_verdict v;
        bool have_kind = false;
        bool ended = false;
        while (next_line(in, line)) {
            auto tokens = tokens_of(line);
            const auto & key = tokens[0];
            if ("end" == key && 1 == tokens.size()) {
                ended = true;
                break;
            }
            if ("kind" == key && 2 == tokens.size()) {
                have_kind = true;
                if ("large" == tokens[1])
                    v.kind = verdict_kind::large;
                else if ("small" == tokens[1])
                    v.kind = verdict_kind::small_up_to;
                else if ("unknown" == tokens[1])
                    v.kind = verdict_kind::unknown;
                else
                    throw bad_input_error("unknown verdict kind: " + tokens[1]);
            } else if ("witness" == key && 2 == tokens.size()) {
                v.witness = int_of(tokens[1]);
            } else if ("wmax" == key && 2 == tokens.size()) {
                v.w_max = int_of(tokens[1]);
            } else if ("reached" == key && 2 == tokens.size()) {
                v.reached = int_of(tokens[1]);
            } else if ("nodes" == key && 2 == tokens.size()) {
                v.stats.nodes = u64_of(tokens[1]);
            } else if ("counterexample" == key && tokens.size() >= 2) {
                auto values = rest_ints(tokens);
                int w = values[0];
                v.counterexamples[w] = vector<int>(values.begin() + 1, values.end());
            } else {
                throw bad_input_error("unexpected verdict line: " + line);
            }
        }
        if (!ended)
            throw bad_input_error("verdict file is missing its end line");
        if (!have_kind)
            throw bad_input_error("verdict file must set a kind");
        return v;
    }

    auto write_verdict(ostream & out, const largeness_verdict & v) -> void
    {
        out << "packram-verdict v1\n";
        switch (v.kind) {
        case verdict_kind::large:
            out << "kind large\n";
            out << "witness " << v.witness << "\n";
            break;
        case verdict_kind::small_up_to:
            out << "kind small\n";
            break;
        case verdict_kind::unknown:
            out << "kind unknown\n";
            break;
        }
        out << "wmax " << v.w_max << "\n";
        out << "reached " << v.reached << "\n";
        out << "nodes " << v.stats.nodes << "\n";
        for (const auto & [w, rho] : v.counterexamples) {
            out << "counterexample " << w;
            for (int c : rho)
                out << " " << c;
            out << "\n";
        }
        out << "end\n";
    }

    namespace
    {
        template <typename Value, typename Reader>
        auto load_from(const string & path, Reader reader) -> Value
        {
            ifstream in(path);
            if (!in)
                throw bad_input_error("cannot open " + path);
            return reader(in);
        }

        template <typename Value, typename Writer>
        auto save_to(const string & path, const Value & value, Writer writer) -> void
        {
            ofstream out(path);
            if (!out)
                throw bad_input_error("cannot open " + path + " for writing");
            writer(out, value);
            out.flush();
            if (!out)
                throw bad_input_error("write to " + path + " failed");
        }
    }

    auto load_coloring(const string & path) -> coloring_rule
    {
        return load_from<coloring_rule>(path, [](istream & in) { return read_coloring(in); });
    }

    auto save_coloring(const string & path, const coloring_rule & f) -> void
    {
        save_to(path, f, [](ostream & out, const coloring_rule & v) { write_coloring(out, v); });
    }

    auto load_set(const string & path) -> number_set
    {
        return load_from<number_set>(path, [](istream & in) { return read_set(in); });
    }

    auto save_set(const string & path, const number_set & a) -> void
    {
        save_to(path, a, [](ostream & out, const number_set & v) { write_set(out, v); });
    }

    auto load_solution(const string & path) -> solution_record
    {
        return load_from<solution_record>(path, [](istream & in) { return read_solution(in); });
    }

    auto save_solution(const string & path, const solution_record & r) -> void
    {
        save_to(path, r, [](ostream & out, const solution_record & v) { write_solution(out, v); });
    }

    auto load_sharp(const string & path) -> sharp_coloring
    {
        return load_from<sharp_coloring>(path, [](istream & in) { return read_sharp(in); });
    }

    auto save_sharp(const string & path, const sharp_coloring & g) -> void
    {
        save_to(path, g, [](ostream & out, const sharp_coloring & v) { write_sharp(out, v); });
    }
}
