#include <packram/arrow.hpp>
#include <packram/exp1.hpp>
#include <packram/exp2.hpp>
#include <packram/io.hpp>
#include <packram/largeness.hpp>
#include <packram/packed.hpp>
#include <packram/reversal.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace
{
    using namespace packram;

    using std::cout;
    using std::string;
    using std::uint64_t;

    /// Budget resolution order: --budget flag, PACKRAM_BUDGET, built-in.
    auto resolve_budget(uint64_t flag_value) -> uint64_t
    {
        if (flag_value > 0)
            return flag_value;
        if (const char * raw = std::getenv("PACKRAM_BUDGET")) {
            try {
                std::size_t used = 0;
                auto value = std::stoull(raw, &used);
                if (used != string(raw).size() || 0 == value)
                    throw std::invalid_argument(raw);
                return value;
            } catch (const std::exception &) {
                throw bad_input_error(string("PACKRAM_BUDGET must be a positive integer, got '") + raw + "'");
            }
        }
        return default_budget;
    }

    struct coloring_source
    {
        string file;
        string rule;
        int n = 0;
        int k = 0;
        int horizon = 0;
    };

    auto add_coloring_source(CLI::App * cmd, coloring_source & src, int fixed_n) -> void
    {
        cmd->add_option("--coloring", src.file, "coloring file");
        cmd->add_option("--rule", src.rule, "coloring rule spec, e.g. 'random 7'");
        if (0 == fixed_n)
            cmd->add_option("--n", src.n, "exponent for --rule");
        else
            src.n = fixed_n;
        cmd->add_option("--k", src.k, "palette size for --rule");
        cmd->add_option("--horizon", src.horizon, "horizon for --rule");
    }

    auto resolve_coloring(const coloring_source & src, int expected_n) -> coloring_rule
    {
        if (!src.file.empty() && !src.rule.empty())
            throw bad_input_error("give either --coloring or --rule, not both");
        if (!src.file.empty()) {
            auto f = load_coloring(src.file);
            if (expected_n > 0 && f.exponent() != expected_n)
                throw bad_input_error("this verb needs a coloring of exponent "
                        + std::to_string(expected_n));
            return f;
        }
        if (!src.rule.empty()) {
            int n = expected_n > 0 ? expected_n : src.n;
            if (n < 1 || src.k < 1 || src.horizon < 1)
                throw bad_input_error("--rule needs --k and --horizon (and --n where the "
                        "exponent is not fixed by the verb)");
            return parse_rule(src.rule, n, src.k, src.horizon);
        }
        throw bad_input_error("need --coloring FILE or --rule SPEC");
    }

    /// Wall-clock diagnostics go to stderr so reports stay byte-stable.
    class stopwatch
    {
    public:
        ~stopwatch()
        {
            auto seconds = std::chrono::duration<double>(clock::now() - _started).count();
            std::ostringstream line;
            line.setf(std::ios::fixed);
            line.precision(3);
            line << "wall " << seconds << "s\n";
            std::cerr << line.str();
        }

    private:
        using clock = std::chrono::steady_clock;
        clock::time_point _started = clock::now();
    };

    auto emit(const string & text, const string & out_path) -> void
    {
        cout << text;
        if (!out_path.empty()) {
            std::ofstream file(out_path);
            if (!file)
                throw bad_input_error("cannot open " + out_path + " for writing");
            file << text;
            if (!file.flush())
                throw bad_input_error("write to " + out_path + " failed");
        }
    }

    auto run_arrow(int w, int m, int n, int k, uint64_t budget, const string & cert_path) -> int
    {
        stopwatch timer;
        auto answer = arrow_holds(arrow_query{w, m, n, k}, resolve_budget(budget));
        std::ostringstream report;
        report << "packram-arrow v1\n";
        report << "query " << w << " " << m << " " << n << " " << k << "\n";
        report << "holds " << (answer.holds ? "true" : "false") << "\n";
        report << "nodes " << answer.stats.nodes << "\n";
        report << "end\n";
        cout << report.str();
        if (!answer.holds && !cert_path.empty())
            save_coloring(cert_path, *answer.certificate);
        return 0;
    }

    auto run_phimax(int w, int n, int k, uint64_t budget) -> int
    {
        stopwatch timer;
        int value = phi_max(w, n, k, resolve_budget(budget));
        std::ostringstream report;
        report << "packram-phimax v1\n";
        report << "query " << w << " " << n << " " << k << "\n";
        report << "value " << value << "\n";
        report << "end\n";
        cout << report.str();
        return 0;
    }

    auto run_large(const coloring_source & src, const string & set_path, const string & phi_spec,
            int m, int p, int w_max, uint64_t budget) -> int
    {
        stopwatch timer;
        auto f = resolve_coloring(src, 2);
        auto phi = parse_growth(phi_spec);
        auto x = set_path.empty()
                ? membership::everything(w_max)
                : membership(load_set(set_path), w_max);
        largeness_query q{x, f, phi, m, p, w_max, resolve_budget(budget)};
        auto verdict = check_large(q);
        std::ostringstream report;
        write_verdict(report, verdict);
        cout << report.str();
        return verdict_kind::unknown == verdict.kind ? 2 : 0;
    }

    auto run_solve1(const coloring_source & src, const string & phi_spec, int blocks,
            long long cap, const string & out_path) -> int
    {
        stopwatch timer;
        auto f = resolve_coloring(src, 1);
        auto phi = parse_growth(phi_spec);
        auto solution = solve_exp1(f, phi, blocks, cap);
        std::ostringstream report;
        write_solution(report, to_record(solution));
        emit(report.str(), out_path);
        return 0;
    }

    auto run_solve2(const coloring_source & src, const string & phi_spec, int blocks,
            int w_max, int p, int m, uint64_t budget, const string & out_path) -> int
    {
        stopwatch timer;
        auto f = resolve_coloring(src, 2);
        auto phi = parse_growth(phi_spec);
        exp2_bounds bounds{w_max, p, m, resolve_budget(budget)};
        auto pipeline = build_pipeline(f, phi, blocks, bounds);
        std::ostringstream report;
        write_solution(report, to_record(pipeline));
        emit(report.str(), out_path);
        return 0;
    }

    auto run_sharpg(const string & phi_spec, int n, int count, long long cap,
            const string & out_path) -> int
    {
        auto phi = parse_growth(phi_spec);
        auto ladder = build_sharp_ladder(phi, n, count, cap);
        auto g = sharp_g(ladder, n);
        std::ostringstream report;
        write_sharp(report, g);
        emit(report.str(), out_path);
        return 0;
    }

    auto run_mergeh(const string & coloring_path, const string & sharp_path,
            const string & out_path) -> int
    {
        auto f = load_coloring(coloring_path);
        auto g = load_sharp(sharp_path);
        auto h = merge_h(f, g);
        std::ostringstream report;
        write_coloring(report, h);
        emit(report.str(), out_path);
        return 0;
    }

    auto run_extract(const string & set_path, const string & sharp_path,
            const string & coloring_path, const string & out_path) -> int
    {
        auto a = load_set(set_path);
        auto g = load_sharp(sharp_path);
        auto h = extract_homogeneous(a, g.ladder);
        std::ostringstream report;
        int exit_code = 0;
        if (!coloring_path.empty()) {
            auto f = load_coloring(coloring_path);
            int c = unique_allones_color(f, g, a);
            report << "# allones-color " << c << "\n";
            auto homog = is_homogeneous(f, h);
            if (!homog.homogeneous || (!homog.vacuous && homog.color != c)) {
                std::cerr << "extracted set is not homogeneous with the all-ones color\n";
                exit_code = 1;
            }
        }
        write_set(report, h);
        emit(report.str(), out_path);
        return exit_code;
    }

    auto run_verify_packed(const string & set_path, const string & phi_spec, int horizon,
            int threshold) -> int
    {
        auto a = load_set(set_path);
        auto phi = parse_growth(phi_spec);
        auto report = make_packed_report(a, phi, horizon, threshold);
        std::ostringstream out;
        out << "packram-packed v1\n";
        out << "horizon " << report.horizon << "\n";
        out << "threshold " << report.threshold << "\n";
        out << "count " << report.witnesses.size() << "\n";
        out << "witnesses";
        for (int w : report.witnesses)
            out << " " << w;
        out << "\n";
        out << "verdict " << (report.packed_at_horizon ? "packed" : "sparse") << "\n";
        out << "end\n";
        cout << out.str();
        return report.packed_at_horizon ? 0 : 1;
    }

    auto run_verify_colors(const string & kind, const string & coloring_path,
            const string & set_path) -> int
    {
        auto f = load_coloring(coloring_path);
        auto a = load_set(set_path);
        std::ostringstream out;
        out << "packram-check v1\n";
        out << "check " << kind << "\n";
        auto used = colors_used(f, a);
        out << "colors";
        for (int c : used)
            out << " " << c;
        out << "\n";
        bool pass = false;
        if ("semihom" == kind) {
            pass = is_semi_homogeneous(f, a);
        } else {
            auto homog = is_homogeneous(f, a);
            pass = homog.homogeneous;
            if (homog.homogeneous && !homog.vacuous)
                out << "color " << homog.color << "\n";
        }
        out << "verdict " << (pass ? "pass" : "fail") << "\n";
        out << "end\n";
        cout << out.str();
        return pass ? 0 : 1;
    }

    auto run_verify_blockseq(const string & solution_path, const coloring_source & src,
            const string & phi_spec) -> int
    {
        auto record = load_solution(solution_path);
        auto f = resolve_coloring(src, 0);
        auto phi = parse_growth(phi_spec);

        std::vector<int> members;
        for (const auto & block : record.blocks)
            for (int x : block)
                members.push_back(x);
        block_sequence seq{number_set(members), interval_ladder(record.boundaries)};
        bool pass = is_increasing_block_sequence(seq, f, phi);

        std::ostringstream out;
        out << "packram-check v1\n";
        out << "check blockseq\n";
        out << "blocks " << seq.block_count() << "\n";
        out << "verdict " << (pass ? "pass" : "fail") << "\n";
        out << "end\n";
        cout << out.str();
        return pass ? 0 : 1;
    }

    auto run_gen(uint64_t seed, int n, int k, int horizon, int lag, const string & rule_spec,
            const string & out_path) -> int
    {
        coloring_rule f = [&] {
            if (!rule_spec.empty())
                return parse_rule(rule_spec, n, k, horizon);
            if (lag > 0) {
                if (2 != n)
                    throw bad_input_error("--lag generates pair colorings only");
                return coloring_rule::stable_random(seed, k, horizon, lag);
            }
            return coloring_rule::seeded_random(seed, n, k, horizon);
        }();
        std::ostringstream report;
        write_coloring(report, f);
        emit(report.str(), out_path);
        return 0;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"finite packed-Ramsey toolkit"};
    app.require_subcommand(1);

    int w = 0, m = 0, n = 0, k = 0, p = 0, horizon = 0, count = 0, blocks = 0, threshold = 0, lag = 0;
    int w_max = 200;
    long long cap = 100000000;
    uint64_t budget = 0, seed = 0;
    string phi_spec, set_path, out_path, cert_path, sharp_path, solution_path, coloring_path, rule_spec;
    coloring_source src;

    auto * arrow_cmd = app.add_subcommand("arrow", "decide w -> (m)^n_k");
    arrow_cmd->add_option("--w", w)->required();
    arrow_cmd->add_option("--m", m)->required();
    arrow_cmd->add_option("--n", n)->required();
    arrow_cmd->add_option("--k", k)->required();
    arrow_cmd->add_option("--budget", budget);
    arrow_cmd->add_option("--cert", cert_path, "write a failing coloring here");

    auto * phimax_cmd = app.add_subcommand("phimax", "largest m with w -> (m)^n_{k+1}");
    phimax_cmd->add_option("--w", w)->required();
    phimax_cmd->add_option("--n", n)->required();
    phimax_cmd->add_option("--k", k)->required();
    phimax_cmd->add_option("--budget", budget);

    auto * large_cmd = app.add_subcommand("large", "bounded largeness verdict");
    add_coloring_source(large_cmd, src, 2);
    large_cmd->add_option("--set", set_path, "member set file (default: everything)");
    large_cmd->add_option("--phi", phi_spec)->required();
    large_cmd->add_option("--m", m);
    large_cmd->add_option("--p", p)->required();
    large_cmd->add_option("--wmax", w_max)->required();
    large_cmd->add_option("--budget", budget);

    auto * solve1_cmd = app.add_subcommand("solve1", "packed homogeneous set, exponent 1");
    add_coloring_source(solve1_cmd, src, 1);
    solve1_cmd->add_option("--phi", phi_spec)->required();
    solve1_cmd->add_option("--blocks", blocks)->required();
    solve1_cmd->add_option("--cap", cap);
    solve1_cmd->add_option("--out", out_path);

    auto * solve2_cmd = app.add_subcommand("solve2", "packed semi-homogeneous set, exponent 2");
    add_coloring_source(solve2_cmd, src, 2);
    solve2_cmd->add_option("--phi", phi_spec)->required();
    solve2_cmd->add_option("--blocks", blocks)->required();
    solve2_cmd->add_option("--wmax", w_max)->required();
    solve2_cmd->add_option("--p", p);
    solve2_cmd->add_option("--m", m);
    solve2_cmd->add_option("--budget", budget);
    solve2_cmd->add_option("--out", out_path);

    auto * sharpg_cmd = app.add_subcommand("sharpg", "interval ladder and type coloring");
    sharpg_cmd->add_option("--phi", phi_spec)->required();
    sharpg_cmd->add_option("--n", n)->required();
    sharpg_cmd->add_option("--count", count)->required();
    sharpg_cmd->add_option("--cap", cap);
    sharpg_cmd->add_option("--out", out_path);

    auto * mergeh_cmd = app.add_subcommand("mergeh", "merge a coloring with a type coloring");
    mergeh_cmd->add_option("--coloring", coloring_path)->required();
    mergeh_cmd->add_option("--sharp", sharp_path)->required();
    mergeh_cmd->add_option("--out", out_path);

    auto * extract_cmd = app.add_subcommand("extract", "one minimum per ladder interval");
    extract_cmd->add_option("--set", set_path)->required();
    extract_cmd->add_option("--sharp", sharp_path)->required();
    extract_cmd->add_option("--coloring", coloring_path, "also check the all-ones color");
    extract_cmd->add_option("--out", out_path);

    auto * verify_cmd = app.add_subcommand("verify", "check a predicate");
    verify_cmd->require_subcommand(1);
    auto * packed_cmd = verify_cmd->add_subcommand("packed", "witness count vs phi");
    packed_cmd->add_option("--set", set_path)->required();
    packed_cmd->add_option("--phi", phi_spec)->required();
    packed_cmd->add_option("--horizon", horizon)->required();
    packed_cmd->add_option("--threshold", threshold);
    auto * semihom_cmd = verify_cmd->add_subcommand("semihom", "at most 2^(n-1) colors");
    semihom_cmd->add_option("--coloring", coloring_path)->required();
    semihom_cmd->add_option("--set", set_path)->required();
    auto * homog_cmd = verify_cmd->add_subcommand("homog", "exactly one color");
    homog_cmd->add_option("--coloring", coloring_path)->required();
    homog_cmd->add_option("--set", set_path)->required();
    auto * blockseq_cmd = verify_cmd->add_subcommand("blockseq", "increasing block sequence");
    blockseq_cmd->add_option("--solution", solution_path)->required();
    add_coloring_source(blockseq_cmd, src, 0);
    blockseq_cmd->add_option("--phi", phi_spec)->required();

    auto * gen_cmd = app.add_subcommand("gen", "emit a coloring file");
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("--n", n)->required();
    gen_cmd->add_option("--k", k)->required();
    gen_cmd->add_option("--horizon", horizon)->required();
    gen_cmd->add_option("--lag", lag, "stable pair coloring with this lag");
    gen_cmd->add_option("--rule", rule_spec, "explicit rule spec instead of a seed");
    gen_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);

        if (app.got_subcommand(arrow_cmd))
            return run_arrow(w, m, n, k, budget, cert_path);
        if (app.got_subcommand(phimax_cmd))
            return run_phimax(w, n, k, budget);
        if (app.got_subcommand(large_cmd))
            return run_large(src, set_path, phi_spec, m, p, w_max, budget);
        if (app.got_subcommand(solve1_cmd))
            return run_solve1(src, phi_spec, blocks, cap, out_path);
        if (app.got_subcommand(solve2_cmd))
            return run_solve2(src, phi_spec, blocks, w_max, p, m, budget, out_path);
        if (app.got_subcommand(sharpg_cmd))
            return run_sharpg(phi_spec, n, count, cap, out_path);
        if (app.got_subcommand(mergeh_cmd))
            return run_mergeh(coloring_path, sharp_path, out_path);
        if (app.got_subcommand(extract_cmd))
            return run_extract(set_path, sharp_path, coloring_path, out_path);
        if (app.got_subcommand(verify_cmd)) {
            if (verify_cmd->got_subcommand(packed_cmd))
                return run_verify_packed(set_path, phi_spec, horizon, threshold);
            if (verify_cmd->got_subcommand(semihom_cmd))
                return run_verify_colors("semihom", coloring_path, set_path);
            if (verify_cmd->got_subcommand(homog_cmd))
                return run_verify_colors("homog", coloring_path, set_path);
            if (verify_cmd->got_subcommand(blockseq_cmd))
                return run_verify_blockseq(solution_path, src, phi_spec);
        }
        if (app.got_subcommand(gen_cmd))
            return run_gen(seed, n, k, horizon, lag, rule_spec, out_path);
        std::cerr << "no verb dispatched\n";
        return 3;
    } catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return 0 == code ? 0 : 3;
    } catch (const budget_exhausted_error & e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return 2;
    } catch (const bounds_error & e) {
        std::cerr << "bounds: " << e.what() << "\n";
        return 2;
    } catch (const invariant_violation_error & e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const type_absent_error & e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 1;
    } catch (const ambiguous_color_error & e) {
        std::cerr << "ambiguous: " << e.what() << "\n";
        return 1;
    } catch (const error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
