#include <baron/cli.hpp>

#include <baron/bounds.hpp>
#include <baron/certificate.hpp>
#include <baron/generators.hpp>
#include <baron/scheme_io.hpp>
#include <baron/search.hpp>
#include <baron/verifier.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace baron::cli
{
    namespace
    {
        /// Largest n for which generated schemes are checked exhaustively.
        constexpr int self_verify_limit = 14;

        auto read_scheme(const std::string & path, std::istream & in) -> Scheme
        {
            std::ostringstream text;
            if (path == "-")
                text << in.rdbuf();
            else {
                std::ifstream file(path, std::ios::binary);
                if (! file)
                    throw std::runtime_error("cannot open " + path);
                text << file.rdbuf();
            }
            return parse_scheme(text.str());
        }

        auto join(const std::vector<Rational> & xs) -> std::string
        {
            std::string out;
            for (std::size_t i = 0; i < xs.size(); ++i)
                out += (i ? "," : "") + to_string(xs[i]);
            return out;
        }

        auto verify(const std::string & path, std::optional<int> coin, std::uint64_t limit, std::istream & in, std::ostream & out) -> int
        {
            auto s = read_scheme(path, in);
            out << "n=" << s.n() << "\nweighings=" << s.size() << "\n";
            if (coin) {
                auto r = identifies_coin(s, *coin);
                out << "coin=" << r.target << "\npinned=" << (r.pinned ? "true" : "false") << "\n";
                if (r.counterexample)
                    out << "counterexample=" << to_string(*r.counterexample) << "\n";
                out << "nodes=" << r.nodes_explored << "\n";
                return r.pinned ? holds : refuted;
            }
            auto r = count_consistent(s, limit);
            bool identified = r.unique && r.identity_consistent;
            out << "limit=" << limit << "\nconsistent_count=" << r.consistent_count
                << "\nidentity_consistent=" << (r.identity_consistent ? "true" : "false")
                << "\nunique=" << (r.unique ? "true" : "false")
                << "\nidentifies_all=" << (identified ? "true" : "false") << "\n";
            if (r.second_witness)
                out << "second_witness=" << to_string(*r.second_witness) << "\n";
            out << "nodes=" << r.nodes_explored << "\n";
            return identified ? holds : refuted;
        }

        auto generate(const std::string & strategy, int n, std::optional<int> t, const std::string & output, bool no_verify,
            std::ostream & out, std::ostream & err) -> int
        {
            Scheme s{1};
            std::vector<CoinLabel> must_pin; // empty: all coins
            if (strategy == "trivial")
                s = generate_trivial(n);
            else if (strategy == "helper") {
                auto h = generate_helper(n);
                s = h.scheme;
                must_pin = h.helpers.coins;
            }
            else if (strategy == "binary")
                s = generate_binary(n);
            else if (strategy == "refined") {
                auto r = generate_refined_traced(n);
                s = r.scheme;
                err << "refined rounds=" << r.stats.rounds << " split_rounds=" << r.stats.split_rounds
                    << " extra_weighings=" << r.stats.extra_weighings << " light_groups=" << r.stats.light_groups << "\n";
            }
            else if (strategy == "coin") {
                if (! t) {
                    err << "error: --strategy coin needs --t\n";
                    return undecided;
                }
                s = generate_particular_coin(n, *t);
                must_pin = {*t};
            }

            if (! no_verify && n <= self_verify_limit) {
                bool ok = must_pin.empty() ? identifies_all(s)
                                           : std::ranges::all_of(must_pin, [&](CoinLabel c) { return identifies_coin(s, c).pinned; });
                if (! ok) {
                    err << "error: generated scheme failed exhaustive verification\n";
                    return refuted;
                }
                err << "verified exhaustively\n";
            }

            auto text = serialize_scheme(s);
            if (output.empty() || output == "-")
                out << text;
            else {
                std::ofstream file(output, std::ios::binary);
                if (! (file << text))
                    throw std::runtime_error("cannot write " + output);
            }
            err << "weighings=" << s.size() << "\n";
            return holds;
        }

        auto omni(int n, unsigned jobs, int max_k, bool one_sided, std::optional<double> seconds, std::ostream & out, std::ostream & err) -> int
        {
            SearchOptions opts;
            opts.jobs = jobs;
            opts.max_k = max_k;
            opts.allow_one_sided = one_sided;
            if (seconds)
                opts.time_limit = std::chrono::duration<double>(*seconds);
            opts.progress = [&](const std::string & line) { err << line << "\n"; };
            try {
                auto r = compute_omni(n, opts);
                out << "a(" << n << ")=" << r.a_of_n << "\nn=" << n << "\ndesigns_examined=" << r.designs_examined << "\n";
                for (const auto & w : r.witness.weighings())
                    out << "witness=" << format_weighing(w) << "\n";
                return holds;
            }
            catch (const SearchBudgetExhausted & e) {
                out << "lower_bound=" << e.lower_bound() << "\n";
                err << "error: " << e.what() << "\n";
                return undecided;
            }
        }

        auto cert_check(const std::string & path, const std::string & multipliers, std::istream & in, std::ostream & out) -> int
        {
            auto s = read_scheme(path, in);
            auto r = check_certificate(s, parse_multipliers(multipliers));
            out << "status=" << (r.accepted ? "accepted" : "rejected") << "\nmultipliers=" << join(r.certificate.multipliers)
                << "\ncoefficients=" << join(r.certificate.coefficients) << "\n";
            if (! r.accepted)
                out << "reason=" << r.reason << "\n";
            return r.accepted ? holds : refuted;
        }

        auto cert_find(const std::string & path, std::istream & in, std::ostream & out) -> int
        {
            auto s = read_scheme(path, in);
            auto found = find_multipliers(s);
            if (! found) {
                out << "status=none\n";
                return refuted;
            }
            std::vector<Rational> lambda(found->begin(), found->end());
            auto r = check_certificate(s, lambda);
            if (! r.accepted)
                throw std::logic_error("multiplier search returned a rejected certificate: " + r.reason);
            out << "status=found\nmultipliers=" << join(lambda) << "\ncoefficients=" << join(r.certificate.coefficients) << "\n";
            return holds;
        }

        auto bounds(int n, std::ostream & out) -> int
        {
            auto b = bounds_for(n);
            out << "n=" << b.n << "\nnatural_lower=" << b.natural_lower << "\nconditional_lower=" << b.conditional_lower
                << "\ntrivial_upper=" << b.trivial_upper << "\nbinary_upper=" << b.binary_upper
                << "\nrefined_upper=" << b.refined_upper << "\nknown_exact=";
            if (b.known_exact)
                out << *b.known_exact;
            else
                out << "none";
            out << "\n";
            return holds;
        }
    }

    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Baron Muenchhausen coin-weighing toolkit"};
        app.require_subcommand(1);

        std::string file;
        std::optional<int> coin;
        std::uint64_t limit = 2;
        auto * verify_cmd = app.add_subcommand("verify", "Check that a scheme identifies every coin (or one coin)");
        verify_cmd->add_option("file", file, "Scheme file, or - for standard input")->required();
        verify_cmd->add_option("--coin", coin, "Only require this coin to be identified");
        verify_cmd->add_option("--limit", limit, "Stop counting consistent assignments at this many")->check(CLI::PositiveNumber);

        std::string strategy, output;
        int n = 0;
        std::optional<int> target;
        bool no_verify = false;
        auto * gen_cmd = app.add_subcommand("gen", "Generate a weighing scheme");
        gen_cmd->add_option("--strategy", strategy, "Construction")->required()->check(CLI::IsMember({"trivial", "helper", "binary", "refined", "coin"}));
        gen_cmd->add_option("--n", n, "Number of coins")->required()->check(CLI::PositiveNumber);
        gen_cmd->add_option("--t", target, "Target coin for --strategy coin");
        gen_cmd->add_option("-o,--output", output, "Output file (default: standard output)");
        gen_cmd->add_flag("--no-verify", no_verify, "Skip exhaustive self-verification for n <= 14");

        unsigned jobs = 1;
        int max_k = 6;
        bool one_sided = false;
        std::optional<double> seconds;
        auto * omni_cmd = app.add_subcommand("omni", "Compute a(n) by exhaustive search");
        omni_cmd->add_option("--n", n, "Number of coins")->required()->check(CLI::PositiveNumber);
        omni_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
        omni_cmd->add_option("--max-k", max_k, "Largest number of weighings to try")->check(CLI::NonNegativeNumber);
        omni_cmd->add_flag("--allow-one-sided", one_sided, "Also consider weighings with an empty pan");
        omni_cmd->add_option("--time-limit", seconds, "Give up after this many seconds")->check(CLI::PositiveNumber);

        std::string multipliers;
        auto * cert_cmd = app.add_subcommand("cert", "Rearrangement certificates for all-equality schemes");
        cert_cmd->require_subcommand(1);
        auto * check_cmd = cert_cmd->add_subcommand("check", "Check given multipliers");
        check_cmd->add_option("file", file, "Scheme file, or - for standard input")->required();
        check_cmd->add_option("--multipliers", multipliers, "Comma-separated positive integers or p/q fractions")->required();
        auto * find_cmd = cert_cmd->add_subcommand("find", "Search for multipliers");
        find_cmd->add_option("file", file, "Scheme file, or - for standard input")->required();

        auto * bounds_cmd = app.add_subcommand("bounds", "Print bounds on a(n)");
        bounds_cmd->add_option("--n", n, "Number of coins")->required()->check(CLI::PositiveNumber);

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return holds;
        }
        catch (const CLI::CallForAllHelp &) {
            out << app.help("", CLI::AppFormatMode::All);
            return holds;
        }
        catch (const CLI::ParseError & e) {
            err << "error: " << e.what() << "\n" << "run with --help for usage\n";
            return undecided;
        }

        try {
            if (*verify_cmd)
                return verify(file, coin, limit, in, out);
            if (*gen_cmd)
                return generate(strategy, n, target, output, no_verify, out, err);
            if (*omni_cmd)
                return omni(n, jobs, max_k, one_sided, seconds, out, err);
            if (*check_cmd)
                return cert_check(file, multipliers, in, out);
            if (*find_cmd)
                return cert_find(file, in, out);
            if (*bounds_cmd)
                return bounds(n, out);
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << "\n";
            return undecided;
        }
        return undecided;
    }
}
