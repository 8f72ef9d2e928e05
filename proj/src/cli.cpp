#include "boxagg/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <ostream>

#include "boxagg/chains.hpp"
#include "boxagg/distributions.hpp"
#include "boxagg/geometry.hpp"
#include "boxagg/montecarlo.hpp"
#include "boxagg/output.hpp"
#include "boxagg/partitions.hpp"

namespace boxagg::cli {

namespace {

Box parse_dims(const std::string& text, const std::string& arg_name) {
    Box dims;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::int64_t value = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || value < 1) {
            throw CLI::ValidationError(
                arg_name, "expected comma-separated positive integers, got '" + text + "'");
        }
        dims.push_back(value);
        pos = comma + 1;
    }
    if (dims.empty()) {
        throw CLI::ValidationError(arg_name, "expected at least one dimension");
    }
    return dims;
}

Partition parse_partition(const std::string& text, const std::string& arg_name) {
    Partition parts = parse_dims(text, arg_name);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] > parts[i - 1]) {
            throw CLI::ValidationError(
                arg_name, "partition parts must be non-increasing, got '" + text + "'");
        }
    }
    return parts;
}

void require_same_length(const Box& x, const Box& y, const std::string& arg_name) {
    if (x.size() != y.size()) {
        throw CLI::ValidationError(arg_name, "dimension count differs from the first operand");
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact lattice aggregation statistics for boxes and partitions"};
    app.require_subcommand(1);

    output::Format format = output::Format::json;
    const std::map<std::string, output::Format> format_names{
        {"json", output::Format::json}, {"csv", output::Format::csv}};
    app.add_option("--format", format, "output format")
        ->transform(CLI::CheckedTransformer(format_names))
        ->default_str("json");
    // let subcommands hand the global --format back up to the main app
    app.fallthrough();

    auto emit = [&](const nlohmann::json& record) {
        out << output::render(record, format);
    };

    std::string arg_x, arg_y, arg_z;
    int steps = 1;
    unsigned moment_p = 1;
    std::size_t expand_limit = 8;
    montecarlo::SampleConfig mc_cfg{10000, 0};
    bool mc_partition = false;

    // dist box X Y / dist partition L M
    auto* dist = app.add_subcommand("dist", "exact aggregation distributions");
    dist->require_subcommand(1);
    auto* dist_box = dist->add_subcommand("box", "distribution of x + y -> z over boxes");
    dist_box->add_option("x", arg_x, "first box dims, e.g. 1,3")->required();
    dist_box->add_option("y", arg_y, "second box dims")->required();
    dist_box->callback([&] {
        const Box x = parse_dims(arg_x, "x");
        const Box y = parse_dims(arg_y, "y");
        require_same_length(x, y, "y");
        emit(output::box_dist_record(x, y, distributions::box_distribution(x, y)));
    });
    auto* dist_part = dist->add_subcommand("partition", "distribution over partitions");
    dist_part->add_option("lambda", arg_x, "first partition, e.g. 3,1")->required();
    dist_part->add_option("mu", arg_y, "second partition")->required();
    dist_part->callback([&] {
        const Partition lam = parse_partition(arg_x, "lambda");
        const Partition mu = parse_partition(arg_y, "mu");
        require_same_length(lam, mu, "mu");
        emit(output::partition_dist_record(lam, mu,
                                           partitions::partition_distribution(lam, mu)));
    });

    // growth pmf X Y / growth moment X Y -p P
    auto* growth = app.add_subcommand("growth", "growth-direction statistics");
    growth->require_subcommand(1);
    auto* growth_pmf = growth->add_subcommand("pmf", "P(X = k) for k = 0..l");
    growth_pmf->add_option("x", arg_x)->required();
    growth_pmf->add_option("y", arg_y)->required();
    growth_pmf->callback([&] {
        Box x = parse_dims(arg_x, "x"), y = parse_dims(arg_y, "y");
        require_same_length(x, y, "y");
        std::tie(x, y) = distributions::swap_normalize(x, y);
        emit(output::growth_pmf_record(x, y, distributions::growth_count_pmf(x, y)));
    });
    auto* growth_moment = growth->add_subcommand("moment", "p-th moment of X");
    growth_moment->add_option("x", arg_x)->required();
    growth_moment->add_option("y", arg_y)->required();
    growth_moment->add_option("-p,--power", moment_p, "moment order")->default_val(1u);
    growth_moment->callback([&] {
        Box x = parse_dims(arg_x, "x"), y = parse_dims(arg_y, "y");
        require_same_length(x, y, "y");
        std::tie(x, y) = distributions::swap_normalize(x, y);
        emit(output::moments_record(x, y, moment_p, distributions::moment(x, y, moment_p)));
    });

    // chain unit X --steps N / chain nstep X Z --steps N
    auto* chain = app.add_subcommand("chain", "unit-box aggregation Markov chain");
    chain->require_subcommand(1);
    auto* chain_unit = chain->add_subcommand("unit", "state distribution after N steps");
    chain_unit->add_option("x", arg_x)->required();
    chain_unit->add_option("--steps", steps, "number of steps")->default_val(1);
    chain_unit->callback([&] {
        const Box x = parse_dims(arg_x, "x");
        if (steps < 0) throw CLI::ValidationError("--steps", "must be >= 0");
        chains::StateDistribution d{{x, Rational(1)}};
        for (int n = 0; n < steps; ++n) d = chains::unit_box_step(d);
        emit(output::chain_dist_record(x, steps, d));
    });
    auto* chain_nstep = chain->add_subcommand("nstep", "n-step probability p^(n)_{x,z}");
    chain_nstep->add_option("x", arg_x)->required();
    chain_nstep->add_option("z", arg_z)->required();
    chain_nstep->add_option("--steps", steps)->default_val(1);
    chain_nstep->callback([&] {
        const Box x = parse_dims(arg_x, "x");
        const Box z = parse_dims(arg_z, "z");
        require_same_length(x, z, "z");
        if (steps < 0) throw CLI::ValidationError("--steps", "must be >= 0");
        emit(output::nstep_record(x, z, steps, chains::n_step_probability(x, z, steps)));
    });

    // trace L --steps N --expand-limit K
    auto* trace = app.add_subcommand("trace", "highest-probability-weight self-aggregations");
    trace->add_option("lambda", arg_x)->required();
    trace->add_option("--steps", steps)->default_val(1);
    trace->add_option("--expand-limit", expand_limit, "stop expanding ties beyond this many")
        ->default_val(std::size_t{8});
    trace->callback([&] {
        const Partition lam = parse_partition(arg_x, "lambda");
        if (steps < 1) throw CLI::ValidationError("--steps", "must be >= 1");
        emit(output::trace_record(lam, chains::most_frequent_trace(lam, steps, expand_limit)));
    });

    // fib L --steps N
    auto* fib = app.add_subcommand("fib", "2-D golden-rectangle limit report");
    fib->add_option("lambda", arg_x)->required();
    fib->add_option("--steps", steps)->default_val(9);
    fib->callback([&] {
        const Partition lam = parse_partition(arg_x, "lambda");
        if (steps < 1) throw CLI::ValidationError("--steps", "must be >= 1");
        emit(output::ratio_report_record(lam, chains::fibonacci_limit_report(lam, steps)));
    });

    // mc X Y --trials T --seed S [--partition]
    auto* mc = app.add_subcommand("mc", "seeded Monte Carlo estimate");
    mc->add_option("x", arg_x)->required();
    mc->add_option("y", arg_y)->required();
    mc->add_option("--trials", mc_cfg.trials)->default_val(std::uint64_t{10000});
    mc->add_option("--seed", mc_cfg.seed)->default_val(std::uint64_t{0});
    mc->add_flag("--partition", mc_partition, "sample partition aggregation");
    mc->callback([&] {
        if (mc_cfg.trials < 1) throw CLI::ValidationError("--trials", "must be >= 1");
        if (mc_partition) {
            const Partition lam = parse_partition(arg_x, "x");
            const Partition mu = parse_partition(arg_y, "y");
            require_same_length(lam, mu, "y");
            emit(output::mc_partition_record(
                lam, mu, mc_cfg,
                montecarlo::estimate_partition_distribution(lam, mu, mc_cfg)));
        } else {
            const Box x = parse_dims(arg_x, "x");
            const Box y = parse_dims(arg_y, "y");
            require_same_length(x, y, "y");
            emit(output::mc_box_record(x, y, mc_cfg,
                                       montecarlo::estimate_box_distribution(x, y, mc_cfg)));
        }
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace boxagg::cli
