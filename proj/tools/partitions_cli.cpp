// partitions: command-line front end over the C API.
//
//   partitions count --n 6
//   partitions table --n-max 20
//   partitions enumerate --n 7 --class ce
//   partitions map --fn theta1 "3+2^3+1^2"
//   partitions verify --n-max 40
//
// Exit status: 0 success / all checks pass, 1 a check failed, 2 usage error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "partitions/partitions.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError {
    std::string message;
};

template <typename T, void (*Free)(T *)>
struct Deleter {
    void operator()(T * p) const { Free(p); }
};

using PartitionPtr = std::unique_ptr<pt_partition, Deleter<pt_partition, pt_partition_free>>;
using ImagePtr = std::unique_ptr<pt_image, Deleter<pt_image, pt_image_free>>;
using EnumeratorPtr = std::unique_ptr<pt_enumerator, Deleter<pt_enumerator, pt_enumerator_free>>;
using CounterPtr = std::unique_ptr<pt_counter, Deleter<pt_counter, pt_counter_free>>;

void check(pt_status status)
{
    if (status != PT_OK)
        throw UsageError{std::string(pt_status_name(status)) + ": " + pt_last_error()};
}

std::string take(char * s)
{
    std::string out(s);
    pt_string_free(s);
    return out;
}

struct Options {
    std::uint32_t n = 0;
    std::optional<std::uint32_t> n_max;
    std::string class_name;
    std::uint32_t avoid = 0;
    std::string fn;
    std::string partition;
    std::string format = "text";
    std::uint32_t budget_enum = 40;
    std::uint32_t budget_formula = 200;
};

int run_count(Options const & o, bool table)
{
    std::uint32_t lo = table ? 0 : o.n;
    std::uint32_t hi = table ? o.n_max.value_or(0) : o.n;
    pt_counter * raw = nullptr;
    check(pt_counter_new(hi, &raw));
    CounterPtr counter(raw);

    if (o.format == "json") {
        std::cout << (table ? "[" : "");
        for (auto n = lo; n <= hi; ++n) {
            char * row = nullptr;
            check(pt_counter_row_json(counter.get(), n, &row));
            std::cout << (n > lo ? "," : "") << (table ? "\n  " : "") << take(row);
        }
        std::cout << (table ? "\n]\n" : "\n");
        return exit_ok;
    }
    std::cout << pt_count_csv_header() << '\n';
    for (auto n = lo; n <= hi; ++n) {
        char * row = nullptr;
        check(pt_counter_row_csv(counter.get(), n, &row));
        std::cout << take(row) << '\n';
    }
    return exit_ok;
}

int run_enumerate(Options const & o)
{
    int filter = -1;
    if (!o.class_name.empty()) {
        pt_class c;
        check(pt_class_parse(o.class_name.c_str(), &c));
        filter = c;
    }
    pt_enumerator * raw = nullptr;
    check(pt_enumerator_new(o.n, filter, o.avoid, 0, &raw));
    EnumeratorPtr stream(raw);

    bool json = o.format == "json";
    bool first = true;
    if (json)
        std::cout << "[";
    for (;;) {
        pt_partition * p = nullptr;
        auto status = pt_enumerator_next(stream.get(), &p);
        if (status == PT_END)
            break;
        check(status);
        PartitionPtr part(p);
        char * s = nullptr;
        check(json ? pt_partition_to_json(part.get(), &s) : pt_partition_to_text(part.get(), &s));
        if (json)
            std::cout << (first ? "\n  " : ",\n  ") << take(s);
        else
            std::cout << take(s) << '\n';
        first = false;
    }
    if (json)
        std::cout << (first ? "]\n" : "\n]\n");
    return exit_ok;
}

int run_map(Options const & o)
{
    pt_map map;
    check(pt_map_parse(o.fn.c_str(), &map));
    pt_image * raw = nullptr;
    check(pt_image_parse(o.partition.c_str(), &raw));
    ImagePtr input(raw);
    pt_image * result = nullptr;
    check(pt_map_apply(map, input.get(), &result));
    ImagePtr output(result);
    char * s = nullptr;
    check(o.format == "json" ? pt_image_to_json(output.get(), &s) : pt_image_to_text(output.get(), &s));
    std::cout << take(s) << '\n';
    return exit_ok;
}

int run_verify(Options const & o)
{
    pt_verify_options opts{};
    opts.formula_max = o.n_max.value_or(o.budget_formula);
    opts.enumeration_budget = o.budget_enum;
    opts.threads = 0;
    char * json = nullptr;
    int passed = 0;
    check(pt_verify_all(&opts, &json, &passed));
    std::cout << take(json) << '\n';
    return passed ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Partition identities: counting, enumeration, bijections and verification"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App * cmd, std::vector<std::string> formats) {
        cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    };

    auto * count = app.add_subcommand("count", "Counters for a single n, as CSV");
    count->add_option("--n", o.n, "n")->required();
    add_format(count, {"text", "csv", "json"});

    auto * table = app.add_subcommand("table", "Counters for 0..n-max, as CSV");
    table->add_option("--n-max", o.n_max, "largest n")->required();
    add_format(table, {"text", "csv", "json"});

    auto * enumerate = app.add_subcommand("enumerate", "List partitions of n, one per line");
    enumerate->add_option("--n", o.n, "n")->required();
    enumerate->add_option("--class", o.class_name, "distinct|odd|bo|be|co|ce|bo-prime|be-prime");
    enumerate->add_option("--avoid", o.avoid, "distinct partitions without this part")->check(CLI::PositiveNumber);
    add_format(enumerate, {"text", "json"});

    auto * map = app.add_subcommand("map", "Apply a bijection to one partition");
    map->add_option("--fn", o.fn,
                    "glaisher-to-odd|glaisher-to-distinct|theta1|theta1-inv|theta1-even|theta1-even-inv|theta2|theta2-inv")
        ->required();
    map->add_option("partition", o.partition, "partition text, e.g. 3+2^3+1^2, or (6+5+2, 2)")->required();
    add_format(map, {"text", "json"});

    auto * verify = app.add_subcommand("verify", "Run every identity and bijection check; JSON report");
    verify->add_option("--n-max", o.n_max, "largest n for formula checks (default: --budget-formula)");
    verify->add_option("--budget-enum", o.budget_enum, "largest n for enumeration-backed checks");
    verify->add_option("--budget-formula", o.budget_formula, "largest n for formula checks");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*count)
            return run_count(o, false);
        if (*table)
            return run_count(o, true);
        if (*enumerate)
            return run_enumerate(o);
        if (*map)
            return run_map(o);
        if (*verify)
            return run_verify(o);
    } catch (UsageError const & e) {
        std::cerr << "error: " << e.message << '\n';
        return exit_usage;
    }
    return exit_usage;
}
