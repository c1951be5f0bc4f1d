#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using primeconst::Family;
using primeconst::PrimeTable;
using primeconst::RenderMode;
using primeconst::cli::BenchMode;
using primeconst::cli::CommandResult;
using primeconst::cli::Format;

Format parse_format(const std::string& text) {
    if (text == "csv") {
        return Format::Csv;
    }
    if (text == "json") {
        return Format::Json;
    }
    return Format::Text;
}

Family parse_family(const std::string& text) {
    return text == "floor" ? Family::Floor : Family::Ceiling;
}

std::string cache_file_path() {
    const char* dir = std::getenv("PRIMECONST_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') {
        return {};
    }
    return std::string(dir) + "/primes.txt";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified computation of the prime-representing constant families"};
    app.require_subcommand(1);

    std::string family = "ceiling";
    std::string format = "text";
    std::string render = "truncate";
    std::string mode = "series";
    std::uint64_t index = 1;
    std::uint64_t digits = 20;
    std::uint64_t rows = 30;
    std::uint64_t seed_digits = 60;
    std::uint64_t count = 30;
    std::uint64_t max_n = 30;
    std::uint64_t depth = 4;
    std::uint64_t index_count = 30;

    const auto family_check = CLI::IsMember({"floor", "ceiling"});
    const auto text_json = CLI::IsMember({"text", "json"});

    auto* digits_cmd = app.add_subcommand("digits", "Certified digits of f_n or h_n");
    digits_cmd->add_option("--family", family)->check(family_check);
    digits_cmd->add_option("--index", index, "Constant index n")->check(CLI::PositiveNumber);
    digits_cmd->add_option("--digits", digits, "Fractional digits")->check(CLI::PositiveNumber);
    digits_cmd->add_option("--render", render)->check(CLI::IsMember({"truncate", "round"}));
    digits_cmd->add_option("--format", format)->check(text_json);

    auto* table_cmd = app.add_subcommand("table", "Reproduce the f_n/h_n/p_n table");
    table_cmd->add_option("--rows", rows)->check(CLI::PositiveNumber);
    table_cmd->add_option("--digits", digits, "Significant digits per value")
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* generate_cmd =
        app.add_subcommand("generate", "Generate primes by interval-tracked recursion");
    generate_cmd->add_option("--family", family)->check(family_check);
    generate_cmd->add_option("--seed-digits", seed_digits, "Seed enclosure width 10^-D")
        ->check(CLI::PositiveNumber);
    generate_cmd->add_option("--count", count, "Primes to certify")
        ->check(CLI::PositiveNumber);
    generate_cmd->add_option("--format", format)->check(text_json);

    auto* verify_cmd = app.add_subcommand("verify", "Run the consistency checks");
    verify_cmd->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", format)->check(text_json);

    auto* mills_cmd = app.add_subcommand("mills", "Mills tower and constant A");
    mills_cmd->add_option("--depth", depth)->check(CLI::PositiveNumber);
    mills_cmd->add_option("--digits", digits)->check(CLI::PositiveNumber);
    mills_cmd->add_option("--format", format)->check(text_json);

    auto* toth_cmd = app.add_subcommand("toth", "Toth tower and constant B");
    toth_cmd->add_option("--depth", depth)->check(CLI::PositiveNumber);
    toth_cmd->add_option("--digits", digits)->check(CLI::PositiveNumber);
    toth_cmd->add_option("--format", format)->check(text_json);

    auto* bench_cmd = app.add_subcommand("bench", "Timing and precision report");
    bench_cmd->add_option("--family", family)->check(family_check);
    bench_cmd->add_option("--index-count", index_count, "Primes the precision must support")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--mode", mode)->check(CLI::IsMember({"series", "backward", "forward"}));
    bench_cmd->add_option("--format", format)->check(text_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    PrimeTable table;
    const std::string cache_path = cache_file_path();
    if (!cache_path.empty()) {
        std::ifstream in(cache_path);
        if (in) {
            table.load_cache(in);
        }
    }

    CommandResult result;
    const Format fmt = parse_format(format);
    try {
        if (digits_cmd->parsed()) {
            result = primeconst::cli::cmd_digits(
                table, parse_family(family), index, static_cast<unsigned>(digits),
                render == "round" ? RenderMode::RoundHalfUp : RenderMode::Truncate, fmt);
        } else if (table_cmd->parsed()) {
            result = primeconst::cli::cmd_table(table, static_cast<unsigned>(rows),
                                                static_cast<unsigned>(digits), fmt);
        } else if (generate_cmd->parsed()) {
            result =
                primeconst::cli::cmd_generate(table, parse_family(family), seed_digits, count, fmt);
        } else if (verify_cmd->parsed()) {
            result = primeconst::cli::cmd_verify(table, max_n, fmt);
        } else if (mills_cmd->parsed()) {
            result = primeconst::cli::cmd_mills(static_cast<unsigned>(depth),
                                                static_cast<unsigned>(digits), fmt);
        } else if (toth_cmd->parsed()) {
            result = primeconst::cli::cmd_toth(static_cast<unsigned>(depth),
                                               static_cast<unsigned>(digits), fmt);
        } else if (bench_cmd->parsed()) {
            const BenchMode bench_mode = mode == "backward"  ? BenchMode::Backward
                                         : mode == "forward" ? BenchMode::Forward
                                                             : BenchMode::Series;
            result = primeconst::cli::cmd_bench(table, parse_family(family), index_count,
                                                bench_mode, fmt);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cout << result.output;

    if (!cache_path.empty()) {
        std::ofstream out(cache_path, std::ios::trunc);
        if (out) {
            table.save_cache(out);
        }
    }
    return result.exit_code;
}
