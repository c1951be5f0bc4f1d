#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "primeconst/constants.hpp"
#include "primeconst/primes.hpp"
#include "primeconst/table1.hpp"

namespace primeconst::cli {

enum class Format {
    Text,
    Csv,
    Json,
};

enum class BenchMode {
    Series,
    Backward,
    Forward,
};

// Exit codes: 0 success, 1 precision or verification failure,
// 2 argument error.
struct CommandResult {
    int exit_code = 0;
    std::string output;
};

CommandResult cmd_digits(const PrimeTable& table, Family family, std::uint64_t index,
                         unsigned digits, RenderMode render, Format format);

// Rows n = 1..rows with sig_digits significant digits per value (fractional
// digits adapt to the integer part, the published table's layout).  Values
// are rendered with certified half-up rounding, which is how the reference
// table was typeset.
CommandResult cmd_table(const PrimeTable& table, unsigned rows, unsigned sig_digits,
                        Format format);

CommandResult cmd_generate(const PrimeTable& table, Family family,
                           std::uint64_t seed_digits, std::uint64_t count, Format format);

CommandResult cmd_verify(const PrimeTable& table, std::uint64_t max_n, Format format);

CommandResult cmd_mills(unsigned depth, unsigned digits, Format format);
CommandResult cmd_toth(unsigned depth, unsigned digits, Format format);

CommandResult cmd_bench(const PrimeTable& table, Family family, std::uint64_t index_count,
                        BenchMode mode, Format format);

// Individual verification passes, exposed so failure detection itself can
// be tested against perturbed inputs.
struct VerifyCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

VerifyCheck verify_bracketing(const PrimeTable& table, std::uint64_t max_n);
VerifyCheck verify_equivalence(const PrimeTable& table, std::uint64_t max_n);
VerifyCheck verify_difference_bounds(const PrimeTable& table, std::uint64_t max_n);
VerifyCheck verify_bertrand(const PrimeTable& table, std::uint64_t max_n);
VerifyCheck verify_fixture(const PrimeTable& table, std::span<const Table1Row> rows);

// Table helpers shared by the CSV path and the round-trip tests.
struct TableRow {
    std::uint64_t n;
    std::string f;
    std::string h;
    std::string p;
};

std::vector<TableRow> compute_table(const PrimeTable& table, unsigned rows,
                                    unsigned sig_digits);
std::string render_table_csv(const std::vector<TableRow>& rows);
std::vector<TableRow> parse_table_csv(const std::string& csv);

}  // namespace primeconst::cli
