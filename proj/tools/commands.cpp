#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "primeconst/mills_toth.hpp"

namespace primeconst::cli {

namespace {

using nlohmann::json;

std::string dump_record(const char* command, json inputs, const char* status, json result) {
    const json record = {
        {"command", command},
        {"inputs", std::move(inputs)},
        {"status", status},
        {"result", std::move(result)},
    };
    return record.dump(2) + "\n";
}

std::size_t decimal_digit_count(const BigInt& value) {
    return value.str().size();
}

// Fractional digits so the rendered value carries sig significant digits,
// given the known integer part.
unsigned fractional_digits(unsigned sig, const BigInt& integer_part) {
    const std::size_t len = decimal_digit_count(integer_part);
    return sig > len ? static_cast<unsigned>(sig - len) : 1u;
}

json tower_json(const PrimeTower& tower) {
    json primes = json::array();
    for (std::size_t i = 0; i < tower.primes.size(); ++i) {
        primes.push_back({
            {"value", tower.primes[i].str()},
            {"verdict", to_string(tower.verdicts[i])},
        });
    }
    return primes;
}

CommandResult tower_command(const char* name, TowerKind kind, unsigned depth,
                            unsigned digits, Format format) {
    const char* symbol = kind == TowerKind::Mills ? "A" : "B";
    const json inputs = {{"depth", depth}, {"digits", digits}};
    try {
        const TowerConstant result = kind == TowerKind::Mills
                                         ? mills_constant(depth, digits)
                                         : toth_constant(depth, digits);
        if (format == Format::Json) {
            return {0, dump_record(name, inputs, "ok",
                                   {{"primes", tower_json(result.tower)},
                                    {"constant", result.digits.text},
                                    {"digits_certified", result.digits.digits_certified},
                                    {"enclosure",
                                     {{"lo", format_fraction(result.enclosure.lo())},
                                      {"hi", format_fraction(result.enclosure.hi())}}}})};
        }
        std::ostringstream out;
        for (std::size_t i = 0; i < result.tower.primes.size(); ++i) {
            out << "q_" << i + 1 << " = " << result.tower.primes[i] << " ["
                << to_string(result.tower.verdicts[i]) << "]\n";
        }
        out << symbol << " = " << result.digits.text << "\n";
        return {0, out.str()};
    } catch (const InsufficientDepth& e) {
        const PrimeTower tower = kind == TowerKind::Mills ? mills_primes(depth)
                                                          : toth_primes(depth);
        if (format == Format::Json) {
            return {1, dump_record(name, inputs, "insufficient_depth",
                                   {{"primes", tower_json(tower)}, {"error", e.what()}})};
        }
        std::ostringstream out;
        for (std::size_t i = 0; i < tower.primes.size(); ++i) {
            out << "q_" << i + 1 << " = " << tower.primes[i] << " ["
                << to_string(tower.verdicts[i]) << "]\n";
        }
        out << "error: " << e.what() << "\n";
        return {1, out.str()};
    }
}

}  // namespace

CommandResult cmd_digits(const PrimeTable& table, Family family, std::uint64_t index,
                         unsigned digits, RenderMode render, Format format) {
    if (index == 0 || digits == 0) {
        return {2, "error: index and digits must be >= 1\n"};
    }
    const DecimalString value = constant_digits(table, {family, index}, digits, render);
    if (format == Format::Json) {
        return {0, dump_record("digits",
                               {{"family", to_string(family)},
                                {"index", index},
                                {"digits", digits},
                                {"render",
                                 render == RenderMode::Truncate ? "truncate" : "round"}},
                               "ok",
                               {{"value", value.text},
                                {"digits_certified", value.digits_certified}})};
    }
    return {0, value.text + "\n"};
}

std::vector<TableRow> compute_table(const PrimeTable& table, unsigned rows,
                                    unsigned sig_digits) {
    std::vector<TableRow> result;
    result.reserve(rows);
    for (std::uint64_t n = 1; n <= rows; ++n) {
        const BigInt p = table.nth_prime(n);
        // f_n has integer part p_n, h_n has integer part p_n - 1; the
        // reference table rounds at the last printed place.
        const unsigned f_digits = fractional_digits(sig_digits, p);
        const unsigned h_digits = fractional_digits(sig_digits, p - 1);
        result.push_back({
            n,
            constant_digits(table, {Family::Floor, n}, f_digits, RenderMode::RoundHalfUp)
                .text,
            constant_digits(table, {Family::Ceiling, n}, h_digits, RenderMode::RoundHalfUp)
                .text,
            p.str(),
        });
    }
    return result;
}

std::string render_table_csv(const std::vector<TableRow>& rows) {
    std::string out = "n,f_n,h_n,p_n\n";
    for (const TableRow& row : rows) {
        out += std::to_string(row.n) + "," + row.f + "," + row.h + "," + row.p + "\n";
    }
    return out;
}

std::vector<TableRow> parse_table_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "n,f_n,h_n,p_n") {
        throw std::invalid_argument("parse_table_csv: bad header");
    }
    std::vector<TableRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::array<std::string, 4> fields;
        std::size_t start = 0;
        for (int i = 0; i < 3; ++i) {
            const std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                throw std::invalid_argument("parse_table_csv: bad row");
            }
            fields[i] = line.substr(start, comma - start);
            start = comma + 1;
        }
        fields[3] = line.substr(start);
        rows.push_back({std::stoull(fields[0]), fields[1], fields[2], fields[3]});
    }
    return rows;
}

CommandResult cmd_table(const PrimeTable& table, unsigned rows, unsigned sig_digits,
                        Format format) {
    if (rows == 0 || sig_digits == 0) {
        return {2, "error: rows and digits must be >= 1\n"};
    }
    const std::vector<TableRow> data = compute_table(table, rows, sig_digits);
    switch (format) {
        case Format::Csv:
            return {0, render_table_csv(data)};
        case Format::Json: {
            json out = json::array();
            for (const TableRow& row : data) {
                out.push_back({{"n", row.n}, {"f", row.f}, {"h", row.h}, {"p", row.p}});
            }
            return {0, dump_record("table", {{"rows", rows}, {"digits", sig_digits}}, "ok",
                                   {{"rows", std::move(out)}})};
        }
        case Format::Text: {
            std::ostringstream out;
            out << "n f_n h_n p_n\n";
            for (const TableRow& row : data) {
                out << row.n << " " << row.f << " " << row.h << " " << row.p << "\n";
            }
            return {0, out.str()};
        }
    }
    return {2, "error: unsupported format\n"};
}

CommandResult cmd_generate(const PrimeTable& table, Family family,
                           std::uint64_t seed_digits, std::uint64_t count, Format format) {
    if (seed_digits == 0 || count == 0) {
        return {2, "error: seed digits and count must be >= 1\n"};
    }
    const ConstantSpec spec{family, 1};
    const Enclosure seed = seed_enclosure(table, spec, seed_digits);
    const RecursionTrace trace = forward_generate(spec, seed, count);
    const bool exhausted = trace.terminal == RecursionTrace::Terminal::PrecisionExhausted;

    if (format == Format::Json) {
        json steps = json::array();
        for (const TraceStep& step : trace.steps) {
            steps.push_back({{"index", step.index},
                             {"prime", step.prime.str()},
                             {"width", format_fraction(step.width)}});
        }
        json result = {{"steps", std::move(steps)},
                       {"certified", trace.steps.size()}};
        if (exhausted) {
            result["exhausted_at"] = trace.exhausted_at;
        }
        return {exhausted ? 1 : 0,
                dump_record("generate",
                            {{"family", to_string(family)},
                             {"seed_digits", seed_digits},
                             {"count", count}},
                            exhausted ? "precision_exhausted" : "ok", std::move(result))};
    }

    std::ostringstream out;
    out << "index prime width\n";
    for (const TraceStep& step : trace.steps) {
        out << step.index << " " << step.prime << " " << format_fraction(step.width)
            << "\n";
    }
    if (exhausted) {
        out << "status: precision exhausted at index " << trace.exhausted_at << "\n";
    } else {
        out << "status: completed\n";
    }
    return {exhausted ? 1 : 0, out.str()};
}

VerifyCheck verify_bracketing(const PrimeTable& table, std::uint64_t max_n) {
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        const BigInt expected = table.nth_prime(n);
        const auto ceiling = certified_ceiling(series_enclosure(table, {Family::Ceiling, n}, 0));
        const auto floor = certified_floor(series_enclosure(table, {Family::Floor, n}, 0));
        if (!ceiling || !floor || *ceiling != expected || *floor != expected) {
            return {"bracketing", false,
                    "floor(f_n) = ceil(h_n) = p_n fails at n = " + std::to_string(n)};
        }
    }
    return {"bracketing", true, "n <= " + std::to_string(max_n)};
}

VerifyCheck verify_equivalence(const PrimeTable& table, std::uint64_t max_n) {
    const std::uint64_t cap = std::min<std::uint64_t>(max_n, 100);
    for (const Family family : {Family::Ceiling, Family::Floor}) {
        for (std::uint64_t n = 1; n < cap; ++n) {
            for (std::uint64_t seed = n + 1; seed <= cap; ++seed) {
                const ConstantSpec spec{family, n};
                const Enclosure backward = backward_refine(table, spec, seed);
                const Enclosure series = series_enclosure(table, spec, seed - n - 1);
                if (backward.lo() != series.lo() || backward.hi() != series.hi()) {
                    return {"series/backward equivalence", false,
                            "endpoint mismatch at n = " + std::to_string(n) +
                                ", N = " + std::to_string(seed)};
                }
            }
        }
    }
    return {"series/backward equivalence", true,
            "all pairs n < N <= " + std::to_string(cap) + ", both families"};
}

VerifyCheck verify_difference_bounds(const PrimeTable& table, std::uint64_t max_n) {
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        const BigInt p = table.nth_prime(n);
        const BigRational bound = make_rational(p, p - 1);  // (1 - 1/p_n)^-1
        bool ok = false;
        for (std::uint64_t m = 2; m <= 6 && !ok; ++m) {
            const Enclosure d = difference_dn(table, n, m);
            ok = d.lo() >= 1 && d.hi() < bound;
        }
        if (!ok) {
            return {"difference bounds", false,
                    "d_n outside (1, (1 - 1/p_n)^-1) at n = " + std::to_string(n)};
        }
    }
    return {"difference bounds", true, "n <= " + std::to_string(max_n)};
}

VerifyCheck verify_bertrand(const PrimeTable& table, std::uint64_t max_n) {
    const auto violations = table.bertrand_check(std::max<std::uint64_t>(max_n, 2));
    if (!violations.empty()) {
        return {"bertrand", false,
                "violation at n = " + std::to_string(violations.front())};
    }
    return {"bertrand", true, "n <= " + std::to_string(std::max<std::uint64_t>(max_n, 2))};
}

VerifyCheck verify_fixture(const PrimeTable& table, std::span<const Table1Row> rows) {
    for (const Table1Row& row : rows) {
        const std::string_view f{row.f};
        const std::string_view h{row.h};
        const auto f_digits = static_cast<unsigned>(f.size() - f.find('.') - 1);
        const auto h_digits = static_cast<unsigned>(h.size() - h.find('.') - 1);
        const std::string f_computed =
            constant_digits(table, {Family::Floor, row.n}, f_digits, RenderMode::RoundHalfUp)
                .text;
        const std::string h_computed =
            constant_digits(table, {Family::Ceiling, row.n}, h_digits,
                            RenderMode::RoundHalfUp)
                .text;
        if (f_computed != f || h_computed != h || table.nth_prime(row.n) != row.p) {
            return {"table fixture", false, "mismatch at n = " + std::to_string(row.n)};
        }
    }
    return {"table fixture", true, std::to_string(rows.size()) + " rows"};
}

CommandResult cmd_verify(const PrimeTable& table, std::uint64_t max_n, Format format) {
    if (max_n == 0) {
        return {2, "error: max-n must be >= 1\n"};
    }
    const auto fixture = table1_rows();
    const std::size_t fixture_rows = std::min<std::size_t>(max_n, fixture.size());
    const std::vector<VerifyCheck> checks = {
        verify_bracketing(table, max_n),
        verify_equivalence(table, max_n),
        verify_difference_bounds(table, max_n),
        verify_bertrand(table, max_n),
        verify_fixture(table, fixture.first(fixture_rows)),
    };
    const bool all_pass =
        std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });

    if (format == Format::Json) {
        json out = json::array();
        for (const VerifyCheck& check : checks) {
            out.push_back({{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
        }
        return {all_pass ? 0 : 1,
                dump_record("verify", {{"max_n", max_n}}, all_pass ? "ok" : "failed",
                            {{"checks", std::move(out)}})};
    }

    std::ostringstream out;
    for (const VerifyCheck& check : checks) {
        out << check.name << ": " << (check.pass ? "pass" : "FAIL") << " (" << check.detail
            << ")\n";
    }
    out << (all_pass ? "all checks passed\n" : "verification failed\n");
    return {all_pass ? 0 : 1, out.str()};
}

CommandResult cmd_mills(unsigned depth, unsigned digits, Format format) {
    if (depth == 0 || digits == 0) {
        return {2, "error: depth and digits must be >= 1\n"};
    }
    return tower_command("mills", TowerKind::Mills, depth, digits, format);
}

CommandResult cmd_toth(unsigned depth, unsigned digits, Format format) {
    if (depth == 0 || digits == 0) {
        return {2, "error: depth and digits must be >= 1\n"};
    }
    return tower_command("toth", TowerKind::Toth, depth, digits, format);
}

CommandResult cmd_bench(const PrimeTable& table, Family family, std::uint64_t index_count,
                        BenchMode mode, Format format) {
    if (index_count == 0) {
        return {2, "error: index-count must be >= 1\n"};
    }
    const ConstantSpec spec{family, 1};
    // Forward generation of N primes multiplies the seed width by
    // primorial(1, N-1), so that primorial's digit count is the precision
    // the constant must be computed to.
    const BigInt primorial = table.primorial(1, index_count - 1);
    const auto precision = static_cast<std::uint64_t>(decimal_digit_count(primorial));
    const std::uint64_t terms = required_terms(table, spec, precision);

    const char* mode_name = mode == BenchMode::Series     ? "series"
                            : mode == BenchMode::Backward ? "backward"
                                                          : "forward";
    json result;
    const auto start = std::chrono::steady_clock::now();
    switch (mode) {
        case BenchMode::Series:
        case BenchMode::Backward: {
            const Enclosure e = mode == BenchMode::Series
                                    ? series_enclosure(table, spec, terms)
                                    : backward_refine(table, spec, terms + 2);
            const auto elapsed = std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - start)
                                     .count();
            const std::size_t peak =
                std::max({decimal_digit_count(numerator(e.lo())),
                          decimal_digit_count(denominator(e.lo())),
                          decimal_digit_count(numerator(e.hi())),
                          decimal_digit_count(denominator(e.hi()))});
            result = {{"digits_of_precision", precision},
                      {"wall_ms", elapsed},
                      {"peak_digits", peak},
                      {"lo", format_fraction(e.lo())},
                      {"hi", format_fraction(e.hi())},
                      {"width", format_fraction(e.width())}};
            break;
        }
        case BenchMode::Forward: {
            const Enclosure seed = seed_enclosure(table, spec, precision);
            const auto generation_start = std::chrono::steady_clock::now();
            const RecursionTrace trace = forward_generate(spec, seed, index_count);
            const auto elapsed = std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - generation_start)
                                     .count();
            result = {{"digits_of_precision", precision},
                      {"wall_ms", elapsed},
                      {"certified", trace.steps.size()},
                      {"completed",
                       trace.terminal == RecursionTrace::Terminal::Completed}};
            break;
        }
    }

    if (format == Format::Json) {
        return {0, dump_record("bench",
                               {{"family", to_string(family)},
                                {"index_count", index_count},
                                {"mode", mode_name}},
                               "ok", std::move(result))};
    }
    std::ostringstream out;
    out << "mode=" << mode_name << " digits_of_precision=" << precision
        << " wall_ms=" << result["wall_ms"].get<double>();
    if (result.contains("peak_digits")) {
        out << " peak_digits=" << result["peak_digits"].get<std::size_t>();
    }
    if (result.contains("certified")) {
        out << " certified=" << result["certified"].get<std::size_t>();
    }
    out << "\n";
    return {0, out.str()};
}

}  // namespace primeconst::cli
