// config.hpp
// Run configuration for the memwalk command-line tool. Parsing validates every
// field and rejects flag combinations that do not apply to the command, so a
// RunConfig that exists is always runnable.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "memwalk/linalg.hpp"
#include "memwalk/walk.hpp"

namespace CLI {
class App;
}

namespace memwalk::cli {

enum class Command { simulate, stationary, limit, verify, compare2 };
enum class OutputFormat { csv, json };

std::string_view to_string(Command c);
std::string_view to_string(OutputFormat f);
// Throws InvalidInput for an unknown name.
Command command_from_name(std::string_view name);

inline constexpr std::int64_t kDefaultTime = 500;
inline constexpr std::int64_t kDefaultGrid = std::int64_t{1} << 14;

struct RunConfig {
    Command command = Command::simulate;
    std::array<Complex, 4> coin{};  // a, b, c, d
    std::array<Complex, 4> init{};  // alpha, beta, gamma, delta
    std::array<Complex, 2> init2{};  // compare2 only
    std::int64_t time = kDefaultTime;
    std::int64_t grid = kDefaultGrid;
    OutputFormat format = OutputFormat::csv;
    std::string out = "-";
    std::string trace;  // simulate: (t, P(X_t = 0)) series path
    std::uint64_t seed = 1;
    double perturb_coin = 0.0;
    std::map<std::string, double> tolerances;
    std::int64_t xmax = 10;   // stationary
    std::int64_t points = 201;  // limit, compare2

    RunConfig();

    CoinParams coin_params() const;
    InitialState initial_state() const;

    // Flags that reproduce this config through parse_run_config.
    std::vector<std::string> to_args() const;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// "re", "imj", "re+imj", "re-imj" (also accepts 'i' for the imaginary unit).
Complex parse_complex(std::string_view text);
std::string format_complex(Complex z);

// Exactly n comma-separated complex numbers.
std::vector<Complex> parse_complex_list(std::string_view text, std::size_t n);

// Full-precision (17 significant digits) decimal rendering.
std::string format_double(double v);

// Holds raw flag text while CLI11 parses; finalize() converts and validates.
struct RawFlags {
    std::string coin;
    std::string init;
    std::string init2;
    std::vector<std::string> tols;
    std::string format = "csv";
};

// Registers the five subcommands and their flags on app.
void configure_app(CLI::App& app, RunConfig& cfg, RawFlags& raw);

// Converts raw flags into cfg fields; throws InvalidInput on bad values or
// combinations.
void finalize(RunConfig& cfg, const RawFlags& raw, Command command);

// Parses argv-style arguments (without the program name). Throws InvalidInput
// on any parse or validation error.
RunConfig parse_run_config(const std::vector<std::string>& args);

}  // namespace memwalk::cli
