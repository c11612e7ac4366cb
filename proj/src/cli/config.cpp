#include "memwalk/cli/config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "memwalk/cli/verify.hpp"
#include "memwalk/errors.hpp"

namespace memwalk::cli {

std::string_view to_string(Command c) {
    switch (c) {
        case Command::simulate: return "simulate";
        case Command::stationary: return "stationary";
        case Command::limit: return "limit";
        case Command::verify: return "verify";
        case Command::compare2: return "compare2";
    }
    return "?";
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

RunConfig::RunConfig() {
    const double h = 1.0 / std::numbers::sqrt2;
    coin = {h, h, h, -h};
    init = {0.5, 0.5, 0.5, 0.5};
    init2 = {Complex(h, 0.0), Complex(0.0, h)};
}

CoinParams RunConfig::coin_params() const { return CoinParams(coin[0], coin[1], coin[2], coin[3]); }

InitialState RunConfig::initial_state() const { return InitialState(init[0], init[1], init[2], init[3]); }

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(Complex z) {
    std::string s = format_double(z.real());
    const std::string im = format_double(z.imag());
    if (im.front() != '-') s += '+';
    return s + im + "j";
}

namespace {

double parse_real(std::string_view s, std::string_view whole) {
    if (s == "" || s == "+") return 1.0;
    if (s == "-") return -1.0;
    if (s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
        throw InvalidInput("cannot parse complex number '" + std::string(whole) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw InvalidInput("empty complex number");
    if (s.back() != 'j' && s.back() != 'i') {
        if (s == "+" || s == "-") throw InvalidInput("cannot parse complex number '" + std::string(s) + "'");
        return {parse_real(s, s), 0.0};
    }
    const std::string_view body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not the leading one or part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) return {0.0, parse_real(body, s)};
    const std::string_view re = body.substr(0, split);
    if (re.empty() || re == "+" || re == "-") throw InvalidInput("cannot parse complex number '" + std::string(s) + "'");
    return {parse_real(re, s), parse_real(body.substr(split), s)};
}

std::vector<Complex> parse_complex_list(std::string_view text, std::size_t n) {
    std::vector<Complex> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_complex(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                       : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (out.size() != n)
        throw InvalidInput("expected " + std::to_string(n) + " comma-separated values, got " +
                           std::to_string(out.size()));
    return out;
}

namespace {

std::string join_complex(const auto& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += format_complex(values[i]);
    }
    return s;
}

void add_common(CLI::App* sub, RunConfig& cfg, RawFlags& raw) {
    sub->add_option("--coin", raw.coin, "coin amplitudes a,b,c,d (complex as re+imj); default Hadamard");
    sub->add_option("--init", raw.init, "initial amplitudes alpha,beta,gamma,delta; default 1/2 each");
    sub->add_option("--time", cfg.time, "number of time steps")->capture_default_str();
    sub->add_option("--grid", cfg.grid, "momentum grid size")->capture_default_str();
    sub->add_option("--format", raw.format, "output format: csv or json")->capture_default_str();
    sub->add_option("--out", cfg.out, "output path, '-' for stdout")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
}

}  // namespace

void configure_app(CLI::App& app, RunConfig& cfg, RawFlags& raw) {
    app.require_subcommand(1);

    auto* sim = app.add_subcommand("simulate", "probability distribution at time T by direct evolution");
    add_common(sim, cfg, raw);
    sim->add_option("--trace", cfg.trace, "also write the (t, P(X_t=0)) series to this path");

    auto* stat = app.add_subcommand("stationary", "closed-form long-time limits per parity");
    add_common(stat, cfg, raw);
    stat->add_option("--xmax", cfg.xmax, "emit sites -xmax..xmax")->capture_default_str();

    auto* lim = app.add_subcommand("limit", "weak-limit density of X_t/t with atom and coefficients");
    add_common(lim, cfg, raw);
    lim->add_option("--points", cfg.points, "number of density sample points")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "run the seeded invariant suite");
    add_common(ver, cfg, raw);
    ver->add_option("--perturb-coin", cfg.perturb_coin, "add EPS to coin entries (fault injection)");
    ver->add_option("--tol", raw.tols, "override a threshold, NAME=VAL (repeatable)");

    auto* cmp = app.add_subcommand("compare2", "2-state vs 4-state Hadamard limit densities");
    add_common(cmp, cfg, raw);
    cmp->add_option("--init2", raw.init2, "2-state initial amplitudes alpha,beta; default 1/sqrt2,i/sqrt2");
    cmp->add_option("--points", cfg.points, "number of density sample points")->capture_default_str();
}

void finalize(RunConfig& cfg, const RawFlags& raw, Command command) {
    cfg.command = command;
    if (!raw.coin.empty()) {
        const auto v = parse_complex_list(raw.coin, 4);
        std::copy(v.begin(), v.end(), cfg.coin.begin());
    }
    if (!raw.init.empty()) {
        const auto v = parse_complex_list(raw.init, 4);
        std::copy(v.begin(), v.end(), cfg.init.begin());
    }
    if (!raw.init2.empty()) {
        const auto v = parse_complex_list(raw.init2, 2);
        std::copy(v.begin(), v.end(), cfg.init2.begin());
    }
    if (raw.format == "csv") {
        cfg.format = OutputFormat::csv;
    } else if (raw.format == "json") {
        cfg.format = OutputFormat::json;
    } else {
        throw InvalidInput("--format must be csv or json");
    }
    for (const auto& entry : raw.tols) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos) throw InvalidInput("--tol expects NAME=VAL, got '" + entry + "'");
        const std::string name = entry.substr(0, eq);
        if (!default_tolerances().contains(name)) throw InvalidInput("unknown tolerance name '" + name + "'");
        const std::string value = entry.substr(eq + 1);
        if (value.empty() || value == "+" || value == "-") throw InvalidInput("--tol " + name + " needs a value");
        const double v = parse_real(value, entry);
        if (!(v > 0.0)) throw InvalidInput("tolerance '" + name + "' must be positive");
        cfg.tolerances[name] = v;
    }

    // Validation happens here, before any computation.
    (void)cfg.coin_params();
    (void)cfg.initial_state();
    if (command == Command::compare2 &&
        std::abs(std::norm(cfg.init2[0]) + std::norm(cfg.init2[1]) - 1.0) > kInitTolerance)
        throw InvalidInput("--init2 must have unit norm");
    if (cfg.time < 0) throw InvalidInput("--time must be non-negative");
    if (cfg.time > kDefaultMaxTime) throw InvalidInput("--time exceeds the supported maximum");
    if (cfg.grid < 2 || cfg.grid % 2 != 0) throw InvalidInput("--grid must be even and at least 2");
    if (cfg.grid > (std::int64_t{1} << 24)) throw InvalidInput("--grid is too large");
    if (cfg.xmax < 0) throw InvalidInput("--xmax must be non-negative");
    if (cfg.points < 1 || cfg.points > 10'000'000) throw InvalidInput("--points must be in [1, 1e7]");
    if (!std::isfinite(cfg.perturb_coin) || cfg.perturb_coin < 0.0)
        throw InvalidInput("--perturb-coin must be finite and non-negative");
}

Command command_from_name(std::string_view name) {
    for (Command c : {Command::simulate, Command::stationary, Command::limit, Command::verify, Command::compare2})
        if (to_string(c) == name) return c;
    throw InvalidInput("unknown command '" + std::string(name) + "'");
}

RunConfig parse_run_config(const std::vector<std::string>& args) {
    CLI::App app{"memwalk"};
    RunConfig cfg;
    RawFlags raw;
    configure_app(app, cfg, raw);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw InvalidInput(std::string("argument error: ") + e.what());
    }
    finalize(cfg, raw, command_from_name(app.get_subcommands().front()->get_name()));
    return cfg;
}

std::vector<std::string> RunConfig::to_args() const {
    std::vector<std::string> a{std::string(to_string(command)),
                               "--coin", join_complex(coin),
                               "--init", join_complex(init),
                               "--time", std::to_string(time),
                               "--grid", std::to_string(grid),
                               "--format", std::string(to_string(format)),
                               "--out", out,
                               "--seed", std::to_string(seed)};
    switch (command) {
        case Command::simulate:
            if (!trace.empty()) a.insert(a.end(), {"--trace", trace});
            break;
        case Command::stationary:
            a.insert(a.end(), {"--xmax", std::to_string(xmax)});
            break;
        case Command::limit:
            a.insert(a.end(), {"--points", std::to_string(points)});
            break;
        case Command::verify:
            a.insert(a.end(), {"--perturb-coin", format_double(perturb_coin)});
            for (const auto& [k, v] : tolerances) a.insert(a.end(), {"--tol", k + "=" + format_double(v)});
            break;
        case Command::compare2:
            a.insert(a.end(), {"--init2", join_complex(init2), "--points", std::to_string(points)});
            break;
    }
    return a;
}

}  // namespace memwalk::cli
