#include "memwalk/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <numbers>

#include <json.hpp>

#include "memwalk/cli/verify.hpp"
#include "memwalk/errors.hpp"
#include "memwalk/limit_law.hpp"
#include "memwalk/stationary.hpp"
#include "memwalk/walk.hpp"

namespace memwalk::cli {

namespace {

void add_config_meta(Table& t, const RunConfig& cfg) {
    t.add_meta("command", std::string(to_string(cfg.command)));
    std::string coin, init;
    for (std::size_t i = 0; i < 4; ++i) {
        coin += (i ? "," : "") + format_complex(cfg.coin[i]);
        init += (i ? "," : "") + format_complex(cfg.init[i]);
    }
    t.add_meta("coin", coin);
    t.add_meta("init", init);
}

}  // namespace

SimulateResult run_simulate(const RunConfig& cfg) {
    const auto [left, right] = split_coin(build_coin(cfg.coin_params()));
    WalkState s = WalkState::at_origin(cfg.initial_state().vector());

    std::optional<Table> trace;
    if (!cfg.trace.empty()) {
        trace.emplace();
        add_config_meta(*trace, cfg);
        trace->add_meta("time", std::to_string(cfg.time));
        trace->columns = {"t", "p0"};
        trace->rows.push_back({0.0, return_probability(s)});
    }
    for (std::int64_t k = 0; k < cfg.time; ++k) {
        s = step(s, left, right);
        if (trace) trace->rows.push_back({static_cast<double>(s.time()), return_probability(s)});
    }

    SimulateResult out;
    add_config_meta(out.distribution, cfg);
    out.distribution.add_meta("time", std::to_string(cfg.time));
    out.distribution.add_meta("total_probability", s.total_probability());
    out.distribution.columns = {"x", "probability"};
    const ProbabilityDistribution d = distribution(s);
    for (std::int64_t x = -cfg.time; x <= cfg.time; ++x) {
        // Wrong-parity sites carry no amplitude.
        if (!WalkState::on_support(cfg.time, x)) continue;
        out.distribution.rows.push_back({static_cast<double>(x), d.at(x)});
    }
    out.trace = std::move(trace);
    return out;
}

Table run_stationary(const RunConfig& cfg) {
    const InitialState init = cfg.initial_state();
    Table t;
    add_config_meta(t, cfg);
    t.add_meta("p0", theorem1_p0(init));
    t.add_meta("delta", stationary_total(init, Parity::even));
    t.add_meta("delta_odd", stationary_total(init, Parity::odd));
    t.add_meta("delta_closed_form", delta_mass(init));
    t.columns = {"x", "even_limit", "odd_limit"};
    for (std::int64_t x = -cfg.xmax; x <= cfg.xmax; ++x) {
        t.rows.push_back({static_cast<double>(x), theorem1_px(x, Parity::even, init),
                          theorem1_px(x, Parity::odd, init)});
    }
    return t;
}

std::vector<double> density_grid(std::int64_t points) {
    // x_i = -e + 2 e i / (n + 1), i = 1..n; the midpoint is 0 for odd n.
    const double e = 1.0 / std::numbers::sqrt2;
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(points));
    for (std::int64_t i = 1; i <= points; ++i) {
        if (2 * i == points + 1) {
            xs.push_back(0.0);
        } else {
            xs.push_back(-e + 2.0 * e * static_cast<double>(i) / static_cast<double>(points + 1));
        }
    }
    return xs;
}

Table run_limit(const RunConfig& cfg) {
    const InitialState init = cfg.initial_state();
    const LimitLaw law = limit_law(init);
    Table t;
    add_config_meta(t, cfg);
    t.add_meta("delta", law.delta);
    t.add_meta("delta_k_integral", delta_mass_k_integral(init, static_cast<int>(cfg.grid)));
    t.add_meta("c0", law.c0);
    t.add_meta("c1", law.c1);
    t.add_meta("c2", law.c2);
    t.add_meta("density_mass", density_mass(law));
    t.columns = {"x", "density"};
    for (double x : density_grid(cfg.points)) t.rows.push_back({x, law.density(x)});
    return t;
}

Table run_compare2(const RunConfig& cfg) {
    const InitialState init = cfg.initial_state();
    const LimitLaw law = limit_law(init);
    const Complex a2 = cfg.init2[0];
    const Complex b2 = cfg.init2[1];
    Table t;
    add_config_meta(t, cfg);
    t.add_meta("init2", format_complex(a2) + "," + format_complex(b2));
    t.add_meta("mass_2state", two_state_limit_cdf(a2, b2, -1.0, 1.0));
    t.add_meta("mass_4state", limit_cdf(law, -1.0, 1.0));
    t.columns = {"x", "density_2state", "density_4state", "delta_2state", "delta_4state"};
    for (double x : density_grid(cfg.points))
        t.rows.push_back({x, two_state_density(a2, b2, x), law.density(x), 0.0, law.delta});
    return t;
}

namespace {

void write_report(const VerifyReport& r, const RunConfig& cfg) {
    std::cout << format_report(r);
    if (cfg.out == "-") return;
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw InvalidInput("cannot open '" + cfg.out + "' for writing");
    if (cfg.format == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["meta"] = {{"command", "verify"}, {"seed", cfg.seed}, {"passed", r.all_passed()}};
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& c : r.checks)
            j["rows"].push_back({{"check", c.name},
                                 {"measured", c.measured},
                                 {"threshold", c.threshold},
                                 {"passed", c.passed},
                                 {"detail", c.detail}});
        f << j.dump(1) << '\n';
    } else {
        f << "# command=verify\n# seed=" << cfg.seed << "\ncheck,measured,threshold,passed\n";
        for (const auto& c : r.checks)
            f << c.name << ',' << format_double(c.measured) << ',' << format_double(c.threshold) << ','
              << (c.passed ? 1 : 0) << '\n';
    }
}

}  // namespace

int dispatch(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::simulate: {
            const SimulateResult r = run_simulate(cfg);
            write_table(r.distribution, cfg.format, cfg.out);
            if (r.trace) write_table(*r.trace, cfg.format, cfg.trace);
            return 0;
        }
        case Command::stationary:
            write_table(run_stationary(cfg), cfg.format, cfg.out);
            return 0;
        case Command::limit:
            write_table(run_limit(cfg), cfg.format, cfg.out);
            return 0;
        case Command::compare2:
            write_table(run_compare2(cfg), cfg.format, cfg.out);
            return 0;
        case Command::verify: {
            const VerifyReport r = run_verify(cfg);
            write_report(r, cfg);
            return r.all_passed() ? 0 : 1;
        }
    }
    return 2;
}

}  // namespace memwalk::cli
