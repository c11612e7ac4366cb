// memwalk: command-line front end for the 4-state walk.
//
//   memwalk simulate   --time 500 --init 0.5,-0.5,-0.5,0.5 --out dist.csv --trace p0.csv
//   memwalk stationary --xmax 20
//   memwalk limit      --points 401 --format json
//   memwalk compare2   --init2 0.7071067811865476,0.7071067811865476j
//   memwalk verify     --seed 7 --tol oracle=1e-11
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <CLI11.hpp>

#include <exception>
#include <iostream>

#include "memwalk/cli/commands.hpp"
#include "memwalk/cli/config.hpp"
#include "memwalk/errors.hpp"

int main(int argc, char** argv) {
    using namespace memwalk::cli;

    CLI::App app{"4-state quantum walk (2-state walk with one-step memory): simulation and limit laws"};
    RunConfig cfg;
    RawFlags raw;
    configure_app(app, cfg, raw);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        finalize(cfg, raw, command_from_name(app.get_subcommands().front()->get_name()));
        return dispatch(cfg);
    } catch (const memwalk::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const memwalk::ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
