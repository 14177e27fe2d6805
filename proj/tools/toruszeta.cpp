// Command-line front end: toruszeta <command> --matrix "[[2,1],[1,1]]" ...

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "toruszeta/cli.hpp"

int main(int argc, char** argv) {
    using namespace toruszeta::cli;

    CLI::App app{"Dynamical zeta functions of integer matrices acting on the torus"};
    CliConfig config;
    std::string command;
    std::string format = "plain";
    std::string matrix_text;
    std::string matrix_file;

    app.add_option("command", command, "zeta | lefschetz | counts | exponents | classify | check | report")
        ->required()
        ->check(CLI::IsMember({"zeta", "lefschetz", "counts", "exponents", "classify", "check", "report"}));
    auto* matrix_opt = app.add_option("--matrix", matrix_text, "matrix as a nested bracket list");
    auto* file_opt = app.add_option("--file", matrix_file, "file holding one matrix in bracket syntax");
    matrix_opt->excludes(file_opt);
    app.add_option("--max-m", config.max_m, "largest iterate for counts and checks")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "plain | latex | json")
        ->check(CLI::IsMember({"plain", "latex", "json"}));
    app.add_option("--tolerance", config.tolerance, "error bound for numeric root moduli")
        ->check(CLI::PositiveNumber);
    app.add_flag("--unreduced", config.unreduced, "print the exterior-power factors with exponents");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    config.command = *command_from_string(command);
    config.format = *format_from_string(format);
    if (*matrix_opt) {
        config.matrix_text = matrix_text;
    }
    if (*file_opt) {
        config.matrix_file = matrix_file;
    }
    return run(config, std::cout, std::cerr);
}
