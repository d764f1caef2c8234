// hyperball: density tables, curves and the optimum for hyperball packings
// in regular truncated tetrahedra of H^3.
//
// Exit codes: 0 success, 2 invalid arguments, 3 numerical failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "hyperball/cli.hpp"
#include "hyperball/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

int emit(const std::string& text, const hyperball::cli::CliConfig& config) {
    if (!config.output_path) {
        std::cout << text << std::flush;
        return kExitOk;
    }
    std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        std::cerr << "hyperball: cannot open '" << *config.output_path << "' for writing\n";
        return kExitInvalid;
    }
    file << text;
    return file ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace hyperball;

    CLI::App app{"Hyperball packing densities in regular truncated tetrahedra of hyperbolic 3-space"};
    app.require_subcommand(1);
    app.fallthrough();

    cli::CliConfig config;
    std::string out_path;
    app.add_option("--precision", config.precision, "Decimals in printed values")
        ->check(CLI::Range(1, 15))
        ->capture_default_str();
    app.add_option("--tol", config.tol, "Optimizer tolerance in p")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--out", out_path, "Write output to this file instead of stdout");

    std::string p_list;
    std::string p_range;
    auto* table = app.add_subcommand("table", "CSV rows p,h,vol_orthoscheme,vol_hyperball_piece,density");
    table->add_option("--p", p_list, "Comma separated p values (each > 6)");
    table->add_option("--p-range", p_range, "Sweep lo:hi:step");

    double from = 0.0;
    double to = 0.0;
    int samples = 0;
    auto* curve = app.add_subcommand("curve", "CSV density curve p,density");
    curve->add_option("--from", from, "First p (> 6)")->required();
    curve->add_option("--to", to, "Last p")->required();
    curve->add_option("--samples", samples, "Number of equally spaced samples (>= 2)")->required();

    auto* optimize = app.add_subcommand("optimize", "Locate the p maximising the density");

    std::string p_single;
    auto* volume = app.add_subcommand("volume", "Geometry report for one p");
    volume->add_option("--p", p_single, "p value (> 6)")->required();

    std::string lob_arg;
    auto* lob = app.add_subcommand("lob", "Lobachevsky function value");
    lob->add_option("x", lob_arg, "Argument in radians; pi forms like pi/6 are accepted")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }
    if (!out_path.empty()) {
        config.output_path = out_path;
    }

    try {
        std::string text;
        if (*table) {
            if (!p_list.empty() && !p_range.empty()) {
                throw InvalidInput("use either --p or --p-range, not both");
            }
            const std::vector<double> ps =
                p_range.empty() ? cli::parse_p_list(p_list) : cli::parse_p_range(p_range);
            text = cli::cmd_table(ps, config);
        } else if (*curve) {
            text = cli::cmd_curve(from, to, samples, config);
        } else if (*optimize) {
            text = cli::cmd_optimize(config);
        } else if (*volume) {
            text = cli::cmd_volume(cli::parse_real(p_single), config);
        } else if (*lob) {
            text = cli::cmd_lob(cli::parse_real(lob_arg), config);
        }
        return emit(text, config);
    } catch (const InvalidInput& e) {
        std::cerr << "hyperball: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const DomainError& e) {
        std::cerr << "hyperball: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const NumericalFailure& e) {
        std::cerr << "hyperball: numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}
