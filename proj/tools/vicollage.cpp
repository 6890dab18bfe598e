#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "vicollage/cholesky.hpp"
#include "vicollage/config.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;
constexpr int kExitIoError = 4;

void emit(const std::string& csv, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << csv;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open output file: " + out_path);
    out << csv;
    if (!out) throw std::ios_base::failure("write failed: " + out_path);
}

int dispatch(const std::string& command, const vicollage::RunConfig& config,
             const std::string& out_override) {
    std::string csv;
    if (command == "direct")
        csv = vicollage::run_direct(config);
    else if (command == "inverse")
        csv = vicollage::run_inverse(config);
    else
        csv = vicollage::run_bound(config);
    emit(csv, out_override.empty() ? config.output_path : out_override);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galerkin direct solver and collage-based parameter recovery "
                 "for -u'' + ju = f on (0,1)"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string table;
    std::string norm_flag = "flat";

    auto add_run = [&](const std::string& name, const std::string& desc) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->add_option("--config", config_path, "path to key = value config file")
            ->required();
        cmd->add_option("--out", out_path, "output CSV path (default: config/stdout)");
        return cmd;
    };
    auto* direct = add_run("direct", "solve the direct problem, write error or sample CSV");
    auto* inverse = add_run("inverse", "recover the parameter j from Galerkin targets");
    auto* bound = add_run("bound", "tabulate the collage stability bound against the exact error");

    auto* repro = app.add_subcommand("repro", "reproduce the reference tables");
    repro->add_option("table", table, "table1 or table2")
        ->required()
        ->check(CLI::IsMember({"table1", "table2"}));
    repro->add_option("--norm", norm_flag, "basis normalization")
        ->check(CLI::IsMember({"flat", "l2"}));
    repro->add_option("--out", out_path, "output CSV path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (repro->parsed()) {
            const auto norm = norm_flag == "l2" ? vicollage::Normalization::kL2
                                                : vicollage::Normalization::kFlat;
            if (table == "table1")
                emit(vicollage::run_direct(vicollage::preset_table1(norm)), out_path);
            else
                emit(vicollage::run_inverse(vicollage::preset_table2(norm)), out_path);
            return 0;
        }
        vicollage::RunConfig config = vicollage::load_config_file(config_path);
        const std::string command = direct->parsed()    ? "direct"
                                    : inverse->parsed() ? "inverse"
                                                        : "bound";
        (void)bound;
        return dispatch(command, config, out_path);
    } catch (const vicollage::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const vicollage::FactorizationError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumericalError;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumericalError;
    }
}
