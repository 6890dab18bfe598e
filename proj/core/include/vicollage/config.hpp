#ifndef VICOLLAGE_CONFIG_HPP
#define VICOLLAGE_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vicollage/basis.hpp"
#include "vicollage/inverse.hpp"

namespace vicollage {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Run description shared by the direct, inverse and bound commands.
/// Serialized as flat `key = value` lines, `#` comments, lists comma-separated.
struct RunConfig {
    double alpha = 0.0;
    double beta = 0.0;
    double j_true = 1.0;
    std::vector<double> f_coeffs{0.0};            // ascending degree
    std::vector<int> m_values{15};
    std::vector<int> n_values{15};
    double j_lo = 1.0;
    double j_hi = 4.0;
    ObjectiveKind objective = ObjectiveKind::kAbsSum;
    Normalization normalization = Normalization::kFlat;
    double tol = 1e-8;
    std::optional<std::vector<double>> exact_coeffs; // exact solution, if known
    std::string output_path;                         // empty = stdout

    bool operator==(const RunConfig&) const = default;
};

/// Parses config text; unknown keys and malformed values are rejected.
RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);
std::string render_config(const RunConfig& config);

/// Compiled-in presets reproducing the reference tables.
RunConfig preset_table1(Normalization norm);
RunConfig preset_table2(Normalization norm);

/// Each returns the full CSV output (header + rows, '\n' newlines).
/// Sweep rows may be computed concurrently (capped by VICOLLAGE_THREADS)
/// but are always emitted in deterministic order.
std::string run_direct(const RunConfig& config);
std::string run_inverse(const RunConfig& config);
std::string run_bound(const RunConfig& config);

} // namespace vicollage

#endif
