#ifndef SLFEM_CONFIG_HPP
#define SLFEM_CONFIG_HPP

#include <string>

namespace slfem {

enum class FiberOrientation { None, X, Y };

/// Run parameters parsed from a plain `key = value` file. Defaults reproduce
/// the shipped compressed-edge-crack benchmark.
struct RunConfig {
    double alpha = 2.0;
    double beta = 0.5;
    double mu = 1.0;
    double lambda = 1.0;
    double gamma = 1.0;
    FiberOrientation fiber = FiberOrientation::None;
    double load_c = 0.1;
    int n_div = 64;
    double tol = 1e-4;
    int max_iter = 200;
    double relaxation = 1.0;
    int quad_order = 2;
    bool cracked = true;
    std::string output_prefix = "out";
};

/// Parses config text. Lines are `key = value`; `#` starts a comment;
/// unknown keys and constraint violations are rejected with the offending
/// line number in the message.
RunConfig parse_config(const std::string& text);

/// Reads and parses a config file.
RunConfig load_config(const std::string& path);

std::string fiber_name(FiberOrientation f);

}  // namespace slfem

#endif
