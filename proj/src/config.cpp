#include "slfem/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace slfem {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw std::invalid_argument("config line " + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, int line, const std::string& key) {
    size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &used);
    } catch (const std::exception&) {
        fail(line, "malformed number for '" + key + "': " + value);
    }
    if (used != value.size() || !std::isfinite(out))
        fail(line, "malformed number for '" + key + "': " + value);
    return out;
}

int parse_int(const std::string& value, int line, const std::string& key) {
    size_t used = 0;
    int out = 0;
    try {
        out = std::stoi(value, &used);
    } catch (const std::exception&) {
        fail(line, "malformed integer for '" + key + "': " + value);
    }
    if (used != value.size()) fail(line, "malformed integer for '" + key + "': " + value);
    return out;
}

bool parse_bool(const std::string& value, int line, const std::string& key) {
    if (value == "true") return true;
    if (value == "false") return false;
    fail(line, "expected true or false for '" + key + "': " + value);
}

}  // namespace

std::string fiber_name(FiberOrientation f) {
    switch (f) {
        case FiberOrientation::None: return "none";
        case FiberOrientation::X: return "x";
        default: return "y";
    }
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    int n_div_line = 0;
    int cracked_line = 0;

    std::istringstream stream(text);
    std::string raw;
    int line = 0;
    while (std::getline(stream, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string content = trim(raw);
        if (content.empty()) continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos) fail(line, "expected `key = value`, got: " + content);
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        if (key.empty()) fail(line, "missing key");
        if (value.empty()) fail(line, "missing value for '" + key + "'");

        if (key == "alpha") {
            cfg.alpha = parse_double(value, line, key);
            if (!(cfg.alpha > 0.0)) fail(line, "alpha must be > 0 (got " + value + ")");
        } else if (key == "beta") {
            cfg.beta = parse_double(value, line, key);
            if (!(cfg.beta >= 0.0)) fail(line, "beta must be >= 0 (got " + value + ")");
        } else if (key == "mu") {
            cfg.mu = parse_double(value, line, key);
            if (!(cfg.mu > 0.0)) fail(line, "mu must be > 0 (got " + value + ")");
        } else if (key == "lambda") {
            cfg.lambda = parse_double(value, line, key);
            if (!(cfg.lambda > 0.0)) fail(line, "lambda must be > 0 (got " + value + ")");
        } else if (key == "gamma") {
            cfg.gamma = parse_double(value, line, key);
            if (!(cfg.gamma >= 0.0)) fail(line, "gamma must be >= 0 (got " + value + ")");
        } else if (key == "fiber") {
            if (value == "none")
                cfg.fiber = FiberOrientation::None;
            else if (value == "x")
                cfg.fiber = FiberOrientation::X;
            else if (value == "y")
                cfg.fiber = FiberOrientation::Y;
            else
                fail(line, "fiber must be one of none, x, y (got " + value + ")");
        } else if (key == "load_c") {
            cfg.load_c = parse_double(value, line, key);
            if (!(cfg.load_c >= 0.0)) fail(line, "load_c must be >= 0 (got " + value + ")");
        } else if (key == "n_div") {
            cfg.n_div = parse_int(value, line, key);
            n_div_line = line;
            if (cfg.n_div < 1) fail(line, "n_div must be >= 1 (got " + value + ")");
        } else if (key == "tol") {
            cfg.tol = parse_double(value, line, key);
            if (!(cfg.tol > 0.0)) fail(line, "tol must be > 0 (got " + value + ")");
        } else if (key == "max_iter") {
            cfg.max_iter = parse_int(value, line, key);
            if (cfg.max_iter < 1) fail(line, "max_iter must be >= 1 (got " + value + ")");
        } else if (key == "relaxation") {
            cfg.relaxation = parse_double(value, line, key);
            if (!(cfg.relaxation > 0.0 && cfg.relaxation <= 1.0))
                fail(line, "relaxation must be in (0, 1] (got " + value + ")");
        } else if (key == "quad_order") {
            cfg.quad_order = parse_int(value, line, key);
            if (cfg.quad_order != 2 && cfg.quad_order != 3)
                fail(line, "quad_order must be 2 or 3 (got " + value + ")");
        } else if (key == "cracked") {
            cfg.cracked = parse_bool(value, line, key);
            cracked_line = line;
        } else if (key == "output_prefix") {
            cfg.output_prefix = value;
        } else {
            fail(line, "unknown key '" + key + "'");
        }
    }

    if (cfg.cracked && (cfg.n_div < 4 || cfg.n_div % 2 != 0)) {
        const int at = n_div_line ? n_div_line : cracked_line;
        fail(at ? at : 1, "a cracked mesh needs n_div even and >= 4 (got " +
                              std::to_string(cfg.n_div) + ")");
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace slfem
