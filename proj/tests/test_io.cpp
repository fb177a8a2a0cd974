#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "slfem/runner.hpp"

using namespace slfem;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Scratch {
    fs::path dir;
    Scratch() : dir(fs::temp_directory_path() / "slfem_io_test") {
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string prefix(const std::string& name) const { return (dir / name).string(); }
};

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("empty config yields all defaults") {
    const RunConfig cfg = parse_config("");
    CHECK(cfg.alpha == 2.0);
    CHECK(cfg.beta == 0.5);
    CHECK(cfg.mu == 1.0);
    CHECK(cfg.lambda == 1.0);
    CHECK(cfg.gamma == 1.0);
    CHECK(cfg.fiber == FiberOrientation::None);
    CHECK(cfg.load_c == 0.1);
    CHECK(cfg.n_div == 64);
    CHECK(cfg.tol == 1e-4);
    CHECK(cfg.max_iter == 200);
    CHECK(cfg.relaxation == 1.0);
    CHECK(cfg.quad_order == 2);
    CHECK(cfg.cracked);
    CHECK(cfg.output_prefix == "out");
}

TEST_CASE("displacement-plot configuration parses") {
    const RunConfig cfg = parse_config("beta = 0.1\nload_c = 0.1\nalpha = 2.0\n");
    CHECK(cfg.beta == 0.1);
    CHECK(cfg.load_c == 0.1);
    CHECK(cfg.alpha == 2.0);
}

TEST_CASE("comments, blank lines, and fiber values") {
    const RunConfig cfg = parse_config(
        "# full-line comment\n"
        "\n"
        "fiber = y   # trailing comment\n"
        "n_div = 32\n"
        "cracked = false\n");
    CHECK(cfg.fiber == FiberOrientation::Y);
    CHECK(cfg.n_div == 32);
    CHECK_FALSE(cfg.cracked);
}

TEST_CASE("errors carry the offending line and constraint") {
    const auto message_of = [](const std::string& text) {
        try {
            parse_config(text);
        } catch (const std::invalid_argument& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message_of("beta = -1") == "config line 1: beta must be >= 0 (got -1)");
    CHECK(message_of("alpha = 2\nwibble = 3").find("line 2") != std::string::npos);
    CHECK(message_of("alpha = 2\nwibble = 3").find("unknown key") != std::string::npos);
    CHECK(message_of("mu = zero").find("malformed") != std::string::npos);
    CHECK(message_of("quad_order = 4").find("quad_order") != std::string::npos);
    CHECK(message_of("fiber = diagonal").find("fiber") != std::string::npos);
    CHECK(message_of("alpha 2").find("key = value") != std::string::npos);
    CHECK(message_of("n_div = 33").find("even") != std::string::npos);
    CHECK(message_of("cracked = maybe").find("true or false") != std::string::npos);
}

TEST_CASE("uncracked meshes may use any n_div >= 1") {
    const RunConfig cfg = parse_config("cracked = false\nn_div = 7\n");
    CHECK(cfg.n_div == 7);
}

TEST_CASE("run_single writes probe, fields, and report") {
    Scratch scratch;
    RunConfig cfg = parse_config("n_div = 8\nbeta = 0.1\n");
    cfg.output_prefix = scratch.prefix("run");
    const RunResult result = run_single(cfg);
    CHECK(result.exit_status == 0);
    CHECK(result.report.converged);
    REQUIRE(result.probe.has_value());

    const std::string probe = slurp(scratch.prefix("run") + "_probe.csv");
    CHECK(probe.rfind("x,y,sigma_xx,sigma_yy,sigma_xy,eps_xx,eps_yy,eps_xy,s,psi,W,W_half\n",
                      0) == 0);
    CHECK(count_lines(probe) == 1 + 8);  // header + 4 elements x 2 columns

    const std::string report = slurp(scratch.prefix("run") + "_report.txt");
    CHECK(report.find("converged: true") != std::string::npos);
    CHECK(report.find("tip_probe: written") != std::string::npos);

    const std::string vtk = slurp(scratch.prefix("run") + "_fields.vtk");
    CHECK(vtk.find("DATASET UNSTRUCTURED_GRID") != std::string::npos);
    CHECK(vtk.find("POINTS 85 double") != std::string::npos);  // 81 + 4 seam duplicates
    CHECK(vtk.find("CELLS 64 320") != std::string::npos);
    CHECK(vtk.find("CELL_TYPES 64") != std::string::npos);
    CHECK(vtk.find("VECTORS displacement double") != std::string::npos);
    CHECK(vtk.find("SCALARS sigma_yy double 1") != std::string::npos);
    CHECK(vtk.find("SCALARS W double 1") != std::string::npos);
    // Section order: header, POINTS, CELLS, CELL_TYPES, POINT_DATA, CELL_DATA.
    CHECK(vtk.find("POINTS") < vtk.find("CELLS "));
    CHECK(vtk.find("CELLS ") < vtk.find("CELL_TYPES"));
    CHECK(vtk.find("CELL_TYPES") < vtk.find("POINT_DATA"));
    CHECK(vtk.find("POINT_DATA") < vtk.find("CELL_DATA"));
}

TEST_CASE("zero load converges immediately with an all-zero probe") {
    Scratch scratch;
    RunConfig cfg = parse_config("n_div = 8\nload_c = 0\n");
    cfg.output_prefix = scratch.prefix("zero");
    const RunResult result = run_single(cfg);
    CHECK(result.exit_status == 0);
    CHECK(result.report.iterations == 1);
    const std::string probe = slurp(scratch.prefix("zero") + "_probe.csv");
    std::istringstream lines(probe);
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string field;
        int column = 0;
        while (std::getline(fields, field, ',')) {
            // Columns: x, y, then the state fields; psi is 1 at zero strain,
            // every other state field is exactly zero.
            if (column >= 2) CHECK(std::stod(field) == (column == 9 ? 1.0 : 0.0));
            ++column;
        }
        CHECK(column == 12);
    }
}

TEST_CASE("uncracked run records the missing probe and still succeeds") {
    Scratch scratch;
    RunConfig cfg = parse_config("cracked = false\nn_div = 6\nbeta = 0.1\n");
    cfg.output_prefix = scratch.prefix("plain");
    const RunResult result = run_single(cfg);
    CHECK(result.exit_status == 0);
    CHECK_FALSE(result.probe.has_value());
    CHECK_FALSE(fs::exists(scratch.prefix("plain") + "_probe.csv"));
    CHECK(fs::exists(scratch.prefix("plain") + "_fields.vtk"));
    const std::string report = slurp(scratch.prefix("plain") + "_report.txt");
    CHECK(report.find("tip_probe: no tip probe") != std::string::npos);
}

TEST_CASE("repeated runs produce byte-identical probe files") {
    Scratch scratch;
    RunConfig cfg = parse_config("n_div = 16\n");
    cfg.output_prefix = scratch.prefix("first");
    REQUIRE(run_single(cfg).exit_status == 0);
    cfg.output_prefix = scratch.prefix("second");
    REQUIRE(run_single(cfg).exit_status == 0);
    CHECK(slurp(scratch.prefix("first") + "_probe.csv") ==
          slurp(scratch.prefix("second") + "_probe.csv"));
}

TEST_CASE("sweep over load produces monotone tip trends") {
    Scratch scratch;
    RunConfig base = parse_config("n_div = 16\n");
    base.output_prefix = scratch.prefix("sweep");
    const int status = run_sweep(base, "load_c", {"0.05", "0.1", "0.2"});
    CHECK(status == 0);
    const std::string csv = slurp(scratch.prefix("sweep") + "_sweep.csv");
    CHECK(count_lines(csv) == 4);
    CHECK(csv.find("load_c,0.05,true") != std::string::npos);
    // Ordering flags: each later run exceeds the previous in all quantities.
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);  // first data row has flags 0
    int row = 0;
    while (std::getline(lines, line)) {
        ++row;
        CHECK(line.rfind(",1,1,1") == line.size() - 6);
    }
    CHECK(row == 2);
    CHECK(fs::exists(scratch.prefix("sweep") + "_load_c_0_05_probe.csv"));
    CHECK(fs::exists(scratch.prefix("sweep") + "_load_c_0_2_fields.vtk"));
}

TEST_CASE("sweep over fiber orientation distinguishes the two axes") {
    Scratch scratch;
    RunConfig base = parse_config("n_div = 16\n");
    base.output_prefix = scratch.prefix("fiber");
    CHECK(run_sweep(base, "fiber", {"x", "y"}) == 0);
    const std::string csv = slurp(scratch.prefix("fiber") + "_sweep.csv");
    CHECK(csv.find("fiber,x,true") != std::string::npos);
    CHECK(csv.find("fiber,y,true") != std::string::npos);
}

TEST_CASE("sweep rejects bad keys and too-few values") {
    const RunConfig base = parse_config("n_div = 8\n");
    CHECK_THROWS_AS(run_sweep(base, "load_c", {"0.1"}), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(base, "n_div", {"8", "16"}), std::invalid_argument);
}

}  // TEST_SUITE
