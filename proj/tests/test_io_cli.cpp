#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catchmesh/compression.hpp"
#include "catchmesh/equal_area.hpp"
#include "catchmesh/io.hpp"
#include "catchmesh/mesh.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

using namespace catchmesh;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("catchmesh_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

int run_cli(const std::string& args) {
    const char* bin = std::getenv("CATCHMESH_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "CATCHMESH_BIN must point at the CLI binary");
    const std::string cmd = "cd \"" + temp_dir().string() + "\" && \"" + bin + "\" " +
                            args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("point CSV round trip preserves every bit") {
    const PointConfiguration cfg = zonal_equal_area_points(500);
    const fs::path file = temp_dir() / "pts.csv";
    write_point_csv(file.string(), cfg, 17);
    const PointConfiguration back = read_point_csv(file.string());
    REQUIRE(back.size() == cfg.size());
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        CHECK(back.points[i].x == cfg.points[i].x);
        CHECK(back.points[i].y == cfg.points[i].y);
        CHECK(back.points[i].z == cfg.points[i].z);
    }
}

TEST_CASE("submesh CSV is sorted by weight and round trips") {
    const PolynomialMesh mesh = build_optimal_mesh(2);
    const CatchSubmesh sub = extract_catch_submesh(mesh, 2);
    const fs::path file = temp_dir() / "sub.csv";
    write_submesh_csv(file.string(), sub, 17);

    const DiscreteMeasure back = read_submesh_csv(file.string());
    REQUIRE(back.weights.size() == sub.weights.size());
    double total = 0.0, prev = std::numeric_limits<double>::infinity();
    for (double w : back.weights) {
        CHECK(w > 0.0);
        CHECK(w <= prev);
        prev = w;
        total += w;
    }
    double expect = 0.0;
    for (double w : sub.weights) expect += w;
    CHECK(total == doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("sample CSV reader") {
    const fs::path file = temp_dir() / "samples.csv";
    spit(file, "x,y,z,f\n1,0,0,2.5\n0,1,0,-1.25\n0,0,1,0.75\n");
    const SampleSet set = read_samples_csv(file.string());
    REQUIRE(set.points.size() == 3);
    REQUIRE(set.values.size() == 3);
    CHECK(set.values[0] == 2.5);
    CHECK(set.values[2] == 0.75);
}

TEST_CASE("reader failure modes") {
    CHECK_THROWS_AS(read_point_csv((temp_dir() / "missing.csv").string()), io_error);

    const fs::path bad_header = temp_dir() / "bad_header.csv";
    spit(bad_header, "a,b,c\n1,0,0\n");
    CHECK_THROWS_AS(read_point_csv(bad_header.string()), io_error);

    const fs::path off_sphere = temp_dir() / "off.csv";
    spit(off_sphere, "x,y,z\n0.5,0,0\n");
    CHECK_THROWS_AS(read_point_csv(off_sphere.string()), io_error);

    const fs::path short_row = temp_dir() / "short.csv";
    spit(short_row, "x,y,z\n1,0\n");
    CHECK_THROWS_AS(read_point_csv(short_row.string()), io_error);

    const fs::path garbage = temp_dir() / "garbage.csv";
    spit(garbage, "x,y,z\n1,zero,0\n");
    CHECK_THROWS_AS(read_point_csv(garbage.string()), io_error);

    const fs::path empty = temp_dir() / "empty.csv";
    spit(empty, "x,y,z\n");
    CHECK_THROWS_AS(read_point_csv(empty.string()), io_error);

    const fs::path neg_w = temp_dir() / "negw.csv";
    spit(neg_w, "x,y,z,w\n1,0,0,-2\n");
    CHECK_THROWS_AS(read_submesh_csv(neg_w.string()), io_error);
}

TEST_CASE("format_double") {
    CHECK(format_double(0.5, 17) == "0.5");
    CHECK(format_double(1.0 / 3.0, 3) == "0.333");
    // 17 significant digits round-trip doubles exactly.
    const double v = 0.1 + 0.2;
    CHECK(std::stod(format_double(v, 17)) == v);
}

TEST_CASE("cli generates meshes and reports errors by exit code") {
    CHECK(run_cli("gen-mesh --n 5 --grid-size 20000 --out m5") == 0);
    const std::string csv = slurp(temp_dir() / "m5.csv");
    std::size_t lines = 0;
    for (char ch : csv)
        if (ch == '\n') ++lines;
    CHECK(lines == 1188);   // header + 1187 points

    const auto j = nlohmann::json::parse(slurp(temp_dir() / "m5.json"));
    CHECK(j["n"] == 5);
    CHECK(j["M_n"] == 1187);
    CHECK(j["C"] == 2.0);
    CHECK(j["eta_estimate"].get<double>() > 0.0);

    CHECK(run_cli("gen-mesh --n 0") == 2);
    CHECK(run_cli("") == 2);
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("fit --n 2 --f 0") == 2);
    CHECK(run_cli("fit --n 2") == 2);
    CHECK(run_cli("compress --n 2 --mesh does_not_exist.csv") == 4);
}

TEST_CASE("cli compression pipeline") {
    CHECK(run_cli("compress --n 2 --out c2") == 0);
    const std::string csv = slurp(temp_dir() / "c2.csv");
    std::size_t lines = 0;
    for (char ch : csv)
        if (ch == '\n') ++lines;
    CHECK(lines == 26);   // header + 25 support points

    const auto j = nlohmann::json::parse(slurp(temp_dir() / "c2.json"));
    CHECK(j["parent_cardinality"] == 181);
    CHECK(j["catch_cardinality"] == 25);
    CHECK(j["compression_ratio"].get<double>() == doctest::Approx(7.24).epsilon(1e-12));
    CHECK(j["moment_residual"].get<double>() <= 1e-8);

    // Feeding the generated mesh back in reproduces the built-in path.
    CHECK(run_cli("gen-mesh --n 2 --grid-size 5000 --out m2") == 0);
    CHECK(run_cli("compress --n 2 --mesh m2.csv --out c2b") == 0);
    const auto j2 = nlohmann::json::parse(slurp(temp_dir() / "c2b.json"));
    CHECK(j2["catch_cardinality"] == 25);
}

TEST_CASE("cli output is deterministic") {
    CHECK(run_cli("gen-mesh --n 2 --grid-size 5000 --out det_a") == 0);
    CHECK(run_cli("gen-mesh --n 2 --grid-size 5000 --out det_b") == 0);
    CHECK(slurp(temp_dir() / "det_a.csv") == slurp(temp_dir() / "det_b.csv"));
    const auto a = nlohmann::json::parse(slurp(temp_dir() / "det_a.json"));
    const auto b = nlohmann::json::parse(slurp(temp_dir() / "det_b.json"));
    CHECK(a == b);
}

TEST_CASE("cli fit on sample data") {
    // Degree-1 harmonic data: the fit must interpolate it to rounding.
    const PointConfiguration cfg = zonal_equal_area_points(200);
    std::ostringstream csv;
    csv << "x,y,z,f\n";
    for (const SpherePoint& p : cfg.points)
        csv << format_double(p.x, 17) << ',' << format_double(p.y, 17) << ','
            << format_double(p.z, 17) << ',' << format_double(0.5 + p.z, 17) << '\n';
    spit(temp_dir() / "deg1.csv", csv.str());

    CHECK(run_cli("fit --n 1 --samples deg1.csv --method full --grid-size 2000 "
                  "--out sfit") == 0);
    const auto j = nlohmann::json::parse(slurp(temp_dir() / "sfit_full.json"));
    CHECK(j["sup_error"].get<double>() <= 1e-10);
}

TEST_CASE("cli fit projects a harmonic onto itself") {
    // Samples of a degree-2 basis function fitted at degree 5: both
    // pipelines must reproduce it to rounding (projection idempotence).
    const PointConfiguration cfg = zonal_equal_area_points(200);
    std::vector<double> row(basis_dimension(2));
    std::ostringstream csv;
    csv << "x,y,z,f\n";
    for (const SpherePoint& p : cfg.points) {
        eval_basis(p, 2, row);
        csv << format_double(p.x, 17) << ',' << format_double(p.y, 17) << ','
            << format_double(p.z, 17) << ','
            << format_double(row[linear_index(2, 1)], 17) << '\n';
    }
    spit(temp_dir() / "y21.csv", csv.str());

    CHECK(run_cli("fit --n 5 --samples y21.csv --method both --grid-size 2000 "
                  "--out y21fit") == 0);
    const auto full = nlohmann::json::parse(slurp(temp_dir() / "y21fit_full.json"));
    CHECK(full["sup_error"].get<double>() <= 1e-9);
    const auto comp = nlohmann::json::parse(slurp(temp_dir() / "y21fit_catch.json"));
    CHECK(comp["sup_error"].get<double>() <= 1e-9);
    CHECK(comp["catch_cardinality"].get<long>() <= 121);
}

TEST_CASE("cli rejects an off-sphere mesh file") {
    spit(temp_dir() / "bad_mesh.csv", "x,y,z\n0.5,0,0\n0,1,0\n");
    CHECK(run_cli("compress --n 2 --mesh bad_mesh.csv") == 4);
}
