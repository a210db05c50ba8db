#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "varbound/io.hpp"
#include "varbound/linalg.hpp"
#include "varbound/random.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

using namespace varbound;
namespace fs = std::filesystem;

TEST_CASE("matrix JSON round trip is bit exact") {
    const fs::path dir = fs::temp_directory_path() / "varbound_io_test";
    fs::create_directories(dir);
    for (int t = 0; t < 50; ++t) {
        Rng rng(derive_seed(61, t));
        ComplexMatrix x = random_ginibre(rng, 1 + rng.index(5), 1 + rng.index(5));
        if (t == 0) x(0, 0) = cplx(std::numeric_limits<double>::denorm_min(), -std::numeric_limits<double>::max());
        if (t == 1) x(0, 0) = cplx(0.1, 1.0 / 3.0);
        const auto path = (dir / ("m" + std::to_string(t) + ".json")).string();
        write_matrix_file(path, x);
        const ComplexMatrix y = read_matrix_file(path);
        CHECK(y == x);
        CHECK(matrix_to_json(y) == matrix_to_json(x));
    }
    fs::remove_all(dir);
}

TEST_CASE("schema") {
    const auto j = matrix_to_json(pauli_y());
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 2);
    CHECK(j["im"][0][1] == 1.0);
    CHECK(j["im"][1][0] == -1.0);
    CHECK(matrix_from_json(j) == pauli_y());
}

TEST_CASE("malformed matrix files are rejected") {
    using nlohmann::json;
    CHECK_THROWS_AS(matrix_from_json(json::array()), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json{{"rows", 1}, {"cols", 1}, {"re", {{1.0}}}}), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json{{"rows", 2}, {"cols", 1}, {"re", {{1.0}}}, {"im", {{0.0}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json{{"rows", 1}, {"cols", 2}, {"re", {{1.0}}}, {"im", {{0.0, 0.0}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json{{"rows", 0}, {"cols", 0}, {"re", json::array()}, {"im", json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json{{"rows", 1}, {"cols", 1}, {"re", {{"x"}}}, {"im", {{0.0}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(read_matrix_file("/nonexistent/varbound.json"), std::runtime_error);
}

TEST_CASE("integer lists") {
    CHECK(parse_int_list("2,3,4") == std::vector<int>{2, 3, 4});
    CHECK(parse_int_list("5") == std::vector<int>{5});
    CHECK_THROWS_AS(parse_int_list("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_list("2.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_list(""), std::invalid_argument);
}
