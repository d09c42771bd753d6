#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "birkhoff/matrix_io.hpp"
#include "birkhoff/rng.hpp"
#include "test_helpers.hpp"

using namespace birkhoff;

TEST_CASE("csv parsing accepts plain rows and rejects malformed input") {
    std::istringstream good("1,2\n3,4\n");
    const SquareMatrix a = read_matrix_csv(good);
    CHECK(a.dim() == 2);
    CHECK(a(1, 0) == 3.0);

    std::istringstream crlf("1,0\r\n0,1\r\n");
    CHECK(read_matrix_csv(crlf)(1, 1) == 1.0);

    std::istringstream ragged("1,2,3\n4,5\n6,7,8\n");
    CHECK_THROWS_AS(read_matrix_csv(ragged), DimensionError);

    std::istringstream rect("1,2,3\n4,5,6\n");
    CHECK_THROWS_AS(read_matrix_csv(rect), DimensionError);

    std::istringstream garbage("1,two\n3,4\n");
    CHECK_THROWS_AS(read_matrix_csv(garbage), ValidationError);

    std::istringstream empty("");
    CHECK_THROWS_AS(read_matrix_csv(empty), ValidationError);
}

TEST_CASE("json parsing mirrors the csv contract") {
    std::istringstream good("[[1, 2], [3, 4]]");
    CHECK(read_matrix_json(good)(0, 1) == 2.0);

    std::istringstream ragged("[[1, 2], [3]]");
    CHECK_THROWS_AS(read_matrix_json(ragged), DimensionError);

    std::istringstream not_numbers("[[1, \"x\"], [3, 4]]");
    CHECK_THROWS_AS(read_matrix_json(not_numbers), ValidationError);

    std::istringstream malformed("[[1, 2");
    CHECK_THROWS_AS(read_matrix_json(malformed), ValidationError);

    std::istringstream scalar("42");
    CHECK_THROWS_AS(read_matrix_json(scalar), ValidationError);
}

TEST_CASE("format guessing by extension") {
    CHECK(guess_format("m.json") == MatrixFormat::json);
    CHECK(guess_format("m.csv") == MatrixFormat::csv);
    CHECK(guess_format("-") == MatrixFormat::csv);
    CHECK(guess_format("dir.json/m") == MatrixFormat::csv);
}

TEST_CASE("17 significant digits round-trip doubles exactly") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.1) == "0.10000000000000001");

    Xoshiro256PlusPlus rng(71);
    for (int t = 0; t < 1000; ++t) {
        const double x = rng.uniform(-1e6, 1e6);
        CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
    }
}

TEST_CASE("csv write/read round trip is bit exact") {
    Xoshiro256PlusPlus rng(72);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + rng.next_below(6);
        const SquareMatrix a = test::random_matrix(rng, n, -10.0, 10.0);
        std::ostringstream out;
        write_matrix_csv(out, a);
        std::istringstream in(out.str());
        const SquareMatrix b = read_matrix_csv(in);
        REQUIRE(b.dim() == n);
        CHECK(max_abs_diff(a, b) == 0.0);
    }
}

TEST_CASE("load_matrix reports missing files") {
    CHECK_THROWS_AS(load_matrix("/nonexistent/file.csv", MatrixFormat::csv),
                    ValidationError);
}
