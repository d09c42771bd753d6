#include <doctest.h>

#include <cmath>

#include "birkhoff/geometry.hpp"
#include "birkhoff/kahan.hpp"
#include "birkhoff/matrix.hpp"
#include "birkhoff/rng.hpp"
#include "birkhoff/sampling.hpp"
#include "birkhoff/spectral.hpp"
#include "test_helpers.hpp"

using namespace birkhoff;

TEST_CASE("closed-form radius at pinned centers") {
    // origin: every permutation sits at distance sqrt(n)
    const BoundingBallReport zero = bounding_ball_radius_s2(SquareMatrix(3));
    CHECK(zero.radius == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(zero.method == RadiusMethod::closed_form_s2);

    // J_2: |J_2|^2 = 1, tr_min = 1 -> radius 1, attained at both permutations
    const BoundingBallReport j2 = bounding_ball_radius_s2(jn(2).matrix());
    CHECK(j2.radius == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(frobenius_norm(jn(2).matrix() - SquareMatrix::identity(2)) ==
          doctest::Approx(1.0).epsilon(1e-14));

    // permutation centers: radius sqrt(2n)
    Xoshiro256PlusPlus rng(51);
    for (std::size_t n = 2; n <= 6; ++n) {
        const SquareMatrix p = PermutationMatrix(random_permutation(n, rng)).to_dense();
        const BoundingBallReport r = bounding_ball_radius_s2(p);
        CHECK(r.radius ==
              doctest::Approx(std::sqrt(2.0 * static_cast<double>(n))).epsilon(1e-12));
        const BoundingBallReport e = bounding_ball_radius_enum(p, SchattenExponent(2.0));
        CHECK(std::abs(e.radius - r.radius) <= 1e-12);
    }
}

TEST_CASE("witness permutations realize the radius") {
    Xoshiro256PlusPlus rng(52);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 2 + rng.next_below(5);
        const SquareMatrix a = test::random_matrix(rng, n, -2.0, 2.0);
        const BoundingBallReport closed = bounding_ball_radius_s2(a);
        CHECK(std::abs(frobenius_norm(a - closed.witness.to_dense()) - closed.radius) <=
              1e-8);
        const BoundingBallReport enumerated =
            bounding_ball_radius_enum(a, SchattenExponent(3.0));
        CHECK(std::abs(schatten_norm(a - enumerated.witness.to_dense(),
                                     SchattenExponent(3.0)) -
                       enumerated.radius) <= 1e-8);
    }
}

TEST_CASE("enumerated radius at pinned centers") {
    CHECK(bounding_ball_radius_enum(jn(3).matrix(), SchattenExponent(2.0)).radius ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(bounding_ball_radius_enum(jn(4).matrix(), SchattenExponent(1.0)).radius ==
          doctest::Approx(3.0).epsilon(1e-11));
    CHECK(bounding_ball_radius_enum(SquareMatrix(2), SchattenExponent(2.0)).radius ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("closed form agrees with enumeration on random centers") {
    Xoshiro256PlusPlus rng(53);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng.next_below(5);
        const SquareMatrix a = test::random_matrix(rng, n, -2.0, 2.0);
        CHECK(std::abs(bounding_ball_radius_s2(a).radius -
                       bounding_ball_radius_enum(a, SchattenExponent(2.0)).radius) <= 1e-8);
    }
}

TEST_CASE("enumeration guard and sampled lower bound") {
    CHECK_THROWS_AS(bounding_ball_radius_enum(SquareMatrix(9), SchattenExponent(2.0)),
                    SizeLimitError);
    const SquareMatrix a(9, 0.02);
    const BoundingBallReport sampled =
        bounding_ball_radius_sampled(a, SchattenExponent(2.0), 500, 4);
    CHECK(sampled.method == RadiusMethod::sampled_lower_bound);
    const double truth = bounding_ball_radius_s2(a).radius;
    CHECK(sampled.radius <= truth + 1e-12);
    CHECK(sampled.radius > 0.0);
    CHECK(std::abs(frobenius_norm(a - sampled.witness.to_dense()) - sampled.radius) <= 1e-8);
    CHECK_THROWS_AS(bounding_ball_radius_sampled(a, SchattenExponent(2.0), 0, 4),
                    ValidationError);
}

TEST_CASE("frobenius sandwich bounds saturate at the extremes") {
    for (std::size_t n = 2; n <= 7; ++n) {
        const auto [lo_j, hi_j] = radius_bounds_s2(jn(n));
        const double nn = static_cast<double>(n);
        CHECK(lo_j == doctest::Approx(std::sqrt(nn - 1.0)).epsilon(1e-14));
        CHECK(hi_j == doctest::Approx(std::sqrt(nn + 1.0)).epsilon(1e-14));
        CHECK(bounding_ball_radius_s2(jn(n).matrix()).radius ==
              doctest::Approx(lo_j).epsilon(1e-12));

        const auto id = make_doubly_stochastic(SquareMatrix::identity(n));
        const auto [lo_p, hi_p] = radius_bounds_s2(id);
        CHECK(lo_p == doctest::Approx(std::sqrt(2.0 * nn - 2.0)).epsilon(1e-14));
        CHECK(hi_p == doctest::Approx(std::sqrt(2.0 * nn)).epsilon(1e-14));
        CHECK(bounding_ball_radius_s2(id.matrix()).radius ==
              doctest::Approx(hi_p).epsilon(1e-12));
    }
}

TEST_CASE("sandwich, convergence ratio, and crude bounds on samples") {
    Xoshiro256PlusPlus rng(54);
    for (int t = 0; t < 80; ++t) {
        const std::size_t n = 2 + rng.next_below(9);
        const DoublyStochasticMatrix d = test::random_ds(rng, n, t);
        const auto [lo, hi] = radius_bounds_s2(d);
        const double r = bounding_ball_radius_s2(d.matrix()).radius;
        CHECK(lo <= r + 1e-9);
        CHECK(r <= hi + 1e-9);

        const double f2 = std::pow(frobenius_norm(d.matrix()), 2);
        const double nn = static_cast<double>(n);
        const double g = f2 + nn - 1.0;
        CHECK(std::abs(r * r / g - 1.0) <= 1.0 / g + 1e-9);
        CHECK(r * r / (f2 + nn) <= 1.0 + 1e-9);
        CHECK(r * r / (f2 + nn) >= 1.0 - 2.0 / nn - 1e-9);
        CHECK(r * r >= nn - 1.0 - 1e-9);
        CHECK(r * r <= 2.0 * nn + 1e-9);
    }
}

TEST_CASE("chebyshev radius closed form") {
    CHECK(chebyshev_radius(4, SchattenExponent(1.0)).radius == 3.0);
    CHECK(chebyshev_radius(3, SchattenExponent(2.0)).radius ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(chebyshev_radius(1, SchattenExponent(2.0)).radius == 0.0);
    CHECK(max_abs_diff(chebyshev_radius(4, SchattenExponent(2.0)).center,
                       jn(4).matrix()) == 0.0);
}

TEST_CASE("norm along the central line") {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (double p : {1.0, 1.5, 2.0, 3.0, 5.0}) {
            const SchattenExponent sp(p);
            CHECK(alpha_line_norm(1.0, n, sp) ==
                  doctest::Approx(std::pow(n - 1.0, 1.0 / p)).epsilon(1e-14));
            CHECK(alpha_line_norm(0.0, n, sp) ==
                  doctest::Approx(schatten_norm(SquareMatrix::identity(n), sp))
                      .epsilon(1e-12));
            for (double alpha = -3.0; alpha <= 5.0; alpha += 0.5) {
                const SquareMatrix line = alpha * jn(n).matrix() - SquareMatrix::identity(n);
                CHECK(std::abs(alpha_line_norm(alpha, n, sp) - schatten_norm(line, sp)) <=
                      1e-10);
                CHECK(alpha_line_norm(alpha, n, sp) >=
                      alpha_line_norm(1.0, n, sp) - 1e-12);
            }
        }
    }
    CHECK(alpha_line_norm(3.0, 4, SchattenExponent(2.0)) ==
          doctest::Approx(std::sqrt(7.0)).epsilon(1e-14));
    CHECK_THROWS_AS(alpha_line_norm(1.0, 1, SchattenExponent(2.0)), DimensionError);
}

TEST_CASE("equidistance at the center, spread away from it") {
    const EquidistanceReport at_j3 =
        equidistance_check(jn(3).matrix(), SchattenExponent(2.0), 1e-10);
    CHECK(at_j3.exhaustive);
    CHECK(at_j3.within_tol);
    CHECK(at_j3.max_dev <= 1e-10);
    CHECK(at_j3.distances.size() == 6);
    CHECK(at_j3.distances[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    const EquidistanceReport at_j5 =
        equidistance_check(jn(5).matrix(), SchattenExponent(1.0), 1e-10);
    CHECK(at_j5.within_tol);
    CHECK(at_j5.distances[0] == doctest::Approx(4.0).epsilon(1e-11));

    const EquidistanceReport at_id =
        equidistance_check(SquareMatrix::identity(3), SchattenExponent(2.0), 1e-10);
    CHECK_FALSE(at_id.within_tol);
    CHECK(at_id.max_dev > 0.5);

    // past the enumeration ceiling the scan samples
    const EquidistanceReport sampled =
        equidistance_check(jn(9).matrix(), SchattenExponent(2.0), 1e-10, 200, 3);
    CHECK_FALSE(sampled.exhaustive);
    CHECK(sampled.within_tol);
}

TEST_CASE("uniqueness probe finds no center other than J_n") {
    const UniquenessProbeReport p2 =
        center_uniqueness_probe(3, SchattenExponent(2.0), 50, 61);
    CHECK(p2.falsifiers == 0);
    CHECK(p2.min_margin > 0.0);

    const UniquenessProbeReport p1 =
        center_uniqueness_probe(4, SchattenExponent(1.0), 30, 62);
    CHECK(p1.falsifiers == 0);
    CHECK(p1.min_margin > 0.0);

    // J_n itself sits exactly at the threshold
    for (double p : {1.0, 2.0}) {
        const double radius =
            bounding_ball_radius_enum(jn(4).matrix(), SchattenExponent(p)).radius;
        CHECK(std::abs(radius - std::pow(3.0, 1.0 / p)) <= 1e-11);
    }

    CHECK_THROWS_AS(center_uniqueness_probe(7, SchattenExponent(2.0), 10, 0),
                    SizeLimitError);
}

TEST_CASE("averaging projection collapses to the central line") {
    Xoshiro256PlusPlus rng(55);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + rng.next_below(6);
        const SquareMatrix a = test::random_matrix(rng, n, -3.0, 3.0);
        const SquareMatrix j = jn(n).matrix();
        KahanAccumulator sum;
        for (double v : a.entries()) sum.add(v);
        const double alpha = sum.value() / static_cast<double>(n);
        const double p = (t % 2 == 0) ? 1.5 : 2.0;
        const double lhs =
            schatten_norm(j * a * j - SquareMatrix::identity(n), SchattenExponent(p));
        const double rhs = alpha_line_norm(alpha, n, SchattenExponent(p));
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + rhs));
    }
}
