#include "birkhoff/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <sstream>

#include "birkhoff/assignment.hpp"
#include "birkhoff/decomposition.hpp"
#include "birkhoff/geometry.hpp"
#include "birkhoff/kahan.hpp"
#include "birkhoff/matrix.hpp"
#include "birkhoff/matrix_io.hpp"
#include "birkhoff/rng.hpp"
#include "birkhoff/sampling.hpp"
#include "birkhoff/spectral.hpp"

namespace birkhoff {

namespace {

void add_case(VerificationReport& rep, const std::string& prefix, const std::string& name,
              double violation, double tolerance, const std::string& detail) {
    const bool pass = violation <= tolerance;
    rep.per_case.push_back(CaseResult{prefix + name, pass, violation, tolerance, detail});
    rep.cases_run += 1;
    if (!pass) rep.cases_failed += 1;
    rep.worst_violation = std::max(rep.worst_violation, violation - tolerance);
}

std::string describe(const char* what, double violation, double tolerance, int checks) {
    std::ostringstream out;
    out << what << ": worst " << format_double(violation) << " (tolerance "
        << format_double(tolerance) << ") over " << checks << " checks";
    return out.str();
}

SquareMatrix random_matrix(Xoshiro256PlusPlus& rng, std::size_t n, double lo, double hi) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform(lo, hi);
    return m;
}

// alternates the two samplers so suites see both extreme-ish and interior points
DoublyStochasticMatrix random_doubly_stochastic(Xoshiro256PlusPlus& rng, std::size_t n,
                                                int t) {
    if (t % 2 == 0) {
        const std::size_t k = 1 + rng.next_below(2 * n);
        return sample_convex(n, k, rng.next());
    }
    return sample_sinkhorn(n, rng.next());
}

std::vector<int> random_derangement(std::size_t n, Xoshiro256PlusPlus& rng) {
    while (true) {
        std::vector<int> sigma = random_permutation(n, rng);
        bool fixed = false;
        for (std::size_t i = 0; i < n; ++i)
            if (sigma[i] == static_cast<int>(i)) fixed = true;
        if (!fixed) return sigma;
    }
}

constexpr double kSchattenGrid[] = {1.0, 1.5, 2.0, 3.0, 5.0};

// ---------------------------------------------------------------- norms ---

void norms_suite(VerificationReport& rep, const std::string& prefix, std::uint64_t seed,
                 int trials) {
    Xoshiro256PlusPlus rng(seed * 1000003ULL + 1);
    const int heavy = 5 * trials;

    {
        double worst = 0.0;
        for (int t = 0; t < heavy; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
            const SquareMatrix a = random_matrix(rng, n, -3.0, 3.0);
            double p = rng.uniform(1.0, 10.0);
            double q = rng.uniform(1.0, 10.0);
            if (p > q) std::swap(p, q);
            const double s1 = schatten_norm(a, SchattenExponent(1.0));
            const double sp = schatten_norm(a, SchattenExponent(p));
            const double sq = schatten_norm(a, SchattenExponent(q));
            worst = std::max({worst, sp - s1, sq - sp});
        }
        add_case(rep, prefix, "monotonicity", std::max(0.0, worst), 1e-9,
                 describe("|A|_S1 >= |A|_Sp >= |A|_Sq", worst, 1e-9, heavy));
    }
    {
        double worst = 0.0;
        for (int t = 0; t < heavy; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
            const SquareMatrix a = random_matrix(rng, n, -3.0, 3.0);
            const SquareMatrix p = PermutationMatrix(random_permutation(n, rng)).to_dense();
            const SquareMatrix q = PermutationMatrix(random_permutation(n, rng)).to_dense();
            const SchattenExponent sp(rng.uniform(1.0, 6.0));
            worst = std::max(worst, std::abs(schatten_norm(p * a * q, sp) -
                                             schatten_norm(a, sp)));
        }
        add_case(rep, prefix, "permutation_invariance", worst, 1e-9,
                 describe("| |PAQ|_Sp - |A|_Sp |", worst, 1e-9, heavy));
    }
    {
        double worst = 0.0;
        for (int t = 0; t < heavy; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
            const SquareMatrix a = random_matrix(rng, n, -2.0, 2.0);
            const SquareMatrix b = random_matrix(rng, n, -2.0, 2.0);
            const SchattenExponent sp(rng.uniform(1.0, 6.0));
            worst = std::max(worst, schatten_norm(a * b, sp) -
                                        schatten_norm(a, sp) * schatten_norm(b, sp));
        }
        add_case(rep, prefix, "submultiplicativity", std::max(0.0, worst), 1e-9,
                 describe("|AB|_Sp - |A|_Sp |B|_Sp", worst, 1e-9, heavy));
    }
    {
        double worst = 0.0;
        double worst_sigma = 0.0;
        for (int t = 0; t < heavy; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 9);
            const DoublyStochasticMatrix d = random_doubly_stochastic(rng, n, t);
            const double p = kSchattenGrid[t % 4];
            const double norm = schatten_norm(d.matrix(), SchattenExponent(p));
            const double upper = std::pow(static_cast<double>(n), 1.0 / p);
            worst = std::max({worst, 1.0 - norm, norm - upper});
            worst_sigma = std::max(worst_sigma,
                                   std::abs(singular_values(d.matrix())[0] - 1.0));
        }
        add_case(rep, prefix, "polytope_norm_range", std::max(0.0, worst), 1e-9,
                 describe("1 <= |D|_Sp <= n^(1/p)", worst, 1e-9, heavy));
        add_case(rep, prefix, "top_singular_value", worst_sigma, 1e-9,
                 describe("|sigma_1(D) - 1|", worst_sigma, 1e-9, heavy));
    }
    {
        double worst = 0.0;
        for (int t = 0; t < heavy; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
            const SquareMatrix a = random_matrix(rng, n, -3.0, 3.0);
            const double fro = frobenius_norm(a);
            const double dev = std::abs(schatten_norm(a, SchattenExponent(2.0)) - fro);
            worst = std::max(worst, dev / (1.0 + fro));
        }
        add_case(rep, prefix, "frobenius_crosscheck", worst, 1e-10,
                 describe("relative |S2 - Frobenius|", worst, 1e-10, heavy));
    }
    {
        double worst = 0.0;
        for (int t = 0; t < heavy; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
            const SquareMatrix b = random_matrix(rng, n, -3.0, 3.0);
            const SquareMatrix c = random_matrix(rng, n, -3.0, 3.0);
            worst = std::max(worst, -von_neumann_gap(b, c));
        }
        add_case(rep, prefix, "von_neumann_nonnegative", std::max(0.0, worst), 1e-9,
                 describe("-gap(B, C)", worst, 1e-9, heavy));
    }
    {
        double worst = 0.0;
        for (int t = 0; t < trials; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
            const SquareMatrix r = random_matrix(rng, n, -1.0, 1.0);
            const SquareMatrix psd = transpose(r) * r;
            worst = std::max(worst, std::abs(von_neumann_gap(psd, psd)));
        }
        add_case(rep, prefix, "von_neumann_equality", worst, 1e-9,
                 describe("|gap(B, B)| for PSD B", worst, 1e-9, trials));
    }
}

// ------------------------------------------------------------- mintrace ---

void mintrace_suite(VerificationReport& rep, const std::string& prefix, std::uint64_t seed,
                    int trials) {
    Xoshiro256PlusPlus rng(seed * 1000003ULL + 2);

    {
        const int count = 2 * trials;
        double worst_value = 0.0;
        double worst_argmin = 0.0;
        for (int t = 0; t < count; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
            const SquareMatrix a = random_matrix(rng, n, -10.0, 10.0);
            const MinTraceResult h = min_trace_hungarian(a);
            const MinTraceResult b = min_trace_bruteforce(a);
            worst_value = std::max(worst_value, std::abs(h.value - b.value));
            const double scale = 1.0 + frobenius_norm(a);
            worst_argmin = std::max(
                {worst_argmin,
                 std::abs(trace(a * h.argmin.to_dense()) - h.value) / scale,
                 std::abs(trace(a * b.argmin.to_dense()) - b.value) / scale});
        }
        add_case(rep, prefix, "hungarian_vs_bruteforce", worst_value, 1e-9,
                 describe("|hungarian - bruteforce|", worst_value, 1e-9, count));
        add_case(rep, prefix, "argmin_consistency", worst_argmin, 1e-10,
                 describe("relative |tr(A argmin) - value|", worst_argmin, 1e-10, count));
    }
    {
        const int count = 5 * trials;
        double worst = 0.0;
        for (int t = 0; t < count; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 9);
            const DoublyStochasticMatrix d = random_doubly_stochastic(rng, n, t);
            const double v = min_trace_hungarian(d.matrix()).value;
            worst = std::max({worst, -v, v - 1.0});
        }
        add_case(rep, prefix, "polytope_range", std::max(0.0, worst), 1e-9,
                 describe("0 <= tr_min(D) <= 1", worst, 1e-9, count));
    }
    {
        double worst = 0.0;
        for (int t = 0; t < trials; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
            const std::size_t k = 2 + rng.next_below(n + 1);
            // convex combination of derangements has an all-zero main diagonal;
            // a row relabeling hides it under some permutation
            SquareMatrix m(n);
            std::vector<double> w(k);
            KahanAccumulator tot;
            for (std::size_t s = 0; s < k; ++s) {
                double u;
                do {
                    u = rng.next_double();
                } while (u == 0.0);
                w[s] = -std::log(u);
                tot.add(w[s]);
            }
            for (std::size_t s = 0; s < k; ++s) {
                const std::vector<int> sigma = random_derangement(n, rng);
                for (std::size_t i = 0; i < n; ++i)
                    m(i, static_cast<std::size_t>(sigma[i])) += w[s] / tot.value();
            }
            const SquareMatrix relabeled =
                PermutationMatrix(random_permutation(n, rng)).to_dense() * m;
            const DoublyStochasticMatrix d = make_doubly_stochastic(relabeled);
            worst = std::max(worst, std::abs(min_trace_hungarian(d.matrix()).value));
        }
        add_case(rep, prefix, "zero_diagonal_exact", worst, 0.0,
                 describe("|tr_min| on zero-diagonal inputs", worst, 0.0, trials));
    }
    {
        double worst = 0.0;
        for (std::size_t n = 2; n <= 12; ++n)
            worst = std::max(worst,
                             std::abs(min_trace_hungarian(jn(n).matrix()).value - 1.0));
        add_case(rep, prefix, "jn_exact", worst, 0.0,
                 describe("|tr_min(J_n) - 1| bit-exact, n 2..12", worst, 0.0, 11));
    }
    {
        const int count = 5 * trials;
        double max_value = -std::numeric_limits<double>::infinity();
        for (int t = 0; t < count; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
            const SquareMatrix j = jn(n).matrix();
            SquareMatrix m(n);
            for (int attempt = 0;; ++attempt) {
                m = random_doubly_stochastic(rng, n, t).matrix();
                if (frobenius_norm(m - j) >= 0.1) break;
                if (attempt > 200) throw ConvergenceError("could not sample away from J_n");
            }
            max_value = std::max(max_value, min_trace_hungarian(m).value);
        }
        const double worst = std::max(0.0, max_value - (1.0 - 1e-9));
        std::ostringstream detail;
        detail << "max tr_min(D) = " << format_double(max_value) << " over " << count
               << " samples with |D - J|_F >= 0.1 (gap below 1: "
               << format_double(1.0 - max_value) << ")";
        add_case(rep, prefix, "strictly_below_one_away_from_jn", worst, 0.0, detail.str());
    }
    {
        const int count = 2 * trials;
        double worst = 0.0;
        for (int t = 0; t < count; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
            const SquareMatrix a = random_matrix(rng, n, -5.0, 5.0);
            const double c = rng.uniform(-5.0, 5.0);
            const SquareMatrix shifted = a + c * SquareMatrix(n, 1.0);
            worst = std::max(worst,
                             std::abs(min_trace_hungarian(shifted).value -
                                      min_trace_hungarian(a).value -
                                      c * static_cast<double>(n)));
        }
        add_case(rep, prefix, "shift_covariance", worst, 1e-9,
                 describe("|tr_min(A + cE) - tr_min(A) - cn|", worst, 1e-9, count));
    }
}

// --------------------------------------------------------------- radius ---

void radius_suite(VerificationReport& rep, const std::string& prefix, std::uint64_t seed,
                  int trials) {
    Xoshiro256PlusPlus rng(seed * 1000003ULL + 3);

    {
        const int count = 2 * trials;
        double worst = 0.0;
        double worst_witness = 0.0;
        for (int t = 0; t < count; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 6);
            const SquareMatrix a = random_matrix(rng, n, -2.0, 2.0);
            const BoundingBallReport closed = bounding_ball_radius_s2(a);
            const BoundingBallReport enumerated =
                bounding_ball_radius_enum(a, SchattenExponent(2.0));
            worst = std::max(worst, std::abs(closed.radius - enumerated.radius));
            worst_witness = std::max(
                {worst_witness,
                 std::abs(frobenius_norm(a - closed.witness.to_dense()) - closed.radius),
                 std::abs(frobenius_norm(a - enumerated.witness.to_dense()) -
                          enumerated.radius)});
        }
        add_case(rep, prefix, "closed_form_vs_enumeration", worst, 1e-8,
                 describe("|closed - enumerated| radius", worst, 1e-8, count));
        add_case(rep, prefix, "witness_distance", worst_witness, 1e-8,
                 describe("| |A - witness| - radius |", worst_witness, 1e-8, 2 * count));
    }
    {
        const int count = 5 * trials;
        double worst_sandwich = 0.0;
        double worst_ratio = 0.0;
        double worst_band = 0.0;
        double worst_crude = 0.0;
        for (int t = 0; t < count + 9; ++t) {
            // the tail pins J_n itself for n = 2..10, where the bounds are tight
            const std::size_t n =
                t < count ? 2 + static_cast<std::size_t>(t % 9) : static_cast<std::size_t>(t - count + 2);
            const DoublyStochasticMatrix d =
                t < count ? random_doubly_stochastic(rng, n, t) : jn(n);
            const auto [lo, hi] = radius_bounds_s2(d);
            const double r = bounding_ball_radius_s2(d.matrix()).radius;
            worst_sandwich = std::max({worst_sandwich, lo - r, r - hi});
            const double f2 = std::pow(frobenius_norm(d.matrix()), 2);
            const double nn = static_cast<double>(n);
            const double g = f2 + nn - 1.0;
            worst_ratio = std::max(worst_ratio, std::abs(r * r / g - 1.0) - 1.0 / g);
            const double band = r * r / (f2 + nn);
            worst_band = std::max({worst_band, band - 1.0, (1.0 - 2.0 / nn) - band});
            worst_crude = std::max({worst_crude, (nn - 1.0) - r * r, r * r - 2.0 * nn});
        }
        add_case(rep, prefix, "sandwich_bounds", std::max(0.0, worst_sandwich), 1e-9,
                 describe("lo <= r <= hi slack", worst_sandwich, 1e-9, count + 9));
        add_case(rep, prefix, "ratio_convergence", std::max(0.0, worst_ratio), 1e-9,
                 describe("|r^2/(|D|^2+n-1) - 1| - 1/(|D|^2+n-1)", worst_ratio, 1e-9,
                          count + 9));
        add_case(rep, prefix, "ratio_band", std::max(0.0, worst_band), 1e-9,
                 describe("r^2/(|D|^2+n) inside [1-2/n, 1]", worst_band, 1e-9, count + 9));
        add_case(rep, prefix, "crude_bounds", std::max(0.0, worst_crude), 1e-9,
                 describe("n-1 <= r^2 <= 2n slack", worst_crude, 1e-9, count + 9));
    }
    {
        double worst = 0.0;
        for (int t = 0; t < trials; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
            const DoublyStochasticMatrix d = random_doubly_stochastic(rng, n, t);
            worst = std::max(worst, std::abs(min_trace_from_radius(d) -
                                             min_trace_hungarian(d.matrix()).value));
        }
        add_case(rep, prefix, "mintrace_roundtrip", worst, 1e-8,
                 describe("|(|D|^2+n-r^2)/2 - tr_min|", worst, 1e-8, trials));
    }
}

// ------------------------------------------------------------ chebyshev ---

void chebyshev_suite(VerificationReport& rep, const std::string& prefix, std::uint64_t seed,
                     int trials) {
    Xoshiro256PlusPlus rng(seed * 1000003ULL + 4);

    {
        double worst_value = 0.0;
        double worst_spread = 0.0;
        int checks = 0;
        for (std::size_t n = 2; n <= 7; ++n) {
            const SquareMatrix j = jn(n).matrix();
            for (double p : kSchattenGrid) {
                const double expected =
                    std::pow(static_cast<double>(n - 1), 1.0 / p);
                const double radius =
                    bounding_ball_radius_enum(j, SchattenExponent(p)).radius;
                worst_value = std::max(worst_value, std::abs(radius - expected));
                worst_spread = std::max(
                    worst_spread,
                    equidistance_check(j, SchattenExponent(p), 1e-10).max_dev);
                ++checks;
            }
        }
        add_case(rep, prefix, "radius_values", worst_value, 1e-9,
                 describe("|max_P |J-P|_Sp - (n-1)^(1/p)|", worst_value, 1e-9, checks));
        add_case(rep, prefix, "equidistance_spread", worst_spread, 1e-10,
                 describe("max-min of |J-P|_Sp over P", worst_spread, 1e-10, checks));
    }
    {
        double worst = 0.0;
        worst = std::max(worst,
                         std::abs(chebyshev_radius(4, SchattenExponent(1.0)).radius - 3.0));
        worst = std::max(worst, std::abs(chebyshev_radius(3, SchattenExponent(2.0)).radius -
                                         std::sqrt(2.0)));
        worst = std::max(worst, std::abs(chebyshev_radius(1, SchattenExponent(2.0)).radius));
        add_case(rep, prefix, "closed_form_values", worst, 1e-12,
                 describe("pinned Chebyshev radii", worst, 1e-12, 3));
    }
    {
        double worst_identity = 0.0;
        double worst_min = 0.0;
        int checks = 0;
        for (std::size_t n = 2; n <= 6; ++n) {
            for (double p : {1.0, 1.5, 2.0, 3.0}) {
                const double at_one = alpha_line_norm(1.0, n, SchattenExponent(p));
                for (double alpha = -3.0; alpha <= 5.0 + 1e-12; alpha += 0.5) {
                    const double closed = alpha_line_norm(alpha, n, SchattenExponent(p));
                    const SquareMatrix line =
                        alpha * jn(n).matrix() - SquareMatrix::identity(n);
                    worst_identity = std::max(
                        worst_identity,
                        std::abs(closed - schatten_norm(line, SchattenExponent(p))));
                    worst_min = std::max(worst_min, at_one - closed);
                    ++checks;
                }
            }
        }
        add_case(rep, prefix, "alpha_line_identity", worst_identity, 1e-10,
                 describe("|closed form - |aJ-I|_Sp|", worst_identity, 1e-10, checks));
        add_case(rep, prefix, "alpha_line_minimality", std::max(0.0, worst_min), 1e-12,
                 describe("norm(1) - norm(alpha)", worst_min, 1e-12, checks));
    }
    {
        const int count = 2 * trials;
        double worst = 0.0;
        for (int t = 0; t < count; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
            const SquareMatrix a = random_matrix(rng, n, -3.0, 3.0);
            const double p = kSchattenGrid[t % 5];
            const SquareMatrix j = jn(n).matrix();
            KahanAccumulator sum;
            for (double v : a.entries()) sum.add(v);
            const double alpha = sum.value() / static_cast<double>(n);
            const double lhs = schatten_norm(j * a * j - SquareMatrix::identity(n),
                                             SchattenExponent(p));
            const double rhs = alpha_line_norm(alpha, n, SchattenExponent(p));
            worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + rhs));
        }
        add_case(rep, prefix, "averaging_identity", worst, 1e-10,
                 describe("relative | |JAJ-I|_Sp - line norm |", worst, 1e-10, count));
    }
    {
        int falsifiers = 0;
        double min_margin = std::numeric_limits<double>::infinity();
        int probes = 0;
        for (std::size_t n : {3, 4, 5}) {
            for (double p : {1.0, 2.0}) {
                const UniquenessProbeReport probe =
                    center_uniqueness_probe(n, SchattenExponent(p), trials, rng.next());
                falsifiers += probe.falsifiers;
                min_margin = std::min(min_margin, probe.min_margin);
                probes += probe.trials;
            }
        }
        std::ostringstream detail;
        detail << "no radius <= (n-1)^(1/p) among " << probes
               << " perturbations; min margin " << format_double(min_margin);
        add_case(rep, prefix, "center_uniqueness_probe", static_cast<double>(falsifiers),
                 0.0, detail.str());
    }
}

// ------------------------------------------------------------ decompose ---

void decompose_suite(VerificationReport& rep, const std::string& prefix, std::uint64_t seed,
                     int trials) {
    Xoshiro256PlusPlus rng(seed * 1000003ULL + 5);

    {
        const int count = 2 * trials;
        double worst_weight = 0.0;
        double worst_rec = 0.0;
        double worst_terms = 0.0;
        for (int t = 0; t < count; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 11);
            const DoublyStochasticMatrix d = random_doubly_stochastic(rng, n, t);
            const BirkhoffDecomposition dec = birkhoff_decompose(d);
            for (const auto& term : dec.terms())
                worst_weight = std::max({worst_weight, -term.weight, term.weight - 1.0});
            worst_weight = std::max(worst_weight, std::abs(dec.weight_sum() - 1.0));
            worst_rec = std::max(worst_rec,
                                 frobenius_norm(dec.reconstruct() - d.matrix()));
            const double bound = static_cast<double>(n * n - 2 * n + 2);
            worst_terms =
                std::max(worst_terms, static_cast<double>(dec.size()) - bound);
        }
        add_case(rep, prefix, "weights", std::max(0.0, worst_weight), 1e-9,
                 describe("weight range and sum", worst_weight, 1e-9, count));
        add_case(rep, prefix, "reconstruction", worst_rec, 1e-8,
                 describe("|sum w P - D|_F", worst_rec, 1e-8, count));
        add_case(rep, prefix, "term_count", std::max(0.0, worst_terms), 0.0,
                 describe("terms - (n^2-2n+2)", worst_terms, 0.0, count));
    }
    {
        double worst = 0.0;
        for (int t = 0; t < trials; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 9);
            const SquareMatrix prod = random_doubly_stochastic(rng, n, t).matrix() *
                                      random_doubly_stochastic(rng, n, t + 1).matrix();
            double dev = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                KahanAccumulator row, col;
                for (std::size_t j = 0; j < n; ++j) {
                    row.add(prod(i, j));
                    col.add(prod(j, i));
                }
                dev = std::max({dev, std::abs(row.value() - 1.0),
                                std::abs(col.value() - 1.0)});
                for (std::size_t j = 0; j < n; ++j) dev = std::max(dev, -prod(i, j));
            }
            worst = std::max(worst, dev);
        }
        add_case(rep, prefix, "closure_under_product", worst, 1e-9,
                 describe("row/col sums and negativity of D1*D2", worst, 1e-9, trials));
    }
    {
        double worst_fixed = 0.0;
        double worst_sums = 0.0;
        for (int t = 0; t < trials; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
            const SquareMatrix b = random_doubly_stochastic(rng, n, t).matrix();
            worst_fixed = std::max(worst_fixed, max_abs_diff(b, khoury_projection(b)));
            const SquareMatrix g = khoury_projection(random_matrix(rng, n, -3.0, 3.0));
            for (std::size_t i = 0; i < n; ++i) {
                KahanAccumulator row, col;
                for (std::size_t j = 0; j < n; ++j) {
                    row.add(g(i, j));
                    col.add(g(j, i));
                }
                worst_sums = std::max({worst_sums, std::abs(row.value() - 1.0),
                                       std::abs(col.value() - 1.0)});
            }
        }
        add_case(rep, prefix, "khoury_fixed_point", worst_fixed, 1e-10,
                 describe("|B - proj(B)| on doubly stochastic B", worst_fixed, 1e-10,
                          trials));
        add_case(rep, prefix, "khoury_generalized_sums", worst_sums, 1e-9,
                 describe("row/col sums of proj(random)", worst_sums, 1e-9, trials));
    }
    {
        const int b_count = std::max(1, trials / 2);
        const int g_count = 100 * trials;
        double worst = 0.0;
        for (int t = 0; t < b_count; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
            const SquareMatrix b = random_matrix(rng, n, -2.0, 2.0);
            const double own = frobenius_norm(b - khoury_projection(b));
            double best_other = std::numeric_limits<double>::infinity();
            for (int s = 0; s < g_count; ++s) {
                const SquareMatrix g = khoury_projection(random_matrix(rng, n, -2.0, 2.0));
                best_other = std::min(best_other, frobenius_norm(b - g));
            }
            worst = std::max(worst, own - best_other);
        }
        add_case(rep, prefix, "khoury_minimality_probe", std::max(0.0, worst), 1e-9,
                 describe("|B - proj(B)| - min over random generalized targets", worst,
                          1e-9, b_count * g_count));
    }
    {
        double worst = 0.0;
        for (std::size_t n = 2; n <= 6; ++n)
            worst = std::max(worst,
                             max_abs_diff(average_all_permutations(n), jn(n).matrix()));
        add_case(rep, prefix, "uniform_average", worst, 1e-12,
                 describe("|mean of all P - J_n| entrywise, n 2..6", worst, 1e-12, 5));
    }
    {
        const int count = std::max(1, trials / 20);
        double mismatches = 0.0;
        for (int t = 0; t < count; ++t) {
            const std::uint64_t s = rng.next();
            const std::size_t n = 2 + static_cast<std::size_t>(t % 9);
            const std::size_t k = 1 + rng.next_below(2 * n);
            const SquareMatrix c1 = sample_convex(n, k, s).matrix();
            const SquareMatrix c2 = sample_convex(n, k, s).matrix();
            const SquareMatrix s1 = sample_sinkhorn(n, s).matrix();
            const SquareMatrix s2 = sample_sinkhorn(n, s).matrix();
            if (std::memcmp(c1.entries().data(), c2.entries().data(),
                            c1.entries().size_bytes()) != 0)
                mismatches += 1.0;
            if (std::memcmp(s1.entries().data(), s2.entries().data(),
                            s1.entries().size_bytes()) != 0)
                mismatches += 1.0;
        }
        add_case(rep, prefix, "sampler_determinism", mismatches, 0.0,
                 describe("seed-identical resample mismatches", mismatches, 0.0,
                          2 * count));
    }
}

using SuiteFn = void (*)(VerificationReport&, const std::string&, std::uint64_t, int);

const std::pair<const char*, SuiteFn> kSuites[] = {
    {"norms", norms_suite},       {"mintrace", mintrace_suite},
    {"radius", radius_suite},     {"chebyshev", chebyshev_suite},
    {"decompose", decompose_suite},
};

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"norms", "mintrace", "radius",
                                                   "chebyshev", "decompose"};
    return names;
}

VerificationReport run_suite(const std::string& suite, std::uint64_t seed, int trials) {
    if (trials < 1) throw ValidationError("trials must be at least 1");
    VerificationReport rep;
    rep.suite = suite;
    if (suite == "all") {
        for (const auto& [name, fn] : kSuites)
            fn(rep, std::string(name) + ".", seed, trials);
        return rep;
    }
    for (const auto& [name, fn] : kSuites) {
        if (suite == name) {
            fn(rep, "", seed, trials);
            return rep;
        }
    }
    throw ValidationError("unknown suite: " + suite +
                          " (expected all, norms, mintrace, radius, chebyshev, decompose)");
}

}  // namespace birkhoff
