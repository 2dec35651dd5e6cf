#include <doctest.h>

#include "campana/curve.hpp"
#include "campana/rng.hpp"

#include <cmath>
#include <set>

using namespace campana;

namespace {

double to_d(const Rat& r) {
    return numerator(r).convert_to<double>() / denominator(r).convert_to<double>();
}

std::vector<P1Point> affine_markings(const std::vector<Rat>& s_values) {
    std::vector<P1Point> out;
    for (const auto& s : s_values) out.push_back({s, Rat(-1)});
    return out;
}

// Random contact matrix with equal column sums: distribute a degree beta
// independently within each column.
ContactMatrix random_contacts(Rng& rng, std::size_t d, std::size_t n, int beta) {
    ContactMatrix m(n, std::vector<Int>(d + 1, Int(0)));
    for (std::size_t i = 0; i <= d; ++i)
        for (int unit = 0; unit < beta; ++unit) m[rng.next() % n][i] += 1;
    return m;
}

std::vector<Rat> distinct_markings(Rng& rng, std::size_t n) {
    std::set<Rat> seen;
    while (seen.size() < n) {
        Rat s = Rat(rng.next_in(1, 40), rng.next_in(1, 5));
        seen.insert(s);
    }
    return std::vector<Rat>(seen.begin(), seen.end());
}

}  // namespace

TEST_CASE("curve with contact rows (0,2), (0,3), (5,0)") {
    ContactMatrix contacts = {{0, 2}, {0, 3}, {5, 0}};
    auto curve = build_curve(1, affine_markings({1, 2, 3}), contacts, {1, 1});
    CHECK(curve.beta == 5);
    CHECK(curve.lambda == std::vector<Rat>{1, 1});
    REQUIRE(curve.forms.size() == 2);
    CHECK(curve.forms[0].degree() == 5);
    CHECK(curve.forms[1].degree() == 5);
    // forms[0] = (3t+s)^5, forms[1] = (t+s)^2 (2t+s)^3
    CHECK(curve.forms[0] == BinaryForm::vanishing_at(3, -1).pow(5));
    CHECK(curve.forms[1] ==
          BinaryForm::vanishing_at(1, -1).pow(2) * BinaryForm::vanishing_at(2, -1).pow(3));

    SUBCASE("evaluation at the distinguished points") {
        CHECK(evaluate(curve, {1, 0}) == std::vector<Rat>{1, 1});
        // at [0:1] the i-th coordinate is lambda_i * prod_k s_k^{c_{k,i}}
        CHECK(evaluate(curve, {0, 1}) == std::vector<Rat>{243, 8});
        // markings land on their hyperplanes
        CHECK(evaluate(curve, {1, -1})[1] == 0);
        CHECK(evaluate(curve, {3, -1})[0] == 0);
    }

    SUBCASE("tangency certificate") {
        auto report = verify_tangency(curve);
        CHECK(report.matches);
        CHECK(report.nondegenerate);
        CHECK(report.table == contacts);
        CHECK(report.mismatches.empty());
    }

    SUBCASE("tangency with multiplicities") {
        std::vector<Multiplicity> ok = {Multiplicity::finite(5), Multiplicity::finite(2)};
        auto r1 = verify_tangency(curve, &ok);
        REQUIRE(r1.campana_verdict);
        CHECK(*r1.campana_verdict);
        std::vector<Multiplicity> bad = {Multiplicity::finite(5), Multiplicity::finite(3)};
        auto r2 = verify_tangency(curve, &bad);  // contact order 2 < 3
        REQUIRE(r2.campana_verdict);
        CHECK(!*r2.campana_verdict);
    }

    SUBCASE("perturbed form is caught") {
        RationalCurvePd broken = curve;
        broken.forms[1] = broken.forms[1] + broken.forms[0];
        auto report = verify_tangency(broken);
        CHECK(!report.matches);
        CHECK(!report.mismatches.empty());
    }
}

TEST_CASE("build_curve input validation") {
    ContactMatrix contacts = {{0, 2}, {0, 3}, {5, 0}};
    CHECK_THROWS_AS(build_curve(1, affine_markings({1, 1, 3}), contacts, {1, 1}),
                    std::invalid_argument);  // repeated marking
    CHECK_THROWS_AS(build_curve(1, {{1, -1}, {2, -1}, {1, 0}}, contacts, {1, 1}),
                    std::invalid_argument);  // marking at [1:0]
    CHECK_THROWS_AS(build_curve(1, affine_markings({1, 2, 3}), contacts, {1, 0}),
                    std::invalid_argument);  // boundary point at infinity
    CHECK_THROWS_AS(build_curve(1, affine_markings({1, 2}), {{0, 2}, {3, 0}}, {1, 1}),
                    std::invalid_argument);  // column sums 3 != 2
    CHECK_THROWS_AS(build_curve(1, affine_markings({1, 2}), {{2, -2}, {0, 4}}, {1, 1}),
                    std::invalid_argument);  // negative order
}

TEST_CASE("tangency certification round-trips on random curves") {
    Rng rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t d = 1 + rng.next() % 3;
        std::size_t n = 2 + rng.next() % 3;
        int beta = 1 + int(rng.next() % 6);
        auto contacts = random_contacts(rng, d, n, beta);
        auto s_values = distinct_markings(rng, n);
        std::vector<Rat> x_inf(d + 1);
        for (auto& c : x_inf) c = Rat(rng.next_in(1, 9));

        auto curve = build_curve(d, affine_markings(s_values), contacts, x_inf);
        auto report = verify_tangency(curve);
        CHECK(report.matches);
        // a common root exists iff some marking touches every hyperplane
        bool shared = false;
        for (std::size_t k = 0; k < n; ++k) {
            bool all = true;
            for (std::size_t i = 0; i <= d; ++i)
                if (contacts[k][i] == 0) all = false;
            if (all) shared = true;
        }
        CHECK(report.nondegenerate == !shared);
        CHECK(evaluate(curve, {1, 0}) == x_inf);
    }
}

TEST_CASE("exponent matrix and collection bridge") {
    ContactMatrix contacts = {{0, 2}, {0, 3}, {5, 0}};
    IntMat a = exponent_matrix(1, contacts);
    CHECK(a == IntMat{{2, 3, -5}});

    Fan p2 = projective_space_fan(2);
    auto cc = make_contact_collection(p2, {{3, 0}, {0, 3}, {-3, -3}});
    ContactMatrix m = contact_matrix_from_collection(cc);
    CHECK(m == ContactMatrix{{0, 3, 0}, {0, 0, 3}, {3, 0, 0}});
    // every column sums to the degree against each boundary divisor
    for (std::size_t i = 0; i < 3; ++i) {
        Int col = 0;
        for (const auto& row : m) col += row[i];
        CHECK(col == 3);
    }
}

TEST_CASE("two-point interpolation, d = 1, exponents (2, 3, -5)") {
    ContactMatrix contacts = {{0, 2}, {0, 3}, {5, 0}};
    std::vector<Rat> x = {1, 1}, y = {1, 128};
    auto sol = two_point_solve(1, contacts, x, y);
    REQUIRE(sol.exact);
    REQUIRE(sol.markings_exact.size() == 3);
    std::set<Rat> seen(sol.markings_exact.begin(), sol.markings_exact.end());
    CHECK(seen.size() == 3);
    Rat prod = pow_rat(sol.markings_exact[0], 2) * pow_rat(sol.markings_exact[1], 3) *
               pow_rat(sol.markings_exact[2], -5);
    CHECK(prod == 128);
    // (4, 2, 1) is one hand-checkable witness of the same system
    CHECK(pow_rat(Rat(4), 2) * pow_rat(Rat(2), 3) * pow_rat(Rat(1), -5) == 128);

    // the rebuilt curve passes through y at [0:1]
    auto curve = build_curve(1, affine_markings(sol.markings_exact), contacts, x);
    auto at_zero = evaluate(curve, {0, 1});
    CHECK(at_zero[1] / at_zero[0] == y[1] / y[0]);
}

TEST_CASE("two-point interpolation, d = 2, cubic targets") {
    // markings grouped per boundary divisor of P^2, two of order 3 each
    ContactMatrix contacts = {{3, 0, 0}, {3, 0, 0}, {0, 3, 0}, {0, 3, 0}, {0, 0, 3}, {0, 0, 3}};
    std::vector<Rat> x = {1, 1, 1}, y = {1, 8, 27};
    auto sol = two_point_solve(2, contacts, x, y);
    REQUIRE(sol.exact);
    REQUIRE(sol.markings_exact.size() == 6);
    std::set<Rat> seen(sol.markings_exact.begin(), sol.markings_exact.end());
    CHECK(seen.size() == 6);

    auto curve = build_curve(2, affine_markings(sol.markings_exact), contacts, x);
    auto at_zero = evaluate(curve, {0, 1});
    CHECK(at_zero[1] / at_zero[0] == y[1] / y[0]);
    CHECK(at_zero[2] / at_zero[0] == y[2] / y[0]);
    CHECK(evaluate(curve, {1, 0}) == x);
}

TEST_CASE("two-point interpolation, identity target") {
    ContactMatrix contacts = {{0, 2}, {0, 3}, {5, 0}};
    auto sol = two_point_solve(1, contacts, {1, 5}, {1, 5});
    REQUIRE(sol.exact);
    Rat prod = pow_rat(sol.markings_exact[0], 2) * pow_rat(sol.markings_exact[1], 3) *
               pow_rat(sol.markings_exact[2], -5);
    CHECK(prod == 1);
}

TEST_CASE("two-point interpolation falls back when a root is irrational") {
    // difference matrix (2, -2): solving s_1^2 s_2^{-2} = 2 needs sqrt(2)
    ContactMatrix contacts = {{0, 2}, {2, 0}};
    auto sol = two_point_solve(1, contacts, {1, 1}, {1, 2});
    CHECK(!sol.exact);
    CHECK(!sol.obstruction.empty());
    REQUIRE(sol.markings_numeric.size() == 2);
    CHECK(sol.markings_numeric[0] != sol.markings_numeric[1]);
    CHECK(sol.residual < 1e-9);

    SUBCASE("exact-only mode reports the obstruction without a witness") {
        auto strict = two_point_solve(1, contacts, {1, 1}, {1, 2}, false);
        CHECK(!strict.exact);
        CHECK(strict.markings_numeric.empty());
        CHECK(!strict.obstruction.empty());
    }
}

TEST_CASE("two-point interpolation rejects degenerate inputs") {
    // rank-0 difference matrix
    ContactMatrix flat = {{1, 1, 1}};
    CHECK_THROWS_AS(two_point_solve(2, flat, {1, 1, 1}, {1, 2, 3}), std::invalid_argument);
    ContactMatrix contacts = {{0, 2}, {0, 3}, {5, 0}};
    CHECK_THROWS_AS(two_point_solve(1, contacts, {1, 0}, {1, 2}), std::invalid_argument);
}

TEST_CASE("jacobian structure at the base point") {
    ContactMatrix contacts = {{0, 2}, {0, 3}, {5, 0}};
    std::vector<Rat> markings = {4, 2, 1};
    auto jac = jacobian_entries(1, contacts, markings, std::vector<Rat>{Rat(3)});
    REQUIRE(jac.size() == 2);
    REQUIRE(jac[0].size() == 1 + 3 + 2);
    // second-point rows carry the identity block and depend on t only
    CHECK(jac[1][0] == 1);
    for (std::size_t j = 1; j < 5; ++j) CHECK(jac[1][j] == 0);
    CHECK(jac[1][5] == Rat(3) * (Rat(2) * 4 + Rat(3) * 2 + Rat(-5) * 1));
    // first-point rows do not depend on t
    CHECK(jac[0][5] == 0);
    CHECK(jac[0][0] == 128);  // the monomial prod s_k^{A_k}
}

TEST_CASE("jacobian entries agree with finite differences") {
    Rng rng(2718);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t d = 1 + rng.next() % 3;
        std::size_t n = 2 + rng.next() % 3;
        auto contacts = random_contacts(rng, d, n, 4 + int(rng.next() % 3));
        IntMat a = exponent_matrix(d, contacts);
        if (rank_over_q(a) != d) continue;
        auto s_values = distinct_markings(rng, n);
        std::vector<Rat> lam(d);
        for (auto& l : lam) l = Rat(rng.next_in(1, 7), rng.next_in(1, 3));

        auto jac = jacobian_entries(d, contacts, s_values, lam);

        // double model of the two evaluations, variables
        // (lambda_1..d, s_1..n, s-shift, t-shift)
        auto component = [&](std::size_t i, bool second_point, const std::vector<double>& v) {
            double prod = v[i];
            for (std::size_t k = 0; k < n; ++k) {
                double base = second_point ? v[d + n + 1] * v[d + k] + 1.0 : v[d + k] + v[d + n];
                prod *= std::pow(base, a(i, k).convert_to<double>());
            }
            return prod;
        };
        std::vector<double> base(d + n + 2, 0.0);
        for (std::size_t i = 0; i < d; ++i) base[i] = to_d(lam[i]);
        for (std::size_t k = 0; k < n; ++k) base[d + k] = to_d(s_values[k]);

        const double h = 1e-6;
        for (std::size_t row = 0; row < 2 * d; ++row) {
            std::size_t i = row % d;
            bool second_point = row >= d;
            double scale = std::max(1.0, std::fabs(component(i, second_point, base)));
            for (std::size_t col = 0; col < d + n + 2; ++col) {
                std::vector<double> lo = base, hi = base;
                lo[col] -= h;
                hi[col] += h;
                double fd =
                    (component(i, second_point, hi) - component(i, second_point, lo)) / (2 * h);
                double exact = to_d(jac[row][col]);
                CHECK(std::fabs(fd - exact) <= 1e-5 * std::max({scale, std::fabs(exact), 1.0}));
            }
        }
    }
}

TEST_CASE("jacobian rank on a generated degree-6 instance in P^2") {
    Fan p2 = projective_space_fan(2);
    CampanaStructure s(p2, std::vector<Multiplicity>(3, Multiplicity::finite(2)));
    auto cc = generate_campana_contacts(s, {6, 6, 6}, 0);
    auto contacts = contact_matrix_from_collection(cc);
    std::vector<Rat> markings = {1, 2, 4, 8, 11, 13};
    std::vector<Rat> lambda = {1, 1};
    CHECK(jacobian_rank(2, contacts, markings, lambda, 0) == 4);
    // every exponent difference is divisible by 3, so only the scaling
    // directions survive mod 3
    CHECK(jacobian_rank(2, contacts, markings, lambda, 3) == 2);
    CHECK(jacobian_rank(2, contacts, markings, lambda, 5) == 4);
}

TEST_CASE("rank over Q bounds the rank mod p") {
    Rng rng(555);
    Int primes[] = {3, 5, 7};
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t d = 1 + rng.next() % 2;
        std::size_t n = 2 + rng.next() % 3;
        auto contacts = random_contacts(rng, d, n, 3 + int(rng.next() % 4));
        IntMat a = exponent_matrix(d, contacts);
        if (rank_over_q(a) != d) continue;
        // markings coprime to all tested primes keep every entry p-integral
        std::vector<Rat> pool = {1, 2, 4, 8, 11, 13, 16};
        std::vector<Rat> markings(pool.begin(), pool.begin() + n);
        std::vector<Rat> lambda(d, Rat(1));
        std::size_t rank_q = jacobian_rank(d, contacts, markings, lambda, 0);
        CHECK(rank_q <= 2 * d);
        for (const auto& p : primes)
            CHECK(jacobian_rank(d, contacts, markings, lambda, p) <= rank_q);
    }
}

TEST_CASE("separability rank") {
    ContactMatrix contacts = {{0, 2}, {0, 3}, {5, 0}};
    CHECK(separability_rank(1, contacts, 0) == 1);
    CHECK(separability_rank(1, contacts, 5) == 1);  // (2, 3, 0) still has rank 1

    ContactMatrix triple = {{0, 3}, {3, 0}};  // difference matrix (3, -3)
    CHECK(separability_rank(1, triple, 0) == 1);
    CHECK(separability_rank(1, triple, 3) == 0);

    Fan p2 = projective_space_fan(2);
    CampanaStructure s(p2, std::vector<Multiplicity>(3, Multiplicity::finite(2)));
    auto cc = generate_campana_contacts(s, {7, 7, 7}, 5);
    CHECK(separability_rank(2, contact_matrix_from_collection(cc), 5) == 2);
    CHECK(separability_rank(2, contact_matrix_from_collection(cc), 0) == 2);
}

TEST_CASE("rational matrix rank mod p") {
    std::vector<std::vector<Rat>> m = {{Rat(1, 2), Rat(1)}, {Rat(3), Rat(6)}};
    CHECK(matrix_rank_mod(m, 0) == 1);  // second row is 6x the first
    CHECK(matrix_rank_mod(m, 5) == 1);
    CHECK_THROWS_AS(matrix_rank_mod(m, 2), std::domain_error);  // denominator 2
    CHECK_THROWS_AS(matrix_rank_mod(m, 4), std::invalid_argument);
}
