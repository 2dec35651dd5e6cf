#include <doctest.h>

#include "campana/campana.hpp"
#include "campana/snf.hpp"

using namespace campana;

namespace {

std::vector<Multiplicity> constant_mults(std::size_t count, Int m) {
    return std::vector<Multiplicity>(count, Multiplicity::finite(std::move(m)));
}

}  // namespace

TEST_CASE("multiplicity weights") {
    CHECK(Multiplicity::finite(1).weight() == Rat(0));
    CHECK(Multiplicity::finite(2).weight() == Rat(1, 2));
    CHECK(Multiplicity::finite(5).weight() == Rat(4, 5));
    CHECK(Multiplicity::inf().weight() == Rat(1));
    // strictly increasing in m
    for (int m = 1; m < 30; ++m)
        CHECK(Multiplicity::finite(m).weight() < Multiplicity::finite(m + 1).weight());
    CHECK_THROWS_AS(Multiplicity::finite(0), std::invalid_argument);
}

TEST_CASE("klt check") {
    Fan fan = projective_space_fan(2);
    CHECK(is_klt(CampanaStructure(fan, constant_mults(3, 2))));
    CHECK(is_klt(CampanaStructure(fan, constant_mults(3, 1))));
    auto mults = constant_mults(3, 2);
    mults[1] = Multiplicity::inf();
    CHECK(!is_klt(CampanaStructure(fan, mults)));
}

TEST_CASE("campana type") {
    Fan p2 = projective_space_fan(2);
    Fan p1 = projective_space_fan(1);

    SUBCASE("all coefficients 0 or 3 pass with m = 2") {
        auto cc = make_contact_collection(p2, {{3, 0}, {0, 3}, {-3, -3}});
        auto report = is_campana_type(cc, CampanaStructure(p2, constant_mults(3, 2)));
        CHECK(report.ok);
        CHECK(report.violations.empty());
    }
    SUBCASE("coefficient below the multiplicity fails") {
        auto cc = make_contact_collection(p1, {{1}, {4}, {-5}});
        auto report = is_campana_type(cc, CampanaStructure(p1, constant_mults(2, 2)));
        CHECK(!report.ok);
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].marking == 0);
    }
    SUBCASE("two positive contacts on an infinite ray fail") {
        auto cc = make_contact_collection(p1, {{2}, {3}, {-5}});
        std::vector<Multiplicity> mults = {Multiplicity::finite(2), Multiplicity::inf()};
        auto report = is_campana_type(cc, CampanaStructure(p1, mults));
        CHECK(!report.ok);  // markings 0 and 1 both touch ray 1
        CHECK(report.violations.size() == 2);
    }
    SUBCASE("one positive contact on an infinite ray passes") {
        auto cc = make_contact_collection(p1, {{5}, {-2}, {-3}});
        std::vector<Multiplicity> mults = {Multiplicity::finite(2), Multiplicity::inf()};
        CHECK(is_campana_type(cc, CampanaStructure(p1, mults)).ok);
    }
    SUBCASE("m = 1 imposes no constraint") {
        auto cc = make_contact_collection(p1, {{1}, {4}, {-5}});
        CHECK(is_campana_type(cc, CampanaStructure(p1, constant_mults(2, 1))).ok);
    }
}

TEST_CASE("campana type is monotone in the multiplicities") {
    Fan p2 = projective_space_fan(2);
    auto cc = make_contact_collection(p2, {{3, 0}, {0, 3}, {-3, -3}});
    bool previous = true;
    for (int m = 1; m <= 8; ++m) {
        bool ok = is_campana_type(cc, CampanaStructure(p2, constant_mults(3, m))).ok;
        if (!previous) CHECK(!ok);  // true can only turn false as m grows
        previous = ok;
    }
}

TEST_CASE("contact generation: P^2, m = 2, D = 6, p = 0") {
    Fan p2 = projective_space_fan(2);
    CampanaStructure s(p2, constant_mults(3, 2));
    auto cc = generate_campana_contacts(s, {6, 6, 6}, 0);
    REQUIRE(cc.orders.size() == 6);
    for (const auto& o : cc.orders) {
        REQUIRE(o.decomposition.size() == 1);
        CHECK(o.decomposition.begin()->second == 3);  // midpoint split (3,3)
    }
    CHECK(check_balancing(cc));
    CHECK(is_campana_type(cc, s).ok);
    CHECK(sublattice_rank(cc.points(), 2) == 2);
    CHECK(quotient_torsion(cc.points(), 2) == std::vector<Int>{3, 3});
    CHECK(check_full_rank_no_p_torsion(cc, 0));   // p = 0: no char-torsion
    CHECK(!check_full_rank_no_p_torsion(cc, 3));  // 3-torsion present
}

TEST_CASE("contact generation: odd degree and p-free splits") {
    Fan p2 = projective_space_fan(2);
    CampanaStructure s(p2, constant_mults(3, 2));
    SUBCASE("D = 7, p = 5 splits as (4,3)") {
        auto cc = generate_campana_contacts(s, {7, 7, 7}, 5);
        REQUIRE(cc.orders.size() == 6);
        for (std::size_t r = 0; r < 3; ++r) {
            Int t1 = cc.orders[2 * r].decomposition.begin()->second;
            Int t2 = cc.orders[2 * r + 1].decomposition.begin()->second;
            CHECK(t1 + t2 == 7);
            CHECK(t1 >= 2);
            CHECK(t2 >= 2);
            CHECK(t1 % 5 != 0);
            CHECK(t2 % 5 != 0);
        }
        CHECK(check_full_rank_no_p_torsion(cc, 5));
    }
    SUBCASE("P^1, D = 6, p = 3 rejects the (3,3) midpoint") {
        Fan p1 = projective_space_fan(1);
        CampanaStructure s1(p1, constant_mults(2, 2));
        auto cc = generate_campana_contacts(s1, {6, 6}, 3);
        Int t1 = cc.orders[0].decomposition.begin()->second;
        Int t2 = cc.orders[1].decomposition.begin()->second;
        CHECK(t1 == 2);
        CHECK(t2 == 4);
        CHECK(check_full_rank_no_p_torsion(cc, 3));
    }
}

TEST_CASE("contact generation rejects bad inputs") {
    Fan p2 = projective_space_fan(2);
    CampanaStructure s(p2, constant_mults(3, 2));
    CHECK_THROWS_AS(generate_campana_contacts(s, {5, 5, 5}, 0), std::invalid_argument);  // < 2m+2
    CHECK_THROWS_AS(generate_campana_contacts(s, {6, 6, 7}, 0), std::invalid_argument);  // unbalanced
    auto mults = constant_mults(3, 2);
    mults[0] = Multiplicity::inf();
    CHECK_THROWS_AS(generate_campana_contacts(CampanaStructure(p2, mults), {6, 6, 6}, 0),
                    std::invalid_argument);  // not klt
}

TEST_CASE("generated collections always pass the full battery") {
    Fan fans[] = {projective_space_fan(1), projective_space_fan(2), projective_space_fan(3)};
    Int primes[] = {0, 3, 5, 7};
    for (const auto& fan : fans)
        for (int m = 1; m <= 3; ++m)
            for (const auto& p : primes)
                for (Int d = 2 * m + 2; d <= 2 * m + 6; ++d) {
                    CampanaStructure s(fan, constant_mults(fan.rays().size(), m));
                    std::vector<Int> degrees(fan.rays().size(), d);
                    auto cc = generate_campana_contacts(s, degrees, p);
                    CHECK(check_balancing(cc));
                    CHECK(is_campana_type(cc, s).ok);
                    CHECK(check_full_rank_no_p_torsion(cc, p));
                }
}

TEST_CASE("full-rank / no-torsion combined check") {
    Fan p2 = projective_space_fan(2);
    auto torsion3 = make_contact_collection(p2, {{3, 0}, {0, 3}, {-3, -3}});
    CHECK(!check_full_rank_no_p_torsion(torsion3, 3));
    CHECK(check_full_rank_no_p_torsion(torsion3, 0));
    auto basis = make_contact_collection(p2, {{1, 0}, {0, 1}, {-1, -1}});
    CHECK(check_full_rank_no_p_torsion(basis, 2));
    CHECK(check_full_rank_no_p_torsion(basis, 3));
    auto rank1 = make_contact_collection(p2, {{1, 0}, {-1, 0}});
    CHECK(!check_full_rank_no_p_torsion(rank1, 0));
}

TEST_CASE("campana jets") {
    std::vector<Multiplicity> mults = {Multiplicity::finite(2), Multiplicity::finite(3)};
    SUBCASE("valuation clearing both thresholds") {
        CampanaJet jet{5, {{0, false}, {4, false}}};
        CHECK(check_campana_jet(jet, mults));
    }
    SUBCASE("valuation below the multiplicity") {
        CampanaJet jet{5, {{1, false}, {0, false}}};
        CHECK(!check_campana_jet(jet, mults));
    }
    SUBCASE("jet order below the touched multiplicity") {
        CampanaJet jet{2, {{0, false}, {3, false}}};
        CHECK(!check_campana_jet(jet, mults));
    }
    SUBCASE("infinite multiplicity on a touched component is rejected") {
        std::vector<Multiplicity> bad = {Multiplicity::inf(), Multiplicity::finite(3)};
        CampanaJet jet{5, {{2, false}, {0, false}}};
        CHECK_THROWS_AS(check_campana_jet(jet, bad), std::invalid_argument);
    }
    SUBCASE("saturated valuation counts as >= n+1") {
        CampanaJet jet{5, {{6, true}, {0, false}}};
        CHECK(check_campana_jet(jet, mults));
    }
}

TEST_CASE("jet valuations from a truncated map") {
    // coordinates of a truncated arc in P^2, coefficient lists in t
    std::vector<std::vector<Rat>> coords = {
        {1, 2, 3},        // unit: valuation 0
        {0, 0, 5, 1},     // valuation 2
        {0, 0, 0, 0, 0},  // vanishes mod t^4: saturated
    };
    auto jet = jet_from_truncated_map(3, coords);
    REQUIRE(jet.valuations.size() == 3);
    CHECK(jet.valuations[0].order == 0);
    CHECK(!jet.valuations[0].saturated);
    CHECK(jet.valuations[1].order == 2);
    CHECK(jet.valuations[2].saturated);
    CHECK(jet.valuations[2].order == 4);
}
