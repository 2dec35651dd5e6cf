#pragma once

#include "campana/fan.hpp"

#include <string>
#include <vector>

namespace campana {

/// A boundary multiplicity: an integer >= 1 or infinity.
struct Multiplicity {
    bool infinite = false;
    Int value = 1;  // ignored when infinite

    static Multiplicity inf() { return {true, 0}; }
    static Multiplicity finite(Int m) {
        if (m < 1) throw std::invalid_argument("multiplicity must be >= 1");
        return {false, std::move(m)};
    }

    /// Weight epsilon = 1 - 1/m (1 for infinity).
    Rat weight() const { return infinite ? Rat(1) : Rat(1) - Rat(1, value); }

    bool operator==(const Multiplicity& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

/// Per-ray multiplicities on a fan's toric boundary.
struct CampanaStructure {
    const Fan* fan = nullptr;
    std::vector<Multiplicity> multiplicities;  // one per ray, fan order

    CampanaStructure(const Fan& f, std::vector<Multiplicity> m)
        : fan(&f), multiplicities(std::move(m)) {
        if (multiplicities.size() != fan->rays().size())
            throw std::invalid_argument("CampanaStructure: one multiplicity per ray required");
    }
};

bool is_klt(const CampanaStructure& s);

struct CampanaTypeViolation {
    std::size_t marking;  // index into collection
    std::size_t ray;
    std::string reason;
};

struct CampanaTypeReport {
    bool ok = true;
    std::vector<CampanaTypeViolation> violations;
};

/// Checks: finite m_i -> every coefficient c_{k,i} is 0 or >= m_i;
/// infinite m_i -> at most one marking with positive coefficient.
CampanaTypeReport is_campana_type(const ContactCollection& cc, const CampanaStructure& s);

/// Deterministic two-markings-per-ray generator: splits each per-ray degree
/// D as t1 + t2 with both parts >= max finite multiplicity and coprime to p.
/// Requires sum D_rho * u_rho = 0, D_rho >= 2m+2, klt structure, p = 0 or prime.
ContactCollection generate_campana_contacts(const CampanaStructure& s,
                                            const std::vector<Int>& per_ray_degree,
                                            const Int& p);

/// Conjunction of full sublattice rank and absence of p-torsion.
bool check_full_rank_no_p_torsion(const ContactCollection& cc, const Int& p);

/// Truncated-arc data: per-boundary-component t-adic order of the pulled-back
/// ideal. saturated means the order is only known to be >= n+1.
struct JetValuation {
    Int order = 0;
    bool saturated = false;
};

struct CampanaJet {
    Int n = 0;  // jet order
    std::vector<JetValuation> valuations;  // one per boundary component
};

/// Valuations of a truncated polynomial map into P^d against the coordinate
/// hyperplanes: order = lowest nonzero t-power of each coordinate, saturated
/// when the coordinate vanishes mod t^{n+1}.
CampanaJet jet_from_truncated_map(const Int& n,
                                  const std::vector<std::vector<Rat>>& coordinates);

/// True iff n >= max multiplicity over positively-valued components and every
/// positive valuation meets its component's multiplicity.
bool check_campana_jet(const CampanaJet& jet, const std::vector<Multiplicity>& mults);

}  // namespace campana
