#include "campana/campana.hpp"

#include "campana/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace campana {

bool is_klt(const CampanaStructure& s) {
    return std::none_of(s.multiplicities.begin(), s.multiplicities.end(),
                        [](const Multiplicity& m) { return m.infinite; });
}

CampanaTypeReport is_campana_type(const ContactCollection& cc, const CampanaStructure& s) {
    if (cc.fan != s.fan && !(*cc.fan == *s.fan))
        throw std::invalid_argument("is_campana_type: collection and structure on different fans");
    CampanaTypeReport report;
    const std::size_t nrays = s.fan->rays().size();
    for (std::size_t ray = 0; ray < nrays; ++ray) {
        const Multiplicity& m = s.multiplicities[ray];
        std::size_t positive_count = 0;
        for (std::size_t k = 0; k < cc.orders.size(); ++k) {
            auto it = cc.orders[k].decomposition.find(ray);
            if (it == cc.orders[k].decomposition.end() || it->second == 0) continue;
            ++positive_count;
            if (!m.infinite && it->second < m.value) {
                report.ok = false;
                report.violations.push_back(
                    {k, ray, "coefficient " + it->second.str() + " below multiplicity " + m.value.str()});
            }
        }
        if (m.infinite && positive_count > 1) {
            report.ok = false;
            for (std::size_t k = 0; k < cc.orders.size(); ++k) {
                auto it = cc.orders[k].decomposition.find(ray);
                if (it != cc.orders[k].decomposition.end() && it->second > 0)
                    report.violations.push_back(
                        {k, ray, "multiple positive contacts on an infinite-multiplicity ray"});
            }
        }
    }
    return report;
}

ContactCollection generate_campana_contacts(const CampanaStructure& s,
                                            const std::vector<Int>& per_ray_degree,
                                            const Int& p) {
    if (!is_klt(s))
        throw std::invalid_argument("generate_campana_contacts: structure must be klt");
    if (p != 0 && !is_prime(p))
        throw std::invalid_argument("generate_campana_contacts: p must be 0 or prime");
    const Fan& fan = *s.fan;
    if (per_ray_degree.size() != fan.rays().size())
        throw std::invalid_argument("generate_campana_contacts: one degree per ray required");

    // validate sum D_rho * u_rho = 0
    LatticeVector sum(fan.dim(), Int(0));
    for (std::size_t r = 0; r < fan.rays().size(); ++r)
        for (std::size_t i = 0; i < fan.dim(); ++i)
            sum[i] += per_ray_degree[r] * fan.rays()[r][i];
    if (!std::all_of(sum.begin(), sum.end(), [](const Int& e) { return e == 0; }))
        throw std::invalid_argument(
            "generate_campana_contacts: per-ray degrees do not sum to zero against the rays");

    Int m = 1;
    for (const auto& mult : s.multiplicities)
        if (mult.value > m) m = mult.value;

    ContactCollection cc;
    cc.fan = &fan;
    for (std::size_t r = 0; r < fan.rays().size(); ++r) {
        const Int& D = per_ray_degree[r];
        if (D < 2 * m + 2)
            throw std::invalid_argument("generate_campana_contacts: degree " + D.str() +
                                        " below the bound 2m+2 = " + Int(2 * m + 2).str());
        // midpoint split, shifted down until both parts are >= m and p-free
        Int t1 = (D + 1) / 2;
        bool found = false;
        while (t1 >= m && D - t1 <= D - m) {
            Int t2 = D - t1;
            if (t2 < m) break;
            bool p_ok = (p == 0) || (t1 % p != 0 && t2 % p != 0);
            if (p_ok) { found = true; break; }
            --t1;
        }
        if (!found)
            throw std::domain_error("generate_campana_contacts: no valid split of degree " +
                                    D.str() + " within [m, D-m]");
        for (const Int& t : {t1, Int(D - t1)}) {
            ContactOrder o;
            o.point.assign(fan.dim(), Int(0));
            for (std::size_t i = 0; i < fan.dim(); ++i) o.point[i] = t * fan.rays()[r][i];
            o.decomposition[r] = t;
            cc.orders.push_back(o);
        }
    }
    return cc;
}

bool check_full_rank_no_p_torsion(const ContactCollection& cc, const Int& p) {
    if (cc.orders.empty()) return false;
    const std::size_t d = cc.fan->dim();
    auto pts = cc.points();
    if (sublattice_rank(pts, d) != d) return false;
    return !has_p_torsion(quotient_torsion(pts, d), p);
}

CampanaJet jet_from_truncated_map(const Int& n,
                                  const std::vector<std::vector<Rat>>& coordinates) {
    if (n < 0) throw std::invalid_argument("jet order must be non-negative");
    CampanaJet jet;
    jet.n = n;
    for (const auto& coord : coordinates) {
        JetValuation v;
        v.saturated = true;
        for (std::size_t i = 0; i < coord.size() && Int(i) <= n; ++i) {
            if (coord[i] != 0) {
                v.order = Int(i);
                v.saturated = false;
                break;
            }
        }
        if (v.saturated) v.order = n + 1;
        jet.valuations.push_back(v);
    }
    return jet;
}

bool check_campana_jet(const CampanaJet& jet, const std::vector<Multiplicity>& mults) {
    if (jet.valuations.size() != mults.size())
        throw std::invalid_argument("check_campana_jet: one valuation per component required");
    Int max_m = 0;
    for (std::size_t i = 0; i < mults.size(); ++i) {
        const JetValuation& v = jet.valuations[i];
        bool positive = v.saturated || v.order > 0;
        if (!positive) continue;
        if (mults[i].infinite)
            throw std::invalid_argument(
                "check_campana_jet: infinite multiplicity on a positively-valued component");
        if (mults[i].value > max_m) max_m = mults[i].value;
        if (!v.saturated && v.order < mults[i].value) return false;
    }
    return jet.n >= max_m;
}

}  // namespace campana
