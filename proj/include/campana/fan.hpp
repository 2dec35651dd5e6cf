#pragma once

#include "campana/matrix.hpp"

#include <map>
#include <optional>
#include <vector>

namespace campana {

/// Simplicial fan: primitive ray generators plus maximal cones given as
/// index sets into the ray list. Construction validates primitivity and
/// linear independence of each cone's rays.
class Fan {
public:
    Fan(std::size_t dim, std::vector<LatticeVector> rays,
        std::vector<std::vector<std::size_t>> max_cones);

    std::size_t dim() const { return dim_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const std::vector<std::vector<std::size_t>>& max_cones() const { return max_cones_; }

    bool operator==(const Fan& o) const {
        return dim_ == o.dim_ && rays_ == o.rays_ && max_cones_ == o.max_cones_;
    }

private:
    std::size_t dim_;
    std::vector<LatticeVector> rays_;
    std::vector<std::vector<std::size_t>> max_cones_;
};

/// Fan of P^d: rays e_1..e_d and -(e_1+...+e_d), one maximal cone per
/// omitted ray.
Fan projective_space_fan(std::size_t d);

/// Every maximal cone is unimodular (full-dimensional case) or extends to a
/// lattice basis (checked via all-ones SNF invariant factors).
bool is_smooth(const Fan& fan);

/// Two-cones-per-wall criterion; requires all maximal cones full-dimensional.
bool is_complete(const Fan& fan);

/// A nonzero lattice point c together with its unique presentation
/// c = sum c_rho * u_rho over the rays of the minimal cone containing it.
struct ContactOrder {
    LatticeVector point;
    std::map<std::size_t, Int> decomposition;  // ray index -> positive coefficient
};

/// Requires a smooth fan and c != 0; throws std::domain_error when c lies
/// outside the support of the fan.
ContactOrder decompose_contact_order(const Fan& fan, const LatticeVector& c);

/// Ordered multiset of contact orders on a common fan.
struct ContactCollection {
    const Fan* fan = nullptr;
    std::vector<ContactOrder> orders;

    std::vector<LatticeVector> points() const {
        std::vector<LatticeVector> out;
        out.reserve(orders.size());
        for (const auto& o : orders) out.push_back(o.point);
        return out;
    }
};

/// Builds a collection by decomposing each point against the fan.
ContactCollection make_contact_collection(const Fan& fan,
                                          const std::vector<LatticeVector>& points);

/// True iff the lattice-point sum of all contact orders vanishes.
bool check_balancing(const ContactCollection& cc);

struct DivisorDegrees {
    std::vector<Int> totals;       // per ray, fan order
    bool uniform = false;          // all totals equal
    std::optional<Int> beta;       // common value when uniform
};

DivisorDegrees divisor_degrees(const ContactCollection& cc);

}  // namespace campana
