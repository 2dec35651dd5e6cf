#pragma once

#include "campana/rational.hpp"

namespace campana {

/// chi(f* T_X) + 3g - 3 + n for a genus-g map with n markings.
inline Int expected_dimension(const Int& genus, const Int& markings, const Int& chi) {
    return chi + 3 * genus - 3 + markings;
}

/// Genus-0 toric convenience form: the tangent bundle is trivial on the
/// torus, so chi = dim X and the count is dim X + n - 3.
inline Int toric_expected_dimension(const Int& dim_x, const Int& markings) {
    return dim_x + markings - 3;
}

}  // namespace campana
