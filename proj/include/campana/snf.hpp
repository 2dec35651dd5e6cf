#pragma once

#include "campana/matrix.hpp"

#include <vector>

namespace campana {

/// A = U * D * V with U, V unimodular and D diagonal with non-negative
/// entries satisfying d_1 | d_2 | ... ; zeros trail.
struct SnfDecomposition {
    IntMat U;
    IntMat D;
    IntMat V;

    /// Nonzero diagonal entries.
    std::vector<Int> diagonal() const;
    std::size_t rank() const { return diagonal().size(); }
};

SnfDecomposition smith_normal_form(const IntMat& a);

/// Rank of the subgroup of Z^dim generated by the given vectors (0 if empty).
std::size_t sublattice_rank(const std::vector<LatticeVector>& vectors, std::size_t dim);

/// Invariant factors > 1 of the torsion part of Z^dim / <vectors>.
std::vector<Int> quotient_torsion(const std::vector<LatticeVector>& vectors, std::size_t dim);

/// True iff p > 0 and p divides some invariant factor. p must be 0 or prime.
bool has_p_torsion(const std::vector<Int>& factors, const Int& p);

}  // namespace campana
