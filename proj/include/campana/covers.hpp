#pragma once

#include "campana/binary_form.hpp"
#include "campana/campana.hpp"

#include <string>
#include <vector>

namespace campana {

/// Orbifold structure on P^1: distinct boundary points with multiplicities
/// in {2, 3, ...} or infinity.
struct P1Orbifold {
    std::vector<std::pair<Rat, Rat>> points;  // [s : t], pairwise distinct
    std::vector<Multiplicity> multiplicities;
};

struct KltFanoResult {
    bool fano = false;
    Rat degree;  // deg(-K - Delta_eps) = 2 - sum eps_i
};

/// Fano iff the weighted boundary degree stays below 2.
KltFanoResult klt_fano_check(const std::vector<Multiplicity>& mults);

/// The dominating maximal multiplicity tuple whose Campana curves remain
/// Campana for the input: (m,m), (2,2,m), or (2,3,5).
enum class MaximalCaseKind { TwoPoints, TwoTwoM, Icosahedral };
struct MaximalCase {
    MaximalCaseKind kind;
    Int m = 0;  // the parameter for TwoPoints / TwoTwoM
    std::vector<Int> multiplicities() const;
};

MaximalCase maximal_cases(const std::vector<Int>& mults);

/// Ramification partition profile of a degree-n cover of P^1.
struct BranchPoint {
    Rat a, b;                   // branch value [a : b]
    std::vector<Int> partition; // parts sum to n
};

struct BranchData {
    Int degree = 0;
    std::vector<BranchPoint> points;
};

struct RiemannHurwitz {
    Int euler;     // 2 - 2g
    Int genus;
    bool consistent = false;  // genus is a non-negative integer
};

/// 2 - 2g = 2n - sum (e - 1) over all parts of all partitions.
RiemannHurwitz riemann_hurwitz(const BranchData& branch);

/// A degree-n self-cover of P^1 as a pair of coprime forms, with its
/// certified branch data.
struct OrbifoldCover {
    BinaryForm numerator;
    BinaryForm denominator;
    BranchData branch;
    std::string syzygy_note;  // icosahedral only: the verified sign convention
};

/// [s:t] -> [s^m : t^m]; totally ramified over [1:0] and [0:1].
OrbifoldCover cyclic_cover(const Int& m, const Int& characteristic = 0);

/// [s:t] -> [s^{2m} + t^{2m} : 2 s^m t^m]; degree 2m, branch data
/// (2^m), (2^m), (m, m).
OrbifoldCover dihedral_cover(const Int& m, const Int& characteristic = 0);

/// Degree-60 quotient by the icosahedral rotation group, built from the
/// Klein forms of degrees 12, 20, 30; branch data (5^12), (3^20), (2^30).
OrbifoldCover icosahedral_cover(const Int& characteristic = 0);

/// The classical Klein forms: f of degree 12 (vertices), its normalized
/// Hessian H of degree 20, and T of degree 30.
BinaryForm klein_f();
BinaryForm klein_h();
BinaryForm klein_t();

/// n*(2 - b) - (2 - r) for a degree-n cover with b boundary points upstairs
/// pulled back to r markings.
Int log_normal_degree(const Int& cover_degree, const Int& boundary_count,
                      const Int& marking_count);

struct BranchCertificate {
    bool ok = false;
    std::vector<std::string> issues;
    BranchData computed;
};

/// Recomputes the geometric ramification partition over each claimed branch
/// value by exact squarefree factorization and checks that no ramification
/// occurs elsewhere (Wronskian support check).
BranchCertificate verify_branch_data(const BinaryForm& num, const BinaryForm& den,
                                     const BranchData& claimed);

}  // namespace campana
