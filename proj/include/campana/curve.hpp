#pragma once

#include "campana/binary_form.hpp"
#include "campana/campana.hpp"
#include "campana/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace campana {

/// A point of P^1 as an exact pair [s : t].
struct P1Point {
    Rat s;
    Rat t;
};

/// Contact matrix convention: contacts[k][i] = c_{k,i}, the order of
/// tangency of marking k with the hyperplane x_i = 0; k = 0..n-1,
/// i = 0..d. Every column sums to the common degree beta.
using ContactMatrix = std::vector<std::vector<Int>>;

/// Explicit rational curve in P^d: d+1 forms of common degree beta, one per
/// homogeneous coordinate, each a scaled product of powers of the linear
/// forms vanishing at the markings.
struct RationalCurvePd {
    std::size_t d = 0;
    Int beta = 0;
    std::vector<BinaryForm> forms;   // size d+1
    std::vector<P1Point> markings;   // size n, all distinct, t != 0
    ContactMatrix contacts;          // n x (d+1)
    std::vector<Rat> lambda;         // size d+1, all nonzero
};

/// forms[i] = lambda_i * prod_k (t*s_k - s*t_k)^{c_{k,i}}, with lambda solved
/// so that the curve passes through x_inf (all coordinates nonzero) at [1:0].
RationalCurvePd build_curve(std::size_t d, const std::vector<P1Point>& markings,
                            const ContactMatrix& contacts, const std::vector<Rat>& x_inf);

/// Exact evaluation; the result is a homogeneous coordinate vector, never
/// all-zero.
std::vector<Rat> evaluate(const RationalCurvePd& curve, const P1Point& point);

struct TangencyReport {
    ContactMatrix table;      // recomputed valuations, same shape as contacts
    bool matches = false;     // table == curve.contacts
    bool nondegenerate = false;  // gcd of forms is 1
    std::vector<std::string> mismatches;
    std::optional<bool> campana_verdict;  // set when a structure was supplied
};

/// Recomputes every (marking, hyperplane) tangency order by exact division
/// and certifies non-degeneracy. When multiplicities are supplied (one per
/// hyperplane x_i = 0), also reports the Campana-type verdict of the table.
TangencyReport verify_tangency(const RationalCurvePd& curve,
                               const std::vector<Multiplicity>* mults = nullptr);

/// Difference matrix A[i][k] = c_{k,i} - c_{k,0}, i = 1..d.
IntMat exponent_matrix(std::size_t d, const ContactMatrix& contacts);

/// Rows c_{k,i} of a collection on the P^d fan (rays rho_0, e_1..e_d
/// in fan order), one row per marking.
ContactMatrix contact_matrix_from_collection(const ContactCollection& cc);

struct TwoPointSolution {
    bool exact = false;
    std::vector<Rat> markings_exact;      // s_k values, t_k = -1 (exact mode)
    std::vector<double> markings_numeric; // numeric fallback
    double residual = 0.0;                // max relative residual (numeric mode)
    std::string obstruction;              // which invariant factor blocks exact mode
};

/// Solves prod_k s_k^{A[i][k]} = (y_i/y_0) / (x_i/x_0) for distinct nonzero
/// markings with t_k = -1. Exact when every required root exists in Q;
/// otherwise a floating-point solution with its residual. Throws when the
/// difference matrix is rank deficient.
TwoPointSolution two_point_solve(std::size_t d, const ContactMatrix& contacts,
                                 const std::vector<Rat>& x, const std::vector<Rat>& y,
                                 bool allow_numeric = true);

/// Rank of the 2d x (d+n+2) Jacobian of the two-point evaluation map at
/// (b_0, u, b_inf), with markings (s_k, -1) and torus scalings lambda.
/// Exact over Q when p = 0, over F_p otherwise.
std::size_t jacobian_rank(std::size_t d, const ContactMatrix& contacts,
                          const std::vector<Rat>& markings, const std::vector<Rat>& lambda,
                          const Int& p);

/// Entries of the Jacobian above, row-major, as exact rationals
/// (column order: lambda_1..lambda_d, s_1..s_n, s, t).
std::vector<std::vector<Rat>> jacobian_entries(std::size_t d, const ContactMatrix& contacts,
                                               const std::vector<Rat>& markings,
                                               const std::vector<Rat>& lambda);

/// Rank of the difference matrix over Q (p = 0) or F_p.
std::size_t separability_rank(std::size_t d, const ContactMatrix& contacts, const Int& p);

/// Rank of a rational matrix over Q or, for p > 0, over F_p (denominators
/// must be prime to p).
std::size_t matrix_rank_mod(const std::vector<std::vector<Rat>>& m, const Int& p);

}  // namespace campana
