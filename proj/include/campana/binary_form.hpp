#pragma once

#include "campana/rational.hpp"

#include <utility>
#include <vector>

namespace campana {

/// Homogeneous form in (s, t) with exact rational coefficients.
/// coeff(a) is the coefficient of s^a t^{degree-a}. The zero form is
/// representable but rejected by operations that require a nonzero form.
class BinaryForm {
public:
    BinaryForm() : coeffs_(1, Rat(0)) {}
    explicit BinaryForm(std::vector<Rat> coeffs);

    /// Constant form of degree 0.
    static BinaryForm constant(const Rat& c) { return BinaryForm({c}); }
    /// The linear form t*s0 - s*t0 vanishing at [s0 : t0].
    static BinaryForm vanishing_at(const Rat& s0, const Rat& t0);

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& coeff(std::size_t a) const { return coeffs_[a]; }
    bool is_zero() const;

    Rat evaluate(const Rat& s, const Rat& t) const;

    BinaryForm operator*(const BinaryForm& o) const;
    BinaryForm operator*(const Rat& c) const;
    BinaryForm operator+(const BinaryForm& o) const;  // degrees must match
    BinaryForm operator-(const BinaryForm& o) const;
    bool operator==(const BinaryForm& o) const { return coeffs_ == o.coeffs_; }

    BinaryForm pow(unsigned long e) const;
    BinaryForm derivative_s() const;
    BinaryForm derivative_t() const;

    /// Order of vanishing at the projective point [s0 : t0] != [0 : 0].
    std::size_t valuation_at(const Rat& s0, const Rat& t0) const;

    /// Exact quotient; throws if the division is not exact.
    BinaryForm divide_exact(const BinaryForm& divisor) const;

private:
    std::vector<Rat> coeffs_;
};

/// gcd as binary forms (accounts for common roots at [1:0]); monic in the
/// sense that the leading nonzero coefficient is 1. Both inputs nonzero.
BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b);

bool forms_coprime(const BinaryForm& a, const BinaryForm& b);

/// Squarefree decomposition f = c * prod g_i^{m_i} with the g_i squarefree,
/// pairwise coprime, monic, and m_i distinct per factor. The root at [1:0],
/// if present, appears as the factor t (coefficients {1} at degree... the
/// form with coeffs {1, 0} reversed), like any other factor.
struct SquarefreeFactor {
    BinaryForm base;
    std::size_t multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const BinaryForm& f);

/// True iff f has no repeated roots in P^1 (over the algebraic closure).
bool is_squarefree(const BinaryForm& f);

/// Number of distinct roots of f in P^1 over the algebraic closure.
std::size_t distinct_root_count(const BinaryForm& f);

}  // namespace campana
