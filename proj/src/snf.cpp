#include "campana/snf.hpp"

#include <stdexcept>

namespace campana {

std::vector<Int> SnfDecomposition::diagonal() const {
    std::vector<Int> out;
    const std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (D(i, i) != 0) out.push_back(D(i, i));
    return out;
}

namespace {

// Row/column transforms mirrored into U^-1 (as row ops on an identity that we
// later invert implicitly: we instead accumulate U and V directly by applying
// the *inverse* elementary operation on the opposite side).
struct Reducer {
    IntMat a;   // working copy, becomes D
    IntMat u;   // accumulates so that original = u * a * v at all times
    IntMat v;

    explicit Reducer(const IntMat& m)
        : a(m), u(IntMat::identity(m.rows())), v(IntMat::identity(m.cols())) {}

    // a: row i -= q * row j   =>   u: col j += q * col i
    void row_sub(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) -= q * a(j, k);
        for (std::size_t k = 0; k < u.rows(); ++k) u(k, j) += q * u(k, i);
    }
    void col_sub(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < a.rows(); ++k) a(k, i) -= q * a(k, j);
        for (std::size_t k = 0; k < v.cols(); ++k) v(j, k) += q * v(i, k);
    }
    void row_swap(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < u.rows(); ++k) std::swap(u(k, i), u(k, j));
    }
    void col_swap(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
        for (std::size_t k = 0; k < v.cols(); ++k) std::swap(v(i, k), v(j, k));
    }
    void row_negate(std::size_t i) {
        for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) = -a(i, k);
        for (std::size_t k = 0; k < u.rows(); ++k) u(k, i) = -u(k, i);
    }
};

}  // namespace

SnfDecomposition smith_normal_form(const IntMat& input) {
    Reducer r(input);
    IntMat& a = r.a;
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t steps = std::min(m, n);

    for (std::size_t t = 0; t < steps; ++t) {
        // find minimal-|entry| pivot in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (a(i, j) == 0) continue;
                if (!found || abs_int(a(i, j)) < abs_int(a(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        r.row_swap(t, pi);
        r.col_swap(t, pj);

        // clear row t and column t, re-pivoting on remainders as they appear
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                r.row_sub(i, t, q);
                if (a(i, t) != 0) {
                    r.row_swap(t, i);  // remainder is strictly smaller
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                r.col_sub(j, t, q);
                if (a(t, j) != 0) {
                    r.col_swap(t, j);
                    clean = false;
                }
            }
        }

        // enforce divisibility: pivot must divide the whole trailing block
        for (std::size_t i = t + 1; i < m; ++i)
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(i, j) % a(t, t) == 0) continue;
                // fold row i into the pivot position and redo this step
                r.row_sub(t, i, Int(-1));
                --t;
                i = m;
                break;
            }
    }

    for (std::size_t t = 0; t < steps; ++t)
        if (a(t, t) < 0) r.row_negate(t);

    return SnfDecomposition{r.u, r.a, r.v};
}

std::size_t sublattice_rank(const std::vector<LatticeVector>& vectors, std::size_t dim) {
    if (vectors.empty()) return 0;
    return rank_over_q(rows_from_vectors(vectors, dim));
}

std::vector<Int> quotient_torsion(const std::vector<LatticeVector>& vectors, std::size_t dim) {
    IntMat m = rows_from_vectors(vectors, dim);
    auto diag = smith_normal_form(m).diagonal();
    std::vector<Int> out;
    for (const auto& d : diag)
        if (d > 1) out.push_back(d);
    return out;
}

bool has_p_torsion(const std::vector<Int>& factors, const Int& p) {
    if (p == 0) return false;
    if (p < 0 || !is_prime(p))
        throw std::invalid_argument("has_p_torsion: p must be 0 or prime");
    for (const auto& f : factors)
        if (f % p == 0) return true;
    return false;
}

}  // namespace campana
