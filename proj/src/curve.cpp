#include "campana/curve.hpp"

#include "campana/snf.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace campana {

namespace {

void validate_contacts(std::size_t d, const ContactMatrix& contacts, Int& beta_out) {
    if (contacts.empty()) throw std::invalid_argument("contact matrix: no markings");
    for (const auto& row : contacts) {
        if (row.size() != d + 1)
            throw std::invalid_argument("contact matrix: rows must have d+1 entries");
        for (const auto& c : row)
            if (c < 0) throw std::invalid_argument("contact matrix: negative entry");
    }
    Int beta = 0;
    for (const auto& row : contacts) beta += row[0];
    for (std::size_t i = 1; i <= d; ++i) {
        Int col = 0;
        for (const auto& row : contacts) col += row[i];
        if (col != beta)
            throw std::invalid_argument("contact matrix: column sums differ (no common degree)");
    }
    if (beta < 1) throw std::invalid_argument("contact matrix: degree must be >= 1");
    beta_out = beta;
}

unsigned long to_ulong(const Int& v) { return v.convert_to<unsigned long>(); }

// Integer inverse of a unimodular matrix.
IntMat unimodular_inverse(const IntMat& u) {
    const std::size_t n = u.rows();
    std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(u(i, j));
        aug[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("unimodular_inverse: singular matrix");
        std::swap(aug[col], aug[piv]);
        Rat p = aug[col][col];
        for (auto& e : aug[col]) e /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            Rat f = aug[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    IntMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (denominator(aug[i][n + j]) != 1)
                throw std::invalid_argument("unimodular_inverse: matrix not unimodular");
            inv(i, j) = numerator(aug[i][n + j]);
        }
    return inv;
}

Int mod_norm(Int a, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    return a;
}

Int mod_inverse(const Int& a, const Int& p) {
    // extended Euclid
    Int old_r = mod_norm(a, p), r = p;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw std::domain_error("mod_inverse: not invertible");
    return mod_norm(old_s, p);
}

}  // namespace

std::size_t matrix_rank_mod(const std::vector<std::vector<Rat>>& m, const Int& p) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    if (p == 0) {
        std::vector<std::vector<Rat>> a = m;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols && rank < rows; ++col) {
            std::size_t piv = rank;
            while (piv < rows && a[piv][col] == 0) ++piv;
            if (piv == rows) continue;
            std::swap(a[rank], a[piv]);
            for (std::size_t i = rank + 1; i < rows; ++i) {
                if (a[i][col] == 0) continue;
                Rat f = a[i][col] / a[rank][col];
                for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
            }
            ++rank;
        }
        return rank;
    }
    if (!is_prime(p)) throw std::invalid_argument("matrix_rank_mod: p must be 0 or prime");
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Int den = denominator(m[i][j]);
            if (den % p == 0)
                throw std::domain_error("matrix_rank_mod: denominator divisible by p");
            a[i][j] = mod_norm(numerator(m[i][j]) * mod_inverse(den, p), p);
        }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        Int inv = mod_inverse(a[rank][col], p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            Int f = mod_norm(a[i][col] * inv, p);
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] = mod_norm(a[i][j] - f * a[rank][j], p);
        }
        ++rank;
    }
    return rank;
}

RationalCurvePd build_curve(std::size_t d, const std::vector<P1Point>& markings,
                            const ContactMatrix& contacts, const std::vector<Rat>& x_inf) {
    if (d < 1) throw std::invalid_argument("build_curve: d >= 1 required");
    Int beta;
    validate_contacts(d, contacts, beta);
    if (markings.size() != contacts.size())
        throw std::invalid_argument("build_curve: one marking per contact row required");
    if (x_inf.size() != d + 1)
        throw std::invalid_argument("build_curve: x_inf must have d+1 coordinates");
    for (const auto& c : x_inf)
        if (c == 0) throw std::invalid_argument("build_curve: x_inf must avoid the boundary");
    std::set<Rat> seen;
    for (const auto& m : markings) {
        if (m.t == 0) throw std::invalid_argument("build_curve: marking at [1:0]");
        if (!seen.insert(m.s / m.t).second)
            throw std::invalid_argument("build_curve: repeated marking");
    }

    RationalCurvePd curve;
    curve.d = d;
    curve.beta = beta;
    curve.markings = markings;
    curve.contacts = contacts;
    for (std::size_t i = 0; i <= d; ++i) {
        // f*x_i(b_inf) = lambda_i * prod (-t_k)^{c_{k,i}} = x_inf_i
        Rat denom = 1;
        for (std::size_t k = 0; k < markings.size(); ++k)
            denom *= pow_rat(-markings[k].t, contacts[k][i]);
        Rat lambda = x_inf[i] / denom;
        BinaryForm form = BinaryForm::constant(lambda);
        for (std::size_t k = 0; k < markings.size(); ++k)
            form = form * BinaryForm::vanishing_at(markings[k].s, markings[k].t)
                              .pow(to_ulong(contacts[k][i]));
        curve.lambda.push_back(lambda);
        curve.forms.push_back(std::move(form));
    }
    return curve;
}

std::vector<Rat> evaluate(const RationalCurvePd& curve, const P1Point& point) {
    if (point.s == 0 && point.t == 0) throw std::invalid_argument("evaluate: [0:0]");
    std::vector<Rat> out;
    out.reserve(curve.forms.size());
    for (const auto& f : curve.forms) out.push_back(f.evaluate(point.s, point.t));
    if (std::all_of(out.begin(), out.end(), [](const Rat& c) { return c == 0; }))
        throw std::domain_error("evaluate: all coordinates vanish (degenerate curve)");
    return out;
}

TangencyReport verify_tangency(const RationalCurvePd& curve,
                               const std::vector<Multiplicity>* mults) {
    TangencyReport report;
    const std::size_t n = curve.markings.size();
    report.table.assign(n, std::vector<Int>(curve.d + 1, Int(0)));
    report.matches = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i <= curve.d; ++i) {
            std::size_t val =
                curve.forms[i].valuation_at(curve.markings[k].s, curve.markings[k].t);
            report.table[k][i] = Int(val);
            if (report.table[k][i] != curve.contacts[k][i]) {
                report.matches = false;
                report.mismatches.push_back("marking " + std::to_string(k) + ", hyperplane " +
                                            std::to_string(i) + ": valuation " +
                                            std::to_string(val) + " != declared " +
                                            curve.contacts[k][i].str());
            }
        }

    BinaryForm g = curve.forms[0];
    for (std::size_t i = 1; i <= curve.d; ++i) g = form_gcd(g, curve.forms[i]);
    report.nondegenerate = (g.degree() == 0);
    if (!report.nondegenerate)
        report.mismatches.push_back("forms share a common root (image lies in the boundary)");

    if (mults) {
        if (mults->size() != curve.d + 1)
            throw std::invalid_argument("verify_tangency: one multiplicity per hyperplane");
        bool ok = true;
        for (std::size_t i = 0; i <= curve.d; ++i) {
            const Multiplicity& m = (*mults)[i];
            std::size_t positive = 0;
            for (std::size_t k = 0; k < n; ++k) {
                const Int& c = report.table[k][i];
                if (c == 0) continue;
                ++positive;
                if (!m.infinite && c < m.value) ok = false;
            }
            if (m.infinite && positive > 1) ok = false;
        }
        report.campana_verdict = ok;
    }
    return report;
}

ContactMatrix contact_matrix_from_collection(const ContactCollection& cc) {
    if (!cc.fan) throw std::invalid_argument("contact_matrix_from_collection: no fan");
    const std::size_t d = cc.fan->dim();
    if (cc.fan->rays().size() != d + 1)
        throw std::invalid_argument("contact_matrix_from_collection: fan is not a P^d fan");
    ContactMatrix m(cc.orders.size(), std::vector<Int>(d + 1, Int(0)));
    for (std::size_t k = 0; k < cc.orders.size(); ++k)
        for (const auto& [ray, c] : cc.orders[k].decomposition) m[k][ray] = c;
    return m;
}

IntMat exponent_matrix(std::size_t d, const ContactMatrix& contacts) {
    Int beta;
    validate_contacts(d, contacts, beta);
    IntMat a(d, contacts.size());
    for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t k = 0; k < contacts.size(); ++k)
            a(i - 1, k) = contacts[k][i] - contacts[k][0];
    return a;
}

TwoPointSolution two_point_solve(std::size_t d, const ContactMatrix& contacts,
                                 const std::vector<Rat>& x, const std::vector<Rat>& y,
                                 bool allow_numeric) {
    IntMat a = exponent_matrix(d, contacts);
    const std::size_t n = a.cols();
    if (rank_over_q(a) != d)
        throw std::invalid_argument(
            "two_point_solve: difference matrix has rank < d (full-rank hypothesis fails)");
    if (x.size() != d + 1 || y.size() != d + 1)
        throw std::invalid_argument("two_point_solve: points need d+1 coordinates");
    for (std::size_t i = 0; i <= d; ++i)
        if (x[i] == 0 || y[i] == 0)
            throw std::invalid_argument("two_point_solve: points must lie in the torus");

    std::vector<Rat> target(d);  // (y_i/y_0)/(x_i/x_0)
    for (std::size_t i = 1; i <= d; ++i) target[i - 1] = (y[i] / y[0]) / (x[i] / x[0]);

    auto snf = smith_normal_form(a);
    IntMat u_inv = unimodular_inverse(snf.U);
    IntMat v_inv = unimodular_inverse(snf.V);

    // transformed targets r'_i = prod_j target_j^{Uinv[i][j]}
    std::vector<Rat> rprime(d, Rat(1));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            rprime[i] *= pow_rat(target[j], u_inv(i, j));

    TwoPointSolution sol;
    std::vector<Rat> z(n, Rat(1));
    bool exact_ok = true;
    for (std::size_t i = 0; i < d; ++i) {
        unsigned long di = to_ulong(snf.D(i, i));
        auto root = exact_nth_root(rprime[i], di);
        if (root) {
            z[i] = *root;
        } else {
            exact_ok = false;
            sol.obstruction = "invariant factor " + snf.D(i, i).str() +
                              " requires an irrational root of " + rat_to_string(rprime[i]);
            break;
        }
    }

    auto s_from_z = [&](const std::vector<Rat>& zz) {
        std::vector<Rat> s(n, Rat(1));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (v_inv(k, i) != 0) s[k] *= pow_rat(zz[i], v_inv(k, i));
        return s;
    };

    if (exact_ok) {
        // move along the kernel of A until markings are distinct
        for (int attempt = 0; attempt < 64; ++attempt) {
            std::vector<Rat> zz = z;
            for (std::size_t j = d; j < n; ++j)
                zz[j] = pow_rat(Rat(2), Int(attempt) * Int(j - d + 1));
            auto s = s_from_z(zz);
            std::set<Rat> seen(s.begin(), s.end());
            if (seen.size() == n && seen.count(Rat(0)) == 0) {
                sol.exact = true;
                sol.markings_exact = s;
                return sol;
            }
        }
        throw std::domain_error("two_point_solve: could not separate markings along the kernel");
    }

    if (!allow_numeric) return sol;  // exact mode infeasible; obstruction reported

    // numeric fallback
    std::vector<double> zd(n, 1.0);
    for (std::size_t i = 0; i < d; ++i) {
        double r = numerator(rprime[i]).convert_to<double>() /
                   denominator(rprime[i]).convert_to<double>();
        unsigned long di = to_ulong(snf.D(i, i));
        if (r < 0 && di % 2 == 0) {
            sol.obstruction += "; no real root of even order";
            return sol;
        }
        zd[i] = (r < 0 ? -1.0 : 1.0) * std::pow(std::fabs(r), 1.0 / double(di));
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<double> zz = zd;
        for (std::size_t j = d; j < n; ++j)
            zz[j] = std::pow(2.0, double(attempt) * double(j - d + 1));
        std::vector<double> s(n, 1.0);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                s[k] *= std::pow(zz[i], double(v_inv(k, i).convert_to<long>()));
        std::set<double> seen(s.begin(), s.end());
        if (seen.size() != n || seen.count(0.0)) continue;
        double residual = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            double prod = 1.0;
            for (std::size_t k = 0; k < n; ++k)
                prod *= std::pow(s[k], double(a(i, k).convert_to<long>()));
            double want = numerator(target[i]).convert_to<double>() /
                          denominator(target[i]).convert_to<double>();
            double rel = std::fabs(prod - want) / std::max(1.0, std::fabs(want));
            residual = std::max(residual, rel);
        }
        sol.markings_numeric = s;
        sol.residual = residual;
        return sol;
    }
    throw std::domain_error("two_point_solve: numeric fallback could not separate markings");
}

std::vector<std::vector<Rat>> jacobian_entries(std::size_t d, const ContactMatrix& contacts,
                                               const std::vector<Rat>& markings,
                                               const std::vector<Rat>& lambda) {
    IntMat a = exponent_matrix(d, contacts);
    const std::size_t n = a.cols();
    if (markings.size() != n)
        throw std::invalid_argument("jacobian_entries: one marking per contact row required");
    std::set<Rat> seen;
    for (const auto& s : markings) {
        if (s == 0) throw std::invalid_argument("jacobian_entries: marking at zero");
        if (!seen.insert(s).second)
            throw std::invalid_argument("jacobian_entries: repeated marking");
    }
    std::vector<Rat> lam(d);
    if (lambda.size() == d + 1) {
        for (std::size_t i = 0; i < d; ++i) lam[i] = lambda[i + 1] / lambda[0];
    } else if (lambda.size() == d) {
        lam = lambda;
    } else {
        throw std::invalid_argument("jacobian_entries: lambda needs d (or d+1) entries");
    }
    for (const auto& l : lam)
        if (l == 0) throw std::invalid_argument("jacobian_entries: zero torus scaling");

    const std::size_t cols = d + n + 2;
    std::vector<std::vector<Rat>> jac(2 * d, std::vector<Rat>(cols, Rat(0)));
    for (std::size_t i = 0; i < d; ++i) {
        Rat monomial = 1;  // prod_k s_k^{A_ik}
        for (std::size_t k = 0; k < n; ++k) monomial *= pow_rat(markings[k], a(i, k));
        // x-row
        jac[i][i] = monomial;  // d x_i / d lambda_i
        Rat log_deriv_sum = 0;
        for (std::size_t k = 0; k < n; ++k) {
            jac[i][d + k] = lam[i] * monomial * Rat(a(i, k)) / markings[k];
            log_deriv_sum += Rat(a(i, k)) / markings[k];
        }
        jac[i][d + n] = lam[i] * monomial * log_deriv_sum;  // d x_i / d s~
        // y-row
        jac[d + i][i] = 1;  // the identity block
        Rat weighted_sum = 0;
        for (std::size_t k = 0; k < n; ++k) weighted_sum += Rat(a(i, k)) * markings[k];
        jac[d + i][d + n + 1] = lam[i] * weighted_sum;  // d y_i / d t~
    }
    return jac;
}

std::size_t jacobian_rank(std::size_t d, const ContactMatrix& contacts,
                          const std::vector<Rat>& markings, const std::vector<Rat>& lambda,
                          const Int& p) {
    return matrix_rank_mod(jacobian_entries(d, contacts, markings, lambda), p);
}

std::size_t separability_rank(std::size_t d, const ContactMatrix& contacts, const Int& p) {
    IntMat a = exponent_matrix(d, contacts);
    std::vector<std::vector<Rat>> m(a.rows(), std::vector<Rat>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = Rat(a(i, j));
    return matrix_rank_mod(m, p);
}

}  // namespace campana
