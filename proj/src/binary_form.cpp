#include "campana/binary_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace campana {

namespace {

// Univariate polynomials in u = s/t, coeff[i] the coefficient of u^i.
using UPoly = std::vector<Rat>;

UPoly trim(UPoly p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

bool upoly_zero(const UPoly& p) { return p.size() == 1 && p[0] == 0; }

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return trim(r);
}

// Returns {quotient, remainder}.
std::pair<UPoly, UPoly> upoly_divmod(UPoly a, const UPoly& b) {
    if (upoly_zero(b)) throw std::domain_error("polynomial division by zero");
    UPoly q(1, Rat(0));
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (!upoly_zero(a) && a.size() >= b.size()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a = trim(a);
    }
    return {trim(q), a};
}

UPoly upoly_derivative(const UPoly& p) {
    if (p.size() == 1) return UPoly(1, Rat(0));
    UPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = Rat(i) * p[i];
    return trim(r);
}

UPoly upoly_monic(UPoly p) {
    if (upoly_zero(p)) return p;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    a = trim(a);
    b = trim(b);
    while (!upoly_zero(b)) {
        UPoly r = upoly_divmod(a, b).second;
        a = b;
        b = r;
    }
    return upoly_monic(a);
}

UPoly dehomogenize(const BinaryForm& f) { return trim(UPoly(f.coeffs())); }

// multiplicity of the root [1:0]
std::size_t t_order(const BinaryForm& f) {
    return f.degree() - (dehomogenize(f).size() - 1);
}

BinaryForm from_upoly(const UPoly& p, std::size_t form_degree) {
    if (p.size() - 1 > form_degree)
        throw std::invalid_argument("upoly degree exceeds form degree");
    std::vector<Rat> coeffs(form_degree + 1, Rat(0));
    for (std::size_t i = 0; i < p.size(); ++i) coeffs[i] = p[i];
    return BinaryForm(std::move(coeffs));
}

}  // namespace

BinaryForm::BinaryForm(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("BinaryForm: empty coefficient list");
}

BinaryForm BinaryForm::vanishing_at(const Rat& s0, const Rat& t0) {
    if (s0 == 0 && t0 == 0)
        throw std::invalid_argument("vanishing_at: [0:0] is not a point of P^1");
    // t*s0 - s*t0: coeff of s^0 t^1 is s0, coeff of s^1 t^0 is -t0
    return BinaryForm({s0, -t0});
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

Rat BinaryForm::evaluate(const Rat& s, const Rat& t) const {
    // Horner in s with powers of t
    Rat result = 0;
    Rat tp = 1;
    std::vector<Rat> tpow(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        tpow[i] = tp;
        tp *= t;
    }
    Rat sp = 1;
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        result += coeffs_[a] * sp * tpow[coeffs_.size() - 1 - a];
        sp *= s;
    }
    return result;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    std::vector<Rat> r(degree() + o.degree() + 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return BinaryForm(std::move(r));
}

BinaryForm BinaryForm::operator*(const Rat& c) const {
    std::vector<Rat> r = coeffs_;
    for (auto& e : r) e *= c;
    return BinaryForm(std::move(r));
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (degree() != o.degree())
        throw std::invalid_argument("BinaryForm: degree mismatch in sum");
    std::vector<Rat> r = coeffs_;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.coeffs_[i];
    return BinaryForm(std::move(r));
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
    return *this + (o * Rat(-1));
}

BinaryForm BinaryForm::pow(unsigned long e) const {
    BinaryForm result = BinaryForm::constant(1);
    for (unsigned long i = 0; i < e; ++i) result = result * (*this);
    return result;
}

BinaryForm BinaryForm::derivative_s() const {
    if (degree() == 0) return BinaryForm::constant(0);
    std::vector<Rat> r(degree(), Rat(0));
    for (std::size_t a = 1; a < coeffs_.size(); ++a) r[a - 1] = Rat(a) * coeffs_[a];
    return BinaryForm(std::move(r));
}

BinaryForm BinaryForm::derivative_t() const {
    if (degree() == 0) return BinaryForm::constant(0);
    std::vector<Rat> r(degree(), Rat(0));
    const std::size_t n = degree();
    for (std::size_t a = 0; a < n; ++a) r[a] = Rat(n - a) * coeffs_[a];
    return BinaryForm(std::move(r));
}

std::size_t BinaryForm::valuation_at(const Rat& s0, const Rat& t0) const {
    if (s0 == 0 && t0 == 0) throw std::invalid_argument("valuation_at: [0:0]");
    if (is_zero()) throw std::domain_error("valuation_at: zero form");
    if (t0 == 0) return t_order(*this);
    Rat u0 = s0 / t0;
    UPoly p = dehomogenize(*this);
    UPoly lin = {-u0, Rat(1)};
    std::size_t val = 0;
    while (true) {
        auto [q, rem] = upoly_divmod(p, lin);
        if (!upoly_zero(rem)) break;
        ++val;
        p = q;
    }
    return val;
}

BinaryForm BinaryForm::divide_exact(const BinaryForm& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    if (degree() < divisor.degree())
        throw std::domain_error("divide_exact: degree too small");
    if (t_order(*this) < t_order(divisor))
        throw std::domain_error("divide_exact: not divisible (root at [1:0])");
    auto [q, rem] = upoly_divmod(dehomogenize(*this), dehomogenize(divisor));
    if (!upoly_zero(rem)) throw std::domain_error("divide_exact: not divisible");
    return from_upoly(q, degree() - divisor.degree());
}

BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("form_gcd: zero form");
    UPoly g = upoly_gcd(dehomogenize(a), dehomogenize(b));
    std::size_t tord = std::min(t_order(a), t_order(b));
    return from_upoly(g, (g.size() - 1) + tord);
}

bool forms_coprime(const BinaryForm& a, const BinaryForm& b) {
    return form_gcd(a, b).degree() == 0;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const BinaryForm& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_decomposition: zero form");
    std::vector<SquarefreeFactor> out;
    std::size_t tord = t_order(f);
    if (tord > 0) out.push_back({BinaryForm({Rat(1), Rat(0)}), tord});

    // Yun's algorithm on the dehomogenized part (characteristic 0)
    UPoly p = upoly_monic(dehomogenize(f));
    if (p.size() > 1) {
        UPoly dp = upoly_derivative(p);
        UPoly g = upoly_gcd(p, dp);
        UPoly w = upoly_divmod(p, g).first;
        UPoly y = upoly_divmod(dp, g).first;
        std::size_t i = 1;
        while (w.size() > 1) {
            // z = y - w'
            UPoly wd = upoly_derivative(w);
            UPoly z(std::max(y.size(), wd.size()), Rat(0));
            for (std::size_t k = 0; k < y.size(); ++k) z[k] += y[k];
            for (std::size_t k = 0; k < wd.size(); ++k) z[k] -= wd[k];
            z = trim(z);
            UPoly factor = upoly_gcd(w, z);
            if (factor.size() > 1)
                out.push_back({from_upoly(factor, factor.size() - 1), i});
            w = upoly_divmod(w, factor).first;
            y = upoly_divmod(z, factor).first;
            ++i;
        }
    }
    return out;
}

bool is_squarefree(const BinaryForm& f) {
    for (const auto& factor : squarefree_decomposition(f))
        if (factor.multiplicity > 1) return false;
    return true;
}

std::size_t distinct_root_count(const BinaryForm& f) {
    std::size_t count = 0;
    for (const auto& factor : squarefree_decomposition(f)) count += factor.base.degree();
    return count;
}

}  // namespace campana
