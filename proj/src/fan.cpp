#include "campana/fan.hpp"

#include "campana/snf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace campana {

namespace {

Int content(const LatticeVector& v) {
    Int g = 0;
    for (const auto& e : v) g = gcd_int(g, e);
    return g;
}

IntMat cone_ray_matrix(const Fan& fan, const std::vector<std::size_t>& cone) {
    IntMat m(cone.size(), fan.dim());
    for (std::size_t i = 0; i < cone.size(); ++i)
        for (std::size_t j = 0; j < fan.dim(); ++j)
            m(i, j) = fan.rays()[cone[i]][j];
    return m;
}

// Unique solution of A x = b with the columns of A linearly independent;
// nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_exact(const IntMat& a, const LatticeVector& b) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(a(i, j));
        aug[i][n] = Rat(b[i]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && aug[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(aug[row], aug[piv]);
        Rat p = aug[row][col];
        for (std::size_t j = col; j <= n; ++j) aug[row][j] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            Rat f = aug[i][col];
            for (std::size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (aug[i][n] != 0) return std::nullopt;  // inconsistent
    if (pivot_col.size() < n) return std::nullopt;  // columns not independent here
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

}  // namespace

Fan::Fan(std::size_t dim, std::vector<LatticeVector> rays,
         std::vector<std::vector<std::size_t>> max_cones)
    : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
    if (dim_ == 0) throw std::invalid_argument("Fan: dimension must be positive");
    for (const auto& r : rays_) {
        if (r.size() != dim_) throw std::invalid_argument("Fan: ray dimension mismatch");
        Int g = content(r);
        if (g == 0) throw std::invalid_argument("Fan: zero ray");
        if (g != 1) throw std::invalid_argument("Fan: ray not primitive");
    }
    for (const auto& cone : max_cones_) {
        if (cone.empty() || cone.size() > dim_)
            throw std::invalid_argument("Fan: bad cone size");
        for (auto idx : cone)
            if (idx >= rays_.size()) throw std::invalid_argument("Fan: ray index out of range");
        IntMat m = cone_ray_matrix(*this, cone);
        if (rank_over_q(m) != cone.size())
            throw std::invalid_argument("Fan: cone rays not linearly independent");
    }
}

Fan projective_space_fan(std::size_t d) {
    if (d < 1) throw std::invalid_argument("projective_space_fan: d >= 1 required");
    std::vector<LatticeVector> rays;
    LatticeVector rho0(d, Int(-1));
    rays.push_back(rho0);
    for (std::size_t i = 0; i < d; ++i) {
        LatticeVector e(d, Int(0));
        e[i] = 1;
        rays.push_back(e);
    }
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t omit = 0; omit <= d; ++omit) {
        std::vector<std::size_t> cone;
        for (std::size_t i = 0; i <= d; ++i)
            if (i != omit) cone.push_back(i);
        cones.push_back(cone);
    }
    return Fan(d, std::move(rays), std::move(cones));
}

bool is_smooth(const Fan& fan) {
    for (const auto& cone : fan.max_cones()) {
        IntMat m = cone_ray_matrix(fan, cone);
        if (cone.size() == fan.dim()) {
            Int d = det(m);
            if (d != 1 && d != -1) return false;
        } else {
            for (const auto& f : smith_normal_form(m).diagonal())
                if (f != 1) return false;
            if (smith_normal_form(m).rank() != cone.size()) return false;
        }
    }
    return true;
}

bool is_complete(const Fan& fan) {
    std::map<std::vector<std::size_t>, std::size_t> wall_count;
    for (const auto& cone : fan.max_cones()) {
        if (cone.size() != fan.dim()) return false;
        for (std::size_t omit = 0; omit < cone.size(); ++omit) {
            std::vector<std::size_t> wall;
            for (std::size_t i = 0; i < cone.size(); ++i)
                if (i != omit) wall.push_back(cone[i]);
            std::sort(wall.begin(), wall.end());
            ++wall_count[wall];
        }
    }
    for (const auto& [wall, count] : wall_count)
        if (count != 2) return false;
    return !fan.max_cones().empty();
}

ContactOrder decompose_contact_order(const Fan& fan, const LatticeVector& c) {
    if (c.size() != fan.dim())
        throw std::invalid_argument("decompose_contact_order: dimension mismatch");
    if (std::all_of(c.begin(), c.end(), [](const Int& e) { return e == 0; }))
        throw std::invalid_argument("decompose_contact_order: zero contact order");
    if (!is_smooth(fan))
        throw std::invalid_argument("decompose_contact_order: fan must be smooth");

    for (const auto& cone : fan.max_cones()) {
        IntMat rays_t(fan.dim(), cone.size());
        for (std::size_t j = 0; j < cone.size(); ++j)
            for (std::size_t i = 0; i < fan.dim(); ++i)
                rays_t(i, j) = fan.rays()[cone[j]][i];
        auto x = solve_exact(rays_t, c);
        if (!x) continue;
        bool ok = true;
        for (const auto& coeff : *x)
            if (coeff < 0 || denominator(coeff) != 1) { ok = false; break; }
        if (!ok) continue;
        ContactOrder result;
        result.point = c;
        for (std::size_t j = 0; j < cone.size(); ++j)
            if ((*x)[j] > 0) result.decomposition[cone[j]] = numerator((*x)[j]);
        return result;
    }
    throw std::domain_error("decompose_contact_order: point outside support of the fan");
}

ContactCollection make_contact_collection(const Fan& fan,
                                          const std::vector<LatticeVector>& points) {
    ContactCollection cc;
    cc.fan = &fan;
    for (const auto& p : points) cc.orders.push_back(decompose_contact_order(fan, p));
    return cc;
}

bool check_balancing(const ContactCollection& cc) {
    if (cc.orders.empty()) return true;
    LatticeVector sum(cc.fan->dim(), Int(0));
    for (const auto& o : cc.orders)
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += o.point[i];
    return std::all_of(sum.begin(), sum.end(), [](const Int& e) { return e == 0; });
}

DivisorDegrees divisor_degrees(const ContactCollection& cc) {
    DivisorDegrees d;
    d.totals.assign(cc.fan->rays().size(), Int(0));
    for (const auto& o : cc.orders)
        for (const auto& [ray, coeff] : o.decomposition) d.totals[ray] += coeff;
    d.uniform = !d.totals.empty() &&
                std::all_of(d.totals.begin(), d.totals.end(),
                            [&](const Int& t) { return t == d.totals[0]; });
    if (d.uniform) d.beta = d.totals[0];
    return d;
}

}  // namespace campana
