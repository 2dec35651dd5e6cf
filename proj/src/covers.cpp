#include "campana/covers.hpp"

#include <algorithm>
#include <stdexcept>

namespace campana {

KltFanoResult klt_fano_check(const std::vector<Multiplicity>& mults) {
    KltFanoResult r;
    r.degree = 2;
    for (const auto& m : mults) {
        if (!m.infinite && m.value < 2)
            throw std::invalid_argument("klt_fano_check: multiplicities must be >= 2 or infinite");
        r.degree -= m.weight();
    }
    r.fano = r.degree > 0;
    return r;
}

std::vector<Int> MaximalCase::multiplicities() const {
    switch (kind) {
        case MaximalCaseKind::TwoPoints: return {m, m};
        case MaximalCaseKind::TwoTwoM: return {Int(2), Int(2), m};
        case MaximalCaseKind::Icosahedral: return {Int(2), Int(3), Int(5)};
    }
    throw std::logic_error("unreachable");
}

MaximalCase maximal_cases(const std::vector<Int>& mults) {
    std::vector<Multiplicity> ms;
    for (const auto& m : mults) ms.push_back(Multiplicity::finite(m));
    if (!klt_fano_check(ms).fano)
        throw std::invalid_argument("maximal_cases: input is not a klt Fano tuple");
    std::vector<Int> sorted = mults;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() <= 2) {
        Int m = sorted.empty() ? Int(2) : sorted.back();
        if (m < 2) m = 2;
        return {MaximalCaseKind::TwoPoints, m};
    }
    if (sorted.size() == 3) {
        // Fano forces (2,2,m) or (2,3,c) with c <= 5
        if (sorted[1] == 2) return {MaximalCaseKind::TwoTwoM, sorted[2]};
        return {MaximalCaseKind::Icosahedral, Int(0)};
    }
    throw std::invalid_argument("maximal_cases: more than three boundary points is never Fano");
}

RiemannHurwitz riemann_hurwitz(const BranchData& branch) {
    if (branch.degree < 1) throw std::invalid_argument("riemann_hurwitz: degree must be >= 1");
    Int ramification = 0;
    for (const auto& bp : branch.points) {
        Int sum = 0;
        for (const auto& e : bp.partition) {
            if (e < 1) throw std::invalid_argument("riemann_hurwitz: partition part < 1");
            sum += e;
            ramification += e - 1;
        }
        if (sum != branch.degree)
            throw std::invalid_argument("riemann_hurwitz: partition does not sum to the degree");
    }
    RiemannHurwitz r;
    r.euler = 2 * branch.degree - ramification;
    if ((2 - r.euler) % 2 == 0) {
        r.genus = (2 - r.euler) / 2;
        r.consistent = r.genus >= 0;
    } else {
        r.genus = -1;
        r.consistent = false;
    }
    return r;
}

Int log_normal_degree(const Int& cover_degree, const Int& boundary_count,
                      const Int& marking_count) {
    if (cover_degree < 1) throw std::invalid_argument("log_normal_degree: degree must be >= 1");
    if (boundary_count != 2 && boundary_count != 3)
        throw std::invalid_argument("log_normal_degree: boundary count must be 2 or 3");
    if (marking_count < 0) throw std::invalid_argument("log_normal_degree: negative markings");
    return cover_degree * (2 - boundary_count) - (2 - marking_count);
}

namespace {

std::vector<Int> geometric_partition(const BinaryForm& fiber) {
    std::vector<Int> parts;
    for (const auto& factor : squarefree_decomposition(fiber))
        for (std::size_t i = 0; i < factor.base.degree(); ++i)
            parts.push_back(Int(factor.multiplicity));
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

BinaryForm fiber_form(const BinaryForm& num, const BinaryForm& den, const Rat& a, const Rat& b) {
    return num * b - den * a;
}

BinaryForm monomial_form(std::size_t degree, std::size_t s_power, const Rat& c) {
    std::vector<Rat> coeffs(degree + 1, Rat(0));
    coeffs[s_power] = c;
    return BinaryForm(std::move(coeffs));
}

void require_tame(const Int& characteristic, const Int& order, const char* who) {
    if (characteristic == 0) return;
    if (!is_prime(characteristic))
        throw std::invalid_argument(std::string(who) + ": characteristic must be 0 or prime");
    if (order % characteristic == 0)
        throw std::invalid_argument(std::string(who) +
                                    ": wild ramification (characteristic divides the group order)");
}

void self_certify(OrbifoldCover& cover, const char* who) {
    auto cert = verify_branch_data(cover.numerator, cover.denominator, cover.branch);
    if (!cert.ok)
        throw std::logic_error(std::string(who) + ": self-certification failed: " +
                               (cert.issues.empty() ? "" : cert.issues.front()));
}

}  // namespace

OrbifoldCover cyclic_cover(const Int& m, const Int& characteristic) {
    if (m < 1) throw std::invalid_argument("cyclic_cover: m >= 1 required");
    require_tame(characteristic, m, "cyclic_cover");
    std::size_t n = m.convert_to<std::size_t>();
    OrbifoldCover cover;
    cover.numerator = monomial_form(n, n, Rat(1));    // s^m
    cover.denominator = monomial_form(n, 0, Rat(1));  // t^m
    cover.branch.degree = m;
    cover.branch.points.push_back({Rat(1), Rat(0), {m}});
    cover.branch.points.push_back({Rat(0), Rat(1), {m}});
    self_certify(cover, "cyclic_cover");
    return cover;
}

OrbifoldCover dihedral_cover(const Int& m, const Int& characteristic) {
    if (m < 2) throw std::invalid_argument("dihedral_cover: m >= 2 required");
    require_tame(characteristic, 2 * m, "dihedral_cover");
    std::size_t mm = m.convert_to<std::size_t>();
    OrbifoldCover cover;
    // [s^{2m} + t^{2m} : 2 s^m t^m]
    cover.numerator = monomial_form(2 * mm, 2 * mm, Rat(1)) + monomial_form(2 * mm, 0, Rat(1));
    cover.denominator = monomial_form(2 * mm, mm, Rat(2));
    cover.branch.degree = 2 * m;
    std::vector<Int> twos(mm, Int(2));
    cover.branch.points.push_back({Rat(1), Rat(1), twos});    // num - den = (s^m - t^m)^2
    cover.branch.points.push_back({Rat(-1), Rat(1), twos});   // num + den = (s^m + t^m)^2
    cover.branch.points.push_back({Rat(1), Rat(0), {m, m}});  // poles: s^m t^m
    self_certify(cover, "dihedral_cover");
    return cover;
}

BinaryForm klein_f() {
    // s t (s^10 + 11 s^5 t^5 - t^10)
    std::vector<Rat> c(13, Rat(0));
    c[1] = -1;
    c[6] = 11;
    c[11] = 1;
    return BinaryForm(std::move(c));
}

BinaryForm klein_h() {
    std::vector<Rat> c(21, Rat(0));
    c[0] = -1;
    c[5] = -228;
    c[10] = -494;
    c[15] = 228;
    c[20] = -1;
    return BinaryForm(std::move(c));
}

BinaryForm klein_t() {
    std::vector<Rat> c(31, Rat(0));
    c[0] = 1;
    c[5] = -522;
    c[10] = -10005;
    c[20] = -10005;
    c[25] = 522;
    c[30] = 1;
    return BinaryForm(std::move(c));
}

OrbifoldCover icosahedral_cover(const Int& characteristic) {
    require_tame(characteristic, 60, "icosahedral_cover");
    BinaryForm f = klein_f(), h = klein_h(), t = klein_t();
    BinaryForm t2 = t * t;
    BinaryForm h3 = h * h * h;
    BinaryForm f5 = f.pow(5) * Rat(1728);
    std::string sign;
    if ((t2 + h3 - f5).is_zero()) {
        sign = "T^2 = -H^3 + 1728 f^5";
    } else if ((t2 - h3 - f5).is_zero()) {
        sign = "T^2 = H^3 + 1728 f^5";
    } else {
        throw std::logic_error("icosahedral_cover: stored forms fail the syzygy check");
    }
    OrbifoldCover cover;
    cover.numerator = h3;       // degree 60
    cover.denominator = f5;     // 1728 f^5
    cover.syzygy_note = sign;
    cover.branch.degree = 60;
    cover.branch.points.push_back({Rat(1), Rat(0), std::vector<Int>(12, Int(5))});
    cover.branch.points.push_back({Rat(0), Rat(1), std::vector<Int>(20, Int(3))});
    cover.branch.points.push_back({Rat(1), Rat(1), std::vector<Int>(30, Int(2))});
    self_certify(cover, "icosahedral_cover");
    return cover;
}

BranchCertificate verify_branch_data(const BinaryForm& num, const BinaryForm& den,
                                     const BranchData& claimed) {
    BranchCertificate cert;
    if (num.is_zero() || den.is_zero()) {
        cert.issues.push_back("zero form");
        return cert;
    }
    if (num.degree() != den.degree() || Int(num.degree()) != claimed.degree) {
        cert.issues.push_back("degree mismatch between forms and claimed branch data");
        return cert;
    }
    if (!forms_coprime(num, den)) {
        cert.issues.push_back("numerator and denominator share a root");
        return cert;
    }
    // distinct branch values
    for (std::size_t i = 0; i < claimed.points.size(); ++i)
        for (std::size_t j = i + 1; j < claimed.points.size(); ++j) {
            const auto& p = claimed.points[i];
            const auto& q = claimed.points[j];
            if (p.a * q.b == p.b * q.a)
                cert.issues.push_back("repeated branch value");
        }

    cert.computed.degree = claimed.degree;
    std::vector<BinaryForm> fibers;
    for (const auto& bp : claimed.points) {
        BinaryForm fiber = fiber_form(num, den, bp.a, bp.b);
        if (fiber.is_zero()) {
            cert.issues.push_back("fiber form vanishes identically");
            return cert;
        }
        fibers.push_back(fiber);
        std::vector<Int> computed = geometric_partition(fiber);
        std::vector<Int> want = bp.partition;
        std::sort(want.begin(), want.end(), std::greater<>());
        cert.computed.points.push_back({bp.a, bp.b, computed});
        if (computed != want) {
            std::string msg = "partition mismatch over [" + rat_to_string(bp.a) + " : " +
                              rat_to_string(bp.b) + "]: computed (";
            for (const auto& e : computed) msg += e.str() + " ";
            msg += ")";
            cert.issues.push_back(msg);
        }
    }

    // every ramification point must sit over a claimed branch value
    BinaryForm wronskian =
        num.derivative_s() * den.derivative_t() - num.derivative_t() * den.derivative_s();
    if (wronskian.is_zero()) {
        cert.issues.push_back("inseparable map (vanishing Wronskian)");
        return cert;
    }
    BinaryForm residue = wronskian;
    for (const auto& fiber : fibers) {
        while (residue.degree() > 0) {
            BinaryForm g = form_gcd(residue, fiber);
            if (g.degree() == 0) break;
            residue = residue.divide_exact(g);
        }
    }
    if (residue.degree() > 0)
        cert.issues.push_back("ramification outside the claimed branch values");

    cert.ok = cert.issues.empty();
    return cert;
}

}  // namespace campana
