#include "campana/json_io.hpp"

#include <stdexcept>

namespace campana {

namespace {

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer (number or decimal string)");
}

Json int_to_json(const Int& v) {
    // keep small values as JSON numbers for readability
    if (v >= -(1ll << 53) && v <= (1ll << 53)) return Json(v.convert_to<long long>());
    return Json(v.str());
}

}  // namespace

Json rat_to_json(const Rat& q) { return Json(rat_to_string(q)); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw std::invalid_argument("expected a rational (\"num/den\" string or integer)");
}

Json int_vector_to_json(const std::vector<Int>& v) {
    Json arr = Json::array();
    for (const auto& e : v) arr.push_back(int_to_json(e));
    return arr;
}

std::vector<Int> int_vector_from_json(const Json& j) {
    std::vector<Int> out;
    for (const auto& e : j) out.push_back(int_from_json(e));
    return out;
}

Json fan_to_json(const Fan& fan) {
    Json j;
    j["dim"] = fan.dim();
    Json rays = Json::array();
    for (const auto& r : fan.rays()) rays.push_back(int_vector_to_json(r));
    j["rays"] = rays;
    j["max_cones"] = fan.max_cones();
    return j;
}

Fan fan_from_json(const Json& j) {
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<LatticeVector> rays;
    for (const auto& r : j.at("rays")) rays.push_back(int_vector_from_json(r));
    std::vector<std::vector<std::size_t>> cones =
        j.at("max_cones").get<std::vector<std::vector<std::size_t>>>();
    return Fan(dim, std::move(rays), std::move(cones));
}

Json contacts_to_json(const ContactCollection& cc) {
    Json j;
    Json orders = Json::array();
    for (const auto& o : cc.orders) orders.push_back(int_vector_to_json(o.point));
    j["orders"] = orders;
    return j;
}

std::vector<LatticeVector> contact_points_from_json(const Json& j) {
    std::vector<LatticeVector> out;
    const Json& orders = j.contains("orders") ? j.at("orders") : j;
    for (const auto& o : orders) out.push_back(int_vector_from_json(o));
    return out;
}

Json multiplicities_to_json(const std::vector<Multiplicity>& ms) {
    Json arr = Json::array();
    for (const auto& m : ms) {
        if (m.infinite) arr.push_back("inf");
        else arr.push_back(int_to_json(m.value));
    }
    Json j;
    j["multiplicities"] = arr;
    return j;
}

std::vector<Multiplicity> multiplicities_from_json(const Json& j) {
    const Json& arr = j.is_array() ? j : j.at("multiplicities");
    std::vector<Multiplicity> out;
    for (const auto& e : arr) {
        if (e.is_string() && e.get<std::string>() == "inf") out.push_back(Multiplicity::inf());
        else out.push_back(Multiplicity::finite(int_from_json(e)));
    }
    return out;
}

Json jet_to_json(const CampanaJet& jet) {
    Json j;
    j["n"] = int_to_json(jet.n);
    Json vals = Json::array();
    for (const auto& v : jet.valuations) {
        if (v.saturated) vals.push_back("saturated");
        else vals.push_back(int_to_json(v.order));
    }
    j["valuations"] = vals;
    return j;
}

CampanaJet jet_from_json(const Json& j) {
    CampanaJet jet;
    jet.n = int_from_json(j.at("n"));
    for (const auto& v : j.at("valuations")) {
        if (v.is_string() && v.get<std::string>() == "saturated")
            jet.valuations.push_back({jet.n + 1, true});
        else
            jet.valuations.push_back({int_from_json(v), false});
    }
    return jet;
}

Json form_to_json(const BinaryForm& f) {
    Json arr = Json::array();
    for (const auto& c : f.coeffs()) arr.push_back(rat_to_json(c));
    return arr;
}

BinaryForm form_from_json(const Json& j) {
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(rat_from_json(c));
    return BinaryForm(std::move(coeffs));
}

Json curve_to_json(const RationalCurvePd& curve) {
    Json j;
    j["d"] = curve.d;
    j["beta"] = int_to_json(curve.beta);
    Json markings = Json::array();
    for (const auto& m : curve.markings)
        markings.push_back(Json::array({rat_to_json(m.s), rat_to_json(m.t)}));
    j["markings"] = markings;
    Json contacts = Json::array();
    for (const auto& row : curve.contacts) contacts.push_back(int_vector_to_json(row));
    j["contacts"] = contacts;
    Json lambda = Json::array();
    for (const auto& l : curve.lambda) lambda.push_back(rat_to_json(l));
    j["lambda"] = lambda;
    Json forms = Json::array();
    for (const auto& f : curve.forms) forms.push_back(form_to_json(f));
    j["forms"] = forms;
    return j;
}

RationalCurvePd curve_from_json(const Json& j) {
    std::size_t d = j.at("d").get<std::size_t>();
    std::vector<P1Point> markings;
    for (const auto& m : j.at("markings"))
        markings.push_back({rat_from_json(m.at(0)), rat_from_json(m.at(1))});
    ContactMatrix contacts;
    for (const auto& row : j.at("contacts")) contacts.push_back(int_vector_from_json(row));
    std::vector<Rat> x_inf;
    if (j.contains("x_inf"))
        for (const auto& c : j.at("x_inf")) x_inf.push_back(rat_from_json(c));
    if (!x_inf.empty()) return build_curve(d, markings, contacts, x_inf);

    RationalCurvePd curve;
    curve.d = d;
    curve.beta = int_from_json(j.at("beta"));
    curve.markings = markings;
    curve.contacts = contacts;
    for (const auto& l : j.at("lambda")) curve.lambda.push_back(rat_from_json(l));
    for (const auto& f : j.at("forms")) curve.forms.push_back(form_from_json(f));
    return curve;
}

Json branch_data_to_json(const BranchData& branch) {
    Json arr = Json::array();
    for (const auto& bp : branch.points) {
        Json p;
        p["value"] = Json::array({rat_to_json(bp.a), rat_to_json(bp.b)});
        p["partition"] = int_vector_to_json(bp.partition);
        arr.push_back(p);
    }
    return arr;
}

BranchData branch_data_from_json(const Json& j) {
    BranchData branch;
    branch.degree = int_from_json(j.at("degree"));
    for (const auto& p : j.at("branch")) {
        BranchPoint bp;
        bp.a = rat_from_json(p.at("value").at(0));
        bp.b = rat_from_json(p.at("value").at(1));
        bp.partition = int_vector_from_json(p.at("partition"));
        branch.points.push_back(bp);
    }
    return branch;
}

Json cover_to_json(const OrbifoldCover& cover) {
    Json j;
    j["degree"] = int_to_json(cover.branch.degree);
    j["num"] = form_to_json(cover.numerator);
    j["den"] = form_to_json(cover.denominator);
    j["branch"] = branch_data_to_json(cover.branch);
    if (!cover.syzygy_note.empty()) j["syzygy"] = cover.syzygy_note;
    return j;
}

std::pair<BinaryForm, BinaryForm> cover_forms_from_json(const Json& j) {
    return {form_from_json(j.at("num")), form_from_json(j.at("den"))};
}

std::string digest(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace campana
