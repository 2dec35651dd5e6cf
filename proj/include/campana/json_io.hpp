#pragma once

#include "campana/campana.hpp"
#include "campana/covers.hpp"
#include "campana/curve.hpp"
#include "campana/fan.hpp"

#include <json.hpp>

#include <string>

namespace campana {

using Json = nlohmann::ordered_json;

// Fan schema: {"dim": d, "rays": [[int,...],...], "max_cones": [[idx,...],...]}
Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

// Contact collections: {"orders": [[int,...],...]}
Json contacts_to_json(const ContactCollection& cc);
std::vector<LatticeVector> contact_points_from_json(const Json& j);

// Multiplicities: {"multiplicities": [int or "inf", ...]}
Json multiplicities_to_json(const std::vector<Multiplicity>& ms);
std::vector<Multiplicity> multiplicities_from_json(const Json& j);

// Jet: {"n": int, "valuations": [int,...]}
Json jet_to_json(const CampanaJet& jet);
CampanaJet jet_from_json(const Json& j);

// Curve: {"d", "beta", "markings": [["num/den","num/den"],...], "contacts",
//         "lambda", "forms"} with rationals as "num/den" strings
Json curve_to_json(const RationalCurvePd& curve);
RationalCurvePd curve_from_json(const Json& j);

// Cover: {"degree", "num", "den", "branch": [{"value": [a,b], "partition": [...]}]}
Json cover_to_json(const OrbifoldCover& cover);
Json branch_data_to_json(const BranchData& branch);
BranchData branch_data_from_json(const Json& j);
std::pair<BinaryForm, BinaryForm> cover_forms_from_json(const Json& j);

Json form_to_json(const BinaryForm& f);
BinaryForm form_from_json(const Json& j);

Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json int_vector_to_json(const std::vector<Int>& v);
std::vector<Int> int_vector_from_json(const Json& j);

/// FNV-1a 64 digest of a canonical string, hex-encoded.
std::string digest(const std::string& data);

}  // namespace campana
