#pragma once

#include <string>

#include "json.hpp"
#include "taunak/category.hpp"
#include "taunak/picture.hpp"
#include "taunak/smc.hpp"
#include "taunak/tors.hpp"

namespace taunak {

using json = nlohmann::json;

void to_json(json& j, const AlgebraSpec& s);
void from_json(const json& j, AlgebraSpec& s);  // validates
void to_json(json& j, const Indec& x);
void from_json(const json& j, Indec& x);
void to_json(json& j, const SignedIndec& x);
void from_json(const json& j, SignedIndec& x);
void to_json(json& j, const ArcPattern& p);
void from_json(const json& j, ArcPattern& p);
void to_json(json& j, const SemibrickPair& p);
void from_json(const json& j, SemibrickPair& p);
void to_json(json& j, const TauRigidPair& p);
void from_json(const json& j, TauRigidPair& p);
void to_json(json& j, const Letter& l);
void from_json(const json& j, Letter& l);
void to_json(json& j, const Presentation& p);
void from_json(const json& j, Presentation& p);

json polygons_json(const TorsLattice& lat);
json complex_json(const CubeComplex& c);

AlgebraSpec load_spec_file(const std::string& path);

}  // namespace taunak
