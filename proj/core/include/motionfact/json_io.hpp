#pragma once

#include "motionfact/factorization.hpp"
#include "motionfact/linkage.hpp"
#include "motionfact/synthesis.hpp"

#include <nlohmann/json.hpp>

namespace motionfact {

using nlohmann::json;

// rationals render as "p/q" strings ("/1" omitted)
json to_json(const Rat& r);
Rat rat_from_json(const json& j);

// ascending coefficient array of rational strings
json to_json(const RPoly& p);
RPoly rpoly_from_json(const json& j);

// 4-array [w, x, y, z]
json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const json& j);

// 8-array [w, x, y, z, ew, ex, ey, ez]
json to_json(const DualQuaternion& h);
DualQuaternion dualquat_from_json(const json& j);

// list of 8-arrays, ascending degree
json to_json(const MotionPoly& c);
MotionPoly motionpoly_from_json(const json& j);

json to_json(const QPoly& p);
QPoly qpoly_from_json(const json& j);

// {P, xi, eta}
json to_json(const ConstraintInput& in);
ConstraintInput constraint_from_json(const json& j);

// {real_cofactor, factors: [{h, kind}]}
json to_json(const Factorization& f);
Factorization factorization_from_json(const json& j);

// {parameters, particular, factors: [{base, directions, kind}]}
json to_json(const FactorFamily& fam);

// {chain_a, chain_b, annotations}
json to_json(const Linkage& l);
Linkage linkage_from_json(const json& j);

json to_json(const GeometricReport& r);
json to_json(const ClosureReport& r);

} // namespace motionfact
