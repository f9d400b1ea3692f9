#include "motionfact/json_io.hpp"

#include "motionfact/errors.hpp"

namespace motionfact {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("json: " + what); }

json vec_to_json(const Vec3& v) { return json::array({rat_to_string(v.x), rat_to_string(v.y), rat_to_string(v.z)}); }

JointKind kind_from_json(const json& j) {
    const std::string s = j.get<std::string>();
    if (s == "rotational") return JointKind::Rotational;
    if (s == "translational") return JointKind::Translational;
    bad("unknown joint kind '" + s + "'");
}

} // namespace

json to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (!j.is_string()) bad("expected a rational string");
    return rat_from_string(j.get<std::string>());
}

json to_json(const RPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rat_to_string(c));
    return arr;
}

RPoly rpoly_from_json(const json& j) {
    if (!j.is_array()) bad("expected a coefficient array");
    std::vector<Rat> v;
    for (const auto& c : j) v.push_back(rat_from_json(c));
    return RPoly(std::move(v));
}

json to_json(const Quaternion& q) {
    return json::array({rat_to_string(q.w), rat_to_string(q.x), rat_to_string(q.y), rat_to_string(q.z)});
}

Quaternion quaternion_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) bad("expected a quaternion 4-array");
    return {rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2]), rat_from_json(j[3])};
}

json to_json(const DualQuaternion& h) {
    json arr = json::array();
    for (const auto& c : h.components()) arr.push_back(rat_to_string(c));
    return arr;
}

DualQuaternion dualquat_from_json(const json& j) {
    if (!j.is_array() || j.size() != 8) bad("expected a dual quaternion 8-array");
    std::array<Rat, 8> c;
    for (std::size_t i = 0; i < 8; ++i) c[i] = rat_from_json(j[i]);
    return DualQuaternion::from_components(c);
}

json to_json(const MotionPoly& c) {
    json arr = json::array();
    for (const auto& q : c.raw().coeffs()) arr.push_back(to_json(q));
    return arr;
}

MotionPoly motionpoly_from_json(const json& j) {
    if (!j.is_array()) bad("expected a coefficient list");
    std::vector<DualQuaternion> v;
    for (const auto& c : j) v.push_back(dualquat_from_json(c));
    return MotionPoly::certify(DQPoly(std::move(v)));
}

json to_json(const QPoly& p) {
    json arr = json::array();
    for (const auto& q : p.coeffs()) arr.push_back(to_json(q));
    return arr;
}

QPoly qpoly_from_json(const json& j) {
    if (!j.is_array()) bad("expected a quaternion coefficient list");
    std::vector<Quaternion> v;
    for (const auto& c : j) v.push_back(quaternion_from_json(c));
    return QPoly(std::move(v));
}

json to_json(const ConstraintInput& in) {
    return json{{"P", to_json(in.p)}, {"xi", to_json(in.xi)}, {"eta", to_json(in.eta)}};
}

ConstraintInput constraint_from_json(const json& j) {
    if (!j.is_object() || !j.contains("P") || !j.contains("xi") || !j.contains("eta"))
        bad("constraint input needs P, xi and eta");
    return ConstraintInput::validated(qpoly_from_json(j["P"]), rpoly_from_json(j["xi"]),
                                      rpoly_from_json(j["eta"]));
}

json to_json(const Factorization& f) {
    json factors = json::array();
    for (const auto& g : f.factors())
        factors.push_back(json{{"h", to_json(g.h)}, {"kind", joint_kind_name(g.kind)}});
    return json{{"real_cofactor", to_json(f.real_cofactor())}, {"factors", factors}};
}

Factorization factorization_from_json(const json& j) {
    if (!j.is_object() || !j.contains("factors")) bad("factorization needs factors");
    std::vector<LinearFactor> factors;
    for (const auto& g : j["factors"]) factors.push_back(LinearFactor::from(dualquat_from_json(g.at("h"))));
    RPoly cofactor = RPoly::constant(Rat(1));
    if (j.contains("real_cofactor")) cofactor = rpoly_from_json(j["real_cofactor"]);
    DQPoly source = DQPoly::from_real(cofactor);
    for (const auto& f : factors) source = source * DQPoly::linear_factor(f.h);
    return Factorization::verified(std::move(factors), std::move(cofactor), source);
}

json to_json(const FactorFamily& fam) {
    json factors = json::array();
    for (const auto& af : fam.affine_factors()) {
        json dirs = json::object();
        for (std::size_t i = 0; i < fam.parameters().size(); ++i)
            dirs[fam.parameters()[i]] = to_json(af.directions[i]);
        factors.push_back(json{{"base", to_json(af.base)},
                               {"directions", dirs},
                               {"kind", joint_kind_name(af.kind)}});
    }
    json particular = json::object();
    for (const auto& [name, value] : fam.particular()) particular[name] = rat_to_string(value);
    return json{{"parameters", fam.parameters()},
                {"particular", particular},
                {"factors", factors},
                {"real_cofactor", to_json(fam.real_cofactor())}};
}

namespace {

json chain_to_json(const std::vector<ChainJoint>& chain) {
    json arr = json::array();
    for (const auto& jnt : chain)
        arr.push_back(json{{"h", to_json(jnt.factor.h)},
                           {"kind", joint_kind_name(jnt.factor.kind)},
                           {"multiplicity", jnt.multiplicity}});
    return arr;
}

std::vector<ChainJoint> chain_from_json(const json& j) {
    std::vector<ChainJoint> chain;
    for (const auto& item : j) {
        ChainJoint jnt{LinearFactor::from(dualquat_from_json(item.at("h"))), 1};
        if (item.contains("multiplicity")) jnt.multiplicity = item["multiplicity"].get<int>();
        if (jnt.multiplicity < 1) bad("multiplicity must be >= 1");
        chain.push_back(std::move(jnt));
    }
    return chain;
}

} // namespace

json to_json(const Linkage& l) {
    return json{{"chain_a", chain_to_json(l.chain_a())},
                {"chain_b", chain_to_json(l.chain_b())},
                {"annotations", l.annotations()}};
}

Linkage linkage_from_json(const json& j) {
    if (!j.is_object() || !j.contains("chain_a") || !j.contains("chain_b"))
        bad("linkage needs chain_a and chain_b");
    std::vector<std::string> annotations;
    if (j.contains("annotations"))
        annotations = j["annotations"].get<std::vector<std::string>>();
    return Linkage::from_chains(chain_from_json(j["chain_a"]), chain_from_json(j["chain_b"]),
                                std::move(annotations));
}

json to_json(const GeometricReport& r) {
    json concurrent = json::array();
    for (const auto& c : r.concurrent_points)
        concurrent.push_back(json{{"point", vec_to_json(c.point)}, {"joints", c.joints}});
    json angles = json::array();
    for (const auto& a : r.angle_equalities)
        angles.push_back(json{{"axes", json::array({a.axis_a, a.axis_b, a.axis_c})},
                              {"cos2", rat_to_string(a.value.cos2)},
                              {"sign", a.value.dot_sign}});
    json half = json::array();
    for (const auto& h : r.half_angles)
        half.push_back(json{{"joint", h.joint},
                            {"primal_scalar", rat_to_string(h.primal_scalar)},
                            {"dir_norm2", rat_to_string(h.dir_norm2)}});
    return json{{"parallel_classes", r.parallel_classes},
                {"concurrent_points", concurrent},
                {"through_origin", r.through_origin},
                {"angle_equalities", angles},
                {"joint_signature", r.joint_signature},
                {"half_angles", half}};
}

json to_json(const ClosureReport& r) {
    json samples = json::array();
    for (const auto& s : r.samples)
        samples.push_back(json{{"t", rat_to_string(s.t)},
                               {"pass", s.pass},
                               {"residual", rat_to_string(s.residual)}});
    return json{{"symbolic_real", r.symbolic_real},
                {"samples", samples},
                {"all_pass", r.all_pass()}};
}

} // namespace motionfact
