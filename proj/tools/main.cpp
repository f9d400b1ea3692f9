// Command-line front end: factoring, synthesis, classification, closure
// verification, trajectory export, and the built-in darboux7r demo.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
// 3 mathematical non-existence, 4 exact-mode irrationality.

#include "motionfact/errors.hpp"
#include "motionfact/json_io.hpp"
#include "motionfact/synthesis.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace motionfact;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitParse = 2;
constexpr int kExitNonExistence = 3;
constexpr int kExitIrrational = 4;

struct Config {
    std::string mode = "exact";
    double eps = 0.0;
    bool eps_set = false;
    std::string output = "pretty";

    Mode numeric_mode() const { return mode == "exact" ? Mode::exact() : Mode::approx(eps); }
    int validate() const {
        if (mode != "exact" && mode != "float") {
            std::cerr << "error: --mode must be exact or float\n";
            return kExitParse;
        }
        if (mode == "float" && !eps_set) {
            std::cerr << "error: float mode requires --eps\n";
            return kExitParse;
        }
        if (mode == "exact" && eps_set) {
            std::cerr << "error: --eps is only meaningful with --mode float\n";
            return kExitParse;
        }
        return kExitOk;
    }
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid json: ") + e.what());
    }
    return j;
}

std::string factor_display(const DualQuaternion& h) {
    // t - h with every component spelled out, paper style
    static const char* units[8] = {"", "i", "j", "k", "eps", "eps i", "eps j", "eps k"};
    std::ostringstream os;
    os << "t";
    const auto comps = h.components();
    for (int n = 0; n < 8; ++n) {
        const Rat c = -comps[static_cast<std::size_t>(n)];
        if (c == 0) continue;
        os << (c < 0 ? " - " : " + ");
        const Rat a = abs(c);
        if (n == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << " ";
            os << units[n];
        }
    }
    return os.str();
}

void print_factorization(std::ostream& os, const Factorization& f, const std::string& label) {
    os << label << " [" << f.signature() << "]";
    if (!(f.real_cofactor() == RPoly::constant(Rat(1))))
        os << " cofactor " << f.real_cofactor().str();
    os << "\n";
    for (const auto& g : f.factors())
        os << "    (" << factor_display(g.h) << ")   " << joint_kind_name(g.kind) << "\n";
}

void print_family(std::ostream& os, const FactorFamily& fam, const std::string& label) {
    os << label << ": affine family in (";
    for (std::size_t i = 0; i < fam.parameters().size(); ++i)
        os << (i ? ", " : "") << fam.parameters()[i];
    os << ")\n";
    print_factorization(os, fam.realize_particular(), "  particular realization");
}

int run_factor(const std::string& path, const Config& cfg, const std::string& order_csv, bool all) {
    const Mode mode = cfg.numeric_mode();
    const MotionPoly c = motionpoly_from_json(load_json(path));
    if (!c.is_monic()) throw ParseError("the motion polynomial must be monic");

    json out_json;
    std::ostringstream report;
    const auto norm_factors = quadratic_factor_decomposition(c.norm_poly(), mode);

    auto print_norm = [&] {
        report << "norm polynomial: " << c.norm_poly().str() << "\n";
        report << "quadratic factors:";
        for (const auto& m : norm_factors) report << "  [" << m.str() << "]";
        report << "\n";
    };

    try {
        if (!order_csv.empty()) {
            std::vector<RPoly> order;
            std::stringstream ss(order_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                const int idx = std::stoi(tok);
                if (idx < 0 || idx >= static_cast<int>(norm_factors.size()))
                    throw ParseError("--order index out of range");
                order.push_back(norm_factors[static_cast<std::size_t>(idx)]);
            }
            const Factorization f = factor_with_order(c, order, mode);
            print_norm();
            print_factorization(report, f, "factorization");
            out_json = json{{"factorizations", json::array({to_json(f)})}};
        } else if (all) {
            const AllFactorizations res = all_factorizations(c, mode);
            if (res.factorizations.empty()) throw NonGeneric("all permutations are non-generic");
            print_norm();
            report << res.factorizations.size() << " distinct factorization(s) from "
                   << res.permutations_tried << " permutation(s)\n";
            json arr = json::array();
            for (std::size_t i = 0; i < res.factorizations.size(); ++i) {
                print_factorization(report, res.factorizations[i],
                                    "factorization " + std::to_string(i + 1));
                arr.push_back(to_json(res.factorizations[i]));
            }
            for (const auto& d : res.diagnostics) report << "note: " << d << "\n";
            out_json = json{{"factorizations", arr}, {"diagnostics", res.diagnostics}};
        } else {
            const Factorization f = factor_with_order(c, norm_factors, mode);
            print_norm();
            print_factorization(report, f, "factorization");
            out_json = json{{"factorizations", json::array({to_json(f)})}};
        }
    } catch (const NonGeneric& e) {
        // special-case dispatch
        print_norm();
        report << "generic algorithm fails: " << e.what() << "\n";
        if (auto in = try_parse_constraint_motion(c)) {
            const CaseKind kind = classify_case(*in);
            report << "dispatch: constraint motion, case " << case_kind_name(kind) << "\n";
            if (kind == CaseKind::Darboux) {
                report << "generic algorithm fails; Darboux pipeline applied\n";
                const FactorFamily fam = darboux_family(*in);
                print_family(report, fam, "darboux factorization family");
                out_json = json{{"dispatch", "darboux"}, {"family", to_json(fam)}};
                std::cout << (cfg.output == "json" ? out_json.dump(2) : report.str()) << "\n";
                return kExitOk;
            }
            if (kind == CaseKind::VerticalDarboux) {
                report << "the vertical Darboux motion allows no factorizations\n";
                std::cout << report.str();
                return kExitNonExistence;
            }
            if (kind == CaseKind::NonFactorableCubic) {
                report << "no factorization into linear motion polynomials exists\n";
                std::cout << report.str();
                return kExitNonExistence;
            }
            report << "no special-case handler; diagnostics above\n";
            std::cout << report.str();
            return kExitOk;
        }
        try {
            const TranslationalForm form = translational_form(c);
            report << "dispatch: quadratic translational motion, xi = " << form.xi.str() << "\n";
            if (quadratic_discriminant(form.xi) < 0) {
                if (circular_translation_criterion(c)) {
                    const FactorFamily fam = circular_translation_family(c);
                    report << "circular translation: infinitely many factorizations\n";
                    print_family(report, fam, "factorization family");
                    out_json = json{{"dispatch", "circular"}, {"family", to_json(fam)}};
                    std::cout << (cfg.output == "json" ? out_json.dump(2) : report.str()) << "\n";
                    return kExitOk;
                }
                report << "no 2-factor factorization; multiplication trick available\n";
                const FactorFamily fam = multiplication_trick(c, mode);
                print_family(report, fam, "factorizations of xi*C");
                std::cout << report.str();
                return kExitNonExistence;
            }
            const auto res = reducible_translation_factorizations(c, mode);
            if (std::holds_alternative<TranslationPair>(res)) {
                const auto& pair = std::get<TranslationPair>(res);
                report << "two orderings of one translational factor pair\n";
                print_factorization(report, pair.first_order, "ordering 1");
                print_factorization(report, pair.second_order, "ordering 2");
                std::cout << report.str();
                return kExitOk;
            }
            if (std::holds_alternative<FactorFamily>(res)) {
                print_family(report, std::get<FactorFamily>(res), "translation family");
                std::cout << report.str();
                return kExitOk;
            }
            report << "no factorization: " << std::get<NoFactorizationReason>(res).reason << "\n";
            std::cout << report.str();
            return kExitNonExistence;
        } catch (const MalformedTranslational&) {
            report << "no special-case handler recognizes this input\n";
            std::cout << report.str();
            return kExitOk;
        }
    }
    std::cout << (cfg.output == "json" ? out_json.dump(2) : report.str()) << "\n";
    return kExitOk;
}

int run_classify(const std::string& path) {
    const ConstraintInput in = constraint_from_json(load_json(path));
    const CaseKind kind = classify_case(in);
    std::cout << case_kind_name(kind) << "\n";
    switch (kind) {
        case CaseKind::VerticalDarboux:
            std::cout << "the vertical Darboux motion allows no factorizations\n";
            break;
        case CaseKind::NonFactorableCubic:
            std::cout << "no factorization into linear motion polynomials exists\n";
            break;
        case CaseKind::DegP1XiReducible:
            std::cout << "factorizations have four prismatic and two revolute joints; the "
                         "linkage has two degrees of freedom and infinitely many straight "
                         "line trajectories\n";
            break;
        default:
            break;
    }
    return kExitOk;
}

int run_synth(const std::string& path, const Config& cfg) {
    const Mode mode = cfg.numeric_mode();
    const ConstraintInput in = constraint_from_json(load_json(path));
    const CaseKind kind = classify_case(in);
    const MotionPoly c = build_constraint_motion(in);
    std::cout << "case: " << case_kind_name(kind) << "\n";
    std::cout << "C = " << c.str() << "\n";

    switch (kind) {
        case CaseKind::DegP2: {
            const SixPack six = degp2_sixpack(in, mode);
            const auto labels = six.labels();
            const auto all = six.all();
            for (std::size_t i = 0; i < all.size(); ++i)
                print_factorization(std::cout, *all[i], labels[i]);
            const auto linkages = admissible_pairings(six);
            const char* names[] = {"A-B", "A-C'", "B-C'", "C-C'"};
            for (std::size_t i = 0; i < linkages.size(); ++i) {
                std::cout << "linkage " << names[i] << ": signature "
                          << linkages[i].signature() << "\n";
                for (const auto& note : linkages[i].annotations())
                    std::cout << "    note: " << note << "\n";
            }
            return kExitOk;
        }
        case CaseKind::Darboux: {
            const DarbouxRightFactor rf = darboux_right_factor(in);
            std::cout << "right factor k2 = (" << rat_to_string(rf.a) << ", "
                      << rat_to_string(rf.b) << ", " << rat_to_string(rf.c) << ")\n";
            print_family(std::cout, darboux_family(in), "darboux factorization family");
            const Linkage l = darboux_7r(in, mode);
            std::cout << "7R linkage: signature " << l.signature() << "\n";
            const GeometricReport rep = geometric_report(l);
            std::cout << "parallel classes:";
            for (const auto& cls : rep.parallel_classes) {
                std::cout << " {";
                for (std::size_t i = 0; i < cls.size(); ++i)
                    std::cout << (i ? "," : "") << cls[i] + 1;
                std::cout << "}";
            }
            std::cout << "\n";
            return kExitOk;
        }
        case CaseKind::VerticalDarboux:
            std::cout << "the vertical Darboux motion allows no factorizations\n";
            return kExitNonExistence;
        case CaseKind::NonFactorableCubic:
            std::cout << "no factorization into linear motion polynomials exists\n";
            return kExitNonExistence;
        case CaseKind::DegP1XiLinear: {
            // trivial factorization (xi - eps eta i) * P, Bennett/RPRP case
            const DualQuaternion ht{Quaternion::scalar(-in.xi.coeff(0)),
                                    Quaternion(0, in.eta.coeff(0), 0, 0)};
            const Quaternion hp = -in.p.coeff(0);
            const Factorization trivial = Factorization::verified(
                {LinearFactor::from(ht), LinearFactor::from(DualQuaternion::from_primal(hp))},
                RPoly::constant(Rat(1)), c.raw());
            print_factorization(std::cout, trivial, "trivial factorization (Bennett/RPRP)");
            const AllFactorizations res = all_factorizations(c, mode);
            for (std::size_t i = 0; i < res.factorizations.size(); ++i)
                print_factorization(std::cout, res.factorizations[i],
                                    "factorization " + std::to_string(i + 1));
            return kExitOk;
        }
        case CaseKind::DegP1XiReducible: {
            std::cout << "every closed linkage from this motion has four prismatic and two "
                         "revolute joints;\nit has two degrees of freedom and infinitely many "
                         "straight line trajectories\n";
            const AllFactorizations res = all_factorizations(c, mode);
            for (std::size_t i = 0; i < res.factorizations.size(); ++i)
                print_factorization(std::cout, res.factorizations[i],
                                    "factorization " + std::to_string(i + 1));
            for (const auto& d : res.diagnostics) std::cout << "note: " << d << "\n";
            return kExitOk;
        }
    }
    return kExitOk;
}

int run_verify(const std::string& path, int samples) {
    const Linkage l = linkage_from_json(load_json(path));
    std::vector<Rat> ts;
    for (int k = 0; k < samples; ++k) ts.push_back(Rat(2 * k - samples + 1, 2));
    const ClosureReport rep = closure_check(l, ts);
    std::cout << "symbolic closure polynomial real: " << (rep.symbolic_real ? "yes" : "no") << "\n";
    for (const auto& s : rep.samples)
        std::cout << "t = " << rat_to_string(s.t) << "  residual = " << rat_to_string(s.residual)
                  << "  " << (s.pass ? "pass" : "FAIL") << "\n";
    std::cout << (rep.all_pass() ? "closure verified" : "closure FAILED") << "\n";
    return rep.all_pass() ? kExitOk : kExitVerify;
}

int run_traj(const std::string& path, const std::string& point_csv, const std::string& range,
             int steps, int decimal) {
    const MotionPoly c = motionpoly_from_json(load_json(path));
    Vec3 point;
    {
        std::stringstream ss(point_csv);
        std::string tok;
        std::vector<Rat> vals;
        while (std::getline(ss, tok, ',')) vals.push_back(rat_from_string(tok));
        if (vals.size() != 3) throw ParseError("--point needs x,y,z");
        point = {vals[0], vals[1], vals[2]};
    }
    Rat lo, hi;
    {
        const auto colon = range.find(':');
        if (colon == std::string::npos) throw ParseError("--range needs lo:hi");
        lo = rat_from_string(range.substr(0, colon));
        hi = rat_from_string(range.substr(colon + 1));
    }
    const auto pts = coupler_trajectory(c, point, lo, hi, steps);
    std::cout << "t,x,y,z\n";
    for (int i = 0; i < steps; ++i) {
        const Rat t = steps == 1 ? lo : lo + (hi - lo) * Rat(i, steps - 1);
        const Vec3& p = pts[static_cast<std::size_t>(i)];
        if (decimal > 0) {
            std::cout << rat_to_decimal(t, decimal) << "," << rat_to_decimal(p.x, decimal) << ","
                      << rat_to_decimal(p.y, decimal) << "," << rat_to_decimal(p.z, decimal)
                      << "\n";
        } else {
            std::cout << rat_to_string(t) << "," << rat_to_string(p.x) << ","
                      << rat_to_string(p.y) << "," << rat_to_string(p.z) << "\n";
        }
    }
    return kExitOk;
}

int run_demo() {
    // the Darboux example: xi = t^2 + 1, eta = 5/2 t - 3/4, h = 7/9 i - 4/9 j + 4/9 k
    const ConstraintInput in = ConstraintInput::validated(
        QPoly::linear_factor(Quaternion(0, Rat(7, 9), Rat(-4, 9), Rat(4, 9))),
        RPoly{Rat(1), Rat(0), Rat(1)}, RPoly{Rat(-3, 4), Rat(5, 2)});

    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            std::cout << "MISMATCH: " << what << "\n";
        }
    };

    check(classify_case(in) == CaseKind::Darboux, "classification is Darboux");
    const MotionPoly c = build_constraint_motion(in);
    const Linkage l = darboux_7r(in);

    // chain a = Q1 Q2 Q3, chain b = Q7 Q6^2 Q5 Q4
    std::vector<LinearFactor> q(8, LinearFactor{DualQuaternion::one(), JointKind::Rotational});
    q[1] = l.chain_a()[0].factor;
    q[2] = l.chain_a()[1].factor;
    q[3] = l.chain_a()[2].factor;
    q[7] = l.chain_b()[0].factor;
    q[6] = l.chain_b()[1].factor;
    q[5] = l.chain_b()[2].factor;
    q[4] = l.chain_b()[3].factor;
    for (int i = 1; i <= 7; ++i)
        std::cout << "Q" << i << " = " << factor_display(q[static_cast<std::size_t>(i)].h) << "\n";

    const char* expected[8] = {
        "",
        "t - 7/9 i - 4/9 j + 4/9 k - 5/4 eps i + 43/64 eps j - 97/64 eps k",
        "t + 7/9 i + 4/9 j - 4/9 k",
        "t - 7/9 i + 4/9 j - 4/9 k - 5/4 eps i - 43/64 eps j + 97/64 eps k",
        "t - 7/9 i + 4/9 j - 4/9 k",
        "t - j - 5/4 eps i + 3/8 eps k",
        "t + j",
        "t - j - 5/4 eps i - 3/8 eps k",
    };
    for (int i = 1; i <= 7; ++i)
        check(factor_display(q[static_cast<std::size_t>(i)].h) == expected[i],
              "Q" + std::to_string(i) + " matches the reference value");

    check(l.chain_b()[1].multiplicity == 2, "Q6 is traversed twice");
    check(l.joint_count() == 7, "seven joints");
    for (const auto& j : l.loop_joints())
        check(j.factor.kind == JointKind::Rotational, "all joints rotational");

    // product identities
    DQPoly prod_a = l.chain_a_poly();
    DQPoly prod_b = l.chain_b_poly();
    check(prod_a == c.raw(), "Q1 Q2 Q3 = C");
    check(prod_b == in.xi * c.raw(), "Q7 Q6^2 Q5 Q4 = (t^2+1) C");
    check(projective_equal(prod_a, prod_b), "the two chains are projectively equal");

    // parallel classes {Q1,Q2}, {Q3,Q4}, {Q5,Q6,Q7}
    auto par = [&](int i, int j) {
        return parallel(axis_of(q[static_cast<std::size_t>(i)].h).direction,
                        axis_of(q[static_cast<std::size_t>(j)].h).direction);
    };
    check(par(1, 2) && par(3, 4) && par(5, 6) && par(6, 7), "parallel classes hold");
    check(!par(1, 3) && !par(1, 5) && !par(3, 5), "parallel classes are distinct");

    // closure and the straight-line trajectory
    std::vector<Rat> ts;
    for (int k = 0; k < 20; ++k) ts.push_back(Rat(2 * k - 19, 2));
    check(closure_check(l, ts).all_pass(), "closure holds at 20 samples");
    const auto traj = coupler_trajectory(c, Vec3{}, Rat(-2), Rat(2), 9);
    check(straight_line_test(traj), "origin trajectory is a straight line");
    for (const auto& p : traj) check(p.y == 0 && p.z == 0, "trajectory stays on the x-axis");

    if (failures == 0) {
        std::cout << "all checks passed\n";
        return kExitOk;
    }
    std::cout << failures << " check(s) failed\n";
    return kExitVerify;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact factorization of motion polynomials and straight-line linkage synthesis"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--mode", cfg.mode, "arithmetic mode: exact or float");
    app.add_option("--eps", cfg.eps, "tolerance for float mode")->each([&](const std::string&) {
        cfg.eps_set = true;
    });
    app.add_option("--output", cfg.output, "output format: pretty or json");

    auto* factor = app.add_subcommand("factor", "factor a motion polynomial file");
    std::string factor_input, order_csv;
    bool all = false;
    factor->add_option("input", factor_input, "motion polynomial json")->required();
    factor->add_option("--order", order_csv, "comma-separated norm factor indices");
    factor->add_flag("--all", all, "enumerate all factorizations");

    auto* synth = app.add_subcommand("synth", "run the straight-line synthesis pipeline");
    std::string synth_input;
    synth->add_option("input", synth_input, "constraint input json")->required();

    auto* classify = app.add_subcommand("classify", "classify a constraint input");
    std::string classify_input;
    classify->add_option("input", classify_input, "constraint input json")->required();

    auto* verify = app.add_subcommand("verify", "verify linkage closure");
    std::string verify_input;
    int samples = 20;
    verify->add_option("input", verify_input, "linkage json")->required();
    verify->add_option("--samples", samples, "number of rational samples");

    auto* traj = app.add_subcommand("traj", "export a coupler trajectory as csv");
    std::string traj_input, point_csv = "0,0,0", range = "-2:2";
    int steps = 9, decimal = 0;
    traj->add_option("input", traj_input, "motion polynomial json")->required();
    traj->add_option("--point", point_csv, "point x,y,z (rationals)");
    traj->add_option("--range", range, "parameter range lo:hi");
    traj->add_option("--steps", steps, "number of samples");
    traj->add_option("--decimal", decimal, "decimal digits (default: exact rationals)");

    auto* demo = app.add_subcommand("demo", "run a built-in example");
    std::string demo_name;
    demo->add_option("name", demo_name, "demo name (darboux7r)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    if (const int code = cfg.validate(); code != kExitOk) return code;

    try {
        if (*factor) return run_factor(factor_input, cfg, order_csv, all);
        if (*synth) return run_synth(synth_input, cfg);
        if (*classify) return run_classify(classify_input);
        if (*verify) return run_verify(verify_input, samples);
        if (*traj) return run_traj(traj_input, point_csv, range, steps, decimal);
        if (*demo) {
            if (demo_name != "darboux7r") {
                std::cerr << "error: unknown demo '" << demo_name << "'\n";
                return kExitParse;
            }
            return run_demo();
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotMotionPolynomial& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ConstraintViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ExactModeIrrationalSplit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIrrational;
    } catch (const ExactModeIrrationalRoot& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIrrational;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerify;
    }
    return kExitOk;
}
