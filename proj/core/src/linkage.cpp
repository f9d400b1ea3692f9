#include "motionfact/linkage.hpp"

#include "motionfact/errors.hpp"

#include <algorithm>
#include <map>

namespace motionfact {

namespace {

std::vector<ChainJoint> compress(const std::vector<LinearFactor>& factors) {
    std::vector<ChainJoint> out;
    for (const auto& f : factors) {
        if (!out.empty() && out.back().factor == f) {
            ++out.back().multiplicity;
        } else {
            out.push_back({f, 1});
        }
    }
    return out;
}

DQPoly chain_poly(const std::vector<ChainJoint>& chain) {
    DQPoly prod = DQPoly::constant(DualQuaternion::one());
    for (const auto& j : chain)
        for (int i = 0; i < j.multiplicity; ++i) prod = prod * DQPoly::linear_factor(j.factor.h);
    return prod;
}

} // namespace

Linkage Linkage::assemble(const Factorization& f1, const Factorization& f2,
                          std::vector<std::string> annotations) {
    if (f1.factors().empty() || f2.factors().empty())
        throw Error("cannot assemble from an empty factorization");
    if (!projective_equal(f1.factor_product(), f2.factor_product()))
        throw NotSameMotion("the two chains do not parameterize the same motion");
    if (f1.factors().front() == f2.factors().front())
        throw DanglingLink("chains share their first factor");
    if (f1.factors().back() == f2.factors().back())
        throw DanglingLink("chains share their last factor");
    Linkage l;
    l.chain_a_ = compress(f1.factors());
    l.chain_b_ = compress(f2.factors());
    l.annotations_ = std::move(annotations);
    for (const auto& j : l.chain_a_)
        if (j.multiplicity > 1) l.annotations_.push_back("chain a: doubled-axis traversal");
    for (const auto& j : l.chain_b_)
        if (j.multiplicity > 1) l.annotations_.push_back("chain b: doubled-axis traversal");
    return l;
}

Linkage Linkage::from_chains(std::vector<ChainJoint> a, std::vector<ChainJoint> b,
                             std::vector<std::string> annotations) {
    if (a.empty() || b.empty()) throw Error("cannot build a linkage from an empty chain");
    Linkage l;
    l.chain_a_ = std::move(a);
    l.chain_b_ = std::move(b);
    l.annotations_ = std::move(annotations);
    if (!projective_equal(l.chain_a_poly(), l.chain_b_poly()))
        throw NotSameMotion("the two chains do not parameterize the same motion");
    if (l.chain_a_.front().factor == l.chain_b_.front().factor)
        throw DanglingLink("chains share their first factor");
    if (l.chain_a_.back().factor == l.chain_b_.back().factor)
        throw DanglingLink("chains share their last factor");
    return l;
}

int Linkage::joint_count() const {
    return static_cast<int>(chain_a_.size() + chain_b_.size());
}

std::vector<ChainJoint> Linkage::loop_joints() const {
    std::vector<ChainJoint> out = chain_a_;
    out.insert(out.end(), chain_b_.rbegin(), chain_b_.rend());
    return out;
}

std::string Linkage::signature() const {
    std::string s;
    for (const auto& j : loop_joints())
        s += (j.factor.kind == JointKind::Rotational) ? 'R' : 'P';
    return s;
}

DQPoly Linkage::chain_a_poly() const { return chain_poly(chain_a_); }
DQPoly Linkage::chain_b_poly() const { return chain_poly(chain_b_); }

bool ClosureReport::all_pass() const {
    if (!symbolic_real) return false;
    return std::all_of(samples.begin(), samples.end(),
                       [](const ClosureSample& s) { return s.pass; });
}

ClosureReport closure_check(const Linkage& l, const std::vector<Rat>& samples) {
    ClosureReport report;
    const DQPoly a = l.chain_a_poly();
    const DQPoly b = l.chain_b_poly();
    const DQPoly closure = a * b.conj();
    report.symbolic_real = closure.is_real();
    for (const Rat& t : samples) {
        const DualQuaternion g = a(t) * b(t).conj();
        Rat residual(0);
        const auto comps = g.components();
        for (std::size_t i = 1; i < comps.size(); ++i) {
            const Rat v = abs(comps[i]);
            if (v > residual) residual = v;
        }
        const bool pass = residual == 0 && comps[0] != 0;
        report.samples.push_back({t, pass, residual});
    }
    return report;
}

namespace {

// Common point of a set of Pluecker lines: stacked equations p x d_i = m_i,
// solved exactly; nullopt when the lines have no common point.
std::optional<Vec3> common_point(const std::vector<PlueckerLine>& lines) {
    std::vector<std::array<Rat, 4>> rows; // 3 unknowns + rhs
    for (const auto& line : lines) {
        const Vec3& d = line.direction;
        const Vec3& m = line.moment;
        // p x d = m componentwise
        rows.push_back({Rat(0), d.z, -d.y, m.x});
        rows.push_back({-d.z, Rat(0), d.x, m.y});
        rows.push_back({d.y, -d.x, Rat(0), m.z});
    }
    std::size_t row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < 3 && row < rows.size(); ++col) {
        std::size_t piv = row;
        while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[row]);
        const Rat inv = Rat(1) / rows[row][static_cast<std::size_t>(col)];
        for (auto& v : rows[row]) v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == row || rows[r][static_cast<std::size_t>(col)] == 0) continue;
            const Rat f = rows[r][static_cast<std::size_t>(col)];
            for (std::size_t c = 0; c < 4; ++c) rows[r][c] -= f * rows[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows.size(); ++r)
        if (rows[r][3] != 0) return std::nullopt;
    if (pivot_col.size() < 3) {
        // underdetermined: lines are coincident or all parallel through a
        // pencil; report the particular solution anyway
    }
    Vec3 p;
    Rat* comps[3] = {&p.x, &p.y, &p.z};
    for (std::size_t r = 0; r < row; ++r)
        *comps[static_cast<std::size_t>(pivot_col[r])] = rows[r][3];
    return p;
}

} // namespace

GeometricReport geometric_report(const Linkage& l) {
    GeometricReport report;
    const auto joints = l.loop_joints();
    const int n = static_cast<int>(joints.size());
    std::vector<AxisGeometry> axes;
    axes.reserve(joints.size());
    for (const auto& j : joints) axes.push_back(axis_of(j.factor.h));

    // parallel classes over all joints (full partition)
    std::vector<int> cls(joints.size(), -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        if (cls[static_cast<std::size_t>(i)] >= 0) continue;
        cls[static_cast<std::size_t>(i)] = next;
        for (int j = i + 1; j < n; ++j) {
            if (cls[static_cast<std::size_t>(j)] < 0 &&
                parallel(axes[static_cast<std::size_t>(i)].direction,
                         axes[static_cast<std::size_t>(j)].direction))
                cls[static_cast<std::size_t>(j)] = next;
        }
        ++next;
    }
    report.parallel_classes.assign(static_cast<std::size_t>(next), {});
    for (int i = 0; i < n; ++i)
        report.parallel_classes[static_cast<std::size_t>(cls[static_cast<std::size_t>(i)])].push_back(i);

    // concurrency: maximal sets of >= 2 rotational axes with a common point
    std::map<std::pair<std::string, std::string>, bool> seen_points;
    for (int i = 0; i < n; ++i) {
        if (!axes[static_cast<std::size_t>(i)].is_line()) continue;
        for (int j = i + 1; j < n; ++j) {
            if (!axes[static_cast<std::size_t>(j)].is_line()) continue;
            const auto pt = common_point(
                {axes[static_cast<std::size_t>(i)].line(), axes[static_cast<std::size_t>(j)].line()});
            if (!pt) continue;
            std::vector<int> through;
            for (int k = 0; k < n; ++k) {
                if (!axes[static_cast<std::size_t>(k)].is_line()) continue;
                if (axes[static_cast<std::size_t>(k)].line().contains(*pt)) through.push_back(k);
            }
            const auto key = std::make_pair(rat_to_string(pt->x) + "," + rat_to_string(pt->y),
                                            rat_to_string(pt->z));
            if (seen_points.emplace(key, true).second)
                report.concurrent_points.push_back({*pt, std::move(through)});
        }
    }

    // origin incidence; translational joints are reported through the origin
    // representative of their direction line
    for (int i = 0; i < n; ++i) {
        const auto& ax = axes[static_cast<std::size_t>(i)];
        if (!ax.is_line() || ax.line().passes_through_origin()) report.through_origin.push_back(i);
    }

    // squared-cosine angle equalities at a shared middle axis
    for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a) {
            if (a == b) continue;
            for (int c = a + 1; c < n; ++c) {
                if (c == b) continue;
                const auto ab = angle_cos_squared(axes[static_cast<std::size_t>(a)].direction,
                                                  axes[static_cast<std::size_t>(b)].direction);
                const auto bc = angle_cos_squared(axes[static_cast<std::size_t>(b)].direction,
                                                  axes[static_cast<std::size_t>(c)].direction);
                if (ab == bc) report.angle_equalities.push_back({a, b, c, ab});
            }
        }
    }

    report.joint_signature = l.signature();

    for (int i = 0; i < n; ++i) {
        const auto& f = joints[static_cast<std::size_t>(i)].factor;
        if (f.kind != JointKind::Rotational) continue;
        report.half_angles.push_back({i, f.h.primal.w, f.h.primal.vec().norm2()});
    }
    return report;
}

std::vector<Vec3> coupler_trajectory(const MotionPoly& motion, const Vec3& point, const Rat& lo,
                                     const Rat& hi, int steps) {
    if (steps < 1) throw Error("trajectory needs at least one step");
    std::vector<Vec3> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const Rat t = steps == 1 ? lo : lo + (hi - lo) * Rat(i, steps - 1);
        const DualQuaternion g = motion(t);
        if (g.primal.is_zero())
            throw PoleAtParameter("motion has zero primal part at t = " + rat_to_string(t));
        out.push_back(act_on_point(g, point));
    }
    return out;
}

bool straight_line_test(const std::vector<Vec3>& points) {
    if (points.size() <= 2) return true;
    Vec3 dir;
    for (std::size_t i = 1; i < points.size(); ++i) {
        dir = points[i] - points[0];
        if (!dir.is_zero()) break;
    }
    if (dir.is_zero()) return true; // all coincident
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i] - points[0]).cross(dir).is_zero()) return false;
    return true;
}

namespace {

Rat det4(const std::array<std::array<Rat, 4>, 4>& m) {
    // Laplace expansion along the first row over 3x3 minors
    auto det3 = [](const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e,
                   const Rat& f, const Rat& g, const Rat& h, const Rat& i) {
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
    };
    Rat total(0);
    for (int col = 0; col < 4; ++col) {
        std::array<Rat, 9> sub;
        int idx = 0;
        for (int r = 1; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                if (c == col) continue;
                sub[static_cast<std::size_t>(idx++)] = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            }
        const Rat minor = det3(sub[0], sub[1], sub[2], sub[3], sub[4], sub[5], sub[6], sub[7], sub[8]);
        const Rat term = m[0][static_cast<std::size_t>(col)] * minor;
        total += (col % 2 == 0) ? term : -term;
    }
    return total;
}

} // namespace

bool planarity_test(const std::vector<Vec3>& points) {
    const std::size_t n = points.size();
    if (n <= 3) return true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    const std::array<std::array<Rat, 4>, 4> m = {{
                        {Rat(1), points[a].x, points[a].y, points[a].z},
                        {Rat(1), points[b].x, points[b].y, points[b].z},
                        {Rat(1), points[c].x, points[c].y, points[c].z},
                        {Rat(1), points[d].x, points[d].y, points[d].z},
                    }};
                    if (det4(m) != 0) return false;
                }
    return true;
}

} // namespace motionfact
