#include "motionfact/motionpoly.hpp"

#include "motionfact/errors.hpp"

#include <sstream>

namespace motionfact {

namespace {
const DualQuaternion kZeroDQ{};
const Quaternion kZeroQ{};
} // namespace

DQPoly::DQPoly(std::vector<DualQuaternion> ascending) : coeffs_(std::move(ascending)) { trim(); }

DQPoly::DQPoly(std::initializer_list<DualQuaternion> ascending) : coeffs_(ascending) { trim(); }

DQPoly DQPoly::constant(const DualQuaternion& c) { return DQPoly({c}); }

DQPoly DQPoly::linear_factor(const DualQuaternion& h) {
    return DQPoly({-h, DualQuaternion::one()});
}

DQPoly DQPoly::from_real(const RPoly& p) {
    std::vector<DualQuaternion> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(DualQuaternion::scalar(c));
    return DQPoly(std::move(v));
}

void DQPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<int> DQPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const DualQuaternion& DQPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZeroDQ;
    return coeffs_[static_cast<std::size_t>(i)];
}

DualQuaternion DQPoly::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool DQPoly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == DualQuaternion::one();
}

DQPoly DQPoly::operator+(const DQPoly& rhs) const {
    std::vector<DualQuaternion> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = v[i] + coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] = v[i] + rhs.coeffs_[i];
    return DQPoly(std::move(v));
}

DQPoly DQPoly::operator-() const {
    std::vector<DualQuaternion> v(coeffs_);
    for (auto& c : v) c = -c;
    return DQPoly(std::move(v));
}

DQPoly DQPoly::operator-(const DQPoly& rhs) const { return *this + (-rhs); }

DQPoly DQPoly::operator*(const DQPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return DQPoly();
    std::vector<DualQuaternion> v(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            v[i + j] = v[i + j] + coeffs_[i] * rhs.coeffs_[j];
    return DQPoly(std::move(v));
}

DQPoly DQPoly::operator*(const Rat& s) const {
    std::vector<DualQuaternion> v(coeffs_);
    for (auto& c : v) c = c * s;
    return DQPoly(std::move(v));
}

DQPoly DQPoly::conj() const {
    std::vector<DualQuaternion> v(coeffs_);
    for (auto& c : v) c = c.conj();
    return DQPoly(std::move(v));
}

DualQuaternion DQPoly::eval_right(const DualQuaternion& h) const {
    DualQuaternion acc;
    DualQuaternion power = DualQuaternion::one();
    for (const auto& c : coeffs_) {
        acc = acc + c * power;
        power = power * h;
    }
    return acc;
}

bool DQPoly::is_real() const {
    for (const auto& c : coeffs_)
        if (!c.is_real_scalar()) return false;
    return true;
}

RPoly DQPoly::to_real() const {
    std::vector<Rat> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (!c.is_real_scalar()) throw Error("polynomial is not real");
        v.push_back(c.primal.w);
    }
    return RPoly(std::move(v));
}

DQPoly DQPoly::primal_part() const {
    std::vector<DualQuaternion> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(DualQuaternion::from_primal(c.primal));
    return DQPoly(std::move(v));
}

DQPoly DQPoly::dual_part() const {
    std::vector<DualQuaternion> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(DualQuaternion::from_primal(c.dual));
    return DQPoly(std::move(v));
}

std::string DQPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        const DualQuaternion& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        if (c == DualQuaternion::one() && i > 0) {
            // coefficient 1 prints as the bare power
        } else {
            os << "(" << c.str() << ")";
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

DQPoly operator*(const RPoly& real, const DQPoly& p) { return DQPoly::from_real(real) * p; }

QPoly::QPoly(std::vector<Quaternion> ascending) : coeffs_(std::move(ascending)) { trim(); }

QPoly::QPoly(std::initializer_list<Quaternion> ascending) : coeffs_(ascending) { trim(); }

QPoly QPoly::linear_factor(const Quaternion& h) { return QPoly({-h, Quaternion::scalar(1)}); }

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<int> QPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const Quaternion& QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZeroQ;
    return coeffs_[static_cast<std::size_t>(i)];
}

bool QPoly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == Quaternion::scalar(1);
}

bool QPoly::is_real() const {
    for (const auto& c : coeffs_)
        if (!c.is_real()) return false;
    return true;
}

QPoly QPoly::operator*(const QPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return QPoly();
    std::vector<Quaternion> v(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            v[i + j] = v[i + j] + coeffs_[i] * rhs.coeffs_[j];
    return QPoly(std::move(v));
}

QPoly QPoly::conj() const {
    std::vector<Quaternion> v(coeffs_);
    for (auto& c : v) c = c.conj();
    return QPoly(std::move(v));
}

RPoly QPoly::norm_poly() const { return (to_dqpoly() * to_dqpoly().conj()).to_real(); }

DQPoly QPoly::to_dqpoly() const {
    std::vector<DualQuaternion> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(DualQuaternion::from_primal(c));
    return DQPoly(std::move(v));
}

MotionPoly MotionPoly::certify(const DQPoly& c) {
    const DQPoly n = c * c.conj();
    if (!n.is_real())
        throw NotMotionPolynomial("C conj(C) is not a real polynomial: " + n.str());
    return MotionPoly(c);
}

MotionPoly MotionPoly::linear_factor(const DualQuaternion& h) {
    return certify(DQPoly::linear_factor(h));
}

MotionPoly MotionPoly::operator*(const MotionPoly& rhs) const {
    // products of motion polynomials are motion polynomials; re-certify anyway
    return certify(poly_ * rhs.poly_);
}

MotionPoly MotionPoly::conj_poly() const { return certify(poly_.conj()); }

RPoly MotionPoly::norm_poly() const { return (poly_ * poly_.conj()).to_real(); }

std::pair<DQPoly, DQPoly> right_divide_by_real(const DQPoly& c, const RPoly& m) {
    if (m.is_zero() || !m.is_monic() || *m.degree() < 1)
        throw Error("right division requires a monic real divisor of degree >= 1");
    std::vector<DualQuaternion> rem(c.coeffs());
    const int dm = *m.degree();
    if (static_cast<int>(rem.size()) - 1 < dm) return {DQPoly(), c};
    std::vector<DualQuaternion> quo(rem.size() - static_cast<std::size_t>(dm));
    for (int i = static_cast<int>(rem.size()) - 1; i >= dm; --i) {
        const DualQuaternion q = rem[static_cast<std::size_t>(i)];
        if (q.is_zero()) continue;
        quo[static_cast<std::size_t>(i - dm)] = q;
        for (int j = 0; j <= dm; ++j)
            rem[static_cast<std::size_t>(i - dm + j)] =
                rem[static_cast<std::size_t>(i - dm + j)] - q * m.coeff(j);
    }
    return {DQPoly(std::move(quo)), DQPoly(std::move(rem))};
}

DQPoly quo_right_linear(const DQPoly& c, const DualQuaternion& h) {
    if (c.is_zero()) throw NotAFactor("cannot divide the zero polynomial");
    const int n = *c.degree();
    if (n < 1) throw NotAFactor("degree too small for a linear right factor");
    // C = Q(t-h): c_i = q_{i-1} - q_i h, solved from the top degree down
    std::vector<DualQuaternion> q(static_cast<std::size_t>(n));
    q[static_cast<std::size_t>(n - 1)] = c.coeff(n);
    for (int i = n - 1; i >= 1; --i)
        q[static_cast<std::size_t>(i - 1)] = c.coeff(i) + q[static_cast<std::size_t>(i)] * h;
    const DQPoly quotient(std::move(q));
    if (!(quotient * DQPoly::linear_factor(h) == c))
        throw NotAFactor("t - h is not a right factor (nonzero remainder)");
    return quotient;
}

MotionPoly quo_right_linear(const MotionPoly& c, const DualQuaternion& h) {
    return MotionPoly::certify(quo_right_linear(c.raw(), h));
}

DQPoly quo_left_linear(const DQPoly& c, const DualQuaternion& h) {
    if (c.is_zero()) throw NotAFactor("cannot divide the zero polynomial");
    const int n = *c.degree();
    if (n < 1) throw NotAFactor("degree too small for a linear left factor");
    // C = (t-h)Q: c_i = q_{i-1} - h q_i, mirrored recursion
    std::vector<DualQuaternion> q(static_cast<std::size_t>(n));
    q[static_cast<std::size_t>(n - 1)] = c.coeff(n);
    for (int i = n - 1; i >= 1; --i)
        q[static_cast<std::size_t>(i - 1)] = c.coeff(i) + h * q[static_cast<std::size_t>(i)];
    const DQPoly quotient(std::move(q));
    if (!(DQPoly::linear_factor(h) * quotient == c))
        throw NotAFactor("t - h is not a left factor (nonzero remainder)");
    return quotient;
}

MotionPoly quo_left_linear(const MotionPoly& c, const DualQuaternion& h) {
    return MotionPoly::certify(quo_left_linear(c.raw(), h));
}

std::pair<RPoly, DQPoly> real_content(const DQPoly& a) {
    if (a.is_zero()) throw Error("real content of zero polynomial");
    // the maximal real factor is the gcd of the eight component polynomials
    RPoly g;
    for (int comp = 0; comp < 8; ++comp) {
        std::vector<Rat> v;
        v.reserve(a.coeffs().size());
        for (const auto& c : a.coeffs()) v.push_back(c.components()[static_cast<std::size_t>(comp)]);
        g = RPoly::gcd(g, RPoly(std::move(v)));
        if (!g.is_zero() && g.is_constant()) break;
    }
    RPoly content = g.is_zero() ? RPoly::constant(Rat(1)) : g;
    // divide out coefficient-wise (exact by construction)
    std::vector<DualQuaternion> prim;
    if (content.is_constant() && content.coeff(0) == 1) {
        return {content, a};
    }
    std::array<std::vector<Rat>, 8> comps;
    for (int comp = 0; comp < 8; ++comp) {
        std::vector<Rat> v;
        v.reserve(a.coeffs().size());
        for (const auto& c : a.coeffs()) v.push_back(c.components()[static_cast<std::size_t>(comp)]);
        const auto [q, r] = RPoly::divmod(RPoly(std::move(v)), content);
        if (!r.is_zero()) throw Error("internal: real content does not divide");
        comps[static_cast<std::size_t>(comp)] = q.coeffs();
    }
    std::size_t len = 0;
    for (const auto& v : comps) len = std::max(len, v.size());
    for (std::size_t i = 0; i < len; ++i) {
        std::array<Rat, 8> c{};
        for (int comp = 0; comp < 8; ++comp) {
            const auto& v = comps[static_cast<std::size_t>(comp)];
            c[static_cast<std::size_t>(comp)] = i < v.size() ? v[i] : Rat(0);
        }
        prim.push_back(DualQuaternion::from_components(c));
    }
    return {content, DQPoly(std::move(prim))};
}

bool projective_equal(const DQPoly& a, const DQPoly& b) {
    if (a.is_zero() || b.is_zero()) throw Error("projective equality of zero polynomial");
    const DQPoly pa = real_content(a).second;
    const DQPoly pb = real_content(b).second;
    if (pa.degree() != pb.degree()) return false;
    // pa must equal pb up to one rational constant
    const int n = *pa.degree();
    Rat num, den;
    bool have_scale = false;
    for (int i = 0; i <= n && !have_scale; ++i) {
        const auto ca = pa.coeff(i).components();
        const auto cb = pb.coeff(i).components();
        for (int comp = 0; comp < 8; ++comp) {
            const Rat& va = ca[static_cast<std::size_t>(comp)];
            const Rat& vb = cb[static_cast<std::size_t>(comp)];
            if (vb != 0) {
                num = va;
                den = vb;
                have_scale = true;
                break;
            }
            if (va != 0) return false;
        }
    }
    if (!have_scale || num == 0) return false;
    const Rat scale = num / den;
    for (int i = 0; i <= n; ++i)
        if (!(pb.coeff(i) * scale == pa.coeff(i))) return false;
    return true;
}

bool projective_equal(const MotionPoly& a, const MotionPoly& b) {
    return projective_equal(a.raw(), b.raw());
}

} // namespace motionfact
