#include "motionfact/rpoly.hpp"

#include "motionfact/errors.hpp"

#include <algorithm>
#include <sstream>

namespace motionfact {

namespace {
const Rat kZero(0);
}

RPoly::RPoly(std::initializer_list<Rat> ascending) : coeffs_(ascending) { trim(); }

RPoly::RPoly(std::vector<Rat> ascending) : coeffs_(std::move(ascending)) { trim(); }

RPoly RPoly::constant(const Rat& c) { return RPoly({c}); }

RPoly RPoly::t() { return RPoly({Rat(0), Rat(1)}); }

RPoly RPoly::monomial(const Rat& c, int k) {
    std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
    v.back() = c;
    return RPoly(std::move(v));
}

void RPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> RPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rat& RPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rat RPoly::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool RPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

Rat RPoly::operator()(const Rat& at) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

RPoly RPoly::operator-() const {
    std::vector<Rat> v(coeffs_);
    for (auto& c : v) c = -c;
    return RPoly(std::move(v));
}

RPoly RPoly::operator+(const RPoly& rhs) const {
    std::vector<Rat> v(std::max(coeffs_.size(), rhs.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
    return RPoly(std::move(v));
}

RPoly RPoly::operator-(const RPoly& rhs) const { return *this + (-rhs); }

RPoly RPoly::operator*(const RPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return RPoly();
    std::vector<Rat> v(coeffs_.size() + rhs.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return RPoly(std::move(v));
}

RPoly RPoly::operator*(const Rat& scalar) const {
    std::vector<Rat> v(coeffs_);
    for (auto& c : v) c *= scalar;
    return RPoly(std::move(v));
}

int RPoly::compare(const RPoly& a, const RPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size() ? -1 : 1;
    for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i] ? -1 : 1;
    }
    return 0;
}

RPoly RPoly::monic() const {
    if (is_zero()) throw Error("monic() of zero polynomial");
    const Rat inv = Rat(1) / leading();
    return *this * inv;
}

RPoly RPoly::derivative() const {
    if (coeffs_.size() <= 1) return RPoly();
    std::vector<Rat> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rat(static_cast<int>(i));
    return RPoly(std::move(v));
}

std::pair<RPoly, RPoly> RPoly::divmod(const RPoly& a, const RPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rat> rem(a.coeffs_);
    const int db = *b.degree();
    const Rat lead_inv = Rat(1) / b.leading();
    if (static_cast<int>(rem.size()) - 1 < db) return {RPoly(), a};
    std::vector<Rat> quo(rem.size() - static_cast<std::size_t>(db), Rat(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        const Rat c = rem[static_cast<std::size_t>(i)] * lead_inv;
        if (c == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return {RPoly(std::move(quo)), RPoly(std::move(rem))};
}

RPoly RPoly::gcd(const RPoly& a, const RPoly& b) {
    RPoly x = a, y = b;
    while (!y.is_zero()) {
        RPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

std::vector<std::pair<RPoly, int>> RPoly::squarefree_decomposition() const {
    if (is_zero()) throw Error("square-free decomposition of zero polynomial");
    std::vector<std::pair<RPoly, int>> out;
    RPoly p = monic();
    if (p.is_constant()) return out;
    // Yun's algorithm over a characteristic-zero field.
    RPoly g = gcd(p, p.derivative());
    RPoly w = divmod(p, g).first;
    int k = 1;
    while (!(w.is_constant())) {
        const RPoly y = gcd(w, g);
        const RPoly s = divmod(w, y).first;
        if (!s.is_constant()) out.emplace_back(s.monic(), k);
        w = y;
        g = divmod(g, y).first;
        ++k;
    }
    return out;
}

std::string RPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        const Rat& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const Rat a = abs(c);
        if (i == 0 || a != 1) os << rat_to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

bool rpoly_divides(const RPoly& d, const RPoly& p) {
    if (d.is_zero()) throw Error("divisibility test by zero polynomial");
    return RPoly::divmod(p, d).second.is_zero();
}

} // namespace motionfact
