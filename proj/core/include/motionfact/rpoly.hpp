#pragma once

#include "motionfact/rational.hpp"

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace motionfact {

/// Univariate polynomial with exact rational coefficients, stored in
/// ascending degree with no trailing zeros. The zero polynomial has an empty
/// coefficient list and no degree (degree() is nullopt, never -1).
class RPoly {
public:
    RPoly() = default;
    RPoly(std::initializer_list<Rat> ascending);
    explicit RPoly(std::vector<Rat> ascending);

    static RPoly zero() { return RPoly(); }
    static RPoly constant(const Rat& c);
    /// The monomial t.
    static RPoly t();
    /// c * t^k.
    static RPoly monomial(const Rat& c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const;
    /// Coefficient of t^i (zero outside the stored range).
    const Rat& coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat leading() const;
    bool is_monic() const;
    bool is_constant() const { return coeffs_.size() <= 1; }

    Rat operator()(const Rat& at) const;

    RPoly operator-() const;
    RPoly operator+(const RPoly& rhs) const;
    RPoly operator-(const RPoly& rhs) const;
    RPoly operator*(const RPoly& rhs) const;
    RPoly operator*(const Rat& scalar) const;
    bool operator==(const RPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const RPoly& rhs) const { return !(*this == rhs); }

    /// Total order (degree first, then coefficients from the top); used for
    /// deterministic sorting of factor lists.
    static int compare(const RPoly& a, const RPoly& b);
    bool operator<(const RPoly& rhs) const { return compare(*this, rhs) < 0; }

    RPoly monic() const;
    RPoly derivative() const;

    /// Euclidean division a = q*b + r with deg r < deg b. b must be nonzero.
    static std::pair<RPoly, RPoly> divmod(const RPoly& a, const RPoly& b);
    /// Monic gcd; gcd(0,0) = 0.
    static RPoly gcd(const RPoly& a, const RPoly& b);

    /// Yun's square-free decomposition: returns pairs (s_k, k) with
    /// p = lc * prod s_k^k, s_k monic square-free and pairwise coprime,
    /// deg s_k >= 1. Requires p nonzero.
    std::vector<std::pair<RPoly, int>> squarefree_decomposition() const;

    /// Human-readable form such as "t^2 - 3t + 2".
    std::string str() const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Exact divisibility test: true iff p mod d == 0. d must be nonzero.
bool rpoly_divides(const RPoly& d, const RPoly& p);

} // namespace motionfact
