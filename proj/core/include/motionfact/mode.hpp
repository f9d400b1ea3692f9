#pragma once

namespace motionfact {

/// Arithmetic mode for root and factor searches.
///
/// Exact mode (the default) admits only rational results and verifies every
/// candidate with exact arithmetic. Float mode accepts numeric results whose
/// residuals stay below the caller-supplied eps.
class Mode {
public:
    static Mode exact() { return Mode(true, 0.0); }
    static Mode approx(double eps) { return Mode(false, eps); }

    bool is_exact() const { return exact_; }
    double eps() const { return eps_; }

private:
    Mode(bool exact, double eps) : exact_(exact), eps_(eps) {}
    bool exact_;
    double eps_;
};

} // namespace motionfact
