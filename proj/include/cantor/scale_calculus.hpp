#pragma once

/**
 * Difference quotients measured in the ultrametric norm, the exact
 * phi-vs-length scaling identity on level-k intervals, and finite-k
 * surrogates for the logarithmic one-sided derivatives of phi.
 */

#include <functional>
#include <optional>
#include <vector>

#include "cantor/rational.hpp"
#include "cantor/real.hpp"
#include "cantor/spec.hpp"
#include "cantor/ultrametric.hpp"

namespace cantor {

enum class Verdict { ConvergesTo, Bounded, Diverges };

struct QuotientStep {
    CantorPoint x;
    Rational numerator;     // |f(x) - f(x0)| or ||f(x) - f(x0)||
    Rational distance;      // ||x - x0|| = p^-n
    Rational quotient;
};

struct QuotientTrace {
    CantorPoint x0;
    std::vector<QuotientStep> steps;
    Verdict verdict = Verdict::Bounded;
    Rational limit;         // ConvergesTo: last quotient
    Rational min, max;      // over all steps
};

// Spread of the last five quotients below which the trace is declared convergent.
inline constexpr double kConvergenceTolerance = 1e-9;
inline constexpr int kConvergenceWindow = 5;

using RealValued = std::function<Rational(const CantorPoint&)>;
using SelfMap = std::function<CantorPoint(const CantorPoint&)>;

// x_k keeps the first k digits of x0, replaces digit k+1 by the nearest
// other kept digit (the smaller one on ties) and then follows x0's digits.
std::vector<CantorPoint> approach_sequence(const CantorPoint& x0, const CantorSpec& spec, int depth);

QuotientTrace na_derivative(const RealValued& f, const CantorPoint& x0, const CantorSpec& spec,
                            int depth);
QuotientTrace na_derivative_along(const RealValued& f, const CantorPoint& x0,
                                  const CantorSpec& spec, const std::vector<CantorPoint>& sequence);

QuotientTrace na_derivative_c2c(const SelfMap& f, const CantorPoint& x0, const CantorSpec& spec,
                                int depth);
QuotientTrace na_derivative_c2c_along(const SelfMap& f, const CantorPoint& x0,
                                      const CantorSpec& spec,
                                      const std::vector<CantorPoint>& sequence);

// Level-k interval [alpha, beta] of C containing x.
Interval containing_interval(const CantorPoint& x, const CantorSpec& spec, int k);

// phi(beta_k) - phi(alpha_k) - (r/p)^k (beta_k - alpha_k); exactly zero.
Rational scaling_identity(const CantorSpec& spec, const CantorPoint& x, int k);

struct LogLimitRecord {
    int k;
    Rational alpha, beta;
    Rational phi_alpha, phi_beta, phi_x;
    // Pre-exponential forms: ln sigma_+ = a_plus / k, ln phi'_+ = b_plus / k, ...
    Rational a_plus, a_minus, b_plus, b_minus;
    Real sigma_plus, sigma_minus, dphi_plus, dphi_minus;
    Rational exact_residual;  // b_plus + b_minus - a_plus - a_minus
    Real log_residual;        // ln phi'_+ + ln phi'_- - ln sigma_+ - ln sigma_-
    std::optional<Rational> ratio_plus;   // ln phi'_+ / ln sigma_+ when sigma_+ != 1
    std::optional<Rational> ratio_minus;
};

enum class Branch { Both, RightOnly, LeftOnly };

struct LogLimitDiagnostics {
    std::vector<LogLimitRecord> records;
    Branch branch = Branch::Both;
    std::optional<Rational> ratio_plus_limit;   // set when the last five agree to tolerance
    std::optional<Rational> ratio_minus_limit;
};

LogLimitDiagnostics log_limit_diagnostics(const CantorSpec& spec, const CantorPoint& x, int k_max);

}  // namespace cantor
