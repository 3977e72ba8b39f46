#include "cantor/scale_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cantor/cantor_function.hpp"
#include "cantor/errors.hpp"

namespace cantor {

namespace bmp = boost::multiprecision;

namespace {

int nearest_other_kept(const CantorSpec& spec, int digit) {
    int best = -1;
    for (int d : spec.kept_digits()) {
        if (d == digit) continue;
        if (best < 0 || std::abs(d - digit) < std::abs(best - digit)) best = d;  // ties keep the smaller
    }
    return best;
}

bool window_converged(const std::vector<Rational>& values, Rational& limit) {
    if (values.size() < static_cast<std::size_t>(kConvergenceWindow)) return false;
    auto first = values.end() - kConvergenceWindow;
    auto [lo, hi] = std::minmax_element(first, values.end());
    if ((*hi - *lo).to_double() >= kConvergenceTolerance) return false;
    limit = values.back();
    return true;
}

QuotientTrace classify(QuotientTrace trace) {
    std::vector<Rational> qs;
    for (const auto& step : trace.steps) qs.push_back(step.quotient);
    if (qs.empty()) return trace;
    trace.min = *std::min_element(qs.begin(), qs.end());
    trace.max = *std::max_element(qs.begin(), qs.end());
    if (window_converged(qs, trace.limit)) {
        trace.verdict = Verdict::ConvergesTo;
        return trace;
    }
    trace.verdict = Verdict::Bounded;
    if (qs.size() >= static_cast<std::size_t>(kConvergenceWindow)) {
        auto first = qs.end() - kConvergenceWindow;
        bool increasing = std::adjacent_find(first, qs.end(), [](const Rational& a, const Rational& b) {
                              return !(a < b);
                          }) == qs.end();
        if (increasing && first->sign() > 0 && qs.back() >= Rational(2) * *first) trace.verdict = Verdict::Diverges;
    }
    return trace;
}

template <class Numerator>
QuotientTrace trace_along(const CantorPoint& x0, const CantorSpec& spec, const std::vector<CantorPoint>& sequence,
                          Numerator numerator) {
    QuotientTrace trace{x0, {}, Verdict::Bounded, Rational(0), Rational(0), Rational(0)};
    for (const auto& x : sequence) {
        const NaDistance d = na_distance(x, x0, spec);
        if (d.equal) throw DomainError("approach sequence contains x0 itself");
        const Rational num = numerator(x);
        trace.steps.push_back({x, num, d.exact, num / d.exact});
    }
    return classify(std::move(trace));
}

}  // namespace

std::vector<CantorPoint> approach_sequence(const CantorPoint& x0, const CantorSpec& spec, int depth) {
    if (depth < 1) throw DomainError("approach depth must be positive");
    std::vector<CantorPoint> out;
    const auto& digits = x0.expansion();
    for (int k = 1; k <= depth; ++k) {
        auto prefix = digits.first_digits(static_cast<std::size_t>(k) + 1);
        prefix.back() = nearest_other_kept(spec, prefix.back());
        out.emplace_back(digits.tail(static_cast<std::size_t>(k) + 1).prepend(prefix), spec);
    }
    return out;
}

QuotientTrace na_derivative_along(const RealValued& f, const CantorPoint& x0, const CantorSpec& spec,
                                  const std::vector<CantorPoint>& sequence) {
    const Rational f0 = f(x0);
    return trace_along(x0, spec, sequence, [&](const CantorPoint& x) { return abs(f(x) - f0); });
}

QuotientTrace na_derivative(const RealValued& f, const CantorPoint& x0, const CantorSpec& spec, int depth) {
    return na_derivative_along(f, x0, spec, approach_sequence(x0, spec, depth));
}

QuotientTrace na_derivative_c2c_along(const SelfMap& f, const CantorPoint& x0, const CantorSpec& spec,
                                      const std::vector<CantorPoint>& sequence) {
    const CantorPoint f0 = f(x0);
    return trace_along(x0, spec, sequence, [&](const CantorPoint& x) { return na_distance(f(x), f0, spec).exact; });
}

QuotientTrace na_derivative_c2c(const SelfMap& f, const CantorPoint& x0, const CantorSpec& spec, int depth) {
    return na_derivative_c2c_along(f, x0, spec, approach_sequence(x0, spec, depth));
}

Interval containing_interval(const CantorPoint& x, const CantorSpec& spec, int k) {
    if (k < 0) throw DomainError("level must be non-negative");
    check_level(k, "containing_interval");
    BigInt w = 0;
    for (int d : x.expansion().first_digits(static_cast<std::size_t>(k))) w = w * spec.r() + d;
    const BigInt scale = ipow(static_cast<unsigned long>(spec.r()), static_cast<unsigned long>(k));
    return {Rational(w, scale), Rational(w + 1, scale), Closure::Closed};
}

namespace {

Rational phi_at(const Rational& x, const CantorSpec& spec) {
    return phi_of_expansion(DigitExpansion::of(x, spec.r()), spec);
}

}  // namespace

Rational scaling_identity(const CantorSpec& spec, const CantorPoint& x, int k) {
    const Interval iv = containing_interval(x, spec, k);
    return phi_at(iv.hi, spec) - phi_at(iv.lo, spec) - pow(Rational(spec.r(), spec.p()), k) * iv.length();
}

LogLimitDiagnostics log_limit_diagnostics(const CantorSpec& spec, const CantorPoint& x, int k_max) {
    if (k_max < 1) throw DomainError("k_max must be positive");
    LogLimitDiagnostics out;
    const Rational px = x.value();
    const Rational phi_x = phi_of_expansion(x.expansion(), spec);
    bool left_endpoint = false, right_endpoint = false;
    std::vector<Rational> plus_ratios, minus_ratios;

    for (int k = 1; k <= k_max; ++k) {
        const Interval iv = containing_interval(x, spec, k);
        LogLimitRecord rec;
        rec.k = k;
        rec.alpha = iv.lo;
        rec.beta = iv.hi;
        rec.phi_alpha = phi_at(iv.lo, spec);
        rec.phi_beta = phi_at(iv.hi, spec);
        rec.phi_x = phi_x;
        const Rational rk = pow(Rational(spec.r()), k);
        const Rational pk = pow(Rational(spec.p()), k);
        rec.a_plus = rk * (rec.beta - px);
        rec.a_minus = rk * (px - rec.alpha);
        rec.b_plus = pk * (rec.phi_beta - phi_x);
        rec.b_minus = pk * (phi_x - rec.phi_alpha);

        const Real kr(k);
        rec.sigma_plus = bmp::exp(to_real(rec.a_plus) / kr);
        rec.sigma_minus = bmp::exp(to_real(rec.a_minus) / kr);
        rec.dphi_plus = bmp::exp(to_real(rec.b_plus) / kr);
        rec.dphi_minus = bmp::exp(to_real(rec.b_minus) / kr);
        rec.exact_residual = rec.b_plus + rec.b_minus - rec.a_plus - rec.a_minus;
        rec.log_residual = bmp::log(rec.dphi_plus) + bmp::log(rec.dphi_minus) - bmp::log(rec.sigma_plus) -
                           bmp::log(rec.sigma_minus);

        if (rec.a_plus.is_zero()) right_endpoint = true;
        else rec.ratio_plus = rec.b_plus / rec.a_plus;
        if (rec.a_minus.is_zero()) left_endpoint = true;
        else rec.ratio_minus = rec.b_minus / rec.a_minus;
        if (rec.ratio_plus) plus_ratios.push_back(*rec.ratio_plus);
        if (rec.ratio_minus) minus_ratios.push_back(*rec.ratio_minus);
        out.records.push_back(std::move(rec));
    }

    if (left_endpoint && !right_endpoint) out.branch = Branch::RightOnly;
    else if (right_endpoint && !left_endpoint) out.branch = Branch::LeftOnly;
    Rational limit;
    if (!right_endpoint && window_converged(plus_ratios, limit)) out.ratio_plus_limit = limit;
    if (!left_endpoint && window_converged(minus_ratios, limit)) out.ratio_minus_limit = limit;
    return out;
}

}  // namespace cantor
