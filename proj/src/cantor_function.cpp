#include "cantor/cantor_function.hpp"

#include <algorithm>
#include <string>

#include "cantor/errors.hpp"
#include "cantor/sets.hpp"

namespace cantor {

namespace {

Rational value_at(const Rational& x, const CantorSpec& spec) {
    return phi_of_expansion(DigitExpansion::of(x, spec.r()), spec);
}

}  // namespace

Rational phi_of_expansion(const DigitExpansion& x, const CantorSpec& spec) {
    if (x.base() != spec.r()) throw DomainError("expansion base does not match spec base");
    const int p = spec.p();
    Rational acc(0);
    Rational weight(1);
    for (int d : x.preperiod()) {
        weight /= Rational(p);
        acc += Rational(spec.rank(d)) * weight;
        if (!spec.keeps(d)) return acc;
    }
    const auto& period = x.period();
    if (period.empty()) return acc;  // trailing zeros contribute rank(0) = 0

    const bool stops = std::any_of(period.begin(), period.end(), [&](int d) { return !spec.keeps(d); });
    if (stops) {
        for (int d : period) {
            weight /= Rational(p);
            acc += Rational(spec.rank(d)) * weight;
            if (!spec.keeps(d)) return acc;
        }
    }
    BigInt cycle_sum = 0;
    for (int d : period) cycle_sum = cycle_sum * p + spec.rank(d);
    const BigInt cycle = ipow(static_cast<unsigned long>(p), period.size()) - 1;
    return acc + weight * Rational(cycle_sum, cycle);
}

PhiValue phi(const Rational& x, const CantorSpec& spec) {
    if (x < Rational(0) || x > Rational(1)) throw DomainError("phi: point " + x.str() + " outside [0,1]");
    PhiValue out;
    out.value = phi_of_expansion(DigitExpansion::of(x, spec.r()), spec);
    const Membership m = membership(x, spec);
    if (!m.in_set()) {
        out.locus = PhiLocus::OnGap;
        out.level = m.level;
        out.t = (out.value * Rational(ipow(static_cast<unsigned long>(spec.p()), static_cast<unsigned long>(m.level))))
                    .numerator();
    }
    return out;
}

std::vector<std::pair<Rational, Rational>> phi_staircase(const CantorSpec& spec, int samples) {
    if (samples < 2) throw DomainError("phi_staircase needs at least 2 samples");
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        Rational x(i, samples - 1);
        out.emplace_back(x, value_at(x, spec));
    }
    return out;
}

std::vector<Rational> endpoint_identity(const CantorSpec& spec, int k) {
    if (k <= 0) throw DomainError("endpoint_identity needs a positive level");
    const Rational step = pow(Rational(spec.p()), -k);
    std::vector<Rational> residuals;
    for (const auto& iv : level_intervals(spec, k)) {
        residuals.push_back(value_at(iv.hi, spec) - value_at(iv.lo, spec) - step);
    }
    return residuals;
}

std::vector<Rational> self_similarity_check(const CantorSpec& spec, const Rational& x) {
    if (x < Rational(0) || x > Rational(1)) throw DomainError("self_similarity_check: point outside [0,1]");
    const Rational fx = value_at(x, spec);
    std::vector<Rational> residuals;
    for (const auto& map : ifs_maps(spec)) {
        const int j = spec.index_of(map.digit);
        residuals.push_back(value_at(map(x), spec) - (fx + Rational(j)) / Rational(spec.p()));
    }
    return residuals;
}

}  // namespace cantor
