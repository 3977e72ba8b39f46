#include "cantor/sampling.hpp"

namespace cantor {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Rational random_unit_rational(Rng& rng, long max_den) {
    const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
    const long num = std::uniform_int_distribution<long>(0, den)(rng);
    return {num, den};
}

std::vector<int> random_prefix(Rng& rng, const CantorSpec& spec, int level) {
    std::vector<int> out;
    for (int i = 0; i < level; ++i) out.push_back(spec.kept_digits()[static_cast<std::size_t>(uniform(rng, 0, spec.p() - 1))]);
    return out;
}

CantorPoint random_point(Rng& rng, const CantorSpec& spec, int max_pre, int max_period) {
    auto pre = random_prefix(rng, spec, uniform(rng, 0, max_pre));
    auto period = random_prefix(rng, spec, uniform(rng, 1, max_period));
    return CantorPoint(DigitExpansion(spec.r(), std::move(pre), std::move(period)), spec);
}

CylinderSet random_cylinder_set(Rng& rng, const CantorSpec& spec, int count, int max_level) {
    std::vector<std::vector<int>> prefixes;
    for (int i = 0; i < count; ++i) prefixes.push_back(random_prefix(rng, spec, uniform(rng, 1, max_level)));
    return CylinderSet(spec, std::move(prefixes));
}

}  // namespace cantor
