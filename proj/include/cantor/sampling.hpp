#pragma once

// Seeded generators for randomized verification suites.

#include <cstdint>
#include <random>
#include <vector>

#include "cantor/digits.hpp"
#include "cantor/measure.hpp"
#include "cantor/rational.hpp"
#include "cantor/spec.hpp"
#include "cantor/ultrametric.hpp"

namespace cantor {

using Rng = std::mt19937_64;

// Uniform over {a/b : 0 <= a <= b, 1 <= b <= max_den}.
Rational random_unit_rational(Rng& rng, long max_den = 1000);

// Random eventually periodic kept-digit sequence (preperiod <= max_pre, period 1..max_period).
CantorPoint random_point(Rng& rng, const CantorSpec& spec, int max_pre = 6, int max_period = 4);

std::vector<int> random_prefix(Rng& rng, const CantorSpec& spec, int level);

// Up to `count` random cylinders with levels in [1, max_level].
CylinderSet random_cylinder_set(Rng& rng, const CantorSpec& spec, int count, int max_level);

}  // namespace cantor
