#pragma once

#include <utility>
#include <vector>

#include "cantor/digits.hpp"
#include "cantor/rational.hpp"
#include "cantor/spec.hpp"

namespace cantor {

enum class PhiLocus { OnSet, OnGap };

struct PhiValue {
    Rational value;
    PhiLocus locus = PhiLocus::OnSet;
    int level = 0;  // OnGap: gap level n, value = t / p^n
    BigInt t = 0;   // OnGap numerator over p^n
};

/**
 * Generalized Cantor function (CDF of the uniform self-similar measure).
 *
 * Scans the base-r digits d_k of x, adding rank_D(d_k) / p^k, and stops
 * after the first deleted digit. The periodic tail is summed in closed form,
 * so the result is exact for every rational x in [0,1].
 */
PhiValue phi(const Rational& x, const CantorSpec& spec);

// Same scan on an explicit expansion; both twins of a dual pair give the same value.
Rational phi_of_expansion(const DigitExpansion& x, const CantorSpec& spec);

std::vector<std::pair<Rational, Rational>> phi_staircase(const CantorSpec& spec, int samples);

// phi(beta) - phi(alpha) - p^-k for every level-k interval [alpha, beta].
std::vector<Rational> endpoint_identity(const CantorSpec& spec, int k);

// phi((x + d_j)/r) - (phi(x) + j - 1)/p for every kept digit d_j.
std::vector<Rational> self_similarity_check(const CantorSpec& spec, const Rational& x);

}  // namespace cantor
