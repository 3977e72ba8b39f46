#pragma once

/**
 * Relative infinitesimals, the scale-relative valuation
 *     v(x~) = log_{1/eps}(eps / |x~|),
 * its quantization onto the Cantor lattice {alpha / p^n}, clopen cylinders,
 * and the prefix ultrametric on C.
 */

#include <cstddef>
#include <vector>

#include "cantor/digits.hpp"
#include "cantor/rational.hpp"
#include "cantor/real.hpp"
#include "cantor/sets.hpp"
#include "cantor/spec.hpp"

namespace cantor {

// x~ = lambda * eps^2 / x, with 0 < x~ < eps < x <= 1 and 0 < lambda <= 1.
template <class Scalar>
struct RelativeInfinitesimal {
    Scalar x_tilde;
    Scalar scale;
    Scalar anchor;
    Scalar lambda;
};

RelativeInfinitesimal<Real> infinitesimal_from(const Real& x, const Real& eps, const Real& lambda);
RelativeInfinitesimal<Rational> infinitesimal_from(const Rational& x, const Rational& eps,
                                                   const Rational& lambda);

enum class ValuationKind { Raw, Canonical };

struct Valuation {
    Real value;
    Real scale;  // eps for raw values; unused (0) for canonical ones
    ValuationKind kind = ValuationKind::Raw;
    // Canonical form value = alpha * sigma^s0 with sigma = 1/p, s0 = n.
    BigInt alpha = 0;
    int p = 0;
    int s0 = 0;
    Rational exact;            // alpha / p^s0 (canonical only)
    Real quantization_error;   // raw - canonical (canonical only)
};

// Raw valuation. Negative x~ is measured through |x~|.
// Throws DomainError when x~ == 0, |x~| >= eps, eps <= 0 or eps >= 1.
Valuation valuation(const Real& x_tilde, const Real& eps);

// Nearest lattice point alpha / p^n (ties round down).
Valuation quantize_valuation(const Valuation& raw, const CantorSpec& spec, int n);

struct SeminormReport {
    Real v_x;
    Real v_y;
    Real v_sum;
    bool holds;
};

// Requires 0 < x~, 0 < y~, x~ + y~ < eps.
SeminormReport seminorm_check(const Real& x_tilde, const Real& y_tilde, const Real& eps);

struct Neighbours {
    Real plus;   // x^(1 - v) >= x
    Real minus;  // x^(1 + v) <= x
};

Neighbours multiplicative_neighbours(const Real& x, const Real& v);

struct BlockNorm {
    Real value;      // r^(-n s)
    Rational exact;  // p^-n
};

BlockNorm block_norm(const CantorSpec& spec, int n);

// A clopen ball of C: all points whose kept expansion starts with `prefix`.
class Cylinder {
public:
    Cylinder(CantorSpec spec, std::vector<int> prefix);

    const CantorSpec& spec() const { return spec_; }
    const std::vector<int>& prefix() const { return prefix_; }
    int level() const { return static_cast<int>(prefix_.size()); }
    Interval interval() const;
    Rational measure() const;  // p^-level
    Cylinder child(int digit) const;

    friend bool operator==(const Cylinder&, const Cylinder&) = default;

private:
    CantorSpec spec_;
    std::vector<int> prefix_;
};

enum class CylinderRelation { Disjoint, AContainsB, BContainsA, Equal };

CylinderRelation cylinder_relation(const Cylinder& a, const Cylinder& b);

/**
 * A point of C held by its canonical kept expansion: the terminating one
 * when that uses only kept digits, otherwise the unique kept expansion.
 */
class CantorPoint {
public:
    // Throws DomainError if neither expansion of the value is kept-only.
    CantorPoint(const DigitExpansion& x, const CantorSpec& spec);
    static CantorPoint of(const Rational& x, const CantorSpec& spec);

    const DigitExpansion& expansion() const { return digits_; }
    Rational value() const { return digits_.value(); }

private:
    DigitExpansion digits_;
};

struct NaDistance {
    bool equal = false;
    std::size_t common_prefix = 0;  // meaningful when !equal
    Rational exact;                 // p^-n, or 0
    Real value;
};

NaDistance na_distance(const CantorPoint& x, const CantorPoint& y, const CantorSpec& spec);
NaDistance na_distance(const DigitExpansion& x, const DigitExpansion& y, const CantorSpec& spec);

// Common prefix length of two distinct eventually periodic sequences.
std::size_t common_prefix_length(const DigitExpansion& a, const DigitExpansion& b);

}  // namespace cantor
