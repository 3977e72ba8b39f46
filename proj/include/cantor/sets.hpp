#pragma once

/**
 * Construction and queries on (p,q) Cantor sets: IFS maps, level-n
 * intervals, deleted gaps, membership, deleted length and dimension.
 */

#include <optional>
#include <vector>

#include "cantor/digits.hpp"
#include "cantor/rational.hpp"
#include "cantor/real.hpp"
#include "cantor/spec.hpp"

namespace cantor {

enum class Closure { Closed, Open, ClosedOpen, OpenClosed };

struct Interval {
    Rational lo;
    Rational hi;
    Closure closure = Closure::Closed;

    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const;
    friend bool operator==(const Interval&, const Interval&) = default;
};

// x -> scale * x + shift, the similitude attached to one kept digit.
struct AffineMap {
    int digit;
    Rational scale;
    Rational shift;

    Rational operator()(const Rational& x) const { return scale * x + shift; }
    Interval operator()(const Interval& iv) const { return {(*this)(iv.lo), (*this)(iv.hi), iv.closure}; }
};

std::vector<AffineMap> ifs_maps(const CantorSpec& spec);

// The p^n closed intervals of the level-n approximation, in increasing order.
std::vector<Interval> level_intervals(const CantorSpec& spec, int n);

struct GapReport {
    // One open cell per deleted digit at each level 1..n (q(p^n - 1)/(p - 1) of them).
    std::vector<Interval> raw;
    // Connected components of [0,1] minus the level-n intervals.
    std::vector<Interval> merged;
};

GapReport gap_intervals(const CantorSpec& spec, int n);

// 1 - (p/r)^n, the total length removed after n steps.
Rational deleted_length(const CantorSpec& spec, int n);

// s = ln p / ln r.
Real hausdorff_dimension(const CantorSpec& spec);

enum class MembershipKind { InSet, InGap, Endpoint };

struct Membership {
    MembershipKind kind;
    int level = 0;                // first level at which every expansion leaves D (InGap only)
    std::optional<Interval> gap;  // merged gap containing x at that level (InGap only)

    bool in_set() const { return kind != MembershipKind::InGap; }
};

Membership membership(const Rational& x, const CantorSpec& spec);

// Merged gap of the level-n approximation that contains x; nullopt when x is
// covered by a level-n interval.
std::optional<Interval> enclosing_gap(const Rational& x, const CantorSpec& spec, int n);

// Membership of an externally supplied truncated digit stream, judged only
// up to its stated depth: InSet means every supplied digit is kept.
Membership membership_to_depth(const std::vector<int>& digits, const CantorSpec& spec);

}  // namespace cantor
