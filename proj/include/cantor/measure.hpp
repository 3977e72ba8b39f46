#pragma once

#include <string>
#include <vector>

#include "cantor/rational.hpp"
#include "cantor/real.hpp"
#include "cantor/sets.hpp"
#include "cantor/spec.hpp"
#include "cantor/ultrametric.hpp"

namespace cantor {

/**
 * A finite union of cylinders, kept in maximal disjoint form: nested
 * cylinders are absorbed and any complete family of p siblings is replaced
 * by its parent, repeatedly. Cylinders are sorted lexicographically.
 */
class CylinderSet {
public:
    explicit CylinderSet(CantorSpec spec, std::vector<std::vector<int>> prefixes = {});

    static CylinderSet whole(const CantorSpec& spec);

    const CantorSpec& spec() const { return spec_; }
    const std::vector<Cylinder>& cylinders() const { return cylinders_; }
    bool empty() const { return cylinders_.empty(); }
    int max_level() const;

    CylinderSet united(const CylinderSet& other) const;
    // Image under the IFS map of kept digit `digit` (prepends it to every prefix).
    CylinderSet mapped(int digit) const;
    std::string describe() const;

    friend bool operator==(const CylinderSet& a, const CylinderSet& b) {
        return a.spec_ == b.spec_ && a.cylinders_ == b.cylinders_;
    }

private:
    void normalize();

    CantorSpec spec_;
    std::vector<Cylinder> cylinders_;
};

// All p^n cylinders of level n, in increasing order.
std::vector<Cylinder> level_cylinders(const CantorSpec& spec, int n);

enum class MeasureMethod { ValuedExact, HausdorffCover, Lebesgue };

struct MeasureEstimate {
    bool has_exact = false;
    Rational exact;
    Real value;
    MeasureMethod method = MeasureMethod::ValuedExact;
    int depth = 0;
    Real exponent;
    BigInt cover_count = 0;  // HausdorffCover: number of level-depth cylinders in the cover
};

// Sum of p^-n_i over the maximal disjoint cylinders.
MeasureEstimate valued_measure(const CylinderSet& e);

// count * (r^-depth)^exponent for the level-depth cover of E.
MeasureEstimate hausdorff_estimate(const CylinderSet& e, const Real& exponent, int depth);
// The same at exponent s, where the value lives exactly in the p^-1 lattice: count / p^depth.
MeasureEstimate hausdorff_estimate_at_dimension(const CylinderSet& e, int depth);

// Total length count * r^-depth of the level-depth intervals covering E.
Rational lebesgue_measure(const CylinderSet& e, int depth);

// Cylinders of level <= depth whose union is C intersected with [0, x) up to
// the depth-level cylinder containing x. Its valued measure tends to phi(x).
CylinderSet initial_segment(const CantorPoint& x, const CantorSpec& spec, int depth);

}  // namespace cantor
