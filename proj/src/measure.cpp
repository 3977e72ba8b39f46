#include "cantor/measure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cantor/errors.hpp"

namespace cantor {

namespace bmp = boost::multiprecision;

using Prefix = std::vector<int>;

CylinderSet::CylinderSet(CantorSpec spec, std::vector<Prefix> prefixes) : spec_(std::move(spec)) {
    for (auto& prefix : prefixes) cylinders_.emplace_back(spec_, std::move(prefix));
    normalize();
}

void CylinderSet::normalize() {
    std::set<Prefix> prefixes;
    for (const auto& c : cylinders_) prefixes.insert(c.prefix());

    // Drop cylinders nested inside another member; in lexicographic order an
    // ancestor always precedes its descendants.
    std::set<Prefix> disjoint;
    const Prefix* last = nullptr;
    for (const auto& prefix : prefixes) {
        if (last && prefix.size() >= last->size() && std::equal(last->begin(), last->end(), prefix.begin())) continue;
        last = &*disjoint.insert(prefix).first;
    }

    // Replace every complete family of p siblings by its parent until none is left.
    for (bool changed = true; changed;) {
        changed = false;
        std::map<Prefix, int> children;
        for (const auto& prefix : disjoint) {
            if (!prefix.empty()) ++children[Prefix(prefix.begin(), prefix.end() - 1)];
        }
        for (const auto& [parent, count] : children) {
            if (count != spec_.p()) continue;
            for (int d : spec_.kept_digits()) {
                Prefix child = parent;
                child.push_back(d);
                disjoint.erase(child);
            }
            disjoint.insert(parent);
            changed = true;
        }
    }

    cylinders_.clear();
    for (const auto& prefix : disjoint) cylinders_.emplace_back(spec_, prefix);
}

CylinderSet CylinderSet::whole(const CantorSpec& spec) { return CylinderSet(spec, {Prefix{}}); }

int CylinderSet::max_level() const {
    int level = 0;
    for (const auto& c : cylinders_) level = std::max(level, c.level());
    return level;
}

CylinderSet CylinderSet::united(const CylinderSet& other) const {
    if (!(spec_ == other.spec_)) throw DomainError("cannot unite cylinder sets of different Cantor sets");
    std::vector<Prefix> prefixes;
    for (const auto& c : cylinders_) prefixes.push_back(c.prefix());
    for (const auto& c : other.cylinders_) prefixes.push_back(c.prefix());
    return CylinderSet(spec_, std::move(prefixes));
}

CylinderSet CylinderSet::mapped(int digit) const {
    if (!spec_.keeps(digit)) throw DomainError("IFS map digit " + std::to_string(digit) + " is not kept");
    std::vector<Prefix> prefixes;
    for (const auto& c : cylinders_) {
        Prefix prefix{digit};
        prefix.insert(prefix.end(), c.prefix().begin(), c.prefix().end());
        prefixes.push_back(std::move(prefix));
    }
    return CylinderSet(spec_, std::move(prefixes));
}

std::string CylinderSet::describe() const {
    if (cylinders_.empty()) return "empty";
    if (cylinders_.size() == 1 && cylinders_.front().level() == 0) return "C";
    std::string out;
    for (const auto& c : cylinders_) {
        if (!out.empty()) out += ";";
        out += "[";
        for (std::size_t i = 0; i < c.prefix().size(); ++i) {
            if (i) out += ",";
            out += std::to_string(c.prefix()[i]);
        }
        out += "]";
    }
    return out;
}

std::vector<Cylinder> level_cylinders(const CantorSpec& spec, int n) {
    if (n < 0) throw DomainError("level must be non-negative");
    check_level(n, "level_cylinders");
    std::vector<Cylinder> out{Cylinder(spec, {})};
    for (int level = 0; level < n; ++level) {
        std::vector<Cylinder> next;
        for (const auto& c : out)
            for (int d : spec.kept_digits()) next.push_back(c.child(d));
        out = std::move(next);
    }
    return out;
}

namespace {

BigInt cover_count(const CylinderSet& e, int depth) {
    const auto p = static_cast<unsigned long>(e.spec().p());
    BigInt count = 0;
    std::set<Prefix> truncated;
    for (const auto& c : e.cylinders()) {
        if (c.level() <= depth) {
            count += ipow(p, static_cast<unsigned long>(depth - c.level()));
        } else {
            truncated.insert(Prefix(c.prefix().begin(), c.prefix().begin() + depth));
        }
    }
    return count + static_cast<unsigned long>(truncated.size());
}

void check_depth(int depth) {
    if (depth < 0) throw DomainError("cover depth must be non-negative");
    check_level(depth, "hausdorff_estimate");
}

}  // namespace

MeasureEstimate valued_measure(const CylinderSet& e) {
    MeasureEstimate out;
    out.method = MeasureMethod::ValuedExact;
    out.has_exact = true;
    out.exact = Rational(0);
    for (const auto& c : e.cylinders()) out.exact += c.measure();
    out.value = to_real(out.exact);
    return out;
}

MeasureEstimate hausdorff_estimate(const CylinderSet& e, const Real& exponent, int depth) {
    if (!(exponent > 0 && exponent <= 1)) throw DomainError("cover exponent must lie in (0,1]");
    check_depth(depth);
    MeasureEstimate out;
    out.method = MeasureMethod::HausdorffCover;
    out.depth = depth;
    out.exponent = exponent;
    out.cover_count = cover_count(e, depth);
    out.value = to_real(out.cover_count) * bmp::exp(-Real(depth) * exponent * bmp::log(Real(e.spec().r())));
    return out;
}

MeasureEstimate hausdorff_estimate_at_dimension(const CylinderSet& e, int depth) {
    check_depth(depth);
    MeasureEstimate out;
    out.method = MeasureMethod::HausdorffCover;
    out.depth = depth;
    out.exponent = hausdorff_dimension(e.spec());
    out.cover_count = cover_count(e, depth);
    out.has_exact = true;
    out.exact = Rational(out.cover_count, ipow(static_cast<unsigned long>(e.spec().p()), static_cast<unsigned long>(depth)));
    out.value = to_real(out.exact);
    return out;
}

Rational lebesgue_measure(const CylinderSet& e, int depth) {
    check_depth(depth);
    return Rational(cover_count(e, depth), ipow(static_cast<unsigned long>(e.spec().r()), static_cast<unsigned long>(depth)));
}

CylinderSet initial_segment(const CantorPoint& x, const CantorSpec& spec, int depth) {
    if (depth < 0) throw DomainError("depth must be non-negative");
    std::vector<Prefix> prefixes;
    const auto digits = x.expansion().first_digits(static_cast<std::size_t>(depth));
    for (std::size_t j = 0; j < digits.size(); ++j) {
        for (int d : spec.kept_digits()) {
            if (d >= digits[j]) break;
            Prefix prefix(digits.begin(), digits.begin() + static_cast<long>(j));
            prefix.push_back(d);
            prefixes.push_back(std::move(prefix));
        }
    }
    return CylinderSet(spec, std::move(prefixes));
}

}  // namespace cantor
