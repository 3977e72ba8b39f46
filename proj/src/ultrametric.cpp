#include "cantor/ultrametric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "cantor/errors.hpp"

namespace cantor {

namespace bmp = boost::multiprecision;

namespace {

template <class Scalar>
RelativeInfinitesimal<Scalar> make_infinitesimal(const Scalar& x, const Scalar& eps, const Scalar& lambda) {
    if (!(Scalar(0) < eps && eps < x && x <= Scalar(1)))
        throw DomainError("relative infinitesimal requires 0 < eps < x <= 1");
    if (!(Scalar(0) < lambda && lambda <= Scalar(1)))
        throw DomainError("relative infinitesimal requires 0 < lambda <= 1");
    Scalar x_tilde = lambda * eps * eps / x;
    if (!(Scalar(0) < x_tilde && x_tilde < eps)) throw std::logic_error("inversion rule produced x~ outside (0, eps)");
    return {x_tilde, eps, x, lambda};
}

}  // namespace

RelativeInfinitesimal<Real> infinitesimal_from(const Real& x, const Real& eps, const Real& lambda) {
    return make_infinitesimal(x, eps, lambda);
}

RelativeInfinitesimal<Rational> infinitesimal_from(const Rational& x, const Rational& eps, const Rational& lambda) {
    return make_infinitesimal(x, eps, lambda);
}

Valuation valuation(const Real& x_tilde, const Real& eps) {
    if (!(eps > 0 && eps < 1)) throw DomainError("valuation scale must lie in (0,1)");
    const Real magnitude = bmp::abs(x_tilde);
    if (magnitude == 0) throw DomainError("valuation of zero is not a relative infinitesimal");
    if (magnitude >= eps) throw DomainError("valuation requires |x~| < eps");
    Valuation out;
    out.value = (bmp::log(eps) - bmp::log(magnitude)) / -bmp::log(eps);
    out.scale = eps;
    out.kind = ValuationKind::Raw;
    return out;
}

Valuation quantize_valuation(const Valuation& raw, const CantorSpec& spec, int n) {
    if (raw.value < 0) throw DomainError("valuation must be non-negative");
    if (n < 0) throw DomainError("quantization level must be non-negative");
    const BigInt grid = ipow(static_cast<unsigned long>(spec.p()), static_cast<unsigned long>(n));
    const Real scaled = raw.value * to_real(grid);
    const Real whole = bmp::floor(scaled);
    BigInt alpha(whole.convert_to<bmp::cpp_int>().str());
    if (scaled - whole > Real(0.5)) alpha += 1;

    Valuation out;
    out.kind = ValuationKind::Canonical;
    out.scale = 0;
    out.alpha = alpha;
    out.p = spec.p();
    out.s0 = n;
    out.exact = Rational(alpha, grid);
    out.value = to_real(out.exact);
    out.quantization_error = raw.value - out.value;
    return out;
}

SeminormReport seminorm_check(const Real& x_tilde, const Real& y_tilde, const Real& eps) {
    if (!(x_tilde > 0 && y_tilde > 0)) throw DomainError("seminorm_check needs positive infinitesimals");
    if (!(x_tilde + y_tilde < eps)) throw DomainError("seminorm_check needs x~ + y~ < eps");
    SeminormReport report{valuation(x_tilde, eps).value, valuation(y_tilde, eps).value,
                          valuation(x_tilde + y_tilde, eps).value, false};
    report.holds = report.v_sum <= (report.v_x > report.v_y ? report.v_x : report.v_y) + Real(1e-12);
    return report;
}

Neighbours multiplicative_neighbours(const Real& x, const Real& v) {
    if (!(x > 0 && x < 1)) throw DomainError("multiplicative neighbours need x in (0,1)");
    if (v < 0) throw DomainError("valuation must be non-negative");
    return {bmp::pow(x, 1 - v), bmp::pow(x, 1 + v)};
}

BlockNorm block_norm(const CantorSpec& spec, int n) {
    if (n < 0) throw DomainError("block_norm needs a non-negative level");
    const Real s = bmp::log(Real(spec.p())) / bmp::log(Real(spec.r()));
    return {bmp::pow(Real(spec.r()), -Real(n) * s), pow(Rational(spec.p()), -n)};
}

Cylinder::Cylinder(CantorSpec spec, std::vector<int> prefix) : spec_(std::move(spec)), prefix_(std::move(prefix)) {
    for (int d : prefix_) {
        if (!spec_.keeps(d)) throw DomainError("cylinder prefix digit " + std::to_string(d) + " is not kept");
    }
}

Interval Cylinder::interval() const {
    BigInt w = 0;
    for (int d : prefix_) w = w * spec_.r() + d;
    const BigInt scale = ipow(static_cast<unsigned long>(spec_.r()), prefix_.size());
    return {Rational(w, scale), Rational(w + 1, scale), Closure::Closed};
}

Rational Cylinder::measure() const { return pow(Rational(spec_.p()), -level()); }

Cylinder Cylinder::child(int digit) const {
    auto prefix = prefix_;
    prefix.push_back(digit);
    return {spec_, std::move(prefix)};
}

CylinderRelation cylinder_relation(const Cylinder& a, const Cylinder& b) {
    if (!(a.spec() == b.spec())) throw DomainError("cylinders belong to different Cantor sets");
    const auto& pa = a.prefix();
    const auto& pb = b.prefix();
    const std::size_t common = std::min(pa.size(), pb.size());
    if (!std::equal(pa.begin(), pa.begin() + static_cast<long>(common), pb.begin())) return CylinderRelation::Disjoint;
    if (pa.size() == pb.size()) return CylinderRelation::Equal;
    return pa.size() < pb.size() ? CylinderRelation::AContainsB : CylinderRelation::BContainsA;
}

namespace {

DigitExpansion kept_expansion(const DigitExpansion& x, const CantorSpec& spec) {
    if (x.base() != spec.r()) throw DomainError("expansion base does not match spec base");
    for (auto& e : all_expansions(x.value(), spec.r())) {
        if (e.uses_only(spec)) return e;
    }
    throw DomainError("point " + x.value().str() + " is not in the Cantor set " + spec.str());
}

}  // namespace

CantorPoint::CantorPoint(const DigitExpansion& x, const CantorSpec& spec) : digits_(kept_expansion(x, spec)) {}

CantorPoint CantorPoint::of(const Rational& x, const CantorSpec& spec) {
    return CantorPoint(DigitExpansion::of(x, spec.r()), spec);
}

std::size_t common_prefix_length(const DigitExpansion& a, const DigitExpansion& b) {
    const std::size_t la = std::max<std::size_t>(a.period().size(), 1);
    const std::size_t lb = std::max<std::size_t>(b.period().size(), 1);
    const std::size_t bound = std::max(a.preperiod().size(), b.preperiod().size()) + std::lcm(la, lb);
    for (std::size_t k = 1; k <= bound; ++k) {
        if (a.digit(k) != b.digit(k)) return k - 1;
    }
    throw std::logic_error("common_prefix_length called on identical sequences");
}

NaDistance na_distance(const CantorPoint& x, const CantorPoint& y, const CantorSpec& spec) {
    NaDistance out;
    if (x.expansion() == y.expansion()) {
        out.equal = true;
        out.exact = Rational(0);
        out.value = 0;
        return out;
    }
    out.common_prefix = common_prefix_length(x.expansion(), y.expansion());
    out.exact = pow(Rational(spec.p()), -static_cast<long>(out.common_prefix));
    out.value = to_real(out.exact);
    return out;
}

NaDistance na_distance(const DigitExpansion& x, const DigitExpansion& y, const CantorSpec& spec) {
    return na_distance(CantorPoint(x, spec), CantorPoint(y, spec), spec);
}

}  // namespace cantor
