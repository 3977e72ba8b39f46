#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cantor/cantor_function.hpp"
#include "cantor/errors.hpp"
#include "cantor/sampling.hpp"
#include "cantor/scale_calculus.hpp"
#include "oracles.hpp"

using namespace cantor;
using oracle::rat;
namespace bmp = boost::multiprecision;

namespace {

CantorPoint ifs_image(const CantorPoint& x, int digit) {
    return CantorPoint(x.expansion().prepend({digit}), CantorSpec::middle_third());
}

}  // namespace

TEST_CASE("approach sequence") {
    const auto mt = CantorSpec::middle_third();
    const auto x0 = CantorPoint::of(rat(0), mt);
    const auto seq = approach_sequence(x0, mt, 4);
    REQUIRE(seq.size() == 4);
    CHECK(seq[0].value() == rat(2, 9));
    CHECK(seq[3].value() == rat(2, 243));
    for (std::size_t k = 0; k < seq.size(); ++k)
        CHECK(na_distance(seq[k], x0, mt).common_prefix == static_cast<long>(k) + 1);

    const auto f = CantorSpec::five_three();
    const auto y = CantorPoint::of(rat(1, 2), f);  // 0.222...
    for (const auto& p : approach_sequence(y, f, 6)) CHECK(p.expansion().uses_only(f));
    CHECK(approach_sequence(y, f, 1)[0].expansion().digit(2) == 0);  // tie between 0 and 4 goes down
}

TEST_CASE("difference quotients of simple maps") {
    const auto mt = CantorSpec::middle_third();
    const auto x0 = CantorPoint::of(rat(2, 3), mt);

    const auto constant = na_derivative([](const CantorPoint&) { return rat(7, 3); }, x0, mt, 12);
    CHECK(constant.verdict == Verdict::ConvergesTo);
    CHECK(constant.limit == rat(0));

    const auto identity = na_derivative_c2c([](const CantorPoint& x) { return x; }, x0, mt, 12);
    CHECK(identity.verdict == Verdict::ConvergesTo);
    CHECK(identity.limit == rat(1));

    for (int d : mt.kept_digits()) {
        const auto map = na_derivative_c2c([d](const CantorPoint& x) { return ifs_image(x, d); }, x0, mt, 12);
        CHECK(map.verdict == Verdict::ConvergesTo);
        CHECK(map.limit == rat(1, 2));
    }

    const auto zero = CantorPoint::of(rat(0), mt);
    const auto dist = na_derivative([&](const CantorPoint& x) { return na_distance(x, zero, mt).exact; }, zero, mt, 12);
    CHECK(dist.limit == rat(1));
    CHECK(dist.min == rat(1));
    CHECK(dist.max == rat(1));

    const auto spike = na_derivative([&](const CantorPoint& x) { return x.value() == zero.value() ? rat(0) : rat(1); }, zero, mt, 12);
    CHECK(spike.verdict == Verdict::Diverges);

    const auto wobble = na_derivative(
        [&](const CantorPoint& x) {
            const auto d = na_distance(x, zero, mt);
            return d.common_prefix % 2 ? d.exact : d.exact / Rational(2);
        },
        zero, mt, 12);
    CHECK(wobble.verdict == Verdict::Bounded);
    CHECK(wobble.min == rat(1, 2));
    CHECK(wobble.max == rat(1));

    CHECK_THROWS_AS(na_derivative_along([](const CantorPoint&) { return rat(0); }, x0, mt, {x0}), DomainError);
}

TEST_CASE("phi along the canonical approach") {
    for (const auto& spec : CantorSpec::presets()) {
        const auto zero = CantorPoint::of(rat(0), spec);
        const auto t = na_derivative([&](const CantorPoint& x) { return phi_of_expansion(x.expansion(), spec); },
                                     zero, spec, 12);
        CHECK(t.verdict == Verdict::ConvergesTo);
        CHECK(t.limit == rat(1) / Rational(spec.p()));
    }
}

TEST_CASE("property: phi quotients lie in [0, 1], zero only across a gap") {
    Rng rng(12);
    for (const auto& spec : CantorSpec::presets()) {
        const RealValued f = [&](const CantorPoint& x) { return phi_of_expansion(x.expansion(), spec); };
        for (int i = 0; i < 1000; ++i) {
            const auto x0 = random_point(rng, spec);
            // random sequences from the random prefix of level k+1 agreeing on k digits
            std::vector<CantorPoint> seq;
            for (int k = 1; k <= 8; ++k) {
                auto pre = x0.expansion().first_digits(k);
                auto tail = random_point(rng, spec);
                std::vector<int> w(pre.begin(), pre.end());
                int other = spec.kept_digits()[rng() % static_cast<std::size_t>(spec.p())];
                if (other == x0.expansion().digit(k + 1))
                    other = spec.kept_digits()[(static_cast<std::size_t>(spec.index_of(other)) + 1) %
                                               static_cast<std::size_t>(spec.p())];
                w.push_back(other);
                seq.emplace_back(tail.expansion().prepend(w), spec);
            }
            const auto t = na_derivative_along(f, x0, spec, seq);
            for (const auto& s : t.steps) {
                REQUIRE(s.quotient >= rat(0));
                REQUIRE(s.quotient <= rat(1));
                if (s.quotient.is_zero()) {
                    const Rational mid = (s.x.value() + x0.value()) / Rational(2);
                    REQUIRE(s.x.value() != x0.value());
                    REQUIRE(membership(mid, spec).kind == MembershipKind::InGap);
                }
            }
        }
    }
}

TEST_CASE("property: IFS scale covariance of the phi quotient") {
    Rng rng(31);
    const auto mt = CantorSpec::middle_third();
    const RealValued f = [&](const CantorPoint& x) { return phi_of_expansion(x.expansion(), mt); };
    for (int i = 0; i < 300; ++i) {
        const auto x0 = random_point(rng, mt);
        const auto base = na_derivative(f, x0, mt, 10);
        for (int d : mt.kept_digits()) {
            const auto image = na_derivative(f, ifs_image(x0, d), mt, 11);
            for (std::size_t k = 0; k < base.steps.size(); ++k)
                REQUIRE(image.steps[k + 1].quotient == base.steps[k].quotient);
        }
    }
}

TEST_CASE("scaling identity") {
    const auto mt = CantorSpec::middle_third();
    const auto zero = CantorPoint::of(rat(0), mt);
    CHECK(containing_interval(zero, mt, 1) == Interval{rat(0), rat(1, 3)});
    CHECK(scaling_identity(mt, zero, 1) == rat(0));

    const auto f = CantorSpec::five_three();
    const auto fzero = CantorPoint::of(rat(0), f);
    CHECK(containing_interval(fzero, f, 2) == Interval{rat(0), rat(1, 25)});
    CHECK(phi(rat(1, 25), f).value == rat(1, 9));
    CHECK(scaling_identity(f, fzero, 2) == rat(0));

    Rng rng(2);
    for (const auto& spec : CantorSpec::presets())
        for (int i = 0; i < 300; ++i) {
            const auto x = random_point(rng, spec);
            for (int k = 0; k <= 12; ++k) {
                const auto iv = containing_interval(x, spec, k);
                REQUIRE(iv.lo <= x.value());
                REQUIRE(x.value() <= iv.hi);
                REQUIRE(iv.length() == pow(Rational(spec.r()), -k));
                REQUIRE(oracle::phi_by_refinement(iv.hi, spec) - oracle::phi_by_refinement(iv.lo, spec) ==
                        pow(Rational(spec.p()), -k));
                REQUIRE(scaling_identity(spec, x, k) == rat(0));
            }
        }
}

TEST_CASE("logarithmic derivative surrogates") {
    const auto mt = CantorSpec::middle_third();
    const auto zero = log_limit_diagnostics(mt, CantorPoint::of(rat(0), mt), 10);
    CHECK(zero.branch == Branch::RightOnly);
    CHECK_FALSE(zero.ratio_minus_limit.has_value());
    CHECK(zero.records[0].a_plus == rat(1));
    CHECK(zero.records[0].b_plus == rat(1));
    CHECK(log_limit_diagnostics(mt, CantorPoint::of(rat(1), mt), 10).branch == Branch::LeftOnly);
    CHECK(log_limit_diagnostics(mt, CantorPoint::of(rat(1, 4), mt), 10).branch == Branch::Both);
    CHECK_THROWS_AS(log_limit_diagnostics(mt, CantorPoint::of(rat(1, 4), mt), 0), DomainError);

    Rng rng(77);
    for (const auto& spec : CantorSpec::presets())
        for (int i = 0; i < 200; ++i) {
            const auto x = random_point(rng, spec);
            const auto diag = log_limit_diagnostics(spec, x, 12);
            for (const auto& rec : diag.records) {
                const Rational rk = pow(Rational(spec.r()), rec.k), pk = pow(Rational(spec.p()), rec.k);
                REQUIRE(rec.a_plus == rk * (rec.beta - x.value()));
                REQUIRE(rec.b_minus == pk * (oracle::phi_by_refinement(x.value(), spec) -
                                             oracle::phi_by_refinement(rec.alpha, spec)));
                REQUIRE(rec.exact_residual == rat(0));
                REQUIRE(bmp::abs(rec.log_residual) < Real(1e-30));
            }
        }
}
