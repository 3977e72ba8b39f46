#include <doctest.h>

#include <map>
#include <set>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cantor/cantor_function.hpp"
#include "cantor/errors.hpp"
#include "cantor/measure.hpp"
#include "cantor/sampling.hpp"
#include "oracles.hpp"

using namespace cantor;
using oracle::rat;
namespace bmp = boost::multiprecision;

namespace {

double dbl(const Real& x) { return x.convert_to<double>(); }

std::vector<std::vector<int>> words(const CantorSpec& spec, int n) {
    std::vector<std::vector<int>> out;
    for (long code : oracle::kept_words(spec, n)) {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int i = n - 1; i >= 0; --i, code /= spec.r()) w[static_cast<std::size_t>(i)] = static_cast<int>(code % spec.r());
        out.push_back(w);
    }
    return out;
}

std::vector<std::vector<int>> prefixes_of(const CylinderSet& e) {
    std::vector<std::vector<int>> out;
    for (const auto& c : e.cylinders()) out.push_back(c.prefix());
    return out;
}

// Maximal cylinders inside a union given as a set of level-L leaf words.
std::set<std::vector<int>> maximal_cover(const CantorSpec& spec, const std::set<std::vector<int>>& leaves,
                                         int depth) {
    auto all_inside = [&](const std::vector<int>& w) {
        for (const auto& leaf : words(spec, depth - static_cast<int>(w.size()))) {
            auto full = w;
            full.insert(full.end(), leaf.begin(), leaf.end());
            if (!leaves.count(full)) return false;
        }
        return true;
    };
    std::set<std::vector<int>> out;
    for (int n = 0; n <= depth; ++n)
        for (const auto& w : words(spec, n)) {
            if (!all_inside(w)) continue;
            auto parent = w;
            if (!parent.empty()) parent.pop_back();
            if (w.empty() || !all_inside(parent)) out.insert(w);
        }
    return out;
}

}  // namespace

TEST_CASE("valued measure examples") {
    const auto mt = CantorSpec::middle_third();
    CHECK(valued_measure(CylinderSet::whole(mt)).exact == rat(1));
    CHECK(valued_measure(CylinderSet(mt)).exact == rat(0));
    CHECK(valued_measure(CylinderSet(mt, {{0, 2, 2}})).exact == rat(1, 8));
    for (const auto& spec : CantorSpec::presets()) {
        for (int n = 0; n <= 4; ++n) {
            const auto level = level_cylinders(spec, n);
            std::vector<std::vector<int>> all_but_one;
            for (std::size_t i = 1; i < level.size(); ++i) all_but_one.push_back(level[i].prefix());
            const Rational pn = pow(Rational(spec.p()), -n);
            CHECK(valued_measure(CylinderSet(spec, {level.front().prefix()})).exact == pn);
            CHECK(valued_measure(CylinderSet(spec, all_but_one)).exact == rat(1) - pn);
        }
    }
    const auto m = valued_measure(CylinderSet(mt, {{0}, {2, 2}}));
    CHECK(m.has_exact);
    CHECK(m.method == MeasureMethod::ValuedExact);
    CHECK(m.exact == rat(3, 4));
    CHECK(dbl(m.value) == doctest::Approx(0.75));
}

TEST_CASE("normalization") {
    const auto mt = CantorSpec::middle_third();
    CHECK(CylinderSet(mt, {{0}, {2}}) == CylinderSet::whole(mt));
    CHECK(CylinderSet(mt, {{0}, {0, 2}, {0, 0, 2}}).describe() == "[0]");
    CHECK(CylinderSet(mt, {{0, 0}, {0, 2}, {2, 2}}).describe() == "[0];[2,2]");
    CHECK(CylinderSet::whole(mt).describe() == "C");
    CHECK(CylinderSet(mt).describe() == "empty");
    CHECK_THROWS_AS(CylinderSet(mt, {{1}}), DomainError);
    const auto f = CantorSpec::five_three();
    CHECK(CylinderSet(f, {{0, 0}, {0, 2}, {0, 4}, {2}, {4, 0}}).describe() == "[0];[2];[4,0]");
}

TEST_CASE("normalization is the minimal cover, exhaustive at level 3") {
    const auto mt = CantorSpec::middle_third();
    const auto leaves = words(mt, 3);
    for (unsigned mask = 0; mask < (1u << leaves.size()); ++mask) {
        std::vector<std::vector<int>> chosen;
        std::set<std::vector<int>> chosen_set;
        for (std::size_t i = 0; i < leaves.size(); ++i)
            if (mask & (1u << i)) {
                chosen.push_back(leaves[i]);
                chosen_set.insert(leaves[i]);
            }
        const CylinderSet e(mt, chosen);
        const auto got = prefixes_of(e);
        REQUIRE(std::set<std::vector<int>>(got.begin(), got.end()) == maximal_cover(mt, chosen_set, 3));
        REQUIRE(valued_measure(e).exact == Rational(BigInt(static_cast<long>(chosen.size()))) / Rational(8));
    }
}

TEST_CASE("property: normalization on random unions at levels <= 4") {
    Rng rng(17);
    for (const auto& spec : CantorSpec::presets()) {
        for (int i = 0; i < 300; ++i) {
            const auto e = random_cylinder_set(rng, spec, 6, 4);
            std::set<std::vector<int>> leaves;
            for (const auto& c : e.cylinders())
                for (const auto& tail : words(spec, 4 - c.level())) {
                    auto w = c.prefix();
                    w.insert(w.end(), tail.begin(), tail.end());
                    leaves.insert(w);
                }
            const auto got = prefixes_of(e);
            REQUIRE(std::set<std::vector<int>>(got.begin(), got.end()) == maximal_cover(spec, leaves, 4));
            // normalization is idempotent
            REQUIRE(CylinderSet(spec, got) == e);
        }
    }
}

TEST_CASE("property: additivity on disjoint unions") {
    Rng rng(5);
    for (const auto& spec : CantorSpec::presets()) {
        for (int i = 0; i < 500; ++i) {
            const auto a = random_cylinder_set(rng, spec, 3, 4);
            // B: the level-4 leaves outside A, filtered at random
            std::vector<std::vector<int>> b_prefixes;
            for (const auto& leaf : words(spec, 4)) {
                bool in_a = false;
                for (const auto& c : a.cylinders())
                    in_a |= std::equal(c.prefix().begin(), c.prefix().end(), leaf.begin());
                if (!in_a && rng() % 3 == 0) b_prefixes.push_back(leaf);
            }
            const CylinderSet b(spec, b_prefixes);
            REQUIRE(valued_measure(a.united(b)).exact == valued_measure(a).exact + valued_measure(b).exact);
        }
    }
}

TEST_CASE("property: scale invariance under the IFS maps") {
    Rng rng(23);
    for (const auto& spec : CantorSpec::presets()) {
        for (int i = 0; i < 300; ++i) {
            const auto e = random_cylinder_set(rng, spec, 4, 4);
            for (int d : spec.kept_digits())
                REQUIRE(valued_measure(e.mapped(d)).exact == valued_measure(e).exact / Rational(spec.p()));
        }
    }
}

TEST_CASE("Hausdorff cover estimates") {
    for (const auto& spec : CantorSpec::presets()) {
        const Real s = hausdorff_dimension(spec);
        const auto whole = CylinderSet::whole(spec);
        for (int depth = 1; depth <= 10; ++depth) {
            REQUIRE(hausdorff_estimate_at_dimension(whole, depth).exact == rat(1));
            REQUIRE(dbl(bmp::abs(hausdorff_estimate(whole, s, depth).value - 1)) < 1e-12);
            const Real up = hausdorff_estimate(whole, s + Real(0.1), depth + 1).value /
                            hausdorff_estimate(whole, s + Real(0.1), depth).value;
            REQUIRE(dbl(bmp::abs(up - bmp::pow(Real(spec.r()), Real(-0.1)))) < 1e-12);
            const Real down = hausdorff_estimate(whole, s - Real(0.1), depth + 1).value /
                              hausdorff_estimate(whole, s - Real(0.1), depth).value;
            REQUIRE(dbl(bmp::abs(down - bmp::pow(Real(spec.r()), Real(0.1)))) < 1e-12);
        }
        const auto one = CylinderSet(spec, {{spec.max_kept()}});
        const auto est = hausdorff_estimate_at_dimension(one, 5);
        CHECK(est.exact == rat(1) / Rational(spec.p()));
        CHECK(est.cover_count == ipow(static_cast<unsigned long>(spec.p()), 4));
        CHECK(est.method == MeasureMethod::HausdorffCover);
    }
    const auto mt = CantorSpec::middle_third();
    CHECK_THROWS_AS(hausdorff_estimate(CylinderSet::whole(mt), 0, 3), DomainError);
    CHECK_THROWS_AS(hausdorff_estimate(CylinderSet::whole(mt), Real(1.5), 3), DomainError);
    // a cover coarser than the set is still a cover
    CHECK(hausdorff_estimate_at_dimension(CylinderSet(mt, {{0, 0, 0}}), 2).exact == rat(1, 4));
    CHECK(hausdorff_estimate_at_dimension(CylinderSet(mt, {{0, 0, 0}}), 3).exact == rat(1, 8));
}

TEST_CASE("Lebesgue measure of the covers") {
    const auto mt = CantorSpec::middle_third();
    const auto whole = CylinderSet::whole(mt);
    CHECK(lebesgue_measure(whole, 0) == rat(1));
    CHECK(lebesgue_measure(whole, 1) == rat(2, 3));
    for (const auto& spec : CantorSpec::presets()) {
        const auto w = CylinderSet::whole(spec);
        for (int d = 1; d <= 20; ++d) {
            REQUIRE(lebesgue_measure(w, d) < lebesgue_measure(w, d - 1));
            REQUIRE(lebesgue_measure(w, d) == pow(Rational(spec.p()) / Rational(spec.r()), d));
        }
        CHECK(lebesgue_measure(CylinderSet(spec), 5) == rat(0));
    }
}

TEST_CASE("initial segments converge to phi") {
    Rng rng(71);
    for (const auto& spec : CantorSpec::presets()) {
        for (int i = 0; i < 200; ++i) {
            const auto x = random_point(rng, spec);
            const Rational target = phi(x.value(), spec).value;
            for (int depth = 1; depth <= 12; ++depth) {
                const Rational m = valued_measure(initial_segment(x, spec, depth)).exact;
                REQUIRE(m <= target);
                REQUIRE(target - m <= pow(Rational(spec.p()), -depth));
            }
        }
    }
}
