#include "cantor/sets.hpp"

#include <algorithm>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

using Word = std::vector<int>;

BigInt pow_r(const CantorSpec& spec, int n) {
    return ipow(static_cast<unsigned long>(spec.r()), static_cast<unsigned long>(n));
}

Word to_word(BigInt value, int r, int n) {
    Word w(static_cast<std::size_t>(n), 0);
    for (int i = n - 1; i >= 0; --i) {
        BigInt d = value % r;
        w[static_cast<std::size_t>(i)] = static_cast<int>(d.get_si());
        value /= r;
    }
    return w;
}

BigInt from_word(const Word& w, int r) {
    BigInt v = 0;
    for (int d : w) v = v * r + d;
    return v;
}

bool word_kept(const BigInt& value, int n, const CantorSpec& spec) {
    if (value < 0 || value >= pow_r(spec, n)) return false;
    Word w = to_word(value, spec.r(), n);
    return std::all_of(w.begin(), w.end(), [&](int d) { return spec.keeps(d); });
}

int largest_kept_below(const CantorSpec& spec, int digit) {
    for (int d = digit - 1; d >= 0; --d)
        if (spec.keeps(d)) return d;
    return -1;
}

int smallest_kept_above(const CantorSpec& spec, int digit) {
    for (int d = digit + 1; d < spec.r(); ++d)
        if (spec.keeps(d)) return d;
    return -1;
}

// Largest n-digit word over D that is <= value.
std::optional<BigInt> kept_floor(const BigInt& value, int n, const CantorSpec& spec) {
    if (value < 0) return std::nullopt;
    Word w = to_word(value, spec.r(), n);
    std::size_t i = 0;
    while (i < w.size() && spec.keeps(w[i])) ++i;
    if (i == w.size()) return value;
    for (std::size_t j = i + 1; j-- > 0;) {
        int d = largest_kept_below(spec, w[j]);
        if (d < 0) continue;
        w[j] = d;
        std::fill(w.begin() + static_cast<long>(j) + 1, w.end(), spec.max_kept());
        return from_word(w, spec.r());
    }
    return std::nullopt;
}

// Smallest n-digit word over D that is >= value.
std::optional<BigInt> kept_ceil(const BigInt& value, int n, const CantorSpec& spec) {
    if (value >= pow_r(spec, n)) return std::nullopt;
    Word w = to_word(value, spec.r(), n);
    std::size_t i = 0;
    while (i < w.size() && spec.keeps(w[i])) ++i;
    if (i == w.size()) return value;
    for (std::size_t j = i + 1; j-- > 0;) {
        int d = smallest_kept_above(spec, w[j]);
        if (d < 0) continue;
        w[j] = d;
        std::fill(w.begin() + static_cast<long>(j) + 1, w.end(), spec.min_kept());
        return from_word(w, spec.r());
    }
    return std::nullopt;
}

std::vector<BigInt> kept_words(const CantorSpec& spec, int n) {
    std::vector<BigInt> words{BigInt(0)};
    for (int level = 0; level < n; ++level) {
        std::vector<BigInt> next;
        next.reserve(words.size() * static_cast<std::size_t>(spec.p()));
        for (const auto& w : words)
            for (int d : spec.kept_digits()) next.emplace_back(w * spec.r() + d);
        words = std::move(next);
    }
    return words;
}

}  // namespace

bool Interval::contains(const Rational& x) const {
    bool lo_ok = (closure == Closure::Closed || closure == Closure::ClosedOpen) ? lo <= x : lo < x;
    bool hi_ok = (closure == Closure::Closed || closure == Closure::OpenClosed) ? x <= hi : x < hi;
    return lo_ok && hi_ok;
}

std::vector<AffineMap> ifs_maps(const CantorSpec& spec) {
    std::vector<AffineMap> maps;
    for (int d : spec.kept_digits()) maps.push_back({d, Rational(1, spec.r()), Rational(d, spec.r())});
    return maps;
}

std::vector<Interval> level_intervals(const CantorSpec& spec, int n) {
    if (n < 0) throw DomainError("level must be non-negative");
    check_level(n, "level_intervals");
    const BigInt scale = pow_r(spec, n);
    std::vector<Interval> out;
    for (const auto& w : kept_words(spec, n)) out.push_back({Rational(w, scale), Rational(w + 1, scale), Closure::Closed});
    return out;
}

GapReport gap_intervals(const CantorSpec& spec, int n) {
    if (n <= 0) throw DomainError("gap_intervals needs a positive level");
    check_level(n, "gap_intervals");
    GapReport report;
    std::vector<BigInt> parents{BigInt(0)};
    for (int k = 1; k <= n; ++k) {
        const BigInt scale = pow_r(spec, k);
        for (const auto& w : parents) {
            for (int d = 0; d < spec.r(); ++d) {
                if (spec.keeps(d)) continue;
                BigInt cell = w * spec.r() + d;
                report.raw.push_back({Rational(cell, scale), Rational(cell + 1, scale), Closure::Open});
            }
        }
        if (k < n) parents = kept_words(spec, k);
    }
    std::sort(report.raw.begin(), report.raw.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

    const auto kept = level_intervals(spec, n);
    if (kept.front().lo > Rational(0)) report.merged.push_back({Rational(0), kept.front().lo, Closure::ClosedOpen});
    for (std::size_t i = 1; i < kept.size(); ++i) {
        if (kept[i - 1].hi < kept[i].lo) report.merged.push_back({kept[i - 1].hi, kept[i].lo, Closure::Open});
    }
    if (kept.back().hi < Rational(1)) report.merged.push_back({kept.back().hi, Rational(1), Closure::OpenClosed});
    return report;
}

Rational deleted_length(const CantorSpec& spec, int n) {
    if (n < 0) throw DomainError("deleted_length needs a non-negative level");
    return Rational(1) - pow(Rational(spec.p(), spec.r()), n);
}

Real hausdorff_dimension(const CantorSpec& spec) {
    using boost::multiprecision::log;
    return log(Real(spec.p())) / log(Real(spec.r()));
}

std::optional<Interval> enclosing_gap(const Rational& x, const CantorSpec& spec, int n) {
    if (x < Rational(0) || x > Rational(1)) throw DomainError("point " + x.str() + " outside [0,1]");
    const BigInt scale = pow_r(spec, n);
    const Rational scaled = x * Rational(scale);
    BigInt cell = floor(scaled);
    if (cell == scale) cell -= 1;
    if (word_kept(cell, n, spec)) return std::nullopt;
    if (scaled.is_integer() && cell >= 1 && word_kept(scaled.numerator() - 1, n, spec)) return std::nullopt;

    auto below = kept_floor(cell, n, spec);
    auto above = kept_ceil(ceil(scaled), n, spec);
    Interval gap{below ? Rational(*below + 1, scale) : Rational(0), above ? Rational(*above, scale) : Rational(1),
                 Closure::Open};
    if (!below && !above) gap.closure = Closure::Closed;  // unreachable for p >= 1
    else if (!below) gap.closure = Closure::ClosedOpen;
    else if (!above) gap.closure = Closure::OpenClosed;
    return gap;
}

Membership membership(const Rational& x, const CantorSpec& spec) {
    if (x < Rational(0) || x > Rational(1)) throw DomainError("point " + x.str() + " outside [0,1]");
    const auto expansions = all_expansions(x, spec.r());

    if (std::any_of(expansions.begin(), expansions.end(), [&](const DigitExpansion& e) { return e.uses_only(spec); })) {
        const DigitExpansion& canonical = expansions.front();
        if (canonical.terminates() || x == Rational(1)) {
            const int m = x == Rational(1) ? 0 : static_cast<int>(canonical.preperiod().size());
            const BigInt grid = (x * Rational(pow_r(spec, m))).numerator();
            bool right_isolated = x < Rational(1) && (!word_kept(grid, m, spec) || !spec.keeps(0));
            bool left_isolated = x > Rational(0) && (!word_kept(grid - 1, m, spec) || !spec.keeps(spec.r() - 1));
            if (right_isolated || left_isolated) return {MembershipKind::Endpoint, 0, std::nullopt};
        }
        return {MembershipKind::InSet, 0, std::nullopt};
    }

    std::size_t level = 0;
    for (const auto& e : expansions) level = std::max(level, *e.first_deleted(spec));
    const int n = static_cast<int>(level);
    return {MembershipKind::InGap, n, enclosing_gap(x, spec, n)};
}

Membership membership_to_depth(const std::vector<int>& digits, const CantorSpec& spec) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= spec.r()) throw DomainError("digit outside [0, r)");
        if (spec.keeps(digits[i])) continue;
        const int n = static_cast<int>(i + 1);
        std::vector<int> cell(digits.begin(), digits.begin() + n);
        const BigInt scale = pow_r(spec, n);
        Rational mid = Rational(from_word(cell, spec.r()) * 2 + 1, scale * 2);
        return {MembershipKind::InGap, n, enclosing_gap(mid, spec, n)};
    }
    return {MembershipKind::InSet, 0, std::nullopt};
}

}  // namespace cantor
