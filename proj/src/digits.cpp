#include "cantor/digits.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cantor/errors.hpp"

namespace cantor {

DigitExpansion::DigitExpansion(int base, std::vector<int> preperiod, std::vector<int> period)
    : base_(base), pre_(std::move(preperiod)), period_(std::move(period)) {
    if (base_ < 2) throw DomainError("digit base must be at least 2");
    auto in_range = [&](int d) { return d >= 0 && d < base_; };
    if (!std::all_of(pre_.begin(), pre_.end(), in_range) || !std::all_of(period_.begin(), period_.end(), in_range))
        throw DomainError("digit outside [0, " + std::to_string(base_) + ")");
    normalize();
}

void DigitExpansion::normalize() {
    if (!period_.empty()) {
        const std::size_t len = period_.size();
        for (std::size_t l = 1; l < len; ++l) {
            if (len % l) continue;
            bool repeats = true;
            for (std::size_t i = l; i < len && repeats; ++i) repeats = period_[i] == period_[i - l];
            if (repeats) {
                period_.resize(l);
                break;
            }
        }
        if (period_.size() == 1 && period_[0] == 0) period_.clear();
    }
    if (period_.empty()) {
        while (!pre_.empty() && pre_.back() == 0) pre_.pop_back();
        return;
    }
    while (!pre_.empty() && pre_.back() == period_.back()) {
        std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
        pre_.pop_back();
    }
}

DigitExpansion DigitExpansion::of(const Rational& x, int base) {
    if (x < Rational(0) || x > Rational(1))
        throw DomainError("value " + x.str() + " outside [0,1]");
    if (x == Rational(1)) return DigitExpansion(base, {}, {base - 1});

    const BigInt den = x.denominator();
    BigInt rem = x.numerator();
    std::map<BigInt, std::size_t> seen;  // remainder -> digit index it produces
    std::vector<int> digits;
    while (rem != 0) {
        auto [it, fresh] = seen.emplace(rem, digits.size());
        if (!fresh) {
            std::vector<int> pre(digits.begin(), digits.begin() + static_cast<long>(it->second));
            std::vector<int> per(digits.begin() + static_cast<long>(it->second), digits.end());
            return DigitExpansion(base, std::move(pre), std::move(per));
        }
        rem *= base;
        BigInt d = rem / den;
        rem -= d * den;
        digits.push_back(static_cast<int>(d.get_si()));
    }
    return DigitExpansion(base, std::move(digits));
}

int DigitExpansion::digit(std::size_t k) const {
    if (k == 0) throw DomainError("digit positions are 1-based");
    if (k <= pre_.size()) return pre_[k - 1];
    if (period_.empty()) return 0;
    return period_[(k - 1 - pre_.size()) % period_.size()];
}

Rational DigitExpansion::value() const {
    auto as_integer = [&](const std::vector<int>& ds) {
        BigInt v = 0;
        for (int d : ds) v = v * base_ + d;
        return v;
    };
    const auto m = static_cast<unsigned long>(pre_.size());
    Rational out(as_integer(pre_));
    if (!period_.empty()) {
        BigInt cycle = ipow(static_cast<unsigned long>(base_), period_.size()) - 1;
        out += Rational(as_integer(period_), cycle);
    }
    return out / Rational(ipow(static_cast<unsigned long>(base_), m));
}

DigitExpansion DigitExpansion::tail(std::size_t count) const {
    if (count <= pre_.size()) {
        return DigitExpansion(base_, std::vector<int>(pre_.begin() + static_cast<long>(count), pre_.end()), period_);
    }
    if (period_.empty()) return DigitExpansion(base_, {});
    std::vector<int> per = period_;
    std::rotate(per.begin(), per.begin() + static_cast<long>((count - pre_.size()) % per.size()), per.end());
    return DigitExpansion(base_, {}, std::move(per));
}

DigitExpansion DigitExpansion::prepend(const std::vector<int>& prefix) const {
    std::vector<int> pre = prefix;
    pre.insert(pre.end(), pre_.begin(), pre_.end());
    return DigitExpansion(base_, std::move(pre), period_);
}

std::vector<int> DigitExpansion::first_digits(std::size_t count) const {
    std::vector<int> out;
    out.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) out.push_back(digit(k));
    return out;
}

std::optional<DigitExpansion> DigitExpansion::dual() const {
    if (period_.empty()) {
        if (pre_.empty()) return std::nullopt;  // zero
        std::vector<int> pre = pre_;
        pre.back() -= 1;
        return DigitExpansion(base_, std::move(pre), {base_ - 1});
    }
    if (period_.size() == 1 && period_[0] == base_ - 1) {
        if (pre_.empty()) return std::nullopt;  // one
        std::vector<int> pre = pre_;
        pre.back() += 1;
        return DigitExpansion(base_, std::move(pre));
    }
    return std::nullopt;
}

bool DigitExpansion::uses_only(const CantorSpec& spec) const { return !first_deleted(spec).has_value(); }

std::optional<std::size_t> DigitExpansion::first_deleted(const CantorSpec& spec) const {
    for (std::size_t i = 0; i < pre_.size(); ++i) {
        if (!spec.keeps(pre_[i])) return i + 1;
    }
    if (period_.empty()) {
        if (!spec.keeps(0)) return pre_.size() + 1;
        return std::nullopt;
    }
    for (std::size_t i = 0; i < period_.size(); ++i) {
        if (!spec.keeps(period_[i])) return pre_.size() + i + 1;
    }
    return std::nullopt;
}

bool operator==(const DigitExpansion& a, const DigitExpansion& b) {
    return a.base_ == b.base_ && a.pre_ == b.pre_ && a.period_ == b.period_;
}

std::vector<DigitExpansion> all_expansions(const Rational& x, int base) {
    std::vector<DigitExpansion> out{DigitExpansion::of(x, base)};
    if (auto twin = out.front().dual()) out.push_back(*twin);
    return out;
}

}  // namespace cantor
