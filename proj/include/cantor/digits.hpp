#pragma once

/**
 * Eventually periodic base-r digit sequences.
 *
 * A DigitExpansion 0.a1 a2 ... am (b1 ... bL)^inf represents exactly one
 * value in [0,1]. An empty period means trailing zeros. The canonical
 * expansion of a rational x in [0,1) never ends in a repeating (r-1); the
 * single exception is x = 1, whose only expansion is 0.(r-1)^inf.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "cantor/rational.hpp"
#include "cantor/spec.hpp"

namespace cantor {

class DigitExpansion {
public:
    DigitExpansion(int base, std::vector<int> preperiod, std::vector<int> period = {});

    // Canonical expansion of x in [0,1]; throws DomainError outside the range.
    static DigitExpansion of(const Rational& x, int base);

    int base() const { return base_; }
    const std::vector<int>& preperiod() const { return pre_; }
    const std::vector<int>& period() const { return period_; }
    bool terminates() const { return period_.empty(); }

    // 1-based digit access; digit(k) for any k >= 1.
    int digit(std::size_t k) const;
    Rational value() const;

    // The sequence with its first `count` digits dropped (still eventually periodic).
    DigitExpansion tail(std::size_t count) const;
    // `prefix` followed by this sequence.
    DigitExpansion prepend(const std::vector<int>& prefix) const;
    std::vector<int> first_digits(std::size_t count) const;

    // The other expansion of the same value, when one exists: for
    // x = a/r^m in (0,1) the terminating form ...d000 has the twin
    // ...(d-1)(r-1)(r-1)...; the mapping works in both directions.
    std::optional<DigitExpansion> dual() const;

    // Every digit (preperiod and period) lies in the spec's kept set.
    bool uses_only(const CantorSpec& spec) const;
    // 1-based position of the first digit outside D, if any.
    std::optional<std::size_t> first_deleted(const CantorSpec& spec) const;

    // Structural equality after normalizing (shortest period, shortest preperiod).
    friend bool operator==(const DigitExpansion& a, const DigitExpansion& b);

private:
    void normalize();

    int base_;
    std::vector<int> pre_;
    std::vector<int> period_;
};

// Both expansions of x (canonical first); a single entry unless x = a/r^m in (0,1).
std::vector<DigitExpansion> all_expansions(const Rational& x, int base);

}  // namespace cantor
