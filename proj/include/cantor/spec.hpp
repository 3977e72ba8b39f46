#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace cantor {

/**
 * A (p,q) Cantor set parameterized by base r and the set of kept digits D.
 *
 * The unit interval is split into r equal closed cells; the cells whose
 * digit lies in D survive, the q = r - p others are deleted. Iterating gives
 * the limit set C of the IFS {x -> (x + d)/r : d in D}.
 */
class CantorSpec {
public:
    // Throws DomainError unless r >= 3, 2 <= |D| <= r - 1, digits distinct and in range.
    CantorSpec(int r, std::vector<int> kept_digits);

    static CantorSpec middle_third() { return {3, {0, 2}}; }
    static CantorSpec five_three() { return {5, {0, 2, 4}}; }
    static CantorSpec four_outer() { return {4, {0, 3}}; }
    static std::vector<CantorSpec> presets();

    int r() const { return r_; }
    int p() const { return static_cast<int>(kept_.size()); }
    int q() const { return r_ - p(); }
    std::span<const int> kept_digits() const { return kept_; }

    bool keeps(int digit) const { return digit >= 0 && digit < r_ && rank_[digit] >= 0; }
    // Number of kept digits strictly below `digit` (defined for every digit in [0, r)).
    int rank(int digit) const { return below_[digit]; }
    int min_kept() const { return kept_.front(); }
    int max_kept() const { return kept_.back(); }
    // Index of a kept digit inside D (0-based); -1 for deleted digits.
    int index_of(int digit) const { return rank_[digit]; }

    std::string str() const;  // "(3,{0,2})"

    friend bool operator==(const CantorSpec&, const CantorSpec&) = default;

private:
    int r_;
    std::vector<int> kept_;
    std::vector<int> rank_;
    std::vector<int> below_;
};

// Maximum enumeration level; defaults to 24, overridable via CANTOR_LEVEL_CAP.
int level_cap();
void check_level(int n, const char* what);

}  // namespace cantor
