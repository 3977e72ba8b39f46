#include "cantor/spec.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "cantor/errors.hpp"

namespace cantor {

CantorSpec::CantorSpec(int r, std::vector<int> kept_digits) : r_(r), kept_(std::move(kept_digits)) {
    if (r_ < 3) throw DomainError("base r must be at least 3, got " + std::to_string(r_));
    std::sort(kept_.begin(), kept_.end());
    if (std::adjacent_find(kept_.begin(), kept_.end()) != kept_.end())
        throw DomainError("kept digits must be distinct");
    for (int d : kept_) {
        if (d < 0 || d >= r_)
            throw DomainError("kept digit " + std::to_string(d) + " outside [0, r)");
    }
    if (p() < 2) throw DomainError("at least two kept digits are required (p >= 2)");
    if (q() < 1) throw DomainError("at least one digit must be deleted (q >= 1)");

    rank_.assign(static_cast<std::size_t>(r_), -1);
    below_.assign(static_cast<std::size_t>(r_), 0);
    for (std::size_t i = 0; i < kept_.size(); ++i) rank_[static_cast<std::size_t>(kept_[i])] = static_cast<int>(i);
    int count = 0;
    for (int d = 0; d < r_; ++d) {
        below_[static_cast<std::size_t>(d)] = count;
        if (rank_[static_cast<std::size_t>(d)] >= 0) ++count;
    }
}

std::vector<CantorSpec> CantorSpec::presets() { return {middle_third(), five_three(), four_outer()}; }

std::string CantorSpec::str() const {
    std::string out = "(" + std::to_string(r_) + ",{";
    for (std::size_t i = 0; i < kept_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(kept_[i]);
    }
    return out + "})";
}

int level_cap() {
    if (const char* env = std::getenv("CANTOR_LEVEL_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 1'000'000) return static_cast<int>(v);
    }
    return 24;
}

void check_level(int n, const char* what) {
    if (n > level_cap()) {
        throw CapacityError(std::string(what) + ": level " + std::to_string(n) + " exceeds cap " +
                            std::to_string(level_cap()) + " (set CANTOR_LEVEL_CAP to override)");
    }
}

}  // namespace cantor
