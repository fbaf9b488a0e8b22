#ifndef URD_VERIFY_HPP
#define URD_VERIFY_HPP

#include <string>
#include <vector>

#include <urd/model.hpp>

namespace urd::verify {

struct Violation {
    std::string code;    // short machine tag, e.g. "duplicate-edge"
    std::string message; // human-readable detail
    int class_index = -1;
    int block_index = -1;
};

struct Report {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
    std::string summary(std::size_t max_lines = 20) const;
};

/// Full structural validation: block well-formedness, class kind
/// uniformity, coverage per scope, exact edge-multiset partition of the
/// context edge set, profile match, and the frame missing-class rule.
/// Tolerates arbitrary input; violations are data, never exceptions.
Report verify_design(const Design& d);

/// Edge-count identity 6r + 8s + 9t = 6(v-1), the arithmetic shadow of a
/// valid URD(v; r,s,t).
bool verify_counts(int v, const Profile& p);

} // namespace urd::verify

#endif
