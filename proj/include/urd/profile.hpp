#ifndef URD_PROFILE_HPP
#define URD_PROFILE_HPP

#include <compare>
#include <set>
#include <string>

namespace urd {

/// Class-count triple of a uniformly resolvable decomposition:
/// r perfect-matching (P2) classes, s P3 classes, t P4 classes.
struct Profile {
    int r = 0;
    int s = 0;
    int t = 0;

    friend auto operator<=>(const Profile&, const Profile&) = default;

    Profile operator+(const Profile& o) const { return {r + o.r, s + o.s, t + o.t}; }
    Profile& operator+=(const Profile& o) {
        r += o.r;
        s += o.s;
        t += o.t;
        return *this;
    }

    std::string str() const {
        return "(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + ")";
    }
};

/// Finite set of profiles with set-sum operators (see spectrum.hpp).
using TripleSet = std::set<Profile>;

} // namespace urd

#endif
