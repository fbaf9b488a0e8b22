#ifndef URD_COMPOSE_HPP
#define URD_COMPOSE_HPP

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include <urd/model.hpp>
#include <urd/profile.hpp>

namespace urd::compose {

struct CompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProfileAssignment {
    Profile base;
    std::vector<Profile> parts;
};

/// Writes target = base + sum of h parts with base in base_set and every
/// part in part_set.  Backtracks over base candidates; the part
/// distribution is found by exact dynamic programming over the (s,t)
/// coordinates of the part set.  Returns nullopt only when the target is
/// outside base_set + h*part_set.
std::optional<ProfileAssignment> select_profiles(const Profile& target,
                                                 const TripleSet& base_set,
                                                 const TripleSet& part_set, int h);

using DesignProvider = std::function<const Design&(const Profile&)>;

/// Theorem-style point expansion of a k-RGDD of type g^u: every point is
/// replaced by t copies; block b of parallel class i carries a copy of a
/// type-t^k URGDD with profile class_profiles[i], classes united across the
/// blocks of the class.  With group_fill set, every blown group receives a
/// URD(g*t) with that profile (classes united across groups) and the result
/// is a URD; otherwise the result is a URGDD of type (g*t)^u.
Design expand_rgdd(const Design& rgdd, int t, const std::vector<Profile>& class_profiles,
                   const DesignProvider& class_provider,
                   const std::optional<Profile>& group_fill = std::nullopt,
                   const DesignProvider& group_provider = nullptr);

/// Fills every group of a URGDD with a copy of a URD on |group| points with
/// profile fill_profile; the copies' classes are united across groups and
/// appended.  Output profile = gdd profile + fill_profile.
Design fill_groups(const Design& gdd, const Profile& fill_profile,
                   const DesignProvider& provider);

/// IURD(36,12): a type-12^3 URGDD with profile `full` whose first two
/// groups are filled with URD(12; partial) copies, paired into classes that
/// miss the third group (the hole).
Design build_iurd_36_12(const Profile& full, const Profile& partial,
                        const DesignProvider& urgdd_12x3_provider,
                        const DesignProvider& urd12_provider);

using IurdProvider = std::function<Design(const Profile& full, const Profile& partial)>;

/// Frame-filling recursion: blows a 2-frame of type 2^u up by t = 12, adds
/// a hole of 12 fresh points, places a type-12^2 URGDD with profile
/// per_class_profiles[i][j] on every blown edge of the j-th partial class
/// missing group i, an IURD(36,12; [hole_fill], [sum of the two profiles])
/// on hole + blown group i, and a URD(12; hole_fill) on the hole.  Classes
/// are combined kind by kind into a URD on 24u + 12 points.
Design frame_compose(const Design& frame, int t,
                     const std::vector<std::array<Profile, 2>>& per_class_profiles,
                     const DesignProvider& urgdd_12x2_provider, const IurdProvider& iurd_provider,
                     const Profile& hole_fill, const DesignProvider& hole_provider);

} // namespace urd::compose

#endif
