#ifndef URD_SOLVER_HPP
#define URD_SOLVER_HPP

#include <map>
#include <mutex>
#include <string>

#include <urd/model.hpp>
#include <urd/profile.hpp>
#include <urd/search.hpp>

namespace urd::solver {

/// Requested profile violates the admissibility spectrum (CLI exit 2).
struct SpectrumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A required searched ingredient is absent and regeneration ran out of
/// budget (CLI exit 4).
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GddType { G6x2, G4x3, G12x2, G12x3, G12x5, G20x3 };

/// Construction engine: picks the route for (v, r, s, t), assembles the
/// design from ingredients, and returns a verified certificate.  Thread
/// safe; ingredient designs are memoized behind a mutex.
class Builder {
  public:
    explicit Builder(search::Cache cache);

    /// Verified URD(v; target).  Routes: v = 12 small cases, v = 36 point
    /// expansion of a single triple, v = 60 profile-set dispatch, v = 0
    /// (mod 24) expansion over a 1-factorization, v = 12 (mod 24) >= 84
    /// frame filling.  Degenerate (r,0,0) requests work for every even v.
    Design build_urd(int v, const Profile& target);

    /// The seven admissible URD(20; 19-3x, 0, 2x) designs.
    Design build_urd20(const Profile& target);

    /// Uniformly resolvable GDDs for the group types the recursion needs;
    /// memoized, so the reference stays valid for the Builder's lifetime.
    const Design& build_urgdd(GddType type, const Profile& target);

    /// IURD(36,12; [partial], [full]).
    Design build_iurd(const Profile& full, const Profile& partial);

    /// Memoized small URDs used as group fills.
    const Design& urd12(const Profile& p);
    const Design& urd20(const Profile& p);

    /// Name of the route taken by the most recent build_urd on this thread.
    static const std::string& last_route();

    search::Cache& cache() { return cache_; }

  private:
    search::Cache cache_;
    std::mutex mu_;
    std::map<std::string, Design> named_;
    std::map<std::pair<int, Profile>, Design> memo_gdd_;
    std::map<Profile, Design> memo_urd12_, memo_urd20_;

    const Design& named(const std::string& name);
    const Design& memoized_gdd(GddType type, const Profile& p);
    Design build_gdd(GddType type, const Profile& p);
    Design build_urgdd12x2(const Profile& p);
    Design build_urgdd12x3(const Profile& p);
    Design build_urgdd12x5(const Profile& p);
    Design build_urgdd20x3(const Profile& p);
    Design dispatch60(const Profile& target);
};

} // namespace urd::solver

#endif
