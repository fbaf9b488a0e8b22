#ifndef URD_SEARCH_HPP
#define URD_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <urd/model.hpp>

namespace urd::search {

struct ContextSpec {
    enum class Type { Complete, Multipartite, CycleBlowup };
    Type type = Type::Complete;
    int v = 0;
    std::vector<std::vector<Vertex>> groups; // multipartite only
    int cycle_positions = 0;                 // cycle blow-up only
    int cycle_copies = 0;
};

/// One batch of identically-shaped classes.  In symmetric mode `orbit` is
/// the class-orbit size under the prescribed cyclic action and `count` is
/// the number of orbits (so count*orbit classes); orbit 0 asks the solver
/// to enumerate feasible orbit partitions itself.  In plain mode `count`
/// is simply the number of classes.
struct ClassRequirement {
    BlockKind kind = BlockKind::P2;
    Scope scope = Scope::Full;
    int missing_group = -1;
    int count = 1;
    int orbit = 0;
};

struct Budget {
    std::int64_t nodes = 400000; // backtracking nodes per restart
    int restarts = 64;
};

struct SearchSpec {
    std::string name; // registry key; empty for ad-hoc specs
    ContextSpec context;
    std::vector<ClassRequirement> classes;
    int symmetry = 0; // cyclic order m acting as x -> x + v/m; 0 = plain
    std::uint64_t seed = 1;
    Budget budget;
    DesignKind result_kind = DesignKind::Ingredient;
};

/// Canonical content hash of a spec (name and budget excluded), used as the
/// cache address.
std::string spec_key(const SearchSpec& spec);

std::string spec_to_json(const SearchSpec& spec);
SearchSpec spec_from_json(const std::string& text);

struct SolveOutcome {
    std::optional<Design> design; // empty = infeasible within budget
    std::int64_t nodes = 0;
    int restarts = 0;
};

/// Class-by-class backtracking with randomized restarts; with `symmetry`
/// set, searches base blocks developed by the cyclic action instead.  Any
/// returned design has already passed verification against the spec.
/// Throws std::domain_error when the requested classes are arithmetically
/// inconsistent with the context edge count (rejected before search).
SolveOutcome solve(const SearchSpec& spec);

/// Content-addressed certificate store.  Entries are re-verified at load;
/// corrupt files are reported as absent.
class Cache {
  public:
    explicit Cache(std::string dir);
    const std::string& dir() const { return dir_; }
    std::string path_for(const SearchSpec& spec) const;
    std::optional<Design> get(const SearchSpec& spec) const;
    /// Lookup by registry instance name (ignores the spec hash).
    std::optional<Design> get_by_name(const std::string& name) const;
    void put(const SearchSpec& spec, const Design& d) const;

  private:
    std::string dir_;
};

/// Specs for every design the construction imports from outside sources:
/// regenerated by the oracle once and shipped as cache certificates.
const std::vector<SearchSpec>& cited_specs();
const SearchSpec* find_spec(const std::string& name);

} // namespace urd::search

#endif
