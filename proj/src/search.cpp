#include <urd/search.hpp>

#include <urd/certificate.hpp>
#include <urd/verify.hpp>

#include <algorithm>
#include <bit>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace urd::search {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

// bits strictly above position a, safe for a = 63
constexpr Mask bits_above(int a) { return a >= 63 ? Mask{0} : ~(bit(a + 1) - 1); }

int lowest(Mask m) { return std::countr_zero(m); }

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Fisher-Yates with our own PRNG so certificate bytes do not depend on the
// standard library's shuffle implementation.
template <typename T>
void shuffle_blocks(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

// ---------------------------------------------------------------- context

struct ContextEdges {
    int v = 0;
    std::vector<Mask> adj; // target edge set as adjacency masks
    std::vector<int> group_of;

    bool has(int a, int b) const { return (adj[a] >> b) & 1; }
    long long edge_count() const {
        long long total = 0;
        for (const Mask m : adj) total += std::popcount(m);
        return total / 2;
    }
};

ContextEdges context_edges(const ContextSpec& ctx) {
    ContextEdges ce;
    ce.v = ctx.v;
    if (ctx.v <= 0 || ctx.v > 64)
        throw std::domain_error("search supports 1..64 points, got " + std::to_string(ctx.v));
    ce.adj.assign(ctx.v, 0);
    ce.group_of.assign(ctx.v, -1);
    switch (ctx.type) {
    case ContextSpec::Type::Complete:
        for (int a = 0; a < ctx.v; ++a)
            for (int b = 0; b < ctx.v; ++b)
                if (a != b) ce.adj[a] |= bit(b);
        break;
    case ContextSpec::Type::Multipartite: {
        for (std::size_t g = 0; g < ctx.groups.size(); ++g)
            for (Vertex p : ctx.groups[g]) {
                if (p < 0 || p >= ctx.v) throw std::domain_error("group vertex out of range");
                if (ce.group_of[p] != -1) throw std::domain_error("overlapping groups");
                ce.group_of[p] = static_cast<int>(g);
            }
        for (int p = 0; p < ctx.v; ++p)
            if (ce.group_of[p] == -1) throw std::domain_error("vertex missing from groups");
        for (int a = 0; a < ctx.v; ++a)
            for (int b = 0; b < ctx.v; ++b)
                if (ce.group_of[a] != ce.group_of[b]) ce.adj[a] |= bit(b);
        break;
    }
    case ContextSpec::Type::CycleBlowup: {
        const int m = ctx.cycle_positions, n = ctx.cycle_copies;
        if (m < 3 || n < 1 || m * n != ctx.v)
            throw std::domain_error("bad cycle blow-up parameters");
        for (int j = 0; j < m; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const int x = j * n + a, y = ((j + 1) % m) * n + b;
                    ce.adj[x] |= bit(y);
                    ce.adj[y] |= bit(x);
                }
        break;
    }
    }
    return ce;
}

int edges_per_block(BlockKind k) { return block_size(k) - 1 + (kind_is_cycle(k) ? 1 : 0); }

// ------------------------------------------------------------ plain engine

struct PlainClass {
    BlockKind kind;
    Scope scope;
    int missing_group;
    Mask cover0;
};

struct AttemptAbort {};

class PlainEngine {
  public:
    PlainEngine(const ContextEdges& ce, std::vector<PlainClass> classes)
        : ce_(ce), classes_(std::move(classes)), avail_(ce.adj) {
        solution_.resize(classes_.size());
    }

    bool run(std::uint64_t seed, std::int64_t node_budget, std::int64_t& nodes_used) {
        rng_.seed(seed);
        nodes_ = 0;
        node_budget_ = node_budget;
        avail_ = ce_.adj;
        for (auto& s : solution_) s.clear();
        bool ok = false;
        try {
            ok = next_class(0);
        } catch (const AttemptAbort&) {
            ok = false;
        }
        nodes_used += nodes_;
        return ok;
    }

    const std::vector<std::vector<Block>>& solution() const { return solution_; }

  private:
    const ContextEdges& ce_;
    std::vector<PlainClass> classes_;
    std::vector<Mask> avail_;
    std::vector<std::vector<Block>> solution_;
    std::mt19937_64 rng_;
    std::int64_t nodes_ = 0;
    std::int64_t node_budget_ = 0;

    bool next_class(std::size_t ci) {
        if (ci == classes_.size()) return true;
        return place(ci, classes_[ci].cover0);
    }

    bool place(std::size_t ci, Mask cover) {
        if (cover == 0) return next_class(ci + 1);
        if (++nodes_ > node_budget_) throw AttemptAbort{};
        const BlockKind kind = classes_[ci].kind;
        // most-constrained vertex first, by available-partner count
        int pivot = -1, best = 1 << 30;
        for (Mask m = cover; m; m &= m - 1) {
            const int p = lowest(m);
            const int deg = std::popcount(avail_[p] & cover);
            if (deg < best) {
                best = deg;
                pivot = p;
                if (deg == 0) break;
            }
        }
        if (best == 0) return false;
        std::vector<Block> cand = candidates(kind, pivot, cover);
        shuffle_blocks(cand, rng_);
        for (Block& b : cand) {
            const auto edges = edges_of(b);
            Mask pts = 0;
            for (Vertex p : b.verts) pts |= bit(p);
            for (const Edge& e : edges) {
                avail_[e.first] &= ~bit(e.second);
                avail_[e.second] &= ~bit(e.first);
            }
            solution_[ci].push_back(b);
            if (place(ci, cover & ~pts)) return true;
            solution_[ci].pop_back();
            for (const Edge& e : edges) {
                avail_[e.first] |= bit(e.second);
                avail_[e.second] |= bit(e.first);
            }
        }
        return false;
    }

    std::vector<Block> candidates(BlockKind kind, int p, Mask cover) const {
        std::vector<Block> out;
        const Mask np = avail_[p] & cover;
        auto each = [](Mask m, auto&& f) {
            for (; m; m &= m - 1) f(lowest(m));
        };
        switch (kind) {
        case BlockKind::P2:
            each(np, [&](int q) { out.push_back({kind, {p, q}}); });
            break;
        case BlockKind::P3:
            each(np, [&](int a) { // p as an end: [p,a,b]
                each(avail_[a] & cover & ~bit(p) & ~bit(a),
                     [&](int b) { out.push_back({kind, {p, a, b}}); });
            });
            each(np, [&](int a) { // p as the center: [a,p,b], a < b
                each(np & bits_above(a), [&](int b) { out.push_back({kind, {a, p, b}}); });
            });
            break;
        case BlockKind::P4:
            each(np, [&](int a) { // [p,a,b,c]
                each(avail_[a] & cover & ~bit(p) & ~bit(a), [&](int b) {
                    each(avail_[b] & cover & ~bit(p) & ~bit(a) & ~bit(b),
                         [&](int c) { out.push_back({kind, {p, a, b, c}}); });
                });
            });
            each(np, [&](int a) { // [a,p,b,c]
                each(np & ~bit(a), [&](int b) {
                    each(avail_[b] & cover & ~bit(p) & ~bit(a) & ~bit(b),
                         [&](int c) { out.push_back({kind, {a, p, b, c}}); });
                });
            });
            break;
        case BlockKind::K3:
            each(np, [&](int a) {
                each(np & avail_[a] & bits_above(a),
                     [&](int b) { out.push_back({kind, {p, a, b}}); });
            });
            break;
        case BlockKind::C5:
            each(np, [&](int a) {
                each(np & bits_above(a), [&](int d) {
                    each(avail_[a] & cover & ~bit(p) & ~bit(a) & ~bit(d), [&](int b) {
                        each(avail_[b] & avail_[d] & cover & ~bit(p) & ~bit(a) & ~bit(b) &
                                 ~bit(d),
                             [&](int c) { out.push_back({kind, {p, a, b, c, d}}); });
                    });
                });
            });
            break;
        }
        return out;
    }
};

// -------------------------------------------------------- symmetric engine

// Free cyclic action x -> x + step (mod v) of order m.  A class-orbit of
// size o has stabilizer <x + o*step> of order q = m/o; its base blocks use
// each residue mod o*step exactly once, and every base edge consumes one
// full edge orbit of the action.
struct SymStage {
    BlockKind kind;
    int orbit;      // o
    int stab;       // q = m/o
    int residues;   // R = o*step
    int base_blocks;
};

class SymEngine {
  public:
    SymEngine(const ContextEdges& ce, int m, std::vector<SymStage> stages)
        : ce_(ce), step_(ce.v / m), stages_(std::move(stages)) {
        orbit_used_.assign(static_cast<std::size_t>(ce_.v / 2 + 1) * ce_.v, 0);
        bases_.resize(stages_.size());
    }

    bool run(std::uint64_t seed, std::int64_t node_budget, std::int64_t& nodes_used) {
        rng_.seed(seed);
        nodes_ = 0;
        node_budget_ = node_budget;
        std::fill(orbit_used_.begin(), orbit_used_.end(), 0);
        for (auto& b : bases_) b.clear();
        bool ok = false;
        try {
            ok = next_stage(0);
        } catch (const AttemptAbort&) {
            ok = false;
        }
        nodes_used += nodes_;
        return ok;
    }

    // Develops stage s into its o full classes.
    std::vector<std::vector<Block>> develop(std::size_t s) const {
        const SymStage& st = stages_[s];
        std::vector<std::vector<Block>> classes(st.orbit);
        for (int i = 0; i < st.orbit; ++i)
            for (int j = 0; j < st.stab; ++j) {
                const int shift = i * step_ + j * st.residues;
                for (Block b : bases_[s]) {
                    for (Vertex& x : b.verts) x = (x + shift) % ce_.v;
                    classes[i].push_back(std::move(b));
                }
            }
        return classes;
    }

    int edge_orbit(int a, int b) const {
        int d = ((b - a) % ce_.v + ce_.v) % ce_.v;
        int start = a;
        if (d > ce_.v - d) {
            d = ce_.v - d;
            start = b;
        }
        if (2 * d == ce_.v) return d * ce_.v + start % (step_ / 2);
        return d * ce_.v + start % step_;
    }

  private:
    const ContextEdges& ce_;
    int step_;
    std::vector<SymStage> stages_;
    std::vector<char> orbit_used_;
    std::vector<std::vector<Block>> bases_;
    std::mt19937_64 rng_;
    std::int64_t nodes_ = 0;
    std::int64_t node_budget_ = 0;

    bool next_stage(std::size_t s) {
        if (s == stages_.size()) return true;
        std::vector<char> res_covered(stages_[s].residues, 0);
        return place(s, res_covered, stages_[s].base_blocks);
    }

    bool place(std::size_t s, std::vector<char>& res_covered, int remaining) {
        if (remaining == 0) return next_stage(s + 1);
        if (++nodes_ > node_budget_) throw AttemptAbort{};
        const SymStage& st = stages_[s];
        int pivot = -1;
        for (int r = 0; r < st.residues; ++r)
            if (!res_covered[r]) {
                pivot = r;
                break;
            }
        std::vector<Block> cand = candidates(st, pivot, res_covered);
        shuffle_blocks(cand, rng_);
        for (Block& b : cand) {
            const auto edges = edges_of(b);
            for (const Edge& e : edges) orbit_used_[edge_orbit(e.first, e.second)] = 1;
            for (Vertex x : b.verts) res_covered[x % st.residues] = 1;
            bases_[s].push_back(b);
            if (place(s, res_covered, remaining - 1)) return true;
            bases_[s].pop_back();
            for (Vertex x : b.verts) res_covered[x % st.residues] = 0;
            for (const Edge& e : edges) orbit_used_[edge_orbit(e.first, e.second)] = 0;
        }
        return false;
    }

    // Base blocks containing the pivot residue's representative point.  A
    // base block may be translated by multiples of R inside its stabilizer
    // orbit, so blocks containing the point `pivot_res` itself are enough.
    std::vector<Block> candidates(const SymStage& st, int pivot_res,
                                  const std::vector<char>& res_covered) {
        std::vector<Block> out;
        const int p = pivot_res;
        const int k = block_size(st.kind);
        const bool cyc = kind_is_cycle(st.kind);
        std::vector<Vertex> verts;
        std::vector<char> res_in_block(st.residues, 0);
        std::vector<int> picked; // edge orbits used by the partial block

        auto ok_vertex = [&](int x) {
            return !res_covered[x % st.residues] && !res_in_block[x % st.residues];
        };
        auto push_edge = [&](int a, int b) {
            if (!ce_.has(a, b)) return false;
            const int id = edge_orbit(a, b);
            if (orbit_used_[id]) return false;
            for (int q : picked)
                if (q == id) return false;
            picked.push_back(id);
            return true;
        };
        auto push_vertex = [&](int x) {
            verts.push_back(x);
            res_in_block[x % st.residues] = 1;
        };
        auto pop_vertex = [&]() {
            res_in_block[verts.back() % st.residues] = 0;
            verts.pop_back();
        };

        if (cyc) { // pivot first; direction canonicalized by second < last
            std::function<void()> build = [&]() {
                if ((int)verts.size() == k) {
                    if (verts[1] > verts.back()) return;
                    if (!push_edge(verts.front(), verts.back())) return;
                    out.push_back({st.kind, verts});
                    picked.pop_back();
                    return;
                }
                for (int x = 0; x < ce_.v; ++x) {
                    if (!ok_vertex(x) || !push_edge(verts.back(), x)) continue;
                    push_vertex(x);
                    build();
                    pop_vertex();
                    picked.pop_back();
                }
            };
            if (ok_vertex(p)) {
                push_vertex(p);
                build();
                pop_vertex();
            }
            return out;
        }

        // paths: enumerate with the pivot at positions 0 .. (k-1)/2; the
        // reversed placements cover the remaining positions
        for (int pos = 0; pos <= (k - 1) / 2; ++pos) {
            std::function<void()> build = [&]() {
                const int filled = (int)verts.size();
                if (filled == k) {
                    if (pos * 2 == k - 1 && verts.front() > verts.back()) return;
                    out.push_back({st.kind, verts});
                    return;
                }
                if (filled == pos) {
                    if (!ok_vertex(p)) return;
                    if (filled > 0 && !push_edge(verts.back(), p)) return;
                    push_vertex(p);
                    build();
                    pop_vertex();
                    if (filled > 0) picked.pop_back();
                    return;
                }
                for (int x = 0; x < ce_.v; ++x) {
                    if (!ok_vertex(x)) continue;
                    if (filled > 0 && !push_edge(verts.back(), x)) continue;
                    push_vertex(x);
                    build();
                    pop_vertex();
                    if (filled > 0) picked.pop_back();
                }
            };
            build();
        }
        return out;
    }
};

// ------------------------------------------------------------ spec helpers

long long class_edge_total(const ContextSpec& ctx, const ContextEdges& ce,
                           const std::vector<ClassRequirement>& reqs, int symmetry) {
    long long total = 0;
    for (const auto& r : reqs) {
        long long pts = ce.v;
        if (r.scope == Scope::PartialGroup) {
            if (r.missing_group < 0 || r.missing_group >= (int)ctx.groups.size())
                throw std::domain_error("missing_group out of range");
            pts -= (long long)ctx.groups[r.missing_group].size();
        }
        if (pts % block_size(r.kind) != 0)
            throw std::domain_error("class size does not divide the covered point count");
        const long long blocks = pts / block_size(r.kind);
        const int classes = symmetry > 0 ? r.count * std::max(r.orbit, 1) : r.count;
        total += blocks * edges_per_block(r.kind) * classes;
    }
    return total;
}

Profile profile_of_classes(const std::vector<ResolutionClass>& classes, DesignKind kind) {
    Profile p;
    for (const auto& c : classes) {
        if (kind == DesignKind::Iurd && c.scope != Scope::Full) continue;
        switch (c.kind) {
        case BlockKind::P2: p.r++; break;
        case BlockKind::P3: p.s++; break;
        case BlockKind::P4: p.t++; break;
        default: break;
        }
    }
    return p;
}

Design assemble(const SearchSpec& spec, std::vector<ResolutionClass> classes) {
    Design d;
    d.kind = spec.result_kind;
    d.v = spec.context.v;
    if (spec.context.type == ContextSpec::Type::Multipartite)
        d.layout.groups = spec.context.groups;
    if (spec.context.type == ContextSpec::Type::CycleBlowup)
        d.cycle = CycleContext{spec.context.cycle_positions, spec.context.cycle_copies};
    d.classes = std::move(classes);
    d.profile = profile_of_classes(d.classes, d.kind);
    canonicalize(d);
    auto report = verify::verify_design(d);
    if (!report.valid())
        throw std::logic_error("search produced an invalid design for " + spec.name + ":\n" +
                               report.summary());
    return d;
}

std::vector<int> valid_orbits(int m, int v, BlockKind kind) {
    std::vector<int> orbits;
    for (int o = m; o >= 1; --o) {
        if (m % o != 0) continue;
        const int q = m / o;
        if ((v / block_size(kind)) % q != 0) continue;
        orbits.push_back(o); // descending: prefer large orbits
    }
    return orbits;
}

void orbit_partitions(int count, const std::vector<int>& sizes, std::size_t idx,
                      std::vector<int>& cur, std::vector<std::vector<int>>& out,
                      std::size_t limit) {
    if (out.size() >= limit) return;
    if (count == 0) {
        out.push_back(cur);
        return;
    }
    if (idx == sizes.size()) return;
    for (int n = count / sizes[idx]; n >= 0; --n) {
        for (int i = 0; i < n; ++i) cur.push_back(sizes[idx]);
        orbit_partitions(count - n * sizes[idx], sizes, idx + 1, cur, out, limit);
        for (int i = 0; i < n; ++i) cur.pop_back();
    }
}

} // namespace

SolveOutcome solve(const SearchSpec& spec) {
    const ContextEdges ce = context_edges(spec.context);
    const long long want = ce.edge_count();
    const long long have = class_edge_total(spec.context, ce, spec.classes, spec.symmetry);
    if (want != have)
        throw std::domain_error("class edge total " + std::to_string(have) +
                                " does not match context edge count " + std::to_string(want));

    SolveOutcome outcome;
    std::uint64_t seed_state = spec.seed;

    if (spec.symmetry == 0) {
        std::vector<PlainClass> classes;
        for (const auto& r : spec.classes) {
            Mask cover = ce.v == 64 ? ~Mask{0} : bit(ce.v) - 1;
            if (r.scope == Scope::PartialGroup)
                for (Vertex p : spec.context.groups[r.missing_group]) cover &= ~bit(p);
            for (int i = 0; i < r.count; ++i)
                classes.push_back({r.kind, r.scope, r.missing_group, cover});
        }
        PlainEngine engine(ce, classes);
        for (int attempt = 0; attempt < spec.budget.restarts; ++attempt) {
            outcome.restarts = attempt + 1;
            if (engine.run(splitmix64(seed_state), spec.budget.nodes, outcome.nodes)) {
                std::vector<ResolutionClass> out;
                for (std::size_t i = 0; i < classes.size(); ++i)
                    out.push_back({classes[i].kind, classes[i].scope, classes[i].missing_group,
                                   engine.solution()[i]});
                outcome.design = assemble(spec, std::move(out));
                return outcome;
            }
        }
        return outcome;
    }

    // symmetric mode
    const int m = spec.symmetry;
    if (ce.v % m != 0) throw std::domain_error("symmetry order must divide v");
    const int step = ce.v / m;
    for (const auto& r : spec.classes)
        if (r.scope != Scope::Full)
            throw std::domain_error("symmetric search supports full classes only");
    for (int a = 0; a < ce.v; ++a)
        for (int b = a + 1; b < ce.v; ++b)
            if (ce.has(a, b) != ce.has((a + step) % ce.v, (b + step) % ce.v))
                throw std::domain_error(
                    "the target edge set is not invariant under the prescribed symmetry");
    if (spec.context.type == ContextSpec::Type::Multipartite)
        for (const auto& g : spec.context.groups) {
            std::set<Vertex> gs(g.begin(), g.end());
            for (Vertex p : g)
                if (!gs.count((p + step) % ce.v))
                    throw std::domain_error("groups are not invariant under the symmetry");
        }
    if (m % 2 == 0 && ce.v % 2 == 0)
        for (int a = 0; a < ce.v / 2; ++a)
            if (ce.has(a, a + ce.v / 2))
                throw std::domain_error(
                    "even symmetry order cannot cover diameter edges; use an odd order");

    // expand orbit choices; requirements with orbit 0 get enumerated partitions
    std::vector<std::vector<std::vector<int>>> choices; // per requirement: list of partitions
    for (const auto& r : spec.classes) {
        std::vector<std::vector<int>> parts;
        if (r.orbit > 0) {
            parts.push_back(std::vector<int>(r.count, r.orbit));
        } else {
            std::vector<int> cur;
            orbit_partitions(r.count, valid_orbits(m, ce.v, r.kind), 0, cur, parts, 6);
            if (parts.empty())
                throw std::domain_error("no feasible orbit partition for a class requirement");
        }
        choices.push_back(std::move(parts));
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    std::vector<std::vector<std::size_t>> combos;
    std::function<void(std::size_t)> enumerate = [&](std::size_t i) {
        if (combos.size() >= 8) return;
        if (i == choices.size()) {
            combos.push_back(pick);
            return;
        }
        for (std::size_t c = 0; c < choices[i].size(); ++c) {
            pick[i] = c;
            enumerate(i + 1);
        }
    };
    enumerate(0);

    const int attempts_per_combo =
        std::max(1, spec.budget.restarts / std::max<int>(1, (int)combos.size()));
    for (const auto& combo : combos) {
        std::vector<SymStage> stages;
        bool ok_combo = true;
        for (std::size_t i = 0; i < spec.classes.size(); ++i) {
            for (int o : choices[i][combo[i]]) {
                const int q = m / o;
                const int bcount = (ce.v / block_size(spec.classes[i].kind)) / q;
                if (bcount * block_size(spec.classes[i].kind) * q != ce.v) {
                    ok_combo = false;
                    break;
                }
                stages.push_back({spec.classes[i].kind, o, q, o * step, bcount});
            }
            if (!ok_combo) break;
        }
        if (!ok_combo) continue;
        // small stages first: cheap failures surface early
        std::stable_sort(stages.begin(), stages.end(),
                         [](const SymStage& a, const SymStage& b) {
                             return a.base_blocks < b.base_blocks;
                         });
        SymEngine engine(ce, m, stages);
        for (int attempt = 0; attempt < attempts_per_combo; ++attempt) {
            outcome.restarts++;
            if (engine.run(splitmix64(seed_state), spec.budget.nodes, outcome.nodes)) {
                std::vector<ResolutionClass> out;
                for (std::size_t s = 0; s < stages.size(); ++s)
                    for (auto& blocks : engine.develop(s))
                        out.push_back({stages[s].kind, Scope::Full, -1, std::move(blocks)});
                outcome.design = assemble(spec, std::move(out));
                return outcome;
            }
        }
    }
    return outcome;
}

// ------------------------------------------------------------------- JSON

namespace {

using nlohmann::ordered_json;

ordered_json context_to_json(const ContextSpec& ctx) {
    ordered_json j;
    switch (ctx.type) {
    case ContextSpec::Type::Complete:
        j["type"] = "complete";
        j["v"] = ctx.v;
        break;
    case ContextSpec::Type::Multipartite:
        j["type"] = "multipartite";
        j["v"] = ctx.v;
        j["groups"] = ctx.groups;
        break;
    case ContextSpec::Type::CycleBlowup:
        j["type"] = "cycle-blowup";
        j["v"] = ctx.v;
        j["positions"] = ctx.cycle_positions;
        j["copies"] = ctx.cycle_copies;
        break;
    }
    return j;
}

} // namespace

std::string spec_to_json(const SearchSpec& spec) {
    ordered_json j;
    j["name"] = spec.name;
    j["context"] = context_to_json(spec.context);
    ordered_json classes = ordered_json::array();
    for (const auto& r : spec.classes) {
        ordered_json jr;
        jr["kind"] = std::string(kind_name(r.kind));
        jr["scope"] = std::string(scope_name(r.scope));
        if (r.scope == Scope::PartialGroup) jr["missing_group"] = r.missing_group;
        jr["count"] = r.count;
        if (r.orbit > 0) jr["orbit"] = r.orbit;
        classes.push_back(std::move(jr));
    }
    j["classes"] = std::move(classes);
    j["symmetry"] = spec.symmetry;
    j["seed"] = spec.seed;
    j["budget"] = {{"nodes", spec.budget.nodes}, {"restarts", spec.budget.restarts}};
    j["result_kind"] = std::string(design_kind_name(spec.result_kind));
    return j.dump(1, ' ') + "\n";
}

SearchSpec spec_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    SearchSpec spec;
    spec.name = j.value("name", std::string());
    const auto& jc = j.at("context");
    const std::string type = jc.value("type", std::string());
    if (type == "complete")
        spec.context.type = ContextSpec::Type::Complete;
    else if (type == "multipartite")
        spec.context.type = ContextSpec::Type::Multipartite;
    else if (type == "cycle-blowup")
        spec.context.type = ContextSpec::Type::CycleBlowup;
    else
        throw std::runtime_error("unknown context type " + type);
    spec.context.v = jc.value("v", 0);
    if (jc.contains("groups"))
        spec.context.groups = jc["groups"].get<std::vector<std::vector<Vertex>>>();
    spec.context.cycle_positions = jc.value("positions", 0);
    spec.context.cycle_copies = jc.value("copies", 0);
    for (const auto& jr : j.at("classes")) {
        ClassRequirement r;
        auto k = kind_from_name(jr.value("kind", std::string()));
        if (!k) throw std::runtime_error("unknown block kind in spec");
        r.kind = *k;
        auto sc = scope_from_name(jr.value("scope", std::string("full")));
        if (!sc) throw std::runtime_error("unknown scope in spec");
        r.scope = *sc;
        r.missing_group = jr.value("missing_group", -1);
        r.count = jr.value("count", 1);
        r.orbit = jr.value("orbit", 0);
        spec.classes.push_back(r);
    }
    spec.symmetry = j.value("symmetry", 0);
    spec.seed = j.value("seed", std::uint64_t{1});
    if (j.contains("budget")) {
        spec.budget.nodes = j["budget"].value("nodes", spec.budget.nodes);
        spec.budget.restarts = j["budget"].value("restarts", spec.budget.restarts);
    }
    auto rk = design_kind_from_name(j.value("result_kind", std::string("ingredient")));
    if (!rk) throw std::runtime_error("unknown result kind in spec");
    spec.result_kind = *rk;
    return spec;
}

std::string spec_key(const SearchSpec& spec) {
    SearchSpec normalized = spec;
    normalized.name.clear();
    normalized.budget = {};
    const std::string body = spec_to_json(normalized);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : body) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

// ------------------------------------------------------------------ cache

namespace fs = std::filesystem;

Cache::Cache(std::string dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

std::string Cache::path_for(const SearchSpec& spec) const {
    return (fs::path(dir_) / (spec_key(spec) + ".json")).string();
}

namespace {

std::optional<Design> load_entry(const fs::path& path, const std::string* want_key,
                                 const std::string* want_name) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (...) {
        return std::nullopt;
    }
    if (want_key && j.value("key", std::string()) != *want_key) return std::nullopt;
    if (want_name && j.value("name", std::string()) != *want_name) return std::nullopt;
    if (!j.contains("certificate")) return std::nullopt;
    Design d;
    try {
        d = certificate::from_json(j["certificate"].dump());
    } catch (...) {
        return std::nullopt;
    }
    if (!verify::verify_design(d).valid()) return std::nullopt; // tampered or corrupt
    return d;
}

} // namespace

std::optional<Design> Cache::get(const SearchSpec& spec) const {
    const std::string key = spec_key(spec);
    return load_entry(path_for(spec), &key, nullptr);
}

std::optional<Design> Cache::get_by_name(const std::string& name) const {
    std::error_code ec;
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(dir_, ec))
        if (entry.path().extension() == ".json") paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths)
        if (auto d = load_entry(p, nullptr, &name)) return d;
    return std::nullopt;
}

void Cache::put(const SearchSpec& spec, const Design& d) const {
    if (!verify::verify_design(d).valid())
        throw std::logic_error("refusing to cache an invalid design");
    ordered_json j;
    j["name"] = spec.name;
    j["key"] = spec_key(spec);
    j["spec"] = ordered_json::parse(spec_to_json(spec));
    j["provenance"] = {{"seed", spec.seed},
                       {"nodes", spec.budget.nodes},
                       {"restarts", spec.budget.restarts}};
    j["certificate"] = ordered_json::parse(certificate::to_json(d));
    std::ofstream out(path_for(spec), std::ios::binary);
    if (!out) throw std::runtime_error("cannot write cache entry " + path_for(spec));
    out << j.dump(1, ' ') << "\n";
}

// --------------------------------------------------------------- registry

namespace {

ContextSpec complete(int v) { return {ContextSpec::Type::Complete, v, {}, 0, 0}; }

ContextSpec multipartite(int groups, int size) {
    ContextSpec ctx;
    ctx.type = ContextSpec::Type::Multipartite;
    ctx.v = groups * size;
    for (int g = 0; g < groups; ++g) {
        std::vector<Vertex> grp;
        for (int i = 0; i < size; ++i) grp.push_back(g * size + i);
        ctx.groups.push_back(std::move(grp));
    }
    return ctx;
}

// groups {i, i+u, i+2u, ...} — the layout used by modular constructions
ContextSpec multipartite_mod(int groups, int size) {
    ContextSpec ctx;
    ctx.type = ContextSpec::Type::Multipartite;
    ctx.v = groups * size;
    for (int g = 0; g < groups; ++g) {
        std::vector<Vertex> grp;
        for (int i = g; i < ctx.v; i += groups) grp.push_back(i);
        ctx.groups.push_back(std::move(grp));
    }
    return ctx;
}

ClassRequirement full(BlockKind k, int count, int orbit = 0) {
    return {k, Scope::Full, -1, count, orbit};
}

SearchSpec make_spec(std::string name, ContextSpec ctx, std::vector<ClassRequirement> classes,
                     DesignKind kind, int symmetry = 0, std::int64_t nodes = 400000,
                     int restarts = 64) {
    SearchSpec spec;
    spec.name = std::move(name);
    spec.context = std::move(ctx);
    spec.classes = std::move(classes);
    spec.symmetry = symmetry;
    spec.result_kind = kind;
    spec.budget = {nodes, restarts};
    return spec;
}

std::vector<SearchSpec> build_registry() {
    using K = BlockKind;
    std::vector<SearchSpec> specs;

    specs.push_back(make_spec("urd6-1-3-0", complete(6),
                              {full(K::P3, 3), full(K::P2, 1)}, DesignKind::Urd));
    specs.push_back(make_spec("urd12-2-0-6", complete(12),
                              {full(K::P4, 6), full(K::P2, 2)}, DesignKind::Urd));
    specs.push_back(make_spec("urd12-0-6-2", complete(12),
                              {full(K::P4, 2), full(K::P3, 6)}, DesignKind::Urd));
    for (int x = 1; x <= 6; ++x) {
        // prescribed Z_5 action (x -> x+4): orbit partitions enumerated
        const std::string name =
            "urd20-" + std::to_string(19 - 3 * x) + "-0-" + std::to_string(2 * x);
        specs.push_back(make_spec(name, complete(20),
                                  {full(K::P4, 2 * x), full(K::P2, 19 - 3 * x)},
                                  DesignKind::Urd, 5, 400000, 128));
    }
    specs.push_back(make_spec("urgdd6x2-3-0-2", multipartite(2, 6),
                              {full(K::P4, 2), full(K::P2, 3)}, DesignKind::Urgdd));
    specs.push_back(make_spec("urgdd6x2-0-0-4", multipartite(2, 6), {full(K::P4, 4)},
                              DesignKind::Urgdd));
    specs.push_back(make_spec("urgdd4x3-0-6-0", multipartite(3, 4), {full(K::P3, 6)},
                              DesignKind::Urgdd));
    specs.push_back(make_spec("urgdd12x2-0-9-0", multipartite_mod(2, 12), {full(K::P3, 9)},
                              DesignKind::Urgdd, 12, 400000, 128));
    specs.push_back(make_spec("urgdd12x3-0-9-8", multipartite_mod(3, 12),
                              {full(K::P4, 2, 4), full(K::P3, 3, 3)}, DesignKind::Urgdd, 12,
                              400000, 64));
    specs.push_back(make_spec("rgdd-3x5", multipartite_mod(5, 3), {full(K::K3, 6)},
                              DesignKind::Ingredient));
    for (int u : {4, 6, 8, 10, 12}) { // even u up to the u <= 12 (v <= 300) budget
        ContextSpec ctx;
        ctx.type = ContextSpec::Type::Multipartite;
        ctx.v = 2 * u;
        for (int i = 0; i < u; ++i) ctx.groups.push_back({i, i + u});
        std::vector<ClassRequirement> classes;
        for (int i = 0; i < u; ++i)
            classes.push_back({K::P2, Scope::PartialGroup, i, 2, 0});
        specs.push_back(make_spec("two-frame-2x" + std::to_string(u), std::move(ctx),
                                  std::move(classes), DesignKind::Frame));
    }
    specs.push_back(make_spec("urd60-0-33-10", complete(60),
                              {full(K::P4, 2, 5), full(K::P3, 1, 3), full(K::P3, 2, 15)},
                              DesignKind::Urd, 15, 3000000, 256));
    return specs;
}

} // namespace

const std::vector<SearchSpec>& cited_specs() {
    static const std::vector<SearchSpec> specs = build_registry();
    return specs;
}

const SearchSpec* find_spec(const std::string& name) {
    for (const auto& spec : cited_specs())
        if (spec.name == name) return &spec;
    return nullptr;
}

} // namespace urd::search
