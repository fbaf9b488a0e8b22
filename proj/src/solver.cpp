#include <urd/solver.hpp>

#include <urd/atlas.hpp>
#include <urd/compose.hpp>
#include <urd/ingredients.hpp>
#include <urd/spectrum.hpp>
#include <urd/verify.hpp>

#include <algorithm>

namespace urd::solver {

namespace {

namespace sp = urd::spectrum;

const TripleSet& q_set() { // type 6^2 URGDD profiles
    static const TripleSet q = {{6, 0, 0}, {3, 0, 2}, {0, 0, 4}, {2, 3, 0}};
    return q;
}

const TripleSet& a_set() { // type 4^3 URGDD profiles
    static const TripleSet a = {{0, 6, 0}, {4, 3, 0}, {1, 3, 2}};
    return a;
}

const TripleSet& fill12_set() { // URD(6) profiles used to fill 6^2
    static const TripleSet f = {{5, 0, 0}, {1, 3, 0}};
    return f;
}

const TripleSet& zero_set() {
    static const TripleSet z = {{0, 0, 0}};
    return z;
}

thread_local std::string t_route = "";

compose::ProfileAssignment select_or_throw(const Profile& target, const TripleSet& base,
                                           const TripleSet& parts, int h, const char* where) {
    auto asg = compose::select_profiles(target, base, parts, h);
    if (!asg)
        throw SpectrumError(std::string(where) + ": profile " + target.str() +
                            " is outside the construction's profile sums");
    return *asg;
}

} // namespace

Builder::Builder(search::Cache cache) : cache_(std::move(cache)) {}

const std::string& Builder::last_route() { return t_route; }

const Design& Builder::named(const std::string& name) {
    // regeneration runs under the lock: the cache is single-writer
    std::lock_guard lock(mu_);
    auto it = named_.find(name);
    if (it != named_.end()) return it->second;
    std::optional<Design> got = cache_.get_by_name(name);
    if (!got) {
        const search::SearchSpec* spec = search::find_spec(name);
        if (!spec) throw std::logic_error("no registry spec for ingredient " + name);
        auto outcome = search::solve(*spec);
        if (!outcome.design) throw BudgetError("search budget exhausted regenerating " + name);
        cache_.put(*spec, *outcome.design);
        got = std::move(outcome.design);
    }
    return named_.emplace(name, std::move(*got)).first->second;
}

const Design& Builder::memoized_gdd(GddType type, const Profile& p) {
    const auto key = std::make_pair((int)type, p);
    {
        std::lock_guard lock(mu_);
        auto it = memo_gdd_.find(key);
        if (it != memo_gdd_.end()) return it->second;
    }
    Design d = build_gdd(type, p);
    std::lock_guard lock(mu_);
    return memo_gdd_.emplace(key, std::move(d)).first->second;
}

const Design& Builder::build_urgdd(GddType type, const Profile& target) {
    return memoized_gdd(type, target);
}

Design Builder::build_gdd(GddType type, const Profile& p) {
    switch (type) {
    case GddType::G6x2:
        if (p == Profile{6, 0, 0}) return ingredients::bipartite_one_factorization(6);
        if (p == Profile{2, 3, 0}) return atlas::get("urgdd-6x2-(2,3,0)").design;
        if (p == Profile{3, 0, 2}) return named("urgdd6x2-3-0-2");
        if (p == Profile{0, 0, 4}) return named("urgdd6x2-0-0-4");
        throw SpectrumError("no type 6^2 URGDD with profile " + p.str());
    case GddType::G4x3:
        if (p == Profile{0, 6, 0}) return named("urgdd4x3-0-6-0");
        if (p == Profile{4, 3, 0}) return atlas::get("urgdd-4x3-(4,3,0)").design;
        if (p == Profile{1, 3, 2}) return atlas::get("urgdd-4x3-(1,3,2)").design;
        throw SpectrumError("no type 4^3 URGDD with profile " + p.str());
    case GddType::G12x2:
        if (p == Profile{0, 9, 0}) return named("urgdd12x2-0-9-0");
        if (p == Profile{1, 6, 2}) return atlas::get("urgdd-12x2-(1,6,2)").design;
        if (sp::dbar(1, 2).count(p)) return build_urgdd12x2(p);
        throw SpectrumError("profile " + p.str() + " is not in the type 12^2 spectrum");
    case GddType::G12x3:
        if (p == Profile{0, 9, 8}) return named("urgdd12x3-0-9-8");
        if (p == Profile{1, 6, 10}) return atlas::get("urgdd-12x3-(1,6,10)").design;
        if (sp::dbar(1, 3).count(p)) return build_urgdd12x3(p);
        throw SpectrumError("profile " + p.str() + " is not in the type 12^3 spectrum");
    case GddType::G12x5: return build_urgdd12x5(p);
    case GddType::G20x3: return build_urgdd20x3(p);
    }
    throw std::logic_error("unknown gdd type");
}

Design Builder::build_urgdd12x2(const Profile& p) {
    auto asg = select_or_throw(p, zero_set(), q_set(), 2, "type 12^2 URGDD");
    return compose::expand_rgdd(ingredients::rgdd(2, 2, 2), 6, asg.parts,
                                [&](const Profile& q) -> const Design& {
                                    return build_urgdd(GddType::G6x2, q);
                                });
}

Design Builder::build_urgdd12x3(const Profile& p) {
    static const TripleSet rtd_cases = {{4, 15, 0}, {0, 18, 0}, {5, 12, 2},
                                        {1, 15, 2}, {2, 12, 4}, {3, 9, 6}};
    if (rtd_cases.count(p)) {
        auto asg = select_or_throw(p, zero_set(), a_set(), 3, "type 12^3 URGDD (3-RGDD route)");
        return compose::expand_rgdd(ingredients::rgdd(3, 3, 3), 4, asg.parts,
                                    [&](const Profile& q) -> const Design& {
                                        return build_urgdd(GddType::G4x3, q);
                                    });
    }
    auto asg = select_or_throw(p, zero_set(), q_set(), 4, "type 12^3 URGDD (2-RGDD route)");
    return compose::expand_rgdd(ingredients::rgdd(2, 2, 3), 6, asg.parts,
                                [&](const Profile& q) -> const Design& {
                                    return build_urgdd(GddType::G6x2, q);
                                });
}

Design Builder::build_urgdd12x5(const Profile& p) {
    // Routes through a blown (P2,C5)-URGDD of type 2^5 (profiles (8,0),
    // (6,1), (4,2); each C5 class blows into nine P3 classes of C_5(6)),
    // falling back to a 3-RGDD of type 3^5 expanded 4 times.
    struct Route {
        int matchings;
        int cycles;
    };
    for (const Route route : {Route{8, 0}, Route{6, 1}, Route{4, 2}}) {
        const Profile c5_part{0, 9 * route.cycles, 0};
        auto asg = compose::select_profiles(p, TripleSet{c5_part}, q_set(), route.matchings);
        if (!asg) continue;
        Design base;
        if (route.cycles == 0)
            base = ingredients::p2c5_8_0();
        else if (route.cycles == 1)
            base = atlas::get("p2c5-2x5-(6,1)").design;
        else
            base = atlas::get("p2c5-2x5-(4,2)").design;
        int next_matching = 0;
        std::vector<const Design*> subs;
        for (const auto& c : base.classes)
            subs.push_back(c.kind == BlockKind::P2
                               ? &build_urgdd(GddType::G6x2, asg->parts[next_matching++])
                               : &atlas::get("c5x6-p3-factorization").design);
        Design blown = blow_up(base, 6, [&](int ci) -> const Design& { return *subs[ci]; });
        blown.kind = DesignKind::Urgdd;
        canonicalize(blown);
        auto report = verify::verify_design(blown);
        if (!report.valid())
            throw compose::CompositionError("type 12^5 blow-up failed:\n" + report.summary());
        return blown;
    }
    auto asg = select_or_throw(p, zero_set(), a_set(), 6, "type 12^5 URGDD (3-RGDD route)");
    return compose::expand_rgdd(
        ingredients::rgdd(3, 3, 5,
                          [&](const std::string& n) { return std::optional<Design>(named(n)); }),
        4, asg.parts,
        [&](const Profile& q) -> const Design& { return build_urgdd(GddType::G4x3, q); });
}

Design Builder::build_urgdd20x3(const Profile& p) {
    auto asg = select_or_throw(p, zero_set(), a_set(), 5, "type 20^3 URGDD");
    return compose::expand_rgdd(ingredients::rgdd(3, 5, 3), 4, asg.parts,
                                [&](const Profile& q) -> const Design& {
                                    return build_urgdd(GddType::G4x3, q);
                                });
}

Design Builder::build_iurd(const Profile& full, const Profile& partial) {
    return compose::build_iurd_36_12(
        full, partial,
        [&](const Profile& f) -> const Design& { return build_urgdd(GddType::G12x3, f); },
        [&](const Profile& f) -> const Design& { return urd12(f); });
}

const Design& Builder::urd12(const Profile& p) {
    {
        std::lock_guard lock(mu_);
        auto it = memo_urd12_.find(p);
        if (it != memo_urd12_.end()) return it->second;
    }
    Design d;
    if (p == Profile{2, 0, 6})
        d = named("urd12-2-0-6");
    else if (p == Profile{0, 6, 2})
        d = named("urd12-0-6-2");
    else {
        auto asg = select_or_throw(p, fill12_set(), q_set(), 1, "URD(12)");
        d = compose::fill_groups(build_urgdd(GddType::G6x2, asg.parts[0]), asg.base,
                                 [&](const Profile& f) -> const Design& {
                                     if (f == Profile{5, 0, 0}) {
                                         static const Design k6 =
                                             ingredients::one_factorization(6);
                                         return k6;
                                     }
                                     return named("urd6-1-3-0");
                                 });
    }
    std::lock_guard lock(mu_);
    return memo_urd12_.emplace(p, std::move(d)).first->second;
}

Design Builder::build_urd20(const Profile& target) {
    if (target.s != 0 || target.t % 2 != 0 || target.t < 0 || target.t > 12 ||
        target.r != 19 - 3 * (target.t / 2))
        throw SpectrumError("profile " + target.str() + " is not in the URD(20) spectrum");
    if (target.t == 0) return ingredients::one_factorization(20);
    return named("urd20-" + std::to_string(target.r) + "-0-" + std::to_string(target.t));
}

const Design& Builder::urd20(const Profile& p) {
    {
        std::lock_guard lock(mu_);
        auto it = memo_urd20_.find(p);
        if (it != memo_urd20_.end()) return it->second;
    }
    Design d = build_urd20(p);
    std::lock_guard lock(mu_);
    return memo_urd20_.emplace(p, std::move(d)).first->second;
}

Design Builder::dispatch60(const Profile& target) {
    if (target == Profile{0, 33, 10}) {
        t_route = "urd60-search";
        return named("urd60-0-33-10");
    }
    t_route = "urd60-iset";
    const int j = target.s / 3;
    if (j == 10) { // type 20^3 URGDD filled with URD(20)s
        const Profile rest{target.r, 0, target.t};
        return compose::fill_groups(build_urgdd(GddType::G20x3, {0, 30, 0}), rest,
                                    [&](const Profile& f) -> const Design& { return urd20(f); });
    }
    struct Row {
        int iset;
        int di;
    };
    std::vector<Row> rows;
    if (j <= 2)
        rows = {{1, j}};
    else if (j == 3)
        rows = {{2, 2}};
    else if (j == 4)
        rows = {{3, 1}};
    else if (j == 5)
        rows = {{3, 2}};
    else if (j <= 8)
        rows = {{5, j - 6}};
    else if (j == 9)
        rows = {{6, 2}};
    else if (j == 11)
        rows = {{8, 0}};
    else if (j <= 14)
        rows = {{7, j - 12}};
    else
        throw SpectrumError("profile " + target.str() + " is outside D(60)");
    for (const Row row : rows) {
        for (const Profile& b : sp::d_i(12, row.di)) {
            const Profile a{target.r - b.r, target.s - b.s, target.t - b.t};
            if (a.r < 0 || a.s < 0 || a.t < 0) continue;
            if (!sp::i_set(row.iset).count(a)) continue;
            return compose::fill_groups(
                build_urgdd(GddType::G12x5, a), b,
                [&](const Profile& f) -> const Design& { return urd12(f); });
        }
    }
    throw SpectrumError("no v=60 dispatch row covers " + target.str());
}

Design Builder::build_urd(int v, const Profile& target) {
    auto necessity = sp::necessary_ok(v, target);
    if (!necessity.ok) throw SpectrumError(necessity.reason);
    if (v % 12 != 0) {
        if (target.s == 0 && target.t == 0) {
            t_route = "one-factorization";
            return ingredients::one_factorization(v);
        }
        throw SpectrumError("s > 0 or t > 0 requires v divisible by 12");
    }

    const TripleSet d12 = sp::d_of(12);
    if (v == 12) {
        t_route = "urd12";
        return urd12(target);
    }
    if (v == 36) {
        t_route = "urd36-expand";
        auto asg = select_or_throw(target, d12, sp::dbar(1, 3), 1, "URD(36)");
        return compose::expand_rgdd(
            ingredients::rgdd(3, 1, 3), 12, asg.parts,
            [&](const Profile& p) -> const Design& { return build_urgdd(GddType::G12x3, p); },
            asg.base, [&](const Profile& p) -> const Design& { return urd12(p); });
    }
    if (v == 60) return dispatch60(target);
    if (v % 24 == 0) {
        t_route = "urd24k-expand";
        const int u = v / 12;
        auto asg = select_or_throw(target, d12, sp::dbar(1, 2), u - 1, "URD(v), v = 0 mod 24");
        return compose::expand_rgdd(
            ingredients::rgdd(2, 1, u), 12, asg.parts,
            [&](const Profile& p) -> const Design& { return build_urgdd(GddType::G12x2, p); },
            asg.base, [&](const Profile& p) -> const Design& { return urd12(p); });
    }
    // v = 12 (mod 24), v >= 84: frame route
    t_route = "frame";
    const int u = (v - 12) / 24;
    auto asg = select_or_throw(target, d12, sp::dbar(1, 3), u, "URD(v), v = 12 mod 24");
    std::vector<std::array<Profile, 2>> pair_profiles;
    for (const Profile& part : asg.parts) {
        auto split = select_or_throw(part, sp::dbar(1, 2), sp::dbar(1, 2), 1, "frame part split");
        pair_profiles.push_back({split.base, split.parts[0]});
    }
    Design frame = ingredients::two_frame(
        u, [&](const std::string& n) { return std::optional<Design>(named(n)); });
    return compose::frame_compose(
        frame, 12, pair_profiles,
        [&](const Profile& p) -> const Design& { return build_urgdd(GddType::G12x2, p); },
        [&](const Profile& full, const Profile& partial) { return build_iurd(full, partial); },
        asg.base, [&](const Profile& p) -> const Design& { return urd12(p); });
}

} // namespace urd::solver
