#include <urd/spectrum.hpp>

#include <stdexcept>

namespace urd::spectrum {

int r_max(int v, int u) {
    if (v % 12 != 0) throw std::domain_error("r_max requires v = 0 (mod 12)");
    switch (u % 3) {
    case 0: return (v - 3) / 3 - (4 * u) / 3;
    case 1: return (v - 6) / 3 - (4 * (u - 1)) / 3;
    default: return (v - 9) / 3 - (4 * (u - 2)) / 3;
    }
}

int rbar_max(int K, int u) {
    switch (u % 3) {
    case 0: return 4 * K - (4 * u) / 3;
    case 1: return 4 * K - 2 - (4 * (u - 1)) / 3;
    default: return 4 * K - 3 - (4 * (u - 2)) / 3;
    }
}

TripleSet d_i(int v, int i) {
    TripleSet out;
    const int bound = r_max(v, i);
    for (int y = 0; y <= bound; ++y) out.insert({v - 1 - 4 * i - 3 * y, 3 * i, 2 * y});
    return out;
}

TripleSet d_of(int v) {
    if (v % 12 != 0 || v <= 0) throw std::domain_error("D(v) requires v = 0 (mod 12)");
    TripleSet out;
    for (int i = 0; i <= (v - 4) / 4; ++i) out.merge(d_i(v, i));
    return out;
}

TripleSet dbar_j(int k, int m, int j) {
    TripleSet out;
    const int K = k * (m - 1);
    const int bound = rbar_max(K, j);
    for (int y = 0; y <= bound; ++y) out.insert({12 * K - 4 * j - 3 * y, 3 * j, 2 * y});
    return out;
}

TripleSet dbar(int k, int m) {
    if (k < 1 || m < 2) throw std::domain_error("dbar requires k >= 1, m >= 2");
    TripleSet out;
    for (int j = 0; j <= 3 * k * (m - 1); ++j) out.merge(dbar_j(k, m, j));
    return out;
}

TripleSet add(const TripleSet& x, const TripleSet& y) {
    TripleSet out;
    for (const auto& a : x)
        for (const auto& b : y) out.insert(a + b);
    return out;
}

TripleSet repeat(int h, const TripleSet& x) {
    if (h < 1) throw std::domain_error("repeat requires h >= 1");
    TripleSet out = x;
    for (int i = 1; i < h; ++i) out = add(out, x);
    return out;
}

Necessity necessary_ok(int v, const Profile& p) {
    if (v < 2) return {false, "v must be at least 2"};
    if (p.r < 0 || p.s < 0 || p.t < 0) return {false, "class counts must be nonnegative"};
    if (p.s == 0 && p.t == 0) {
        if (v % 2 != 0) return {false, "1-factorization requires v even"};
        if (p.r != v - 1) return {false, "1-factorization requires r = v-1"};
        return {true, "pure 1-factorization"};
    }
    if (p.t == 0) { // (P2,P3) spectrum: v = 0 (mod 6), r = v-1-4x, s = 3x
        if (v % 6 != 0) return {false, "s > 0 requires v = 0 (mod 6)"};
        if (p.s % 3 != 0) return {false, "s must be divisible by 3"};
        const int x = p.s / 3;
        const int xmax = (v % 12 == 0) ? (v - 4) / 4 : (v - 2) / 4;
        if (x > xmax || p.r != v - 1 - 4 * x)
            return {false, "(r,s,0) outside the (P2,P3) spectrum"};
        return {true, "(P2,P3) spectrum member"};
    }
    if (p.s == 0) { // (P2,P4) spectrum: v = 0 (mod 4), r = v-1-3x, t = 2x
        if (v % 4 != 0) return {false, "t > 0 requires v = 0 (mod 4)"};
        if (p.t % 2 != 0) return {false, "t must be even"};
        const int x = p.t / 2;
        int xmax;
        if (v % 12 == 0)
            xmax = (v - 3) / 3;
        else if (v % 12 == 4)
            xmax = (v - 1) / 3;
        else
            xmax = (v - 2) / 3;
        if (x > xmax || p.r != v - 1 - 3 * x)
            return {false, "(r,0,t) outside the (P2,P4) spectrum"};
        return {true, "(P2,P4) spectrum member"};
    }
    // s > 0 and t > 0: resolvability forces 12 | v and membership in D(v).
    if (v % 12 != 0) return {false, "s > 0 and t > 0 require v = 0 (mod 12)"};
    if (p.s % 3 != 0) return {false, "s must be divisible by 3"};
    if (p.t % 2 != 0) return {false, "t must be even"};
    if (6 * p.r + 8 * p.s + 9 * p.t != 6 * (v - 1))
        return {false, "6r + 8s + 9t must equal 6(v-1)"};
    if (!d_of(v).count(p)) return {false, "profile not in D(v)"};
    return {true, "member of D(v)"};
}

TripleSet oracle_enumerate(int v) {
    if (v % 12 != 0 || v <= 0) throw std::domain_error("oracle requires v = 0 (mod 12)");
    TripleSet out;
    const int total = 6 * (v - 1);
    for (int s = 0; 8 * s <= total; s += 3) {
        for (int t = 0; 8 * s + 9 * t <= total; t += 2) {
            const int rest = total - 8 * s - 9 * t;
            if (rest % 6 == 0) out.insert({rest / 6, s, t});
        }
    }
    return out;
}

TripleSet i_set(int idx) {
    auto range = [](int rbase, int s, int xmax) {
        TripleSet out;
        for (int x = 0; x <= xmax; ++x) out.insert({rbase - 3 * x, s, 2 * x});
        return out;
    };
    switch (idx) {
    case 1: return range(48, 0, 16);
    case 2: return range(44, 3, 14);
    case 3: return range(36, 9, 12);
    case 4: return range(32, 12, 10);
    case 5: return range(24, 18, 8);
    case 6: return range(20, 21, 6);
    case 7: return {{0, 36, 0}};
    case 8: return {{4, 33, 0}, {1, 33, 2}};
    case 9: return {{0, 30, 0}};
    default: throw std::domain_error("i_set index must be 1..9");
    }
}

} // namespace urd::spectrum
