#ifndef URD_SPECTRUM_HPP
#define URD_SPECTRUM_HPP

#include <string>

#include <urd/profile.hpp>

namespace urd::spectrum {

/// Largest admissible y in D_u(v) = {(v-1-4u-3y, 3u, 2y)}: the value is
/// (v-3)/3 - 4u/3, (v-6)/3 - 4(u-1)/3 or (v-9)/3 - 4(u-2)/3 for
/// u = 0, 1, 2 (mod 3).  May be negative, which signals an empty D_u.
int r_max(int v, int u);

/// GDD analogue: bound on y in dbar_j of type (12k)^m with K = k(m-1):
/// 4K - 4u/3, 4K - 2 - 4(u-1)/3 or 4K - 3 - 4(u-2)/3 by residue of u.
int rbar_max(int K, int u);

/// D_i(v) = {(v-1-4i-3y, 3i, 2y) : 0 <= y <= r_max(v,i)}; empty when the
/// bound is negative.  Requires v = 0 (mod 12).
TripleSet d_i(int v, int i);

/// D(v): union of D_i(v) over i = 0 .. (v-4)/4.  Requires v = 0 (mod 12).
TripleSet d_of(int v);

/// dbar_j((12k)^m) = {(12k(m-1)-4j-3y, 3j, 2y) : 0 <= y <= rbar_max(k(m-1), j)}.
TripleSet dbar_j(int k, int m, int j);

/// dbar((12k)^m): union of dbar_j over j = 0 .. 3k(m-1).
TripleSet dbar(int k, int m);

/// Elementwise set sums: X + Y = { x + y : x in X, y in Y }.
TripleSet add(const TripleSet& x, const TripleSet& y);

/// h * X: all sums of h elements of X with repetition, by iterated sums.
TripleSet repeat(int h, const TripleSet& x);

struct Necessity {
    bool ok;
    std::string reason;
};

/// Necessary-condition check for a URD(v; r,s,t): membership in D(v) for
/// v = 0 (mod 12), plus the prior-work residue spectra for the degenerate
/// shapes (s = 0, t = 0, or both).
Necessity necessary_ok(int v, const Profile& p);

/// Independent Diophantine oracle: all nonnegative (r,s,t) with
/// 6r + 8s + 9t = 6(v-1), s = 0 (mod 3) and t = 0 (mod 2).  Test-side
/// cross-check for d_of.
TripleSet oracle_enumerate(int v);

/// The nine hard-coded profile sets I_1..I_9 used by the v = 60 dispatch;
/// index is 1-based.
TripleSet i_set(int idx);

} // namespace urd::spectrum

#endif
