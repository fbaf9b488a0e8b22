#ifndef URD_INGREDIENTS_HPP
#define URD_INGREDIENTS_HPP

#include <functional>
#include <optional>
#include <string>

#include <urd/model.hpp>

namespace urd::ingredients {

/// Resolver for the ingredient signatures that are backed by the search
/// cache rather than an algebraic construction.  Receives a registry
/// instance name (e.g. "rgdd-3x5") and returns the cached design.
using CacheFetch = std::function<std::optional<Design>(const std::string&)>;

/// Circle-method 1-factorization of K_n: n-1 perfect matchings.
/// Throws std::domain_error for odd n.
Design one_factorization(int n);

/// Near-1-factorization of K_u (u odd), as a 2-frame of type 1^u:
/// class i = {{i+k, i-k mod u}} misses exactly point i.
Design near_one_factorization(int u);

/// The n matchings of K_{n,n}; matching d pairs left j with right (j+d) mod n.
Design bipartite_one_factorization(int n);

/// The k-RGDDs of type g^u the recursions consume.  Supported signatures:
/// (2,1,even u), (2,2,2), (2,2,3), (3,1,3), (3,3,3), (3,5,3) algebraically,
/// and (3,3,5) through the search cache.  Anything else is a domain error.
Design rgdd(int k, int g, int u, const CacheFetch& fetch = nullptr);

/// 2-frame of type 2^u on Z_2u with groups {i, i+u}.  Odd u is built from
/// modular sum classes; even u comes from the search cache.
Design two_frame(int u, const CacheFetch& fetch = nullptr);

/// (P2,C5)-URGDD(8,0) of type 2^5: the eight perfect matchings of K_{5x2},
/// assembled from near-1-factors of the two parity K_5's plus connector and
/// difference-3 matchings.
Design p2c5_8_0();

} // namespace urd::ingredients

#endif
