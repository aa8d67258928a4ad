#pragma once

#include "csgamma/cone.hpp"
#include "csgamma/rng.hpp"
#include "csgamma/subspace.hpp"

namespace csgamma {

/// Random unit member: a uniformly chosen part, uniform [0,1] coefficients
/// over its unit generators, normalized.  Throws std::runtime_error if 100
/// consecutive draws collapse to zero.
Vector sample_unit_in_cone(const UnionCone& c, Rng& rng);

/// Random unit vector of the subspace, uniform on its unit sphere (standard
/// normal coefficients over the orthonormal basis, normalized).
Vector sample_unit_in_subspace(const Subspace& s, Rng& rng);

/// max |(v, w)| over `samples` random unit pairs.  Monotone nondecreasing in
/// the sample count for a fixed stream prefix.
double brute_force_gamma(const UnionCone& c1, const UnionCone& c2, long samples,
                         Rng& rng);

/// max |(v, w)| over `samples` pairs (v, w(v)): v random in the first
/// subspace, w its normalized projection onto the second, which is the exact
/// best response.  Still a feasible-pair lower bound on gamma.
double brute_force_gamma_subspaces(const Subspace& s1, const Subspace& s2,
                                   long samples, Rng& rng);

/// Exhaustive angular grid for two-dimensional cones: equispaced directions
/// across each part's angular sector (boundary rays included), max |(v, w)|
/// over the member rays.  Error is O(1/resolution); exact for unions of
/// single rays.  Requires dim == 2 and resolution >= 8.
double grid_gamma_2d(const UnionCone& c1, const UnionCone& c2, int resolution);

}  // namespace csgamma
