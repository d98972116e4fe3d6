#pragma once

#include <vector>

#include "alcove/types.hpp"

namespace alcove {

using RhoShift = std::vector<long long>;

// Affine hyperplane E(alpha, level*e) for the root alpha = eps_a - eps_b.
// Coordinate indices are 0-based internally; serialization is 1-based.
// At e = inf only level 0 is admitted.
struct Hyperplane {
    int a = 0;
    int b = 1;
    long long level = 0;

    friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

enum class Side { OriginSide, On, FarSide };

// Shift vector with entry e - kappa_m - (c-1) (finite e) or -kappa_m - (c-1)
// (e = inf) at coordinate h(m-1) + (c-1).  Verifies origin e-regularity for
// finite e and throws IrregularOrigin on failure.
RhoShift rho(const Params& p);

// Same vector without the regularity guard; used by the wall-adjusted
// machinery where the origin legitimately sits on hyperplanes.
RhoShift rho_unchecked(const Params& p);

// <x + rho, eps_a - eps_b>.
long long pairing(const Weight& x, int a, int b, const RhoShift& shift);

// All hyperplanes through x (a < b; every integer level for finite e, level 0
// for e = inf).
std::vector<Hyperplane> walls_through(const Weight& x, const RhoShift& shift, const Params& p);

bool on_hyperplane(const Weight& x, const Hyperplane& hp, const RhoShift& shift, const Params& p);

// Classifies x against hp relative to the origin.  Throws DegenerateHyperplane
// when the origin itself lies on hp.
Side side_of(const Weight& x, const Hyperplane& hp, const RhoShift& shift, const Params& p);

// rho-shifted affine reflection of x across hp (involution; fixes x iff x is
// on hp; preserves the coordinate sum).
Weight reflect_point(const Weight& x, const Hyperplane& hp, const RhoShift& shift, const Params& p);

// Number of hyperplanes strictly between x and the origin, summed over
// unordered roots.
long long length(const Weight& x, const RhoShift& shift, const Params& p);

bool is_e_regular(const Weight& x, const RhoShift& shift, const Params& p);

// Dominance: coordinates weakly decrease within every h-block.
bool is_dominant(const Weight& x, const Params& p);

}  // namespace alcove
