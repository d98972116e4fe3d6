#pragma once

#include <map>
#include <set>
#include <vector>

#include "alcove/core.hpp"
#include "alcove/geometry.hpp"
#include "alcove/types.hpp"

namespace alcove {

// Prefix points s(0) = origin, ..., s(n) of a step sequence.
std::vector<Weight> path_points(const Path& steps, const Params& p);
Weight path_endpoint(const Path& steps, const Params& p);

// The distinguished path t^mu built from the component word of mu; its
// endpoint is to_weight(mu).
Path distinguished_path(const Multipartition& mu, const Params& p);

// Per-step wall-crossing degree contributions: +1 when stepping off a
// hyperplane towards the origin side, -1 when stepping onto one from the
// far side.
std::vector<int> step_degrees(const Path& steps, const RhoShift& shift, const Params& p);

// Total degree over all steps.
long long path_degree(const Path& steps, const Params& p);

// Total degree over the steps outside `excluded` (1-based step indices).
long long path_degree_adjusted(const Path& steps, const std::set<int>& excluded, const Params& p);

// Every prefix point stays in the closure of the dominant chamber
// (coordinates weakly decrease within each h-block).
bool path_is_dominant(const Path& steps, const Params& p);

// Reflection of the path at prefix point k (0..n) across hp: steps 1..k are
// kept, later steps have their coordinates a and b exchanged.  Throws
// NotOnHyperplane when s(k) is not on hp.
Path reflect_path(const Path& steps, int k, const Hyperplane& hp, const Params& p);

// Reflection-equivalence closure of t^mu.  `sigma` is empty in the plain
// (finite-e) orbit; in the Sigma-avoiding orbit it holds the excluded step
// indices and reflections are only applied at prefix points outside it.
struct PathOrbit {
    Multipartition mu;
    Path base;
    std::vector<Path> members;             // sorted closure, t^mu included
    std::map<Weight, std::vector<Path>> by_endpoint;
    std::set<int> sigma;
    bool adjusted = false;

    // Degree of a member: Sigma-adjusted in an adjusted orbit, raw otherwise.
    long long degree_of(const Path& steps, const Params& p) const;
};

// Full-wall orbit (finite e only; throws WrongRegime at e = inf).
PathOrbit path_orbit(const Multipartition& mu, const Params& p);

// Members ending at to_weight(lam), i.e. Path_n(lambda, t^mu).
std::vector<Path> paths_to(const PathOrbit& orbit, const Multipartition& lam, const Params& p);

// Path+_n(lambda, t^mu): members ending at to_weight(lam) that never leave
// the dominant chamber closure.
std::vector<Path> dominant_paths(const PathOrbit& orbit, const Multipartition& lam, const Params& p);
std::vector<Path> dominant_paths(const Multipartition& lam, const Multipartition& mu, const Params& p);

struct MaximalPath {
    Path path;
    long long degree = 0;
    bool dominant = false;
};

// The unique member of Path_n(lambda, t^mu) of degree length(mu)-length(lambda).
// Throws NotLinked when no member reaches lambda, MultipleMaxima when
// uniqueness fails.
MaximalPath maximal_path(const PathOrbit& orbit, const Weight& target, const Params& p);
MaximalPath maximal_path(const Multipartition& lam, const Multipartition& mu, const Params& p);

// lambda is strongly linked below mu: Path_n(lambda, t^mu) nonempty.
bool strongly_linked_up(const Multipartition& lam, const Multipartition& mu, const Params& p);

// Steps of t^mu with nonzero degree contribution.  Requires e = inf or
// finite e > n; throws WrongRegime otherwise.
std::set<int> sigma_set(const Multipartition& mu, const Params& p);

// Sigma-avoiding orbit of t^mu (same regime guard as sigma_set).
PathOrbit sigma_avoiding_orbit(const Multipartition& mu, const Params& p);

// Path^inf_n(lambda, mu): dominant members of the Sigma-avoiding orbit ending
// at to_weight(lambda).
std::vector<Path> paths_infty(const Multipartition& lam, const Multipartition& mu, const Params& p);

// Degree summed over steps outside Sigma(mu).
long long path_degree_infty(const Path& steps, const Multipartition& mu, const Params& p);

}  // namespace alcove
