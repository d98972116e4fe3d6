#include "alcove/paths.hpp"

#include <algorithm>

#include "alcove/tableaux.hpp"

namespace alcove {

std::vector<Weight> path_points(const Path& steps, const Params& p) {
    std::vector<Weight> pts;
    pts.reserve(steps.size() + 1);
    Weight cur(static_cast<size_t>(p.rank()), 0);
    pts.push_back(cur);
    for (int s : steps) {
        cur[s] += 1;
        pts.push_back(cur);
    }
    return pts;
}

Weight path_endpoint(const Path& steps, const Params& p) {
    Weight cur(static_cast<size_t>(p.rank()), 0);
    for (int s : steps) cur[s] += 1;
    return cur;
}

Path distinguished_path(const Multipartition& mu, const Params& p) {
    Path steps;
    for (const auto& x : component_word(mu, p))
        steps.push_back(p.h * (x.comp - 1) + (x.col - 1));
    return steps;
}

std::vector<int> step_degrees(const Path& steps, const RhoShift& shift, const Params& p) {
    auto pts = path_points(steps, p);
    std::vector<int> out;
    out.reserve(steps.size());
    int hl = p.rank();
    for (size_t k = 1; k < pts.size(); ++k) {
        const Weight& prev = pts[k - 1];
        const Weight& cur = pts[k];
        int d = 0;
        for (int a = 0; a < hl; ++a)
            for (int b = a + 1; b < hl; ++b) {
                long long dp = pairing(prev, a, b, shift);
                long long dc = pairing(cur, a, b, shift);
                long long d0 = shift[a] - shift[b];
                bool on_prev = p.finite() ? dp % p.e == 0 : dp == 0;
                bool on_cur = p.finite() ? dc % p.e == 0 : dc == 0;
                if (on_prev) {
                    // Stepping off the hyperplane through the previous point:
                    // +1 when the step moves towards the origin side.
                    long long re = dp;
                    if (dc != re && (dc - re) * (d0 - re) > 0) ++d;
                } else if (on_cur) {
                    // Stepping onto a hyperplane from the far side.
                    long long re = dc;
                    if ((dp - re) * (d0 - re) < 0) --d;
                }
            }
        out.push_back(d);
    }
    return out;
}

long long path_degree(const Path& steps, const Params& p) {
    auto shift = rho_unchecked(p);
    long long total = 0;
    for (int d : step_degrees(steps, shift, p)) total += d;
    return total;
}

long long path_degree_adjusted(const Path& steps, const std::set<int>& excluded, const Params& p) {
    auto shift = rho_unchecked(p);
    auto degs = step_degrees(steps, shift, p);
    long long total = 0;
    for (size_t i = 0; i < degs.size(); ++i)
        if (!excluded.count(static_cast<int>(i) + 1)) total += degs[i];
    return total;
}

bool path_is_dominant(const Path& steps, const Params& p) {
    Weight cur(static_cast<size_t>(p.rank()), 0);
    for (int s : steps) {
        cur[s] += 1;
        if (!is_dominant(cur, p)) return false;
    }
    return true;
}

Path reflect_path(const Path& steps, int k, const Hyperplane& hp, const Params& p) {
    if (k < 0 || k > static_cast<int>(steps.size()))
        throw NotOnHyperplane("prefix point index out of range");
    auto shift = rho_unchecked(p);
    Weight pt(static_cast<size_t>(p.rank()), 0);
    for (int i = 0; i < k; ++i) pt[steps[i]] += 1;
    if (!on_hyperplane(pt, hp, shift, p))
        throw NotOnHyperplane("path point is not on the hyperplane");
    Path out = steps;
    for (size_t i = static_cast<size_t>(k); i < out.size(); ++i) {
        if (out[i] == hp.a) out[i] = hp.b;
        else if (out[i] == hp.b) out[i] = hp.a;
    }
    return out;
}

namespace {

PathOrbit orbit_closure(const Multipartition& mu, const Params& p,
                        const std::set<int>& sigma, bool adjusted) {
    PathOrbit orbit;
    orbit.mu = mu;
    orbit.base = distinguished_path(mu, p);
    orbit.sigma = sigma;
    orbit.adjusted = adjusted;

    auto shift = rho_unchecked(p);
    int hl = p.rank();
    int n = static_cast<int>(orbit.base.size());

    std::set<Path> seen{orbit.base};
    std::vector<Path> queue{orbit.base};
    while (!queue.empty()) {
        Path s = std::move(queue.back());
        queue.pop_back();
        auto pts = path_points(s, p);
        for (int k = 0; k <= n; ++k) {
            if (adjusted && sigma.count(k)) continue;
            const Weight& x = pts[k];
            for (int a = 0; a < hl; ++a)
                for (int b = a + 1; b < hl; ++b) {
                    long long d = pairing(x, a, b, shift);
                    bool on = p.finite() ? d % p.e == 0 : d == 0;
                    if (!on) continue;
                    Path t = s;
                    for (size_t i = static_cast<size_t>(k); i < t.size(); ++i) {
                        if (t[i] == a) t[i] = b;
                        else if (t[i] == b) t[i] = a;
                    }
                    if (seen.insert(t).second) queue.push_back(t);
                }
        }
    }

    orbit.members.assign(seen.begin(), seen.end());
    for (const auto& s : orbit.members)
        orbit.by_endpoint[path_endpoint(s, p)].push_back(s);
    return orbit;
}

}  // namespace

long long PathOrbit::degree_of(const Path& steps, const Params& p) const {
    return adjusted ? path_degree_adjusted(steps, sigma, p) : path_degree(steps, p);
}

PathOrbit path_orbit(const Multipartition& mu, const Params& p) {
    if (!p.finite())
        throw WrongRegime("path_orbit requires finite e; use sigma_avoiding_orbit at e = inf");
    return orbit_closure(mu, p, {}, false);
}

std::vector<Path> paths_to(const PathOrbit& orbit, const Multipartition& lam, const Params& p) {
    auto it = orbit.by_endpoint.find(to_weight(lam, p));
    return it == orbit.by_endpoint.end() ? std::vector<Path>{} : it->second;
}

std::vector<Path> dominant_paths(const PathOrbit& orbit, const Multipartition& lam, const Params& p) {
    std::vector<Path> out;
    for (const auto& s : paths_to(orbit, lam, p))
        if (path_is_dominant(s, p)) out.push_back(s);
    return out;
}

std::vector<Path> dominant_paths(const Multipartition& lam, const Multipartition& mu, const Params& p) {
    return dominant_paths(path_orbit(mu, p), lam, p);
}

MaximalPath maximal_path(const PathOrbit& orbit, const Weight& target, const Params& p) {
    auto it = orbit.by_endpoint.find(target);
    if (it == orbit.by_endpoint.end() || it->second.empty())
        throw NotLinked("no path in the orbit reaches the target point");
    auto shift = rho_unchecked(p);
    long long gap = length(path_endpoint(orbit.base, p), shift, p) - length(target, shift, p);
    std::vector<const Path*> maxima;
    for (const auto& s : it->second)
        if (orbit.degree_of(s, p) == gap) maxima.push_back(&s);
    if (maxima.size() != 1)
        throw MultipleMaxima("expected exactly one path of degree " + std::to_string(gap) +
                             ", found " + std::to_string(maxima.size()));
    return {*maxima.front(), gap, path_is_dominant(*maxima.front(), p)};
}

MaximalPath maximal_path(const Multipartition& lam, const Multipartition& mu, const Params& p) {
    return maximal_path(path_orbit(mu, p), to_weight(lam, p), p);
}

bool strongly_linked_up(const Multipartition& lam, const Multipartition& mu, const Params& p) {
    auto orbit = path_orbit(mu, p);
    return orbit.by_endpoint.count(to_weight(lam, p)) > 0;
}

std::set<int> sigma_set(const Multipartition& mu, const Params& p) {
    if (p.finite() && p.e <= size_of(mu))
        throw WrongRegime("sigma_set requires e = inf or e > n");
    auto shift = rho_unchecked(p);
    auto degs = step_degrees(distinguished_path(mu, p), shift, p);
    std::set<int> out;
    for (size_t i = 0; i < degs.size(); ++i)
        if (degs[i] != 0) out.insert(static_cast<int>(i) + 1);
    return out;
}

PathOrbit sigma_avoiding_orbit(const Multipartition& mu, const Params& p) {
    return orbit_closure(mu, p, sigma_set(mu, p), true);
}

std::vector<Path> paths_infty(const Multipartition& lam, const Multipartition& mu, const Params& p) {
    return dominant_paths(sigma_avoiding_orbit(mu, p), lam, p);
}

long long path_degree_infty(const Path& steps, const Multipartition& mu, const Params& p) {
    return path_degree_adjusted(steps, sigma_set(mu, p), p);
}

}  // namespace alcove
