#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "alcove/core.hpp"
#include "alcove/laurent.hpp"
#include "alcove/paths.hpp"
#include "alcove/types.hpp"

namespace alcove {

// Column-by-column Kazhdan-Lusztig engine over the path model.  Orbit data is
// cached per column label mu.  Finite e > h*ell uses the full-wall orbit; the
// e = inf and finite e > n regimes use the Sigma(mu)-adjusted machinery.
class Engine {
public:
    explicit Engine(const Params& p);

    const Params& params() const { return params_; }

    struct Column {
        Multipartition mu;
        long long len = 0;                       // length of to_weight(mu)
        bool adjusted = false;                   // Sigma-avoiding machinery in use
        std::set<int> sigma;                     // excluded steps (adjusted mode)
        std::map<Weight, Laurent> N;             // dominant-path degree histograms
        std::set<Weight> linked;                 // multipartition endpoints of the orbit
        std::map<Weight, std::pair<int, int>> endpoint_counts;  // (all paths, dominant)
    };

    // Throws WrongRegime when neither the super-strong nor the e>n regime
    // applies to this column size.
    const Column& column(const Multipartition& mu);

    // N_{lambda, t^mu}: sum of t^{deg} over dominant paths from the orbit of
    // t^mu ending at to_weight(lambda); zero when none exist.
    Laurent path_polynomial(const Multipartition& lam, const Multipartition& mu);

    // Downward closure of the seeds under strong linkage, sorted.
    std::vector<Multipartition> close_down(const std::vector<Multipartition>& seeds);

    struct Matrix {
        std::vector<Multipartition> labels;      // length-descending presentation order
        std::map<Multipartition, long long> lengths;
        std::map<std::pair<Multipartition, Multipartition>, Laurent> d;
        std::map<std::pair<Multipartition, Multipartition>, Laurent> nbar;

        const Laurent& d_of(const Multipartition& lam, const Multipartition& mu) const;
        const Laurent& nbar_of(const Multipartition& lam, const Multipartition& mu) const;
    };

    // Graded decomposition matrix over the linkage closure of `labels` (the
    // closure is always computed internally so the recursion sees every
    // intermediate label; pass close=false only for already-closed classes).
    // Validates uni-triangularity, the bound d <= N, and the reconstruction
    // identity; throws InternalInconsistency on failure.
    Matrix decomposition_matrix(const std::vector<Multipartition>& labels, bool close = true);

    // Single column mu over its own linkage closure: lambda -> (d, nbar).
    std::map<Multipartition, std::pair<Laurent, Laurent>> decomposition_column(const Multipartition& mu);

    // True when (i) every orbit path between members is dominant and
    // (ii) the set is closed under intermediate linkage.
    bool is_generic_set(const std::vector<Multipartition>& gamma);

    struct HomDegree {
        long long gap = 0;        // length(mu) - length(lambda)
        bool dominant = false;    // maximal path stays dominant
        int multiplicity = 0;     // graded multiplicity at t^gap: 1 iff dominant
    };
    HomDegree generic_hom_degree(const Multipartition& lam, const Multipartition& mu);

private:
    Params params_;
    std::map<Multipartition, Column> cache_;
};

}  // namespace alcove
