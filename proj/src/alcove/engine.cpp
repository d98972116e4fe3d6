#include "alcove/engine.hpp"

#include <algorithm>

namespace alcove {

namespace {

const Laurent kZero{};

}  // namespace

Engine::Engine(const Params& p) : params_(validate_params(p)) {}

const Engine::Column& Engine::column(const Multipartition& mu) {
    auto it = cache_.find(mu);
    if (it != cache_.end()) return it->second;

    Column col;
    col.mu = mu;
    int n = size_of(mu);
    bool super_strong = is_super_strong_regime(params_);
    if (!super_strong && params_.finite() && params_.e <= n)
        throw WrongRegime("decomposition columns require finite e > h*ell or e > n (or e = inf)");
    col.adjusted = !super_strong;

    PathOrbit orbit = col.adjusted ? sigma_avoiding_orbit(mu, params_)
                                   : path_orbit(mu, params_);
    col.sigma = orbit.sigma;

    auto shift = rho_unchecked(params_);
    col.len = length(path_endpoint(orbit.base, params_), shift, params_);

    for (const auto& [endpoint, paths] : orbit.by_endpoint) {
        if (!is_dominant(endpoint, params_)) continue;
        col.linked.insert(endpoint);
        int dominant = 0;
        Laurent poly;
        for (const auto& s : paths) {
            if (!path_is_dominant(s, params_)) continue;
            ++dominant;
            poly.add_term(static_cast<int>(orbit.degree_of(s, params_)), 1);
        }
        if (!poly.is_zero()) col.N.emplace(endpoint, std::move(poly));
        col.endpoint_counts.emplace(endpoint,
                                    std::make_pair(static_cast<int>(paths.size()), dominant));
    }

    return cache_.emplace(mu, std::move(col)).first->second;
}

Laurent Engine::path_polynomial(const Multipartition& lam, const Multipartition& mu) {
    const Column& col = column(mu);
    auto it = col.N.find(to_weight(lam, params_));
    return it == col.N.end() ? Laurent{} : it->second;
}

std::vector<Multipartition> Engine::close_down(const std::vector<Multipartition>& seeds) {
    std::set<Multipartition> closed(seeds.begin(), seeds.end());
    std::vector<Multipartition> queue(closed.begin(), closed.end());
    while (!queue.empty()) {
        Multipartition mu = std::move(queue.back());
        queue.pop_back();
        for (const auto& endpoint : column(mu).linked) {
            auto label = from_weight(endpoint, params_);
            if (label && closed.insert(*label).second) queue.push_back(*label);
        }
    }
    return {closed.begin(), closed.end()};
}

const Laurent& Engine::Matrix::d_of(const Multipartition& lam, const Multipartition& mu) const {
    auto it = d.find({lam, mu});
    return it == d.end() ? kZero : it->second;
}

const Laurent& Engine::Matrix::nbar_of(const Multipartition& lam, const Multipartition& mu) const {
    auto it = nbar.find({lam, mu});
    return it == nbar.end() ? kZero : it->second;
}

Engine::Matrix Engine::decomposition_matrix(const std::vector<Multipartition>& labels, bool close) {
    Matrix out;
    std::vector<Multipartition> all =
        close ? close_down(labels) : [&] {
            std::set<Multipartition> dedup(labels.begin(), labels.end());
            return std::vector<Multipartition>(dedup.begin(), dedup.end());
        }();

    for (const auto& label : all) out.lengths[label] = column(label).len;

    std::vector<Multipartition> cols = all;
    std::sort(cols.begin(), cols.end(), [&](const auto& x, const auto& y) {
        return std::make_pair(out.lengths[x], x) < std::make_pair(out.lengths[y], y);
    });

    for (const auto& mu : cols) {
        const Column& cd = column(mu);
        long long mu_len = out.lengths[mu];
        out.d[{mu, mu}] = Laurent::one();
        out.nbar[{mu, mu}] = Laurent::one();

        std::vector<Multipartition> rows;
        for (const auto& lam : all)
            if (out.lengths[lam] < mu_len) rows.push_back(lam);
        std::sort(rows.begin(), rows.end(), [&](const auto& x, const auto& y) {
            return std::make_pair(-out.lengths[x], x) < std::make_pair(-out.lengths[y], y);
        });

        for (const auto& lam : rows) {
            Weight lam_wt = to_weight(lam, params_);
            if (!cd.linked.count(lam_wt)) continue;  // d = nbar = 0
            auto n_it = cd.N.find(lam_wt);
            Laurent residual = n_it == cd.N.end() ? Laurent{} : n_it->second;
            long long lam_len = out.lengths[lam];
            for (const auto& nu : all) {
                long long nu_len = out.lengths[nu];
                if (!(lam_len < nu_len && nu_len < mu_len)) continue;
                const Laurent& dd = out.d_of(lam, nu);
                const Laurent& nn = out.nbar_of(nu, mu);
                if (!dd.is_zero() && !nn.is_zero()) residual -= dd * nn;
            }
            try {
                auto [dpart, npart] = bar_split(residual);
                if (!dpart.is_zero()) out.d[{lam, mu}] = std::move(dpart);
                if (!npart.is_zero()) out.nbar[{lam, mu}] = std::move(npart);
            } catch (const NegativeCoefficient& err) {
                throw InternalInconsistency(
                    "column residual for " + to_string(lam) + " in column " + to_string(mu) +
                    " is not bar-splittable: " + err.what());
            }
        }

        // Reconstruction identity and the super-strong bound, per column.
        for (const auto& lam : rows) {
            Weight lam_wt = to_weight(lam, params_);
            Laurent expected;
            if (auto n_it = cd.N.find(lam_wt); n_it != cd.N.end()) expected = n_it->second;
            Laurent recon = out.nbar_of(lam, mu) + out.d_of(lam, mu);
            long long lam_len = out.lengths[lam];
            for (const auto& nu : all) {
                long long nu_len = out.lengths[nu];
                if (!(lam_len < nu_len && nu_len < mu_len)) continue;
                recon += out.d_of(lam, nu) * out.nbar_of(nu, mu);
            }
            if (recon != expected)
                throw InternalInconsistency("reconstruction identity failed for " +
                                            to_string(lam) + " in column " + to_string(mu));
            for (auto [exp, c] : out.d_of(lam, mu).terms())
                if (exp <= 0 || c < 0 || c > expected.coeff(exp))
                    throw InternalInconsistency("super-strong bound violated for " +
                                                to_string(lam) + " in column " + to_string(mu));
        }
    }

    out.labels = all;
    std::sort(out.labels.begin(), out.labels.end(), [&](const auto& x, const auto& y) {
        return std::make_pair(-out.lengths[x], x) < std::make_pair(-out.lengths[y], y);
    });
    return out;
}

std::map<Multipartition, std::pair<Laurent, Laurent>>
Engine::decomposition_column(const Multipartition& mu) {
    Matrix m = decomposition_matrix({mu});
    std::map<Multipartition, std::pair<Laurent, Laurent>> out;
    const Column& cd = column(mu);
    for (const auto& lam : m.labels) {
        if (lam != mu && !cd.linked.count(to_weight(lam, params_))) continue;
        out.emplace(lam, std::make_pair(m.d_of(lam, mu), m.nbar_of(lam, mu)));
    }
    return out;
}

bool Engine::is_generic_set(const std::vector<Multipartition>& gamma) {
    if (gamma.empty()) return true;
    int n = size_of(gamma.front());
    for (const auto& label : gamma)
        if (size_of(label) != n)
            throw SizeMismatch("is_generic_set requires multipartitions of equal size");
    std::set<Multipartition> members(gamma.begin(), gamma.end());

    for (const auto& mu : members) {
        const Column& cd = column(mu);
        // (i) Path+ = Path between members.
        for (const auto& lam : members) {
            auto it = cd.endpoint_counts.find(to_weight(lam, params_));
            if (it != cd.endpoint_counts.end() && it->second.first != it->second.second)
                return false;
        }
        // (ii) closure under intermediate linkage.
        for (const auto& endpoint : cd.linked) {
            auto nu = from_weight(endpoint, params_);
            if (!nu || members.count(*nu)) continue;
            const Column& nu_col = column(*nu);
            for (const auto& lam : members)
                if (lam != *nu && nu_col.linked.count(to_weight(lam, params_)))
                    return false;
        }
    }
    return true;
}

Engine::HomDegree Engine::generic_hom_degree(const Multipartition& lam, const Multipartition& mu) {
    MaximalPath mp = maximal_path(lam, mu, params_);
    return {mp.degree, mp.dominant, mp.dominant ? 1 : 0};
}

}  // namespace alcove
