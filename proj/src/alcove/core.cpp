#include "alcove/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace alcove {

long long reduce_mod_e(long long v, const Params& p) {
    if (!p.finite()) return v;
    long long r = v % p.e;
    return r < 0 ? r + p.e : r;
}

Params validate_params(const Params& p, std::vector<std::string>* warnings) {
    if (p.h < 1) throw InvalidParams("h must be a positive integer");
    if (p.ell < 1) throw InvalidParams("ell must be a positive integer");
    if (p.finite() && p.e < 2) throw InvalidParams("finite e must be at least 2");
    if (static_cast<int>(p.kappa.size()) != p.ell)
        throw InvalidParams("multicharge must have exactly ell entries");

    Params q = p;
    for (auto& k : q.kappa) k = reduce_mod_e(k, q);
    std::sort(q.kappa.begin(), q.kappa.end());
    if (q.kappa != p.kappa && warnings)
        warnings->push_back("multicharge was normalized (reduced mod e and sorted ascending)");

    for (size_t i = 1; i < q.kappa.size(); ++i)
        if (q.kappa[i] == q.kappa[i - 1])
            throw InvalidParams("multicharge entries must be pairwise distinct");
    return q;
}

bool is_h_admissible(const std::vector<long long>& kappa, int h, long long e) {
    if (e == kInfiniteE) {
        std::set<long long> seen(kappa.begin(), kappa.end());
        return seen.size() == kappa.size();
    }
    // Window {i, ..., i+h-1} cyclically, every i in Z/e: at most one charge.
    for (long long i = 0; i < e; ++i) {
        int hits = 0;
        for (long long k : kappa) {
            long long r = ((k % e) + e) % e;
            long long offset = ((r - i) % e + e) % e;
            if (offset < h) ++hits;
        }
        if (hits > 1) return false;
    }
    return true;
}

bool is_super_strong_regime(const Params& p) {
    if (!p.finite()) return false;
    if (p.e <= static_cast<long long>(p.rank())) return false;
    if (!is_h_admissible(p.kappa, p.h, p.e)) return false;
    // No wrap-around collision between the last and first charge window.
    return reduce_mod_e(p.kappa.back() + p.h, p) != reduce_mod_e(p.kappa.front(), p);
}

bool is_valid_partition(const Partition& part) {
    for (size_t i = 0; i < part.size(); ++i) {
        if (part[i] <= 0) return false;
        if (i > 0 && part[i] > part[i - 1]) return false;
    }
    return true;
}

bool is_valid_multipartition(const Multipartition& mp, const Params& p) {
    if (static_cast<int>(mp.size()) != p.ell) return false;
    for (const auto& comp : mp)
        if (!is_valid_partition(comp)) return false;
    return true;
}

bool is_h_restricted(const Multipartition& mp, const Params& p) {
    for (const auto& comp : mp)
        if (!comp.empty() && comp.front() > p.h) return false;
    return true;
}

int size_of(const Multipartition& mp) {
    int n = 0;
    for (const auto& comp : mp)
        for (int part : comp) n += part;
    return n;
}

Multipartition empty_multipartition(const Params& p) {
    return Multipartition(static_cast<size_t>(p.ell));
}

std::vector<Node> boxes_of(const Multipartition& mp) {
    std::vector<Node> out;
    for (size_t m = 0; m < mp.size(); ++m)
        for (size_t r = 0; r < mp[m].size(); ++r)
            for (int c = 1; c <= mp[m][r]; ++c)
                out.push_back({static_cast<int>(r) + 1, c, static_cast<int>(m) + 1});
    return out;
}

bool contains_box(const Multipartition& mp, const Node& b) {
    if (b.comp < 1 || b.comp > static_cast<int>(mp.size())) return false;
    const auto& comp = mp[b.comp - 1];
    if (b.row < 1 || b.row > static_cast<int>(comp.size())) return false;
    return b.col >= 1 && b.col <= comp[b.row - 1];
}

long long residue_of(const Node& b, const Params& p) {
    long long v = p.kappa.at(b.comp - 1) + b.col - b.row;
    return reduce_mod_e(v, p);
}

LoadingKey loading_of(const Node& b, const Params& p) {
    // theta is fixed to (1, ..., ell).
    return {static_cast<long long>(b.comp) +
                static_cast<long long>(p.ell) * (b.row - b.col),
            static_cast<long long>(b.row) + b.col};
}

bool theta_dominates_node(const Node& a, const Node& b, const Params& p) {
    return loading_of(a, p) < loading_of(b, p);
}

BoxSets addable_removable(const Multipartition& mp, const Params& p,
                          std::optional<long long> residue_filter,
                          bool h_restricted_mode) {
    BoxSets out;
    auto keep = [&](const Node& b) {
        return !residue_filter || residue_of(b, p) == *residue_filter;
    };
    for (size_t m = 0; m < mp.size(); ++m) {
        const auto& comp = mp[m];
        int rows = static_cast<int>(comp.size());
        for (int r = 1; r <= rows; ++r) {
            int len = comp[r - 1];
            if (len > 0 && (r == rows || comp[r] < len)) {
                Node b{r, len, static_cast<int>(m) + 1};
                if (keep(b)) out.removable.push_back(b);
            }
        }
        for (int r = 1; r <= rows + 1; ++r) {
            int len = r <= rows ? comp[r - 1] : 0;
            int above = r > 1 ? comp[r - 2] : -1;
            if (r > 1 && above < len + 1) continue;
            if (h_restricted_mode && len + 1 > p.h) continue;
            Node b{r, len + 1, static_cast<int>(m) + 1};
            if (keep(b)) out.addable.push_back(b);
        }
    }
    return out;
}

Multipartition add_box(const Multipartition& mp, const Node& b) {
    Multipartition out = mp;
    auto& comp = out.at(b.comp - 1);
    if (b.row == static_cast<int>(comp.size()) + 1) {
        if (b.col != 1) throw InternalInconsistency("box is not addable: " + to_string(b));
        comp.push_back(1);
        return out;
    }
    if (b.row < 1 || b.row > static_cast<int>(comp.size()) ||
        comp[b.row - 1] + 1 != b.col ||
        (b.row > 1 && comp[b.row - 2] < b.col))
        throw InternalInconsistency("box is not addable: " + to_string(b));
    comp[b.row - 1] += 1;
    return out;
}

Multipartition remove_box(const Multipartition& mp, const Node& b) {
    Multipartition out = mp;
    auto& comp = out.at(b.comp - 1);
    if (b.row < 1 || b.row > static_cast<int>(comp.size()) ||
        comp[b.row - 1] != b.col ||
        (b.row < static_cast<int>(comp.size()) && comp[b.row] >= b.col))
        throw InternalInconsistency("box is not removable: " + to_string(b));
    comp[b.row - 1] -= 1;
    if (comp[b.row - 1] == 0) comp.erase(comp.begin() + (b.row - 1));
    return out;
}

bool theta_dominance(const Multipartition& lam, const Multipartition& mu, const Params& p) {
    if (size_of(lam) != size_of(mu))
        throw SizeMismatch("theta_dominance requires multipartitions of equal size");
    auto lam_boxes = boxes_of(lam);
    auto mu_boxes = boxes_of(mu);
    for (const auto& x : mu_boxes) {
        long long rx = residue_of(x, p);
        LoadingKey kx = loading_of(x, p);
        long long cl = 0, cm = 0;
        for (const auto& y : lam_boxes)
            if (residue_of(y, p) == rx && loading_of(y, p) < kx) ++cl;
        for (const auto& y : mu_boxes)
            if (residue_of(y, p) == rx && loading_of(y, p) < kx) ++cm;
        if (cl < cm) return false;
    }
    return true;
}

Weight to_weight(const Multipartition& mp, const Params& p) {
    if (!is_h_restricted(mp, p))
        throw NotHRestricted("to_weight requires an h-restricted multipartition");
    Weight w(static_cast<size_t>(p.rank()), 0);
    for (size_t m = 0; m < mp.size(); ++m) {
        const auto& comp = mp[m];
        for (int c = 1; c <= (comp.empty() ? 0 : comp.front()); ++c) {
            long long col = 0;
            for (int part : comp)
                if (part >= c) ++col;
            w[p.h * m + (c - 1)] = col;
        }
    }
    return w;
}

std::optional<Multipartition> from_weight(const Weight& w, const Params& p) {
    if (w.size() != static_cast<size_t>(p.rank())) return std::nullopt;
    Multipartition mp(static_cast<size_t>(p.ell));
    for (int m = 0; m < p.ell; ++m) {
        for (int i = 0; i < p.h; ++i) {
            long long v = w[p.h * m + i];
            if (v < 0) return std::nullopt;
            if (i > 0 && v > w[p.h * m + i - 1]) return std::nullopt;
        }
        long long rows = w[p.h * m];
        Partition comp;
        for (long long r = 1; r <= rows; ++r) {
            int len = 0;
            for (int i = 0; i < p.h; ++i)
                if (w[p.h * m + i] >= r) ++len;
            comp.push_back(len);
        }
        mp[m] = std::move(comp);
    }
    return mp;
}

Multipartition det_h(const Multipartition& mp, int h) {
    Multipartition out(mp.size());
    for (size_t m = 0; m < mp.size(); ++m) {
        if (!mp[m].empty() && mp[m].front() > h)
            throw NotHRestricted("det_h requires an h-restricted multipartition");
        out[m].reserve(mp[m].size() + 1);
        out[m].push_back(h);
        out[m].insert(out[m].end(), mp[m].begin(), mp[m].end());
    }
    return out;
}

namespace {

void partitions_with_bound(int n, int max_part, Partition& cur,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_with_bound(n - part, part, cur, out);
        cur.pop_back();
    }
}

void multipartitions_rec(int n, int comp, const Params& p,
                         Multipartition& cur, std::vector<Multipartition>& out) {
    if (comp == p.ell) {
        if (n == 0) out.push_back(cur);
        return;
    }
    for (int k = 0; k <= n; ++k) {
        std::vector<Partition> parts;
        Partition scratch;
        partitions_with_bound(k, p.h, scratch, parts);
        for (auto& part : parts) {
            cur[comp] = std::move(part);
            multipartitions_rec(n - k, comp + 1, p, cur, out);
        }
        cur[comp].clear();
    }
}

}  // namespace

std::vector<Multipartition> all_multipartitions(int n, const Params& p) {
    std::vector<Multipartition> out;
    Multipartition cur(static_cast<size_t>(p.ell));
    multipartitions_rec(n, 0, p, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Multipartition& mp) {
    std::ostringstream os;
    os << "(";
    for (size_t m = 0; m < mp.size(); ++m) {
        if (m > 0) os << ",";
        if (mp[m].empty()) {
            os << "()";
            continue;
        }
        os << "(";
        size_t i = 0;
        bool first = true;
        while (i < mp[m].size()) {
            size_t j = i;
            while (j < mp[m].size() && mp[m][j] == mp[m][i]) ++j;
            if (!first) os << ",";
            first = false;
            os << mp[m][i];
            if (j - i > 1) os << "^" << (j - i);
            i = j;
        }
        os << ")";
    }
    os << ")";
    return os.str();
}

std::string to_string(const Node& b) {
    std::ostringstream os;
    os << "(" << b.row << "," << b.col << "," << b.comp << ")";
    return os.str();
}

}  // namespace alcove
