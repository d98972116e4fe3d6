#include "alcove/tableaux.hpp"

#include <algorithm>
#include <map>

namespace alcove {

std::vector<Node> component_word(const Multipartition& mu, const Params& p) {
    std::vector<Node> word;
    Multipartition shape = mu;
    while (size_of(shape) > 0) {
        auto sets = addable_removable(shape, p);
        const Node* least_dominant = nullptr;
        for (const auto& b : sets.removable)
            if (!least_dominant || theta_dominates_node(*least_dominant, b, p))
                least_dominant = &b;
        word.push_back(*least_dominant);
        shape = remove_box(shape, *least_dominant);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

StandardTableau superstandard_tableau(const Multipartition& lam, const Params& p) {
    return {lam, component_word(lam, p)};
}

bool is_standard(const StandardTableau& t, const Params& p) {
    if (static_cast<int>(t.word.size()) != size_of(t.shape)) return false;
    Multipartition prefix = empty_multipartition(p);
    for (const auto& b : t.word) {
        if (!contains_box(t.shape, b)) return false;
        auto sets = addable_removable(prefix, p, std::nullopt, false);
        if (std::find(sets.addable.begin(), sets.addable.end(), b) == sets.addable.end())
            return false;
        prefix = add_box(prefix, b);
    }
    return prefix == t.shape;
}

std::vector<long long> residue_sequence(const StandardTableau& t, const Params& p) {
    std::vector<long long> out;
    out.reserve(t.word.size());
    for (const auto& b : t.word) out.push_back(residue_of(b, p));
    return out;
}

namespace {

// Shared degree recount for any shape-building word: at each step count the
// same-residue addable/removable boxes of the prefix shape that sit in a
// strictly less dominant loading position than the step's box.
std::vector<int> word_degree_contributions(const std::vector<Node>& word, const Params& p) {
    std::vector<int> out;
    out.reserve(word.size());
    Multipartition prefix = empty_multipartition(p);
    for (const auto& b : word) {
        prefix = add_box(prefix, b);
        long long res = residue_of(b, p);
        LoadingKey key = loading_of(b, p);
        auto sets = addable_removable(prefix, p, res);
        int d = 0;
        for (const auto& a : sets.addable)
            if (key < loading_of(a, p)) ++d;
        for (const auto& r : sets.removable)
            if (key < loading_of(r, p)) --d;
        out.push_back(d);
    }
    return out;
}

}  // namespace

std::vector<int> degree_contributions(const StandardTableau& t, const Params& p) {
    return word_degree_contributions(t.word, p);
}

int std_degree(const StandardTableau& t, const Params& p) {
    auto contribs = word_degree_contributions(t.word, p);
    int total = 0;
    for (int d : contribs) total += d;
    return total;
}

namespace {

struct SstdSearch {
    const Multipartition& lam;
    const Params& p;
    const std::vector<Node>& mu_word;
    std::vector<LoadingKey> mu_keys;
    Multipartition prefix;
    std::vector<Node> word;
    std::map<Node, LoadingKey> placed;
    std::vector<std::vector<Node>>& out;

    // Ordering conditions on the entry key K at lambda-box y, given the keys
    // already placed at its upper and left neighbors.
    bool key_conditions_ok(const Node& y, const LoadingKey& K) const {
        if (y.row == 1 && y.col == 1) {
            if (!(LoadingKey{static_cast<long long>(y.comp), 0} < K)) return false;
        }
        if (y.row > 1) {
            auto it = placed.find({y.row - 1, y.col, y.comp});
            LoadingKey above = it->second;
            if (!(LoadingKey{above.primary + p.ell, above.secondary} < K)) return false;
        }
        if (y.col > 1) {
            auto it = placed.find({y.row, y.col - 1, y.comp});
            LoadingKey left = it->second;
            if (!(LoadingKey{left.primary - p.ell, left.secondary} < K)) return false;
        }
        return true;
    }

    void run(size_t k) {
        if (k == mu_word.size()) {
            out.push_back(word);
            return;
        }
        long long res = residue_of(mu_word[k], p);
        const LoadingKey& K = mu_keys[k];
        auto sets = addable_removable(prefix, p, std::nullopt, false);
        for (const auto& y : sets.addable) {
            if (!contains_box(lam, y)) continue;
            if (residue_of(y, p) != res) continue;
            if (!key_conditions_ok(y, K)) continue;
            prefix = add_box(prefix, y);
            word.push_back(y);
            placed.emplace(y, K);
            run(k + 1);
            placed.erase(y);
            word.pop_back();
            prefix = remove_box(prefix, y);
        }
    }
};

}  // namespace

std::vector<SemistandardPlus> enumerate_sstd_plus(const Multipartition& lam,
                                                  const Multipartition& mu,
                                                  const Params& p) {
    if (size_of(lam) != size_of(mu))
        throw SizeMismatch("enumerate_sstd_plus requires |lambda| = |mu|");
    auto mu_word = component_word(mu, p);
    std::vector<LoadingKey> mu_keys;
    mu_keys.reserve(mu_word.size());
    for (const auto& x : mu_word) mu_keys.push_back(loading_of(x, p));

    std::vector<std::vector<Node>> words;
    SstdSearch search{lam, p, mu_word, std::move(mu_keys),
                      empty_multipartition(p), {}, {}, words};
    search.run(0);

    std::vector<SemistandardPlus> out;
    out.reserve(words.size());
    for (auto& w : words) out.push_back({lam, mu, std::move(w)});
    return out;
}

std::vector<int> degree_contributions(const SemistandardPlus& T, const Params& p) {
    return word_degree_contributions(T.word, p);
}

int sstd_degree(const SemistandardPlus& T, const Params& p) {
    auto contribs = word_degree_contributions(T.word, p);
    int total = 0;
    for (int d : contribs) total += d;
    return total;
}

Path omega(const SemistandardPlus& T, const Params& p) {
    Path steps;
    steps.reserve(T.word.size());
    for (const auto& y : T.word)
        steps.push_back(p.h * (y.comp - 1) + (y.col - 1));
    return steps;
}

}  // namespace alcove
