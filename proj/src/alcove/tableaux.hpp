#pragma once

#include <vector>

#include "alcove/core.hpp"
#include "alcove/types.hpp"

namespace alcove {

// Standard tableau of shape `shape`: word[k-1] is the box holding entry k.
// Entries increase along rows and columns iff every word prefix is a valid
// multipartition shape.
struct StandardTableau {
    Multipartition shape;
    std::vector<Node> word;
};

// Residue-respecting semistandard tableau of shape lambda and weight mu,
// stored as the sequence of lambda-boxes paired with the canonical component
// word of mu.
struct SemistandardPlus {
    Multipartition shape;
    Multipartition weight;
    std::vector<Node> word;
};

// Canonical component word of mu: X_k is the least dominant (maximal loading
// key) removable node of the size-k prefix.
std::vector<Node> component_word(const Multipartition& mu, const Params& p);

// The tableau t^lambda: entries n down to 1 placed along the reversed
// component word.
StandardTableau superstandard_tableau(const Multipartition& lam, const Params& p);

bool is_standard(const StandardTableau& t, const Params& p);

std::vector<long long> residue_sequence(const StandardTableau& t, const Params& p);

// Per-entry degree contributions: at step k count addable minus removable
// boxes of the prefix shape having the residue of box k and a strictly larger
// loading key (strictly less dominant position).
std::vector<int> degree_contributions(const StandardTableau& t, const Params& p);
int std_degree(const StandardTableau& t, const Params& p);

// Full set SStd+(lambda, mu).  Throws SizeMismatch when |lambda| != |mu|.
std::vector<SemistandardPlus> enumerate_sstd_plus(const Multipartition& lam,
                                                  const Multipartition& mu,
                                                  const Params& p);

std::vector<int> degree_contributions(const SemistandardPlus& T, const Params& p);
int sstd_degree(const SemistandardPlus& T, const Params& p);

// The path omega(T): step k adds epsilon at coordinate h(m_k - 1) + (c_k - 1)
// (0-based) for word box (r_k, c_k, m_k).
Path omega(const SemistandardPlus& T, const Params& p);

}  // namespace alcove
