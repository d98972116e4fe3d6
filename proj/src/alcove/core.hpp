#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alcove/types.hpp"

namespace alcove {

// Canonical residue representative in [0, e) for finite e; identity at e = inf.
long long reduce_mod_e(long long v, const Params& p);

// Normalizes and validates parameters.  The multicharge is reduced mod e
// (finite case) and sorted ascending; a note is appended to `warnings` when
// the input was not already normalized.  Throws InvalidParams on structural
// problems (wrong multicharge arity, e < 2, repeated charges).
Params validate_params(const Params& p, std::vector<std::string>* warnings = nullptr);

// True when every cyclic window of h consecutive residues mod e contains at
// most one multicharge entry; at e = inf the charges must be pairwise
// distinct.
bool is_h_admissible(const std::vector<long long>& kappa, int h, long long e);

// True in the regime where every wall of the dominant chamber is available:
// finite e > h*ell with an h-admissible normalized multicharge.
bool is_super_strong_regime(const Params& p);

bool is_valid_partition(const Partition& part);
bool is_valid_multipartition(const Multipartition& mp, const Params& p);
bool is_h_restricted(const Multipartition& mp, const Params& p);

int size_of(const Multipartition& mp);
Multipartition empty_multipartition(const Params& p);
std::vector<Node> boxes_of(const Multipartition& mp);
bool contains_box(const Multipartition& mp, const Node& b);

long long residue_of(const Node& b, const Params& p);
LoadingKey loading_of(const Node& b, const Params& p);

// True when box a sits in a strictly more dominant loading position than b.
bool theta_dominates_node(const Node& a, const Node& b, const Params& p);

// Addable/removable boxes of a multipartition, optionally filtered by
// residue.  In h-restricted mode (the default) addable boxes in column h+1
// are suppressed so the result stays h-restricted.
struct BoxSets {
    std::vector<Node> addable;
    std::vector<Node> removable;
};
BoxSets addable_removable(const Multipartition& mp, const Params& p,
                          std::optional<long long> residue_filter = std::nullopt,
                          bool h_restricted_mode = true);

Multipartition add_box(const Multipartition& mp, const Node& b);
Multipartition remove_box(const Multipartition& mp, const Node& b);

// Theta-dominance order on multipartitions of equal size: lam >= mu when for
// every box x of mu the number of lam-boxes of the same residue in strictly
// more dominant loading positions is at least the corresponding count for mu.
// Throws SizeMismatch when |lam| != |mu|.
bool theta_dominance(const Multipartition& lam, const Multipartition& mu, const Params& p);

// Column-length weight of an h-restricted multipartition in Z^{h*ell}.
Weight to_weight(const Multipartition& mp, const Params& p);

// Inverse of to_weight; nullopt when the point is not a multipartition weight
// (some h-block is not weakly decreasing or has a negative coordinate).
std::optional<Multipartition> from_weight(const Weight& w, const Params& p);

// Determinant-twist companion: prepends a part of length h to every
// component.  Throws NotHRestricted when the input is not h-restricted.
Multipartition det_h(const Multipartition& mp, int h);

// All h-restricted multipartitions of n, sorted lexicographically.
std::vector<Multipartition> all_multipartitions(int n, const Params& p);

std::string to_string(const Multipartition& mp);
std::string to_string(const Node& b);

}  // namespace alcove
