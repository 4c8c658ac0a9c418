#pragma once

#include <string>
#include <vector>

#include "abcmin/tree.hpp"

namespace abcmin {

// Ground-truth enumeration settings. Any tree with t leaves and no degree-2
// vertex has at most t - 2 internal vertices, so capping the internal count
// at max_internal caps t at max_internal + 2 (default: t <= 10). Raising the
// cap is the caller's explicit opt-in to longer runtimes.
struct OracleOptions {
    int max_internal = 8;
};

// All pairwise non-isomorphic trees with exactly t leaves and no vertex of
// degree 2, by exhaustive generation (internal skeletons on 1..t-2 vertices,
// leaf distributions bringing every internal vertex to degree >= 3, dedup by
// canonical code). t = 2 yields the single edge. Deterministic order (sorted
// by canonical code). Throws LimitExceededError when t - 2 > max_internal.
std::vector<Tree> enumerate_leaf_trees(long t, const OracleOptions& opt = {});

struct OracleResult {
    long t = 0;
    long trees_considered = 0;   // isomorphism classes examined
    double min_abc = 0;          // correctly rounded; 0 only for t = 2 (K_2)
    std::vector<std::string> minimizer_codes;  // canonical codes, sorted
    std::vector<Tree> minimizers;
};

// Minimum abc over enumerate_leaf_trees(t), ties settled in extended
// precision and all minimizers kept.
OracleResult oracle_minimal(long t, const OracleOptions& opt = {});

}  // namespace abcmin
