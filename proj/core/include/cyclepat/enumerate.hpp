#pragma once

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cyclepat/numeric.hpp"
#include "cyclepat/permutation.hpp"

namespace cyclepat {

/// Cycle-type signature restricted to lengths 1..3.
struct CensusKey {
    int c1 = 0, c2 = 0, c3 = 0;
    auto operator<=>(const CensusKey&) const = default;
};

/// Refined avoider counts by cycle type.
struct Census {
    int n = 0;
    std::string pattern;
    std::vector<int> allowed;  // the set S, ascending
    std::map<CensusKey, Int> table;

    Int total() const;
    std::string to_json() const;
    static Census from_json(const std::string& text);
    bool operator==(const Census&) const = default;
};

/// Streams every permutation of [n] with all cycle lengths in S, each exactly
/// once, in the canonical construction order: the smallest unplaced element
/// starts a cycle; lengths tried ascending; remaining members in ascending
/// combination order; 3-cycle orientation (a,b,c) before (a,c,b).
void for_each_cycle_constrained(int n, const std::set<int>& S,
                                const std::function<void(const Permutation&)>& visit);

std::vector<Permutation> generate_cycle_constrained(int n, const std::set<int>& S);

/// Stream length without materializing.
Int count_cycle_constrained(int n, const std::set<int>& S);

/// |{pi in S_n^S : pi avoids pattern}|. The search tree is pruned as soon as
/// the placed entries already witness the pattern; threads > 1 partitions the
/// tree by the first cycle's shape with a deterministic merge.
Int count_avoiders(int n, const std::set<int>& S, const Permutation& pattern, int threads = 1);

/// Avoider counts refined by (c1, c2, c3).
Census refined_census(int n, const std::set<int>& S, const Permutation& pattern, int threads = 1);

/// Partition of the 3-cycle-only 132-avoiders of S_{3m} by their Dyck word.
std::map<std::string, std::vector<Permutation>> group_by_dyck_word(int m);

/// Default thread count: CYCLEPAT_THREADS if set, else 1.
int default_thread_count();

}  // namespace cyclepat
