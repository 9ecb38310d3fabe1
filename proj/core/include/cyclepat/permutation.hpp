#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclepat {

/// A permutation of [n] in one-line notation (1-based values).
/// The empty permutation (n = 0) is allowed and avoids every nonempty pattern.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);  // throws if not a rearrangement of 1..n

    static Permutation identity(int n);

    /// Accepts one-line notation ("529614738", or space-separated for n > 9)
    /// and cycle notation ("(1,5)(2)(3,9,8)(4,6)(7)"). "" is the empty permutation.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(word_.size()); }
    /// Image of i, 1-based.
    int operator()(int i) const { return word_[i - 1]; }
    const std::vector<int>& one_line() const { return word_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    /// One-line form; mirrors parse() bit-exactly (digit string for n <= 9).
    std::string to_string() const;
    /// Canonical cycle form, e.g. "(1,5)(2)(3,9,8)(4,6)(7)".
    std::string cycle_string() const;

private:
    std::vector<int> word_;
};

/// Canonical disjoint-cycle form: each cycle starts at its minimum,
/// cycles sorted by minimum.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;
};

/// counts[k] = number of k-cycles; zero entries omitted.
using CycleCounts = std::map<int, int>;

/// Arcs a->b (a < b) linking consecutive elements of each cycle's sorted support.
struct ArcDiagram {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
};

/// The two ways three elements a < b < c form a 3-cycle: (a,b,c) or (a,c,b).
enum class CycleForm3 { form_123, form_132 };

/// The four symmetries that preserve cycle type.
enum class Symmetry { identity, inverse, reverse_complement, reverse_complement_inverse };

CycleDecomposition decompose(const Permutation& p);
/// Rebuild the one-line word from disjoint cycles covering [n].
Permutation compose_cycles(int n, const std::vector<std::vector<int>>& cycles);
CycleCounts cycle_counts(const Permutation& p);

/// True iff some subsequence of p is order-isomorphic to q.
/// Patterns of length 3 run an O(n^2) left-scan; longer patterns fall back
/// to pruned subsequence search.
bool contains_pattern(const Permutation& p, const Permutation& q);
/// Same check on any word of distinct integers (used on partially built words).
bool word_contains_pattern(std::span<const int> word, const Permutation& q);
inline bool avoids(const Permutation& p, const Permutation& q) { return !contains_pattern(p, q); }

Permutation apply_symmetry(const Permutation& p, Symmetry sym);
ArcDiagram arc_diagram(const Permutation& p);

/// Classifies a 3-cycle given as a cycle (sequence of 3 distinct elements).
CycleForm3 form_of_3cycle(std::span<const int> cycle);

std::string to_string(CycleForm3 f);

}  // namespace cyclepat
