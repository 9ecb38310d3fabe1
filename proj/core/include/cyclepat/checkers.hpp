#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "cyclepat/permutation.hpp"

namespace cyclepat {

/// Pairwise configurations inside a 231-avoider. For 2-cycle pairs only the
/// first three apply; for 3-cycle pairs, `separated` plus the two crossing
/// shapes of the lemma (cross_type_1 is its second pictured configuration,
/// a < d < e < b < f < c; cross_type_2 the third, a < d < b < e < f < c).
enum class PairConfig231 {
    disjoint,
    nested,
    crossing,
    separated,
    cross_type_1,
    cross_type_2,
    other,
};

/// The three allowed arc-diagram shapes of two 3-arcs in a 132-avoider.
enum class PairConfig132 { config_a, config_b, config_c, other };

PairConfig231 classify_2cycle_pair(std::pair<int, int> c1, std::pair<int, int> c2);

/// Both cycles must be FORM_132 (as 231-avoidance forces) with disjoint supports.
PairConfig231 classify_3cycle_pair_231(std::span<const int> cyc1, std::span<const int> cyc2);

/// Positional classification of two 3-arcs given by their sorted supports.
PairConfig132 classify_3arc_pair_132(const std::array<int, 3>& s1, const std::array<int, 3>& s2);

struct Violation {
    std::string lemma;
    std::vector<int> witness;
};

/// Structured result of a lemma check; a failure carries a reproducible
/// counterexample in `violations`. `notes` records informational findings.
struct CheckReport {
    std::string permutation;
    std::vector<Violation> violations;
    std::vector<std::string> notes;
    bool pass() const { return violations.empty(); }
    std::string to_json() const;
};

/// All configuration lemmas for pi in S_n^{[3]}(231): forced 3-cycle form,
/// non-crossing 2-cycles, the 3-cycle pair trichotomy, the five placements of
/// a 2-cycle against a crossing family, the two forbidden two-2-cycle
/// configurations, fixed-point placement, and block consecutiveness.
/// Throws unless p avoids 231 with all cycle lengths <= 3.
CheckReport check_231_family_lemmas(const Permutation& p);

/// Structure of an order-3 132-avoider: first entries {1..m}, pair
/// classifications within {A,B,C} (mixed forms only C), the non-nested
/// matching, same form inside free blocks, form changes only at hits, the
/// splitOnes block mapping, and fixed points only at hits.
/// Throws unless p avoids 132 with all cycle lengths in {1,3}.
CheckReport check_132_structure(const Permutation& p);

std::string to_string(PairConfig231 c);
std::string to_string(PairConfig132 c);

}  // namespace cyclepat
