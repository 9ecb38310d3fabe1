#pragma once

#include <string>
#include <vector>

#include "cyclepat/numeric.hpp"
#include "cyclepat/permutation.hpp"

namespace cyclepat {

/// Binary word over {0,1}: every prefix has #0 >= #1 and the totals agree.
class DyckWord {
public:
    explicit DyckWord(std::string word);  // validates

    const std::string& word() const { return w_; }
    int length() const { return static_cast<int>(w_.size()); }
    int half_length() const { return length() / 2; }

    bool operator==(const DyckWord&) const = default;
    auto operator<=>(const DyckWord&) const = default;

    /// Position of the i-th 0 / i-th 1 (0-based pair index, 0-based position).
    int zero_pos(int i) const { return zeros_[i]; }
    int one_pos(int i) const { return ones_[i]; }

private:
    std::string w_;
    std::vector<int> zeros_, ones_;
};

/// Word over {u,d,f} with nonnegative prefix heights ending at height 0.
class MotzkinPath {
public:
    MotzkinPath() = default;
    explicit MotzkinPath(std::string steps);  // validates

    const std::string& steps() const { return s_; }
    int length() const { return static_cast<int>(s_.size()); }
    /// Number of f-steps at height 0.
    int flats_at_level_zero() const;

    bool operator==(const MotzkinPath&) const = default;

private:
    std::string s_;
};

/// Composition of a positive integer: nonempty sequence of parts >= 1.
struct Composition {
    std::vector<int> parts;
    int total() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool operator==(const Composition&) const = default;
    std::string to_string() const;  // comma list
    static Composition parse(std::string_view text);
};

/// One free block: the r-th..(r+size-1)-th matched pairs whose 0 positions and
/// matched 1 positions are both consecutive runs in the word (0-based, half-open).
struct FreeBlock {
    int pair_begin = 0, pair_end = 0;  // pair indices
    int zero_begin = 0, zero_end = 0;  // word positions of the 0 run
    int one_begin = 0, one_end = 0;    // word positions of the 1 run
    int size() const { return pair_end - pair_begin; }
};

struct FreeBlockDecomposition {
    std::vector<FreeBlock> blocks;
    Composition composition() const;
};

/// The word D_pi of a 132-avoider composed only of 3-cycles: positions m+1..3m
/// map to 0 for a middle entry and 1 for a last entry. Rejects permutations with
/// fixed points or 2-cycles, with first-entry set != {1..m}, or whose word fails
/// the Dyck prefix condition (any of which signals a non-avoider).
DyckWord dyck_word_of(const Permutation& p);

/// Even positions (including 0 and 2m) where the prefix is balanced.
std::vector<int> hits(const DyckWord& d);

/// Partition of the matched pairs into maximal runs with consecutive 0s and
/// consecutive matched 1s; block sizes in order form the free composition.
FreeBlockDecomposition free_decomposition(const DyckWord& d);

/// Compress each free block to a single matched pair; the result has free
/// composition (1,1,...,1).
DyckWord reduce(const DyckWord& d);

/// The refined bijection: reading the reduced word of length 2k, step i is
/// u when the i-th 0 and i-th 1 are both followed by 0, d when both are
/// followed by 1, f for the mixed case. Output length k-1.
MotzkinPath dyck_to_motzkin(const DyckWord& d);

/// Inverse: the unique Dyck word with free composition X whose reduced image
/// maps to m. Requires |X| = length(m) + 1.
DyckWord motzkin_to_dyck(const MotzkinPath& m, const Composition& X);

/// M_{k,j}: Motzkin paths of length k with j flats at level zero (DP count).
Int motzkin_flat_count(int k, int j);

/// Catalan number by the convolution recurrence (kept independent of the
/// generating-function route in gf_catalog).
Int catalan_number(int n);

/// 2^{l-1} * C_{x_1}...C_{x_k} with l = |hits(d)| and X the free composition:
/// the number of 3-cycle-only 132-avoiders with this Dyck word.
Int first_catalan_count(const DyckWord& d);

/// The binomial factor candidates for the fixed-point placement count.
enum class BinomialVariant {
    theorem,     // C(r+l, r), as printed in the theorem
    stars_bars,  // C(r+l-1, r), r identical fixed points into l hit slots
    proof,       // C(r+l-2, r), the proof's C(r+j, r) with j = l-2
};

/// Number of 132-avoiders with m 3-cycles and r fixed points, evaluated with
/// an explicit binomial variant (the verify harness arbitrates against brute
/// force). m = 0 counts the identity layout: 1.
Int order3_count_variant(int m, int r, BinomialVariant v);

/// Same, with the oracle-validated variant (stars_bars).
Int order3_count(int m, int r);

/// All Dyck words of half-length m, lexicographic.
std::vector<DyckWord> all_dyck_words(int m);

/// All compositions of m with k parts, lexicographic.
std::vector<Composition> compositions_of(int m, int k);

}  // namespace cyclepat
