#include "cyclepat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <climits>
#include <stdexcept>

namespace cyclepat {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

void check_rearrangement(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : w) {
        if (v < 1 || v > n || seen[v]) bad("not a rearrangement of 1..n");
        seen[v] = 1;
    }
}

std::vector<int> parse_cycle_notation(std::string_view s) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i == s.size()) break;
        if (s[i] != '(') bad("expected '(' in cycle notation");
        ++i;
        std::vector<int> cyc;
        while (true) {
            while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
            if (i == s.size()) bad("unterminated cycle");
            if (s[i] == ')') { ++i; break; }
            int v = 0;
            auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
            if (ec != std::errc{} || v <= 0) bad("bad element in cycle notation");
            i = ptr - s.data();
            cyc.push_back(v);
        }
        if (cyc.empty()) bad("empty cycle");
        cycles.push_back(std::move(cyc));
    }
    int n = 0;
    for (const auto& c : cycles)
        for (int v : c) n = std::max(n, v);
    std::vector<int> w(n, 0);
    std::vector<char> seen(n + 1, 0);
    for (const auto& c : cycles) {
        for (size_t j = 0; j < c.size(); ++j) {
            int from = c[j], to = c[(j + 1) % c.size()];
            if (seen[from]) bad("element repeated across cycles");
            seen[from] = 1;
            w[from - 1] = to;
        }
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[v]) bad("cycles do not cover 1..n");
    return w;
}

// 123-core: increasing subsequence of length 3 in a word of distinct ints.
bool has_incr3(std::span<const int> w) {
    long best = LONG_MAX, second = LONG_MAX;  // smallest value; smallest middle-of-a-pair
    for (int v : w) {
        if (v > second) return true;
        if (v < best) best = v;
        else if (v < second) second = v;  // v > best here, since values are distinct
    }
    return false;
}

// 132-core: i < j < k with w[i] < w[k] < w[j]. O(n^2) left scan with prefix minima.
bool has_132(std::span<const int> w) {
    const size_t n = w.size();
    if (n < 3) return false;
    int mn = w[0];
    for (size_t j = 1; j + 1 < n; ++j) {
        if (mn < w[j]) {
            for (size_t k = j + 1; k < n; ++k)
                if (mn < w[k] && w[k] < w[j]) return true;
        }
        mn = std::min(mn, w[j]);
    }
    return false;
}

// General pattern search (|q| >= 4): DFS over positions, pruning on order violations.
bool search_general(std::span<const int> w, const std::vector<int>& q, size_t qi,
                    size_t start, std::vector<int>& chosen) {
    const size_t k = q.size();
    if (qi == k) return true;
    if (w.size() - start < k - qi) return false;
    for (size_t i = start; i + (k - qi) <= w.size(); ++i) {
        bool ok = true;
        for (size_t a = 0; a < qi && ok; ++a) {
            // relative order of chosen values must match the pattern's
            if ((chosen[a] < w[i]) != (q[a] < q[qi])) ok = false;
        }
        if (!ok) continue;
        chosen.push_back(w[i]);
        if (search_general(w, q, qi + 1, i + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
    check_rearrangement(word_);
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    text = text.substr(b, e - b);
    if (text.empty()) return Permutation();
    if (text.front() == '(') return Permutation(parse_cycle_notation(text));
    std::vector<int> w;
    if (text.find_first_of(" \t") != std::string_view::npos) {
        size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (i == text.size()) break;
            int v = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
            if (ec != std::errc{}) bad("bad one-line entry");
            i = ptr - text.data();
            w.push_back(v);
        }
    } else {
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
                bad("one-line digit string must use digits 1-9");
            w.push_back(ch - '0');
        }
    }
    return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
    std::string out;
    if (size() <= 9) {
        for (int v : word_) out += static_cast<char>('0' + v);
    } else {
        for (size_t i = 0; i < word_.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(word_[i]);
        }
    }
    return out;
}

std::string Permutation::cycle_string() const {
    std::string out;
    for (const auto& c : decompose(*this).cycles) {
        out += '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(c[i]);
        }
        out += ')';
    }
    return out;
}

CycleDecomposition decompose(const Permutation& p) {
    const int n = p.size();
    CycleDecomposition d;
    std::vector<char> seen(n + 1, 0);
    for (int s = 1; s <= n; ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc{s};
        seen[s] = 1;
        for (int x = p(s); x != s; x = p(x)) {
            cyc.push_back(x);
            seen[x] = 1;
        }
        d.cycles.push_back(std::move(cyc));
    }
    // each cycle already starts at its minimum (we scan s ascending), and
    // cycles are already sorted by minimum for the same reason
    return d;
}

Permutation compose_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> w(n, 0);
    std::vector<char> seen(n + 1, 0);
    for (const auto& c : cycles) {
        if (c.empty()) throw std::invalid_argument("empty cycle");
        for (size_t j = 0; j < c.size(); ++j) {
            int from = c[j], to = c[(j + 1) % c.size()];
            if (from < 1 || from > n || seen[from])
                throw std::invalid_argument("cycles do not partition [n]");
            seen[from] = 1;
            w[from - 1] = to;
        }
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[v]) throw std::invalid_argument("cycles do not partition [n]");
    return Permutation(std::move(w));
}

CycleCounts cycle_counts(const Permutation& p) {
    CycleCounts counts;
    for (const auto& c : decompose(p).cycles) ++counts[static_cast<int>(c.size())];
    return counts;
}

bool word_contains_pattern(std::span<const int> word, const Permutation& q) {
    const int k = q.size();
    if (k == 0) return true;
    if (static_cast<int>(word.size()) < k) return false;
    if (k == 1) return true;
    if (k == 2) {
        bool want_incr = q(1) < q(2);
        long extreme = want_incr ? LONG_MAX : LONG_MIN;
        for (int v : word) {
            if (want_incr ? v > extreme : v < extreme) return true;
            if (want_incr) extreme = std::min<long>(extreme, v);
            else extreme = std::max<long>(extreme, v);
        }
        return false;
    }
    if (k == 3) {
        // route the six patterns through the 123 / 132 cores: reversing the word
        // reverses the pattern, negating values complements it
        const auto& w = q.one_line();
        auto rev = [&](std::span<const int> v) {
            return std::vector<int>(v.rbegin(), v.rend());
        };
        auto neg = [&](std::span<const int> v) {
            std::vector<int> o(v.size());
            for (size_t i = 0; i < v.size(); ++i) o[i] = -v[i];
            return o;
        };
        if (w == std::vector<int>{1, 2, 3}) return has_incr3(word);
        if (w == std::vector<int>{3, 2, 1}) return has_incr3(neg(word));
        if (w == std::vector<int>{1, 3, 2}) return has_132(word);
        if (w == std::vector<int>{2, 3, 1}) return has_132(rev(word));
        if (w == std::vector<int>{3, 1, 2}) return has_132(neg(word));
        if (w == std::vector<int>{2, 1, 3}) return has_132(neg(rev(word)));
    }
    std::vector<int> chosen;
    chosen.reserve(k);
    return search_general(word, q.one_line(), 0, 0, chosen);
}

bool contains_pattern(const Permutation& p, const Permutation& q) {
    return word_contains_pattern(p.one_line(), q);
}

Permutation apply_symmetry(const Permutation& p, Symmetry sym) {
    const int n = p.size();
    auto inverse = [&](const Permutation& a) {
        std::vector<int> w(n);
        for (int i = 1; i <= n; ++i) w[a(i) - 1] = i;
        return Permutation(std::move(w));
    };
    auto rc = [&](const Permutation& a) {
        std::vector<int> w(n);
        for (int i = 1; i <= n; ++i) w[i - 1] = n + 1 - a(n + 1 - i);
        return Permutation(std::move(w));
    };
    switch (sym) {
        case Symmetry::identity: return p;
        case Symmetry::inverse: return inverse(p);
        case Symmetry::reverse_complement: return rc(p);
        case Symmetry::reverse_complement_inverse: return rc(inverse(p));
    }
    throw std::invalid_argument("unknown symmetry");
}

ArcDiagram arc_diagram(const Permutation& p) {
    ArcDiagram d;
    d.n = p.size();
    for (const auto& c : decompose(p).cycles) {
        std::vector<int> support(c);
        std::sort(support.begin(), support.end());
        for (size_t i = 0; i + 1 < support.size(); ++i)
            d.arcs.emplace_back(support[i], support[i + 1]);
    }
    std::sort(d.arcs.begin(), d.arcs.end());
    return d;
}

CycleForm3 form_of_3cycle(std::span<const int> cycle) {
    if (cycle.size() != 3) throw std::invalid_argument("form_of_3cycle requires a 3-cycle");
    if (cycle[0] == cycle[1] || cycle[1] == cycle[2] || cycle[0] == cycle[2])
        throw std::invalid_argument("3-cycle elements must be distinct");
    int pos_min = 0;
    for (int i = 1; i < 3; ++i)
        if (cycle[i] < cycle[pos_min]) pos_min = i;
    int next = cycle[(pos_min + 1) % 3];
    int mid = cycle[0] + cycle[1] + cycle[2]
              - std::max({cycle[0], cycle[1], cycle[2]})
              - std::min({cycle[0], cycle[1], cycle[2]});
    return next == mid ? CycleForm3::form_123 : CycleForm3::form_132;
}

std::string to_string(CycleForm3 f) {
    return f == CycleForm3::form_123 ? "123" : "132";
}

}  // namespace cyclepat
