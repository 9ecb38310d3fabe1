#include "cyclepat/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace cyclepat {

DyckWord::DyckWord(std::string word) : w_(std::move(word)) {
    if (w_.empty() || w_.size() % 2) throw std::invalid_argument("Dyck word needs positive even length");
    int bal = 0;
    for (size_t i = 0; i < w_.size(); ++i) {
        if (w_[i] == '0') {
            zeros_.push_back(static_cast<int>(i));
            ++bal;
        } else if (w_[i] == '1') {
            ones_.push_back(static_cast<int>(i));
            if (--bal < 0) throw std::invalid_argument("Dyck prefix condition violated");
        } else {
            throw std::invalid_argument("Dyck word must be over {0,1}");
        }
    }
    if (bal != 0) throw std::invalid_argument("Dyck word must balance");
}

MotzkinPath::MotzkinPath(std::string steps) : s_(std::move(steps)) {
    int h = 0;
    for (char c : s_) {
        if (c == 'u') ++h;
        else if (c == 'd') --h;
        else if (c != 'f') throw std::invalid_argument("Motzkin path must be over {u,d,f}");
        if (h < 0) throw std::invalid_argument("Motzkin path dips below zero");
    }
    if (h != 0) throw std::invalid_argument("Motzkin path must end at height 0");
}

int MotzkinPath::flats_at_level_zero() const {
    int h = 0, flats = 0;
    for (char c : s_) {
        if (c == 'u') ++h;
        else if (c == 'd') --h;
        else if (h == 0) ++flats;
    }
    return flats;
}

int Composition::total() const {
    int t = 0;
    for (int p : parts) t += p;
    return t;
}

std::string Composition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

Composition Composition::parse(std::string_view text) {
    Composition c;
    size_t i = 0;
    while (i < text.size()) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc{} || v < 1) throw std::invalid_argument("composition parts must be >= 1");
        c.parts.push_back(v);
        i = ptr - text.data();
        if (i < text.size()) {
            if (text[i] != ',') throw std::invalid_argument("composition is a comma list");
            ++i;
        }
    }
    if (c.parts.empty()) throw std::invalid_argument("composition must be nonempty");
    return c;
}

Composition FreeBlockDecomposition::composition() const {
    Composition c;
    for (const auto& b : blocks) c.parts.push_back(b.size());
    return c;
}

DyckWord dyck_word_of(const Permutation& p) {
    const int n = p.size();
    if (n == 0 || n % 3) throw std::invalid_argument("dyck_word_of: size must be a positive multiple of 3");
    const int m = n / 3;
    auto dec = decompose(p);
    std::vector<char> is_mid(n + 1, 0), is_last(n + 1, 0);
    for (const auto& c : dec.cycles) {
        if (c.size() != 3)
            throw std::invalid_argument("dyck_word_of: permutation must consist of 3-cycles only");
        std::vector<int> s(c.begin(), c.end());
        std::sort(s.begin(), s.end());
        if (s[0] > m)
            throw std::invalid_argument("dyck_word_of: first entries must be {1..m} (not a 132-avoider)");
        is_mid[s[1]] = 1;
        is_last[s[2]] = 1;
    }
    for (int v = 1; v <= m; ++v)
        if (is_mid[v] || is_last[v])
            throw std::invalid_argument("dyck_word_of: first entries must be {1..m} (not a 132-avoider)");
    std::string w;
    w.reserve(2 * m);
    for (int v = m + 1; v <= n; ++v) w += is_mid[v] ? '0' : '1';
    return DyckWord(std::move(w));  // the ctor enforces the Dyck condition
}

std::vector<int> hits(const DyckWord& d) {
    std::vector<int> out{0};
    int bal = 0;
    for (int i = 0; i < d.length(); ++i) {
        bal += d.word()[i] == '0' ? 1 : -1;
        if (bal == 0) out.push_back(i + 1);
    }
    return out;
}

FreeBlockDecomposition free_decomposition(const DyckWord& d) {
    const int m = d.half_length();
    FreeBlockDecomposition out;
    int start = 0;
    for (int i = 1; i <= m; ++i) {
        bool joined = i < m && d.zero_pos(i) == d.zero_pos(i - 1) + 1 &&
                      d.one_pos(i) == d.one_pos(i - 1) + 1;
        if (!joined) {
            FreeBlock b;
            b.pair_begin = start;
            b.pair_end = i;
            b.zero_begin = d.zero_pos(start);
            b.zero_end = d.zero_pos(i - 1) + 1;
            b.one_begin = d.one_pos(start);
            b.one_end = d.one_pos(i - 1) + 1;
            out.blocks.push_back(b);
            start = i;
        }
    }
    return out;
}

DyckWord reduce(const DyckWord& d) {
    auto dec = free_decomposition(d);
    // one 0 and one 1 per block, kept in original position order
    std::vector<std::pair<int, char>> symbols;
    for (const auto& b : dec.blocks) {
        symbols.emplace_back(b.zero_begin, '0');
        symbols.emplace_back(b.one_begin, '1');
    }
    std::sort(symbols.begin(), symbols.end());
    std::string w;
    for (auto& [pos, ch] : symbols) w += ch;
    return DyckWord(std::move(w));
}

MotzkinPath dyck_to_motzkin(const DyckWord& d) {
    DyckWord r = reduce(d);
    const int k = r.half_length();
    std::string steps;
    for (int i = 0; i + 1 < k; ++i) {
        char after0 = r.word()[r.zero_pos(i) + 1];
        char after1 = r.word()[r.one_pos(i) + 1];
        if (after0 == '0' && after1 == '0') steps += 'u';
        else if (after0 == '1' && after1 == '1') steps += 'd';
        else if (after0 == '1' && after1 == '0') steps += 'f';
        else throw std::logic_error("reduced word has adjacent matched pairs");
    }
    return MotzkinPath(std::move(steps));
}

DyckWord motzkin_to_dyck(const MotzkinPath& m, const Composition& X) {
    const int k = X.length();
    if (m.length() != k - 1)
        throw std::invalid_argument("motzkin_to_dyck: need |X| = path length + 1");
    // successor symbol of the i-th 0 / i-th 1 in the reduced word, i < k-1
    auto succ0 = [&](int i) { return m.steps()[i] == 'u' ? '0' : '1'; };
    auto succ1 = [&](int i) { return m.steps()[i] == 'd' ? '1' : '0'; };
    std::string w = "0";
    int zeros = 1, ones = 0;
    char last_sym = '0';
    int last_idx = 0;
    while (static_cast<int>(w.size()) < 2 * k) {
        char next;
        if (last_sym == '0') next = last_idx < k - 1 ? succ0(last_idx) : '1';
        else next = last_idx < k - 1 ? succ1(last_idx) : '1';
        w += next;
        last_sym = next;
        last_idx = next == '0' ? zeros++ : ones++;
    }
    // expand block i to X[i] copies of its symbol
    std::string full;
    int zi = 0, oi = 0;
    for (char ch : w) {
        int r = ch == '0' ? X.parts[zi++] : X.parts[oi++];
        full.append(r, ch);
    }
    return DyckWord(std::move(full));
}

Int motzkin_flat_count(int k, int j) {
    if (k < 0 || j < 0) throw std::invalid_argument("motzkin_flat_count: negative arguments");
    if (j > k) return 0;
    // dp[h][f]: paths of length `step` ending at height h with f flats at level 0
    std::vector<std::vector<Int>> dp(k + 1, std::vector<Int>(j + 1));
    dp[0][0] = 1;
    for (int step = 0; step < k; ++step) {
        std::vector<std::vector<Int>> nd(k + 1, std::vector<Int>(j + 1));
        for (int h = 0; h <= step; ++h)
            for (int f = 0; f <= j; ++f) {
                const Int& v = dp[h][f];
                if (v == 0) continue;
                if (h + 1 <= k) nd[h + 1][f] += v;
                if (h > 0) nd[h - 1][f] += v;
                if (h == 0) {
                    if (f + 1 <= j) nd[0][f + 1] += v;
                } else {
                    nd[h][f] += v;
                }
            }
        dp = std::move(nd);
    }
    return dp[0][j];
}

Int catalan_number(int n) {
    static std::vector<Int> cache{1};
    while (static_cast<int>(cache.size()) <= n) {
        const int s = static_cast<int>(cache.size());
        Int c = 0;
        for (int i = 0; i < s; ++i) c += cache[i] * cache[s - 1 - i];
        cache.push_back(c);
    }
    return cache[n];
}

Int first_catalan_count(const DyckWord& d) {
    const int l = static_cast<int>(hits(d).size());
    Int r = pow2(l - 1);
    for (const auto& b : free_decomposition(d).blocks) r *= catalan_number(b.size());
    return r;
}

Int order3_count_variant(int m, int r, BinomialVariant v) {
    if (m < 0 || r < 0) throw std::invalid_argument("order3_count: negative arguments");
    if (m == 0) return 1;
    // T[k] = sum over compositions X of m with k parts of prod C_{x_i}
    std::vector<std::vector<Int>> T(m + 1, std::vector<Int>(m + 1));
    T[0][0] = 1;
    for (int mm = 1; mm <= m; ++mm)
        for (int k = 1; k <= mm; ++k)
            for (int x = 1; x + k - 1 <= mm; ++x) T[mm][k] += catalan_number(x) * T[mm - x][k - 1];
    Int total = 0;
    for (int k = 1; k <= m; ++k) {
        if (T[m][k] == 0) continue;
        for (int l = 2; l <= k + 1; ++l) {
            Int mf = motzkin_flat_count(k - 1, l - 2);
            if (mf == 0) continue;
            Int b;
            switch (v) {
                case BinomialVariant::theorem: b = binomial(r + l, r); break;
                case BinomialVariant::stars_bars: b = binomial(r + l - 1, r); break;
                case BinomialVariant::proof: b = binomial(r + l - 2, r); break;
            }
            total += pow2(l - 1) * b * mf * T[m][k];
        }
    }
    return total;
}

Int order3_count(int m, int r) {
    return order3_count_variant(m, r, BinomialVariant::stars_bars);
}

std::vector<DyckWord> all_dyck_words(int m) {
    std::vector<DyckWord> out;
    std::string w;
    auto rec = [&](auto&& self, int zeros, int ones) -> void {
        if (static_cast<int>(w.size()) == 2 * m) {
            out.emplace_back(w);
            return;
        }
        if (zeros < m) {
            w += '0';
            self(self, zeros + 1, ones);
            w.pop_back();
        }
        if (ones < zeros) {
            w += '1';
            self(self, zeros, ones + 1);
            w.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<Composition> compositions_of(int m, int k) {
    std::vector<Composition> out;
    Composition cur;
    auto rec = [&](auto&& self, int left, int parts_left) -> void {
        if (parts_left == 0) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int x = 1; x + parts_left - 1 <= left; ++x) {
            cur.parts.push_back(x);
            self(self, left - x, parts_left - 1);
            cur.parts.pop_back();
        }
    };
    rec(rec, m, k);
    return out;
}

}  // namespace cyclepat
