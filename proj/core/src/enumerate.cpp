#include "cyclepat/enumerate.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "cyclepat/lattice.hpp"

namespace cyclepat {

namespace {

std::vector<int> checked_lengths(const std::set<int>& S) {
    if (S.empty()) throw std::invalid_argument("cycle length set must be nonempty");
    for (int k : S)
        if (k < 1 || k > 3) throw std::invalid_argument("cycle lengths beyond 3 are not generated");
    return {S.begin(), S.end()};  // ascending
}

// Depth-first construction over cycles. The smallest unplaced element starts a
// cycle; with a pattern attached, subtrees are cut once the placed entries
// already witness it, and leaves still get a full check.
struct Generator {
    int n;
    std::vector<int> lengths;
    const Permutation* pattern = nullptr;

    std::vector<int> pi;    // 1-based image, 0 = unset
    std::vector<char> used;
    int c1 = 0, c2 = 0, c3 = 0;
    std::vector<int> scratch;

    std::function<void(Generator&)> leaf;

    explicit Generator(int n_, const std::set<int>& S)
        : n(n_), lengths(checked_lengths(S)), pi(n_ + 1, 0), used(n_ + 1, 0) {
        scratch.reserve(n_);
    }

    Permutation current() const {
        std::vector<int> w(pi.begin() + 1, pi.end());
        return Permutation(std::move(w));
    }

    bool placed_witnesses_pattern() {
        scratch.clear();
        for (int i = 1; i <= n; ++i)
            if (pi[i]) scratch.push_back(pi[i]);
        return word_contains_pattern(scratch, *pattern);
    }

    void run() { rec(0); }

    void rec(int placed) {
        if (placed == n) {
            leaf(*this);
            return;
        }
        int a = 1;
        while (used[a]) ++a;
        for (int k : lengths) {
            if (placed + k > n) continue;
            if (k == 1) {
                place1(a);
                descend(placed + 1);
                unplace1(a);
            } else if (k == 2) {
                for (int b = a + 1; b <= n; ++b) {
                    if (used[b]) continue;
                    place2(a, b);
                    descend(placed + 2);
                    unplace2(a, b);
                }
            } else {
                for (int b = a + 1; b <= n; ++b) {
                    if (used[b]) continue;
                    for (int c = b + 1; c <= n; ++c) {
                        if (used[c]) continue;
                        place3(a, b, c);  // (a,b,c)
                        descend(placed + 3);
                        unplace3(a, b, c);
                        place3(a, c, b);  // (a,c,b)
                        descend(placed + 3);
                        unplace3(a, c, b);
                    }
                }
            }
        }
    }

    void descend(int placed) {
        if (pattern && placed_witnesses_pattern()) return;
        rec(placed);
    }

    void place1(int a) { used[a] = 1; pi[a] = a; ++c1; }
    void unplace1(int a) { used[a] = 0; pi[a] = 0; --c1; }
    void place2(int a, int b) { used[a] = used[b] = 1; pi[a] = b; pi[b] = a; ++c2; }
    void unplace2(int a, int b) { used[a] = used[b] = 0; pi[a] = pi[b] = 0; --c2; }
    void place3(int a, int x, int y) { used[a] = used[x] = used[y] = 1; pi[a] = x; pi[x] = y; pi[y] = a; ++c3; }
    void unplace3(int a, int x, int y) { used[a] = used[x] = used[y] = 0; pi[a] = pi[x] = pi[y] = 0; --c3; }

    // Root partitions: every possible first cycle (the cycle containing 1),
    // in generation order. Each entry is (k, b, c, oriented-as-(a,c,b)).
    struct Root { int k, b, c; bool swapped; };
    std::vector<Root> roots() const {
        std::vector<Root> out;
        if (n == 0) return out;
        for (int k : lengths) {
            if (k > n) continue;
            if (k == 1) out.push_back({1, 0, 0, false});
            else if (k == 2) {
                for (int b = 2; b <= n; ++b) out.push_back({2, b, 0, false});
            } else {
                for (int b = 2; b <= n; ++b)
                    for (int c = b + 1; c <= n; ++c) {
                        out.push_back({3, b, c, false});
                        out.push_back({3, b, c, true});
                    }
            }
        }
        return out;
    }

    void run_root(const Root& r) {
        if (r.k == 1) { place1(1); descend(1); unplace1(1); }
        else if (r.k == 2) { place2(1, r.b); descend(2); unplace2(1, r.b); }
        else if (!r.swapped) { place3(1, r.b, r.c); descend(3); unplace3(1, r.b, r.c); }
        else { place3(1, r.c, r.b); descend(3); unplace3(1, r.c, r.b); }
    }
};

// Run one generator per worker over the root partitions; merge() combines the
// per-partition accumulators in partition order.
template <typename Acc>
Acc parallel_over_roots(int n, const std::set<int>& S, const Permutation& pattern, int threads,
                        const std::function<void(Generator&, Acc&)>& on_leaf) {
    Acc whole{};
    if (n == 0) {
        Generator g(n, S);
        g.pattern = &pattern;
        g.leaf = [&](Generator& gg) { on_leaf(gg, whole); };
        g.run();
        return whole;
    }
    Generator probe(n, S);
    auto roots = probe.roots();
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(roots.size())));
    std::vector<Acc> partial(roots.size());
    if (workers == 1) {
        Generator g(n, S);
        g.pattern = &pattern;
        for (size_t i = 0; i < roots.size(); ++i) {
            g.leaf = [&](Generator& gg) { on_leaf(gg, partial[i]); };
            g.run_root(roots[i]);
        }
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                Generator g(n, S);
                g.pattern = &pattern;
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= roots.size()) break;
                    g.leaf = [&, i](Generator& gg) { on_leaf(gg, partial[i]); };
                    g.run_root(roots[i]);
                }
            });
        for (auto& th : pool) th.join();
    }
    for (auto& p : partial) whole += p;
    return whole;
}

struct IntAcc {
    Int v{};
    IntAcc& operator+=(const IntAcc& o) { v += o.v; return *this; }
};

struct CensusAcc {
    std::map<CensusKey, Int> table;
    CensusAcc& operator+=(const CensusAcc& o) {
        for (const auto& [k, c] : o.table) table[k] += c;
        return *this;
    }
};

}  // namespace

Int Census::total() const {
    Int t = 0;
    for (const auto& [k, c] : table) t += c;
    return t;
}

std::string Census::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["pattern"] = pattern;
    j["S"] = allowed;
    j["rows"] = nlohmann::json::array();
    for (const auto& [k, c] : table)
        j["rows"].push_back({{"c1", k.c1}, {"c2", k.c2}, {"c3", k.c3}, {"count", c.str()}});
    return j.dump();
}

Census Census::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Census c;
    c.n = j.at("n").get<int>();
    c.pattern = j.at("pattern").get<std::string>();
    c.allowed = j.at("S").get<std::vector<int>>();
    for (const auto& row : j.at("rows"))
        c.table[{row.at("c1").get<int>(), row.at("c2").get<int>(), row.at("c3").get<int>()}] =
            Int(row.at("count").get<std::string>());
    return c;
}

void for_each_cycle_constrained(int n, const std::set<int>& S,
                                const std::function<void(const Permutation&)>& visit) {
    Generator g(n, S);
    g.leaf = [&](Generator& gg) { visit(gg.current()); };
    g.run();
}

std::vector<Permutation> generate_cycle_constrained(int n, const std::set<int>& S) {
    std::vector<Permutation> out;
    for_each_cycle_constrained(n, S, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

Int count_cycle_constrained(int n, const std::set<int>& S) {
    Int c = 0;
    Generator g(n, S);
    g.leaf = [&](Generator&) { ++c; };
    g.run();
    return c;
}

Int count_avoiders(int n, const std::set<int>& S, const Permutation& pattern, int threads) {
    std::function<void(Generator&, IntAcc&)> on_leaf = [&](Generator& g, IntAcc& acc) {
        if (!g.placed_witnesses_pattern()) ++acc.v;  // full word by now; final safety check
    };
    return parallel_over_roots<IntAcc>(n, S, pattern, threads, on_leaf).v;
}

Census refined_census(int n, const std::set<int>& S, const Permutation& pattern, int threads) {
    std::function<void(Generator&, CensusAcc&)> on_leaf = [&](Generator& g, CensusAcc& acc) {
        if (!g.placed_witnesses_pattern()) ++acc.table[{g.c1, g.c2, g.c3}];
    };
    Census c;
    c.n = n;
    c.pattern = pattern.to_string();
    c.allowed.assign(S.begin(), S.end());
    c.table = parallel_over_roots<CensusAcc>(n, S, pattern, threads, on_leaf).table;
    return c;
}

std::map<std::string, std::vector<Permutation>> group_by_dyck_word(int m) {
    if (m < 1) throw std::invalid_argument("group_by_dyck_word requires m >= 1");
    const Permutation p132({1, 3, 2});
    std::map<std::string, std::vector<Permutation>> groups;
    for_each_cycle_constrained(3 * m, {3}, [&](const Permutation& p) {
        if (!contains_pattern(p, p132)) groups[dyck_word_of(p).word()].push_back(p);
    });
    return groups;
}

int default_thread_count() {
    if (const char* env = std::getenv("CYCLEPAT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

}  // namespace cyclepat
