#include "cyclepat/render.hpp"

#include <algorithm>
#include <vector>

namespace cyclepat {

namespace {

struct Arc {
    int a, b;
    int cycle_len;
};

std::vector<Arc> classified_arcs(const Permutation& p) {
    std::vector<Arc> arcs;
    for (const auto& c : decompose(p).cycles) {
        std::vector<int> s(c.begin(), c.end());
        std::sort(s.begin(), s.end());
        for (size_t i = 0; i + 1 < s.size(); ++i)
            arcs.push_back({s[i], s[i + 1], static_cast<int>(c.size())});
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    return arcs;
}

}  // namespace

std::string render_svg(const Permutation& p) {
    const int n = p.size();
    const int step = 40, margin = 30, baseline = 160;
    const int width = 2 * margin + step * std::max(0, n - 1);
    auto xpos = [&](int v) { return margin + (v - 1) * step; };
    auto arcs = classified_arcs(p);
    std::vector<char> is_fixed(n + 1, 0);
    for (const auto& c : decompose(p).cycles)
        if (c.size() == 1) is_fixed[c[0]] = 1;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(baseline + 40) + "\">\n";
    svg += "  <line x1=\"" + std::to_string(margin - 15) + "\" y1=\"" + std::to_string(baseline) +
           "\" x2=\"" + std::to_string(width - margin + 15) + "\" y2=\"" + std::to_string(baseline) +
           "\" stroke=\"black\"/>\n";
    for (const auto& arc : arcs) {
        int x1 = xpos(arc.a), x2 = xpos(arc.b);
        int r = (x2 - x1) / 2;
        const char* color = arc.cycle_len == 2 ? "blue" : "red";
        svg += "  <path class=\"arc cycle" + std::to_string(arc.cycle_len) + "\" d=\"M " +
               std::to_string(x1) + " " + std::to_string(baseline) + " A " + std::to_string(r) +
               " " + std::to_string(r) + " 0 0 1 " + std::to_string(x2) + " " +
               std::to_string(baseline) + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
    }
    for (int v = 1; v <= n; ++v) {
        svg += "  <circle class=\"point" + std::string(is_fixed[v] ? " fixed" : "") + "\" cx=\"" +
               std::to_string(xpos(v)) + "\" cy=\"" + std::to_string(baseline) +
               "\" r=\"4\" fill=\"" + (is_fixed[v] ? "gray" : "black") + "\"/>\n";
        svg += "  <text x=\"" + std::to_string(xpos(v)) + "\" y=\"" + std::to_string(baseline + 20) +
               "\" text-anchor=\"middle\" font-size=\"12\">" + std::to_string(v) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_ascii(const Permutation& p) {
    const int n = p.size();
    auto arcs = classified_arcs(p);
    // nesting depth decides each arc's row
    std::vector<int> level(arcs.size(), 0);
    int max_level = 0;
    for (size_t i = 0; i < arcs.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (arcs[j].a <= arcs[i].a && arcs[i].b <= arcs[j].b && level[j] >= level[i])
                level[i] = level[j] + 1;
        max_level = std::max(max_level, level[i]);
    }
    // positions: value v at column 2(v-1)
    auto col = [](int v) { return 2 * (v - 1); };
    std::vector<std::string> rows(max_level + 1, std::string(n > 0 ? col(n) + 1 : 0, ' '));
    for (size_t i = 0; i < arcs.size(); ++i) {
        std::string& row = rows[level[i]];
        row[col(arcs[i].a)] = row[col(arcs[i].a)] == '\\' ? 'v' : '/';
        row[col(arcs[i].b)] = '\\';
        for (int c = col(arcs[i].a) + 1; c < col(arcs[i].b); ++c)
            if (row[c] == ' ') row[c] = '-';
    }
    std::string out;
    for (const auto& row : rows) out += row + "\n";  // outermost arcs on top
    for (int v = 1; v <= n; ++v) out += v > 1 ? " *" : "*";
    out += "\n";
    for (int v = 1; v <= n; ++v) out += (v > 1 ? " " : "") + std::to_string(v % 10);
    out += "\n";
    out += "arcs:";
    for (const auto& arc : arcs)
        out += " (" + std::to_string(arc.a) + "," + std::to_string(arc.b) + ")";
    out += "\n";
    return out;
}

}  // namespace cyclepat
