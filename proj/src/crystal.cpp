#include "crystald/crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace crystald {

Signature reduce_signature(const Signature& s) {
    Signature r = s;
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == '+') {
            open.push_back(i);
        } else if (r[i] == '-' && !open.empty()) {
            r[open.back()] = '.';
            r[i] = '.';
            open.pop_back();
        }
    }
    return r;
}

int f_site(const Signature& red) {
    for (std::size_t i = 0; i < red.size(); ++i)
        if (red[i] == '+') return static_cast<int>(i);
    return -1;
}

int e_site(const Signature& red) {
    for (std::size_t i = red.size(); i-- > 0;)
        if (red[i] == '-') return static_cast<int>(i);
    return -1;
}

namespace {

std::pair<Signature, std::vector<int>> expand(const std::vector<std::pair<int, int>>& ep) {
    Signature s;
    std::vector<int> owner;
    for (std::size_t k = 0; k < ep.size(); ++k) {
        auto [e, p] = ep[k];
        if (e == kNegInf || p == kNegInf) continue;
        for (int j = 0; j < e; ++j) s += '-', owner.push_back(static_cast<int>(k));
        for (int j = 0; j < p; ++j) s += '+', owner.push_back(static_cast<int>(k));
    }
    return {s, owner};
}

}  // namespace

int tensor_f(const std::vector<std::pair<int, int>>& ep) {
    auto [s, owner] = expand(ep);
    int i = f_site(reduce_signature(s));
    return i < 0 ? -1 : owner[i];
}

int tensor_e(const std::vector<std::pair<int, int>>& ep) {
    auto [s, owner] = expand(ep);
    int i = e_site(reduce_signature(s));
    return i < 0 ? -1 : owner[i];
}

std::size_t node_budget() {
    if (const char* v = std::getenv("CRYSTALD_BUDGET")) {
        try {
            long long b = std::stoll(v);
            if (b > 0) return static_cast<std::size_t>(b);
        } catch (...) {
        }
        throw Error("usage", std::string("bad CRYSTALD_BUDGET '") + v + "'");
    }
    return 1000000;
}

std::string to_dot(const CrystalGraph& g) {
    std::string s = "digraph crystal {\n";
    for (std::size_t u = 0; u < g.nodes.size(); ++u)
        s += "  n" + std::to_string(u) + " [label=\"" + g.nodes[u] + "\"];\n";
    for (auto [u, i, v] : g.edges)
        s += "  n" + std::to_string(u) + " -> n" + std::to_string(v) + " [label=\"" + std::to_string(i) + "\"];\n";
    return s + "}\n";
}

std::vector<std::tuple<int, int, int>> canonical_form(const CrystalGraph& g) {
    std::map<std::pair<int, int>, int> out;
    for (auto [u, i, v] : g.edges) out[{u, i}] = v;
    std::vector<int> label(g.nodes.size(), -1);
    std::deque<int> q;
    if (!g.nodes.empty()) {
        label[0] = 0;
        q.push_back(0);
    }
    int next = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (auto it = out.lower_bound({u, 0}); it != out.end() && it->first.first == u; ++it) {
            int v = it->second;
            if (label[v] < 0) {
                label[v] = next++;
                q.push_back(v);
            }
        }
    }
    std::vector<std::tuple<int, int, int>> e;
    for (auto [u, i, v] : g.edges) e.emplace_back(label[u], i, label[v]);
    std::sort(e.begin(), e.end());
    return e;
}

bool compare_components(const CrystalGraph& a, const CrystalGraph& b) {
    return a.nodes.size() == b.nodes.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace crystald
