#pragma once

#include <atomic>
#include <climits>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "crystald/core.hpp"

namespace crystald {

constexpr int kNegInf = INT_MIN;

// '+', '-' or '.' per position.
using Signature = std::string;

Signature reduce_signature(const Signature& s);
// Smallest surviving '+' / largest surviving '-' after reduction, or -1.
int f_site(const Signature& reduced);
int e_site(const Signature& reduced);

// Tensor rule over factors given as (epsilon, phi) in tensor order.
// Factors with kNegInf never act. Returns the acting factor or -1.
int tensor_f(const std::vector<std::pair<int, int>>& ep);
int tensor_e(const std::vector<std::pair<int, int>>& ep);

struct CrystalGraph {
    std::vector<std::string> nodes;
    std::vector<std::tuple<int, int, int>> edges;  // (source, i, target)
};

std::size_t node_budget();

std::string to_dot(const CrystalGraph& g);

// Nodes relabelled in BFS order from node 0, colours ascending.
std::vector<std::tuple<int, int, int>> canonical_form(const CrystalGraph& g);
bool compare_components(const CrystalGraph& a, const CrystalGraph& b);

template <class E>
struct Component {
    std::vector<E> elems;
    CrystalGraph graph;
};

template <class E>
struct CrystalOps {
    int n = 0;
    std::function<std::optional<E>(const E&, int)> f;
    std::function<std::optional<E>(const E&, int)> e;
    std::function<std::string(const E&)> key;
    std::function<Weight(const E&)> wt;
};

template <class E>
Component<E> generate_component(const E& hw, const CrystalOps<E>& ops, int threads = 1,
                                std::size_t budget = 0) {
    if (budget == 0) budget = node_budget();
    Component<E> out;
    std::unordered_map<std::string, int> index;
    auto add = [&](const E& x) -> int {
        std::string k = ops.key(x);
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        if (out.elems.size() >= budget) throw Error("too-large", "component exceeds node budget " + std::to_string(budget));
        int id = static_cast<int>(out.elems.size());
        index.emplace(k, id);
        out.elems.push_back(x);
        out.graph.nodes.push_back(std::move(k));
        return id;
    };
    add(hw);
    std::size_t lo = 0;
    while (lo < out.elems.size()) {
        std::size_t hi = out.elems.size();
        // Expand the frontier [lo, hi); successors are computed in parallel,
        // then merged in a fixed order so node ids are deterministic.
        std::vector<std::vector<std::optional<E>>> succ(hi - lo, std::vector<std::optional<E>>(ops.n));
        auto work = [&](std::size_t a, std::size_t b) {
            for (std::size_t u = a; u < b; ++u)
                for (int i = 1; i <= ops.n; ++i) succ[u - lo][i - 1] = ops.f(out.elems[u], i);
        };
        int t = std::max(1, threads);
        if (t == 1 || hi - lo < 64) {
            work(lo, hi);
        } else {
            std::vector<std::thread> pool;
            std::size_t chunk = (hi - lo + t - 1) / t;
            for (int w = 0; w < t; ++w) {
                std::size_t a = lo + w * chunk, b = std::min(hi, a + chunk);
                if (a < b) pool.emplace_back(work, a, b);
            }
            for (auto& th : pool) th.join();
        }
        for (std::size_t u = lo; u < hi; ++u)
            for (int i = 1; i <= ops.n; ++i) {
                auto& y = succ[u - lo][i - 1];
                if (!y) continue;
                int v = add(*y);
                out.graph.edges.emplace_back(static_cast<int>(u), i, v);
            }
        lo = hi;
    }
    return out;
}

struct MorphismReport {
    bool ok = true;
    std::size_t checked = 0;
    std::string witness;
};

enum class MorphismKind { isomorphism, embedding };

// Checks map(f_i x) = f_i map(x) and map(e_i x) = e_i map(x), weights up to
// `shift`, and injectivity. For embeddings f_i x = null puts no constraint on
// f_i map(x); e_i must match exactly.
template <class E, class T>
MorphismReport verify_morphism(const Component<E>& dom, const CrystalOps<E>& dops,
                               const std::function<T(const E&)>& map, const CrystalOps<T>& tops,
                               const Weight& shift, MorphismKind kind) {
    MorphismReport rep;
    std::vector<T> img;
    img.reserve(dom.elems.size());
    std::unordered_map<std::string, int> seen;
    auto fail = [&](const std::string& w) {
        if (rep.ok) rep.witness = w;
        rep.ok = false;
    };
    for (std::size_t u = 0; u < dom.elems.size(); ++u) {
        img.push_back(map(dom.elems[u]));
        std::string k = tops.key(img.back());
        auto [it, fresh] = seen.emplace(k, static_cast<int>(u));
        if (!fresh) fail("not injective: " + dops.key(dom.elems[u]) + " and " + dops.key(dom.elems[it->second]) + " -> " + k);
        if (!(tops.wt(img.back()) == dops.wt(dom.elems[u]) + shift))
            fail("weight mismatch at " + dops.key(dom.elems[u]));
    }
    for (std::size_t u = 0; u < dom.elems.size() && rep.ok; ++u) {
        const E& x = dom.elems[u];
        for (int i = 1; i <= dops.n; ++i) {
            ++rep.checked;
            auto fx = dops.f(x, i);
            auto fy = tops.f(img[u], i);
            if (fx) {
                if (!fy || tops.key(map(*fx)) != tops.key(*fy))
                    fail("f_" + std::to_string(i) + " fails at " + dops.key(x) + " -> " + (fy ? tops.key(*fy) : "null") +
                         " expected " + tops.key(map(*fx)));
            } else if (kind == MorphismKind::isomorphism && fy) {
                fail("f_" + std::to_string(i) + " null in domain only at " + dops.key(x));
            }
            auto ex = dops.e(x, i);
            auto ey = tops.e(img[u], i);
            if (ex.has_value() != ey.has_value() || (ex && tops.key(map(*ex)) != tops.key(*ey)))
                fail("e_" + std::to_string(i) + " fails at " + dops.key(x) + " -> " + (ey ? tops.key(*ey) : "null"));
            if (!rep.ok) break;
        }
    }
    return rep;
}

}  // namespace crystald
