#include "crystald/oracle.hpp"

#include <algorithm>
#include <set>

#include "crystald/kn.hpp"
#include "crystald/spinor.hpp"

namespace crystald {

BigInt weyl_dim(const DominantWeight& lambda) {
    int n = lambda.n();
    // everything doubled; the factor 2 cancels in each quotient
    std::vector<long> lr(n), r(n);
    for (int i = 0; i < n; ++i) {
        r[i] = 2L * (n - 1 - i);
        lr[i] = lambda.d[i] + r[i];
    }
    BigInt num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= (lr[i] - lr[j]) * (lr[i] + lr[j]);
            den *= (r[i] - r[j]) * (r[i] + r[j]);
        }
    if (num % den != 0) throw Error("not-dominant", "Weyl quotient is not integral for " + lambda.str());
    return num / den;
}

TableauRows insertion_tableau(const std::vector<Letter>& w) {
    TableauRows p;
    for (Letter x : w) {
        Letter v = x;
        for (std::size_t r = 0;; ++r) {
            if (r == p.size()) {
                p.push_back({v});
                break;
            }
            auto it = std::upper_bound(p[r].begin(), p[r].end(), v);
            if (it == p[r].end()) {
                p[r].push_back(v);
                break;
            }
            std::swap(*it, v);
        }
    }
    return p;
}

TableauRows rectify_jdt(const std::vector<Letter>& w) {
    int k = static_cast<int>(w.size());
    SlideGrid g;
    std::set<std::pair<int, int>> inner;
    for (int i = 0; i < k; ++i) {
        int r = k - 1 - i;
        g[{r, i}] = w[i];
        for (int c = 0; c < i; ++c) inner.insert({r, c});
    }
    while (!inner.empty()) {
        // an inner corner: nothing of the inner shape below or to the right
        std::pair<int, int> hole{-1, -1};
        for (auto it = inner.rbegin(); it != inner.rend(); ++it) {
            auto [r, c] = *it;
            if (!inner.count({r + 1, c}) && !inner.count({r, c + 1})) {
                hole = *it;
                break;
            }
        }
        inner.erase(hole);
        jdt_slide_grid(g, hole.first, hole.second);
    }
    TableauRows rows;
    for (const auto& [rc, v] : g) {
        if (static_cast<int>(rows.size()) <= rc.first) rows.resize(rc.first + 1);
        if (static_cast<int>(rows[rc.first].size()) != rc.second) throw Error("shape-error", "rectification left a gap");
        rows[rc.first].push_back(v);
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return rows;
}

bool knuth_equivalent(const std::vector<Letter>& a, const std::vector<Letter>& b) {
    return insertion_tableau(a) == insertion_tableau(b);
}

bool knuth_equivalent_jdt(const std::vector<Letter>& a, const std::vector<Letter>& b) {
    return rectify_jdt(a) == rectify_jdt(b);
}

const std::vector<std::string>& smoke_list() {
    static const std::vector<std::string> v{"1,0,0,0",         "1,1,0,0",          "1,1,1,0",
                                            "2,0,0,0",         "2,1,0,0",          "1/2,1/2,1/2,1/2",
                                            "1/2,1/2,1/2,-1/2", "3/2,1/2,1/2,1/2", "3/2,1/2,1/2,-1/2",
                                            "1,1,1,-1",        "2,1,1,-1"};
    return v;
}

DimReport dimension_check(const DominantWeight& lambda, int threads) {
    DimReport rep;
    rep.lambda = lambda.str();
    rep.predicted = weyl_dim(lambda);
    rep.spinor = generate_component(highest_element(lambda), spinor_ops(lambda.n()), threads).elems.size();
    rep.kn = generate_component(kn_highest(lambda), kn_ops(lambda.n()), threads).elems.size();
    rep.match = rep.predicted == rep.spinor && rep.predicted == rep.kn;
    return rep;
}

}  // namespace crystald
