#include "crystald/tableau.hpp"

#include <algorithm>

namespace crystald {

Column Column::body() const {
    return Column(std::vector<Letter>(entries.begin(), entries.begin() + body_ht()), 0);
}

Column Column::tail_part() const {
    return Column(std::vector<Letter>(entries.begin() + body_ht(), entries.end()), tail);
}

std::vector<Letter> word(const std::vector<Column>& cols) {
    std::vector<Letter> w;
    for (const auto& c : cols) w.insert(w.end(), c.entries.begin(), c.entries.end());
    return w;
}

std::vector<Letter> word(const ProfileTableau& t) { return word(t.columns); }

bool column_strict(const Column& c, int n) {
    for (int i = 1; i < c.ht(); ++i) {
        Ord o = compare(c.entries[i - 1], c.entries[i], n);
        if (o != Ord::less) return false;
    }
    return true;
}

static Letter at_level(const Column& c, int y, bool& ok) {
    int idx = c.body_ht() - 1 - y;
    ok = idx >= 0 && idx < c.ht();
    return ok ? c.entries[idx] : 0;
}

bool semistandard_along_L(const std::vector<Column>& cols, int n) {
    for (const auto& c : cols)
        if (!column_strict(c, n)) return false;
    for (std::size_t k = 0; k + 1 < cols.size(); ++k) {
        const Column& right = cols[k];
        const Column& left = cols[k + 1];
        int lo = std::max(-left.tail, -right.tail);
        int hi = std::min(left.body_ht(), right.body_ht()) - 1;
        for (int y = lo; y <= hi; ++y) {
            bool a, b;
            Letter l = at_level(left, y, a), r = at_level(right, y, b);
            if (a && b && !leq(l, r, n)) return false;
        }
    }
    return true;
}

bool semistandard_along_L(const ProfileTableau& t) { return semistandard_along_L(t.columns, t.n); }

namespace {

using Grid = SlideGrid;

Grid to_grid(const ProfileTableau& t) {
    Grid g;
    for (int k = 0; k < static_cast<int>(t.columns.size()); ++k) {
        const Column& c = t.columns[k];
        for (int i = 0; i < c.ht(); ++i) {
            int y = c.body_ht() - 1 - i;
            g[{-y, -k}] = c.entries[i];
        }
    }
    return g;
}

ProfileTableau from_grid(const Grid& g, int n, int ncols) {
    ProfileTableau t;
    t.n = n;
    t.columns.assign(ncols, Column());
    for (const auto& [rc, v] : g) {
        int k = -rc.second;
        if (k < 0 || k >= ncols) throw Error("invalid-hole", "slide left the column range");
        t.columns[k].entries.push_back(v);
        if (rc.first >= 1) ++t.columns[k].tail;
    }
    for (int k = 0; k < ncols; ++k) {
        std::vector<int> rows;
        for (const auto& [rc, v] : g)
            if (-rc.second == k) rows.push_back(rc.first);
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i] != rows[i - 1] + 1) throw Error("invalid-hole", "slide produced a gapped column");
        if (!rows.empty() && (rows.front() > 1 || rows.back() < 0))
            throw Error("invalid-hole", "slide moved a column off L");
    }
    return t;
}

bool has(const Grid& g, int r, int c) { return g.count({r, c}) > 0; }

}  // namespace

void jdt_slide_grid(SlideGrid& g, int r, int c) {
    if (has(g, r, c)) throw Error("invalid-hole", "hole is occupied");
    bool below = has(g, r + 1, c), right = has(g, r, c + 1);
    bool above = has(g, r - 1, c), left = has(g, r, c - 1);
    if ((below || right) && !above && !left) {
        for (;;) {
            bool b = has(g, r + 1, c), rt = has(g, r, c + 1);
            if (!b && !rt) break;
            bool take_below = b && (!rt || g[{r + 1, c}] <= g[{r, c + 1}]);
            if (take_below) {
                g[{r, c}] = g[{r + 1, c}];
                g.erase({r + 1, c});
                ++r;
            } else {
                g[{r, c}] = g[{r, c + 1}];
                g.erase({r, c + 1});
                ++c;
            }
        }
    } else if ((above || left) && !below && !right) {
        for (;;) {
            bool a = has(g, r - 1, c), l = has(g, r, c - 1);
            if (!a && !l) break;
            bool take_above = a && (!l || g[{r - 1, c}] >= g[{r, c - 1}]);
            if (take_above) {
                g[{r, c}] = g[{r - 1, c}];
                g.erase({r - 1, c});
                --r;
            } else {
                g[{r, c}] = g[{r, c - 1}];
                g.erase({r, c - 1});
                --c;
            }
        }
    } else {
        throw Error("invalid-hole", "hole is not a corner of the skew region");
    }
}

ProfileTableau jdt_slide(const ProfileTableau& t, Cell hole) {
    for (const auto& c : t.columns)
        for (Letter x : c.entries)
            if (x > 0) throw Error("invalid-hole", "sliding is defined over barred letters only");
    Grid g = to_grid(t);
    jdt_slide_grid(g, -hole.level, -hole.column);
    return from_grid(g, t.n, static_cast<int>(t.columns.size()));
}

bool is_pi_shape(const ProfileTableau& t) {
    for (std::size_t k = 0; k < t.columns.size(); ++k) {
        if (t.columns[k].tail != 0) return false;
        if (k > 0 && t.columns[k].ht() > t.columns[k - 1].ht()) return false;
    }
    return true;
}

InsertResult reverse_column_insert(const ProfileTableau& t, Letter a) {
    InsertResult res{t, 0};
    auto& cols = res.tableau.columns;
    while (!cols.empty() && cols.back().empty()) cols.pop_back();
    Letter v = a;
    for (int k = 0;; ++k) {
        if (k == static_cast<int>(cols.size())) {
            cols.push_back(Column({v}));
            res.column = k;
            return res;
        }
        auto& e = cols[k].entries;
        if (v < e.front()) {
            e.insert(e.begin(), v);
            res.column = k;
            return res;
        }
        auto it = std::upper_bound(e.begin(), e.end(), v);
        --it;
        std::swap(*it, v);
    }
}

std::pair<ProfileTableau, Letter> reverse_column_eject(const ProfileTableau& t, int column) {
    ProfileTableau out = t;
    auto& cols = out.columns;
    if (column < 0 || column >= static_cast<int>(cols.size()) || cols[column].empty())
        throw Error("invalid-hole", "no cell to eject");
    Letter v = cols[column].entries.front();
    cols[column].entries.erase(cols[column].entries.begin());
    for (int m = column - 1; m >= 0; --m) {
        auto& e = cols[m].entries;
        auto it = std::lower_bound(e.begin(), e.end(), v);
        if (it == e.end()) throw Error("shape-error", "ejection path broke");
        std::swap(*it, v);
    }
    while (!cols.empty() && cols.back().empty()) cols.pop_back();
    return {out, v};
}

std::string column_str(const Column& c) {
    std::string s = "[";
    for (int i = 0; i < c.ht(); ++i) {
        if (i) s += (i == c.body_ht() ? "|" : ",");
        else if (c.body_ht() == 0) s += "|";
        s += letter_str(c.entries[i]);
    }
    return s + "]";
}

std::string profile_str(const ProfileTableau& t) {
    std::string s;
    for (std::size_t k = 0; k < t.columns.size(); ++k) {
        if (k) s += " ";
        s += column_str(t.columns[k]);
    }
    return s;
}

}  // namespace crystald
