#include "crystald/kn.hpp"

#include <algorithm>
#include <functional>

#include "crystald/iso.hpp"
#include "crystald/spinor.hpp"

namespace crystald {

std::vector<int> kn_column_heights(const DominantWeight& lambda) {
    Skeleton sk = shape_decomposition(lambda);
    std::vector<int> h;
    int n = lambda.n();
    for (int k = static_cast<int>(sk.kinds.size()) - 2; k >= 0; --k)
        h.push_back(sk.kinds[k] == Kind::TBar0 ? n : n - sk.as[k]);
    return h;
}

std::optional<Letter> letter_f(Letter x, int i, int n) {
    if (i < n) {
        if (x == i) return i + 1;
        if (x == -(i + 1)) return -i;
    } else {
        if (x == n - 1) return -n;
        if (x == n) return -(n - 1);
    }
    return std::nullopt;
}

std::optional<Letter> letter_e(Letter x, int i, int n) {
    if (i < n) {
        if (x == i + 1) return i;
        if (x == -i) return -(i + 1);
    } else {
        if (x == -n) return n - 1;
        if (x == -(n - 1)) return n;
    }
    return std::nullopt;
}

Weight letter_weight(Letter x, int n) {
    Weight w(n);
    w.d[std::abs(x) - 1] = x > 0 ? 2 : -2;
    return w;
}

Column spin_column(const std::vector<bool>& barred) {
    int n = static_cast<int>(barred.size());
    Column c;
    for (int i = 1; i <= n; ++i)
        if (!barred[i - 1]) c.entries.push_back(i);
    for (int i = n; i >= 1; --i)
        if (barred[i - 1]) c.entries.push_back(-i);
    return c;
}

std::vector<bool> spin_barred(const Column& c, int n) {
    std::vector<bool> b(n, false);
    for (Letter x : c.entries)
        if (x < 0) b[-x - 1] = true;
    return b;
}

namespace {

struct View {
    const KNTableau& t;
    int cols() const { return static_cast<int>(t.columns.size()); }
    int height(int j) const { return t.columns[j - 1].ht(); }
    // T(i, j): row i from the bottom, column j from the right.
    bool has(int i, int j) const { return j >= 1 && j <= cols() && i >= 1 && i <= height(j); }
    Letter at(int i, int j) const { return t.columns[j - 1].bot(i); }
};

std::string cell(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

void check_pair_conditions(const View& v, int j, int n, bool check_d7, KNReport& rep) {
    auto add = [&](const char* clause, const std::string& w) {
        rep.ok = false;
        rep.violations.push_back({clause, w});
    };
    auto isn = [&](int i, int jj) { return v.has(i, jj) && std::abs(v.at(i, jj)) == n; };
    int hj = v.height(j), hk = v.height(j + 1);
    // (d-4)
    for (int p = 1; p <= hj; ++p) {
        Letter xp = v.at(p, j);
        if (xp >= 0) continue;
        int a = -xp;
        for (int form = 0; form < 2; ++form) {
            int qc = form == 0 ? j : j + 1;
            int hq = v.height(qc);
            for (int q = (form == 0 ? p : 1); q <= hq; ++q) {
                if (form == 1 && q < p) continue;
                Letter xq = v.at(q, qc);
                if (xq >= 0) continue;
                int b = -xq;
                if (!(a <= b && b < n)) continue;
                for (int r = q + 1; r <= hq; ++r) {
                    if (v.at(r, qc) != b) continue;
                    for (int s = r; s <= hk; ++s)
                        if (v.at(s, j + 1) == a && (q - p) + (s - r) >= b - a)
                            add("d-4", cell(p, j) + cell(q, qc) + cell(r, qc) + cell(s, j + 1));
                }
            }
        }
    }
    for (int p = 1; p <= hj; ++p)
        for (int s = p + 1; s <= hk; ++s) {
            // (d-6)
            if (isn(p, j) && isn(s, j + 1)) add("d-6", cell(p, j) + cell(s, j + 1));
            Letter xp = v.at(p, j);
            if (xp >= 0 || v.at(s, j + 1) != -xp) continue;
            int a = -xp;
            // (d-5)
            bool run = false;
            for (int q = p; q < s && !run; ++q)
                for (int jj : {j, j + 1})
                    if (isn(q, jj) && isn(q + 1, jj) && v.at(q, jj) != v.at(q + 1, jj)) run = true;
            if (run && s - p > n - a) add("d-5", cell(p, j) + cell(s, j + 1));
            // (d-7)
            if (check_d7 && a < n) {
                bool hit = false;
                for (int q = p; q <= s && !hit; ++q)
                    for (int r = q + 1; r <= s && !hit; ++r)
                        if (isn(q, j + 1) && isn(r, j)) hit = true;
                if (hit && s - p >= n - a) add("d-7", cell(p, j) + cell(s, j + 1));
            }
        }
}

}  // namespace

KNReport validate_kn(const KNTableau& t, bool check_d7) {
    int n = t.n;
    const auto& lam = t.lambda;
    if (lam.n() != n) throw Error("shape-error", "lambda has the wrong rank");
    std::vector<int> want = kn_column_heights(lam);
    if (lam.half_integral()) want.insert(want.begin(), n);
    if (t.spin != lam.half_integral() || want.size() != t.columns.size())
        throw Error("shape-error", "tableau does not have shape lambda^pi");
    for (std::size_t k = 0; k < want.size(); ++k)
        if (t.columns[k].ht() != want[k]) throw Error("shape-error", "column " + std::to_string(k + 1) + " has the wrong height");

    KNReport rep;
    auto add = [&](const char* clause, const std::string& w) {
        rep.ok = false;
        rep.violations.push_back({clause, w});
    };
    View v{t};
    int m = v.cols();
    for (int j = 1; j <= m; ++j)
        for (int i = 1; i <= v.height(j); ++i) {
            Letter x = v.at(i, j);
            if (x == 0 || std::abs(x) > n) add("letter", cell(i, j));
        }
    if (!rep.ok) return rep;
    // (1): upward strictly smaller or incomparable; rows weakly increase leftward-to-rightward.
    for (int j = 1; j <= m; ++j) {
        for (int i = 1; i < v.height(j); ++i) {
            Ord o = compare(v.at(i + 1, j), v.at(i, j), n);
            if (o != Ord::less && o != Ord::incomparable) add("1-column", cell(i, j));
        }
        if (j < m)
            for (int i = 1; i <= v.height(j + 1); ++i)
                if (!leq(v.at(i, j + 1), v.at(i, j), n)) add("1-row", cell(i, j + 1));
    }
    // (3)
    if (t.spin) {
        std::vector<int> seen(n + 1, 0);
        for (Letter x : t.columns[0].entries) ++seen[std::abs(x)];
        for (int i = 1; i <= n; ++i)
            if (seen[i] != 1) add("3", "spin row " + std::to_string(i));
    }
    for (int j = 1; j <= m; ++j) {
        int hj = v.height(j);
        // (d-1)
        for (int p = 1; p <= hj; ++p)
            for (int q = p + 1; q <= hj; ++q)
                if (v.at(p, j) < 0 && v.at(q, j) == -v.at(p, j) && (q - p) + v.at(q, j) <= hj)
                    add("d-1", cell(p, j) + cell(q, j));
        // (d-2), (d-3)
        if (hj == n) {
            bool neg = lam.d[n - 1] < 0;
            for (int k = 1; k <= hj; ++k) {
                Letter x = v.at(k, j);
                if (x == n && (k % 2 == 1) == neg) add(neg ? "d-3" : "d-2", cell(k, j));
                if (x == -n && (k % 2 == 0) == neg) add(neg ? "d-3" : "d-2", cell(k, j));
            }
        }
        if (j < m) check_pair_conditions(v, j, n, check_d7, rep);
    }
    return rep;
}

namespace {

struct Site {
    int col;
    int row;  // -1 for the whole spin column
};

void kn_signature(const KNTableau& t, int i, Signature& s, std::vector<Site>& sites) {
    int n = t.n;
    for (int k = 0; k < static_cast<int>(t.columns.size()); ++k) {
        const Column& c = t.columns[k];
        if (k == 0 && t.spin) {
            auto b = spin_barred(c, n);
            bool phi, eps;
            if (i < n) {
                phi = !b[i - 1] && b[i];
                eps = b[i - 1] && !b[i];
            } else {
                phi = !b[n - 2] && !b[n - 1];
                eps = b[n - 2] && b[n - 1];
            }
            if (phi || eps) {
                s += eps ? '-' : '+';
                sites.push_back({0, -1});
            }
            continue;
        }
        for (int r = 0; r < c.ht(); ++r) {
            Letter x = c.entries[r];
            if (letter_f(x, i, n)) s += '+';
            else if (letter_e(x, i, n)) s += '-';
            else continue;
            sites.push_back({k, r});
        }
    }
}

std::optional<KNTableau> kn_act(const KNTableau& t, int i, bool raise) {
    Signature s;
    std::vector<Site> sites;
    kn_signature(t, i, s, sites);
    Signature red = reduce_signature(s);
    int k = raise ? e_site(red) : f_site(red);
    if (k < 0) return std::nullopt;
    KNTableau out = t;
    Site st = sites[k];
    int n = t.n;
    if (st.row < 0) {
        auto b = spin_barred(t.columns[0], n);
        if (i < n) {
            b[i - 1] = !raise;
            b[i] = raise;
        } else {
            b[n - 2] = b[n - 1] = !raise;
        }
        out.columns[0] = spin_column(b);
    } else {
        Letter& x = out.columns[st.col].entries[st.row];
        x = raise ? *letter_e(x, i, n) : *letter_f(x, i, n);
    }
    return out;
}

}  // namespace

std::optional<KNTableau> kn_f(const KNTableau& t, int i) { return kn_act(t, i, false); }
std::optional<KNTableau> kn_e(const KNTableau& t, int i) { return kn_act(t, i, true); }

Weight kn_weight(const KNTableau& t) {
    Weight w(t.n);
    for (int k = 0; k < static_cast<int>(t.columns.size()); ++k)
        for (Letter x : t.columns[k].entries) {
            if (k == 0 && t.spin) w.d[std::abs(x) - 1] += x > 0 ? 1 : -1;
            else w += letter_weight(x, t.n);
        }
    return w;
}

KNTableau kn_highest(const DominantWeight& lambda) { return phi_lambda(highest_element(lambda)); }

std::string kn_key(const KNTableau& t) {
    std::string s;
    for (std::size_t k = 0; k < t.columns.size(); ++k) {
        if (k) s += " ";
        if (k == 0 && t.spin) s += "s";
        s += column_str(t.columns[k]);
    }
    return s;
}

CrystalOps<KNTableau> kn_ops(int n) {
    CrystalOps<KNTableau> ops;
    ops.n = n;
    ops.f = kn_f;
    ops.e = kn_e;
    ops.key = kn_key;
    ops.wt = kn_weight;
    return ops;
}

std::vector<KNTableau> kn_brute_force(const DominantWeight& lambda, bool check_d7) {
    int n = lambda.n();
    std::vector<int> heights = kn_column_heights(lambda);
    std::vector<Letter> alphabet;
    for (int i = 1; i <= n; ++i) alphabet.push_back(i);
    for (int i = n; i >= 1; --i) alphabet.push_back(-i);

    std::vector<std::vector<Column>> choices;
    if (lambda.half_integral()) {
        bool plus = lambda.d[n - 1] > 0;
        std::vector<Column> sp;
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<bool> b(n);
            int cnt = 0;
            for (int i = 0; i < n; ++i) cnt += (b[i] = (mask >> i) & 1);
            if ((cnt % 2 == 0) == plus) sp.push_back(spin_column(b));
        }
        choices.push_back(sp);
    }
    for (int h : heights) {
        std::vector<Column> cols;
        Column cur;
        std::function<void()> rec = [&]() {
            if (cur.ht() == h) {
                cols.push_back(cur);
                return;
            }
            for (Letter x : alphabet) {
                if (!cur.empty()) {
                    Ord o = compare(cur.entries.back(), x, n);
                    if (o != Ord::less && o != Ord::incomparable) continue;
                }
                cur.entries.push_back(x);
                rec();
                cur.entries.pop_back();
            }
        };
        rec();
        choices.push_back(cols);
    }
    std::vector<KNTableau> out;
    KNTableau t;
    t.n = n;
    t.lambda = lambda;
    t.spin = lambda.half_integral();
    std::function<void(std::size_t)> build = [&](std::size_t k) {
        if (k == choices.size()) {
            if (validate_kn(t, check_d7).ok) out.push_back(t);
            return;
        }
        for (const Column& c : choices[k]) {
            if (k > 0) {
                const Column& right = t.columns[k - 1];
                bool ok = true;
                for (int i = 1; i <= c.ht() && ok; ++i) ok = leq(c.bot(i), right.bot(i), n);
                if (!ok) continue;
            }
            t.columns.push_back(c);
            build(k + 1);
            t.columns.pop_back();
        }
    };
    build(0);
    return out;
}

}  // namespace crystald
