#include "crystald/lusztig.hpp"

#include <algorithm>

#include "crystald/iso.hpp"

namespace crystald {

Weight Root::weight(int n) const { return sum ? eps(i, n) + eps(j, n) : eps(i, n) - eps(j, n); }

std::string Root::str() const {
    return "e" + std::to_string(i) + (sum ? "+" : "-") + "e" + std::to_string(j);
}

int RootOrder::index(int i, int j, bool sum) const {
    if (sum) {
        // j descending, then i descending
        int k = 0;
        for (int jj = n; jj > j; --jj) k += jj - 1;
        return k + (j - 1 - i);
    }
    int k = M();
    for (int ii = 1; ii < i; ++ii) k += n - ii;
    return k + (j - i - 1);
}

RootOrder convex_order(int n) {
    if (n < 4) throw Error("rank-error", "n must be at least 4");
    RootOrder o;
    o.n = n;
    for (int j = n; j >= 2; --j)
        for (int i = j - 1; i >= 1; --i) o.beta.push_back({i, j, true});
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) o.beta.push_back({i, j, false});
    return o;
}

bool biword_less(const std::pair<Letter, Letter>& x, const std::pair<Letter, Letter>& y) {
    return x.first < y.first || (x.first == y.first && x.second > y.second);
}

void sort_biword(Biword& w) { std::stable_sort(w.begin(), w.end(), biword_less); }

namespace {

ProfileTableau compact(const ProfileTableau& t) {
    ProfileTableau out;
    out.n = t.n;
    for (const auto& c : t.columns)
        if (!c.empty()) out.columns.push_back(Column(c.entries, 0));
    return out;
}

void check_delta_pi(const ProfileTableau& t) {
    for (std::size_t k = 0; k < t.columns.size(); ++k) {
        int h = t.columns[k].ht();
        if (h % 2) throw Error("shape-error", "body column " + std::to_string(k) + " has odd height");
        if (k && h > t.columns[k - 1].ht()) throw Error("shape-error", "body is not of shape delta^pi");
        if (!column_strict(t.columns[k], t.n)) throw Error("shape-error", "body column is not strict");
    }
}

}  // namespace

Biword rsk_biword(const ProfileTableau& body) {
    ProfileTableau t = compact(body);
    check_delta_pi(t);
    Biword w;
    while (!t.columns.empty()) {
        int best = -1;
        Letter x = 0;
        for (int k = 0; k < static_cast<int>(t.columns.size()); ++k)
            for (Letter v : t.columns[k].entries)
                if (best < 0 || v < x || (v == x && k > best)) best = k, x = v;
        auto& col = t.columns[best].entries;
        if (col.front() != x || col.size() < 2) throw Error("shape-error", "smallest entry is not on top of an even column");
        col.erase(col.begin());
        auto [t2, z] = reverse_column_eject(t, best);
        t = std::move(t2);
        if (!(x < z)) throw Error("shape-error", "biword pair is not strict");
        w.emplace_back(x, z);
    }
    return w;
}

std::vector<int> biword_to_cJ(const Biword& w, int n) {
    RootOrder o = convex_order(n);
    std::vector<int> c(o.N(), 0);
    for (auto [a, b] : w) {
        if (!(a < b) || a >= 0 || b >= 0) throw Error("shape-error", "bad biword pair");
        ++c[o.index(-b, -a, true)];
    }
    return c;
}

Biword cJ_to_biword(const std::vector<int>& c, int n) {
    RootOrder o = convex_order(n);
    if (static_cast<int>(c.size()) != o.N()) throw Error("support-error", "datum has wrong length");
    Biword w;
    for (int k = 0; k < o.N(); ++k) {
        if (c[k] < 0) throw Error("support-error", "negative multiplicity");
        if (!c[k]) continue;
        if (!o.beta[k].sum) throw Error("support-error", "B^J datum has support in Phi_J");
        for (int m = 0; m < c[k]; ++m) w.emplace_back(-o.beta[k].j, -o.beta[k].i);
    }
    sort_biword(w);
    return w;
}

std::vector<int> rsk_burge(const ProfileTableau& body) { return biword_to_cJ(rsk_biword(body), body.n); }

ProfileTableau rsk_burge_inverse(const std::vector<int>& c, int n) {
    Biword w = cJ_to_biword(c, n);
    ProfileTableau t;
    t.n = n;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        auto r = reverse_column_insert(t, it->second);
        t = std::move(r.tableau);
        auto& e = t.columns[r.column].entries;
        if (!(it->first < e.front())) throw Error("shape-error", "biword does not come from a delta^pi tableau");
        e.insert(e.begin(), it->first);
    }
    return t;
}

Rows tail_rows(const VermaElement& v) {
    Rows rows;
    for (int k = static_cast<int>(v.columns.size()) - 1; k >= 0; --k) {
        Column t = v.columns[k].tail_part();
        for (int r = 0; r < t.ht(); ++r) {
            if (static_cast<int>(rows.size()) <= r) rows.emplace_back();
            rows[r].push_back(t.entries[r]);
        }
    }
    return rows;
}

std::vector<int> c_J(const Rows& rows, int n) {
    RootOrder o = convex_order(n);
    std::vector<int> c(o.N(), 0);
    for (int k = 1; k <= static_cast<int>(rows.size()); ++k) {
        int j = n - k + 1;
        for (Letter x : rows[k - 1]) {
            int i = -x;
            if (x > 0 || i > j) throw Error("shape-error", "tail is not semistandard over [n-bar]");
            if (i < j) ++c[o.index(i, j, false)];
        }
    }
    return c;
}

Rows c_J_inverse(const std::vector<int>& c, const Partition& mu, int n) {
    RootOrder o = convex_order(n);
    if (static_cast<int>(c.size()) != o.N()) throw Error("support-error", "datum has wrong length");
    for (int k = 0; k < o.M(); ++k)
        if (c[k]) throw Error("support-error", "B_J datum has support in Phi^+(J)");
    Rows rows;
    for (int k = 1; k <= n; ++k) {
        int j = n - k + 1;
        int len = k <= mu.length() ? mu.parts[k - 1] : 0;
        std::vector<Letter> row;
        int off = 0;
        for (int i = 1; i < j; ++i) off += c[o.index(i, j, false)];
        if (off > len) throw Error("support-error", "row " + std::to_string(k) + " overflows mu");
        row.insert(row.end(), len - off, -j);
        for (int i = j - 1; i >= 1; --i) row.insert(row.end(), c[o.index(i, j, false)], -i);
        if (!row.empty()) rows.push_back(row);
    }
    return rows;
}

Weight shift_mu(const Partition& mu, int n) {
    Weight w(n);
    for (int k = 1; k <= mu.length(); ++k) w -= eps(n - k + 1, n) * mu.parts[k - 1];
    return w;
}

std::vector<int> concat(const std::vector<int>& upper, const std::vector<int>& lower, int n) {
    RootOrder o = convex_order(n);
    if (static_cast<int>(upper.size()) != o.N() || static_cast<int>(lower.size()) != o.N())
        throw Error("support-error", "datum has wrong length");
    std::vector<int> c(o.N());
    for (int k = 0; k < o.N(); ++k) {
        if (upper[k] && lower[k]) throw Error("support-error", "supports overlap at beta_" + std::to_string(k + 1));
        if ((k < o.M() && lower[k]) || (k >= o.M() && upper[k])) throw Error("support-error", "support outside its half");
        c[k] = upper[k] + lower[k];
    }
    return c;
}

LusztigDatum xi_from_verma(const VermaElement& v, const DominantWeight& lambda) {
    LusztigDatum x;
    x.n = v.n;
    x.c = concat(rsk_burge(v.body()), c_J(tail_rows(v), v.n), v.n);
    x.shift = lambda.weight();
    return x;
}

LusztigDatum xi_lambda(const KNTableau& t) { return xi_from_verma(chi_lambda(psi_lambda(t)), t.lambda); }

Weight datum_weight(const LusztigDatum& x) {
    RootOrder o = convex_order(x.n);
    Weight w = x.shift;
    for (int k = 0; k < o.N(); ++k) w -= o.beta[k].weight(x.n) * x.c[k];
    return w;
}

std::string datum_key(const LusztigDatum& x) {
    std::string s = "(";
    for (std::size_t k = 0; k < x.c.size(); ++k) s += (k ? "," : "") + std::to_string(x.c[k]);
    return s + ")";
}

namespace {

std::pair<int, int> word_eps_phi(const std::vector<Column>& cols, int i) {
    Signature s;
    for (const auto& c : cols)
        for (Letter x : c.entries) {
            if (x == -(i + 1)) s += '+';
            else if (x == -i) s += '-';
        }
    Signature r = reduce_signature(s);
    return {static_cast<int>(std::count(r.begin(), r.end(), '-')), static_cast<int>(std::count(r.begin(), r.end(), '+'))};
}

Signature v_tau(const ProfileTableau& t) {
    Signature s;
    for (const auto& c : t.columns) s += sigma_sign(c, t.n);
    return s + "+";
}

std::vector<Column> rows_to_cols(const Rows& rows) {
    std::size_t w = rows.empty() ? 0 : rows[0].size();
    std::vector<Column> cols(w);
    for (std::size_t c = 0; c < w; ++c)
        for (const auto& r : rows)
            if (c < r.size()) cols[w - 1 - c].entries.push_back(r[c]);
    return cols;
}

Rows cols_to_rows(const std::vector<Column>& cols) {
    Rows rows;
    for (int k = static_cast<int>(cols.size()) - 1; k >= 0; --k)
        for (int r = 0; r < cols[k].ht(); ++r) {
            if (static_cast<int>(rows.size()) <= r) rows.emplace_back();
            rows[r].push_back(cols[k].entries[r]);
        }
    return rows;
}

std::optional<ProfileTableau> v_op(const ProfileTableau& body, int i, bool up) {
    ProfileTableau t = compact(body);
    if (i < t.n) {
        if (!(up ? word_e(t.columns, i) : word_f(t.columns, i))) return std::nullopt;
        return t;
    }
    Signature red = reduce_signature(v_tau(t));
    int k = up ? e_site(red) : f_site(red);
    if (k < 0) return std::nullopt;
    if (k >= static_cast<int>(t.columns.size())) t.columns.resize(k + 1);
    auto& e = t.columns[k].entries;
    if (up) e.erase(e.begin(), e.begin() + 2);
    else e.insert(e.begin(), {-t.n, -(t.n - 1)});
    check_delta_pi(compact(t));
    return compact(t);
}

std::optional<LusztigDatum> xi_op(const LusztigDatum& x, int i, bool up, const Partition& mu) {
    RootOrder o = convex_order(x.n);
    std::vector<int> hi(o.N(), 0), lo(o.N(), 0);
    for (int k = 0; k < o.N(); ++k) (k < o.M() ? hi : lo)[k] = x.c[k];
    ProfileTableau body = rsk_burge_inverse(hi, x.n);
    Rows rows = c_J_inverse(lo, mu, x.n);
    std::vector<std::pair<int, int>> ep;
    if (i < x.n) {
        ep.push_back(word_eps_phi(body.columns, i));
        ep.push_back(word_eps_phi(rows_to_cols(rows), i));
    } else {
        Signature red = reduce_signature(v_tau(body));
        // V is infinite in direction n and B_J is frozen there
        ep.emplace_back(static_cast<int>(std::count(red.begin(), red.end(), '-')), 1);
        ep.emplace_back(kNegInf, kNegInf);
    }
    int k = up ? tensor_e(ep) : tensor_f(ep);
    if (k < 0) return std::nullopt;
    LusztigDatum out = x;
    if (k == 0) {
        auto b = v_op(body, i, up);
        if (!b) return std::nullopt;
        out.c = concat(rsk_burge(*b), lo, x.n);
    } else {
        auto cols = rows_to_cols(rows);
        if (!(up ? word_e(cols, i) : word_f(cols, i))) return std::nullopt;
        out.c = concat(hi, c_J(cols_to_rows(cols), x.n), x.n);
    }
    return out;
}

}  // namespace

std::optional<ProfileTableau> v_f(const ProfileTableau& body, int i) { return v_op(body, i, false); }
std::optional<ProfileTableau> v_e(const ProfileTableau& body, int i) { return v_op(body, i, true); }

CrystalOps<LusztigDatum> xi_ops(const DominantWeight& lambda) {
    Partition mu = expected_mu(lambda);
    CrystalOps<LusztigDatum> ops;
    ops.n = lambda.n();
    ops.f = [mu](const LusztigDatum& x, int i) { return xi_op(x, i, false, mu); };
    ops.e = [mu](const LusztigDatum& x, int i) { return xi_op(x, i, true, mu); };
    ops.key = datum_key;
    ops.wt = datum_weight;
    return ops;
}

}  // namespace crystald
