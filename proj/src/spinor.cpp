#include "crystald/spinor.hpp"

#include <algorithm>

namespace crystald {

std::string kind_str(Kind k, int a) {
    switch (k) {
        case Kind::T: return "T(" + std::to_string(a) + ")";
        case Kind::TBar0: return "Tbar(0)";
        case Kind::SpPlus: return "sp+";
        case Kind::SpMinus: return "sp-";
        case Kind::Placeholder: return "none";
    }
    return "?";
}

Kind parse_kind(const std::string& s, int& a) {
    a = 0;
    if (s == "Tbar(0)") return Kind::TBar0;
    if (s == "sp+") return Kind::SpPlus;
    if (s == "sp-") return Kind::SpMinus;
    if (s == "none") return Kind::Placeholder;
    if (s.size() > 3 && s.rfind("T(", 0) == 0 && s.back() == ')') {
        try {
            a = std::stoi(s.substr(2, s.size() - 3));
            return Kind::T;
        } catch (...) {
        }
    }
    throw Error("parse-error", "unknown factor kind '" + s + "'");
}

bool pair_semistandard(const Column& left, const Column& right, int a) {
    int c = left.ht() - a, b = right.ht() - c;
    if (a < 0 || c < 0 || b < 0) return false;
    for (const Column* col : {&left, &right})
        for (int i = 1; i < col->ht(); ++i)
            if (col->entries[i - 1] >= col->entries[i]) return false;
    for (int k = 1; k <= c; ++k)
        if (left.top(k) > right.top(b + k)) return false;
    return true;
}

int pair_amin(const Column& left, const Column& right) {
    for (int a = std::max(0, left.ht() - right.ht()); a <= left.ht(); ++a)
        if (pair_semistandard(left, right, a)) return a;
    return left.ht();
}

int residue(const Pair& p) { return p.a - pair_amin(p.left, p.right); }

namespace {

// Right column in grid column 0 rows 0..hR-1, left column in grid column -1.
Pair slide_pair(const Column& left, const Column& right, int a, int row, int col) {
    SlideGrid g;
    int c = left.ht() - a, b = right.ht() - c;
    for (int i = 0; i < right.ht(); ++i) g[{i, 0}] = right.entries[i];
    for (int i = 0; i < left.ht(); ++i) g[{b + i, -1}] = left.entries[i];
    jdt_slide_grid(g, row, col);
    Pair out;
    int lbot = 0, rbot = 0;
    for (const auto& [rc, v] : g) {
        if (rc.second == 0) out.right.entries.push_back(v), rbot = rc.first;
        else out.left.entries.push_back(v), lbot = rc.first;
    }
    if (out.left.empty()) out.a = 0;
    else if (out.right.empty()) out.a = out.left.ht();
    else out.a = lbot - rbot;
    return out;
}

}  // namespace

std::optional<Pair> opE(const Pair& p) {
    int a0 = pair_amin(p.left, p.right);
    if (a0 == 0) return std::nullopt;
    return slide_pair(p.left, p.right, a0, p.right.ht(), 0);
}

std::optional<Pair> opF(const Pair& p) {
    int a0 = pair_amin(p.left, p.right);
    int c0 = p.left.ht() - a0, b0 = p.right.ht() - c0;
    if (b0 == 0) return std::nullopt;
    return slide_pair(p.left, p.right, a0, b0 - 1, -1);
}

int residue(const Factor& f) {
    switch (f.kind) {
        case Kind::T: return residue(f.pair());
        case Kind::TBar0: return 0;
        case Kind::SpPlus:
        case Kind::SpMinus: return f.left.ht() % 2;
        case Kind::Placeholder: return 0;
    }
    return 0;
}

static bool barred_strict(const Column& c, int n) {
    for (int i = 0; i < c.ht(); ++i) {
        if (c.entries[i] >= 0 || c.entries[i] < -n) return false;
        if (i && c.entries[i - 1] >= c.entries[i]) return false;
    }
    return true;
}

bool factor_valid(const Factor& f, int n) {
    if (!barred_strict(f.left, n) || !barred_strict(f.right, n)) return false;
    switch (f.kind) {
        case Kind::T: {
            if (f.a < 0 || f.a > n - 1) return false;
            Pair p = f.pair();
            int c = p.c(), b = p.b();
            if (c < 0 || b < 0 || c % 2 || b % 2) return false;
            return pair_semistandard(f.left, f.right, f.a) && residue(p) <= 1;
        }
        case Kind::TBar0: {
            int hl = f.left.ht(), hr = f.right.ht();
            return f.a == 0 && hl % 2 == 1 && hr >= hl && (hr - hl) % 2 == 0 &&
                   pair_semistandard(f.left, f.right, 0);
        }
        case Kind::SpPlus: return f.right.empty() && f.left.ht() % 2 == 0;
        case Kind::SpMinus: return f.right.empty() && f.left.ht() % 2 == 1;
        case Kind::Placeholder: return f.left.empty() && f.right.empty();
    }
    return false;
}

Derived derived_columns(const Factor& f, bool starred) {
    Derived d;
    if (f.spin()) {
        if (starred && residue(f) != 1) throw Error("residue-error", "starred columns need residue 1");
        d.l_pre = d.l_star = f.left;
        return d;
    }
    Pair p = f.pair();
    int r = f.kind == Kind::T ? residue(p) : 0;
    if (starred) {
        if (r != 1) throw Error("residue-error", "starred columns need residue 1");
        auto q = opF(p);
        if (!q) throw Error("residue-error", "F vanished on a residue-1 factor");
        d.l_star = q->left;
        d.r_star = q->right;
    }
    Pair q = p;
    for (int k = 0; k < f.a - r; ++k) {
        auto e = opE(q);
        if (!e) throw Error("slide-blocked", "E vanished while computing ^L T");
        q = *e;
    }
    d.l_pre = q.left;
    d.r_pre = q.right;
    return d;
}

namespace {

struct RightData {
    Column L, Lpre, Lstar;
    int a = 0, r = 0, eps = 0;
};

RightData right_data(const Factor& s, bool need_star) {
    RightData d;
    if (s.kind == Kind::T) {
        d.L = s.left;
        d.a = s.a;
        d.r = residue(s);
        Derived dv = derived_columns(s, need_star && d.r == 1);
        d.Lpre = dv.l_pre;
        d.Lstar = dv.l_star;
    } else {
        d.L = d.Lpre = d.Lstar = s.left;
        d.r = s.kind == Kind::TBar0 ? 1 : s.left.ht() % 2;
        d.a = d.r;
        d.eps = (s.kind == Kind::SpMinus || s.kind == Kind::TBar0) ? 1 : 0;
    }
    return d;
}

}  // namespace

bool is_admissible(const Factor& t, const Factor& s, int n) {
    (void)n;
    if (t.kind == Kind::TBar0) {
        if (s.kind != Kind::TBar0 && s.kind != Kind::SpMinus)
            throw Error("kind-error", "Tbar(0) may only precede Tbar(0) or sp-");
        Factor q{Kind::TBar0, 0, t.right, s.left};
        int hl = q.left.ht(), hr = q.right.ht();
        return hl % 2 == 1 && hr >= hl && (hr - hl) % 2 == 0 && pair_semistandard(q.left, q.right, 0);
    }
    if (t.kind != Kind::T || s.kind == Kind::Placeholder)
        throw Error("kind-error", "admissibility needs T(a) on the left and a factor on the right");
    int rt = residue(t);
    RightData sd = right_data(s, rt == 1);
    int a = t.a, ap = sd.a;
    if (ap > a) return false;
    int rr = rt * sd.r;
    Derived td = derived_columns(t, rr == 1);
    const Column& TR = t.right;
    // (i)
    if (TR.ht() > sd.L.ht() - ap + 2 * rr) return false;
    // (ii)
    const Column& x = rr ? td.r_star : TR;
    for (int i = 1; i <= std::min(x.ht(), sd.Lpre.ht()); ++i)
        if (x.bot(i) > sd.Lpre.bot(i)) return false;
    // (iii)
    const Column& y = rr ? sd.Lstar : sd.L;
    int shift = a - ap + (rr ? sd.eps : 0);
    for (int i = 1; i <= y.ht() && i + shift <= td.r_pre.ht(); ++i)
        if (i + shift >= 1 && td.r_pre.bot(i + shift) > y.bot(i)) return false;
    return true;
}

bool triangle_lt(const Factor& t, const Factor& s, int n) {
    (void)n;
    if (t.kind != Kind::T) throw Error("kind-error", "triangle order needs T(a) on the left");
    if (s.kind == Kind::Placeholder) return true;
    Column left = derived_columns(t, false).r_pre;
    const Column& right = s.left;
    int a = t.a;
    int b = s.kind == Kind::T ? s.a : (s.kind == Kind::SpPlus ? 0 : 1);
    if (left.empty() || right.empty()) return true;
    if (a < b || left.ht() - a > right.ht() - b) return false;
    for (int i = 1; i <= left.ht(); ++i) {
        int j = i - a + b;  // same level in the right column
        if (j >= 1 && j <= right.ht() && left.bot(i) > right.bot(j)) return false;
    }
    return true;
}

Skeleton shape_decomposition(const DominantWeight& lambda) {
    check_dominant(lambda);
    int n = lambda.n();
    const auto& d = lambda.d;
    Kind spin = Kind::Placeholder;
    std::vector<int> mu(n);
    if (lambda.half_integral()) {
        spin = d[n - 1] > 0 ? Kind::SpPlus : Kind::SpMinus;
        for (int i = 0; i < n; ++i) mu[i] = (d[i] - 1) / 2;
        if (d[n - 1] < 0) mu[n - 1] = (d[n - 1] + 1) / 2;
    } else {
        for (int i = 0; i < n; ++i) mu[i] = d[i] / 2;
    }
    int neg = mu[n - 1] < 0 ? -mu[n - 1] : 0;
    std::vector<int> parts(mu);
    parts[n - 1] = std::abs(parts[n - 1]);
    Partition conj = Partition(parts).conjugate();
    Skeleton sk;
    for (int k = static_cast<int>(conj.parts.size()); k >= 1; --k) {
        int h = conj.parts[k - 1];
        if (k <= neg) {
            sk.kinds.push_back(Kind::TBar0);
            sk.as.push_back(0);
        } else {
            sk.kinds.push_back(Kind::T);
            sk.as.push_back(n - h);
        }
    }
    sk.kinds.push_back(spin);
    sk.as.push_back(0);
    return sk;
}

std::vector<Column> flatten(const SpinorTuple& t) {
    int l = t.l();
    std::vector<Column> u(2 * l + 1);
    u[0] = t.T(0).left;
    for (int i = 1; i <= l; ++i) {
        u[2 * i] = t.T(i).left;
        u[2 * i - 1] = t.T(i).right;
    }
    return u;
}

void unflatten(SpinorTuple& t, const std::vector<Column>& u) {
    int l = t.l();
    t.T(0).left = u[0];
    for (int i = 1; i <= l; ++i) {
        t.T(i).left = u[2 * i];
        t.T(i).right = u[2 * i - 1];
    }
}

Factor highest_factor(Kind k, int a, int n) {
    Factor f;
    f.kind = k;
    f.a = k == Kind::T ? a : 0;
    switch (k) {
        case Kind::T:
            for (int j = 0; j < a; ++j) f.left.entries.push_back(-n + j);
            break;
        case Kind::TBar0:
            f.left = Column({-n});
            f.right = Column({-n});
            break;
        case Kind::SpMinus: f.left = Column({-n}); break;
        default: break;
    }
    return f;
}

SpinorTuple highest_element(const DominantWeight& lambda) {
    Skeleton sk = shape_decomposition(lambda);
    SpinorTuple t;
    t.n = lambda.n();
    t.lambda = lambda;
    for (std::size_t k = 0; k < sk.kinds.size(); ++k) t.factors.push_back(highest_factor(sk.kinds[k], sk.as[k], t.n));
    return t;
}

Weight factor_weight(const Factor& f, int n) {
    Weight w(n);
    if (f.kind == Kind::Placeholder) return w;
    int base = f.spin() ? 1 : 2;
    for (int& x : w.d) x = base;
    for (const Column* c : {&f.left, &f.right})
        for (Letter x : c->entries) w.d[-x - 1] -= 2;
    return w;
}

Weight spinor_weight(const SpinorTuple& t) {
    Weight w(t.n);
    for (const auto& f : t.factors) w += factor_weight(f, t.n);
    return w;
}

bool in_T_lambda(const SpinorTuple& t) {
    Skeleton sk = shape_decomposition(t.lambda);
    if (sk.kinds.size() != t.factors.size()) return false;
    for (std::size_t k = 0; k < sk.kinds.size(); ++k) {
        const Factor& f = t.factors[k];
        if (f.kind != sk.kinds[k] || f.a != sk.as[k] || !factor_valid(f, t.n)) return false;
    }
    for (int i = 1; i < t.l(); ++i)
        if (!is_admissible(t.T(i + 1), t.T(i), t.n)) return false;
    if (t.l() >= 1 && t.T(0).kind != Kind::Placeholder && !is_admissible(t.T(1), t.T(0), t.n)) return false;
    return true;
}

char sigma_sign(const Column& u, int n, bool placeholder) {
    if (placeholder) return '.';
    if (u.empty() || u.top(1) >= -(n - 2)) return '+';
    if (u.ht() >= 2 && u.top(1) == -n && u.top(2) == -(n - 1)) return '-';
    return '.';
}

Signature sigma(const SpinorTuple& t) {
    auto u = flatten(t);
    Signature s;
    for (std::size_t j = 0; j < u.size(); ++j)
        s += sigma_sign(u[j], t.n, j == 0 && t.T(0).kind == Kind::Placeholder);
    return s;
}

namespace {

Signature word_signature(const std::vector<Column>& cols, int i, std::vector<std::pair<int, int>>& pos) {
    Signature s;
    for (int k = 0; k < static_cast<int>(cols.size()); ++k)
        for (int j = 0; j < cols[k].ht(); ++j) {
            Letter x = cols[k].entries[j];
            if (x == -(i + 1)) s += '+';
            else if (x == -i) s += '-';
            else continue;
            pos.emplace_back(k, j);
        }
    return s;
}

}  // namespace

std::pair<int, int> word_site_f(const std::vector<Column>& cols, int i) {
    std::vector<std::pair<int, int>> pos;
    int k = f_site(reduce_signature(word_signature(cols, i, pos)));
    return k < 0 ? std::pair{-1, -1} : pos[k];
}

std::pair<int, int> word_site_e(const std::vector<Column>& cols, int i) {
    std::vector<std::pair<int, int>> pos;
    int k = e_site(reduce_signature(word_signature(cols, i, pos)));
    return k < 0 ? std::pair{-1, -1} : pos[k];
}

bool word_f(std::vector<Column>& cols, int i) {
    auto [k, j] = word_site_f(cols, i);
    if (k < 0) return false;
    cols[k].entries[j] = -i;
    return true;
}

bool word_e(std::vector<Column>& cols, int i) {
    auto [k, j] = word_site_e(cols, i);
    if (k < 0) return false;
    cols[k].entries[j] = -(i + 1);
    return true;
}

std::optional<SpinorTuple> spinor_f(const SpinorTuple& t, int i) {
    auto u = flatten(t);
    if (i < t.n) {
        if (!word_f(u, i)) return std::nullopt;
    } else {
        int k = f_site(reduce_signature(sigma(t)));
        if (k < 0) return std::nullopt;
        auto& e = u[k].entries;
        e.insert(e.begin(), {-t.n, -(t.n - 1)});
    }
    SpinorTuple out = t;
    unflatten(out, u);
    return out;
}

std::optional<SpinorTuple> spinor_e(const SpinorTuple& t, int i) {
    auto u = flatten(t);
    if (i < t.n) {
        if (!word_e(u, i)) return std::nullopt;
    } else {
        int k = e_site(reduce_signature(sigma(t)));
        if (k < 0) return std::nullopt;
        auto& e = u[k].entries;
        e.erase(e.begin(), e.begin() + 2);
    }
    SpinorTuple out = t;
    unflatten(out, u);
    return out;
}

std::string factor_key(const Factor& f) {
    std::string s = kind_str(f.kind, f.a);
    if (f.kind == Kind::Placeholder) return s;
    s += column_str(f.left);
    if (!f.spin()) s += column_str(f.right);
    return s;
}

std::string spinor_key(const SpinorTuple& t) {
    std::string s;
    for (std::size_t k = 0; k < t.factors.size(); ++k) {
        if (k) s += " ";
        s += factor_key(t.factors[k]);
    }
    return s;
}

CrystalOps<SpinorTuple> spinor_ops(int n) {
    CrystalOps<SpinorTuple> ops;
    ops.n = n;
    ops.f = spinor_f;
    ops.e = spinor_e;
    ops.key = spinor_key;
    ops.wt = spinor_weight;
    return ops;
}

}  // namespace crystald
