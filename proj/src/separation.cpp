#include "crystald/separation.hpp"

#include <algorithm>

namespace crystald {

namespace {

std::optional<std::vector<Column>> bicrystal(int j, const std::vector<Column>& u, bool up) {
    if (j < 0 || j + 1 >= static_cast<int>(u.size())) throw Error("usage", "bicrystal index out of range");
    Pair p{u[j + 1], u[j], 0};
    p.left.tail = p.right.tail = 0;
    p.a = pair_amin(p.left, p.right);
    auto q = up ? opE(p) : opF(p);
    if (!q) return std::nullopt;
    auto out = u;
    out[j + 1].entries = q->left.entries;
    out[j].entries = q->right.entries;
    return out;
}

}  // namespace

std::optional<std::vector<Column>> bicrystal_F(int j, const std::vector<Column>& u) { return bicrystal(j, u, false); }
std::optional<std::vector<Column>> bicrystal_E(int j, const std::vector<Column>& u) { return bicrystal(j, u, true); }

namespace {

struct RCol {
    Column col;
    bool neg = false;
    int slot = -1;
};

Column untailed(const Column& c) { return Column(c.entries, 0); }

struct Level {
    int n;
    std::vector<RCol>& cols;  // leftmost first
    int l = 0;
    bool spin = false;
    std::vector<Factor> factors;  // T_l .. T_0

    int ui(int u) const {
        // U index -> position in cols
        if (u == 0) return spin ? static_cast<int>(cols.size()) - 1 : -1;
        int i = (u + 1) / 2;
        return 2 * (l - i) + (u % 2);
    }
    const Factor& T(int i) const { return factors[l - i]; }
};

void build_factors(Level& lv) {
    auto& cols = lv.cols;
    int R = static_cast<int>(cols.size());
    lv.spin = R % 2 == 1;
    lv.l = R / 2;
    lv.factors.clear();
    for (int p = 0; p < lv.l; ++p) {
        const RCol& L = cols[2 * p];
        const RCol& Rc = cols[2 * p + 1];
        Factor f;
        if (L.neg && Rc.neg) {
            f.kind = Kind::TBar0;
        } else if (!L.neg && !Rc.neg) {
            f.kind = Kind::T;
            f.a = L.col.tail;
        } else {
            throw Error("shape-error", "separation paired a negative column with a positive one");
        }
        f.left = untailed(L.col);
        f.right = untailed(Rc.col);
        lv.factors.push_back(f);
    }
    Factor t0;
    if (lv.spin) {
        const RCol& s = cols.back();
        t0.kind = (s.neg || s.col.ht() % 2 == 1) ? Kind::SpMinus : Kind::SpPlus;
        t0.left = untailed(s.col);
    }
    lv.factors.push_back(t0);
}

Column apply_pair(bool up, Column& left, Column& right, const std::string& what) {
    Pair p{untailed(left), untailed(right), 0};
    p.a = pair_amin(p.left, p.right);
    auto q = up ? opE(p) : opF(p);
    if (!q) throw Error("slide-blocked", what + " returned zero");
    left.entries = q->left.entries;
    right.entries = q->right.entries;
    return left;
}

void separate_rec(int n, std::vector<RCol> cols, int depth, std::vector<Column>& slots, SepTrace* trace) {
    Level lv{n, cols};
    build_factors(lv);
    int l = lv.l;
    int m = 0;
    for (int i = 1; i <= l; ++i)
        if (lv.T(i).kind == Kind::TBar0) m = i;
    for (int i = 1; i <= m; ++i)
        if (lv.T(i).kind != Kind::TBar0) throw Error("shape-error", "Tbar(0) factors are not the lowest ones");
    bool negative = m > 0 || lv.T(0).kind == Kind::SpMinus;
    int lo = negative ? m : 1;

    if (l - 1 < lo) {
        for (auto& c : cols)
            if (c.slot >= 0) slots[c.slot] = c.col;
        return;
    }

    std::vector<bool> tri(l + 1, true);
    std::vector<int> as(l + 1, 0);
    for (int i = lo; i <= l - 1; ++i) {
        tri[i] = triangle_lt(lv.T(i + 1), lv.T(i), n);
        as[i] = (negative && i == m) ? 1 : lv.T(i).a;
    }

    Column virt;
    for (int k = n; k >= 1; --k) virt.entries.push_back(-k);

    const std::vector<RCol> orig = cols;
    for (int i = l - 1; i >= lo; --i) {
        int j = 2 * i, a = as[i];
        bool padded = negative && i == m;
        // U_{j+2} as it entered this level
        const RCol& c3 = orig[lv.ui(j + 2)];
        RCol& c2 = cols[lv.ui(j + 1)];
        RCol& c1 = cols[lv.ui(j)];
        Column below = padded ? virt : cols[lv.ui(j - 1)].col;
        Column c0 = below;
        std::string js = std::to_string(j), jm = std::to_string(j - 1);
        std::string ops;
        if (a == 0) {
            ops = "id";
        } else if (tri[i]) {
            for (int k = 0; k < a; ++k) apply_pair(false, c2.col, c1.col, "F" + js);
            ops = "F" + js + (a > 1 ? "^" + std::to_string(a) : "");
        } else {
            apply_pair(false, c1.col, c0, "F" + jm);
            for (int k = 0; k < a - 1; ++k) apply_pair(false, c2.col, c1.col, "F" + js);
            apply_pair(true, c1.col, c0, "E" + jm);
            apply_pair(true, c2.col, c1.col, "E" + js);
            ops = "E" + js + "E" + jm + "F" + js + (a - 1 > 1 ? "^" + std::to_string(a - 1) : "") + "F" + jm;
            if (a - 1 == 0) ops = "E" + js + "E" + jm + "F" + jm;
        }
        if (c0.entries != below.entries)
            throw Error("slide-blocked", "S_" + js + " changed U_" + jm);
        c2.col.tail = a;
        c1.col.tail = 0;
        if (padded) c1.neg = false;
        std::vector<Column> quad{c0, c1.col, c2.col, c3.col};
        bool ok = semistandard_along_L(quad, n);
        if (trace) {
            SepStep st;
            st.depth = depth;
            st.j = j;
            st.triangle = tri[i];
            st.a = a;
            st.ops = ops;
            st.quad = {c3.col, c2.col, c1.col, c0};
            st.semistandard = ok;
            trace->steps.push_back(st);
        }
        if (!ok) throw Error("slide-blocked", "S_" + js + " broke semistandardness along L");
    }

    slots[cols.front().slot] = cols.front().col;
    cols.erase(cols.begin());
    separate_rec(n, std::move(cols), depth + 1, slots, trace);
}

}  // namespace

VermaElement separate(const SpinorTuple& t, SepTrace* trace) {
    if (!in_T_lambda(t)) throw Error("shape-error", "separate expects an element of T_lambda");
    int n = t.n, l = t.l();
    std::vector<RCol> cols;
    for (int i = l; i >= 1; --i) {
        const Factor& f = t.T(i);
        bool neg = f.kind == Kind::TBar0;
        int tl = neg ? 1 : f.a, tr = neg ? 1 : 0;
        cols.push_back({Column(f.left.entries, tl), neg, 2 * i});
        cols.push_back({Column(f.right.entries, tr), neg, 2 * i - 1});
    }
    const Factor& t0 = t.T(0);
    VermaElement v;
    v.n = n;
    v.r = 2 * l;
    if (t0.spin()) {
        bool neg = t0.kind == Kind::SpMinus;
        cols.push_back({Column(t0.left.entries, neg ? 1 : 0), neg, 0});
        ++v.r;
    }
    v.columns.assign(2 * l + 1, Column());
    separate_rec(n, std::move(cols), 0, v.columns, trace);
    return v;
}

ProfileTableau VermaElement::body() const {
    ProfileTableau p;
    p.n = n;
    for (const auto& c : columns) p.columns.push_back(c.body());
    while (p.columns.size() > 1 && p.columns.back().empty()) p.columns.pop_back();
    return p;
}

ProfileTableau VermaElement::tail() const {
    ProfileTableau p;
    p.n = n;
    for (const auto& c : columns) p.columns.push_back(c.tail_part());
    while (p.columns.size() > 1 && p.columns.back().empty()) p.columns.pop_back();
    return p;
}

Weight verma_shift(const VermaElement& v) {
    Weight w(v.n);
    for (int& x : w.d) x = v.r;
    return w;
}

Weight verma_weight(const VermaElement& v) {
    Weight w = verma_shift(v);
    for (const auto& c : v.columns)
        for (Letter x : c.entries) w.d[-x - 1] -= 2;
    return w;
}

Signature tau(const VermaElement& v, int pad) {
    Signature s;
    for (std::size_t k = 0; k < v.columns.size(); ++k)
        s += sigma_sign(v.columns[k], v.n, k == 0 && v.r % 2 == 0);
    s += std::string(pad, '+');
    return s;
}

namespace {

thread_local std::string g_diag;

void normalise(VermaElement& v) {
    while (v.columns.size() > 1 && v.columns.back().empty()) v.columns.pop_back();
}

std::optional<VermaElement> verma_op(const VermaElement& v, int i, bool up) {
    if (i < 1 || i > v.n) throw Error("usage", "bad index " + std::to_string(i));
    VermaElement out = v;
    if (i < v.n) {
        if (!(up ? word_e(out.columns, i) : word_f(out.columns, i))) return std::nullopt;
        return out;
    }
    Signature red = reduce_signature(tau(v, 1));
    int k = up ? e_site(red) : f_site(red);
    if (k < 0) return std::nullopt;
    if (k >= static_cast<int>(out.columns.size())) out.columns.resize(k + 1);
    auto& c = out.columns[k];
    if (up) {
        if (c.body_ht() < 2) {
            g_diag = "e_" + std::to_string(v.n) + " would remove tail cells in column " + std::to_string(k);
            return std::nullopt;
        }
        c.entries.erase(c.entries.begin(), c.entries.begin() + 2);
    } else {
        c.entries.insert(c.entries.begin(), {-v.n, -(v.n - 1)});
    }
    normalise(out);
    if (!body_is_delta_pi(out))
        g_diag = std::string(up ? "e_" : "f_") + std::to_string(v.n) + " left the delta^pi shapes at column " +
                 std::to_string(k);
    return out;
}

}  // namespace

std::optional<VermaElement> verma_f(const VermaElement& v, int i) { return verma_op(v, i, false); }
std::optional<VermaElement> verma_e(const VermaElement& v, int i) { return verma_op(v, i, true); }
const std::string& verma_diagnostic() { return g_diag; }

std::string verma_key(const VermaElement& v) {
    std::string s = "r" + std::to_string(v.r);
    std::size_t end = v.columns.size();
    while (end > 1 && v.columns[end - 1].empty()) --end;
    for (std::size_t k = 0; k < end; ++k) s += column_str(v.columns[k]);
    return s;
}

CrystalOps<VermaElement> verma_ops(int n) {
    CrystalOps<VermaElement> ops;
    ops.n = n;
    ops.f = verma_f;
    ops.e = verma_e;
    ops.key = verma_key;
    ops.wt = verma_weight;
    return ops;
}

VermaElement chi_lambda(const SpinorTuple& t) { return separate(t); }

bool body_is_delta_pi(const VermaElement& v) {
    int prev = -1;
    for (std::size_t k = 0; k < v.columns.size(); ++k) {
        const Column& c = v.columns[k];
        if (k == 0 && v.r % 2 == 0 && c.empty()) continue;
        int h = c.body_ht();
        if (h % 2 != 0 || h < 0) return false;
        if (prev >= 0 && h > prev) return false;
        prev = h;
    }
    return true;
}

Partition body_shape(const VermaElement& v) {
    std::vector<int> hs;
    for (const auto& c : v.columns)
        if (c.body_ht() > 0) hs.push_back(c.body_ht());
    std::sort(hs.rbegin(), hs.rend());
    return Partition{hs}.conjugate();
}

Partition tail_shape(const VermaElement& v) {
    std::vector<int> hs;
    for (const auto& c : v.columns)
        if (c.tail > 0) hs.push_back(c.tail);
    std::sort(hs.rbegin(), hs.rend());
    return Partition{hs}.conjugate();
}

Partition expected_mu(const DominantWeight& lambda) {
    Skeleton sk = shape_decomposition(lambda);
    std::vector<int> hs;
    for (std::size_t k = 0; k < sk.kinds.size(); ++k) {
        switch (sk.kinds[k]) {
            case Kind::T:
                if (sk.as[k] > 0) hs.push_back(sk.as[k]);
                break;
            case Kind::TBar0: hs.push_back(1), hs.push_back(1); break;
            case Kind::SpMinus: hs.push_back(1); break;
            default: break;
        }
    }
    std::sort(hs.rbegin(), hs.rend());
    return Partition{hs}.conjugate();
}

}  // namespace crystald
