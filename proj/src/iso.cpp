#include "crystald/iso.hpp"

#include <algorithm>

namespace crystald {

Column phi(const Factor& f, int n) {
    if (f.kind == Kind::Placeholder) return Column();
    if (f.spin()) {
        std::vector<bool> b(n, false);
        for (Letter x : f.left.entries) b[-x - 1] = true;
        return spin_column(b);
    }
    Derived d = derived_columns(f, false);
    int r = residue(f);
    int dominos = (f.pair().b() - 2 * r) / 2;
    Column c;
    std::vector<bool> in_r(n + 1, false);
    for (Letter x : d.r_pre.entries) in_r[-x] = true;
    for (int i = 1; i <= n; ++i)
        if (!in_r[i]) c.entries.push_back(i);
    for (int k = 0; k < dominos; ++k) {
        c.entries.push_back(-n);
        c.entries.push_back(n);
    }
    c.entries.insert(c.entries.end(), d.l_pre.entries.begin(), d.l_pre.entries.end());
    return c;
}

Factor psi_a(const Column& c, int h, int n) {
    const auto& e = c.entries;
    int s = 0, t = 0;
    while (s < c.ht() && std::abs(e[s]) != n) ++s;
    t = s;
    while (t < c.ht() && std::abs(e[t]) == n) ++t;
    int ds = s, de = t;
    if (ds < de && e[ds] == n) ++ds;
    if (ds < de && e[de - 1] == -n) --de;
    if ((de - ds) % 2) throw Error("shape-error", "malformed n / n-bar run in " + column_str(c));
    std::vector<Letter> minus, plus;
    for (int k = 0; k < c.ht(); ++k) {
        if (k >= ds && k < de) continue;
        (e[k] < 0 ? minus : plus).push_back(e[k]);
    }
    std::vector<bool> in_plus(n + 1, false);
    for (Letter x : plus) in_plus[x] = true;
    Column tplus;
    for (int i = n; i >= 1; --i)
        if (!in_plus[i]) tplus.entries.push_back(-i);
    int eps = static_cast<int>(minus.size()) % 2;
    Factor f;
    if (h == n) {
        f.kind = eps ? Kind::TBar0 : Kind::T;
        f.a = 0;
        f.left = Column(minus);
        f.right = tplus;
        return f;
    }
    Pair p{Column(minus), tplus, 0};
    p.a = pair_amin(p.left, p.right);
    for (int k = 0; k < n - h - eps; ++k) {
        auto q = opF(p);
        if (!q) throw Error("slide-blocked", "F vanished in psi on " + column_str(c));
        p = *q;
    }
    f.kind = Kind::T;
    f.a = n - h;
    f.left = p.left;
    f.right = p.right;
    return f;
}

Factor psi_sp(const Column& c, int n) {
    (void)n;
    Factor f;
    for (Letter x : c.entries)
        if (x < 0) f.left.entries.push_back(x);
    f.kind = f.left.ht() % 2 ? Kind::SpMinus : Kind::SpPlus;
    return f;
}

SpinorTuple psi_lambda(const KNTableau& t) {
    int n = t.n;
    Skeleton sk = shape_decomposition(t.lambda);
    SpinorTuple out;
    out.n = n;
    out.lambda = t.lambda;
    int l = static_cast<int>(sk.kinds.size()) - 1;
    int off = t.spin ? 1 : 0;
    if (static_cast<int>(t.columns.size()) != l + off) throw Error("shape-error", "column count does not match lambda");
    out.factors.resize(l + 1);
    for (int k = 1; k <= l; ++k) {
        const Column& c = t.columns[off + k - 1];
        out.T(k) = psi_a(c, c.ht(), n);
    }
    out.T(0) = t.spin ? psi_sp(t.columns[0], n) : Factor{};
    for (int k = 0; k <= l; ++k) {
        const Factor& f = out.factors[k];
        if (f.kind != sk.kinds[k] || f.a != sk.as[k])
            throw Error("kind-error", "column maps to " + kind_str(f.kind, f.a) + ", expected " + kind_str(sk.kinds[k], sk.as[k]));
    }
    return out;
}

KNTableau phi_lambda(const SpinorTuple& t) {
    KNTableau out;
    out.n = t.n;
    out.lambda = t.lambda;
    out.spin = t.T(0).spin();
    if (out.spin) out.columns.push_back(phi(t.T(0), t.n));
    for (int k = 1; k <= t.l(); ++k) out.columns.push_back(phi(t.T(k), t.n));
    return out;
}

}  // namespace crystald
