#include "crystald/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "crystald/iso.hpp"
#include "crystald/kn.hpp"
#include "crystald/lusztig.hpp"
#include "crystald/oracle.hpp"
#include "crystald/separation.hpp"
#include "crystald/spinor.hpp"

namespace crystald {

void SuiteResult::check(bool cond, const std::string& what) {
    ++checked;
    if (!cond && failures.size() < 50) failures.push_back(what);
    else if (!cond) failures.back() = "... and more";
}

std::string SuiteResult::summary() const {
    std::ostringstream os;
    os << name << ": " << (ok() ? "ok" : "FAILED") << " (" << checked << " checks, " << failures.size()
       << " failures, " << static_cast<long>(seconds * 1000) << " ms)";
    return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    SuiteResult& r;
    Clock::time_point t0 = Clock::now();
    explicit Timer(SuiteResult& res) : r(res) {}
    ~Timer() { r.seconds = std::chrono::duration<double>(Clock::now() - t0).count(); }
};

std::vector<std::string> column_strs(const std::vector<Column>& cols) {
    std::vector<std::string> out;
    for (const auto& c : cols) out.push_back(column_str(c));
    while (!out.empty() && out.back() == "[]") out.pop_back();
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
    return s;
}

Factor fac(Kind k, int a, std::vector<Letter> l, std::vector<Letter> r = {}) {
    Factor f;
    f.kind = k;
    f.a = a;
    f.left = Column(std::move(l));
    f.right = Column(std::move(r));
    return f;
}

std::vector<Letter> reading(const std::vector<Column>& cols) {
    auto w = word(cols);
    std::reverse(w.begin(), w.end());
    return w;
}

std::vector<Letter> sorted_letters(const std::vector<Column>& cols) {
    std::vector<Letter> w;
    for (const auto& c : cols) w.insert(w.end(), c.entries.begin(), c.entries.end());
    std::sort(w.begin(), w.end());
    return w;
}

// Reduced n-th signature of chi(t) cut to the tuple's length, dots dropped.
bool signatures_agree(const SpinorTuple& t, const VermaElement& v) {
    Signature a = reduce_signature(sigma(t));
    Signature b = reduce_signature(reduce_signature(tau(v, 1)).substr(0, a.size()));
    std::erase(a, '.');
    std::erase(b, '.');
    return a == b;
}

struct Smoke {
    DominantWeight lambda;
    Component<SpinorTuple> spinor;
};

std::vector<Smoke> smoke_components(int threads) {
    std::vector<Smoke> out;
    for (const auto& s : smoke_list()) {
        auto lam = parse_lambda(s, kSmokeN);
        out.push_back({lam, generate_component(highest_element(lam), spinor_ops(kSmokeN), threads)});
    }
    return out;
}

// The fixed n = 5 element used by the end-to-end check.
KNTableau example_kn5() {
    KNTableau k;
    k.n = 5;
    k.lambda = parse_lambda("5/2,3/2,3/2,1/2,-1/2", 5);
    k.spin = true;
    k.columns = {Column({2, 3, -5, -4, -1}), Column({4, 5, -1}), Column({-5})};
    return k;
}

KNTableau example_kn8() {
    KNTableau k;
    k.n = 8;
    k.lambda = parse_lambda("4,4,4,4,4,2,0,0", 8);
    k.columns = {Column({1, 7, 8, -5, -3, -2}), Column({1, 4, 5, 7, 8, -4}), Column({3, 5, 7, 8, -6}),
                 Column({1, 2, 6, 8, -7})};
    return k;
}

}  // namespace

SuiteResult suite_golden_end_to_end() {
    SuiteResult r{"end-to-end n=5"};
    Timer tm(r);
    try {
        KNTableau k = example_kn5();
        r.check(validate_kn(k).ok, "input is not a KN tableau");

        SpinorTuple t = psi_lambda(k);
        std::vector<Factor> want{fac(Kind::T, 4, {-5, -3, -2, -1}, {-5, -4}), fac(Kind::T, 2, {-2, -1}, {-3, -1}),
                                 fac(Kind::SpMinus, 0, {-5, -4, -1})};
        r.check(t.factors == want, "spinor image " + spinor_key(t));
        r.check(sigma(t) == "-++-.", "sigma " + sigma(t));

        VermaElement v = chi_lambda(t);
        auto cols = column_strs(v.columns);
        std::vector<std::string> want_cols{"[-5,-4,-3,-1]", "[-5,-1]", "[|-2]", "[|-4,-1]", "[|-5,-3,-2,-1]"};
        r.check(cols == want_cols, "separated " + join(cols));
        r.check(body_shape(v) == Partition({2, 2, 1, 1}), "body shape");
        r.check(tail_shape(v) == Partition({3, 2, 1, 1}), "tail shape");
        Rows want_rows{{-5, -4, -2}, {-3, -1}, {-2}, {-1}};
        r.check(tail_rows(v) == want_rows, "tail rows");
        r.check(tau(v, 0) == "-.+..", "tau " + tau(v, 0));

        Biword bw = rsk_biword(v.body());
        Biword want_bw{{-5, -4}, {-5, -1}, {-3, -1}};
        sort_biword(bw);
        sort_biword(want_bw);
        r.check(bw == want_bw, "biword");

        LusztigDatum x = xi_lambda(k);
        std::vector<int> want_c{1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1};
        r.check(x.c == want_c, "datum " + datum_key(x));
        r.check(datum_weight(x) == kn_weight(k), "datum weight");
    } catch (const std::exception& e) {
        r.check(false, e.what());
    }
    return r;
}

SuiteResult suite_golden_psi() {
    SuiteResult r{"spinor image n=8"};
    Timer tm(r);
    try {
        KNTableau k = example_kn8();
        r.check(validate_kn(k).ok, "input is not a KN tableau");
        SpinorTuple t = psi_lambda(k);
        std::vector<Factor> want{fac(Kind::T, 3, {-7, -4, -3}, {-7, -5}), fac(Kind::T, 3, {-6, -2, -1}, {-6, -4}),
                                 fac(Kind::T, 2, {-4, -2}, {-6, -3}),
                                 fac(Kind::T, 2, {-5, -4, -3, -2}, {-6, -5, -3, -2}), fac(Kind::Placeholder, 0, {})};
        r.check(t.factors.size() == want.size(), "factor count");
        for (std::size_t i = 0; i < std::min(t.factors.size(), want.size()); ++i)
            r.check(t.factors[i] == want[i], "factor " + std::to_string(i) + " " + factor_key(t.factors[i]));
        r.check(in_T_lambda(t), "image not in T_lambda");
        r.check(phi_lambda(t) == k, "inverse does not return the input");
    } catch (const std::exception& e) {
        r.check(false, e.what());
    }
    return r;
}

SuiteResult suite_golden_separation() {
    SuiteResult r{"separation n=8"};
    Timer tm(r);
    try {
        SpinorTuple t = psi_lambda(example_kn8());
        SepTrace tr;
        VermaElement v = separate(t, &tr);
        auto cols = column_strs(v.columns);
        std::reverse(cols.begin(), cols.end());
        std::vector<std::string> want{"[|-7,-4,-3]", "[|-7,-2,-1]", "[|-5,-2]", "[-6,-4|-3,-2]", "[-6,-4]",
                                      "[-6,-4]",     "[-5,-3]",     "[-6,-5,-3,-2]", "[]"};
        r.check(cols == want, "final profile " + join(cols));
        r.check(tail_shape(v) == Partition({4, 4, 2}), "tail shape");
        Rows want_rows{{-7, -7, -5, -3}, {-4, -2, -2, -2}, {-3, -1}};
        r.check(tail_rows(v) == want_rows, "tail rows");
        r.check(body_shape(v) == Partition({5, 5, 1, 1}), "body shape");
        r.check(body_is_delta_pi(v), "body not of shape delta^pi");
        std::vector<std::string> first;
        for (std::size_t i = 0; i < tr.steps.size() && i < 3; ++i) first.push_back(tr.steps[i].ops);
        r.check(first == std::vector<std::string>{"E6E5F6^2F5", "E4E3F4F3", "F2^2"}, "first level " + join(first));
    } catch (const std::exception& e) {
        r.check(false, e.what());
    }
    return r;
}

SuiteResult suite_dimension(const SuiteOptions& o) {
    SuiteResult r{"dimension"};
    Timer tm(r);
    for (const auto& s : smoke_list()) {
        try {
            auto rep = dimension_check(parse_lambda(s, kSmokeN), o.threads);
            r.check(rep.match, s + ": weyl " + rep.predicted.str() + " spinor " + std::to_string(rep.spinor) +
                                   " kn " + std::to_string(rep.kn));
        } catch (const std::exception& e) {
            r.check(false, s + ": " + e.what());
        }
    }
    return r;
}

SuiteResult suite_morphism(const SuiteOptions& o) {
    SuiteResult r{"morphism"};
    Timer tm(r);
    const int n = kSmokeN;
    for (const auto& s : smoke_list()) {
        try {
            auto lam = parse_lambda(s, n);
            auto kn = generate_component(kn_highest(lam), kn_ops(n), o.threads);
            auto sp = generate_component(highest_element(lam), spinor_ops(n), o.threads);

            std::function<SpinorTuple(const KNTableau&)> psi = psi_lambda;
            auto a = verify_morphism(kn, kn_ops(n), psi, spinor_ops(n), Weight(n), MorphismKind::isomorphism);
            r.checked += a.checked;
            r.check(a.ok, s + " psi: " + a.witness);
            r.check(kn.elems.size() == sp.elems.size(), s + " psi: sizes differ");

            std::function<VermaElement(const SpinorTuple&)> chi = chi_lambda;
            auto b = verify_morphism(sp, spinor_ops(n), chi, verma_ops(n), Weight(n), MorphismKind::embedding);
            r.checked += b.checked;
            r.check(b.ok, s + " chi: " + b.witness);

            std::function<LusztigDatum(const KNTableau&)> xi = xi_lambda;
            auto c = verify_morphism(kn, kn_ops(n), xi, xi_ops(lam), Weight(n), MorphismKind::embedding);
            r.checked += c.checked;
            r.check(c.ok, s + " xi: " + c.witness);
        } catch (const std::exception& e) {
            r.check(false, s + ": " + e.what());
        }
    }
    return r;
}

SuiteResult suite_separation_invariants(const SuiteOptions& o, int samples) {
    SuiteResult r{"separation invariants"};
    Timer tm(r);
    auto smoke = smoke_components(o.threads);
    std::mt19937 rng(o.seed);
    for (int k = 0; k < samples; ++k) {
        const auto& sm = smoke[std::uniform_int_distribution<std::size_t>(0, smoke.size() - 1)(rng)];
        const auto& t = sm.spinor.elems[std::uniform_int_distribution<std::size_t>(0, sm.spinor.elems.size() - 1)(rng)];
        std::string who = sm.lambda.str() + " " + spinor_key(t);
        try {
            VermaElement v = chi_lambda(t);
            auto before = flatten(t);
            r.check(knuth_equivalent(reading(before), reading(v.columns)), who + ": words not Knuth equivalent");
            r.check(sorted_letters(before) == sorted_letters(v.columns), who + ": content changed");
            r.check(body_is_delta_pi(v), who + ": body shape");
            r.check(tail_shape(v) == expected_mu(sm.lambda), who + ": tail shape");
            r.check(signatures_agree(t, v), who + ": signatures");
        } catch (const std::exception& e) {
            r.check(false, who + ": " + e.what());
        }
    }
    return r;
}

namespace {

void strict_subsets(int n, int h, std::vector<Letter>& cur, Letter from, std::vector<Column>& out) {
    if (static_cast<int>(cur.size()) == h) {
        out.emplace_back(cur);
        return;
    }
    for (Letter x = from; x <= -1; ++x) {
        cur.push_back(x);
        strict_subsets(n, h, cur, x + 1, out);
        cur.pop_back();
    }
}

// Even column heights, rightmost tallest, total at most `budget`.
void shapes(int n, int budget, int maxh, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    for (int h = 2; h <= std::min(maxh, budget); h += 2) {
        cur.push_back(h);
        shapes(n, budget - h, h, cur, out);
        cur.pop_back();
    }
}

void fillings(int n, const std::vector<int>& heights, std::size_t k, std::vector<Column>& cols,
              const std::function<void(const ProfileTableau&)>& visit) {
    if (k == heights.size()) {
        visit(ProfileTableau{n, cols});
        return;
    }
    std::vector<Column> cand;
    std::vector<Letter> cur;
    strict_subsets(n, heights[k], cur, -n, cand);
    for (auto& c : cand) {
        cols.push_back(c);
        if (semistandard_along_L(cols, n)) fillings(n, heights, k + 1, cols, visit);
        cols.pop_back();
    }
}

}  // namespace

SuiteResult suite_rsk(int n, int max_size) {
    SuiteResult r{"rsk"};
    Timer tm(r);
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    shapes(n, max_size, n - n % 2, cur, all);
    for (const auto& hs : all) {
        std::vector<Column> cols;
        fillings(n, hs, 0, cols, [&](const ProfileTableau& t) {
            std::string who = profile_str(t);
            try {
                auto c = rsk_burge(t);
                auto back = rsk_burge_inverse(c, n);
                r.check(column_strs(back.columns) == column_strs(t.columns), who + ": round trip");
                r.check(rsk_burge(back) == c, who + ": datum round trip");
                std::vector<Letter> letters;
                for (auto [a, b] : rsk_biword(t)) letters.insert(letters.end(), {a, b});
                std::sort(letters.begin(), letters.end());
                r.check(letters == sorted_letters(t.columns), who + ": letters");
                int total = 0;
                for (int m : c) total += m;
                r.check(2 * total == static_cast<int>(letters.size()), who + ": datum size");
            } catch (const std::exception& e) {
                r.check(false, who + ": " + e.what());
            }
        });
    }
    return r;
}

SuiteResult suite_sliding(const SuiteOptions& o) {
    SuiteResult r{"sliding"};
    Timer tm(r);
    const int n = kSmokeN;
    for (const auto& sm : smoke_components(o.threads)) {
        for (const auto& t : sm.spinor.elems) {
            std::string who = sm.lambda.str() + " " + spinor_key(t);
            try {
                SepTrace tr;
                separate(t, &tr);
                for (const auto& st : tr.steps)
                    r.check(st.semistandard, who + ": quadruple after " + st.ops + " at depth " +
                                                 std::to_string(st.depth));
                for (int k = 1; k < n; ++k) {
                    auto u = spinor_e(t, k);
                    if (!u) continue;
                    for (int i = 0; i < t.l(); ++i) {
                        if (t.T(i + 1).kind != Kind::T || t.T(i).kind == Kind::Placeholder) continue;
                        r.check(triangle_lt(t.T(i + 1), t.T(i), n) == triangle_lt(u->T(i + 1), u->T(i), n),
                                who + ": triangle changes under e_" + std::to_string(k) + " at " + std::to_string(i));
                    }
                }
            } catch (const std::exception& e) {
                r.check(false, who + ": " + e.what());
            }
        }
    }
    return r;
}

SuiteResult suite_knuth(const SuiteOptions& o, int pairs) {
    SuiteResult r{"knuth"};
    Timer tm(r);
    std::mt19937 rng(o.seed);
    std::uniform_int_distribution<int> len(0, 9), letter(-4, -1);
    for (int k = 0; k < pairs; ++k) {
        std::vector<Letter> a(len(rng));
        for (auto& x : a) x = letter(rng);
        std::vector<Letter> b = a;
        if (k % 2 == 0) {
            // Random elementary Knuth moves keep b in the class of a.
            for (int m = 0; m < 6 && b.size() >= 3; ++m) {
                std::size_t p = std::uniform_int_distribution<std::size_t>(0, b.size() - 3)(rng);
                Letter u = b[p], v = b[p + 1], w = b[p + 2];
                if ((w < u && u <= v) || (v < u && u <= w)) std::swap(b[p + 1], b[p + 2]);
                else if ((u <= w && w < v) || (v <= w && w < u)) std::swap(b[p], b[p + 1]);
            }
        } else {
            std::shuffle(b.begin(), b.end(), rng);
        }
        bool p = knuth_equivalent(a, b), q = knuth_equivalent_jdt(a, b);
        r.check(p == q, "implementations disagree");
        r.check(insertion_tableau(a) == rectify_jdt(a), "insertion and rectification differ");
        if (k % 2 == 0) r.check(p, "elementary moves left the class");
    }
    return r;
}

SuiteResult suite_signatures(const SuiteOptions& o) {
    SuiteResult r{"signatures"};
    Timer tm(r);
    for (const auto& sm : smoke_components(o.threads)) {
        for (const auto& t : sm.spinor.elems) {
            std::string who = sm.lambda.str() + " " + spinor_key(t);
            try {
                VermaElement v = chi_lambda(t);
                r.check(signatures_agree(t, v), who + ": reduced signatures differ");
                auto f = spinor_f(t, sm.lambda.n());
                auto g = verma_f(v, sm.lambda.n());
                if (f) r.check(g && verma_key(*g) == verma_key(chi_lambda(*f)), who + ": f_n");
            } catch (const std::exception& e) {
                r.check(false, who + ": " + e.what());
            }
        }
    }
    return r;
}

}  // namespace crystald
