#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "crystald/oracle.hpp"
#include "helpers.hpp"

using namespace crystald;
using namespace testing_helpers;

TEST_SUITE("kn_model") {
    TEST_CASE("example tableaux are valid") {
        CHECK(validate_kn(kn5()).ok);
        CHECK(validate_kn(kn8()).ok);
    }

    TEST_CASE("highest elements") {
        auto h = kn_highest(parse_lambda("1,0,0,0", 4));
        REQUIRE(h.columns.size() == 1);
        CHECK(h.columns[0].entries == std::vector<Letter>{1});
        auto s = kn_highest(parse_lambda("1/2,1/2,1/2,1/2", 4));
        CHECK(s.spin);
        CHECK(s.columns[0].entries == std::vector<Letter>{1, 2, 3, 4});
        for (const auto& str : smoke_list()) {
            auto k = kn_highest(parse_lambda(str, 4));
            CHECK(validate_kn(k).ok);
            for (int i = 1; i <= 4; ++i) CHECK_FALSE(kn_e(k, i));
        }
    }

    TEST_CASE("bad shape is rejected") {
        KNTableau k = kn5();
        k.columns.pop_back();
        CHECK_THROWS_AS(validate_kn(k), Error);
    }

    TEST_CASE("brute force agrees with the component") {
        for (const char* s : {"1,1,0,0", "1/2,1/2,1/2,-1/2", "1,1,1,-1"}) {
            auto l = parse_lambda(s, 4);
            auto c = generate_component(kn_highest(l), kn_ops(4));
            CHECK(kn_brute_force(l).size() == c.elems.size());
        }
    }
}

TEST_SUITE("spinor_model") {
    TEST_CASE("shape decomposition") {
        auto s = shape_decomposition(parse_lambda("4,4,4,4,4,2,0,0", 8));
        CHECK(s.as == std::vector<int>{3, 3, 2, 2, 0});
        CHECK(s.kinds.back() == Kind::Placeholder);
        auto t = shape_decomposition(parse_lambda("5/2,3/2,3/2,1/2,-1/2", 5));
        CHECK(t.kinds == std::vector<Kind>{Kind::T, Kind::T, Kind::SpMinus});
        CHECK(t.as == std::vector<int>{4, 2, 0});
        CHECK(shape_decomposition(parse_lambda("0,0,0,0", 4)).kinds == std::vector<Kind>{Kind::Placeholder});
    }

    TEST_CASE("residues") {
        CHECK(residue(fac(Kind::T, 2, {-5, -4, -3, -2}, {-6, -5, -3, -2})) == 1);
        CHECK(residue(fac(Kind::T, 2, {-2, -1}, {-3, -1})) == 1);
        CHECK(residue(fac(Kind::T, 2, {-4, -3}, {})) == 0);
        CHECK(residue(fac(Kind::SpMinus, 0, {-5, -4, -1})) == 1);
    }

    TEST_CASE("derived columns") {
        auto d = derived_columns(fac(Kind::T, 2, {-5, -4, -3, -2}, {-6, -5, -3, -2}), false);
        CHECK(d.l_pre.entries == std::vector<Letter>{-5, -3, -2});
        CHECK(d.r_pre.entries == std::vector<Letter>{-6, -5, -4, -3, -2});
        auto e = derived_columns(fac(Kind::T, 2, {-2, -1}, {-3, -1}), false);
        CHECK(e.l_pre == Column({-1}));
        CHECK(e.r_pre == Column({-3, -2, -1}));
        int seen = 0;
        for (const auto& str : smoke_list()) {
            auto c = generate_component(highest_element(parse_lambda(str, 4)), spinor_ops(4));
            for (const auto& t : c.elems)
                for (const auto& f : t.factors)
                    if (f.kind == Kind::T && residue(f) == f.a) {
                        ++seen;
                        CHECK(derived_columns(f, false).l_pre == f.left);
                    }
        }
        CHECK(seen > 0);
    }

    TEST_CASE("admissibility and the triangle order") {
        SpinorTuple t = psi_lambda(kn8());
        for (int i = t.l(); i >= 2; --i) CHECK(is_admissible(t.T(i), t.T(i - 1), 8));
        CHECK_FALSE(triangle_lt(t.T(4), t.T(3), 8));
        CHECK(triangle_lt(t.T(2), t.T(1), 8));
        SpinorTuple u = tuple5();
        CHECK(is_admissible(u.T(2), u.T(1), 5));
        CHECK(is_admissible(u.T(1), u.T(0), 5));
        CHECK_FALSE(triangle_lt(u.T(2), u.T(1), 5));
        CHECK_FALSE(triangle_lt(u.T(1), u.T(0), 5));
        CHECK(in_T_lambda(u));
    }

    TEST_CASE("pair operators") {
        // One F suffices: the column (4,5,1-bar) has an odd barred part.
        Pair p{Column({-1}), Column({-3, -2, -1}), 0};
        auto q = opF(p);
        REQUIRE(q);
        CHECK(q->left == Column({-2, -1}));
        CHECK(q->right == Column({-3, -1}));
        CHECK(psi_a(Column({4, 5, -1}), 3, 5) == fac(Kind::T, 2, {-2, -1}, {-3, -1}));
        auto back = opE(*q);
        REQUIRE(back);
        CHECK(back->left == p.left);
        CHECK(back->right == p.right);
        CHECK_FALSE(opE(Pair{Column({-3}), Column({-1}), 0}));
    }

    TEST_CASE("E after F on random pairs") {
        std::mt19937 rng(3);
        const int n = 6;
        auto column = [&](int h) {
            std::vector<Letter> all;
            for (int k = n; k >= 1; --k) all.push_back(-k);
            std::shuffle(all.begin(), all.end(), rng);
            all.resize(h);
            std::sort(all.begin(), all.end());
            return Column(all);
        };
        int tried = 0;
        for (int it = 0; it < 20000 && tried < 100; ++it) {
            std::uniform_int_distribution<int> ht(0, n);
            Column l = column(ht(rng)), r = column(ht(rng));
            Pair p{l, r, pair_amin(l, r)};
            if (!pair_semistandard(l, r, p.a) || residue(p) != 0) continue;
            auto g = opF(p);
            if (!g) continue;
            ++tried;
            auto h = opE(*g);
            REQUIRE(h);
            CHECK(h->left == l);
            CHECK(h->right == r);
        }
        CHECK(tried == 100);
    }

    TEST_CASE("highest factors") {
        auto t1 = highest_factor(Kind::T, 1, 4);
        CHECK(t1.left == Column({-4}));
        CHECK(t1.right.empty());
        CHECK(highest_factor(Kind::T, 2, 4).left == Column({-4, -3}));
        CHECK(highest_factor(Kind::SpMinus, 0, 4).left == Column({-4}));
        CHECK(factor_weight(highest_factor(Kind::T, 2, 4), 4) == fundamental(2, 4));
        CHECK(factor_weight(highest_factor(Kind::T, 0, 4), 4) == fundamental(4, 4) * 2);
        CHECK(factor_weight(fac(Kind::TBar0, 0, {-4}, {-4}), 4) == fundamental(3, 4) * 2);
    }

    TEST_CASE("f_n on the empty spin column") {
        auto h = highest_element(parse_lambda("1/2,1/2,1/2,1/2", 4));
        auto f = spinor_f(h, 4);
        REQUIRE(f);
        CHECK(f->T(0).left == Column({-4, -3}));
    }

    TEST_CASE("sigma of the n = 5 tuple") { CHECK(sigma(tuple5()) == "-++-."); }

    TEST_CASE("highest elements are highest") {
        for (const auto& s : smoke_list()) {
            auto h = highest_element(parse_lambda(s, 4));
            CHECK(in_T_lambda(h));
            for (int i = 1; i <= 4; ++i) CHECK_FALSE(spinor_e(h, i));
        }
    }

    TEST_CASE("closure under f") {
        auto c = generate_component(highest_element(parse_lambda("2,1,1,0", 4)), spinor_ops(4), 2);
        for (const auto& x : c.elems)
            for (int i = 1; i <= 4; ++i)
                if (auto y = spinor_f(x, i)) CHECK(in_T_lambda(*y));
    }
}

TEST_SUITE("kn_spinor_iso") {
    TEST_CASE("column complements") {
        auto k = kn8();
        CHECK(phi(psi_lambda(k).T(1), 8) == Column({1, 7, 8, -5, -3, -2}));
        CHECK(phi(fac(Kind::SpMinus, 0, {-5, -4, -1}), 8) == Column({2, 3, 6, 7, 8, -5, -4, -1}));
        CHECK(phi(fac(Kind::SpPlus, 0, {}), 4) == Column({1, 2, 3, 4}));
    }

    TEST_CASE("single columns") {
        auto f = psi_a(Column({1, 2, 6, 8, -7}), 5, 8);
        CHECK(f.left == Column({-7, -4, -3}));
        CHECK(f.right == Column({-7, -5}));
        CHECK(psi_sp(Column({2, 3, -5, -4, -1}), 5).left == Column({-5, -4, -1}));
    }

    TEST_CASE("round trip on factors") {
        for (const auto& s : smoke_list()) {
            auto c = generate_component(kn_highest(parse_lambda(s, 4)), kn_ops(4));
            for (const auto& x : c.elems) CHECK(phi_lambda(psi_lambda(x)) == x);
        }
    }

    TEST_CASE("worked examples") {
        CHECK(psi_lambda(kn5()) == tuple5());
        for (const auto& s : smoke_list()) {
            auto l = parse_lambda(s, 4);
            CHECK(psi_lambda(kn_highest(l)) == highest_element(l));
        }
    }

    TEST_CASE("isomorphism at (2,1,0,0)") {
        auto l = parse_lambda("2,1,0,0", 4);
        auto c = generate_component(kn_highest(l), kn_ops(4));
        std::function<SpinorTuple(const KNTableau&)> m = psi_lambda;
        CHECK(verify_morphism(c, kn_ops(4), m, spinor_ops(4), Weight(4), MorphismKind::isomorphism).ok);
    }
}
