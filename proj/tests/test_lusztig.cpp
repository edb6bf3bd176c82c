#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "crystald/lusztig.hpp"
#include "crystald/oracle.hpp"
#include "helpers.hpp"

using namespace crystald;
using namespace testing_helpers;

TEST_SUITE("lusztig") {
    TEST_CASE("convex order") {
        auto o = convex_order(5);
        CHECK(o.N() == 20);
        CHECK(o.beta[0].str() == "e4+e5");
        CHECK(o.beta[10].str() == "e1-e2");
        CHECK(o.beta[14].str() == "e2-e3");
        CHECK(o.beta[17].str() == "e3-e4");
        CHECK(o.beta[19].str() == "e4-e5");
        for (int n = 4; n <= 7; ++n) {
            auto p = convex_order(n);
            CHECK(p.N() == n * n - n);
            std::set<std::string> seen;
            for (const auto& b : p.beta) seen.insert(b.str());
            CHECK(static_cast<int>(seen.size()) == p.N());
        }
        CHECK_THROWS_AS(convex_order(3), Error);
    }

    TEST_CASE("convexity") {
        // A sum of two roots sits between them.
        auto o = convex_order(5);
        for (int x = 0; x < o.N(); ++x)
            for (int y = x + 1; y < o.N(); ++y) {
                Weight s = o.beta[x].weight(5) + o.beta[y].weight(5);
                for (int z = 0; z < o.N(); ++z)
                    if (o.beta[z].weight(5) == s) {
                        CHECK(x < z);
                        CHECK(z < y);
                    }
            }
    }

    TEST_CASE("body of the n = 5 example") {
        VermaElement v = chi_lambda(tuple5());
        Biword w = rsk_biword(v.body());
        sort_biword(w);
        Biword want{{-5, -4}, {-5, -1}, {-3, -1}};
        sort_biword(want);
        CHECK(w == want);
        auto c = rsk_burge(v.body());
        std::vector<int> ones;
        for (int k = 0; k < static_cast<int>(c.size()); ++k)
            if (c[k]) ones.push_back(k + 1);
        CHECK(ones == std::vector<int>{1, 4, 9});
    }

    TEST_CASE("empty and single column bodies") {
        CHECK(rsk_burge(ProfileTableau{5, {}}) == std::vector<int>(20, 0));
        ProfileTableau one{5, {Column({-5, -1})}};
        CHECK(rsk_biword(one) == Biword{{-5, -1}});
        auto c = rsk_burge(one);
        CHECK(c[convex_order(5).index(1, 5, true)] == 1);
        CHECK(std::count(c.begin(), c.end(), 0) == 19);
        CHECK(rsk_burge_inverse(c, 5).columns.front() == Column({-5, -1}));
    }

    TEST_CASE("odd columns are rejected") {
        CHECK_THROWS_AS(rsk_burge(ProfileTableau{5, {Column({-3})}}), Error);
    }

    TEST_CASE("tail of the n = 5 example") {
        VermaElement v = chi_lambda(tuple5());
        auto c = c_J(tail_rows(v), 5);
        std::vector<int> ones;
        for (int k = 0; k < static_cast<int>(c.size()); ++k)
            if (c[k]) ones.push_back(k + 1);
        CHECK(ones == std::vector<int>{11, 13, 15, 17, 18, 20});
        CHECK(c_J_inverse(c, tail_shape(v), 5) == tail_rows(v));
    }

    TEST_CASE("superstandard tail") {
        Rows rows{{-5, -5, -5}, {-4, -4}, {-3}};
        auto c = c_J(rows, 5);
        CHECK(std::all_of(c.begin(), c.end(), [](int x) { return x == 0; }));
    }

    TEST_CASE("concatenation") {
        std::vector<int> up{1, 0, 0, 1, 0, 0, 0, 0, 1, 0}, lo{1, 0, 1, 0, 1, 0, 1, 1, 0, 1};
        std::vector<int> upper = up, lower(10, 0);
        upper.resize(20, 0);
        lower.insert(lower.end(), lo.begin(), lo.end());
        auto c = concat(upper, lower, 5);
        CHECK(c == std::vector<int>{1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1});
        CHECK(std::vector<int>(c.begin(), c.begin() + 10) == up);
        CHECK(std::vector<int>(c.begin() + 10, c.end()) == lo);
        CHECK(concat(std::vector<int>(20, 0), std::vector<int>(20, 0), 5) == std::vector<int>(20, 0));
        CHECK_THROWS_AS(concat(lower, upper, 5), Error);
    }

    TEST_CASE("end to end") {
        auto x = xi_lambda(kn5());
        CHECK(x.c == std::vector<int>{1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1});
        CHECK(datum_weight(x) == kn_weight(kn5()));
        auto h = xi_lambda(kn_highest(kn5().lambda));
        CHECK(std::all_of(h.c.begin(), h.c.end(), [](int v) { return v == 0; }));
    }

    TEST_CASE("tail weights") {
        std::mt19937 rng(9);
        for (const auto& s : smoke_list()) {
            auto l = parse_lambda(s, 4);
            auto comp = generate_component(highest_element(l), spinor_ops(4));
            for (int k = 0; k < 10; ++k) {
                VermaElement v = chi_lambda(comp.elems[std::uniform_int_distribution<std::size_t>(0, comp.elems.size() - 1)(rng)]);
                Rows rows = tail_rows(v);
                auto c = c_J(rows, 4);
                Weight w = shift_mu(tail_shape(v), 4);
                auto o = convex_order(4);
                for (int b = 0; b < o.N(); ++b) w -= o.beta[b].weight(4) * c[b];
                Weight direct(4);
                for (const auto& r : rows)
                    for (Letter x : r) direct += eps(-x, 4) * -1;
                CHECK(w == direct);
            }
        }
    }

    TEST_CASE("embedding on the smoke list") {
        for (const auto& s : smoke_list()) {
            auto l = parse_lambda(s, 4);
            auto c = generate_component(kn_highest(l), kn_ops(4));
            std::function<LusztigDatum(const KNTableau&)> m = xi_lambda;
            auto rep = verify_morphism(c, kn_ops(4), m, xi_ops(l), Weight(4), MorphismKind::embedding);
            CHECK_MESSAGE(rep.ok, s << ": " << rep.witness);
        }
    }
}
