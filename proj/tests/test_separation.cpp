#include <doctest.h>

#include <random>

#include "crystald/lusztig.hpp"
#include "crystald/oracle.hpp"
#include "helpers.hpp"

using namespace crystald;
using namespace testing_helpers;

TEST_SUITE("separation") {
    TEST_CASE("F at an empty slot is null") {
        std::vector<Column> u{Column(), Column({-2}), Column()};
        CHECK_FALSE(bicrystal_F(0, u));
    }

    TEST_CASE("E after F on random tuples") {
        std::mt19937 rng(11);
        int tried = 0;
        for (const char* s : {"2,1,0,0", "1,1,1,0", "2,1,1,-1", "3/2,1/2,1/2,1/2"}) {
            auto c = generate_component(highest_element(parse_lambda(s, 4)), spinor_ops(4));
            for (int k = 0; k < 60; ++k) {
                auto u = flatten(c.elems[std::uniform_int_distribution<std::size_t>(0, c.elems.size() - 1)(rng)]);
                for (int j = 0; j + 1 < static_cast<int>(u.size()); ++j) {
                    auto v = bicrystal_F(j, u);
                    if (!v) continue;
                    ++tried;
                    auto w = bicrystal_E(j, *v);
                    REQUIRE(w);
                    CHECK(*w == u);
                }
            }
        }
        CHECK(tried >= 200);
    }

    TEST_CASE("sliding operators of the positive example") {
        SepTrace tr;
        separate(psi_lambda(kn8()), &tr);
        REQUIRE(tr.steps.size() >= 3);
        CHECK(tr.steps[0].ops == "E6E5F6^2F5");
        // With a = 2 the definition gives a single F_4 here.
        CHECK(tr.steps[1].ops == "E4E3F4F3");
        CHECK(tr.steps[2].ops == "F2^2");
        for (const auto& s : tr.steps) CHECK(s.semistandard);
    }

    TEST_CASE("positive example") {
        VermaElement v = separate(psi_lambda(kn8()));
        CHECK(tail_rows(v) == Rows{{-7, -7, -5, -3}, {-4, -2, -2, -2}, {-3, -1}});
        CHECK(tail_shape(v) == Partition({4, 4, 2}));
        CHECK(strs(v.body().columns) ==
              std::vector<std::string>{"[]", "[-6,-5,-3,-2]", "[-5,-3]", "[-6,-4]", "[-6,-4]", "[-6,-4]"});
    }

    TEST_CASE("negative example") {
        SepTrace tr;
        VermaElement v = separate(tuple5(), &tr);
        REQUIRE(tr.steps.size() == 3);
        CHECK(strs(tr.steps[0].quad) ==
              std::vector<std::string>{"[|-5,-3,-2,-1]", "[|-4,-1]", "[-5,-2]", "[-3,-1]"});
        CHECK(strs(tr.steps[1].quad) ==
              std::vector<std::string>{"[|-2,-1]", "[|-1]", "[-5,-4,-3,-1]", "[-5,-4,-3,-2,-1]"});
        CHECK(strs(v.columns) ==
              std::vector<std::string>{"[-5,-4,-3,-1]", "[-5,-1]", "[|-2]", "[|-4,-1]", "[|-5,-3,-2,-1]"});
        CHECK(body_shape(v) == Partition({2, 2, 1, 1}));
        CHECK(tail_shape(v) == Partition({3, 2, 1, 1}));
        CHECK(tau(v, 0) == "-.+..");
        CHECK(knuth_equivalent(word(flatten(tuple5())), word(v.columns)) ==
              knuth_equivalent_jdt(word(flatten(tuple5())), word(v.columns)));
    }

    TEST_CASE("highest elements separate to superstandard tails") {
        for (const auto& s : smoke_list()) {
            auto l = parse_lambda(s, 4);
            VermaElement v = chi_lambda(highest_element(l));
            CHECK(v.body().columns.empty() == false);
            for (const auto& c : v.body().columns) CHECK(c.empty());
            Rows rows = tail_rows(v);
            auto mu = expected_mu(l);
            REQUIRE(rows.size() == mu.parts.size());
            for (std::size_t k = 0; k < rows.size(); ++k) {
                CHECK(static_cast<int>(rows[k].size()) == mu.parts[k]);
                for (Letter x : rows[k]) CHECK(x == -(4 - static_cast<int>(k)));
            }
        }
    }

    TEST_CASE("f_n on an empty body") {
        VermaElement v = chi_lambda(highest_element(parse_lambda("1,0,0,0", 4)));
        auto w = verma_f(v, 4);
        REQUIRE(w);
        std::vector<Column> body = w->body().columns;
        CHECK(strs(body).size() >= 1);
        int added = 0;
        for (const auto& c : body)
            if (c == Column({-4, -3})) ++added;
        CHECK(added == 1);
    }

    TEST_CASE("e_n after f_n on random elements") {
        std::mt19937 rng(5);
        int tried = 0;
        for (const char* s : {"2,1,0,0", "1,1,1,-1", "3/2,1/2,1/2,-1/2", "2,1,1,-1"}) {
            auto c = generate_component(highest_element(parse_lambda(s, 4)), spinor_ops(4));
            for (int k = 0; k < 50; ++k) {
                VermaElement v = chi_lambda(c.elems[std::uniform_int_distribution<std::size_t>(0, c.elems.size() - 1)(rng)]);
                auto w = verma_f(v, 4);
                if (!w) continue;
                ++tried;
                auto back = verma_e(*w, 4);
                REQUIRE(back);
                CHECK(verma_key(*back) == verma_key(v));
            }
        }
        CHECK(tried >= 150);
    }

    TEST_CASE("equivariance at (3/2,1/2,1/2,-1/2)") {
        auto c = generate_component(highest_element(parse_lambda("3/2,1/2,1/2,-1/2", 4)), spinor_ops(4));
        std::function<VermaElement(const SpinorTuple&)> m = chi_lambda;
        auto rep = verify_morphism(c, spinor_ops(4), m, verma_ops(4), Weight(4), MorphismKind::embedding);
        CHECK_MESSAGE(rep.ok, rep.witness);
    }

    TEST_CASE("input outside T_lambda is rejected") {
        SpinorTuple t = tuple5();
        t.factors[0].right = Column({-1, -2});
        CHECK_THROWS_AS(separate(t), Error);
    }
}
