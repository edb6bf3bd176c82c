#include <doctest.h>

#include "crystald/kn.hpp"
#include "crystald/oracle.hpp"
#include "crystald/spinor.hpp"

using namespace crystald;

TEST_SUITE("crystal_core") {
    TEST_CASE("signature reduction") {
        CHECK(reduce_signature("-++-.") == "-+...");
        CHECK(reduce_signature("-.+..") == "-.+..");
        CHECK(reduce_signature("....") == "....");
        CHECK(reduce_signature("+.-") == "...");
        CHECK(reduce_signature("++--") == "....");
        CHECK(reduce_signature("-+-+") == "-..+");
        CHECK(f_site(reduce_signature("-+-+")) == 3);
        CHECK(e_site(reduce_signature("-+-+")) == 0);
        CHECK(f_site(reduce_signature("+-")) == -1);
    }

    TEST_CASE("tensor rule") {
        CHECK(tensor_f({{0, 1}, {kNegInf, kNegInf}}) == 0);
        CHECK(tensor_e({{0, 1}, {kNegInf, kNegInf}}) == -1);
        CHECK(tensor_f({{kNegInf, kNegInf}, {0, 1}}) == 1);
        CHECK(tensor_f({{0, 0}, {0, 0}}) == -1);
        CHECK(tensor_e({{1, 0}, {0, 1}}) == 0);
    }

    TEST_CASE("vector representation graph") {
        auto l = parse_lambda("1,0,0,0", 4);
        auto c = generate_component(kn_highest(l), kn_ops(4));
        CHECK(c.elems.size() == 8);
        CHECK(c.graph.edges.size() == 8);
        auto f1 = kn_f(kn_highest(l), 1);
        REQUIRE(f1);
        CHECK(f1->columns[0].entries == std::vector<Letter>{2});
        int from4 = 0;
        for (auto [u, i, v] : c.graph.edges)
            if (i == 4) ++from4;
        CHECK(from4 == 2);
    }

    TEST_CASE("adjoint has 28 nodes") {
        auto c = generate_component(kn_highest(parse_lambda("1,1,0,0", 4)), kn_ops(4), 2);
        CHECK(c.elems.size() == 28);
    }

    TEST_CASE("one-point crystal") {
        auto c = generate_component(kn_highest(parse_lambda("0,0,0,0", 4)), kn_ops(4));
        CHECK(c.elems.size() == 1);
        CHECK(c.graph.edges.empty());
    }

    TEST_CASE("morphism check catches a corrupted map") {
        auto l = parse_lambda("1,0,0,0", 4);
        auto c = generate_component(kn_highest(l), kn_ops(4));
        std::function<KNTableau(const KNTableau&)> id = [](const KNTableau& t) { return t; };
        CHECK(verify_morphism(c, kn_ops(4), id, kn_ops(4), Weight(4), MorphismKind::isomorphism).ok);
        std::function<KNTableau(const KNTableau&)> bad = [](const KNTableau& t) {
            KNTableau u = t;
            if (u.columns[0].entries[0] == 2) u.columns[0].entries[0] = 3;
            else if (u.columns[0].entries[0] == 3) u.columns[0].entries[0] = 2;
            return u;
        };
        auto rep = verify_morphism(c, kn_ops(4), bad, kn_ops(4), Weight(4), MorphismKind::isomorphism);
        CHECK_FALSE(rep.ok);
        CHECK_FALSE(rep.witness.empty());
    }

    TEST_CASE("component comparison") {
        auto l = parse_lambda("2,1,1,0", 4);
        auto a = generate_component(kn_highest(l), kn_ops(4), 2);
        auto b = generate_component(highest_element(l), spinor_ops(4), 2);
        CHECK(compare_components(a.graph, a.graph));
        CHECK(compare_components(a.graph, b.graph));
        auto c = generate_component(kn_highest(parse_lambda("2,1,0,0", 4)), kn_ops(4));
        CHECK_FALSE(compare_components(a.graph, c.graph));
    }

    TEST_CASE("node budget") {
        CHECK_THROWS_AS(generate_component(kn_highest(parse_lambda("1,1,0,0", 4)), kn_ops(4), 1, 10), Error);
    }

    TEST_CASE("operators are mutually inverse") {
        for (const auto& s : smoke_list()) {
            auto l = parse_lambda(s, 4);
            auto c = generate_component(kn_highest(l), kn_ops(4));
            for (const auto& x : c.elems)
                for (int i = 1; i <= 4; ++i) {
                    if (auto y = kn_f(x, i)) {
                        auto z = kn_e(*y, i);
                        REQUIRE(z);
                        CHECK(kn_key(*z) == kn_key(x));
                        CHECK(kn_weight(*y) == kn_weight(x) - alpha(i, 4));
                    }
                }
        }
    }
}
