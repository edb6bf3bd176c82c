#include <doctest.h>

#include <random>

#include "crystald/oracle.hpp"
#include "crystald/tableau.hpp"
#include "helpers.hpp"

using namespace crystald;
using testing_helpers::strs;

TEST_SUITE("foundations") {
    TEST_CASE("letter order") {
        CHECK(compare(4, -5, 5) == Ord::less);
        CHECK(compare(5, -5, 5) == Ord::incomparable);
        CHECK(compare(-5, 5, 5) == Ord::incomparable);
        CHECK(compare(-3, -3, 5) == Ord::equal);
        CHECK(compare(-1, 1, 5) == Ord::greater);
        CHECK(compare(-5, -4, 5) == Ord::less);
        CHECK(letter_str(-3) == "-3");
        CHECK(parse_letter(letter_str(-7)) == -7);
    }

    TEST_CASE("order is transitive away from n, n-bar") {
        const int n = 4;
        std::vector<Letter> all;
        for (int k = 1; k <= n; ++k) all.insert(all.end(), {k, -k});
        int incomparable = 0;
        for (Letter a : all)
            for (Letter b : all) {
                Ord ab = compare(a, b, n), ba = compare(b, a, n);
                if (ab == Ord::incomparable) ++incomparable;
                if (ab == Ord::less) CHECK(ba == Ord::greater);
                for (Letter c : all)
                    if (ab == Ord::less && compare(b, c, n) == Ord::less) CHECK(compare(a, c, n) == Ord::less);
            }
        CHECK(incomparable == 2);
    }

    TEST_CASE("dominant weights") {
        auto l = parse_lambda("5/2,3/2,3/2,1/2,-1/2", 5);
        CHECK(l.d == std::vector<int>{5, 3, 3, 1, -1});
        CHECK(l.half_integral());
        CHECK(parse_lambda("1,1,0,0", 4).d == std::vector<int>{2, 2, 0, 0});
        CHECK_THROWS_AS(parse_lambda("1,2,0,0", 4), Error);
        CHECK_THROWS_AS(parse_lambda("1,1,1,1/2", 4), Error);
        CHECK_THROWS_AS(parse_lambda("1,1,0,-1", 4), Error);
        CHECK_NOTHROW(parse_lambda("1,1,1,-1", 4));
    }

    TEST_CASE("weights") {
        Weight a = alpha(1, 4);
        CHECK(a.d == std::vector<int>{2, -2, 0, 0});
        CHECK(pairing4(a, a) == 8);
        CHECK(fundamental(4, 4).d == std::vector<int>{1, 1, 1, 1});
        CHECK(fundamental(3, 4).d == std::vector<int>{1, 1, 1, -1});
        CHECK((eps(1, 4) - eps(2, 4)) == a);
    }

    TEST_CASE("partitions") {
        Partition p({3, 2, 1, 1});
        CHECK(p.conjugate() == Partition({4, 2, 1}));
        CHECK(p.size() == 7);
        CHECK(p.length() == 4);
        CHECK(Partition({2, 2, 1, 1}).conjugate().even_columns() == false);
        CHECK(Partition({2, 2, 2, 2}).even_columns());
    }

    TEST_CASE("word reads right to left, top to bottom") {
        CHECK(word(std::vector<Column>{Column({-2, -1})}) == std::vector<Letter>{-2, -1});
        CHECK(word(std::vector<Column>{Column({-3}), Column({-5, -4})}) == std::vector<Letter>{-3, -5, -4});
    }

    TEST_CASE("single slide") {
        ProfileTableau t{4, {Column({-3}), Column({-2}, 1)}};
        ProfileTableau s = jdt_slide(t, Cell{0, -1});
        CHECK(strs(s.columns) == std::vector<std::string>{"[-3|-2]"});
        CHECK(knuth_equivalent(word(t), word(s)));
    }

    TEST_CASE("reverse column insertion") {
        auto r = reverse_column_insert(ProfileTableau{5, {}}, -3);
        CHECK(strs(r.tableau.columns) == std::vector<std::string>{"[-3]"});
        auto [rest, z] = reverse_column_eject(ProfileTableau{5, {Column({-1})}}, 0);
        CHECK(z == -1);
        CHECK(rest.columns.empty());
        auto [rest2, z2] = reverse_column_eject(ProfileTableau{5, {Column({-2}), Column({-3})}}, 1);
        CHECK(z2 == -2);
        CHECK(strs(rest2.columns) == std::vector<std::string>{"[-3]"});
    }

    TEST_CASE("insert then eject on random tableaux") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> letter(-4, -1);
        for (int k = 0; k < 50; ++k) {
            ProfileTableau t{4, {}};
            int size = std::uniform_int_distribution<int>(0, 8)(rng);
            for (int m = 0; m < size; ++m) t = reverse_column_insert(t, letter(rng)).tableau;
            Letter a = letter(rng);
            auto ins = reverse_column_insert(t, a);
            CHECK(is_pi_shape(ins.tableau));
            CHECK(semistandard_along_L(ins.tableau));
            auto [back, z] = reverse_column_eject(ins.tableau, ins.column);
            CHECK(z == a);
            CHECK(strs(back.columns) == strs(t.columns));
        }
    }
}
