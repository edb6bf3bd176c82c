#pragma once

#include <string>
#include <vector>

#include "crystald/iso.hpp"
#include "crystald/separation.hpp"

namespace testing_helpers {

using namespace crystald;

inline Factor fac(Kind k, int a, std::vector<Letter> l, std::vector<Letter> r = {}) {
    Factor f;
    f.kind = k;
    f.a = a;
    f.left = Column(std::move(l));
    f.right = Column(std::move(r));
    return f;
}

inline KNTableau kn5() {
    KNTableau k;
    k.n = 5;
    k.lambda = parse_lambda("5/2,3/2,3/2,1/2,-1/2", 5);
    k.spin = true;
    k.columns = {Column({2, 3, -5, -4, -1}), Column({4, 5, -1}), Column({-5})};
    return k;
}

inline KNTableau kn8() {
    KNTableau k;
    k.n = 8;
    k.lambda = parse_lambda("4,4,4,4,4,2,0,0", 8);
    k.columns = {Column({1, 7, 8, -5, -3, -2}), Column({1, 4, 5, 7, 8, -4}), Column({3, 5, 7, 8, -6}),
                 Column({1, 2, 6, 8, -7})};
    return k;
}

// The n = 5 tuple in T(4) x T(2) x T^sp-.
inline SpinorTuple tuple5() {
    SpinorTuple t;
    t.n = 5;
    t.lambda = parse_lambda("5/2,3/2,3/2,1/2,-1/2", 5);
    t.factors = {fac(Kind::T, 4, {-5, -3, -2, -1}, {-5, -4}), fac(Kind::T, 2, {-2, -1}, {-3, -1}),
                 fac(Kind::SpMinus, 0, {-5, -4, -1})};
    return t;
}

inline std::vector<std::string> strs(const std::vector<Column>& cols) {
    std::vector<std::string> out;
    for (const auto& c : cols) out.push_back(column_str(c));
    while (!out.empty() && out.back() == "[]") out.pop_back();
    return out;
}

}  // namespace testing_helpers
