#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crystald/core.hpp"

namespace crystald {

using BigInt = boost::multiprecision::cpp_int;

// prod over eps_i -+ eps_j of (lambda + rho, beta) / (rho, beta).
BigInt weyl_dim(const DominantWeight& lambda);

using TableauRows = std::vector<std::vector<Letter>>;

// Schensted row insertion, left to right.
TableauRows insertion_tableau(const std::vector<Letter>& w);
// Rectification by jeu de taquin of the anti-diagonal skew tableau whose
// row word (bottom to top) is w.
TableauRows rectify_jdt(const std::vector<Letter>& w);

bool knuth_equivalent(const std::vector<Letter>& a, const std::vector<Letter>& b);
bool knuth_equivalent_jdt(const std::vector<Letter>& a, const std::vector<Letter>& b);

struct DimReport {
    std::string lambda;
    BigInt predicted;
    std::size_t spinor = 0;
    std::size_t kn = 0;
    bool match = false;
};

// The fixed smoke weights, all for n = 4.
const std::vector<std::string>& smoke_list();
constexpr int kSmokeN = 4;

DimReport dimension_check(const DominantWeight& lambda, int threads = 1);

}  // namespace crystald
