#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crystald/crystal.hpp"
#include "crystald/kn.hpp"
#include "crystald/separation.hpp"

namespace crystald {

struct Root {
    int i = 0, j = 0;  // i < j
    bool sum = false;  // eps_i + eps_j, else eps_i - eps_j
    Weight weight(int n) const;
    std::string str() const;
};

struct RootOrder {
    int n = 0;
    std::vector<Root> beta;  // beta_1 .. beta_N, 0-based

    int N() const { return static_cast<int>(beta.size()); }
    int M() const { return N() / 2; }
    int index(int i, int j, bool sum) const;  // 0-based
};

// Throws "rank-error" for n < 4.
RootOrder convex_order(int n);

struct LusztigDatum {
    int n = 0;
    std::vector<int> c;
    Weight shift;

    bool operator==(const LusztigDatum&) const = default;
};

// (a, b) pairs of barred letters; a < b.
using Biword = std::vector<std::pair<Letter, Letter>>;

bool biword_less(const std::pair<Letter, Letter>& x, const std::pair<Letter, Letter>& y);
void sort_biword(Biword& w);

// Body tableau of shape delta^pi (columns right to left, empty ones ignored).
Biword rsk_biword(const ProfileTableau& body);
std::vector<int> biword_to_cJ(const Biword& w, int n);
Biword cJ_to_biword(const std::vector<int>& c, int n);
std::vector<int> rsk_burge(const ProfileTableau& body);
ProfileTableau rsk_burge_inverse(const std::vector<int>& c, int n);

// Straight tableau given by its rows (left to right) over [n-bar].
using Rows = std::vector<std::vector<Letter>>;
Rows tail_rows(const VermaElement& v);
std::vector<int> c_J(const Rows& rows, int n);
Rows c_J_inverse(const std::vector<int>& c, const Partition& mu, int n);
Weight shift_mu(const Partition& mu, int n);

// Full length N vectors; throws "support-error" on overlap.
std::vector<int> concat(const std::vector<int>& upper, const std::vector<int>& lower, int n);

LusztigDatum xi_from_verma(const VermaElement& v, const DominantWeight& lambda);
LusztigDatum xi_lambda(const KNTableau& t);
Weight datum_weight(const LusztigDatum& x);

// Operators on B^J (x) B_J (x) t_{omega_lambda} transported through
// rsk_burge and c_J, combined by the tensor rule.
CrystalOps<LusztigDatum> xi_ops(const DominantWeight& lambda);
std::string datum_key(const LusztigDatum& x);

// The big crystal V on bodies alone.
std::optional<ProfileTableau> v_f(const ProfileTableau& body, int i);
std::optional<ProfileTableau> v_e(const ProfileTableau& body, int i);

}  // namespace crystald
