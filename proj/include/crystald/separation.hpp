#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystald/crystal.hpp"
#include "crystald/spinor.hpp"
#include "crystald/tableau.hpp"

namespace crystald {

// Bicrystal operators on columns u[0..N] (u[j] = U_j): X_j acts on the
// pair (U_{j+1}, U_j) normalised to residue 0. Tails are left alone.
std::optional<std::vector<Column>> bicrystal_F(int j, const std::vector<Column>& u);
std::optional<std::vector<Column>> bicrystal_E(int j, const std::vector<Column>& u);

struct SepStep {
    int depth = 0;
    int j = 0;
    bool triangle = true;
    int a = 0;
    std::string ops;             // e.g. "E6E5F6^2F5"
    std::vector<Column> quad;    // (U_{j+2}, U~_{j+1}, U~_j, U_{j-1}) left to right
    bool semistandard = true;
};

struct SepTrace {
    std::vector<SepStep> steps;
};

// Columns over slots 0..2l (index 0 = U_0 slot, empty when r is even);
// entries above L form the body, entries below it the tail. Slots past
// 2l may appear after f_n.
struct VermaElement {
    int n = 0;
    int r = 0;
    std::vector<Column> columns;

    ProfileTableau body() const;
    ProfileTableau tail() const;
    bool operator==(const VermaElement&) const = default;
};

VermaElement separate(const SpinorTuple& t, SepTrace* trace = nullptr);
Weight verma_shift(const VermaElement& v);  // r Lambda_n
Weight verma_weight(const VermaElement& v);  // including the shift

// The n-th signature over all columns, padded with `pad` extra '+'.
Signature tau(const VermaElement& v, int pad = 1);

std::optional<VermaElement> verma_f(const VermaElement& v, int i);
std::optional<VermaElement> verma_e(const VermaElement& v, int i);
// Set when an f_n / e_n result leaves the delta^pi shapes.
const std::string& verma_diagnostic();

std::string verma_key(const VermaElement& v);
CrystalOps<VermaElement> verma_ops(int n);

VermaElement chi_lambda(const SpinorTuple& t);

// Shape checks for (S2).
bool body_is_delta_pi(const VermaElement& v);
Partition body_shape(const VermaElement& v);
Partition tail_shape(const VermaElement& v);
Partition expected_mu(const DominantWeight& lambda);

}  // namespace crystald
