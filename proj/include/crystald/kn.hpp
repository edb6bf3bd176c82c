#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystald/core.hpp"
#include "crystald/crystal.hpp"
#include "crystald/tableau.hpp"

namespace crystald {

// Columns right to left over [n] and [n-bar]. With `spin`, columns[0] is
// the half-width column (height n, one of i / i-bar per row).
struct KNTableau {
    int n = 0;
    DominantWeight lambda;
    bool spin = false;
    std::vector<Column> columns;

    bool operator==(const KNTableau&) const = default;
};

// Heights of the full-width columns, rightmost (tallest) first.
std::vector<int> kn_column_heights(const DominantWeight& lambda);

// Letter crystal of the vector representation.
std::optional<Letter> letter_f(Letter x, int i, int n);
std::optional<Letter> letter_e(Letter x, int i, int n);
Weight letter_weight(Letter x, int n);

// Spin column as a display column: unbarred ascending, then barred.
Column spin_column(const std::vector<bool>& barred);
std::vector<bool> spin_barred(const Column& c, int n);

struct Violation {
    std::string clause;
    std::string where;
};

struct KNReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// Throws "shape-error" if the column heights do not match lambda.
// The (d-7) clause is only evaluated with `check_d7`.
KNReport validate_kn(const KNTableau& t, bool check_d7 = false);

std::optional<KNTableau> kn_f(const KNTableau& t, int i);
std::optional<KNTableau> kn_e(const KNTableau& t, int i);
Weight kn_weight(const KNTableau& t);
KNTableau kn_highest(const DominantWeight& lambda);

std::string kn_key(const KNTableau& t);
CrystalOps<KNTableau> kn_ops(int n);

// Every filling of lambda^pi satisfying the column and row conditions,
// filtered by validate_kn. Small shapes only.
std::vector<KNTableau> kn_brute_force(const DominantWeight& lambda, bool check_d7 = false);

}  // namespace crystald
