#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystald/core.hpp"
#include "crystald/crystal.hpp"
#include "crystald/tableau.hpp"

namespace crystald {

enum class Kind { T, TBar0, SpPlus, SpMinus, Placeholder };

std::string kind_str(Kind k, int a);
Kind parse_kind(const std::string& s, int& a);

// Two columns over [n-bar] of skew shape lambda(a,b,c): the left column
// hangs `a` cells below the bottom of the right one.
struct Pair {
    Column left, right;
    int a = 0;

    int c() const { return left.ht() - a; }
    int b() const { return right.ht() - c(); }
};

bool pair_semistandard(const Column& left, const Column& right, int a);
int pair_amin(const Column& left, const Column& right);
int residue(const Pair& p);
// Both normalise the residue first. nullopt is the formal zero.
std::optional<Pair> opE(const Pair& p);
std::optional<Pair> opF(const Pair& p);

// Spin columns live in `left`; the placeholder has both columns empty.
struct Factor {
    Kind kind = Kind::Placeholder;
    int a = 0;
    Column left, right;

    bool spin() const { return kind == Kind::SpPlus || kind == Kind::SpMinus; }
    Pair pair() const { return Pair{left, right, a}; }
    bool operator==(const Factor&) const = default;
};

int residue(const Factor& f);
bool factor_valid(const Factor& f, int n);

struct Derived {
    Column l_star, r_star;  // only when r = 1
    Column l_pre, r_pre;    // ^L T, ^R T
};
// Throws "residue-error" if the starred pair is requested with r = 0.
Derived derived_columns(const Factor& f, bool starred);

bool is_admissible(const Factor& t, const Factor& s, int n);
bool triangle_lt(const Factor& t, const Factor& s, int n);

struct Skeleton {
    std::vector<Kind> kinds;  // leftmost first, T_0 last
    std::vector<int> as;
};
Skeleton shape_decomposition(const DominantWeight& lambda);

// Factors leftmost first: T_l, ..., T_1, T_0. T_0 is always present.
struct SpinorTuple {
    int n = 0;
    DominantWeight lambda;
    std::vector<Factor> factors;

    int l() const { return static_cast<int>(factors.size()) - 1; }
    const Factor& T(int i) const { return factors[l() - i]; }
    Factor& T(int i) { return factors[l() - i]; }
    bool operator==(const SpinorTuple&) const = default;
};

// U_0 .. U_{2l}: U_{2i} = T_i^L, U_{2i-1} = T_i^R, U_0 = T_0.
std::vector<Column> flatten(const SpinorTuple& t);
void unflatten(SpinorTuple& t, const std::vector<Column>& u);

Factor highest_factor(Kind k, int a, int n);
SpinorTuple highest_element(const DominantWeight& lambda);

Weight factor_weight(const Factor& f, int n);
Weight spinor_weight(const SpinorTuple& t);

bool in_T_lambda(const SpinorTuple& t);

// Sign of a column for the n-th signature; `placeholder` gives '.'.
char sigma_sign(const Column& u, int n, bool placeholder = false);
Signature sigma(const SpinorTuple& t);

std::optional<SpinorTuple> spinor_f(const SpinorTuple& t, int i);
std::optional<SpinorTuple> spinor_e(const SpinorTuple& t, int i);

// J-operators on a column word (dual alphabet) read in the given order.
// Returns (column, index in column) acted on, or column = -1.
std::pair<int, int> word_site_f(const std::vector<Column>& cols, int i);
std::pair<int, int> word_site_e(const std::vector<Column>& cols, int i);
bool word_f(std::vector<Column>& cols, int i);
bool word_e(std::vector<Column>& cols, int i);

std::string factor_key(const Factor& f);
std::string spinor_key(const SpinorTuple& t);
CrystalOps<SpinorTuple> spinor_ops(int n);

}  // namespace crystald
