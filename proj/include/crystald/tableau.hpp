#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crystald/core.hpp"

namespace crystald {

// Entries top to bottom; the bottom `tail` entries sit below L.
struct Column {
    std::vector<Letter> entries;
    int tail = 0;

    Column() = default;
    Column(std::vector<Letter> e, int t = 0) : entries(std::move(e)), tail(t) {}

    int ht() const { return static_cast<int>(entries.size()); }
    int body_ht() const { return ht() - tail; }
    bool empty() const { return entries.empty(); }
    // U[i], 1-based from the top.
    Letter top(int i) const { return entries[i - 1]; }
    // U(i), 1-based from the bottom.
    Letter bot(int i) const { return entries[ht() - i]; }
    Column body() const;
    Column tail_part() const;
    bool operator==(const Column&) const = default;
};

// Columns right to left; index 0 is the rightmost column.
struct ProfileTableau {
    int n = 0;
    std::vector<Column> columns;

    bool operator==(const ProfileTableau&) const = default;
};

std::vector<Letter> word(const ProfileTableau& t);
std::vector<Letter> word(const std::vector<Column>& cols);

bool column_strict(const Column& c, int n);
// Adjacent columns weakly increase left to right at each level of L.
bool semistandard_along_L(const std::vector<Column>& cols, int n);
bool semistandard_along_L(const ProfileTableau& t);

// Level of a cell: 0 is the first row above L, -1 the first row below.
struct Cell {
    int column;
    int level;
};

// Schutzenberger slide over barred letters. A hole with neighbours only
// below/right slides forward; one with neighbours only above/left slides
// backward. Anything else is "invalid-hole".
ProfileTableau jdt_slide(const ProfileTableau& t, Cell hole);

// Raw form: cells keyed by (row, col), rows grow downward, cols rightward.
using SlideGrid = std::map<std::pair<int, int>, Letter>;
void jdt_slide_grid(SlideGrid& g, int row, int col);

// Tableaux of shape delta^pi over [n-bar]: columns right to left,
// bottom-aligned, rightmost tallest.
struct InsertResult {
    ProfileTableau tableau;
    int column;  // where the new cell was created (on top)
};
InsertResult reverse_column_insert(const ProfileTableau& t, Letter a);
// Removes the top cell of `column` and bumps rightwards; returns ejected letter.
std::pair<ProfileTableau, Letter> reverse_column_eject(const ProfileTableau& t, int column);

bool is_pi_shape(const ProfileTableau& t);

std::string column_str(const Column& c);
std::string profile_str(const ProfileTableau& t);

}  // namespace crystald
