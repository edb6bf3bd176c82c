#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace crystald {

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Letters: k > 0 is k, k < 0 is \bar{|k|}.
using Letter = int;

enum class Ord { less, equal, greater, incomparable };

Ord compare(Letter a, Letter b, int n);
bool leq(Letter a, Letter b, int n);
std::string letter_str(Letter a);
Letter parse_letter(const std::string& s);

// Coordinates in the epsilon basis, doubled.
struct Weight {
    std::vector<int> d;

    Weight() = default;
    explicit Weight(int n) : d(n, 0) {}
    explicit Weight(std::vector<int> v) : d(std::move(v)) {}

    int n() const { return static_cast<int>(d.size()); }
    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    Weight operator*(int k) const;
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    bool operator==(const Weight&) const = default;
    std::string str() const;
};

Weight eps(int i, int n);
Weight alpha(int i, int n);
Weight fundamental(int i, int n);
// 4 (x, y); exact.
long pairing4(const Weight& x, const Weight& y);

struct DominantWeight {
    std::vector<int> d;  // 2 lambda_i

    int n() const { return static_cast<int>(d.size()); }
    bool half_integral() const { return !d.empty() && (d[0] % 2 != 0); }
    Weight weight() const { return Weight(d); }
    std::string str() const;
    bool operator==(const DominantWeight&) const = default;
};

// Accepts "5/2,3/2,..." or "1,1,0,0"; throws "not-dominant" on bad input.
DominantWeight parse_lambda(const std::string& s, int n);
void check_dominant(const DominantWeight& l);

struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);
    int size() const;
    int length() const;
    Partition conjugate() const;
    bool even_columns() const;
    bool operator==(const Partition&) const = default;
};

}  // namespace crystald
