#include "crystald/core.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace crystald {

namespace {

// n and \bar n share a rank; callers special-case that pair.
int rank(Letter a, int n) { return a > 0 ? a : 2 * n + 1 + a; }

}  // namespace

Ord compare(Letter a, Letter b, int n) {
    if (a == b) return Ord::equal;
    if ((a == n && b == -n) || (a == -n && b == n)) return Ord::incomparable;
    return rank(a, n) < rank(b, n) ? Ord::less : Ord::greater;
}

bool leq(Letter a, Letter b, int n) {
    Ord o = compare(a, b, n);
    return o == Ord::less || o == Ord::equal;
}

std::string letter_str(Letter a) { return std::to_string(a); }

Letter parse_letter(const std::string& s) {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size() || v == 0) throw Error("parse-error", "bad letter '" + s + "'");
    return v;
}

Weight& Weight::operator+=(const Weight& o) {
    if (d.empty()) d.assign(o.d.size(), 0);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += o.d[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    if (d.empty()) d.assign(o.d.size(), 0);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= o.d[i];
    return *this;
}

Weight Weight::operator*(int k) const {
    Weight w(*this);
    for (int& x : w.d) x *= k;
    return w;
}

static std::string halves(int x) {
    if (x % 2 == 0) return std::to_string(x / 2);
    return std::to_string(x) + "/2";
}

std::string Weight::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += halves(d[i]);
    }
    return s + ")";
}

Weight eps(int i, int n) {
    Weight w(n);
    w.d[i - 1] = 2;
    return w;
}

Weight alpha(int i, int n) {
    if (i < n) return eps(i, n) - eps(i + 1, n);
    return eps(n - 1, n) + eps(n, n);
}

Weight fundamental(int i, int n) {
    Weight w(n);
    if (i <= n - 2) {
        for (int k = 0; k < i; ++k) w.d[k] = 2;
    } else {
        for (int k = 0; k < n; ++k) w.d[k] = 1;
        if (i == n - 1) w.d[n - 1] = -1;
    }
    return w;
}

long pairing4(const Weight& x, const Weight& y) {
    long s = 0;
    for (std::size_t i = 0; i < x.d.size(); ++i) s += static_cast<long>(x.d[i]) * y.d[i];
    return s;
}

std::string DominantWeight::str() const { return Weight(d).str(); }

void check_dominant(const DominantWeight& l) {
    int n = l.n();
    if (n < 1) throw Error("not-dominant", "empty weight");
    for (int i = 0; i < n; ++i) {
        if ((l.d[i] - l.d[0]) % 2 != 0) throw Error("not-dominant", "mixed parity in " + l.str());
    }
    for (int i = 0; i + 1 < n - 1; ++i) {
        if (l.d[i] < l.d[i + 1]) throw Error("not-dominant", l.str());
    }
    if (n >= 2 && l.d[n - 2] < std::abs(l.d[n - 1])) throw Error("not-dominant", l.str());
}

DominantWeight parse_lambda(const std::string& s, int n) {
    DominantWeight l;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }),
                  tok.end());
        if (tok.empty()) throw Error("parse-error", "empty component in '" + s + "'");
        auto slash = tok.find('/');
        try {
            if (slash == std::string::npos) {
                l.d.push_back(2 * std::stoi(tok));
            } else {
                int num = std::stoi(tok.substr(0, slash));
                int den = std::stoi(tok.substr(slash + 1));
                if (den != 2) throw Error("parse-error", "denominator must be 2: '" + tok + "'");
                l.d.push_back(num);
            }
        } catch (const std::invalid_argument&) {
            throw Error("parse-error", "bad component '" + tok + "'");
        }
    }
    if (n > 0 && l.n() != n) throw Error("parse-error", "lambda has " + std::to_string(l.n()) + " parts, expected " + std::to_string(n));
    check_dominant(l);
    return l;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

int Partition::size() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

int Partition::length() const { return static_cast<int>(parts.size()); }

Partition Partition::conjugate() const {
    std::vector<int> c(parts.empty() ? 0 : parts[0], 0);
    for (int x : parts)
        for (int k = 0; k < x; ++k) ++c[k];
    return Partition(c);
}

bool Partition::even_columns() const {
    for (int h : conjugate().parts)
        if (h % 2) return false;
    return true;
}

}  // namespace crystald
