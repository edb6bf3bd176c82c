#include "crystald/json_io.hpp"

namespace crystald {

namespace {

template <class F>
auto guarded(const char* what, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error("parse-error", std::string(what) + ": " + e.what());
    }
}

std::vector<Column> columns_from(const json& j) {
    std::vector<Column> cols;
    for (const auto& c : j.at("columns")) cols.push_back(column_from_json(c));
    return cols;
}

}  // namespace

json to_json(const Column& c) { return json{{"entries", c.entries}, {"tail", c.tail}}; }

json to_json(const ProfileTableau& t) {
    json cols = json::array();
    for (const auto& c : t.columns) cols.push_back(to_json(c));
    return json{{"n", t.n}, {"columns", cols}};
}

json to_json(const KNTableau& t) {
    json cols = json::array();
    for (const auto& c : t.columns) cols.push_back(to_json(c));
    return json{{"n", t.n}, {"lambda2", t.lambda.d}, {"columns", cols}, {"spin", t.spin}};
}

json to_json(const SpinorTuple& t) {
    json fs = json::array();
    for (const auto& f : t.factors)
        fs.push_back(json{{"kind", kind_str(f.kind, f.a)}, {"left", to_json(f.left)}, {"right", to_json(f.right)}});
    return json{{"n", t.n}, {"lambda2", t.lambda.d}, {"factors", fs}};
}

json to_json(const VermaElement& v) {
    ProfileTableau body, tail;
    body.n = tail.n = v.n;
    for (const auto& c : v.columns) {
        body.columns.push_back(c.body());
        tail.columns.push_back(c.tail_part());
    }
    return json{{"body", to_json(body)}, {"tail", to_json(tail)}, {"r", v.r}};
}

json to_json(const LusztigDatum& x) { return json{{"n", x.n}, {"c", x.c}, {"shift2", x.shift.d}}; }

json to_json(const CrystalGraph& g) {
    json edges = json::array();
    for (auto [u, i, v] : g.edges) edges.push_back({u, i, v});
    return json{{"nodes", g.nodes}, {"edges", edges}};
}

DominantWeight lambda_from_doubled(const std::vector<int>& d) {
    DominantWeight l{d};
    check_dominant(l);
    return l;
}

Column column_from_json(const json& j) {
    return guarded("column", [&] {
        Column c(j.at("entries").get<std::vector<int>>(), j.value("tail", 0));
        if (c.tail < 0 || c.tail > c.ht()) throw Error("parse-error", "tail out of range");
        return c;
    });
}

ProfileTableau profile_from_json(const json& j) {
    return guarded("profile", [&] {
        ProfileTableau t;
        t.n = j.at("n").get<int>();
        t.columns = columns_from(j);
        return t;
    });
}

KNTableau kn_from_json(const json& j) {
    return guarded("kn tableau", [&] {
        KNTableau t;
        t.n = j.at("n").get<int>();
        t.lambda = lambda_from_doubled(j.at("lambda2").get<std::vector<int>>());
        t.columns = columns_from(j);
        t.spin = j.value("spin", false);
        if (t.lambda.n() != t.n) throw Error("parse-error", "lambda2 has the wrong length");
        return t;
    });
}

SpinorTuple spinor_from_json(const json& j) {
    return guarded("spinor tuple", [&] {
        SpinorTuple t;
        t.n = j.at("n").get<int>();
        t.lambda = lambda_from_doubled(j.at("lambda2").get<std::vector<int>>());
        if (t.lambda.n() != t.n) throw Error("parse-error", "lambda2 has the wrong length");
        for (const auto& f : j.at("factors")) {
            Factor x;
            x.kind = parse_kind(f.at("kind").get<std::string>(), x.a);
            if (f.contains("left")) x.left = column_from_json(f.at("left"));
            if (f.contains("right")) x.right = column_from_json(f.at("right"));
            x.left.tail = x.right.tail = 0;
            t.factors.push_back(x);
        }
        return t;
    });
}

VermaElement verma_from_json(const json& j) {
    return guarded("verma element", [&] {
        ProfileTableau body = profile_from_json(j.at("body")), tail = profile_from_json(j.at("tail"));
        VermaElement v;
        v.n = body.n;
        v.r = j.at("r").get<int>();
        std::size_t w = std::max(body.columns.size(), tail.columns.size());
        v.columns.assign(w, Column());
        for (std::size_t k = 0; k < w; ++k) {
            auto& c = v.columns[k];
            if (k < body.columns.size()) c.entries = body.columns[k].entries;
            if (k < tail.columns.size()) {
                const auto& t = tail.columns[k].entries;
                c.entries.insert(c.entries.end(), t.begin(), t.end());
                c.tail = static_cast<int>(t.size());
            }
        }
        return v;
    });
}

LusztigDatum datum_from_json(const json& j) {
    return guarded("lusztig datum", [&] {
        LusztigDatum x;
        x.n = j.at("n").get<int>();
        x.c = j.at("c").get<std::vector<int>>();
        x.shift = Weight(j.at("shift2").get<std::vector<int>>());
        return x;
    });
}

}  // namespace crystald
