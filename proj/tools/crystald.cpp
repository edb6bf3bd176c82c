#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "crystald/iso.hpp"
#include "crystald/json_io.hpp"
#include "crystald/lusztig.hpp"
#include "crystald/oracle.hpp"
#include "crystald/separation.hpp"
#include "crystald/suites.hpp"

using namespace crystald;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Job {
    int n = 0;
    std::string lambda, input, output, to = "spinor", format = "json", model = "kn", suite = "all";
    std::size_t budget = 0;
    int threads = 1;
    unsigned seed = 1;
    bool elements = false, trace = false, d7 = false, compact = false;
};

json read_input(const std::string& path) {
    if (path.empty()) throw Usage("--input is required");
    std::ifstream in(path == "-" ? "/dev/stdin" : path);
    if (!in) throw Usage("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Usage(path + ": " + e.what());
    }
}

void emit(const Job& job, const std::string& text) {
    if (job.output.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(job.output);
    if (!out) throw Usage("cannot write " + job.output);
    out << text << "\n";
}

void emit(const Job& job, const json& j) { emit(job, job.compact ? j.dump() : j.dump(2)); }

DominantWeight lambda_of(const Job& job) {
    if (job.n <= 0) throw Usage("--n is required");
    if (job.lambda.empty()) throw Usage("--lambda is required");
    return parse_lambda(job.lambda, job.n);
}

// Flags, when given, must agree with the file.
void check_flags(const Job& job, int n, const DominantWeight& l) {
    if (job.n > 0 && job.n != n) throw Usage("--n disagrees with the input");
    if (!job.lambda.empty() && !(parse_lambda(job.lambda, n) == l)) throw Usage("--lambda disagrees with the input");
}

bool is_spinor(const json& j) { return j.is_object() && j.contains("factors"); }

KNTableau read_kn(const Job& job, const json& j) {
    KNTableau t = kn_from_json(j);
    check_flags(job, t.n, t.lambda);
    return t;
}

SpinorTuple read_spinor(const Job& job, const json& j) {
    SpinorTuple t = spinor_from_json(j);
    check_flags(job, t.n, t.lambda);
    return t;
}

int report_kn(const KNTableau& t, const Job& job) {
    KNReport rep = validate_kn(t, job.d7);
    json v = json::array();
    for (const auto& x : rep.violations) v.push_back(json{{"clause", x.clause}, {"where", x.where}});
    emit(job, json{{"valid", rep.ok}, {"model", "kn"}, {"violations", v}});
    return rep.ok ? 0 : 1;
}

int cmd_validate(const Job& job) {
    json j = read_input(job.input);
    if (is_spinor(j)) {
        SpinorTuple t = read_spinor(job, j);
        bool ok = in_T_lambda(t);
        emit(job, json{{"valid", ok}, {"model", "spinor"}});
        return ok ? 0 : 1;
    }
    return report_kn(read_kn(job, j), job);
}

std::optional<std::string> kn_invalid(const KNTableau& t) {
    KNReport rep = validate_kn(t);
    if (rep.ok) return std::nullopt;
    return rep.violations.front().clause + " at " + rep.violations.front().where;
}

int cmd_embed(const Job& job) {
    json j = read_input(job.input);
    if (job.to == "lusztig") {
        KNTableau t = read_kn(job, j);
        if (auto bad = kn_invalid(t)) return std::cerr << "invalid KN tableau: " << *bad << "\n", 1;
        emit(job, to_json(xi_lambda(t)));
        return 0;
    }
    SpinorTuple s;
    if (is_spinor(j)) {
        if (job.to == "spinor") throw Usage("input is already a spinor tuple");
        s = read_spinor(job, j);
    } else {
        KNTableau t = read_kn(job, j);
        if (auto bad = kn_invalid(t)) return std::cerr << "invalid KN tableau: " << *bad << "\n", 1;
        s = psi_lambda(t);
    }
    if (!in_T_lambda(s)) return std::cerr << "spinor tuple is not in T_lambda\n", 1;
    if (job.to == "spinor") emit(job, to_json(s));
    else emit(job, to_json(chi_lambda(s)));
    return 0;
}

int cmd_separate(const Job& job) {
    json j = read_input(job.input);
    SpinorTuple s = is_spinor(j) ? read_spinor(job, j) : psi_lambda(read_kn(job, j));
    if (!in_T_lambda(s)) return std::cerr << "spinor tuple is not in T_lambda\n", 1;
    SepTrace tr;
    json out = to_json(separate(s, &tr));
    if (job.trace) {
        json steps = json::array();
        for (const auto& st : tr.steps) {
            json quad = json::array();
            for (const auto& c : st.quad) quad.push_back(to_json(c));
            steps.push_back(json{{"depth", st.depth}, {"j", st.j}, {"triangle", st.triangle}, {"a", st.a},
                                 {"ops", st.ops}, {"quad", quad}, {"semistandard", st.semistandard}});
        }
        out["trace"] = steps;
    }
    emit(job, out);
    return 0;
}

template <class E>
Component<E> component(const Job& job, const E& hw, const CrystalOps<E>& ops) {
    return generate_component(hw, ops, job.threads, job.budget);
}

int cmd_graph(const Job& job, bool list_only) {
    DominantWeight l = lambda_of(job);
    CrystalGraph g;
    json elems = json::array();
    if (job.model == "kn") {
        auto c = component(job, kn_highest(l), kn_ops(job.n));
        g = c.graph;
        if (job.elements) for (const auto& x : c.elems) elems.push_back(to_json(x));
    } else if (job.model == "spinor") {
        auto c = component(job, highest_element(l), spinor_ops(job.n));
        g = c.graph;
        if (job.elements) for (const auto& x : c.elems) elems.push_back(to_json(x));
    } else {
        throw Usage("--model must be kn or spinor");
    }
    if (list_only) {
        json out{{"n", job.n}, {"lambda2", l.d}, {"model", job.model}, {"count", g.nodes.size()}};
        if (job.elements) out["elements"] = elems;
        emit(job, out);
    } else if (job.format == "dot") {
        emit(job, to_dot(g));
    } else {
        emit(job, to_json(g));
    }
    return 0;
}

int cmd_roots(const Job& job) {
    if (job.n <= 0) throw Usage("--n is required");
    RootOrder o = convex_order(job.n);
    json roots = json::array();
    for (const auto& b : o.beta) roots.push_back(b.str());
    emit(job, json{{"n", job.n}, {"N", o.N()}, {"M", o.M()}, {"roots", roots}});
    return 0;
}

int cmd_verify(const Job& job) {
    if (job.n != 0 && job.n != kSmokeN) throw Usage("the smoke suites are defined for n = 4");
    SuiteOptions o{job.seed, job.threads};
    std::vector<SuiteResult> rs;
    const std::string& s = job.suite;
    bool all = s == "all";
    if (all || s == "golden") {
        rs.push_back(suite_golden_end_to_end());
        rs.push_back(suite_golden_psi());
        rs.push_back(suite_golden_separation());
    }
    if (all || s == "dimension") rs.push_back(suite_dimension(o));
    if (all || s == "morphism") rs.push_back(suite_morphism(o));
    if (all || s == "separation") rs.push_back(suite_separation_invariants(o));
    if (all || s == "rsk") rs.push_back(suite_rsk());
    if (all || s == "sliding") rs.push_back(suite_sliding(o));
    if (all || s == "knuth") rs.push_back(suite_knuth(o));
    if (all || s == "signatures") rs.push_back(suite_signatures(o));
    if (rs.empty()) throw Usage("unknown suite " + s);
    bool ok = true;
    for (const auto& r : rs) {
        std::cout << r.summary() << "\n";
        for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        ok = ok && r.ok();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crystal models for so(2n): KN tableaux, spinor tuples, Lusztig data"};
    app.require_subcommand(1);
    Job job;

    auto common = [&](CLI::App* c) {
        c->add_option("--n", job.n, "rank");
        c->add_option("--lambda", job.lambda, "dominant weight, e.g. 5/2,3/2,3/2,1/2,-1/2");
        c->add_option("--output", job.output, "output file (default stdout)");
        c->add_option("--threads", job.threads, "worker threads")->check(CLI::PositiveNumber);
        c->add_flag("--compact", job.compact, "single-line JSON");
    };
    auto input = [&](CLI::App* c) { c->add_option("--input", job.input, "input JSON file, - for stdin"); };
    auto enumer = [&](CLI::App* c) {
        c->add_option("--model", job.model, "kn or spinor")->check(CLI::IsMember({"kn", "spinor"}));
        c->add_option("--budget", job.budget, "node budget (default CRYSTALD_BUDGET)")->check(CLI::PositiveNumber);
    };

    auto* validate = app.add_subcommand("validate", "check a KN tableau or spinor tuple");
    common(validate);
    input(validate);
    validate->add_flag("--d7", job.d7, "also evaluate the (d-7) clause");
    auto* embed = app.add_subcommand("embed", "map a KN tableau to another model");
    common(embed);
    input(embed);
    embed->add_option("--to", job.to, "spinor, verma or lusztig")
        ->check(CLI::IsMember({"spinor", "verma", "lusztig"}));
    auto* sep = app.add_subcommand("separate", "separate a spinor tuple into body and tail");
    common(sep);
    input(sep);
    sep->add_flag("--trace", job.trace, "include the sliding steps");
    auto* graph = app.add_subcommand("graph", "crystal graph of B(lambda)");
    common(graph);
    enumer(graph);
    graph->add_option("--format", job.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    auto* enumerate = app.add_subcommand("enumerate", "count the elements of B(lambda)");
    common(enumerate);
    enumer(enumerate);
    enumerate->add_flag("--elements", job.elements, "list the elements");
    auto* roots = app.add_subcommand("roots", "positive roots in the convex order");
    common(roots);
    auto* verify = app.add_subcommand("verify", "run the property suites");
    common(verify);
    verify->add_option("--suite", job.suite, "golden, dimension, morphism, separation, rsk, sliding, knuth, signatures or all");
    verify->add_option("--seed", job.seed, "seed for sampled suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) return cmd_validate(job);
        if (*embed) return cmd_embed(job);
        if (*sep) return cmd_separate(job);
        if (*graph) return cmd_graph(job, false);
        if (*enumerate) return cmd_graph(job, true);
        if (*roots) return cmd_roots(job);
        if (*verify) return cmd_verify(job);
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == "too-large" || e.code() == "slide-blocked" ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
