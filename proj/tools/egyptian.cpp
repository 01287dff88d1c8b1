// Command-line front end. Subcommands wrap the library one-to-one and print
// line-oriented records; identical invocations must produce byte-identical
// stdout, so wall-clock timing goes to stderr only.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "egyptian/problem_io.hpp"
#include "egyptian/result_record.hpp"
#include "egyptian/signed_search.hpp"
#include "egyptian/topology.hpp"
#include "egyptian/unit_sum.hpp"

namespace {

using namespace egyptian;

struct Options {
    std::string file;
    std::string c_text;
    std::string u_text, v_text;
    std::vector<std::string> expand_text;
    std::string mode;
    std::string output;
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
};

std::uint64_t fnv64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv64_hex(const std::string& s) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv64(s);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

int emit(const ResultRecord& rec, const std::string& output) {
    const std::string text = rec.render();
    if (output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << output << "\n";
        return 2;
    }
    out << text;
    return 0;
}

struct WallClock {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    ~WallClock() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << "# wall-ms " << ms << "\n";
    }
};

// Independent re-check before anything is printed: exact value and exact
// membership of every coordinate.
void verify_rep(const Problem& p, const Rational& c, const Representation& r) {
    if (r.size() != p.n() || value_of(r) != c) throw std::logic_error("emitted tuple fails value check");
    for (std::size_t i = 0; i < r.size(); ++i)
        if (!p.numerators(i).contains(r[i].a) || !p.denominators(i).contains(r[i].b))
            throw std::logic_error("emitted tuple fails membership check");
}

void verify_signed_rep(const Problem& p, const Rational& c, const SignedRepresentation& r) {
    if (r.size() != p.n() || value_of(r) != c) throw std::logic_error("emitted tuple fails value check");
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i].epsilon != 1 && r[i].epsilon != -1)
            throw std::logic_error("emitted tuple has a bad sign");
        if (!p.numerators(i).contains(r[i].a) || !p.denominators(i).contains(r[i].b))
            throw std::logic_error("emitted tuple fails membership check");
    }
}

int run_reps(const Options& opt) {
    Problem p = load_problem(opt.file);
    Rational c = rat_parse(opt.c_text);
    WallClock wall;
    EnumerateResult res = enumerate_representations(p, c, opt.workers);
    for (const Representation& r : res.reps) verify_rep(p, c, r);
    ResultRecord rec("reps " + opt.file + " " + opt.c_text);
    rec.field("problem", problem_hash(p));
    rec.field("exact", "true");
    rec.field("nodes", std::to_string(res.stats.nodes_expanded));
    rec.field("count", std::to_string(res.reps.size()));
    for (const Representation& r : res.reps) rec.field("rep", format_representation(r));
    return emit(rec, opt.output);
}

int run_signed(const Options& opt) {
    Problem p = load_problem(opt.file);
    Rational c = rat_parse(opt.c_text);
    WallClock wall;
    SignedEnumerateResult res = enumerate_signed(p, c, opt.budget);
    ResultRecord rec("signed " + opt.file + " " + opt.c_text);
    rec.field("problem", problem_hash(p));
    rec.field("exact", "true");
    rec.field("budget-limit", std::to_string(opt.budget));
    rec.field("nodes", std::to_string(res.stats.nodes_expanded));
    int code = 0;
    switch (res.classification.outcome) {
        case Outcome::Finite:
            rec.field("outcome", "finite");
            rec.field("count", std::to_string(res.classification.count));
            for (const SignedRepresentation& r : res.reps) {
                verify_signed_rep(p, c, r);
                rec.field("rep", format_signed_representation(r));
            }
            break;
        case Outcome::Infinite: {
            const InfiniteFamily& w = *res.classification.witness;
            rec.field("outcome", "infinite");
            rec.field("witness-positions",
                      std::to_string(w.pos_i) + " " + std::to_string(w.pos_j));
            rec.field("witness-rho", rat_format(w.rho));
            for (std::size_t k = 1; k <= 3; ++k) {
                SignedRepresentation m = w.member(k);
                verify_signed_rep(p, c, m);
                rec.field("member", format_signed_representation(m));
            }
            break;
        }
        case Outcome::BudgetExhausted:
            rec.field("outcome", "budget-exhausted");
            rec.field("count", std::to_string(res.classification.count));
            code = 3;
            break;
    }
    int ec = emit(rec, opt.output);
    return ec != 0 ? ec : code;
}

int run_gap(const Options& opt) {
    Problem p = load_problem(opt.file);
    Rational c = rat_parse(opt.c_text);
    WallClock wall;
    GapCertificate cert = gap_below(p, c, opt.budget);
    ResultRecord rec("gap " + opt.file + " " + opt.c_text);
    rec.field("problem", problem_hash(p));
    rec.field("exact", "true");
    rec.field("budget-limit", std::to_string(opt.budget));
    rec.field("nodes", std::to_string(cert.nodes_expanded));
    rec.field("c", rat_format(cert.c));
    if (cert.predecessor) rec.field("predecessor", rat_format(*cert.predecessor));
    if (cert.witness) {
        verify_rep(p, *cert.predecessor, *cert.witness);
        rec.field("witness", format_representation(*cert.witness));
    }
    rec.field("delta", rat_format(cert.delta));
    rec.field("in-set", cert.c_in_e ? "true" : "false");
    for (std::size_t k = 0; k < cert.bound_trace.size(); ++k)
        rec.field("trace", std::to_string(k) + " " + rat_format(cert.bound_trace[k].first) +
                               " " + rat_format(cert.bound_trace[k].second));
    return emit(rec, opt.output);
}

int run_avoid(const Options& opt) {
    Problem p = load_problem(opt.file);
    Rational u = rat_parse(opt.u_text);
    Rational v = rat_parse(opt.v_text);
    WallClock wall;
    AvoidResult res = find_avoiding_subinterval(p, u, v, opt.budget);
    ResultRecord rec("avoid " + opt.file + " " + opt.u_text + " " + opt.v_text);
    rec.field("problem", problem_hash(p));
    rec.field("exact", "true");
    rec.field("budget-limit", std::to_string(opt.budget));
    rec.field("nodes", std::to_string(res.nodes_expanded));
    int code = 0;
    if (res.status == AvoidStatus::Certified) {
        rec.field("status", "certified");
        rec.field("interval", rat_format(res.lo) + " " + rat_format(res.hi));
        if (res.bounding_element) {
            verify_rep(p, res.hi, *res.bounding_element);
            rec.field("bounding", format_representation(*res.bounding_element));
        }
    } else {
        rec.field("status", "unknown");
        code = 3;
    }
    int ec = emit(rec, opt.output);
    return ec != 0 ? ec : code;
}

int run_expand(const Options& opt) {
    std::string text;
    for (std::size_t i = 0; i < opt.expand_text.size(); ++i) {
        if (i) text += ' ';
        text += opt.expand_text[i];
    }
    WallClock wall;
    std::string canonical_input;
    UnitFractionSum out;
    if (opt.mode == "greedy") {
        Rational r = rat_parse(text);
        canonical_input = rat_format(r);
        out = greedy_expand(r);
    } else {
        UnitFractionSum in = parse_unit_sum(text);
        canonical_input = format_unit_sum(in);
        if (opt.mode == "distinct") {
            out = to_distinct(in, opt.budget);
        } else if (opt.mode.rfind("extend:", 0) == 0) {
            std::size_t target = 0;
            try {
                std::size_t pos = 0;
                const std::string num = opt.mode.substr(7);
                target = std::stoul(num, &pos);
                if (pos != num.size()) throw std::invalid_argument(num);
            } catch (const std::exception&) {
                throw validation_error("bad extend target in --mode " + opt.mode);
            }
            out = extend_length(in, target, opt.budget);
        } else {
            throw validation_error("unknown --mode " + opt.mode);
        }
        if (out.value() != in.value()) throw std::logic_error("rewrite changed the value");
    }
    ResultRecord rec("expand " + text);
    rec.field("problem", fnv64_hex(canonical_input));
    rec.field("exact", "true");
    rec.field("budget-limit", std::to_string(opt.budget));
    rec.field("mode", opt.mode);
    rec.field("value", rat_format(out.value()));
    rec.field("sum", format_unit_sum(out));
    rec.field("length", std::to_string(out.size()));
    rec.field("distinct", out.distinct() ? "true" : "false");
    return emit(rec, opt.output);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact search toolkit for weighted sums of unit-like fractions"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool with_workers) {
        sub->add_option("--budget", opt.budget, "search budget in nodes")
            ->envname("EGYPTIAN_BUDGET")
            ->check(CLI::PositiveNumber);
        sub->add_option("--output", opt.output, "write the record to this file instead of stdout");
        if (with_workers)
            sub->add_option("--workers", opt.workers, "worker threads for the enumeration")
                ->check(CLI::Range(1u, 64u));
    };

    CLI::App* reps = app.add_subcommand("reps", "enumerate all representations of c");
    reps->add_option("file", opt.file, "problem file")->required();
    reps->add_option("c", opt.c_text, "target value")->required();
    add_common(reps, true);

    CLI::App* sgn = app.add_subcommand("signed", "classify and enumerate signed representations");
    sgn->add_option("file", opt.file, "problem file")->required();
    sgn->add_option("c", opt.c_text, "target value")->required();
    add_common(sgn, false);

    CLI::App* gap = app.add_subcommand("gap", "certify the gap directly below c");
    gap->add_option("file", opt.file, "problem file")->required();
    gap->add_option("c", opt.c_text, "target value, c > 0")->required();
    add_common(gap, false);

    CLI::App* avoid = app.add_subcommand("avoid", "find a value-free subinterval of (u, v)");
    avoid->add_option("file", opt.file, "problem file")->required();
    avoid->add_option("u", opt.u_text, "interval lower end")->required();
    avoid->add_option("v", opt.v_text, "interval upper end")->required();
    add_common(avoid, false);

    CLI::App* expand = app.add_subcommand("expand", "unit-fraction rewrites");
    expand->add_option("text", opt.expand_text, "unit sum like \"1/3 + 1/3\", or a rational for greedy")
        ->required()
        ->expected(-1);
    expand->add_option("--mode", opt.mode, "distinct | extend:<n> | greedy")->required();
    add_common(expand, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (reps->parsed()) return run_reps(opt);
        if (sgn->parsed()) return run_signed(opt);
        if (gap->parsed()) return run_gap(opt);
        if (avoid->parsed()) return run_avoid(opt);
        if (expand->parsed()) return run_expand(opt);
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const arithmetic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const infeasible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
