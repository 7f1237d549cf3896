// uqp_main.cpp
//
// Command-line front end.  Batch only: expressions in, normal forms /
// coproducts / antipodes / braidings / verification reports out.
//
//   uqp nf "x1*x2 - q^-1*x2*x1" --n 2
//   uqp coproduct "e[1,3]" --n 2 --format json
//   uqp verify all --n 2 --degree 4 --seed 1
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "uqp/uqp.hpp"

namespace {

struct Options {
    int n = 2;
    std::string format = "text";
    uint64_t seed = 1;
    int degree = 3;
    int m_max = 12;
    int pbw_limit = -1;
    std::string out;
};

void emit(const Options& opts, const std::string& payload) {
    if (opts.out.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + opts.out);
    file << payload << "\n";
}

std::string render(const Options& opts, const uqp::Element& e) {
    return opts.format == "json" ? uqp::to_json(e).dump(2) : uqp::to_text(e);
}
std::string render(const Options& opts, const uqp::Tensor& t) {
    return opts.format == "json" ? uqp::to_json(t).dump(2) : uqp::to_text(t);
}
std::string render(const Options& opts, const uqp::Laurent& c) {
    return opts.format == "json" ? uqp::to_json(c).dump(2) : uqp::to_text(c);
}

}  // namespace

int main(int argc, char** argv) {
    Options opts;
    CLI::App app{"exact kernel for the positive part of U_q(sl_{n+1}) as a braided quantum group"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--n", opts.n, "rank (number of generators)")->check(CLI::Range(1, 16));
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opts.seed, "seed for randomized checks");
    app.add_option("--degree", opts.degree, "degree bound for randomized checks");
    app.add_option("--out", opts.out, "write output to a file instead of stdout");

    std::string expr_text, expr_text2, suite;

    CLI::App* nf = app.add_subcommand("nf", "PBW normal form of an expression");
    nf->add_option("expr", expr_text, "expression")->required();

    CLI::App* cop = app.add_subcommand("coproduct", "coproduct of an expression");
    cop->add_option("expr", expr_text, "expression")->required();

    CLI::App* anti = app.add_subcommand("antipode", "antipode of an expression");
    anti->add_option("expr", expr_text, "expression")->required();

    CLI::App* cou = app.add_subcommand("counit", "counit of an expression");
    cou->add_option("expr", expr_text, "expression")->required();

    CLI::App* sig = app.add_subcommand("sigma", "braiding applied to a tensor pair a (x) b");
    sig->add_option("a", expr_text, "left tensor factor")->required();
    sig->add_option("b", expr_text2, "right tensor factor")->required();

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "one of: sigma serre coassoc counit antipode hexagon additional pbw qbinomial all")
        ->required()
        ->check(CLI::IsMember(uqp::suite_names()));
    ver->add_option("--m-max", opts.m_max, "q-binomial sweep bound");
    ver->add_option("--pbw-limit", opts.pbw_limit, "total-degree limit for the pbw suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit cleanly
    }

    try {
        if (nf->parsed()) {
            emit(opts, render(opts, uqp::parse_element(expr_text, opts.n)));
        } else if (cop->parsed()) {
            const uqp::HopfContext ctx(opts.n);
            emit(opts, render(opts, uqp::coproduct(ctx, uqp::parse_element(expr_text, opts.n))));
        } else if (anti->parsed()) {
            const uqp::HopfContext ctx(opts.n);
            emit(opts, render(opts, uqp::antipode(ctx, uqp::parse_element(expr_text, opts.n))));
        } else if (cou->parsed()) {
            emit(opts, render(opts, uqp::counit(uqp::parse_element(expr_text, opts.n))));
        } else if (sig->parsed()) {
            const uqp::Tensor pair = uqp::tensor2(uqp::parse_element(expr_text, opts.n),
                                                  uqp::parse_element(expr_text2, opts.n));
            emit(opts, render(opts, uqp::sigma(pair, 1)));
        } else if (ver->parsed()) {
            uqp::SuiteOptions sopts;
            sopts.n = opts.n;
            sopts.degree = opts.degree;
            sopts.seed = opts.seed;
            sopts.m_max = opts.m_max;
            sopts.pbw_limit = opts.pbw_limit;
            const uqp::SuiteResult result = uqp::run_suite(suite, sopts);
            if (opts.format == "json") {
                emit(opts, uqp::to_json(result).dump(2));
            } else {
                std::string text = uqp::to_text(result);
                if (!text.empty() && text.back() == '\n') text.pop_back();
                emit(opts, text);
            }
            return result.ok() ? 0 : 1;
        }
        return 0;
    } catch (const uqp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
