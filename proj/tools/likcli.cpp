// Command-line front end: value tables, the verification suite, and the
// eta-decay conjecture scanner.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error,
// 3 precision shortfall (cancellation guard tripped).

#include "lik/pipeline.hpp"
#include "lik/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace lik;

namespace {

struct Options {
    std::string family = "eta";
    long n_max = 0;
    long precision_bits = 0;  // 0: ladder default keyed to n_max
    std::string routes = "A,B";
    std::string format = "csv";
    std::string out;
};

PrecisionContext make_ctx(const Options& o) {
    return o.precision_bits > 0 ? PrecisionContext::with_bits(o.precision_bits)
                                : PrecisionContext::for_nmax(o.n_max);
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::filesystem::path path(o.out);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("LIK_OUT_DIR")) path = std::filesystem::path(dir) / path;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output path " + path.string());
    f << text;
}

std::vector<Route> parse_routes(const std::string& spec) {
    std::vector<Route> out;
    for (char c : spec) {
        switch (c) {
            case 'A': out.push_back(Route::sigma_binomial); break;
            case 'B': out.push_back(Route::lehmer_route); break;
            case 'C': out.push_back(Route::eta_route); break;
            case 'D': out.push_back(Route::bell_xi_route); break;
            case ',': case ' ': break;
            default: throw CLI::ValidationError("--routes", "routes must be a comma list of A,B,C,D");
        }
    }
    if (out.empty()) throw CLI::ValidationError("--routes", "at least one route required");
    return out;
}

int cmd_compute(const Options& o) {
    auto ctx = make_ctx(o);
    auto rows_of = [](const ConstSeq& s, long count) {
        std::vector<TableRow> rows;
        for (long i = 0; i < count; ++i)
            rows.push_back({s.start_index + i, s.values[static_cast<size_t>(i)],
                            s.err[static_cast<size_t>(i)], route_name(s.route)});
        return rows;
    };

    if (o.family == "lambda") {
        auto routes = parse_routes(o.routes);
        Pipeline pl(o.n_max, ctx);
        std::vector<std::string> names;
        std::vector<std::vector<TableRow>> per_route;
        for (Route r : routes) {
            const ConstSeq& s = pl.lambda(r);
            names.emplace_back(1, "ABCD"[r == Route::sigma_binomial   ? 0
                                         : r == Route::lehmer_route   ? 1
                                         : r == Route::eta_route      ? 2
                                                                      : 3]);
            per_route.push_back(rows_of(s, o.n_max));
        }
        emit(o, o.format == "json" ? lambda_table_to_json(o.n_max, ctx.work_bits, names, per_route)
                                   : lambda_table_to_csv(names, per_route));
        return 0;
    }

    std::vector<TableRow> rows;
    if (o.family == "eta") {
        Pipeline pl(std::max<long>(1, o.n_max - 1), ctx);
        rows = rows_of(pl.eta(), o.n_max);
    } else if (o.family == "b") {
        Pipeline pl(std::max<long>(1, o.n_max - 1), ctx);
        rows = rows_of(pl.b(), o.n_max);
    } else if (o.family == "sigma") {
        Pipeline pl(o.n_max, ctx);
        rows = rows_of(pl.sigma(), o.n_max);
    } else if (o.family == "gamma") {
        StieltjesSeq g = stieltjes(o.n_max - 1, ctx);
        for (long i = 0; i < o.n_max; ++i)
            rows.push_back({i, g.values[static_cast<size_t>(i)], g.err[static_cast<size_t>(i)], g.route});
    } else if (o.family == "delta") {
        Pipeline pl(std::max<long>(1, o.n_max - 1), ctx);
        const DeltaSeq& d = pl.deltas();
        for (long i = 0; i < o.n_max; ++i)
            rows.push_back({i, d.values[static_cast<size_t>(i)], d.err[static_cast<size_t>(i)], "abel_plana"});
    } else if (o.family == "xi") {
        Pipeline pl(o.n_max, ctx);
        const XiDerivSeq& x = pl.xi();
        for (long n = 1; n <= o.n_max; ++n)
            rows.push_back({n, x.xi1[static_cast<size_t>(n)], x.err[static_cast<size_t>(n)], "alpha_beta"});
    } else {
        throw CLI::ValidationError("--family", "unknown family " + o.family);
    }
    emit(o, o.format == "json" ? table_to_json(o.family, o.n_max, ctx.work_bits, rows) : table_to_csv(rows));
    return 0;
}

int cmd_verify(const Options& o, bool to_file_only) {
    auto ctx = make_ctx(o);
    Pipeline pl(o.n_max, ctx);
    Report r = run_verify(pl);
    std::string text = report_to_json(r);
    if (to_file_only) {
        if (o.out.empty()) throw CLI::ValidationError("--out", "report requires an output path");
        emit(o, text);
        std::cout << "checks: " << r.passed << " passed, " << r.failed << " failed\n";
    } else {
        emit(o, text);
    }
    if (r.failed > 0) {
        std::cerr << "failed checks:";
        for (const auto& c : r.results)
            if (!c.passed) std::cerr << " " << c.check_id;
        std::cerr << "\n";
        return 1;
    }
    return 0;
}

int cmd_scan(const Options& o) {
    auto ctx = make_ctx(o);
    Pipeline pl(std::max<long>(2, o.n_max - 1), ctx);
    ConjectureScan s = conjecture_scan(pl, o.n_max - 1);
    emit(o, o.format == "json" ? scan_to_json(s, o.n_max, ctx.work_bits) : scan_to_csv(s));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Li/Keiper constant families: tables, identity checks, conjecture scan"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* c) {
        c->add_option("--n-max", o.n_max, "number of entries / top index")->check(CLI::PositiveNumber);
        c->add_option("--precision-bits", o.precision_bits, "working precision override (>= 64)")
            ->check(CLI::Range(64L, 1L << 20));
        c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--out", o.out, "output path (relative paths resolve under $LIK_OUT_DIR)");
    };

    auto* compute = app.add_subcommand("compute", "tabulate one constant family");
    add_common(compute);
    compute->add_option("--family", o.family, "eta|b|sigma|lambda|xi|gamma|delta")
        ->check(CLI::IsMember({"eta", "b", "sigma", "lambda", "xi", "gamma", "delta"}));
    compute->add_option("--routes", o.routes, "lambda routes, comma list of A,B,C,D");

    auto* verify = app.add_subcommand("verify", "run the identity, inequality and sign suites");
    add_common(verify);
    auto* scan = app.add_subcommand("scan", "eta decay conjecture scanner");
    add_common(scan);
    auto* report = app.add_subcommand("report", "verify and write the JSON report to --out");
    add_common(report);

    try {
        app.parse(argc, argv);
        if (o.n_max == 0) o.n_max = compute->parsed() ? 10 : scan->parsed() ? 61 : 12;
        if (compute->parsed()) return cmd_compute(o);
        if (verify->parsed()) return cmd_verify(o, false);
        if (report->parsed()) return cmd_verify(o, true);
        if (scan->parsed()) return cmd_scan(o);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const precision_shortfall& e) {
        std::cerr << "precision shortfall: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
