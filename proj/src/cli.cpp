#include "tokgraph/cli.hpp"

#include "tokgraph/combinatorics.hpp"
#include "tokgraph/cyclift.hpp"
#include "tokgraph/partitions.hpp"
#include "tokgraph/token.hpp"
#include "tokgraph/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

namespace tokgraph {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Twelve significant digits everywhere, so JSON and CSV carry the same doubles.
std::string fmt12(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round12(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

std::vector<double> round12(const std::vector<double>& v)
{
    std::vector<double> out;
    out.reserve(v.size());
    for (double x : v) out.push_back(round12(x));
    return out;
}

Graph load_graph(const std::string& spec)
{
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream in(spec.substr(5));
        if (!in) throw UsageError("cannot open " + spec.substr(5));
        return read_edge_list(in);
    }
    return build_family(spec);
}

std::optional<int> cycle_order(const std::string& spec)
{
    if (spec.rfind("cycle:", 0) != 0) return std::nullopt;
    return build_family(spec).order();
}

void emit_spectrum(std::ostream& out, const std::string& format, nlohmann::json j, const std::vector<double>& values,
                   double tol)
{
    if (format == "csv") {
        out << "index,value\n";
        for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << fmt12(values[i]) << '\n';
    } else if (format == "table") {
        out << "value           multiplicity\n";
        for (auto [v, m] : cluster(make_spectrum(values), tol)) {
            char line[64];
            std::snprintf(line, sizeof line, "%-15s %d\n", fmt12(v).c_str(), m);
            out << line;
        }
    } else {
        out << j.dump(2) << '\n';
    }
}

nlohmann::json spectrum_json(const F2CycleSpectrum& f, bool with_per_r)
{
    nlohmann::json j{{"n", f.n}, {"method", f.method}, {"per_r", nlohmann::json::array()}};
    if (with_per_r)
        for (std::size_t r = 0; r < f.per_r.size(); ++r)
            j["per_r"].push_back({{"r", r}, {"eigs", round12(f.per_r[r].values)}});
    j["spectrum"] = round12(f.spectrum.values);
    j["lambda_removed"] = round12(f.lambda_removed);
    return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"k-token graph spectra", "tokgraph"};
    app.require_subcommand(1);

    std::string graph, method = "brute", format = "json", shape, suite = "all", delete_str;
    int k = 2, alpha_k = 1, n = 0, r = 0;
    std::uint64_t cap = 5000;
    bool per_r = false;
    double tol = 5e-4;

    auto* sp = app.add_subcommand("spectrum", "Laplacian spectrum of F_k(G)");
    sp->add_option("--graph", graph, "family descriptor or file:path")->required();
    sp->add_option("--k", k, "number of tokens")->check(CLI::PositiveNumber);
    sp->add_option("--method", method)->check(CLI::IsMember({"brute", "lift", "overlift"}));
    sp->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));
    sp->add_option("--cap", cap, "largest C(n,k) for dense solves");

    auto* tk = app.add_subcommand("token", "edge list of F_k(G)");
    tk->add_option("--graph", graph)->required();
    tk->add_option("--k", k)->check(CLI::PositiveNumber);

    auto* al = app.add_subcommand("alpha", "algebraic connectivity");
    al->add_option("--graph", graph)->required();
    al->add_option("--k", alpha_k)->check(CLI::PositiveNumber);
    al->add_option("--delete", delete_str, "delete this vertex first");
    al->add_option("--cap", cap);

    auto* qu = app.add_subcommand("quotient", "quotient Laplacian of a partition of F_2(C_n)");
    qu->add_option("--n", n)->required()->check(CLI::Range(4, 2000));
    qu->add_option("--shape", shape)->required()->check(CLI::IsMember({"path", "u"}));

    auto* as = app.add_subcommand("asympt", "large-n approximation of spec bstar(n, r)");
    as->add_option("--n", n)->required()->check(CLI::Range(4, 100000));
    as->add_option("--r", r)->required()->check(CLI::NonNegativeNumber);

    auto* ov = app.add_subcommand("overlift", "spec F_2(C_n) from the reduced tridiagonal problems");
    ov->add_option("--n", n)->required()->check(CLI::Range(4, 100000));
    ov->add_flag("--per-r", per_r, "include the per-r spectra");

    auto* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("--suite", suite)->check(CLI::IsMember({"tables", "paper-tables", "invariants", "all"}));
    vf->add_option("--tol", tol, "tolerance for printed reference values")->check(CLI::PositiveNumber);
    vf->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("tokgraph");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sp->parsed()) {
            if (method == "brute") {
                auto g = load_graph(graph);
                if (k >= g.order()) throw UsageError("--k must be below the vertex count");
                if (binomial(g.order(), k) > cap)
                    throw CapExceeded("C(" + std::to_string(g.order()) + "," + std::to_string(k) + ") exceeds --cap " +
                                      std::to_string(cap));
                auto f = k == 1 ? g : token_graph(g, k);
                auto s = eig_sym(to_real(laplacian(f))).spectrum;
                nlohmann::json j{{"n", g.order()},         {"k", k},
                                 {"method", method},       {"per_r", nlohmann::json::array()},
                                 {"spectrum", round12(s.values)}, {"lambda_removed", nlohmann::json::array()}};
                emit_spectrum(out, format, j, s.values, 1e-6);
            } else {
                auto cn = cycle_order(graph);
                if (!cn || k != 2) throw UsageError("--method " + method + " needs --graph cycle:n and --k 2");
                auto f = method == "lift" ? f2_cycle_lift_spectrum(*cn) : f2_cycle_spectrum(*cn);
                emit_spectrum(out, format, spectrum_json(f, true), f.spectrum.values, 1e-6);
            }
        } else if (tk->parsed()) {
            write_edge_list(out, token_graph(load_graph(graph), k));
        } else if (al->parsed()) {
            auto g = load_graph(graph);
            nlohmann::json j{{"graph", graph}, {"k", alpha_k}};
            if (!delete_str.empty()) {
                int i = 0;
                try {
                    std::size_t pos = 0;
                    i = std::stoi(delete_str, &pos);
                    if (pos != delete_str.size()) throw std::invalid_argument("trailing");
                } catch (const std::exception&) {
                    throw UsageError("--delete expects a vertex index");
                }
                g = delete_vertex(g, i);
                j["deleted"] = i;
            }
            if (alpha_k > 1) {
                if (binomial(g.order(), alpha_k) > cap) throw CapExceeded("token graph exceeds --cap");
                g = token_graph(g, alpha_k);
            }
            j["connected"] = is_connected(g);
            j["alpha"] = round12(algebraic_connectivity(g));
            out << j.dump(2) << '\n';
        } else if (qu->parsed()) {
            auto f = token_graph(build_family("cycle:" + std::to_string(n)), 2);
            auto p = f2_cycle_partition(n, shape == "u" ? F2Shape::u : F2Shape::path);
            auto q = quotient_laplacian(f, p);
            nlohmann::json j{{"n", n},
                             {"shape", shape},
                             {"cells", p.to_json()["cells"]},
                             {"matrix", q.to_json()},
                             {"spectrum", round12(q.spectrum().values)}};
            out << j.dump(2) << '\n';
        } else if (as->parsed()) {
            if (r >= n) throw UsageError("--r must lie in 0..n-1");
            auto a = asymptotic_eigs(n, r);
            auto s = bstar_spectrum(n, r);
            double dev = 0.0;
            std::vector<double> exact = s.values;
            if (n % 2 == 0) {  // drop the split-off 4 so both lists have n/2 - 1 entries
                auto it = std::min_element(exact.begin(), exact.end(),
                                           [](double x, double y) { return std::abs(x - 4.0) < std::abs(y - 4.0); });
                exact.erase(it);
            }
            for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - exact[i]));
            nlohmann::json j{{"n", n}, {"r", r}, {"asymptotic", round12(a)}, {"exact", round12(exact)},
                             {"max_deviation", round12(dev)}};
            out << j.dump(2) << '\n';
        } else if (ov->parsed()) {
            out << spectrum_json(f2_cycle_spectrum(n), per_r).dump(2) << '\n';
        } else if (vf->parsed()) {
            SuiteOptions opt;
            opt.table_tol = tol;
            auto rep = run_suite(suite, opt);
            if (format == "table")
                out << rep.summary();
            else
                out << rep.to_json().dump(2) << '\n';
            err << rep.suite << ": " << rep.checks.size() << " checks, " << rep.failures() << " failed\n";
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const PartitionError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace tokgraph
