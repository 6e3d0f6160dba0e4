#include "cli.hpp"

#include <jetprolong/closed_form.hpp>
#include <jetprolong/emitter.hpp>
#include <jetprolong/errors.hpp>
#include <jetprolong/faa_di_bruno.hpp>
#include <jetprolong/inductive.hpp>
#include <jetprolong/oracles.hpp>
#include <jetprolong/parallel.hpp>
#include <jetprolong/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <map>
#include <ostream>
#include <sstream>

namespace jetprolong::cli
{

namespace
{

using nlohmann::json;

struct Common {
    int n = 1;
    int m = 1;
    int kappa = 0;
    std::vector<int> indices;
    std::string format = "latex";
    std::string style = "bracketed";
    unsigned jobs = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App &cmd, Common &c)
{
    cmd.add_option("--n", c.n, "number of independent variables")->check(CLI::PositiveNumber);
    cmd.add_option("--m", c.m, "number of dependent variables")->check(CLI::PositiveNumber);
    cmd.add_option("--kappa", c.kappa, "derivative order")->required();
    cmd.add_option("--indices", c.indices, "i_1,..,i_kappa (default 1,..,1)")->delimiter(',');
    cmd.add_option("--format", c.format)->check(CLI::IsMember({"latex", "text", "json"}));
    cmd.add_option("--style", c.style, "latex layout")->check(CLI::IsMember({"bracketed", "compact"}));
    cmd.add_option("--jobs", c.jobs, "worker threads (default JETPROLONG_JOBS or 1)");
}

// Fills defaults and range-checks everything the engines would reject.
void settle(Common &c)
{
    if (c.kappa < 1) {
        throw UsageError("--kappa must be at least 1");
    }
    if (c.indices.empty()) {
        c.indices.assign(static_cast<std::size_t>(c.kappa), 1);
    }
    if (static_cast<int>(c.indices.size()) != c.kappa) {
        throw UsageError("--indices needs exactly kappa = " + std::to_string(c.kappa) + " entries");
    }
    for (int i : c.indices) {
        if (i < 1 || i > c.n) {
            throw UsageError("index " + std::to_string(i) + " outside 1.." + std::to_string(c.n));
        }
    }
    if (c.jobs == 0) {
        c.jobs = default_jobs();
    }
}

template <class P>
std::string render(const P &p, const Common &c)
{
    if (c.format == "json") {
        return to_json(p);
    }
    if (c.format == "text") {
        return to_text(p);
    }
    if constexpr (std::is_same_v<P, CoefficientPolynomial>) {
        return to_latex(p, c.style == "compact" ? LatexStyle::compact : LatexStyle::bracketed);
    } else {
        return to_latex(p);
    }
}

// Prints the first engine's result; returns 1 and the first difference if any other engine disagrees.
template <class P>
int report(const std::vector<std::pair<std::string, P>> &results, const Common &c, std::ostream &out,
           std::ostream &err)
{
    out << render(results.front().second, c) << '\n';
    int code = 0;
    for (std::size_t a = 1; a < results.size(); ++a) {
        if (auto d = first_difference(results.front().second, results[a].second)) {
            err << "mismatch " << results.front().first << " vs " << results[a].first << ": " << *d << '\n';
            code = 1;
        }
    }
    if (code == 0 && results.size() > 1) {
        err << "equal:";
        for (const auto &[name, p] : results) {
            err << ' ' << name;
        }
        err << '\n';
    }
    return code;
}

json report_json(const SuiteReport &r, bool timing)
{
    json failures = json::array();
    for (const auto &f : r.failures) {
        failures.push_back({{"input", f.input}, {"engine_a", f.engine_a}, {"engine_b", f.engine_b},
                            {"first_diff", f.first_diff}});
    }
    json j = {{"suite", r.suite}, {"cases", r.cases}, {"failures", failures}};
    if (timing) {
        j["elapsed_ms"] = r.elapsed_ms;
    }
    return j;
}

json known_misprints()
{
    json list = json::array();
    for (const auto &c : table_corrections()) {
        list.push_back(
            {{"entry", c.entry}, {"monomial", c.monomial}, {"printed", c.reference}, {"computed", c.computed}});
    }
    return list;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Prolongation coefficients of vector fields to jet spaces"};
    app.require_subcommand(1);

    Common pc;
    std::string prolong_engine = "closed";
    int j = 1;
    auto *prolong = app.add_subcommand("prolong", "coefficient Y^j_{i_1..i_kappa} of the prolonged field");
    add_common(*prolong, pc);
    prolong->add_option("--j", j, "dependent component")->check(CLI::PositiveNumber);
    prolong->add_option("--engine", prolong_engine)->check(CLI::IsMember({"closed", "inductive", "both"}));

    Common fc;
    std::string faa_engine = "closed";
    auto *faa = app.add_subcommand("faa", "derivative of a composite function f(g(x))");
    add_common(*faa, fc);
    faa->add_option("--engine", faa_engine)->check(CLI::IsMember({"closed", "inductive", "partitions", "all"}));

    std::string suite = "all";
    VerifyOptions vo;
    vo.jobs = 0;
    bool omit_timing = false;
    auto *verify = app.add_subcommand("verify", "cross-engine and property sweeps, JSON report on stdout");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"prolong", "faa", "combinatorics", "all"}));
    verify->add_option("--max-kappa", vo.max_kappa)->check(CLI::PositiveNumber);
    verify->add_option("--max-n", vo.max_n)->check(CLI::PositiveNumber);
    verify->add_option("--max-m", vo.max_m)->check(CLI::PositiveNumber);
    verify->add_option("--seed", vo.seed);
    verify->add_option("--random-cases", vo.random_cases)->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", vo.jobs, "worker threads (default JETPROLONG_JOBS or 1)");
    verify->add_flag("--omit-timing", omit_timing, "leave elapsed_ms out so reports compare byte for byte");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (prolong->parsed()) {
            settle(pc);
            if (j > pc.m) {
                throw UsageError("--j outside 1.." + std::to_string(pc.m));
            }
            const Dims dims(pc.n, pc.m);
            std::vector<std::pair<std::string, CoefficientPolynomial>> results;
            if (prolong_engine != "inductive") {
                results.emplace_back("closed", prolongation_closed({dims, j, pc.indices}, {.jobs = pc.jobs, .transversal = {}}));
            }
            if (prolong_engine != "closed") {
                const auto table = prolong_inductive(dims, pc.kappa, {.verify_symmetry = false, .jobs = pc.jobs});
                results.emplace_back("inductive", table.entry(j, pc.indices));
            }
            return report(results, pc, out, err);
        }
        if (faa->parsed()) {
            settle(fc);
            const Dims dims(fc.n, fc.m);
            std::vector<std::pair<std::string, FaaPolynomial>> results;
            const bool all = faa_engine == "all";
            if (all || faa_engine == "closed") {
                results.emplace_back("closed", faa_closed(dims, fc.indices, {.jobs = fc.jobs, .transversal = {}}));
            }
            if (all || faa_engine == "inductive") {
                results.emplace_back("inductive", faa_inductive(dims, fc.indices));
            }
            if (all || faa_engine == "partitions") {
                results.emplace_back("partitions", oracle::faa_partitions(dims, fc.indices));
            }
            return report(results, fc, out, err);
        }
        if (vo.jobs == 0) {
            vo.jobs = default_jobs();
        }
        std::vector<SuiteReport> reports;
        if (suite == "prolong" || suite == "all") {
            reports.push_back(verify_prolongation(vo));
        }
        if (suite == "faa" || suite == "all") {
            reports.push_back(verify_faa(vo));
        }
        if (suite == "combinatorics" || suite == "all") {
            reports.push_back(verify_combinatorics(vo));
        }
        json doc;
        if (reports.size() == 1) {
            doc = report_json(reports.front(), !omit_timing);
        } else {
            SuiteReport total;
            total.suite = "all";
            json parts = json::array();
            for (const auto &r : reports) {
                total.cases += r.cases;
                total.elapsed_ms += r.elapsed_ms;
                total.failures.insert(total.failures.end(), r.failures.begin(), r.failures.end());
                parts.push_back(report_json(r, !omit_timing));
            }
            doc = report_json(total, !omit_timing);
            doc["suites"] = parts;
        }
        doc["known_misprints"] = known_misprints();
        out << doc.dump(2) << '\n';
        int code = 0;
        for (const auto &r : reports) {
            for (const auto &f : r.failures) {
                err << r.suite << ": " << f.input << ": " << f.engine_a << " vs " << f.engine_b << ": " << f.first_diff
                    << '\n';
                code = 1;
            }
        }
        return code;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument &e) {
        // DimensionError and DomainError from the library
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace jetprolong::cli
