// hydromoments: expectation values, reference table, uncertainty and entropy bounds,
// parameter sweeps and the verification report.

#include "hydromoments/entropy.hpp"
#include "hydromoments/errors.hpp"
#include "hydromoments/hydrogenic.hpp"
#include "hydromoments/largedim.hpp"
#include "hydromoments/oracle.hpp"
#include "hydromoments/records.hpp"
#include "hydromoments/sweep.hpp"
#include "hydromoments/table1.hpp"
#include "hydromoments/uncertainty.hpp"
#include "hydromoments/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace hydro;

namespace {

enum Exit { ok = 0, verificationFailed = 1, usage = 2, numeric = 3 };

struct StateFlags {
    int n = 1;
    int l = 0;
    int D = 3;
    std::string Z = "1";

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "principal quantum number")->required();
        cmd->add_option("--l", l, "orbital quantum number");
        cmd->add_option("--D", D, "dimension")->required();
        cmd->add_option("--Z", Z, "nuclear charge (decimal or p/q)");
    }
    HydrogenicState state() const {
        HydrogenicState s{n, l, D, specfun::toDouble(specfun::parseRational(Z))};
        validate(s);
        return s;
    }
};

std::string format_flag_check(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return format;
    throw ValidationError("unsupported --format '" + format + "'");
}

void print_records(const std::vector<report::CellRecord>& rows, const std::string& format) {
    if (format == "csv") {
        std::cout << report::csv_header() << '\n';
        for (const auto& r : rows) std::cout << report::to_csv(r) << '\n';
    } else if (format == "json") {
        std::cout << report::to_json(rows) << '\n';
    } else {
        std::cout << std::left << std::setw(4) << "n" << std::setw(4) << "l" << std::setw(6) << "D" << std::setw(6) << "Z"
                  << std::setw(8) << "alpha" << std::setw(10) << "space" << std::setw(12) << "method" << std::setw(22)
                  << "value" << std::setw(20) << "reference" << "rel_deviation\n";
        for (const auto& r : rows)
            std::cout << std::setw(4) << r.n << std::setw(4) << r.l << std::setw(6) << r.D << std::setw(6)
                      << report::format_number(r.Z) << std::setw(8) << (r.alpha ? report::format_number(*r.alpha) : "log")
                      << std::setw(10) << to_string(r.space) << std::setw(12) << to_string(r.method) << std::setw(22)
                      << (r.exactValue ? *r.exactValue : report::format_number(r.value)) << std::setw(20)
                      << (r.reference ? report::format_number(*r.reference) : "-")
                      << (r.relDeviation ? report::format_number(*r.relDeviation) : "-") << '\n';
    }
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) parts.push_back(item);
    return parts;
}

specfun::Precision default_precision() {
    const char* env = std::getenv("HYDROMOMENTS_PRECISION");
    if (!env || std::string(env).empty() || std::string(env) == "float") return specfun::Precision::automatic;
    if (std::string(env) == "rational") return specfun::Precision::rational;
    throw ValidationError("HYDROMOMENTS_PRECISION must be float or rational, got '" + std::string(env) + "'");
}

// --- expect -----------------------------------------------------------------------------------

struct ExpectFlags {
    StateFlags state;
    std::string alpha = "0";
    std::string space = "position";
    std::string method = "exact";
    bool logMoment = false;
    std::string format = "table";
    std::string precision;
};

report::CellRecord log_record(const HydrogenicState& s, Space space, sweep::SweepMethod method) {
    const bool pos = space == Space::position;
    report::CellRecord r{s.n, s.l, s.D, s.Z, std::nullopt, space};
    const double exact = pos ? hydrogenic::log_position_expectation(s).value : hydrogenic::log_momentum_expectation(s).value;
    switch (method) {
    case sweep::SweepMethod::exact:
        r.method = Method::exact;
        r.value = exact;
        return r;
    case sweep::SweepMethod::largeD:
        r.method = Method::largeD;
        r.value = pos ? largedim::log_position_largeD(s).value : largedim::log_momentum_largeD(s).value;
        break;
    case sweep::SweepMethod::oracle: {
        r.method = Method::oracle;
        const auto f = oracle::Selector::logarithm();
        r.value = (pos ? oracle::quad_position_moment(s, f) : oracle::quad_momentum_moment(s, f)).value;
        break;
    }
    default: throw ValidationError("--log is available for the exact, large-d and oracle methods");
    }
    r.reference = exact;
    r.relDeviation = report::relative_deviation(r.value, exact);
    return r;
}

int run_expect(const ExpectFlags& f) {
    format_flag_check(f.format, {"table", "csv", "json"});
    const auto s = f.state.state();
    const Space space = report::parse_space(f.space);
    const auto method = sweep::parse_sweep_method(f.method);
    specfun::Precision precision = default_precision();
    if (f.precision == "rational") precision = specfun::Precision::rational;
    else if (f.precision == "float") precision = specfun::Precision::automatic;
    else if (!f.precision.empty()) throw ValidationError("--precision must be float or rational");

    report::CellRecord rec;
    if (f.logMoment) {
        rec = log_record(s, space, method);
    } else {
        const specfun::Rational alphaQ = specfun::parseRational(f.alpha);
        const double alpha = specfun::toDouble(alphaQ);
        if (space == Space::position)
            hydrogenic::check_position_alpha(s, alpha);
        else
            hydrogenic::check_momentum_alpha(s, alpha);
        if (precision == specfun::Precision::rational && method == sweep::SweepMethod::exact) {
            const auto e = space == Space::position ? hydrogenic::position_expectation(s, alpha, precision)
                                                    : hydrogenic::momentum_expectation(s, alpha, precision);
            rec = {s.n, s.l, s.D, s.Z, alpha, space, Method::exact, e.value};
            if (e.exact) rec.exactValue = specfun::toString(*e.exact);
        } else {
            rec = sweep::evaluate_cell({s, alpha, space, method});
        }
    }
    print_records({rec}, f.format);
    return ok;
}

// --- table1 -----------------------------------------------------------------------------------

int run_table1(const std::string& format) {
    format_flag_check(format, {"table", "csv", "json"});
    const auto rows = table1::compute_table();
    if (format != "table") {
        std::vector<report::CellRecord> records;
        for (const auto& row : rows) {
            const auto& p = row.printed;
            report::CellRecord a{2, 0, p.D, 1.0, p.alpha, p.space, Method::largeD, row.asymptotic};
            a.reference = p.asymptotic;
            a.relDeviation = row.asymptoticDeviation;
            report::CellRecord e{2, 0, p.D, 1.0, p.alpha, p.space, Method::exact, row.exact};
            e.reference = p.exact;
            e.relDeviation = row.exactDeviation;
            records.push_back(a);
            records.push_back(e);
        }
        std::stable_sort(records.begin(), records.end(), report::record_less);
        print_records(records, format);
        return ok;
    }
    std::cout << "(n, l, Z) = (2, 0, 1)\n";
    std::cout << std::left << std::setw(6) << "D" << std::setw(7) << "alpha" << std::setw(18) << "<r^a> asymp"
              << std::setw(18) << "<p^a> asymp" << std::setw(18) << "<r^a> exact" << std::setw(18) << "<p^a> exact"
              << "printed (r asymp | p asymp | r exact | p exact)\n";
    for (std::size_t i = 0; i < rows.size() / 2; ++i) {
        const auto& r = rows[i];
        const auto& p = rows[i + rows.size() / 2];
        std::cout << std::setw(6) << r.printed.D << std::setw(7) << report::format_number(r.printed.alpha) << std::setw(18)
                  << report::format_number(r.asymptotic) << std::setw(18) << report::format_number(p.asymptotic)
                  << std::setw(18) << report::format_number(r.exact) << std::setw(18) << report::format_number(p.exact)
                  << r.printed.asymptoticText << " | " << p.printed.asymptoticText << " | " << r.printed.exactText << " | "
                  << p.printed.exactText << '\n';
    }
    std::cout << "\ndeviation annex (exact value departs from the printed one beyond 1e-4, or asymptotic value\n"
                 "outside the printed precision):\n";
    bool any = false;
    for (const auto& r : rows) {
        if (r.exactFlagged) {
            any = true;
            std::cout << "  " << to_string(r.printed.space) << " exact   D=" << r.printed.D << " alpha="
                      << report::format_number(r.printed.alpha) << ": computed " << report::format_number(r.exact)
                      << " (quadrature " << report::format_number(r.oracle) << "), printed " << r.printed.exactText
                      << ", rel. deviation " << report::format_number(r.exactDeviation) << '\n';
        }
        if (!r.asymptoticMatches) {
            any = true;
            std::cout << "  " << to_string(r.printed.space) << " asymp   D=" << r.printed.D << " alpha="
                      << report::format_number(r.printed.alpha) << ": computed " << report::format_number(r.asymptotic)
                      << ", printed " << r.printed.asymptoticText << '\n';
        }
    }
    if (!any) std::cout << "  none\n";
    return ok;
}

// --- uncertainty ------------------------------------------------------------------------------

int run_uncertainty(const StateFlags& sf, const std::string& format) {
    format_flag_check(format, {"table", "json"});
    const auto s = sf.state();
    using namespace uncertainty;
    std::vector<std::pair<std::string, UncertaintyRecord>> rows{
        {"<r^2><p^2>", check_heisenberg_bound(s, BoundKind::kennard)},
        {"<r^2><p^2>", check_heisenberg_bound(s, BoundKind::centralRefined)},
        {"<log r^2>+<log p^2>", log_uncertainty_sum(s, BoundKind::logGeneral)},
        {"<log r^2>+<log p^2>", log_uncertainty_sum(s, BoundKind::logRefined)},
    };
    if (format == "json") {
        auto j = nlohmann::ordered_json::array();
        for (const auto& [what, r] : rows)
            j.push_back({{"quantity", what},
                         {"bound_kind", std::string(to_string(r.boundKind))},
                         {"value", r.productValue},
                         {"bound", r.bound},
                         {"margin", r.margin},
                         {"satisfied", r.satisfied}});
        std::cout << j.dump(1) << '\n';
        return ok;
    }
    std::cout << describe(s) << '\n';
    for (const auto& [what, r] : rows)
        std::cout << "  " << std::left << std::setw(22) << what << std::setw(17) << to_string(r.boundKind) << "value "
                  << std::setw(16) << report::format_number(r.productValue) << "bound " << std::setw(16)
                  << report::format_number(r.bound) << "margin " << std::setw(16) << report::format_number(r.margin)
                  << (r.satisfied ? "satisfied" : "VIOLATED") << '\n';
    return ok;
}

// --- entropy ----------------------------------------------------------------------------------

struct EntropyFlags {
    StateFlags state;
    std::string kind = "shannon";
    double q = 2.0;
    std::string space = "position";
    std::optional<double> boundAlpha;
    int momentSign = +1;
    std::string format = "table";
};

int run_entropy(const EntropyFlags& f) {
    format_flag_check(f.format, {"table", "json"});
    const auto s = f.state.state();
    const Space space = report::parse_space(f.space);
    entropy::Kind kind;
    if (f.kind == "shannon") kind = entropy::Kind::shannon;
    else if (f.kind == "renyi") kind = entropy::Kind::renyi;
    else if (f.kind == "tsallis") kind = entropy::Kind::tsallis;
    else throw ValidationError("--kind must be shannon, renyi or tsallis");

    std::optional<entropy::EntropyValue> value;
    if (s.l == 0) value = entropy::entropy_quadrature(s, kind, f.q, space);
    std::optional<entropy::BoundReport> bound;
    if (f.boundAlpha) {
        if (kind == entropy::Kind::shannon) bound = entropy::bound_shannon_upper(s, *f.boundAlpha, space);
        else if (kind == entropy::Kind::renyi) bound = entropy::bound_renyi_upper(s, f.q, *f.boundAlpha, f.momentSign, space);
        else bound = entropy::bound_tsallis_lower(s, f.q, *f.boundAlpha, f.momentSign, space);
    }
    if (f.format == "json") {
        nlohmann::ordered_json j;
        j["n"] = s.n;
        j["l"] = s.l;
        j["D"] = s.D;
        j["Z"] = s.Z;
        j["kind"] = f.kind;
        j["q"] = kind == entropy::Kind::shannon ? nlohmann::ordered_json() : nlohmann::ordered_json(f.q);
        j["space"] = f.space;
        j["entropy"] = value ? nlohmann::ordered_json(value->value) : nlohmann::ordered_json();
        if (bound) {
            j["bound"] = bound->boundValue;
            j["direction"] = std::string(entropy::to_string(bound->direction));
            j["alpha"] = bound->inputs.alpha;
            j["moment_sign"] = bound->inputs.momentSign;
            j["satisfied"] = bound->satisfied ? nlohmann::ordered_json(*bound->satisfied) : nlohmann::ordered_json();
            if (bound->momentBound) j["entropic_moment_bound"] = *bound->momentBound;
            if (bound->momentValue) j["entropic_moment"] = *bound->momentValue;
        }
        std::cout << j.dump(1) << '\n';
        return ok;
    }
    std::cout << describe(s) << ' ' << f.space << ' ' << f.kind;
    if (kind != entropy::Kind::shannon) std::cout << " q=" << report::format_number(f.q);
    std::cout << '\n';
    std::cout << "  entropy " << (value ? report::format_number(value->value) : "not applicable (l > 0)") << '\n';
    if (bound) {
        std::cout << "  " << entropy::to_string(bound->direction) << " bound " << report::format_number(bound->boundValue)
                  << " (alpha=" << report::format_number(bound->inputs.alpha)
                  << (bound->inputs.momentSign < 0 ? ", negative moment" : "") << ")\n";
        if (bound->momentBound)
            std::cout << "  entropic moment W_q " << (bound->momentValue ? report::format_number(*bound->momentValue) : "-")
                      << " >= " << report::format_number(*bound->momentBound) << '\n';
        std::cout << "  "
                  << (bound->satisfied ? (*bound->satisfied ? "satisfied" : "VIOLATED") : "satisfied: not applicable")
                  << '\n';
    }
    return ok;
}

// --- verify -----------------------------------------------------------------------------------

int run_verify(const std::string& suite, int jobs, const std::string& format) {
    format_flag_check(format, {"table", "json"});
    const auto report = verify::run_suite(suite, jobs);
    std::cout << (format == "json" ? verify::to_json(report) + "\n" : verify::to_text(report));
    return report.passed() ? ok : verificationFailed;
}

// --- sweep ------------------------------------------------------------------------------------

struct SweepFlags {
    int nMax = 3;
    int l = -1;
    std::string Ds = "3,10,50";
    std::string Zs = "1";
    std::string alphas = "-1,1,2";
    std::string spaces = "position,momentum";
    std::string methods = "exact";
    int jobs = 1;
    std::string format = "csv";
};

int run_sweep(const SweepFlags& f) {
    format_flag_check(f.format, {"table", "csv", "json"});
    sweep::Grid grid;
    grid.ns.clear();
    for (int n = 1; n <= f.nMax; ++n) grid.ns.push_back(n);
    grid.lOnly = f.l;
    grid.Ds.clear();
    for (const auto& d : split(f.Ds)) grid.Ds.push_back(std::stoi(d));
    grid.Zs.clear();
    for (const auto& z : split(f.Zs)) grid.Zs.push_back(specfun::toDouble(specfun::parseRational(z)));
    grid.alphas.clear();
    for (const auto& a : split(f.alphas)) grid.alphas.push_back(specfun::toDouble(specfun::parseRational(a)));
    grid.spaces.clear();
    for (const auto& s : split(f.spaces)) grid.spaces.push_back(report::parse_space(s));
    grid.methods.clear();
    for (const auto& m : split(f.methods)) grid.methods.push_back(sweep::parse_sweep_method(m));
    const auto result = sweep::run(sweep::expand(grid), f.jobs);
    print_records(result.records, f.format);
    for (const auto& fail : result.failures)
        std::cerr << "failed: " << describe(fail.cell.state) << " alpha=" << report::format_number(fail.cell.alpha) << ' '
                  << to_string(fail.cell.space) << ' ' << sweep::to_string(fail.cell.method) << ": " << fail.message << '\n';
    return result.failures.empty() ? ok : numeric;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Expectation values, uncertainty products and entropic bounds of D-dimensional hydrogenic states"};
    app.require_subcommand(1);

    ExpectFlags ef;
    auto* expect = app.add_subcommand("expect", "radial expectation value <r^alpha>, <p^alpha> or a log moment");
    ef.state.attach(expect);
    expect->add_option("--alpha", ef.alpha, "moment order (decimal or p/q)");
    expect->add_option("--space", ef.space, "position or momentum");
    expect->add_option("--method", ef.method, "exact, large-d, rydberg-fixed-d, rydberg-nl-gap or oracle");
    expect->add_flag("--log", ef.logMoment, "logarithmic moment <log r> or <log p>");
    expect->add_option("--format", ef.format, "table, csv or json");
    expect->add_option("--precision", ef.precision, "float or rational (default from HYDROMOMENTS_PRECISION)");

    std::string tableFormat = "table";
    auto* table = app.add_subcommand("table1", "reference convergence table for (n, l, Z) = (2, 0, 1)");
    table->add_option("--format", tableFormat, "table, csv or json");

    StateFlags uf;
    std::string uncFormat = "table";
    auto* unc = app.add_subcommand("uncertainty", "Heisenberg-like and logarithmic uncertainty relations");
    uf.attach(unc);
    unc->add_option("--format", uncFormat, "table or json");

    EntropyFlags enf;
    auto* ent = app.add_subcommand("entropy", "Shannon, Renyi or Tsallis entropy and moment-based bounds");
    enf.state.attach(ent);
    ent->add_option("--kind", enf.kind, "shannon, renyi or tsallis");
    ent->add_option("--q", enf.q, "entropic order for renyi and tsallis");
    ent->add_option("--space", enf.space, "position or momentum");
    ent->add_option("--bound-alpha", enf.boundAlpha, "moment order of the bound");
    ent->add_option("--moment-sign", enf.momentSign, "+1 uses <x^alpha>, -1 uses <x^-alpha>");
    ent->add_option("--format", enf.format, "table or json");

    std::string suite = "all", verifyFormat = "table";
    int verifyJobs = 1;
    auto* ver = app.add_subcommand("verify", "run the verification suites");
    ver->add_option("--suite", suite, "specfun, exact, largedim, rydberg, uncertainty, entropy or all");
    ver->add_option("--jobs", verifyJobs, "worker threads (0 = all cores)");
    ver->add_option("--format", verifyFormat, "table or json");

    SweepFlags sw;
    auto* swp = app.add_subcommand("sweep", "evaluate a grid of cells, sorted deterministically");
    swp->add_option("--n-max", sw.nMax, "largest n (every l < n unless --l is given)");
    swp->add_option("--l", sw.l, "restrict to one l");
    swp->add_option("--D", sw.Ds, "comma-separated dimensions");
    swp->add_option("--Z", sw.Zs, "comma-separated charges");
    swp->add_option("--alpha", sw.alphas, "comma-separated moment orders");
    swp->add_option("--space", sw.spaces, "comma-separated spaces");
    swp->add_option("--method", sw.methods, "comma-separated methods");
    swp->add_option("--jobs", sw.jobs, "worker threads (0 = all cores)");
    swp->add_option("--format", sw.format, "csv, json or table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*expect) return run_expect(ef);
        if (*table) return run_table1(tableFormat);
        if (*unc) return run_uncertainty(uf, uncFormat);
        if (*ent) return run_entropy(enf);
        if (*ver) return run_verify(suite, verifyJobs, verifyFormat);
        if (*swp) return run_sweep(sw);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return numeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: malformed number: " << e.what() << '\n';
        return usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: number out of range: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return numeric;
    }
    return usage;
}
