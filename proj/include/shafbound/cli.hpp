#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "shafbound/bounds.hpp"
#include "shafbound/json_io.hpp"

namespace shafbound {

/// A fully validated unit of work; no computation starts until every input
/// has been checked, so invalid input never produces a partial report.
struct Request {
    enum class Command { gotzmann, coeffbound, constants, chow, sweep };
    enum class Format { json, csv, text };

    struct ChowArgs {
        Int M;
        int kappa = 1;
        Int delta1;
        Magnitude delta2;
    };

    Command command = Command::constants;
    Format format = Format::json;
    unsigned precision = kDefaultPrecision;
    std::uint64_t exact_digit_limit = 0;  // 0 keeps the policy default
    bool pluricanonical = false;

    std::optional<RatPoly> poly;                  // gotzmann
    std::optional<CanonicalPolarization> triple;  // coeffbound
    std::optional<FamilyParams> params;           // constants
    std::optional<ChowArgs> chow;                 // chow
    std::vector<FamilyParams> grid;               // sweep
};

namespace detail {

class PolicyOverride {
  public:
    explicit PolicyOverride(std::uint64_t exact_digit_limit) : saved_(magnitude_policy()) {
        if (exact_digit_limit > 0) magnitude_policy().exact_digit_limit = exact_digit_limit;
    }
    ~PolicyOverride() { magnitude_policy() = saved_; }
    PolicyOverride(const PolicyOverride&) = delete;
    PolicyOverride& operator=(const PolicyOverride&) = delete;

  private:
    MagnitudePolicy saved_;
};

inline FamilyParams resolve_params(const Request& req, const FamilyParams& base) {
    FamilyParams p = base;
    if (req.pluricanonical) {
        if (p.g < 2)
            throw PreconditionViolated("--pluricanonical requires genus g >= 2");
        p.a = (m0_constant(p.n, req.precision) - 1) * (2 * p.g - 2);
    }
    return p;
}

inline void print_text_report(const BoundReport& r, std::ostream& out) {
    out << "mode:      " << r.mode << "\n";
    out << "m0:        " << r.m0.str() << "\n";
    out << "h(m0):     " << r.h_m0.str() << "\n";
    out << "mu:        " << r.mu.str() << "\n";
    out << "ell_star:  " << r.ell_star.human() << "\n";
    out << "delta(m0): " << r.delta_m0.str() << "\n";
    out << "d(1,a):    " << r.d_1.str() << "\n";
    out << "N:         " << r.N.str() << "\n";
    out << "d:         " << r.d_const.human() << "\n";
    out << "M:         " << r.M.str() << "\n";
    out << "C:         " << r.C.human();
    if (r.C.has_enclosure())
        out << "   (enclosure width 10^" << r.C.enclosure_log10_width().str(6, std::ios_base::fixed)
            << " in log10 space)";
    out << "\n";
}

inline void run_gotzmann(const Request& req, std::ostream& out) {
    const RatPoly& p = *req.poly;
    const GotzmannDecomposition dec = decompose_greedy(p);
    const LengthTable table = lengths_recursive(p, p.degree());
    std::optional<Magnitude> ell_star;
    try {
        ell_star = length_upper_bound(p, p.degree());
    } catch (const NonIntegral&) {
        // mu is undefined when some k! p_k is fractional; the decomposition
        // itself is still valid, so report without the tower bound
    }
    switch (req.format) {
        case Request::Format::json: {
            Json j = decomposition_to_json(dec);
            j["length_table"] = length_table_to_json(table);
            j["ell_star"] = ell_star ? magnitude_to_json(*ell_star) : Json(nullptr);
            out << j.dump(2) << "\n";
            break;
        }
        case Request::Format::csv:
            out << "length,ell0,ell_star\n";
            out << dec.length() << "," << table.ell0().str() << ","
                << (ell_star ? ell_star->human() : std::string()) << "\n";
            break;
        case Request::Format::text:
            out << "polynomial: " << p.str() << "\n";
            out << "length:     " << dec.length() << "\n";
            out << "ell table:  ";
            for (std::size_t i = table.ell.size(); i-- > 0;)
                out << table.ell[i].str() << (i == 0 ? "\n" : " ");
            out << "ell_star:   " << (ell_star ? ell_star->human() : std::string("undefined")) << "\n";
            break;
    }
}

inline void run_coeffbound(const Request& req, std::ostream& out) {
    const CanonicalPolarization& cp = *req.triple;
    const std::vector<bool> per_k = check_coeff_bounds(cp);
    bool all = true;
    for (bool b : per_k) all = all && b;
    switch (req.format) {
        case Request::Format::json: {
            Json j;
            j["input"] = polarization_to_json(cp);
            j["per_k"] = per_k;
            Json bounds = Json::array();
            for (int k = 0; k <= cp.n; ++k) bounds.push_back(rat_to_string(coeff_bound(cp.n, k, cp.volume)));
            j["bounds"] = std::move(bounds);
            j["all_hold"] = all;
            out << j.dump(2) << "\n";
            break;
        }
        case Request::Format::csv: {
            out << "n,v,all_hold,per_k\n" << cp.n << "," << rat_to_string(cp.volume) << ","
                << (all ? "true" : "false") << ",";
            for (std::size_t k = 0; k < per_k.size(); ++k)
                out << (per_k[k] ? "1" : "0") << (k + 1 == per_k.size() ? "\n" : ";");
            break;
        }
        case Request::Format::text:
            out << "n = " << cp.n << ", v = " << rat_to_string(cp.volume) << "\n";
            for (std::size_t k = 0; k < per_k.size(); ++k)
                out << "k = " << k << ": " << (per_k[k] ? "holds" : "fails")
                    << "  (bound " << rat_to_string(coeff_bound(cp.n, static_cast<int>(k), cp.volume))
                    << ")\n";
            out << (all ? "all bounds hold\n" : "some bound fails\n");
            break;
    }
}

inline void run_constants(const Request& req, std::ostream& out) {
    const FamilyParams p = resolve_params(req, *req.params);
    const BoundReport rep = p.h ? C_gsh(p, req.precision)
                                : C_gsnv(p.g, p.s, p.n, p.v, p.a, req.precision);
    switch (req.format) {
        case Request::Format::json:
            out << bound_report_to_json(rep, p, req.precision).dump(2) << "\n";
            break;
        case Request::Format::csv:
            out << bound_report_csv_header() << "\n"
                << bound_report_csv_row(rep, p, req.precision) << "\n";
            break;
        case Request::Format::text:
            print_text_report(rep, out);
            break;
    }
}

inline void run_chow(const Request& req, std::ostream& out) {
    const Request::ChowArgs& c = *req.chow;
    const Magnitude result = chow_bound(c.M, c.kappa, c.delta1, c.delta2);
    switch (req.format) {
        case Request::Format::json: {
            Json j;
            j["chow_bound"] = magnitude_to_json(result);
            out << j.dump(2) << "\n";
            break;
        }
        case Request::Format::csv:
            out << "level,value\n" << result.level() << "," << magnitude_csv_value(result) << "\n";
            break;
        case Request::Format::text:
            out << "chow bound: " << result.human() << "\n";
            break;
    }
}

inline void run_sweep(const Request& req, std::ostream& out) {
    // all rows validated up front by the parser; compute in grid order
    std::vector<BoundReport> reports;
    reports.reserve(req.grid.size());
    for (const FamilyParams& base : req.grid) {
        const FamilyParams p = resolve_params(req, base);
        reports.push_back(p.h ? C_gsh(p, req.precision)
                              : C_gsnv(p.g, p.s, p.n, p.v, p.a, req.precision));
    }
    if (req.format == Request::Format::json) {
        Json arr = Json::array();
        for (std::size_t i = 0; i < reports.size(); ++i)
            arr.push_back(bound_report_to_json(reports[i], req.grid[i], req.precision));
        out << arr.dump(2) << "\n";
        return;
    }
    // csv and text share the flat table
    out << bound_report_csv_header() << "\n";
    for (std::size_t i = 0; i < reports.size(); ++i)
        out << bound_report_csv_row(reports[i], req.grid[i], req.precision) << "\n";
}

}  // namespace detail

/// Executes a validated request, writing the report to out. Throws
/// ValidationError / ComputationError; exit-code mapping happens in run_cli.
inline void run(const Request& req, std::ostream& out) {
    PrecisionGuard guard(req.precision);
    detail::PolicyOverride policy(req.exact_digit_limit);
    switch (req.command) {
        case Request::Command::gotzmann: detail::run_gotzmann(req, out); break;
        case Request::Command::coeffbound: detail::run_coeffbound(req, out); break;
        case Request::Command::constants: detail::run_constants(req, out); break;
        case Request::Command::chow: detail::run_chow(req, out); break;
        case Request::Command::sweep: detail::run_sweep(req, out); break;
    }
}

namespace detail {

inline RatPoly parse_poly_arg(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("cannot parse polynomial JSON: ") + e.what());
    }
    return ratpoly_from_json(j);
}

inline Request::Format parse_format(const std::string& name) {
    if (name == "json") return Request::Format::json;
    if (name == "csv") return Request::Format::csv;
    if (name == "text") return Request::Format::text;
    throw ValidationError("unknown format '" + name + "' (expected json, csv or text)");
}

}  // namespace detail

/// Command-line front end. args excludes the program name. Returns 0 on
/// success, 1 for validation/usage errors, 2 for computational errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"effective deformation-type count bounds for families of canonically polarized manifolds"};
    app.require_subcommand(1);
    // --h is an option name here, so help must not claim the short -h
    app.set_help_flag("--help", "print help");
    // global options (--format, --precision, --out) may follow the subcommand
    app.fallthrough(true);

    std::string format = "json";
    unsigned precision = kDefaultPrecision;
    std::uint64_t exact_limit = 0;
    std::string out_file;
    auto* format_opt =
        app.add_option("--format", format, "output format: json, csv or text (sweep defaults to csv)")
            ->capture_default_str();
    app.add_option("--precision", precision, "working precision in decimal digits (>= 30)")
        ->capture_default_str();
    app.add_option("--exact-digit-limit", exact_limit,
                   "exact-integer digit cap before promotion to log tiers");
    app.add_option("--out", out_file, "write the report to FILE instead of stdout");

    auto* gotz = app.add_subcommand("gotzmann", "binomial-sum decomposition, length table and tower bound");
    std::string poly_text;
    gotz->add_option("--poly", poly_text, "polynomial as a JSON coefficient array, ascending degree")
        ->required();

    auto* coeff = app.add_subcommand("coeffbound", "check Hilbert coefficients against the volume bounds");
    int cb_n = 1;
    std::string cb_v;
    std::string cb_h;
    coeff->add_option("--n", cb_n, "dimension")->required();
    coeff->add_option("--v", cb_v, "canonical volume")->required();
    coeff->add_option("--h", cb_h, "Hilbert polynomial as a JSON coefficient array")->required();

    auto* consts = app.add_subcommand("constants", "full effective-constant report for one instance");
    std::string c_g, c_s, c_v;
    int c_n = 1;
    std::string c_h;
    bool pluri = false;
    consts->add_option("--g", c_g, "base curve genus")->required();
    consts->add_option("--s", c_s, "number of degenerate points")->required();
    consts->add_option("--n", c_n, "fiber dimension")->required();
    consts->add_option("--v", c_v, "canonical volume")->required();
    consts->add_option("--h", c_h, "fiber Hilbert polynomial (omit for the volume-bounded mode)");
    consts->add_flag("--pluricanonical", pluri, "use the pluricanonical twist a = (m0-1)(2g-2), g >= 2");

    auto* chow = app.add_subcommand("chow", "one Chow component-count bound");
    std::string ch_M, ch_d1, ch_d2, ch_d2_log10;
    int ch_kappa = 1;
    chow->add_option("--M", ch_M, "ambient projective dimension")->required();
    chow->add_option("--kappa", ch_kappa, "cycle dimension")->required();
    chow->add_option("--delta1", ch_d1, "defining degree bound of W")->required();
    chow->add_option("--delta2", ch_d2, "cycle degree (exact integer)");
    chow->add_option("--delta2-log10", ch_d2_log10, "cycle degree as log10 (level-1 magnitude)");

    auto* sweep = app.add_subcommand("sweep", "run a parameter grid from a JSON file, emit one row per entry");
    std::string grid_file;
    sweep->add_option("--grid", grid_file, "JSON file {\"grid\": [ {g,s,n,v,h?,a?}, ... ]}")->required();

    std::vector<std::string> argv_store;
    argv_store.push_back("shafbound");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        Request req;
        req.format = detail::parse_format(format);
        if (precision < kMinPrecision)
            throw ValidationError("--precision must be at least " + std::to_string(kMinPrecision));
        req.precision = precision;
        req.exact_digit_limit = exact_limit;
        req.pluricanonical = pluri;

        if (gotz->parsed()) {
            req.command = Request::Command::gotzmann;
            req.poly = detail::parse_poly_arg(poly_text);
            if (req.poly->is_zero()) throw ValidationError("polynomial must be nonzero");
        } else if (coeff->parsed()) {
            req.command = Request::Command::coeffbound;
            CanonicalPolarization cp;
            cp.n = cb_n;
            cp.volume = parse_rat(cb_v);
            cp.hilbert = detail::parse_poly_arg(cb_h);
            cp.validate();
            req.triple = std::move(cp);
        } else if (consts->parsed()) {
            req.command = Request::Command::constants;
            FamilyParams p;
            p.g = Int(c_g);
            p.s = Int(c_s);
            p.n = c_n;
            p.v = parse_rat(c_v);
            if (!c_h.empty()) p.h = detail::parse_poly_arg(c_h);
            p.validate();
            req.params = std::move(p);
        } else if (chow->parsed()) {
            req.command = Request::Command::chow;
            Request::ChowArgs c;
            c.M = Int(ch_M);
            c.kappa = ch_kappa;
            c.delta1 = Int(ch_d1);
            if (!ch_d2.empty() && !ch_d2_log10.empty())
                throw ValidationError("give exactly one of --delta2 and --delta2-log10");
            if (ch_d2.empty() && ch_d2_log10.empty())
                throw ValidationError("give exactly one of --delta2 and --delta2-log10");
            PrecisionGuard guard(req.precision);
            c.delta2 = ch_d2.empty() ? Magnitude::from_log10(parse_real(ch_d2_log10))
                                     : Magnitude::exact(Int(ch_d2));
            req.chow = std::move(c);
        } else if (sweep->parsed()) {
            req.command = Request::Command::sweep;
            if (format_opt->count() == 0) req.format = Request::Format::csv;
            std::ifstream in(grid_file);
            if (!in) throw ValidationError("cannot open grid file '" + grid_file + "'");
            Json j;
            try {
                in >> j;
            } catch (const Json::parse_error& e) {
                throw ValidationError(std::string("cannot parse grid JSON: ") + e.what());
            }
            if (!j.contains("grid") || !j.at("grid").is_array())
                throw ValidationError("grid file must contain a \"grid\" array");
            for (const auto& entry : j.at("grid")) {
                FamilyParams p = family_params_from_json(entry);
                p.validate();
                req.grid.push_back(std::move(p));
            }
        }

        std::ofstream file_out;
        std::ostream* sink = &out;
        if (!out_file.empty()) {
            file_out.open(out_file);
            if (!file_out) throw ValidationError("cannot open output file '" + out_file + "'");
            sink = &file_out;
        }
        run(req, *sink);
        return 0;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ComputationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace shafbound
