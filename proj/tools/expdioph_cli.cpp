/**
 * @file expdioph_cli.cpp
 * @brief Command-line front end: certification sweeps plus direct
 *        access to the quadratic-form and Lehmer toolkits.
 *
 * Exit codes: 0 success, 1 usage or input error, 2 falsified verdict.
 */
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "expdioph/lehmer.hpp"
#include "expdioph/quadform.hpp"
#include "expdioph/report.hpp"

namespace {

using namespace expdioph;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFalsified = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& text, const char* what) {
    try {
        return Int(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(what) + ": not an integer: '" + text + "'");
    }
}

/// Inclusive range `a..b`, or a single value `a`.
GridRange parse_range(const std::string& text, const char* what) {
    const auto sep = text.find("..");
    GridRange range;
    if (sep == std::string::npos) {
        range.lo = parse_int(text, what);
        range.hi = range.lo;
    } else {
        range.lo = parse_int(text.substr(0, sep), what);
        range.hi = parse_int(text.substr(sep + 2), what);
    }
    if (range.lo < 1) throw UsageError(std::string(what) + ": values must be positive");
    if (range.hi < range.lo) throw UsageError(std::string(what) + ": empty range '" + text + "'");
    return range;
}

ReportFormat parse_format_or_throw(const std::string& name) {
    const auto fmt = parse_format(name);
    if (!fmt) throw UsageError("unknown format '" + name + "' (expected text, json or csv)");
    return *fmt;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-" || path == "stdout") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + path);
    out << content;
}

struct SweepOptions {
    std::string zmax_text = "8";
    std::string format = "text";
    std::string out = "-";
    bool timing = false;
};

void add_sweep_options(CLI::App* cmd, SweepOptions& opts) {
    cmd->add_option("--zmax", opts.zmax_text, "Exponent search bound (default 8, minimum 2)");
    cmd->add_option("--format", opts.format, "Report format: text, json or csv");
    cmd->add_option("--out", opts.out, "Output path, or - for stdout");
    cmd->add_flag("--timing", opts.timing, "Include per-record wall time (nondeterministic)");
}

int emit_sweep(const SweepReport& report, const SweepOptions& opts) {
    write_output(opts.out, render_report(report, parse_format_or_throw(opts.format), opts.timing));
    return report.any_falsified() ? kExitFalsified : kExitOk;
}

Int sweep_zmax(const SweepOptions& opts) {
    const Int z = parse_int(opts.zmax_text, "--zmax");
    if (z < 2) throw UsageError("--zmax must be at least 2");
    return z;
}

int run_certify(const std::string& ell, const std::string& m, const std::string& r,
                const SweepOptions& opts) {
    const SweepReport report =
        certify_sweep(parse_range(ell, "--ell"), parse_range(m, "--m"), parse_range(r, "--r"),
                      sweep_zmax(opts), thread_count_from_env());
    return emit_sweep(report, opts);
}

int run_corollary(const std::string& p, const std::string& m, const SweepOptions& opts) {
    const SweepReport report = corollary_sweep(parse_range(p, "--p"), parse_range(m, "--m"),
                                               sweep_zmax(opts), thread_count_from_env());
    return emit_sweep(report, opts);
}

int run_lehmer(const std::string& e_text, const std::string& g_text, const std::string& n_text,
               bool primitive, const std::string& format, const std::string& out_path) {
    const Int e = parse_int(e_text, "--e");
    const Int g = parse_int(g_text, "--g");

    // The index range may start at 0; reuse the range parser's shape.
    GridRange n_range;
    {
        const auto sep = n_text.find("..");
        n_range.lo = parse_int(sep == std::string::npos ? n_text : n_text.substr(0, sep), "--n");
        n_range.hi =
            sep == std::string::npos ? n_range.lo : parse_int(n_text.substr(sep + 2), "--n");
        if (n_range.lo < 0 || n_range.hi < n_range.lo)
            throw UsageError("--n: bad index range '" + n_text + "'");
    }

    const PairResult pair = make_pair(e, g);
    if (!pair.ok()) throw UsageError(std::string("invalid pair: ") + to_string(pair.error()));

    const ReportFormat fmt = parse_format_or_throw(format);
    const auto seq = lehmer_sequence(pair.value(), n_range.hi);

    std::string text;
    Json values = Json::array();
    for (Int n = n_range.lo; n <= n_range.hi; ++n) {
        const unsigned long nu = to_ulong(n, "--n");
        const Int& value = seq[nu];
        if (fmt == ReportFormat::Text) {
            text += "L_" + n.get_str() + " = " + value.get_str();
            if (primitive && n > 1) {
                const Int pp = primitive_part(pair.value(), n);
                text += " primitive_part=" + pp.get_str() +
                        " has_primitive_divisor=" + (pp > 1 ? "true" : "false");
            }
            text += "\n";
        } else {
            Json row{{"n", n.get_str()}, {"value", value.get_str()}};
            if (primitive && n > 1) {
                const Int pp = primitive_part(pair.value(), n);
                row["primitive_part"] = pp.get_str();
                row["has_primitive_divisor"] = pp > 1;
            }
            values.push_back(std::move(row));
        }
    }

    if (fmt == ReportFormat::Text) {
        write_output(out_path, text);
    } else if (fmt == ReportFormat::Json) {
        Json doc{{"e", e.get_str()},
                 {"g", g.get_str()},
                 {"f", pair.value().f_val.get_str()},
                 {"values", std::move(values)}};
        write_output(out_path, doc.dump(2) + "\n");
    } else {
        throw UsageError("lehmer supports text or json output");
    }
    return kExitOk;
}

std::string render_solution(const QuadFormSolution& s) {
    return "(" + s.x_val.get_str() + "," + s.y_val.get_str() + "," + s.z_val.get_str() + ")";
}

int run_quadform(const std::string& d1_text, const std::string& d2_text, const std::string& k_text,
                 const std::string& zmax_text, const std::string& action,
                 const std::string& format, const std::string& out_path) {
    const Int zmax = parse_int(zmax_text, "--zmax");
    if (zmax < 1) throw UsageError("--zmax must be at least 1");

    const QuadFormResult made = make_quadform_instance(
        parse_int(d1_text, "--d1"), parse_int(d2_text, "--d2"), parse_int(k_text, "--k"));
    if (!made.ok()) {
        std::string msg = "invalid instance:";
        for (auto v : made.error()) msg += std::string(" ") + to_string(v);
        throw UsageError(msg);
    }
    const QuadFormInstance& inst = made.value();
    const ReportFormat fmt = parse_format_or_throw(format);
    if (fmt == ReportFormat::Csv) throw UsageError("quadform supports text or json output");

    const auto solutions = enumerate_solutions(inst, zmax);

    // Group by canonical class key min(L, k - L).
    std::map<Int, std::vector<size_t>> classes;
    std::vector<Int> chars;
    chars.reserve(solutions.size());
    for (size_t i = 0; i < solutions.size(); ++i) {
        const Int l = characteristic_number(inst, solutions[i]).value;
        chars.push_back(l);
        const Int key = l < inst.k - l ? l : inst.k - l;
        classes[key].push_back(i);
    }

    std::string text;
    Json body = Json::array();

    if (action == "enumerate") {
        for (size_t i = 0; i < solutions.size(); ++i) {
            text += render_solution(solutions[i]) + " class=" + chars[i].get_str() + "\n";
            body.push_back({{"x", solutions[i].x_val.get_str()},
                            {"y", solutions[i].y_val.get_str()},
                            {"z", solutions[i].z_val.get_str()},
                            {"characteristic", chars[i].get_str()}});
        }
    } else if (action == "classes") {
        for (const auto& [key, members] : classes) {
            text += "class +-" + key.get_str() + ":";
            Json list = Json::array();
            for (size_t i : members) {
                text += " " + render_solution(solutions[i]);
                list.push_back({{"x", solutions[i].x_val.get_str()},
                                {"y", solutions[i].y_val.get_str()},
                                {"z", solutions[i].z_val.get_str()}});
            }
            text += "\n";
            body.push_back({{"characteristic", key.get_str()}, {"solutions", std::move(list)}});
        }
    } else if (action == "represent") {
        for (const auto& [key, members] : classes) {
            const QuadFormSolution& least = solutions[members.front()];  // minimal (Z, X)
            for (size_t i : members) {
                const auto rep = verify_representation(inst, least, solutions[i]);
                std::string line = render_solution(solutions[i]) +
                                   ": least=" + render_solution(least);
                Json row{{"x", solutions[i].x_val.get_str()},
                         {"y", solutions[i].y_val.get_str()},
                         {"z", solutions[i].z_val.get_str()},
                         {"least",
                          {{"x", least.x_val.get_str()},
                           {"y", least.y_val.get_str()},
                           {"z", least.z_val.get_str()}}}};
                if (rep) {
                    line += " t=" + rep->t.get_str() +
                            " lambda1=" + std::to_string(rep->lambda1) +
                            " lambda2=" + std::to_string(rep->lambda2);
                    row["t"] = rep->t.get_str();
                    row["lambda1"] = rep->lambda1;
                    row["lambda2"] = rep->lambda2;
                } else {
                    line += " no-match";
                    row["no_match"] = true;
                }
                text += line + "\n";
                body.push_back(std::move(row));
            }
        }
    } else {
        throw UsageError("unknown action '" + action +
                         "' (expected enumerate, classes or represent)");
    }

    if (fmt == ReportFormat::Text) {
        write_output(out_path, text);
    } else {
        Json doc{{"d1", inst.d1.get_str()},
                 {"d2", inst.d2.get_str()},
                 {"k", inst.k.get_str()},
                 {"zmax", zmax.get_str()},
                 {"action", action},
                 {"results", std::move(body)}};
        write_output(out_path, doc.dump(2) + "\n");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certification toolkit for A^x + B^y = C^z over the family "
                 "A = r*ell*m^2 - 1, B = (ell-r)*ell*m^2 + 1, C = ell*m"};
    app.require_subcommand(1);

    std::string ell_text, m_text, r_text, p_text;
    SweepOptions certify_opts, corollary_opts;

    CLI::App* certify = app.add_subcommand("certify", "Certify a grid of (ell, m, r) families");
    certify->add_option("--ell", ell_text, "ell value or inclusive range a..b")->required();
    certify->add_option("--m", m_text, "m value or range")->required();
    certify->add_option("--r", r_text, "r value or range")->required();
    add_sweep_options(certify, certify_opts);

    CLI::App* corollary =
        app.add_subcommand("corollary", "Certify (p, m) pairs of the A = 3pm^2 - 1 family");
    corollary->add_option("--p", p_text, "p value or range")->required();
    corollary->add_option("--m", m_text, "m value or range")->required();
    add_sweep_options(corollary, corollary_opts);

    std::string e_text, g_text, n_text = "1..30", lehmer_format = "text", lehmer_out = "-";
    bool primitive = false;
    CLI::App* lehmer = app.add_subcommand("lehmer", "Evaluate Lehmer numbers of a pair (E, G)");
    lehmer->add_option("--e", e_text, "E = (alpha+beta)^2")->required();
    lehmer->add_option("--g", g_text, "G = alpha*beta")->required();
    lehmer->add_option("--n", n_text, "Index or range (default 1..30)");
    lehmer->add_flag("--primitive", primitive, "Also report primitive parts");
    lehmer->add_option("--format", lehmer_format, "text or json");
    lehmer->add_option("--out", lehmer_out, "Output path, or - for stdout");

    std::string d1_text, d2_text, k_text, qf_zmax = "8", qf_format = "text", qf_out = "-";
    std::string action;
    CLI::App* quadform =
        app.add_subcommand("quadform", "Solutions of d1*X^2 + d2*Y^2 = k^Z and their classes");
    quadform->add_option("--d1", d1_text, "Coefficient of X^2")->required();
    quadform->add_option("--d2", d2_text, "Coefficient of Y^2")->required();
    quadform->add_option("--k", k_text, "Power base k")->required();
    quadform->add_option("--zmax", qf_zmax, "Exponent search bound (default 8)");
    quadform->add_option("action", action, "enumerate, classes or represent")->required();
    quadform->add_option("--format", qf_format, "text or json");
    quadform->add_option("--out", qf_out, "Output path, or - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(certify)) return run_certify(ell_text, m_text, r_text, certify_opts);
        if (app.got_subcommand(corollary)) return run_corollary(p_text, m_text, corollary_opts);
        if (app.got_subcommand(lehmer))
            return run_lehmer(e_text, g_text, n_text, primitive, lehmer_format, lehmer_out);
        if (app.got_subcommand(quadform))
            return run_quadform(d1_text, d2_text, k_text, qf_zmax, action, qf_format, qf_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
