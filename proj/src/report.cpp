#include "expdioph/report.hpp"

#include <sstream>

namespace expdioph {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string step_bitmap(const Certificate& cert) {
    std::string bits;
    bits.reserve(cert.steps.size());
    for (const auto& s : cert.steps) bits += s.pass ? '1' : '0';
    return bits;
}

std::string oracle_compact(const Certificate& cert, const char* open, const char* close) {
    std::string out;
    for (size_t i = 0; i < cert.oracle_solutions.size(); ++i) {
        const auto& s = cert.oracle_solutions[i];
        if (i) out += " ";
        out += std::string(open) + s.x.get_str() + ";" + s.y.get_str() + ";" + s.z.get_str() +
               close;
    }
    return out;
}

struct Tally {
    size_t certified = 0;
    size_t not_applicable = 0;
    size_t falsified = 0;
    size_t skipped = 0;
};

Tally tally(const SweepReport& report) {
    Tally t;
    for (const auto& e : report.entries) {
        if (e.skipped()) {
            ++t.skipped;
        } else {
            switch (e.cert->verdict) {
                case Verdict::CertifiedUnique: ++t.certified; break;
                case Verdict::NotApplicable: ++t.not_applicable; break;
                case Verdict::Falsified: ++t.falsified; break;
            }
        }
    }
    return t;
}

}  // namespace

std::optional<ReportFormat> parse_format(std::string_view name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    return std::nullopt;
}

Json report_json(const SweepReport& report, bool with_timing) {
    const bool corollary = report.command == "corollary";
    Json records = Json::array();
    for (const auto& e : report.entries) {
        Json rec;
        if (corollary) rec["p"] = e.p.get_str();
        Json params;
        if (!e.skipped() || !corollary) {
            params["ell"] = e.ell.get_str();
            params["m"] = e.m.get_str();
            params["r"] = e.r.get_str();
        } else {
            params["m"] = e.m.get_str();
        }
        rec["params"] = params;
        if (e.skipped()) {
            rec["status"] = "skipped";
            rec["reasons"] = e.skip_reasons;
        } else {
            const Certificate& cert = *e.cert;
            rec["status"] = "certified";
            rec["instance"] = {{"a", cert.instance.a.get_str()},
                               {"b", cert.instance.b.get_str()},
                               {"c", cert.instance.c.get_str()}};
            rec["applicable"] = cert.applicable;
            rec["verdict"] = to_string(cert.verdict);
            Json steps = Json::array();
            for (const auto& s : cert.steps)
                steps.push_back({{"name", s.name},
                                 {"anchor", s.anchor},
                                 {"pass", s.pass},
                                 {"detail", s.detail}});
            rec["steps"] = steps;
            Json oracle = Json::array();
            for (const auto& s : cert.oracle_solutions)
                oracle.push_back(
                    {{"x", s.x.get_str()}, {"y", s.y.get_str()}, {"z", s.z.get_str()}});
            rec["oracle_solutions"] = oracle;
        }
        if (with_timing) rec["elapsed_ns"] = e.elapsed_ns;
        records.push_back(std::move(rec));
    }

    const Tally t = tally(report);
    Json out;
    out["tool"] = "expdioph";
    out["command"] = report.command;
    out["zmax"] = report.z_max.get_str();
    out["records"] = std::move(records);
    out["summary"] = {{"total", report.entries.size()},
                      {"certified_unique", t.certified},
                      {"not_applicable", t.not_applicable},
                      {"falsified", t.falsified},
                      {"skipped", t.skipped}};
    return out;
}

std::string report_csv(const SweepReport& report, bool with_timing) {
    const bool corollary = report.command == "corollary";
    std::ostringstream out;
    if (corollary) out << "p,";
    out << "ell,m,r,status,reasons,a,b,c,applicable,steps,verdict,oracle";
    if (with_timing) out << ",elapsed_ns";
    out << "\n";

    for (const auto& e : report.entries) {
        if (corollary) out << e.p.get_str() << ",";
        if (e.skipped() && corollary)
            out << ",";  // no mapped ell
        else
            out << e.ell.get_str() << ",";
        out << e.m.get_str() << ",";
        if (e.skipped() && corollary)
            out << ",";
        else
            out << e.r.get_str() << ",";
        if (e.skipped()) {
            out << "skipped," << join(e.skip_reasons, ";") << ",,,,,,,";
        } else {
            const Certificate& cert = *e.cert;
            out << "ok,," << cert.instance.a.get_str() << "," << cert.instance.b.get_str() << ","
                << cert.instance.c.get_str() << "," << (cert.applicable ? "true" : "false") << ","
                << step_bitmap(cert) << "," << to_string(cert.verdict) << ","
                << oracle_compact(cert, "(", ")");
        }
        if (with_timing) out << "," << e.elapsed_ns;
        out << "\n";
    }
    return out.str();
}

std::string report_text(const SweepReport& report, bool with_timing) {
    const bool corollary = report.command == "corollary";
    const bool verbose = report.entries.size() == 1;
    std::ostringstream out;
    for (const auto& e : report.entries) {
        if (corollary) out << "p=" << e.p.get_str() << " ";
        if (e.skipped()) {
            if (!corollary) out << "ell=" << e.ell.get_str() << " ";
            out << "m=" << e.m.get_str();
            if (!corollary) out << " r=" << e.r.get_str();
            out << " skipped: " << join(e.skip_reasons, ", ");
        } else {
            const Certificate& cert = *e.cert;
            size_t passed = 0;
            for (const auto& s : cert.steps) passed += s.pass ? 1 : 0;
            out << "ell=" << e.ell.get_str() << " m=" << e.m.get_str() << " r=" << e.r.get_str()
                << " A=" << cert.instance.a.get_str() << " B=" << cert.instance.b.get_str()
                << " C=" << cert.instance.c.get_str()
                << " applicable=" << (cert.applicable ? "yes" : "no") << " steps=" << passed << "/"
                << cert.steps.size() << " verdict=" << to_string(cert.verdict)
                << " oracle=" << oracle_compact(cert, "(", ")");
        }
        if (with_timing) out << " elapsed_ns=" << e.elapsed_ns;
        out << "\n";
        if (verbose && !e.skipped()) {
            for (const auto& s : e.cert->steps)
                out << "  [" << (s.pass ? "pass" : "FAIL") << "] " << s.name << " " << s.anchor
                    << ": " << s.detail << "\n";
        }
    }

    const Tally t = tally(report);
    out << "summary: total=" << report.entries.size() << " certified-unique=" << t.certified
        << " not-applicable=" << t.not_applicable << " FALSIFIED=" << t.falsified
        << " skipped=" << t.skipped << "\n";
    return out.str();
}

std::string render_report(const SweepReport& report, ReportFormat format, bool with_timing) {
    switch (format) {
        case ReportFormat::Json: return report_json(report, with_timing).dump(2) + "\n";
        case ReportFormat::Csv: return report_csv(report, with_timing);
        case ReportFormat::Text: return report_text(report, with_timing);
    }
    return {};
}

}  // namespace expdioph
