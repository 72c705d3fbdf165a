// Command-line front end: evaluate Z/theta/S/N at a point, scan and export
// zeros, run the sign-relation verification over a range, tally parity
// statistics, and list Gram points. Every payload is CSV, TSV, or JSON with
// stable 15-digit formatting, so repeated runs are byte-identical.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "critline/format.hpp"
#include "critline/verification.hpp"

namespace {

using namespace critline;

enum class Format { Csv, Tsv, Json };

struct CommonOptions {
    Format format = Format::Csv;
    std::string out_path;  // empty: stdout
    double tol = 1e-12;
    int em_terms = 8;

    EvalConfig eval_config() const {
        EvalConfig cfg;
        cfg.target_abs_tol = tol;
        cfg.euler_maclaurin_terms = em_terms;
        return cfg;
    }
};

void add_common(CLI::App* cmd, CommonOptions* opt) {
    cmd->add_option("--format", opt->format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{
                {"csv", Format::Csv}, {"tsv", Format::Tsv}, {"json", Format::Json}},
            CLI::ignore_case));
    cmd->add_option("--out", opt->out_path, "Write output to this file instead of stdout");
    cmd->add_option("--tol", opt->tol, "Absolute tolerance for zeta evaluation")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--em-terms", opt->em_terms, "Euler-Maclaurin correction terms")
        ->check(CLI::Range(2, 15));
}

void write_output(const CommonOptions& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file '" + opt.out_path + "'");
    f << payload;
}

char sep_of(Format f) { return f == Format::Tsv ? '\t' : ','; }

// A single table row rendered as CSV/TSV (header + one line) or a flat JSON
// object. Cells with empty values are legal: the column stays, the value is
// blank in CSV/TSV and omitted in JSON.
struct Row {
    std::vector<std::pair<std::string, std::string>> cells;

    void add(const std::string& key, const std::string& value) { cells.push_back({key, value}); }

    std::string render(Format format) const {
        if (format == Format::Json) {
            std::string out = "{\n  \"schema_version\": 1";
            for (const auto& [k, v] : cells) {
                if (v.empty()) continue;
                out += ",\n  \"" + k + "\": " + v;
            }
            out += "\n}\n";
            return out;
        }
        const char sep = sep_of(format);
        std::string head, body;
        for (const auto& [k, v] : cells) {
            if (!head.empty()) {
                head += sep;
                body += sep;
            }
            head += k;
            body += v;
        }
        return head + "\n" + body + "\n";
    }
};

int cmd_eval(double t, const CommonOptions& opt) {
    const EvalConfig cfg = opt.eval_config();
    const ZEvaluation ze = hardy_z(t, cfg);
    const double th = theta_exact(t);

    Row row;
    row.add("t", format_real(t));
    row.add("z", format_real(ze.z_value));
    row.add("zeta_abs", format_real(ze.zeta_modulus));
    row.add("theta", format_real(th));

    bool agrees = true;
    if (t > 0.0) {
        const CountReport cr = n_riemann_von_mangoldt(t, Definition::Titchmarsh, cfg);
        const int predicted = cr.n_int % 2 == 0 ? -1 : +1;
        const int z_sign = ze.z_value >= 0.0 ? +1 : -1;
        agrees = (predicted == z_sign);
        row.add("s", format_real(cr.s_value));
        row.add("n_raw", format_real(cr.n_raw));
        row.add("n_int", std::to_string(cr.n_int));
        row.add("predicted_sign", std::to_string(predicted));
        row.add("sign_agrees", agrees ? "true" : "false");
    } else {
        // S and N need t > 0; emit the columns with no values.
        row.add("s", "");
        row.add("n_raw", "");
        row.add("n_int", "");
        row.add("predicted_sign", "");
        row.add("sign_agrees", "");
    }
    write_output(opt, row.render(opt.format));
    return agrees ? 0 : 1;
}

std::string records_table(const std::vector<ZeroRecord>& records, char sep) {
    std::string out = "index,gamma,z_residual\n";
    if (sep != ',')
        for (auto& c : out)
            if (c == ',') c = sep;
    for (const auto& r : records) {
        out += std::to_string(r.index);
        out += sep;
        out += format_real(r.gamma);
        out += sep;
        out += format_real(r.z_residual);
        out += '\n';
    }
    return out;
}

int cmd_zeros(double from, double to, double step, const CommonOptions& opt) {
    const auto records = scan_zeros(from, to, step, opt.eval_config());
    std::string payload;
    if (opt.format == Format::Json) {
        payload = "{\n\"schema_version\": 1,\n\"zeros\": " + catalog_to_json(records) + "}\n";
    } else {
        payload = records_table(records, sep_of(opt.format));
    }
    write_output(opt, payload);
    return 0;
}

int cmd_verify(double from, double to, long samples, double exclusion, double step,
               const CommonOptions& opt) {
    const EvalConfig cfg = opt.eval_config();
    const ZeroCatalog catalog = build_catalog(to, step, cfg);
    const auto records = verify_sign_relation(catalog, from, to, samples, exclusion, cfg);
    const long skipped = samples - (long)records.size();

    std::string payload;
    if (opt.format == Format::Json) {
        payload = verify_report_json({from, to, samples, exclusion}, records, skipped);
    } else {
        payload = sign_records_csv(records);
        if (opt.format == Format::Tsv)
            for (auto& c : payload)
                if (c == ',') c = '\t';
    }
    write_output(opt, payload);
    return all_agree(records) ? 0 : 1;
}

int cmd_stats(double T, double step, const CommonOptions& opt) {
    const EvalConfig cfg = opt.eval_config();
    const ZeroCatalog catalog = build_catalog(T + 0.5, step, cfg);
    const ParityStats st = parity_statistics(catalog, T, cfg);

    Row row;
    row.add("T", format_real(st.T));
    row.add("total", std::to_string(st.total));
    row.add("even_count", std::to_string(st.even_count));
    row.add("ratio", st.ratio ? format_real(*st.ratio) : "");
    write_output(opt, row.render(opt.format));

    // With every zero simple and on the line, the parities must alternate.
    return st.even_count == st.total / 2 ? 0 : 1;
}

int cmd_gram(long from, long to, const CommonOptions& opt) {
    if (from > to) throw DomainError("gram: --from must be <= --to");
    std::string payload;
    if (opt.format == Format::Json) {
        payload = "{\n\"schema_version\": 1,\n\"points\": [";
        for (long n = from; n <= to; ++n) {
            payload += n == from ? "\n" : ",\n";
            payload += "  {\"n\": " + std::to_string(n) +
                       ", \"g\": " + format_real(gram_point(n)) + "}";
        }
        payload += "\n]\n}\n";
    } else {
        const char sep = sep_of(opt.format);
        payload = std::string("n") + sep + "g\n";
        for (long n = from; n <= to; ++n) {
            payload += std::to_string(n);
            payload += sep;
            payload += format_real(gram_point(n));
            payload += '\n';
        }
    }
    write_output(opt, payload);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Critical-line toolkit: Hardy Z, the phase theta, S(T), zero"
                 " scanning, and sign-relation verification"};
    app.require_subcommand(1);

    CommonOptions opt;

    double eval_t = 0.0;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate Z, theta, S, N at a point");
    eval->add_option("t", eval_t, "Height on the critical line")->required();
    add_common(eval, &opt);

    double z_from = 0.0, z_to = 0.0, z_step = 0.05;
    CLI::App* zeros = app.add_subcommand("zeros", "Locate zeros of Z in a range");
    zeros->add_option("--from", z_from, "Lower end of the scan")->required();
    zeros->add_option("--to", z_to, "Upper end of the scan")->required();
    zeros->add_option("--step", z_step, "Initial grid step")->check(CLI::PositiveNumber);
    add_common(zeros, &opt);

    double v_from = 0.0, v_to = 0.0, v_exclusion = 1e-3, v_step = 0.05;
    long v_samples = 1000;
    CLI::App* verify = app.add_subcommand("verify", "Check the sign relation over a range");
    verify->add_option("--from", v_from, "Lower end of the sampled range");
    verify->add_option("--to", v_to, "Upper end of the sampled range")->required();
    verify->add_option("--samples", v_samples, "Number of equally spaced samples")
        ->check(CLI::PositiveNumber);
    verify->add_option("--exclusion", v_exclusion, "Skip samples this close to a zero");
    verify->add_option("--step", v_step, "Grid step for the catalog scan")
        ->check(CLI::PositiveNumber);
    add_common(verify, &opt);

    double s_T = 0.0, s_step = 0.05;
    CLI::App* stats = app.add_subcommand("stats", "Parity statistics of N at the ordinates");
    stats->add_option("T", s_T, "Upper height")->required();
    stats->add_option("--step", s_step, "Grid step for the catalog scan")
        ->check(CLI::PositiveNumber);
    add_common(stats, &opt);

    long g_from = 0, g_to = 0;
    CLI::App* gram = app.add_subcommand("gram", "Gram points g_n with theta(g_n) = n pi");
    gram->add_option("--from", g_from, "First index (>= -1)")->required();
    gram->add_option("--to", g_to, "Last index")->required();
    add_common(gram, &opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help lands here with a zero code; real argument errors become 2.
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_t, opt);
        if (zeros->parsed()) return cmd_zeros(z_from, z_to, z_step, opt);
        if (verify->parsed()) return cmd_verify(v_from, v_to, v_samples, v_exclusion, v_step, opt);
        if (stats->parsed()) return cmd_stats(s_T, s_step, opt);
        if (gram->parsed()) return cmd_gram(g_from, g_to, opt);
    } catch (const critline::Error& e) {
        std::cerr << "{\"error\": \"" << e.kind() << "\", \"message\": \""
                  << e.what() << "\"}\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\": \"InternalError\", \"message\": \"" << e.what() << "\"}\n";
        return 2;
    }
    return 0;
}
