#include "bilindisc/cli.hpp"

#include "bilindisc/bilinear.hpp"
#include "bilindisc/errors.hpp"
#include "bilindisc/ideal.hpp"
#include "bilindisc/sparse3.hpp"
#include "bilindisc/system_file.hpp"
#include "bilindisc/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace bilindisc {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitMalformed = 2;

// Everything a subcommand reports: `results` is rendered as text lines
// ("key: value") or embedded in the JSON document.
struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    std::optional<int> epsilon;
    std::string text;  // overrides the default text rendering when set
    int exit_code = kExitOk;
};

std::string str(const MultiPoly& p) { return p.str(); }

json matrix_json(const PolyMatrix& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json pair_json(const ProjectivePair& p) { return json::array({to_string(p[0]), to_string(p[1])}); }

json root_json(const TriRoot& r) {
    return {{"x", pair_json(r.x)}, {"y", pair_json(r.y)}, {"z", pair_json(r.z)}};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, sep)) parts.push_back(part);
    return parts;
}

// "x1:x0,y1:y0,z1:z0"
TriRoot parse_root(const std::string& text) {
    const auto pairs = split(text, ',');
    if (pairs.size() != 3) throw ParseError("--root needs three pairs x1:x0,y1:y0,z1:z0");
    std::array<ProjectivePair, 3> p;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto parts = split(pairs[i], ':');
        if (parts.size() != 2) throw ParseError("--root pair '" + pairs[i] + "' is not a:b");
        p[i] = {parse_rational(parts[0]), parse_rational(parts[1])};
        if (p[i][0] == 0 && p[i][1] == 0) throw ParseError("--root pair is (0:0)");
    }
    return TriRoot::make(p[0], p[1], p[2]);
}

std::array<Rational, 3> parse_lambda(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw ParseError("--lambda needs three values l1,l2,l3");
    std::array<Rational, 3> l{parse_rational(parts[0]), parse_rational(parts[1]),
                              parse_rational(parts[2])};
    if (l[0] == 0 && l[1] == 0 && l[2] == 0) throw ParseError("--lambda must be nonzero");
    return l;
}

Report disc_report(const SystemFile& sys) {
    Report r;
    r.command = "disc";
    if (const auto* bil = std::get_if<BilinearSystem>(&sys)) {
        r.inputs = system_to_json(sys);
        const MultiPoly elim = disc_via_elimination(*bil);
        r.results["elimination"] = str(elim);
        bool consistent = true;
        if (bil->n() == 1 && bil->m() == 1) {
            const MultiPoly closed = disc_p11(*bil);
            r.results["p11"] = str(closed);
            consistent = closed == elim;
        }
        r.results["consistent"] = consistent;
        if (!consistent) r.exit_code = kExitPropertyFailure;
        return r;
    }
    const auto& tp = std::get<ThreePlayerSystem>(sys);
    r.inputs = system_to_json(sys);
    const MultiPoly expanded = disc_expanded(tp);
    const MultiPoly det = disc_determinantal(tp);
    r.results["expanded"] = str(expanded);
    r.results["determinantal"] = str(det);
    r.epsilon = kDeterminantalSign;
    const bool consistent = det == MultiPoly(kDeterminantalSign) * expanded;
    r.results["consistent"] = consistent;
    if (!consistent) r.exit_code = kExitPropertyFailure;
    return r;
}

Report oracle_report(const SystemFile& sys) {
    Report r;
    r.command = "oracle";
    r.inputs = system_to_json(sys);
    BinaryForm form;
    if (const auto* bil = std::get_if<BilinearSystem>(&sys)) {
        if (bil->n() == 1) {
            form = eliminate_y(*bil);
        } else if (bil->m() == 1) {
            form = eliminate_y(bil->transposed());
        } else {
            throw WrongShapeError("elimination oracle needs n = 1 or m = 1");
        }
    } else {
        form = eliminate_to_quadratic(std::get<ThreePlayerSystem>(sys));
    }
    const FormDiscriminant d = binary_form_discriminant_with_chart(form);
    json coeffs = json::array();
    for (const auto& c : form.coefficients) coeffs.push_back(c.str());
    r.results["form"] = str(form.to_poly());
    r.results["form_coefficients"] = coeffs;
    r.results["chart"] = d.chart == Chart::X0 ? "x0=1" : "x1=1";
    r.results["discriminant"] = str(d.value);
    return r;
}

Report matrix_report(const SystemFile& sys) {
    Report r;
    r.command = "matrix";
    r.inputs = system_to_json(sys);
    if (const auto* bil = std::get_if<BilinearSystem>(&sys)) {
        const PolyMatrix mx = derivative_matrix(*bil, Group::X).entries;
        const PolyMatrix my = derivative_matrix(*bil, Group::Y).entries;
        r.results["x_derivatives"] = matrix_json(mx);
        r.results["y_derivatives"] = matrix_json(my);
        r.text = "x-derivative matrix:\n" + to_string(mx) + "y-derivative matrix:\n" + to_string(my);
    } else {
        const PolyMatrix m = build_disc_matrix(std::get<ThreePlayerSystem>(sys));
        r.results["disc_matrix"] = matrix_json(m);
        r.text = to_string(m);
    }
    return r;
}

Report certificate_report() {
    Report r;
    r.command = "certificate";
    const ProductIdealCertificate cert = product_ideal_certificate();
    json table = json::object();
    std::string text = "discriminant = sum c_ij M_i N_j\n";
    for (const auto& [ij, c] : cert.coefficients) {
        const std::string key = "M" + std::to_string(ij.first) + "*N" + std::to_string(ij.second);
        table[key] = to_string(c);
        if (c != 0) text += "  c(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
                            ") = " + to_string(c) + "\n";
    }
    json mx = json::array(), my = json::array();
    for (std::size_t i = 0; i < cert.x_minors.size(); ++i) {
        mx.push_back(cert.x_minors[i].str());
        text += "  M" + std::to_string(i + 1) + " = " + cert.x_minors[i].str() + "\n";
    }
    for (std::size_t j = 0; j < cert.y_minors.size(); ++j) {
        my.push_back(cert.y_minors[j].str());
        text += "  N" + std::to_string(j + 1) + " = " + cert.y_minors[j].str() + "\n";
    }
    text += "residual: " + cert.residual.str() + "\n";
    r.results["coefficients"] = table;
    r.results["x_minors"] = mx;
    r.results["y_minors"] = my;
    r.results["residual"] = cert.residual.str();
    r.text = text;
    if (!cert.residual.is_zero()) r.exit_code = kExitPropertyFailure;
    return r;
}

std::string render_value(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void emit(const Report& r, bool as_json, std::ostream& out) {
    if (as_json) {
        json doc{{"command", r.command}, {"inputs", r.inputs}, {"results", r.results}};
        if (r.epsilon) doc["epsilon"] = *r.epsilon;
        out << doc.dump(2) << '\n';
        return;
    }
    if (!r.text.empty()) {
        out << r.text;
        return;
    }
    for (const auto& [key, value] : r.results.items()) out << key << ": " << render_value(value) << '\n';
    if (r.epsilon) out << "epsilon: " << *r.epsilon << '\n';
}

bool verbose() {
    const char* v = std::getenv("BILINDISC_VERBOSE");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact discriminants of bilinear and sparse trilinear systems", "bilindisc"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string input;
    int n = 1, m = 1;
    std::uint64_t seed = 1;
    int samples = 100;
    int jobs = 1;
    std::string suite = "all";
    std::string root_text, lambda_text, out_path;

    auto* disc = app.add_subcommand("disc", "Discriminant by every applicable route");
    disc->add_option("--input", input, "System file")->required();
    auto* matrix = app.add_subcommand("matrix", "Discriminant or derivative matrices");
    matrix->add_option("--input", input, "System file")->required();
    auto* oracle = app.add_subcommand("oracle", "Discriminant via elimination");
    oracle->add_option("--input", input, "System file")->required();
    auto* bound = app.add_subcommand("bound", "Degree bounds for P^n x P^m");
    auto* count = app.add_subcommand("count", "Generic number of roots C(n+m, n)");
    for (auto* sub : {bound, count}) {
        sub->add_option("--n", n)->required()->check(CLI::Range(1, 12));
        sub->add_option("--m", m)->required()->check(CLI::Range(1, 12));
    }
    auto* gen = app.add_subcommand("singular-gen", "Three-player system with a multiple root");
    gen->add_option("--seed", seed)->required();
    gen->add_option("--root", root_text, "x1:x0,y1:y0,z1:z0 (random if omitted)");
    gen->add_option("--lambda", lambda_text, "l1,l2,l3 (random if omitted)");
    gen->add_option("--out", out_path, "Write the system file here");
    auto* cert = app.add_subcommand("certificate", "Product-ideal certificate for n = m = 1");
    auto* verify = app.add_subcommand("verify", "Run property suites");
    verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
    verify->add_option("--seed", seed);
    verify->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    std::vector<std::string> argv_tail(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(argv_tail.begin(), argv_tail.end());
    try {
        app.parse(argv_tail);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMalformed;
    }

    const bool as_json = format == "json";
    const auto start = std::chrono::steady_clock::now();
    Report report;
    try {
        if (disc->parsed()) {
            report = disc_report(load_system(input));
        } else if (matrix->parsed()) {
            report = matrix_report(load_system(input));
        } else if (oracle->parsed()) {
            report = oracle_report(load_system(input));
        } else if (count->parsed()) {
            report.command = "count";
            report.inputs = {{"n", n}, {"m", m}};
            report.results["count"] = generic_root_count(n, m).str();
            report.text = generic_root_count(n, m).str() + "\n";
        } else if (bound->parsed()) {
            const DegreeBound b = degree_bound(n, m);
            report.command = "bound";
            report.inputs = {{"n", n}, {"m", m}};
            report.results["per_group"] = b.per_group.str();
            report.results["total"] = b.total.str();
            report.results["mv_term"] = b.mv_term.str();
        } else if (gen->parsed()) {
            Sampler sampler(seed);
            auto nz = [&] { return sampler.nonzero_rational(); };
            const TriRoot root = root_text.empty()
                                     ? TriRoot::make({nz(), nz()}, {nz(), nz()}, {nz(), nz()})
                                     : parse_root(root_text);
            const std::array<Rational, 3> lambda =
                lambda_text.empty() ? std::array<Rational, 3>{nz(), nz(), nz()}
                                    : parse_lambda(lambda_text);
            const ThreePlayerSystem sys = singular_instance(root, lambda, sampler);
            report.command = "singular-gen";
            report.inputs = {{"seed", seed}};
            report.results["system"] = system_to_json(sys);
            report.results["root"] = root_json(root);
            report.results["lambda"] = json::array(
                {to_string(lambda[0]), to_string(lambda[1]), to_string(lambda[2])});
            report.results["discriminant"] = disc_expanded(sys).str();
            if (!out_path.empty()) {
                std::ofstream file(out_path);
                if (!file) throw ParseError("cannot write '" + out_path + "'");
                file << serialize_system(sys) << '\n';
                report.results["written"] = out_path;
            }
            if (!as_json) {
                report.text = "root: " + root_json(root).dump() + "\nlambda: " +
                              report.results["lambda"].dump() + "\ndiscriminant: " +
                              report.results["discriminant"].get<std::string>() + "\n";
                report.text += out_path.empty() ? serialize_system(sys) + "\n"
                                                : "written: " + out_path + "\n";
            }
            if (!disc_expanded(sys).is_zero()) report.exit_code = kExitPropertyFailure;
        } else if (cert->parsed()) {
            report = certificate_report();
        } else if (verify->parsed()) {
            const VerifyOptions opt{seed, samples, jobs};
            const auto results = run_suite(suite, opt);
            report.command = "verify";
            report.inputs = {{"suite", suite}, {"seed", seed}, {"samples", samples}};
            json checks = json::array();
            std::string text;
            bool ok = true;
            for (const auto& c : results) {
                checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
                text += std::string(c.passed ? "PASS" : "FAIL") + "  " + c.name + " (" + c.detail + ")\n";
                ok = ok && c.passed;
            }
            report.results["checks"] = checks;
            report.results["all_passed"] = ok;
            report.text = text;
            if (!ok) report.exit_code = kExitPropertyFailure;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const WrongShapeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitPropertyFailure;
    }

    emit(report, as_json, out);
    if (verbose()) {
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        err << report.command << ": " << elapsed.count() << " s\n";
    }
    if (report.exit_code == kExitPropertyFailure) {
        err << report.command << ": property check failed\n";
    }
    return report.exit_code;
}

}  // namespace bilindisc
