#include "rigged/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "rigged/report.hpp"
#include "rigged/system_file.hpp"

namespace rigged::cli {

using nlohmann::json;

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

namespace {

struct GlobalOptions {
    std::string out_path;
    std::uint64_t seed = 0;
    double rank_tol = kDefaultRankTol;
    std::size_t probes = kDefaultProbes;
    bool no_timestamp = false;
};

std::string read_file(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot read input file '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json provenance(const GlobalOptions& g, const std::string& command, const std::string& input_bytes) {
    json p{{"tool", kToolName},
           {"version", kToolVersion},
           {"command", command},
           {"seed", g.seed},
           {"input_digest", "sha256:" + sha256_hex(input_bytes)}};
    if (!g.no_timestamp) p["timestamp"] = utc_timestamp();
    return p;
}

json system_summary(const LoadedSystem& sys) {
    json s{{"dim", sys.map.dim()},
           {"nodes", sys.map.node_count()},
           {"max_order", sys.map.triple().max_order},
           {"measure_kind", std::string(to_string(sys.map.measure().kind()))}};
    if (sys.gallery) s["gallery"] = {{"name", sys.gallery->name}, {"params", sys.gallery->params}};
    return s;
}

Tolerances tolerances_from(const GlobalOptions& g) {
    Tolerances t;
    t.rank_tol = g.rank_tol;
    t.probes = g.probes;
    t.seed = g.seed;
    return t;
}

void emit(const GlobalOptions& g, const std::string& text, std::ostream& out) {
    if (g.out_path.empty()) {
        out << text << '\n';
        return;
    }
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) throw SchemaError("cannot write output file '" + g.out_path + "'");
    file << text << '\n';
}

int cmd_classify(const GlobalOptions& g, const std::string& input, std::ostream& out) {
    const std::string bytes = read_file(input);
    const LoadedSystem sys = parse_system_text(bytes);
    const Tolerances tol = tolerances_from(g);
    const Classification c =
        classify(sys.map, sys.map.triple(), tol, sys.companion ? &*sys.companion : nullptr);
    json report{{"system", system_summary(sys)},
                {"classification", to_json(c)},
                {"bounds", to_json(c.bounds)},
                {"rf_certificate", to_json(c.certificate)},
                {"provenance", provenance(g, "classify", bytes)}};
    emit(g, report.dump(2), out);
    return kExitOk;
}

int cmd_solve(const GlobalOptions& g, const std::string& input, const std::string& moments, double residual_tol,
              std::ostream& out) {
    const std::string bytes = read_file(input);
    const LoadedSystem sys = parse_system_text(bytes);
    const bool inline_moments = !moments.empty() && moments.find_first_not_of(" \t") != std::string::npos &&
                                moments[moments.find_first_not_of(" \t")] == '[';
    const json moments_doc = parse_json_text(inline_moments ? moments : read_file(moments));
    const L2Function h = parse_moments(moments_doc, sys.map.node_count());

    const MomentSolution sol = solve_moment(sys.map, h, g.rank_tol);
    json moment = to_json(sol);
    moment["solvable"] = sol.residual < residual_tol;
    moment["residual_tol"] = residual_tol;
    moment["rank_tol"] = g.rank_tol;

    json stability;
    if (is_total(sys.map, g.rank_tol)) {
        json constants = json::array();
        for (std::size_t k = 0; k <= sys.map.triple().max_order; ++k)
            constants.push_back(stability_constant(sys.map, sys.map.triple(), k, g.rank_tol));
        stability = {{"available", true}, {"constants", std::move(constants)}};
    } else {
        stability = {{"available", false}, {"constants", nullptr}, {"reason", "map is not total"}};
    }
    stability["rank_tol"] = g.rank_tol;

    json report{{"system", system_summary(sys)},
                {"moment", std::move(moment)},
                {"stability_constants", std::move(stability)},
                {"provenance", provenance(g, "solve", bytes)}};
    emit(g, report.dump(2), out);
    return kExitOk;
}

int cmd_certify(const GlobalOptions& g, const std::string& input, std::size_t trials, double residual_tol,
                std::ostream& out) {
    const std::string bytes = read_file(input);
    const LoadedSystem sys = parse_system_text(bytes);
    const RFCertificate cert = rf_certificate(sys.map, g.rank_tol, g.probes, g.seed);
    const EquivalenceReport eq = rf_equivalence_report(sys.map, trials, residual_tol, g.rank_tol, g.seed);
    json report{{"system", system_summary(sys)},
                {"rf_certificate", to_json(cert)},
                {"equivalence", to_json(eq)},
                {"provenance", provenance(g, "certify", bytes)}};
    emit(g, report.dump(2), out);
    return kExitOk;
}

int cmd_gallery(const GlobalOptions& g, bool list, bool reference, const std::string& name,
                const std::vector<std::string>& params, std::ostream& out) {
    if (list) {
        std::string text;
        for (const auto& n : gallery_names()) text += (text.empty() ? "" : "\n") + n;
        emit(g, text, out);
        return kExitOk;
    }
    if (name.empty()) throw SchemaError("gallery needs a name or --list");
    GallerySpec spec{name, {}};
    for (const auto& kv : params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw SchemaError("gallery parameter '" + kv + "' is not key=value");
        const std::string value = kv.substr(eq + 1);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size()) throw SchemaError("gallery parameter '" + kv + "' is not numeric");
        spec.params[kv.substr(0, eq)] = v;
    }
    const GallerySystem sys = make_gallery(spec);
    emit(g, (reference ? gallery_reference_json(sys.spec) : system_to_json(sys.map)).dump(2), out);
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Operator analysis of weakly measurable maps in rigged Hilbert spaces", kToolName};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--out", g.out_path, "Write the report to this path instead of standard output");
    app.add_option("--seed", g.seed, "Seed for probe and trial generators");
    app.add_option("--rank-tol", g.rank_tol, "Relative singular-value threshold for rank decisions")
        ->check(CLI::PositiveNumber);
    app.add_option("--probes", g.probes, "Random probes used to verify the lower-bound certificate")
        ->check(CLI::PositiveNumber);
    app.add_flag("--no-timestamp", g.no_timestamp, "Omit the timestamp from the provenance block");

    std::string input;
    auto* classify_cmd = app.add_subcommand("classify", "Classify a system (Bessel, frame, Riesz-Fischer, ...)");
    classify_cmd->add_option("input", input, "System file (JSON), or - for standard input")->required();

    std::string moments;
    double residual_tol = kDefaultResidualTol;
    auto* solve_cmd = app.add_subcommand("solve", "Solve the moment problem <f, omega_x> = h(x)");
    solve_cmd->add_option("input", input, "System file (JSON)")->required();
    solve_cmd->add_option("--moments", moments, "Moment targets: a JSON array inline, or a path to one")->required();
    solve_cmd->add_option("--residual-tol", residual_tol, "Residual below which the problem counts as solved")
        ->check(CLI::PositiveNumber);

    std::size_t trials = 20;
    auto* certify_cmd = app.add_subcommand("certify", "Lower-bound certificate and equivalence self-check");
    certify_cmd->add_option("input", input, "System file (JSON)")->required();
    certify_cmd->add_option("--trials", trials, "Random moment problems for the equivalence check")
        ->check(CLI::PositiveNumber);
    certify_cmd->add_option("--residual-tol", residual_tol, "Residual below which a moment problem counts as solved")
        ->check(CLI::PositiveNumber);

    bool list = false;
    bool reference = false;
    std::string gallery_name;
    std::vector<std::string> gallery_params;
    auto* gallery_cmd = app.add_subcommand("gallery", "List or materialize built-in systems");
    gallery_cmd->add_flag("--list", list, "List gallery names");
    gallery_cmd->add_flag("--reference", reference, "Write a gallery reference instead of a materialized table");
    gallery_cmd->add_option("name", gallery_name, "Gallery name");
    gallery_cmd->add_option("params", gallery_params, "Parameters as key=value");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << kToolName << ": usage error: " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(g, input, out);
        if (solve_cmd->parsed()) return cmd_solve(g, input, moments, residual_tol, out);
        if (certify_cmd->parsed()) return cmd_certify(g, input, trials, residual_tol, out);
        if (gallery_cmd->parsed()) return cmd_gallery(g, list, reference, gallery_name, gallery_params, out);
    } catch (const ValidationError& e) {
        err << kToolName << ": validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const nlohmann::json::exception& e) {
        err << kToolName << ": validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericalError& e) {
        err << kToolName << ": numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << kToolName << ": numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitValidation;
}

} // namespace rigged::cli
