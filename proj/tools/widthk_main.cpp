// widthk: exact width-k system checks and sigma_k class computations.
//
// Subcommands
//   check    <file> --k K [--mode symbolic|symmetrized|random] [--trials N] [--seed S]
//   classify <file>
//   gen      <kind> [--n N] [--k K] [--seed S] [--variant V]
//   sigma    print --n N --k K
//   sigma    eval|pair (--kind hypersurface --n N --d D
//                      | --kind ci --n N --degrees d1,d2,...
//                      | --kind product --a A --b B
//                      | --descriptor file.json) --k K
//
// Reports are emitted as JSON on stdout; diagnostics go to stderr.
// Exit codes: 0 the checked property holds (or the command succeeded),
// 1 the property fails (a witness is included), 2 input or usage error.

#include <widthk/json_io.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace widthk;

constexpr const char* kToolVersion = "0.1.0";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

void emit_report(const std::string& command, const std::string& input_digest, json payload,
                 const Timer& timer) {
    json report;
    report["tool_version"] = kToolVersion;
    report["input_digest"] = input_digest;
    report["command"] = command;
    report["payload"] = std::move(payload);
    report["timing_ms"] = timer.ms();
    std::cout << report.dump(2) << "\n";
}

int run_check(const std::string& file, std::size_t k, const std::string& mode,
              std::uint64_t trials, std::uint64_t seed) {
    Timer timer;
    const std::string bytes = read_file(file);
    SymMatrixSystem sys = system_from_json(json::parse(bytes));

    WidthReport rep;
    std::string command = "check --k " + std::to_string(k) + " --mode " + mode;
    if (mode == "symbolic") {
        rep = check_width_symbolic(sys.matrices, k);
    } else if (mode == "symmetrized") {
        rep = check_width_symmetrized(sys.matrices, k);
    } else if (mode == "random") {
        rep = check_width_random(sys.matrices, k, trials, seed);
        command += " --trials " + std::to_string(trials) + " --seed " + std::to_string(seed);
    } else {
        throw std::invalid_argument("unknown mode '" + mode + "'");
    }
    emit_report(command, fnv1a_digest(bytes), width_report_to_json(rep), timer);
    return rep.holds ? 0 : 1;
}

int run_classify(const std::string& file) {
    Timer timer;
    const std::string bytes = read_file(file);
    SymMatrixSystem sys = system_from_json(json::parse(bytes));
    ClassifyReport rep = classify(sys);
    emit_report("classify", fnv1a_digest(bytes), classify_report_to_json(rep), timer);
    return 0;
}

int run_gen(const std::string& kind, std::size_t n, std::size_t k, std::uint64_t seed,
            int variant) {
    SymMatrixSystem sys;
    if (kind == "segre") {
        sys = make_segre_fourfold();
    } else if (kind == "lower-bound") {
        sys = make_lower_bound_system(n, k);
    } else if (kind == "width3-triple") {
        sys = make_width3_triple(n, seed);
    } else if (kind == "special") {
        sys = make_special_system(n, seed).system;
    } else if (kind == "normal-form") {
        sys = make_normal_form(variant);
    } else {
        throw std::invalid_argument("unknown generator '" + kind + "'");
    }
    std::cout << system_to_json(sys).dump(2) << "\n";
    return 0;
}

GeometryDescriptor geometry_from_flags(const std::string& kind, std::size_t n, unsigned d,
                                       const std::vector<unsigned>& degrees, std::size_t a,
                                       std::size_t b, const std::string& descriptor_file) {
    if (!descriptor_file.empty())
        return geometry_from_json(json::parse(read_file(descriptor_file)));
    if (kind == "hypersurface") return Hypersurface{n, d};
    if (kind == "ci" || kind == "complete_intersection") return CompleteIntersection{n, degrees};
    if (kind == "product") return ProductProj{a, b};
    throw std::invalid_argument("unknown geometry kind '" + kind + "'");
}

std::string geometry_echo(const GeometryDescriptor& g) {
    if (const auto* hs = std::get_if<Hypersurface>(&g))
        return "hypersurface n=" + std::to_string(hs->n) + " d=" + std::to_string(hs->d);
    if (const auto* ci = std::get_if<CompleteIntersection>(&g)) {
        std::string s = "ci n=" + std::to_string(ci->n) + " degrees=";
        for (std::size_t i = 0; i < ci->degrees.size(); ++i)
            s += (i ? "," : "") + std::to_string(ci->degrees[i]);
        return s;
    }
    if (const auto* pr = std::get_if<ProductProj>(&g))
        return "product a=" + std::to_string(pr->a) + " b=" + std::to_string(pr->b);
    return "custom";
}

int run_sigma_print(std::size_t n, std::size_t k) {
    Timer timer;
    json payload;
    payload["n"] = n;
    payload["k"] = k;
    payload["polynomial"] = sigma_universal(n, k).to_string();
    emit_report("sigma print --n " + std::to_string(n) + " --k " + std::to_string(k),
                fnv1a_digest(""), std::move(payload), timer);
    return 0;
}

int run_sigma_eval(const GeometryDescriptor& g, std::size_t k, bool pairing) {
    Timer timer;
    GeometryData data = chern_of_geometry(g);
    json payload;
    payload["geometry"] = geometry_echo(g);
    payload["k"] = k;
    std::string command;
    if (pairing) {
        command = "sigma pair";
        payload["pairing"] = rational_to_json(sigma_pairing(data, k));
    } else {
        command = "sigma eval";
        RingClass c = sigma_class(data, k);
        payload["class"] = c.poly().to_string();
        payload["is_zero"] = c.is_zero();
    }
    emit_report(command + " " + geometry_echo(g) + " --k " + std::to_string(k), fnv1a_digest(""),
                std::move(payload), timer);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact width-k system checks and sigma_k class computations"};
    app.require_subcommand(1);

    // check
    std::string check_file, check_mode = "symbolic";
    std::size_t check_k = 2;
    std::uint64_t check_trials = 64, check_seed = 0;
    auto* check = app.add_subcommand("check", "Decide the width-k condition for a system file");
    check->add_option("file", check_file, "system JSON file")->required();
    check->add_option("--k", check_k, "width parameter k")->required();
    check->add_option("--mode", check_mode, "symbolic|symmetrized|random");
    check->add_option("--trials", check_trials, "samples for --mode random");
    check->add_option("--seed", check_seed, "seed for --mode random");

    // classify
    std::string classify_file;
    auto* cls = app.add_subcommand("classify", "Full report: span rank, kernels, widths, structure");
    cls->add_option("file", classify_file, "system JSON file")->required();

    // gen
    std::string gen_kind;
    std::size_t gen_n = 5, gen_k = 4;
    std::uint64_t gen_seed = 0;
    int gen_variant = 1;
    auto* gen = app.add_subcommand("gen", "Emit a fixture system as JSON");
    gen->add_option("kind", gen_kind, "lower-bound|segre|width3-triple|special|normal-form")
        ->required();
    gen->add_option("--n", gen_n, "matrix dimension");
    gen->add_option("--k", gen_k, "width parameter (lower-bound)");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--variant", gen_variant, "normal form variant (1 or 2)");

    // sigma
    auto* sigma = app.add_subcommand("sigma", "Universal sigma_k polynomials and evaluations");
    sigma->require_subcommand(1);
    std::size_t sp_n = 2, sp_k = 2;
    auto* sprint = sigma->add_subcommand("print", "Print the universal polynomial");
    sprint->add_option("--n", sp_n, "ambient dimension parameter")->required();
    sprint->add_option("--k", sp_k, "degree")->required();

    std::string geo_kind, geo_descriptor;
    std::size_t geo_n = 2, geo_a = 2, geo_b = 2, geo_k = 2;
    unsigned geo_d = 1;
    std::vector<unsigned> geo_degrees;
    auto add_geometry_flags = [&](CLI::App* cmd) {
        cmd->add_option("--kind", geo_kind, "hypersurface|ci|product");
        cmd->add_option("--n", geo_n, "dimension of X");
        cmd->add_option("--d", geo_d, "hypersurface degree");
        cmd->add_option("--degrees", geo_degrees, "complete intersection degrees")->delimiter(',');
        cmd->add_option("--a", geo_a, "first product factor");
        cmd->add_option("--b", geo_b, "second product factor");
        cmd->add_option("--descriptor", geo_descriptor, "geometry descriptor JSON file");
        cmd->add_option("--k", geo_k, "degree")->required();
    };
    auto* seval = sigma->add_subcommand("eval", "Evaluate sigma_k in a geometry's ring");
    add_geometry_flags(seval);
    auto* spair = sigma->add_subcommand("pair", "Integrate sigma_k . L^{n-k}");
    add_geometry_flags(spair);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return run_check(check_file, check_k, check_mode, check_trials, check_seed);
        if (cls->parsed()) return run_classify(classify_file);
        if (gen->parsed()) return run_gen(gen_kind, gen_n, gen_k, gen_seed, gen_variant);
        if (sprint->parsed()) return run_sigma_print(sp_n, sp_k);
        if (seval->parsed() || spair->parsed()) {
            GeometryDescriptor g =
                geometry_from_flags(geo_kind, geo_n, geo_d, geo_degrees, geo_a, geo_b, geo_descriptor);
            return run_sigma_eval(g, geo_k, spair->parsed());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
