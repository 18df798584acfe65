#include "isobound/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace isobound {

namespace {

int default_precision_bits() {
    const char* env = std::getenv(kPrecisionEnvVar);
    if (env == nullptr || *env == '\0') return kDefaultBits;
    char* end = nullptr;
    const long bits = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0')
        throw std::invalid_argument(std::string(kPrecisionEnvVar) +
                                    " must be an integer bit count");
    Precision check(static_cast<int>(bits));  // range-validates
    return check.bits;
}

std::string approx(const Rational& x) { return x.to_decimal(kApproxDigits); }

Json approx_json(const Enclosure& e) {
    Json j;
    j["lo"] = approx(e.lo());
    j["hi"] = approx(e.hi());
    return j;
}

Rational parse_rational(const std::string& s, const char* what) {
    try {
        return Rational::from_string(s);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": expected a rational \"p/q\", got \"" + s + "\"");
    }
}

FieldData load_field(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open field data file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("field data is not valid JSON (" + path + "): " + e.what());
    }
    return field_from_json(j);
}

// Fills in zeta2 from the raw Euler-factor data when the file carries none.
FieldData with_zeta2(FieldData f, Precision p, std::vector<std::string>& notes) {
    if (!f.zeta2 && !f.prime_norms.empty() && f.tail_cutoff >= 2) {
        f.zeta2 = zeta2_enclosure(f.degree_n, f.prime_norms, f.tail_cutoff, p);
        notes.push_back("zeta2 derived from prime_norms with tail cutoff B=" +
                        std::to_string(f.tail_cutoff));
    }
    return f;
}

struct Options {
    // bound / certificate inputs
    std::string case_name;
    long long ex = 0, ey = 0;
    long long gx = 0, gy = 0;
    long long belyi = 1;
    std::string h_rational;
    long long g = 0, deg = 1;
    bool sharp = false;
    long long gy_sharp = 0;
    // verify
    long long gmax = 50, nmax = 100;
    // dessins
    long long degree = 1, jobs = 1, cap = kDefaultDegreeCap;
    std::string out_path;
    // shimizu
    std::string field_path;
    long long d1 = 1, d2 = 1;
    std::string abs_e;
    // shared
    long long precision = 0;  // 0 = default/env
};

Precision resolve_precision(long long requested) {
    if (requested == 0) return Precision(default_precision_bits());
    return Precision(static_cast<int>(requested));
}

CaseDiscriminator parse_case(const std::string& name) {
    if (name == "non-arithmetic") return CaseDiscriminator::NonArithmetic;
    if (name == "arithmetic-affine") return CaseDiscriminator::ArithmeticAffine;
    if (name == "arithmetic-projective") return CaseDiscriminator::ArithmeticProjective;
    throw std::invalid_argument(
        "unknown case \"" + name +
        "\" (expected non-arithmetic, arithmetic-affine or arithmetic-projective)");
}

Json rational_payload(const char* key, const Rational& value) {
    Json j;
    j[key] = value.to_string();
    j["approx"] = approx(value);
    j["digits"] = kApproxDigits;
    return j;
}

CommandResult ok(Json payload) {
    CommandResult r;
    r.status = CommandResult::Status::Ok;
    r.payload = std::move(payload);
    return r;
}

CommandResult run_bound_main(const Options& o) {
    const Rational bound =
        main_theorem_bound(Rational(static_cast<long>(o.ex)),
                           Rational(static_cast<long>(o.ey)),
                           static_cast<long>(o.belyi));
    return ok(rational_payload("bound", bound));
}

CommandResult run_bound_affine(const Options& o) {
    const Rational bound =
        affine_arithmetic_height_bound(Rational(static_cast<long>(o.ex)));
    return ok(rational_payload("bound", bound));
}

CommandResult run_bound_isogeny(const Options& o, const CLI::App* cmd) {
    const CaseDiscriminator branch = parse_case(o.case_name);
    Json j;
    const auto put = [&j](const char* key, const Rational& v) {
        j[key] = v.to_string();
        j[std::string(key) + "_approx"] = approx(v);
    };
    j["case"] = o.case_name;
    switch (branch) {
        case CaseDiscriminator::NonArithmetic: {
            if (cmd->count("--ex") == 0 || cmd->count("--ey") == 0)
                throw std::invalid_argument("non-arithmetic case needs --ex and --ey");
            const IsogenyDegreeBounds b = isogeny_degree_bound_nonarithmetic(
                Rational(static_cast<long>(o.ex)), Rational(static_cast<long>(o.ey)));
            put("bound_pi_x", b.bound_pi_x);
            put("bound_pi_y", b.bound_pi_y);
            break;
        }
        case CaseDiscriminator::ArithmeticProjective: {
            if (cmd->count("--gx") == 0 || cmd->count("--gy") == 0)
                throw std::invalid_argument("arithmetic-projective case needs --gx and --gy");
            const IsogenyDegreeBounds b = arithmetic_projective_isogeny_bounds(
                static_cast<long>(o.gx), static_cast<long>(o.gy));
            put("bound_pi_x", b.bound_pi_x);
            put("bound_pi_y", b.bound_pi_y);
            break;
        }
        case CaseDiscriminator::ArithmeticAffine: {
            if (cmd->count("--gx") == 0 || cmd->count("--ex") == 0)
                throw std::invalid_argument("arithmetic-affine case needs --gx and --ex");
            const AffineCoverBounds b = arithmetic_affine_cover_bounds(
                static_cast<long>(o.gx), Rational(static_cast<long>(o.ex)));
            put("belyi_degree_bound", b.belyi_degree_bound);
            put("cover_degree_bound", b.cover_degree_bound);
            break;
        }
    }
    j["digits"] = kApproxDigits;
    return ok(std::move(j));
}

CommandResult run_bound_dfs(const Options& o, const CLI::App* cmd) {
    const Precision p = resolve_precision(o.precision);
    const Rational h = parse_rational(o.h_rational, "--h");
    const HeightBound input(Enclosure(h), {"cli-input"});
    HeightBound out = input;
    if (o.sharp) {
        if (cmd->count("--gy") == 0)
            throw std::invalid_argument("--sharp needs --gy");
        out = dfs_height_bound_sharp(input, static_cast<long>(o.g),
                                     static_cast<long>(o.gy_sharp),
                                     static_cast<long>(o.deg), p);
    } else {
        out = dfs_height_bound(input, static_cast<long>(o.g),
                               static_cast<long>(o.deg), p);
    }
    Json j;
    j["bound"] = to_json(out.value);
    j["approx"] = approx_json(out.value);
    j["digits"] = kApproxDigits;
    j["provenance"] = out.provenance;
    return ok(std::move(j));
}

CommandResult run_certificate_replay(const Options& o) {
    const Precision p = resolve_precision(o.precision);
    const BoundCertificate cert = replay_theorem_certificate(
        parse_case(o.case_name), static_cast<long>(o.gx), static_cast<long>(o.gy),
        Rational(static_cast<long>(o.ex)), Rational(static_cast<long>(o.ey)),
        static_cast<long>(o.belyi), p);
    CommandResult r = ok(to_json(cert));
    if (!cert.verified) {
        r.status = CommandResult::Status::Unknown;
        for (const CertStep& s : cert.steps)
            if (!s.certified)
                r.diagnostics.push_back("uncertified step: " + s.label);
    }
    return r;
}

CommandResult run_verify_hurwitz42() {
    return ok(to_json(min_abs_euler_hyperbolic()));
}

CommandResult report_result(const InequalityReport& report) {
    CommandResult r = ok(to_json(report));
    if (!report.all_certified) {
        r.status = CommandResult::Status::Unknown;
        for (const InequalityItem& item : report.items)
            if (!item.certified)
                r.diagnostics.push_back("uncertified: " + item.label);
    }
    return r;
}

CommandResult run_verify_proof_steps(const Options& o) {
    return report_result(verify_proof_inequalities(0, static_cast<long>(o.gmax),
                                                   resolve_precision(o.precision)));
}

CommandResult run_verify_odlyzko(const Options& o) {
    return report_result(odlyzko_constant_check(static_cast<long>(o.nmax),
                                                resolve_precision(o.precision)));
}

CommandResult run_dessins_enumerate(const Options& o, const CLI::App* cmd) {
    const Census census =
        enumerate_dessins(static_cast<int>(o.degree), static_cast<int>(o.jobs),
                          static_cast<int>(o.cap));
    if (cmd->count("--out") > 0) {
        std::ofstream out(o.out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + o.out_path);
        out << census_to_json_lines(census);
        if (!out) throw std::invalid_argument("failed writing census to: " + o.out_path);
        Json j;
        j["header"] = census_to_json(census)["header"];
        j["written"] = o.out_path;
        return ok(std::move(j));
    }
    CommandResult r = ok(census_to_json(census));
    r.text = census_to_json_lines(census);
    return r;
}

CommandResult run_shimizu_covolume(const Options& o) {
    const Precision p = resolve_precision(o.precision);
    CommandResult r;
    FieldData f = with_zeta2(load_field(o.field_path), p, r.diagnostics);
    const Enclosure vol = covolume(f, p);
    Json j;
    j["covolume"] = to_json(vol);
    j["approx"] = approx_json(vol);
    j["digits"] = kApproxDigits;
    if (f.zeta2) j["zeta2"] = to_json(*f.zeta2);
    r.status = CommandResult::Status::Ok;
    r.payload = std::move(j);
    return r;
}

CommandResult run_shimizu_consistency(const Options& o) {
    const Precision p = resolve_precision(o.precision);
    CommandResult r;
    const FieldData f = with_zeta2(load_field(o.field_path), p, r.diagnostics);
    ShimizuConsistencyInput input;
    input.d1 = static_cast<long>(o.d1);
    input.d2 = static_cast<long>(o.d2);
    input.abs_e_x = parse_rational(o.abs_e, "--e");
    const Consistency verdict = shimizu_consistency(f, input, p);

    const Enclosure lhs = scale(Rational(input.d2), covolume(f, p));
    const Rational rhs = Rational(input.d1) * input.abs_e_x;
    Json j;
    j["verdict"] = to_string(verdict);
    j["lhs"] = to_json(lhs);
    j["lhs_approx"] = approx_json(lhs);
    j["rhs"] = rhs.to_string();
    j["rhs_approx"] = approx(rhs);
    r.payload = std::move(j);
    r.status = verdict == Consistency::Unknown ? CommandResult::Status::Unknown
                                               : CommandResult::Status::Ok;
    return r;
}

}  // namespace

int CommandResult::exit_code() const {
    switch (status) {
        case Status::Ok: return 0;
        case Status::Error: return 1;
        case Status::Unknown: return 2;
    }
    return 1;
}

std::string render(const CommandResult& result) {
    if (!result.text.empty()) return result.text;
    if (result.payload.is_null()) return "";  // diagnostics only; no partial JSON
    return result.payload.dump(2) + "\n";
}

CommandResult run(const std::vector<std::string>& args) {
    Options o;
    CLI::App app{"verified exact-arithmetic bounds for isogenous hyperbolic curves"};
    app.require_subcommand(1);

    // ---- bound ----
    CLI::App* bound = app.add_subcommand("bound", "closed-form height and degree bounds");
    bound->require_subcommand(1);

    CLI::App* bmain = bound->add_subcommand("main", "headline height bound");
    bmain->add_option("--ex", o.ex, "Euler characteristic of X (negative integer)")->required();
    bmain->add_option("--ey", o.ey, "Euler characteristic of Y (negative integer)")->required();
    bmain->add_option("--belyi", o.belyi, "Belyi degree bound for X")->required();

    CLI::App* baff = bound->add_subcommand("affine-arithmetic", "affine arithmetic height bound");
    baff->add_option("--ex", o.ex, "Euler characteristic of X (negative integer)")->required();

    CLI::App* biso = bound->add_subcommand("isogeny", "projection degree bounds by case");
    biso->add_option("--case", o.case_name,
                     "non-arithmetic | arithmetic-projective | arithmetic-affine")->required();
    biso->add_option("--ex", o.ex, "Euler characteristic of X");
    biso->add_option("--ey", o.ey, "Euler characteristic of Y");
    biso->add_option("--gx", o.gx, "genus of X");
    biso->add_option("--gy", o.gy, "genus of Y");

    CLI::App* bdfs = bound->add_subcommand("dfs", "height transfer along a finite map");
    bdfs->set_help_flag("--help", "print help");  // frees -h for the height option
    bdfs->add_option("--h", o.h_rational, "height bound of the source, as p/q")->required();
    bdfs->add_option("--g", o.g, "genus in the transfer term")->required();
    bdfs->add_option("--deg", o.deg, "degree of the map")->required();
    bdfs->add_flag("--sharp", o.sharp, "use the sharper split transfer");
    bdfs->add_option("--gy", o.gy_sharp, "target genus (with --sharp)");
    bdfs->add_option("--precision", o.precision, "working precision in bits");

    // ---- certificate ----
    CLI::App* cert = app.add_subcommand("certificate", "proof-chain certificates");
    cert->require_subcommand(1);
    CLI::App* creplay = cert->add_subcommand("replay", "replay one branch of the height-bound proof");
    creplay->add_option("--case", o.case_name,
                        "non-arithmetic | arithmetic-projective | arithmetic-affine")->required();
    creplay->add_option("--gx", o.gx, "genus of X")->required();
    creplay->add_option("--gy", o.gy, "genus of Y (ignored by the affine branch)");
    creplay->add_option("--ex", o.ex, "Euler characteristic of X (negative integer)")->required();
    creplay->add_option("--ey", o.ey, "Euler characteristic of Y (ignored by the affine branch)");
    creplay->add_option("--belyi", o.belyi, "Belyi degree bound for X");
    creplay->add_option("--precision", o.precision, "working precision in bits");

    // ---- verify ----
    CLI::App* verify = app.add_subcommand("verify", "certified inequality batches");
    verify->require_subcommand(1);
    verify->add_subcommand("hurwitz42", "exact minimum of |e| over hyperbolic orbifolds");
    CLI::App* vproof = verify->add_subcommand("proof-steps", "log-absorption and floor inequalities");
    vproof->add_option("--gmax", o.gmax, "largest genus to check")->required();
    vproof->add_option("--precision", o.precision, "working precision in bits");
    CLI::App* vodl = verify->add_subcommand("odlyzko", "discriminant-floor constant checks");
    vodl->add_option("--nmax", o.nmax, "largest field degree to check")->required();
    vodl->add_option("--precision", o.precision, "working precision in bits");

    // ---- dessins ----
    CLI::App* dessins = app.add_subcommand("dessins", "transitive permutation-pair census");
    dessins->require_subcommand(1);
    CLI::App* denum = dessins->add_subcommand("enumerate", "census of all dessins of one degree");
    denum->add_option("--degree", o.degree, "degree of the covers")->required();
    denum->add_option("--out", o.out_path, "write JSON-lines census to this file");
    denum->add_option("--jobs", o.jobs, "worker threads (output independent of this)");
    denum->add_option("--cap", o.cap, "degree guard; raise explicitly for degree > 8");

    // ---- shimizu ----
    CLI::App* shimizu = app.add_subcommand("shimizu", "arithmetic covolume checks");
    shimizu->require_subcommand(1);
    CLI::App* scov = shimizu->add_subcommand("covolume", "certified covolume from field data");
    scov->add_option("--field", o.field_path, "FieldData JSON file")->required();
    scov->add_option("--precision", o.precision, "working precision in bits");
    CLI::App* scons = shimizu->add_subcommand("consistency", "lattice identity check");
    scons->add_option("--field", o.field_path, "FieldData JSON file")->required();
    scons->add_option("--d1", o.d1, "index d_1")->required();
    scons->add_option("--d2", o.d2, "index d_2")->required();
    scons->add_option("--e", o.abs_e, "claimed |e(X)| as p/q")->required();
    scons->add_option("--precision", o.precision, "working precision in bits");

    CommandResult result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (bmain->parsed()) return run_bound_main(o);
        if (baff->parsed()) return run_bound_affine(o);
        if (biso->parsed()) return run_bound_isogeny(o, biso);
        if (bdfs->parsed()) return run_bound_dfs(o, bdfs);
        if (creplay->parsed()) return run_certificate_replay(o);
        if (verify->get_subcommand("hurwitz42")->parsed()) return run_verify_hurwitz42();
        if (vproof->parsed()) return run_verify_proof_steps(o);
        if (vodl->parsed()) return run_verify_odlyzko(o);
        if (denum->parsed()) return run_dessins_enumerate(o, denum);
        if (scov->parsed()) return run_shimizu_covolume(o);
        if (scons->parsed()) return run_shimizu_consistency(o);
        result.status = CommandResult::Status::Error;
        result.diagnostics.push_back("no subcommand selected");
    } catch (const CLI::CallForHelp&) {
        result.status = CommandResult::Status::Ok;
        result.text = app.help();
    } catch (const CLI::ParseError& e) {
        result.status = CommandResult::Status::Error;
        result.diagnostics.push_back(e.what());
    } catch (const std::exception& e) {
        result.status = CommandResult::Status::Error;
        result.diagnostics.push_back(e.what());
    }
    return result;
}

}  // namespace isobound
