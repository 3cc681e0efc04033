#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "knroot/errors.hpp"
#include "knroot/io.hpp"
#include "knroot/rng.hpp"
#include "knroot/kn.hpp"
#include "knroot/rootstack.hpp"

namespace {

using namespace knroot;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

double default_tolerance() {
    if (const char* env = std::getenv("KNROOT_TOL")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed KNROOT_TOL\n";
        }
    }
    return 1e-9;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

nlohmann::json schemas() {
    nlohmann::json s;
    s["monoid"] = {{"ambient_dim", "count"},
                   {"generators", "array of integer vectors (decimal strings accepted)"}};
    s["matrix"] = {{"rows", "count"},
                   {"cols", "count"},
                   {"entries", "row-major array of decimal strings (exact)"}};
    s["cone"] = {{"ambient_dim", "count"},
                 {"rays", "array of primitive integer vectors"},
                 {"facets", "array of primitive inward normals"}};
    s["cpoint"] = {{"monoid", "monoid"},
                   {"face", "generator indices of the support face"},
                   {"modulus", "log-moduli on the F^gp basis, decimal strings"},
                   {"angles", "angles in [0,2pi) on the F^gp basis"},
                   {"precision", "significant digits used for reals (17)"}};
    s["cbar_point"] = {{"monoid", "monoid"},
                       {"face", "generator indices of the support face"},
                       {"u", "first coordinates on the F^gp basis"},
                       {"v", "second coordinates on the P^gp basis"},
                       {"precision", "17"}};
    s["kn_point"] = {{"monoid", "monoid"},
                     {"face", "generator indices of the support face"},
                     {"log_modulus", "logs of the non-negative hom on the F^gp basis"},
                     {"sigma", "character angles on the P^gp basis"},
                     {"precision", "17"}};
    s["mu"] = {{"monoid", "monoid"},
               {"n", "root level"},
               {"group", "{free_rank, invariant_factors, order}"},
               {"order", "n^rank as a decimal string"},
               {"enumerated", "true when all elements are listed"},
               {"elements|generators", "residue vectors mod n on the P^gp basis"}};
    s["root_fiber"] = {{"transversal", "array of {level, point, base}"},
                       {"stabilizer", "{order, invariant_factors, elements?}"}};
    s["kn_fiber"] = {{"base", "cpoint"},
                     {"rank", "fiber torus rank"},
                     {"lattice", "quotient P^gp/F^gp data"},
                     {"samples", "array of kn_point, all mapping to base"}};
    s["phi"] = {{"point", "{level, point, base}"},
                {"ambiguity", "{level, orbit_size, stabilizer}"}};
    s["report"] = {{"suite", "name"},
                   {"parameters", "suite parameters (monoid, n, samples, seed, tol)"},
                   {"passed", "true iff failures is empty"},
                   {"cases_run", "count"},
                   {"failures", "array of {input, expected, actual, detail}"}};
    s["monoid_spec"] =
        "built-ins N, N2, N3, A1, numsemigroup:a,b,...; file:<path>; gens:[[..],..]";
    return s;
}

int emit_report(const VerificationReport& rep) {
    emit(rep.to_json());
    std::cerr << "suite " << rep.suite() << ": " << (rep.passed() ? "pass" : "FAIL") << " ("
              << rep.cases_run() << " cases, " << rep.failures().size() << " failures)\n";
    return rep.passed() ? kExitOk : kExitVerificationFailed;
}

struct VerifyOptions {
    std::string suite;
    std::string spec;
    long long n = 2;
    bool n_given = false;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    double perturb = 0.0;
};

std::vector<std::pair<long long, long long>> default_tower_pairs() {
    return {{1, 2}, {2, 4}, {2, 6}, {3, 6}};
}

int run_verify(const VerifyOptions& opt) {
    AffineMonoid p = parse_monoid_spec(opt.spec);
    if (opt.suite == "charts")
        return emit_report(verify_chart_cartesian(p, opt.samples, opt.seed, opt.tol, opt.perturb));
    if (opt.suite == "cube")
        return emit_report(verify_cube(p, opt.n, opt.samples, opt.seed, opt.tol));
    if (opt.suite == "factorization")
        return emit_report(verify_factorization(p, opt.n, opt.samples, opt.seed, opt.tol));
    if (opt.suite == "tower") {
        auto pairs = opt.n_given
                         ? std::vector<std::pair<long long, long long>>{{opt.n, 2 * opt.n}}
                         : default_tower_pairs();
        return emit_report(verify_tower(p, pairs, opt.samples, opt.seed, opt.tol));
    }
    if (opt.suite == "all") {
        nlohmann::json out = nlohmann::json::array();
        bool ok = true;
        auto run = [&](const VerificationReport& rep) {
            out.push_back(rep.to_json());
            ok = ok && rep.passed();
            std::cerr << "suite " << rep.suite() << ": " << (rep.passed() ? "pass" : "FAIL")
                      << "\n";
        };
        run(verify_chart_cartesian(p, opt.samples, opt.seed, opt.tol));
        for (long long n : {2, 3, 5})
            run(verify_factorization(p, n, opt.samples, Rng::split(opt.seed, n), opt.tol));
        run(verify_tower(p, default_tower_pairs(), opt.samples, opt.seed, opt.tol));
        for (long long n : {2, 3})
            run(verify_cube(p, n, opt.samples, Rng::split(opt.seed, 100 + n), opt.tol));
        emit(out);
        return ok ? kExitOk : kExitVerificationFailed;
    }
    throw ParseError("unknown verify suite: " + opt.suite);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation with affine monoids, Kato-Nakayama local models and "
                 "root-stack fibers"};
    app.require_subcommand(0, 1);
    bool show_schema = false;
    app.add_flag("--schema", show_schema, "print the JSON schemas of all outputs and exit");

    // monoid info|saturate
    auto* monoid_cmd = app.add_subcommand("monoid", "inspect or saturate a monoid");
    monoid_cmd->require_subcommand(1);
    std::string info_spec, saturate_spec;
    auto* info_cmd = monoid_cmd->add_subcommand("info", "gp rank, properties, faces, relations");
    info_cmd->add_option("spec", info_spec, "monoid spec")->required();
    auto* saturate_cmd = monoid_cmd->add_subcommand("saturate", "saturation of a sharp monoid");
    saturate_cmd->add_option("spec", saturate_spec, "monoid spec")->required();

    // mu
    std::string mu_spec;
    long long mu_level = 2;
    auto* mu_cmd = app.add_subcommand("mu", "mu_n(P): characters of coker(P^gp -> (1/n)P^gp)");
    mu_cmd->add_option("spec", mu_spec, "monoid spec")->required();
    mu_cmd->add_option("--n", mu_level, "root level")->required();

    // kn-fiber
    std::string knf_spec, knf_point;
    std::size_t knf_samples = 8;
    std::uint64_t knf_seed = 0;
    auto* knf_cmd = app.add_subcommand("kn-fiber", "fiber of tau over a point of C(P)");
    knf_cmd->add_option("spec", knf_spec, "monoid spec")->required();
    knf_cmd->add_option("--point", knf_point, "CPoint JSON")->required();
    knf_cmd->add_option("--samples", knf_samples, "fiber samples");
    knf_cmd->add_option("--seed", knf_seed, "RNG seed");

    // root-fiber
    std::string rf_spec, rf_point;
    long long rf_level = 2;
    auto* rf_cmd =
        app.add_subcommand("root-fiber", "lifts of a C(P)-point to C((1/n)P) with stabilizer");
    rf_cmd->add_option("spec", rf_spec, "monoid spec")->required();
    rf_cmd->add_option("--n", rf_level, "root level")->required();
    rf_cmd->add_option("--point", rf_point, "CPoint JSON")->required();

    // phi
    std::string phi_spec, phi_point;
    long long phi_level = 2;
    auto* phi_cmd = app.add_subcommand("phi", "comparison map to the level-n root fiber");
    phi_cmd->add_option("spec", phi_spec, "monoid spec")->required();
    phi_cmd->add_option("--n", phi_level, "root level")->required();
    phi_cmd->add_option("--point", phi_point, "KNPoint JSON")->required();

    // verify
    VerifyOptions vopt;
    vopt.tol = default_tolerance();
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", vopt.suite, "charts|cube|tower|factorization|all")
        ->required();
    verify_cmd->add_option("spec", vopt.spec, "monoid spec")->required();
    auto* nopt = verify_cmd->add_option("--n", vopt.n, "root level");
    verify_cmd->add_option("--samples", vopt.samples, "sample count");
    verify_cmd->add_option("--seed", vopt.seed, "RNG seed");
    verify_cmd->add_option("--tol", vopt.tol, "comparison tolerance");
    verify_cmd->add_option("--perturb", vopt.perturb,
                           "inject an angle error into chart lifts (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (app.count("--help") || e.get_name() == "CallForHelp") return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (show_schema) {
            emit(schemas());
            return kExitOk;
        }
        if (info_cmd->parsed()) {
            AffineMonoid p = parse_monoid_spec(info_spec);
            nlohmann::json j = to_json(p);
            j["gp_rank"] = p.groupification().rank();
            j["gp"] = to_json(p.groupification());
            j["sharp"] = p.is_sharp();
            j["saturated"] = p.is_saturated();
            j["fine"] = p.is_fine();
            j["relation_lattice"] = to_json(p.relation_lattice());
            if (p.is_sharp()) {
                j["faces"] = p.face_count();
                nlohmann::json faces = nlohmann::json::array();
                for (std::size_t i = 0; i < p.face_count(); ++i) {
                    const MonoidFace& f = p.face(i);
                    faces.push_back({{"generators", f.generator_indices},
                                     {"dim", f.descriptor.dim},
                                     {"gp_rank", f.gp.rank()}});
                }
                j["face_list"] = std::move(faces);
            }
            emit(j);
            return kExitOk;
        }
        if (saturate_cmd->parsed()) {
            emit(to_json(parse_monoid_spec(saturate_spec).saturate()));
            return kExitOk;
        }
        if (mu_cmd->parsed()) {
            emit(to_json(mu_n(parse_monoid_spec(mu_spec), mu_level)));
            return kExitOk;
        }
        if (knf_cmd->parsed()) {
            AffineMonoid p = parse_monoid_spec(knf_spec);
            CPoint x = cpoint_from_json(nlohmann::json::parse(knf_point), &p);
            emit(to_json(kn_fiber(p, x, knf_samples, knf_seed)));
            return kExitOk;
        }
        if (rf_cmd->parsed()) {
            AffineMonoid p = parse_monoid_spec(rf_spec);
            CPoint x = cpoint_from_json(nlohmann::json::parse(rf_point), &p);
            emit(to_json(root_fiber(p, rf_level, x)));
            return kExitOk;
        }
        if (phi_cmd->parsed()) {
            AffineMonoid p = parse_monoid_spec(phi_spec);
            KNPoint k = kn_from_json(nlohmann::json::parse(phi_point), &p);
            emit(to_json(phi_n(k, phi_level)));
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            vopt.n_given = nopt->count() > 0;
            return run_verify(vopt);
        }
        std::cerr << app.help() << "\n";
        return kExitUsage;
    } catch (const knroot::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: bad JSON input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const knroot::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitComputation;
    }
}
