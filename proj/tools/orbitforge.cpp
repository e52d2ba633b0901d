// orbitforge: exact certificates and cohomology reports from the shell.
//
// Every subcommand wraps one library operation, reads inputs from files in
// the library's JSON/text formats, and emits exact output (decimal strings
// and enclosures, never floats).  Identical invocations produce identical
// bytes.
//
// Exit codes: 0 success; 1 computational limit (scan ceiling, precision);
// 2 invalid input (flags, malformed files, failed validation).
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbitforge/cohomology.hpp"
#include "orbitforge/diagnostics.hpp"
#include "orbitforge/errors.hpp"
#include "orbitforge/json_io.hpp"
#include "orbitforge/presentation.hpp"
#include "orbitforge/quad_scalar.hpp"
#include "orbitforge/stabilizer.hpp"
#include "orbitforge/verify.hpp"
#include "orbitforge/wreath.hpp"

namespace {

using namespace orbitforge;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json load_json(const std::string& path) {
    try {
        return Json::parse(slurp(path));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

OrthoRep load_validated_rep(const std::string& pres_path, const std::string& rep_path,
                            Presentation& p) {
    p = Presentation::parse(slurp(pres_path));
    OrthoRep r = rep_from_json(load_json(rep_path));
    const RepReport report = validate_rep(p, r);
    if (!report.ok) {
        std::string msg = rep_path + ": representation rejected";
        for (const auto& v : report.violations) msg += "\n  " + v;
        throw std::invalid_argument(msg);
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for affine isometric actions on sequence spaces"};
    app.require_subcommand(1);

    std::string t_str, eps_str, pres_path, rep_path, b_path, target_path, x0_path, z_path;
    std::string zword, format = "json", lattice_name;
    std::vector<std::string> target_paths;
    long len = 8, lattice_n = 0, n_max = 0;
    unsigned long seed = 42;
    int rc = 0;

    auto* approx_real = app.add_subcommand(
        "approx-real", "approximate a rational by an element of Z[sqrt2] within eps");
    approx_real->add_option("--t", t_str, "target rational, e.g. 1/2")->required();
    approx_real->add_option("--eps", eps_str, "positive rational tolerance")->required();
    approx_real->callback([&] {
        const Rational t = parse_rational(t_str);
        const Rational eps = parse_rational(eps_str);
        const QuadScalar q = approximate_real(t, eps);
        const SmallUnit unit = small_unit(eps);
        const QuadScalar err = q - QuadScalar(t);
        const QuadScalar abs_err = err.sign() < 0 ? -err : err;
        const bool ok = abs_err * QuadScalar(2) <= unit.u && unit.u <= QuadScalar(eps);
        std::cout << "q = " << q.to_string() << "\n";
        std::cout << "unit = " << unit.u.to_string() << "  (k = " << unit.k << ")\n";
        std::cout << "error = " << err.to_string() << "  (exact)\n";
        std::cout << (ok ? "certified: |error| <= unit/2 <= eps/2"
                         : "CERTIFICATION FAILED")
                  << "\n";
        if (!ok) rc = 1;
    });

    auto* orbit_approx = app.add_subcommand(
        "orbit-approx", "wreath element moving 0 within eps of a target sequence");
    orbit_approx->add_option("--target", target_path, "target SparseVec JSON file")->required();
    orbit_approx->add_option("--eps", eps_str, "positive rational tolerance")->required();
    orbit_approx->callback([&] {
        const SparseVec target = sparse_from_json(load_json(target_path));
        emit(to_json(approximate_orbit(target, parse_rational(eps_str))));
    });

    auto* stab_approx = app.add_subcommand(
        "stab-approx", "flat-stabilizer isometry moving x0 within eps of z");
    stab_approx->add_option("--x0", x0_path, "start SparseVec JSON file")->required();
    stab_approx->add_option("--z", z_path, "target SparseVec JSON file")->required();
    stab_approx->add_option("--eps", eps_str, "positive rational tolerance")->required();
    stab_approx->add_option("--n-max", n_max,
                            "scan ceiling (default: ORBITFORGE_NMAX or 10^6)");
    stab_approx->callback([&] {
        const SparseVec x0 = sparse_from_json(load_json(x0_path));
        const SparseVec z = sparse_from_json(load_json(z_path));
        const Rational eps = parse_rational(eps_str);
        const ApproxCertificate cert = stab_approx->count("--n-max") != 0u
                                           ? approximate_pair(x0, z, eps, n_max)
                                           : approximate_pair(x0, z, eps);
        emit(to_json(cert));
    });

    auto* h1 = app.add_subcommand("h1", "dimension of the first cohomology of a representation");
    h1->add_option("--pres", pres_path, "presentation text file")->required();
    h1->add_option("--rep", rep_path, "orthogonal representation JSON file")->required();
    h1->callback([&] {
        Presentation p;
        const OrthoRep r = load_validated_rep(pres_path, rep_path, p);
        std::cout << "dim H1 = " << h1_dim(p, r) << "\n";
    });

    auto* strong = app.add_subcommand(
        "strong-coh", "check that every subrepresentation has nonvanishing H1");
    strong->add_option("--pres", pres_path, "presentation text file")->required();
    strong->add_option("--rep", rep_path, "orthogonal representation JSON file")->required();
    strong->callback([&] {
        Presentation p;
        const OrthoRep r = load_validated_rep(pres_path, rep_path, p);
        emit(to_json(is_strongly_cohomological(p, r)));
    });

    auto* gap = app.add_subcommand(
        "gap-check", "certify the central displacement bound 2||(1-pi(z))^-1|| ||b(z)||");
    gap->add_option("--pres", pres_path, "presentation text file")->required();
    gap->add_option("--rep", rep_path, "orthogonal representation JSON file")->required();
    gap->add_option("--z", zword, "central word, e.g. c")->required();
    gap->add_option("--b", b_path, "cocycle JSON file")->required();
    gap->add_option("--len", len, "word length ceiling (default 8)");
    gap->callback([&] {
        Presentation p;
        const OrthoRep r = load_validated_rep(pres_path, rep_path, p);
        const Word z = Word::parse(p.alphabet(), zword);
        const Cocycle b = cocycle_from_json(load_json(b_path));
        emit(to_json(central_gap_check(p, r, z, b, len)));
    });

    auto* probe = app.add_subcommand(
        "decompose-orbit", "fixed point and per-length orbit radii of an affine action");
    probe->add_option("--rep", rep_path, "orthogonal representation JSON file")->required();
    probe->add_option("--b", b_path, "cocycle JSON file")->required();
    probe->add_option("--len", len, "word length ceiling (default 8)");
    probe->callback([&] {
        const AffineActionSpec action{rep_from_json(load_json(rep_path)),
                                      cocycle_from_json(load_json(b_path))};
        emit(to_json(orbit_decomposition_probe(action, len)));
    });

    auto* diagnose = app.add_subcommand("diagnose", "density and growth probes");
    diagnose->require_subcommand(1);

    auto* lattice = diagnose->add_subcommand(
        "lattice", "distance to the integer-vector lattice with the coarse-density cap");
    lattice->add_option("--n", lattice_n, "half-ones family: 4n entries of 1/2 at 1..4n");
    lattice->add_option("--vec", target_path, "custom probe SparseVec JSON file");
    lattice->callback([&] {
        const bool have_n = lattice->count("--n") != 0u;
        const bool have_vec = lattice->count("--vec") != 0u;
        if (have_n == have_vec)
            throw std::invalid_argument("diagnose lattice: give exactly one of --n, --vec");
        SparseVec probe_vec(Domain::Z);
        if (have_n) {
            if (lattice_n < 0) throw std::invalid_argument("diagnose lattice: --n must be >= 0");
            for (long i = 1; i <= 4 * lattice_n; ++i)
                probe_vec.set(i, QuadScalar(Rational(1, 2)));
        } else {
            probe_vec = sparse_from_json(load_json(target_path));
        }
        emit(to_json(lattice_report(probe_vec)));
    });

    auto* density = diagnose->add_subcommand(
        "density", "certified orbit approximations for a batch of targets");
    density->add_option("--target", target_paths, "target SparseVec JSON file (repeatable)")
        ->required();
    density->add_option("--eps", eps_str, "positive rational tolerance")->required();
    density->callback([&] {
        std::vector<SparseVec> targets;
        for (const auto& path : target_paths) targets.push_back(sparse_from_json(load_json(path)));
        emit(to_json(density_report(targets, parse_rational(eps_str))));
    });

    auto* growth = diagnose->add_subcommand(
        "growth", "support-function growth of the orbit of 0 (half-line probe)");
    growth->add_option("--lattice", lattice_name, "wreath action over 'int' or 'quad'");
    growth->add_option("--rep", rep_path, "orthogonal representation JSON file");
    growth->add_option("--b", b_path, "cocycle JSON file (with --rep)");
    growth->add_option("--len", len, "word length ceiling (default 8)");
    growth->add_option("--seed", seed, "seed for the random probe directions (default 42)");
    growth->add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    growth->callback([&] {
        const bool have_lattice = growth->count("--lattice") != 0u;
        const bool have_rep = growth->count("--rep") != 0u;
        if (have_lattice == have_rep)
            throw std::invalid_argument("diagnose growth: give exactly one of --lattice, --rep");
        GrowthAction action = Lattice::Int;
        if (have_lattice) {
            if (lattice_name == "int")
                action = Lattice::Int;
            else if (lattice_name == "quad")
                action = Lattice::Quad;
            else
                throw std::invalid_argument("diagnose growth: --lattice must be int or quad");
        } else {
            if (growth->count("--b") == 0u)
                throw std::invalid_argument("diagnose growth: --rep requires --b");
            action = AffineActionSpec{rep_from_json(load_json(rep_path)),
                                      cocycle_from_json(load_json(b_path))};
        }
        const GrowthTable table =
            support_growth(action, default_growth_directions(action, len, seed), len);
        if (format == "csv")
            std::cout << growth_csv(table);
        else
            emit(to_json(table));
    });

    auto* verify = app.add_subcommand(
        "verify-claims", "run the full acceptance suite (report to stdout, timings to stderr)");
    verify->add_option("--seed", seed, "suite seed (default 42)");
    verify->callback([&] {
        const VerifyReport report = verify_claims(VerifyOptions{seed});
        std::cout << report.text << std::flush;
        for (const auto& c : report.criteria)
            std::fprintf(stderr, "criterion %02d: %ld ms\n", c.number, c.elapsed_ms);
        if (!report.all_pass) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ComputeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
