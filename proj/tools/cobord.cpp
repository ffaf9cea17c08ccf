// cobord: exact Chern-number and complex-cobordism calculator.
//
// Batch interface only: every subcommand reads its inputs, prints the
// module's text format to stdout and exits. Exit status 0 = success,
// 1 = domain error (printed as "<Code>: <message>"), 2 = usage or
// syntax error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cobord/expr.hpp"
#include "cobord/numbertheory.hpp"
#include "cobord/realize.hpp"
#include "cobord/ring.hpp"
#include "cobord/toric.hpp"

namespace {

using namespace cobord;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file '" + path + "'");
    out << content;
}

GeneratorMode parse_mode(const std::string& mode) {
    if (mode == "strict") return GeneratorMode::Strict;
    if (mode == "relaxed") return GeneratorMode::Relaxed;
    throw ValidationError("mode must be 'strict' or 'relaxed'");
}

// <expr> positional or --class file; exactly one of the two.
ChernVector load_class(const std::string& expr, const std::string& class_file) {
    if (!expr.empty() && !class_file.empty())
        throw ValidationError("give either an expression or --class, not both");
    if (!expr.empty()) return evaluate(*parse_class_expr(expr));
    if (!class_file.empty()) return chern_vector_from_text(read_file(class_file));
    throw ValidationError("expected an expression or --class <file>");
}

const GeneratorSystem& system_for(int dim, GeneratorMode mode, int max_dim) {
    return shared_generator_system(std::max(dim, max_dim), mode);
}

struct ScanOptions {
    long long max = 0;
    int min_i = 2;
    std::string parity = "even";
    bool json = false;
};

int run_gcd_scan(const ScanOptions& opt) {
    const Parity parity = opt.parity == "odd" ? Parity::Odd : Parity::Even;
    if (opt.parity != "even" && opt.parity != "odd")
        throw ValidationError("parity must be 'even' or 'odd'");
    const auto failures = scan_gcd_exceptions(opt.max, opt.min_i, parity);
    long long checked = 0;
    for (long long n = parity == Parity::Even ? 2 : 3; n <= opt.max; n += 2) ++checked;
    if (opt.json) {
        nlohmann::ordered_json j;
        j["n_max"] = opt.max;
        j["i_min"] = opt.min_i;
        j["parity"] = opt.parity;
        j["checked"] = checked;
        j["failures"] = nlohmann::ordered_json::array();
        for (const auto& r : failures) {
            nlohmann::ordered_json f;
            f["n"] = r.n;
            f["gcd"] = r.gcd_value;
            f["eta"] = r.eta_value;
            f["range_empty"] = r.range_empty;
            j["failures"].push_back(std::move(f));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : failures) {
            std::cout << "n=" << r.n << " gcd=" << r.gcd_value << " eta=" << r.eta_value;
            if (r.range_empty) std::cout << " (range empty)";
            std::cout << "\n";
        }
        std::cout << "scanned " << checked << " value(s) of n up to " << opt.max
                  << " (i_min=" << opt.min_i << ", parity=" << opt.parity << "): "
                  << failures.size() << " failure(s)\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chern numbers, cobordism-ring arithmetic and "
                 "good-variety realizations"};
    app.require_subcommand(1);

    // --- number theory ---------------------------------------------------
    long long eta_n = 0;
    auto* cmd_eta = app.add_subcommand("eta", "eta(n): p when n+1 is a power of the prime p, else 1");
    cmd_eta->add_option("n", eta_n, "dimension n >= 1")->required();

    long long kum_i = 0, kum_j = 0, kum_p = 0;
    auto* cmd_kummer = app.add_subcommand("kummer", "carries when i is added to j in base p");
    cmd_kummer->add_option("i", kum_i)->required();
    cmd_kummer->add_option("j", kum_j)->required();
    cmd_kummer->add_option("p", kum_p, "prime base")->required();

    long long check_n = 0;
    int check_min_i = 2;
    auto* cmd_check = app.add_subcommand(
        "gcd-check", "gcd of n+1 and binom(n+1,i), i_min <= i <= (n+1)/2, against eta(n)");
    cmd_check->add_option("n", check_n)->required();
    cmd_check->add_option("--min-i", check_min_i, "2 or 4 (default 2)");

    ScanOptions scan;
    auto* cmd_scan = app.add_subcommand("gcd-scan", "all failing n of one parity up to a bound");
    cmd_scan->add_option("--max", scan.max, "largest n to check")->required();
    cmd_scan->add_option("--min-i", scan.min_i, "2 or 4 (default 2)");
    cmd_scan->add_option("--parity", scan.parity, "even or odd (default even)");
    cmd_scan->add_flag("--json", scan.json, "machine-readable output");

    long long obstruction_n = 0;
    auto* cmd_obstruction =
        app.add_subcommand("obstruction", "torus rank k and the Bott-rule obstruction check");
    cmd_obstruction->add_option("n", obstruction_n, "complex dimension n >= 3")->required();

    // --- classes ----------------------------------------------------------
    std::string chern_expr;
    auto* cmd_chern = app.add_subcommand("chern", "Chern-number table of a class expression");
    cmd_chern->add_option("expr", chern_expr, "e.g. \"2*CP(2) - CP(1)^2\"")->required();

    std::string milnor_expr;
    auto* cmd_milnor = app.add_subcommand("milnor", "Milnor number s_n of a class expression");
    cmd_milnor->add_option("expr", milnor_expr)->required();

    std::string rank_expr;
    auto* cmd_rank = app.add_subcommand("torus-rank", "torus rank of a product of varieties");
    cmd_rank->add_option("expr", rank_expr, "e.g. \"H(4,5) * Sigma(2)\"")->required();

    // --- toric -------------------------------------------------------------
    auto* cmd_toric = app.add_subcommand("toric", "fan operations");
    cmd_toric->require_subcommand(1);

    std::string tv_fan;
    auto* cmd_tv = cmd_toric->add_subcommand("validate", "check fan invariants");
    cmd_tv->add_option("--fan", tv_fan, "fan JSON file")->required();

    std::string tc_fan;
    auto* cmd_tc = cmd_toric->add_subcommand("chern", "Chern numbers by fixed-point localization");
    cmd_tc->add_option("--fan", tc_fan, "fan JSON file")->required();

    std::string tb_fan, tb_out;
    int tb_cone = 0;
    auto* cmd_tb = cmd_toric->add_subcommand("blowup", "stellar subdivision of one maximal cone");
    cmd_tb->add_option("--fan", tb_fan, "fan JSON file")->required();
    cmd_tb->add_option("--cone", tb_cone, "maximal cone index")->required();
    cmd_tb->add_option("-o,--output", tb_out, "output file (default stdout)");

    // --- ring ----------------------------------------------------------------
    std::string dec_expr, dec_class, dec_mode = "relaxed";
    int dec_max_dim = 8;
    auto* cmd_dec = app.add_subcommand("decompose", "integer coordinates over generator monomials");
    cmd_dec->add_option("expr", dec_expr);
    cmd_dec->add_option("--class", dec_class, "class file instead of an expression");
    cmd_dec->add_option("--mode", dec_mode, "strict or relaxed (default relaxed)");
    cmd_dec->add_option("--max-dim", dec_max_dim, "generator system bound (default 8)");

    std::string comp_coords, comp_mode = "relaxed";
    int comp_max_dim = 8;
    auto* cmd_comp = app.add_subcommand("compose", "class of a coordinate vector");
    cmd_comp->add_option("--coords", comp_coords, "coordinates file")->required();
    cmd_comp->add_option("--mode", comp_mode, "strict or relaxed (default relaxed)");
    cmd_comp->add_option("--max-dim", comp_max_dim, "generator system bound (default 8)");

    int gen_max_dim = 8;
    std::string gen_mode = "relaxed";
    auto* cmd_gen = app.add_subcommand("generators", "per-dimension generator report");
    cmd_gen->add_option("--max-dim", gen_max_dim, "largest dimension (default 8)");
    cmd_gen->add_option("--mode", gen_mode, "strict or relaxed (default relaxed)");

    // --- realization -----------------------------------------------------------
    std::string real_expr, real_class, real_mode = "strict", real_out;
    auto* cmd_real = app.add_subcommand("realize", "disjoint union of good varieties for a class");
    cmd_real->add_option("expr", real_expr);
    cmd_real->add_option("--class", real_class, "class file instead of an expression");
    cmd_real->add_option("--mode", real_mode, "strict or relaxed (default strict)");
    cmd_real->add_option("-o,--output", real_out, "output file (default stdout)");

    std::string ver_real, ver_class;
    auto* cmd_ver = app.add_subcommand("verify", "recompute a realization against a class");
    cmd_ver->add_option("--realization", ver_real, "realization file")->required();
    cmd_ver->add_option("--class", ver_class, "class file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "Usage: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_eta) {
            std::cout << eta(eta_n) << "\n";
        } else if (*cmd_kummer) {
            std::cout << kummer_carries(kum_i, kum_j, kum_p) << "\n";
        } else if (*cmd_check) {
            const GcdReport r = gcd_generator_check(check_n, check_min_i);
            std::cout << "n=" << r.n << " gcd=" << r.gcd_value << " eta=" << r.eta_value << " "
                      << (r.pass ? "pass" : "fail");
            if (r.range_empty) std::cout << " (range empty)";
            std::cout << "\n";
            return r.pass ? 0 : 1;
        } else if (*cmd_scan) {
            return run_gcd_scan(scan);
        } else if (*cmd_obstruction) {
            const TorusRankChoice c = choose_torus_rank(obstruction_n);
            std::cout << "k=" << c.k << " obstruction_dim=" << c.obstruction_dim
                      << " trivial=" << (c.trivial ? "yes" : "no") << "\n";
        } else if (*cmd_chern) {
            std::cout << to_text(to_table(evaluate(*parse_class_expr(chern_expr))));
        } else if (*cmd_milnor) {
            std::cout << milnor_number(evaluate(*parse_class_expr(milnor_expr))) << "\n";
        } else if (*cmd_rank) {
            std::cout << torus_rank(product_from_expr(*parse_class_expr(rank_expr))) << "\n";
        } else if (*cmd_tv) {
            const auto bad = validate_fan(fan_from_json(read_file(tv_fan)));
            if (bad.empty()) {
                std::cout << "ok\n";
            } else {
                for (const auto& b : bad) std::cout << b << "\n";
                std::cout << "invalid: " << bad.size() << " violation(s)\n";
                return 1;
            }
        } else if (*cmd_tc) {
            std::cout << to_text(to_table(toric_chern_vector(fan_from_json(read_file(tc_fan)))));
        } else if (*cmd_tb) {
            const std::string out = fan_to_json(blow_up(fan_from_json(read_file(tb_fan)), tb_cone));
            if (tb_out.empty()) std::cout << out;
            else write_file(tb_out, out);
        } else if (*cmd_dec) {
            const ChernVector v = load_class(dec_expr, dec_class);
            const auto& gs = system_for(v.dim(), parse_mode(dec_mode), dec_max_dim);
            std::cout << to_text(decompose(v, gs));
        } else if (*cmd_comp) {
            const ClassCoordinates c = coordinates_from_text(read_file(comp_coords));
            const auto& gs = system_for(c.dim, parse_mode(comp_mode), comp_max_dim);
            std::cout << to_text(to_table(compose(c, gs)));
        } else if (*cmd_gen) {
            std::cout << shared_generator_system(gen_max_dim, parse_mode(gen_mode)).report();
        } else if (*cmd_real) {
            const ChernVector v = load_class(real_expr, real_class);
            const Realization r = realize(v, parse_mode(real_mode));
            const VerifyReport rep = verify_realization(r, v);
            const std::string out =
                to_text(r) + "verified: " + (rep.pass() ? "yes" : "no") + "\n";
            if (real_out.empty()) std::cout << out;
            else write_file(real_out, out);
            if (!rep.pass()) {
                std::cerr << "Internal: realization failed its own verification\n";
                return 1;
            }
        } else if (*cmd_ver) {
            const Realization r = realization_from_text(read_file(ver_real));
            const ChernVector v = chern_vector_from_text(read_file(ver_class));
            const VerifyReport rep = verify_realization(r, v);
            std::cout << rep.to_string();
            return rep.pass() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "Parse: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "Internal: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
