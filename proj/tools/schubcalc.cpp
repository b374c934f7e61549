// Command-line front end: root-system data, Weyl enumeration, diagonal-class
// construction and verification, torsion indices, the G2 integrality
// counterexample, flag-bundle identities, and Schubert-basis expansion of
// user polynomials. All reports are deterministic JSON.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "schub/json_io.hpp"

using namespace schub;

namespace {

struct CommonOpts {
    std::string type;
    bool json = false;
    std::string cache_dir;
    size_t max_weyl = 50000;
    size_t max_terms = 2000000;
};

std::string cache_path(const std::string& dir, const RootSystem& rs) {
    return dir + "/weyl_" + rs.name() + ".json";
}

WeylGroup make_weyl(const RootSystem& rs, const CommonOpts& opts) {
    std::string dir = opts.cache_dir;
    if (dir.empty())
        if (const char* env = std::getenv("SCHUB_CACHE_DIR")) dir = env;
    if (dir.empty()) return WeylGroup(rs, opts.max_weyl);

    std::string path = cache_path(dir, rs);
    if (std::filesystem::exists(path)) {
        if (auto elems = load_weyl_cache(path, rs))
            return WeylGroup::from_elements(rs, std::move(*elems));
        std::cerr << "warning: corrupt Weyl cache " << path << ", recomputing\n";
    }
    WeylGroup W(rs, opts.max_weyl);
    std::filesystem::create_directories(dir);
    save_weyl_cache(path, W);
    return W;
}

void guard_terms(const Poly& p, const CommonOpts& opts) {
    if (p.term_count() > opts.max_terms)
        throw std::runtime_error("term limit exceeded (--max-terms)");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_roots(const CommonOpts& opts) {
    RootSystem rs = RootSystem::parse(opts.type);
    if (opts.json) {
        emit(root_system_to_json(rs));
    } else {
        std::cout << rs.name() << ": " << rs.positive_roots().size()
                  << " positive roots, |W| = " << rs.weyl_order() << "\n";
        for (const auto& r : rs.positive_roots()) {
            std::cout << "  [";
            for (size_t i = 0; i < r.size(); ++i)
                std::cout << (i ? ", " : "") << r[i];
            std::cout << "]\n";
        }
    }
    return 0;
}

int run_weyl(const CommonOpts& opts) {
    RootSystem rs = RootSystem::parse(opts.type);
    WeylGroup W = make_weyl(rs, opts);
    if (opts.json) {
        emit(weyl_group_to_json(W));
    } else {
        std::cout << rs.name() << ": |W| = " << W.size()
                  << ", longest length = " << W.max_length() << "\n";
    }
    return 0;
}

int run_diagonal(const CommonOpts& opts, const std::string& formula, bool do_verify) {
    RootSystem rs = RootSystem::parse(opts.type);
    WeylGroup W = make_weyl(rs, opts);
    DiagonalCandidate cand = build_candidate(opts.type, formula, &W);
    guard_terms(cand.poly, opts);
    if (!do_verify) {
        if (opts.json) {
            Json j;
            j["tool"] = kToolVersion;
            j["candidate"] = cand.source;
            j["system"] = cand.system.name();
            j["conventions"] = convention_block(cand.system);
            j["poly"] = poly_to_json(cand.poly);
            emit(j);
        } else {
            std::cout << cand.source << " (" << cand.system.name() << "): degree "
                      << cand.poly.degree() << ", " << cand.poly.term_count()
                      << " terms\n";
        }
        return 0;
    }
    VerificationReport rep = verify(cand, W);
    if (opts.json) {
        Json j = verification_report_to_json(rep);
        j["conventions"] = convention_block(cand.system);
        emit(j);
    } else {
        std::cout << cand.source << " (" << cand.system.name() << "):\n"
                  << "  diag_eval_constant = " << to_string(rep.diag_eval_constant)
                  << "\n  kronecker_ok = " << (rep.kronecker_ok ? "true" : "false")
                  << "\n  global_sign = " << rep.global_sign << "\n";
        for (const auto& m : rep.mismatches)
            std::cout << "  mismatch at (u=" << m.u << ", v=" << m.v << "): got "
                      << to_string(m.lhs) << ", expected " << to_string(m.rhs) << "\n";
    }
    return rep.kronecker_ok ? 0 : 1;
}

int run_torsion(const CommonOpts& opts, bool full) {
    RootSystem rs = RootSystem::parse(opts.type);
    WeylGroup W = make_weyl(rs, opts);
    TorsionReport rep = torsion_index(rs, W, full);
    if (opts.json) {
        Json j = torsion_report_to_json(rep, full);
        j["conventions"] = convention_block(rs);
        emit(j);
    } else {
        std::cout << rs.name() << ": torsion index = " << rep.gcd.get_str() << " ("
                  << rep.monomial_count << " degree-" << rep.top_degree
                  << " weight monomials)\n";
    }
    return 0;
}

int run_counterexample(const CommonOpts& opts) {
    Rat c = graham_counterexample();
    Rat half = c / 2;
    if (opts.json) {
        Json j;
        j["tool"] = kToolVersion;
        j["system"] = "G2";
        j["leading_coefficient"] = to_string(c);
        j["conjectured_class_coefficient"] = to_string(half);
        j["integral"] = is_integer(half);
        j["note"] = "leading coefficient at sigma_{s2 s1 s2}; s1 = short simple "
                    "reflection";
        emit(j);
    } else {
        std::cout << "leading coefficient of x1x2x3 + y1y2y3 at sigma_{s2 s1 s2}: "
                  << to_string(c) << "\n"
                  << "coefficient for the halved class: " << to_string(half) << "\n"
                  << (is_integer(half) ? "integral"
                                       : "non-integral: conjecture disproved")
                  << "\n";
    }
    return 0;
}

int run_bundle(const CommonOpts& opts, int n, const std::string& flags,
               const std::string& checks) {
    std::vector<int> d;
    if (!flags.empty()) {
        std::stringstream ss(flags);
        std::string tok;
        while (std::getline(ss, tok, ',')) d.push_back(std::stoi(tok));
    }
    FlagType flag = d.empty() ? FlagType::complete(n) : FlagType::make(n, d);
    bool ok = true;
    Json j;
    j["tool"] = kToolVersion;
    j["n"] = n;
    j["flags"] = flag.d;
    std::stringstream cs(checks);
    std::string check;
    while (std::getline(cs, check, ',')) {
        if (check == "rank") {
            long r = rank_h(flag);
            j["rank_H"] = r;
            if (!opts.json) std::cout << "rank(H) = " << r << "\n";
        } else if (check == "dim") {
            long closed = dim_flag(0, flag), tower = dim_flag_tower(0, flag);
            j["dim_flag"] = closed;
            j["dim_flag_tower"] = tower;
            if (closed != tower) ok = false;
            if (!opts.json)
                std::cout << "dim = " << closed << " (tower: " << tower << ")\n";
        } else if (check == "ctop") {
            long r = rank_h(flag);
            auto comps = chern_h({flag, static_cast<int>(r) + 2});
            const Poly& top = comps[r];
            guard_terms(top, opts);
            j["c_top"] = poly_to_json(top);
            // Everything above the rank must vanish.
            for (size_t deg = r + 1; deg < comps.size(); ++deg)
                if (!comps[deg].is_zero()) ok = false;
            if (!opts.json)
                std::cout << "c_top(H): " << top.term_count() << " terms, degree "
                          << top.degree() << "\n";
        } else {
            throw CLI::ValidationError("unknown check: " + check);
        }
    }
    j["ok"] = ok;
    if (opts.json) emit(j);
    return ok ? 0 : 1;
}

int run_expand(const CommonOpts& opts, const std::string& file) {
    RootSystem rs = RootSystem::parse(opts.type);
    WeylGroup W = make_weyl(rs, opts);
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open polynomial file: " + file);
    Json pj;
    try {
        in >> pj;
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("malformed polynomial file: ") + e.what());
    }
    Poly p = poly_from_json(pj);
    guard_terms(p, opts);
    if (!p.is_homogeneous())
        throw std::runtime_error("inhomogeneous input polynomial");
    int N = static_cast<int>(rs.positive_roots().size());
    if (p.degree() > (p.nvars() == rs.coord_dim() ? N : 2 * N))
        throw std::runtime_error("degree exceeds the top degree of the system");
    ClassExpansion ce = expand_class(rs, W, p);
    if (opts.json) {
        Json j = class_expansion_to_json(ce);
        j["conventions"] = convention_block(rs);
        emit(j);
    } else {
        std::cout << ce.system << ", degree " << ce.degree << ", "
                  << ce.entries.size() << " nonzero coefficients\n";
        for (const auto& e : ce.entries) {
            std::cout << "  u=[";
            for (size_t i = 0; i < e.u_word.size(); ++i)
                std::cout << (i ? " " : "") << e.u_word[i] + 1;
            std::cout << "]";
            if (e.has_v) {
                std::cout << " v=[";
                for (size_t i = 0; i < e.v_word.size(); ++i)
                    std::cout << (i ? " " : "") << e.v_word[i] + 1;
                std::cout << "]";
            }
            std::cout << " : " << to_string(e.coeff) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schubert-calculus engine: diagonal classes, torsion "
                 "indices, and flag-bundle Chern identities"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--cache-dir", opts.cache_dir,
                   "Weyl enumeration cache directory (or env SCHUB_CACHE_DIR)");
    app.add_option("--max-weyl", opts.max_weyl, "Weyl enumeration cap");
    app.add_option("--max-terms", opts.max_terms, "polynomial term cap");

    auto add_type = [&](CLI::App* sub, bool required = true) {
        auto* o = sub->add_option("--type", opts.type, "root system id, e.g. A3, C2, G2");
        if (required) o->required();
    };
    auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", opts.json, "emit a JSON certificate");
    };

    auto* roots = app.add_subcommand("roots", "print root-system data");
    add_type(roots);
    add_json(roots);

    auto* weyl = app.add_subcommand("weyl", "enumerate the Weyl group");
    add_type(weyl);
    add_json(weyl);

    auto* diagonal = app.add_subcommand("diagonal", "construct/verify a diagonal-class representative");
    add_type(diagonal);
    add_json(diagonal);
    std::string formula = "generic";
    bool do_verify = false;
    diagonal->add_option("--formula", formula,
                         "typeA|fultonC|deconciniC|deconciniD|grahamG2|prop29G2|deconciniG2|generic");
    diagonal->add_flag("--verify", do_verify, "run the full verification");

    auto* torsion = app.add_subcommand("torsion", "compute the torsion index");
    add_type(torsion);
    add_json(torsion);
    bool full = false;
    torsion->add_flag("--full", full, "include the full coefficient list");

    auto* counter = app.add_subcommand("counterexample", "G2 integrality counterexample");
    add_json(counter);
    std::string which = "g2";
    counter->add_option("system", which, "only 'g2' is meaningful");

    auto* bundle = app.add_subcommand("bundle", "flag-bundle dimension/rank/Chern checks");
    add_json(bundle);
    int n = 0;
    std::string flags, checks = "rank,dim";
    bundle->add_option("--n", n, "rank of E")->required();
    bundle->add_option("--flags", flags, "comma-separated d-list; d_k = n implied");
    bundle->add_option("--check", checks, "comma-separated subset of rank,dim,ctop");

    auto* expand = app.add_subcommand("expand", "Schubert-basis expansion of a polynomial file");
    add_type(expand);
    add_json(expand);
    std::string file;
    expand->add_option("--file", file, "polynomial JSON file")->required();

    try {
        app.parse(argc, argv);
        if (roots->parsed()) return run_roots(opts);
        if (weyl->parsed()) return run_weyl(opts);
        if (diagonal->parsed()) return run_diagonal(opts, formula, do_verify);
        if (torsion->parsed()) return run_torsion(opts, full);
        if (counter->parsed()) {
            if (which != "g2" && which != "G2")
                throw CLI::ValidationError("counterexample: only g2 is supported");
            return run_counterexample(opts);
        }
        if (bundle->parsed()) return run_bundle(opts, n, flags, checks);
        if (expand->parsed()) return run_expand(opts, file);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
