#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqlc/factor.hpp"
#include "fqlc/fields.hpp"
#include "fqlc/frobenius.hpp"
#include "fqlc/sequences.hpp"
#include "fqlc/subfield.hpp"
#include "fqlc/textio.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::uint64_t characteristic = 0;
    std::optional<std::string> base_poly, ext_poly;
    std::optional<int> base_deg, ext_deg;
    std::string poly, h_poly, seq;
    std::vector<std::string> components;
    std::optional<int> m;
    int trials = 20;
    std::uint64_t seed = 0;
    std::uint64_t cap = 1000000;
    std::string level = "top";
    bool as_json = false;
};

// tower construction with diagnostics that name the offending flag
fqlc::TowerPtr make_tower(const Options& opt) {
    using namespace fqlc;
    require(!(opt.base_poly && opt.base_deg), ErrorCode::BadInput, "--base-poly and --base-deg are exclusive");
    require(!(opt.ext_poly && opt.ext_deg), ErrorCode::BadInput, "--ext-poly and --ext-deg are exclusive");
    std::optional<std::string> base_text = opt.base_poly;
    try {
        if (opt.base_deg) {
            TowerPtr prime_field = FieldTower::build(opt.characteristic, std::nullopt, std::nullopt);
            base_text = format_poly(default_modulus(prime_field, Level::Base, *opt.base_deg), 't');
        }
    } catch (const Error& e) {
        raise(e.code(), std::string("--base-deg: ") + e.message());
    }
    std::optional<std::string> ext_text = opt.ext_poly;
    try {
        if (opt.ext_deg) {
            TowerPtr base_field = build_tower_text(opt.characteristic, base_text, std::nullopt);
            ext_text = format_poly(default_modulus(base_field, Level::Base, *opt.ext_deg), 'a');
        }
    } catch (const Error& e) {
        raise(e.code(), std::string("--ext-deg: ") + e.message());
    }
    try {
        return build_tower_text(opt.characteristic, base_text, ext_text);
    } catch (const Error& e) {
        const char* flag = "--char";
        std::string what = e.message();
        if (what.find("base modulus") != std::string::npos) flag = "--base-poly";
        if (what.find("extension modulus") != std::string::npos) flag = "--ext-poly";
        raise(e.code(), std::string(flag) + ": " + what);
    }
}

fqlc::Level pick_level(const Options& opt, const fqlc::TowerPtr& tower) {
    if (opt.level == "top") return tower->top_level();
    if (opt.level == "base") return fqlc::Level::Base;
    if (opt.level == "ext") {
        fqlc::require(tower->has_ext_modulus(), fqlc::ErrorCode::BadInput,
                      "--level ext requires an extension modulus");
        return fqlc::Level::Ext;
    }
    fqlc::raise(fqlc::ErrorCode::BadInput, "--level must be base, ext or top");
}

json orbit_json(const fqlc::SigmaOrbit& orb, const fqlc::Poly& product) {
    json members = json::array();
    for (const auto& member : orb.members) members.push_back(fqlc::format_poly(member));
    return json{{"k", orb.k}, {"members", members}, {"R", fqlc::format_poly(product)}};
}

void print_orbit_text(std::ostream& os, const fqlc::SigmaOrbit& orb, const fqlc::Poly& product) {
    os << "k = " << orb.k << "\n";
    os << "members = ";
    for (std::size_t i = 0; i < orb.members.size(); ++i)
        os << (i ? ", " : "") << fqlc::format_poly(orb.members[i]);
    os << "\n";
    os << "R = " << fqlc::format_poly(product) << "\n";
}

int run(const Options& opt, const std::string& command) {
    using namespace fqlc;
    TowerPtr tower = make_tower(opt);
    std::ostream& os = std::cout;

    if (command == "factor") {
        Poly f = parse_poly(opt.poly, tower, pick_level(opt, tower));
        Factorization fz = factor_canonical(f);
        if (opt.as_json) {
            json factors = json::array();
            for (const auto& [factor, mult] : fz.factors)
                factors.push_back(json{{"poly", format_poly(factor)}, {"mult", mult}});
            os << json{{"unit", format_element(fz.unit)}, {"factors", factors}}.dump(2) << "\n";
        } else {
            os << format_factorization(fz) << "\n";
        }
        return 0;
    }

    if (command == "orbit") {
        Poly f = parse_poly(opt.poly, tower, tower->top_level());
        SigmaOrbit orb = orbit(make_monic(f));
        Poly product = orbit_product(orb.representative);
        if (opt.as_json)
            os << orbit_json(orb, product).dump(2) << "\n";
        else
            print_orbit_text(os, orb, product);
        return 0;
    }

    if (command == "extfactor") {
        Poly f = parse_poly(opt.poly, tower, Level::Base);
        SigmaOrbit orb = factor_over_extension(f);
        if (opt.as_json)
            os << orbit_json(orb, f).dump(2) << "\n";
        else
            print_orbit_text(os, orb, f);
        return 0;
    }

    if (command == "subfield-minpoly") {
        Poly h = parse_poly(opt.poly, tower, tower->top_level());
        SubfieldResult result = min_poly_over_base(h);
        if (opt.as_json) {
            json classes = json::array();
            for (const auto& row : result.classes) {
                json members = json::array(), exps = json::array();
                for (const auto& member : row.members) members.push_back(format_poly(member));
                for (int e : row.exponents) exps.push_back(e);
                classes.push_back(json{{"representative", format_poly(row.representative)},
                                       {"k", row.k},
                                       {"deg", row.deg},
                                       {"members", members},
                                       {"exponents", exps},
                                       {"e", row.e},
                                       {"R", format_poly(row.orbit_prod)}});
            }
            os << json{{"H", format_poly(result.H)}, {"L", result.L}, {"classes", classes}}.dump(2) << "\n";
        } else {
            os << "H = " << format_poly(result.H) << "\n";
            os << "L = " << result.L << "\n";
            for (std::size_t j = 0; j < result.classes.size(); ++j) {
                const auto& row = result.classes[j];
                os << "class " << j + 1 << ": representative = " << format_poly(row.representative)
                   << ", k = " << row.k << ", deg = " << row.deg << ", e = " << row.e << ", exponents = [";
                for (std::size_t v = 0; v < row.exponents.size(); ++v) os << (v ? ", " : "") << row.exponents[v];
                os << "], R = " << format_poly(row.orbit_prod) << "\n";
            }
        }
        return 0;
    }

    if (command == "lc") {
        Poly h = parse_poly(opt.poly, tower, tower->top_level());
        int complexity = linear_complexity_over_base(h);
        if (opt.as_json)
            os << json{{"L", complexity}}.dump(2) << "\n";
        else
            os << "L = " << complexity << "\n";
        return 0;
    }

    if (command == "bound") {
        Poly f = parse_poly(opt.poly, tower, Level::Base);
        int m = tower->has_ext_modulus() ? tower->ext_degree() : 0;
        if (opt.m) {
            require(m == 0 || m == *opt.m, ErrorCode::BadInput, "--m conflicts with the extension modulus");
            m = *opt.m;
        }
        require(m >= 1, ErrorCode::MissingFlag, "--m (or an extension modulus) is required");
        if (!opt.h_poly.empty()) {
            require(tower->has_ext_modulus(), ErrorCode::MissingFlag, "--h requires an extension modulus");
            Poly h = parse_poly(opt.h_poly, tower, tower->top_level());
            BoundReport report = bound_tightness(f, h);
            if (opt.as_json) {
                json out{{"bound", report.bound}, {"tight", *report.tight}};
                if (*report.tight) {
                    json witness = json::array();
                    for (const auto& [member, e] : report.witness)
                        witness.push_back(json{{"poly", format_poly(member)}, {"e", e}});
                    out["witness"] = witness;
                }
                os << out.dump(2) << "\n";
            } else {
                os << "bound = " << report.bound << "\n";
                os << "tight = " << (*report.tight ? "true" : "false") << "\n";
                if (*report.tight) {
                    os << "witness = ";
                    for (std::size_t i = 0; i < report.witness.size(); ++i)
                        os << (i ? " * " : "") << "(" << format_poly(report.witness[i].first) << ")^"
                           << report.witness[i].second;
                    os << "\n";
                }
            }
        } else {
            BoundReport report = mo_lower_bound(f, m);
            if (opt.as_json)
                os << json{{"bound", report.bound}}.dump(2) << "\n";
            else
                os << "bound = " << report.bound << "\n";
        }
        return 0;
    }

    if (command == "enumerate-h") {
        Poly f = parse_poly(opt.poly, tower, Level::Base);
        std::vector<Poly> all = enumerate_admissible_h(f, opt.cap);
        if (opt.as_json) {
            json polys = json::array();
            for (const auto& h : all) polys.push_back(format_poly(h));
            os << json{{"f", format_poly(f)}, {"count", all.size()}, {"h", polys}}.dump(2) << "\n";
        } else {
            for (const auto& h : all) os << format_poly(h) << "\n";
        }
        return 0;
    }

    if (command == "bm") {
        Sequence seq = parse_sequence(opt.seq, tower, pick_level(opt, tower));
        Poly minpoly = berlekamp_massey(seq);
        int complexity = minpoly.degree();
        if (opt.as_json)
            os << json{{"minpoly", format_poly(minpoly)}, {"L", complexity}}.dump(2) << "\n";
        else
            os << "minpoly = " << format_poly(minpoly) << "\n"
               << "L = " << complexity << "\n";
        return 0;
    }

    if (command == "joint-bm") {
        MultiSequence ms;
        if (!opt.components.empty()) {
            for (const auto& text : opt.components)
                ms.components.push_back(parse_sequence(text, tower, Level::Base));
        } else {
            require(!opt.seq.empty(), ErrorCode::MissingFlag, "--seq or --component is required");
            ms = decompose_to_base(parse_sequence(opt.seq, tower, tower->top_level()));
        }
        Poly minpoly = joint_min_poly(ms);
        int complexity = minpoly.is_zero() ? 0 : minpoly.degree();
        if (opt.as_json)
            os << json{{"minpoly", format_poly(minpoly)}, {"L", complexity}}.dump(2) << "\n";
        else
            os << "minpoly = " << format_poly(minpoly) << "\n"
               << "L = " << complexity << "\n";
        return 0;
    }

    if (command == "verify") {
        Poly h = parse_poly(opt.poly, tower, tower->top_level());
        VerifyReport report = verify_subfield_minpoly(h, opt.trials, opt.seed);
        if (opt.as_json) {
            json details = json::array();
            for (const auto& mismatch : report.mismatches)
                details.push_back(json{{"trial", mismatch.trial},
                                       {"measured_h", format_poly(mismatch.measured_h)},
                                       {"theory_H", format_poly(mismatch.theory_H)},
                                       {"oracle_H", format_poly(mismatch.oracle_H)}});
            os << json{{"h", format_poly(h)},
                       {"trials", report.trials},
                       {"mismatches", report.mismatches.size()},
                       {"exact_minpoly_matches", report.minpoly_exact_matches},
                       {"details", details}}
                      .dump(2)
               << "\n";
        } else {
            os << "trials = " << report.trials << "\n";
            os << "mismatches = " << report.mismatches.size() << "\n";
            os << "exact_minpoly_matches = " << report.minpoly_exact_matches << "\n";
            for (const auto& mismatch : report.mismatches)
                os << "mismatch at trial " << mismatch.trial << ": measured h = "
                   << format_poly(mismatch.measured_h) << ", theory H = " << format_poly(mismatch.theory_H)
                   << ", oracle H = " << format_poly(mismatch.oracle_H) << "\n";
        }
        return report.ok() ? 0 : 1;
    }

    fqlc::raise(fqlc::ErrorCode::BadInput, "unknown subcommand");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal polynomials and linear complexity of linear recurring sequences over subfields"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.as_json, "emit canonical JSON instead of text");

    auto add_tower_flags = [&](CLI::App* sub) {
        sub->add_option("--char", opt.characteristic, "field characteristic p (prime)")->required();
        sub->add_option("--base-poly", [&opt](const std::vector<std::string>& v) {
            opt.base_poly = v.at(0);
            return true;
        }, "base modulus over F_p, in t (defines F_q)");
        sub->add_option("--base-deg", [&opt](const std::vector<std::string>& v) {
            opt.base_deg = std::stoi(v.at(0));
            return true;
        }, "use the default base modulus of this degree");
        sub->add_option("--ext-poly", [&opt](const std::vector<std::string>& v) {
            opt.ext_poly = v.at(0);
            return true;
        }, "extension modulus over F_q, in a (defines F_{q^m})");
        sub->add_option("--ext-deg", [&opt](const std::vector<std::string>& v) {
            opt.ext_deg = std::stoi(v.at(0));
            return true;
        }, "use the default extension modulus of this degree");
    };

    auto* factor = app.add_subcommand("factor", "canonical factorization into monic irreducibles");
    factor->add_option("--poly", opt.poly, "polynomial to factor")->required();
    factor->add_option("--level", opt.level, "parse the polynomial at this level (base|ext|top)");

    auto* orbit_cmd = app.add_subcommand("orbit", "sigma-orbit and orbit product of an irreducible");
    orbit_cmd->add_option("--poly", opt.poly, "monic irreducible at the top level")->required();

    auto* extfactor = app.add_subcommand("extfactor", "factor a base-field irreducible over the extension");
    extfactor->add_option("--poly", opt.poly, "monic irreducible over F_q")->required();

    auto* subfield = app.add_subcommand("subfield-minpoly", "minimal polynomial over F_q from h over F_{q^m}");
    subfield->add_option("--poly", opt.poly, "minimal polynomial h over F_{q^m}")->required();

    auto* lc_cmd = app.add_subcommand("lc", "linear complexity over F_q from h over F_{q^m}");
    lc_cmd->add_option("--poly", opt.poly, "minimal polynomial h over F_{q^m}")->required();

    auto* bound = app.add_subcommand("bound", "lower bound on the linear complexity over F_{q^m}");
    bound->add_option("--poly", opt.poly, "minimal polynomial f over F_q")->required();
    bound->add_option("--m", [&opt](const std::vector<std::string>& v) {
        opt.m = std::stoi(v.at(0));
        return true;
    }, "extension degree m (when no extension modulus is given)");
    bound->add_option("--h", opt.h_poly, "evaluate tightness against this h over F_{q^m}");

    auto* enum_h = app.add_subcommand("enumerate-h", "all admissible minimal polynomials over F_{q^m}");
    enum_h->add_option("--poly", opt.poly, "minimal polynomial f over F_q")->required();
    enum_h->add_option("--cap", opt.cap, "enumeration cap (default 10^6)");

    auto* bm = app.add_subcommand("bm", "Berlekamp-Massey minimal polynomial of a sequence prefix");
    bm->add_option("--seq", opt.seq, "comma-separated terms")->required();
    bm->add_option("--level", opt.level, "parse the sequence at this level (base|ext|top)");

    auto* joint = app.add_subcommand("joint-bm", "joint minimal polynomial of a multisequence");
    joint->add_option("--seq", opt.seq, "top-level sequence to decompose");
    joint->add_option("--component", opt.components, "base-level component (repeatable)");

    auto* verify = app.add_subcommand("verify", "differential check against the joint-BM oracle");
    verify->add_option("--poly", opt.poly, "characteristic polynomial h over F_{q^m}")->required();
    verify->add_option("--trials", opt.trials, "number of random trials (default 20)");
    verify->add_option("--seed", opt.seed, "RNG seed (default 0; the canonical CI run)");

    for (auto* sub : {factor, orbit_cmd, extfactor, subfield, lc_cmd, bound, enum_h, bm, joint, verify})
        add_tower_flags(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::RequiredError& e) {
        std::cerr << "error[MissingFlag]: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error[BadInput]: " << e.what() << "\n";
        return 2;
    }

    try {
        return run(opt, app.get_subcommands().at(0)->get_name());
    } catch (const fqlc::Error& e) {
        std::cerr << "error[" << fqlc::error_code_name(e.code()) << "]: " << e.message() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error[Internal]: " << e.what() << "\n";
        return 2;
    }
}
