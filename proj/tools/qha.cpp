#include "qha/cache.hpp"
#include "qha/pipeline.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace qha;

int exit_code(ErrKind k) {
    switch (k) {
        case ErrKind::Parse: return 2;
        case ErrKind::Validation: return 3;
        case ErrKind::CapExceeded: return 4;
        case ErrKind::OracleBound: return 5;
        case ErrKind::OracleMismatch: return 6;
        default: return 1; // NoSolution / NonUnique / Internal: engine bugs
    }
}

struct GlobalOpts {
    bool json = false;
    std::string field;     // "" = input's own field
    int cap = 0;           // 0 = default
    std::string cache_dir; // resolved against QHA_CACHE_DIR
    std::string order;     // comma-separated arrow names
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace((unsigned char)c)) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

FieldSpec parse_field_spec(const std::string& s) {
    if (s == "Q") return FieldSpec{};
    if (s.size() > 1 && s[0] == 'F') {
        std::uint64_t p = 0;
        for (size_t i = 1; i < s.size(); ++i) {
            if (!std::isdigit((unsigned char)s[i]))
                fail(ErrKind::Validation, "bad field spec: " + s);
            p = p * 10 + (s[i] - '0');
        }
        return FieldSpec{FieldKind::Prime, p};
    }
    fail(ErrKind::Validation, "bad field spec: " + s + " (expected Q or F<p>)");
}

// family literal: lambda(p,q,k,s[,lam]) | gamma-star(n) |
// lambda-eta(p,q,k,s[,lam[,t]]) | gamma-eta2(n[,t])
std::optional<Presentation> parse_family_literal(const Field& f, const std::string& s) {
    auto lp = s.find('(');
    if (lp == std::string::npos || s.back() != ')') return std::nullopt;
    std::string name = s.substr(0, lp);
    if (name != "lambda" && name != "gamma-star" && name != "lambda-eta" &&
        name != "gamma-eta2")
        return std::nullopt;
    std::vector<std::string> args = split_commas(s.substr(lp + 1, s.size() - lp - 2));
    auto num = [&](size_t i) -> int {
        try {
            return std::stoi(args.at(i));
        } catch (...) {
            fail(ErrKind::Parse, "bad family argument: " + args.at(i));
        }
    };
    auto scalar = [&](size_t i, const char* dflt) {
        return f.parse(i < args.size() && !args[i].empty() ? args[i] : dflt);
    };
    if (name == "lambda") {
        if (args.size() < 4 || args.size() > 5)
            fail(ErrKind::Parse, "lambda(p,q,k,s[,lam]) takes 4 or 5 arguments");
        return build_lambda_family(f, num(0), num(1), num(2), num(3), scalar(4, "1")).pres;
    }
    if (name == "gamma-star") {
        if (args.size() != 1) fail(ErrKind::Parse, "gamma-star(n) takes 1 argument");
        return build_gamma_star(f, num(0)).pres;
    }
    if (name == "lambda-eta") {
        if (args.size() < 4 || args.size() > 6)
            fail(ErrKind::Parse, "lambda-eta(p,q,k,s[,lam[,t]]) takes 4 to 6 arguments");
        return build_lambda_eta(f, num(0), num(1), num(2), num(3), scalar(4, "1"),
                                scalar(5, "1"))
            .pres;
    }
    if (args.size() < 1 || args.size() > 2)
        fail(ErrKind::Parse, "gamma-eta2(n[,t]) takes 1 or 2 arguments");
    return build_gamma_eta2(f, num(0), scalar(1, "1")).pres;
}

// <file|family>: an existing file is parsed as DSL; otherwise the argument
// must be a family literal.
Presentation load_input(const std::string& src, const GlobalOpts& g) {
    std::optional<Presentation> pres;
    if (std::filesystem::exists(src)) {
        std::ifstream in(src);
        std::ostringstream text;
        text << in.rdbuf();
        pres = parse_presentation(text.str());
        if (!g.field.empty() && parse_field_spec(g.field) != pres->field.spec()) {
            // re-read the canonical text under the requested field
            std::string canon = print_presentation(*pres);
            auto nl = canon.find('\n');
            pres = parse_presentation("field " + g.field + canon.substr(nl));
        }
    } else {
        Field f(g.field.empty() ? FieldSpec{} : parse_field_spec(g.field));
        pres = parse_family_literal(f, src);
        if (!pres)
            fail(ErrKind::Parse, src + ": no such file and not a family literal");
    }
    if (!g.order.empty()) pres = permute_arrows(*pres, split_commas(g.order));
    return std::move(*pres);
}

PipelineOptions pipeline_options(const GlobalOpts& g) {
    PipelineOptions opt;
    opt.cap = g.cap;
    opt.cache_dir = g.cache_dir;
    if (opt.cache_dir.empty())
        if (const char* env = std::getenv("QHA_CACHE_DIR")) opt.cache_dir = env;
    return opt;
}

void print_report(const Report& r, bool json) { std::cout << (json ? r.json : r.text); }

int degree_of(const std::string& s) {
    if (s == "all") return 3;
    if (s == "0" || s == "1" || s == "2") return s[0] - '0';
    fail(ErrKind::Validation, "bad degree: " + s + " (expected 0, 1, 2 or all)");
}

Presentation family_pres(const FamilyPresentation& fp, const GlobalOpts& g) {
    if (g.order.empty()) return fp.pres;
    return permute_arrows(fp.pres, split_commas(g.order));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild cohomology of bound quiver algebras"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "emit JSON reports");
    app.add_option("--field", g.field, "field override: Q or F<p>");
    app.add_option("--cap", g.cap, "completion cap (path length)");
    app.add_option("--cache-dir", g.cache_dir, "cache directory (default $QHA_CACHE_DIR)");
    app.add_option("--order", g.order, "comma-separated arrow declaration order");
    // global flags may appear after the subcommand; set before add_subcommand
    // so the subcommands inherit it
    app.fallthrough();

    std::string input, degree = "all";
    auto* compute = app.add_subcommand("compute", "full pipeline on a presentation");
    compute->add_option("input", input, "DSL file or family literal")->required();
    compute->add_option("--degree", degree, "report degree: 0, 1, 2 or all");

    auto* family = app.add_subcommand("family", "build and analyze a named algebra family");
    family->require_subcommand(1);
    int fp_ = 0, fq = 0, fk = 0, fs = 0, fn = 0;
    std::string flam = "1", ft = "1";
    bool emit_dsl = false;
    auto* fam_lambda = family->add_subcommand("lambda", "self-injective family");
    fam_lambda->add_option("--p", fp_)->required();
    fam_lambda->add_option("--q", fq)->required();
    fam_lambda->add_option("--k", fk)->required();
    fam_lambda->add_option("--s", fs)->required();
    fam_lambda->add_option("--lam", flam, "socle scalar (default 1)");
    fam_lambda->add_flag("--emit-dsl", emit_dsl, "print canonical DSL instead of computing");
    fam_lambda->add_option("--degree", degree);
    auto* fam_gamma = family->add_subcommand("gamma-star", "beta-cycle family");
    fam_gamma->add_option("--n", fn)->required();
    fam_gamma->add_flag("--emit-dsl", emit_dsl);
    fam_gamma->add_option("--degree", degree);

    auto* deform = app.add_subcommand("deform", "compare a family against its deformation");
    deform->require_subcommand(1);
    auto* def_lambda = deform->add_subcommand("lambda-eta", "socle deformation");
    def_lambda->add_option("--p", fp_)->required();
    def_lambda->add_option("--q", fq)->required();
    def_lambda->add_option("--k", fk)->required();
    def_lambda->add_option("--s", fs)->required();
    def_lambda->add_option("--lam", flam);
    def_lambda->add_option("--t", ft, "deformation parameter (default 1)");
    auto* def_gamma = deform->add_subcommand("gamma-eta2", "cycle deformation");
    def_gamma->add_option("--n", fn)->required();
    def_gamma->add_option("--t", ft);

    std::string oracle_input;
    int oracle_bound = 12;
    auto* oracle = app.add_subcommand("oracle", "cross-check against the bar complex");
    oracle->add_option("input", oracle_input, "DSL file or family literal")->required();
    oracle->add_option("--oracle-bound", oracle_bound, "max dim Lambda (default 12)");

    std::string dims_input;
    auto* dims = app.add_subcommand("dims", "per-vertex dimension report");
    dims->add_option("input", dims_input, "DSL file or family literal")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(compute)) {
            auto r = compute_all(load_input(input, g), pipeline_options(g));
            print_report(report_compute(r, degree_of(degree)), g.json);
            return 0;
        }
        if (app.got_subcommand(family)) {
            Field f(g.field.empty() ? FieldSpec{} : parse_field_spec(g.field));
            FamilyPresentation fp =
                family->got_subcommand(fam_lambda)
                    ? build_lambda_family(f, fp_, fq, fk, fs, f.parse(flam))
                    : build_gamma_star(f, fn);
            if (emit_dsl) {
                std::cout << print_presentation(fp.pres);
                return 0;
            }
            auto r = compute_all(family_pres(fp, g), pipeline_options(g));
            print_report(report_compute(r, degree_of(degree)), g.json);
            return 0;
        }
        if (app.got_subcommand(deform)) {
            Field f(g.field.empty() ? FieldSpec{} : parse_field_spec(g.field));
            FamilyPresentation base, def;
            if (deform->got_subcommand(def_lambda)) {
                base = build_lambda_family(f, fp_, fq, fk, fs, f.parse(flam));
                def = build_lambda_eta(f, fp_, fq, fk, fs, f.parse(flam), f.parse(ft));
            } else {
                base = build_gamma_star(f, fn);
                def = build_gamma_eta2(f, fn, f.parse(ft));
            }
            GBOptions gopt;
            gopt.cap = g.cap;
            Groebner gb_base = buchberger(base.pres, gopt);
            Groebner gb_def = buchberger(def.pres, gopt);
            print_report(report_deform(base.pres, enumerate_basis(gb_base), def.pres,
                                       enumerate_basis(gb_def)),
                         g.json);
            return 0;
        }
        if (app.got_subcommand(oracle)) {
            auto r = compute_all(load_input(oracle_input, g), pipeline_options(g));
            OracleComparison cmp = report_oracle(r, oracle_bound);
            print_report(cmp.report, g.json);
            return cmp.match ? 0 : 6;
        }
        if (app.got_subcommand(dims)) {
            Presentation pres = load_input(dims_input, g);
            GBOptions gopt;
            gopt.cap = g.cap;
            if (gopt.cap != 0 && gopt.cap < 2)
                fail(ErrKind::Validation, "cap must be at least 2");
            Groebner gb = buchberger(pres, gopt);
            print_report(report_dims(pres, enumerate_basis(gb)), g.json);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
