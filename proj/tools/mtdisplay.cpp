// Command-line front end. Exit codes: 0 success, 1 refuted or failed check,
// 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mtd/calculus.hpp"
#include "mtd/classifier.hpp"
#include "mtd/correspondence.hpp"
#include "mtd/soundness.hpp"
#include "mtd/text_io.hpp"
#include "mtd/translation.hpp"

namespace {

using namespace mtd;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Output { Text, Lines };

struct RunConfig {
    std::vector<std::string> inputs;
    std::string valuation_path;
    bool strict_monotone = false;
    Output output = Output::Text;
    std::string axiom;
    std::size_t max_size = 3;
    std::string kind;
    std::string cs_variant = "theorem";
    std::string calc;
    std::string ext;
    int depth = 6;
    bool allow_cut = false;
    std::string rule;
    std::size_t nx = 2;
    std::size_t ny = 3;
    std::size_t worlds = 2;
    unsigned threads = 0;
};

// Text of the most recently read input, for locating parse errors.
std::string last_input;

// Path "-" reads stdin.
std::string slurp(const std::string& path) {
    if (path == "-") return last_input = std::string{std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    return last_input = std::string{std::istreambuf_iterator<char>(in), {}};
}

// Which kind of object a file holds, judged by its head token.
std::string head_of(const SExpr& e) {
    if (e.is_list && !e.items.empty() && !e.items.front().is_list) return e.items.front().atom;
    return e.is_list ? "" : e.atom;
}

std::set<AxiomId> parse_extensions(const std::string& text) {
    std::set<AxiomId> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) continue;
        auto a = parse_axiom(item);
        if (!a) throw UsageError("unknown axiom '" + item + "'");
        out.insert(*a);
    }
    return out;
}

AxiomId require_axiom(const std::string& name) {
    auto a = parse_axiom(name);
    if (!a) throw UsageError("unknown axiom '" + name + "'");
    return *a;
}

Calculus require_calculus(const std::string& name) {
    auto c = parse_calculus(name);
    if (!c) throw UsageError("unknown calculus '" + name + "' (expected dmt-nabla or dmt-cond)");
    return *c;
}

// The calculus implied by the extensions when --calc is absent.
Calculus calculus_for(const RunConfig& cfg, const std::set<AxiomId>& ext) {
    if (!cfg.calc.empty()) return require_calculus(cfg.calc);
    for (AxiomId a : ext)
        if (is_conditional(a)) return Calculus::Cond;
    return Calculus::Nabla;
}

int cmd_parse(const RunConfig& cfg) {
    const std::string text = slurp(cfg.inputs.at(0));
    const std::string head = head_of(parse_sexpr(text));
    if (head == "nframe" || head == "cframe" || head == "kframe") {
        auto parsed = parse_frame(text, cfg.strict_monotone);
        for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
        std::cout << print_frame(parsed.frame) << '\n';
    } else if (head == "rule") {
        std::cout << print_proof(parse_proof(text)) << '\n';
    } else if (head == "leq") {
        std::cout << print_inequality(parse_inequality(text)) << '\n';
    } else if (head == "seq") {
        try {
            std::cout << print_sequent(parse_sequent(text)) << '\n';
        } catch (const SortParseError&) {
            throw;
        } catch (const ParseError&) {
            std::cout << print_st_sequent(parse_st_sequent(text)) << '\n';
        }
    } else if (head == "valuation") {
        std::cout << print_valuation(parse_valuation(text)) << '\n';
    } else {
        std::cout << print_formula(parse_formula(text)) << '\n';
    }
    return kOk;
}

MTFormula translate_formula(const STFormula& f) {
    return language_of(f) == STLanguage::Cond ? tau_cond(f) : tau1(f);
}

int cmd_translate(const RunConfig& cfg) {
    const std::string text = slurp(cfg.inputs.at(0));
    if (head_of(parse_sexpr(text)) == "seq") {
        const STSequent s = parse_st_sequent(text);
        const Inequality q = translate_sequent(s.lhs, s.rhs);
        std::cout << print_sequent(Sequent{Structure::formula(q.lhs), Structure::formula(q.rhs)}) << '\n';
    } else {
        std::cout << print_formula(translate_formula(parse_st_formula(text))) << '\n';
    }
    return kOk;
}

AnyFrame load_frame(const RunConfig& cfg, const std::string& path) {
    auto parsed = parse_frame(slurp(path), cfg.strict_monotone);
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
    return parsed.frame;
}

int cmd_eval(const RunConfig& cfg) {
    const AnyFrame frame = load_frame(cfg, cfg.inputs.at(0));
    const std::string text = slurp(cfg.inputs.at(1));
    const Valuation v = cfg.valuation_path.empty() ? Valuation{} : parse_valuation(slurp(cfg.valuation_path));
    Subset result = 0;
    if (const auto* k = std::get_if<TwoSortedFrame>(&frame)) {
        result = eval_mt(*k, v, parse_mt_formula(text));
    } else {
        const STFormula phi = parse_st_formula(text);
        result = std::visit(
            [&](const auto& f) -> Subset {
                if constexpr (std::is_same_v<std::decay_t<decltype(f)>, TwoSortedFrame>) return 0;
                else return eval_st(f, v, phi);
            },
            frame);
    }
    std::cout << print_subset(result) << '\n';
    return kOk;
}

int cmd_valid(const RunConfig& cfg) {
    const AnyFrame frame = load_frame(cfg, cfg.inputs.at(0));
    const std::string text = slurp(cfg.inputs.at(1));
    bool ok = false;
    if (const auto* k = std::get_if<TwoSortedFrame>(&frame)) {
        const std::string head = head_of(parse_sexpr(text));
        const Inequality q = (head == "leq" || head == "seq") ? parse_inequality(text)
                                                              : Inequality(mt::top(), parse_mt_formula(text));
        const auto counter = refute(*k, q);
        ok = !counter;
        if (counter) std::cout << "refuted " << print_valuation(*counter) << '\n';
    } else {
        const STSequent s = parse_st_sequent(text);
        ok = std::visit(
            [&](const auto& f) -> bool {
                if constexpr (std::is_same_v<std::decay_t<decltype(f)>, TwoSortedFrame>) return false;
                else return valid(f, s.lhs, s.rhs);
            },
            frame);
        if (!ok) std::cout << "refuted\n";
    }
    if (ok) std::cout << "valid\n";
    return ok ? kOk : kFailed;
}

int cmd_star(const RunConfig& cfg) {
    const AnyFrame frame = load_frame(cfg, cfg.inputs.at(0));
    if (const auto* f = std::get_if<NFrame>(&frame)) std::cout << print_frame(star(*f)) << '\n';
    else if (const auto* c = std::get_if<CFrame>(&frame)) std::cout << print_frame(star(*c)) << '\n';
    else throw UsageError("star expects an nframe or cframe");
    return kOk;
}

int cmd_unstar(const RunConfig& cfg) {
    const AnyFrame frame = load_frame(cfg, cfg.inputs.at(0));
    const auto* k = std::get_if<TwoSortedFrame>(&frame);
    if (!k) throw UsageError("unstar expects a kframe");
    if (k->kind() == FrameKind::Neighbourhood) std::cout << print_frame(unstar_neighbourhood(*k)) << '\n';
    else std::cout << print_frame(unstar_conditional(*k)) << '\n';
    return kOk;
}

int cmd_supported(const RunConfig& cfg) {
    const AnyFrame frame = load_frame(cfg, cfg.inputs.at(0));
    const auto* k = std::get_if<TwoSortedFrame>(&frame);
    if (!k) throw UsageError("supported expects a kframe");
    const bool ok = is_supported(*k);
    std::cout << (ok ? "supported" : "not supported") << '\n';
    return ok ? kOk : kFailed;
}

void print_mismatches(const std::vector<Mismatch>& ms, Output out, const char* tag) {
    for (const auto& m : ms) {
        if (out == Output::Lines)
            std::cout << tag << '\t' << m.frame_id << '\t' << m.axiom_valid << '\t' << m.condition_holds << '\n';
        else
            std::cout << "  " << tag << " frame " << m.frame_id << ": axiom " << (m.axiom_valid ? "valid" : "invalid")
                      << ", condition " << (m.condition_holds ? "holds" : "fails") << "  " << m.frame << '\n';
    }
}

int cmd_verify(const RunConfig& cfg) {
    const AxiomId a = require_axiom(cfg.axiom);
    if (!cfg.kind.empty()) {
        if (cfg.kind != "n" && cfg.kind != "c") throw UsageError("--kind must be n or c");
        if ((cfg.kind == "c") != is_conditional(a))
            throw UsageError(std::string("axiom ") + to_string(a) + " is not checked on " + cfg.kind + "-frames");
    }
    if (cfg.cs_variant != "theorem" && cfg.cs_variant != "guarded")
        throw UsageError("--cs-variant must be theorem or guarded");
    if (is_conditional(a) ? cfg.max_size > 2 : cfg.max_size > 6)
        throw UsageError("--max-size too large for exhaustive enumeration");
    const auto report = verify_correspondence(a, cfg.max_size, cfg.threads);
    const bool guarded = cfg.cs_variant == "guarded" && report.guarded_mismatches;
    const auto& mismatches = guarded ? *report.guarded_mismatches : report.mismatches;
    if (cfg.output == Output::Lines) {
        for (std::size_t n = 1; n < report.frames_per_size.size(); ++n)
            std::cout << "size\t" << n << '\t' << report.frames_per_size[n] << '\n';
        std::cout << "total\t" << report.frames_checked << '\t' << mismatches.size() << '\n';
        print_mismatches(mismatches, cfg.output, "mismatch");
    } else {
        std::cout << report.frames_checked << " frames, " << mismatches.size() << " mismatches\n";
        for (std::size_t n = 1; n < report.frames_per_size.size(); ++n)
            std::cout << "  |W|=" << n << ": " << report.frames_per_size[n] << " frames\n";
        print_mismatches(mismatches, cfg.output, "mismatch");
        if (report.guarded_mismatches && !guarded)
            std::cout << "  guarded condition: " << report.guarded_mismatches->size() << " mismatches\n";
    }
    return mismatches.empty() ? kOk : kFailed;
}

std::string eps_list(const OrderType& eps) {
    std::string s;
    for (const auto& [v, pos] : eps.entries()) s += (s.empty() ? "" : " ") + v.name() + (pos ? ":+" : ":d");
    return s;
}

std::string omega_list(const DependencyOrder& omega) {
    std::string s;
    for (const auto& [lo, hi] : omega.edges()) s += (s.empty() ? "" : " ") + lo.name() + "<" + hi.name();
    return s;
}

int cmd_classify(const RunConfig& cfg) {
    const Inequality q = parse_inequality(slurp(cfg.inputs.at(0)));
    const auto r = is_analytic_inductive(q);
    if (cfg.output == Output::Lines) {
        std::cout << (r.analytic ? "analytic" : "not-analytic");
        if (r.analytic) std::cout << '\t' << eps_list(*r.epsilon) << '\t' << omega_list(*r.omega);
        else std::cout << '\t' << r.failure.value_or("");
        std::cout << '\n';
    } else if (r.analytic) {
        std::cout << "analytic inductive\n  eps: " << eps_list(*r.epsilon) << "\n  omega: " << omega_list(*r.omega)
                  << '\n';
    } else {
        std::cout << "not analytic\n  " << r.failure.value_or("") << '\n';
    }
    return r.analytic ? kOk : kFailed;
}

std::string path_text(const std::vector<std::size_t>& path) {
    std::string s = "root";
    for (auto i : path) s += "." + std::to_string(i);
    return s;
}

int cmd_check_proof(const RunConfig& cfg) {
    const auto ext = parse_extensions(cfg.ext);
    const Calculus calc = calculus_for(cfg, ext);
    const ProofTree p = parse_proof(slurp(cfg.inputs.at(0)));
    const auto err = check_proof(p, calc, ext);
    if (err) {
        if (cfg.output == Output::Lines)
            std::cout << "error\t" << path_text(err->path) << '\t' << err->rule << '\t' << err->reason << '\n';
        else
            std::cout << "proof rejected at " << path_text(err->path) << " (" << err->rule << "): " << err->reason
                      << '\n';
        return kFailed;
    }
    if (cfg.output == Output::Lines) std::cout << "ok\t" << node_count(p) << '\n';
    else std::cout << "proof accepted (" << node_count(p) << " nodes, " << to_string(calc) << ")\n";
    return kOk;
}

int cmd_search_proof(const RunConfig& cfg) {
    const auto ext = parse_extensions(cfg.ext);
    const Calculus calc = calculus_for(cfg, ext);
    const Sequent goal = parse_sequent(slurp(cfg.inputs.at(0)));
    const auto proof = search_proof(goal, calc, ext, {cfg.depth, cfg.allow_cut});
    if (!proof) {
        std::cout << "no proof within depth " << cfg.depth << '\n';
        return kFailed;
    }
    std::cout << print_proof(*proof) << '\n';
    return kOk;
}

int cmd_rule_soundness(const RunConfig& cfg) {
    std::optional<RuleSchema> rule;
    std::optional<Calculus> calc;
    std::vector<Calculus> calcs;
    if (cfg.calc.empty()) calcs = {Calculus::Nabla, Calculus::Cond};
    else calcs = {require_calculus(cfg.calc)};
    for (Calculus c : calcs) {
        std::set<AxiomId> exts;
        for (AxiomId a : kAllAxioms) {
            try {
                rule_schemas(c, {a});
                exts.insert(a);
            } catch (const UnsupportedExtension&) {
            }
        }
        for (const auto& r : rule_schemas(c, exts))
            if (r.name == cfg.rule) {
                rule = r;
                calc = c;
                break;
            }
        if (rule) break;
    }
    if (!rule) throw UsageError("unknown rule '" + cfg.rule + "'");
    SoundnessBounds b;
    b.max_x = cfg.nx;
    b.max_y = cfg.ny;
    b.max_worlds = cfg.worlds;
    b.threads = cfg.threads;
    const auto report = rule_sound(*rule, *calc, b);
    if (cfg.output == Output::Lines) {
        std::cout << report.rule << '\t' << report.frames_checked << '\t' << report.assignments_checked << '\t'
                  << report.violations.size() << '\n';
        for (const auto& v : report.violations)
            std::cout << "violation\t" << (v.reversed ? "reversed" : "forward") << '\t' << print_valuation(v.assignment)
                      << '\t' << v.frame << '\n';
    } else {
        std::cout << "rule " << report.rule << " (" << to_string(*calc) << "): " << report.frames_checked
                  << " frames, " << report.assignments_checked << " assignments, " << report.violations.size()
                  << " violations\n";
        for (const auto& v : report.violations)
            std::cout << "  " << (v.reversed ? "reversed " : "") << print_valuation(v.assignment) << " on " << v.frame
                      << '\n';
    }
    return report.violations.empty() ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-type display calculi for monotone modal and conditional logic"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string output = "text";
    app.add_option("--output", output, "text or lines")->check(CLI::IsMember({"text", "lines"}));
    app.add_flag("--strict-monotone", cfg.strict_monotone, "reject nframes that are not upward closed");
    app.add_option("--threads", cfg.threads, "worker threads for enumeration (0: all cores)");

    auto input = [&](CLI::App* sub, const char* what, std::size_t count = 1) {
        sub->add_option("inputs", cfg.inputs, what)->required()->expected(static_cast<int>(count));
    };
    auto* parse = app.add_subcommand("parse", "parse a file and print it canonically");
    input(parse, "file");
    auto* translate = app.add_subcommand("translate", "translate a single-type formula or sequent");
    input(translate, "file");
    auto* eval = app.add_subcommand("eval", "extension of a formula on a frame");
    input(eval, "frame file, formula file", 2);
    eval->add_option("--valuation", cfg.valuation_path, "valuation file");
    auto* valid_cmd = app.add_subcommand("valid", "validity of a formula, sequent or inequality on a frame");
    input(valid_cmd, "frame file, formula file", 2);
    auto* star_cmd = app.add_subcommand("star", "two-sorted frame of an nframe or cframe");
    input(star_cmd, "frame file");
    auto* unstar = app.add_subcommand("unstar", "single-type frame of a supported kframe");
    input(unstar, "frame file");
    auto* supported = app.add_subcommand("supported", "supportedness of a kframe");
    input(supported, "frame file");
    auto* verify = app.add_subcommand("verify-correspondence", "axiom validity against its frame condition");
    verify->add_option("--axiom", cfg.axiom)->required();
    verify->add_option("--max-size", cfg.max_size);
    verify->add_option("--kind", cfg.kind, "n or c");
    verify->add_option("--cs-variant", cfg.cs_variant, "theorem or guarded");
    auto* classify = app.add_subcommand("classify", "analytic inductive test for an inequality");
    input(classify, "inequality file");
    auto* check = app.add_subcommand("check-proof", "check a derivation");
    input(check, "proof file");
    check->add_option("--calc", cfg.calc, "dmt-nabla or dmt-cond");
    check->add_option("--ext", cfg.ext, "comma-separated axioms");
    auto* search = app.add_subcommand("search-proof", "bounded backward proof search");
    input(search, "sequent file");
    search->add_option("--calc", cfg.calc, "dmt-nabla or dmt-cond");
    search->add_option("--ext", cfg.ext, "comma-separated axioms");
    search->add_option("--depth", cfg.depth);
    search->add_flag("--allow-cut", cfg.allow_cut);
    auto* sound = app.add_subcommand("rule-soundness", "exhaustive soundness check of one rule");
    sound->add_option("--rule", cfg.rule)->required();
    sound->add_option("--calc", cfg.calc, "dmt-nabla or dmt-cond");
    sound->add_option("--nx", cfg.nx);
    sound->add_option("--ny", cfg.ny);
    sound->add_option("--worlds", cfg.worlds, "world bound for extension rules");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    cfg.output = output == "lines" ? Output::Lines : Output::Text;

    const std::pair<CLI::App*, int (*)(const RunConfig&)> table[] = {
        {parse, cmd_parse},       {translate, cmd_translate},       {eval, cmd_eval},
        {valid_cmd, cmd_valid},   {star_cmd, cmd_star},             {unstar, cmd_unstar},
        {supported, cmd_supported}, {verify, cmd_verify},           {classify, cmd_classify},
        {check, cmd_check_proof}, {search, cmd_search_proof},       {sound, cmd_rule_soundness},
    };
    try {
        for (const auto& [sub, run] : table)
            if (sub->parsed()) return run(cfg);
    } catch (const ParseError& e) {
        std::cerr << "error: " << describe(e, last_input) << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
