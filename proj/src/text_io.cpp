#include "mtd/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>

#include "mtd/calculus.hpp"

namespace mtd {

ParseError::ParseError(const std::string& msg, SourceSpan span)
    : std::runtime_error(msg + " at bytes " + std::to_string(span.start) + ".." + std::to_string(span.end)),
      span_(span), detail_(msg) {}

// ---------------------------------------------------------------------------
// s-expressions

namespace {

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    SExpr top() {
        skip();
        if (pos_ >= text_.size()) throw ParseError("empty input", {0, text_.size()});
        SExpr e = read();
        skip();
        if (pos_ < text_.size()) throw ParseError("trailing input after expression", {pos_, text_.size()});
        return e;
    }

private:
    void skip() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                ++pos_;
            } else {
                break;
            }
        }
    }

    static bool delimiter(char c) {
        return c == '(' || c == ')' || c == '#' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
    }

    SExpr read() {
        skip();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", {text_.size(), text_.size()});
        const std::size_t start = pos_;
        if (text_[pos_] == ')') throw ParseError("unexpected ')'", {pos_, pos_ + 1});
        SExpr e;
        if (text_[pos_] == '(') {
            e.is_list = true;
            ++pos_;
            while (true) {
                skip();
                if (pos_ >= text_.size()) throw ParseError("unclosed '('", {start, text_.size()});
                if (text_[pos_] == ')') {
                    ++pos_;
                    break;
                }
                e.items.push_back(read());
            }
        } else {
            while (pos_ < text_.size() && !delimiter(text_[pos_])) ++pos_;
            e.atom = std::string(text_.substr(start, pos_ - start));
        }
        e.span = {start, pos_};
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

[[noreturn]] void fail(const SExpr& at, const std::string& msg) { throw ParseError(msg, at.span); }

const std::string& head(const SExpr& e) {
    static const std::string none;
    if (e.is_list && !e.items.empty() && !e.items[0].is_list) return e.items[0].atom;
    return none;
}

void expect_args(const SExpr& e, std::size_t n) {
    if (e.items.size() != n + 1)
        fail(e, "'" + head(e) + "' expects " + std::to_string(n) + " argument(s), got " +
                    std::to_string(e.items.size() - 1));
}

std::string name_atom(const SExpr& e) {
    if (e.is_list || e.atom.empty()) fail(e, "expected a name");
    return e.atom;
}

std::size_t number(const SExpr& e) {
    if (e.is_list) fail(e, "expected a nonnegative integer");
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(e.atom.data(), e.atom.data() + e.atom.size(), v);
    if (ec != std::errc{} || p != e.atom.data() + e.atom.size()) fail(e, "expected a nonnegative integer");
    return v;
}

} // namespace

SExpr parse_sexpr(std::string_view text) { return Reader(text).top(); }

std::string print_sexpr(const SExpr& e) {
    if (!e.is_list) return e.atom;
    std::string out = "(";
    for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i) out += ' ';
        out += print_sexpr(e.items[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// formulas

namespace {

const std::unordered_map<std::string, MTKind>& mt_tokens() {
    static const auto table = [] {
        std::unordered_map<std::string, MTKind> t;
        for (int k = 0; k <= static_cast<int>(MTKind::BlackTriR); ++k) t.emplace(token(static_cast<MTKind>(k)), static_cast<MTKind>(k));
        return t;
    }();
    return table;
}

bool has_st_marker(const SExpr& e) {
    const auto& h = head(e);
    if (h == "nabla" || h == "cond" || h == "imp" || h == "iff") return true;
    return std::ranges::any_of(e.items, has_st_marker);
}

} // namespace

MTFormula mt_formula_from(const SExpr& e) {
    std::string tok = e.is_list ? head(e) : e.atom;
    if (tok.empty()) fail(e, "expected a formula");
    auto it = mt_tokens().find(tok);
    if (it == mt_tokens().end()) fail(e, "unknown formula connective '" + tok + "'");
    const MTKind kind = it->second;
    const auto& sig = signature(kind);
    if (kind == MTKind::Var || kind == MTKind::NVar) {
        if (!e.is_list) fail(e, "'" + tok + "' needs a name");
        expect_args(e, 1);
        return {kind, {}, Symbol(name_atom(e.items[1]))};
    }
    if (sig.args.empty()) {
        if (e.is_list) fail(e, "constant '" + tok + "' is written without parentheses");
        return {kind, {}};
    }
    if (!e.is_list) fail(e, "'" + tok + "' needs arguments");
    expect_args(e, sig.args.size());
    std::vector<MTFormula> kids;
    for (std::size_t i = 0; i < sig.args.size(); ++i) {
        auto k = mt_formula_from(e.items[i + 1]);
        if (k.sort() != sig.args[i])
            throw SortParseError(std::string("sort error: argument ") + std::to_string(i + 1) + " of '" + tok +
                                     "' must have sort " + to_string(sig.args[i]),
                                 e.items[i + 1].span);
        kids.push_back(std::move(k));
    }
    return {kind, std::move(kids)};
}

STFormula st_formula_from(const SExpr& e) {
    std::string tok = e.is_list ? head(e) : e.atom;
    if (!e.is_list) {
        if (tok == "top") return st::top();
        if (tok == "bot") return st::bot();
        fail(e, "unknown single-type formula '" + tok + "'");
    }
    auto arg = [&](std::size_t i) { return st_formula_from(e.items[i]); };
    if (tok == "var") {
        expect_args(e, 1);
        return st::var(name_atom(e.items[1]));
    }
    if (tok == "neg" || tok == "nabla") {
        expect_args(e, 1);
        return tok == "neg" ? st::neg(arg(1)) : st::nabla(arg(1));
    }
    static const std::set<std::string> binary{"and", "cond", "or", "imp", "iff"};
    if (binary.contains(tok)) {
        expect_args(e, 2);
        auto a = arg(1);
        auto b = arg(2);
        if (tok == "and") return st::conj(a, b);
        if (tok == "cond") return st::cond(a, b);
        if (tok == "or") return st::disj(a, b);
        if (tok == "imp") return st::implies(a, b);
        return st::iff(a, b);
    }
    if (mt_tokens().contains(tok)) throw SortParseError("multi-type connective '" + tok + "' in a single-type formula", e.span);
    fail(e, "unknown single-type connective '" + tok + "'");
}

AnyFormula parse_formula(std::string_view text) {
    SExpr e = parse_sexpr(text);
    if (has_st_marker(e)) return st_formula_from(e);
    return mt_formula_from(e);
}

MTFormula parse_mt_formula(std::string_view text) { return mt_formula_from(parse_sexpr(text)); }
STFormula parse_st_formula(std::string_view text) { return st_formula_from(parse_sexpr(text)); }

std::string print_formula(const MTFormula& f) {
    const char* tok = token(f.kind());
    if (f.kind() == MTKind::Var || f.kind() == MTKind::NVar) return std::string("(") + tok + " " + f.name().name() + ")";
    if (f.kids().empty()) return tok;
    std::string out = std::string("(") + tok;
    for (const auto& k : f.kids()) out += " " + print_formula(k);
    return out + ")";
}

std::string print_formula(const STFormula& f) {
    switch (f.kind()) {
    case STKind::Var: return "(var " + f.name().name() + ")";
    case STKind::Top: return "top";
    case STKind::Bot: return "bot";
    case STKind::Neg: return "(neg " + print_formula(f.kid(0)) + ")";
    case STKind::And: return "(and " + print_formula(f.kid(0)) + " " + print_formula(f.kid(1)) + ")";
    case STKind::Nabla: return "(nabla " + print_formula(f.kid(0)) + ")";
    case STKind::Cond: return "(cond " + print_formula(f.kid(0)) + " " + print_formula(f.kid(1)) + ")";
    }
    return {};
}

std::string print_formula(const AnyFormula& f) {
    return std::visit([](const auto& g) { return print_formula(g); }, f);
}

// ---------------------------------------------------------------------------
// structures and sequents

namespace {

const std::unordered_map<std::string, StructKind>& struct_tokens() {
    static const auto table = [] {
        std::unordered_map<std::string, StructKind> t;
        for (int k = static_cast<int>(StructKind::HTop); k <= static_cast<int>(StructKind::CBlackTriR); ++k)
            t.emplace(token(static_cast<StructKind>(k)), static_cast<StructKind>(k));
        return t;
    }();
    return table;
}

} // namespace

Structure structure_from(const SExpr& e) {
    std::string tok = e.is_list ? head(e) : e.atom;
    if (tok == "fml") {
        expect_args(e, 1);
        return sx::fml(mt_formula_from(e.items[1]));
    }
    if (tok == "smeta" || tok == "nmeta") {
        expect_args(e, 1);
        return Structure::meta(name_atom(e.items[1]), tok == "smeta" ? Sort::S : Sort::N);
    }
    auto it = struct_tokens().find(tok);
    if (it == struct_tokens().end()) {
        if (mt_tokens().contains(tok)) fail(e, "formula '" + tok + "' used as a structure; wrap it in (fml ...)");
        fail(e, "unknown structural connective '" + tok + "'");
    }
    const auto& sig = signature(it->second);
    if (sig.args.empty()) {
        if (e.is_list) fail(e, "constant '" + tok + "' is written without parentheses");
        return {it->second, {}};
    }
    if (!e.is_list) fail(e, "'" + tok + "' needs arguments");
    expect_args(e, sig.args.size());
    std::vector<Structure> kids;
    for (std::size_t i = 0; i < sig.args.size(); ++i) {
        auto k = structure_from(e.items[i + 1]);
        if (k.sort() != sig.args[i])
            throw SortParseError(std::string("sort error: argument ") + std::to_string(i + 1) + " of '" + tok +
                                     "' must have sort " + to_string(sig.args[i]),
                                 e.items[i + 1].span);
        kids.push_back(std::move(k));
    }
    return {it->second, std::move(kids)};
}

Structure parse_structure(std::string_view text) { return structure_from(parse_sexpr(text)); }

std::string print_structure(const Structure& s) {
    switch (s.kind()) {
    case StructKind::Formula: return "(fml " + print_formula(s.leaf()) + ")";
    case StructKind::Meta: return std::string(s.sort() == Sort::S ? "(smeta " : "(nmeta ") + s.meta_name().name() + ")";
    default: break;
    }
    if (s.kids().empty()) return token(s.kind());
    std::string out = std::string("(") + token(s.kind());
    for (const auto& k : s.kids()) out += " " + print_structure(k);
    return out + ")";
}

Sequent sequent_from(const SExpr& e) {
    if (head(e) != "seq") fail(e, "expected (seq LHS RHS)");
    expect_args(e, 2);
    Sequent s{structure_from(e.items[1]), structure_from(e.items[2])};
    if (s.lhs.sort() != s.rhs.sort()) throw SortParseError("sort error: sequent sides have different sorts", e.span);
    return s;
}

Sequent parse_sequent(std::string_view text) { return sequent_from(parse_sexpr(text)); }

std::string print_sequent(const Sequent& s) {
    return "(seq " + print_structure(s.lhs) + " " + print_structure(s.rhs) + ")";
}

Inequality inequality_from(const SExpr& e) {
    if (head(e) == "leq") {
        expect_args(e, 2);
        auto l = mt_formula_from(e.items[1]);
        auto r = mt_formula_from(e.items[2]);
        if (l.sort() != r.sort()) throw SortParseError("sort error: inequality sides have different sorts", e.span);
        return {l, r};
    }
    if (head(e) == "seq") {
        Sequent s = sequent_from(e);
        if (s.lhs.kind() != StructKind::Formula || s.rhs.kind() != StructKind::Formula)
            fail(e, "inequality sequents must have formula leaves on both sides");
        return {s.lhs.leaf(), s.rhs.leaf()};
    }
    fail(e, "expected (leq A B) or (seq (fml A) (fml B))");
}

Inequality parse_inequality(std::string_view text) { return inequality_from(parse_sexpr(text)); }

std::string print_inequality(const Inequality& q) {
    return "(leq " + print_formula(q.lhs) + " " + print_formula(q.rhs) + ")";
}

STSequent parse_st_sequent(std::string_view text) {
    SExpr e = parse_sexpr(text);
    if (head(e) == "seq") {
        expect_args(e, 2);
        return {st_formula_from(e.items[1]), st_formula_from(e.items[2])};
    }
    return {st::top(), st_formula_from(e)};
}

std::string print_st_sequent(const STSequent& s) {
    return "(seq " + print_formula(s.lhs) + " " + print_formula(s.rhs) + ")";
}

// ---------------------------------------------------------------------------
// proofs

namespace {

ProofTree proof_from(const SExpr& e, const RuleArities& rules) {
    if (head(e) != "rule") fail(e, "expected (rule NAME (seq ...) SUBPROOFS...)");
    if (e.items.size() < 3) fail(e, "rule node needs a name and a conclusion");
    ProofTree p;
    p.rule = name_atom(e.items[1]);
    auto it = rules.find(p.rule);
    if (it == rules.end()) throw ParseError("unknown rule '" + p.rule + "'", e.items[1].span);
    p.conclusion = sequent_from(e.items[2]);
    for (std::size_t i = 3; i < e.items.size(); ++i) p.children.push_back(proof_from(e.items[i], rules));
    if (!it->second.contains(p.children.size()))
        fail(e, "arity mismatch: rule '" + p.rule + "' cannot have " + std::to_string(p.children.size()) +
                    " premise(s)");
    return p;
}

void print_proof_into(const ProofTree& p, int indent, std::string& out) {
    out += std::string(static_cast<std::size_t>(indent) * 2, ' ');
    out += "(rule " + p.rule + " " + print_sequent(p.conclusion);
    for (const auto& c : p.children) {
        out += "\n";
        print_proof_into(c, indent + 1, out);
    }
    out += ")";
}

} // namespace

ProofTree parse_proof(std::string_view text, const RuleArities& rules) { return proof_from(parse_sexpr(text), rules); }

ProofTree parse_proof(std::string_view text) { return parse_proof(text, all_rule_arities()); }

std::string print_proof(const ProofTree& p) {
    std::string out;
    print_proof_into(p, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// frames

std::string print_subset(Subset s) {
    std::string out = "(";
    bool first = true;
    for (std::size_t i = 0; i < 64; ++i) {
        if (!contains(s, i)) continue;
        if (!first) out += ' ';
        out += std::to_string(i);
        first = false;
    }
    return out + ")";
}

namespace {

Subset subset_from(const SExpr& e, std::size_t n) {
    if (!e.is_list) fail(e, "expected a set literal");
    Subset s = 0;
    for (const auto& it : e.items) {
        std::size_t v = number(it);
        if (v >= n) fail(it, "element " + std::to_string(v) + " outside the carrier");
        if (contains(s, v)) fail(it, "duplicate element in set literal");
        s |= singleton(v);
    }
    return s;
}

std::size_t worlds_from(const SExpr& e) {
    if (head(e) != "worlds") fail(e, "expected (worlds 0 1 ...)");
    const std::size_t n = e.items.size() - 1;
    if (n > kMaxWorlds) fail(e, "at most " + std::to_string(kMaxWorlds) + " worlds are supported");
    Subset seen = 0;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
        std::size_t w = number(e.items[i]);
        if (w >= n) fail(e.items[i], "worlds must be numbered 0.." + std::to_string(n == 0 ? 0 : n - 1));
        if (contains(seen, w)) fail(e.items[i], "duplicate world");
        seen |= singleton(w);
    }
    return n;
}

ParsedFrame nframe_from(const SExpr& e, bool strict) {
    if (e.items.size() < 2) fail(e, "nframe needs a (worlds ...) clause");
    const std::size_t n = worlds_from(e.items[1]);
    NFrame f(n);
    std::vector<bool> given(n, false);
    for (std::size_t i = 2; i < e.items.size(); ++i) {
        const SExpr& c = e.items[i];
        if (head(c) != "nu") fail(c, "expected (nu WORLD (SETS...))");
        expect_args(c, 2);
        std::size_t w = number(c.items[1]);
        if (w >= n) fail(c.items[1], "unknown world");
        if (given[w]) fail(c, "neighbourhoods of a world listed twice");
        given[w] = true;
        if (!c.items[2].is_list) fail(c.items[2], "expected a list of sets");
        for (const auto& s : c.items[2].items) {
            Subset x = subset_from(s, n);
            if (f.in_nu(w, x)) fail(s, "duplicate neighbourhood");
            f.add_neighbourhood(w, x);
        }
    }
    ParsedFrame out{f, {}};
    if (!f.is_monotone()) {
        std::string why = "not upward closed: " + f.monotonicity_violation();
        if (strict) fail(e, why);
        out.warnings.push_back(why);
    }
    return out;
}

ParsedFrame cframe_from(const SExpr& e) {
    if (e.items.size() < 2) fail(e, "cframe needs a (worlds ...) clause");
    const std::size_t n = worlds_from(e.items[1]);
    CFrame f(n);
    std::vector<bool> given(n << n, false);
    for (std::size_t i = 2; i < e.items.size(); ++i) {
        const SExpr& c = e.items[i];
        if (head(c) != "f") fail(c, "expected (f WORLD (ARG) (VALUE))");
        expect_args(c, 3);
        std::size_t w = number(c.items[1]);
        if (w >= n) fail(c.items[1], "unknown world");
        Subset z = subset_from(c.items[2], n);
        if (given[(w << n) + z]) fail(c, "selection value listed twice");
        given[(w << n) + z] = true;
        f.set_select(w, z, subset_from(c.items[3], n));
    }
    for (std::size_t w = 0; w < n; ++w)
        for (Subset z = 0; z < f.subset_count(); ++z)
            if (!given[(w << n) + z])
                fail(e, "selection function undefined at world " + std::to_string(w) + " and set " + print_subset(z));
    return {f, {}};
}

ParsedFrame kframe_from(const SExpr& e) {
    if (e.items.size() < 4) fail(e, "kframe needs a kind, (states N) and (neighbourhoods M)");
    const std::string kind = name_atom(e.items[1]);
    if (kind != "n" && kind != "c") fail(e.items[1], "kframe kind must be n or c");
    auto count = [&](const SExpr& c, const char* what) {
        if (head(c) != what) fail(c, std::string("expected (") + what + " COUNT)");
        expect_args(c, 1);
        std::size_t v = number(c.items[1]);
        if (v > kMaxCarrier) fail(c.items[1], "carrier larger than 64");
        return v;
    };
    const std::size_t nx = count(e.items[2], "states");
    const std::size_t ny = count(e.items[3], "neighbourhoods");
    Relation ni(ny, nx), notni(ny, nx), nu(nx, ny), nuc(nx, ny);
    TernaryRelation tf(nx, ny, nx);
    std::set<std::string> seen;
    for (std::size_t i = 4; i < e.items.size(); ++i) {
        const SExpr& c = e.items[i];
        const std::string& h = head(c);
        const bool pair_rel = h == "ni" || h == "notni" || h == "nu" || h == "nuc";
        if (!(pair_rel || h == "tf")) fail(c, "unknown relation clause");
        if (kind == "n" && h == "tf") fail(c, "tf belongs to conditional-kind frames");
        if (kind == "c" && (h == "nu" || h == "nuc")) fail(c, "nu/nuc belong to neighbourhood-kind frames");
        if (!seen.insert(h).second) fail(c, "relation listed twice");
        for (std::size_t j = 1; j < c.items.size(); ++j) {
            const SExpr& t = c.items[j];
            if (!t.is_list || t.items.size() != (pair_rel ? 2U : 3U)) fail(t, pair_rel ? "expected a pair" : "expected a triple");
            std::size_t a = number(t.items[0]);
            std::size_t b = number(t.items[1]);
            auto bound = [&](std::size_t v, std::size_t lim, const SExpr& at) {
                if (v >= lim) fail(at, "element outside its carrier");
            };
            if (h == "ni" || h == "notni") {
                bound(a, ny, t.items[0]);
                bound(b, nx, t.items[1]);
                (h == "ni" ? ni : notni).add(a, b);
            } else if (pair_rel) {
                bound(a, nx, t.items[0]);
                bound(b, ny, t.items[1]);
                (h == "nu" ? nu : nuc).add(a, b);
            } else {
                std::size_t c3 = number(t.items[2]);
                bound(a, nx, t.items[0]);
                bound(b, ny, t.items[1]);
                bound(c3, nx, t.items[2]);
                tf.add(a, b, c3);
            }
        }
    }
    if (kind == "n") return {TwoSortedFrame::neighbourhood(ni, notni, nu, nuc), {}};
    return {TwoSortedFrame::conditional(ni, notni, tf), {}};
}

std::string pairs(const Relation& r) {
    std::string out;
    for (std::size_t s = 0; s < r.source_size(); ++s)
        for (std::size_t t = 0; t < r.target_size(); ++t)
            if (r.holds(s, t)) out += " (" + std::to_string(s) + " " + std::to_string(t) + ")";
    return out;
}

} // namespace

ParsedFrame parse_frame(std::string_view text, bool strict) {
    SExpr e = parse_sexpr(text);
    const std::string& h = head(e);
    if (h == "nframe") return nframe_from(e, strict);
    if (h == "cframe") return cframe_from(e);
    if (h == "kframe") return kframe_from(e);
    fail(e, "expected nframe, cframe or kframe");
}

namespace {
std::string worlds_clause(std::size_t n) {
    std::string out = "(worlds";
    for (std::size_t w = 0; w < n; ++w) out += " " + std::to_string(w);
    return out + ")";
}
} // namespace

std::string print_frame(const NFrame& f) {
    std::string out = "(nframe " + worlds_clause(f.size());
    for (std::size_t w = 0; w < f.size(); ++w) {
        out += " (nu " + std::to_string(w) + " (";
        bool first = true;
        for (Subset x = 0; x < f.subset_count(); ++x) {
            if (!f.in_nu(w, x)) continue;
            if (!first) out += ' ';
            out += print_subset(x);
            first = false;
        }
        out += "))";
    }
    return out + ")";
}

std::string print_frame(const CFrame& f) {
    std::string out = "(cframe " + worlds_clause(f.size());
    for (std::size_t w = 0; w < f.size(); ++w)
        for (Subset z = 0; z < f.subset_count(); ++z)
            out += " (f " + std::to_string(w) + " " + print_subset(z) + " " + print_subset(f.select(w, z)) + ")";
    return out + ")";
}

std::string print_frame(const TwoSortedFrame& k) {
    const bool n = k.kind() == FrameKind::Neighbourhood;
    std::string out = std::string("(kframe ") + (n ? "n" : "c") + " (states " + std::to_string(k.x_size()) +
                      ") (neighbourhoods " + std::to_string(k.y_size()) + ")";
    out += " (ni" + pairs(k.r_ni()) + ")";
    out += " (notni" + pairs(k.r_notni()) + ")";
    if (n) {
        out += " (nu" + pairs(k.r_nu()) + ")";
        out += " (nuc" + pairs(k.r_nuc()) + ")";
    } else {
        out += " (tf";
        for (std::size_t x = 0; x < k.x_size(); ++x)
            for (std::size_t y = 0; y < k.y_size(); ++y)
                for (std::size_t z = 0; z < k.x_size(); ++z)
                    if (k.t_f().holds(x, y, z))
                        out += " (" + std::to_string(x) + " " + std::to_string(y) + " " + std::to_string(z) + ")";
        out += ")";
    }
    return out + ")";
}

std::string print_frame(const AnyFrame& f) {
    return std::visit([](const auto& g) { return print_frame(g); }, f);
}

// ---------------------------------------------------------------------------
// valuations

Valuation parse_valuation(std::string_view text) {
    SExpr e = parse_sexpr(text);
    if (head(e) != "valuation") fail(e, "expected (valuation (NAME ELEMS...) ...)");
    Valuation v;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
        const SExpr& c = e.items[i];
        if (!c.is_list || c.items.empty()) fail(c, "expected (NAME ELEMS...)");
        Symbol name(name_atom(c.items[0]));
        Subset s = 0;
        for (std::size_t j = 1; j < c.items.size(); ++j) {
            std::size_t el = number(c.items[j]);
            if (el >= kMaxCarrier) fail(c.items[j], "element outside any carrier");
            s |= singleton(el);
        }
        if (!v.emplace(name, s).second) fail(c, "variable assigned twice");
    }
    return v;
}

std::string print_valuation(const Valuation& v) {
    std::string out = "(valuation";
    for (const auto& [name, s] : v) {
        std::string elems = print_subset(s);
        out += " (" + name.name() + (elems.size() > 2 ? " " + elems.substr(1) : ")");
    }
    return out + ")";
}

std::string describe(const ParseError& e, std::string_view text) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < e.span().start && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col) + ": " + e.detail();
}

} // namespace mtd
