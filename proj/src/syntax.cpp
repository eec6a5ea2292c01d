#include "mtd/syntax.hpp"

#include <algorithm>
#include <array>

namespace mtd {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

template <typename F>
std::size_t node_hash(std::uint8_t kind, Symbol name, const std::vector<F>& kids) {
    std::size_t h = mix(kind, name.id());
    for (const auto& k : kids) h = mix(h, k.hash());
    return h;
}

} // namespace

const char* to_string(Sort s) { return s == Sort::S ? "S" : "N"; }

// ---------------------------------------------------------------------------
// STFormula

STFormula::STFormula() : STFormula(STKind::Bot, {}) {}

STFormula::STFormula(STKind kind, std::vector<STFormula> kids, Symbol name) {
    auto h = node_hash(static_cast<std::uint8_t>(kind) + 64, name, kids);
    node_ = std::make_shared<const Node>(Node{kind, name, std::move(kids), h});
}

bool operator==(const STFormula& a, const STFormula& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.kind() != b.kind() || a.name() != b.name()) return false;
    return a.kids() == b.kids();
}

namespace st {
STFormula var(std::string_view name) { return {STKind::Var, {}, Symbol(name)}; }
STFormula top() { return {STKind::Top, {}}; }
STFormula bot() { return {STKind::Bot, {}}; }
STFormula neg(STFormula a) { return {STKind::Neg, {std::move(a)}}; }
STFormula conj(STFormula a, STFormula b) { return {STKind::And, {std::move(a), std::move(b)}}; }
STFormula nabla(STFormula a) { return {STKind::Nabla, {std::move(a)}}; }
STFormula cond(STFormula a, STFormula b) { return {STKind::Cond, {std::move(a), std::move(b)}}; }
STFormula disj(STFormula a, STFormula b) { return neg(conj(neg(std::move(a)), neg(std::move(b)))); }
STFormula implies(STFormula a, STFormula b) { return neg(conj(std::move(a), neg(std::move(b)))); }
STFormula iff(STFormula a, STFormula b) { return conj(implies(a, b), implies(b, a)); }
} // namespace st

STLanguage language_of(const STFormula& f) {
    auto lang = STLanguage::Boolean;
    if (f.kind() == STKind::Nabla) lang = STLanguage::Nabla;
    if (f.kind() == STKind::Cond) lang = STLanguage::Cond;
    for (const auto& k : f.kids()) {
        auto kl = language_of(k);
        if (kl == STLanguage::Boolean) continue;
        if (lang == STLanguage::Boolean) lang = kl;
        else if (lang != kl) return STLanguage::Mixed;
    }
    return lang;
}

bool arity_ok(const STFormula& f) {
    std::size_t want = 0;
    switch (f.kind()) {
    case STKind::Var:
    case STKind::Top:
    case STKind::Bot: want = 0; break;
    case STKind::Neg:
    case STKind::Nabla: want = 1; break;
    case STKind::And:
    case STKind::Cond: want = 2; break;
    }
    if (f.kids().size() != want) return false;
    return std::ranges::all_of(f.kids(), [](const STFormula& k) { return arity_ok(k); });
}

namespace {
void collect(const STFormula& f, std::set<Symbol>& out) {
    if (f.kind() == STKind::Var) out.insert(f.name());
    for (const auto& k : f.kids()) collect(k, out);
}
} // namespace

std::set<Symbol> variables(const STFormula& f) {
    std::set<Symbol> out;
    collect(f, out);
    return out;
}

// ---------------------------------------------------------------------------
// MTFormula

const Signature& signature(MTKind k) {
    using enum Sort;
    static const std::array<Signature, 25> table{{
        {S, {}},        // Var
        {S, {}},        // Top
        {S, {}},        // Bot
        {S, {S}},       // Neg
        {S, {S, S}},    // And
        {S, {S, S}},    // Or
        {S, {N}},       // DiaNu
        {S, {N}},       // BoxNuc
        {S, {N, S}},    // Tri
        {N, {}},        // One
        {N, {}},        // Zero
        {N, {N}},       // Sim
        {N, {N, N}},    // Cap
        {N, {N, N}},    // Cup
        {N, {S}},       // BoxNi
        {N, {S}},       // DiaNotni
        {N, {S}},       // BoxrNotni
        {S, {N}},       // DiaIn
        {S, {N}},       // BoxNotin
        {S, {N}},       // BoxrNotin
        {S, {N, S}},    // BlackTri
        {N, {}},        // NVar
        {N, {S}},       // BoxNuAdj
        {N, {S}},       // DiaNucAdj
        {N, {S, S}},    // BlackTriR
    }};
    return table.at(static_cast<std::size_t>(k));
}

const char* token(MTKind k) {
    static const std::array<const char*, 25> names{
        "var",   "top",       "bot",        "neg",     "and",       "or",        "dia-nu",
        "box-nuc", "tri",     "one",        "zero",    "sim",       "cap",       "cup",
        "box-ni", "dia-notni", "boxr-notni", "dia-in", "box-notin", "boxr-notin", "btri",
        "nvar",  "box-nu-adj", "dia-nuc-adj", "btrir"};
    return names.at(static_cast<std::size_t>(k));
}

MTFormula::MTFormula() : MTFormula(MTKind::Bot, {}) {}

MTFormula::MTFormula(MTKind kind, std::vector<MTFormula> kids, Symbol name) {
    auto h = node_hash(static_cast<std::uint8_t>(kind), name, kids);
    node_ = std::make_shared<const Node>(Node{kind, name, std::move(kids), h});
}

bool operator==(const MTFormula& a, const MTFormula& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.kind() != b.kind() || a.name() != b.name()) return false;
    return a.kids() == b.kids();
}

namespace mt {
MTFormula var(std::string_view name) { return {MTKind::Var, {}, Symbol(name)}; }
MTFormula nvar(std::string_view name) { return {MTKind::NVar, {}, Symbol(name)}; }
MTFormula top() { return {MTKind::Top, {}}; }
MTFormula bot() { return {MTKind::Bot, {}}; }
MTFormula neg(MTFormula a) { return {MTKind::Neg, {std::move(a)}}; }
MTFormula conj(MTFormula a, MTFormula b) { return {MTKind::And, {std::move(a), std::move(b)}}; }
MTFormula disj(MTFormula a, MTFormula b) { return {MTKind::Or, {std::move(a), std::move(b)}}; }
MTFormula dia_nu(MTFormula a) { return {MTKind::DiaNu, {std::move(a)}}; }
MTFormula box_nuc(MTFormula a) { return {MTKind::BoxNuc, {std::move(a)}}; }
MTFormula tri(MTFormula a, MTFormula b) { return {MTKind::Tri, {std::move(a), std::move(b)}}; }
MTFormula one() { return {MTKind::One, {}}; }
MTFormula zero() { return {MTKind::Zero, {}}; }
MTFormula sim(MTFormula a) { return {MTKind::Sim, {std::move(a)}}; }
MTFormula cap(MTFormula a, MTFormula b) { return {MTKind::Cap, {std::move(a), std::move(b)}}; }
MTFormula cup(MTFormula a, MTFormula b) { return {MTKind::Cup, {std::move(a), std::move(b)}}; }
MTFormula box_ni(MTFormula a) { return {MTKind::BoxNi, {std::move(a)}}; }
MTFormula dia_notni(MTFormula a) { return {MTKind::DiaNotni, {std::move(a)}}; }
MTFormula boxr_notni(MTFormula a) { return {MTKind::BoxrNotni, {std::move(a)}}; }
MTFormula make(MTKind k, std::vector<MTFormula> kids) { return {k, std::move(kids)}; }
} // namespace mt

bool well_sorted(const MTFormula& f) {
    const auto& sig = signature(f.kind());
    if (f.kids().size() != sig.args.size()) return false;
    for (std::size_t i = 0; i < sig.args.size(); ++i) {
        if (f.kid(i).sort() != sig.args[i] || !well_sorted(f.kid(i))) return false;
    }
    return true;
}

namespace {

MTLanguage kind_language(MTKind k) {
    switch (k) {
    case MTKind::DiaNu:
    case MTKind::BoxNuc:
    case MTKind::DiaNotni:
    case MTKind::BoxNuAdj:
    case MTKind::DiaNucAdj:
    case MTKind::BoxNotin: return MTLanguage::Nabla;
    case MTKind::Tri:
    case MTKind::BoxrNotni:
    case MTKind::BlackTri:
    case MTKind::BlackTriR:
    case MTKind::BoxrNotin: return MTLanguage::Cond;
    default: return MTLanguage::Neutral;
    }
}

MTLanguage join(MTLanguage a, MTLanguage b) {
    if (a == MTLanguage::Neutral) return b;
    if (b == MTLanguage::Neutral || a == b) return a;
    return MTLanguage::Mixed;
}

void collect(const MTFormula& f, MTKind which, std::set<Symbol>& out) {
    if (f.kind() == which) out.insert(f.name());
    for (const auto& k : f.kids()) collect(k, which, out);
}

} // namespace

MTLanguage language_of(const MTFormula& f) {
    auto lang = kind_language(f.kind());
    for (const auto& k : f.kids()) lang = join(lang, language_of(k));
    return lang;
}

MTFormula substitute(const MTFormula& f, Symbol v, const MTFormula& g) {
    if (g.sort() != Sort::S) throw SortError("substitute: replacement for a propositional variable must have sort S");
    if (f.kind() == MTKind::Var) return f.name() == v ? g : f;
    if (f.kids().empty()) return f;
    std::vector<MTFormula> kids;
    kids.reserve(f.kids().size());
    for (const auto& k : f.kids()) kids.push_back(substitute(k, v, g));
    return {f.kind(), std::move(kids), f.name()};
}

std::set<Symbol> variables(const MTFormula& f) {
    std::set<Symbol> out;
    collect(f, MTKind::Var, out);
    return out;
}

std::set<Symbol> n_variables(const MTFormula& f) {
    std::set<Symbol> out;
    collect(f, MTKind::NVar, out);
    return out;
}

std::size_t size(const MTFormula& f) {
    std::size_t n = 1;
    for (const auto& k : f.kids()) n += size(k);
    return n;
}

Inequality::Inequality(MTFormula l, MTFormula r) : lhs(std::move(l)), rhs(std::move(r)) {
    if (lhs.sort() != rhs.sort()) throw SortError("inequality sides have different sorts");
}

std::set<Symbol> variables(const Inequality& q) {
    auto out = variables(q.lhs);
    out.merge(variables(q.rhs));
    return out;
}

bool OrderType::positive(Symbol v) const {
    auto it = pol_.find(v);
    if (it == pol_.end()) throw std::out_of_range("order-type undefined on variable " + v.name());
    return it->second;
}

bool OrderType::covers(const std::set<Symbol>& vars) const {
    return std::ranges::all_of(vars, [&](Symbol v) { return pol_.contains(v); });
}

OrderType OrderType::dual() const {
    OrderType d;
    for (auto [v, p] : pol_) d.set(v, !p);
    return d;
}

std::set<std::pair<Symbol, Symbol>> DependencyOrder::closure() const {
    auto rel = edges_;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<Symbol, Symbol>> fresh;
        for (auto [a, b] : rel)
            for (auto [c, d] : rel)
                if (b == c && !rel.contains({a, d})) fresh.emplace_back(a, d);
        for (auto& e : fresh) grew |= rel.insert(e).second;
    }
    return rel;
}

bool DependencyOrder::is_strict() const {
    return std::ranges::none_of(closure(), [](const auto& e) { return e.first == e.second; });
}

} // namespace mtd
