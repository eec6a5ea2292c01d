#include "mtd/structure.hpp"

#include <array>

namespace mtd {

const Signature& signature(StructKind k) {
    using enum Sort;
    static const std::array<Signature, 25> table{{
        {S, {}},     // Formula (sort taken from the leaf)
        {S, {}},     // Meta (sort stored on the node)
        {S, {}},     // HTop
        {S, {}},     // CBot
        {S, {S}},    // TNeg
        {S, {S, S}}, // HWedge
        {S, {S, S}}, // CVee
        {S, {N}},    // HNu
        {S, {N}},    // CNuc
        {S, {N}},    // HIn
        {S, {N}},    // CNotin
        {S, {N, S}}, // CTri
        {S, {N, S}}, // HBlackTri
        {S, {N}},    // CNotinR
        {N, {}},     // HOne
        {N, {}},     // CZero
        {N, {N}},    // TSim
        {N, {N, N}}, // HCap
        {N, {N, N}}, // CCup
        {N, {S}},    // CNi
        {N, {S}},    // HNotni
        {N, {S}},    // CNuAdj
        {N, {S}},    // HNucAdj
        {N, {S}},    // CNotniR
        {N, {S, S}}, // CBlackTriR
    }};
    return table.at(static_cast<std::size_t>(k));
}

const char* token(StructKind k) {
    static const std::array<const char*, 25> names{
        "fml",  "meta", "htop", "cbot", "tneg", "hwedge", "cvee",    "hnu",     "cnuc",
        "hin",  "cnotin", "ctri", "hblacktri", "cnotinr", "hone", "czero", "tsim", "hcap",
        "ccup", "cni",  "hnotni", "cnu-adj", "hnuc-adj", "cnotnir", "cblacktrir"};
    return names.at(static_cast<std::size_t>(k));
}

namespace {
std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
} // namespace

Structure::Structure() : Structure(StructKind::HTop, {}) {}

Structure::Structure(StructKind kind, std::vector<Structure> kids) {
    std::size_t h = mix(static_cast<std::size_t>(kind) + 1000, 0);
    for (const auto& k : kids) h = mix(h, k.hash());
    node_ = std::make_shared<const Node>(Node{kind, Sort::S, {}, MTFormula(), std::move(kids), h});
}

Structure Structure::formula(MTFormula f) {
    Structure s;
    std::size_t h = mix(2000, f.hash());
    s.node_ = std::make_shared<const Node>(Node{StructKind::Formula, f.sort(), {}, std::move(f), {}, h});
    return s;
}

Structure Structure::meta(std::string_view name, Sort sort) {
    Structure s;
    Symbol sym(name);
    std::size_t h = mix(mix(3000, sym.id()), static_cast<std::size_t>(sort));
    s.node_ = std::make_shared<const Node>(Node{StructKind::Meta, sort, sym, MTFormula(), {}, h});
    return s;
}

Sort Structure::sort() const {
    if (kind() == StructKind::Formula) return leaf().sort();
    if (kind() == StructKind::Meta) return node_->meta_sort;
    return signature(kind()).result;
}

bool operator==(const Structure& a, const Structure& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case StructKind::Formula: return a.leaf() == b.leaf();
    case StructKind::Meta: return a.meta_name() == b.meta_name() && a.sort() == b.sort();
    default: return a.kids() == b.kids();
    }
}

namespace sx {
Structure fml(MTFormula f) { return Structure::formula(std::move(f)); }
Structure make(StructKind k, std::vector<Structure> kids) { return {k, std::move(kids)}; }
} // namespace sx

bool well_sorted(const Structure& s) {
    if (s.kind() == StructKind::Formula) return well_sorted(s.leaf());
    if (s.kind() == StructKind::Meta) return true;
    const auto& sig = signature(s.kind());
    if (s.kids().size() != sig.args.size()) return false;
    for (std::size_t i = 0; i < sig.args.size(); ++i)
        if (s.kid(i).sort() != sig.args[i] || !well_sorted(s.kid(i))) return false;
    return true;
}

std::size_t size(const Structure& s) {
    if (s.kind() == StructKind::Formula) return size(s.leaf());
    std::size_t n = 1;
    for (const auto& k : s.kids()) n += size(k);
    return n;
}

bool well_sorted(const Sequent& s) {
    return well_sorted(s.lhs) && well_sorted(s.rhs) && s.lhs.sort() == s.rhs.sort();
}

std::size_t node_count(const ProofTree& p) {
    std::size_t n = 1;
    for (const auto& c : p.children) n += node_count(c);
    return n;
}

} // namespace mtd
