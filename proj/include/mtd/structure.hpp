#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mtd/syntax.hpp"

namespace mtd {

// Structural connectives. Names follow the text syntax: h = hatted
// (precedent), c = checked (succedent), t = tilde (either side).
enum class StructKind : std::uint8_t {
    Formula, // leaf holding a formula
    Meta,    // schematic structure variable
    // sort S
    HTop, CBot, TNeg, HWedge, CVee, HNu, CNuc, HIn, CNotin, CTri, HBlackTri, CNotinR,
    // sort N
    HOne, CZero, TSim, HCap, CCup, CNi, HNotni, CNuAdj, HNucAdj, CNotniR, CBlackTriR,
};

const Signature& signature(StructKind k);
const char* token(StructKind k);

class Structure {
public:
    Structure(); // top-hat
    Structure(StructKind kind, std::vector<Structure> kids);
    static Structure formula(MTFormula f);
    static Structure meta(std::string_view name, Sort sort);

    [[nodiscard]] StructKind kind() const { return node_->kind; }
    [[nodiscard]] Sort sort() const;
    [[nodiscard]] const std::vector<Structure>& kids() const { return node_->kids; }
    [[nodiscard]] const Structure& kid(std::size_t i) const { return node_->kids.at(i); }
    [[nodiscard]] const MTFormula& leaf() const { return node_->leaf; }
    [[nodiscard]] Symbol meta_name() const { return node_->name; }
    [[nodiscard]] std::size_t hash() const { return node_->hash; }

    friend bool operator==(const Structure& a, const Structure& b);

private:
    struct Node {
        StructKind kind;
        Sort meta_sort;
        Symbol name;
        MTFormula leaf;
        std::vector<Structure> kids;
        std::size_t hash;
    };
    std::shared_ptr<const Node> node_;
};

namespace sx {
Structure fml(MTFormula f);
Structure make(StructKind k, std::vector<Structure> kids);
} // namespace sx

// Every node has the arity and argument sorts of its connective, and every
// formula leaf is well sorted.
bool well_sorted(const Structure& s);
std::size_t size(const Structure& s);

struct Sequent {
    Structure lhs;
    Structure rhs;
    friend bool operator==(const Sequent&, const Sequent&) = default;
};

bool well_sorted(const Sequent& s);

struct ProofTree {
    std::string rule;
    Sequent conclusion;
    std::vector<ProofTree> children;
};

std::size_t node_count(const ProofTree& p);

} // namespace mtd

template <>
struct std::hash<mtd::Structure> {
    std::size_t operator()(const mtd::Structure& s) const noexcept { return s.hash(); }
};
template <>
struct std::hash<mtd::Sequent> {
    std::size_t operator()(const mtd::Sequent& s) const noexcept { return s.lhs.hash() * 31 + s.rhs.hash(); }
};
