#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mtd/symbol.hpp"

namespace mtd {

enum class Sort : std::uint8_t { S, N };

const char* to_string(Sort s);

class SortError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Single-type formulas of the monotone modal language and the conditional
// language.

enum class STKind : std::uint8_t { Var, Top, Bot, Neg, And, Nabla, Cond };

class STFormula {
public:
    STFormula(); // bot
    STFormula(STKind kind, std::vector<STFormula> kids, Symbol name = {});

    [[nodiscard]] STKind kind() const { return node_->kind; }
    [[nodiscard]] Symbol name() const { return node_->name; }
    [[nodiscard]] const std::vector<STFormula>& kids() const { return node_->kids; }
    [[nodiscard]] const STFormula& kid(std::size_t i) const { return node_->kids.at(i); }
    [[nodiscard]] std::size_t hash() const { return node_->hash; }

    friend bool operator==(const STFormula& a, const STFormula& b);

private:
    struct Node {
        STKind kind;
        Symbol name;
        std::vector<STFormula> kids;
        std::size_t hash;
    };
    std::shared_ptr<const Node> node_;
};

namespace st {
STFormula var(std::string_view name);
STFormula top();
STFormula bot();
STFormula neg(STFormula a);
STFormula conj(STFormula a, STFormula b);
STFormula nabla(STFormula a);
STFormula cond(STFormula a, STFormula b);
// derived connectives, expanded into the primitive ones
STFormula disj(STFormula a, STFormula b);    // not(not a and not b)
STFormula implies(STFormula a, STFormula b); // not(a and not b)
STFormula iff(STFormula a, STFormula b);
} // namespace st

enum class STLanguage : std::uint8_t { Boolean, Nabla, Cond, Mixed };

// Which modal language a formula belongs to. Boolean formulas belong to both.
STLanguage language_of(const STFormula& f);
bool arity_ok(const STFormula& f);
std::set<Symbol> variables(const STFormula& f);

// ---------------------------------------------------------------------------
// Multi-type formulas over sorts S (sets of states) and N (sets of
// neighbourhoods).

enum class MTKind : std::uint8_t {
    // result sort S
    Var, Top, Bot, Neg, And, Or, DiaNu, BoxNuc, Tri,
    // result sort N
    One, Zero, Sim, Cap, Cup, BoxNi, DiaNotni, BoxrNotni,
    // Residuals of the modal operators. They have no logical rules and only
    // arise when structures are read as formulas.
    DiaIn,     // S <- N, left adjoint of BoxNi
    BoxNotin,  // S <- N, right adjoint of DiaNotni
    BoxrNotin, // S <- N, Galois partner of BoxrNotni
    BlackTri,  // S <- N x S, left residual of Tri in its second coordinate
    NVar,      // N-sorted variable, used for schematic rule readings
    BoxNuAdj,  // N <- S, right adjoint of DiaNu
    DiaNucAdj, // N <- S, left adjoint of BoxNuc
    BlackTriR, // N <- S x S, residual of Tri in its first coordinate
};

struct Signature {
    Sort result;
    std::vector<Sort> args;
};

const Signature& signature(MTKind k);
const char* token(MTKind k);

class MTFormula {
public:
    MTFormula(); // bot
    MTFormula(MTKind kind, std::vector<MTFormula> kids, Symbol name = {});

    [[nodiscard]] MTKind kind() const { return node_->kind; }
    [[nodiscard]] Sort sort() const { return signature(node_->kind).result; }
    [[nodiscard]] Symbol name() const { return node_->name; }
    [[nodiscard]] const std::vector<MTFormula>& kids() const { return node_->kids; }
    [[nodiscard]] const MTFormula& kid(std::size_t i) const { return node_->kids.at(i); }
    [[nodiscard]] std::size_t hash() const { return node_->hash; }

    friend bool operator==(const MTFormula& a, const MTFormula& b);

private:
    struct Node {
        MTKind kind;
        Symbol name;
        std::vector<MTFormula> kids;
        std::size_t hash;
    };
    std::shared_ptr<const Node> node_;
};

namespace mt {
MTFormula var(std::string_view name);
MTFormula nvar(std::string_view name);
MTFormula top();
MTFormula bot();
MTFormula neg(MTFormula a);
MTFormula conj(MTFormula a, MTFormula b);
MTFormula disj(MTFormula a, MTFormula b);
MTFormula dia_nu(MTFormula a);
MTFormula box_nuc(MTFormula a);
MTFormula tri(MTFormula a, MTFormula b);
MTFormula one();
MTFormula zero();
MTFormula sim(MTFormula a);
MTFormula cap(MTFormula a, MTFormula b);
MTFormula cup(MTFormula a, MTFormula b);
MTFormula box_ni(MTFormula a);
MTFormula dia_notni(MTFormula a);
MTFormula boxr_notni(MTFormula a);
MTFormula make(MTKind k, std::vector<MTFormula> kids);
} // namespace mt

bool well_sorted(const MTFormula& f);

enum class MTLanguage : std::uint8_t { Neutral, Nabla, Cond, Mixed };
MTLanguage language_of(const MTFormula& f);

// Replace every occurrence of the S-sorted variable v by g.
// Throws SortError if g is N-sorted.
MTFormula substitute(const MTFormula& f, Symbol v, const MTFormula& g);

// S-sorted propositional variables of f.
std::set<Symbol> variables(const MTFormula& f);
// N-sorted variables of f (only present in schematic readings).
std::set<Symbol> n_variables(const MTFormula& f);

std::size_t size(const MTFormula& f);

struct Inequality {
    MTFormula lhs;
    MTFormula rhs;

    // Throws SortError when the two sides have different sorts.
    Inequality(MTFormula l, MTFormula r);

    [[nodiscard]] Sort sort() const { return lhs.sort(); }
    friend bool operator==(const Inequality&, const Inequality&) = default;
};

std::set<Symbol> variables(const Inequality& q);

// Order-type: each variable is read positively (true = 1) or
// antitonically (false = the dual).
class OrderType {
public:
    OrderType() = default;
    void set(Symbol v, bool positive) { pol_[v] = positive; }
    [[nodiscard]] bool positive(Symbol v) const;
    [[nodiscard]] bool covers(const std::set<Symbol>& vars) const;
    [[nodiscard]] const std::map<Symbol, bool>& entries() const { return pol_; }
    [[nodiscard]] OrderType dual() const;

private:
    std::map<Symbol, bool> pol_;
};

// Strict order <_Omega on variables given by generating pairs (a, b) meaning a < b.
class DependencyOrder {
public:
    DependencyOrder() = default;
    void add(Symbol lower, Symbol upper) { edges_.emplace(lower, upper); }
    [[nodiscard]] const std::set<std::pair<Symbol, Symbol>>& edges() const { return edges_; }
    [[nodiscard]] std::set<std::pair<Symbol, Symbol>> closure() const;
    // irreflexive transitive closure exists iff the generating graph is acyclic
    [[nodiscard]] bool is_strict() const;

private:
    std::set<std::pair<Symbol, Symbol>> edges_;
};

} // namespace mtd

template <>
struct std::hash<mtd::MTFormula> {
    std::size_t operator()(const mtd::MTFormula& f) const noexcept { return f.hash(); }
};
template <>
struct std::hash<mtd::STFormula> {
    std::size_t operator()(const mtd::STFormula& f) const noexcept { return f.hash(); }
};
