#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mtd/frames.hpp"
#include "mtd/syntax.hpp"

namespace mtd {

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Assignment of subsets to variables. For multi-type models S-variables get
// subsets of X and N-variables subsets of Y.
using Valuation = std::map<Symbol, Subset>;

Subset eval_st(const NFrame& f, const Valuation& v, const STFormula& phi);
Subset eval_st(const CFrame& f, const Valuation& v, const STFormula& phi);

// Subset of X for S-sorted formulas, of Y for N-sorted ones.
Subset eval_mt(const TwoSortedFrame& k, const Valuation& v, const MTFormula& f);

// A multi-type formula compiled to postfix form over numbered variable slots.
// Slots are ordered: S-variables alphabetically, then N-variables.
class CompiledFormula {
public:
    CompiledFormula() = default;
    CompiledFormula(const MTFormula& f, const std::vector<Symbol>& slots);

    [[nodiscard]] Subset run(const TwoSortedFrame& k, const Subset* slot_values) const;
    // Which frame relations the formula reads.
    [[nodiscard]] unsigned relations_used() const { return relations_; }

private:
    struct Instr {
        MTKind kind;
        std::uint32_t slot;
    };
    std::vector<Instr> code_;
    unsigned relations_ = 0;
};

// Bits for CompiledFormula::relations_used.
enum RelationBit : unsigned {
    kUsesNi = 1U << 0,
    kUsesNotni = 1U << 1,
    kUsesNu = 1U << 2,
    kUsesNuc = 1U << 3,
    kUsesTf = 1U << 4,
};

unsigned relations_used(const MTFormula& f);

// Frame validity. Valuations range over all assignments to the variables
// that occur in the formula.
bool valid(const NFrame& f, const STFormula& phi);
bool valid(const CFrame& f, const STFormula& phi);
bool valid(const NFrame& f, const STFormula& lhs, const STFormula& rhs);
bool valid(const CFrame& f, const STFormula& lhs, const STFormula& rhs);
bool valid(const TwoSortedFrame& k, const MTFormula& f);
bool valid(const TwoSortedFrame& k, const Inequality& q);

// First refuting valuation of an inequality, if any.
std::optional<Valuation> refute(const TwoSortedFrame& k, const Inequality& q);

// Calls visit for every assignment of subsets to the given S- and N-slots.
// Stops early when visit returns false; returns false in that case.
bool for_each_assignment(std::size_t s_slots, Subset s_universe, std::size_t n_slots, Subset n_universe,
                         const std::function<bool(const std::vector<Subset>&)>& visit);

} // namespace mtd
