#pragma once

// S-expression syntax for formulas, structures, sequents, proofs, frames and
// valuations. Every printer is a right inverse of the matching parser.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mtd/eval.hpp"
#include "mtd/frames.hpp"
#include "mtd/structure.hpp"
#include "mtd/syntax.hpp"

namespace mtd {

struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, SourceSpan span);
    [[nodiscard]] SourceSpan span() const { return span_; }
    [[nodiscard]] const std::string& detail() const { return detail_; }

private:
    SourceSpan span_;
    std::string detail_;
};

// Sort violations are parse errors too, but callers may want to tell them apart.
class SortParseError : public ParseError {
public:
    using ParseError::ParseError;
};

struct SExpr {
    bool is_list = false;
    std::string atom;
    std::vector<SExpr> items;
    SourceSpan span;
};

// Exactly one top-level expression; '#' starts a comment running to end of line.
SExpr parse_sexpr(std::string_view text);
std::string print_sexpr(const SExpr& e);

using AnyFormula = std::variant<MTFormula, STFormula>;

// Single-type input is recognised by nabla, cond, imp or iff; anything else
// is read as multi-type.
AnyFormula parse_formula(std::string_view text);
MTFormula parse_mt_formula(std::string_view text);
STFormula parse_st_formula(std::string_view text);
MTFormula mt_formula_from(const SExpr& e);
STFormula st_formula_from(const SExpr& e);

std::string print_formula(const MTFormula& f);
std::string print_formula(const STFormula& f);
std::string print_formula(const AnyFormula& f);

Structure parse_structure(std::string_view text);
Structure structure_from(const SExpr& e);
std::string print_structure(const Structure& s);

Sequent parse_sequent(std::string_view text);
Sequent sequent_from(const SExpr& e);
std::string print_sequent(const Sequent& s);

// (leq A B) or a sequent of two formula leaves (seq (fml A) (fml B)).
Inequality parse_inequality(std::string_view text);
Inequality inequality_from(const SExpr& e);
std::string print_inequality(const Inequality& q);

// A single-type sequent (seq phi psi) or a lone formula phi, read as top |- phi.
struct STSequent {
    STFormula lhs;
    STFormula rhs;
};
STSequent parse_st_sequent(std::string_view text);
std::string print_st_sequent(const STSequent& s);

// Rule name -> admissible premise counts. Used to reject unknown rules and
// arity mismatches while parsing.
using RuleArities = std::map<std::string, std::set<std::size_t>>;

ProofTree parse_proof(std::string_view text, const RuleArities& rules);
ProofTree parse_proof(std::string_view text); // all rules of both calculi
std::string print_proof(const ProofTree& p);

using AnyFrame = std::variant<NFrame, CFrame, TwoSortedFrame>;

struct ParsedFrame {
    AnyFrame frame;
    std::vector<std::string> warnings; // monotonicity failures in lax mode
};

// strict: reject neighbourhood frames that are not upward closed.
ParsedFrame parse_frame(std::string_view text, bool strict = true);
std::string print_frame(const NFrame& f);
std::string print_frame(const CFrame& f);
std::string print_frame(const TwoSortedFrame& k);
std::string print_frame(const AnyFrame& f);

Valuation parse_valuation(std::string_view text);
std::string print_valuation(const Valuation& v);
std::string print_subset(Subset s);

// Human-readable message with line:column of the span.
std::string describe(const ParseError& e, std::string_view text);

} // namespace mtd
