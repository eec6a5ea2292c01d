#pragma once

// Semantic reading of structures and the exhaustive rule-soundness harness.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtd/calculus.hpp"
#include "mtd/correspondence.hpp"
#include "mtd/eval.hpp"

namespace mtd {

class NotInterpretable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Polarity { Precedent, Succedent };

// Hatted connectives are read in precedent position, checked ones in
// succedent position; tilde connectives flip the polarity of their argument.
// Structure metavariables become Var (sort S) or NVar (sort N) formulas.
MTFormula interpret_structure(const Structure& s, Polarity pol);

// lhs read as precedent, rhs as succedent.
Inequality interpret_sequent(const Sequent& s);

// Validity of an interpreted sequent on a two-sorted frame.
bool sequent_valid(const TwoSortedFrame& k, const Sequent& s);

struct RuleViolation {
    std::string frame;      // text syntax
    Valuation assignment;   // metavariable values
    bool reversed = false;  // the violated orientation of a bidirectional rule
};

struct SoundnessReport {
    std::string rule;
    std::uint64_t frames_checked = 0;
    std::uint64_t assignments_checked = 0;
    std::vector<RuleViolation> violations; // at most max_violations
};

struct SoundnessBounds {
    std::size_t max_x = 2;
    std::size_t max_y = 3;
    std::size_t max_worlds = 2; // extension rules: star images of condition frames
    std::size_t max_violations = 5;
    unsigned threads = 0;
};

// Checks the rule, in both orientations when bidirectional, on every frame in
// scope under every assignment of subsets to its metavariables. Base, display
// and logical rules range over supported n-kind frames (dmt-nabla) or all
// c-kind frames (dmt-cond) with 1 <= |X| <= max_x, 1 <= |Y| <= max_y.
// Extension rules range over star images of frames satisfying the matching
// first-order condition with 1 <= |W| <= max_worlds.
SoundnessReport rule_sound(const RuleSchema& r, Calculus calc, const SoundnessBounds& bounds = {});

} // namespace mtd
