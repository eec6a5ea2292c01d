#pragma once

// Axioms, their first-order frame conditions, exhaustive frame enumeration
// and the harness comparing axiom validity with the condition.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtd/axioms.hpp"
#include "mtd/frames.hpp"
#include "mtd/syntax.hpp"
#include "mtd/text_io.hpp"

namespace mtd {

class KindMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The axiom as a single-type formula (implications expanded).
STFormula axiom_formula(AxiomId a);
// The axiom as a sequent: phi |- psi for implications, top |- phi otherwise.
STSequent axiom_sequent(AxiomId a);
// Translation of axiom_sequent with tau1/tau2 or tau_cond.
Inequality axiom_translation(AxiomId a);
// The translation as tabulated, with disjunction kept as a primitive.
Inequality axiom_table_row(AxiomId a);

// The condition for CS exists in two forms:
//   TheoremRow: f(x,Z) subset of {x} for all x, Z
//   Guarded:    x in Z implies f(x,Z) subset of {x}
enum class CSVariant { TheoremRow, Guarded };

// Direct quantifier evaluation. Throws KindMismatch when the frame kind does
// not fit the axiom.
bool fo_condition(AxiomId a, const NFrame& f);
bool fo_condition(AxiomId a, const CFrame& f, CSVariant cs = CSVariant::TheoremRow);

// Upward-closed families of subsets of an n-element set, in increasing code order.
const std::vector<Subset>& upsets(std::size_t n);

// Visitors return false to stop. Enumeration order is deterministic.
void enumerate_nframes(std::size_t n, const std::function<bool(const NFrame&)>& visit);
void enumerate_cframes(std::size_t n, const std::function<bool(const CFrame&)>& visit);
std::uint64_t nframe_count(std::size_t n);
std::uint64_t cframe_count(std::size_t n); // (2^n)^(n 2^n); n <= 2

// The i-th c-frame in enumeration order.
CFrame cframe_at(std::size_t n, std::uint64_t index);

// All relation assignments over carriers of the given sizes, optionally
// filtered by supportedness (n-kind only). Relations whose RelationBit is not
// in `vary` stay empty.
void enumerate_two_sorted(std::size_t nx, std::size_t ny, FrameKind kind, bool supported_only,
                          const std::function<bool(const TwoSortedFrame&)>& visit, unsigned vary = ~0U);

// Cached list of the supported n-kind frames with exactly these carrier sizes.
const std::vector<TwoSortedFrame>& supported_frames(std::size_t nx, std::size_t ny);

struct Mismatch {
    std::uint64_t frame_id = 0; // position in enumeration order over all sizes
    std::string frame;          // frame in text syntax
    bool axiom_valid = false;
    bool condition_holds = false;
};

struct CorrespondenceReport {
    AxiomId axiom = AxiomId::N;
    std::uint64_t frames_checked = 0;
    std::vector<std::uint64_t> frames_per_size; // index = |W|
    std::vector<Mismatch> mismatches;
    // CS only: the same comparison against the guarded condition
    std::optional<std::vector<Mismatch>> guarded_mismatches;
};

// Compares validity of axiom_sequent with fo_condition on every frame with
// 1 <= |W| <= max_size. Frames are split across worker threads.
CorrespondenceReport verify_correspondence(AxiomId a, std::size_t max_size, unsigned threads = 0);

} // namespace mtd
