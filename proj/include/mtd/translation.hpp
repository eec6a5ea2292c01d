#pragma once

#include <stdexcept>

#include "mtd/syntax.hpp"

namespace mtd {

class TranslationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Embeddings of the monotone modal language into the two-sorted language.
// tau1 reads nabla as <nu>[ni], tau2 as [nu^c]<notni>; negation swaps them.
MTFormula tau1(const STFormula& phi);
MTFormula tau2(const STFormula& phi);

// Embedding of the conditional language:
// (a > b) becomes ([ni]a cap [notni>a) |> b.
MTFormula tau_cond(const STFormula& phi);

// phi |- psi becomes tau1(phi) <= tau2(psi) for modal formulas and
// tau_cond(phi) <= tau_cond(psi) for conditional ones.
Inequality translate_sequent(const STFormula& phi, const STFormula& psi);

} // namespace mtd
