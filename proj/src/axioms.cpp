#include "mtd/axioms.hpp"

namespace mtd {

const char* to_string(AxiomId a) {
    switch (a) {
    case AxiomId::N: return "N";
    case AxiomId::P: return "P";
    case AxiomId::C: return "C";
    case AxiomId::T: return "T";
    case AxiomId::Four: return "4";
    case AxiomId::FourPrime: return "4'";
    case AxiomId::Five: return "5";
    case AxiomId::B: return "B";
    case AxiomId::D: return "D";
    case AxiomId::CS: return "CS";
    case AxiomId::CEM: return "CEM";
    case AxiomId::ID: return "ID";
    }
    return "?";
}

std::optional<AxiomId> parse_axiom(std::string_view name) {
    for (AxiomId a : kAllAxioms)
        if (name == to_string(a)) return a;
    if (name == "Four") return AxiomId::Four;
    if (name == "FourPrime" || name == "4p") return AxiomId::FourPrime;
    if (name == "Five") return AxiomId::Five;
    return std::nullopt;
}

} // namespace mtd
