#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace mtd {

// The twelve axioms with known frame correspondents. N through D are
// monotone modal axioms, CS, CEM and ID are conditional ones.
enum class AxiomId { N, P, C, T, Four, FourPrime, Five, B, D, CS, CEM, ID };

inline constexpr std::array<AxiomId, 12> kAllAxioms{AxiomId::N,    AxiomId::P,         AxiomId::C,    AxiomId::T,
                                                     AxiomId::Four, AxiomId::FourPrime, AxiomId::Five, AxiomId::B,
                                                     AxiomId::D,    AxiomId::CS,        AxiomId::CEM,  AxiomId::ID};

constexpr bool is_conditional(AxiomId a) { return a == AxiomId::CS || a == AxiomId::CEM || a == AxiomId::ID; }

// "N", "P", "C", "T", "4", "4'", "5", "B", "D", "CS", "CEM", "ID"
const char* to_string(AxiomId a);
// Also accepts "Four", "FourPrime", "Five" and "4p".
std::optional<AxiomId> parse_axiom(std::string_view name);

} // namespace mtd
