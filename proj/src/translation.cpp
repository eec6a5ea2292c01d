#include "mtd/translation.hpp"

namespace mtd {

namespace {

enum class Side { First, Second };

MTFormula tau(const STFormula& phi, Side side) {
    switch (phi.kind()) {
    case STKind::Var: return mt::var(phi.name().name());
    case STKind::Top: return mt::top();
    case STKind::Bot: return mt::bot();
    case STKind::Neg: return mt::neg(tau(phi.kid(0), side == Side::First ? Side::Second : Side::First));
    case STKind::And: return mt::conj(tau(phi.kid(0), side), tau(phi.kid(1), side));
    case STKind::Nabla: {
        auto inner = tau(phi.kid(0), side);
        return side == Side::First ? mt::dia_nu(mt::box_ni(std::move(inner)))
                                   : mt::box_nuc(mt::dia_notni(std::move(inner)));
    }
    case STKind::Cond: break;
    }
    throw TranslationError("conditional formula given to the modal translation");
}

void require(const STFormula& phi, bool conditional) {
    auto lang = language_of(phi);
    if (lang == STLanguage::Mixed) throw TranslationError("formula mixes nabla and >");
    if (conditional && lang == STLanguage::Nabla) throw TranslationError("modal formula given to the conditional translation");
    if (!conditional && lang == STLanguage::Cond) throw TranslationError("conditional formula given to the modal translation");
}

} // namespace

MTFormula tau1(const STFormula& phi) {
    require(phi, false);
    return tau(phi, Side::First);
}

MTFormula tau2(const STFormula& phi) {
    require(phi, false);
    return tau(phi, Side::Second);
}

MTFormula tau_cond(const STFormula& phi) {
    require(phi, true);
    switch (phi.kind()) {
    case STKind::Var: return mt::var(phi.name().name());
    case STKind::Top: return mt::top();
    case STKind::Bot: return mt::bot();
    case STKind::Neg: return mt::neg(tau_cond(phi.kid(0)));
    case STKind::And: return mt::conj(tau_cond(phi.kid(0)), tau_cond(phi.kid(1)));
    case STKind::Cond: {
        auto ante = tau_cond(phi.kid(0));
        return mt::tri(mt::cap(mt::box_ni(ante), mt::boxr_notni(ante)), tau_cond(phi.kid(1)));
    }
    case STKind::Nabla: break;
    }
    throw TranslationError("modal formula given to the conditional translation");
}

Inequality translate_sequent(const STFormula& phi, const STFormula& psi) {
    auto a = language_of(phi);
    auto b = language_of(psi);
    if (a == STLanguage::Mixed || b == STLanguage::Mixed ||
        (a != STLanguage::Boolean && b != STLanguage::Boolean && a != b))
        throw TranslationError("sequent mixes the modal and conditional languages");
    const bool conditional = a == STLanguage::Cond || b == STLanguage::Cond;
    if (conditional) return {tau_cond(phi), tau_cond(psi)};
    return {tau1(phi), tau2(psi)};
}

} // namespace mtd
