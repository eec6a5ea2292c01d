#include "mtd/eval.hpp"

#include <algorithm>
#include <string>

namespace mtd {

namespace {

Subset lookup(const Valuation& v, Symbol s) {
    auto it = v.find(s);
    if (it == v.end()) throw EvalError("valuation undefined on variable " + s.name());
    return it->second;
}

template <typename Frame, typename Modal>
Subset eval_single(const Frame& f, const Valuation& v, const STFormula& phi, const Modal& modal) {
    const Subset w = f.universe();
    switch (phi.kind()) {
    case STKind::Var: {
        Subset s = lookup(v, phi.name());
        check_within(s, f.size(), "valuation");
        return s;
    }
    case STKind::Top: return w;
    case STKind::Bot: return 0;
    case STKind::Neg: return ~eval_single(f, v, phi.kid(0), modal) & w;
    case STKind::And: return eval_single(f, v, phi.kid(0), modal) & eval_single(f, v, phi.kid(1), modal);
    case STKind::Nabla:
    case STKind::Cond: return modal(phi);
    }
    return 0;
}

} // namespace

Subset eval_st(const NFrame& f, const Valuation& v, const STFormula& phi) {
    return eval_single(f, v, phi, [&](const STFormula& m) -> Subset {
        if (m.kind() != STKind::Nabla) throw EvalError("conditional formula evaluated on a neighbourhood frame");
        const Subset arg = eval_st(f, v, m.kid(0));
        Subset out = 0;
        for (std::size_t w = 0; w < f.size(); ++w)
            if (f.in_nu(w, arg)) out |= singleton(w);
        return out;
    });
}

Subset eval_st(const CFrame& f, const Valuation& v, const STFormula& phi) {
    return eval_single(f, v, phi, [&](const STFormula& m) -> Subset {
        if (m.kind() != STKind::Cond) throw EvalError("modal formula evaluated on a conditional frame");
        const Subset ante = eval_st(f, v, m.kid(0));
        const Subset cons = eval_st(f, v, m.kid(1));
        Subset out = 0;
        for (std::size_t w = 0; w < f.size(); ++w)
            if (subset_of(f.select(w, ante), cons)) out |= singleton(w);
        return out;
    });
}

unsigned relations_used(const MTFormula& f) {
    unsigned bits = 0;
    switch (f.kind()) {
    case MTKind::BoxNi:
    case MTKind::DiaIn: bits = kUsesNi; break;
    case MTKind::DiaNotni:
    case MTKind::BoxrNotni:
    case MTKind::BoxNotin:
    case MTKind::BoxrNotin: bits = kUsesNotni; break;
    case MTKind::DiaNu:
    case MTKind::BoxNuAdj: bits = kUsesNu; break;
    case MTKind::BoxNuc:
    case MTKind::DiaNucAdj: bits = kUsesNuc; break;
    case MTKind::Tri:
    case MTKind::BlackTri:
    case MTKind::BlackTriR: bits = kUsesTf; break;
    default: break;
    }
    for (const auto& k : f.kids()) bits |= relations_used(k);
    return bits;
}

CompiledFormula::CompiledFormula(const MTFormula& f, const std::vector<Symbol>& slots) {
    relations_ = mtd::relations_used(f);
    auto emit = [&](auto&& self, const MTFormula& g) -> void {
        for (const auto& k : g.kids()) self(self, k);
        std::uint32_t slot = 0;
        if (g.kind() == MTKind::Var || g.kind() == MTKind::NVar) {
            // S- and N-variables share names only in malformed input; the
            // sort of the slot is fixed by the caller's slot list
            auto it = std::find(slots.begin(), slots.end(), g.name());
            if (it == slots.end()) throw EvalError("no slot for variable " + g.name().name());
            slot = static_cast<std::uint32_t>(it - slots.begin());
        }
        code_.push_back({g.kind(), slot});
    };
    emit(emit, f);
}

Subset CompiledFormula::run(const TwoSortedFrame& k, const Subset* slot_values) const {
    const Subset xs = k.x_universe();
    const Subset ys = k.y_universe();
    Subset stack[64] = {};
    std::vector<Subset> big;
    Subset* st = stack;
    if (code_.size() > 64) {
        big.resize(code_.size());
        st = big.data();
    }
    std::size_t sp = 0;
    for (const auto& ins : code_) {
        Subset r = 0;
        switch (ins.kind) {
        case MTKind::Var:
        case MTKind::NVar: r = slot_values[ins.slot]; break;
        case MTKind::Top: r = xs; break;
        case MTKind::Bot: r = 0; break;
        case MTKind::One: r = ys; break;
        case MTKind::Zero: r = 0; break;
        case MTKind::Neg: r = ~st[--sp] & xs; break;
        case MTKind::Sim: r = ~st[--sp] & ys; break;
        case MTKind::And:
        case MTKind::Cap: sp -= 2; r = st[sp] & st[sp + 1]; break;
        case MTKind::Or:
        case MTKind::Cup: sp -= 2; r = st[sp] | st[sp + 1]; break;
        case MTKind::DiaNu: r = preimage(k.r_nu(), st[--sp]); break;
        case MTKind::BoxNuc: r = ~preimage(k.r_nuc(), ~st[--sp] & ys) & xs; break;
        case MTKind::BoxNi: r = ~preimage(k.r_ni(), ~st[--sp] & xs) & ys; break;
        case MTKind::DiaNotni: r = preimage(k.r_notni(), st[--sp]); break;
        case MTKind::BoxrNotni: r = ~preimage(k.r_notni(), st[--sp]) & ys; break;
        case MTKind::DiaIn: r = preimage(k.r_in(), st[--sp]); break;
        case MTKind::BoxNotin: r = ~preimage(k.r_notin(), ~st[--sp] & ys) & xs; break;
        case MTKind::BoxrNotin: r = ~preimage(k.r_notin(), st[--sp]) & xs; break;
        case MTKind::BoxNuAdj: r = ~preimage(k.r_nu_conv(), ~st[--sp] & xs) & ys; break;
        case MTKind::DiaNucAdj: r = preimage(k.r_nuc_conv(), st[--sp]); break;
        case MTKind::Tri: sp -= 2; r = tern_tri(k.t_f(), st[sp], st[sp + 1]); break;
        case MTKind::BlackTri: sp -= 2; r = tern_btri(k.t_f(), st[sp], st[sp + 1]); break;
        case MTKind::BlackTriR: sp -= 2; r = tern_btrir(k.t_f(), st[sp], st[sp + 1]); break;
        }
        st[sp++] = r;
    }
    return st[0];
}

namespace {

void check_kind(const TwoSortedFrame& k, const MTFormula& f) {
    const unsigned used = relations_used(f);
    if (k.kind() == FrameKind::Neighbourhood && (used & kUsesTf))
        throw EvalError("conditional connective evaluated on a neighbourhood-kind frame");
    if (k.kind() == FrameKind::Conditional && (used & (kUsesNu | kUsesNuc)))
        throw EvalError("neighbourhood connective evaluated on a conditional-kind frame");
}

std::vector<Symbol> slots_of(const MTFormula& a, const MTFormula& b, std::size_t& s_count) {
    auto s = variables(a);
    s.merge(variables(b));
    auto n = n_variables(a);
    n.merge(n_variables(b));
    for (auto sym : s)
        if (n.contains(sym)) throw EvalError("variable " + sym.name() + " used at both sorts");
    std::vector<Symbol> slots(s.begin(), s.end());
    s_count = slots.size();
    slots.insert(slots.end(), n.begin(), n.end());
    return slots;
}

} // namespace

Subset eval_mt(const TwoSortedFrame& k, const Valuation& v, const MTFormula& f) {
    if (!well_sorted(f)) throw EvalError("formula is not well sorted");
    check_kind(k, f);
    std::size_t s_count = 0;
    auto slots = slots_of(f, f, s_count);
    std::vector<Subset> values;
    values.reserve(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
        Subset s = lookup(v, slots[i]);
        check_within(s, i < s_count ? k.x_size() : k.y_size(), "valuation");
        values.push_back(s);
    }
    return CompiledFormula(f, slots).run(k, values.data());
}

bool for_each_assignment(std::size_t s_slots, Subset s_universe, std::size_t n_slots, Subset n_universe,
                         const std::function<bool(const std::vector<Subset>&)>& visit) {
    const std::size_t total = s_slots + n_slots;
    std::vector<Subset> values(total, 0);
    while (true) {
        if (!visit(values)) return false;
        std::size_t i = 0;
        for (; i < total; ++i) {
            const Subset top = i < s_slots ? s_universe : n_universe;
            if (values[i] < top) {
                ++values[i];
                break;
            }
            values[i] = 0;
        }
        if (i == total) return true;
    }
}

namespace {

template <typename Frame>
bool valid_single(const Frame& f, const STFormula& lhs, const STFormula& rhs) {
    auto vars = variables(lhs);
    vars.merge(variables(rhs));
    std::vector<Symbol> order(vars.begin(), vars.end());
    Valuation v;
    return for_each_assignment(order.size(), f.universe(), 0, 0, [&](const std::vector<Subset>& vals) {
        for (std::size_t i = 0; i < order.size(); ++i) v[order[i]] = vals[i];
        return subset_of(eval_st(f, v, lhs), eval_st(f, v, rhs));
    });
}

} // namespace

bool valid(const NFrame& f, const STFormula& phi) { return valid_single(f, st::top(), phi); }
bool valid(const CFrame& f, const STFormula& phi) { return valid_single(f, st::top(), phi); }
bool valid(const NFrame& f, const STFormula& lhs, const STFormula& rhs) { return valid_single(f, lhs, rhs); }
bool valid(const CFrame& f, const STFormula& lhs, const STFormula& rhs) { return valid_single(f, lhs, rhs); }

std::optional<Valuation> refute(const TwoSortedFrame& k, const Inequality& q) {
    if (!well_sorted(q.lhs) || !well_sorted(q.rhs)) throw EvalError("inequality is not well sorted");
    check_kind(k, q.lhs);
    check_kind(k, q.rhs);
    std::size_t s_count = 0;
    auto slots = slots_of(q.lhs, q.rhs, s_count);
    const CompiledFormula lhs(q.lhs, slots);
    const CompiledFormula rhs(q.rhs, slots);
    std::optional<Valuation> witness;
    for_each_assignment(s_count, k.x_universe(), slots.size() - s_count, k.y_universe(),
                        [&](const std::vector<Subset>& vals) {
                            if (subset_of(lhs.run(k, vals.data()), rhs.run(k, vals.data()))) return true;
                            Valuation v;
                            for (std::size_t i = 0; i < slots.size(); ++i) v[slots[i]] = vals[i];
                            witness = std::move(v);
                            return false;
                        });
    return witness;
}

bool valid(const TwoSortedFrame& k, const Inequality& q) { return !refute(k, q).has_value(); }

bool valid(const TwoSortedFrame& k, const MTFormula& f) {
    const MTFormula top = f.sort() == Sort::S ? mt::top() : mt::one();
    return valid(k, Inequality(top, f));
}

} // namespace mtd
