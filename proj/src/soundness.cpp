#include "mtd/soundness.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

namespace mtd {

MTFormula interpret_structure(const Structure& s, Polarity pol) {
    const bool pre = pol == Polarity::Precedent;
    const Polarity flip = pre ? Polarity::Succedent : Polarity::Precedent;
    auto need = [&](bool precedent_only) {
        if (precedent_only != pre)
            throw NotInterpretable(std::string("structural connective '") + token(s.kind()) + "' in " +
                                   (pre ? "precedent" : "succedent") + " position");
    };
    auto kid = [&](std::size_t i, Polarity p) { return interpret_structure(s.kid(i), p); };
    auto unary = [&](MTKind k, Polarity p) { return MTFormula(k, {kid(0, p)}); };
    auto binary = [&](MTKind k, Polarity p0, Polarity p1) { return MTFormula(k, {kid(0, p0), kid(1, p1)}); };
    switch (s.kind()) {
    case StructKind::Formula: return s.leaf();
    case StructKind::Meta: return s.sort() == Sort::S ? mt::var(s.meta_name().name()) : mt::nvar(s.meta_name().name());
    case StructKind::TNeg: return unary(MTKind::Neg, flip);
    case StructKind::TSim: return unary(MTKind::Sim, flip);
    case StructKind::HTop: need(true); return mt::top();
    case StructKind::CBot: need(false); return mt::bot();
    case StructKind::HOne: need(true); return mt::one();
    case StructKind::CZero: need(false); return mt::zero();
    case StructKind::HWedge: need(true); return binary(MTKind::And, pol, pol);
    case StructKind::CVee: need(false); return binary(MTKind::Or, pol, pol);
    case StructKind::HCap: need(true); return binary(MTKind::Cap, pol, pol);
    case StructKind::CCup: need(false); return binary(MTKind::Cup, pol, pol);
    case StructKind::HNu: need(true); return unary(MTKind::DiaNu, pol);
    case StructKind::CNuc: need(false); return unary(MTKind::BoxNuc, pol);
    case StructKind::HIn: need(true); return unary(MTKind::DiaIn, pol);
    case StructKind::CNotin: need(false); return unary(MTKind::BoxNotin, pol);
    case StructKind::CNi: need(false); return unary(MTKind::BoxNi, pol);
    case StructKind::HNotni: need(true); return unary(MTKind::DiaNotni, pol);
    case StructKind::CNuAdj: need(false); return unary(MTKind::BoxNuAdj, pol);
    case StructKind::HNucAdj: need(true); return unary(MTKind::DiaNucAdj, pol);
    case StructKind::CTri: need(false); return binary(MTKind::Tri, flip, pol);
    case StructKind::HBlackTri: need(true); return binary(MTKind::BlackTri, pol, pol);
    case StructKind::CBlackTriR: need(false); return binary(MTKind::BlackTriR, flip, pol);
    case StructKind::CNotinR: need(false); return unary(MTKind::BoxrNotin, flip);
    case StructKind::CNotniR: need(false); return unary(MTKind::BoxrNotni, flip);
    }
    throw NotInterpretable("unknown structural connective");
}

Inequality interpret_sequent(const Sequent& s) {
    return {interpret_structure(s.lhs, Polarity::Precedent), interpret_structure(s.rhs, Polarity::Succedent)};
}

bool sequent_valid(const TwoSortedFrame& k, const Sequent& s) { return valid(k, interpret_sequent(s)); }

namespace {

struct Slot {
    Symbol name;
    Sort sort;
};

void collect_slots(const MTFormula& f, std::vector<Slot>& out) {
    if (f.kind() == MTKind::Var || f.kind() == MTKind::NVar) {
        const Sort sort = f.kind() == MTKind::Var ? Sort::S : Sort::N;
        if (std::none_of(out.begin(), out.end(), [&](const Slot& s) { return s.name == f.name(); }))
            out.push_back({f.name(), sort});
        return;
    }
    for (const auto& k : f.kids()) collect_slots(k, out);
}

int max_slot(const MTFormula& f, const std::vector<Slot>& slots) {
    int m = -1;
    if (f.kind() == MTKind::Var || f.kind() == MTKind::NVar) {
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (slots[i].name == f.name()) m = static_cast<int>(i);
        return m;
    }
    for (const auto& k : f.kids()) m = std::max(m, max_slot(k, slots));
    return m;
}

struct CompiledCheck {
    CompiledFormula lhs, rhs;
    int ready_at = -1; // last slot it depends on
};

// One orientation of a rule, compiled against a common slot order in which
// premise metavariables come first so premises can prune early.
struct CompiledRule {
    std::vector<Slot> slots;
    std::vector<CompiledCheck> premises;
    CompiledCheck conclusion;
    unsigned relations = 0;
    bool reversed = false;
};

CompiledRule compile(const RuleSchema& r, bool reversed) {
    CompiledRule c;
    c.reversed = reversed;
    std::vector<Inequality> prem;
    for (const auto& p : r.premises) prem.push_back(interpret_sequent(p));
    const Inequality concl = interpret_sequent(r.conclusion);
    for (const auto& q : prem) {
        collect_slots(q.lhs, c.slots);
        collect_slots(q.rhs, c.slots);
    }
    collect_slots(concl.lhs, c.slots);
    collect_slots(concl.rhs, c.slots);
    std::vector<Symbol> names;
    for (const auto& s : c.slots) names.push_back(s.name);
    auto build = [&](const Inequality& q) {
        CompiledCheck k{CompiledFormula(q.lhs, names), CompiledFormula(q.rhs, names),
                        std::max(max_slot(q.lhs, c.slots), max_slot(q.rhs, c.slots))};
        c.relations |= k.lhs.relations_used() | k.rhs.relations_used();
        return k;
    };
    for (const auto& q : prem) c.premises.push_back(build(q));
    c.conclusion = build(concl);
    return c;
}

bool holds(const CompiledCheck& c, const TwoSortedFrame& k, const Subset* vals) {
    return subset_of(c.lhs.run(k, vals), c.rhs.run(k, vals));
}

// Depth-first over slot values; premises are tested as soon as their slots are bound.
// Returns false on the first violation, leaving vals at the counterexample.
bool check_frame(const CompiledRule& r, const TwoSortedFrame& k, std::vector<Subset>& vals, std::uint64_t& count) {
    const int n = static_cast<int>(r.slots.size());
    for (const auto& p : r.premises)
        if (p.ready_at < 0 && !holds(p, k, vals.data())) return true;
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n) {
            ++count;
            return holds(r.conclusion, k, vals.data());
        }
        const Subset top = r.slots[i].sort == Sort::S ? k.x_universe() : k.y_universe();
        for (Subset v = 0;; ++v) {
            vals[i] = v;
            bool premises_ok = true;
            for (const auto& p : r.premises)
                if (p.ready_at == i && !holds(p, k, vals.data())) {
                    premises_ok = false;
                    break;
                }
            if (premises_ok && !self(self, i + 1)) return false;
            if (v == top) break;
        }
        return true;
    };
    if (n == 0) {
        ++count;
        return holds(r.conclusion, k, vals.data());
    }
    return rec(rec, 0);
}

// Copy of k with the relations outside `used` emptied.
std::vector<Subset> projection_key(const TwoSortedFrame& k, unsigned used) {
    std::vector<Subset> key{k.x_size(), k.y_size()};
    auto rel = [&](const Relation& r) {
        for (std::size_t s = 0; s < r.source_size(); ++s) key.push_back(r.successors(s));
    };
    if (used & kUsesNi) rel(k.r_ni());
    if (used & kUsesNotni) rel(k.r_notni());
    if (used & kUsesNu) rel(k.r_nu());
    if (used & kUsesNuc) rel(k.r_nuc());
    return key;
}

TwoSortedFrame project(const TwoSortedFrame& k, unsigned used) {
    auto keep = [&](const Relation& r, unsigned bit) {
        return (used & bit) ? r : Relation(r.source_size(), r.target_size());
    };
    return TwoSortedFrame::neighbourhood(keep(k.r_ni(), kUsesNi), keep(k.r_notni(), kUsesNotni),
                                         keep(k.r_nu(), kUsesNu), keep(k.r_nuc(), kUsesNuc));
}

std::vector<TwoSortedFrame> frames_for(const RuleSchema& r, Calculus calc, unsigned used,
                                       const SoundnessBounds& b) {
    std::vector<TwoSortedFrame> frames;
    if (r.group == RuleGroup::Extension) {
        const auto axiom = parse_axiom(r.name);
        if (!axiom) throw std::invalid_argument("extension rule without an axiom: " + r.name);
        for (std::size_t n = 1; n <= b.max_worlds; ++n) {
            if (is_conditional(*axiom))
                enumerate_cframes(n, [&](const CFrame& f) {
                    if (fo_condition(*axiom, f, CSVariant::Guarded)) frames.push_back(star(f));
                    return true;
                });
            else
                enumerate_nframes(n, [&](const NFrame& f) {
                    if (fo_condition(*axiom, f)) frames.push_back(star(f));
                    return true;
                });
        }
        return frames;
    }
    for (std::size_t nx = 1; nx <= b.max_x; ++nx)
        for (std::size_t ny = 1; ny <= b.max_y; ++ny) {
            if (calc == Calculus::Cond) {
                enumerate_two_sorted(
                    nx, ny, FrameKind::Conditional, false,
                    [&](const TwoSortedFrame& k) {
                        frames.push_back(k);
                        return true;
                    },
                    used);
                continue;
            }
            std::set<std::vector<Subset>> seen;
            for (const auto& k : supported_frames(nx, ny))
                if (seen.insert(projection_key(k, used)).second) frames.push_back(project(k, used));
        }
    return frames;
}

} // namespace

SoundnessReport rule_sound(const RuleSchema& r, Calculus calc, const SoundnessBounds& bounds) {
    SoundnessReport report;
    report.rule = r.name;
    std::vector<CompiledRule> orientations{compile(r, false)};
    if (r.bidirectional) orientations.push_back(compile(reversed(r), true));
    unsigned used = 0;
    for (const auto& o : orientations) used |= o.relations;
    const auto frames = frames_for(r, calc, used, bounds);
    report.frames_checked = frames.size();

    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> total{0};
    std::mutex mu;
    auto worker = [&] {
        std::uint64_t local = 0;
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= frames.size()) break;
            for (const auto& o : orientations) {
                std::vector<Subset> vals(o.slots.size(), 0);
                if (check_frame(o, frames[i], vals, local)) continue;
                std::lock_guard lock(mu);
                if (report.violations.size() >= bounds.max_violations) continue;
                RuleViolation v;
                v.frame = print_frame(frames[i]);
                v.reversed = o.reversed;
                for (std::size_t s = 0; s < o.slots.size(); ++s) v.assignment[o.slots[s].name] = vals[s];
                report.violations.push_back(std::move(v));
            }
        }
        total += local;
    };
    const unsigned threads = bounds.threads ? bounds.threads : std::max(1U, std::thread::hardware_concurrency());
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    report.assignments_checked = total;
    return report;
}

} // namespace mtd
