#include "mtd/correspondence.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "mtd/eval.hpp"
#include "mtd/translation.hpp"

namespace mtd {

// ---------------------------------------------------------------------------
// axioms

namespace {
const STFormula p = st::var("p");
const STFormula q = st::var("q");
} // namespace

STSequent axiom_sequent(AxiomId a) {
    using namespace st;
    switch (a) {
    case AxiomId::N: return {top(), nabla(top())};
    case AxiomId::P: return {top(), neg(nabla(bot()))};
    case AxiomId::C: return {conj(nabla(p), nabla(q)), nabla(conj(p, q))};
    case AxiomId::T: return {nabla(p), p};
    case AxiomId::Four: return {nabla(nabla(p)), nabla(p)};
    case AxiomId::FourPrime: return {nabla(p), nabla(nabla(p))};
    case AxiomId::Five: return {neg(nabla(neg(p))), nabla(neg(nabla(neg(p))))};
    case AxiomId::B: return {p, nabla(neg(nabla(neg(p))))};
    case AxiomId::D: return {nabla(p), neg(nabla(neg(p)))};
    case AxiomId::CS: return {conj(p, q), cond(p, q)};
    case AxiomId::CEM: return {top(), disj(cond(p, q), cond(p, neg(q)))};
    case AxiomId::ID: return {top(), cond(p, p)};
    }
    throw std::logic_error("unknown axiom");
}

STFormula axiom_formula(AxiomId a) {
    auto s = axiom_sequent(a);
    if (s.lhs == st::top()) return s.rhs;
    return st::implies(s.lhs, s.rhs);
}

Inequality axiom_translation(AxiomId a) {
    auto s = axiom_sequent(a);
    return translate_sequent(s.lhs, s.rhs);
}

Inequality axiom_table_row(AxiomId a) {
    using namespace mt;
    const MTFormula mp = var("p");
    const MTFormula mq = var("q");
    auto nu_ni = [](MTFormula x) { return dia_nu(box_ni(std::move(x))); };
    auto nuc_notni = [](MTFormula x) { return box_nuc(dia_notni(std::move(x))); };
    const MTFormula ante = cap(box_ni(mp), boxr_notni(mp));
    switch (a) {
    case AxiomId::N: return {top(), nuc_notni(top())};
    case AxiomId::P: return {top(), neg(nu_ni(bot()))};
    case AxiomId::C: return {conj(nu_ni(mp), nu_ni(mq)), nuc_notni(conj(mp, mq))};
    case AxiomId::T: return {nu_ni(mp), mp};
    case AxiomId::Four: return {nu_ni(nu_ni(mp)), nuc_notni(mp)};
    case AxiomId::FourPrime: return {nu_ni(mp), nuc_notni(nuc_notni(mp))};
    case AxiomId::Five: return {neg(nuc_notni(neg(mp))), nuc_notni(neg(nu_ni(neg(mp))))};
    case AxiomId::B: return {mp, nuc_notni(neg(nu_ni(neg(mp))))};
    case AxiomId::D: return {nu_ni(mp), neg(nu_ni(neg(mp)))};
    case AxiomId::CS: return {conj(mp, mq), tri(ante, mq)};
    case AxiomId::CEM: return {top(), disj(tri(ante, mq), tri(ante, neg(mq)))};
    case AxiomId::ID: return {top(), tri(ante, mp)};
    }
    throw std::logic_error("unknown axiom");
}

// ---------------------------------------------------------------------------
// first-order conditions

namespace {

// {y | X in nu(y)}
Subset holders(const NFrame& f, Subset x) {
    Subset out = 0;
    for (std::size_t y = 0; y < f.size(); ++y)
        if (f.in_nu(y, x)) out |= singleton(y);
    return out;
}

template <typename Pred>
bool all_worlds_subsets(const NFrame& f, Pred pred) {
    for (std::size_t w = 0; w < f.size(); ++w)
        for (Subset x = 0; x < f.subset_count(); ++x)
            if (!pred(w, x)) return false;
    return true;
}

} // namespace

bool fo_condition(AxiomId a, const NFrame& f) {
    const Subset world = f.universe();
    switch (a) {
    case AxiomId::N:
        for (std::size_t w = 0; w < f.size(); ++w)
            if (!f.in_nu(w, world)) return false;
        return true;
    case AxiomId::P:
        for (std::size_t w = 0; w < f.size(); ++w)
            if (f.in_nu(w, 0)) return false;
        return true;
    case AxiomId::C:
        return all_worlds_subsets(f, [&](std::size_t w, Subset x) {
            for (Subset y = 0; y < f.subset_count(); ++y)
                if (f.in_nu(w, x) && f.in_nu(w, y) && !f.in_nu(w, x & y)) return false;
            return true;
        });
    case AxiomId::T:
        return all_worlds_subsets(f, [&](std::size_t w, Subset x) { return !f.in_nu(w, x) || contains(x, w); });
    case AxiomId::Four:
        // for all w, Y, X: (X in nu(w) and every x in X has Y in nu(x)) implies Y in nu(w)
        for (std::size_t w = 0; w < f.size(); ++w)
            for (Subset y = 0; y < f.subset_count(); ++y)
                for (Subset x = 0; x < f.subset_count(); ++x) {
                    if (!f.in_nu(w, x)) continue;
                    bool every = true;
                    for (std::size_t e = 0; e < f.size(); ++e)
                        if (contains(x, e) && !f.in_nu(e, y)) every = false;
                    if (every && !f.in_nu(w, y)) return false;
                }
        return true;
    case AxiomId::FourPrime:
        return all_worlds_subsets(f, [&](std::size_t w, Subset x) {
            return !f.in_nu(w, x) || f.in_nu(w, holders(f, x));
        });
    case AxiomId::Five:
        return all_worlds_subsets(f, [&](std::size_t w, Subset x) {
            return f.in_nu(w, x) || f.in_nu(w, ~holders(f, x) & world);
        });
    case AxiomId::B:
        return all_worlds_subsets(f, [&](std::size_t w, Subset x) {
            return !contains(x, w) || f.in_nu(w, ~holders(f, ~x & world) & world);
        });
    case AxiomId::D:
        return all_worlds_subsets(f, [&](std::size_t w, Subset x) {
            return !f.in_nu(w, x) || !f.in_nu(w, ~x & world);
        });
    default: break;
    }
    throw KindMismatch(std::string("axiom ") + to_string(a) + " is evaluated on conditional frames");
}

bool fo_condition(AxiomId a, const CFrame& f, CSVariant cs) {
    for (std::size_t x = 0; x < f.size(); ++x)
        for (Subset z = 0; z < f.subset_count(); ++z) {
            const Subset out = f.select(x, z);
            switch (a) {
            case AxiomId::CS:
                if (cs == CSVariant::Guarded && !contains(z, x)) break;
                if (!subset_of(out, singleton(x))) return false;
                break;
            case AxiomId::CEM:
                if (cardinality(out) > 1) return false;
                break;
            case AxiomId::ID:
                if (!subset_of(out, z)) return false;
                break;
            default:
                throw KindMismatch(std::string("axiom ") + to_string(a) + " is evaluated on neighbourhood frames");
            }
        }
    return true;
}

// ---------------------------------------------------------------------------
// enumeration

const std::vector<Subset>& upsets(std::size_t n) {
    if (n > 3) throw FrameError("up-set enumeration is limited to 3 worlds");
    static const auto table = [] {
        std::vector<std::vector<Subset>> t(4);
        for (std::size_t m = 0; m <= 3; ++m) {
            const std::size_t families = std::size_t{1} << (std::size_t{1} << m);
            for (Subset fam = 0; fam < families; ++fam)
                if (upward_closed(fam, m)) t[m].push_back(fam);
        }
        return t;
    }();
    return table[n];
}

std::uint64_t nframe_count(std::size_t n) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < n; ++i) c *= upsets(n).size();
    return c;
}

std::uint64_t cframe_count(std::size_t n) {
    if (n > 2) throw FrameError("c-frame enumeration is limited to 2 worlds");
    const std::uint64_t entries = n << n;
    return std::uint64_t{1} << (entries * n);
}

namespace {

NFrame nframe_at(std::size_t n, std::uint64_t index) {
    const auto& ups = upsets(n);
    std::vector<Subset> fams(n);
    for (std::size_t w = 0; w < n; ++w) {
        fams[w] = ups[index % ups.size()];
        index /= ups.size();
    }
    return NFrame(n, std::move(fams));
}

} // namespace

CFrame cframe_at(std::size_t n, std::uint64_t index) {
    CFrame f(n);
    const std::size_t subsets = std::size_t{1} << n;
    const Subset mask = full_set(n);
    for (std::size_t w = 0; w < n; ++w)
        for (Subset z = 0; z < subsets; ++z) {
            f.set_select(w, z, index & mask);
            index >>= n;
        }
    return f;
}

void enumerate_nframes(std::size_t n, const std::function<bool(const NFrame&)>& visit) {
    const std::uint64_t total = nframe_count(n);
    for (std::uint64_t i = 0; i < total; ++i)
        if (!visit(nframe_at(n, i))) return;
}

void enumerate_cframes(std::size_t n, const std::function<bool(const CFrame&)>& visit) {
    const std::uint64_t total = cframe_count(n);
    for (std::uint64_t i = 0; i < total; ++i)
        if (!visit(cframe_at(n, i))) return;
}

namespace {

// Supportedness on raw successor masks, before any frame object is built.
bool supported_raw(std::size_t nx, const Subset* ni, const Subset* notni, const Subset* nu, const Subset* nuc,
                   std::size_t ny) {
    const Subset xs = full_set(nx);
    for (Subset d = 0; d <= xs; ++d) {
        Subset box_ni = 0, dia_notni = 0;
        for (std::size_t y = 0; y < ny; ++y) {
            if (subset_of(ni[y], d)) box_ni |= singleton(y);
            if ((notni[y] & d) != 0) dia_notni |= singleton(y);
        }
        for (std::size_t x = 0; x < nx; ++x) {
            const bool lhs = (nu[x] & box_ni) != 0;
            const bool rhs = subset_of(nuc[x], dia_notni);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

} // namespace

void enumerate_two_sorted(std::size_t nx, std::size_t ny, FrameKind kind, bool supported_only,
                          const std::function<bool(const TwoSortedFrame&)>& visit, unsigned vary) {
    if (supported_only && kind != FrameKind::Neighbourhood)
        throw FrameError("supportedness is defined for neighbourhood-kind frames");
    const bool n_kind = kind == FrameKind::Neighbourhood;
    // widths of the varying blocks: ni, notni, nu, nuc rows, tf rows
    const std::size_t w_ni = (vary & kUsesNi) ? nx : 0;
    const std::size_t w_notni = (vary & kUsesNotni) ? nx : 0;
    const std::size_t w_nu = (n_kind && (vary & kUsesNu)) ? ny : 0;
    const std::size_t w_nuc = (n_kind && (vary & kUsesNuc)) ? ny : 0;
    const std::size_t w_tf = (!n_kind && (vary & kUsesTf)) ? nx : 0;
    const std::size_t bits = ny * (w_ni + w_notni) + nx * (w_nu + w_nuc) + nx * ny * w_tf;
    if (bits > 40) throw FrameError("two-sorted enumeration space too large");
    std::vector<Subset> ni(ny), notni(ny), nu(nx), nuc(nx), tf(nx * ny);
    const std::uint64_t total = std::uint64_t{1} << bits;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        auto take = [&](std::size_t width) {
            const Subset v = c & full_set(width);
            c >>= width;
            return v;
        };
        for (std::size_t y = 0; y < ny; ++y) ni[y] = take(w_ni);
        for (std::size_t y = 0; y < ny; ++y) notni[y] = take(w_notni);
        for (std::size_t x = 0; x < nx; ++x) nu[x] = take(w_nu);
        for (std::size_t x = 0; x < nx; ++x) nuc[x] = take(w_nuc);
        for (auto& t : tf) t = take(w_tf);
        if (supported_only && !supported_raw(nx, ni.data(), notni.data(), nu.data(), nuc.data(), ny)) continue;
        Relation r_ni(ny, nx), r_notni(ny, nx);
        for (std::size_t y = 0; y < ny; ++y) {
            r_ni.set_successors(y, ni[y]);
            r_notni.set_successors(y, notni[y]);
        }
        TwoSortedFrame k;
        if (n_kind) {
            Relation r_nu(nx, ny), r_nuc(nx, ny);
            for (std::size_t x = 0; x < nx; ++x) {
                r_nu.set_successors(x, nu[x]);
                r_nuc.set_successors(x, nuc[x]);
            }
            k = TwoSortedFrame::neighbourhood(std::move(r_ni), std::move(r_notni), std::move(r_nu), std::move(r_nuc));
        } else {
            TernaryRelation t(nx, ny, nx);
            for (std::size_t x = 0; x < nx; ++x)
                for (std::size_t y = 0; y < ny; ++y) t.set_successors(x, y, tf[x * ny + y]);
            k = TwoSortedFrame::conditional(std::move(r_ni), std::move(r_notni), std::move(t));
        }
        if (!visit(k)) return;
    }
}

const std::vector<TwoSortedFrame>& supported_frames(std::size_t nx, std::size_t ny) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, std::size_t>, std::vector<TwoSortedFrame>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(nx, ny);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<TwoSortedFrame> out;
    enumerate_two_sorted(nx, ny, FrameKind::Neighbourhood, true, [&](const TwoSortedFrame& k) {
        out.push_back(k);
        return true;
    });
    return cache.emplace(key, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------
// harness

namespace {

unsigned worker_count(unsigned requested) {
    if (requested) return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

// Runs check(i) for i in [0, total) across threads; results merged by index.
template <typename Check>
void parallel_for(std::uint64_t total, unsigned threads, Check check) {
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        constexpr std::uint64_t chunk = 256;
        while (true) {
            const std::uint64_t start = next.fetch_add(chunk);
            if (start >= total) return;
            const std::uint64_t end = std::min(total, start + chunk);
            for (std::uint64_t i = start; i < end; ++i) check(i);
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
}

} // namespace

CorrespondenceReport verify_correspondence(AxiomId a, std::size_t max_size, unsigned threads) {
    CorrespondenceReport report;
    report.axiom = a;
    report.frames_per_size.assign(max_size + 1, 0);
    const bool cond = is_conditional(a);
    if (a == AxiomId::CS) report.guarded_mismatches.emplace();
    const STSequent ax = axiom_sequent(a);
    const unsigned workers = worker_count(threads);
    std::uint64_t offset = 0;
    std::mutex mu;
    for (std::size_t n = 1; n <= max_size; ++n) {
        const std::uint64_t total = cond ? cframe_count(n) : nframe_count(n);
        parallel_for(total, workers, [&](std::uint64_t i) {
            if (cond) {
                const CFrame f = cframe_at(n, i);
                const bool v = valid(f, ax.lhs, ax.rhs);
                const bool row = fo_condition(a, f, CSVariant::TheoremRow);
                const bool guarded = a == AxiomId::CS ? fo_condition(a, f, CSVariant::Guarded) : row;
                if (v != row || v != guarded) {
                    std::lock_guard lock(mu);
                    if (v != row) report.mismatches.push_back({offset + i, print_frame(f), v, row});
                    if (v != guarded && report.guarded_mismatches) report.guarded_mismatches->push_back({offset + i, print_frame(f), v, guarded});
                }
            } else {
                const NFrame f = nframe_at(n, i);
                const bool v = valid(f, ax.lhs, ax.rhs);
                const bool c = fo_condition(a, f);
                if (v != c) {
                    std::lock_guard lock(mu);
                    report.mismatches.push_back({offset + i, print_frame(f), v, c});
                }
            }
        });
        report.frames_per_size[n] = total;
        report.frames_checked += total;
        offset += total;
    }
    auto by_id = [](const Mismatch& x, const Mismatch& y) { return x.frame_id < y.frame_id; };
    std::sort(report.mismatches.begin(), report.mismatches.end(), by_id);
    if (report.guarded_mismatches) std::sort(report.guarded_mismatches->begin(), report.guarded_mismatches->end(), by_id);
    return report;
}

} // namespace mtd
