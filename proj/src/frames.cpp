#include "mtd/frames.hpp"

#include <sstream>

namespace mtd {

namespace {

void check_worlds(std::size_t n) {
    if (n > kMaxWorlds)
        throw FrameError("single-type frames support at most " + std::to_string(kMaxWorlds) + " worlds");
}

std::string set_text(Subset s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (std::size_t i = 0; i < 64; ++i) {
        if (!contains(s, i)) continue;
        out << (first ? "" : ",") << i;
        first = false;
    }
    out << '}';
    return out.str();
}

} // namespace

NFrame::NFrame(std::size_t worlds) : n_(worlds) {
    check_worlds(worlds);
    nu_.assign(worlds, 0);
}

NFrame::NFrame(std::size_t worlds, std::vector<Subset> families) : n_(worlds), nu_(std::move(families)) {
    check_worlds(worlds);
    if (nu_.size() != worlds) throw FrameError("one neighbourhood family per world required");
    for (auto fam : nu_) check_within(fam, subset_count(), "neighbourhood family");
}

void NFrame::set_family(std::size_t w, Subset fam) {
    check_within(fam, subset_count(), "neighbourhood family");
    nu_.at(w) = fam;
}

void NFrame::add_neighbourhood(std::size_t w, Subset x) {
    check_within(x, n_, "neighbourhood");
    nu_.at(w) |= singleton(x);
}

bool upward_closed(Subset family, std::size_t n) {
    const std::size_t count = std::size_t{1} << n;
    for (std::size_t x = 0; x < count; ++x) {
        if (!contains(family, x)) continue;
        // it suffices to check single-element extensions
        for (std::size_t i = 0; i < n; ++i)
            if (!contains(family, x | singleton(i))) return false;
    }
    return true;
}

bool NFrame::is_monotone() const {
    for (auto fam : nu_)
        if (!upward_closed(fam, n_)) return false;
    return true;
}

std::string NFrame::monotonicity_violation() const {
    for (std::size_t w = 0; w < n_; ++w)
        for (Subset x = 0; x < subset_count(); ++x) {
            if (!in_nu(w, x)) continue;
            for (std::size_t i = 0; i < n_; ++i) {
                Subset y = x | singleton(i);
                if (!in_nu(w, y))
                    return set_text(x) + " in nu(" + std::to_string(w) + ") but " + set_text(y) + " is not";
            }
        }
    return {};
}

CFrame::CFrame(std::size_t worlds) : n_(worlds) {
    check_worlds(worlds);
    f_.assign(worlds << worlds, 0);
}

void CFrame::set_select(std::size_t w, Subset z, Subset out) {
    check_within(z, n_, "selection argument");
    check_within(out, n_, "selection value");
    f_.at(w * subset_count() + z) = out;
}

TwoSortedFrame TwoSortedFrame::neighbourhood(Relation ni, Relation notni, Relation nu, Relation nuc) {
    TwoSortedFrame k;
    k.kind_ = FrameKind::Neighbourhood;
    k.ny_ = ni.source_size();
    k.nx_ = ni.target_size();
    auto same = [&](const Relation& r, std::size_t s, std::size_t t) {
        return r.source_size() == s && r.target_size() == t;
    };
    if (!same(notni, k.ny_, k.nx_) || !same(nu, k.nx_, k.ny_) || !same(nuc, k.nx_, k.ny_))
        throw FrameError("relation carriers do not match");
    k.in_ = ni.converse();
    k.notin_ = notni.converse();
    k.nu_conv_ = nu.converse();
    k.nuc_conv_ = nuc.converse();
    k.ni_ = std::move(ni);
    k.notni_ = std::move(notni);
    k.nu_ = std::move(nu);
    k.nuc_ = std::move(nuc);
    return k;
}

TwoSortedFrame TwoSortedFrame::conditional(Relation ni, Relation notni, TernaryRelation tf) {
    TwoSortedFrame k;
    k.kind_ = FrameKind::Conditional;
    k.ny_ = ni.source_size();
    k.nx_ = ni.target_size();
    if (notni.source_size() != k.ny_ || notni.target_size() != k.nx_ || tf.first_size() != k.nx_ ||
        tf.second_size() != k.ny_ || tf.third_size() != k.nx_)
        throw FrameError("relation carriers do not match");
    k.in_ = ni.converse();
    k.notin_ = notni.converse();
    k.ni_ = std::move(ni);
    k.notni_ = std::move(notni);
    k.tf_ = std::move(tf);
    return k;
}

bool operator==(const TwoSortedFrame& a, const TwoSortedFrame& b) {
    return a.kind_ == b.kind_ && a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.ni_ == b.ni_ && a.notni_ == b.notni_ &&
           a.nu_ == b.nu_ && a.nuc_ == b.nuc_ && a.tf_ == b.tf_;
}

bool is_supported(const TwoSortedFrame& k) {
    if (k.kind() != FrameKind::Neighbourhood) throw FrameError("supportedness is defined for neighbourhood-kind frames");
    if (k.x_size() > 20) throw FrameError("too many states to enumerate all subsets");
    const Subset xs = k.x_universe();
    for (Subset d = 0; d <= xs; ++d) {
        Subset lhs = rel_dia(k.r_nu(), rel_box(k.r_ni(), d));
        Subset rhs = rel_box(k.r_nuc(), rel_dia(k.r_notni(), d));
        if (lhs != rhs) return false;
    }
    return true;
}

namespace {

void star_membership(std::size_t n, Relation& ni, Relation& notni) {
    const std::size_t ny = std::size_t{1} << n;
    ni = Relation(ny, n);
    notni = Relation(ny, n);
    for (std::size_t z = 0; z < ny; ++z) {
        ni.set_successors(z, z);
        notni.set_successors(z, ~Subset{z} & full_set(n));
    }
}

} // namespace

TwoSortedFrame star(const NFrame& f) {
    const std::size_t n = f.size();
    const std::size_t ny = f.subset_count();
    Relation ni, notni;
    star_membership(n, ni, notni);
    Relation nu(n, ny), nuc(n, ny);
    for (std::size_t x = 0; x < n; ++x) {
        nu.set_successors(x, f.family(x));
        nuc.set_successors(x, ~f.family(x) & full_set(ny));
    }
    return TwoSortedFrame::neighbourhood(std::move(ni), std::move(notni), std::move(nu), std::move(nuc));
}

TwoSortedFrame star(const CFrame& f) {
    const std::size_t n = f.size();
    const std::size_t ny = f.subset_count();
    Relation ni, notni;
    star_membership(n, ni, notni);
    TernaryRelation tf(n, ny, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < ny; ++z) tf.set_successors(x, z, f.select(x, z));
    return TwoSortedFrame::conditional(std::move(ni), std::move(notni), std::move(tf));
}

NFrame unstar_neighbourhood(const TwoSortedFrame& k) {
    if (k.kind() != FrameKind::Neighbourhood) throw FrameError("expected a neighbourhood-kind frame");
    if (k.x_size() > kMaxWorlds) throw FrameError("too many states for a single-type frame");
    if (!is_supported(k)) throw FrameError("frame is not supported");
    NFrame f(k.x_size());
    for (Subset d = 0; d <= k.x_universe(); ++d) {
        Subset holders = rel_dia(k.r_nu(), rel_box(k.r_ni(), d));
        for (std::size_t x = 0; x < k.x_size(); ++x)
            if (contains(holders, x)) f.add_neighbourhood(x, d);
    }
    return f;
}

CFrame unstar_conditional(const TwoSortedFrame& k) {
    if (k.kind() != FrameKind::Conditional) throw FrameError("expected a conditional-kind frame");
    if (k.x_size() > kMaxWorlds) throw FrameError("too many states for a single-type frame");
    CFrame f(k.x_size());
    const Subset xs = k.x_universe();
    for (Subset d = 0; d <= xs; ++d) {
        const Subset alpha = rel_box(k.r_ni(), d) & rel_boxr(k.r_notni(), d);
        for (std::size_t x = 0; x < k.x_size(); ++x) {
            Subset meet = xs; // intersection of the empty family is X
            for (Subset c = 0; c <= xs; ++c)
                if (contains(tern_tri(k.t_f(), alpha, c), x)) meet &= c;
            f.set_select(x, d, meet);
        }
    }
    return f;
}

} // namespace mtd
