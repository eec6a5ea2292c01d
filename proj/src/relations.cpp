#include "mtd/relations.hpp"

#include <algorithm>
#include <string>

namespace mtd {

void check_within(Subset s, std::size_t n, const char* what) {
    if (!subset_of(s, full_set(n)))
        throw CarrierError(std::string(what) + ": subset has elements outside a carrier of size " +
                           std::to_string(n));
}

namespace {
void check_size(std::size_t n) {
    if (n > kMaxCarrier) throw CarrierError("carrier larger than 64 elements");
}
} // namespace

Relation::Relation(std::size_t source_size, std::size_t target_size)
    : ns_(source_size), nt_(target_size), succ_(source_size, 0) {
    check_size(ns_);
    check_size(nt_);
}

void Relation::add(std::size_t s, std::size_t t) {
    if (s >= ns_ || t >= nt_) throw CarrierError("relation pair outside carriers");
    succ_[s] |= singleton(t);
}

void Relation::set_successors(std::size_t s, Subset ts) {
    if (s >= ns_) throw CarrierError("relation source outside carrier");
    check_within(ts, nt_, "relation");
    succ_[s] = ts;
}

Relation Relation::converse() const {
    Relation c(nt_, ns_);
    for (std::size_t s = 0; s < ns_; ++s)
        for (Subset ts = succ_[s]; ts != 0; ts &= ts - 1)
            c.succ_[static_cast<std::size_t>(std::countr_zero(ts))] |= singleton(s);
    return c;
}

bool Relation::empty() const {
    return std::ranges::all_of(succ_, [](Subset s) { return s == 0; });
}

Subset preimage(const Relation& r, Subset targets) {
    Subset out = 0;
    for (std::size_t s = 0; s < r.source_size(); ++s)
        if ((r.successors(s) & targets) != 0) out |= singleton(s);
    return out;
}

Subset image(const Relation& r, Subset sources) {
    Subset out = 0;
    for (Subset ss = sources & full_set(r.source_size()); ss != 0; ss &= ss - 1)
        out |= r.successors(static_cast<std::size_t>(std::countr_zero(ss)));
    return out;
}

Subset rel_dia(const Relation& r, Subset targets) {
    check_within(targets, r.target_size(), "rel_dia");
    return preimage(r, targets);
}

Subset rel_box(const Relation& r, Subset targets) {
    check_within(targets, r.target_size(), "rel_box");
    return ~preimage(r, ~targets & full_set(r.target_size())) & full_set(r.source_size());
}

Subset rel_boxr(const Relation& r, Subset targets) {
    check_within(targets, r.target_size(), "rel_boxr");
    return ~preimage(r, targets) & full_set(r.source_size());
}

Subset rel_diar(const Relation& r, Subset targets) {
    check_within(targets, r.target_size(), "rel_diar");
    return preimage(r, ~targets & full_set(r.target_size()));
}

TernaryRelation::TernaryRelation(std::size_t ns, std::size_t nt, std::size_t nu)
    : ns_(ns), nt_(nt), nu_(nu), succ_(ns * nt, 0) {
    check_size(ns);
    check_size(nt);
    check_size(nu);
}

void TernaryRelation::add(std::size_t s, std::size_t t, std::size_t u) {
    if (s >= ns_ || t >= nt_ || u >= nu_) throw CarrierError("triple outside carriers");
    succ_[s * nt_ + t] |= singleton(u);
}

void TernaryRelation::set_successors(std::size_t s, std::size_t t, Subset us) {
    if (s >= ns_ || t >= nt_) throw CarrierError("triple outside carriers");
    check_within(us, nu_, "ternary relation");
    succ_[s * nt_ + t] = us;
}

Subset tern_tri(const TernaryRelation& r, Subset t_arg, Subset u_arg) {
    check_within(t_arg, r.second_size(), "tern_tri");
    check_within(u_arg, r.third_size(), "tern_tri");
    const Subset u_out = ~u_arg & full_set(r.third_size());
    Subset out = 0;
    for (std::size_t s = 0; s < r.first_size(); ++s) {
        bool ok = true;
        for (Subset ts = t_arg; ts != 0 && ok; ts &= ts - 1)
            ok = (r.successors(s, static_cast<std::size_t>(std::countr_zero(ts))) & u_out) == 0;
        if (ok) out |= singleton(s);
    }
    return out;
}

Subset tern_btri(const TernaryRelation& r, Subset t_arg, Subset s_arg) {
    check_within(t_arg, r.second_size(), "tern_btri");
    check_within(s_arg, r.first_size(), "tern_btri");
    Subset out = 0;
    for (Subset ss = s_arg; ss != 0; ss &= ss - 1)
        for (Subset ts = t_arg; ts != 0; ts &= ts - 1)
            out |= r.successors(static_cast<std::size_t>(std::countr_zero(ss)),
                                static_cast<std::size_t>(std::countr_zero(ts)));
    return out;
}

Subset tern_btrir(const TernaryRelation& r, Subset s_arg, Subset u_arg) {
    check_within(s_arg, r.first_size(), "tern_btrir");
    check_within(u_arg, r.third_size(), "tern_btrir");
    const Subset u_out = ~u_arg & full_set(r.third_size());
    Subset out = 0;
    for (std::size_t t = 0; t < r.second_size(); ++t) {
        bool ok = true;
        for (Subset ss = s_arg; ss != 0 && ok; ss &= ss - 1)
            ok = (r.successors(static_cast<std::size_t>(std::countr_zero(ss)), t) & u_out) == 0;
        if (ok) out |= singleton(t);
    }
    return out;
}

} // namespace mtd
