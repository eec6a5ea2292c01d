#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mtd/relations.hpp"

namespace mtd {

// Single-type frames store subsets of W as bitmasks and families of subsets
// as bitmasks over subset codes, so |W| is capped at 6 (|P(W)| = 64).
constexpr std::size_t kMaxWorlds = 6;

class FrameError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Neighbourhood frame (W, nu). nu(w) is a family of subsets of W, encoded as a
// mask over subset codes 0 .. 2^|W|-1.
class NFrame {
public:
    NFrame() = default;
    explicit NFrame(std::size_t worlds);
    NFrame(std::size_t worlds, std::vector<Subset> families);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] Subset universe() const { return full_set(n_); }
    [[nodiscard]] std::size_t subset_count() const { return std::size_t{1} << n_; }

    [[nodiscard]] Subset family(std::size_t w) const { return nu_.at(w); }
    [[nodiscard]] bool in_nu(std::size_t w, Subset x) const { return contains(nu_.at(w), x); }
    void set_family(std::size_t w, Subset fam);
    void add_neighbourhood(std::size_t w, Subset x);

    // upward closed at every world
    [[nodiscard]] bool is_monotone() const;
    // first (world, X, Y) with X in nu(w), X subset of Y, Y not in nu(w)
    [[nodiscard]] std::string monotonicity_violation() const;

    friend bool operator==(const NFrame&, const NFrame&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Subset> nu_;
};

// Whether a family of subsets of an n-element set is upward closed.
bool upward_closed(Subset family, std::size_t n);

// Conditional frame (W, f) with a selection function f : W x P(W) -> P(W).
class CFrame {
public:
    CFrame() = default;
    explicit CFrame(std::size_t worlds);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] Subset universe() const { return full_set(n_); }
    [[nodiscard]] std::size_t subset_count() const { return std::size_t{1} << n_; }

    [[nodiscard]] Subset select(std::size_t w, Subset z) const { return f_.at(w * subset_count() + z); }
    void set_select(std::size_t w, Subset z, Subset out);

    friend bool operator==(const CFrame&, const CFrame&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Subset> f_;
};

enum class FrameKind { Neighbourhood, Conditional };

// Two-sorted Kripke frame with states X and neighbourhoods Y.
//   R_ni, R_notni subset of Y x X
//   R_nu, R_nuc   subset of X x Y       (neighbourhood kind)
//   T_f           subset of X x Y x X   (conditional kind)
class TwoSortedFrame {
public:
    TwoSortedFrame() = default;

    static TwoSortedFrame neighbourhood(Relation ni, Relation notni, Relation nu, Relation nuc);
    static TwoSortedFrame conditional(Relation ni, Relation notni, TernaryRelation tf);

    [[nodiscard]] FrameKind kind() const { return kind_; }
    [[nodiscard]] std::size_t x_size() const { return nx_; }
    [[nodiscard]] std::size_t y_size() const { return ny_; }
    [[nodiscard]] Subset x_universe() const { return full_set(nx_); }
    [[nodiscard]] Subset y_universe() const { return full_set(ny_); }

    [[nodiscard]] const Relation& r_ni() const { return ni_; }
    [[nodiscard]] const Relation& r_notni() const { return notni_; }
    [[nodiscard]] const Relation& r_nu() const { return nu_; }
    [[nodiscard]] const Relation& r_nuc() const { return nuc_; }
    [[nodiscard]] const TernaryRelation& t_f() const { return tf_; }

    // converses, used by the residual operators
    [[nodiscard]] const Relation& r_in() const { return in_; }
    [[nodiscard]] const Relation& r_notin() const { return notin_; }
    [[nodiscard]] const Relation& r_nu_conv() const { return nu_conv_; }
    [[nodiscard]] const Relation& r_nuc_conv() const { return nuc_conv_; }

    friend bool operator==(const TwoSortedFrame& a, const TwoSortedFrame& b);

private:
    FrameKind kind_ = FrameKind::Neighbourhood;
    std::size_t nx_ = 0;
    std::size_t ny_ = 0;
    Relation ni_, notni_, nu_, nuc_;
    TernaryRelation tf_;
    Relation in_, notin_, nu_conv_, nuc_conv_;
};

// Supportedness: R_nu^{-1}[(R_ni^{-1}[D^c])^c] = (R_nuc^{-1}[(R_notni^{-1}[D])^c])^c for all D subset of X.
// Throws FrameError on conditional-kind input.
bool is_supported(const TwoSortedFrame& k);

// The canonical two-sorted frame: X = W, Y = P(W) indexed by subset code.
TwoSortedFrame star(const NFrame& f);
TwoSortedFrame star(const CFrame& f);

// Inverse construction. Throws FrameError on unsupported neighbourhood-kind
// input or when |X| exceeds kMaxWorlds.
NFrame unstar_neighbourhood(const TwoSortedFrame& k);
CFrame unstar_conditional(const TwoSortedFrame& k);

} // namespace mtd
