#pragma once

// Finite relations and the modal operators they induce on powersets.
// Carriers are {0, ..., n-1} with n <= 64; subsets are bitmasks.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mtd {

using Subset = std::uint64_t;

constexpr std::size_t kMaxCarrier = 64;

constexpr Subset full_set(std::size_t n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }
constexpr bool contains(Subset s, std::size_t i) { return ((s >> i) & 1U) != 0; }
constexpr Subset singleton(std::size_t i) { return Subset{1} << i; }
constexpr bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }
inline int cardinality(Subset s) { return std::popcount(s); }

class CarrierError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Throws CarrierError if s has elements outside {0..n-1}.
void check_within(Subset s, std::size_t n, const char* what);

// R subset of S x T, stored as successor sets.
class Relation {
public:
    Relation() = default;
    Relation(std::size_t source_size, std::size_t target_size);

    void add(std::size_t s, std::size_t t);
    void set_successors(std::size_t s, Subset ts);
    [[nodiscard]] bool holds(std::size_t s, std::size_t t) const { return contains(succ_.at(s), t); }
    [[nodiscard]] Subset successors(std::size_t s) const { return succ_.at(s); }
    [[nodiscard]] std::size_t source_size() const { return ns_; }
    [[nodiscard]] std::size_t target_size() const { return nt_; }
    [[nodiscard]] Relation converse() const;
    [[nodiscard]] bool empty() const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    std::size_t ns_ = 0;
    std::size_t nt_ = 0;
    std::vector<Subset> succ_;
};

// R^{-1}[T'] = {s | exists t in T'. s R t}
Subset preimage(const Relation& r, Subset targets);
// R[S'] = {t | exists s in S'. s R t}
Subset image(const Relation& r, Subset sources);

// <R>T' = R^{-1}[T']
Subset rel_dia(const Relation& r, Subset targets);
// [R]T' = (R^{-1}[T'^c])^c
Subset rel_box(const Relation& r, Subset targets);
// [R>T' = (R^{-1}[T'])^c
Subset rel_boxr(const Relation& r, Subset targets);
// <R]T' = R^{-1}[T'^c]
Subset rel_diar(const Relation& r, Subset targets);

// R subset of S x T x U.
class TernaryRelation {
public:
    TernaryRelation() = default;
    TernaryRelation(std::size_t ns, std::size_t nt, std::size_t nu);

    void add(std::size_t s, std::size_t t, std::size_t u);
    void set_successors(std::size_t s, std::size_t t, Subset us);
    [[nodiscard]] bool holds(std::size_t s, std::size_t t, std::size_t u) const {
        return contains(successors(s, t), u);
    }
    [[nodiscard]] Subset successors(std::size_t s, std::size_t t) const { return succ_.at(s * nt_ + t); }
    [[nodiscard]] std::size_t first_size() const { return ns_; }
    [[nodiscard]] std::size_t second_size() const { return nt_; }
    [[nodiscard]] std::size_t third_size() const { return nu_; }

    friend bool operator==(const TernaryRelation&, const TernaryRelation&) = default;

private:
    std::size_t ns_ = 0;
    std::size_t nt_ = 0;
    std::size_t nu_ = 0;
    std::vector<Subset> succ_;
};

// T' |> U' = (R0[T', U'^c])^c, a subset of S
Subset tern_tri(const TernaryRelation& r, Subset t_arg, Subset u_arg);
// T' black-triangle S' = R2[T', S'], a subset of U
Subset tern_btri(const TernaryRelation& r, Subset t_arg, Subset s_arg);
// S' black-triangle-right U' = (R1[S', U'^c])^c, a subset of T
Subset tern_btrir(const TernaryRelation& r, Subset s_arg, Subset u_arg);

} // namespace mtd
