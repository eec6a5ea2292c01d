#pragma once

// Seeded random generators for property tests.

#include <array>
#include <random>
#include <vector>

#include "mtd/structure.hpp"
#include "mtd/syntax.hpp"

namespace mtd::proptest {

class FormulaGen {
public:
    explicit FormulaGen(std::uint32_t seed) : rng_(seed) {}

    MTFormula mt(Sort sort, int depth) {
        const auto& kinds = sort == Sort::S ? s_kinds_ : n_kinds_;
        if (depth <= 0 || pick(4) == 0) return mt_leaf(sort);
        const MTKind k = kinds[pick(kinds.size())];
        std::vector<MTFormula> kids;
        for (Sort a : signature(k).args) kids.push_back(mt(a, depth - 1));
        return MTFormula(k, std::move(kids));
    }

    STFormula st(int depth, bool conditional) {
        if (depth <= 0 || pick(4) == 0) {
            switch (pick(4)) {
            case 0: return st::top();
            case 1: return st::bot();
            default: return st::var(names_[pick(3)]);
            }
        }
        switch (pick(4)) {
        case 0: return st::neg(st(depth - 1, conditional));
        case 1: return st::conj(st(depth - 1, conditional), st(depth - 1, conditional));
        default:
            if (conditional) return st::cond(st(depth - 1, conditional), st(depth - 1, conditional));
            return st::nabla(st(depth - 1, conditional));
        }
    }

    Structure structure(Sort sort, int depth) {
        const auto& kinds = sort == Sort::S ? s_structs_ : n_structs_;
        if (depth <= 0 || pick(4) == 0) {
            if (pick(3) == 0) return Structure::meta(sort == Sort::S ? "X" : "Gamma", sort);
            return sx::fml(mt(sort, 2));
        }
        const StructKind k = kinds[pick(kinds.size())];
        std::vector<Structure> kids;
        for (Sort a : signature(k).args) kids.push_back(structure(a, depth - 1));
        return sx::make(k, std::move(kids));
    }

    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

private:
    MTFormula mt_leaf(Sort sort) {
        if (sort == Sort::S) {
            switch (pick(4)) {
            case 0: return mt::top();
            case 1: return mt::bot();
            default: return mt::var(names_[pick(3)]);
            }
        }
        switch (pick(4)) {
        case 0: return mt::one();
        case 1: return mt::zero();
        default: return mt::nvar(n_names_[pick(2)]);
        }
    }

    std::mt19937 rng_;
    std::array<const char*, 3> names_{"p", "q", "r"};
    std::array<const char*, 2> n_names_{"a", "b"};
    std::vector<MTKind> s_kinds_{MTKind::Neg,    MTKind::And,      MTKind::Or,       MTKind::DiaNu,
                                 MTKind::BoxNuc, MTKind::Tri,      MTKind::DiaIn,    MTKind::BoxNotin,
                                 MTKind::BoxrNotin, MTKind::BlackTri};
    std::vector<MTKind> n_kinds_{MTKind::Sim,      MTKind::Cap,       MTKind::Cup,      MTKind::BoxNi,
                                 MTKind::DiaNotni, MTKind::BoxrNotni, MTKind::BoxNuAdj, MTKind::DiaNucAdj,
                                 MTKind::BlackTriR};
    std::vector<StructKind> s_structs_{StructKind::TNeg, StructKind::HWedge, StructKind::CVee,    StructKind::HNu,
                                       StructKind::CNuc, StructKind::HIn,    StructKind::CNotin,  StructKind::CTri,
                                       StructKind::HBlackTri, StructKind::CNotinR};
    std::vector<StructKind> n_structs_{StructKind::TSim,   StructKind::HCap,    StructKind::CCup,
                                       StructKind::CNi,    StructKind::HNotni,  StructKind::CNuAdj,
                                       StructKind::HNucAdj, StructKind::CNotniR, StructKind::CBlackTriR};
};

} // namespace mtd::proptest
