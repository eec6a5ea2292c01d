#pragma once

// Signed generation trees and the analytic inductive test.

#include <optional>
#include <string>
#include <vector>

#include "mtd/axioms.hpp"
#include "mtd/syntax.hpp"

namespace mtd {

enum class Sign { Plus, Minus };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
const char* to_string(Sign s);

enum class NodeClass { DeltaAdjoint, SLR, SRA, SRR, Leaf };

const char* to_string(NodeClass c);

// Skeleton role (DeltaAdjoint or SLR) and PIA role (SRA or SRR) of a signed
// connective. Conjunctions, disjunctions and negations have both; leaves and
// constants have neither.
struct NodeRoles {
    std::optional<NodeClass> skeleton;
    std::optional<NodeClass> pia;
};

NodeRoles classify_node(MTKind k, Sign s);

// Whether coordinate i of k is order-reversing.
bool antitone_in(MTKind k, std::size_t i);

struct SignedNode {
    MTFormula formula;
    Sign sign = Sign::Plus;
    NodeRoles roles;
    std::vector<SignedNode> children;

    [[nodiscard]] bool is_leaf() const { return children.empty(); }
    [[nodiscard]] bool is_variable() const {
        return formula.kind() == MTKind::Var || formula.kind() == MTKind::NVar;
    }
    // Leaf for leaves, otherwise the one or two table cells of the node.
    [[nodiscard]] std::vector<NodeClass> classes() const;
    // "+<nu>", "-p", ...
    [[nodiscard]] std::string label() const;
};

SignedNode signed_tree(const MTFormula& f, Sign s);

// Nodes from a leaf up to the root, leaf first.
using Branch = std::vector<const SignedNode*>;

std::vector<Branch> all_branches(const SignedNode& t);

// Branches ending in a leaf +p with eps(p) = 1 or -p with eps(p) = dual.
std::vector<Branch> critical_branches(const SignedNode& t, const OrderType& eps);

// A leaf-to-root path is good when, leaving out the leaf, it is a PIA section
// followed by a Skeleton section. The split is taken at the lowest point above
// which every node can act as Skeleton.
bool is_good_branch(const Branch& b);

// Index (into b, leaf at 0) of the first Skeleton node of the canonical split.
std::size_t skeleton_start(const Branch& b);

std::string describe(const Branch& b);

struct ClassificationResult {
    bool analytic = false;
    std::optional<OrderType> epsilon;
    std::optional<DependencyOrder> omega;
    std::optional<std::string> failure;
};

ClassificationResult is_analytic_inductive(const Inequality& q);

struct AxiomClassification {
    AxiomId axiom = AxiomId::N;
    Inequality row{mt::top(), mt::top()};
    ClassificationResult result;
    bool expected_analytic = false;
    [[nodiscard]] bool matches() const { return result.analytic == expected_analytic; }
};

// Runs the test on the twelve tabulated translations. Expected: N, P, C, T, D,
// CS, CEM, ID analytic; 4, 4', 5, B not.
std::vector<AxiomClassification> classify_axiom_table();

} // namespace mtd
