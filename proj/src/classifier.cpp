#include "mtd/classifier.hpp"

#include <stdexcept>

#include "mtd/correspondence.hpp"

namespace mtd {

const char* to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

const char* to_string(NodeClass c) {
    switch (c) {
    case NodeClass::DeltaAdjoint: return "DeltaAdjoint";
    case NodeClass::SLR: return "SLR";
    case NodeClass::SRA: return "SRA";
    case NodeClass::SRR: return "SRR";
    case NodeClass::Leaf: return "leaf";
    }
    return "?";
}

bool antitone_in(MTKind k, std::size_t i) {
    switch (k) {
    case MTKind::Neg:
    case MTKind::Sim:
    case MTKind::BoxrNotni:
    case MTKind::BoxrNotin: return i == 0;
    case MTKind::Tri:
    case MTKind::BlackTriR: return i == 0;
    default: return false;
    }
}

namespace {

// Diamond-like operators: positive occurrences are SLR, negative ones SRA.
bool is_diamond(MTKind k) {
    switch (k) {
    case MTKind::DiaNu:
    case MTKind::DiaNotni:
    case MTKind::DiaIn:
    case MTKind::DiaNucAdj:
    case MTKind::BlackTri: return true;
    default: return false;
    }
}

// Box-like operators, including the ones antitone in some coordinate.
bool is_box(MTKind k) {
    switch (k) {
    case MTKind::BoxNuc:
    case MTKind::BoxNi:
    case MTKind::BoxrNotni:
    case MTKind::BoxNotin:
    case MTKind::BoxrNotin:
    case MTKind::BoxNuAdj:
    case MTKind::Tri:
    case MTKind::BlackTriR: return true;
    default: return false;
    }
}

} // namespace

NodeRoles classify_node(MTKind k, Sign s) {
    const bool plus = s == Sign::Plus;
    switch (k) {
    case MTKind::And:
    case MTKind::Cap:
        return plus ? NodeRoles{NodeClass::SLR, NodeClass::SRA} : NodeRoles{NodeClass::DeltaAdjoint, NodeClass::SRR};
    case MTKind::Or:
    case MTKind::Cup:
        return plus ? NodeRoles{NodeClass::DeltaAdjoint, NodeClass::SRR} : NodeRoles{NodeClass::SLR, NodeClass::SRA};
    case MTKind::Neg:
    case MTKind::Sim: return {NodeClass::SLR, NodeClass::SRA};
    default: break;
    }
    if (is_diamond(k)) return plus ? NodeRoles{NodeClass::SLR, {}} : NodeRoles{{}, NodeClass::SRA};
    if (is_box(k)) return plus ? NodeRoles{{}, NodeClass::SRA} : NodeRoles{NodeClass::SLR, {}};
    return {};
}

std::vector<NodeClass> SignedNode::classes() const {
    if (is_leaf()) return {NodeClass::Leaf};
    std::vector<NodeClass> out;
    if (roles.skeleton) out.push_back(*roles.skeleton);
    if (roles.pia) out.push_back(*roles.pia);
    return out;
}

std::string SignedNode::label() const {
    std::string s = to_string(sign);
    if (is_variable()) return s + formula.name().name();
    return s + token(formula.kind());
}

SignedNode signed_tree(const MTFormula& f, Sign s) {
    SignedNode n;
    n.formula = f;
    n.sign = s;
    n.roles = classify_node(f.kind(), s);
    for (std::size_t i = 0; i < f.kids().size(); ++i)
        n.children.push_back(signed_tree(f.kid(i), antitone_in(f.kind(), i) ? flip(s) : s));
    return n;
}

namespace {

void collect_branches(const SignedNode& n, Branch& up, std::vector<Branch>& out) {
    up.push_back(&n);
    if (n.is_leaf()) out.emplace_back(up.rbegin(), up.rend());
    for (const auto& c : n.children) collect_branches(c, up, out);
    up.pop_back();
}

bool critical_leaf(const SignedNode& leaf, const OrderType& eps) {
    if (!leaf.is_variable()) return false;
    return eps.positive(leaf.formula.name()) == (leaf.sign == Sign::Plus);
}

} // namespace

std::vector<Branch> all_branches(const SignedNode& t) {
    std::vector<Branch> out;
    Branch up;
    collect_branches(t, up, out);
    return out;
}

std::vector<Branch> critical_branches(const SignedNode& t, const OrderType& eps) {
    std::vector<Branch> out;
    for (auto& b : all_branches(t))
        if (critical_leaf(*b.front(), eps)) out.push_back(std::move(b));
    return out;
}

std::size_t skeleton_start(const Branch& b) {
    std::size_t j = b.size();
    while (j > 1 && b[j - 1]->roles.skeleton) --j;
    return j;
}

bool is_good_branch(const Branch& b) {
    const std::size_t j = skeleton_start(b);
    for (std::size_t i = 1; i < j; ++i)
        if (!b[i]->roles.pia) return false;
    return true;
}

std::string describe(const Branch& b) {
    std::string s;
    for (const auto* n : b) {
        if (!s.empty()) s += " < ";
        s += n->label();
    }
    return s;
}

namespace {

void leaves_of(const SignedNode& n, std::vector<const SignedNode*>& out) {
    if (n.is_leaf()) {
        if (n.is_variable()) out.push_back(&n);
        return;
    }
    for (const auto& c : n.children) leaves_of(c, out);
}

// Side conditions on SRR nodes of the PIA sections of critical branches.
// Appends the required dependency edges; returns a failure message otherwise.
std::optional<std::string> srr_conditions(const SignedNode& tree, const OrderType& eps, DependencyOrder& omega) {
    for (const auto& b : critical_branches(tree, eps)) {
        const Symbol critical = b.front()->formula.name();
        const std::size_t pia_end = skeleton_start(b);
        for (std::size_t i = 1; i < pia_end; ++i) {
            const SignedNode& node = *b[i];
            if (node.roles.pia != NodeClass::SRR) continue;
            const SignedNode* on_branch = b[i - 1];
            for (const auto& side : node.children) {
                if (&side == on_branch) continue;
                std::vector<const SignedNode*> leaves;
                leaves_of(side, leaves);
                for (const auto* leaf : leaves) {
                    if (critical_leaf(*leaf, eps))
                        return "SRR node " + node.label() + " on branch " + describe(b) +
                               " has a critical leaf " + leaf->label() + " in its side argument";
                    omega.add(leaf->formula.name(), critical);
                }
            }
        }
    }
    return std::nullopt;
}

std::string eps_text(const OrderType& eps) {
    std::string s;
    for (const auto& [v, pos] : eps.entries()) {
        if (!s.empty()) s += ", ";
        s += v.name() + (pos ? ":1" : ":d");
    }
    return s;
}

} // namespace

ClassificationResult is_analytic_inductive(const Inequality& q) {
    ClassificationResult res;
    const SignedNode lhs = signed_tree(q.lhs, Sign::Plus);
    const SignedNode rhs = signed_tree(q.rhs, Sign::Minus);
    for (const SignedNode* t : {&lhs, &rhs})
        for (const auto& b : all_branches(*t))
            if (!is_good_branch(b)) {
                res.failure = "branch " + describe(b) + " is not PIA followed by Skeleton";
                return res;
            }

    std::set<Symbol> vars = variables(q.lhs);
    vars.merge(variables(q.rhs));
    vars.merge(n_variables(q.lhs));
    vars.merge(n_variables(q.rhs));
    const std::vector<Symbol> order(vars.begin(), vars.end());
    if (order.size() > 20) throw std::invalid_argument("too many variables for the order-type search");

    std::optional<std::string> first_failure;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << order.size()); ++code) {
        OrderType eps;
        for (std::size_t i = 0; i < order.size(); ++i) eps.set(order[i], ((code >> i) & 1U) == 0);
        DependencyOrder omega;
        std::optional<std::string> fail = srr_conditions(lhs, eps, omega);
        if (!fail) fail = srr_conditions(rhs, eps, omega);
        if (!fail && !omega.is_strict()) fail = "dependency order has a cycle";
        if (!fail) {
            res.analytic = true;
            res.epsilon = eps;
            res.omega = omega;
            return res;
        }
        if (!first_failure) first_failure = "eps {" + eps_text(eps) + "}: " + *fail;
    }
    res.failure = first_failure;
    return res;
}

std::vector<AxiomClassification> classify_axiom_table() {
    std::vector<AxiomClassification> out;
    for (AxiomId a : kAllAxioms) {
        const bool expected = a != AxiomId::Four && a != AxiomId::FourPrime && a != AxiomId::Five && a != AxiomId::B;
        const Inequality row = axiom_table_row(a);
        out.push_back({a, row, is_analytic_inductive(row), expected});
    }
    return out;
}

} // namespace mtd
