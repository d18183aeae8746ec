#include "lieposet/contact.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "lieposet/canonical.hpp"
#include "lieposet/error.hpp"
#include "lieposet/polynomial.hpp"

namespace lieposet {

namespace {

// Block elements in the block's own natural labelling; 0 where absent.
struct Roles {
    Element c = 0;
    Element m = 0;
    Element a1 = 0;
    Element a2 = 0;
};

Roles block_roles(BuildingBlock block) {
    switch (block) {
        case BuildingBlock::P11: return {1, 0, 2, 0};
        case BuildingBlock::P111: return {1, 2, 3, 0};
        case BuildingBlock::P112: return {1, 2, 3, 4};
        case BuildingBlock::P211: return {4, 3, 1, 2};
    }
    return {};
}

bool has_a2(BuildingBlock block) {
    return block == BuildingBlock::P112 || block == BuildingBlock::P211;
}

StepLabels labels_from_roles(const Roles& r) {
    StepLabels s;
    s.x = r.c;
    if (r.m) s.m = r.m;
    s.y = r.a1;
    if (r.a2) s.z = r.a2;
    return s;
}

std::string step_text(const GluingStep& step) {
    std::string out(to_string(step.block));
    if (step.rule) out += "/" + std::string(to_string(*step.rule));
    return out;
}

// Side conditions per rule: y∼x, z∼x as required (1), forbidden (0) or free (-1).
std::pair<int, int> side_conditions(GluingRule rule) {
    switch (rule) {
        case GluingRule::D1: return {1, -1};
        case GluingRule::D2: return {-1, 1};
        case GluingRule::E1: return {0, -1};
        case GluingRule::E2: return {-1, 0};
        case GluingRule::F: return {1, 1};
        case GluingRule::G1: return {1, 0};
        case GluingRule::G2: return {0, 1};
        case GluingRule::H: return {0, 0};
        default: return {-1, -1};
    }
}

std::optional<Error> step_error(const Poset& q, const GluingStep& step) {
    using K = ErrorKind;
    if (!step.rule) return Error(K::RulePreconditionViolated, "gluing step has no rule");
    const GluingRule rule = *step.rule;
    if (!rule_applies(step.block, rule))
        return Error(K::RuleBlockMismatch, "rule " + std::string(to_string(rule)) + " does not apply to " +
                                               std::string(to_string(step.block)));
    if (!q.is_connected() || q.size() < 2)
        return Error(K::RulePreconditionViolated, "Q must be connected with at least two elements");
    if (q.height() > 2) return Error(K::RulePreconditionViolated, "Q must have height at most 2");
    const Identification id = identification(rule);
    const std::array<std::pair<bool, const std::optional<Element>*>, 3> wanted = {
        std::pair{id.c, &step.x}, std::pair{id.a1, &step.y}, std::pair{id.a2, &step.z}};
    const char* names[] = {"c", "a1", "a2"};
    for (std::size_t k = 0; k < 3; ++k) {
        const bool present = wanted[k].second->has_value();
        if (wanted[k].first && !present)
            return Error(K::RulePreconditionViolated,
                         "rule " + std::string(to_string(rule)) + " needs a target for " + names[k]);
        if (!wanted[k].first && present)
            return Error(K::RulePreconditionViolated,
                         "rule " + std::string(to_string(rule)) + " does not identify " + names[k]);
        if (present) {
            const Element e = **wanted[k].second;
            if (e < 1 || e > q.size())
                return Error(K::RulePreconditionViolated, "target " + std::to_string(e) + " out of range");
        }
    }
    if ((step.x && step.y && *step.x == *step.y) || (step.x && step.z && *step.x == *step.z) ||
        (step.y && step.z && *step.y == *step.z))
        return Error(K::RulePreconditionViolated, "targets must be distinct");

    const bool c_min = step.block != BuildingBlock::P211;
    auto polarity_ok = [&](Element e, bool want_min) { return want_min ? q.is_minimal(e) : q.is_maximal(e); };
    if (step.x && !polarity_ok(*step.x, c_min))
        return Error(K::PolarityMismatch, "x = " + std::to_string(*step.x) + " must be " +
                                              (c_min ? "minimal" : "maximal") + " in Q");
    if (step.y && !polarity_ok(*step.y, !c_min))
        return Error(K::PolarityMismatch, "y = " + std::to_string(*step.y) + " must be " +
                                              (c_min ? "maximal" : "minimal") + " in Q");
    if (step.z && !polarity_ok(*step.z, !c_min))
        return Error(K::PolarityMismatch, "z = " + std::to_string(*step.z) + " must be " +
                                              (c_min ? "maximal" : "minimal") + " in Q");

    const auto [ys, zs] = side_conditions(rule);
    if (ys >= 0 && q.related(*step.y, *step.x) != (ys == 1))
        return Error(K::RulePreconditionViolated, "rule " + std::string(to_string(rule)) + " needs y " +
                                                      (ys ? "~" : "!~") + " x");
    if (zs >= 0 && q.related(*step.z, *step.x) != (zs == 1))
        return Error(K::RulePreconditionViolated, "rule " + std::string(to_string(rule)) + " needs z " +
                                                      (zs ? "~" : "!~") + " x");
    return std::nullopt;
}

}  // namespace

std::string_view to_string(GluingRule rule) {
    switch (rule) {
        case GluingRule::A1: return "A1";
        case GluingRule::A2: return "A2";
        case GluingRule::B: return "B";
        case GluingRule::C: return "C";
        case GluingRule::D1: return "D1";
        case GluingRule::D2: return "D2";
        case GluingRule::E1: return "E1";
        case GluingRule::E2: return "E2";
        case GluingRule::F: return "F";
        case GluingRule::G1: return "G1";
        case GluingRule::G2: return "G2";
        case GluingRule::H: return "H";
    }
    return "?";
}

std::string_view to_string(BuildingBlock block) {
    switch (block) {
        case BuildingBlock::P11: return "P11";
        case BuildingBlock::P111: return "P111";
        case BuildingBlock::P112: return "P112";
        case BuildingBlock::P211: return "P211";
    }
    return "?";
}

GluingRule parse_rule(std::string_view text) {
    for (GluingRule r : kAllRules)
        if (to_string(r) == text) return r;
    throw Error(ErrorKind::ParseError, "unknown gluing rule '" + std::string(text) + "'");
}

BuildingBlock parse_block(std::string_view text) {
    for (BuildingBlock b : kAllBlocks)
        if (to_string(b) == text) return b;
    throw Error(ErrorKind::ParseError, "unknown building block '" + std::string(text) + "'");
}

std::string_view to_string(ContactVerdict::Kind kind) {
    switch (kind) {
        case ContactVerdict::Kind::Witness: return "ContactWitness";
        case ContactVerdict::Kind::NotContact: return "NotContact";
        case ContactVerdict::Kind::NotContactCertified: return "NotContactCertified";
    }
    return "?";
}

bool is_contact_rule(GluingRule rule) {
    return std::find(std::begin(kContactRules), std::end(kContactRules), rule) != std::end(kContactRules);
}

bool rule_applies(BuildingBlock block, GluingRule rule) {
    if (has_a2(block)) return true;
    return rule == GluingRule::A1 || rule == GluingRule::C || rule == GluingRule::D1 || rule == GluingRule::E1;
}

Poset block_poset(BuildingBlock block) {
    switch (block) {
        case BuildingBlock::P11: return chain(2);
        case BuildingBlock::P111: return chain(3);
        case BuildingBlock::P112: return complete_poset({1, 1, 2});
        case BuildingBlock::P211: return complete_poset({2, 1, 1});
    }
    return {};
}

Identification identification(GluingRule rule) {
    switch (rule) {
        case GluingRule::A1: return {false, true, false};
        case GluingRule::A2: return {false, false, true};
        case GluingRule::B: return {false, true, true};
        case GluingRule::C: return {true, false, false};
        case GluingRule::D1:
        case GluingRule::E1: return {true, true, false};
        case GluingRule::D2:
        case GluingRule::E2: return {true, false, true};
        default: return {true, true, true};
    }
}

GluingOutcome apply_gluing(const Poset& q, const GluingStep& step) {
    if (auto err = step_error(q, step)) throw *err;
    const Roles roles = block_roles(step.block);
    const Poset s = block_poset(step.block);
    const int nq = q.size();

    // Provisional ids: Q keeps its labels, new block elements follow in block order.
    std::vector<Element> sid(static_cast<std::size_t>(s.size()) + 1, 0);
    if (step.x) sid[roles.c] = *step.x;
    if (step.y) sid[roles.a1] = *step.y;
    if (step.z) sid[roles.a2] = *step.z;
    int total = nq;
    for (Element e = 1; e <= s.size(); ++e)
        if (!sid[e]) sid[e] = ++total;

    std::vector<Relation> rels = q.relations();
    for (const auto& [a, b] : s.relations()) rels.emplace_back(sid[a], sid[b]);
    std::sort(rels.begin(), rels.end());
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());

    std::vector<Element> mapping;
    GluingOutcome out;
    out.poset = Poset::relabeled_from(total, rels, &mapping);
    out.q_map.assign(mapping.begin(), mapping.begin() + nq + 1);
    Roles placed;
    placed.c = mapping[sid[roles.c]];
    placed.a1 = mapping[sid[roles.a1]];
    if (roles.m) placed.m = mapping[sid[roles.m]];
    if (roles.a2) placed.a2 = mapping[sid[roles.a2]];
    out.labels = labels_from_roles(placed);
    return out;
}

std::vector<GluingStep> admissible_steps(const Poset& q, BuildingBlock block, GluingRule rule) {
    std::vector<GluingStep> out;
    if (!rule_applies(block, rule) || !q.is_connected() || q.size() < 2 || q.height() > 2) return out;
    const Identification id = identification(rule);
    std::vector<std::optional<Element>> none{std::nullopt};
    std::vector<std::optional<Element>> all;
    for (Element e = 1; e <= q.size(); ++e) all.emplace_back(e);
    for (const auto& x : id.c ? all : none)
        for (const auto& y : id.a1 ? all : none)
            for (const auto& z : id.a2 ? all : none) {
                GluingStep step{block, rule, x, y, z};
                if (!step_error(q, step)) out.push_back(step);
            }
    return out;
}

int index_contribution(BuildingBlock block, GluingRule rule) {
    if (!rule_applies(block, rule))
        throw Error(ErrorKind::RuleBlockMismatch, "rule " + std::string(to_string(rule)) + " does not apply to " +
                                                      std::string(to_string(block)));
    const int base = block == BuildingBlock::P111 ? 1 : 0;
    switch (rule) {
        case GluingRule::B:
        case GluingRule::E1:
        case GluingRule::E2:
        case GluingRule::G1:
        case GluingRule::G2: return base + 1;
        case GluingRule::H: return base + 2;
        default: return base;
    }
}

namespace {

void remap(StepLabels& s, const std::vector<Element>& q_map) {
    s.x = q_map[s.x];
    s.y = q_map[s.y];
    if (s.m) s.m = q_map[*s.m];
    if (s.z) s.z = q_map[*s.z];
}

struct Builder {
    Poset poset;
    std::vector<StepLabels> labels;

    explicit Builder(BuildingBlock initial)
        : poset(block_poset(initial)), labels{labels_from_roles(block_roles(initial))} {}

    std::vector<Element> add(const GluingStep& step) {
        GluingOutcome out = apply_gluing(poset, step);
        for (auto& s : labels) remap(s, out.q_map);
        labels.push_back(out.labels);
        poset = std::move(out.poset);
        return std::move(out.q_map);
    }
};

Error sequence_error(std::size_t step, const std::string& what) {
    return Error(ErrorKind::InvalidSequence, "step " + std::to_string(step) + ": " + what);
}

}  // namespace

Assembly replay(const ContactSequence& seq) {
    if (seq.steps.empty()) throw Error(ErrorKind::InvalidSequence, "empty sequence");
    const GluingStep& first = seq.steps.front();
    if (first.rule || first.x || first.y || first.z)
        throw sequence_error(0, "the initial block takes no rule or targets");
    Builder b(first.block);
    Assembly a;
    a.prefixes.push_back(b.poset);
    for (std::size_t j = 1; j < seq.steps.size(); ++j) {
        try {
            b.add(seq.steps[j]);
        } catch (const Error& e) {
            throw sequence_error(j, step_text(seq.steps[j]) + ": " + e.what());
        }
        a.prefixes.push_back(b.poset);
    }
    a.poset = b.poset;
    a.labels = std::move(b.labels);
    return a;
}

Assembly validate_contact_sequence(const ContactSequence& seq) {
    int p111 = 0;
    for (std::size_t j = 0; j < seq.steps.size(); ++j) {
        const GluingStep& s = seq.steps[j];
        if (s.block == BuildingBlock::P111 && ++p111 > 1)
            throw sequence_error(j, "a contact sequence has exactly one P111 block");
        if (j == 0) continue;
        if (s.rule && !is_contact_rule(*s.rule))
            throw sequence_error(j, "rule " + std::string(to_string(*s.rule)) + " is not a contact rule");
        if (s.rule && s.block == BuildingBlock::P11 && *s.rule == GluingRule::D1)
            throw sequence_error(j, "P11 glued by D1 adds no element");
    }
    if (p111 == 0) throw Error(ErrorKind::InvalidSequence, "a contact sequence has exactly one P111 block");
    return replay(seq);
}

Functional build_contact_form(const ContactSequence& seq) {
    return build_contact_form(seq, validate_contact_sequence(seq));
}

Functional build_contact_form(const ContactSequence& seq, const Assembly& assembly) {
    if (seq.steps.empty() || seq.steps.front().block != BuildingBlock::P111)
        throw Error(ErrorKind::InvalidSequence, "the form is built from a sequence starting with P111");
    Functional phi;
    const StepLabels& s0 = assembly.labels.front();
    phi.add(*s0.m, *s0.m).add(s0.x, s0.y).add(*s0.m, s0.y);
    for (std::size_t j = 1; j < seq.steps.size(); ++j) {
        const GluingStep& step = seq.steps[j];
        const StepLabels& s = assembly.labels[j];
        const GluingRule rule = *step.rule;
        const Element x = s.x, y = s.y;
        const bool up = step.block == BuildingBlock::P112;
        if (step.block == BuildingBlock::P11) {
            if (rule != GluingRule::A1 && rule != GluingRule::C)
                throw sequence_error(j, "P11 is glued by A1 or C in a contact sequence");
            phi.add(x, y);
            continue;
        }
        if (step.block == BuildingBlock::P111) throw sequence_error(j, "P111 must be the initial block");
        const Element m = *s.m, z = *s.z;
        // P112 terms are E*_{x,y}, E*_{x,z}, E*_{m,z}; P211 uses the transposes.
        auto add = [&](Element lo, Element hi) { up ? phi.add(lo, hi) : phi.add(hi, lo); };
        switch (rule) {
            case GluingRule::A1:
            case GluingRule::A2:
            case GluingRule::C:
                add(x, y);
                add(x, z);
                add(m, z);
                break;
            case GluingRule::D1:
                add(x, z);
                add(m, z);
                break;
            case GluingRule::D2:
                add(x, y);
                add(m, z);
                break;
            case GluingRule::F: add(m, z); break;
            default: throw sequence_error(j, "rule " + std::string(to_string(rule)) + " is not a contact rule");
        }
    }
    return phi;
}

std::optional<ContactSequence> find_contact_sequence(const Poset& p) {
    return find_contact_sequence(p, nullptr);
}

std::optional<ContactSequence> find_contact_sequence(const Poset& p, std::vector<Element>* relabel) {
    if (p.height() != 2) throw Error(ErrorKind::HeightBound, "contact sequences need height exactly 2");
    if (!p.is_connected()) throw Error(ErrorKind::Disconnected, "contact sequences need a connected poset");

    struct Piece {
        BuildingBlock block;
        Roles roles;  // labels in P
    };
    std::vector<Piece> pieces;
    std::optional<Piece> initial;
    for (Element i : extremal_data(p).interior) {
        std::vector<Element> below, above;
        for (Element e = 1; e <= p.size(); ++e) {
            if (p.less(e, i)) below.push_back(e);
            if (p.less(i, e)) above.push_back(e);
        }
        Piece piece;
        if (below.size() == 1 && above.size() == 1) {
            if (initial) return std::nullopt;
            initial = Piece{BuildingBlock::P111, {below[0], i, above[0], 0}};
            continue;
        }
        if (below.size() == 1 && above.size() == 2)
            piece = {BuildingBlock::P112, {below[0], i, above[0], above[1]}};
        else if (below.size() == 2 && above.size() == 1)
            piece = {BuildingBlock::P211, {above[0], i, below[0], below[1]}};
        else
            return std::nullopt;
        pieces.push_back(piece);
    }
    if (!initial) return std::nullopt;
    for (const auto& [a, b] : p.covers())
        if (p.is_extremal(a) && p.is_extremal(b)) pieces.push_back({BuildingBlock::P11, {a, 0, b, 0}});

    ContactSequence seq;
    seq.steps.push_back({BuildingBlock::P111, std::nullopt, std::nullopt, std::nullopt, std::nullopt});
    Builder builder(BuildingBlock::P111);
    std::vector<Element> to_q(static_cast<std::size_t>(p.size()) + 1, 0);
    to_q[initial->roles.c] = 1;
    to_q[initial->roles.m] = 2;
    to_q[initial->roles.a1] = 3;

    std::vector<bool> used(pieces.size(), false);
    for (std::size_t placed = 0; placed < pieces.size();) {
        bool progressed = false;
        for (std::size_t k = 0; k < pieces.size() && !progressed; ++k) {
            if (used[k]) continue;
            Roles r = pieces[k].roles;
            if (r.a2 && to_q[r.a2] && !to_q[r.a1]) std::swap(r.a1, r.a2);
            const bool c = to_q[r.c] != 0, a1 = to_q[r.a1] != 0, a2 = r.a2 && to_q[r.a2];
            std::optional<GluingRule> rule;
            const Poset& q = builder.poset;
            if (!c && a1 && !a2) rule = GluingRule::A1;
            else if (c && !a1 && !a2) rule = GluingRule::C;
            else if (c && a1 && !a2 && q.related(to_q[r.c], to_q[r.a1])) rule = GluingRule::D1;
            else if (c && a1 && a2 && q.related(to_q[r.c], to_q[r.a1]) && q.related(to_q[r.c], to_q[r.a2]))
                rule = GluingRule::F;
            if (!rule || (pieces[k].block == BuildingBlock::P11 && *rule == GluingRule::D1)) continue;

            GluingStep step{pieces[k].block, rule, std::nullopt, std::nullopt, std::nullopt};
            if (c) step.x = to_q[r.c];
            if (a1) step.y = to_q[r.a1];
            if (a2) step.z = to_q[r.a2];
            const std::vector<Element> q_map = builder.add(step);
            for (Element& v : to_q)
                if (v) v = q_map[v];
            const StepLabels& s = builder.labels.back();
            to_q[r.c] = s.x;
            to_q[r.a1] = s.y;
            if (r.m) to_q[r.m] = *s.m;
            if (r.a2) to_q[r.a2] = *s.z;
            seq.steps.push_back(step);
            used[k] = true;
            ++placed;
            progressed = true;
        }
        if (!progressed) return std::nullopt;
    }

    const Poset& q = builder.poset;
    bool same = q.size() == p.size() && q.relation_count() == p.relation_count();
    for (const auto& [a, b] : p.relations()) same = same && q.less(to_q[a], to_q[b]);
    if (!same) throw std::logic_error("contact sequence does not reassemble the poset");
    if (relabel) *relabel = std::move(to_q);
    return seq;
}

RationalVector expected_kernel(const Poset& p, Element bottom, Element middle) {
    if (bottom < 1 || middle < 1 || bottom > p.size() || middle > p.size())
        throw Error(ErrorKind::OutOfRange, "bottom/middle out of range");
    if (!p.less(bottom, middle)) throw Error(ErrorKind::ShapeMismatch, "bottom must precede middle");
    const LieAlgebra g = build_type_a(p);
    const int n = p.size();
    GlElement l;
    for (Element e = 1; e <= n; ++e) l[{e, e}] = e == middle ? Rational(1 - n) : Rational(1);
    l[{bottom, middle}] = n;
    return g.from_gl(l);
}

std::optional<std::vector<Element>> cycle_obstruction(const Poset& p) {
    ForestCheck f = is_forest(p, true);
    if (f.is_forest) return std::nullopt;
    return std::move(f.cycle);
}

bool verify_contact_form(const LieAlgebra& g, const DualVector& phi) {
    return is_nonsingular(extended_matrix(g, phi));
}

bool verify_contact_form(const LieAlgebra& g, const Functional& phi) {
    return verify_contact_form(g, g.dual_vector(phi));
}

Functional disconnected_contact_form(const Poset& p1, const Poset& p2, std::uint64_t seed) {
    return disconnected_contact_form_on(disjoint_sum(p1, p2), seed);
}

Functional disconnected_contact_form_on(const Poset& p, std::uint64_t seed) {
    const auto comps = p.component_elements();
    if (comps.size() != 2)
        throw Error(ErrorKind::Disconnected, "expected exactly two components, got " + std::to_string(comps.size()));
    for (const auto& c : comps)
        if (!is_frobenius_h2(p.induced(c)))
            throw Error(ErrorKind::NotFrobenius, "component containing " + std::to_string(c.front()) +
                                                     " is not Frobenius");
    const LieAlgebra g = build_type_a(p);
    const Rational w1 = static_cast<long>(comps[1].size());
    const Rational w2 = -static_cast<long>(comps[0].size());
    std::vector<Rational> z(static_cast<std::size_t>(p.size()) + 1);
    for (Element e : comps[0]) z[e] = w1;
    for (Element e : comps[1]) z[e] = w2;

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        const DualVector values = random_dual_vector(g.dim(), rng);
        if (static_cast<int>(rank(kirillov_matrix(g, values))) != g.dim() - 1) continue;
        const Functional base = g.functional_from_values(values);
        Rational at_z = 0;
        for (const auto& [pos, c] : base.terms)
            if (pos.first == pos.second) at_z += c * z[pos.first];
        // Shifting φ(z) leaves B_φ alone; the determinant is a polynomial in
        // the shift, so some value among dim + 2 candidates avoids its roots.
        const Element k = comps[0].front();
        for (int t = 0; t <= g.dim() + 2; ++t) {
            if (sgn(at_z + t * z[k]) == 0) continue;
            Functional phi = base;
            if (t) phi.add(k, k, t);
            if (verify_contact_form(g, phi)) return phi;
        }
    }
    throw Error(ErrorKind::RegularSearchExhausted, "no regular functional found in 64 samples");
}

Classification classify_h2(const Poset& p, std::uint64_t seed) {
    if (p.height() > 2) throw Error(ErrorKind::HeightBound, "classifier needs height <= 2");
    Classification out;
    auto obstruct = [&](std::string kind, std::string detail, std::vector<Element> witness = {}) {
        out.obstructions.push_back({std::move(kind), std::move(detail), std::move(witness), {}});
    };

    if (!p.is_connected() || p.height() < 2) {
        const auto comps = p.component_elements();
        if (comps.size() == 1) {
            obstruct(p.height() == 1 ? "connected-height-one" : "single-element",
                     p.height() == 1 ? "connected posets of height one are never contact"
                                     : "a single element does not carry a contact form");
            if (p.height() == 1) {
                // Every element is extremal, so a Hasse cycle is an Ext cycle.
                const ForestCheck f = is_forest(p, false);
                if (!f.is_forest)
                    out.obstructions.push_back({"ext-cycle", "the Hasse diagram of P_Ext has a cycle", f.cycle, f.cycle});
            }
            return out;
        }
        if (comps.size() != 2) {
            std::vector<Element> reps;
            for (const auto& c : comps) reps.push_back(c.front());
            obstruct("component-count",
                     "disconnected posets need exactly two components, found " + std::to_string(comps.size()), reps);
        }
        for (const auto& c : comps)
            if (!is_frobenius_h2(p.induced(c)))
                obstruct("component-not-frobenius", "component is not Frobenius", c);
        if (!out.obstructions.empty()) return out;
        out.contact = true;
        out.components = comps;
        out.form = disconnected_contact_form_on(p, seed);
        return out;
    }

    std::vector<Element> index_one;
    for (Element i : extremal_data(p).interior) {
        NeighborhoodShape shape;
        interior_neighborhood(p, i, &shape);
        const int ext = shape.below + shape.above;
        if (ext == 2) index_one.push_back(i);
        if (ext != 2 && ext != 3)
            obstruct("neighborhood-size",
                     "|Ext(P^" + std::to_string(i) + ")| = " + std::to_string(ext) + " is not 2 or 3", {i});
    }
    if (index_one.size() != 1)
        obstruct("index-one-count",
                 "exactly one interior neighbourhood must have two extremal elements, found " +
                     std::to_string(index_one.size()),
                 index_one);
    if (auto cycle = cycle_obstruction(p)) {
        out.obstructions.push_back({"ext-cycle", "the Hasse diagram of P_Ext has a cycle", *cycle,
                                    is_forest(p, false).cycle});
    }
    if (!out.obstructions.empty()) return out;

    out.sequence = find_contact_sequence(p, &out.relabel);
    if (!out.sequence) throw std::logic_error("classifier accepted a poset without a contact sequence");
    out.contact = true;
    // φ_P comes out in the replayed labels; report it on P itself.
    std::vector<Element> back(out.relabel.size());
    for (Element e = 1; e <= p.size(); ++e) back[out.relabel[e]] = e;
    Functional phi;
    for (const auto& [pos, c] : build_contact_form(*out.sequence).terms) phi.add(back[pos.first], back[pos.second], c);
    out.form = std::move(phi);
    return out;
}

Polynomial symbolic_extended_pfaffian(const LieAlgebra& g) {
    const int d = g.dim();
    if (d % 2 == 0) throw Error(ErrorKind::EvenDimension, "extended matrix needs odd dimension");
    if (static_cast<std::size_t>(d) > Polynomial::kMaxVariables || d + 1 > 30)
        throw Error(ErrorKind::SizeBound, "too many variables for a symbolic Pfaffian");
    const int n = d + 1;
    std::vector<Polynomial> vars;
    for (int k = 0; k < d; ++k) vars.push_back(Polynomial::variable(static_cast<std::size_t>(k)));
    Matrix<Polynomial> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int k = 0; k < d; ++k) {
        m(0, k + 1) = vars[k];
        m(k + 1, 0) = Polynomial(0) - vars[k];
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Polynomial v;
            for (const auto& [k, c] : g.bracket(i, j)) v = v + vars[k] * c;
            m(i + 1, j + 1) = v;
            m(j + 1, i + 1) = Polynomial(0) - v;
        }
    // Expansion along the lowest remaining index, memoised on the index set.
    std::unordered_map<std::uint32_t, Polynomial> memo;
    std::function<Polynomial(std::uint32_t)> pf = [&](std::uint32_t mask) -> Polynomial {
        if (mask == 0) return Polynomial(1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        int first = 0;
        while (!(mask >> first & 1u)) ++first;
        Polynomial sum;
        int sign = 1;
        for (int j = first + 1; j < n; ++j) {
            if (!(mask >> j & 1u)) continue;
            const Polynomial& a = m(static_cast<std::size_t>(first), static_cast<std::size_t>(j));
            if (!a.is_zero()) {
                const Polynomial term = a * pf(mask & ~(1u << first) & ~(1u << j));
                sum = sign > 0 ? sum + term : sum - term;
            }
            sign = -sign;
        }
        memo.emplace(mask, sum);
        return sum;
    };
    return pf((1u << n) - 1);
}

ContactVerdict is_contact(const LieAlgebra& g, int trials, std::uint64_t seed, bool use_classifier) {
    ContactVerdict v;
    if (g.dim() % 2 == 0) {
        v.kind = ContactVerdict::Kind::NotContactCertified;
        v.reason = "even dimension";
        return v;
    }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        DualVector phi = random_dual_vector(g.dim(), rng);
        if (verify_contact_form(g, phi)) {
            v.kind = ContactVerdict::Kind::Witness;
            v.witness = std::move(phi);
            v.reason = "sampled";
            return v;
        }
    }
    if (use_classifier && g.origin() && g.origin()->height() <= 2) {
        const Classification c = classify_h2(*g.origin(), seed);
        if (c.contact) {
            v.kind = ContactVerdict::Kind::Witness;
            v.witness = g.dual_vector(*c.form);
            v.reason = "classifier certificate";
        } else {
            v.kind = ContactVerdict::Kind::NotContactCertified;
            v.reason = c.obstructions.front().kind;
        }
        return v;
    }
    if (!g.origin() && g.dim() <= kSymbolicPfaffianDim) {
        const Polynomial pf = symbolic_extended_pfaffian(g);
        if (pf.is_zero()) {
            v.kind = ContactVerdict::Kind::NotContactCertified;
            v.reason = "extended Pfaffian vanishes identically";
            return v;
        }
        for (int t = 0; t < 64; ++t) {
            DualVector phi = random_dual_vector(g.dim(), rng);
            if (sgn(pf.evaluate(phi)) != 0) {
                v.kind = ContactVerdict::Kind::Witness;
                v.witness = std::move(phi);
                v.reason = "nonvanishing Pfaffian";
                return v;
            }
        }
    }
    const double per_trial = static_cast<double>((g.dim() + 1) / 2) / (2.0 * kDefaultSampleBound + 1.0);
    v.kind = ContactVerdict::Kind::NotContact;
    v.failure_bound = std::pow(per_trial, trials);
    v.reason = "no witness in " + std::to_string(trials) + " samples";
    return v;
}

namespace {

std::vector<std::uint32_t> state_code(const Poset& p, const Functional& phi) {
    ColoredDigraph g;
    g.n = p.size();
    g.colors.assign(static_cast<std::size_t>(g.n), 0);
    g.arcs.assign(static_cast<std::size_t>(g.n) * g.n, 0);
    if (g.n >= 1) g.colors[0] |= 1;
    if (g.n >= 2) g.colors[1] |= 2;
    for (const auto& [a, b] : p.relations()) g.arcs[static_cast<std::size_t>(a - 1) * g.n + (b - 1)] |= 1;
    for (const auto& [pos, c] : phi.terms) {
        const auto [i, j] = pos;
        if (i == j) g.colors[i - 1] |= 4;
        else g.arcs[static_cast<std::size_t>(i - 1) * g.n + (j - 1)] |= 2;
    }
    return canonical_code(g);
}

}  // namespace

void for_each_contact_sequence(int max_steps, bool dedupe,
                               const std::function<void(const ContactSequence&, const Assembly&,
                                                        const Functional&)>& visit) {
    if (max_steps < 1) return;
    struct State {
        ContactSequence seq;
        Assembly assembly;
    };
    std::vector<State> level;
    {
        ContactSequence seq;
        seq.steps.push_back({BuildingBlock::P111, std::nullopt, std::nullopt, std::nullopt, std::nullopt});
        Assembly a = replay(seq);
        visit(seq, a, build_contact_form(seq, a));
        level.push_back({std::move(seq), std::move(a)});
    }
    for (int len = 2; len <= max_steps; ++len) {
        std::vector<State> next;
        std::set<std::vector<std::uint32_t>> seen;
        for (const State& st : level) {
            for (BuildingBlock block : {BuildingBlock::P11, BuildingBlock::P112, BuildingBlock::P211})
                for (GluingRule rule : kContactRules) {
                    if (block == BuildingBlock::P11 && rule == GluingRule::D1) continue;
                    for (const GluingStep& step : admissible_steps(st.assembly.poset, block, rule)) {
                        State ns{st.seq, {}};
                        ns.seq.steps.push_back(step);
                        GluingOutcome o = apply_gluing(st.assembly.poset, step);
                        ns.assembly.labels = st.assembly.labels;
                        for (auto& s : ns.assembly.labels) remap(s, o.q_map);
                        ns.assembly.labels.push_back(o.labels);
                        ns.assembly.prefixes = st.assembly.prefixes;
                        ns.assembly.prefixes.push_back(o.poset);
                        ns.assembly.poset = std::move(o.poset);
                        const Functional phi = build_contact_form(ns.seq, ns.assembly);
                        if (dedupe && !seen.insert(state_code(ns.assembly.poset, phi)).second) continue;
                        visit(ns.seq, ns.assembly, phi);
                        if (len < max_steps) next.push_back(std::move(ns));
                    }
                }
        }
        level = std::move(next);
    }
}

}  // namespace lieposet
