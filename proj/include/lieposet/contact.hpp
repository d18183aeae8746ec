#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieposet/lie_algebra.hpp"
#include "lieposet/poset.hpp"

namespace lieposet {

/// The twelve ways of attaching a building block S to a poset Q. The block's
/// extremal elements are c and a1 (and a2 for P(1,1,2), P(2,1,1)); when
/// identified they land on x, y, z of Q respectively.
enum class GluingRule { A1, A2, B, C, D1, D2, E1, E2, F, G1, G2, H };

enum class BuildingBlock { P11, P111, P112, P211 };

std::string_view to_string(GluingRule rule);
std::string_view to_string(BuildingBlock block);
GluingRule parse_rule(std::string_view text);
BuildingBlock parse_block(std::string_view text);

inline constexpr GluingRule kAllRules[] = {GluingRule::A1, GluingRule::A2, GluingRule::B,  GluingRule::C,
                                           GluingRule::D1, GluingRule::D2, GluingRule::E1, GluingRule::E2,
                                           GluingRule::F,  GluingRule::G1, GluingRule::G2, GluingRule::H};
inline constexpr GluingRule kContactRules[] = {GluingRule::A1, GluingRule::A2, GluingRule::C,
                                               GluingRule::D1, GluingRule::D2, GluingRule::F};
inline constexpr BuildingBlock kAllBlocks[] = {BuildingBlock::P11, BuildingBlock::P111, BuildingBlock::P112,
                                               BuildingBlock::P211};

bool is_contact_rule(GluingRule rule);
/// P(1,1) and P(1,1,1) have no a2 and admit only A1, C, D1, E1.
bool rule_applies(BuildingBlock block, GluingRule rule);
Poset block_poset(BuildingBlock block);

/// Which of c / a1 / a2 a rule identifies.
struct Identification {
    bool c = false;
    bool a1 = false;
    bool a2 = false;
};
Identification identification(GluingRule rule);

/// One step of a build script. The initial step has no rule and no targets;
/// later steps name the identification targets in the current poset's labels.
struct GluingStep {
    BuildingBlock block = BuildingBlock::P111;
    std::optional<GluingRule> rule;
    std::optional<Element> x;  // c = x
    std::optional<Element> y;  // a1 = y
    std::optional<Element> z;  // a2 = z

    bool operator==(const GluingStep&) const = default;
};

/// Where a step's block sits in a poset: x_j = c, m_j = middle element,
/// y_j = a1, z_j = a2.
struct StepLabels {
    Element x = 0;
    std::optional<Element> m;
    Element y = 0;
    std::optional<Element> z;
};

struct GluingOutcome {
    Poset poset;
    std::vector<Element> q_map;  // label in Q -> label in the result (index 0 unused)
    StepLabels labels;           // the new block, in result labels
};

/// Q ∪ S with the rule's identifications, relabelled naturally (smallest
/// earlier label first, new elements after). Throws RuleBlockMismatch,
/// PolarityMismatch or RulePreconditionViolated.
GluingOutcome apply_gluing(const Poset& q, const GluingStep& step);

/// All steps attaching `block` to `q` by `rule` that satisfy the rule's
/// polarity and ∼/≁ side conditions, in lexicographic target order.
std::vector<GluingStep> admissible_steps(const Poset& q, BuildingBlock block, GluingRule rule);

/// ind g_A(S) plus the rule's offset. Throws RuleBlockMismatch.
int index_contribution(BuildingBlock block, GluingRule rule);

struct ContactSequence {
    std::vector<GluingStep> steps;
    bool operator==(const ContactSequence&) const = default;
};

/// Replays a build script. labels[j] locates step j's block in the final
/// poset; prefixes[j] is the poset after step j.
struct Assembly {
    Poset poset;
    std::vector<StepLabels> labels;
    std::vector<Poset> prefixes;
};

/// Throws InvalidSequence (message names the failing step) on any error.
Assembly replay(const ContactSequence& seq);

/// Replay plus the contact-sequence constraints: rules from {A1, A2, C, D1,
/// D2, F} and exactly one P(1,1,1) block. Throws InvalidSequence.
Assembly validate_contact_sequence(const ContactSequence& seq);

/// φ_P accumulated step by step. Requires the P(1,1,1) block first (its
/// elements are then labelled 1 ≺ 2 ≺ 3 throughout). Throws InvalidSequence.
Functional build_contact_form(const ContactSequence& seq);
Functional build_contact_form(const ContactSequence& seq, const Assembly& assembly);

/// Decomposes a connected height-two poset into interior neighbourhoods and
/// extremal covers and attaches them greedily starting from the P(1,1,1)
/// block. Returns nullopt when no contact sequence exists. Throws
/// HeightBound or Disconnected.
std::optional<ContactSequence> find_contact_sequence(const Poset& p);
/// Also reports relabel[e]: the label of e in the replayed poset.
std::optional<ContactSequence> find_contact_sequence(const Poset& p, std::vector<Element>* relabel);

/// Σ_{p≠middle} E_{p,p} + (1-|P|) E_{middle,middle} + |P| E_{bottom,middle}
/// in g_A(P) coordinates.
RationalVector expected_kernel(const Poset& p, Element bottom = 1, Element middle = 2);

/// A cycle in the Hasse diagram of P_Ext, if any.
std::optional<std::vector<Element>> cycle_obstruction(const Poset& p);

/// True iff det [B̂_φ] ≠ 0. Throws EvenDimension.
bool verify_contact_form(const LieAlgebra& g, const Functional& phi);
bool verify_contact_form(const LieAlgebra& g, const DualVector& phi);

/// Contact form on g_A(P1 + P2) for Frobenius P1, P2: a sampled regular
/// functional whose value on the central element is made nonzero.
Functional disconnected_contact_form(const Poset& p1, const Poset& p2, std::uint64_t seed);

/// Same, on any height <= 2 poset with exactly two Frobenius components.
Functional disconnected_contact_form_on(const Poset& p, std::uint64_t seed);

struct Obstruction {
    std::string kind;
    std::string detail;
    std::vector<Element> witness;
    std::vector<Element> hasse_cycle;  // for cycle obstructions
};

struct Classification {
    bool contact = false;
    std::optional<ContactSequence> sequence;       // connected certificate
    std::vector<Element> relabel;                  // P label -> label in replay(sequence)
    std::vector<std::vector<Element>> components;  // disconnected certificate
    std::optional<Functional> form;
    std::vector<Obstruction> obstructions;  // all violated conditions, first is primary
};

/// Complete classifier for height <= 2. The certificate form, always in P's
/// labels, is built from the contact sequence (connected) or sampled with
/// `seed` (disconnected).
Classification classify_h2(const Poset& p, std::uint64_t seed = 0);

struct ContactVerdict {
    enum class Kind { Witness, NotContact, NotContactCertified };
    Kind kind = Kind::NotContact;
    DualVector witness;         // values on the basis, when Kind::Witness
    double failure_bound = 0.0; // Schwartz–Zippel bound for NotContact
    std::string reason;
};

std::string_view to_string(ContactVerdict::Kind kind);

/// Largest raw-algebra dimension certified by a symbolic Pfaffian.
inline constexpr int kSymbolicPfaffianDim = 9;

/// Samples functionals for a nonzero extended determinant. Without a witness:
/// poset algebras of height <= 2 defer to the classifier (when enabled), raw
/// algebras of dim <= 9 get a symbolic Pfaffian test, anything else is
/// NotContact with a sampling bound.
ContactVerdict is_contact(const LieAlgebra& g, int trials, std::uint64_t seed, bool use_classifier = true);

/// Pfaffian of [B̂_φ] with φ = Σ x_k b_k^*, as a polynomial.
class Polynomial;
Polynomial symbolic_extended_pfaffian(const LieAlgebra& g);

/// Every contact sequence with at most `max_steps` steps that starts with
/// P(1,1,1), avoids the no-op P(1,1)/D1 step, and (when `dedupe`) visits
/// one representative per isomorphism class of (poset, form) at each length.
void for_each_contact_sequence(int max_steps, bool dedupe,
                               const std::function<void(const ContactSequence&, const Assembly&,
                                                        const Functional&)>& visit);

}  // namespace lieposet
