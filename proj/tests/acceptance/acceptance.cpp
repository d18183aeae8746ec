// Acceptance harness: one PASS/FAIL line per criterion, with timings and
// failure details on stderr.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lieposet/canonical.hpp"
#include "lieposet/contact.hpp"
#include "lieposet/error.hpp"
#include "lieposet/io.hpp"
#include "lieposet/polynomial.hpp"
#include "lieposet/sweep.hpp"
#include "lieposet/topology.hpp"

using namespace lieposet;

namespace {

constexpr std::uint64_t kSeed = 20240601;

std::uint64_t mix(std::uint64_t base, std::uint64_t k) { return base + 0x9E3779B97F4A7C15ull * (k + 1); }

// Collects failures for one criterion; prints at most a few of them.
struct Failures {
    std::vector<std::string> lines;
    void add(const std::string& s) { lines.push_back(s); }
    void add(const Poset& p, const std::string& s) { lines.push_back(poset_to_json(p).dump() + ": " + s); }
    bool ok() const { return lines.empty(); }
};

// l != 0 lies in ker(b) and the rank of b is one less than its size. A
// modular rank is a lower bound, so reaching size - 1 mod p settles it.
bool kernel_is_span(const RationalMatrix& b, const RationalVector& l) {
    bool nonzero = false;
    for (const Rational& x : l) nonzero = nonzero || sgn(x) != 0;
    if (!nonzero) return false;
    for (const Rational& x : multiply(b, l))
        if (sgn(x) != 0) return false;
    const std::size_t target = b.rows() - 1;
    return modular_rank(b, 2305843009213693951ull) == target || rank(b) == target;
}

const std::vector<std::vector<Poset>>& height2_classes() {
    static const std::vector<std::vector<Poset>> all = [] {
        std::vector<std::vector<Poset>> v(8);
        for (int n = 1; n <= 7; ++n) v[n] = enumerate_posets(n, 2, false);
        return v;
    }();
    return all;
}

std::string criterion1(Failures& f) {
    int count = 0, certified = 0;
    std::uint64_t k = 0;
    for (int n = 2; n <= 7; ++n)
        for (const Poset& p : height2_classes()[n]) {
            const LieAlgebra g = build_type_a(p);
            const IndexReport r = index(g, 3, mix(kSeed, k++));
            ++count;
            if (r.index != index_formula_h2(p))
                f.add(p, "rank index " + std::to_string(r.index) + " vs formula " +
                             std::to_string(index_formula_h2(p)));
            if (g.dim() <= kSymbolicIndexDim) {
                if (!r.certified) f.add(p, "dim <= 8 but not certified");
                else ++certified;
            }
        }
    return std::to_string(count) + " classes, " + std::to_string(certified) + " certified";
}

std::string criterion2(Failures& f) {
    int contact = 0, pfaffian = 0, sampled = 0;
    std::uint64_t k = 0;
    for (int n = 1; n <= 7; ++n)
        for (const Poset& p : height2_classes()[n]) {
            const std::uint64_t seed = mix(kSeed ^ 0x5151, k++);
            const Classification c = classify_h2(p, seed);
            if (n < 2) {
                if (c.contact) f.add(p, "single element classified contact");
                continue;
            }
            const LieAlgebra g = build_type_a(p);
            if (c.contact) {
                ++contact;
                if (!c.form || !verify_contact_form(g, *c.form)) {
                    f.add(p, "contact verdict without a nonzero determinant");
                    continue;
                }
                if (p.is_connected()) {
                    std::vector<Element> back(c.relabel.size());
                    for (Element e = 1; e <= p.size(); ++e) back[c.relabel[e]] = e;
                    const RationalVector l = expected_kernel(p, back[1], back[2]);
                    if (!kernel_is_span(kirillov_matrix(g, *c.form), l)) f.add(p, "kernel is not span{L}");
                }
                continue;
            }
            if (c.obstructions.empty()) f.add(p, "NotContact without a combinatorial obstruction");
            if (g.dim() % 2 == 0) continue;
            if (g.dim() <= kSymbolicPfaffianDim) {
                ++pfaffian;
                if (!symbolic_extended_pfaffian(g).is_zero()) f.add(p, "NotContact but Pfaffian is nonzero");
            } else {
                ++sampled;
                if (is_contact(g, 3, seed, false).kind == ContactVerdict::Kind::Witness)
                    f.add(p, "NotContact but sampling found a contact form");
            }
        }
    return std::to_string(contact) + " contact verified, " + std::to_string(pfaffian) + " Pfaffian-zero, " +
           std::to_string(sampled) + " sampled";
}

std::string criterion3(Failures& f) {
    int count = 0;
    for_each_contact_sequence(5, true, [&](const ContactSequence& seq, const Assembly& a, const Functional& phi) {
        ++count;
        const LieAlgebra g = build_type_a(a.poset);
        auto where = [&] { return sequence_to_json(seq).dump(); };
        if (!is_nonsingular(extended_matrix(g, phi))) f.add(where() + ": zero determinant");
        if (!kernel_is_span(kirillov_matrix(g, phi), expected_kernel(a.poset))) f.add(where() + ": kernel != span{L}");
    });
    return std::to_string(count) + " sequences";
}

std::string criterion4(Failures& f) {
    std::mt19937_64 rng(kSeed);
    int pairs = 0;
    for (BuildingBlock b : kAllBlocks)
        for (GluingRule r : kAllRules) {
            if (!rule_applies(b, r)) continue;
            ++pairs;
            const int expected = index_contribution(b, r);
            int done = 0;
            for (int attempt = 0; attempt < 20000 && done < 100; ++attempt) {
                Poset q = block_poset(kAllBlocks[rng() % 4]);
                for (int k = static_cast<int>(rng() % 4); k > 0; --k) {
                    const BuildingBlock bb = kAllBlocks[rng() % 4];
                    const GluingRule rr = kAllRules[rng() % 12];
                    const auto steps = admissible_steps(q, bb, rr);
                    if (!steps.empty()) q = apply_gluing(q, steps[rng() % steps.size()]).poset;
                }
                const auto steps = admissible_steps(q, b, r);
                if (steps.empty()) continue;
                const Poset p = apply_gluing(q, steps[rng() % steps.size()]).poset;
                const int diff = index_formula_h2(p) - index_formula_h2(q);
                const int rank_diff = index(build_type_a(p), 3, rng()).index - index(build_type_a(q), 3, rng()).index;
                const std::string tag = std::string(to_string(b)) + "/" + std::string(to_string(r));
                if (diff != expected) f.add(p, tag + ": formula difference " + std::to_string(diff));
                if (rank_diff != expected) f.add(p, tag + ": rank difference " + std::to_string(rank_diff));
                ++done;
            }
            if (done < 100)
                f.add(std::string(to_string(b)) + "/" + std::string(to_string(r)) + ": only " +
                      std::to_string(done) + " gluings realised");
        }
    return std::to_string(pairs) + " block/rule pairs x 100";
}

std::string criterion5(Failures& f) {
    const Poset ex1 = make_poset(4, {{1, 2}, {2, 3}, {2, 4}});
    const auto rel = ex1.relations();
    if (std::set<Relation>(rel.begin(), rel.end()) != std::set<Relation>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}})
        f.add("fork: Rel");
    const ExtremalData ed = extremal_data(ex1);
    if (ed.ext != std::vector<Element>{1, 3, 4}) f.add("fork: Ext");
    if (ed.rel_e != std::vector<Relation>{{1, 3}, {1, 4}}) f.add("fork: Rel_E");

    auto has_cycle = [](const Classification& c, const std::vector<Element>& cycle) {
        for (const Obstruction& o : c.obstructions)
            if (o.kind == "ext-cycle" && same_cycle(o.hasse_cycle, cycle)) return true;
        return false;
    };
    const Poset left = make_poset(6, {{1, 3}, {1, 4}, {3, 5}, {4, 5}, {4, 6}, {2, 4}});
    const Classification cl = classify_h2(left, kSeed);
    if (cl.contact || !has_cycle(cl, {1, 3, 5, 4})) f.add("ext cycle poset: expected NotContact with cycle (1,3,5,4)");
    const Poset right = make_poset(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    const Classification cr = classify_h2(right, kSeed);
    if (cr.contact || !has_cycle(cr, {1, 4, 2, 3})) f.add("square: expected NotContact with cycle (1,4,2,3)");

    const Poset two_trees = make_poset(12, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6},
                                       {7, 9}, {7, 10}, {8, 10}, {9, 11}, {9, 12}, {10, 12}});
    const Classification c5 = classify_h2(two_trees, kSeed);
    if (!c5.contact || !c5.form || !verify_contact_form(build_type_a(two_trees), *c5.form)) f.add("two trees: not Contact");

    auto e = [](int k, long c) { return SparseVector{{k, Rational(c)}}; };
    const LieAlgebra fn = build_raw(7, {{1, 4, e(4, 2)}, {2, 4, e(4, 1)}, {1, 5, e(5, 1)}, {2, 5, e(5, 2)}, {3, 5, e(5, 1)},
                                        {1, 6, e(6, 1)}, {3, 6, e(6, 1)}, {2, 7, e(7, 1)}, {3, 7, e(7, 2)}});
    if (index(fn, 3, kSeed).index != 1) f.add("index-one algebra: index != 1");
    if (is_contact(fn, 3, kSeed).kind != ContactVerdict::Kind::NotContactCertified)
        f.add("index-one algebra: not certified NotContact");
    if (!symbolic_extended_pfaffian(fn).is_zero()) f.add("index-one algebra: Pfaffian not identically zero");

    Functional p0;
    p0.add(2, 2).add(1, 3).add(2, 3);
    if (build_contact_form(ContactSequence{{GluingStep{BuildingBlock::P111}}}) != p0) f.add("phi_P0 differs");
    return "fork, cycle posets, two trees, 7-dim algebra, phi_P0";
}

int choose2(int m) { return m * (m - 1) / 2; }

std::string criterion6(Failures& f) {
    int rigid = 0, identity = 0;
    for (int n = 2; n <= 5; ++n) {
        for (const Poset& p : enumerate_posets(n, 2, true)) {
            if (!classify_h2(p, kSeed).contact) continue;
            ++rigid;
            const LieAlgebra g = build_type_a(p);
            if (!center(g).empty()) f.add(p, "contact poset with nonzero center");
            if (betti_numbers(order_complex(p), true, 2) != std::vector<int>{0, 0, 0})
                f.add(p, "contact poset with nonzero reduced homology");
            if (ce_cohomology_dims(g).h2 != 0) f.add(p, "contact poset with H^2 != 0");
        }
        for (const Poset& p : enumerate_posets(n, n - 1, false)) {
            ++identity;
            const LieAlgebra g = build_type_a(p);
            const int h = n - 1;
            const int c = static_cast<int>(center(g).size());
            const std::vector<int> b = betti_numbers(order_complex(p), false, 2);
            const int predicted = choose2(h) * c + h * b[1] + b[2];
            const int h2 = ce_cohomology_dims(g).h2;
            if (h2 != predicted)
                f.add(p, "H^2 = " + std::to_string(h2) + ", decomposition gives " + std::to_string(predicted));
        }
    }
    return std::to_string(rigid) + " contact posets, " + std::to_string(identity) + " identity checks";
}

std::string criterion7(Failures& f) {
    const MorseAssignment base{{{1}, 0}, {{2}, 2}, {{3}, 4}, {{1, 2}, 1}, {{1, 3}, 3}, {{2, 3}, 6}, {{1, 2, 3}, 5}};
    const std::vector<Face> critical = check_morse(order_complex(chain(3)), base);
    if (critical != std::vector<Face>{{1}}) f.add("critical cells differ from {v1}");
    return "critical cells {v1}";
}

std::string criterion8(Failures& f) {
    const std::string a = sweep_to_json(sweep(6, kSeed, 3, 1)).dump(2);
    const std::string b = sweep_to_json(sweep(6, kSeed, 3, 4)).dump(2);
    if (a != b) f.add("sweep outputs differ");
    if (sweep(6, kSeed, 3).discrepancies() != 0) f.add("sweep reports discrepancies");
    return std::to_string(a.size()) + " bytes identical";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string(Failures&)>>> criteria{
        {"index formula agrees with rank index, n <= 7", criterion1},
        {"classifier verdicts match verified forms, n <= 7", criterion2},
        {"contact sequences of <= 5 steps give contact forms", criterion3},
        {"gluing index contributions", criterion4},
        {"golden examples", criterion5},
        {"rigidity and H^2 decomposition, n <= 5", criterion6},
        {"Morse base case", criterion7},
        {"sweep determinism", criterion8},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Failures f;
        std::string summary;
        const auto start = std::chrono::steady_clock::now();
        try {
            summary = criteria[i].second(f);
        } catch (const std::exception& e) {
            f.add(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", secs);
        std::cout << (f.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
                  << summary << "; " << timing << "]" << std::endl;
        if (!f.ok()) {
            ++failed;
            for (std::size_t k = 0; k < f.lines.size() && k < 10; ++k) std::cerr << "  " << f.lines[k] << '\n';
            if (f.lines.size() > 10) std::cerr << "  ... " << f.lines.size() - 10 << " more\n";
        }
    }
    return failed == 0 ? 0 : 1;
}
