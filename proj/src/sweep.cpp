#include "lieposet/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "lieposet/canonical.hpp"
#include "lieposet/topology.hpp"

namespace lieposet {

int SweepReport::discrepancies() const { return static_cast<int>(findings.size()); }

namespace {

struct Outcome {
    bool contact = false;
    bool frobenius = false;
    std::vector<std::string> found;
};

Outcome check_one(const Poset& p, std::uint64_t local_seed, int trials) {
    Outcome out;
    const int n = p.size();
    auto note = [&](const std::string& what) {
        out.found.push_back("n=" + std::to_string(n) + " " + poset_to_json(p).dump() + ": " + what);
    };
    const Classification c = classify_h2(p, local_seed);
    out.contact = c.contact;
    if (n < 2) return out;
    const int formula = index_formula_h2(p);
    out.frobenius = formula == 0;
    const LieAlgebra g = build_type_a(p);
    const IndexReport idx = index(g, trials, local_seed);
    if (idx.index != formula) note("rank index " + std::to_string(idx.index) + " != formula");
    if (is_frobenius_h2(p) != (formula == 0)) note("Frobenius test disagrees with index formula");
    if (c.contact) {
        if (!c.form || !verify_contact_form(g, *c.form)) note("contact certificate fails the determinant");
        if (p.is_connected() && !verify_acyclic(p)) note("contact poset with non-acyclic order complex");
        if (formula != 1) note("contact poset with index != 1");
    } else if (g.dim() % 2 == 1 && is_contact(g, trials, local_seed, false).kind == ContactVerdict::Kind::Witness) {
        note("sampling found a contact form the classifier rejected");
    }
    return out;
}

}  // namespace

SweepReport sweep(int max_n, std::uint64_t seed, int trials, unsigned threads) {
    SweepReport report;
    report.max_n = max_n;
    report.seed = seed;
    report.trials = trials;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t position = 0;
    for (int n = 1; n <= max_n; ++n) {
        const std::vector<Poset> posets = enumerate_posets(n, 2, false);
        std::vector<Outcome> outcomes(posets.size());
        const std::uint64_t base = position;
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < posets.size();)
                outcomes[i] = check_one(posets[i], seed + 0x9E3779B97F4A7C15ull * (base + i + 1), trials);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
        work();
        for (std::thread& t : pool) t.join();
        position += posets.size();

        // Merge in enumeration order so the report does not depend on scheduling.
        SweepRow row;
        row.n = n;
        for (const Outcome& o : outcomes) {
            ++row.classes;
            if (o.contact) ++row.contact;
            else if (!o.frobenius) ++row.neither;
            if (o.frobenius) ++row.frobenius;
            row.discrepancies += static_cast<int>(o.found.size());
            report.findings.insert(report.findings.end(), o.found.begin(), o.found.end());
        }
        report.rows.push_back(row);
    }
    return report;
}

Json sweep_to_json(const SweepReport& r) {
    Json rows = Json::array();
    for (const SweepRow& row : r.rows)
        rows.push_back({{"n", row.n},
                        {"classes", row.classes},
                        {"contact", row.contact},
                        {"frobenius", row.frobenius},
                        {"neither", row.neither},
                        {"discrepancies", row.discrepancies}});
    return Json{{"max_n", r.max_n},     {"seed", r.seed},
                {"trials", r.trials},   {"rows", rows},
                {"discrepancies", r.discrepancies()}, {"findings", r.findings}};
}

std::string sweep_to_text(const SweepReport& r) {
    std::ostringstream out;
    out << "max_n=" << r.max_n << " seed=" << r.seed << " trials=" << r.trials << '\n';
    out << " n  classes  contact  frobenius  neither  discrepancies\n";
    for (const SweepRow& row : r.rows) {
        char line[96];
        std::snprintf(line, sizeof line, "%2d  %7d  %7d  %9d  %7d  %13d\n", row.n, row.classes, row.contact,
                      row.frobenius, row.neither, row.discrepancies);
        out << line;
    }
    for (const std::string& f : r.findings) out << "DISCREPANCY " << f << '\n';
    out << "discrepancies: " << r.discrepancies() << '\n';
    return out.str();
}

}  // namespace lieposet
