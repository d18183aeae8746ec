// Command-line driver: classify, sweep, build, index, homology, export-dot.
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lieposet/canonical.hpp"
#include "lieposet/error.hpp"
#include "lieposet/io.hpp"
#include "lieposet/sweep.hpp"
#include "lieposet/topology.hpp"

using namespace lieposet;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitDiscrepancy = 3;
constexpr int kExitSizeBound = 4;

struct Config {
    std::optional<std::uint64_t> seed;
    int trials = kDefaultTrials;
    int max_n = 5;
    unsigned threads = 0;
    std::string format = "json";
    std::string input = "-";
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint64_t need_seed(const Config& c) {
    if (!c.seed) throw Error(ErrorKind::ParseError, "this command samples functionals; pass --seed");
    return *c.seed;
}

void emit(const Json& j, const Config& c) {
    if (c.format == "json") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    // Text: one "key: value" line per top-level field.
    for (const auto& [k, v] : j.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

Json index_json(const IndexReport& r, std::optional<int> formula) {
    Json j{{"rank_index", r.index},
           {"trials", r.trials},
           {"sample_bound", r.sample_bound},
           {"certified", r.certified},
           {"failure_bound", r.failure_bound}};
    if (formula) j["formula"] = *formula;
    return j;
}

Json verdict_json(const LieAlgebra& g, const ContactVerdict& v) {
    Json j{{"verdict", std::string(to_string(v.kind))}, {"reason", v.reason}};
    if (v.kind == ContactVerdict::Kind::Witness) {
        Json w = Json::array();
        for (const Rational& x : v.witness) w.push_back(to_fraction(x));
        j["witness"] = w;
        j["determinant"] = to_fraction(determinant(extended_matrix(g, v.witness)));
    }
    if (v.kind == ContactVerdict::Kind::NotContact) j["failure_bound"] = v.failure_bound;
    return j;
}

int cmd_classify(const Config& c) {
    const Json in = parse_json(read_input(c.input));
    const std::uint64_t seed = need_seed(c);
    if (in.contains("dim")) {
        const LieAlgebra g = algebra_from_json(in);
        Json out = verdict_json(g, is_contact(g, c.trials, seed));
        out["index"] = index_json(index(g, c.trials, seed), std::nullopt);
        emit(out, c);
        return 0;
    }
    const Poset p = poset_from_json(in);
    const Classification cls = classify_h2(p, seed);
    Json out = classification_to_json(cls);
    if (p.size() >= 2) {
        const LieAlgebra g = build_type_a(p);
        out["dim"] = g.dim();
        out["index"] = index_json(index(g, c.trials, seed), index_formula_h2(p));
        out["center_dimension"] = center(g).size();
        if (cls.contact) out["certificate"]["determinant"] = to_fraction(determinant(extended_matrix(g, *cls.form)));
    }
    out["betti"] = betti_numbers(order_complex(p), false);
    emit(out, c);
    return 0;
}

int cmd_sweep(const Config& c) {
    if (c.max_n > kEnumerationBound)
        throw Error(ErrorKind::SizeBound, "--max-n is at most " + std::to_string(kEnumerationBound));
    const SweepReport r = sweep(c.max_n, need_seed(c), c.trials, c.threads);
    if (c.format == "text") std::cout << sweep_to_text(r);
    else std::cout << sweep_to_json(r).dump(2) << '\n';
    return r.discrepancies() == 0 ? 0 : kExitDiscrepancy;
}

int cmd_build(const Config& c) {
    const ContactSequence seq = sequence_from_json(parse_json(read_input(c.input)));
    const Assembly a = validate_contact_sequence(seq);
    const Functional phi = build_contact_form(seq, a);
    const LieAlgebra g = build_type_a(a.poset);
    const Rational det = determinant(extended_matrix(g, phi));
    const RationalMatrix b = kirillov_matrix(g, phi);
    const RationalVector l = expected_kernel(a.poset);
    bool kernel_ok = kernel(b).size() == 1;
    for (const Rational& x : multiply(b, l)) kernel_ok = kernel_ok && sgn(x) == 0;
    Json labels = Json::array();
    for (const StepLabels& s : a.labels) {
        Json o{{"x", s.x}, {"y", s.y}};
        if (s.m) o["m"] = *s.m;
        if (s.z) o["z"] = *s.z;
        labels.push_back(o);
    }
    const Json out{{"poset", poset_to_json(a.poset)},
                   {"labels", labels},
                   {"contact_form", functional_to_json(phi)},
                   {"determinant", to_fraction(det)},
                   {"contact", sgn(det) != 0},
                   {"kernel_check", kernel_ok}};
    emit(out, c);
    return sgn(det) != 0 && kernel_ok ? 0 : kExitDiscrepancy;
}

int cmd_index(const Config& c) {
    const Json in = parse_json(read_input(c.input));
    const std::uint64_t seed = need_seed(c);
    if (in.contains("dim")) {
        emit(index_json(index(algebra_from_json(in), c.trials, seed), std::nullopt), c);
        return 0;
    }
    const Poset p = poset_from_json(in);
    std::optional<int> formula;
    if (p.height() <= 2 && p.size() >= 2) formula = index_formula_h2(p);
    Json out = index_json(index(build_type_a(p), c.trials, seed), formula);
    emit(out, c);
    return 0;
}

int cmd_homology(const Config& c) {
    const Json in = parse_json(read_input(c.input));
    const SimplicialComplex k = in.contains("faces") ? complex_from_json(in) : order_complex(poset_from_json(in));
    const Json out{{"dimension", k.dimension()},
                   {"betti", betti_numbers(k, false)},
                   {"reduced_betti", betti_numbers(k, true)},
                   {"euler_characteristic", k.euler_characteristic()}};
    emit(out, c);
    return 0;
}

int cmd_export_dot(const Config& c) {
    std::cout << hasse_dot(poset_from_json(parse_json(read_input(c.input))));
    return 0;
}

void cfg_dot_format(CLI::App* sub, Config& cfg) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"dot"}));
}

int exit_code(ErrorKind k) { return k == ErrorKind::SizeBound ? kExitSizeBound : kExitInput; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Type-A Lie poset algebras: index, contact classification, rigidity checks"};
    app.require_subcommand(1);
    Config cfg;
    auto add_common = [&](CLI::App* sub, bool random) {
        sub->add_option("input", cfg.input, "JSON input file, - for stdin");
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
        if (random) {
            sub->add_option("--seed", cfg.seed, "Seed for sampled functionals");
            sub->add_option("--trials", cfg.trials, "Samples per randomized test")->check(CLI::PositiveNumber);
        }
    };
    auto* classify = app.add_subcommand("classify", "Contact classification of a poset or structure-constant algebra");
    add_common(classify, true);
    auto* sweep_cmd = app.add_subcommand("sweep", "Cross-check every height <= 2 poset up to --max-n");
    sweep_cmd->add_option("--max-n", cfg.max_n, "Largest poset size")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--seed", cfg.seed, "Seed for sampled functionals");
    sweep_cmd->add_option("--trials", cfg.trials, "Samples per randomized test")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--threads", cfg.threads, "Worker threads, 0 for all cores");
    sweep_cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
    auto* build = app.add_subcommand("build", "Replay a contact sequence and verify its form");
    add_common(build, false);
    auto* index_cmd = app.add_subcommand("index", "Randomized index of a poset or structure-constant algebra");
    add_common(index_cmd, true);
    auto* homology = app.add_subcommand("homology", "Betti numbers of an order complex or face list");
    add_common(homology, false);
    auto* dot = app.add_subcommand("export-dot", "Hasse diagram in DOT");
    dot->add_option("input", cfg.input, "JSON poset file, - for stdin");
    cfg_dot_format(dot, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitInput;
    }

    try {
        if (cfg.format == "dot" && !*dot)
            throw Error(ErrorKind::ParseError, "--format dot is only available for export-dot");
        if (*classify) return cmd_classify(cfg);
        if (*sweep_cmd) return cmd_sweep(cfg);
        if (*build) return cmd_build(cfg);
        if (*index_cmd) return cmd_index(cfg);
        if (*homology) return cmd_homology(cfg);
        if (*dot) return cmd_export_dot(cfg);
    } catch (const Error& e) {
        std::cout << Json{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}}.dump(2)
                  << '\n';
        return exit_code(e.kind());
    }
    return kExitInput;
}
