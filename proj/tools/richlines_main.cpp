// richlines: batch experiment harness.
//
// Subcommands generate input sets, enumerate rich lines, evaluate the
// two-hypothesis check, count projection overlaps, compute additive energy
// and translates, iterate the star convolution, run incidence checks and
// the sumset-times-productset experiment. Every run writes exactly one
// machine-readable report (JSON by default, CSV on request) and is a pure
// function of its inputs: identical arguments produce byte-identical
// output. Exit status: 0 success, 1 usage error, 2 computation error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "richlines/richlines.hpp"

namespace {

using namespace richlines;

struct Options {
    std::vector<std::string> inputs;
    std::string grid_a, grid_b;
    std::string lines_file;
    std::string out;
    std::string format = "json";
    std::string epsilon = "1/2";
    std::string delta = "1/10";
    std::uint64_t threshold = 2;
    std::uint64_t tau = 1;
    std::uint64_t iterations = 1;
    std::uint64_t cap_support = StarCaps{}.max_support;
    std::uint64_t cap_pair_ops = StarCaps{}.max_pair_ops;
    std::uint64_t seed = 1;
    bool symmetrize = false;

    // gen-set
    std::string kind = "ap";
    std::uint64_t count = 10;
    std::string start = "0";
    std::string step = "1";
    std::string ratio = "2";
    std::uint64_t range = 100;
};

void emit(const json& report, const Options& opt) {
    std::string body = render_report(report, opt.format);
    if (opt.out.empty())
        std::cout << body;
    else
        write_file_atomic(opt.out, body);
}

Grid load_grid(const Options& opt) {
    if (opt.grid_a.empty()) throw InvalidArgument("--grid-a is required");
    NumberSet a = load_number_set_file(opt.grid_a);
    NumberSet b = opt.grid_b.empty() ? a : load_number_set_file(opt.grid_b);
    Grid g{std::move(a), std::move(b)};
    return opt.symmetrize ? richlines::symmetrize(g) : g;
}

ProgressFn stderr_progress(const Grid& g) {
    const std::size_t pairs = g.point_count() * (g.point_count() - 1) / 2;
    if (pairs < 2'000'000) return {};
    return [](std::size_t done, std::size_t total) {
        static std::size_t last = 0;
        if (done == total || done - last >= 2'000'000) {
            std::cerr << "processed " << done << " / " << total << " point pairs\n";
            last = done == total ? 0 : done;
        }
    };
}

void run_gen_set(const Options& opt) {
    NumberSet s;
    if (opt.kind == "ap")
        s = make_ap(opt.count, Scalar::parse(opt.start), Scalar::parse(opt.step));
    else if (opt.kind == "gp")
        s = make_gp(opt.count, Scalar::parse(opt.start), Scalar::parse(opt.ratio));
    else
        s = make_random(opt.count, opt.seed, opt.range);
    std::ostringstream body;
    save_number_set(body, s);
    write_file_atomic(opt.out, body.str());
}

void run_rich_lines(const Options& opt) {
    Grid g = load_grid(opt);
    RichFamily f = enumerate_rich_lines(g, opt.threshold, stderr_progress(g));
    emit(rich_family_report(f), opt);
}

void run_theorem2(const Options& opt) {
    Grid g = load_grid(opt);
    RichFamily f = enumerate_rich_lines(g, opt.threshold, stderr_progress(g));
    emit(theorem2_report_json(
             theorem2_check(g, f, Scalar::parse(opt.epsilon), Scalar::parse(opt.delta))),
         opt);
}

void run_overlap(const Options& opt) {
    Grid g = load_grid(opt);
    std::vector<Line> lines = opt.lines_file.empty()
                                  ? enumerate_rich_lines(g, opt.threshold, stderr_progress(g)).lines()
                                  : load_lines_file(opt.lines_file);
    emit(overlap_report(overlap_pairs(lines, g, opt.tau)), opt);
}

void run_energy(const Options& opt) {
    if (opt.inputs.size() != 2) throw InvalidArgument("energy needs exactly two --input files");
    NumberSet x = load_number_set_file(opt.inputs[0]);
    NumberSet y = load_number_set_file(opt.inputs[1]);
    count_t e = additive_energy(x, y);
    bool identity = energy_identity_check(x, y);
    if (x.size() == y.size()) {
        EnergyReport rep = make_energy_report(x, y);
        emit(energy_report_json(x.size(), y.size(), e, identity, &rep), opt);
    } else {
        emit(energy_report_json(x.size(), y.size(), e, identity, nullptr), opt);
    }
}

void run_flatten(const Options& opt) {
    if (opt.inputs.size() != 1) throw InvalidArgument("flatten needs exactly one --input file");
    NumberSet theta = load_number_set_file(opt.inputs[0]);
    StarCaps caps{opt.cap_support, opt.cap_pair_ops};
    Measure f_j = iterate_star(theta, opt.iterations, caps);
    if (f_j.size() < 2) {
        emit(flatten_report_json(theta.size(), opt.iterations, f_j, nullptr,
                                 "support is a single point; flattening ratio undefined"),
             opt);
        return;
    }
    FlatteningReport flat = flattening_report(f_j, diagnostic_precision_digits(), caps);
    emit(flatten_report_json(theta.size(), opt.iterations, f_j, &flat), opt);
}

void run_st_check(const Options& opt) {
    Configuration cfg;
    if (!opt.inputs.empty()) {
        if (opt.inputs.size() != 1) throw InvalidArgument("st-check takes one --input file");
        cfg = load_configuration_file(opt.inputs[0]);
        validate_configuration(cfg);
    } else {
        Grid g = load_grid(opt);
        cfg = grid_configuration(g, enumerate_rich_lines(g, opt.threshold, stderr_progress(g)).lines());
    }
    emit(incidence_report_json(count_incidences(cfg)), opt);
}

void run_elekes(const Options& opt) {
    if (opt.inputs.size() != 1) throw InvalidArgument("elekes needs exactly one --input file");
    emit(elekes_report_json(elekes_experiment(load_number_set_file(opt.inputs[0]))), opt);
}

void run_corpus(const Options& opt) {
    write_corpus(opt.out, opt.seed);
    std::cerr << "corpus written to " << opt.out << "\n";
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out, "Report path (stdout when omitted)");
}

void add_grid(CLI::App* cmd, Options& opt) {
    cmd->add_option("--grid-a", opt.grid_a, "x-coordinate set file")->required();
    cmd->add_option("--grid-b", opt.grid_b, "y-coordinate set file (defaults to --grid-a)");
    cmd->add_flag("--symmetrize", opt.symmetrize, "Replace A x B by (A u B) x (A u B)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Desk-scale experiments with rich lines, additive energy and incidences"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* gen = app.add_subcommand("gen-set", "Generate a number-set file");
    gen->add_option("--kind", opt.kind, "ap | gp | random")
        ->check(CLI::IsMember({"ap", "gp", "random"}));
    gen->add_option("--count", opt.count, "Number of elements");
    gen->add_option("--start", opt.start, "First element (ap, gp)");
    gen->add_option("--step", opt.step, "Common difference (ap)");
    gen->add_option("--ratio", opt.ratio, "Common ratio (gp)");
    gen->add_option("--seed", opt.seed, "Random seed (random)");
    gen->add_option("--range", opt.range, "Values drawn from [0, range) (random)");
    gen->add_option("--out", opt.out, "Output path")->required();

    CLI::App* rich = app.add_subcommand("rich-lines", "Enumerate r-rich lines in a grid");
    add_grid(rich, opt);
    rich->add_option("--threshold", opt.threshold, "Richness threshold r");
    add_common(rich, opt);

    CLI::App* th2 = app.add_subcommand("theorem2", "Slope/class hypothesis check on a square grid");
    add_grid(th2, opt);
    th2->add_option("--threshold", opt.threshold, "Richness threshold for the family");
    th2->add_option("--epsilon", opt.epsilon, "Exponent p/q for both hypotheses");
    th2->add_option("--delta", opt.delta, "Exponent p/q in the richness bound n^(1-delta)");
    add_common(th2, opt);

    CLI::App* ov = app.add_subcommand("overlap", "Count y-projection overlaps over line pairs");
    add_grid(ov, opt);
    ov->add_option("--threshold", opt.threshold, "Enumerate the family at this richness");
    ov->add_option("--lines", opt.lines_file, "Read the family from a 'slope intercept' file");
    ov->add_option("--tau", opt.tau, "Overlap threshold");
    add_common(ov, opt);

    CLI::App* en = app.add_subcommand("energy", "Additive energy and best translate of two sets");
    en->add_option("--input", opt.inputs, "Two number-set files")->expected(1, 2);
    add_common(en, opt);

    CLI::App* fl = app.add_subcommand("flatten", "Iterate the star convolution and report peaks");
    fl->add_option("--input", opt.inputs, "Support set file");
    fl->add_option("--iterations", opt.iterations, "Number of star iterations j");
    fl->add_option("--cap-support", opt.cap_support, "Support size cap");
    fl->add_option("--cap-pair-ops", opt.cap_pair_ops, "Pair-operation cap per stage");
    add_common(fl, opt);

    CLI::App* st = app.add_subcommand("st-check", "Incidence count and Szemeredi-Trotter ratio");
    st->add_option("--input", opt.inputs, "Configuration file ([points]/[lines] sections)");
    st->add_option("--grid-a", opt.grid_a, "x-coordinate set file (grid mode)");
    st->add_option("--grid-b", opt.grid_b, "y-coordinate set file (grid mode)");
    st->add_option("--threshold", opt.threshold, "Richness threshold for grid-mode lines");
    add_common(st, opt);

    CLI::App* el = app.add_subcommand("elekes", "Compare |A+A| * |A.A| against n^(5/2)");
    el->add_option("--input", opt.inputs, "Number-set file");
    add_common(el, opt);

    CLI::App* co = app.add_subcommand("corpus", "Write the standard input corpus");
    co->add_option("--seed", opt.seed, "Corpus seed");
    co->add_option("--out", opt.out, "Target directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) run_gen_set(opt);
        if (rich->parsed()) run_rich_lines(opt);
        if (th2->parsed()) run_theorem2(opt);
        if (ov->parsed()) run_overlap(opt);
        if (en->parsed()) run_energy(opt);
        if (fl->parsed()) run_flatten(opt);
        if (st->parsed()) run_st_check(opt);
        if (el->parsed()) run_elekes(opt);
        if (co->parsed()) run_corpus(opt);
    } catch (const ComputationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
