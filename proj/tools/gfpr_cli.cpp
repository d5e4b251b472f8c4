// Command-line front end: build the pencils, verify linearizations, compare
// spectra, reproduce the worked examples, generate random problem documents.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gfpr/gfpr.hpp"

namespace {

using namespace gfpr;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_invalid = 2;
constexpr int exit_inconclusive = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out.good()) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << text;
}

std::string fmt_cplx(cplx v) {
    std::ostringstream os;
    os << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
    return os.str();
}

struct CommonOpts {
    std::string in_path, out_path, demo_name, convention;
    double tol = -1.0, radius = -1.0, floor = -1.0;
    int samples = -1;
    std::uint64_t seed = 1;
    std::string structure = "none";
    std::vector<int> dims = {2, 2, 3, 2};
    bool pretty = false;
};

ProblemSpec load_spec(const CommonOpts& o) {
    ProblemSpec s = parse_problem(slurp(o.in_path));
    if (o.samples > 0) s.verify.num_samples = o.samples;
    if (o.radius > 0) s.verify.radius = o.radius;
    if (o.tol > 0) s.verify.rel_tol = o.tol;
    if (o.floor > 0) s.verify.floor = o.floor;
    if (!o.convention.empty()) s.convention = convention_from_name(o.convention);
    return s;
}

std::string structured_summary(const BuildResult& br) {
    std::string out;
    if (!br.structured) return out;
    const StructuredPencil& sp = *br.structured;
    out += "structure:     " + structure_name(sp.kind) + "\n";
    out += "Q_A:           " + sp.qa.to_string() + "\n";
    out += "Q_D:           " + sp.qd.to_string() +
           (sp.params.applied_sign_d < 0 ? "  (applied with a global -1)" : "") + "\n";
    for (const auto& w : sp.warnings) out += "warning:       " + w + "\n";
    return out;
}

int cmd_build(const CommonOpts& o) {
    const ProblemSpec s = load_spec(o);
    const BuildResult br = run_builder(s);
    std::string out = write_pencil_dump(br.pencil);
    out += structured_summary(br);
    if (o.pretty) out += pretty_pencil(br.pencil);
    emit(o.out_path, out);
    return exit_ok;
}

int cmd_verify(const CommonOpts& o) {
    const ProblemSpec s = load_spec(o);
    const BuildResult br = run_builder(s);
    const SignConvention conv = s.convention.value_or(br.convention);
    const VerificationReport rep = verify_linearization(br.pencil, s.rz, conv, s.verify);
    const bool struct_ok =
        !br.structured || structure_check(br.pencil, br.structured->kind);

    std::string out = "verification report\n";
    out += "  passed:        " + std::string(rep.passed ? "yes" : "no") + "\n";
    out += "  convention:    " + convention_name(conv) + "\n";
    out += "  ratio:         " + fmt_cplx(rep.ratio_estimate) + "\n";
    out += "  max deviation: " + std::to_string(rep.max_relative_deviation) + "\n";
    out += "  samples:       " + std::to_string(rep.samples_used) + " used, " +
           std::to_string(rep.samples_rejected) + " rejected\n";
    if (br.structured)
        out += "  structure:     " + structure_name(br.structured->kind) +
               (struct_ok ? " ok" : " VIOLATED") + "\n";
    if (!rep.notes.empty()) out += "  notes:         " + rep.notes + "\n";
    out += structured_summary(br);
    json record = {{"type", "verification"},
                   {"passed", rep.passed && struct_ok},
                   {"inconclusive", rep.inconclusive},
                   {"convention", convention_name(conv)},
                   {"ratio", {rep.ratio_estimate.real(), rep.ratio_estimate.imag()}},
                   {"max_relative_deviation", rep.max_relative_deviation},
                   {"samples_used", rep.samples_used},
                   {"samples_rejected", rep.samples_rejected},
                   {"structure_ok", struct_ok}};
    out += record.dump() + "\n";
    emit(o.out_path, out);
    if (rep.inconclusive) return exit_inconclusive;
    return rep.passed && struct_ok ? exit_ok : exit_failed;
}

int cmd_eigs(const CommonOpts& o) {
    const ProblemSpec s = load_spec(o);
    const BuildResult br = run_builder(s);
    const SignConvention conv = s.convention.value_or(br.convention);
    const double tol = o.tol > 0 ? o.tol : 1e-6;
    const SpectraReport rep = compare_spectra(br.pencil, s.rz, conv, tol);

    std::string out = "spectra report\n";
    out += "  passed:            " + std::string(rep.passed ? "yes" : "no") + "\n";
    out += "  finite roots:      " + std::to_string(rep.pencil_roots.size()) + "\n";
    out += "  max pair distance: " + std::to_string(rep.max_pair_distance) + "\n";
    if (!rep.notes.empty()) out += "  notes:             " + rep.notes + "\n";
    for (std::size_t i = 0; i < rep.pencil_roots.size(); ++i)
        out += "  root " + std::to_string(i) + ": pencil " + fmt_cplx(rep.pencil_roots[i]) +
               "   system " + fmt_cplx(rep.system_roots[i]) + "\n";
    json roots_p = json::array(), roots_s = json::array();
    for (cplx r : rep.pencil_roots) roots_p.push_back({r.real(), r.imag()});
    for (cplx r : rep.system_roots) roots_s.push_back({r.real(), r.imag()});
    json record = {{"type", "spectra"},
                   {"passed", rep.passed},
                   {"max_pair_distance", rep.max_pair_distance},
                   {"cardinality_mismatch", rep.cardinality_mismatch},
                   {"pencil_roots", roots_p},
                   {"system_roots", roots_s}};
    out += record.dump() + "\n";
    emit(o.out_path, out);
    return rep.passed ? exit_ok : exit_failed;
}

int cmd_demo(const CommonOpts& o) {
    const ProblemSpec s = demo_problem(o.demo_name);
    const BuildResult br = run_builder(s);
    std::string out = write_pencil_dump(br.pencil);
    out += structured_summary(br);
    for (const auto& note : demo_notes(o.demo_name)) out += "note: " + note + "\n";
    if (o.pretty) out += pretty_pencil(br.pencil);
    emit(o.out_path, out);
    return exit_ok;
}

int cmd_random(const CommonOpts& o) {
    if (o.dims.size() != 4)
        throw std::invalid_argument("--dims wants four values: n r m k");
    const ProblemSpec s = random_problem(o.seed, structure_from_name(o.structure), o.dims[0],
                                         o.dims[1], o.dims[2], o.dims[3]);
    emit(o.out_path, emit_problem(s));
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Fiedler pencils with repetition for rational matrices"};
    app.require_subcommand(1);
    CommonOpts o;

    auto add_io = [&](CLI::App* cmd, bool needs_in) {
        if (needs_in) cmd->add_option("--in", o.in_path, "problem document (JSON)")->required();
        cmd->add_option("--out", o.out_path, "output file (default stdout)");
    };
    auto add_verify_opts = [&](CLI::App* cmd) {
        cmd->add_option("--tol", o.tol, "relative tolerance");
        cmd->add_option("--samples", o.samples, "sample count");
        cmd->add_option("--radius", o.radius, "sample circle radius");
        cmd->add_option("--floor", o.floor, "reject samples with |det S| below this");
        cmd->add_option("--convention", o.convention, "minus_b | plus_b")
            ->check(CLI::IsMember({"minus_b", "plus_b"}));
    };

    CLI::App* build = app.add_subcommand("build", "assemble the pencil of a problem document");
    add_io(build, true);
    build->add_flag("--pretty", o.pretty, "append a block-annotated rendering");

    CLI::App* verify = app.add_subcommand("verify", "certify the pencil as a linearization");
    add_io(verify, true);
    add_verify_opts(verify);

    CLI::App* eigs = app.add_subcommand("eigs", "compare pencil and system spectra");
    add_io(eigs, true);
    add_verify_opts(eigs);

    CLI::App* demo = app.add_subcommand("demo", "reproduce a worked example pencil");
    demo->add_option("--demo", o.demo_name, "gfpr_ex | sym_ex | teven_ex | todd_ex | skew_ex")
        ->required();
    add_io(demo, false);
    demo->add_flag("--pretty", o.pretty, "append a block-annotated rendering");

    CLI::App* random = app.add_subcommand("random", "generate a random problem document");
    random->add_option("--seed", o.seed, "random seed");
    random->add_option("--structure", o.structure,
                       "none | symmetric | t_even | t_odd | skew");
    random->add_option("--dims", o.dims, "n r m k")->expected(4);
    add_io(random, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(o);
        if (verify->parsed()) return cmd_verify(o);
        if (eigs->parsed()) return cmd_eigs(o);
        if (demo->parsed()) return cmd_demo(o);
        if (random->parsed()) return cmd_random(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failed;
    }
    return exit_invalid;
}
