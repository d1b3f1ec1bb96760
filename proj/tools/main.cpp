#include "cliffspec/examples.hpp"
#include "cliffspec/field_kernels.hpp"
#include "cliffspec/geometry.hpp"
#include "cliffspec/localizer.hpp"
#include "cliffspec/quartic.hpp"
#include "cliffspec/rng.hpp"
#include "cliffspec/surface.hpp"
#include "cliffspec/triple_io.hpp"
#include "cliffspec/witness.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace cliffspec;

struct InputSource {
    std::string file;
    std::string example;

    HermitianTriple load() const {
        if (!file.empty() && !example.empty())
            throw validation_error("give either --input or --example, not both");
        if (!file.empty()) return load_triple(file);
        if (!example.empty()) return builtin_example(example);
        throw validation_error("an input is required: --input FILE or --example ID");
    }
};

void add_input_options(CLI::App* cmd, InputSource& src) {
    cmd->add_option("--input", src.file, "JSON file with keys A1, A2, A3");
    cmd->add_option("--example", src.example,
                    "built-in example id (ex4.1 .. ex4.5, lemniscate)");
}

Vec3 parse_point(const std::string& text) {
    Vec3 p;
    const char* begin = text.data();
    const char* end = begin + text.size();
    double* coords[3] = {&p.x, &p.y, &p.z};
    for (int i = 0; i < 3; ++i) {
        auto [ptr, ec] = std::from_chars(begin, end, *coords[i]);
        if (ec != std::errc())
            throw validation_error("bad --point '" + text + "': expected x1,x2,x3");
        begin = ptr;
        if (i < 2) {
            if (begin == end || *begin != ',')
                throw validation_error("bad --point '" + text + "': expected x1,x2,x3");
            ++begin;
        }
    }
    if (begin != end)
        throw validation_error("bad --point '" + text + "': trailing characters");
    return p;
}

struct Pipeline {
    HermitianTriple triple;
    CanonicalParams canon;
    QuarticInvariants inv;          // carries the trace center
    CanonicalParams params_centered;
    QuarticInvariants inv_centered;
};

Pipeline make_pipeline(const HermitianTriple& t) {
    Pipeline p;
    p.triple = t;
    p.canon = canonicalize(t);
    p.inv = invariants(p.canon);
    p.params_centered = p.canon.centered();
    p.inv_centered = invariants(p.params_centered);
    return p;
}

std::string format_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot open output file '" + path + "'");
    out << bytes;
    if (!out) throw validation_error("failed writing output file '" + path + "'");
}

int run_decompose(const InputSource& src) {
    const HermitianTriple t = src.load();
    std::cout << decompose_report_json(t, canonicalize(t));
    return 0;
}

int run_det(const InputSource& src, const std::string& point_text) {
    if (point_text.empty()) throw validation_error("det: --point x1,x2,x3 is required");
    const Vec3 x = parse_point(point_text);
    const Pipeline p = make_pipeline(src.load());

    const double closed = D_full(p.canon, x);
    const double oracle = det_localizer(p.triple, x);
    const double diff = std::abs(closed - oracle);
    std::cout << "{\n"
              << "  \"point\": [" << format_g(x.x) << ", " << format_g(x.y) << ", "
              << format_g(x.z) << "],\n"
              << "  \"d_full\": " << format_g(closed) << ",\n"
              << "  \"det_oracle\": " << format_g(oracle) << ",\n"
              << "  \"abs_diff\": " << format_g(diff) << ",\n"
              << "  \"mixed_error\": " << format_g(diff / (1.0 + std::abs(oracle))) << "\n"
              << "}\n";
    return 0;
}

int run_witness(const InputSource& src) {
    const Pipeline p = make_pipeline(src.load());
    const WitnessResult w = witness_point(p.inv, p.canon.center, p.canon.conjugator);
    std::cout << witness_report_json(w);
    return 0;
}

int run_classify(const InputSource& src) {
    const Pipeline p = make_pipeline(src.load());
    const SpectrumClassification c = classify(p.inv_centered, p.params_centered);
    std::cout << classification_report_json(c, p.canon.center);
    return 0;
}

int run_surface(const InputSource& src, int resolution, const std::string& output,
                const std::string& format_name) {
    if (output.empty()) throw validation_error("surface: --output FILE is required");
    if (resolution < 2) throw validation_error("surface: --resolution must be at least 2");
    const MeshFormat format = mesh_format_from_name(format_name);

    const Pipeline p = make_pipeline(src.load());
    const Box3 box = bounding_box(p.inv_centered, p.canon.center);
    const ScalarField field =
        sample(p.inv_centered, p.canon.center, box, {resolution, resolution, resolution});
    const TriangleMesh mesh = extract(field, p.inv_centered, p.canon.center);

    write_file(output, export_mesh(mesh, format));

    std::cout << "kernel: " << field_isa_name(field_isa_available()) << "\n"
              << "box_half_width: " << format_g(0.5 * (box.max.x - box.min.x)) << "\n"
              << "vertices: " << mesh.vertices.size() << "\n"
              << "triangles: " << mesh.triangles.size() << "\n"
              << "components: " << mesh.components << "\n";
    if (mesh.empty_warning)
        std::cout << "warning: empty mesh; the spectrum has no sign-changing cells at this "
                     "resolution (isolated points are reported by the witness command)\n";
    std::cout << "wrote: " << output << "\n";
    return 0;
}

int run_quadratic(const InputSource& src, int resolution) {
    if (resolution < 2) throw validation_error("quadratic: --resolution must be at least 2");
    const Pipeline p = make_pipeline(src.load());
    const Box3 box = bounding_box(p.inv_centered, p.canon.center);

    double best = std::numeric_limits<double>::infinity();
    Vec3 argmin;
    for (int iz = 0; iz < resolution; ++iz)
        for (int iy = 0; iy < resolution; ++iy)
            for (int ix = 0; ix < resolution; ++ix) {
                const Vec3 span = box.max - box.min;
                const Vec3 q{box.min.x + double(ix) * span.x / double(resolution - 1),
                             box.min.y + double(iy) * span.y / double(resolution - 1),
                             box.min.z + double(iz) * span.z / double(resolution - 1)};
                const double g = quadratic_form_gap(p.triple, q);
                if (g < best) {
                    best = g;
                    argmin = q;
                }
            }

    std::cout << "{\n"
              << "  \"grid\": " << resolution << ",\n"
              << "  \"min_quadratic_gap\": " << format_g(best) << ",\n"
              << "  \"argmin\": [" << format_g(argmin.x) << ", " << format_g(argmin.y) << ", "
              << format_g(argmin.z) << "]\n"
              << "}\n";
    return 0;
}

int run_oracle_check(std::uint64_t seed, int trials) {
    if (trials < 1) throw validation_error("oracle-check: --trials must be positive");

    SplitMix64 parent(seed);
    double max_mixed = 0.0;
    for (int i = 0; i < trials; ++i) {
        SplitMix64 gen = parent.split();
        const CanonicalParams params = random_params(gen, true);
        const HermitianTriple t = reconstruct(params);
        for (int k = 0; k < 5; ++k) {
            const Vec3 x = random_point(gen, -10.0, 10.0);
            const double closed = D_full(params, x);
            const double oracle = det_localizer(t, x);
            const double mixed = std::abs(closed - oracle) / (1.0 + std::abs(oracle));
            if (mixed > max_mixed) max_mixed = mixed;
        }
    }

    std::cout << "{\n"
              << "  \"trials\": " << trials << ",\n"
              << "  \"seed\": " << seed << ",\n"
              << "  \"points_per_trial\": 5,\n"
              << "  \"max_mixed_error\": " << format_g(max_mixed) << ",\n"
              << "  \"tolerance\": 1e-08\n"
              << "}\n";
    if (max_mixed > 1e-8)
        throw internal_error("oracle-check: closed form and determinant disagree, max mixed "
                             "error " + format_g(max_mixed));
    return 0;
}

int run_examples(int resolution) {
    struct Expected {
        const char* id;
        double e, c;
        WitnessBranch branch;
        bool check_branch; // false where c is a rounding-level zero
        int components;    // -1: not asserted, 0: empty mesh expected
    };
    // Constants follow from the closed form; e and c always satisfy
    // c = ||a||^4 - e.
    const Expected expected[] = {
        {"ex4.1", 105.0, -24.0, WitnessBranch::NonpositiveC, true, 1},
        {"ex4.2", 324.0, 0.0, WitnessBranch::NonpositiveC, false, -1},
        {"ex4.3", 1236.0, 208.0, WitnessBranch::EigenvectorScaled, true, 2},
        {"ex4.4", 4.0, 0.0, WitnessBranch::NonpositiveC, true, 0},
        {"ex4.5", 3.0, 1.0, WitnessBranch::EigenvectorScaled, true, 0},
        {"lemniscate", 0.0625, 0.0, WitnessBranch::NonpositiveC, false, -1},
    };

    std::printf("%-11s %10s %10s %-18s %12s %12s %6s %6s\n", "id", "e", "c", "branch",
                "|D(witness)|", "gap", "comps", "status");

    bool all_ok = true;
    for (const Expected& exp : expected) {
        const Pipeline p = make_pipeline(builtin_example(exp.id));
        const WitnessResult w = witness_point(p.inv, p.canon.center, p.canon.conjugator);
        const double scale = witness_scale(p.inv);

        const Box3 box = bounding_box(p.inv_centered, p.canon.center);
        const ScalarField field =
            sample(p.inv_centered, p.canon.center, box, {resolution, resolution, resolution});
        const TriangleMesh mesh = extract(field, p.inv_centered, p.canon.center);

        bool ok = std::abs(p.inv.e - exp.e) <= 1e-9 && std::abs(p.inv.c - exp.c) <= 1e-9 &&
                  (!exp.check_branch || w.branch == exp.branch) && w.d_value <= 1e-9 * scale &&
                  std::abs(D_full(p.canon, w.spectrum_point)) <= 1e-10 * scale &&
                  w.gap_at_point <= 1e-3;
        if (exp.components == 0)
            ok = ok && mesh.empty_warning;
        else if (exp.components > 0 && resolution >= 64)
            ok = ok && mesh.components == exp.components;

        std::printf("%-11s %10.4g %10.4g %-18s %12.3e %12.3e %6d %6s\n", exp.id, p.inv.e,
                    p.inv.c, witness_branch_name(w.branch), std::abs(w.d_value),
                    w.gap_at_point, mesh.components, ok ? "PASS" : "FAIL");
        all_ok = all_ok && ok;
    }
    if (!all_ok) throw internal_error("examples: at least one built-in check failed");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clifford spectrum toolkit for triples of 2x2 Hermitian matrices"};
    app.require_subcommand(1);

    InputSource src;
    std::string point_text;
    std::string output;
    std::string format_name = "obj";
    int resolution = 96;
    std::uint64_t seed = 0;
    int trials = 10000;

    auto* cmd_decompose =
        app.add_subcommand("decompose", "Pauli coefficients and canonical parameters");
    add_input_options(cmd_decompose, src);

    auto* cmd_det = app.add_subcommand("det", "closed-form determinant vs the direct oracle");
    add_input_options(cmd_det, src);
    cmd_det->add_option("--point", point_text, "evaluation point x1,x2,x3");

    auto* cmd_witness = app.add_subcommand("witness", "non-emptiness witness and refined root");
    add_input_options(cmd_witness, src);

    auto* cmd_classify = app.add_subcommand("classify", "geometric classification");
    add_input_options(cmd_classify, src);

    auto* cmd_surface = app.add_subcommand("surface", "extract the zero isosurface mesh");
    add_input_options(cmd_surface, src);
    cmd_surface->add_option("--resolution", resolution, "samples per axis (default 96)");
    cmd_surface->add_option("--output", output, "mesh file to write");
    cmd_surface->add_option("--format", format_name, "obj, ply or csv (default obj)");

    auto* cmd_quadratic =
        app.add_subcommand("quadratic", "minimum quadratic-form gap over a grid");
    add_input_options(cmd_quadratic, src);
    cmd_quadratic->add_option("--resolution", resolution, "grid points per axis (default 96)");

    auto* cmd_oracle = app.add_subcommand("oracle-check",
                                          "random closed-form vs determinant comparison");
    cmd_oracle->add_option("--seed", seed, "random seed (default 0)");
    cmd_oracle->add_option("--trials", trials, "number of random instances (default 10000)");

    auto* cmd_examples = app.add_subcommand("examples", "run the pipeline on all built-ins");
    cmd_examples->add_option("--resolution", resolution, "mesh resolution (default 96)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cmd_decompose->parsed()) return run_decompose(src);
        if (cmd_det->parsed()) return run_det(src, point_text);
        if (cmd_witness->parsed()) return run_witness(src);
        if (cmd_classify->parsed()) return run_classify(src);
        if (cmd_surface->parsed()) return run_surface(src, resolution, output, format_name);
        if (cmd_quadratic->parsed()) return run_quadratic(src, resolution);
        if (cmd_oracle->parsed()) return run_oracle_check(seed, trials);
        if (cmd_examples->parsed()) return run_examples(resolution);
        std::cerr << "no command given\n";
        return 1;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
