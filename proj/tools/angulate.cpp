#include "angulation/arc_count.hpp"
#include "angulation/builder.hpp"
#include "angulation/errors.hpp"
#include "angulation/flip.hpp"
#include "angulation/ginzburg.hpp"
#include "angulation/io.hpp"
#include "angulation/mutation.hpp"
#include "angulation/quiver.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace angulation;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw SchemaError("cannot write " + out_path);
    out << text;
}

std::uint64_t pick_seed(const CLI::Option* seed_opt, std::uint64_t seed_value) {
    if (seed_opt->count()) return seed_value;
    if (const char* env = std::getenv("ANGULATE_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

// 0 = pass, 1 = verification failure, 2 = usage or schema problem
int classify(const Error& e) {
    if (dynamic_cast<const SchemaError*>(&e) || dynamic_cast<const InvalidArgument*>(&e) ||
        dynamic_cast<const UnknownArc*>(&e) || dynamic_cast<const UnknownVertex*>(&e) ||
        dynamic_cast<const AsymmetricInput*>(&e) || dynamic_cast<const BadCount*>(&e) ||
        dynamic_cast<const BoundExceeded*>(&e) || dynamic_cast<const InvalidSignature*>(&e))
        return 2;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polygon-gluing complexes, flips, and graded quivers with superpotential"};
    app.require_subcommand(1);

    SurfaceSignature sig;
    int m = 1;
    int arc = 0, vertex = 0, steps = 0, bound = 14;
    std::uint64_t seed = 0;
    std::string in_path, out_path, dot_path, json_path, corpus_path;
    bool inverse = false, no_reduce = false, serial = false, count_only = false, verify = false;

    auto* cmd_count = app.add_subcommand("count", "arc count for a signature");
    cmd_count->add_option("--g", sig.g, "genus")->required();
    cmd_count->add_option("--b", sig.b, "boundary components")->required();
    cmd_count->add_option("--c", sig.c, "marked boundary points")->required();
    cmd_count->add_option("--p", sig.p, "punctures (default 0)");
    cmd_count->add_option("--m", m, "polygons have m+2 sides")->required();

    auto* cmd_exists = app.add_subcommand("exists", "does the signature admit an angulation");
    cmd_exists->add_option("--g", sig.g, "genus")->required();
    cmd_exists->add_option("--b", sig.b, "boundary components")->required();
    cmd_exists->add_option("--c", sig.c, "marked boundary points")->required();
    cmd_exists->add_option("--p", sig.p, "punctures (default 0)");
    cmd_exists->add_option("--m", m, "polygons have m+2 sides")->required();

    auto* cmd_build = app.add_subcommand("build", "construct a complex for an unpunctured signature");
    cmd_build->add_option("--g", sig.g, "genus")->required();
    cmd_build->add_option("--b", sig.b, "boundary components")->required();
    cmd_build->add_option("--c", sig.c, "marked boundary points")->required();
    cmd_build->add_option("--m", m, "polygons have m+2 sides")->required();
    cmd_build->add_option("--out", out_path, "write the complex as JSON");

    auto* cmd_enum = app.add_subcommand("enum-disc", "enumerate all disc angulations");
    cmd_enum->add_option("--m", m, "polygons have m+2 sides")->required();
    cmd_enum->add_option("--c", sig.c, "marked boundary points")->required();
    cmd_enum->add_option("--bound", bound, "refuse c above this guard (default 14)");
    cmd_enum->add_flag("--serial", serial, "use the serial reference enumerator");
    cmd_enum->add_flag("--count-only", count_only, "print the count, skip the complexes");
    cmd_enum->add_option("--out", out_path, "write all complexes as JSON");

    auto* cmd_flip = app.add_subcommand("flip", "flip one arc");
    cmd_flip->add_option("--in", in_path, "complex JSON")->required();
    cmd_flip->add_option("--arc", arc, "arc id to flip")->required();
    cmd_flip->add_flag("--inverse", inverse, "twist the other way");
    cmd_flip->add_option("--out", out_path, "write the flipped complex as JSON");

    auto* cmd_walk = app.add_subcommand("walk", "random flip walk");
    cmd_walk->add_option("--in", in_path, "complex JSON")->required();
    cmd_walk->add_option("--steps", steps, "number of random flips")->required();
    auto* walk_seed = cmd_walk->add_option("--seed", seed, "RNG seed (or ANGULATE_SEED)");
    cmd_walk->add_option("--out", out_path, "write the final complex as JSON");

    auto* cmd_quiver = app.add_subcommand("quiver", "extract the graded quiver with superpotential");
    cmd_quiver->add_option("--in", in_path, "complex JSON")->required();
    cmd_quiver->add_option("--dot", dot_path, "also write GraphViz");
    cmd_quiver->add_option("--json", json_path, "write the QP as JSON");

    auto* cmd_mutate = app.add_subcommand("mutate", "graded mutation of a QP at a vertex");
    cmd_mutate->add_option("--in", in_path, "QP JSON")->required();
    cmd_mutate->add_option("--vertex", vertex, "vertex to mutate at")->required();
    cmd_mutate->add_flag("--no-reduce", no_reduce, "keep the unreduced result");
    cmd_mutate->add_option("--out", out_path, "write the mutated QP as JSON");

    auto* cmd_compat = app.add_subcommand("check-compat", "compare mutation against the flip");
    cmd_compat->add_option("--in", in_path, "complex JSON")->required();
    auto* compat_arc = cmd_compat->add_option("--arc", arc, "check one arc");
    auto* compat_walk = cmd_compat->add_option("--walk", steps, "check along a random walk of this many flips");
    auto* compat_seed = cmd_compat->add_option("--seed", seed, "RNG seed (or ANGULATE_SEED)");

    auto* cmd_ginz = app.add_subcommand("ginzburg", "doubled quiver presentation with differential");
    cmd_ginz->add_option("--in", in_path, "QP JSON")->required();
    cmd_ginz->add_option("--out", out_path, "write the presentation as JSON");
    cmd_ginz->add_flag("--verify", verify, "run the degree and d-squared certificates");

    auto* cmd_dot = app.add_subcommand("export-dot", "GraphViz export of a QP's quiver");
    cmd_dot->add_option("--in", in_path, "QP JSON")->required();
    cmd_dot->add_option("--out", out_path, "GraphViz output path (default stdout)");

    auto* cmd_batch = app.add_subcommand("batch-verify", "run the verification corpus");
    cmd_batch->add_option("--corpus", corpus_path, "corpus JSON (default: built-in corpus)");
    cmd_batch->add_option("--out", out_path, "write the summary JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_count->parsed()) {
            auto res = arc_count(sig, m);
            std::cout << res.n << "\n";
            return 0;
        }
        if (cmd_exists->parsed()) {
            bool yes = angulation_exists(sig, m);
            std::cout << (yes ? "yes" : "no") << "\n";
            return yes ? 0 : 1;
        }
        if (cmd_build->parsed()) {
            emit(serialize_complex(build(sig, m)), out_path);
            return 0;
        }
        if (cmd_enum->parsed()) {
            auto all = serial ? enumerate_disc_serial(m, sig.c, bound) : enumerate_disc(m, sig.c, bound);
            if (count_only) {
                std::cout << all.size() << "\n";
                return 0;
            }
            std::ostringstream os;
            os << "[";
            for (size_t i = 0; i < all.size(); ++i) {
                std::string one = serialize_complex(all[i]);
                one.pop_back();
                os << (i ? ",\n" : "\n") << one;
            }
            os << "\n]\n";
            emit(os.str(), out_path);
            return 0;
        }
        if (cmd_flip->parsed()) {
            PolygonComplex cx = parse_complex(slurp(in_path));
            auto [next, record] = inverse ? flip_inverse(cx, arc) : flip(cx, arc);
            emit(serialize_complex(next), out_path);
            return 0;
        }
        if (cmd_walk->parsed()) {
            PolygonComplex cx = parse_complex(slurp(in_path));
            emit(serialize_complex(random_flip_walk(cx, steps, pick_seed(walk_seed, seed))), out_path);
            return 0;
        }
        if (cmd_quiver->parsed()) {
            PolygonComplex cx = parse_complex(slurp(in_path));
            QP qp;
            qp.quiver = quiver_of(cx);
            qp.potential = potential_of(cx);
            if (!dot_path.empty()) emit(export_dot(qp.quiver), dot_path);
            if (!json_path.empty()) emit(serialize_qp(qp), json_path);
            if (dot_path.empty() && json_path.empty()) emit(serialize_qp(qp), "");
            return 0;
        }
        if (cmd_mutate->parsed()) {
            QP qp = parse_qp(slurp(in_path));
            MutationResult res = mutate(qp.quiver, qp.potential, vertex);
            QP out = res.qp;
            if (!no_reduce) out = reduce(out.quiver, out.potential, &res.trace);
            emit(serialize_qp(out), out_path);
            return 0;
        }
        if (cmd_compat->parsed()) {
            PolygonComplex cx = parse_complex(slurp(in_path));
            bool all_ok = true;
            auto run_one = [&](const PolygonComplex& c, int a) {
                Report rep = check_flip_compatibility(c, a);
                std::cout << "arc " << a << ": " << (rep.ok() ? "compatible" : "MISMATCH") << "\n";
                if (!rep.ok()) {
                    std::cout << rep.to_string();
                    all_ok = false;
                }
            };
            if (compat_arc->count()) {
                run_one(cx, arc);
            } else if (compat_walk->count()) {
                std::mt19937_64 rng(pick_seed(compat_seed, seed));
                PolygonComplex cur = cx;
                for (int i = 0; i < steps; ++i) {
                    auto arcs = arcs_of(cur);
                    if (arcs.empty()) break;
                    int a = arcs[std::uniform_int_distribution<size_t>(0, arcs.size() - 1)(rng)];
                    run_one(cur, a);
                    cur = flip(cur, a).first;
                }
            } else {
                for (int a : arcs_of(cx)) run_one(cx, a);
            }
            return all_ok ? 0 : 1;
        }
        if (cmd_ginz->parsed()) {
            QP qp = parse_qp(slurp(in_path));
            GinzburgPresentation p = ginzburg_double(qp.quiver, qp.potential);
            emit(export_presentation(p), out_path);
            if (verify) {
                Report rep = verify_degrees(p);
                rep.merge(verify_d_squared(p));
                std::cerr << rep.to_string();
                return rep.ok() ? 0 : 1;
            }
            return 0;
        }
        if (cmd_dot->parsed()) {
            QP qp = parse_qp(slurp(in_path));
            emit(export_dot(qp.quiver), out_path);
            return 0;
        }
        if (cmd_batch->parsed()) {
            std::string corpus = corpus_path.empty() ? default_corpus() : slurp(corpus_path);
            std::string summary;
            int code = batch_verify(corpus, summary);
            emit(summary, out_path);
            if (!out_path.empty()) std::cout << (code == 0 ? "all entries passed\n" : "failures recorded\n");
            return code;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify(e);
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
