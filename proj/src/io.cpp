#include "angulation/io.hpp"
#include "angulation/arc_count.hpp"
#include "angulation/builder.hpp"
#include "angulation/errors.hpp"
#include "angulation/flip.hpp"
#include "angulation/mutation.hpp"

#include "json.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace angulation {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("not valid JSON: ") + e.what());
    }
}

int require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw SchemaError(where + " must be an integer");
    return j.get<int>();
}

const json& require_field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(where + " needs a \"" + key + "\" field");
    return j.at(key);
}

SideRef parse_side(const json& j, const std::string& where) {
    if (!j.is_object() || j.size() != 1 || !(j.contains("arc") || j.contains("bnd")))
        throw SchemaError(where + " must be an object with exactly one of \"arc\" or \"bnd\"");
    bool arc = j.contains("arc");
    int id = require_int(j.begin().value(), where + (arc ? ".arc" : ".bnd"));
    if (id < 0) throw SchemaError(where + " id must be nonnegative");
    return arc ? SideRef::make_arc(id) : SideRef::make_bnd(id);
}

json side_json(const SideRef& s) {
    json j;
    j[s.arc ? "arc" : "bnd"] = s.id;
    return j;
}

json arrow_json(const GradedArrow& a) {
    json j;
    j["src"] = a.src;
    j["dst"] = a.dst;
    j["grade"] = a.grade;
    return j;
}

GradedArrow parse_arrow(const json& j, const std::string& where) {
    GradedArrow a;
    a.src = require_int(require_field(j, "src", where), where + ".src");
    a.dst = require_int(require_field(j, "dst", where), where + ".dst");
    a.grade = require_int(require_field(j, "grade", where), where + ".grade");
    return a;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

PolygonComplex parse_complex(const std::string& text) {
    json j = parse_json(text);
    PolygonComplex cx;
    cx.m = require_int(require_field(j, "m", "complex"), "complex.m");
    const json& polys = require_field(j, "polygons", "complex");
    if (!polys.is_array()) throw SchemaError("complex.polygons must be an array");
    for (size_t pi = 0; pi < polys.size(); ++pi) {
        const json& jp = polys[pi];
        std::string where = "polygons[" + std::to_string(pi) + "]";
        if (!jp.is_array()) throw SchemaError(where + " must be an array of sides");
        Polygon p;
        for (size_t si = 0; si < jp.size(); ++si)
            p.sides.push_back(parse_side(jp[si], where + "[" + std::to_string(si) + "]"));
        cx.polygons.push_back(std::move(p));
    }
    try {
        require_valid(cx);
    } catch (const InvalidComplex& e) {
        throw SchemaError(std::string("complex rejected: ") + e.what());
    }
    return cx;
}

std::string serialize_complex(const PolygonComplex& cx) {
    PolygonComplex c = canonical(cx);
    json j;
    j["m"] = c.m;
    j["polygons"] = json::array();
    for (const auto& p : c.polygons) {
        json jp = json::array();
        for (const auto& s : p.sides) jp.push_back(side_json(s));
        j["polygons"].push_back(std::move(jp));
    }
    return dump(j);
}

QP parse_qp(const std::string& text) {
    json j = parse_json(text);
    QP qp;
    qp.quiver.m = require_int(require_field(j, "m", "qp"), "qp.m");
    if (qp.quiver.m < 1) throw SchemaError("qp.m must be at least 1");
    const json& vs = require_field(j, "vertices", "qp");
    if (!vs.is_array()) throw SchemaError("qp.vertices must be an array");
    for (size_t i = 0; i < vs.size(); ++i)
        qp.quiver.vertices.push_back(require_int(vs[i], "vertices[" + std::to_string(i) + "]"));
    const json& as = require_field(j, "arrows", "qp");
    if (!as.is_array()) throw SchemaError("qp.arrows must be an array");
    for (size_t i = 0; i < as.size(); ++i)
        qp.quiver.arrows.push_back(parse_arrow(as[i], "arrows[" + std::to_string(i) + "]"));
    const json& ts = require_field(j, "potential", "qp");
    if (!ts.is_array()) throw SchemaError("qp.potential must be an array");
    for (size_t i = 0; i < ts.size(); ++i) {
        const json& jt = ts[i];
        std::string where = "potential[" + std::to_string(i) + "]";
        if (!jt.is_object() || !jt.contains("arrows"))
            throw SchemaError(where + " must be an object with an \"arrows\" field");
        const json& ja = jt.at("arrows");
        if (!ja.is_array() || ja.size() != 3)
            throw SchemaError(where + ".arrows must list exactly 3 arrows");
        PotentialTerm t;
        for (size_t k = 0; k < 3; ++k)
            t.arrows.push_back(parse_arrow(ja[k], where + ".arrows[" + std::to_string(k) + "]"));
        if (jt.contains("single_polygon"))
            t.single_polygon = jt.at("single_polygon").get<bool>();
        qp.potential.terms.push_back(canonical_rotation(std::move(t)));
    }
    std::sort(qp.quiver.vertices.begin(), qp.quiver.vertices.end());
    std::sort(qp.quiver.arrows.begin(), qp.quiver.arrows.end());
    std::sort(qp.potential.terms.begin(), qp.potential.terms.end());
    return qp;
}

std::string serialize_qp(const QP& qp) {
    QP c = qp;
    std::sort(c.quiver.vertices.begin(), c.quiver.vertices.end());
    std::sort(c.quiver.arrows.begin(), c.quiver.arrows.end());
    for (auto& t : c.potential.terms) t = canonical_rotation(std::move(t));
    std::sort(c.potential.terms.begin(), c.potential.terms.end());
    json j;
    j["m"] = c.quiver.m;
    j["vertices"] = c.quiver.vertices;
    j["arrows"] = json::array();
    for (const auto& a : c.quiver.arrows) j["arrows"].push_back(arrow_json(a));
    j["potential"] = json::array();
    for (const auto& t : c.potential.terms) {
        json jt;
        jt["arrows"] = json::array();
        for (const auto& a : t.arrows) jt["arrows"].push_back(arrow_json(a));
        jt["single_polygon"] = t.single_polygon;
        j["potential"].push_back(std::move(jt));
    }
    return dump(j);
}

GinzburgPresentation parse_presentation(const std::string& text) {
    json j = parse_json(text);
    GinzburgPresentation p;
    p.m = require_int(require_field(j, "m", "presentation"), "presentation.m");
    const json& vs = require_field(j, "vertices", "presentation");
    if (!vs.is_array()) throw SchemaError("presentation.vertices must be an array");
    for (size_t i = 0; i < vs.size(); ++i)
        p.vertices.push_back(require_int(vs[i], "vertices[" + std::to_string(i) + "]"));
    const json& gs = require_field(j, "generators", "presentation");
    if (!gs.is_array()) throw SchemaError("presentation.generators must be an array");
    for (size_t i = 0; i < gs.size(); ++i) {
        const json& jg = gs[i];
        std::string where = "generators[" + std::to_string(i) + "]";
        DgGenerator g;
        std::string kind = require_field(jg, "kind", where).get<std::string>();
        if (kind == "original") g.kind = GenKind::original;
        else if (kind == "dual") g.kind = GenKind::dual;
        else if (kind == "loop") g.kind = GenKind::loop;
        else throw SchemaError(where + ".kind must be original, dual, or loop");
        g.degree = require_int(require_field(jg, "degree", where), where + ".degree");
        g.name = require_field(jg, "name", where).get<std::string>();
        if (g.kind == GenKind::loop)
            g.vertex = require_int(require_field(jg, "vertex", where), where + ".vertex");
        else
            g.arrow = parse_arrow(require_field(jg, "arrow", where), where + ".arrow");
        p.generators.push_back(std::move(g));
    }
    const json& df = require_field(j, "differential", "presentation");
    if (!df.is_object()) throw SchemaError("presentation.differential must be an object");
    for (auto it = df.begin(); it != df.end(); ++it) {
        std::string where = "differential." + it.key();
        if (!it.value().is_array()) throw SchemaError(where + " must be an array");
        std::vector<PathTerm> terms;
        for (size_t i = 0; i < it.value().size(); ++i) {
            const json& jt = it.value()[i];
            std::string twhere = where + "[" + std::to_string(i) + "]";
            PathTerm t;
            t.coef = require_int(require_field(jt, "coef", twhere), twhere + ".coef");
            const json& jp = require_field(jt, "path", twhere);
            if (!jp.is_array() || jp.empty())
                throw SchemaError(twhere + ".path must be a nonempty array");
            for (const auto& letter : jp) {
                if (!letter.is_string()) throw SchemaError(twhere + ".path entries must be strings");
                t.path.push_back(letter.get<std::string>());
            }
            terms.push_back(std::move(t));
        }
        p.differential[it.key()] = std::move(terms);
    }
    return p;
}

std::string export_presentation(const GinzburgPresentation& p) {
    json j;
    j["m"] = p.m;
    j["vertices"] = p.vertices;
    j["generators"] = json::array();
    for (const auto& g : p.generators) {
        json jg;
        jg["name"] = g.name;
        jg["kind"] = g.kind == GenKind::original ? "original"
                     : g.kind == GenKind::dual   ? "dual"
                                                 : "loop";
        jg["degree"] = g.degree;
        if (g.kind == GenKind::loop)
            jg["vertex"] = g.vertex;
        else
            jg["arrow"] = arrow_json(g.arrow);
        j["generators"].push_back(std::move(jg));
    }
    j["differential"] = json::object();
    for (const auto& [name, terms] : p.differential) {
        json arr = json::array();
        for (const auto& t : terms) {
            json jt;
            jt["coef"] = t.coef;
            jt["path"] = t.path;
            arr.push_back(std::move(jt));
        }
        j["differential"][name] = std::move(arr);
    }
    return dump(j);
}

std::string export_dot(const GradedQuiver& q) {
    std::vector<int> vs = q.vertices;
    std::sort(vs.begin(), vs.end());
    std::vector<GradedArrow> as = q.arrows;
    std::sort(as.begin(), as.end());
    std::ostringstream os;
    os << "digraph angulation {\n";
    os << "  rankdir=LR;\n";
    for (int v : vs) os << "  " << v << ";\n";
    for (const auto& a : as)
        os << "  " << a.src << " -> " << a.dst << " [label=\"" << a.grade << "\"];\n";
    os << "}\n";
    return os.str();
}

namespace {

struct BatchEntry {
    json spec;
    int m = 1;
    bool has_signature = false;
    SurfaceSignature sig;
    bool has_complex = false;
    std::string complex_text;
    int walk = 0;
    std::uint64_t seed = 0;
};

struct BatchOutcome {
    std::string status = "pass";  // pass | fail | skip
    std::vector<std::string> detail;
};

BatchEntry parse_entry(const json& je, size_t idx) {
    std::string where = "entries[" + std::to_string(idx) + "]";
    BatchEntry e;
    e.spec = je;
    e.m = require_int(require_field(je, "m", where), where + ".m");
    if (je.contains("complex")) {
        e.has_complex = true;
        e.complex_text = je.at("complex").dump();
    } else {
        e.has_signature = true;
        e.sig.g = require_int(require_field(je, "g", where), where + ".g");
        e.sig.b = require_int(require_field(je, "b", where), where + ".b");
        e.sig.c = require_int(require_field(je, "c", where), where + ".c");
        e.sig.p = je.contains("p") ? require_int(je.at("p"), where + ".p") : 0;
    }
    if (je.contains("walk")) e.walk = require_int(je.at("walk"), where + ".walk");
    if (je.contains("seed")) e.seed = static_cast<std::uint64_t>(require_int(je.at("seed"), where + ".seed"));
    return e;
}

BatchOutcome run_entry(const BatchEntry& e) {
    BatchOutcome out;
    auto fail = [&](const std::string& s) {
        out.status = "fail";
        out.detail.push_back(s);
    };

    PolygonComplex cx;
    try {
        if (e.has_complex) {
            cx = parse_complex(e.complex_text);
        } else {
            try {
                auto res = arc_count(e.sig, e.m);
                (void)res;
            } catch (const NoAngulation& ex) {
                out.status = "skip";
                out.detail.push_back(std::string("no angulation: ") + ex.what());
                return out;
            } catch (const NegativeCount& ex) {
                out.status = "skip";
                out.detail.push_back(std::string("no angulation: ") + ex.what());
                return out;
            }
            if (e.sig.p != 0) {
                out.detail.push_back("count checked; punctured surfaces are not built");
                return out;
            }
            cx = build(e.sig, e.m);
        }
    } catch (const Error& ex) {
        fail(std::string("construction: ") + ex.what());
        return out;
    }

    try {
        Report v = validate(cx);
        if (!v.ok()) {
            fail("validate: " + v.to_string());
            return out;
        }
        SurfaceSignature sig = signature(cx);
        long long n = arc_count(sig, cx.m).n;
        long long actual = static_cast<long long>(arcs_of(cx).size());
        if (n != actual)
            fail("arc count: formula says " + std::to_string(n) + ", complex has " +
                 std::to_string(actual));

        Report hyp = check_hypotheses(quiver_of(cx), potential_of(cx));
        if (!hyp.ok()) fail("qp hypotheses: " + hyp.to_string());

        std::mt19937_64 rng(e.seed);
        PolygonComplex cur = cx;
        for (int step = 0; step < e.walk; ++step) {
            auto arcs = arcs_of(cur);
            if (arcs.empty()) break;
            int arc = arcs[std::uniform_int_distribution<size_t>(0, arcs.size() - 1)(rng)];
            Report compat = check_flip_compatibility(cur, arc);
            if (!compat.ok())
                fail("compatibility at arc " + std::to_string(arc) + " (step " +
                     std::to_string(step) + "): " + compat.to_string());
            cur = flip(cur, arc).first;
            Report hyp2 = check_hypotheses(quiver_of(cur), potential_of(cur));
            if (!hyp2.ok())
                fail("qp hypotheses after step " + std::to_string(step) + ": " + hyp2.to_string());
        }
    } catch (const Error& ex) {
        fail(std::string("check: ") + ex.what());
    }
    return out;
}

}  // namespace

int batch_verify(const std::string& corpus_text, std::string& summary_out) {
    json j = parse_json(corpus_text);
    const json& entries = require_field(j, "entries", "corpus");
    if (!entries.is_array()) throw SchemaError("corpus.entries must be an array");

    std::vector<BatchEntry> parsed;
    for (size_t i = 0; i < entries.size(); ++i) parsed.push_back(parse_entry(entries[i], i));

    std::vector<BatchOutcome> outcomes(parsed.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < static_cast<int>(parsed.size()); ++i) outcomes[i] = run_entry(parsed[i]);

    int pass = 0, failed = 0, skipped = 0;
    json js;
    js["entries"] = json::array();
    for (size_t i = 0; i < parsed.size(); ++i) {
        json je;
        je["spec"] = parsed[i].spec;
        je["status"] = outcomes[i].status;
        je["detail"] = outcomes[i].detail;
        js["entries"].push_back(std::move(je));
        if (outcomes[i].status == "pass") ++pass;
        else if (outcomes[i].status == "fail") ++failed;
        else ++skipped;
    }
    js["pass"] = pass;
    js["fail"] = failed;
    js["skip"] = skipped;
    summary_out = dump(js);
    return failed > 0 ? 1 : 0;
}

std::string default_corpus() {
    return R"({"entries": [
      {"g": 0, "b": 1, "c": 6,  "m": 1, "walk": 10, "seed": 1},
      {"g": 0, "b": 1, "c": 7,  "m": 1, "walk": 10, "seed": 2},
      {"g": 0, "b": 1, "c": 6,  "m": 2, "walk": 10, "seed": 3},
      {"g": 0, "b": 1, "c": 10, "m": 2, "walk": 10, "seed": 4},
      {"g": 0, "b": 1, "c": 5,  "m": 2, "walk": 0,  "seed": 5},
      {"g": 0, "b": 2, "c": 4,  "m": 2, "walk": 10, "seed": 6},
      {"g": 0, "b": 2, "c": 2,  "m": 2, "walk": 5,  "seed": 7},
      {"g": 1, "b": 1, "c": 2,  "m": 2, "walk": 5,  "seed": 8},
      {"g": 0, "b": 1, "c": 11, "m": 3, "walk": 8,  "seed": 9},
      {"g": 1, "b": 1, "c": 1,  "m": 3, "walk": 5,  "seed": 10},
      {"g": 0, "b": 2, "c": 4,  "m": 4, "walk": 5,  "seed": 11}
    ]})";
}

}
