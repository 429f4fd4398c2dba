#include "angulation/ginzburg.hpp"
#include "angulation/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace angulation {

namespace {

using ArrowKey = std::tuple<int, int, int>;
using Word = std::vector<std::string>;
using LinComb = std::map<Word, long long>;

ArrowKey key_of(const GradedArrow& a) { return {a.src, a.dst, a.grade}; }

std::string arrow_name(const GradedArrow& a) {
    std::ostringstream os;
    os << "a" << a.src << "_" << a.dst << "_" << a.grade;
    return os.str();
}

std::string loop_name(int v) { return "t" + std::to_string(v); }

std::string word_str(const Word& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "." : "") << w[i];
    return os.str();
}

std::vector<PathTerm> to_terms(const LinComb& lc) {
    std::vector<PathTerm> out;
    for (const auto& [word, coef] : lc) {
        if (coef == 0) continue;
        PathTerm t;
        t.coef = coef;
        t.path = word;
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

const DgGenerator* GinzburgPresentation::find(const std::string& name) const {
    for (const auto& g : generators)
        if (g.name == name) return &g;
    return nullptr;
}

int GinzburgPresentation::src_of(const std::string& name) const {
    const DgGenerator* g = find(name);
    if (!g) throw InvalidArgument("no generator named " + name);
    return g->kind == GenKind::loop ? g->vertex : g->arrow.src;
}

int GinzburgPresentation::dst_of(const std::string& name) const {
    const DgGenerator* g = find(name);
    if (!g) throw InvalidArgument("no generator named " + name);
    return g->kind == GenKind::loop ? g->vertex : g->arrow.dst;
}

GinzburgPresentation ginzburg_double(const GradedQuiver& q, const Superpotential& w,
                                     OrientationRule rule) {
    std::map<ArrowKey, int> count;
    for (const auto& a : q.arrows) ++count[key_of(a)];
    for (const auto& [key, c] : count) {
        auto [i, j, r] = key;
        if (c > 1)
            throw InvalidArgument("doubling needs distinct arrows, but " + std::to_string(i) +
                                  "->" + std::to_string(j) + ":" + std::to_string(r) +
                                  " occurs " + std::to_string(c) + " times; reduce first");
        if (r < 0 || r > q.m)
            throw AsymmetricInput("arrow grade outside 0..m");
        if (!count.count({j, i, q.m - r}))
            throw AsymmetricInput("arrow " + std::to_string(i) + "->" + std::to_string(j) + ":" +
                                  std::to_string(r) + " lacks its symmetric partner");
        if (!std::count(q.vertices.begin(), q.vertices.end(), i) ||
            !std::count(q.vertices.begin(), q.vertices.end(), j))
            throw InvalidArgument("arrow endpoint missing from the vertex list");
    }

    GinzburgPresentation p;
    p.m = q.m;
    p.vertices = q.vertices;
    std::sort(p.vertices.begin(), p.vertices.end());

    // the sign e(u): +1 on the chosen originals, (-1)^m on their partners,
    // so every symmetric pair has e-product (-1)^m
    std::map<ArrowKey, int> esign;
    std::vector<GradedArrow> arrows = q.arrows;
    std::sort(arrows.begin(), arrows.end());
    for (const auto& a : arrows) {
        GradedArrow pa = partner_arrow(a, q.m);
        bool low = key_of(a) < key_of(pa);
        bool original = (rule == OrientationRule::lowest) ? low : !low;
        DgGenerator g;
        g.kind = original ? GenKind::original : GenKind::dual;
        g.arrow = a;
        g.arrow.origin.reset();
        g.degree = -a.grade;
        g.name = arrow_name(a);
        p.generators.push_back(g);
        esign[key_of(a)] = original ? 1 : (q.m % 2 == 0 ? 1 : -1);
    }
    for (int v : p.vertices) {
        DgGenerator g;
        g.kind = GenKind::loop;
        g.vertex = v;
        g.degree = -(q.m + 1);
        g.name = loop_name(v);
        p.generators.push_back(g);
    }

    std::map<std::string, LinComb> diff;
    for (const auto& g : p.generators) diff[g.name];

    for (const PotentialTerm& raw : w.terms) {
        if (raw.arrows.size() != 3)
            throw InvalidArgument("potential term is not a 3-cycle");
        PotentialTerm t = canonical_rotation(raw);
        for (size_t k = 0; k < 3; ++k) {
            if (!count.count(key_of(t.arrows[k])))
                throw InvalidArgument("potential term uses an arrow absent from the quiver");
            if (t.arrows[k].dst != t.arrows[(k + 1) % 3].src)
                throw InvalidArgument("potential term is not a closed travel path");
        }
        if (t.arrows[0].grade + t.arrows[1].grade + t.arrows[2].grade != q.m - 1)
            throw InvalidArgument("potential term does not have grade sum m-1");

        // occurrence signs: c(1) = +1 at the canonical rotation, then
        // c(k+1) = -(-1)^{r_{k+1}} e(T_k) e(partner(T_{k+1})) c(k)
        long long c[3];
        c[0] = 1;
        for (int k = 1; k < 3; ++k) {
            int r = t.arrows[k].grade;
            int s = (r % 2 == 0) ? -1 : 1;
            s *= esign.at(key_of(t.arrows[k - 1]));
            s *= esign.at(key_of(partner_arrow(t.arrows[k], q.m)));
            c[k] = s * c[k - 1];
        }
        for (int k = 0; k < 3; ++k) {
            std::string target = arrow_name(partner_arrow(t.arrows[k], q.m));
            Word word = {arrow_name(t.arrows[(k + 1) % 3]), arrow_name(t.arrows[(k + 2) % 3])};
            diff[target][word] += c[k];
        }
    }

    int global = (q.m % 2 == 0) ? 1 : -1;
    for (const auto& a : arrows) {
        Word word = {arrow_name(partner_arrow(a, q.m)), arrow_name(a)};
        diff[loop_name(a.dst)][word] += global * esign.at(key_of(a));
    }

    for (const auto& [name, lc] : diff) p.differential[name] = to_terms(lc);
    return p;
}

Report verify_degrees(const GinzburgPresentation& p) {
    Report rep;
    std::map<std::string, const DgGenerator*> by_name;
    std::map<ArrowKey, const DgGenerator*> by_arrow;
    for (const auto& g : p.generators) {
        if (!by_name.emplace(g.name, &g).second)
            rep.error("duplicate-generator", g.name);
        if (g.kind != GenKind::loop) by_arrow[key_of(g.arrow)] = &g;
    }

    for (const auto& g : p.generators) {
        if (g.kind == GenKind::loop) {
            if (g.degree != -(p.m + 1))
                rep.error("loop-degree", g.name + " has degree " + std::to_string(g.degree) +
                                             ", expected " + std::to_string(-(p.m + 1)));
            continue;
        }
        if (g.degree != -g.arrow.grade)
            rep.error("arrow-degree", g.name + " degree disagrees with its grade");
        auto it = by_arrow.find(key_of(partner_arrow(g.arrow, p.m)));
        if (it == by_arrow.end()) {
            rep.error("missing-partner", g.name + " has no partner generator");
            continue;
        }
        const DgGenerator* mate = it->second;
        if (g.degree + mate->degree != -p.m)
            rep.error("pair-degree", g.name + " and " + mate->name + " degrees do not sum to " +
                                         std::to_string(-p.m));
        if ((g.kind == GenKind::original) == (mate->kind == GenKind::original))
            rep.error("pair-orientation", g.name + " and " + mate->name +
                                              " are not one original plus one dual");
    }

    auto degree_of = [&](const std::string& n) { return by_name.at(n)->degree; };
    for (const auto& [name, terms] : p.differential) {
        auto it = by_name.find(name);
        if (it == by_name.end()) {
            rep.error("unknown-generator", "differential keyed by unknown name " + name);
            continue;
        }
        const DgGenerator& g = *it->second;
        int gsrc = g.kind == GenKind::loop ? g.vertex : g.arrow.src;
        int gdst = g.kind == GenKind::loop ? g.vertex : g.arrow.dst;
        for (const auto& t : terms) {
            if (t.path.empty() || t.coef == 0) {
                rep.error("degenerate-term", "empty path or zero coefficient under " + name);
                continue;
            }
            bool known = true;
            for (const auto& letter : t.path)
                if (!by_name.count(letter)) {
                    rep.error("unknown-letter", "path under " + name + " uses " + letter);
                    known = false;
                }
            if (!known) continue;
            int deg = 0;
            for (const auto& letter : t.path) deg += degree_of(letter);
            if (deg != g.degree + 1)
                rep.error("not-homogeneous", "d(" + name + ") term " + word_str(t.path) +
                                                 " has degree " + std::to_string(deg) +
                                                 ", expected " + std::to_string(g.degree + 1));
            for (size_t i = 0; i + 1 < t.path.size(); ++i)
                if (p.dst_of(t.path[i]) != p.src_of(t.path[i + 1]))
                    rep.error("not-composable", "path " + word_str(t.path) + " under " + name);
            if (p.src_of(t.path.front()) != gsrc || p.dst_of(t.path.back()) != gdst)
                rep.error("endpoint-mismatch", "path " + word_str(t.path) + " under " + name +
                                                   " does not run " + std::to_string(gsrc) +
                                                   " -> " + std::to_string(gdst));
        }
    }
    for (const auto& g : p.generators)
        if (!p.differential.count(g.name))
            rep.error("missing-differential", g.name + " has no differential entry");
    return rep;
}

Report verify_d_squared(const GinzburgPresentation& p) {
    Report rep;
    std::map<std::string, int> degree;
    std::map<std::string, LinComb> diff;
    for (const auto& g : p.generators) degree[g.name] = g.degree;
    for (const auto& [name, terms] : p.differential) {
        LinComb lc;
        for (const auto& t : terms) lc[t.path] += t.coef;
        diff[name] = std::move(lc);
    }

    auto d_word = [&](const Word& w, long long coef) {
        LinComb out;
        int prefix_deg = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            auto it = diff.find(w[i]);
            if (it != diff.end()) {
                long long sign = (prefix_deg % 2 == 0) ? 1 : -1;
                for (const auto& [inner, c] : it->second) {
                    Word nw(w.begin(), w.begin() + i);
                    nw.insert(nw.end(), inner.begin(), inner.end());
                    nw.insert(nw.end(), w.begin() + i + 1, w.end());
                    out[nw] += coef * sign * c;
                }
            }
            prefix_deg += degree.count(w[i]) ? degree[w[i]] : 0;
        }
        return out;
    };

    for (const auto& g : p.generators) {
        auto it = diff.find(g.name);
        if (it == diff.end()) continue;
        LinComb dd;
        for (const auto& [word, coef] : it->second) {
            if (coef == 0) continue;
            for (const auto& [nw, c] : d_word(word, coef)) dd[nw] += c;
        }
        for (const auto& [word, coef] : dd) {
            if (coef == 0) continue;
            rep.error("d-squared", "d^2(" + g.name + ") contains " + std::to_string(coef) + "*" +
                                       word_str(word));
        }
    }
    if (rep.ok()) rep.note("d-squared", "d^2 = 0 on every generator");
    return rep;
}

}
