#include "residuum/io/formats.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "residuum/error.hpp"

namespace residuum::io {

using models::EllipticForm;
using models::RationalForm;
using models::SpherePoint;

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char delim) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == delim) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    return out;
}

// Splits at the first '/' with whitespace on both sides.
std::optional<std::pair<std::string, std::string>> split_fraction(std::string_view s) {
    for (std::size_t i = 1; i + 1 < s.size(); ++i)
        if (s[i] == '/' && std::isspace(static_cast<unsigned char>(s[i - 1])) &&
            std::isspace(static_cast<unsigned char>(s[i + 1])))
            return std::make_pair(trim(s.substr(0, i)), trim(s.substr(i + 1)));
    return std::nullopt;
}

// `key rest` or `key = rest` / `key : rest`
std::pair<std::string, std::string> keyword(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '=' && text[i] != ':') ++i;
    std::string key = text.substr(0, i);
    std::string rest = trim(std::string_view(text).substr(i));
    if (!rest.empty() && (rest[0] == '=' || rest[0] == ':')) rest = trim(std::string_view(rest).substr(1));
    return {key, rest};
}

cech::Simplex parse_simplex(std::string_view text, int line) {
    cech::Simplex s;
    for (const auto& tok : split(text, ',')) {
        if (tok.empty()) throw ParseError("empty vertex index", line);
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("bad vertex index '" + tok + "'", line);
        }
        if (used != tok.size()) throw ParseError("bad vertex index '" + tok + "'", line);
        if (v < 0) throw ParseError("negative vertex index", line);
        if (!s.empty() && v <= s.back()) throw ParseError("simplex tuple is not strictly ascending", line);
        s.push_back(static_cast<int>(v));
    }
    if (s.size() > static_cast<std::size_t>(cech::kMaxSimplexDegree + 1))
        throw ParseError("simplex of degree above 3", line);
    return s;
}

template <class F>
auto at_line(int line, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        if (e.line() > 0) throw;
        throw ParseError(e.what(), line);
    }
}

ExactComplex exact_value(const std::string& text, int line) {
    return at_line(line, [&] { return ExactComplex::parse(text); });
}

Complex float_value(const std::string& text, int line) {
    return at_line(line, [&] { return parse_complex(text); });
}

int int_value(const std::string& text, int line) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + text + "'", line);
    }
    if (used != text.size()) throw ParseError("expected an integer, got '" + text + "'", line);
    return v;
}

cech::Nerve build_nerve(const std::vector<cech::Simplex>& raw, bool maximal) {
    try {
        return cech::Nerve::validate(raw, maximal ? cech::Closure::maximal : cech::Closure::strict);
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid nerve: ") + e.what());
    }
}

LoopPath parse_polyline(const std::string& text, int line) {
    std::vector<Complex> pts;
    for (const auto& tok : split(text, ';')) pts.push_back(float_value(tok, line));
    if (pts.size() < 2) throw ParseError("a path needs at least two points", line);
    return LoopPath::polyline(pts);
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Line> logical_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(start, end - start);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string t = trim(raw);
        if (!t.empty()) out.push_back({number, std::move(t)});
        start = end + 1;
    }
    return out;
}

Polynomial parse_polynomial(std::string_view text, int line) {
    std::vector<ExactComplex> c;
    for (const auto& tok : split(text, ',')) {
        if (tok.empty()) throw ParseError("empty polynomial coefficient", line);
        c.push_back(exact_value(tok, line));
    }
    return Polynomial(std::move(c));
}

cech::Nerve parse_nerve(std::string_view text, bool force_maximal) {
    bool maximal = force_maximal;
    std::vector<cech::Simplex> raw;
    for (const auto& l : logical_lines(text)) {
        if (l.text == "maximal") {
            if (!raw.empty()) throw ParseError("'maximal' must precede the simplices", l.number);
            maximal = true;
            continue;
        }
        raw.push_back(parse_simplex(l.text, l.number));
    }
    if (raw.empty()) throw ParseError("nerve file lists no simplices");
    return build_nerve(raw, maximal);
}

cech::Cochain parse_cochain(std::string_view text, const cech::Nerve& nerve) {
    const auto lines = logical_lines(text);
    if (lines.empty()) throw ParseError("empty cochain file");
    const auto [key, rest] = keyword(lines.front().text);
    if (key != "degree") throw ParseError("cochain file must start with 'degree k'", lines.front().number);
    const int degree = int_value(rest, lines.front().number);
    if (degree < 0 || degree > cech::kMaxSimplexDegree) throw ParseError("cochain degree out of range", lines.front().number);
    cech::Cochain c(nerve, degree);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        const auto colon = l.text.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'simplex : value'", l.number);
        const auto s = parse_simplex(l.text.substr(0, colon), l.number);
        const auto idx = nerve.index_of(s);
        if (!idx || static_cast<int>(s.size()) != degree + 1)
            throw ParseError("simplex is not a " + std::to_string(degree) + "-simplex of the nerve", l.number);
        c[static_cast<std::size_t>(*idx)] = exact_value(trim(l.text.substr(colon + 1)), l.number);
    }
    return c;
}

chern::CDivisor parse_divisor(std::string_view text) {
    std::vector<std::string> names;
    std::vector<ExactComplex> values;
    for (const auto& l : logical_lines(text)) {
        const auto colon = l.text.rfind(':');
        if (colon == std::string::npos) throw ParseError("expected 'name : value'", l.number);
        std::string name = trim(l.text.substr(0, colon));
        if (name.empty()) throw ParseError("empty component name", l.number);
        for (const auto& n : names)
            if (n == name) throw ParseError("duplicate component '" + name + "'", l.number);
        names.push_back(std::move(name));
        values.push_back(exact_value(trim(l.text.substr(colon + 1)), l.number));
    }
    return chern::CDivisor(std::move(names), std::move(values));
}

chern::HodgeRecord parse_hodge(std::string_view text) {
    std::map<std::string, int> v;
    for (const auto& l : logical_lines(text)) {
        const auto [key, rest] = keyword(l.text);
        if (key != "b1" && key != "d_omega0" && key != "h01" && key != "h2")
            throw ParseError("unknown Hodge key '" + key + "'", l.number);
        const int x = int_value(rest, l.number);
        if (x < 0) throw ParseError("Hodge numbers are nonnegative", l.number);
        v[key] = x;
    }
    for (const char* k : {"b1", "d_omega0", "h01"})
        if (!v.count(k)) throw ParseError(std::string("missing Hodge key '") + k + "'");
    return {v["b1"], v["d_omega0"], v["h01"], v.count("h2") ? v["h2"] : 0};
}

std::vector<chern::TransitionData> parse_transitions(std::string_view text) {
    std::optional<cech::Nerve> nerve;
    std::string nerve_tag;
    std::vector<cech::Simplex> inline_simplices;
    bool inline_maximal = false;

    struct Block {
        std::string name;
        int line = 0;
        std::optional<std::string> point;
        bool trivial = false;
        std::vector<std::pair<cech::Simplex, std::pair<ExactComplex, int>>> triangles;
        chern::ConcreteTransitions concrete;
        std::vector<std::tuple<cech::Simplex, cech::Simplex, LoopPath, int>> paths;
        std::string mode;
    };
    std::vector<Block> blocks;

    auto ensure_nerve = [&](int line) {
        if (nerve) return;
        if (inline_simplices.empty()) throw ParseError("transition file needs a 'nerve' header before components", line);
        nerve = build_nerve(inline_simplices, inline_maximal);
    };

    for (const auto& l : logical_lines(text)) {
        const auto [key, rest] = keyword(l.text);
        if (key == "nerve") {
            if (nerve || !blocks.empty()) throw ParseError("'nerve' must appear once, before the components", l.number);
            if (rest == "sphere") nerve = chern::sphere_cover_nerve();
            else if (rest == "torus") nerve = cech::standard_good_nerve("torus");
            else if (rest != "inline") throw ParseError("unknown nerve '" + rest + "'", l.number);
            nerve_tag = rest;
            continue;
        }
        if (key == "simplex") {
            if (nerve || !blocks.empty()) throw ParseError("'simplex' lines belong before the components", l.number);
            inline_simplices.push_back(parse_simplex(rest, l.number));
            continue;
        }
        if (key == "maximal" && blocks.empty()) {
            inline_maximal = true;
            continue;
        }
        if (key == "component") {
            ensure_nerve(l.number);
            if (rest.empty()) throw ParseError("component needs a name", l.number);
            for (const auto& b : blocks)
                if (b.name == rest) throw ParseError("duplicate component '" + rest + "'", l.number);
            blocks.push_back({});
            blocks.back().name = rest;
            blocks.back().line = l.number;
            continue;
        }
        if (blocks.empty()) throw ParseError("'" + key + "' outside a component block", l.number);
        Block& b = blocks.back();
        if (key == "mode") {
            if (rest != "abstract" && rest != "concrete") throw ParseError("mode is abstract or concrete", l.number);
            b.mode = rest;
        } else if (key == "point") {
            b.point = rest;
        } else if (key == "trivial") {
            b.trivial = true;
        } else if (key == "triangle") {
            const auto colon = rest.find(':');
            if (colon == std::string::npos) throw ParseError("expected 'triangle i,j,k : n'", l.number);
            b.triangles.push_back({parse_simplex(rest.substr(0, colon), l.number),
                                   {exact_value(trim(rest.substr(colon + 1)), l.number), l.number}});
        } else if (key == "edge") {
            const auto colon = rest.find(':');
            if (colon == std::string::npos) throw ParseError("expected 'edge i,j : g = N / D ; base = a'", l.number);
            chern::ConcreteEdge e;
            e.edge = parse_simplex(rest.substr(0, colon), l.number);
            if (e.edge.size() != 2) throw ParseError("edge must have two vertices", l.number);
            bool have_g = false, have_base = false;
            for (const auto& part : split(std::string_view(rest).substr(colon + 1), ';')) {
                const auto [k, v] = keyword(part);
                if (k == "g") {
                    const auto frac = split_fraction(v);
                    if (!frac) throw ParseError("g needs 'N / D' with spaces around '/'", l.number);
                    e.g = RationalFunction{parse_polynomial(frac->first, l.number), parse_polynomial(frac->second, l.number)};
                    if (e.g.denominator.is_zero() || e.g.numerator.is_zero())
                        throw ParseError("transition function must be nonzero", l.number);
                    have_g = true;
                } else if (k == "base") {
                    e.base = float_value(v, l.number);
                    have_base = true;
                } else {
                    throw ParseError("unknown edge field '" + k + "'", l.number);
                }
            }
            if (!have_g || !have_base) throw ParseError("edge record needs g and base", l.number);
            b.concrete.edges.push_back(std::move(e));
        } else if (key == "path") {
            const auto bar = rest.find('|');
            const auto colon = rest.find(':');
            if (bar == std::string::npos || colon == std::string::npos || colon < bar)
                throw ParseError("expected 'path i,j | i,j,k : z0 ; z1 ; ...'", l.number);
            b.paths.emplace_back(parse_simplex(rest.substr(0, bar), l.number),
                                 parse_simplex(rest.substr(bar + 1, colon - bar - 1), l.number),
                                 parse_polyline(rest.substr(colon + 1), l.number), l.number);
        } else if (key == "triple") {
            const auto colon = rest.find(':');
            if (colon == std::string::npos) throw ParseError("expected 'triple i,j,k : x'", l.number);
            b.concrete.triple_points[parse_simplex(rest.substr(0, colon), l.number)] =
                float_value(trim(rest.substr(colon + 1)), l.number);
        } else {
            throw ParseError("unknown transition directive '" + key + "'", l.number);
        }
    }
    if (blocks.empty()) throw ParseError("transition file has no components");

    std::vector<chern::TransitionData> out;
    for (auto& b : blocks) {
        const bool concrete_records = !b.concrete.edges.empty() || !b.paths.empty() || !b.concrete.triple_points.empty();
        const int kinds = (b.point ? 1 : 0) + (b.trivial ? 1 : 0) + (b.triangles.empty() ? 0 : 1) + (concrete_records ? 1 : 0);
        if (kinds != 1) throw ParseError("component '" + b.name + "' needs exactly one kind of transition data", b.line);
        if ((b.point || b.trivial) && nerve_tag != "sphere")
            throw ParseError("'point' and 'trivial' need 'nerve sphere'", b.line);
        if (b.mode == "abstract" && b.triangles.empty()) throw ParseError("abstract mode expects triangle lines", b.line);
        if (b.mode == "concrete" && !b.triangles.empty()) throw ParseError("concrete mode expects edge records", b.line);
        if (b.point) {
            out.push_back(at_line(b.line, [&] { return chern::sphere_point_transitions(SpherePoint::parse(*b.point), b.name); }));
        } else if (b.trivial) {
            out.push_back(chern::sphere_trivial_transitions(b.name));
        } else if (!b.triangles.empty()) {
            cech::Cochain c(*nerve, 2);
            for (const auto& [s, v] : b.triangles) {
                const auto idx = nerve->index_of(s);
                if (!idx || s.size() != 3) throw ParseError("not a triangle of the nerve", v.second);
                c[static_cast<std::size_t>(*idx)] = v.first;
            }
            chern::TransitionData td{*nerve, b.name, chern::AbstractTransitions{c}};
            chern::validate(td);
            out.push_back(std::move(td));
        } else {
            for (auto& [e, t, path, line] : b.paths) {
                chern::ConcreteEdge* rec = nullptr;
                for (auto& r : b.concrete.edges)
                    if (r.edge == e) rec = &r;
                if (!rec) throw ParseError("path for an edge without an edge record", line);
                rec->paths[t] = path;
            }
            chern::TransitionData td{*nerve, b.name, std::move(b.concrete)};
            chern::validate(td);
            out.push_back(std::move(td));
        }
    }
    return out;
}

models::MeromorphicForm parse_form(std::string_view text, const models::TorusHandle& torus) {
    const auto lines = logical_lines(text);
    if (lines.empty()) throw ParseError("empty form file");
    std::optional<Complex> tau;
    int cutoff = 30;
    bool elliptic = false;
    std::optional<RationalForm> rational;
    Complex c0 = 0;
    std::vector<models::LogTerm> logs;
    std::vector<models::PoleTerm> poles;
    for (const auto& l : lines) {
        const auto [key, rest] = keyword(l.text);
        if (key == "model") {
            if (rest == "torus") elliptic = true;
            else if (rest != "sphere") throw ParseError("model is sphere or torus", l.number);
        } else if (key == "tau") {
            tau = float_value(rest, l.number);
        } else if (key == "cutoff") {
            cutoff = int_value(rest, l.number);
        } else if (key == "dz") {
            c0 += float_value(rest, l.number);
            elliptic = true;
        } else if (key == "zeta") {
            const auto parts = split(rest, ',');
            if (parts.size() != 2) throw ParseError("expected 'zeta : p , r'", l.number);
            logs.push_back({float_value(parts[0], l.number), float_value(parts[1], l.number)});
            elliptic = true;
        } else if (key == "pole") {
            const auto parts = split(rest, ',');
            if (parts.size() != 3) throw ParseError("expected 'pole : p , order , c'", l.number);
            poles.push_back({float_value(parts[0], l.number), int_value(parts[1], l.number), float_value(parts[2], l.number)});
            elliptic = true;
        } else if (const auto frac = split_fraction(l.text)) {
            if (rational) throw ParseError("more than one rational form line", l.number);
            const Polynomial n = parse_polynomial(frac->first, l.number), d = parse_polynomial(frac->second, l.number);
            if (d.is_zero()) throw ParseError("zero denominator", l.number);
            rational = at_line(l.number, [&] {
                try {
                    return RationalForm(n, d);
                } catch (const DomainError& e) {
                    throw ParseError(e.what());
                }
            });
        } else {
            throw ParseError("unrecognized form line", l.number);
        }
    }
    if (rational && elliptic) throw ParseError("form file mixes rational and elliptic data");
    if (rational) return *rational;
    if (!elliptic) throw ParseError("form file has no form");
    models::TorusHandle t = torus;
    if (tau) {
        if (t && (t->tau() != *tau || t->cutoff() != cutoff)) throw ParseError("form torus differs from the garden torus");
        if (!t) t = std::make_shared<const models::Torus>(*tau, cutoff);
    }
    if (!t) throw ParseError("elliptic form needs a torus ('tau = ...' or a garden)");
    return EllipticForm(t, c0, std::move(logs), std::move(poles));
}

std::string write_form(const models::MeromorphicForm& form) {
    if (const auto* r = std::get_if<RationalForm>(&form)) return r->str() + "\n";
    const auto& e = std::get<EllipticForm>(form);
    std::ostringstream out;
    out << "model torus\n";
    out << "tau = " << format_complex(e.torus()->tau()) << "\n";
    out << "cutoff = " << e.torus()->cutoff() << "\n";
    out << "dz : " << format_complex(e.c0()) << "\n";
    for (const auto& t : e.log_terms()) out << "zeta : " << format_complex(t.pole) << " , " << format_complex(t.coefficient) << "\n";
    for (const auto& t : e.pole_terms())
        out << "pole : " << format_complex(t.pole) << " , " << t.order << " , " << format_complex(t.coefficient) << "\n";
    return out.str();
}

periods::Garden parse_garden(std::string_view text) {
    std::optional<std::string> model;
    std::optional<Complex> tau, basepoint, loop_base;
    int cutoff = 30;
    std::vector<std::pair<std::string, int>> components;
    std::vector<LoopPath> loops;
    for (const auto& l : logical_lines(text)) {
        const auto [key, rest] = keyword(l.text);
        if (key == "model") {
            if (rest != "sphere" && rest != "torus") throw ParseError("model is sphere or torus", l.number);
            model = rest;
        } else if (key == "tau") {
            tau = float_value(rest, l.number);
        } else if (key == "cutoff") {
            cutoff = int_value(rest, l.number);
        } else if (key == "component") {
            if (rest.empty()) throw ParseError("component needs a point", l.number);
            components.emplace_back(rest, l.number);
        } else if (key == "basepoint") {
            basepoint = float_value(rest, l.number);
        } else if (key == "loop_base") {
            loop_base = float_value(rest, l.number);
        } else if (key == "loop") {
            loops.push_back(parse_polyline(rest, l.number));
        } else {
            throw ParseError("unknown garden key '" + key + "'", l.number);
        }
    }
    if (!model) throw ParseError("garden file needs 'model sphere|torus'");
    if (*model == "sphere") {
        if (tau || loop_base || !loops.empty()) throw ParseError("sphere gardens take no tau or loops");
        std::vector<SpherePoint> pts;
        for (const auto& [c, line] : components) pts.push_back(at_line(line, [&] { return SpherePoint::parse(c); }));
        return periods::Garden::sphere(std::move(pts), basepoint);
    }
    if (!tau) throw ParseError("torus garden needs 'tau = ...'");
    auto t = std::make_shared<const models::Torus>(*tau, cutoff);
    std::vector<Complex> pts;
    for (const auto& [c, line] : components) pts.push_back(float_value(c, line));
    auto g = periods::Garden::torus(t, std::move(pts), loop_base);
    if (!loops.empty()) g.set_loops(std::move(loops));
    if (basepoint) g.set_basepoint(*basepoint);
    return g;
}

std::string write_garden(const periods::Garden& garden) {
    std::ostringstream out;
    if (garden.model() == periods::Model::sphere) {
        out << "model sphere\n";
        for (const auto& c : garden.components()) out << "component " << c.sphere_point->str() << "\n";
        out << "basepoint = " << format_complex(garden.basepoint()) << "\n";
        return out.str();
    }
    const auto& t = *garden.torus_handle();
    out << "model torus\n";
    out << "tau = " << format_complex(t.tau()) << "\n";
    out << "cutoff = " << t.cutoff() << "\n";
    for (const auto& c : garden.components()) out << "component " << format_complex(c.z) << "\n";
    const auto& loops = garden.loops();
    const bool canonical = loops.size() == 2 && loops[0].pieces().size() == 1 && loops[1].pieces().size() == 1 &&
                           std::holds_alternative<Segment>(loops[0].pieces()[0]) &&
                           std::holds_alternative<Segment>(loops[1].pieces()[0]) && loops[0].start() == loops[1].start() &&
                           loops[0].end() == loops[0].start() + 1.0 && loops[1].end() == loops[1].start() + t.tau();
    if (canonical) {
        out << "loop_base = " << format_complex(loops[0].start()) << "\n";
    } else {
        for (const auto& loop : loops) {
            out << "loop : " << format_complex(loop.start());
            for (const auto& piece : loop.pieces()) {
                if (!std::holds_alternative<Segment>(piece)) throw DomainError("only polyline loops can be written");
                out << " ; " << format_complex(std::get<Segment>(piece).to);
            }
            out << "\n";
        }
    }
    out << "basepoint = " << format_complex(garden.basepoint()) << "\n";
    return out.str();
}

pluri::Pair parse_pair(std::string_view text) {
    std::map<std::string, std::string> sections;
    std::string current;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        const std::string line = trim(text.substr(start, end - start));
        if (line.size() > 2 && line.front() == '[' && line.back() == ']') {
            current = line.substr(1, line.size() - 2);
            if (current != "garden" && current != "phi" && current != "psi")
                throw ParseError("unknown pair section '" + current + "'", number);
            if (sections.count(current)) throw ParseError("duplicate section '" + current + "'", number);
            sections[current];
        } else if (!line.empty() && line[0] != '#') {
            if (current.empty()) throw ParseError("content before the first section", number);
            // keep blank lines so section-relative numbers stay meaningful for errors
            sections[current] += line;
        }
        if (!current.empty()) sections[current] += "\n";
        start = end + 1;
    }
    for (const char* s : {"garden", "phi", "psi"})
        if (!sections.count(s)) throw ParseError(std::string("pair file lacks [") + s + "]");
    auto garden = parse_garden(sections["garden"]);
    auto phi = parse_form(sections["phi"], garden.torus_handle());
    auto psi = parse_form(sections["psi"], garden.torus_handle());
    return pluri::Pair::make(std::move(phi), pluri::AntiMeromorphicForm{std::move(psi)}, std::move(garden));
}

std::string write_pair(const pluri::Pair& pair) {
    std::ostringstream out;
    out << "[garden]\n" << write_garden(pair.garden());
    out << "[phi]\n" << write_form(pair.phi());
    out << "[psi]\n" << write_form(pair.phi_hat().conjugate_of);
    return out.str();
}

}  // namespace residuum::io
