// residuum: command-line front end.
//
// Exit codes (all subcommands): 0 success, 2 malformed input or usage, 4 domain error,
// 5 numerical failure. `feasible` additionally returns 1 for infeasible and 3 for inconclusive.
// Errors are reported as a single stderr line `error: <parse|usage|domain|numerical>: <message>`.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "residuum/cech/cohomology.hpp"
#include "residuum/error.hpp"
#include "residuum/io/formats.hpp"

using namespace residuum;

namespace {

constexpr int kDigits = 15;

enum class Format { human, csv };

std::string fmt(Complex z) { return format_complex(z, kDigits); }

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

std::string exact_list(const std::vector<ExactComplex>& xs) {
    std::vector<std::string> s;
    for (const auto& x : xs) s.push_back(x.str());
    return join(s, " ");
}

std::string complex_list(const std::vector<Complex>& xs, const std::string& sep) {
    std::vector<std::string> s;
    for (const auto& x : xs) s.push_back(fmt(x));
    return join(s, sep);
}

std::vector<chern::TransitionData> load_transitions(const std::string& path, const std::string& mode) {
    auto tds = io::parse_transitions(io::read_file(path));
    for (const auto& td : tds) {
        if (mode == "abstract" && !td.is_abstract())
            throw ParseError("component '" + td.component + "' has concrete data but --mode abstract was given");
        if (mode == "concrete" && td.is_abstract())
            throw ParseError("component '" + td.component + "' has abstract data but --mode concrete was given");
    }
    return tds;
}

periods::Garden load_garden(const std::string& path) { return io::parse_garden(io::read_file(path)); }

models::MeromorphicForm load_form(const std::string& path, const models::TorusHandle& torus = nullptr) {
    return io::parse_form(io::read_file(path), torus);
}

std::vector<double> parse_window(const std::string& text) {
    std::vector<double> w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            w.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("bad --window value '" + tok + "'");
        }
    }
    if (w.size() != 4 || !(w[0] < w[1]) || !(w[2] < w[3])) throw ParseError("--window expects x0,x1,y0,y1 with x0<x1, y0<y1");
    return w;
}

int report(const char* kind, const std::string& msg, int code) {
    std::string line = msg;
    for (auto& c : line)
        if (c == '\n') c = ' ';
    std::cerr << "error: " << kind << ": " << line << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Residues, periods and pluriharmonic pairs on model Riemann surfaces"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::uint64_t seed = 0;
    std::string format_name = "human";
    app.add_option("--seed", seed, "seed for randomized checks")->default_val(0);
    app.add_option("--format", format_name, "output format")->check(CLI::IsMember({"human", "csv"}));

    int code = 0;
    std::function<void()> action;

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "Cech cohomology dimensions of a nerve file");
    std::string nerve_path;
    bool maximal = false;
    coh->add_option("nerve", nerve_path, "nerve file")->required();
    coh->add_flag("--maximal", maximal, "close the listed simplices under faces");
    coh->callback([&] {
        action = [&] {
            const auto nerve = io::parse_nerve(io::read_file(nerve_path), maximal);
            const auto dims = cech::cohomology_dims(nerve, std::min(2, nerve.dimension()));
            std::vector<std::string> s;
            for (int d : dims) s.push_back(std::to_string(d));
            std::cout << join(s, format_name == "csv" ? "," : " ") << "\n";
        };
    });

    // chern
    auto* ch = app.add_subcommand("chern", "Chern cocycles of transition data, or the class of a divisor");
    std::string trans_path, divisor_path, mode;
    ch->add_option("--transitions", trans_path, "transition file")->required();
    ch->add_option("--divisor", divisor_path, "divisor file (prints the double-delta class)");
    ch->add_option("--mode", mode, "require concrete or abstract data")->check(CLI::IsMember({"concrete", "abstract"}));
    ch->callback([&] {
        action = [&] {
            const auto tds = load_transitions(trans_path, mode);
            const cech::SecondCohomology h(tds.front().nerve);
            if (divisor_path.empty()) {
                for (const auto& td : tds) {
                    const auto c = chern::chern_cocycle(td);
                    std::cout << td.component << ": " << exact_list(h.coordinates(c)) << "\n";
                }
                return;
            }
            const auto cls = chern::double_delta(io::parse_divisor(io::read_file(divisor_path)), tds);
            std::cout << "class: " << exact_list(cls.coordinates) << "\n";
            std::cout << "zero: " << (cls.is_zero() ? "yes" : "no") << "\n";
        };
    });

    // feasible
    auto* fe = app.add_subcommand("feasible", "Residue-prescription feasibility of a divisor");
    std::string hodge_path;
    fe->add_option("--divisor", divisor_path, "divisor file")->required();
    fe->add_option("--transitions", trans_path, "transition file")->required();
    fe->add_option("--hodge", hodge_path, "Hodge record file")->required();
    fe->add_option("--mode", mode, "require concrete or abstract data")->check(CLI::IsMember({"concrete", "abstract"}));
    fe->callback([&] {
        action = [&] {
            const auto divisor = io::parse_divisor(io::read_file(divisor_path));
            const auto tds = load_transitions(trans_path, mode);
            const auto hodge = io::parse_hodge(io::read_file(hodge_path));
            if (!chern::is_consistent(hodge)) throw DomainError("Hodge record violates b1 <= d_omega0 + h01");
            const auto result = chern::residue_feasible(divisor, tds, hodge);
            std::cout << chern::to_string(result.verdict) << "\n";
            std::cout << "class: " << exact_list(result.chern_class.coordinates) << "\n";
            code = result.verdict == chern::Verdict::feasible ? 0 : result.verdict == chern::Verdict::infeasible ? 1 : 3;
        };
    });

    // prescribe
    auto* pr = app.add_subcommand("prescribe", "Closed form with prescribed residues (and long periods)");
    std::string model_name, garden_path;
    std::vector<std::string> long_targets;
    pr->add_option("--divisor", divisor_path, "divisor file; names are points")->required();
    auto* pr_model = pr->add_option("--model", model_name, "sphere")->check(CLI::IsMember({"sphere"}));
    auto* pr_garden = pr->add_option("--garden", garden_path, "garden file");
    pr_model->excludes(pr_garden);
    pr->add_option("--long", long_targets, "long-period targets (torus), one per loop");
    pr->callback([&] {
        action = [&] {
            if (model_name.empty() && garden_path.empty()) throw ParseError("prescribe needs --model sphere or --garden");
            const auto divisor = io::parse_divisor(io::read_file(divisor_path));
            if (!model_name.empty()) {
                if (!long_targets.empty()) throw ParseError("--long needs a garden with loops");
                std::vector<std::pair<models::SpherePoint, ExactComplex>> d;
                for (std::size_t i = 0; i < divisor.size(); ++i)
                    d.emplace_back(models::SpherePoint::parse(divisor.names()[i]), divisor.coefficients()[i]);
                std::cout << io::write_form(models::sphere_prescribe_residues(d));
                return;
            }
            const auto garden = load_garden(garden_path);
            std::vector<ExactComplex> exact(static_cast<std::size_t>(garden.l()));
            std::vector<bool> seen(exact.size(), false);
            for (std::size_t i = 0; i < divisor.size(); ++i) {
                const auto& name = divisor.names()[i];
                std::optional<int> j = garden.model() == periods::Model::sphere
                                           ? garden.find_component(models::SpherePoint::parse(name))
                                           : garden.find_component(parse_complex(name));
                if (!j) throw DomainError("divisor point '" + name + "' is not a garden component");
                if (seen[*j]) throw DomainError("divisor lists component '" + name + "' twice");
                seen[*j] = true;
                exact[*j] = divisor.coefficients()[i];
            }
            if (garden.model() == periods::Model::sphere) {
                if (!long_targets.empty()) throw ParseError("sphere gardens have no long periods");
                std::cout << io::write_form(periods::prescribe_full_exact(exact, garden));
                return;
            }
            std::vector<Complex> targets;
            for (const auto& t : long_targets) targets.push_back(parse_complex(t));
            if (targets.empty()) targets.assign(static_cast<std::size_t>(garden.m()), Complex(0));
            std::vector<Complex> residues;
            for (const auto& e : exact) residues.push_back(e.to_complex());
            std::cout << io::write_form(periods::prescribe_full(targets, residues, garden));
        };
    });

    // decompose
    auto* de = app.add_subcommand("decompose", "Split a rational form into logarithmic and second-kind parts");
    std::string form_path;
    de->add_option("--form", form_path, "rational form file")->required();
    de->callback([&] {
        action = [&] {
            const auto form = load_form(form_path);
            const auto* r = std::get_if<models::RationalForm>(&form);
            if (!r) throw DomainError("decompose works on sphere forms only");
            const auto parts = models::decompose_kinds(*r);
            std::cout << "log: " << parts.log_part.str() << "\n";
            std::cout << "second: " << parts.second_kind.str() << "\n";
        };
    });

    // periods
    auto* pe = app.add_subcommand("periods", "Long and short period vectors of a form in a garden");
    pe->add_option("--garden", garden_path, "garden file")->required();
    pe->add_option("--form", form_path, "form file")->required();
    pe->callback([&] {
        action = [&] {
            const auto garden = load_garden(garden_path);
            const auto form = load_form(form_path, garden.torus_handle());
            const auto pv = periods::period_vector(form, garden);
            if (format_name == "csv") {
                std::cout << "kind,index,re,im\n";
                auto rows = [](const char* kind, const std::vector<Complex>& v) {
                    for (std::size_t i = 0; i < v.size(); ++i)
                        std::cout << kind << "," << i << "," << format_real(v[i].real(), kDigits) << ","
                                  << format_real(v[i].imag(), kDigits) << "\n";
                };
                rows("long", pv.long_periods);
                rows("short", pv.short_periods);
                return;
            }
            std::cout << "long: " << complex_list(pv.long_periods, " ") << "\n";
            std::cout << "short: " << complex_list(pv.short_periods, " ") << "\n";
        };
    });

    // pluriharm
    auto* ph = app.add_subcommand("pluriharm", "Pluriharmonic pairs");
    ph->require_subcommand(1);
    std::string pair_path, at_text, window_text;
    int res = 11, loops = 30;
    bool normalize = false;

    auto* build = ph->add_subcommand("build", "Pair descriptor from a form");
    build->add_option("--garden", garden_path, "garden file")->required();
    build->add_option("--form", form_path, "form file")->required();
    build->add_flag("--normalize", normalize, "first add mu dz so that the long periods are pure imaginary");
    build->callback([&] {
        action = [&] {
            const auto garden = load_garden(garden_path);
            auto form = load_form(form_path, garden.torus_handle());
            if (normalize) {
                auto n = periods::normalize_pure_imaginary(form, garden);
                if (n.notice) std::cerr << "note: " << *n.notice << "\n";
                form = std::move(n.form);
            }
            std::cout << io::write_pair(pluri::Pair::from_form(form, garden));
        };
    });

    auto* eval = ph->add_subcommand("eval", "Value of h at a point");
    eval->add_option("--pair", pair_path, "pair file")->required();
    eval->add_option("--at", at_text, "point a+bi")->required();
    eval->callback([&] {
        action = [&] {
            const auto pair = io::parse_pair(io::read_file(pair_path));
            const Complex h = pluri::integrate_pair(pair, parse_complex(at_text));
            if (std::abs(h.imag()) <= periods::period_tolerance()) std::cout << format_real(h.real(), kDigits) << "\n";
            else std::cout << fmt(h) << "\n";
        };
    });

    auto* grid = ph->add_subcommand("grid", "CSV samples of h on a window");
    grid->add_option("--pair", pair_path, "pair file")->required();
    grid->add_option("--window", window_text, "x0,x1,y0,y1")->required();
    grid->add_option("--res", res, "samples per axis")->check(CLI::Range(2, 2000));
    grid->callback([&] {
        action = [&] {
            const auto pair = io::parse_pair(io::read_file(pair_path));
            const auto w = parse_window(window_text);
            const double tol = periods::period_tolerance();
            std::cout << "x,y,h\n";
            for (int iy = 0; iy < res; ++iy)
                for (int ix = 0; ix < res; ++ix) {
                    const double x = w[0] + (w[1] - w[0]) * ix / (res - 1);
                    const double y = w[2] + (w[3] - w[2]) * iy / (res - 1);
                    std::string value = "nan";
                    if (pair.garden().distance_to_components({x, y}) >= 2 * pair.garden().margin()) {
                        const Complex h = pluri::integrate_pair(pair, {x, y});
                        if (std::abs(h.imag()) > tol) throw DomainError("h is not real-valued; grid needs a real pair");
                        value = format_real(h.real(), kDigits);
                    }
                    std::cout << format_real(x, kDigits) << "," << format_real(y, kDigits) << "," << value << "\n";
                }
        };
    });

    auto* audit = ph->add_subcommand("audit", "Well-definedness maximum over loops");
    audit->add_option("--pair", pair_path, "pair file")->required();
    audit->add_option("--loops", loops, "number of random loops")->check(CLI::NonNegativeNumber);
    audit->callback([&] {
        action = [&] {
            const auto pair = io::parse_pair(io::read_file(pair_path));
            const auto r = pluri::well_definedness_audit(pair, loops, seed);
            std::cout << "max: " << format_real(r.max_abs, kDigits) << "\n";
            std::cout << "loops: " << r.loops << "\n";
        };
    });

    // dimcount
    auto* dc = app.add_subcommand("dimcount", "Dimension of the pluriharmonic space of a garden");
    dc->add_option("--garden", garden_path, "garden file")->required();
    dc->callback([&] {
        action = [&] {
            const auto garden = load_garden(garden_path);
            std::cout << "dim: " << pluri::pluriharmonic_space_dim(garden) << "\n";
            const auto r = pluri::period_matrix_rank(garden, 2, seed);
            std::cout << "rank: " << r.rank << "\n";
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report("usage", e.what(), 2);
    }

    try {
        action();
    } catch (const ParseError& e) {
        return report("parse", e.what(), 2);
    } catch (const DomainError& e) {
        return report("domain", e.what(), 4);
    } catch (const NumericalError& e) {
        return report("numerical", e.what(), 5);
    } catch (const std::exception& e) {
        return report("internal", e.what(), 5);
    }
    std::cout.flush();
    return code;
}
