#include "residuum/pluriharmonic/pair.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/SVD>

#include "residuum/chern/chern.hpp"
#include "residuum/error.hpp"

namespace residuum::pluri {

using models::EllipticForm;
using models::RationalForm;
using periods::Model;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

std::vector<Complex> conj_all(std::vector<Complex> v) {
    for (auto& x : v) x = std::conj(x);
    return v;
}

double max_sum_defect(const periods::PeriodVector& a, const periods::PeriodVector& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.long_periods.size(); ++i)
        d = std::max(d, std::abs(a.long_periods[i] + b.long_periods[i]));
    for (std::size_t i = 0; i < a.short_periods.size(); ++i)
        d = std::max(d, std::abs(a.short_periods[i] + b.short_periods[i]));
    return d;
}

}  // namespace

double unit_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

periods::PeriodVector period_vector(const AntiMeromorphicForm& f, const Garden& garden) {
    auto p = periods::period_vector(f.conjugate_of, garden);
    return {conj_all(std::move(p.long_periods)), conj_all(std::move(p.short_periods))};
}

AntiMeromorphicForm conjugate(const MeromorphicForm& form, const Garden& garden) {
    periods::check_form_in_garden(form, garden);
    std::vector<Complex> residues;
    for (int j = 0; j < garden.l(); ++j) residues.push_back(std::conj(periods::component_residue(form, garden, j)));
    if (garden.model() == Model::sphere) {
        // exact residues: conj of an exact value is exact, so the zero sum survives exactly
        const auto& r = std::get<RationalForm>(form);
        std::vector<ExactComplex> exact;
        for (const auto& c : garden.components()) exact.push_back(r.residue_at(*c.sphere_point).conj());
        return {periods::prescribe_full_exact(exact, garden)};
    }
    std::vector<Complex> target = periods::long_period_vector(form, garden);
    for (auto& b : target) b = -std::conj(b);
    return {periods::prescribe_full(target, residues, garden)};
}

Pair Pair::make(MeromorphicForm phi, AntiMeromorphicForm phi_hat, Garden garden) {
    Pair p(std::move(phi), std::move(phi_hat), std::move(garden));
    const double d = p.invariant_defect();
    if (!(d < periods::period_tolerance()))
        throw DomainError("not a pair: period vectors fail to negate (defect " + format_real(d, 3) + ")");
    return p;
}

Pair Pair::unchecked(MeromorphicForm phi, AntiMeromorphicForm phi_hat, Garden garden) {
    return Pair(std::move(phi), std::move(phi_hat), std::move(garden));
}

Pair Pair::from_form(const MeromorphicForm& phi, const Garden& garden) {
    return make(phi, conjugate(phi, garden), garden);
}

double Pair::invariant_defect() const {
    return max_sum_defect(periods::period_vector(phi_, garden_), period_vector(phi_hat_, garden_));
}

Complex Pair::integral(const LoopPath& path) const {
    const double margin = garden_.margin();
    return periods::contour_integral(phi_, path, margin) + phi_hat_.integral(path, margin);
}

LoopPath path_between(const Garden& garden, Complex from, Complex to) {
    const double margin = garden.margin();
    if (garden.distance_to_components(from) < 2 * margin || garden.distance_to_components(to) < 2 * margin)
        throw DomainError("path endpoint lies within the pole margin");
    if (from == to) return LoopPath({Segment{from, to}});

    std::vector<Complex> poles;
    double sep = kInf;
    const Complex mid = 0.5 * (from + to);
    const double reach = 0.5 * std::abs(to - from) + 1.0;
    if (garden.model() == Model::sphere) {
        for (const auto& c : garden.components())
            if (!c.at_infinity()) poles.push_back(c.z);
    } else {
        for (const auto& c : garden.components())
            for (const auto& w : garden.torus_handle()->translates_near(c.z, mid, reach)) poles.push_back(w);
        sep = garden.torus_handle()->shortest_period();
    }
    for (std::size_t i = 0; i < poles.size(); ++i)
        for (std::size_t j = i + 1; j < poles.size(); ++j) sep = std::min(sep, std::abs(poles[i] - poles[j]));
    const double rho_global = std::min(0.1, 0.25 * sep);

    struct Hit {
        double t_in, t_out;
        Complex pole;
        double rho;
    };
    std::vector<Hit> hits;
    const Complex dir = to - from;
    const double len = std::abs(dir);
    for (const auto& p : poles) {
        const double rho = std::min({rho_global, 0.5 * std::abs(p - from), 0.5 * std::abs(p - to)});
        const double t0 = ((p - from) * std::conj(dir)).real() / (len * len);
        if (t0 <= 0 || t0 >= 1) continue;
        const double d = std::abs(p - (from + t0 * dir));
        if (d >= rho) continue;
        const double half = std::sqrt(rho * rho - d * d) / len;
        hits.push_back({t0 - half, t0 + half, p, rho});
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.t_in < b.t_in; });

    std::vector<PathPiece> pieces;
    Complex cur = from;
    for (const auto& h : hits) {
        const Complex entry = from + h.t_in * dir, exit = from + h.t_out * dir;
        pieces.emplace_back(Segment{cur, entry});
        const double a = std::arg(entry - h.pole);
        double delta = std::remainder(std::arg(exit - h.pole) - a, 2 * kPi);
        if (std::abs(std::abs(delta) - kPi) < 1e-12) delta = kPi;
        const Arc arc{h.pole, h.rho, a, a + delta};
        pieces.emplace_back(arc);
        cur = piece_point(arc, 1.0);
    }
    pieces.emplace_back(Segment{cur, to});
    return LoopPath(std::move(pieces));
}

Complex integrate_pair(const Pair& pair, Complex z, const std::optional<LoopPath>& path) {
    if (path) {
        if (std::abs(path->start() - pair.garden().basepoint()) > 1e-12 || std::abs(path->end() - z) > 1e-12)
            throw DomainError("path must run from the basepoint to z");
        return pair.integral(*path);
    }
    return pair.integral(path_between(pair.garden(), pair.garden().basepoint(), z));
}

double integrate_pair_real(const Pair& pair, Complex z, const std::optional<LoopPath>& path) {
    const Complex h = integrate_pair(pair, z, path);
    if (std::abs(h.imag()) > periods::period_tolerance())
        throw DomainError("pair is complex-valued here (|Im h| = " + format_real(std::abs(h.imag()), 3) + ")");
    return h.real();
}

AuditReport well_definedness_audit(const Pair& pair, int n_random_loops, std::uint64_t seed) {
    AuditReport report;
    auto record = [&](const LoopPath& loop) {
        const double v = std::abs(pair.integral(loop));
        report.values.push_back(v);
        report.max_abs = std::max(report.max_abs, v);
        ++report.loops;
    };
    const Garden& g = pair.garden();
    for (const auto& loop : g.loops()) record(loop);
    for (const auto& loop : g.small_circles()) record(loop);

    std::mt19937_64 rng(seed);
    auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit_uniform(rng()); };
    constexpr double kClearance = 0.05;
    double extent = 1.0;
    for (const auto& c : g.components())
        if (!c.at_infinity()) extent = std::max(extent, std::abs(c.z) + 1.0);

    for (int i = 0; i < n_random_loops; ++i) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 10000) throw NumericalError("could not place a random audit loop");
            LoopPath loop;
            if (g.model() == Model::sphere) {
                const Complex c(uniform(-extent, extent), uniform(-extent, extent));
                loop = LoopPath::circle(c, uniform(0.05, extent));
            } else {
                const Complex tau = g.torus_handle()->tau();
                const Complex start = uniform(0, 1) + uniform(0, 1) * tau;
                if (i % 2 == 0) {
                    loop = LoopPath::circle(start, uniform(0.05, 0.45 * g.torus_handle()->shortest_period()));
                } else {
                    const long a = static_cast<long>(rng() % 5) - 2, b = static_cast<long>(rng() % 5) - 2;
                    if (a == 0 && b == 0) continue;
                    loop = LoopPath::segment(start, start + static_cast<double>(a) + static_cast<double>(b) * tau);
                }
            }
            if (g.clearance(loop) < kClearance) continue;
            record(loop);
            break;
        }
    }
    return report;
}

Complex field_value(const PluriharmonicField& field, Complex z) {
    if (const auto* f = std::get_if<PairField>(&field)) {
        const LoopPath path = path_between(f->pair.garden(), f->basepoint, z);
        return f->pair.integral(path);
    }
    const auto& s = std::get<SphereLogField>(field);
    Complex v = s.constant;
    for (const auto& [p, r] : s.terms) v += r.to_complex() * std::log(std::norm(z - p.to_complex()));
    return v;
}

double field_pole_distance(const PluriharmonicField& field, Complex z) {
    if (const auto* f = std::get_if<PairField>(&field)) return f->pair.garden().distance_to_components(z);
    double d = kInf;
    for (const auto& [p, r] : std::get<SphereLogField>(field).terms) d = std::min(d, std::abs(z - p.to_complex()));
    return d;
}

LaplacianReport laplacian_check(const PluriharmonicField& field, const std::vector<Complex>& samples, double step) {
    if (!(step > 0)) throw DomainError("Laplacian step must be positive");
    LaplacianReport rep;
    const Complex offsets[4] = {{step, 0}, {-step, 0}, {0, step}, {0, -step}};
    for (const auto& z : samples) {
        if (field_pole_distance(field, z) <= 10 * step) throw DomainError("Laplacian sample is within 10 steps of a pole");
        Complex sum = 0;
        if (const auto* f = std::get_if<PairField>(&field)) {
            for (const auto& o : offsets) sum += f->pair.integral(LoopPath::segment(z, z + o));
        } else {
            const Complex h0 = field_value(field, z);
            for (const auto& o : offsets) sum += field_value(field, z + o) - h0;
        }
        const double r = std::abs(sum) / (step * step);
        rep.residuals.push_back(r);
        rep.max_residual = std::max(rep.max_residual, r);
    }
    return rep;
}

bool pairs_equivalent(const Pair& a, const Pair& b) {
    if (!(a.garden() == b.garden())) throw DomainError("pairs belong to different gardens");
    const auto pa = periods::period_vector(a.phi(), a.garden());
    const auto pb = periods::period_vector(b.phi(), b.garden());
    const double tol = periods::period_tolerance();
    for (std::size_t i = 0; i < pa.long_periods.size(); ++i)
        if (std::abs(pa.long_periods[i] - pb.long_periods[i]) >= tol) return false;
    for (std::size_t i = 0; i < pa.short_periods.size(); ++i)
        if (std::abs(pa.short_periods[i] - pb.short_periods[i]) >= tol) return false;
    return true;
}

int pluriharmonic_space_dim(const Garden& garden) {
    std::vector<chern::TransitionData> tds;
    if (garden.model() == Model::sphere) {
        try {
            for (const auto& c : garden.components()) tds.push_back(chern::sphere_point_transitions(*c.sphere_point, c.name));
        } catch (const DomainError&) {
            tds.clear();  // a point sits in a cover overlap; every point has the same class anyway
        }
    }
    int k = 0;
    if (!tds.empty() || garden.l() == 0) {
        k = chern::kernel_dimension(tds);
    } else {
        const cech::Nerve nerve = cech::standard_good_nerve(garden.model() == Model::sphere ? "sphere" : "torus");
        const cech::Cochain point = chern::abstract_point_class(nerve);
        k = chern::kernel_dimension(nerve, std::vector<cech::Cochain>(static_cast<std::size_t>(garden.l()), point));
    }
    return k + garden.m();
}

RankReport period_matrix_rank(const Garden& garden, int extra_random, std::uint64_t seed) {
    std::vector<MeromorphicForm> forms;
    const auto& comps = garden.components();
    if (garden.model() == Model::sphere) {
        for (std::size_t j = 1; j < comps.size(); ++j)
            forms.emplace_back(models::sphere_third_kind(*comps[0].sphere_point, *comps[j].sphere_point));
    } else {
        const auto& t = garden.torus_handle();
        for (std::size_t j = 1; j < comps.size(); ++j) forms.emplace_back(models::torus_third_kind(t, comps[0].z, comps[j].z));
        if (!comps.empty()) {
            forms.emplace_back(EllipticForm(t, 1.0));
            forms.emplace_back(models::torus_second_kind(t, comps[0].z, 2));
        }
    }
    if (!forms.empty()) {
        std::mt19937_64 rng(seed);
        const std::size_t base = forms.size();
        for (int r = 0; r < extra_random; ++r) {
            MeromorphicForm acc = models::scale(0, forms[0]);
            for (std::size_t j = 0; j < base; ++j) {
                // dyadic coefficients keep sphere forms exact and small
                const Complex c(std::round(8 * (2 * unit_uniform(rng()) - 1)) / 8.0,
                                std::round(8 * (2 * unit_uniform(rng()) - 1)) / 8.0);
                acc = models::add(acc, models::scale(c, forms[j]));
            }
            forms.push_back(std::move(acc));
        }
    }
    RankReport rep;
    rep.rows = static_cast<int>(forms.size());
    if (forms.empty()) return rep;
    const int cols = garden.m() + garden.l();
    Eigen::MatrixXcd m(rep.rows, cols);
    for (int i = 0; i < rep.rows; ++i) {
        const Pair p = Pair::from_form(forms[static_cast<std::size_t>(i)], garden);
        const auto pv = periods::period_vector(p.phi(), garden);
        int c = 0;
        for (const auto& v : pv.long_periods) m(i, c++) = v;
        for (const auto& v : pv.short_periods) m(i, c++) = v;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        const double s = svd.singularValues()(i);
        rep.singular_values.push_back(s);
        if (s > 1e-4) ++rep.rank;
        else if (s >= 1e-8) throw NumericalError("numerical rank is ambiguous (singular value " + format_real(s, 3) + ")");
    }
    return rep;
}

MeromorphicForm kappa(const PluriharmonicField& field) {
    if (const auto* f = std::get_if<PairField>(&field)) return f->pair.phi();
    RationalForm out;
    for (const auto& [p, r] : std::get<SphereLogField>(field).terms) out += RationalForm::pole_term(r, p, 1);
    return out;
}

PluriharmonicField kappa_inverse(const MeromorphicForm& form, const Garden& garden) {
    return PairField{Pair::from_form(form, garden), garden.basepoint()};
}

}  // namespace residuum::pluri
