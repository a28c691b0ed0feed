#include "residuum/chern/chern.hpp"

#include <cmath>
#include <numbers>

#include "residuum/error.hpp"

namespace residuum::chern {

namespace {

const Complex kTwoPiI(0, 2 * std::numbers::pi);

const ConcreteEdge& edge_record(const ConcreteTransitions& c, const cech::Simplex& e) {
    for (const auto& rec : c.edges)
        if (rec.edge == e) return rec;
    throw DomainError("missing transition record");
}

// log g_e at the triple point of t, continued from the principal branch at the base point.
Complex continued_log(const ConcreteEdge& rec, const cech::Simplex& t, int nodes) {
    const Complex g0 = rec.g(rec.base);
    if (std::abs(g0) == 0 || !std::isfinite(std::abs(g0)))
        throw NumericalError("transition function vanishes or blows up at its base point");
    const auto& path = rec.paths.at(t);
    const Complex drift = integrate_fixed(path, [&](Complex z) { return rec.g.log_derivative(z); }, nodes);
    if (!std::isfinite(std::abs(drift))) throw NumericalError("log-derivative integral is not finite");
    return std::log(g0) + drift;
}

}  // namespace

std::vector<Complex> chern_cocycle_raw(const TransitionData& td, int nodes) {
    validate(td);
    std::vector<Complex> out;
    if (const auto* a = std::get_if<AbstractTransitions>(&td.data)) {
        for (const auto& v : a->integers.values()) out.push_back(v.to_complex());
        return out;
    }
    const auto& c = std::get<ConcreteTransitions>(td.data);
    for (const auto& t : td.nerve.simplices(2)) {
        const Complex lij = continued_log(edge_record(c, {t[0], t[1]}), t, nodes);
        const Complex lik = continued_log(edge_record(c, {t[0], t[2]}), t, nodes);
        const Complex ljk = continued_log(edge_record(c, {t[1], t[2]}), t, nodes);
        out.push_back((lij - lik + ljk) / kTwoPiI);
    }
    return out;
}

cech::Cochain chern_cocycle(const TransitionData& td, int nodes) {
    const auto raw = chern_cocycle_raw(td, nodes);
    cech::Cochain n(td.nerve, 2);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const double r = std::round(raw[i].real());
        if (std::abs(raw[i] - r) >= kWindingResidual)
            throw NumericalError("winding value " + format_complex(raw[i], 6) + " is not within 0.25 of an integer");
        n[i] = ExactComplex(static_cast<long>(r));
    }
    if (td.nerve.count(3) > 0 && !cech::coboundary(td.nerve, n).is_zero())
        throw NumericalError("computed Chern cochain is not a cocycle");
    return n;
}

bool ChernClass::is_zero() const {
    for (const auto& c : coordinates)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

const cech::Nerve& common_nerve(const std::vector<TransitionData>& tds) {
    for (const auto& td : tds)
        if (td.nerve != tds.front().nerve) throw DomainError("transition data live on different nerves");
    return tds.front().nerve;
}

}  // namespace

ChernClass double_delta(const CDivisor& divisor, const std::vector<TransitionData>& transitions) {
    if (transitions.empty()) {
        if (divisor.size() > 0) throw DomainError("no transition data for the divisor components");
        return {};
    }
    const auto& nerve = common_nerve(transitions);
    cech::Cochain total(nerve, 2);
    for (std::size_t i = 0; i < divisor.size(); ++i) {
        const TransitionData* td = nullptr;
        for (const auto& t : transitions)
            if (t.component == divisor.names()[i]) td = &t;
        if (!td) throw DomainError("no transition data for component '" + divisor.names()[i] + "'");
        if (divisor.coefficients()[i].is_zero()) continue;
        total += divisor.coefficients()[i] * chern_cocycle(*td);
    }
    const cech::SecondCohomology h(nerve);
    ChernClass out{total, h.coordinates(total), h.coboundary_witness(total)};
    return out;
}

bool has_property_h(const HodgeRecord& r) { return r.b1 == r.d_omega0 + r.h01; }

bool is_consistent(const HodgeRecord& r) {
    return r.b1 >= 0 && r.d_omega0 >= 0 && r.h01 >= 0 && r.h2_betti >= 0 && r.b1 <= r.d_omega0 + r.h01;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::feasible: return "feasible";
        case Verdict::infeasible: return "infeasible";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

Feasibility residue_feasible(const CDivisor& divisor, const std::vector<TransitionData>& transitions,
                             const HodgeRecord& hodge) {
    ChernClass c = double_delta(divisor, transitions);
    Verdict v = Verdict::inconclusive;
    if (!c.is_zero()) v = Verdict::infeasible;
    else if (has_property_h(hodge)) v = Verdict::feasible;
    return {v, std::move(c)};
}

int kernel_dimension(const cech::Nerve& nerve, const std::vector<cech::Cochain>& cocycles) {
    if (cocycles.empty()) return 0;
    const cech::SecondCohomology h(nerve);
    std::vector<std::vector<ExactComplex>> columns;
    for (const auto& c : cocycles) columns.push_back(h.coordinates(c));
    if (h.dimension() == 0) return static_cast<int>(cocycles.size());
    return static_cast<int>(cocycles.size()) - rank(ExactMatrix::from_columns(columns, h.dimension()));
}

int kernel_dimension(const std::vector<TransitionData>& transitions) {
    if (transitions.empty()) return 0;
    const auto& nerve = common_nerve(transitions);
    std::vector<cech::Cochain> cocycles;
    for (const auto& td : transitions) cocycles.push_back(chern_cocycle(td));
    return kernel_dimension(nerve, cocycles);
}

}  // namespace residuum::chern
