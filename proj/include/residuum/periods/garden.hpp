#pragma once

#include <optional>
#include <string>
#include <vector>

#include "residuum/models/elliptic.hpp"
#include "residuum/quadrature.hpp"

namespace residuum::periods {

enum class Model { sphere, torus };

/// A divisor component: a point of the model. On the sphere the exact point is kept.
struct Component {
    std::string name;
    std::optional<models::SpherePoint> sphere_point;  // sphere only
    Complex z;                                         // finite position (unused at infinity)

    bool at_infinity() const { return sphere_point && sphere_point->is_infinity(); }
};

inline constexpr double kDefaultMargin = 1e-3;

/// Model, ordered components, loop basis (empty on the sphere; two segments on the torus),
/// basepoint and one small circle per component.
class Garden {
public:
    /// Components may include infinity. Basepoint defaults to a point far from all components.
    static Garden sphere(std::vector<models::SpherePoint> points, std::optional<Complex> basepoint = std::nullopt);
    /// Loops z0 -> z0+1 and z0 -> z0+tau with z0 chosen on a grid to maximize pole clearance,
    /// unless `loop_base` is given.
    static Garden torus(models::TorusHandle torus, std::vector<Complex> points,
                        std::optional<Complex> loop_base = std::nullopt);

    Model model() const { return model_; }
    const models::TorusHandle& torus_handle() const { return torus_; }
    const std::vector<Component>& components() const { return components_; }
    int l() const { return static_cast<int>(components_.size()); }
    /// First Betti number of the model.
    int m() const { return static_cast<int>(loops_.size()); }
    const std::vector<LoopPath>& loops() const { return loops_; }
    const std::vector<LoopPath>& small_circles() const { return circles_; }
    Complex basepoint() const { return basepoint_; }
    double margin() const { return margin_; }

    /// Replaces the loop basis; each loop must be closed (mod the lattice on the torus) and keep the margin.
    void set_loops(std::vector<LoopPath> loops);
    void set_basepoint(Complex p);

    /// Index of the component at p, if any.
    std::optional<int> find_component(Complex p) const;
    std::optional<int> find_component(const models::SpherePoint& p) const;
    /// Distance from z to the nearest finite component (with lattice translates on the torus).
    double distance_to_components(Complex z) const;
    /// Distance from a path to the nearest component.
    double clearance(const LoopPath& path) const;

    friend bool operator==(const Garden& a, const Garden& b);

private:
    Garden() = default;
    void build_circles();
    Model model_ = Model::sphere;
    models::TorusHandle torus_;
    std::vector<Component> components_;
    std::vector<LoopPath> loops_;
    std::vector<LoopPath> circles_;
    Complex basepoint_;
    double margin_ = kDefaultMargin;
};

}  // namespace residuum::periods
