#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "residuum/cech/cochain.hpp"
#include "residuum/chern/chern.hpp"
#include "residuum/pluriharmonic/pair.hpp"

namespace residuum::io {

/// Reads a whole file; ParseError if it cannot be opened.
std::string read_file(const std::string& path);

/// One simplex per line (`0,1,2`), `#` comments, optional header line `maximal`.
/// `force_maximal` auto-closes regardless of the header.
cech::Nerve parse_nerve(std::string_view text, bool force_maximal = false);

/// `degree k` then `i,j,... : value` lines; unlisted simplices are zero.
cech::Cochain parse_cochain(std::string_view text, const cech::Nerve& nerve);

/// `name : value` lines with exact values.
chern::CDivisor parse_divisor(std::string_view text);

/// `b1 = 4`, `d_omega0 = 2`, `h01 = 2`, optional `h2 = 1`.
chern::HodgeRecord parse_hodge(std::string_view text);

/// Transition file. A header `nerve sphere|torus` (or `simplex i,j,..` lines with optional
/// `maximal`) is followed by blocks starting with `component <name>`. Inside a block:
///   abstract:  `triangle i,j,k : n`
///   concrete:  `edge i,j : g = N / D ; base = a`, `path i,j | i,j,k : z0 ; z1 ; ...`,
///              `triple i,j,k : x`
///   shortcuts (sphere cover): `point <sphere point>`, `trivial`
/// Polynomials N, D are comma-separated coefficients, constant term first; the `/` separating them
/// must be surrounded by spaces.
std::vector<chern::TransitionData> parse_transitions(std::string_view text);

/// Rational form `N / D` on one line, or elliptic lines `dz : c`, `zeta : p , r`,
/// `pole : p , order , c` (optionally with `tau = ...`, `cutoff = N`).
models::MeromorphicForm parse_form(std::string_view text, const models::TorusHandle& torus = nullptr);
std::string write_form(const models::MeromorphicForm& form);

/// `model sphere|torus`, `tau = ..`, `cutoff = N`, `component <point>` lines, optional
/// `basepoint = z`, `loop_base = z0`, and `loop : z0 ; z1 ; ...` overrides (torus).
periods::Garden parse_garden(std::string_view text);
std::string write_garden(const periods::Garden& garden);

/// Sections `[garden]`, `[phi]`, `[psi]`; the pair is re-validated on load.
pluri::Pair parse_pair(std::string_view text);
std::string write_pair(const pluri::Pair& pair);

/// Splits text into trimmed, comment-free lines with 1-based numbers; blank lines dropped.
struct Line {
    int number;
    std::string text;
};
std::vector<Line> logical_lines(std::string_view text);

/// Comma-separated exact coefficients (constant term first); `0` alone is the zero polynomial.
Polynomial parse_polynomial(std::string_view text, int line = 0);

}  // namespace residuum::io
