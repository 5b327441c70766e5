#pragma once

#include "cesaro/operators.hpp"

#include <cstdint>
#include <string>

namespace cesaro {

// Built-in test matrices.

/// [[-1, 2], [0, -1]]: power bounded in Cesàro mean but not in norm
/// (||T^n|| grows like 2n while sup_n ||M^1(n)|| is finite).
CMatrix assani_matrix();

/// [[1, 1], [0, 1]]: the 2x2 Jordan block at 1; not Cesàro bounded.
CMatrix jordan1_matrix();

/// diag(1, 0.5): power bounded with peripheral spectrum {1}.
CMatrix diag_peripheral_matrix();

/// [[0, 1], [-1, 0]]: rotation by pi/2, peripheral spectrum {i, -i}.
CMatrix rotation_matrix();

/// diag(1, -0.9, 0.3i).
CMatrix diag3_matrix();

/// Deterministic pseudo-random dim x dim matrix with entries in the unit
/// square; the same (dim, seed) always yields the same matrix.
CMatrix random_matrix(std::int64_t dim, std::uint64_t seed);

struct Fixture {
    std::string name;
    CMatrix matrix;
};

/// Resolve a fixture by path or by name: an existing .json file wins, then
/// <dir>/<name>.json where dir is $CESARO_LAB_FIXTURES (default
/// "fixtures"), then the built-ins (assani, jordan1, diag_peripheral,
/// rotation, diag3, random<d> for 1 <= d <= 16).
Fixture resolve_fixture(const std::string& name_or_path);

} // namespace cesaro
