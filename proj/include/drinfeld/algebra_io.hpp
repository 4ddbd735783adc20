#pragma once

// JSON round-trips for structure constants and subspaces.
//
// Layout: a Lie algebra serializes as {dim, field, labels, triples} where
// triples lists the nonzero structure constants as [i, j, k, value] with
// i < j (the antisymmetric partner is implied); a subspace serializes as
// {ambient_dim, basis} with basis given column-by-column.

#include <string>

#include "drinfeld/algebra.hpp"

namespace drinfeld {

std::string lie_algebra_to_json(const LieAlgebra& a, int indent = -1);
LieAlgebra lie_algebra_from_json(const std::string& text);

std::string subspace_to_json(const Subspace& s, int indent = -1);
Subspace subspace_from_json(const std::string& text);

}  // namespace drinfeld
