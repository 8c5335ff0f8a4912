#ifndef GANCC_GIRTH_HPP
#define GANCC_GIRTH_HPP

#include <optional>

#include "gancc/base_matrix.hpp"
#include "gancc/parity_matrix.hpp"

namespace gancc {

// Exact shortest-cycle length of the Tanner graph (always even, >= 4),
// nullopt if acyclic. BFS from every variable node.
std::optional<int> girth(const ParityMatrix& h);

// min(girth, cap): any value >= cap is reported as cap, which also covers
// the acyclic case. Cheaper than the exact search for large graphs.
int girth_capped(const ParityMatrix& h, int cap);

// true iff the graph has no cycle shorter than g
bool girth_at_least(const ParityMatrix& h, int g);

// The circulant-lift criterion: girth >= 6 iff for every pair of rows
// i1 < i2 and columns j1 < j2 with all four base entries nonzero,
// p(i1,j2) - p(i1,j1) != p(i2,j2) - p(i2,j1)  (mod N).
// The self-parity diagonal contributes offset 0.
bool girth6_condition(const BaseMatrix& base, const OffsetTable& offsets, int n);

} // namespace gancc

#endif
