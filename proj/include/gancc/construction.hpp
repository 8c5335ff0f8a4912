#ifndef GANCC_CONSTRUCTION_HPP
#define GANCC_CONSTRUCTION_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "gancc/base_matrix.hpp"
#include "gancc/rng.hpp"

namespace gancc {

// Directed inter-user connectivity for one cooperation round.
// (u, v) present means v decodes u's transmissions.
struct Topology {
    int m = 0;
    std::set<std::pair<int, int>> links; // 1-indexed users, u != v

    bool has(int u, int v) const { return links.count({u, v}) != 0; }
};

// Which packets relays may combine: sources only (frequency/code division)
// or sources plus earlier relay packets (time division).
enum class SelectionMode { LDGM, LT };

// Packet indices a user holds, 1-indexed in [1, 2m]; always contains the
// owner's own source packet.
struct RetrievalSet {
    int owner = 0;
    std::set<int> packets;
};

struct CheckSelection {
    int relay = 0;               // 1-indexed
    std::set<int> selected;      // subset of the retrieval set
};

// Per-packet count of known check participations, one local view per user.
using ProtectionCounts = std::map<int, int>;

// Bitmap header carried by a relay packet: bit j (1-indexed, LSB = packet
// 1) set iff packet j participates in the check. The relay's own parity
// index is implicit from the time slot and excluded from the mask.
using BitmapHeader = std::uint64_t;

// Each directed link is independently up iff its instantaneous Rayleigh
// SNR exceeds gamma_th: P(link) = exp(-gamma_th / inter_snr).
Topology sample_topology(int m, double inter_snr, double gamma_th, Rng& rng);

// Fixed-erasure alternative for controlled tests: each link up with
// probability 1 - epsilon.
Topology sample_topology_bernoulli(int m, double epsilon, Rng& rng);

std::vector<RetrievalSet> build_retrieval_sets(const Topology& topo, SelectionMode mode);

CheckSelection select_random(const RetrievalSet& rs, int d, Rng& rng);

// Least-protected-first selection; ties uniform at random. Counts are the
// selecting user's local view and are not modified here.
CheckSelection select_cwc(const RetrievalSet& rs, const ProtectionCounts& counts, int d, Rng& rng);

BitmapHeader header_encode(const CheckSelection& sel, int m);
std::set<int> header_decode(BitmapHeader mask, int m);

// Row r gets the selected packets of relay r+1 plus the self-parity column.
BaseMatrix assemble_base(const std::vector<CheckSelection>& selections, int m);

// One full construction round under the given selection rule. CWC and
// DPEG visibility follows the topology: user v learns relay u's header iff
// link u -> v. Returns the per-relay selections (base = assemble_base).
enum class SelectionRule { Random, Cwc, Dpeg };
std::vector<CheckSelection> run_selection_round(const Topology& topo, SelectionMode mode,
                                                SelectionRule rule, int degree, Rng& rng);

// Distributed progressive edge growth over the relays' local views.
// check_degree[j] is clamped to |R(j+1)|.
BaseMatrix dpeg_construct(int m, const Topology& topo, const std::vector<RetrievalSet>& sets,
                          const std::vector<int>& check_degree, Rng& rng);

} // namespace gancc

#endif
