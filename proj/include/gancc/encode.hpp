#ifndef GANCC_ENCODE_HPP
#define GANCC_ENCODE_HPP

#include <vector>

#include "gancc/base_matrix.hpp"
#include "gancc/bits.hpp"
#include "gancc/gf2.hpp"

namespace gancc {

// Relay packets for the given source packets. Relay r XORs each selected
// packet after a cyclic shift by its offset:
//   x_r[k] = XOR_j  s_j[(k + p_{r,j}) mod N]
// with earlier relay packets allowed as inputs in LT-LDPC mode. For
// EC-LDGM the transmitted stream is the running XOR prefix of x_r, the
// unique stream whose adjacent-difference (zigzag) checks reproduce x_r.
std::vector<BitVec> encode_network(const BaseMatrix& base, const OffsetTable& offsets, int n,
                                   EnsembleKind kind, const std::vector<BitVec>& source_packets);

// Same result obtained by back-substitution over an already lifted matrix.
// Works for any lifting with an identity or zigzag self-parity diagonal,
// including random-permutation lifts.
std::vector<BitVec> encode_from_lifted(const ParityMatrix& lifted, int m, int n,
                                       const std::vector<BitVec>& source_packets);

// Unified network-channel matrix: per-user channel checks (H_i block
// diagonal over the source-packet columns) stacked above the network
// checks. Users without a channel code contribute no rows.
ParityMatrix embed_channel_codes(const ParityMatrix& network, int m, int n,
                                 const std::vector<const ParityMatrix*>& channel_h);

} // namespace gancc

#endif
