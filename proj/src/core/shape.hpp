#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rank2sep {

/// M parties, each with the same local dimension N.
///
/// Flat indexing over amplitude tensors is row-major with party 0 slowest:
/// flat = ((i_0 * N + i_1) * N + i_2) * N + ...  All coefficient bookkeeping
/// in the criterion module relies on this order.
struct PartyShape {
  int num_parties = 0;  // M >= 2
  int local_dim = 0;    // N >= 2

  PartyShape() = default;
  PartyShape(int num_parties, int local_dim);

  std::size_t total_dim() const { return total_dim_; }
  bool operator==(const PartyShape& other) const {
    return num_parties == other.num_parties && local_dim == other.local_dim;
  }

 private:
  std::size_t total_dim_ = 0;
};

using MultiIndex = std::vector<int>;

std::size_t flat_index(const PartyShape& shape, const MultiIndex& idx);
MultiIndex unflatten(const PartyShape& shape, std::size_t flat);

/// A split of the party positions into a nonempty strict subset T and its
/// complement S. The canonical representative of {T, S} puts position 0 in S;
/// there are exactly 2^(M-1) - 1 canonical bipartitions.
class Bipartition {
 public:
  static Bipartition from_positions(const PartyShape& shape,
                                    const std::vector<int>& t_positions);

  int num_parties() const { return num_parties_; }
  std::uint32_t t_mask() const { return mask_; }
  bool is_canonical() const { return (mask_ & 1u) == 0; }
  Bipartition canonical() const;

  std::vector<int> t_positions() const;
  std::vector<int> s_positions() const;
  int t_size() const;
  std::string label() const;  // e.g. "T={1,2}"

  bool operator==(const Bipartition& other) const {
    return mask_ == other.mask_ && num_parties_ == other.num_parties_;
  }

 private:
  Bipartition(std::uint32_t mask, int num_parties)
      : mask_(mask), num_parties_(num_parties) {}
  std::uint32_t mask_ = 0;
  int num_parties_ = 0;
};

/// All canonical bipartitions in a fixed deterministic order
/// (ascending T mask over positions 1..M-1).
std::vector<Bipartition> canonical_bipartitions(const PartyShape& shape);

/// Row/column bookkeeping for one bipartition of a fixed shape. Rows run over
/// the T positions, columns over the S positions; within each group the
/// lowest party position is slowest, matching the global flat order.
class CutIndexer {
 public:
  CutIndexer(const PartyShape& shape, const Bipartition& cut);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::size_t merge(std::size_t row, std::size_t col) const;
  std::pair<std::size_t, std::size_t> split(std::size_t flat) const;

 private:
  int local_dim_;
  std::size_t rows_ = 1;
  std::size_t cols_ = 1;
  // Flat strides of the T (resp. S) positions, slowest first.
  std::vector<std::size_t> t_strides_;
  std::vector<std::size_t> s_strides_;
};

}  // namespace rank2sep
