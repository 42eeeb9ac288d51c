#include "core/shape.hpp"

#include <limits>
#include <sstream>

#include "core/errors.hpp"

namespace rank2sep {

namespace {

// Amplitude tensors above this size are outside the intended scale.
constexpr std::size_t kMaxTotalDim = std::size_t{1} << 24;

}  // namespace

PartyShape::PartyShape(int num_parties, int local_dim)
    : num_parties(num_parties), local_dim(local_dim) {
  if (num_parties < 2) {
    fail(ErrorCode::InvalidArgument, "num_parties must be >= 2");
  }
  if (local_dim < 2) {
    fail(ErrorCode::InvalidArgument, "local_dim must be >= 2");
  }
  std::size_t total = 1;
  for (int k = 0; k < num_parties; ++k) {
    if (total > kMaxTotalDim / static_cast<std::size_t>(local_dim)) {
      fail(ErrorCode::InvalidArgument,
           "total dimension N^M exceeds supported range");
    }
    total *= static_cast<std::size_t>(local_dim);
  }
  total_dim_ = total;
}

std::size_t flat_index(const PartyShape& shape, const MultiIndex& idx) {
  if (static_cast<int>(idx.size()) != shape.num_parties) {
    fail(ErrorCode::ShapeMismatch, "multi-index length != num_parties");
  }
  std::size_t flat = 0;
  for (int k = 0; k < shape.num_parties; ++k) {
    if (idx[k] < 0 || idx[k] >= shape.local_dim) {
      fail(ErrorCode::InvalidArgument, "multi-index entry out of range");
    }
    flat = flat * static_cast<std::size_t>(shape.local_dim) +
           static_cast<std::size_t>(idx[k]);
  }
  return flat;
}

MultiIndex unflatten(const PartyShape& shape, std::size_t flat) {
  if (flat >= shape.total_dim()) {
    fail(ErrorCode::InvalidArgument, "flat index out of range");
  }
  MultiIndex idx(static_cast<std::size_t>(shape.num_parties));
  for (int k = shape.num_parties - 1; k >= 0; --k) {
    idx[static_cast<std::size_t>(k)] =
        static_cast<int>(flat % static_cast<std::size_t>(shape.local_dim));
    flat /= static_cast<std::size_t>(shape.local_dim);
  }
  return idx;
}

Bipartition Bipartition::from_positions(const PartyShape& shape,
                                        const std::vector<int>& t_positions) {
  if (shape.num_parties > 31) {
    fail(ErrorCode::InvalidArgument, "too many parties for bipartition mask");
  }
  std::uint32_t mask = 0;
  for (int pos : t_positions) {
    if (pos < 0 || pos >= shape.num_parties) {
      fail(ErrorCode::InvalidArgument, "bipartition position out of range");
    }
    mask |= (std::uint32_t{1} << pos);
  }
  const std::uint32_t full =
      (std::uint32_t{1} << shape.num_parties) - 1;
  if (mask == 0 || mask == full) {
    fail(ErrorCode::InvalidArgument,
         "bipartition T must be a nonempty strict subset of the positions");
  }
  return Bipartition(mask, shape.num_parties);
}

Bipartition Bipartition::canonical() const {
  if (is_canonical()) return *this;
  const std::uint32_t full = (std::uint32_t{1} << num_parties_) - 1;
  return Bipartition(full & ~mask_, num_parties_);
}

std::vector<int> Bipartition::t_positions() const {
  std::vector<int> out;
  for (int k = 0; k < num_parties_; ++k) {
    if (mask_ & (std::uint32_t{1} << k)) out.push_back(k);
  }
  return out;
}

std::vector<int> Bipartition::s_positions() const {
  std::vector<int> out;
  for (int k = 0; k < num_parties_; ++k) {
    if (!(mask_ & (std::uint32_t{1} << k))) out.push_back(k);
  }
  return out;
}

int Bipartition::t_size() const {
  int n = 0;
  for (int k = 0; k < num_parties_; ++k) {
    if (mask_ & (std::uint32_t{1} << k)) ++n;
  }
  return n;
}

std::string Bipartition::label() const {
  std::ostringstream os;
  os << "T={";
  bool first = true;
  for (int pos : t_positions()) {
    if (!first) os << ",";
    os << pos;
    first = false;
  }
  os << "}";
  return os.str();
}

std::vector<Bipartition> canonical_bipartitions(const PartyShape& shape) {
  // Canonical cuts keep position 0 in S, so T runs over the nonempty
  // subsets of {1,..,M-1}: even masks from 2 to full-1.
  std::vector<Bipartition> cuts;
  const std::uint32_t full = (std::uint32_t{1} << shape.num_parties) - 1;
  for (std::uint32_t mask = 2; mask < full; mask += 2) {
    std::vector<int> t;
    for (int k = 1; k < shape.num_parties; ++k) {
      if (mask & (std::uint32_t{1} << k)) t.push_back(k);
    }
    cuts.push_back(Bipartition::from_positions(shape, t));
  }
  return cuts;
}

CutIndexer::CutIndexer(const PartyShape& shape, const Bipartition& cut)
    : local_dim_(shape.local_dim) {
  if (cut.num_parties() != shape.num_parties) {
    fail(ErrorCode::ShapeMismatch, "bipartition does not match shape");
  }
  std::vector<std::size_t> strides(
      static_cast<std::size_t>(shape.num_parties));
  std::size_t s = 1;
  for (int k = shape.num_parties - 1; k >= 0; --k) {
    strides[static_cast<std::size_t>(k)] = s;
    s *= static_cast<std::size_t>(shape.local_dim);
  }
  for (int pos : cut.t_positions()) {
    t_strides_.push_back(strides[static_cast<std::size_t>(pos)]);
    rows_ *= static_cast<std::size_t>(shape.local_dim);
  }
  for (int pos : cut.s_positions()) {
    s_strides_.push_back(strides[static_cast<std::size_t>(pos)]);
    cols_ *= static_cast<std::size_t>(shape.local_dim);
  }
}

std::size_t CutIndexer::merge(std::size_t row, std::size_t col) const {
  std::size_t flat = 0;
  const auto n = static_cast<std::size_t>(local_dim_);
  for (std::size_t k = t_strides_.size(); k-- > 0;) {
    flat += (row % n) * t_strides_[k];
    row /= n;
  }
  for (std::size_t k = s_strides_.size(); k-- > 0;) {
    flat += (col % n) * s_strides_[k];
    col /= n;
  }
  return flat;
}

std::pair<std::size_t, std::size_t> CutIndexer::split(std::size_t flat) const {
  const auto n = static_cast<std::size_t>(local_dim_);
  std::size_t row = 0;
  for (std::size_t stride : t_strides_) {
    row = row * n + (flat / stride) % n;
  }
  std::size_t col = 0;
  for (std::size_t stride : s_strides_) {
    col = col * n + (flat / stride) % n;
  }
  return {row, col};
}

}  // namespace rank2sep
