#include "smlab/nilpotent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "smlab/errors.hpp"

namespace smlab::nilpotent {

namespace {

/// Total dense-table entries for degrees 0..bound over rank r, with the
/// budget enforced during accumulation.
std::size_t table_entries(int rank, int bound, std::size_t budget) {
  const auto overflow = [&]() -> BudgetError {
    return BudgetError("magnus tables for rank " + std::to_string(rank) +
                       ", degree " + std::to_string(bound) + " exceed budget of " +
                       std::to_string(budget) + " entries");
  };
  std::size_t total = 0;
  std::size_t slice = 1;
  for (int d = 0; d <= bound; ++d) {
    if (slice > budget - total) throw overflow();
    total += slice;
    if (d < bound) {
      if (slice > budget / static_cast<std::size_t>(rank)) throw overflow();
      slice *= static_cast<std::size_t>(rank);
    }
  }
  return total;
}

std::vector<std::vector<BigInt>> compute_slices(const PositiveWord& w, int bound,
                                                int rank, std::size_t budget) {
  table_entries(rank, bound, budget);
  std::vector<std::vector<BigInt>> slices(static_cast<std::size_t>(bound) + 1);
  std::size_t size = 1;
  for (int d = 0; d <= bound; ++d) {
    slices[static_cast<std::size_t>(d)].assign(size, BigInt(0));
    size *= static_cast<std::size_t>(rank);
  }
  slices[0][0] = 1;
  // Appending letter x_l extends each degree-(d-1) monomial m to the
  // degree-d monomial with dense index m*rank + (l-1).  Degrees descend so
  // a letter is not consumed twice within one step.
  for (int letter : w.letters()) {
    if (letter > rank) {
      throw std::invalid_argument("magnus_truncated: letter x_" + std::to_string(letter) +
                                  " outside rank " + std::to_string(rank));
    }
    for (int d = bound; d >= 1; --d) {
      auto& dst = slices[static_cast<std::size_t>(d)];
      const auto& src = slices[static_cast<std::size_t>(d) - 1];
      for (std::size_t m = 0; m < src.size(); ++m) {
        if (src[m] != 0) {
          dst[m * static_cast<std::size_t>(rank) +
              static_cast<std::size_t>(letter - 1)] += src[m];
        }
      }
    }
  }
  return slices;
}

int resolve_rank(const PositiveWord& w1, const PositiveWord& w2) {
  return std::max({w1.max_generator(), w2.max_generator(), 1});
}

Monomial monomial_from_dense(int degree, std::size_t index, int rank) {
  Monomial m;
  m.indices.assign(static_cast<std::size_t>(degree), 1);
  for (int pos = degree - 1; pos >= 0; --pos) {
    m.indices[static_cast<std::size_t>(pos)] =
        static_cast<int>(index % static_cast<std::size_t>(rank)) + 1;
    index /= static_cast<std::size_t>(rank);
  }
  return m;
}

}  // namespace

MagnusSeries::MagnusSeries(int rank, int degree_bound,
                           std::vector<std::vector<BigInt>> slices)
    : rank_(rank), degree_bound_(degree_bound), slices_(std::move(slices)) {
  if (rank_ < 1) throw std::invalid_argument("MagnusSeries: rank must be >= 1");
  if (degree_bound_ < 0) throw std::invalid_argument("MagnusSeries: negative degree bound");
  if (slices_.size() != static_cast<std::size_t>(degree_bound_) + 1) {
    throw std::invalid_argument("MagnusSeries: slice count does not match degree bound");
  }
}

const BigInt& MagnusSeries::coefficient(const Monomial& m) const {
  if (m.degree() > degree_bound_) {
    throw std::invalid_argument("MagnusSeries::coefficient: degree exceeds bound");
  }
  std::size_t index = 0;
  for (int i : m.indices) {
    if (i < 1 || i > rank_) {
      throw std::invalid_argument("MagnusSeries::coefficient: index outside rank");
    }
    index = index * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(i - 1);
  }
  return slices_[static_cast<std::size_t>(m.degree())][index];
}

const std::vector<BigInt>& MagnusSeries::degree_slice(int d) const {
  if (d < 0 || d > degree_bound_) {
    throw std::invalid_argument("MagnusSeries::degree_slice: degree out of range");
  }
  return slices_[static_cast<std::size_t>(d)];
}

MagnusSeries magnus_truncated(const PositiveWord& w, int degree_bound, int rank,
                              std::size_t table_budget) {
  if (degree_bound < 0) {
    throw std::invalid_argument("magnus_truncated: degree bound must be >= 0");
  }
  if (rank == 0) rank = std::max(w.max_generator(), 1);
  if (rank < 1) throw std::invalid_argument("magnus_truncated: rank must be >= 1");
  return MagnusSeries(rank, degree_bound, compute_slices(w, degree_bound, rank, table_budget));
}

McResult mc_equal_detail(const PositiveWord& w1, const PositiveWord& w2, int c,
                         std::size_t table_budget) {
  if (c < 1) throw std::invalid_argument("mc_equal: class must be >= 1");
  const int rank = resolve_rank(w1, w2);
  McResult result;
  for (int d = 1; d <= c; ++d) {
    const auto s1 = compute_slices(w1, d, rank, table_budget);
    const auto s2 = compute_slices(w2, d, rank, table_budget);
    result.degrees_checked = d;
    const auto& row1 = s1[static_cast<std::size_t>(d)];
    const auto& row2 = s2[static_cast<std::size_t>(d)];
    for (std::size_t m = 0; m < row1.size(); ++m) {
      if (row1[m] != row2[m]) {
        result.equal = false;
        result.first_discrepant_monomial = monomial_from_dense(d, m, rank);
        return result;
      }
    }
  }
  return result;
}

bool mc_equal(const PositiveWord& w1, const PositiveWord& w2, int c,
              std::size_t table_budget) {
  return mc_equal_detail(w1, w2, c, table_budget).equal;
}

MalcevPair malcev_sequence(const PositiveWord& w1, const PositiveWord& w2, int c,
                           std::size_t length_budget) {
  if (w1.empty() || w2.empty()) {
    throw std::invalid_argument("malcev_sequence: words must be nonempty");
  }
  if (c < 1) throw std::invalid_argument("malcev_sequence: class must be >= 1");
  if (c >= 63) throw BudgetError("malcev_sequence: class too large");
  const std::size_t final_length =
      (w1.size() + w2.size()) << (static_cast<unsigned>(c) - 1);
  if (final_length > length_budget || (final_length >> (c - 1)) != w1.size() + w2.size()) {
    throw BudgetError("malcev_sequence: final length " + std::to_string(final_length) +
                      " exceeds budget " + std::to_string(length_budget));
  }
  MalcevPair pair{w1, w2, 0};
  for (int step = 0; step < c; ++step) {
    PositiveWord next_u = concat(pair.u, pair.v);
    PositiveWord next_v = concat(pair.v, pair.u);
    pair.u = std::move(next_u);
    pair.v = std::move(next_v);
    pair.stage += 1;
  }
  return pair;
}

CommonMultipleWitness common_multiple_witness(const PositiveWord& w1,
                                              const PositiveWord& w2, int c) {
  const MalcevPair pair = malcev_sequence(w1, w2, c);
  if (!std::equal(w1.letters().begin(), w1.letters().end(), pair.u.letters().begin()) ||
      !std::equal(w2.letters().begin(), w2.letters().end(), pair.v.letters().begin())) {
    throw std::logic_error("common_multiple_witness: stage word lost its prefix");
  }
  CommonMultipleWitness witness{
      PositiveWord(std::vector<int>(pair.u.letters().begin() + static_cast<std::ptrdiff_t>(w1.size()),
                                    pair.u.letters().end())),
      PositiveWord(std::vector<int>(pair.v.letters().begin() + static_cast<std::ptrdiff_t>(w2.size()),
                                    pair.v.letters().end()))};
  if (!mc_equal(pair.u, pair.v, c)) {
    throw std::logic_error("common_multiple_witness: witness failed verification");
  }
  return witness;
}

std::vector<long long> abelianization_oracle(const PositiveWord& w, int rank) {
  if (rank < 1) throw std::invalid_argument("abelianization_oracle: rank must be >= 1");
  std::vector<long long> counts(static_cast<std::size_t>(rank), 0);
  for (int g : w.letters()) {
    if (g > rank) {
      throw std::invalid_argument("abelianization_oracle: letter outside rank");
    }
    counts[static_cast<std::size_t>(g - 1)] += 1;
  }
  return counts;
}

std::array<std::array<long long, 3>, 3> heisenberg_oracle(const PositiveWord& w) {
  std::array<std::array<long long, 3>, 3> m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int g : w.letters()) {
    if (g == 1) {
      for (auto& row : m) row[1] += row[0];  // right-multiply by I + E12
    } else if (g == 2) {
      for (auto& row : m) row[2] += row[1];  // right-multiply by I + E23
    } else {
      throw std::invalid_argument("heisenberg_oracle: letters must be x_1 or x_2");
    }
  }
  return m;
}

}  // namespace smlab::nilpotent
