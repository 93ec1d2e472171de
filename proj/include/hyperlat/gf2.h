// Copyright 2026 The Hyperlat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERLAT_GF2_H
#define HYPERLAT_GF2_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace hyperlat {

/// Fixed-length bit vector over GF(2). Addition is XOR.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {
    }
    static BitVector from_support(std::size_t size, const std::vector<int> &support);

    std::size_t size() const {
        return size_;
    }
    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool value = true) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        words_[i >> 6] = value ? (words_[i >> 6] | mask) : (words_[i >> 6] & ~mask);
    }
    void flip(std::size_t i) {
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    BitVector &operator^=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }
    bool operator==(const BitVector &other) const = default;
    bool operator<(const BitVector &other) const;

    std::size_t weight() const;
    bool any() const;
    /// Number of positions set in both vectors.
    std::size_t overlap(const BitVector &other) const;
    /// GF(2) inner product.
    bool dot(const BitVector &other) const {
        return overlap(other) & 1u;
    }
    std::vector<int> support() const;
    /// Lowest set index, or -1.
    int first_set() const;

    const std::vector<std::uint64_t> &words() const {
        return words_;
    }

   private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

using EdgeVector = BitVector;

struct BitVectorHash {
    std::size_t operator()(const BitVector &v) const;
};

/// Incremental row-echelon basis keyed by pivot column.
class EchelonBasis {
   public:
    explicit EchelonBasis(std::size_t columns) : columns_(columns), pivot_row_(columns, -1) {
    }

    /// Reduces `v` against the basis; the result is zero iff v is in the span.
    BitVector reduce(BitVector v) const;
    bool in_span(const BitVector &v) const {
        return !reduce(v).any();
    }
    /// Adds `v` if independent; returns whether the rank grew.
    bool add(const BitVector &v);
    std::size_t rank() const {
        return rows_.size();
    }
    std::size_t columns() const {
        return columns_;
    }

   private:
    std::size_t columns_;
    std::vector<BitVector> rows_;
    std::vector<int> pivot_row_;
};

/// Rank of the row set. Throws DimensionMismatch on ragged input.
std::size_t gf2_rank(const std::vector<BitVector> &rows);
/// Exact span membership. Throws DimensionMismatch.
bool gf2_in_span(const BitVector &v, const std::vector<BitVector> &basis);

}  // namespace hyperlat

#endif  // HYPERLAT_GF2_H
