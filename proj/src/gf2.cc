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

#include "hyperlat/gf2.h"

#include <algorithm>

#include "hyperlat/errors.h"

namespace hyperlat {

BitVector BitVector::from_support(std::size_t size, const std::vector<int> &support) {
    BitVector v(size);
    for (int i : support) {
        v.flip(static_cast<std::size_t>(i));
    }
    return v;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.size_ != size_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "xor of lengths " + std::to_string(size_) + " and " + std::to_string(other.size_));
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

bool BitVector::operator<(const BitVector &other) const {
    // Lexicographic on the sorted support.
    std::vector<int> a = support();
    std::vector<int> b = other.support();
    return a < b;
}

std::size_t BitVector::weight() const {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::overlap(const BitVector &other) const {
    if (other.size_ != size_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "inner product of lengths " + std::to_string(size_) + " and " + std::to_string(other.size_));
    }
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    }
    return total;
}

std::vector<int> BitVector::support() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(static_cast<int>(w * 64 + b));
            bits &= bits - 1;
        }
    }
    return out;
}

int BitVector::first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) {
            return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
        }
    }
    return -1;
}

std::size_t BitVectorHash::operator()(const BitVector &v) const {
    std::size_t h = v.size();
    for (auto w : v.words()) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

namespace {

// Lowest set index >= from, or -1.
int next_set(const BitVector &v, std::size_t from) {
    const auto &words = v.words();
    for (std::size_t w = from >> 6; w < words.size(); ++w) {
        std::uint64_t bits = words[w];
        if (w == (from >> 6) && (from & 63)) {
            bits &= ~std::uint64_t{0} << (from & 63);
        }
        if (bits) {
            return static_cast<int>(w * 64 + std::countr_zero(bits));
        }
    }
    return -1;
}

}  // namespace

BitVector EchelonBasis::reduce(BitVector v) const {
    if (v.size() != columns_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "vector of length " + std::to_string(v.size()) + " against basis of width " +
                        std::to_string(columns_));
    }
    // A stored row has no bits below its pivot, so a left-to-right sweep
    // never reintroduces bits behind the cursor.
    for (int col = v.first_set(); col >= 0; col = next_set(v, static_cast<std::size_t>(col) + 1)) {
        int r = pivot_row_[col];
        if (r >= 0) {
            v ^= rows_[r];
        }
    }
    return v;
}

bool EchelonBasis::add(const BitVector &v) {
    BitVector r = reduce(v);
    int pivot = r.first_set();
    if (pivot < 0) {
        return false;
    }
    pivot_row_[pivot] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

std::size_t gf2_rank(const std::vector<BitVector> &rows) {
    if (rows.empty()) {
        return 0;
    }
    EchelonBasis basis(rows.front().size());
    for (const auto &row : rows) {
        basis.add(row);
    }
    return basis.rank();
}

bool gf2_in_span(const BitVector &v, const std::vector<BitVector> &basis) {
    EchelonBasis b(v.size());
    for (const auto &row : basis) {
        b.add(row);
    }
    return b.in_span(v);
}

}  // namespace hyperlat
