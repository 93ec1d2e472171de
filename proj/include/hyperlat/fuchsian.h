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

#ifndef HYPERLAT_FUCHSIAN_H
#define HYPERLAT_FUCHSIAN_H

#include <cstddef>
#include <string>
#include <vector>

#include "hyperlat/geometry.h"

namespace hyperlat {

enum class BravaisFamily {
    FourG,         // {4g, 4g}
    TwoTimesOddG,  // {2(2g+1), 2g+1}
};

/// Bravais lattice {p_B, q_B} whose single cell compactifies to a genus-g surface.
struct BravaisSignature {
    int p_b = 0;
    int q_b = 0;
    int genus = 0;
    BravaisFamily family = BravaisFamily::FourG;

    static BravaisSignature for_family(BravaisFamily family, int genus);
    /// Recognizes {p_B, q_B} as a member of one of the two families.
    /// Throws ConfigInvalid otherwise.
    static BravaisSignature from_pq(int p_b, int q_b);

    /// Number of side-pairing generators, p_B / 2.
    int generator_count() const {
        return p_b / 2;
    }
    /// Number of independent generators, 2g.
    int independent_count() const {
        return 2 * genus;
    }

    struct CellCounts {
        int faces;
        int edges;
        int vertices;
    };
    /// Minimal (F, E, V) of the compactified cell.
    CellCounts minimal_counts() const;

    bool operator==(const BravaisSignature &) const = default;
};

/// Group word over the generators: +j stands for gamma_j, -j for its inverse
/// (1-based).
using Word = std::vector<int>;

/// Relator gamma_1 gamma_2^-1 ... gamma_{2g-1} gamma_{2g}^-1 gamma_1^-1 gamma_2
/// ... gamma_{2g-1}^-1 gamma_{2g}.
Word relator_word(int genus);

/// Side-pairing translations of the fundamental p_B-gon.
struct GeneratorSet {
    BravaisSignature signature;
    /// gamma_1 .. gamma_{p_B/2}; gamma_m maps edge m-1+p_B/2 onto edge m-1.
    std::vector<MobiusTransform> generators;
    int independent_count = 0;
    /// For m > 2g: a word in gamma_1..gamma_{2g} equal to gamma_m.
    /// dependent_words[m - 2g - 1] belongs to gamma_m.
    std::vector<Word> dependent_words;

    /// Evaluates a word over gamma_1..gamma_{p_B/2} as a matrix product.
    MobiusTransform evaluate(const Word &word) const;
};

/// Fundamental p_B-gon of the Bravais lattice (default phase).
RegularPolygon fundamental_polygon(const BravaisSignature &sig);

/// Builds gamma_1 from the edge pairing of the fundamental polygon and the
/// remaining generators by rotation conjugation. Throws RelatorViolation if
/// the relator residual exceeds kGeometricTol.
GeneratorSet build_generators(const BravaisSignature &sig);

/// Max-entry deviation of the relator product from +-identity.
double check_relator(const GeneratorSet &gs);
double check_relator(const std::vector<MobiusTransform> &independent, int genus);

/// Numerical check of the side and angle conditions.
struct SidePairingReport {
    double max_endpoint_error = 0.0;
    /// Angle sum over each class of identified polygon vertices.
    std::vector<double> vertex_class_angle_sums;
};
SidePairingReport check_side_pairings(const GeneratorSet &gs);

/// A permutation of {0..N-1} stored as images.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation inverse_permutation(const Permutation &perm);
/// Apply `first`, then `second`.
Permutation then(const Permutation &first, const Permutation &second);

/// Regular action of the translation group on the cosets of a normal
/// subgroup of index N. perms[j][i] is the image of coset i under
/// gamma_{j+1} (0-based cosets).
struct QuotientSpec {
    BravaisSignature signature;
    int index = 0;
    std::vector<Permutation> perms;
};

/// Parses the JSON quotient format (1-based images) and validates it.
/// Throws ParseError, RelatorNotIdentity, NotTransitive or NotRegular.
QuotientSpec parse_quotient(const std::string &json_text);
QuotientSpec load_quotient(const std::string &path);
/// Serializes to the JSON quotient format.
std::string quotient_to_json(const QuotientSpec &spec);

/// Runs all checks in order: permutation well-formedness, relator,
/// transitivity, regularity.
void validate_quotient(const QuotientSpec &spec);

/// Evaluates a word over gamma_1..gamma_{2g}, composed left to right.
/// Throws IndexOutOfRange.
Permutation coset_action(const QuotientSpec &spec, const Word &word);

/// Actions of all p_B/2 generators, resolving dependent ones through their words.
std::vector<Permutation> generator_actions(const QuotientSpec &spec, const GeneratorSet &gs);

/// Breadth-first coset representatives: entry i is a shortest word taking
/// coset 0 to coset i, trying +1, -1, +2, -2, ... in that order.
std::vector<Word> transversal_words(const QuotientSpec &spec);

/// Product action on the orbit of (0, 0). Throws SignatureMismatch.
QuotientSpec intersect_quotients(const QuotientSpec &q1, const QuotientSpec &q2);

/// Cyclic quotient gamma_j -> sigma^{exponents[j]} for an N-cycle sigma.
QuotientSpec cyclic_quotient(const BravaisSignature &sig, int n, const std::vector<int> &exponents);

/// Riemann-Hurwitz genus of the N-sheeted cover, N(g-1)+1.
int cover_genus(const QuotientSpec &spec);

}  // namespace hyperlat

#endif  // HYPERLAT_FUCHSIAN_H
