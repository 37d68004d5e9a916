// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <unordered_map>
#include <vector>

#include "homcount/matrix.hpp"
#include "homcount/ratfunc.hpp"

namespace homcount {

enum class Preset { GL, SL, Sp, SO, Torus };

// Root datum of a connected reductive group: character lattice Z^rank of a
// maximal torus, simple roots and coroots with a finite-type Cartan pairing,
// and the full root system generated from them.
struct RootDatum {
    int rank = 0;
    std::vector<std::vector<BigInt>> simple_roots;    // vectors in Z^rank
    std::vector<std::vector<BigInt>> simple_coroots;  // dual coordinates

    std::vector<std::vector<BigInt>> all_roots;
    std::vector<bool> root_positive;  // aligned with all_roots
    std::vector<IntMatrix> simple_reflections;
    int pos_count = 0;
    long dim_g = 0;

    int find_root(const std::vector<BigInt>& v) const;  // -1 when absent
    bool permutes_roots(const IntMatrix& m) const;

private:
    friend RootDatum build_root_datum(Preset, int);
    friend RootDatum build_root_datum(int, std::vector<std::vector<BigInt>>,
                                      std::vector<std::vector<BigInt>>);
    std::unordered_map<std::string, int> root_index_;
};

// Presets: GL(n), SL(n), Sp(n) for even n, SO(n) for n >= 3, Torus(d).
// GL uses Z^n with roots e_i - e_j; SL uses root-lattice coordinates;
// Sp and SO use the standard epsilon coordinates.
RootDatum build_root_datum(Preset preset, int param);

RootDatum build_root_datum(int rank, std::vector<std::vector<BigInt>> simple_roots,
                           std::vector<std::vector<BigInt>> simple_coroots);

struct WeylGroup {
    std::vector<IntMatrix> elements;  // elements[0] is the identity
    std::vector<int> lengths;

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(const IntMatrix& m) const { return index_.count(m.key()) != 0; }
    int find(const IntMatrix& m) const;

    friend WeylGroup enumerate_weyl(const RootDatum&, std::size_t);

private:
    std::unordered_map<std::string, int> index_;
};

// Breadth-first closure of the simple reflections acting on the character
// lattice; lengths count positive roots sent to negative ones.
WeylGroup enumerate_weyl(const RootDatum& rd, std::size_t cap = 1000000);

// Sum of t^l(w) over minimal-length representatives of W / W_P, where P is
// spanned by the given simple-root indices; the empty set gives the full
// Poincare polynomial of W.
RatPoly coset_poincare(const RootDatum& rd, const WeylGroup& w,
                       const std::vector<int>& parabolic);
RatPoly coset_poincare(const RootDatum& rd, const std::vector<int>& parabolic);

// (1/|mats|) * sum over g of 1/det(I - t * twist * g). mats must be a finite
// matrix group; the result is reduced with integral numerator and denominator.
RatFunc molien_trace(const std::vector<IntMatrix>& mats, const IntMatrix& twist);

// Degrees d_1 <= ... <= d_rank with Molien series = prod 1/(1 - t^d_i).
std::vector<int> invariant_degrees(const WeylGroup& w);

// Polynomial P with |G^(F^n)| = P(q^n) for n congruent to residue modulo the
// order of the twist f0, where F = q f0 on the character lattice.
RatPoly group_order_poly(const RootDatum& rd, const WeylGroup& w, const IntMatrix& f0,
                         int residue);
RatPoly group_order_poly(const RootDatum& rd, const IntMatrix& f0, int residue);

}  // namespace homcount
