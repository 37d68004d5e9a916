// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#include "homcount/engine.hpp"

#include <numeric>
#include <unordered_set>

namespace homcount {

namespace {

constexpr std::size_t kGammaCap = 100000;

// Integer right inverse of a surjection with unit elementary divisors,
// assembled from the Smith decomposition u * m * v = [I | 0].
IntMatrix right_inverse(const IntMatrix& m, const SnfResult& snf) {
    int h = m.rows(), d = m.cols();
    IntMatrix pick(d, h);
    for (int i = 0; i < h; ++i) pick.at(i, i) = 1;
    IntMatrix sigma = snf.v * (pick * snf.u);
    require((m * sigma).is_identity(), "internal", "right inverse construction failed");
    return sigma;
}

std::vector<IntMatrix> close_group(const std::vector<IntMatrix>& generators, int size) {
    std::vector<IntMatrix> elements;
    std::unordered_set<std::string> seen;
    IntMatrix id = IntMatrix::identity(size);
    seen.insert(id.key());
    elements.push_back(std::move(id));
    for (const auto& g : generators) {
        require(g.rows() == size && g.cols() == size, "dimension",
                "component-group generator of wrong size");
        matrix_order(g);  // rejects infinite-order generators early
    }
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : generators) {
            IntMatrix next = elements[head] * g;
            std::string key = next.key();
            if (seen.count(key)) continue;
            require(elements.size() < kGammaCap, "group_cap",
                    "component group closure exceeds cap");
            seen.insert(std::move(key));
            elements.push_back(std::move(next));
        }
    }
    return elements;
}

IntMatrix negative_power(const IntMatrix& m, int order, int exponent) {
    int r = ((exponent % order) + order) % order;
    return m.pow(static_cast<unsigned>((order - r) % order));
}

}  // namespace

HomogeneousSpec HomogeneousSpec::validate(const RawSpec& raw) {
    HomogeneousSpec spec;
    spec.rd_ = raw.group;
    int d = spec.rd_.rank;

    spec.restriction_ = raw.restriction;
    require(spec.restriction_.cols() == d, "dimension",
            "restriction must have one column per character of the maximal torus");
    int h = spec.restriction_.rows();
    require(h <= d, "validation", "subtorus lattice rank exceeds the rank of G");
    spec.lat_rank_ = h;

    SnfResult snf = smith_normal_form(spec.restriction_);
    for (int i = 0; i < h; ++i)
        require(snf.d.at(i, i) == 1, "not_surjective",
                "restriction is not surjective with saturated kernel; "
                "replace the kernel by its saturation");

    // A 0x0 twist stands for the default (identity); anything else must
    // match the lattice exactly.
    spec.f0_ = raw.f0.rows() == 0 && raw.f0.cols() == 0 ? IntMatrix::identity(d) : raw.f0;
    require(spec.f0_.rows() == d && spec.f0_.cols() == d, "dimension",
            "Frobenius twist must act on the character lattice");
    spec.f0_order_ = matrix_order(spec.f0_);
    require(spec.rd_.permutes_roots(spec.f0_), "twist_roots",
            "Frobenius twist does not permute the roots");

    spec.weyl_ = enumerate_weyl(spec.rd_);
    {
        // The twist has to normalize the Weyl group for the twisted Molien
        // sums to make sense.
        IntMatrix inv = negative_power(spec.f0_, spec.f0_order_, 1);
        for (const auto& s : spec.rd_.simple_reflections)
            require(spec.weyl_.contains(spec.f0_ * s * inv), "twist_roots",
                    "Frobenius twist does not normalize the Weyl group");
    }

    // Induced twist on the subtorus lattice; existence is exactly the
    // f0-stability of the restriction kernel.
    if (h == 0) {
        spec.f0_h_ = IntMatrix(0, 0);
    } else {
        IntMatrix sigma = right_inverse(spec.restriction_, snf);
        spec.f0_h_ = spec.restriction_ * spec.f0_ * sigma;
    }
    require(spec.restriction_ * spec.f0_ == spec.f0_h_ * spec.restriction_, "twist_kernel",
            "kernel of the restriction is not stable under the Frobenius twist");
    spec.f0h_order_ = matrix_order(spec.f0_h_);

    spec.gamma_ = close_group(raw.gamma_generators, h);
    {
        IntMatrix inv_h = negative_power(spec.f0_h_, spec.f0h_order_, 1);
        std::unordered_set<std::string> members;
        for (const auto& g : spec.gamma_) members.insert(g.key());
        for (const auto& g : spec.gamma_)
            require(members.count((spec.f0_h_ * g * inv_h).key()) != 0, "twist_gamma",
                    "component group is not normalized by the induced twist");
    }

    long lcm_order = std::lcm(static_cast<long>(spec.f0_order_),
                              static_cast<long>(spec.f0h_order_));
    spec.period_ = static_cast<int>(lcm_order);
    spec.dim_x_ = spec.rd_.dim_g - h;

    for (int r = 0; r < spec.f0_order_; ++r)
        spec.group_order_.push_back(group_order_poly(spec.rd_, spec.weyl_, spec.f0_, r));

    for (int r = 0; r < spec.period_; ++r) {
        spec.molien_gamma_.push_back(
            molien_trace(spec.gamma_, negative_power(spec.f0_h_, spec.f0h_order_, r)));
        spec.molien_weyl_.push_back(
            molien_trace(spec.weyl_.elements, negative_power(spec.f0_, spec.f0_order_, r)));
        RatFunc ratio = spec.molien_gamma_.back() / spec.molien_weyl_.back();
        RatFunc p = reverse_substitute(ratio, spec.dim_x_);
        require(p.is_polynomial(), "not_polynomial",
                "residue count did not reduce to a polynomial; "
                "the component group may not come from a genuine subgroup");
        RatPoly poly = p.as_poly();
        require(poly.integral() && poly.monic() && poly.degree() == spec.dim_x_,
                "not_integral",
                "residue polynomial is not monic integral of degree dim X");
        spec.polys_.push_back(std::move(poly));
    }
    return spec;
}

const RatFunc& HomogeneousSpec::molien_gamma(int residue) const {
    return molien_gamma_[static_cast<std::size_t>(((residue % period_) + period_) % period_)];
}

const RatFunc& HomogeneousSpec::molien_weyl(int residue) const {
    return molien_weyl_[static_cast<std::size_t>(((residue % period_) + period_) % period_)];
}

const RatPoly& HomogeneousSpec::group_order(int residue) const {
    return group_order_[static_cast<std::size_t>(((residue % f0_order_) + f0_order_) % f0_order_)];
}

const RatPoly& HomogeneousSpec::polynomial(int residue) const {
    return polys_[static_cast<std::size_t>(((residue % period_) + period_) % period_)];
}

RatPoly count_polynomial(const HomogeneousSpec& spec, int residue) {
    require(residue >= 0, "domain", "residue must be non-negative");
    return spec.polynomial(residue);
}

BigInt count_at(const HomogeneousSpec& spec, const BigInt& q, int n) {
    require(q >= 2, "domain", "q must be a prime power >= 2");
    require(n >= 1, "domain", "n must be positive");
    BigInt qn = big_pow(q, static_cast<unsigned long>(n));
    BigInt group_order = spec.group_order(n).eval_int(qn);

    // Average of |G^(F^n)| / |det(gamma (q f0_H)^n - I)| over the component
    // group.
    IntMatrix fn = spec.induced_twist().pow(static_cast<unsigned>(n)).scaled(qn);
    int h = spec.lattice_rank();
    BigRat sum(0);
    for (const auto& g : spec.gamma()) {
        BigInt dg = det(g * fn - IntMatrix::identity(h));
        require(dg != 0, "validation", "twisted fixed-point determinant vanished");
        sum += BigRat(group_order) / BigRat(abs(dg));
    }
    sum /= BigRat(static_cast<long>(spec.gamma().size()));
    require(rat_is_integer(sum), "not_integral",
            "fixed-point average is not an integer; invalid spec");
    BigInt count = sum.get_num();
    BigInt expected = spec.polynomial(n).eval_int(qn);
    require(count == expected, "consistency",
            "group-order average disagrees with the residue polynomial");
    return count;
}

Factorization factorize(const HomogeneousSpec& spec) {
    int r = spec.root_datum().rank - spec.lattice_rank();
    // Untwisted regime: over the splitting extension the twist is gone, so
    // the residue-0 Molien data are plain Hilbert series.
    RatFunc unit_power(RatPoly::from_ints({1, -1}).pow(static_cast<unsigned>(r)));
    RatFunc ratio = spec.molien_gamma(0) / spec.molien_weyl(0) / unit_power;
    require(ratio.is_polynomial(), "factorization",
            "Hilbert-series ratio is not (1-t)^r times a polynomial");
    RatPoly q_x = ratio.as_poly();
    require(q_x.integral() && q_x.nonneg_coeffs(), "factorization",
            "cofactor must have non-negative integer coefficients");

    // P_0(s) = (s-1)^r s^(dim-r) q_x(1/s), exactly.
    long tail = spec.dim_x() - r - q_x.degree();
    require(tail >= 0, "factorization", "cofactor degree exceeds dim X - r");
    RatPoly rhs = RatPoly::from_ints({-1, 1}).pow(static_cast<unsigned>(r)) *
                  q_x.reversed() * RatPoly::monomial(BigRat(1), static_cast<int>(tail));
    require(rhs == spec.polynomial(0), "factorization",
            "factorization identity failed against P_0");
    return {r, q_x};
}

std::vector<RatPoly> shift_certificates(const std::vector<RatPoly>& polys) {
    std::vector<RatPoly> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        RatPoly s = shift_poly(p, BigRat(1));
        require(s.nonneg_coeffs(), "shift_negative",
                "shifted polynomial has a negative coefficient");
        out.push_back(std::move(s));
    }
    return out;
}

BigInt period_bound(int rank) {
    require(rank >= 1, "domain", "period bound needs rank >= 1");
    BigInt bound(1);
    // phi(n) >= sqrt(n/2), so nothing past 2 rank^2 can qualify.
    long limit = 2L * rank * rank + 2;
    for (long n = 1; n <= limit; ++n)
        if (euler_phi(n) <= rank) bound = big_lcm(bound, BigInt(n));
    return bound;
}

CountingResult count_all(const HomogeneousSpec& spec) {
    CountingResult out;
    out.period = spec.period();
    out.dim_x = spec.dim_x();
    for (int r = 0; r < spec.period(); ++r) out.polys.push_back(spec.polynomial(r));

    out.minimal_period = spec.period();
    for (int cand = 1; cand < spec.period(); ++cand) {
        if (spec.period() % cand != 0) continue;
        bool ok = true;
        for (int r = 0; r < spec.period() && ok; ++r)
            ok = out.polys[static_cast<std::size_t>(r)] ==
                 out.polys[static_cast<std::size_t>(r % cand)];
        if (ok) {
            out.minimal_period = cand;
            break;
        }
    }

    out.factorization = factorize(spec);
    out.shifted = shift_certificates(out.polys);

    if (spec.root_datum().rank >= 1) {
        out.bound = period_bound(spec.root_datum().rank);
        require(out.bound % spec.period() == 0, "period_bound",
                "period exceeds the rank bound");
    } else {
        out.bound = 1;
    }
    return out;
}

}  // namespace homcount
