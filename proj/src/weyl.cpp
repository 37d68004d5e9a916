// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#include "homcount/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace homcount {

namespace {

std::string vec_key(const std::vector<BigInt>& v) {
    std::ostringstream out;
    for (const auto& x : v) out << x.get_str() << ",";
    return out.str();
}

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    BigInt acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

// Positive-definiteness of the symmetrized Cartan matrix via leading
// principal minors, all over exact rationals.
bool cartan_finite_type(const std::vector<std::vector<BigInt>>& c) {
    int n = static_cast<int>(c.size());
    if (n == 0) return true;
    // Symmetrizer d_i > 0 with d_i c_ij = d_j c_ji, found by graph traversal.
    std::vector<BigRat> d(static_cast<std::size_t>(n), BigRat(0));
    for (int start = 0; start < n; ++start) {
        if (d[static_cast<std::size_t>(start)] != 0) continue;
        d[static_cast<std::size_t>(start)] = 1;
        std::vector<int> queue{start};
        while (!queue.empty()) {
            int i = queue.back();
            queue.pop_back();
            for (int j = 0; j < n; ++j) {
                if (c[i][static_cast<std::size_t>(j)] == 0) continue;
                if (c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] == 0) return false;
                BigRat want = d[static_cast<std::size_t>(i)] *
                              BigRat(c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) /
                              BigRat(c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
                auto& dj = d[static_cast<std::size_t>(j)];
                if (dj == 0) {
                    dj = want;
                    queue.push_back(j);
                } else if (dj != want) {
                    return false;
                }
            }
        }
    }
    // s_ij = d_i c_ij must be symmetric positive definite.
    std::vector<std::vector<BigRat>> s(static_cast<std::size_t>(n),
                                       std::vector<BigRat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                d[static_cast<std::size_t>(i)] *
                BigRat(c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    for (int k = 1; k <= n; ++k) {
        // Leading k x k minor by Gaussian elimination.
        auto a = s;
        BigRat minor(1);
        for (int col = 0; col < k; ++col) {
            int pivot = -1;
            for (int row = col; row < k; ++row)
                if (a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                    pivot = row;
                    break;
                }
            if (pivot < 0) return false;
            if (pivot != col) {
                std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
                minor = -minor;
            }
            BigRat p = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            minor *= p;
            for (int row = col + 1; row < k; ++row) {
                BigRat f = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] / p;
                if (f == 0) continue;
                for (int cc = col; cc < k; ++cc)
                    a[static_cast<std::size_t>(row)][static_cast<std::size_t>(cc)] -=
                        f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(cc)];
            }
        }
        if (minor <= 0) return false;
    }
    return true;
}

constexpr std::size_t kRootCap = 10000;

}  // namespace

int RootDatum::find_root(const std::vector<BigInt>& v) const {
    auto it = root_index_.find(vec_key(v));
    return it == root_index_.end() ? -1 : it->second;
}

bool RootDatum::permutes_roots(const IntMatrix& m) const {
    if (m.rows() != rank || m.cols() != rank) return false;
    for (const auto& alpha : all_roots)
        if (find_root(m.apply(alpha)) < 0) return false;
    return true;
}

RootDatum build_root_datum(int rank, std::vector<std::vector<BigInt>> simple_roots,
                           std::vector<std::vector<BigInt>> simple_coroots) {
    require(rank >= 0, "domain", "rank must be non-negative");
    require(simple_roots.size() == simple_coroots.size(), "dimension",
            "simple roots and coroots must come in pairs");
    int k = static_cast<int>(simple_roots.size());
    for (const auto& v : simple_roots)
        require(static_cast<int>(v.size()) == rank, "dimension", "simple root of wrong length");
    for (const auto& v : simple_coroots)
        require(static_cast<int>(v.size()) == rank, "dimension", "simple coroot of wrong length");

    // Cartan pairing c_ij = <alpha_j, alpha_i^vee>.
    std::vector<std::vector<BigInt>> cartan(static_cast<std::size_t>(k),
                                            std::vector<BigInt>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            BigInt p = dot(simple_coroots[static_cast<std::size_t>(i)],
                           simple_roots[static_cast<std::size_t>(j)]);
            if (i == j)
                require(p == 2, "cartan", "diagonal Cartan pairing must be 2");
            else
                require(p <= 0, "cartan", "off-diagonal Cartan pairing must be <= 0");
            cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p;
        }
    require(cartan_finite_type(cartan), "cartan", "Cartan matrix is not of finite type");

    RootDatum rd;
    rd.rank = rank;
    rd.simple_roots = std::move(simple_roots);
    rd.simple_coroots = std::move(simple_coroots);

    // Reflection s_i(x) = x - <x, alpha_i^vee> alpha_i.
    for (int i = 0; i < k; ++i) {
        IntMatrix s = IntMatrix::identity(rank);
        for (int r = 0; r < rank; ++r)
            for (int c = 0; c < rank; ++c)
                s.at(r, c) -= rd.simple_roots[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] *
                              rd.simple_coroots[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
        rd.simple_reflections.push_back(std::move(s));
    }

    // Close the simple roots under all reflections, tracking the expansion in
    // the simple-root basis to read off signs.
    std::vector<std::vector<BigInt>> expansions;
    for (int i = 0; i < k; ++i) {
        const auto& alpha = rd.simple_roots[static_cast<std::size_t>(i)];
        if (rd.find_root(alpha) >= 0) fail("cartan", "duplicate simple root");
        std::vector<BigInt> e(static_cast<std::size_t>(k), BigInt(0));
        e[static_cast<std::size_t>(i)] = 1;
        rd.root_index_[vec_key(alpha)] = static_cast<int>(rd.all_roots.size());
        rd.all_roots.push_back(alpha);
        expansions.push_back(std::move(e));
    }
    for (std::size_t head = 0; head < rd.all_roots.size(); ++head) {
        for (int i = 0; i < k; ++i) {
            std::vector<BigInt> image = rd.simple_reflections[static_cast<std::size_t>(i)].apply(
                rd.all_roots[head]);
            if (rd.find_root(image) >= 0) continue;
            require(rd.all_roots.size() < kRootCap, "root_cap", "root closure exceeds size cap");
            BigInt pairing = dot(rd.simple_coroots[static_cast<std::size_t>(i)], rd.all_roots[head]);
            std::vector<BigInt> e = expansions[head];
            e[static_cast<std::size_t>(i)] -= pairing;
            rd.root_index_[vec_key(image)] = static_cast<int>(rd.all_roots.size());
            rd.all_roots.push_back(std::move(image));
            expansions.push_back(std::move(e));
        }
    }

    for (const auto& e : expansions) {
        bool nonneg = true, nonpos = true;
        for (const auto& x : e) {
            if (x < 0) nonneg = false;
            if (x > 0) nonpos = false;
        }
        require(nonneg != nonpos, "cartan", "root with mixed-sign expansion");
        rd.root_positive.push_back(nonneg);
        if (nonneg) ++rd.pos_count;
    }
    require(2 * rd.pos_count == static_cast<int>(rd.all_roots.size()), "cartan",
            "root system is not symmetric");
    rd.dim_g = rank + static_cast<long>(rd.all_roots.size());
    return rd;
}

namespace {

std::vector<BigInt> unit_vec(int n, int i, long sign = 1) {
    std::vector<BigInt> v(static_cast<std::size_t>(n), BigInt(0));
    v[static_cast<std::size_t>(i)] = sign;
    return v;
}

}  // namespace

RootDatum build_root_datum(Preset preset, int param) {
    using Rows = std::vector<std::vector<BigInt>>;
    Rows roots, coroots;
    switch (preset) {
        case Preset::Torus:
            require(param >= 0, "preset", "Torus(d) needs d >= 0");
            return build_root_datum(param, {}, {});
        case Preset::GL: {
            int n = param;
            require(n >= 1, "preset", "GL(n) needs n >= 1");
            for (int i = 0; i + 1 < n; ++i) {
                std::vector<BigInt> a = unit_vec(n, i);
                a[static_cast<std::size_t>(i + 1)] = -1;
                roots.push_back(a);
                coroots.push_back(a);
            }
            return build_root_datum(n, roots, coroots);
        }
        case Preset::SL: {
            int n = param;
            require(n >= 2, "preset", "SL(n) needs n >= 2");
            int r = n - 1;
            // Root-lattice coordinates: alpha_i = e_i, coroot rows from the
            // type A Cartan matrix.
            for (int i = 0; i < r; ++i) {
                roots.push_back(unit_vec(r, i));
                std::vector<BigInt> co(static_cast<std::size_t>(r), BigInt(0));
                co[static_cast<std::size_t>(i)] = 2;
                if (i > 0) co[static_cast<std::size_t>(i - 1)] = -1;
                if (i + 1 < r) co[static_cast<std::size_t>(i + 1)] = -1;
                coroots.push_back(co);
            }
            return build_root_datum(r, roots, coroots);
        }
        case Preset::Sp: {
            require(param >= 2 && param % 2 == 0, "preset", "Sp(n) needs even n >= 2");
            int n = param / 2;
            for (int i = 0; i + 1 < n; ++i) {
                std::vector<BigInt> a = unit_vec(n, i);
                a[static_cast<std::size_t>(i + 1)] = -1;
                roots.push_back(a);
                coroots.push_back(a);
            }
            roots.push_back(unit_vec(n, n - 1, 2));
            coroots.push_back(unit_vec(n, n - 1, 1));
            return build_root_datum(n, roots, coroots);
        }
        case Preset::SO: {
            require(param >= 3, "preset", "SO(n) needs n >= 3");
            int n = param / 2;
            for (int i = 0; i + 1 < n; ++i) {
                std::vector<BigInt> a = unit_vec(n, i);
                a[static_cast<std::size_t>(i + 1)] = -1;
                roots.push_back(a);
                coroots.push_back(a);
            }
            if (param % 2 == 1) {  // type B: short root e_n
                roots.push_back(unit_vec(n, n - 1, 1));
                coroots.push_back(unit_vec(n, n - 1, 2));
            } else {  // type D: e_{n-1} + e_n
                require(n >= 2, "preset", "SO(2n) needs n >= 2");
                std::vector<BigInt> a = unit_vec(n, n - 2);
                a[static_cast<std::size_t>(n - 1)] = 1;
                roots.push_back(a);
                coroots.push_back(a);
            }
            return build_root_datum(n, roots, coroots);
        }
    }
    fail("preset", "unknown preset");
}

int WeylGroup::find(const IntMatrix& m) const {
    auto it = index_.find(m.key());
    return it == index_.end() ? -1 : it->second;
}

WeylGroup enumerate_weyl(const RootDatum& rd, std::size_t cap) {
    WeylGroup w;
    IntMatrix id = IntMatrix::identity(rd.rank);
    w.index_[id.key()] = 0;
    w.elements.push_back(std::move(id));
    for (std::size_t head = 0; head < w.elements.size(); ++head) {
        for (const auto& s : rd.simple_reflections) {
            IntMatrix next = w.elements[head] * s;
            std::string key = next.key();
            if (w.index_.count(key)) continue;
            require(w.elements.size() < cap, "group_cap", "Weyl group exceeds enumeration cap");
            w.index_[key] = static_cast<int>(w.elements.size());
            w.elements.push_back(std::move(next));
        }
    }
    w.lengths.reserve(w.elements.size());
    for (const auto& g : w.elements) {
        int len = 0;
        for (std::size_t r = 0; r < rd.all_roots.size(); ++r) {
            if (!rd.root_positive[r]) continue;
            int image = rd.find_root(g.apply(rd.all_roots[r]));
            require(image >= 0, "internal", "Weyl element does not permute the roots");
            if (!rd.root_positive[static_cast<std::size_t>(image)]) ++len;
        }
        w.lengths.push_back(len);
    }
    return w;
}

RatPoly coset_poincare(const RootDatum& rd, const WeylGroup& w,
                       const std::vector<int>& parabolic) {
    for (int i : parabolic)
        require(i >= 0 && i < static_cast<int>(rd.simple_roots.size()), "domain",
                "parabolic index out of range");
    std::vector<BigRat> coeffs(static_cast<std::size_t>(rd.pos_count) + 1, BigRat(0));
    for (std::size_t k = 0; k < w.elements.size(); ++k) {
        // Minimal-length coset representatives keep the parabolic simple
        // roots positive.
        bool minimal = true;
        for (int i : parabolic) {
            int image = rd.find_root(
                w.elements[k].apply(rd.simple_roots[static_cast<std::size_t>(i)]));
            require(image >= 0, "internal", "coset element does not permute the roots");
            if (!rd.root_positive[static_cast<std::size_t>(image)]) {
                minimal = false;
                break;
            }
        }
        if (minimal) coeffs[static_cast<std::size_t>(w.lengths[k])] += 1;
    }
    return RatPoly(std::move(coeffs));
}

RatPoly coset_poincare(const RootDatum& rd, const std::vector<int>& parabolic) {
    WeylGroup w = enumerate_weyl(rd);
    return coset_poincare(rd, w, parabolic);
}

RatFunc molien_trace(const std::vector<IntMatrix>& mats, const IntMatrix& twist) {
    require(!mats.empty(), "domain", "Molien trace of an empty set");
    int n = mats.front().rows();
    require(twist.rows() == n && twist.cols() == n && twist.square(), "dimension",
            "twist size mismatch");
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        require(mats[i].rows() == n && mats[i].cols() == n, "dimension",
                "Molien summands must share one size");
        seen.emplace(mats[i].key(), i);
    }
    require(seen.size() == mats.size(), "not_closed", "matrix set has repeated elements");
    require(det(twist) != 0, "not_invertible", "Molien twist must be invertible");
    // Closure check: full for small sets, sampled above that.
    auto closed = [&](std::size_t i, std::size_t j) {
        IntMatrix p = mats[i] * mats[j];
        return seen.count(p.key()) != 0;
    };
    if (mats.size() <= 256) {
        for (std::size_t i = 0; i < mats.size(); ++i)
            for (std::size_t j = 0; j < mats.size(); ++j)
                require(closed(i, j), "not_closed", "matrix set is not closed under products");
    } else {
        require(seen.count(IntMatrix::identity(n).key()) != 0, "not_closed",
                "matrix group is missing the identity");
        std::size_t step = mats.size() / 64 + 1;
        for (std::size_t i = 0; i < mats.size(); i += step)
            require(closed(i, (i * 31 + 7) % mats.size()), "not_closed",
                    "matrix set is not closed under products");
    }

    // Group by characteristic polynomial of twist * g; the Molien sum only
    // sees those.
    std::map<std::string, std::pair<RatPoly, long>> classes;
    for (const auto& g : mats) {
        RatPoly p = reverse_charpoly(twist * g);
        auto [it, fresh] = classes.emplace(p.key(), std::make_pair(p, 0L));
        it->second.second += 1;
    }
    RatFunc sum;
    for (const auto& [key, entry] : classes) {
        const auto& [poly, count] = entry;
        require(poly(BigRat(0)) != 0, "internal", "charpoly lost its constant term");
        sum = sum + RatFunc(RatPoly::constant(BigRat(count)), poly);
    }
    RatFunc result = sum.scaled(BigRat(1, static_cast<long>(mats.size())));
    require(result.num().integral() && result.den().integral(), "not_integral",
            "Molien trace failed to reduce to integer coefficients");
    return result;
}

std::vector<int> invariant_degrees(const WeylGroup& w) {
    require(!w.elements.empty(), "domain", "invariant degrees of an empty group");
    int rank = w.elements.front().rows();
    RatFunc rest = molien_trace(w.elements, IntMatrix::identity(rank));
    std::vector<int> degrees;
    // Strip factors 1/(1 - t^d) from the lowest series term upward.
    int order_cap = 4 * rank + 64;
    for (int k = 0; k < rank; ++k) {
        std::vector<BigRat> s = rest.series(order_cap);
        int d = 0;
        for (int e = 1; e <= order_cap; ++e)
            if (s[static_cast<std::size_t>(e)] != 0) {
                d = e;
                break;
            }
        require(d > 0, "not_reflection",
                "Molien series does not match a product of degree factors");
        require(s[static_cast<std::size_t>(d)] > 0, "not_reflection",
                "Molien series has a negative leading correction");
        degrees.push_back(d);
        std::vector<BigRat> factor(static_cast<std::size_t>(d) + 1, BigRat(0));
        factor[0] = 1;
        factor[static_cast<std::size_t>(d)] = -1;
        rest = rest * RatFunc(RatPoly(std::move(factor)));
    }
    require(rest == RatFunc::one(), "not_reflection",
            "Molien series is not a product of rank many degree factors");
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

RatPoly group_order_poly(const RootDatum& rd, const WeylGroup& w, const IntMatrix& f0,
                         int residue) {
    require(f0.rows() == rd.rank && f0.cols() == rd.rank, "dimension",
            "twist must act on the character lattice");
    int ord = matrix_order(f0);
    require(rd.permutes_roots(f0), "twist_roots", "twist does not permute the roots");
    int r = ((residue % ord) + ord) % ord;
    IntMatrix twist = f0.pow(static_cast<unsigned>((ord - r) % ord));  // f0^(-residue)
    RatFunc molien = molien_trace(w.elements, twist);
    RatFunc order = reverse_substitute(molien.reciprocal(), rd.dim_g);
    require(order.is_polynomial(), "steinberg", "group order did not reduce to a polynomial");
    RatPoly p = order.as_poly();
    require(p.integral() && p.monic() && p.degree() == rd.dim_g, "steinberg",
            "group order polynomial is not monic integral of degree dim G");
    return p;
}

RatPoly group_order_poly(const RootDatum& rd, const IntMatrix& f0, int residue) {
    WeylGroup w = enumerate_weyl(rd);
    return group_order_poly(rd, w, f0, residue);
}

}  // namespace homcount
