// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#include "homcount/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace homcount::oracle {

namespace {

constexpr long kMaxOrder = 2048;
constexpr long kEnumerationCap = 10000000;

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomial over F_p, ascending coefficients.
using Fp = std::vector<int>;

Fp code_to_poly(long code, int p) {
    Fp out;
    while (code) {
        out.push_back(static_cast<int>(code % p));
        code /= p;
    }
    return out;
}

long poly_to_code(const Fp& f, int p) {
    long code = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) code = code * p + *it;
    return code;
}

void poly_trim(Fp& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Fp poly_mul_mod(const Fp& a, const Fp& b, const Fp& modulus, int p) {
    if (a.empty() || b.empty()) return {};
    Fp prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    poly_trim(prod);
    // Reduce by the monic modulus.
    int dm = static_cast<int>(modulus.size()) - 1;
    while (static_cast<int>(prod.size()) - 1 >= dm) {
        int shift = static_cast<int>(prod.size()) - 1 - dm;
        int lead = prod.back();
        for (int k = 0; k <= dm; ++k) {
            int& c = prod[static_cast<std::size_t>(shift + k)];
            c = ((c - lead * modulus[static_cast<std::size_t>(k)]) % p + p) % p;
        }
        poly_trim(prod);
    }
    return prod;
}

// Remainder of a by monic b over F_p.
Fp poly_rem(Fp a, const Fp& b, int p) {
    poly_trim(a);
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        int shift = static_cast<int>(a.size()) - 1 - db;
        int lead = a.back();
        for (int k = 0; k <= db; ++k) {
            int& c = a[static_cast<std::size_t>(shift + k)];
            c = ((c - lead * b[static_cast<std::size_t>(k)]) % p + p) % p;
        }
        poly_trim(a);
    }
    return a;
}

bool poly_irreducible(const Fp& f, int p) {
    int d = static_cast<int>(f.size()) - 1;
    if (d <= 0) return false;
    if (d == 1) return true;
    // Trial division by every monic polynomial of degree 1..d/2.
    for (int e = 1; 2 * e <= d; ++e) {
        long count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (long low = 0; low < count; ++low) {
            Fp g = code_to_poly(low, p);
            g.resize(static_cast<std::size_t>(e) + 1, 0);
            g[static_cast<std::size_t>(e)] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

SmallField::SmallField(int p, int m) : p_(p), m_(m) {
    require(is_prime(static_cast<long>(p)), "field", "characteristic must be prime");
    require(m >= 1, "field", "extension degree must be positive");
    q_ = 1;
    for (int i = 0; i < m; ++i) {
        q_ *= p;
        require(q_ <= kMaxOrder, "field", "field order exceeds 2048");
    }

    // Smallest monic irreducible of degree m, by code order.
    if (m == 1) {
        modulus_ = {0, 1};
    } else {
        long count = 1;
        for (int i = 0; i < m; ++i) count *= p;
        bool found = false;
        for (long low = 0; low < count && !found; ++low) {
            Fp f = code_to_poly(low, p);
            f.resize(static_cast<std::size_t>(m) + 1, 0);
            f[static_cast<std::size_t>(m)] = 1;
            if (poly_irreducible(f, p)) {
                modulus_.assign(f.begin(), f.end());
                found = true;
            }
        }
        require(found, "field", "no irreducible modulus found");
    }

    // Generator of the multiplicative group, then log/antilog tables.
    for (long g = 1; g < q_ && generator_ == 0; ++g) {
        long x = g;
        long ord = 1;
        while (x != 1) {
            x = mul_slow(x, g);
            ++ord;
            if (ord > q_ - 1) break;
        }
        if (ord == q_ - 1) generator_ = g;
    }
    require(generator_ != 0 || q_ == 2, "field", "multiplicative group is not cyclic");
    if (q_ == 2) generator_ = 1;

    exp_table_.assign(static_cast<std::size_t>(q_ - 1), 0);
    log_table_.assign(static_cast<std::size_t>(q_), -1);
    long x = 1;
    for (long k = 0; k < q_ - 1; ++k) {
        exp_table_[static_cast<std::size_t>(k)] = x;
        log_table_[static_cast<std::size_t>(x)] = k;
        x = mul_slow(x, generator_);
    }
    require(x == 1, "field", "generator order mismatch");

    if (q_ <= 64) check_axioms();
}

SmallField SmallField::of_order(long q) {
    int p = 0, m = 0;
    require(is_prime_power(q, p, m), "field", "order is not a prime power");
    return SmallField(p, m);
}

SmallField::Elt SmallField::from_int(long k) const {
    long r = k % p_;
    return r < 0 ? r + p_ : r;
}

SmallField::Elt SmallField::add(Elt a, Elt b) const {
    // Digit-wise addition in base p.
    Elt out = 0;
    long place = 1;
    for (int i = 0; i < m_; ++i) {
        long da = (a / place) % p_;
        long db = (b / place) % p_;
        out += ((da + db) % p_) * place;
        place *= p_;
    }
    return out;
}

SmallField::Elt SmallField::neg(Elt a) const {
    Elt out = 0;
    long place = 1;
    for (int i = 0; i < m_; ++i) {
        long da = (a / place) % p_;
        out += ((p_ - da) % p_) * place;
        place *= p_;
    }
    return out;
}

SmallField::Elt SmallField::sub(Elt a, Elt b) const { return add(a, neg(b)); }

SmallField::Elt SmallField::mul_slow(Elt a, Elt b) const {
    Fp pa = code_to_poly(a, p_);
    Fp pb = code_to_poly(b, p_);
    Fp mod(modulus_.begin(), modulus_.end());
    return poly_to_code(poly_mul_mod(pa, pb, mod, p_), p_);
}

SmallField::Elt SmallField::mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    long l = log_table_[static_cast<std::size_t>(a)] + log_table_[static_cast<std::size_t>(b)];
    return exp_table_[static_cast<std::size_t>(l % (q_ - 1))];
}

SmallField::Elt SmallField::inv(Elt a) const {
    require(a != 0, "field", "inverse of zero");
    long l = log_table_[static_cast<std::size_t>(a)];
    return exp_table_[static_cast<std::size_t>((q_ - 1 - l) % (q_ - 1))];
}

SmallField::Elt SmallField::pow(Elt a, long e) const {
    if (a == 0) {
        require(e > 0, "field", "0^e needs e > 0");
        return 0;
    }
    long l = log_table_[static_cast<std::size_t>(a)];
    long le = (l % (q_ - 1)) * (e % (q_ - 1)) % (q_ - 1);
    if (le < 0) le += q_ - 1;
    return exp_table_[static_cast<std::size_t>(le)];
}

bool SmallField::is_square(Elt a) const {
    if (a == 0) return true;
    if (p_ == 2) return true;
    return log_table_[static_cast<std::size_t>(a)] % 2 == 0;
}

void SmallField::check_axioms() const {
    for (long a = 0; a < q_; ++a) {
        require(add(a, 0) == a && mul(a, 1) == a, "field", "identity axiom failed");
        require(add(a, neg(a)) == 0, "field", "additive inverse failed");
        if (a != 0) require(mul(a, inv(a)) == 1, "field", "multiplicative inverse failed");
    }
    for (long a = 0; a < q_; ++a)
        for (long b = 0; b < q_; ++b) {
            require(add(a, b) == add(b, a) && mul(a, b) == mul(b, a), "field",
                    "commutativity failed");
            for (long c = 0; c < q_; ++c) {
                require(add(add(a, b), c) == add(a, add(b, c)), "field",
                        "additive associativity failed");
                require(mul(mul(a, b), c) == mul(a, mul(b, c)), "field",
                        "multiplicative associativity failed");
                require(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), "field",
                        "distributivity failed");
            }
        }
}

long conic_count(SmallField::Elt a, SmallField::Elt b, const SmallField& f) {
    require(a != 0 && b != 0, "domain", "conic parameters must be nonzero");
    long count = 0;
    for (long x = 0; x < f.order(); ++x)
        for (long y = 0; y < f.order(); ++y) {
            SmallField::Elt lhs = f.sub(f.mul(x, x), f.mul(a, f.mul(y, y)));
            if (lhs == b) ++count;
        }
    return count;
}

namespace {

using Subspace = std::vector<std::vector<SmallField::Elt>>;  // RREF rows

// Reduce v against the RREF rows; returns true when v lies in the span.
bool in_span(const SmallField& f, const Subspace& rows, std::vector<SmallField::Elt> v) {
    for (const auto& row : rows) {
        int pivot = -1;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) {
                pivot = static_cast<int>(j);
                break;
            }
        if (pivot < 0) continue;
        SmallField::Elt c = v[static_cast<std::size_t>(pivot)];
        if (c == 0) continue;
        SmallField::Elt factor = f.mul(c, f.inv(row[static_cast<std::size_t>(pivot)]));
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = f.sub(v[j], f.mul(factor, row[j]));
    }
    return std::all_of(v.begin(), v.end(), [](SmallField::Elt x) { return x == 0; });
}

bool subspace_contained(const SmallField& f, const Subspace& small, const Subspace& big) {
    for (const auto& row : small)
        if (!in_span(f, big, row)) return false;
    return true;
}

std::vector<Subspace> all_subspaces(const SmallField& f, int n, int k) {
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    // Pivot columns as k-subsets of {0..n-1}; free entries sit to the right
    // of each pivot, off the other pivot columns.
    std::vector<int> pivots(static_cast<std::size_t>(k));
    std::iota(pivots.begin(), pivots.end(), 0);
    for (;;) {
        std::vector<std::pair<int, int>> free_cells;
        for (int i = 0; i < k; ++i)
            for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < n; ++j)
                if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
                    free_cells.emplace_back(i, j);
        std::vector<SmallField::Elt> values(free_cells.size(), 0);
        for (;;) {
            Subspace rows(static_cast<std::size_t>(k),
                          std::vector<SmallField::Elt>(static_cast<std::size_t>(n), 0));
            for (int i = 0; i < k; ++i)
                rows[static_cast<std::size_t>(i)]
                    [static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = 1;
            for (std::size_t c = 0; c < free_cells.size(); ++c)
                rows[static_cast<std::size_t>(free_cells[c].first)]
                    [static_cast<std::size_t>(free_cells[c].second)] = values[c];
            out.push_back(std::move(rows));
            // Odometer over the free entries.
            std::size_t pos = 0;
            while (pos < values.size()) {
                if (++values[pos] < f.order()) break;
                values[pos] = 0;
                ++pos;
            }
            if (pos == values.size()) break;
        }
        // Next pivot combination.
        int i = k - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pivots[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace

long flag_count(const SmallField& f, int n, const std::vector<int>& dims) {
    require(n >= 1, "domain", "ambient dimension must be positive");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        require(dims[i] >= 1 && dims[i] <= n - 1, "domain",
                "flag dimensions must lie strictly between 0 and n");
        if (i > 0) require(dims[i] > dims[i - 1], "domain", "flag dimensions must increase");
    }
    if (dims.empty()) return 1;

    std::vector<std::vector<Subspace>> levels;
    for (int d : dims) levels.push_back(all_subspaces(f, n, d));

    std::vector<long> counts(levels.front().size(), 1);
    for (std::size_t lvl = 1; lvl < levels.size(); ++lvl) {
        std::vector<long> next(levels[lvl].size(), 0);
        for (std::size_t j = 0; j < levels[lvl].size(); ++j)
            for (std::size_t i = 0; i < levels[lvl - 1].size(); ++i)
                if (counts[i] != 0 &&
                    subspace_contained(f, levels[lvl - 1][i], levels[lvl][j]))
                    next[j] += counts[i];
        counts = std::move(next);
    }
    return std::accumulate(counts.begin(), counts.end(), 0L);
}

long p1_pair_count(const SmallField& f, PairMode mode) {
    if (mode == PairMode::Ordered) {
        // Points of P^1(f): [x : 1] for x in f, plus [1 : 0].
        long points = f.order() + 1;
        long count = 0;
        for (long i = 0; i < points; ++i)
            for (long j = 0; j < points; ++j)
                if (i != j) ++count;
        return count;
    }
    // Unordered pairs of distinct points of P^1 over the quadratic extension,
    // stable under the Frobenius x -> x^q.
    SmallField ext(f.characteristic(), 2 * f.degree());
    long q = f.order();
    long points = ext.order() + 1;  // code ext.order() is the point at infinity
    auto frob = [&](long pt) {
        if (pt == ext.order()) return pt;
        return ext.pow(pt, q);
    };
    long count = 0;
    for (long i = 0; i < points; ++i)
        for (long j = i + 1; j < points; ++j) {
            long fi = frob(i), fj = frob(j);
            if ((fi == i && fj == j) || (fi == j && fj == i)) ++count;
        }
    return count;
}

long twisted_torus_count(const IntMatrix& a, long q, int split_degree) {
    require(a.square(), "not_square", "torus automorphism must be square");
    require(q >= 2, "domain", "q must be at least 2");
    require(split_degree >= 1, "domain", "split degree must be positive");
    require(a.pow(static_cast<unsigned>(split_degree)).is_identity(), "domain",
            "automorphism does not split over the given degree");
    int h = a.rows();
    long modulus = 1;
    for (int i = 0; i < split_degree; ++i) {
        require(modulus <= kEnumerationCap / q, "enumeration_cap",
                "q^split_degree exceeds the enumeration cap");
        modulus *= q;
    }
    modulus -= 1;
    if (h == 0) return 1;
    if (modulus > 1) {
        long domain = 1;
        for (int i = 0; i < h; ++i) {
            require(domain <= kEnumerationCap / modulus, "enumeration_cap",
                    "enumeration domain exceeds 10^7 points");
            domain *= modulus;
        }
    }

    std::vector<std::vector<long>> rows(static_cast<std::size_t>(h),
                                        std::vector<long>(static_cast<std::size_t>(h)));
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            BigInt r = a.at(i, j) % modulus;
            if (r < 0) r += modulus;
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (r.get_si() * (q % modulus)) % modulus;  // q * a mod (q^s - 1)
        }

    std::vector<long> x(static_cast<std::size_t>(h), 0);
    long count = 0;
    for (;;) {
        bool fixed = true;
        for (int i = 0; i < h && fixed; ++i) {
            long acc = 0;
            for (int j = 0; j < h; ++j)
                acc = (acc + rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                                 x[static_cast<std::size_t>(j)]) %
                      modulus;
            fixed = (acc == x[static_cast<std::size_t>(i)]);
        }
        if (fixed) ++count;
        std::size_t pos = 0;
        while (pos < x.size()) {
            if (++x[pos] < modulus) break;
            x[pos] = 0;
            ++pos;
        }
        if (pos == x.size()) break;
    }
    return count;
}

BigInt glr_closed_form(int r, const BigInt& q) {
    require(r >= 1, "domain", "r must be positive");
    BigInt plus = big_pow(q + 1, static_cast<unsigned long>(r));
    BigInt minus = big_pow(q - 1, static_cast<unsigned long>(r));
    BigInt qr = plus + minus;
    require(qr % 2 == 0, "internal", "parity failure in the closed form");
    qr /= 2;

    BigInt out = qr * big_pow(q, static_cast<unsigned long>(r) * (2 * r - 1));
    for (int i = 1; i <= r; ++i) out *= big_pow(q, 2 * static_cast<unsigned long>(i) - 1) - 1;
    for (int j = 1; j <= r; ++j) {
        // (q^(2j) - 1) / (q^2 - 1) = 1 + q^2 + ... + q^(2j-2)
        BigInt geom(0);
        for (int k = 0; k < j; ++k) geom += big_pow(q, 2 * static_cast<unsigned long>(k));
        out *= geom;
    }
    return out;
}

bool is_prime_power(long q, int& p, int& m) {
    if (q < 2) return false;
    long base = q;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            base = d;
            break;
        }
    long x = q;
    int e = 0;
    while (x % base == 0) {
        x /= base;
        ++e;
    }
    if (x != 1) return false;
    p = static_cast<int>(base);
    m = e;
    return true;
}

}  // namespace homcount::oracle
