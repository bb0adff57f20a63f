#include "divsudoku/algebra.hpp"

#include <algorithm>
#include <bitset>
#include <functional>
#include <set>
#include <stdexcept>

#include "divsudoku/classification.hpp"
#include "divsudoku/multipart.hpp"

namespace divsudoku {

namespace {

// Multiply two coefficient lists (low degree first) and reduce by the monic
// modulus, all mod p.
std::vector<int> pmulmod(const std::vector<int>& a, const std::vector<int>& b,
                         const std::vector<int>& mod, int p) {
    std::vector<int> res(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j) res[i + j] = (res[i + j] + a[i] * b[j]) % p;
    const int d = static_cast<int>(mod.size()) - 1;
    for (int i = static_cast<int>(res.size()) - 1; i >= d; --i) {
        int c = res[i];
        if (c)
            for (int j = 0; j <= d; ++j)
                res[i - d + j] = ((res[i - d + j] - c * mod[j]) % p + p * p) % p;
    }
    res.resize(d);
    return res;
}

bool poly_irreducible(const std::vector<int>& poly, int p) {
    const int d = static_cast<int>(poly.size()) - 1;
    // Trial division by every monic polynomial of degree <= d/2.
    for (int deg = 1; deg <= d / 2; ++deg) {
        int count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (int code = 0; code < count; ++code) {
            std::vector<int> div(deg + 1);
            int c = code;
            for (int i = 0; i < deg; ++i) {
                div[i] = c % p;
                c /= p;
            }
            div[deg] = 1;
            std::vector<int> rem = poly;
            for (int i = static_cast<int>(rem.size()) - 1; i >= deg; --i) {
                int lead = rem[i] % p;
                if (lead)
                    for (int j = 0; j <= deg; ++j)
                        rem[i - deg + j] = ((rem[i - deg + j] - lead * div[j]) % p + p * p) % p;
            }
            bool zero = true;
            for (int i = 0; i < deg; ++i)
                if (rem[i] % p != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

GaloisField::GaloisField(int p, int k) : p_(p), k_(k) {
    if (p < 2 || k < 1) throw std::invalid_argument("bad field parameters");
    order_ = 1;
    for (int i = 0; i < k; ++i) order_ *= p;
    if (k == 1) {
        modulus_ = {0, 1};
        return;
    }
    // Lexicographically smallest monic irreducible, reading coefficients
    // high-to-low as a base-p integer.
    for (int code = 0; code < order_; ++code) {
        // `code` reads c_{k-1}..c_0 high-to-low: digit p^i of code is c_i.
        std::vector<int> coeffs(k);
        int c = code;
        for (int i = 0; i < k; ++i) {
            coeffs[i] = c % p;
            c /= p;
        }
        std::vector<int> cand(coeffs);
        cand.push_back(1);
        if (poly_irreducible(cand, p)) {
            modulus_ = cand;
            return;
        }
    }
    throw std::logic_error("no irreducible modulus found");
}

std::vector<int> GaloisField::coeffs(int code) const {
    std::vector<int> c(k_);
    for (int i = 0; i < k_; ++i) {
        c[i] = code % p_;
        code /= p_;
    }
    return c;
}

int GaloisField::code(const std::vector<int>& c) const {
    int v = 0, w = 1;
    for (int i = 0; i < k_; ++i) {
        v += (c[i] % p_) * w;
        w *= p_;
    }
    return v;
}

int GaloisField::add(int a, int b) const {
    auto ca = coeffs(a), cb = coeffs(b);
    for (int i = 0; i < k_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
    return code(ca);
}

int GaloisField::neg(int a) const {
    auto c = coeffs(a);
    for (int i = 0; i < k_; ++i) c[i] = (p_ - c[i]) % p_;
    return code(c);
}

int GaloisField::mul(int a, int b) const {
    return code(pmulmod(coeffs(a), coeffs(b), modulus_, p_));
}

int GaloisField::pow(int a, long long e) const {
    int r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

int GaloisField::inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, order_ - 2);
}

std::vector<int> GaloisField::subfield(int q) const {
    std::vector<int> out;
    for (int a = 0; a < order_; ++a)
        if (pow(a, q) == a) out.push_back(a);
    return out;
}

QuadraticNearfield::QuadraticNearfield(int p, int k) : F_(p, k) {
    if (k % 2 != 0 || p == 2) throw std::invalid_argument("quadratic nearfield needs odd q = p^(k/2)");
    q_ = 1;
    for (int i = 0; i < k / 2; ++i) q_ *= p;
    square_.assign(F_.order(), false);
    square_[0] = true;
    const long long half = (static_cast<long long>(F_.order()) - 1) / 2;
    for (int x = 1; x < F_.order(); ++x) square_[x] = F_.pow(x, half) == 1;
}

int QuadraticNearfield::mul(int a, int b) const {
    return square_[a] ? F_.mul(a, b) : F_.mul(a, F_.pow(b, q_));
}

int QuadraticNearfield::inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    for (int b = 1; b < F_.order(); ++b)
        if (mul(a, b) == 1 && mul(b, a) == 1) return b;
    throw std::logic_error("no two-sided inverse");
}

LatinSquare stein_field_square(const GaloisField& F, int c) {
    const int n = F.order();
    LatinSquare L(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) L.at(x, y) = F.add(x, F.mul(F.sub(y, x), c));
    return L;
}

LatinSquare stein_nearfield_square(const QuadraticNearfield& D, int c) {
    const GaloisField& F = D.field();
    const int n = F.order();
    LatinSquare L(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) L.at(x, y) = F.add(x, D.mul(F.sub(y, x), c));
    return L;
}

int default_twist(const GaloisField& F, int q) {
    auto sub = F.subfield(q);
    for (int a = 2; a < F.order(); ++a)
        if (std::find(sub.begin(), sub.end(), a) == sub.end()) return a;
    throw std::logic_error("no element outside the subfield");
}

std::vector<std::vector<int>> all_subspaces(const GaloisField& F, int s) {
    const int p = F.p(), n = F.order();
    int target = 1;
    for (int i = 0; i < s; ++i) target *= p;
    std::set<std::vector<int>> subs;
    std::vector<int> basis(s);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == s) {
            std::set<int> span = {0};
            for (int i = 0; i < s; ++i) {
                std::set<int> grown = span;
                int lb = 0;
                for (int l = 1; l < p; ++l) {
                    lb = F.add(lb, basis[i]);
                    for (int v : span) grown.insert(F.add(v, lb));
                }
                span = std::move(grown);
            }
            if (static_cast<int>(span.size()) == target)
                subs.emplace(span.begin(), span.end());
            return;
        }
        for (int b = start; b < n; ++b) {
            basis[pos] = b;
            rec(pos + 1, b + 1);
        }
    };
    rec(0, 1);
    return {subs.begin(), subs.end()};
}

std::vector<std::vector<int>> good_subspaces(const GaloisField& F, int s, int c) {
    std::vector<std::vector<int>> out;
    const int cm1 = F.sub(c, 1);
    for (const auto& W : all_subspaces(F, s)) {
        std::set<int> set_w(W.begin(), W.end()), Wc, Wc1;
        for (int w : W) {
            Wc.insert(F.mul(w, c));
            Wc1.insert(F.mul(w, cm1));
        }
        auto trivial_meet = [](const std::set<int>& A, const std::set<int>& B) {
            int common = 0;
            for (int a : A)
                if (B.count(a)) ++common;
            return common == 1;  // only 0
        };
        bool g1 = trivial_meet(set_w, Wc);
        bool g2 = trivial_meet(set_w, Wc1);
        bool g3 = trivial_meet(Wc, Wc1);
        if (g1 != g2 || g2 != g3)
            throw std::logic_error("subspace goodness conditions disagree");
        if (g1) out.push_back(W);
    }
    return out;
}

SudokuPartition coset_partition(const GaloisField& F, const std::vector<int>& W) {
    const int n = F.order();
    const int m = static_cast<int>(W.size());
    if (m * m != n) throw std::invalid_argument("subspace must have index sqrt(order)");
    std::vector<int> block_of(n, -1);
    int next = 0;
    for (int a = 0; a < n; ++a) {
        if (block_of[a] >= 0) continue;
        for (int w : W) block_of[F.add(a, w)] = next;
        ++next;
    }
    return SudokuPartition(m, std::move(block_of)).canonical();
}

std::vector<SudokuPartition> line_partitions(const GaloisField& F, int q) {
    auto sub = F.subfield(q);
    std::set<std::vector<int>> lines;
    for (int v = 1; v < F.order(); ++v) {
        std::set<int> W;
        for (int l : sub) W.insert(F.mul(l, v));
        lines.emplace(W.begin(), W.end());
    }
    std::vector<SudokuPartition> out;
    for (const auto& W : lines) out.push_back(coset_partition(F, W));
    return out;
}

namespace {

// Synchronized division-sudoku check for one partition, any order up to 121.
bool synchronized_partition_check(const LatinSquare& L, const SudokuPartition& p) {
    const int n = L.n, m = p.rank;
    std::vector<std::bitset<128>> s1(m * m), s2(m * m), s3(m * m);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int z = L.at(x, y);
            s1[p.block_of[x] * m + p.block_of[y]].set(z);
            s2[p.block_of[x] * m + p.block_of[z]].set(y);
            s3[p.block_of[y] * m + p.block_of[z]].set(x);
        }
    for (int i = 0; i < m * m; ++i)
        if (static_cast<int>(s1[i].count()) != n || static_cast<int>(s2[i].count()) != n ||
            static_cast<int>(s3[i].count()) != n)
            return false;
    return true;
}

// q = p^j for the smallest prime divisor p; throws if q is not a prime power.
std::pair<int, int> prime_power(int q) {
    for (int p = 2; p <= q; ++p) {
        if (q % p) continue;
        int j = 0, v = q;
        while (v % p == 0) {
            v /= p;
            ++j;
        }
        if (v != 1) throw std::invalid_argument("q must be a prime power");
        return {p, j};
    }
    throw std::invalid_argument("q must be >= 2");
}

}  // namespace

ConstructionReport construction_report(int q, const std::string& kind, int c, int threads) {
    auto [p, j] = prime_power(q);
    GaloisField F(p, 2 * j);
    ConstructionReport rep;
    rep.c = c >= 0 ? c : default_twist(F, q);
    auto sub = F.subfield(q);
    if (rep.c < 2 || std::find(sub.begin(), sub.end(), rep.c) != sub.end())
        throw std::invalid_argument("twist element must lie outside the subfield");

    if (kind == "field") {
        rep.square = stein_field_square(F, rep.c);
    } else if (kind == "nearfield") {
        QuadraticNearfield D(p, 2 * j);
        rep.square = stein_nearfield_square(D, rep.c);
    } else {
        throw std::invalid_argument("kind must be 'field' or 'nearfield'");
    }

    // Coset partitions of the q-element GF(p)-subspaces that make the square a
    // synchronized division sudoku.
    for (const auto& W : all_subspaces(F, j)) {
        SudokuPartition part = coset_partition(F, W);
        if (synchronized_partition_check(rep.square, part))
            rep.verified_partitions.push_back(part);
    }
    std::sort(rep.verified_partitions.begin(), rep.verified_partitions.end());

    rep.lines_affine = is_affine_collection(line_partitions(F, q));
    rep.isotopic_to_group = is_isotopic_to_group(rep.square);
    if (q == 3)
        rep.exact_sigma = static_cast<int>(sigma_partitions(rep.square).size());
    else if (q == 4)
        rep.exact_sigma = static_cast<int>(sigma_partitions_rank4(rep.square, threads).size());
    return rep;
}

}  // namespace divsudoku
