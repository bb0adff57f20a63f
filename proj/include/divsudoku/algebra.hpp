// Finite fields, quadratic nearfields, Stein-multiplication squares and the
// subspace/coset constructions.
#pragma once

#include <string>
#include <vector>

#include "divsudoku/types.hpp"

namespace divsudoku {

// GF(p^k) with the lexicographically smallest monic irreducible modulus
// (coefficients read high-to-low as a base-p integer). Elements are encoded
// 0..p^k-1 as little-endian coefficient vectors: code = sum coeff_i * p^i.
class GaloisField {
  public:
    GaloisField(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    int order() const { return order_; }
    const std::vector<int>& modulus() const { return modulus_; }  // c0..ck

    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const;
    int pow(int a, long long e) const;
    int inv(int a) const;
    int frobenius(int a, int q) const { return pow(a, q); }  // a -> a^q

    // Elements fixed by x -> x^q: the subfield of order q (q a power of p).
    std::vector<int> subfield(int q) const;

  private:
    int p_, k_, order_;
    std::vector<int> modulus_;
    std::vector<int> coeffs(int code) const;
    int code(const std::vector<int>& c) const;
};

// D_{q^2} for odd prime power q: x o y = x*y if x is a square in GF(q^2),
// otherwise x * y^q.
class QuadraticNearfield {
  public:
    QuadraticNearfield(int p, int k);  // underlying field GF(p^k), k even

    const GaloisField& field() const { return F_; }
    int q() const { return q_; }
    bool is_square(int x) const { return square_[x]; }
    int mul(int a, int b) const;  // o
    int inv(int a) const;         // two-sided o-inverse

  private:
    GaloisField F_;
    int q_;
    std::vector<bool> square_;
};

// x*y = x + (y-x)c over GF(q^2); c not in {0,1}.
LatinSquare stein_field_square(const GaloisField& F, int c);

// x*y = x + (y-x) o c over D_{q^2}; c not in {0,1}.
LatinSquare stein_nearfield_square(const QuadraticNearfield& D, int c);

// Smallest element outside the subfield F_q (and outside {0,1}).
int default_twist(const GaloisField& F, int q);

// s-dimensional GF(r)-subspaces of the field viewed as a GF(r)-vector space,
// as sorted element lists. r must be the field characteristic.
std::vector<std::vector<int>> all_subspaces(const GaloisField& F, int s);

// Subspaces W with W n Wc = {0}; asserts the equivalent conditions
// W n W(c-1) = 0 and Wc n W(c-1) = 0 along the way.
std::vector<std::vector<int>> good_subspaces(const GaloisField& F, int s, int c);

// Additive-coset partition of the field by a subspace of index sqrt(order).
SudokuPartition coset_partition(const GaloisField& F, const std::vector<int>& W);

// The q+1 one-dimensional F_q-subspace coset partitions ("line partitions").
std::vector<SudokuPartition> line_partitions(const GaloisField& F, int q);

struct ConstructionReport {
    LatinSquare square;
    int c = 0;
    std::vector<SudokuPartition> verified_partitions;  // coset partitions that check out
    bool lines_affine = false;       // the q+1 line partitions form an affine collection
    bool isotopic_to_group = false;
    int exact_sigma = -1;            // full-scan sigma for q <= 4, else -1
};

// kind: "field" or "nearfield".
ConstructionReport construction_report(int q, const std::string& kind, int c = -1,
                                       int threads = 1);

}  // namespace divsudoku
