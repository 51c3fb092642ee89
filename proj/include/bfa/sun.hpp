// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace bfa::sun {

using cxd = std::complex<double>;

inline constexpr std::int64_t kDefaultTableauCap = 1'000'000;

/// Irreducible representation label for SU(n), stored in a-coordinates
/// a_1..a_{n-1} (non-negative integers). The partition coordinates are
/// derived: lambda_k = a_k + ... + a_{n-1}, lambda_n = 0.
struct HighestWeight {
  int n = 2;
  std::vector<int> a;

  HighestWeight() = default;
  HighestWeight(int rank, std::vector<int> coords);
  static HighestWeight from_lambda(int rank, const std::vector<long long>& lambda);

  std::vector<long long> lambda() const;
  long long lambda1() const;  // word length of the label, equals sum of a_k
  long long dimension() const;

  bool operator==(const HighestWeight& o) const { return n == o.n && a == o.a; }
  bool operator<(const HighestWeight& o) const;
  std::string str() const;
};

/// Semistandard filling of the shape: rows weakly increase, columns strictly
/// increase. `content[k-1]` counts the occurrences of the entry k.
struct Tableau {
  std::vector<std::vector<int>> rows;
  std::vector<int> content;
};

struct ComplexDiagonal {
  std::vector<cxd> x;

  int size() const { return static_cast<int>(x.size()); }
  cxd det() const;
  bool is_special_linear(double tol = 1e-12) const;
};

/// All semistandard tableaux of the given shape with entries 1..n, in
/// lexicographic order of the row-major entry word. Throws std::length_error
/// ("instance too large") when the tableau count exceeds `cap`.
std::vector<Tableau> enumerate_tableaux(const HighestWeight& w,
                                        std::int64_t cap = kDefaultTableauCap);

/// Eigenvalues of the diagonal torus action: entry for a tableau T is
/// prod_k x_k^{t_k}, in enumerate_tableaux order. Valid for any nonzero
/// complex entries (holomorphic extension of the representation).
std::vector<cxd> torus_action(const HighestWeight& w, const ComplexDiagonal& d,
                              std::int64_t cap = kDefaultTableauCap);

/// Diagonal of the Lie derivative along the j-th torus generator: entry for
/// a tableau T is i(t_j - t_n), 1 <= j <= n-1.
std::vector<cxd> lie_derivative_diag(const HighestWeight& w, int j,
                                     std::int64_t cap = kDefaultTableauCap);

enum class NormMethod { Brute, Closed };

/// Operator norm of the holomorphically extended representation at a
/// diagonal point: Brute maximises |prod x_k^{t_k}| over the tableau basis,
/// Closed multiplies the fundamental norms (products of the k largest
/// moduli) raised to the a_k.
double complexified_norm(const HighestWeight& w, const ComplexDiagonal& d,
                         NormMethod method, std::int64_t cap = kDefaultTableauCap);

double log_complexified_norm_closed(const HighestWeight& w, const ComplexDiagonal& d);

/// Pieri step: decompose (rep a) (x) (k-th fundamental rep) into a multiset
/// of a-coordinate labels, one per admissible k-element subset J of
/// {1,...,n}. Duplicates are retained as multiplicities.
std::vector<std::vector<int>> tensor_with_fundamental(const std::vector<int>& a, int k);

/// SU(2) Clebsch-Gordan multiset {|a-b|, |a-b|+2, ..., a+b}, obtained by
/// recursion on b through the Pieri step with multiplicity bookkeeping.
std::vector<int> tensor_decompose_su2(int a, int b);

/// Restriction of an SU(n) irreducible to SU(n-1): enumerate interlacing
/// integer patterns mu against lambda and normalise each by subtracting its
/// last entry. Multiplicities retained.
std::vector<HighestWeight> branch_to_sun1(const HighestWeight& w);

/// chi_a(x) = sum_{k=0}^{a} x^{a-2k} for nonzero complex x.
cxd su2_character(int a, cxd x);

}  // namespace bfa::sun
