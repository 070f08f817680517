#pragma once

#include <random>
#include <vector>

#include "drgtight/graph_params.hpp"

namespace drgtight::testing {

inline Scalar S(long v) { return Scalar::from_int(v); }
inline Scalar S(long n, long d) { return Scalar::from_ratio(n, d); }

inline IntersectionArray make(int D, std::vector<long> b, std::vector<long> c) {
  std::vector<Scalar> bs, cs;
  for (long v : b) bs.push_back(S(v));
  for (long v : c) cs.push_back(S(v));
  return validate_array(D, std::move(bs), std::move(cs));
}

// {3,2,1;1,2,3} - the 3-cube, bipartite, case I
inline IntersectionArray q3() { return make(3, {3, 2, 1}, {1, 2, 3}); }

// {4,3,2,1;1,2,3,4} - the 4-cube, bipartite, case I
inline IntersectionArray q4() { return make(4, {4, 3, 2, 1}, {1, 2, 3, 4}); }

// {9,4,1;1,4,9} - Johnson J(6,3), case IV, tight pair (3,-3)
inline IntersectionArray j63() { return make(3, {9, 4, 1}, {1, 4, 9}); }

// {16,9,4,1;1,4,9,16} - Johnson J(8,4), case IV, tight pair (8,-4)
inline IntersectionArray j84() { return make(4, {16, 9, 4, 1}, {1, 4, 9, 16}); }

// {3,2,2,1;1,1,1,2} - the Coxeter graph, a = (0,0,0,1,1), case II
inline IntersectionArray coxeter() { return make(4, {3, 2, 2, 1}, {1, 1, 1, 2}); }

// {4,3,2,1;1,1,2,4} - synthetic, a = (0,0,1,1,0), case III
inline IntersectionArray case3() { return make(4, {4, 3, 2, 1}, {1, 1, 2, 4}); }

// {5,2,1;1,2,5} - the icosahedron, case IV, tight pair (sqrt5, -sqrt5)
inline IntersectionArray icosa() { return make(3, {5, 2, 1}, {1, 2, 5}); }

// {15,6,1;1,6,15} - the halved 6-cube, case IV, tight pair (5, -3)
inline IntersectionArray halved6() { return make(3, {15, 6, 1}, {1, 6, 15}); }

// Hamming H(D,q): b_i = (D-i)(q-1), c_i = i; eigenvalues (D-j)(q-1) - j
inline IntersectionArray hamming(int D, long q) {
  std::vector<long> b, c;
  for (int i = 0; i <= D - 1; ++i) b.push_back((D - i) * (q - 1));
  for (int i = 1; i <= D; ++i) c.push_back(i);
  return make(D, b, c);
}

inline std::vector<IntersectionArray> all_fixtures() {
  return {q3(), q4(), j63(), j84(), coxeter(), case3(), icosa(), halved6()};
}

using Rng = std::mt19937_64;

inline Scalar random_rational(Rng& rng, long max_num = 30, long max_den = 10) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Scalar::from_ratio(num(rng), den(rng));
}

/// Random theta in [-k, k] as an exact rational.
inline Scalar random_theta(Rng& rng, const IntersectionArray& arr) {
  std::uniform_int_distribution<long> num(-60, 60);
  return arr.k() * Scalar::from_ratio(num(rng), 60);
}

/// Random case-I array: a_i = 0 for i <= D-1, a_D free.
inline IntersectionArray random_case1(Rng& rng) {
  std::uniform_int_distribution<int> pickD(3, 5);
  const int D = pickD(rng);
  std::uniform_int_distribution<long> kext(D, D + 6);
  const long k = kext(rng);
  std::vector<long> c{1};
  for (int i = 2; i <= D - 1; ++i) {
    std::uniform_int_distribution<long> step(c.back(), k - 1);
    c.push_back(step(rng));
  }
  std::uniform_int_distribution<long> last(c.back(), k);  // c_D = k makes it bipartite
  c.push_back(last(rng));
  std::vector<long> b{k};
  for (int i = 1; i <= D - 1; ++i) b.push_back(k - c[i - 1]);
  return make(D, b, c);
}

/// Random case-II array: a_i = 0 for i <= D-2, a_{D-1} > 0.
inline IntersectionArray random_case2(Rng& rng) {
  std::uniform_int_distribution<int> pickD(3, 5);
  const int D = pickD(rng);
  std::uniform_int_distribution<long> kext(D + 2, D + 8);
  const long k = kext(rng);
  std::vector<long> c{1};
  for (int i = 2; i <= D - 1; ++i) {
    std::uniform_int_distribution<long> step(c.back(), std::min(c.back() + 2, k - 3));
    c.push_back(step(rng));
  }
  std::vector<long> b{k};
  for (int i = 1; i <= D - 2; ++i) b.push_back(k - c[i - 1]);
  // pick a_{D-1} in 1..k-c_{D-1}-1 so b_{D-1} stays positive
  std::uniform_int_distribution<long> apick(1, k - c[D - 2] - 1);
  const long aD1 = apick(rng);
  b.push_back(k - c[D - 2] - aD1);
  // c_D anywhere in [c_{D-1}, k] keeps a_D >= 0
  std::uniform_int_distribution<long> cD(c.back(), k);
  c.push_back(cD(rng));
  return make(D, b, c);
}

}  // namespace drgtight::testing
