#pragma once

// Hand-built reference instances shared by the unit tests.

#include <cstddef>
#include <string>

#include "cotv/mweights.hpp"
#include "cotv/suppfn.hpp"

namespace cotv::testing {

Rational q(long p, long d = 1);
IntVector iv(std::initializer_list<long> xs);
Polyhedron seg(Rational a, Rational b);
Polyhedron half(Rational a, long dir);

// The Hirzebruch surface F_2 as a two-point divisorial fan of rank one,
// with the support function h and the weight c1 = (1, 1, 3; 3, 2).
struct Hirzebruch {
  DivisorialFan df;
  SupportFunction h;
  Weight c1;
  std::size_t s0_left, s0_mid, s0_right, v0_half, v0_zero;  // cells of slice 0
  std::size_t sinf_left, sinf_right, vinf_zero;             // cells of slice "inf"
  std::size_t tau0, zero, tau1;                             // cones of the recession fan
};
const Hirzebruch& hirzebruch();

std::size_t cell_by_key(const PolyComplex& c, const std::string& key);

}  // namespace cotv::testing
