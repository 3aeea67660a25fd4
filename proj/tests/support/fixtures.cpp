#include "fixtures.hpp"

#include <stdexcept>

namespace cotv::testing {

Rational q(long p, long d) { return Rational(p, d); }

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.push_back(x);
  return v;
}

Polyhedron seg(Rational a, Rational b) { return Polyhedron::from_generators(1, {{a}, {b}}, {}); }
Polyhedron half(Rational a, long dir) { return Polyhedron::from_generators(1, {{a}}, {{Integer(dir)}}); }

std::size_t cell_by_key(const PolyComplex& c, const std::string& key) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c.cell(i).key() == key) return i;
  throw std::runtime_error("no cell " + key);
}

namespace {

Hirzebruch build() {
  Hirzebruch x;
  const auto s0 = build_complex(1, {half(q(-1, 2), -1), seg(q(-1, 2), q(0)), half(q(0), 1)});
  const auto sinf = build_complex(1, {half(q(0), -1), half(q(0), 1)});
  const auto fan = recession_fan(s0);
  x.df = DivisorialFan(1, {"0", "inf"}, {s0, sinf}, fan);
  x.s0_left = cell_by_key(s0, "conv(-1/2)+cone(-1)");
  x.s0_mid = cell_by_key(s0, "conv(-1/2;0)");
  x.s0_right = cell_by_key(s0, "cone(1)");
  x.v0_half = cell_by_key(s0, "conv(-1/2)");
  x.v0_zero = cell_by_key(s0, "cone()");
  x.sinf_left = cell_by_key(sinf, "cone(-1)");
  x.sinf_right = cell_by_key(sinf, "cone(1)");
  x.vinf_zero = cell_by_key(sinf, "cone()");
  x.tau0 = cell_by_key(fan, "cone(-1)");
  x.zero = cell_by_key(fan, "cone()");
  x.tau1 = cell_by_key(fan, "cone(1)");

  x.h.cells.resize(2);
  x.h.cells[0][x.s0_left] = {iv({3}), 1};
  x.h.cells[0][x.s0_mid] = {iv({1}), 0};
  x.h.cells[0][x.s0_right] = {iv({0}), 0};
  x.h.cells[1][x.sinf_left] = {iv({3}), -1};
  x.h.cells[1][x.sinf_right] = {iv({0}), -1};
  x.h.recession[x.tau0] = iv({3});
  x.h.recession[x.tau1] = iv({0});

  x.c1.codim = 1;
  x.c1.values[WeightIndex::vertical(0, x.v0_half)] = 1;
  x.c1.values[WeightIndex::vertical(0, x.v0_zero)] = 1;
  x.c1.values[WeightIndex::vertical(1, x.vinf_zero)] = 3;
  x.c1.values[WeightIndex::horizontal(x.tau1)] = 3;
  x.c1.values[WeightIndex::horizontal(x.tau0)] = 2;
  return x;
}

}  // namespace

const Hirzebruch& hirzebruch() {
  static const Hirzebruch x = build();
  return x;
}

}  // namespace cotv::testing
