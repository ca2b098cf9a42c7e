// Regenerates the bundled example files: make_data <output-dir>

#include <fstream>
#include <iostream>

#include "bihom/corpus.hpp"
#include "bihom/io.hpp"

using namespace bihom;

namespace {

void put(const std::string& dir, const std::string& file, const io::AlgebraFile& a) {
  std::ofstream(dir + "/" + file) << io::pretty(io::render(a)) << "\n";
}

int levi_civita(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  const std::size_t v[4] = {a, b, c, d};
  int s = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (v[i] == v[j]) return 0;
      if (v[i] > v[j]) s = -s;
    }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_data <output-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  put(dir, "osp12.json", io::bundle("osp12", osp12()));
  for (const auto& [name, g] : corpus::three_lie()) {
    auto a = io::bundle(name, g);
    const auto aut = corpus::automorphisms(name);
    a.twist = {aut[0].matrix(), aut[1].matrix()};
    put(dir, name + ".json", a);
  }

  const auto g = corpus::n4();
  auto t = io::bundle("tstar_n4", tstar_extension(g, zero_cocycle(g, coadjoint(g))));
  std::vector<Vec> dual;
  for (std::size_t i = 0; i < 4; ++i) dual.push_back(unit_vec(8, 4 + i));
  t.subspaces.emplace_back("dual", Subspace(8, dual));
  put(dir, "tstar_n4.json", t);

  // θ(e_a, e_b, e_c) = Σ_d ε_abcd e_d*
  CocycleTensor th(4, 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c) {
        Vec v(4);
        for (std::size_t d = 0; d < 4; ++d) v[d] = Scalar(levi_civita(a, b, c, d));
        if (!is_zero(v)) th.set({a, b, c}, v);
      }
  auto eps = io::bundle("n4_eps", g);
  eps.module_kind = "coadjoint";
  eps.module = coadjoint(g);
  eps.theta = th;
  put(dir, "n4_eps_theta.json", eps);

  auto ad = io::bundle("n4_adjoint", g);
  ad.module_kind = "adjoint";
  ad.module = adjoint(g);
  ad.f = Matrix::diagonal({Scalar(1), Scalar(2), Scalar(3), Scalar(5)});
  put(dir, "n4_adjoint.json", ad);

  const GradedSpace line = GradedSpace::even(1);
  TotAssoc3 unit{line, TriBracket(1), EvenMap::identity(line), EvenMap::identity(line)};
  unit.mu.set({0, 0, 0}, Vec{Scalar(1)});
  io::AlgebraFile af;
  af.name = "line";
  af.arity = 3;
  af.associative = unit;
  put(dir, "assoc_line.json", af);
}
