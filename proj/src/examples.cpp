#include "fpcube/examples.hpp"

namespace fpcube::examples {

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return t;
}

namespace {
FactorSpec line_factor(int id, const std::string& name) {
  FactorSpec f;
  f.id = id;
  f.kind = FactorKind::FreeAbelian;
  f.rank = 1;
  f.name = name;
  return f;
}
}  // namespace

Presentation surface_genus2() {
  Presentation p;
  p.factors = FactorSet({line_factor(0, "a"), line_factor(1, "b"), line_factor(2, "c"),
                         line_factor(3, "d")});
  std::vector<Syllable> syl = {
      {0, {1}}, {1, {1}}, {0, {-1}}, {1, {-1}}, {2, {1}}, {3, {1}}, {2, {-1}}, {3, {-1}}};
  p.relators.push_back(make_relator(p.factors, p.factors.word(syl), "surface2"));
  return p;
}

Presentation dihedral7() {
  Presentation p;
  FactorSpec A;
  A.id = 0;
  A.kind = FactorKind::Finite;
  A.table = cyclic_table(2);
  A.name = "a";
  FactorSpec B = A;
  B.id = 1;
  B.name = "b";
  p.factors = FactorSet({A, B});
  std::vector<Syllable> syl;
  for (int i = 0; i < 7; ++i) {
    syl.push_back({0, {1}});
    syl.push_back({1, {1}});
  }
  p.relators.push_back(make_relator(p.factors, p.factors.word(syl), "ab7"));
  return p;
}

Presentation finite_von_dyck() {
  Presentation p;
  FactorSpec A;
  A.id = 0;
  A.kind = FactorKind::Finite;
  A.table = cyclic_table(3);
  A.name = "a";
  FactorSpec B = A;
  B.id = 1;
  B.name = "b";
  p.factors = FactorSet({A, B});
  std::vector<Syllable> syl;
  for (int i = 0; i < 7; ++i) {
    syl.push_back({0, {1}});
    syl.push_back({1, {1}});
  }
  p.relators.push_back(make_relator(p.factors, p.factors.word(syl), "ab7_z3"));
  return p;
}

Presentation grid_example() {
  Presentation p;
  FactorSpec A;
  A.id = 0;
  A.kind = FactorKind::FreeAbelian;
  A.rank = 2;
  A.name = "a";
  p.factors = FactorSet({A, line_factor(1, "b")});
  std::vector<Syllable> syl = {{0, {1, 0}}, {1, {1}}, {0, {0, 1}},  {1, {2}},
                               {0, {-1, 0}}, {1, {3}}, {0, {0, -1}}, {1, {4}}};
  p.relators.push_back(make_relator(p.factors, p.factors.word(syl), "grid8"));
  return p;
}

Presentation tree_example() {
  Presentation p;
  FactorSpec A;
  A.id = 0;
  A.kind = FactorKind::Free;
  A.rank = 2;
  A.name = "x";
  p.factors = FactorSet({A, line_factor(1, "b")});
  std::vector<Syllable> syl = {{0, {1}}, {1, {1}}, {0, {2}},  {1, {2}},
                               {0, {-1}}, {1, {3}}, {0, {-2}}, {1, {4}}};
  p.relators.push_back(make_relator(p.factors, p.factors.word(syl), "tree8"));
  return p;
}

Presentation by_name(const std::string& name) {
  if (name == "surface2") return surface_genus2();
  if (name == "dihedral7") return dihedral7();
  if (name == "von_dyck") return finite_von_dyck();
  if (name == "grid") return grid_example();
  if (name == "tree") return tree_example();
  throw InputError("unknown example presentation: " + name);
}

}  // namespace fpcube::examples
