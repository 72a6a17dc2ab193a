#include <gtest/gtest.h>

#include <complex>
#include <cstdlib>
#include <numeric>

#include "cubicsym/chars/class_function.hpp"
#include "cubicsym/errors.hpp"
#include "cubicsym/linalg/echelon.hpp"

using namespace cubicsym;

namespace {

Cyclotomic z(long n, long k) { return Cyclotomic::root_of_unity(n, k); }

AbstractCharDatum datum(const std::string& name) {
  const char* dir = std::getenv("CUBICSYM_DATA_DIR");
  return load_char_datum(std::filesystem::path(dir ? dir : "core/data") / "characters" /
                         (name + ".json"));
}

// floating-point oracle for the inner product
std::complex<double> float_inner(const ClassFunction& a, const ClassFunction& b) {
  std::complex<double> s = 0;
  for (std::size_t c = 0; c < a.size(); ++c)
    s += static_cast<double>(a.classes().sizes[c]) * a[c].to_complex() *
         std::conj(b[c].to_complex());
  return s / static_cast<double>(a.classes().group_order);
}

MatrixGroup alt4_group() {
  const Matrix a{{z(3, 1), 0, 0, 0, 0},
                 {0, z(3, 2), 0, 0, 0},
                 {0, 0, 0, 0, 1},
                 {0, 0, 1, 0, 0},
                 {0, 0, 0, 1, 0}};
  return MatrixGroup::generate({a, Matrix::diagonal({1, 1, 1, -1, -1})});
}

MatrixGroup klein55_group() {
  const std::vector<int> perm{1, 2, 3, 4, 0};
  return MatrixGroup::generate(
      {Matrix::diagonal({z(11, 1), z(11, 5), z(11, 3), z(11, 4), z(11, 9)}),
       Matrix::permutation(perm)});
}

const char* kFixtures[] = {"psl2_11", "alt4", "alt5", "z3_z4", "z3xs3"};

}  // namespace

TEST(Fixtures, RowsAreOrthonormal) {
  for (const char* name : kFixtures) {
    const auto d = datum(name);
    for (std::size_t i = 0; i < d.characters.size(); ++i)
      for (std::size_t j = 0; j < d.characters.size(); ++j) {
        const auto ip = inner_product(d.characters[i], d.characters[j]);
        EXPECT_EQ(ip.value, Rational(i == j ? 1 : 0)) << name << ' ' << i << ' ' << j;
        EXPECT_NEAR(std::abs(float_inner(d.characters[i], d.characters[j]) - (i == j ? 1.0 : 0.0)),
                    0.0, 1e-9);
      }
  }
}

TEST(Fixtures, PowerMapsRespectElementOrders) {
  for (const char* name : kFixtures) {
    const auto d = datum(name);
    const auto& cs = *d.classes;
    for (std::size_t c = 0; c < cs.size(); ++c)
      for (int k : {2, 3, 5}) {
        const int o = cs.element_orders[c];
        const int g = std::gcd(o, k);
        EXPECT_EQ(cs.element_orders[cs.power_class(c, k)], o / g) << name << ' ' << cs.labels[c];
      }
  }
}

TEST(Fixtures, CompleteTablesSatisfyColumnOrthogonality) {
  // sum_chi |chi(g)|^2 = |C_G(g)| when all irreducibles are listed
  for (const char* name : {"alt4", "alt5", "z3_z4", "z3xs3"}) {
    const auto d = datum(name);
    const auto& cs = *d.classes;
    for (std::size_t c = 0; c < cs.size(); ++c) {
      Cyclotomic s;
      for (const auto& chi : d.characters) s += chi[c] * chi[c].conjugate();
      EXPECT_EQ(s, Cyclotomic(static_cast<long>(cs.group_order / cs.sizes[c]))) << name;
    }
  }
}

TEST(CharacterOf, Examples) {
  const auto triv = MatrixGroup::generate({Matrix::identity(5)});
  EXPECT_EQ(character_of(triv).values(), std::vector<Cyclotomic>{Cyclotomic(5)});

  const auto chi = character_of(alt4_group());
  EXPECT_EQ(chi.values(), (std::vector<Cyclotomic>{5, 1, -1, -1}));

  const auto g55 = klein55_group();
  const auto chi55 = character_of(g55);
  const auto eta = Cyclotomic::parse("E(11)^1 + E(11)^3 + E(11)^4 + E(11)^5 + E(11)^9");
  EXPECT_EQ(chi55.degree(), Cyclotomic(5));
  for (std::size_t c = 1; c < chi55.size(); ++c) {
    const int o = g55.classes()[c].element_order;
    if (o == 5) EXPECT_TRUE(chi55[c].is_zero());
    if (o == 11) EXPECT_TRUE(chi55[c] == eta || chi55[c] == eta.conjugate());
  }
}

TEST(DetCharacter, Examples) {
  const auto g = MatrixGroup::generate({Matrix::diagonal({z(3, 1), 1, 1, 1, 1})});
  const auto det = det_character(g);
  const auto gen = g.index_of(g.generators()[0]).value();
  EXPECT_EQ(det[g.class_of(gen)], z(3, 1));

  const auto a4 = alt4_group();
  const auto det4 = det_character(a4);
  EXPECT_EQ(det4, ClassFunction::trivial(a4.class_structure()));

  const auto psl = datum("psl2_11");
  EXPECT_EQ(det_from_power_maps(psl.character("chi2")), ClassFunction::trivial(psl.classes));
  const auto a5 = datum("alt5");
  EXPECT_EQ(det_from_power_maps(a5.character("chi5")), ClassFunction::trivial(a5.classes));
}

TEST(Tensor, Examples) {
  const auto g = alt4_group();
  const auto chi = character_of(g);
  const auto triv = ClassFunction::trivial(g.class_structure());
  EXPECT_EQ(tensor(triv, chi), chi);
  EXPECT_EQ(tensor(chi, chi).degree(), Cyclotomic(25));
  const auto dc = tensor(det_character(g), chi);
  // chi2 chi3 det(chi4) is trivial on Alt(4): every representative has determinant 1
  EXPECT_EQ(dc, chi);
  EXPECT_THROW(tensor(chi, character_of(klein55_group())), GroupMismatch);
}

TEST(SymPower, Examples) {
  const auto a4 = datum("alt4");
  const auto& t = a4.character("chi1");
  EXPECT_EQ(sym_power(t, 2), t);
  const auto chi = character_of(alt4_group());
  EXPECT_EQ(dim_invariant_cubics(chi), 5u);
  const auto psl = datum("psl2_11");
  EXPECT_EQ(inner_product(sym_power(psl.character("chi2"), 3), psl.character("chi1")).value,
            Rational(1));

  auto bare = std::make_shared<ClassStructure>(*a4.classes);
  bare->power_maps.erase(3);
  const ClassFunction chi4(bare, a4.character("chi4").values());
  EXPECT_NO_THROW(sym_power(chi4, 2));
  EXPECT_THROW(sym_power(chi4, 3), MissingPowerMap);
}

TEST(InnerProduct, Examples) {
  const auto psl = datum("psl2_11");
  EXPECT_EQ(inner_product(psl.character("chi1"), psl.character("chi1")).value, Rational(1));
  EXPECT_EQ(inner_product(psl.character("chi2"), psl.character("chi2")).value, Rational(1));
  const auto g = alt4_group();
  EXPECT_EQ(dim_special_subvariety(character_of(g), det_character(g)), 2u);

  // a class function that is not a character
  const ClassFunction half(g.class_structure(), {1, 0, 0, 0});
  const auto ip = inner_product(half, ClassFunction::trivial(g.class_structure()));
  EXPECT_EQ(ip.value, Rational(1, 12));
  EXPECT_TRUE(ip.non_integral);
  EXPECT_FALSE(inner_product(half, half, false).non_integral);
}

TEST(Dimensions, Examples) {
  const auto triv = MatrixGroup::generate({Matrix::identity(5)});
  EXPECT_EQ(dim_invariant_cubics(character_of(triv)), 35u);
  EXPECT_EQ(dim_special_subvariety(character_of(triv), det_character(triv)), 15u);

  const auto a5 = datum("alt5");
  const auto& chi5 = a5.character("chi5");
  EXPECT_EQ(dim_invariant_cubics(chi5), 2u);
  EXPECT_EQ(dim_special_subvariety(chi5, det_from_power_maps(chi5)), 1u);

  const auto psl = datum("psl2_11");
  const auto& chi2 = psl.character("chi2");
  EXPECT_EQ(dim_invariant_cubics(chi2), 1u);
  EXPECT_EQ(dim_special_subvariety(chi2, det_from_power_maps(chi2)), 0u);

  const auto zz = datum("z3_z4");
  const auto chi = 2 * zz.character("chi1") + zz.character("chi4") + zz.character("chi6");
  EXPECT_EQ(dim_invariant_cubics(chi), 7u);

  const auto r = MatrixGroup::generate({Matrix::diagonal({z(3, 1), z(3, 1), 1, 1, 1})});
  EXPECT_EQ(dim_special_subvariety(character_of(r), det_character(r)), 3u);
}

TEST(Properties, DegreesAndNorms) {
  for (const auto& g : {alt4_group(), klein55_group(),
                        MatrixGroup::generate({Matrix::diagonal({z(3, 1), z(3, 1), 1, 1, 1})})}) {
    const auto chi = character_of(g);
    EXPECT_EQ(sym_power(chi, 2).degree(), Cyclotomic(15));
    EXPECT_EQ(sym_power(chi, 3).degree(), Cyclotomic(35));
    EXPECT_EQ(inner_product(chi, chi).value, Rational(commutant_dimension(g.generators())));
  }
}

TEST(Properties, SymmetricPowersAreCharacters) {
  for (const char* name : kFixtures) {
    const auto d = datum(name);
    for (const auto& chi : d.characters)
      for (int k : {2, 3})
        for (const auto& psi : d.characters)
          EXPECT_FALSE(inner_product(sym_power(chi, k), psi).non_integral) << name;
  }
}

TEST(Properties, MatrixAndAbstractPathsAgree) {
  // the order-55 subgroup sees chi2 restricted: same values on order-11 elements
  const auto psl = datum("psl2_11");
  const auto& chi2 = psl.character("chi2");
  const auto g55 = klein55_group();
  const auto chi = character_of(g55);
  for (std::size_t c = 0; c < chi.size(); ++c) {
    const int o = g55.classes()[c].element_order;
    bool found = false;
    for (std::size_t d = 0; d < chi2.size(); ++d)
      if (psl.classes->element_orders[d] == o && chi2[d] == chi[c]) found = true;
    EXPECT_TRUE(found) << g55.classes()[c].label;
  }
}
