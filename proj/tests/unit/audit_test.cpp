#include <gtest/gtest.h>

#include <chrono>
#include <map>

#include "cubicsym/audit/audit.hpp"
#include "cubicsym/errors.hpp"
#include "json.hpp"

using namespace cubicsym;

namespace {

Cyclotomic z(long n, long k) { return Cyclotomic::root_of_unity(n, k); }

MatrixGroup cyclic(const Matrix& g) { return MatrixGroup::generate({g}); }

MatrixGroup alt4_group() {
  const Matrix a{{z(3, 1), 0, 0, 0, 0},
                 {0, z(3, 2), 0, 0, 0},
                 {0, 0, 0, 0, 1},
                 {0, 0, 1, 0, 0},
                 {0, 0, 0, 1, 0}};
  return MatrixGroup::generate({a, Matrix::diagonal({1, 1, 1, -1, -1})});
}

MatrixGroup z3z4_group() {
  const Matrix a{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, z(4, 1), 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}};
  return MatrixGroup::generate({a, Matrix::diagonal({1, 1, 1, z(3, 1), z(3, 2)})});
}

// Alt(5) on the deleted permutation module of {0,...,4,inf}, basis e_i - e_inf.
MatrixGroup alt5_group() {
  const std::vector<int> shift{1, 2, 3, 4, 0};
  const Matrix b{{-1, -1, -1, -1, -1}, {0, 0, 0, 0, 1}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 1, 0, 0, 0}};
  return MatrixGroup::generate({Matrix::permutation(shift), b});
}

MatrixGroup klein55_group() {
  const std::vector<int> shift{4, 0, 1, 2, 3};
  return MatrixGroup::generate(
      {Matrix::diagonal({z(11, 1), z(11, 5), z(11, 3), z(11, 4), z(11, 9)}), Matrix::permutation(shift)});
}

}  // namespace

TEST(Liftability, Examples) {
  const auto bad = liftability_check(cyclic(Matrix::diagonal({-1, -1, -1, 1, 1})));
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0].order, 2);
  EXPECT_EQ(bad[0].profile, "order 2 {0:2, 1:3}");

  EXPECT_TRUE(liftability_check(cyclic(Matrix::diagonal({1, z(5, 1), z(5, 2), z(5, 3), z(5, 4)}))).empty());
  // one violation per class: all four generators of Z/5, both of Z/4
  EXPECT_EQ(liftability_check(cyclic(Matrix::diagonal({1, 1, 1, z(5, 1), z(5, 4)}))).size(), 4u);
  EXPECT_EQ(liftability_check(cyclic(Matrix::diagonal({z(4, 1), 1, 1, 1, 1}))).size(), 2u);
  EXPECT_TRUE(liftability_check(alt4_group()).empty());
  EXPECT_TRUE(liftability_check(alt5_group()).empty());
}

TEST(DimModuli, Examples) {
  const auto run = [](const MatrixGroup& g) {
    const auto s = reynolds_basis(g);
    return dim_moduli(g, nonempty_evidence(s, liftability_check(g)));
  };
  EXPECT_EQ(run(cyclic(Matrix::identity(5))), 10u);
  EXPECT_EQ(run(cyclic(Matrix::diagonal({z(3, 1), 1, 1, 1, 1}))), 4u);
  EXPECT_EQ(run(alt4_group()), 2u);
  EXPECT_EQ(run(z3z4_group()), std::nullopt);
  EXPECT_THROW(run(cyclic(Matrix::diagonal({-1, -1, -1, -1, -1}))), NotProjectivelyFaithful);
}

TEST(Criterion, DiagonalCubeRootPair) {
  const auto r = check_criterion(cyclic(Matrix::diagonal({z(3, 1), z(3, 1), 1, 1, 1})), "g");
  EXPECT_EQ(r.dim_U, 14u);
  EXPECT_EQ(r.commutant_dim, 13u);
  EXPECT_EQ(r.dim_moduli, 1u);
  EXPECT_EQ(r.dim_special, 3u);
  EXPECT_EQ(r.criterion_holds, false);
}

TEST(Criterion, TwoReflections) {
  const auto r = check_criterion(
      MatrixGroup::generate({Matrix::diagonal({z(3, 1), 1, 1, 1, 1}), Matrix::diagonal({1, z(3, 1), 1, 1, 1})}),
      "h");
  EXPECT_EQ(r.dim_U, 12u);
  EXPECT_EQ(r.commutant_dim, 11u);
  EXPECT_EQ(r.dim_moduli, 1u);
  EXPECT_EQ(r.dim_special, 1u);
  EXPECT_EQ(r.criterion_holds, true);
  EXPECT_TRUE(r.cyclic_locus.certified);
}

TEST(Criterion, CyclicAndAlternating) {
  const auto z5 = check_criterion(cyclic(Matrix::diagonal({1, z(5, 1), z(5, 2), z(5, 3), z(5, 4)})), "z5");
  EXPECT_EQ(z5.dim_moduli, 2u);
  EXPECT_EQ(z5.dim_special, 3u);

  const auto a5 = check_criterion(alt5_group(), "alt5");
  EXPECT_EQ(a5.order, 60u);
  EXPECT_EQ(a5.type, "Alt(5)");
  EXPECT_EQ(a5.dim_U, 2u);
  EXPECT_EQ(a5.commutant_dim, 1u);
  EXPECT_EQ(a5.dim_moduli, 1u);
  EXPECT_EQ(a5.dim_special, 1u);
  EXPECT_EQ(a5.criterion_holds, true);
}

TEST(Criterion, ConeIsCertifiedEmpty) {
  const auto r = check_criterion(z3z4_group(), "z3z4");
  EXPECT_EQ(r.dim_U, 7u);
  EXPECT_EQ(r.nonempty.status, NonEmptyEvidence::Status::EmptyCertified);
  EXPECT_NE(r.nonempty.reason.find("x2"), std::string::npos);
  EXPECT_EQ(r.dim_moduli, std::nullopt);
  EXPECT_EQ(r.criterion_holds, std::nullopt);
}

TEST(CyclicLocus, Flags) {
  // family with split variable x1: Diag(1, w, 1, 1, w), Diag(1, 1, w, w^2, w^2)
  const auto fam = MatrixGroup::generate(
      {Matrix::diagonal({1, z(3, 1), 1, 1, z(3, 1)}), Matrix::diagonal({1, 1, z(3, 1), z(3, 2), z(3, 2)})});
  const auto s = reynolds_basis(fam);
  const auto flag = cyclic_locus_flag(fam, s);
  EXPECT_TRUE(flag.certified);
  EXPECT_EQ(split_variable_check(s), 1);

  const auto w = cyclic(Matrix::diagonal({z(3, 2), z(3, 2), z(3, 2), z(3, 2), 1}));
  EXPECT_TRUE(cyclic_locus_flag(w, reynolds_basis(w)).certified);

  const auto a4 = alt4_group();
  EXPECT_FALSE(cyclic_locus_flag(a4, reynolds_basis(a4)).certified);
}

TEST(Lattice, OrderFiftyFive) {
  const auto start = std::chrono::steady_clock::now();
  const auto nodes = lattice_report(klein55_group());
  std::map<std::string, std::pair<std::size_t, std::size_t>> dims;
  for (const auto& n : nodes) dims[n.report.type] = {n.report.dim_U, n.report.commutant_dim};
  ASSERT_EQ(nodes.size(), 4u);
  EXPECT_EQ(dims["1"], std::make_pair(std::size_t{35}, std::size_t{25}));
  EXPECT_EQ(nodes.front().report.dim_moduli, 10u);
  EXPECT_EQ(nodes.front().report.dim_special, 15u);
  for (const auto& n : nodes) {
    if (n.report.type == "Z/5") {
      EXPECT_EQ(n.report.dim_moduli, 2u);
      EXPECT_EQ(n.report.dim_special, 3u);
    } else if (n.report.order > 1) {
      EXPECT_EQ(n.report.dim_moduli, 0u) << n.report.type;
      EXPECT_EQ(n.report.dim_special, 0u) << n.report.type;
    }
  }
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(60));
  const auto csv = lattice_to_csv(nodes);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "node,order,type,dim_M,dim_Z,criterion");
}

TEST(Report, JsonIsStableAndParses) {
  const auto g = alt4_group();
  const auto a = to_json(check_criterion(g, "alt4"));
  const auto b = to_json(check_criterion(g, "alt4"));
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["dim_moduli"], 2);
  EXPECT_EQ(j["dim_special"], 2);
  EXPECT_EQ(j["nonempty"]["status"], "Certified");
  EXPECT_EQ(j["provenance"]["seed"], 20240601);
  EXPECT_EQ(j["invariant_basis"].size(), 5u);
  EXPECT_NE(to_text(check_criterion(g, "alt4")).find("dim M_G"), std::string::npos);
}

TEST(Report, RejectsScalars) {
  EXPECT_THROW(check_criterion(cyclic(Matrix::diagonal({z(3, 1), z(3, 1), z(3, 1), z(3, 1), z(3, 1)})), "s"),
               NotProjectivelyFaithful);
}
