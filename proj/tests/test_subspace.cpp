#include "lackwalk/full_walk.hpp"
#include "lackwalk/subspace.hpp"
#include "lackwalk/verify.hpp"

#include "reference_walk.hpp"

#include <doctest.h>

using namespace lackwalk;

TEST_CASE("one-set model shape")
{
  auto const m = build_one_set_model<double>(build_instance(10, 7, 1.5, 0.5, 3, 0));
  CHECK(m.kind == SubspaceCase::OneSet);
  CHECK(m.dim() == 7);
  CHECK(m.basis_labels == one_set_labels());
  CHECK(m.marked_rows == std::vector<int>{0, 1});
  CHECK(m.s_coords.norm() == doctest::Approx(1.0));
  CHECK(m.sigma_coords.norm() == doctest::Approx(1.0));
}

TEST_CASE("both-sets model shape")
{
  auto const m = build_both_sets_model<double>(build_instance(10, 7, 1.5, 0.5, 3, 2));
  CHECK(m.dim() == 12);
  CHECK(m.basis_labels.size() == 12);
  CHECK(m.marked_rows == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("reduced matrices are orthogonal")
{
  for (auto const &g : {build_instance(1000, 800, 1.2, 0.0, 3, 0), build_instance(9, 2, 0.0, 7.0, 8, 0),
                        build_instance(40, 55, 3.3, 0.1, 4, 9), build_instance(2, 2, 0, 0, 1, 1)}) {
    auto const m = build_model<double>(g);
    auto const eye = Eigen::MatrixXd::Identity(m.dim(), m.dim());
    CHECK((m.matrix.transpose() * m.matrix - eye).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("subspace traces equal the dense reference")
{
  for (auto const &g : {build_instance(5, 3, 1.5, 0.0, 2, 0), build_instance(4, 6, 0.0, 2.0, 1, 3),
                        build_instance(3, 5, 0.5, 0.5, 0, 2), build_instance(6, 6, 0.0, 0.0, 1, 0)}) {
    auto const ref = refwalk::build(g);
    auto const m = build_model<double>(g);
    for (bool uniform : {true, false}) {
      auto const want = refwalk::trace(ref, uniform, 60);
      auto const got = evolve_subspace(m, uniform ? InitialState::Uniform : InitialState::Stationary, 60);
      for (std::size_t t = 0; t < want.size(); ++t) { CHECK(got[t] == doctest::Approx(want[t]).epsilon(1e-12)); }
    }
  }
}

TEST_CASE("projection of the full state keeps all of its norm")
{
  auto const g = build_instance(7, 5, 0.8, 1.9, 2, 1);
  auto psi = initial_uniform(g);
  auto const m = build_model<double>(g);
  Eigen::VectorXd v = m.s_coords;
  for (int t = 0; t < 30; ++t) {
    auto const proj = project_to_subspace(psi, SubspaceCase::BothSets);
    CHECK(proj.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((proj.real() - v).norm() < 1e-12);
    psi = apply_search_step(std::move(psi));
    v = m.matrix * v;
  }
}

TEST_CASE("Y-only marking is relabeled onto X")
{
  auto const g = build_instance(9, 4, 0.3, 2.0, 0, 2);
  CHECK(has_subspace_model(g));
  auto const a = evolve_subspace(build_model<double>(g), InitialState::Uniform, 50);
  auto const b = evolve(initial_uniform(g), 50);
  for (std::size_t t = 0; t < a.size(); ++t) { CHECK(a[t] == doctest::Approx(b[t]).epsilon(1e-12)); }
}

TEST_CASE("unsupported markings")
{
  CHECK_FALSE(has_subspace_model(build_instance(4, 4, 0, 0, 0, 0)));
  CHECK_FALSE(has_subspace_model(build_instance(4, 4, 0, 0, 4, 0)));
  CHECK_FALSE(has_subspace_model(build_instance(4, 4, 0, 0, 2, 4)));
  CHECK_THROWS(build_model<double>(build_instance(4, 4, 0, 0, 0, 0)));
}

TEST_CASE("long double model matches double")
{
  auto const g = build_instance(1000, 800, 1.2, 0.0, 3, 0);
  auto const a = evolve_subspace(build_model<double>(g), InitialState::Uniform, 400);
  auto const b = evolve_subspace(build_model<long double>(g), InitialState::Uniform, 400);
  for (std::size_t t = 0; t < a.size(); ++t) { CHECK(std::abs(a[t] - b[t]) < 1e-12); }
}

TEST_CASE("verify catches a single transcription error")
{
  VerifyOptions opts;
  opts.max_set_size = 4;
  opts.perturb_model = [](SubspaceModelD &m) {
    if (m.kind == SubspaceCase::BothSets) { m.matrix(3, 4) += 1e-6; }
  };
  auto const results = run_verification(opts);
  CHECK_FALSE(all_passed(results));
  bool caught = false;
  for (auto const &r : results) {
    if (r.name.rfind("full vs subspace", 0) == 0) { caught = !r.passed; }
  }
  CHECK(caught);
}

TEST_CASE("verify passes on the unmodified models")
{
  VerifyOptions opts;
  opts.max_set_size = 4;
  CHECK(all_passed(run_verification(opts)));
}
