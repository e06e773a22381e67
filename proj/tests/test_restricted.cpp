#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "twistlab/restricted.hpp"

using namespace twistlab;

namespace {

// Q[T]/(T^3 - 2T), basis 1, T, T^2.
std::unique_ptr<FiniteAlgebra> truncated_polynomial_algebra(const ContextPtr& ctx) {
  auto product = [ctx](std::size_t i, std::size_t j) {
    Vec out(3, CycloScalar(ctx, 0L));
    std::size_t k = i + j;
    if (k < 3) out[k] = CycloScalar(ctx, 1L);
    else if (k == 3) out[1] = CycloScalar(ctx, 2L);
    else out[2] = CycloScalar(ctx, 2L);
    return out;
  };
  Vec unit{CycloScalar(ctx, 1L), CycloScalar(ctx, 0L), CycloScalar(ctx, 0L)};
  return std::make_unique<FiniteAlgebra>(ctx, std::vector<std::string>{"1", "T", "T^2"}, product, unit);
}

}  // namespace

TEST_CASE("finite algebra basics on Q[T]/(T^3 - 2T)") {
  const auto ctx = CycloContext::get(1);
  const auto A = truncated_polynomial_algebra(ctx);
  CHECK(check_associativity(*A));
  const auto T = A->basis(1);
  const auto mp = minimal_polynomial(*A, T);
  CHECK(polynomial_str(mp) == "T^3 - 2*T");
  CHECK(rational_roots(mp) == std::vector<Rational>{Rational(0)});
  CHECK(center(*A, {T}).size() == 3);
  // only 0 is rational, so the rational split stops at Q x Q(sqrt 2)
  const auto split = split_idempotents(*A, center(*A, {T}));
  CHECK(split.idempotents.size() == 2);
  CHECK_FALSE(split.complete);
}

TEST_CASE("FNV-1a reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("rank one presentation, dimensions and centres") {
  for (const Rational c : {Rational(1), Rational(5, 7)}) {
    CHECK(check_rank_one_presentation(c).ok);
    CHECK(check_restricted_dims(c).ok);
    CHECK(check_center_dims(c).ok);
  }
}

TEST_CASE("restricted algebra of G(2,1,1)") {
  const auto ctx = CycloContext::get(2);
  RestrictedAlgebra R(ctx, reflection_group(2, 1, 1), rank_one_params(ctx, Rational(1)));
  CHECK(R.dim() == 8);
  const auto& A = R.algebra();
  CHECK(check_associativity(A));
  CHECK(A.is_zero(A.mul(R.x(0), R.x(0))));
  CHECK(A.is_zero(A.mul(R.y(0), R.y(0))));
  const auto s = R.group(gen_t(2, 1, 0, 1));
  CHECK(A.mul(s, s) == A.unit());
  // yx = xy - 2cs
  CHECK(A.mul(R.y(0), R.x(0)) == A.sub(A.mul(R.x(0), R.y(0)), A.scale(CycloScalar(ctx, 2L), s)));
}

TEST_CASE("not isomorphic: what holds and what does not") {
  const auto rs = check_not_isomorphic(Rational(1));
  REQUIRE(rs.size() == 4);
  CHECK(rs[0].ok);
  CHECK(rs[1].ok);
  CHECK(rs[2].ok);
  // minpoly(gamma) at c = 1 is (T - 1)(T^2 + 1), not T^4 - 1
  CHECK_FALSE(rs[3].ok);
  CHECK(rs[3].detail.find("T^3 - T^2 + T - 1") != std::string::npos);
  CHECK(gamma_sign(Rational(1)) == 1);
}

TEST_CASE("restricted iso for m/p even") {
  CHECK(check_restricted_iso_even_case(2, 1, 1, Rational(1)).ok);
  CHECK(check_restricted_iso_even_case(2, 1, 1, Rational(3, 2)).ok);
}

TEST_CASE("mutation: eta without the torus action is not multiplicative on G(2,1,2)" * doctest::timeout(120)) {
  CHECK_FALSE(check_restricted_iso_even_case(2, 1, 2, Rational(1), true).ok);
}

TEST_CASE("braided restricted algebra is associative") {
  CHECK(check_restricted_associativity(mystic_group(2, 2, 2), Rational(1)).ok);
}

TEST_CASE("tampered gamma fixture is rejected") {
  namespace fs = std::filesystem;
  const std::string original = gamma_fixture_text();
  const fs::path dir = fs::temp_directory_path() / "twistlab_tampered_fixture";
  fs::create_directories(dir);
  fs::copy_file(fs::path(data_dir()) / "gamma.txt.fnv1a", dir / "gamma.txt.fnv1a", fs::copy_options::overwrite_existing);
  {
    std::ofstream out(dir / "gamma.txt");
    out << original << " ";
  }
  setenv("TWISTLAB_DATA_DIR", dir.c_str(), 1);
  CHECK_THROWS_AS(gamma_fixture_text(), std::runtime_error);
  {
    std::ofstream out(dir / "gamma.txt");
    out << original;
  }
  CHECK(gamma_fixture_text() == original);
  unsetenv("TWISTLAB_DATA_DIR");
  fs::remove_all(dir);
}
