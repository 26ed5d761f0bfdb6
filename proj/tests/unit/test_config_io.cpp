#include "doctest.h"

#include "taucrest/config_io.hpp"

#include <fstream>
#include <sstream>

using namespace taucrest;

namespace {

std::string data(const std::string& name) { return std::string(TAUCREST_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string error_of(const std::string& text) {
  try {
    parse_input(text, "t.alg");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

const char* kHeader = "[quiver]\nvertices = 2\narrow a: 1 -> 2\n";

}  // namespace

TEST_CASE("fields") {
  CHECK(parse_field("2") == Field::prime(2));
  CHECK(parse_field(" 7 ") == Field::prime(7));
  CHECK(parse_field("Q") == Field::rationals());
  CHECK_THROWS_AS(parse_field("4"), InputError);
  CHECK_THROWS_AS(parse_field("two"), InputError);
  CHECK_THROWS_AS(parse_field("3x"), InputError);
}

TEST_CASE("parse a quiver with relations") {
  const InputFile in = parse_input(
      "# commutative square\n"
      "[quiver]\n"
      "vertices = 4\n"
      "arrow a: 1 -> 2\n"
      "arrow b: 1 -> 3\n"
      "arrow c: 2 -> 4\n"
      "arrow d: 3 -> 4   # trailing comment\n"
      "[relations]\n"
      "c.a - d.b = 0\n"
      "[enum]\n"
      "field = 3\n"
      "max-dim = 5\n"
      "seed = 42\n",
      "sq");
  CHECK(in.presentation.quiver.vertices == 4);
  REQUIRE(in.presentation.relations.size() == 1);
  const auto& rel = in.presentation.relations[0];
  REQUIRE(rel.size() == 2);
  CHECK(rel[0].path == std::vector<std::size_t>{0, 2});  // a first
  CHECK(rel[1].coeff == -1);
  CHECK(in.presentation.nilpotency_bound == 5);
  CHECK(*in.enumeration.field == "3");
  CHECK(*in.enumeration.max_dim == 5);
  CHECK(*in.enumeration.seed == 42);
  CHECK_FALSE(in.has_bimodule);

  const Configuration c = instantiate(in, Field::prime(3));
  CHECK(c.algebra.dim() == 9);
  CHECK(c.bimodule.dim == 0);
}

TEST_CASE("relation coefficients") {
  const InputFile in = parse_input(
      "[quiver]\nvertices = 1\narrow x: 1 -> 1\narrow y: 1 -> 1\n"
      "[relations]\nnilpotent = 3\n2 * x.y + -1/2 y.x\nx.x\n",
      "k");
  REQUIRE(in.presentation.relations.size() == 2);
  CHECK(in.presentation.relations[0][0].coeff == 2);
  CHECK(in.presentation.relations[0][1].coeff == mpq_class(-1, 2));
  CHECK(in.presentation.nilpotency_bound == 3);
}

TEST_CASE("line-numbered diagnostics") {
  CHECK(error_of("vertices = 2\n") == "t.alg:1: content before the first section header");
  CHECK(error_of("[quiver]\nvertices = 2\narrow a: 1 -> 3\n") == "t.alg:3: arrow 'a' uses a vertex outside 1..2");
  CHECK(error_of("[quiver]\nvertices = 2\n\narrow a 1 -> 2\n").rfind("t.alg:4: expected ':'", 0) == 0);
  CHECK(error_of(std::string(kHeader) + "[relations]\nb.a\n") == "t.alg:5: unknown arrow 'b'");
  CHECK(error_of(std::string(kHeader) + "[relations]\na.a\n") == "t.alg:5: path is not composable at 'a'");
  CHECK(error_of("[quiver]\nvertices = 1\narrow x: 1 -> 1\n") == "t.alg:1: the quiver has an oriented cycle; give 'nilpotent = L' in [relations]");
  CHECK(error_of(std::string(kHeader) + "[bimodule]\nsideways\n").rfind("t.alg:5: unknown bimodule", 0) == 0);
  CHECK(error_of(std::string(kHeader) + "[enum]\nfield = 6\n") == "t.alg:5: field must be a prime p < 2^31 or Q, got '6'");
  CHECK(error_of(std::string(kHeader) + "[colours]\n") == "t.alg:4: unknown section [colours]");
  CHECK(error_of("[quiver]\narrow a: 1 -> 2\n") == "t.alg:1: missing 'vertices = n' in [quiver]");
  CHECK(error_of(std::string(kHeader) + "[module]\narrow a = [[1, 0], [1]]\n") == "t.alg:5: matrix rows have different lengths");
}

TEST_CASE("instantiation errors carry line numbers") {
  auto inst_error = [](const std::string& text) -> std::string {
    try {
      instantiate(parse_input(text, "t.alg"), Field::prime(2));
    } catch (const InputError& e) {
      return e.what();
    }
    return "";
  };
  CHECK(inst_error(std::string(kHeader) + "[module]\ndims = [1, 1]\narrow a = [[1, 1]]\n") == "t.alg:4: arrow a: matrix is 1x2, expected 1x1");
  CHECK(inst_error(std::string(kHeader) + "[module]\ndims = 1 1 1\n") == "t.alg:4: 'dims' needs 2 entries, got 3");
  CHECK(inst_error(std::string(kHeader) + "[module]\nnamed = P(3)\n") == "t.alg:4: vertex 3 out of range");
  CHECK(inst_error(std::string(kHeader) + "[bimodule]\ncustom\ndim = 1\nleft vertex 1 = [[1]]\n")
            .rfind("t.alg:4: custom bimodule: missing 'left vertex 2'", 0) == 0);
  CHECK(inst_error(std::string(kHeader) + "[bimodule]\ncustom\ndim = 1\nleft vertex 1 = [[1/2]]\n") ==
        "t.alg:7: left vertex 1: entry 1/2 has a denominator divisible by 2");
  CHECK(inst_error(std::string(kHeader) + "[bimodule]\ntriangular nowhere.alg\n").find("cannot open") != std::string::npos);
  // the relation x.x = 0 is violated by a nonzero square
  CHECK(inst_error("[quiver]\nvertices = 1\narrow x: 1 -> 1\n[relations]\nnilpotent = 3\nx.x\n[module]\ndims = [2]\narrow x = [[0,1],[1,0]]\n")
            .rfind("t.alg:7: representation violates the relations", 0) == 0);
}

TEST_CASE("modules from files") {
  const Configuration c = instantiate(load_input(data("a2_dual_module.alg")), Field::prime(2));
  REQUIRE(c.module);
  const Algebra& a = c.algebra;
  CHECK(is_isomorphic(*c.module, direct_sum(a, {projective_module(a, 0), simple_module(a, 0)}).sum));

  const Configuration n =
      instantiate(parse_input(std::string(kHeader) + "[bimodule]\ndual\n[module]\nnamed = 2*P(1) + I(2)\n", "n"), Field::prime(5));
  REQUIRE(n.module);
  CHECK(n.module->dims() == std::vector<std::size_t>{3, 3});
}

TEST_CASE("built-in configurations match the shipped data files") {
  for (const auto& name : builtin_names()) {
    CHECK(builtin_input(name) == slurp(data(name + ".alg")));
  }
  CHECK_THROWS_AS(builtin_input("nope"), InputError);
  CHECK_THROWS_WITH_AS(load_input(data("missing.alg")), doctest::Contains("cannot open"), InputError);
}

TEST_CASE("triangular file reference equals the built-in triangular self") {
  const Field f = Field::prime(2);
  const Configuration expl = instantiate(load_input(data("a2_triangular_explicit.alg")), f);
  const Configuration self = instantiate(load_input(data("a2_lower_triangular.alg")), f);
  CHECK(expl.algebra.dim() == 6);
  CHECK(expl.algebra.vertex_count() == 4);
  REQUIRE(expl.bimodule.dim == self.bimodule.dim);
  REQUIRE(expl.bimodule.triangular);
  for (std::size_t b = 0; b < expl.algebra.dim(); ++b) {
    CHECK(expl.bimodule.left[b] == self.bimodule.left[b]);
    CHECK(expl.bimodule.right[b] == self.bimodule.right[b]);
  }
}

TEST_CASE("regular and dual inputs") {
  const Field f = Field::prime(2);
  const Configuration d = instantiate(load_input(data("a2_dual.alg")), f);
  CHECK(d.ext->dim() == 6);
  const Configuration n = instantiate(load_input(data("nakayama2_dual.alg")), f);
  CHECK(n.algebra.dim() == 6);
  CHECK(n.bimodule.dim == 6);
  CHECK(n.description.find("dim 6") != std::string::npos);
}
