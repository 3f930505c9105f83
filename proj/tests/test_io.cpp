#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>

#include "povmorder/io.hpp"

using namespace povmorder;
using nlohmann::json;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/povmorder_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("matrix json round trip keeps complex entries") {
  const ComplexMatrix m = random_hermitian(3, 404);
  const ComplexMatrix back = matrix_from_json(matrix_to_json(m));
  CHECK(max_abs(m - back) < 1e-15);
}

TEST_CASE("povm json round trip preserves labels and effects") {
  const Povm p = random_povm(3, 4, 405);
  const Povm back = povm_from_json(povm_to_json(p));
  REQUIRE(back.size() == p.size());
  CHECK(back.labels == p.labels);
  for (int x = 0; x < p.size(); ++x) {
    CHECK(max_abs(back.effects[x] - p.effects[x]) < 1e-15);
  }
}

TEST_CASE("file round trip and validation-on-load") {
  TempFile file("roundtrip.json");
  const Povm p = make_sic_qubit();
  save_povm(p, file.path);
  const Povm back = load_povm(file.path);
  CHECK(back.dim == 2);
  CHECK(back.size() == 4);
}

TEST_CASE("matrices are stored row-major as [re, im] pairs") {
  ComplexMatrix m(2, 2);
  m << Complex(1, 2), Complex(3, 4), Complex(5, 6), Complex(7, 8);
  const json j = matrix_to_json(m);
  CHECK(j[0][1][0].get<double>() == 3.0);  // row 0, column 1, real part
  CHECK(j[0][1][1].get<double>() == 4.0);
  CHECK(j[1][0][0].get<double>() == 5.0);
  // plain numbers are accepted as real entries
  const ComplexMatrix real = matrix_from_json(json::parse("[[1, 0], [0, 1]]"));
  CHECK(max_abs(real - ComplexMatrix::Identity(2, 2)) < 1e-15);
}

TEST_CASE("loading rejects malformed and invalid inputs") {
  TempFile file("bad.json");
  {
    std::ofstream out(file.path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_povm(file.path), ValidationError);
  {
    std::ofstream out(file.path);
    json j;
    j["dim"] = 2;
    j["effects"] = json::array({matrix_to_json(ComplexMatrix::Identity(2, 2)),
                                matrix_to_json(0.1 * ComplexMatrix::Identity(2, 2))});
    out << j.dump();
  }
  CHECK_THROWS_AS(load_povm(file.path), ValidationError);  // sum != identity
  CHECK_THROWS_AS(load_povm("/tmp/povmorder_does_not_exist.json"), ValidationError);
}

TEST_CASE("rho sources") {
  const ComplexMatrix mixed = parse_rho_source("maximally-mixed", 3);
  CHECK(max_abs(mixed - ComplexMatrix::Identity(3, 3) / 3.0) < 1e-15);
  const ComplexMatrix bloch = parse_rho_source("bloch:0,0,0.5", 2);
  CHECK(bloch(0, 0).real() == doctest::Approx(0.75));
  CHECK_THROWS_AS(parse_rho_source("bloch:0,0,0.5", 3), BadParameterError);

  TempFile file("rho.json");
  {
    std::ofstream out(file.path);
    out << matrix_to_json(ComplexMatrix::Identity(2, 2) / 2.0).dump();
  }
  CHECK(max_abs(parse_rho_source(file.path, 2) - ComplexMatrix::Identity(2, 2) / 2.0) <
        1e-15);
}
