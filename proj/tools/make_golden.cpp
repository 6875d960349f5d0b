/// @file make_golden.cpp
/// @brief Emits the instance zoo as canonical-form files.
///
/// The ribbon twist components are read from data/derived/constants.json,
/// which is produced by the independent oracle script
/// tools/oracles/derive_constants.py -- fixture constants are never typed
/// into this tool by hand.
///
/// Usage: make_golden OUTDIR [CONSTANTS_JSON]

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hopfpi/instances.hpp"
#include "hopfpi/io.hpp"
#include "hopfpi/pipeline.hpp"

namespace {

using namespace hopfpi;

Vector vector_from_strings(const nlohmann::json& arr, Field f) {
  Vector v(f, static_cast<int>(arr.size()));
  for (int i = 0; i < v.dim(); ++i) {
    auto s = Scalar::parse(arr[static_cast<std::size_t>(i)].get<std::string>(), f);
    if (!s) throw std::runtime_error("bad scalar in constants file");
    v[i] = *s;
  }
  return v;
}

void write_file(const std::string& dir, const Instance& inst) {
  // Refuse to freeze anything that does not verify.
  Report rep = verify_instance(inst);
  if (!rep.pass()) {
    std::cerr << "instance '" << inst.name << "' fails verification:\n" << rep.render();
    std::exit(1);
  }
  const std::string path = dir + "/" + inst.name + ".json";
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    std::exit(1);
  }
  out << emit_instance(inst);
  std::cout << "wrote " << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: make_golden OUTDIR [CONSTANTS_JSON]\n";
    return 2;
  }
  const std::string dir = argv[1];
  const std::string constants_path =
      argc > 2 ? argv[2] : std::string("data/derived/constants.json");

  std::ifstream cf(constants_path);
  if (!cf) {
    std::cerr << "cannot read " << constants_path << "\n";
    return 2;
  }
  nlohmann::json constants = nlohmann::json::parse(cf);

  const Field q = Field::rationals();

  {
    Instance i = trivial_instance(trivial_group(), q);
    i.name = "trivial_z1";
    write_file(dir, i);
  }
  {
    Instance i = trivial_instance(cyclic_group(2), q);
    i.name = "trivial_z2";
    write_file(dir, i);
  }
  {
    Instance i = trivial_instance(symmetric3(), q);
    i.name = "trivial_s3";
    write_file(dir, i);
  }
  {
    Instance i;
    i.name = "sweedler";
    i.h = sweedler(q);
    write_file(dir, i);
  }
  for (int t : {0, 1}) {
    Instance i = constant_family("c_h4_z2_r" + std::to_string(t), sweedler(q), cyclic_group(2));
    i.rmatrix = constant_rmatrix(i.h, sweedler_R(Scalar::of(t, q)));
    i.rmatrix_inverse_claim = rmatrix_inverses(i.h, *i.rmatrix);
    const auto& theta = constants.at("sweedler").at("ribbon_theta").at(std::to_string(t));
    i.twist = constant_element(i.h, vector_from_strings(theta, q));
    write_file(dir, i);
  }
  {
    Instance i = constant_family("c_kz3_z2_trivial", group_algebra(cyclic_group(3), q),
                                 cyclic_group(2));
    Vector one3 = i.h.one(0);
    i.rmatrix = constant_rmatrix(i.h, tensor(one3, one3));
    i.rmatrix_inverse_claim = rmatrix_inverses(i.h, *i.rmatrix);
    i.twist = constant_element(i.h, one3);
    write_file(dir, i);
  }
  {
    const FiniteGroup z3 = cyclic_group(3);
    const LinearMap invmap = inversion_automorphism(z3, q);
    Instance i = constant_family("c_kz3_z2_inversion", group_algebra(z3, q), cyclic_group(2),
                                 {LinearMap::identity(q, 3), invmap});
    write_file(dir, i);
  }
  {
    Instance i;
    i.name = "kz3_q";
    i.h = group_algebra(cyclic_group(3), q);
    write_file(dir, i);
  }
  {
    Instance i;
    i.name = "kz3_gf3";
    i.h = group_algebra(cyclic_group(3), Field::gf(3));
    write_file(dir, i);
  }
  {
    Instance i = proper_support_instance(q);
    i.name = "proper_support";
    write_file(dir, i);
  }
  return 0;
}
