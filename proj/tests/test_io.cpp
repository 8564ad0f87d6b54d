#include <doctest.h>

#include <filesystem>
#include <string>

#include "cgt/catalog.hpp"
#include "cgt/io.hpp"

using namespace cgt;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  fs::path d = fs::temp_directory_path() / "cgt-io-tests";
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("permutation group round trip is byte-identical") {
  PGroupPtr g = elem_abelian_group(3, 2);
  ojson doc1 = save_group_json(g);
  CHECK(doc1.at("kind") == "permutation");
  CHECK(doc1.at("p") == 3);
  PGroupPtr g2 = load_group_json(doc1);
  CHECK(g2->order() == 9);
  ojson doc2 = save_group_json(g2);
  CHECK(doc1.dump(2) == doc2.dump(2));
  CHECK(group_fingerprint(g2) == group_fingerprint(load_group_json(doc2)));
}

TEST_CASE("matrix group round trip is byte-identical") {
  PGroupPtr g = extraspecial_exponent_p(3);
  ojson doc1 = save_group_json(g);
  CHECK(doc1.at("kind") == "matrix");
  CHECK(doc1.at("generators").contains("x"));
  CHECK(doc1.at("generators").contains("y"));
  PGroupPtr g2 = load_group_json(doc1);
  CHECK(g2->order() == 27);
  CHECK(save_group_json(g2).dump(2) == doc1.dump(2));
}

TEST_CASE("pair groups export as their translation permutation realization") {
  PGroupPtr wr = wreath_cpcp(3);
  ojson doc1 = save_group_json(wr);
  CHECK(doc1.at("kind") == "permutation");
  CHECK(doc1.at("degree") == 81);
  PGroupPtr g2 = load_group_json(doc1);
  CHECK(g2->order() == 81);
  CHECK(g2->generators.size() == wr->generators.size());
  CHECK(save_group_json(g2).dump(2) == doc1.dump(2));
}

TEST_CASE("module round trip is byte-identical") {
  Gl8Example ex = gl8_example();
  ojson doc1 = save_module_json(ex.module);
  CHECK(doc1.at("dim") == 8);
  CHECK(doc1.at("group").is_object());  // embedded inline
  FpGModule m2 = load_module_json(doc1, ".");
  CHECK(m2.dim == 8);
  CHECK(m2.group->order() == 81);
  CHECK(is_faithful(m2));
  CHECK(save_module_json(m2).dump(2) == doc1.dump(2));
}

TEST_CASE("module files can reference a group file by relative path") {
  fs::path dir = scratch_dir();
  PGroupPtr e9 = elem_abelian_group(3, 2);
  write_text_file((dir / "grp.json").string(), save_group_json(e9).dump(2) + "\n");

  ojson mod;
  mod["p"] = 3;
  mod["dim"] = 2;
  mod["group"] = "grp.json";
  ojson act;
  act[e9->generators[0].first] = ojson::array({ojson::array({1, 1}), ojson::array({0, 1})});
  act[e9->generators[1].first] = ojson::array({ojson::array({1, 0}), ojson::array({0, 1})});
  mod["action"] = act;
  write_text_file((dir / "mod.json").string(), mod.dump(2) + "\n");

  FpGModule m = load_module_file((dir / "mod.json").string());
  CHECK(m.dim == 2);
  CHECK(m.group->order() == 9);
  CHECK(action_kernel(m).order() == 3);
}

TEST_CASE("group file validation") {
  ojson good = save_group_json(elem_abelian_group(3, 2));

  ojson bad = good;
  bad["p"] = 4;
  CHECK_THROWS_AS(load_group_json(bad), InputError);  // p must be prime

  bad = good;
  bad["kind"] = "weird";
  CHECK_THROWS_AS(load_group_json(bad), InputError);

  bad = good;
  bad["generators"] = ojson::object();
  CHECK_THROWS_AS(load_group_json(bad), InputError);  // empty generator set

  bad = good;
  bad["generators"]["g1"][0] = 99;  // image out of range
  CHECK_THROWS_AS(load_group_json(bad), InputError);

  bad = good;
  bad["generators"]["g1"][0] = bad["generators"]["g1"][1];  // repeated image
  CHECK_THROWS_AS(load_group_json(bad), InputError);

  bad = good;
  bad.erase("degree");
  CHECK_THROWS_AS(load_group_json(bad), InputError);

  ojson mat = save_group_json(extraspecial_exponent_p(3));
  bad = mat;
  bad["generators"]["x"][0][0] = 7;  // residue out of range
  CHECK_THROWS_AS(load_group_json(bad), InputError);

  bad = mat;
  bad["generators"]["x"][0] = ojson::array({0, 0});  // row length mismatch
  CHECK_THROWS_AS(load_group_json(bad), InputError);
}

TEST_CASE("module file validation") {
  Gl8Example ex = gl8_example();
  ojson good = save_module_json(ex.module);

  ojson bad = good;
  bad["p"] = 5;  // characteristic disagrees with the group
  CHECK_THROWS_AS(load_module_json(bad, "."), InputError);

  bad = good;
  bad["action"].erase("A");  // missing generator label
  CHECK_THROWS_AS(load_module_json(bad, "."), InputError);

  bad = good;
  bad["action"]["extra"] = bad["action"]["B"];  // unknown label
  CHECK_THROWS_AS(load_module_json(bad, "."), InputError);

  bad = good;
  for (int c = 0; c < 8; ++c) bad["action"]["B"][0][c] = 0;  // singular matrix
  CHECK_THROWS_AS(load_module_json(bad, "."), InputError);

  bad = good;
  ojson swapped = bad["action"]["B"];
  bad["action"]["B"] = bad["action"]["A"];
  bad["action"]["A"] = swapped;  // breaks the defining relations
  CHECK_THROWS_AS(load_module_json(bad, "."), InputError);

  bad = good;
  bad["dim"] = 7;
  CHECK_THROWS_AS(load_module_json(bad, "."), InputError);
}

TEST_CASE("file errors are reported as input errors") {
  fs::path dir = scratch_dir();
  CHECK_THROWS_AS(load_group_file((dir / "missing.json").string()), InputError);
  write_text_file((dir / "garbage.json").string(), "{not json");
  CHECK_THROWS_AS(load_group_file((dir / "garbage.json").string()), InputError);
  CHECK_THROWS_AS(load_module_file((dir / "garbage.json").string()), InputError);
}

TEST_CASE("text file round trip") {
  fs::path f = scratch_dir() / "roundtrip.txt";
  write_text_file(f.string(), "line one\nline two\n");
  CHECK(read_text_file(f.string()) == "line one\nline two\n");
  CHECK_THROWS_AS(read_text_file((scratch_dir() / "nope.txt").string()), InputError);
}

}  // TEST_SUITE
