#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dendro/cli.hpp"
#include "dendro/instances.hpp"
#include "dendro/json_io.hpp"
#include "helpers.hpp"

using namespace dendro;
using dendro::testing::make_h1;
using dendro::testing::make_hy;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("encode and decode pipe byte-identically") {
  const std::string seg_text = dump_json(structured_to_json(make_segment_instance()));
  const std::string h1_text = dump_json(height_to_json(make_h1()));

  const RunResult enc = run({"encode"}, seg_text);
  CHECK(enc.code == 0);
  CHECK(enc.out == h1_text);
  CHECK(enc.err.empty());

  const RunResult dec = run({"decode"}, h1_text);
  CHECK(dec.code == 0);
  const RunResult re = run({"encode"}, dec.out);
  CHECK(re.code == 0);
  CHECK(re.out == h1_text);
}

TEST_CASE("file input and output match the streams") {
  const std::string in_path = "tmp_cli_in.json";
  const std::string out_path = "tmp_cli_out.json";
  save_json_file(in_path, structured_to_json(make_ytree()));

  const RunResult r = run({"encode", "--in", in_path, "--out", out_path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(out_path) == dump_json(height_to_json(make_hy())));
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());

  const RunResult missing = run({"encode", "--in", "no_such_file.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("input error:") == 0);
}

TEST_CASE("shuffle is seed-deterministic and env-seeded") {
  const std::string star_text = dump_json(tree_to_json(make_three_star().tree()));
  const RunResult a = run({"shuffle", "--seed", "5"}, star_text);
  const RunResult b = run({"shuffle", "--seed", "5"}, star_text);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = parse_json_text(a.out);
  CHECK(j.at("child_order").at("0").size() == 3);

  // A structured bundle works too: its tree part is shuffled.
  const RunResult s = run({"shuffle", "--seed", "5"},
                          dump_json(structured_to_json(make_three_star())));
  CHECK(s.code == 0);
  CHECK(s.out == a.out);

  setenv("DENDROCODE_SEED", "5", 1);
  const RunResult env = run({"shuffle"}, star_text);
  CHECK(env.code == 0);
  CHECK(env.out == a.out);
  setenv("DENDROCODE_SEED", "pickle", 1);
  const RunResult badenv = run({"shuffle"}, star_text);
  CHECK(badenv.code == 2);
  CHECK(badenv.err.find("usage error:") == 0);
  unsetenv("DENDROCODE_SEED");

  const RunResult noseed = run({"shuffle"}, star_text);  // falls back to seed 0
  CHECK(noseed.code == 0);
}

TEST_CASE("timechange emits the pairing map and flags shared atoms") {
  const StructuredTree seg = make_segment_instance();
  Json mu = measure_to_json([&] {
    TreeMeasure m;
    m.densities[0] = Rat(1);
    return m;
  }());
  Json mu2 = measure_to_json([&] {
    TreeMeasure m;
    m.densities[0] = Rat(2);
    return m;
  }());
  Json bundle;
  bundle["tree"] = tree_to_json(seg.tree());
  bundle["order"] = order_to_json(seg.order());
  bundle["mu"] = mu;
  bundle["mu_prime"] = mu2;

  const RunResult r = run({"timechange"}, dump_json(bundle));
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  const PiecewiseMap phi = map_from_json(parse_json_text(r.out));
  CHECK(phi.knots() ==
        std::vector<MapKnot>{{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(2), Rat(2)}});

  // Same measure on both sides: the atom is shared, the note lands on stderr.
  bundle["mu"] = measure_to_json(seg.measure());
  bundle["mu_prime"] = measure_to_json(seg.measure());
  const RunResult shared = run({"timechange"}, dump_json(bundle));
  CHECK(shared.code == 0);
  CHECK(shared.err.find("not unique") != std::string::npos);

  bundle.erase("mu_prime");
  const RunResult broken = run({"timechange"}, dump_json(bundle));
  CHECK(broken.code == 2);
  CHECK(broken.err.find("input error:") == 0);
}

TEST_CASE("continuify subcommand") {
  const RunResult r = run({"continuify"}, dump_json(height_to_json(make_hy())));
  CHECK(r.code == 0);
  const HeightFunction c = height_from_json(parse_json_text(r.out));
  CHECK(c == continuify(make_hy()));
  CHECK(c.lifetime() == rat(7, 2));
}

TEST_CASE("gen emits canned and seeded instances") {
  const RunResult y = run({"gen", "--kind", "ytree"});
  CHECK(y.code == 0);
  CHECK(y.out == dump_json(structured_to_json(make_ytree())));
  CHECK(run({"gen", "--kind", "star"}).out ==
        dump_json(structured_to_json(make_three_star())));
  CHECK(run({"gen", "--kind", "segment"}).out ==
        dump_json(structured_to_json(make_segment_instance())));

  const RunResult r1 = run({"gen", "--kind", "random", "--seed", "42"});
  const RunResult r2 = run({"gen", "--kind", "random", "--seed", "42"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  structured_from_json(parse_json_text(r1.out));  // parses and validates

  const RunResult tent = run({"gen", "--kind", "excursion", "--seed", "3", "--size", "1"});
  CHECK(tent.code == 0);
  const HeightFunction th = height_from_json(parse_json_text(tent.out));
  CHECK(th.lifetime() == Rat(2));
  CHECK(eval(th, Rat(1)) == Rat(1));

  const RunResult gw = run({"gen", "--kind", "gw", "--seed", "11", "--size", "30"});
  CHECK(gw.code == 0);
  height_from_json(parse_json_text(gw.out));  // valid height JSON

  const RunResult lifo = run({"gen", "--kind", "lifo", "--seed", "2"});
  CHECK(lifo.code == 0);
  const HeightFunction lh = height_from_json(parse_json_text(lifo.out));
  CHECK(eval(lh, lh.lifetime()) == Rat(3));  // default starting load

  CHECK(run({"gen", "--kind", "nonsense"}).code == 2);
  CHECK(run({"gen"}).code == 2);  // --kind is required
}

TEST_CASE("verify maps suite results to exit codes") {
  const RunResult r = run({"verify", "roundtrip", "--seed", "7", "--cases", "200"});
  CHECK(r.code == 0);
  const Json j = parse_json_text(r.out);
  CHECK(j.at("pass") == true);
  CHECK(j.at("suites").size() == 1);
  CHECK(j.at("suites")[0].at("suite") == "roundtrip");
  CHECK(j.at("suites")[0].at("checks").get<int>() > 0);

  const RunResult all = run({"verify", "--cases", "2", "--seed", "1"});
  CHECK(all.code == 0);
  CHECK(parse_json_text(all.out).at("suites").size() == 6);

  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"verify", "codec", "--cases", "0"}).code == 2);
}

TEST_CASE("plot emits knot and grid rows") {
  const RunResult r = run({"plot", "--grid", "3"}, dump_json(height_to_json(make_hy())));
  CHECK(r.code == 0);
  std::istringstream rows(r.out);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(rows, line)) lines.push_back(line);
  REQUIRE(lines.size() == 5);  // times 0,1,2,3 plus the jump's second row
  CHECK(lines[0] == "0,0");
  CHECK(lines[1] == "1,1");
  CHECK(lines[2] == "2,2");
  CHECK(lines[3] == "2,1");
  CHECK(lines[4] == "3,2");

  CHECK(run({"plot", "--grid", "0"}, dump_json(height_to_json(make_hy()))).code == 2);
}

TEST_CASE("errors carry distinct prefixes and exit 2") {
  const RunResult bad = run({"encode"}, "{broken");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("input error:") == 0);

  Json upward = height_to_json(make_h1());
  upward["knots"][1]["y_right"] = "9/1";
  const RunResult invalid = run({"decode"}, dump_json(upward));
  CHECK(invalid.code == 2);
  CHECK(invalid.err.find("invalid structure:") == 0);

  Json starved = structured_to_json(make_ytree());
  starved["measure"]["densities"]["1"] = "0/1";
  const RunResult mes = run({"encode"}, dump_json(starved));
  CHECK(mes.code == 2);
  CHECK(mes.err.find("measure violation:") == 0);

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"encode", "--bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
