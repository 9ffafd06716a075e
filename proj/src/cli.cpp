#include "dendro/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "dendro/codec.hpp"
#include "dendro/errors.hpp"
#include "dendro/instances.hpp"
#include "dendro/json_io.hpp"
#include "dendro/order_measure.hpp"
#include "dendro/random_gen.hpp"
#include "dendro/rng.hpp"
#include "dendro/verify.hpp"

namespace dendro {

namespace {

Json read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
  }
  return load_json_file(path);
}

void write_output(const std::string& path, std::ostream& out, const std::string& text) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw parse_error("cannot open file for writing: " + path);
  f << text;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t pick_seed(bool seed_given, std::uint64_t seed_flag) {
  if (seed_given) return seed_flag;
  if (const char* env = std::getenv("DENDROCODE_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
      throw domain_error(std::string("DENDROCODE_SEED is not an integer: ") + env);
    }
  }
  return 0;
}

// Accepts a bare tree object or a structured-tree bundle.
RealTree tree_from_any(const Json& j) {
  if (j.is_object() && j.contains("tree")) return structured_from_json(j).tree();
  return tree_from_json(j);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"height-function codec for finite measured rooted plane trees"};
  app.require_subcommand(1);

  std::string in_path = "-";
  std::string out_path = "-";
  std::uint64_t seed_flag = 0;
  bool seed_given = false;
  auto add_io = [&](CLI::App* cmd, bool needs_in) {
    if (needs_in) cmd->add_option("--in", in_path, "input file, - for stdin");
    cmd->add_option("--out", out_path, "output file, - for stdout");
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed_flag, "random seed (DENDROCODE_SEED as fallback)")
        ->each([&](const std::string&) { seed_given = true; });
  };

  auto* cmd_encode = app.add_subcommand(
      "encode", "structured tree JSON -> minimal height function JSON");
  add_io(cmd_encode, true);

  auto* cmd_decode =
      app.add_subcommand("decode", "height function JSON -> structured tree JSON");
  add_io(cmd_decode, true);

  auto* cmd_shuffle = app.add_subcommand(
      "shuffle", "tree JSON + seed -> uniformly shuffled child order JSON");
  add_io(cmd_shuffle, true);
  add_seed(cmd_shuffle);

  auto* cmd_timechange = app.add_subcommand(
      "timechange",
      "bundle {tree, order, mu, mu_prime} JSON -> monotone time-change map JSON");
  add_io(cmd_timechange, true);

  auto* cmd_continuify = app.add_subcommand(
      "continuify", "height function JSON -> jump-free height function JSON");
  add_io(cmd_continuify, true);

  std::string gen_kind;
  int gen_size = 0;
  auto* cmd_gen = app.add_subcommand("gen", "emit a generated instance as JSON");
  cmd_gen->add_option("--kind", gen_kind, "gw|excursion|lifo|segment|star|ytree|random")
      ->required()
      ->check(CLI::IsMember({"gw", "excursion", "lifo", "segment", "star", "ytree",
                             "random"}));
  cmd_gen->add_option("--size", gen_size,
                      "size knob: gw node cap, excursion steps, lifo start load, "
                      "random vertex cap");
  add_io(cmd_gen, false);
  add_seed(cmd_gen);

  std::string suite = "all";
  int cases = 50;
  auto* cmd_verify =
      app.add_subcommand("verify", "run a named invariant suite and report JSON");
  cmd_verify->add_option("suite", suite, "height_fn|tree_core|order_measure|codec|random_gen|roundtrip|all");
  cmd_verify->add_option("--cases", cases, "randomized repetitions per suite");
  add_io(cmd_verify, false);
  add_seed(cmd_verify);

  int grid = 64;
  auto* cmd_plot =
      app.add_subcommand("plot", "height function JSON -> CSV rows t,h(t)");
  cmd_plot->add_option("--grid", grid, "number of extra evenly spaced sample points");
  add_io(cmd_plot, true);

  std::vector<std::string> argv_strings = args;
  std::vector<const char*> argv;
  argv.push_back("dendrocode");
  for (const auto& a : argv_strings) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (cmd_encode->parsed()) {
      const StructuredTree s = structured_from_json(read_input(in_path, in));
      write_output(out_path, out, dump_json(height_to_json(encode(s))));
      return 0;
    }
    if (cmd_decode->parsed()) {
      const HeightFunction h = height_from_json(read_input(in_path, in));
      write_output(out_path, out, dump_json(structured_to_json(decode(h))));
      return 0;
    }
    if (cmd_shuffle->parsed()) {
      const RealTree t = tree_from_any(read_input(in_path, in));
      Rng rng(pick_seed(seed_given, seed_flag));
      write_output(out_path, out, dump_json(order_to_json(shuffle(t, rng))));
      return 0;
    }
    if (cmd_timechange->parsed()) {
      const Json j = read_input(in_path, in);
      if (!j.is_object() || !j.contains("tree") || !j.contains("order") ||
          !j.contains("mu") || !j.contains("mu_prime")) {
        throw parse_error("timechange: need fields tree, order, mu, mu_prime");
      }
      const RealTree t = tree_from_json(j.at("tree"));
      const PlanarOrder o = order_from_json(j.at("order"));
      const TreeMeasure mu = measure_from_json(j.at("mu"), t);
      const TreeMeasure mu2 = measure_from_json(j.at("mu_prime"), t);
      const TimeChange tc = time_change(t, o, mu, mu2);
      if (!tc.unique) {
        err << "note: the time change is not unique; the measures share atoms at:";
        for (const TreePoint& p : tc.shared_atoms) err << " " << point_to_string(p);
        err << "\n";
      }
      write_output(out_path, out, dump_json(map_to_json(tc.map)));
      return 0;
    }
    if (cmd_continuify->parsed()) {
      const HeightFunction h = height_from_json(read_input(in_path, in));
      write_output(out_path, out, dump_json(height_to_json(continuify(h))));
      return 0;
    }
    if (cmd_gen->parsed()) {
      Rng rng(pick_seed(seed_given, seed_flag));
      Json j;
      if (gen_kind == "gw") {
        const int cap = gen_size > 0 ? gen_size : 100;
        j = height_to_json(plane_tree_contour(gw_plane_tree(default_offspring_pmf(), cap, rng)));
      } else if (gen_kind == "excursion") {
        j = height_to_json(excursion_walk(gen_size > 0 ? gen_size : 16, rng));
      } else if (gen_kind == "lifo") {
        j = height_to_json(
            lifo_height(0.8, {0.5, 0.3, 0.2}, gen_size > 0 ? gen_size : 3, 50.0, rng));
      } else if (gen_kind == "segment") {
        j = structured_to_json(make_segment_instance());
      } else if (gen_kind == "star") {
        j = structured_to_json(make_three_star());
      } else if (gen_kind == "ytree") {
        j = structured_to_json(make_ytree());
      } else {  // random
        RandomTreeParams params;
        if (gen_size > 0) params.max_vertices = gen_size;
        j = structured_to_json(random_structured_tree(params, rng));
      }
      write_output(out_path, out, dump_json(j));
      return 0;
    }
    if (cmd_verify->parsed()) {
      const auto reports = run_verify(suite, cases, pick_seed(seed_given, seed_flag));
      bool pass = true;
      Json suites = Json::array();
      for (const SuiteReport& r : reports) {
        pass = pass && r.pass();
        Json fails = Json::array();
        for (const auto& f : r.failures) fails.push_back(f);
        suites.push_back({{"suite", r.suite},
                          {"checks", r.checks_run},
                          {"pass", r.pass()},
                          {"failures", std::move(fails)}});
      }
      write_output(out_path, out,
                   dump_json(Json{{"pass", pass}, {"suites", std::move(suites)}}));
      return pass ? 0 : 1;
    }
    if (cmd_plot->parsed()) {
      if (grid < 1) throw domain_error("plot: --grid must be at least 1");
      const HeightFunction h = height_from_json(read_input(in_path, in));
      std::set<Rat> times;
      for (const Knot& k : h.knots()) times.insert(k.t);
      for (int i = 0; i <= grid; ++i) times.insert(h.lifetime() * rat(i, grid));
      std::ostringstream csv;
      for (const Rat& t : times) {
        csv << fmt_double(rat_to_double(t)) << "," << fmt_double(rat_to_double(eval(h, t)))
            << "\n";
        if (t < h.lifetime()) {
          const Rat rl = right_limit(h, t);
          if (rl != eval(h, t)) {
            csv << fmt_double(rat_to_double(t)) << "," << fmt_double(rat_to_double(rl))
                << "\n";
          }
        }
      }
      write_output(out_path, out, csv.str());
      return 0;
    }
    throw domain_error("no subcommand selected");
  } catch (const parse_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    err << "invalid structure: " << e.what() << "\n";
    return 2;
  } catch (const mes_violation& e) {
    err << "measure violation: " << e.what() << "\n";
    return 2;
  } catch (const empty_measure& e) {
    err << "empty measure: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace dendro
