#include "dendro/random_gen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "dendro/errors.hpp"

namespace dendro {

// ---------------------------------------------------------- plane trees ----

std::vector<std::string> plane_tree_violations(const PlaneTree& tau) {
  std::vector<std::string> out;
  const auto& counts = tau.child_counts;
  if (counts.empty()) {
    out.push_back("plane tree: needs at least the root");
    return out;
  }
  long declared = 0;  // child slots opened so far
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0) {
      out.push_back("plane tree: negative child count at vertex " + std::to_string(i));
      return out;
    }
    if (i > 0 && declared < static_cast<long>(i)) {
      out.push_back("plane tree: vertex " + std::to_string(i) + " has no open parent slot");
      return out;
    }
    declared += counts[i];
  }
  if (declared != static_cast<long>(counts.size()) - 1) {
    out.push_back("plane tree: " + std::to_string(declared) +
                  " children declared for " + std::to_string(counts.size() - 1) +
                  " non-root vertices");
  }
  return out;
}

namespace {

void require_valid(const PlaneTree& tau) {
  const auto violations = plane_tree_violations(tau);
  if (!violations.empty()) {
    std::string msg = "plane tree rejected:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw validation_error(msg);
  }
}

std::vector<std::vector<int>> children_lists(const std::vector<int>& parents) {
  std::vector<std::vector<int>> kids(parents.size());
  for (std::size_t v = 1; v < parents.size(); ++v) {
    kids[static_cast<std::size_t>(parents[v])].push_back(static_cast<int>(v));
  }
  return kids;
}

// Knots at k * dt with heights vals[k] * dy; collinear stretches merge.
HeightFunction lattice_path(const std::vector<int>& vals, const Rat& dt, const Rat& dy) {
  std::vector<Knot> knots;
  knots.reserve(vals.size());
  for (std::size_t k = 0; k < vals.size(); ++k) {
    const Rat t = dt * static_cast<long>(k);
    const Rat y = dy * vals[k];
    knots.push_back({t, y, y});
  }
  return HeightFunction(std::move(knots));
}

}  // namespace

std::vector<int> plane_tree_parents(const PlaneTree& tau) {
  require_valid(tau);
  const auto& counts = tau.child_counts;
  std::vector<int> parents(counts.size(), -1);
  std::vector<std::pair<int, int>> open;  // (vertex, remaining child slots)
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i > 0) {
      while (open.back().second == 0) open.pop_back();
      parents[i] = open.back().first;
      --open.back().second;
    }
    open.push_back({static_cast<int>(i), counts[i]});
  }
  return parents;
}

std::vector<int> discrete_height_process(const PlaneTree& tau) {
  const auto parents = plane_tree_parents(tau);
  std::vector<int> h(parents.size(), 0);
  for (std::size_t v = 1; v < parents.size(); ++v) {
    h[v] = h[static_cast<std::size_t>(parents[v])] + 1;
  }
  return h;
}

HeightFunction discrete_height_interpolation(const PlaneTree& tau) {
  return lattice_path(discrete_height_process(tau), Rat(1), Rat(1));
}

namespace {

std::vector<int> contour_values(const PlaneTree& tau, std::vector<int>* first_visit) {
  const auto parents = plane_tree_parents(tau);
  const auto kids = children_lists(parents);
  std::vector<int> values{0};
  if (first_visit) first_visit->assign(parents.size(), 0);
  std::vector<std::pair<int, std::size_t>> stack{{0, 0}};  // (vertex, next child slot)
  while (!stack.empty()) {
    auto& [v, slot] = stack.back();
    const auto& ch = kids[static_cast<std::size_t>(v)];
    if (slot < ch.size()) {
      const int c = ch[slot++];
      if (first_visit) (*first_visit)[static_cast<std::size_t>(c)] =
          static_cast<int>(values.size());
      values.push_back(static_cast<int>(stack.size()));  // child depth
      stack.push_back({c, 0});
    } else {
      stack.pop_back();
      if (!stack.empty()) values.push_back(static_cast<int>(stack.size()) - 1);
    }
  }
  return values;
}

}  // namespace

HeightFunction plane_tree_contour(const PlaneTree& tau) {
  return lattice_path(contour_values(tau, nullptr), Rat(1), Rat(1));
}

std::vector<int> contour_first_visits(const PlaneTree& tau) {
  std::vector<int> first_visit;
  contour_values(tau, &first_visit);
  return first_visit;
}

// ------------------------------------------------------------- sampling ----

namespace {

std::vector<double> cumulative_weights(const std::vector<double>& pmf, const char* what) {
  if (pmf.empty()) {
    throw domain_error(std::string(what) + ": empty distribution");
  }
  std::vector<double> cum;
  cum.reserve(pmf.size());
  double run = 0;
  for (double p : pmf) {
    if (!(p >= 0)) throw domain_error(std::string(what) + ": negative weight");
    run += p;
    cum.push_back(run);
  }
  if (!(run > 0)) throw domain_error(std::string(what) + ": weights sum to zero");
  return cum;
}

int sample_index(const std::vector<double>& cum, Rng& rng) {
  const double u = rng.unit_double() * cum.back();
  for (std::size_t i = 0; i < cum.size(); ++i) {
    if (u < cum[i]) return static_cast<int>(i);
  }
  return static_cast<int>(cum.size()) - 1;
}

}  // namespace

std::vector<double> default_offspring_pmf() {
  std::vector<double> pmf;
  double p = 0.5;
  for (int k = 0; k <= 16; ++k) {
    pmf.push_back(p);
    p /= 2;
  }
  return pmf;
}

PlaneTree gw_plane_tree(const std::vector<double>& offspring_pmf, int max_size,
                        Rng& rng) {
  if (max_size < 1) throw domain_error("gw_plane_tree: max_size must be at least 1");
  const auto cum = cumulative_weights(offspring_pmf, "gw_plane_tree");
  if (!(offspring_pmf[0] > 0)) {
    throw domain_error("gw_plane_tree: offspring law never terminates (no mass at 0)");
  }
  while (true) {
    std::vector<int> counts;
    long pending = 1;
    bool overflow = false;
    while (pending > 0) {
      if (static_cast<long>(counts.size()) >= max_size) {
        overflow = true;
        break;
      }
      const int k = sample_index(cum, rng);
      counts.push_back(k);
      pending += k - 1;
    }
    if (!overflow) return PlaneTree{std::move(counts)};
  }
}

HeightFunction excursion_walk(int n, Rng& rng) {
  if (n < 1) throw domain_error("excursion_walk: n must be at least 1");
  // n up-steps and n+1 down-steps in uniform order; exactly one rotation is
  // a first passage to -1, and chopping its last step leaves a uniform
  // nonnegative 2n-step loop at 0.
  std::vector<int> steps(static_cast<std::size_t>(2 * n + 1), -1);
  std::fill(steps.begin(), steps.begin() + n, 1);
  rng.shuffle(steps);
  int run = 0;
  int best = 0;
  std::size_t cut = 0;  // rotate so the walk starts just after the first minimum
  for (std::size_t i = 0; i < steps.size(); ++i) {
    run += steps[i];
    if (run < best) {
      best = run;
      cut = i + 1;
    }
  }
  std::vector<int> vals{0};
  int v = 0;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    v += steps[(cut + i) % steps.size()];
    vals.push_back(v);
  }
  const long s = std::lround(std::sqrt(static_cast<double>(n)));
  return lattice_path(vals, rat(1, s * s), rat(1, s));
}

HeightFunction lifo_height(double arrival_rate, const std::vector<double>& service_pmf,
                           int x0, double horizon, Rng& rng) {
  if (x0 <= 0) throw domain_error("lifo_height: x0 must be positive");
  if (!(arrival_rate >= 0)) throw domain_error("lifo_height: negative arrival rate");
  if (!(horizon >= 0)) throw domain_error("lifo_height: negative horizon");

  Rat t = 0;
  Rat x = x0;  // current load
  std::vector<std::array<Rat, 3>> jumps;  // (time, value after, value before)
  if (arrival_rate > 0) {
    const auto cum = cumulative_weights(service_pmf, "lifo_height");
    const Rat hor = rat_from_double_exact(horizon);
    while (true) {
      double u;
      do {
        u = rng.unit_double();
      } while (u <= 0.0);
      const Rat gap = rat_from_double_exact(-std::log(u) / arrival_rate);
      const Rat ta = t + gap;
      if (ta > hor) break;   // arrivals switched off past the horizon
      if (x <= ta - t) break;  // the load drains to 0 first
      const Rat before = x - (ta - t);
      const int service = 1 + sample_index(cum, rng);
      jumps.push_back({ta, before + service, before});
      t = ta;
      x = before + service;
    }
  }
  const Rat M = t + x;  // hitting time of 0

  // h(t) = X(M - t): unit upward drift, and each upward jump of X becomes a
  // downward jump of h.
  std::vector<Knot> knots{{Rat(0), Rat(0), Rat(0)}};
  for (auto it = jumps.rbegin(); it != jumps.rend(); ++it) {
    knots.push_back({M - (*it)[0], (*it)[1], (*it)[2]});
  }
  knots.push_back({M, Rat(x0), Rat(x0)});
  return HeightFunction(std::move(knots));
}

// ------------------------------------------------- random structured tree ----

StructuredTree random_structured_tree(const RandomTreeParams& params, Rng& rng) {
  if (params.max_vertices < 1 || !(params.min_density > 0) ||
      params.max_density < params.min_density || params.max_atoms < 0) {
    throw domain_error("random_structured_tree: invalid generator parameters");
  }
  auto draw_len = [&] {
    return rat(1 + static_cast<long>(rng.below(8)), 1 + static_cast<long>(rng.below(4)));
  };
  // The explicit return type forces evaluation of the GMP expression before
  // the rat(...) temporary it references goes out of scope.
  auto draw_density = [&]() -> Rat {
    return params.min_density + (params.max_density - params.min_density) *
                                    rat(static_cast<long>(rng.below(17)), 16);
  };
  auto draw_mass = [&] {
    return rat(1 + static_cast<long>(rng.below(8)), 1 + static_cast<long>(rng.below(8)));
  };

  int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(params.max_vertices)));
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<Rat> length(static_cast<std::size_t>(n));   // of edge parent[v] -> v
  std::vector<Rat> density(static_cast<std::size_t>(n));  // same indexing, id = v - 1
  for (int v = 1; v < n; ++v) {
    parent[static_cast<std::size_t>(v)] =
        static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
    length[static_cast<std::size_t>(v)] = draw_len();
    density[static_cast<std::size_t>(v)] = draw_density();
  }
  auto kids_of = [&](int v) {
    std::vector<int> out;
    for (int w = 1; w < n; ++w) {
      if (parent[static_cast<std::size_t>(w)] == v) out.push_back(w);
    }
    return out;
  };

  // Atoms are drawn as (location, mass) pairs now and turned into TreePoints
  // once the final tree object exists.
  struct RawAtom {
    bool on_edge;
    int id;    // vertex id, or edge id when on_edge
    long num;  // edge offset fraction num/8
    Rat mass;
  };
  std::vector<RawAtom> raw_atoms;
  if (n == 1) {
    raw_atoms.push_back({false, 0, 0, Rat(1)});
  } else {
    const int want = static_cast<int>(
        rng.below(static_cast<std::uint64_t>(params.max_atoms) + 1));
    for (int i = 0; i < want; ++i) {
      const int slot = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * n - 1)));
      if (slot < n) {
        raw_atoms.push_back({false, slot, 0, draw_mass()});
      } else {
        raw_atoms.push_back(
            {true, slot - n, 1 + static_cast<long>(rng.below(7)), draw_mass()});
      }
    }
  }

  // Repair pass: a non-root vertex with exactly one child either gains a
  // second child, keeps an atom, or changes density across it; the ones that
  // stay degree 2 must carry a mark.
  std::vector<int> unary;
  for (int v = 1; v < n; ++v) {
    if (kids_of(v).size() == 1) unary.push_back(v);
  }
  std::set<int> marks;
  for (int v : unary) {
    int choice = static_cast<int>(rng.below(3));
    if (choice == 1 && n >= params.max_vertices) choice = 0;
    if (choice == 2 && params.min_density == params.max_density) choice = 0;
    if (choice == 1) {  // grow a second child
      parent.push_back(v);
      length.push_back(draw_len());
      density.push_back(draw_density());
      ++n;
      continue;
    }
    if (choice == 2) {  // make the density change visible at v
      const int child = kids_of(v)[0];
      if (density[static_cast<std::size_t>(child)] == density[static_cast<std::size_t>(v)]) {
        density[static_cast<std::size_t>(child)] =
            density[static_cast<std::size_t>(v)] == params.max_density
                ? params.min_density
                : params.max_density;
      }
      marks.insert(v);
      continue;
    }
    // choice 0: pin an atom to the vertex itself
    raw_atoms.push_back({false, v, 0, draw_mass()});
    marks.insert(v);
  }

  // Assemble the tree. Edge into vertex v has id v - 1.
  std::vector<int> vertex_ids;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    vertex_ids.push_back(v);
    if (v > 0) {
      edges.push_back({v - 1, parent[static_cast<std::size_t>(v)], v,
                       length[static_cast<std::size_t>(v)]});
    }
  }
  RealTree tree(0, std::move(vertex_ids), std::move(edges), marks);

  TreeMeasure measure;
  for (int v = 1; v < n; ++v) {
    measure.densities[v - 1] = density[static_cast<std::size_t>(v)];
  }
  std::map<TreePoint, Rat> atom_map;
  for (const RawAtom& ra : raw_atoms) {
    const TreePoint p =
        ra.on_edge ? TreePoint::on_edge(tree, ra.id,
                                        length[static_cast<std::size_t>(ra.id) + 1] *
                                            rat(ra.num, 8))
                   : TreePoint::at_vertex(ra.id);
    atom_map[p] += ra.mass;
  }
  for (const auto& [point, mass] : atom_map) {
    measure.atoms.push_back({point, mass});
  }

  PlanarOrder order;
  for (int v = 0; v < n; ++v) {
    std::vector<int> slots;
    for (int w = 1; w < n; ++w) {
      if (parent[static_cast<std::size_t>(w)] == v) slots.push_back(w - 1);
    }
    if (!slots.empty()) {
      rng.shuffle(slots);
      order.child_order[v] = slots;
    }
  }

  return StructuredTree(std::move(tree), std::move(order), std::move(measure));
}

// ------------------------------------------------- random height function ----

HeightFunction random_height_function(Rng& rng, int max_pieces) {
  if (max_pieces < 1) throw domain_error("random_height_function: max_pieces < 1");
  const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_pieces)));
  struct Piece {
    Rat t0, t1, y0, y1;
  };
  std::vector<Piece> pieces;
  Rat t = 0;
  Rat y = 0;
  // Every positive-duration descent and every stay at a previously departed
  // point would be a latter visit, so the walk only rises, pauses at freshly
  // reached points, and drops instantaneously.
  bool can_plateau = true;  // an initial plateau codes an atom at the root
  bool must_rise = false;   // right after a jump only a rise visits new points
  auto dur = [&] {
    return rat(1 + static_cast<long>(rng.below(8)), 1 + static_cast<long>(rng.below(4)));
  };
  auto rise = [&] {
    const Rat d = dur();
    const Rat dy = dur();
    pieces.push_back({t, t + d, y, y + dy});
    t += d;
    y += dy;
    can_plateau = true;
    must_rise = false;
  };
  for (int i = 0; i < k; ++i) {
    int action = must_rise ? 0 : static_cast<int>(rng.below(4));
    if (action == 2 && !can_plateau) action = 0;
    if (action == 3 && y == 0) action = 0;  // nothing below the root
    if (action <= 1) {
      rise();
    } else if (action == 2) {
      // plateau at a freshly reached point
      const Rat d = dur();
      pieces.push_back({t, t + d, y, y});
      t += d;
      can_plateau = false;
    } else {
      // downward jump: time does not advance
      y -= y * rat(1 + static_cast<long>(rng.below(4)), 4);
      can_plateau = false;
      must_rise = true;
    }
  }
  if (y != pieces.back().y1) rise();  // a trailing jump would be invisible

  std::vector<Knot> knots{{Rat(0), Rat(0), Rat(0)}};
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    knots.push_back({pieces[i].t0, pieces[i - 1].y1, pieces[i].y0});
  }
  knots.push_back({pieces.back().t1, pieces.back().y1, pieces.back().y1});
  return HeightFunction(std::move(knots));
}

}  // namespace dendro
