#include "ternions/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ternions/json_io.hpp"
#include "ternions/linalg.hpp"
#include "ternions/oracles.hpp"
#include "ternions/parallel.hpp"
#include "ternions/point_sets.hpp"

namespace ternions {

namespace {

using nlohmann::json;
using json_io::to_json;

void fail(Check& c, json example) {
  if (c.passed) {
    c.passed = false;
    c.counterexample = std::move(example);
  }
}

Check make_check(std::string name, std::string claim) {
  Check c;
  c.name = std::move(name);
  c.claim = std::move(claim);
  return c;
}

// Set equality of two sorted point lists; on mismatch the first element of
// the symmetric difference becomes the counterexample.
void compare_sets(Check& c, const std::vector<RestrictedPoint>& lhs, const char* lhs_name,
                  const std::vector<RestrictedPoint>& rhs, const char* rhs_name) {
  c.counts[lhs_name] = lhs.size();
  c.counts[rhs_name] = rhs.size();
  std::vector<RestrictedPoint> only_lhs, only_rhs;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(only_lhs));
  std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(), std::back_inserter(only_rhs));
  if (!only_lhs.empty()) {
    fail(c, {{std::string("only_in_") + lhs_name, to_json(only_lhs.front())}});
  } else if (!only_rhs.empty()) {
    fail(c, {{std::string("only_in_") + rhs_name, to_json(only_rhs.front())}});
  }
}

const QuadricSystem& system_of(const VerifyOptions& o) {
  return o.system ? *o.system : standard_quadrics();
}

std::uint64_t q_of(const FieldSpec& f) { return static_cast<std::uint64_t>(f.modulus()); }

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

// Image data of one pair in the exhaustive pair scan.
struct PairImage {
  std::uint64_t index;
  bool unimodular;
  std::optional<RestrictedPoint> image;  // nullopt if outside the ambient space
  std::string error;
};

std::vector<PairImage> free_pair_images(const FieldSpec& f, unsigned workers) {
  return parallel_collect<PairImage>(
      pair_count(f), workers, [&](std::uint64_t i, std::vector<PairImage>& out) {
        const TernionPair pair = pair_from_index(f, i);
        const Subspace3 sub = cyclic_submodule(pair);
        if (sub.dim() != 3) return;
        PairImage entry{i, is_unimodular(pair), std::nullopt, {}};
        try {
          entry.image = normalize(restrict_to_ambient(plucker(sub)));
        } catch (const NotInAmbient& e) {
          entry.error = e.what();
        }
        out.push_back(std::move(entry));
      });
}

std::vector<XParams> all_x_tuples(const FieldSpec& f) {
  const auto elems = enumerate_field(f);
  std::vector<XParams> out;
  for (const auto& a11 : elems)
    for (const auto& b11 : elems)
      for (const auto& a22 : elems)
        for (const auto& b22 : elems)
          for (const auto& a12 : elems)
            for (const auto& b12 : elems) out.push_back({a11, b11, a22, b22, a12, b12});
  return out;
}

// ---------------------------------------------------------------------------

Report theorem_suite(const FieldSpec& f, const VerifyOptions& o) {
  Report r{Suite::Theorem, f, {}};
  const auto& system = system_of(o);
  const auto entries = free_pair_images(f, o.workers);

  Check ambient = make_check("images_in_ambient",
                             "Plücker images of free cyclic submodules satisfy the twelve linear "
                             "conditions of the 8-dimensional ambient subspace");
  Check on_variety = make_check("images_satisfy_quadrics",
                                "every image annihilates the nine quadrics");
  Check segre_block = make_check("class_coherence",
                                 "X-images have a nonzero p135..p246 block, Y-images a zero one");
  std::vector<RestrictedPoint> images, y_images;
  for (const auto& e : entries) {
    const TernionPair pair = pair_from_index(f, e.index);
    if (!e.image) {
      fail(ambient, {{"pair", to_json(pair)}, {"error", e.error}});
      continue;
    }
    if (!is_on_variety(*e.image, system)) {
      fail(on_variety, {{"pair", to_json(pair)}, {"image", to_json(*e.image)}});
    }
    if (e.unimodular == e.image->segre_block_zero()) {
      fail(segre_block, {{"pair", to_json(pair)}, {"image", to_json(*e.image)}});
    }
    images.push_back(*e.image);
    if (!e.unimodular) y_images.push_back(*e.image);
  }
  ambient.counts["free_pairs"] = entries.size();
  sort_unique(images);
  sort_unique(y_images);

  const auto solutions = enumerate_variety_points(f, o.workers, system);
  Check equal = make_check("images_equal_solutions",
                           "the set of images of all free cyclic submodules equals the set of "
                           "projective solutions of the linear and quadratic equations");
  compare_sets(equal, images, "images", solutions, "solutions");
  equal.counts["candidates"] = projective_space_size(f, 8);

  Check line = make_check("y_image_is_line",
                          "images of the Y-submodules are exactly the q+1 points of the line "
                          "E356 E456, which is also the zero-Segre-block part of the solutions");
  const std::array<RestrictedPoint, 2> line_span = {RestrictedPoint::of(f, {0, 0, 0, 0, 0, 0, 1, 0}),
                                                    RestrictedPoint::of(f, {0, 0, 0, 0, 0, 0, 0, 1})};
  const auto line_points = span_points(line_span);
  compare_sets(line, y_images, "y_images", line_points, "line_points");
  compare_sets(line, y_param_image(f), "y_param_image", line_points, "line_points");
  std::vector<RestrictedPoint> solution_line;
  for (const auto& p : solutions) {
    if (p.segre_block_zero()) solution_line.push_back(p);
  }
  compare_sets(line, solution_line, "solutions_on_line", line_points, "line_points");
  if (line_points.size() != q_of(f) + 1) fail(line, {{"line_points", line_points.size()}});

  r.checks = {std::move(ambient), std::move(on_variety), std::move(segre_block), std::move(equal),
              std::move(line)};
  return r;
}

Report lemma1_suite(const FieldSpec& f, const VerifyOptions& o) {
  Report r{Suite::Lemma1, f, {}};
  const auto planes = gamma_planes(f);

  Check count = make_check("plane_count", "there is one plane gamma(u, v) per point of P^1(F)");
  count.counts["planes"] = planes.size();
  if (planes.size() != q_of(f) + 1) fail(count, {{"planes", planes.size()}});

  Check dims = make_check("planes_are_planes", "q1(u,v), q2(u,v), r(u,v) span a 3-dimensional space");
  std::vector<RestrictedPoint> all_points;
  std::size_t total = 0;
  for (const auto& g : planes) {
    if (g.dimension() != 3) {
      fail(dims, {{"u", to_json(g.u)}, {"v", to_json(g.v)}, {"dimension", g.dimension()}});
    }
    auto pts = g.points();
    total += pts.size();
    all_points.insert(all_points.end(), pts.begin(), pts.end());
  }
  sort_unique(all_points);

  Check uni = make_check("union_equals_variety", "the union of the planes gamma(u, v) is the variety");
  compare_sets(uni, all_points, "union", enumerate_variety_points(f, o.workers, system_of(o)),
               "variety");

  Check disjoint = make_check("planes_disjoint", "distinct planes gamma(u, v) share no point");
  disjoint.counts["sum_of_plane_sizes"] = total;
  disjoint.counts["union_size"] = all_points.size();
  if (total != all_points.size()) fail(disjoint, {{"overlap", total - all_points.size()}});

  Check own = make_check("x_point_in_parameter_plane",
                         "the image of an X-submodule with parameters (a22, b22) lies in "
                         "gamma(a22, b22)");
  std::uint64_t checked = 0;
  for (std::uint64_t i = 0; i < pair_count(f); ++i) {
    const TernionPair pair = pair_from_index(f, i);
    if (!is_unimodular(pair)) continue;
    const auto g = gamma_plane(pair.a.a22, pair.b.a22);
    const PluckerVector image = plucker(cyclic_submodule(pair));
    const std::size_t rk = linalg::rank({linalg::to_row(g.q1.coords()), linalg::to_row(g.q2.coords()),
                                         linalg::to_row(g.r.coords()), linalg::to_row(image.coords())});
    ++checked;
    if (rk != 3) fail(own, {{"pair", to_json(pair)}});
  }
  own.counts["x_pairs"] = checked;

  r.checks = {std::move(count), std::move(dims), std::move(uni), std::move(disjoint), std::move(own)};
  return r;
}

Scalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  return Scalar(FieldSpec::rational(), mpq_class(num(rng), den(rng)));
}

Report smooth_suite(const FieldSpec& f, const VerifyOptions& o) {
  Report r{Suite::Smooth, f, {}};
  Check param = make_check("parametrization_rank_4",
                           "the partial derivatives of the X-parametrization span a "
                           "4-dimensional space at every parameter tuple with nonzero image, "
                           "including tuples with (a11, b11) = (0, 0) that land on the Y-line");
  std::map<std::size_t, std::uint64_t> histogram;
  std::uint64_t tuples = 0, y_line_tuples = 0;
  auto visit = [&](const XParams& xp) {
    const std::size_t rank = jacobian_param_rank(xp);
    ++histogram[rank];
    ++tuples;
    if (xp.a11.is_zero() && xp.b11.is_zero()) ++y_line_tuples;
    if (rank != 4) fail(param, {{"params", to_json(xp)}, {"rank", rank}});
  };

  if (f.is_rational()) {
    std::mt19937_64 rng(o.seed);
    while (tuples < o.rational_samples) {
      XParams xp{random_rational(rng), random_rational(rng), random_rational(rng),
                 random_rational(rng), random_rational(rng), random_rational(rng)};
      try {
        param_x(xp);
      } catch (const DegenerateParameters&) {
        continue;
      }
      visit(xp);
    }
  } else {
    for (const auto& xp : all_x_tuples(f)) {
      bool zero_image = false;
      try {
        param_x(xp);
      } catch (const DegenerateParameters&) {
        zero_image = true;
      }
      if (!zero_image) visit(xp);
    }
  }
  param.counts["tuples"] = tuples;
  param.counts["y_line_tuples"] = y_line_tuples;
  for (const auto& [rank, n] : histogram) param.counts["rank_" + std::to_string(rank)] = n;
  r.checks.push_back(std::move(param));

  if (f.is_finite()) {
    Check eq = make_check("equations_jacobian_rank_4",
                          "empirical: the gradients of the nine quadrics span a 4-dimensional "
                          "space at every point of the variety");
    std::map<std::size_t, std::uint64_t> ranks;
    for (const auto& p : enumerate_variety_points(f, o.workers)) {
      const std::size_t rank = jacobian_equations_rank(p);
      ++ranks[rank];
      if (rank != 4) fail(eq, {{"point", to_json(p)}, {"rank", rank}});
    }
    for (const auto& [rank, n] : ranks) eq.counts["rank_" + std::to_string(rank)] = n;
    r.checks.push_back(std::move(eq));
  }
  return r;
}

Report unimodular_suite(const FieldSpec& f, const VerifyOptions& o) {
  Report r{Suite::Unimodular, f, {}};
  // The witness search costs q^6 per pair; beyond F_3 it runs on a seeded sample.
  const bool full_search = q_of(f) <= 3;
  std::mt19937_64 rng(o.seed);
  Check witness = make_check("criterion_matches_witness_search",
                             "(a11, b11) != (0, 0) != (a22, b22) iff AC + BD = I for some C, D");
  Check ycol = make_check("y_submodules_zero_first_column",
                          "every vector of a Y-submodule has zero a11- and b11-coordinates");
  Check closed = make_check("submodules_closed", "T(A, B) is closed under left multiplication by T");
  Check injective = make_check("free_iff_orbit_injective",
                               "the submodule has dimension 3 iff t -> t(A, B) is injective");
  Check consistent = make_check("generators_classify_consistently",
                                "all generators of one submodule get the same class");
  Check unifree = make_check("unimodular_pairs_are_free", "unimodular pairs generate free submodules");

  const auto all_t = enumerate_ternions(f);
  std::map<Subspace3, PairClass> classes;
  std::uint64_t unimodular = 0;
  for (std::uint64_t i = 0; i < pair_count(f); ++i) {
    const TernionPair pair = pair_from_index(f, i);
    const bool crit = is_unimodular(pair);
    unimodular += crit ? 1 : 0;
    if (full_search && crit != oracle::has_unimodular_witness(pair)) {
      fail(witness, {{"pair", to_json(pair)}, {"criterion", crit}});
    }
    const Subspace3 sub = cyclic_submodule(pair);
    const Classification cls = classify(pair);
    if (cls.kind == PairClass::Y) {
      for (const auto& v : sub.basis()) {
        if (!v[0].is_zero() || !v[1].is_zero()) fail(ycol, {{"pair", to_json(pair)}});
      }
    }
    for (const auto& v : sub.basis()) {
      const TernionPair member = unembed_pair(v);
      for (const auto& t : all_t) {
        if (!sub.contains(embed_pair(t * member))) {
          fail(closed, {{"pair", to_json(pair)}, {"t", to_json(t)}});
        }
      }
    }
    if (is_free(pair) != oracle::orbit_map_injective(pair)) fail(injective, {{"pair", to_json(pair)}});
    if (crit && cls.kind != PairClass::X) fail(unifree, {{"pair", to_json(pair)}});
    if (cls.kind != PairClass::NonFree) {
      auto [it, inserted] = classes.emplace(sub, cls.kind);
      if (!inserted && it->second != cls.kind) {
        fail(consistent, {{"pair", to_json(pair)}, {"submodule", to_json(sub)}});
      }
    }
  }
  witness.counts["pairs"] = pair_count(f);
  witness.counts["unimodular"] = unimodular;
  if (!full_search) {
    std::uniform_int_distribution<std::uint64_t> pick(0, pair_count(f) - 1);
    for (std::size_t n = 0; n < o.sample_size; ++n) {
      const TernionPair pair = pair_from_index(f, pick(rng));
      if (is_unimodular(pair) != oracle::has_unimodular_witness(pair)) {
        fail(witness, {{"pair", to_json(pair)}});
      }
    }
    witness.counts["sampled_witness_searches"] = o.sample_size;
  }
  consistent.counts["free_submodules"] = classes.size();
  r.checks = {std::move(witness), std::move(ycol), std::move(closed), std::move(injective),
              std::move(consistent), std::move(unifree)};
  return r;
}

TernionMatrix2 random_matrix(const FieldSpec& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, ipow(q_of(f), 12) - 1);
  return oracle::matrix_from_index(f, dist(rng));
}

TernionMatrix2 random_invertible(const FieldSpec& f, std::mt19937_64& rng) {
  for (;;) {
    auto s = random_matrix(f, rng);
    if (mat_is_invertible(s)) return s;
  }
}

// Right multiplication of every vector of `sub` by S.
Subspace3 image_under(const Subspace3& sub, const TernionMatrix2& s) {
  std::vector<Vector6> images;
  for (const auto& v : sub.basis()) images.push_back(embed_pair(act(unembed_pair(v), s)));
  return Subspace3::span(images);
}

Report invertibility_suite(const FieldSpec& f, const VerifyOptions& o) {
  Report r{Suite::Invertibility, f, {}};
  const bool exhaustive = f.modulus() == 2;
  std::mt19937_64 rng(o.seed);

  Check linear = make_check("criterion_matches_bijectivity",
                            "S is invertible iff both diagonal projections are, iff x -> xS is "
                            "bijective on T^2");
  const std::uint64_t matrices = ipow(q_of(f), 12);
  const bool full_scan = q_of(f) <= 3;
  const std::uint64_t scanned = full_scan ? matrices : o.sample_size;
  std::uint64_t invertible = 0;
  for (std::uint64_t i = 0; i < scanned; ++i) {
    const auto s = full_scan ? oracle::matrix_from_index(f, i) : random_matrix(f, rng);
    const bool crit = mat_is_invertible(s);
    invertible += crit ? 1 : 0;
    if (crit != oracle::right_action_is_bijective(s)) fail(linear, {{full_scan ? "matrix_index" : "sample", i}});
  }
  linear.counts[full_scan ? "matrices" : "sampled_matrices"] = scanned;
  linear.counts["invertible"] = invertible;

  Check search = make_check("criterion_matches_inverse_search",
                            "S is invertible iff a two-sided inverse exists in M_2(T)");
  const std::uint64_t searched = exhaustive ? matrices : o.sample_size;
  for (std::uint64_t n = 0; n < searched; ++n) {
    const auto s = exhaustive ? oracle::matrix_from_index(f, n) : random_matrix(f, rng);
    if (mat_is_invertible(s) != oracle::has_inverse(s)) fail(search, {{"sample", n}});
  }
  search.counts[exhaustive ? "matrices" : "sampled_matrices"] = searched;

  Check invariant = make_check("action_preserves_class",
                               "classify(act(pair, S)) = classify(pair) for invertible S");
  Check image = make_check("action_maps_submodules",
                           "the submodule of act(pair, S) is the right-multiplied submodule");
  auto check_action = [&](const TernionPair& pair, const TernionMatrix2& s) {
    const TernionPair moved = act(pair, s);
    if (classify(moved).kind != classify(pair).kind || classify(moved).dim != classify(pair).dim) {
      fail(invariant, {{"pair", to_json(pair)}});
    }
    if (cyclic_submodule(moved) != image_under(cyclic_submodule(pair), s)) {
      fail(image, {{"pair", to_json(pair)}});
    }
  };
  std::uint64_t actions = 0;
  if (exhaustive) {
    std::vector<TernionMatrix2> group;
    for (std::uint64_t i = 0; i < matrices; ++i) {
      auto s = oracle::matrix_from_index(f, i);
      if (mat_is_invertible(s)) group.push_back(std::move(s));
    }
    for (std::uint64_t i = 0; i < pair_count(f); ++i) {
      const TernionPair pair = pair_from_index(f, i);
      for (const auto& s : group) {
        check_action(pair, s);
        ++actions;
      }
    }
  } else {
    std::uniform_int_distribution<std::uint64_t> pick(0, pair_count(f) - 1);
    for (; actions < o.sample_size; ++actions) {
      check_action(pair_from_index(f, pick(rng)), random_invertible(f, rng));
    }
  }
  invariant.counts[exhaustive ? "actions" : "sampled_actions"] = actions;

  Check compose = make_check("action_composes", "act(act(pair, S), S') = act(pair, S S')");
  std::uniform_int_distribution<std::uint64_t> pick(0, pair_count(f) - 1);
  for (std::uint64_t n = 0; n < o.sample_size; ++n) {
    const TernionPair pair = pair_from_index(f, pick(rng));
    const auto s = random_matrix(f, rng);
    const auto t = random_matrix(f, rng);
    if (act(act(pair, s), t) != act(pair, s * t)) fail(compose, {{"pair", to_json(pair)}});
  }
  compose.counts["sampled_triples"] = o.sample_size;

  r.checks = {std::move(linear), std::move(search), std::move(invariant), std::move(image),
              std::move(compose)};
  return r;
}

Report roundtrip_suite(const FieldSpec& f, const VerifyOptions& o) {
  Report r{Suite::Roundtrip, f, {}};
  Check inverse = make_check("param_inverts_unparametrize",
                             "param(unparametrize(p)) is projectively equal to p");
  Check constraints = make_check("params_satisfy_constraints",
                                 "X-parameters are unimodular, Y-parameters have "
                                 "a22 d22 - b22 c22 != 0");
  Check generator = make_check("generator_reproduces_point",
                               "the generator pair built from the parameters has the matching "
                               "class and Plücker image p");
  std::uint64_t x_points = 0, y_points = 0;
  for (const auto& p : enumerate_variety_points(f, o.workers)) {
    const Params params = unparametrize(p);
    if (!projective_eq(param(params), p)) {
      fail(inverse, {{"point", to_json(p)}, {"params", json_io::to_json(params)}});
    }
    TernionPair pair = TernionPair::zero(f);
    PairClass expected = PairClass::X;
    if (const auto* xp = std::get_if<XParams>(&params)) {
      ++x_points;
      if (!xp->is_unimodular()) fail(constraints, {{"point", to_json(p)}});
      pair = xp->generator();
    } else {
      ++y_points;
      const auto& yp = std::get<YParams>(params);
      if (yp.determinant().is_zero()) fail(constraints, {{"point", to_json(p)}});
      pair = yp.generator();
      expected = PairClass::Y;
    }
    const Classification cls = classify(pair);
    if (cls.kind != expected ||
        normalize(restrict_to_ambient(plucker(cyclic_submodule(pair)))) != normalize(p)) {
      fail(generator, {{"point", to_json(p)}, {"pair", to_json(pair)}});
    }
  }
  inverse.counts["x_points"] = x_points;
  inverse.counts["y_points"] = y_points;
  r.checks = {std::move(inverse), std::move(constraints), std::move(generator)};
  return r;
}

// Every k-subset of `pts` is linearly independent, k = min(|pts|, 4).
bool general_position(const std::vector<RestrictedPoint>& pts) {
  const std::size_t k = std::min<std::size_t>(pts.size(), 4);
  std::vector<bool> select(pts.size(), false);
  std::fill(select.begin(), select.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<RestrictedPoint> subset;
    for (std::size_t n = 0; n < pts.size(); ++n) {
      if (select[n]) subset.push_back(pts[n]);
    }
    if (span_rank(subset) != k) return false;
  } while (std::prev_permutation(select.begin(), select.end()));
  return true;
}

Report substructures_suite(const FieldSpec& f, const VerifyOptions& o) {
  Report r{Suite::Substructures, f, {}};
  const std::uint64_t q = q_of(f);
  const auto variety = enumerate_variety_points(f, o.workers, system_of(o));
  const auto x_image = submodule_images(f, ClassFilter::X, o.workers);
  auto on = [](const std::vector<RestrictedPoint>& set, const RestrictedPoint& p) {
    return std::binary_search(set.begin(), set.end(), p);
  };

  // Segre variety.
  Check segre = make_check("segre_image_equals_solutions",
                           "the product parametrization of the Segre variety gives exactly the "
                           "solutions of its three quadrics with p356 = p456 = 0");
  const auto segre_pts = segre_image(f);
  compare_sets(segre, segre_pts, "parametrized", segre_solutions(f, o.workers), "solutions");
  if (segre_pts.size() != (q * q + q + 1) * (q + 1)) fail(segre, {{"size", segre_pts.size()}});
  const auto tube = tube_points(f);
  Check segre_in = make_check("segre_meets_variety_in_tube",
                              "the Segre points on the variety are exactly the tube-like surface");
  std::vector<RestrictedPoint> segre_on_variety;
  for (const auto& p : segre_pts) {
    if (on(variety, p)) segre_on_variety.push_back(p);
  }
  compare_sets(segre_in, segre_on_variety, "segre_on_variety", tube, "tube");

  // Twisted cubic.
  const auto cubic = twisted_cubic_points(f);
  Check cubic_count = make_check("cubic_point_count", "the twisted cubic has q+1 points");
  cubic_count.counts["points"] = cubic.size();
  if (cubic.size() != q + 1) fail(cubic_count, {{"points", cubic.size()}});
  Check cubic_in = make_check("cubic_in_x_image", "the twisted cubic lies in the X-image");
  for (const auto& p : cubic) {
    if (!on(x_image, p)) fail(cubic_in, {{"point", to_json(p)}});
  }
  Check cubic_gen = make_check("cubic_general_position",
                               "any min(q+1, 4) points of the cubic are independent, so for "
                               "q >= 3 its points span a projective 3-space");
  cubic_gen.counts["span_rank"] = span_rank(cubic);
  if (!general_position(cubic) || span_rank(cubic) != std::min<std::uint64_t>(q + 1, 4)) {
    fail(cubic_gen, {{"span_rank", span_rank(cubic)}});
  }

  // Dual numbers.
  Check dual_in = make_check("dual_surface_in_variety", "the dual-number surface lies on the variety");
  Check dual_line = make_check("dual_surface_on_directrix_lines",
                               "each point lies on the line joining its cubic point and its point "
                               "on E356 E456");
  const auto elems = enumerate_field(f);
  for (const auto& [a, b] : projective_line(f)) {
    const RestrictedPoint c = twisted_cubic_param(a, b);
    const RestrictedPoint y = restrict_to_ambient(line_vector(a, b));
    for (const auto& a12 : elems)
      for (const auto& b12 : elems) {
        const RestrictedPoint p = dual_numbers_param(a, b, a12, b12);
        if (!on(variety, normalize(p))) fail(dual_in, {{"point", to_json(p)}});
        if (span_rank(std::vector<RestrictedPoint>{p, c, y}) != 2) {
          fail(dual_line, {{"point", to_json(p)}});
        }
      }
  }
  const auto dual = dual_surface_points(f);
  Check dual_span = make_check("dual_surface_span",
                               "the dual-number surface spans the cubic's span plus the line "
                               "E356 E456 (a 6-dimensional space for q >= 3)");
  dual_span.counts["points"] = dual.size();
  dual_span.counts["span_rank"] = span_rank(dual);
  if (span_rank(dual) != std::min<std::uint64_t>(q + 1, 4) + 2) {
    fail(dual_span, {{"span_rank", span_rank(dual)}});
  }

  // Double numbers.
  Check tube_count = make_check("tube_point_count", "the tube-like surface has (q+1)^2 points");
  tube_count.counts["points"] = tube.size();
  if (tube.size() != (q + 1) * (q + 1)) fail(tube_count, {{"points", tube.size()}});
  Check tube_in = make_check("tube_in_segre", "the tube-like surface lies on the Segre variety");
  for (const auto& p : tube) {
    if (!segre_membership(p) || !on(segre_pts, p)) fail(tube_in, {{"point", to_json(p)}});
  }
  Check meets = make_check("cubic_meets_generators_once",
                           "each generator line q1(u,v) q2(u,v) of the tube carries its tube "
                           "points and meets the twisted cubic exactly once");
  for (const auto& [u, v] : projective_line(f)) {
    const std::array<RestrictedPoint, 2> gen = {restrict_to_ambient(conic_vector(1, u, v)),
                                                restrict_to_ambient(conic_vector(2, u, v))};
    const auto line_pts = span_points(gen);
    std::size_t hits = 0;
    for (const auto& c : cubic) hits += on(line_pts, c) ? 1 : 0;
    if (hits != 1) fail(meets, {{"u", to_json(u)}, {"v", to_json(v)}, {"cubic_hits", hits}});
    for (const auto& [a11, b11] : projective_line(f)) {
      const auto p = normalize(double_numbers_param(a11, b11, u, v));
      if (!on(line_pts, p)) fail(meets, {{"point", to_json(p)}});
    }
  }

  Check no_y = make_check("subrings_give_no_y_points",
                          "free pairs over the dual numbers or the double numbers are unimodular");
  std::uint64_t dual_free = 0, double_free = 0;
  for (std::uint64_t i = 0; i < pair_count(f); ++i) {
    const TernionPair pair = pair_from_index(f, i);
    const auto ca = subring_class(pair.a);
    const auto cb = subring_class(pair.b);
    const bool in_dual = ca.dual && cb.dual;
    const bool in_double = ca.double_ && cb.double_;
    if (!in_dual && !in_double) continue;
    const auto cls = classify(pair);
    if (cls.kind == PairClass::NonFree) continue;
    dual_free += in_dual ? 1 : 0;
    double_free += in_double ? 1 : 0;
    if (cls.kind == PairClass::Y) fail(no_y, {{"pair", to_json(pair)}});
  }
  no_y.counts["free_dual_pairs"] = dual_free;
  no_y.counts["free_double_pairs"] = double_free;

  r.checks = {std::move(segre), std::move(segre_in), std::move(cubic_count), std::move(cubic_in),
              std::move(cubic_gen), std::move(dual_in), std::move(dual_line), std::move(dual_span),
              std::move(tube_count), std::move(tube_in), std::move(meets), std::move(no_y)};
  return r;
}

Report counts_suite(const FieldSpec& f, const VerifyOptions& o) {
  Report r{Suite::Counts, f, {}};
  const std::uint64_t q = q_of(f);
  auto exact = [](std::string name, std::string claim, std::uint64_t observed,
                  std::uint64_t expected) {
    Check c = make_check(std::move(name), std::move(claim));
    c.counts["observed"] = observed;
    c.counts["expected"] = expected;
    if (observed != expected) fail(c, {{"observed", observed}});
    return c;
  };
  const auto x_subs = enumerate_free_submodules(f, ClassFilter::X, o.workers);
  const auto y_subs = enumerate_free_submodules(f, ClassFilter::Y, o.workers);
  const auto variety = enumerate_variety_points(f, o.workers, system_of(o));
  r.checks.push_back(exact("variety_size", "|variety| = (q+1)(q^2+q+1)", variety.size(),
                           expected_variety_size(q)));
  r.checks.push_back(exact("x_submodules", "number of X-submodules = q(q+1)^2", x_subs.size(),
                           expected_x_count(q)));
  r.checks.push_back(exact("y_submodules", "number of Y-submodules = q+1", y_subs.size(),
                           expected_y_count(q)));
  r.checks.push_back(exact("plucker_injective",
                           "distinct free submodules have distinct Plücker images",
                           submodule_images(f, ClassFilter::Both, o.workers).size(),
                           x_subs.size() + y_subs.size()));

  Check observed = make_check("pair_census",
                              "observed only: pairs by class and non-free submodule dimension; "
                              "no orbit count is asserted");
  std::map<std::string, std::uint64_t> census;
  for (std::uint64_t i = 0; i < pair_count(f); ++i) ++census[to_string(classify(pair_from_index(f, i)))];
  for (const auto& [label, n] : census) observed.counts[label] = n;
  r.checks.push_back(std::move(observed));
  return r;
}

}  // namespace

const char* to_string(Suite s) noexcept {
  switch (s) {
    case Suite::Theorem: return "theorem";
    case Suite::Lemma1: return "lemma1";
    case Suite::Smooth: return "smooth";
    case Suite::Unimodular: return "unimodular";
    case Suite::Invertibility: return "invertibility";
    case Suite::Roundtrip: return "roundtrip";
    case Suite::Substructures: return "substructures";
    case Suite::Counts: return "counts";
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : kAllSuites) {
    if (name == to_string(s)) return s;
  }
  throw ParseError("unknown suite '" + std::string(name) + "'");
}

bool Report::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

nlohmann::json Report::to_json() const {
  json checks_json = json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"name", c.name},
                           {"claim", c.claim},
                           {"passed", c.passed},
                           {"counts", c.counts},
                           {"counterexample", c.counterexample}});
  }
  return {{"suite", ternions::to_string(suite)},
          {"field", field.to_string()},
          {"passed", passed()},
          {"checks", std::move(checks_json)}};
}

std::uint64_t suite_candidates(Suite suite, const FieldSpec& field, const VerifyOptions& options) {
  if (field.is_rational()) return suite == Suite::Smooth ? options.rational_samples : 0;
  const std::uint64_t q = q_of(field);
  const std::uint64_t points = projective_space_size(field, 8);
  switch (suite) {
    case Suite::Theorem:
    case Suite::Counts:
    case Suite::Smooth:
    case Suite::Substructures: return ipow(q, 6) + points;
    case Suite::Lemma1:
    case Suite::Roundtrip: return points;
    case Suite::Unimodular:
    case Suite::Invertibility:
      return q <= 3 ? ipow(q, 12) : ipow(q, 9) + options.sample_size;
  }
  return 0;
}

Report run_suite(Suite suite, const FieldSpec& field, const VerifyOptions& options) {
  if (field.is_rational() && suite != Suite::Smooth) {
    throw UnsupportedEnumeration(std::string("suite '") + to_string(suite) +
                                 "' needs a finite field");
  }
  switch (suite) {
    case Suite::Theorem: return theorem_suite(field, options);
    case Suite::Lemma1: return lemma1_suite(field, options);
    case Suite::Smooth: return smooth_suite(field, options);
    case Suite::Unimodular: return unimodular_suite(field, options);
    case Suite::Invertibility: return invertibility_suite(field, options);
    case Suite::Roundtrip: return roundtrip_suite(field, options);
    case Suite::Substructures: return substructures_suite(field, options);
    case Suite::Counts: return counts_suite(field, options);
  }
  throw UsageError("unknown suite");
}

std::uint64_t expected_variety_size(std::uint64_t q) { return (q + 1) * (q * q + q + 1); }
std::uint64_t expected_x_count(std::uint64_t q) { return q * (q + 1) * (q + 1); }
std::uint64_t expected_y_count(std::uint64_t q) { return q + 1; }

}  // namespace ternions
