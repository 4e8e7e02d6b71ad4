#include "ternions/commands.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "ternions/json_io.hpp"
#include "ternions/point_sets.hpp"
#include "ternions/verify.hpp"

namespace ternions {

namespace {

using nlohmann::json;
using json_io::to_json;

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t n = 0; n < parts.size(); ++n) {
    if (n) out += sep;
    out += parts[n];
  }
  return out;
}

std::vector<std::string> coord_strings(const RestrictedPoint& p) {
  std::vector<std::string> out;
  for (const auto& x : p.coords()) out.push_back(x.to_string());
  return out;
}

std::string restricted_header() {
  return join({kRestrictedNames.begin(), kRestrictedNames.end()}, ',');
}

std::string text_point(const RestrictedPoint& p) { return "(" + join(coord_strings(p), ',') + ")"; }

std::string basis_string(const Subspace3& s) {
  std::vector<std::string> rows;
  for (const auto& row : s.basis()) {
    std::vector<std::string> entries;
    for (const auto& x : row) entries.push_back(x.to_string());
    rows.push_back(join(entries, ' '));
  }
  return join(rows, ';');
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

CommandResult usage(std::string message) {
  return {exit_code::kUsage, {}, std::move(message) + "\n"};
}

CommandResult check_budget(const RunConfig& config, std::uint64_t candidates, std::string_view what) {
  if (candidates > config.max_candidates) {
    return usage(std::string(what) + " needs " + std::to_string(candidates) +
                 " candidates, above the limit of " + std::to_string(config.max_candidates) +
                 " (raise --max-candidates to override)");
  }
  return {};
}

std::string render_points(const RunConfig& config, std::string_view object,
                          const std::vector<RestrictedPoint>& pts) {
  switch (config.format) {
    case OutputFormat::Json: {
      json points = json::array();
      for (const auto& p : pts) points.push_back(to_json(p));
      json doc = {{"object", object},
                  {"field", config.field.to_string()},
                  {"count", pts.size()},
                  {"points", std::move(points)}};
      return doc.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = restricted_header() + "\n";
      for (const auto& p : pts) out += join(coord_strings(p), ',') + "\n";
      return out;
    }
    case OutputFormat::Text: {
      std::string out;
      for (const auto& p : pts) out += text_point(p) + "\n";
      out += "count: " + std::to_string(pts.size()) + "\n";
      return out;
    }
  }
  return {};
}

std::string render_planes(const RunConfig& config, const std::vector<PlaneGamma>& planes) {
  json doc_planes = json::array();
  std::string csv = "u,v,dimension,points,q1,q2,r\n";
  std::string text;
  for (const auto& g : planes) {
    const auto q1 = restrict_to_ambient(g.q1);
    const auto q2 = restrict_to_ambient(g.q2);
    const auto r = restrict_to_ambient(g.r);
    const auto npoints = g.points().size();
    doc_planes.push_back({{"u", to_json(g.u)},
                          {"v", to_json(g.v)},
                          {"dimension", g.dimension()},
                          {"points", npoints},
                          {"q1", to_json(q1)},
                          {"q2", to_json(q2)},
                          {"r", to_json(r)}});
    csv += g.u.to_string() + "," + g.v.to_string() + "," + std::to_string(g.dimension()) + "," +
           std::to_string(npoints) + "," + join(coord_strings(q1), ' ') + "," +
           join(coord_strings(q2), ' ') + "," + join(coord_strings(r), ' ') + "\n";
    text += "gamma(" + g.u.to_string() + ":" + g.v.to_string() + ") q1=" + text_point(q1) +
            " q2=" + text_point(q2) + " r=" + text_point(r) + " dim=" +
            std::to_string(g.dimension()) + " points=" + std::to_string(npoints) + "\n";
  }
  text += "count: " + std::to_string(planes.size()) + "\n";
  switch (config.format) {
    case OutputFormat::Json:
      return json{{"object", "planes"},
                  {"field", config.field.to_string()},
                  {"count", planes.size()},
                  {"planes", std::move(doc_planes)}}
                 .dump(2) +
             "\n";
    case OutputFormat::Csv: return csv;
    case OutputFormat::Text: return text;
  }
  return {};
}

std::string render_submodules(const RunConfig& config) {
  json rows = json::array();
  std::string csv = "class,basis," + restricted_header() + "\n";
  std::string text;
  std::size_t count = 0;
  for (auto [filter, label] : {std::pair{ClassFilter::X, "X"}, std::pair{ClassFilter::Y, "Y"}}) {
    for (const auto& sub : enumerate_free_submodules(config.field, filter, config.workers)) {
      const auto image = normalize(restrict_to_ambient(plucker(sub)));
      rows.push_back({{"class", label}, {"subspace", to_json(sub)}, {"image", to_json(image)}});
      csv += std::string(label) + "," + basis_string(sub) + "," + join(coord_strings(image), ',') + "\n";
      text += std::string(label) + " [" + basis_string(sub) + "] -> " + text_point(image) + "\n";
      ++count;
    }
  }
  text += "count: " + std::to_string(count) + "\n";
  switch (config.format) {
    case OutputFormat::Json:
      return json{{"object", "submodules"},
                  {"field", config.field.to_string()},
                  {"count", count},
                  {"submodules", std::move(rows)}}
                 .dump(2) +
             "\n";
    case OutputFormat::Csv: return csv;
    case OutputFormat::Text: return text;
  }
  return {};
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw ParseError("unknown format '" + std::string(name) + "'");
}

CommandResult cmd_enumerate(const RunConfig& config, std::string_view object) {
  const FieldSpec& f = config.field;
  if (!f.is_finite()) return usage("enumerate needs a finite field (--field p:<prime>)");
  const std::uint64_t q = static_cast<std::uint64_t>(f.modulus());

  using PointsFn = std::function<std::vector<RestrictedPoint>()>;
  const std::map<std::string_view, std::pair<std::uint64_t, PointsFn>> point_objects = {
      {"variety",
       {projective_space_size(f, 8), [&] { return enumerate_variety_points(f, config.workers); }}},
      {"x-image", {ipow(q, 6), [&] { return submodule_images(f, ClassFilter::X, config.workers); }}},
      {"y-image", {ipow(q, 6), [&] { return submodule_images(f, ClassFilter::Y, config.workers); }}},
      {"segre", {ipow(q, 5), [&] { return segre_image(f); }}},
      {"cubic", {q + 1, [&] { return twisted_cubic_points(f); }}},
      {"tube", {(q + 1) * (q + 1), [&] { return tube_points(f); }}},
      {"dual-surface", {(q + 1) * q * q, [&] { return dual_surface_points(f); }}},
  };

  try {
    if (auto it = point_objects.find(object); it != point_objects.end()) {
      if (auto refused = check_budget(config, it->second.first, object); refused.exit_code) {
        return refused;
      }
      return {exit_code::kOk, render_points(config, object, it->second.second()), {}};
    }
    if (object == "planes") {
      if (auto refused = check_budget(config, (q + 1) * q * q * q, object); refused.exit_code) {
        return refused;
      }
      return {exit_code::kOk, render_planes(config, gamma_planes(f)), {}};
    }
    if (object == "submodules") {
      if (auto refused = check_budget(config, ipow(q, 6), object); refused.exit_code) {
        return refused;
      }
      return {exit_code::kOk, render_submodules(config), {}};
    }
  } catch (const UsageError& e) {
    return usage(e.what());
  }
  return usage("unknown object '" + std::string(object) + "'");
}

CommandResult cmd_verify(const RunConfig& config, std::string_view suite_name) {
  std::vector<Suite> suites;
  try {
    if (suite_name == "all") {
      suites.assign(kAllSuites.begin(), kAllSuites.end());
    } else {
      suites.push_back(parse_suite(suite_name));
    }
  } catch (const ParseError& e) {
    return usage(e.what());
  }

  VerifyOptions options;
  options.workers = config.workers;
  options.seed = config.seed;
  for (Suite s : suites) {
    if (config.field.is_rational() && s != Suite::Smooth) {
      return usage(std::string("suite '") + to_string(s) +
                   "' needs a finite field; only 'smooth' samples over the rationals");
    }
    if (auto refused = check_budget(config, suite_candidates(s, config.field, options),
                                    std::string("suite '") + to_string(s) + "'");
        refused.exit_code) {
      return refused;
    }
  }

  std::vector<Report> reports;
  for (Suite s : suites) reports.push_back(run_suite(s, config.field, options));
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();

  CommandResult result;
  result.exit_code = passed ? exit_code::kOk : exit_code::kFailure;
  switch (config.format) {
    case OutputFormat::Json: {
      json doc_reports = json::array();
      for (const auto& r : reports) doc_reports.push_back(r.to_json());
      json doc = {{"field", config.field.to_string()},
                  {"passed", passed},
                  {"reports", std::move(doc_reports)}};
      result.out = doc.dump(2) + "\n";
      break;
    }
    case OutputFormat::Csv:
      result.out = "suite,check,passed,counts\n";
      for (const auto& r : reports) {
        for (const auto& c : r.checks) {
          std::string counts = c.counts.dump();
          std::string quoted;
          for (char ch : counts) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          result.out += std::string(to_string(r.suite)) + "," + c.name + "," +
                        (c.passed ? "true" : "false") + ",\"" + quoted + "\"\n";
        }
      }
      break;
    case OutputFormat::Text:
      for (const auto& r : reports) {
        for (const auto& c : r.checks) {
          result.out += std::string(c.passed ? "PASS " : "FAIL ") + to_string(r.suite) + "/" +
                        c.name + " " + c.counts.dump() + "\n";
          if (!c.passed) result.out += "  counterexample: " + c.counterexample.dump() + "\n";
        }
      }
      result.out += std::string(passed ? "all checks passed" : "verification FAILED") + " (" +
                    config.field.to_string() + ")\n";
      break;
  }
  return result;
}

CommandResult cmd_classify(const RunConfig& config, std::string_view pair_json) {
  TernionPair pair = TernionPair::zero(config.field);
  try {
    pair = json_io::pair_from_json(config.field, json::parse(pair_json));
  } catch (const json::exception& e) {
    return usage(std::string("malformed pair JSON: ") + e.what());
  } catch (const UsageError& e) {
    return usage(e.what());
  }
  const Classification cls = classify(pair);
  std::optional<RestrictedPoint> image;
  if (cls.kind != PairClass::NonFree) {
    image = normalize(restrict_to_ambient(plucker(cyclic_submodule(pair))));
  }
  CommandResult result;
  switch (config.format) {
    case OutputFormat::Json: {
      json doc = {{"field", config.field.to_string()},
                  {"class", to_string(cls)},
                  {"dim", cls.dim},
                  {"submodule", to_json(cyclic_submodule(pair))}};
      doc["point"] = image ? to_json(*image) : json();
      result.out = doc.dump(2) + "\n";
      break;
    }
    case OutputFormat::Csv:
      result.out = "class,dim," + restricted_header() + "\n" + to_string(cls) + "," +
                   std::to_string(cls.dim) + "," +
                   (image ? join(coord_strings(*image), ',') : std::string(",,,,,,,")) + "\n";
      break;
    case OutputFormat::Text:
      result.out = to_string(cls) + (image ? " " + text_point(*image) : std::string()) + "\n";
      break;
  }
  return result;
}

CommandResult cmd_plucker(const RunConfig& config, std::string_view matrix_json) {
  std::optional<std::array<Vector6, 3>> rows;
  try {
    rows = json_io::rows_from_json(config.field, json::parse(matrix_json));
  } catch (const json::exception& e) {
    return usage(std::string("malformed matrix JSON: ") + e.what());
  } catch (const UsageError& e) {
    return usage(e.what());
  }
  CommandResult result;
  try {
    const PluckerVector p = normalize(plucker(*rows));
    switch (config.format) {
      case OutputFormat::Json:
        result.out = json{{"field", config.field.to_string()}, {"rank", 3}, {"plucker", to_json(p)}}
                         .dump(2) +
                     "\n";
        break;
      case OutputFormat::Csv: {
        std::vector<std::string> names, values;
        for (std::size_t n = 0; n < TripleIndex::kCount; ++n) {
          names.push_back("p" + TripleIndex::from_position(n).to_string());
          values.push_back(p.coords()[n].to_string());
        }
        result.out = join(names, ',') + "\n" + join(values, ',') + "\n";
        break;
      }
      case OutputFormat::Text: {
        std::ostringstream os;
        os << p << "\n";
        result.out = os.str();
        break;
      }
    }
  } catch (const RankError& e) {
    result.exit_code = exit_code::kFailure;
    result.err = std::string(e.what()) + ": rank " + std::to_string(e.rank()) + " < 3\n";
    if (config.format == OutputFormat::Json) {
      result.out = json{{"field", config.field.to_string()}, {"rank", e.rank()}, {"error", "rank"}}
                       .dump(2) +
                   "\n";
    }
  }
  return result;
}

}  // namespace ternions
