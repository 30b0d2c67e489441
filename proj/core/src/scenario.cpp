// Copyright 2026 The revtri Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revtri/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "overloaded.hpp"
#include "revtri/error.hpp"

namespace revtri {

using nlohmann::json;

namespace {

using detail::overloaded;

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
  throw ValidationError(path, reason);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(join(path, key), "required field is missing");
  return *it;
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

void require_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
}

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) fail(join(path, key), "unknown field");
  }
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(path, "must be finite");
  return x;
}

std::size_t count(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const auto x = j.get<std::int64_t>();
  if (x <= 0) fail(path, "must be positive");
  return static_cast<std::size_t>(x);
}

// The single key of a tagged object such as {"constant": 1}.
std::pair<std::string, const json*> tag(const json& j, const std::string& path) {
  require_object(j, path);
  if (j.size() != 1) fail(path, "expected an object with exactly one key");
  auto it = j.begin();
  return {it.key(), &it.value()};
}

HVector parse_vector(const json& j, Field field, std::size_t dim, const std::string& path) {
  require_array(j, path);
  if (j.size() != dim) {
    fail(path, "expected " + std::to_string(dim) + " coordinates, got " +
                   std::to_string(j.size()));
  }
  std::vector<Scalar> coords;
  coords.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::string p = at(path, i);
    if (field == Field::kReal) {
      coords.emplace_back(number(j[i], p), 0.0);
    } else {
      if (!j[i].is_array() || j[i].size() != 2) {
        fail(p, "complex coordinates are [re, im] pairs");
      }
      coords.emplace_back(number(j[i][0], at(p, 0)), number(j[i][1], at(p, 1)));
    }
  }
  return HVector(field, std::move(coords));
}

std::vector<HVector> parse_vectors(const json& j, Field field, std::size_t dim,
                                   const std::string& path) {
  require_array(j, path);
  std::vector<HVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_vector(j[i], field, dim, at(path, i)));
  }
  return out;
}

std::vector<double> parse_numbers(const json& j, std::size_t expected,
                                  const std::string& path) {
  require_array(j, path);
  if (expected && j.size() != expected) {
    fail(path, "expected " + std::to_string(expected) + " numbers");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], at(path, i)));
  return out;
}

ProfileExpr parse_profile(const json& j, const std::string& path) {
  const auto [kind, value] = tag(j, path);
  const std::string p = join(path, kind);
  if (kind == "constant") return ConstantProfile{number(*value, p)};
  if (kind == "linear") {
    const auto v = parse_numbers(*value, 2, p);
    return LinearProfile{v[0], v[1]};
  }
  if (kind == "sinusoid") {
    const auto v = parse_numbers(*value, 3, p);
    return SinusoidProfile{v[0], v[1], v[2]};
  }
  if (kind == "samples") return SampledProfile{parse_numbers(*value, 0, p)};
  fail(p, "unknown profile kind (expected constant, linear, sinusoid or samples)");
}

std::vector<ProfileExpr> parse_profiles(const json& j, const std::string& path) {
  require_array(j, path);
  std::vector<ProfileExpr> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_profile(j[i], at(path, i)));
  return out;
}

FunctionSpec parse_function(const json& j, Field field, std::size_t dim,
                            const std::string& path) {
  const auto [kind, value] = tag(j, path);
  const std::string p = join(path, kind);
  if (kind == "samples") return SamplesSpec{parse_vectors(*value, field, dim, p)};
  require_object(*value, p);
  if (kind == "cone") {
    require_keys(*value, {"e", "u", "alpha", "beta"}, p);
    return ConeSpec{parse_vector(member(*value, "e", p), field, dim, join(p, "e")),
                    parse_vector(member(*value, "u", p), field, dim, join(p, "u")),
                    number(member(*value, "alpha", p), join(p, "alpha")),
                    number(member(*value, "beta", p), join(p, "beta"))};
  }
  if (kind == "ball_perturbation") {
    require_keys(*value, {"e", "rho", "omega", "u", "v"}, p);
    BallPerturbationSpec s;
    s.e = parse_vector(member(*value, "e", p), field, dim, join(p, "e"));
    s.rho = number(member(*value, "rho", p), join(p, "rho"));
    s.omega = number(member(*value, "omega", p), join(p, "omega"));
    if (value->contains("u")) s.u = parse_vector((*value)["u"], field, dim, join(p, "u"));
    if (value->contains("v")) s.v = parse_vector((*value)["v"], field, dim, join(p, "v"));
    return s;
  }
  if (kind == "family_symmetric") {
    require_keys(*value, {"family", "c"}, p);
    FamilySymmetricSpec s;
    s.family = parse_vectors(member(*value, "family", p), field, dim, join(p, "family"));
    if (value->contains("c")) s.scale = parse_profile((*value)["c"], join(p, "c"));
    return s;
  }
  if (kind == "complex_curve") {
    require_keys(*value, {"r", "phi"}, p);
    return ComplexCurveSpec{parse_profile(member(*value, "r", p), join(p, "r")),
                            parse_profile(member(*value, "phi", p), join(p, "phi"))};
  }
  fail(p, "unknown function variant (expected samples, cone, ball_perturbation, "
          "family_symmetric or complex_curve)");
}

Reference parse_reference(const json& j, Field field, std::size_t dim,
                          const std::string& path) {
  require_object(j, path);
  if (j.empty()) return NoReference{};
  const auto [kind, value] = tag(j, path);
  const std::string p = join(path, kind);
  if (kind == "e") return parse_vector(*value, field, dim, p);
  if (kind == "family") return parse_vectors(*value, field, dim, p);
  if (kind == "alpha_beta") {
    const auto v = parse_numbers(*value, 2, p);
    return AlphaBeta{v[0], v[1]};
  }
  fail(p, "unknown reference kind (expected e, family or alpha_beta)");
}

std::set<std::string> param_keys(BoundId id) {
  switch (id) {
    case BoundId::kDominance:
    case BoundId::kFamilyDominance:
      return {"k"};
    case BoundId::kBall:
    case BoundId::kRatioBall:
    case BoundId::kComplexBall:
    case BoundId::kFamilyBall:
      return {"rho"};
    case BoundId::kBallProfile:
    case BoundId::kFamilyBallProfile:
      return {"r"};
    case BoundId::kRatio:
      return {"K"};
    case BoundId::kArgument:
      return {"theta"};
    default:
      return {"m", "M"};
  }
}

ParamSpec parse_params(const json& j, BoundId id, const std::string& path) {
  require_object(j, path);
  require_keys(j, param_keys(id), path);
  ParamSpec s;
  auto num = [&](const char* key) { return number(member(j, key, path), join(path, key)); };
  auto prof = [&](const char* key) { return parse_profile(member(j, key, path), join(path, key)); };
  auto nums = [&](const char* key) {
    return parse_numbers(member(j, key, path), 0, join(path, key));
  };
  auto profs = [&](const char* key) {
    return parse_profiles(member(j, key, path), join(path, key));
  };
  switch (id) {
    case BoundId::kDominance: s.k = prof("k"); break;
    case BoundId::kBall:
    case BoundId::kRatioBall:
    case BoundId::kComplexBall: s.rho = num("rho"); break;
    case BoundId::kBand:
    case BoundId::kRatioBand:
    case BoundId::kComplexBand:
      s.lower = num("m");
      s.upper = num("M");
      break;
    case BoundId::kBallProfile: s.radius = prof("r"); break;
    case BoundId::kBandProfile:
    case BoundId::kComplexBox:
      s.lower_profile = prof("m");
      s.upper_profile = prof("M");
      break;
    case BoundId::kRatio: s.ratio = num("K"); break;
    case BoundId::kArgument: s.theta = num("theta"); break;
    case BoundId::kFamilyDominance: s.family_k = profs("k"); break;
    case BoundId::kFamilyBall: s.family_rho = nums("rho"); break;
    case BoundId::kFamilyBand:
      s.family_lower = nums("m");
      s.family_upper = nums("M");
      break;
    case BoundId::kFamilyBallProfile: s.family_radius = profs("r"); break;
    case BoundId::kFamilyBandProfile:
      s.family_lower_profile = profs("m");
      s.family_upper_profile = profs("M");
      break;
  }
  return s;
}

Tolerances parse_tolerances(const json& j, const std::string& path) {
  require_object(j, path);
  require_keys(j, {"tau_hyp", "tau_on", "bound_slack"}, path);
  Tolerances t;
  if (j.contains("tau_hyp")) t.hypothesis = number(j["tau_hyp"], join(path, "tau_hyp"));
  if (j.contains("tau_on")) t.orthonormal = number(j["tau_on"], join(path, "tau_on"));
  if (j.contains("bound_slack")) {
    t.bound_slack = number(j["bound_slack"], join(path, "bound_slack"));
  }
  if (!(t.hypothesis >= 0.0)) fail(join(path, "tau_hyp"), "must be >= 0");
  if (!(t.orthonormal >= 0.0)) fail(join(path, "tau_on"), "must be >= 0");
  if (!(t.bound_slack >= 0.0)) fail(join(path, "bound_slack"), "must be >= 0");
  return t;
}

json vector_json(const HVector& v) {
  json out = json::array();
  for (const auto& c : v.coords()) {
    if (v.field() == Field::kReal) {
      out.push_back(c.real());
    } else {
      out.push_back(json::array({c.real(), c.imag()}));
    }
  }
  return out;
}

json vectors_json(const std::vector<HVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

json profile_json(const ProfileExpr& p) {
  return std::visit(
      overloaded{
          [](const ConstantProfile& c) { return json{{"constant", c.value}}; },
          [](const LinearProfile& c) { return json{{"linear", {c.start, c.end}}}; },
          [](const SinusoidProfile& c) {
            return json{{"sinusoid", {c.offset, c.amplitude, c.frequency}}};
          },
          [](const SampledProfile& c) { return json{{"samples", c.values}}; },
      },
      p);
}

json profiles_json(const std::vector<ProfileExpr>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(profile_json(p));
  return out;
}

json function_json(const FunctionSpec& f) {
  return std::visit(
      overloaded{
          [](const SamplesSpec& s) { return json{{"samples", vectors_json(s.values)}}; },
          [](const ConeSpec& s) {
            return json{{"cone",
                         {{"e", vector_json(s.e)},
                          {"u", vector_json(s.u)},
                          {"alpha", s.alpha},
                          {"beta", s.beta}}}};
          },
          [](const BallPerturbationSpec& s) {
            json body{{"e", vector_json(s.e)}, {"rho", s.rho}, {"omega", s.omega}};
            if (s.u) body["u"] = vector_json(*s.u);
            if (s.v) body["v"] = vector_json(*s.v);
            return json{{"ball_perturbation", body}};
          },
          [](const FamilySymmetricSpec& s) {
            return json{{"family_symmetric",
                         {{"family", vectors_json(s.family)}, {"c", profile_json(s.scale)}}}};
          },
          [](const ComplexCurveSpec& s) {
            return json{{"complex_curve",
                         {{"r", profile_json(s.modulus)}, {"phi", profile_json(s.phase)}}}};
          },
      },
      f);
}

json reference_json(const Reference& r) {
  return std::visit(
      overloaded{
          [](const NoReference&) { return json::object(); },
          [](const HVector& e) { return json{{"e", vector_json(e)}}; },
          [](const std::vector<HVector>& f) { return json{{"family", vectors_json(f)}}; },
          [](const AlphaBeta& ab) { return json{{"alpha_beta", {ab.alpha, ab.beta}}}; },
      },
      r);
}

json params_json(BoundId id, const ParamSpec& s) {
  switch (id) {
    case BoundId::kDominance: return {{"k", profile_json(*s.k)}};
    case BoundId::kBall:
    case BoundId::kRatioBall:
    case BoundId::kComplexBall: return {{"rho", *s.rho}};
    case BoundId::kBand:
    case BoundId::kRatioBand:
    case BoundId::kComplexBand: return {{"m", *s.lower}, {"M", *s.upper}};
    case BoundId::kBallProfile: return {{"r", profile_json(*s.radius)}};
    case BoundId::kBandProfile:
    case BoundId::kComplexBox:
      return {{"m", profile_json(*s.lower_profile)}, {"M", profile_json(*s.upper_profile)}};
    case BoundId::kRatio: return {{"K", *s.ratio}};
    case BoundId::kArgument: return {{"theta", *s.theta}};
    case BoundId::kFamilyDominance: return {{"k", profiles_json(s.family_k)}};
    case BoundId::kFamilyBall: return {{"rho", s.family_rho}};
    case BoundId::kFamilyBand: return {{"m", s.family_lower}, {"M", s.family_upper}};
    case BoundId::kFamilyBallProfile: return {{"r", profiles_json(s.family_radius)}};
    case BoundId::kFamilyBandProfile:
      return {{"m", profiles_json(s.family_lower_profile)},
              {"M", profiles_json(s.family_upper_profile)}};
  }
  return json::object();
}

std::vector<ScalarProfile> sample_all(const std::vector<ProfileExpr>& exprs,
                                      const Grid& grid) {
  std::vector<ScalarProfile> out;
  out.reserve(exprs.size());
  for (const auto& e : exprs) out.push_back(evaluate_profile(e, grid));
  return out;
}

HVector unit_reference(const Reference& ref, BoundId id) {
  if (const auto* e = std::get_if<HVector>(&ref)) return *e;
  if (const auto* ab = std::get_if<AlphaBeta>(&ref)) return complex_unit(ab->alpha, ab->beta);
  throw InputError(std::string(to_string(id)) +
                   " needs a reference vector e (or alpha_beta)");
}

AlphaBeta complex_reference(const Reference& ref, BoundId id) {
  if (const auto* ab = std::get_if<AlphaBeta>(&ref)) return *ab;
  if (const auto* e = std::get_if<HVector>(&ref)) {
    if (e->field() == Field::kComplex && e->dim() == 1) {
      return AlphaBeta{(*e)[0].real(), (*e)[0].imag()};
    }
  }
  throw InputError(std::string(to_string(id)) + " needs an alpha_beta reference");
}

OrthonormalFamily family_reference(const Reference& ref, BoundId id, double tolerance) {
  const auto* members = std::get_if<std::vector<HVector>>(&ref);
  if (!members) {
    throw InputError(std::string(to_string(id)) + " needs a family reference");
  }
  auto check = check_orthonormal(*members, tolerance);
  if (!check.ok()) {
    std::ostringstream os;
    os << "family is not orthonormal: pair (" << check.worst.i << ", " << check.worst.j
       << ") has Gram residual " << check.worst.residual;
    throw InputError(os.str());
  }
  return *std::move(check.family);
}

BoundResult evaluate_bound(const Scenario& s, const GridFunction& f, const BoundSpec& b,
                           const Grid& grid) {
  EvalOptions options;
  options.hypothesis_tolerance = s.tolerances.hypothesis;
  options.orthonormal_tolerance = s.tolerances.orthonormal;
  options.slack_factor = s.tolerances.bound_slack;
  const BoundParams params = sample_params(b.params, grid);
  switch (kind_of(b.id)) {
    case BoundKind::kUnit: {
      const HVector e = b.id == BoundId::kArgument ? HVector::zeros(f.field(), f.dim())
                                                   : unit_reference(s.reference, b.id);
      return eval_unit_bound(f, e, params, b.id, options);
    }
    case BoundKind::kFamily:
      return eval_family_bound(f, family_reference(s.reference, b.id, s.tolerances.orthonormal),
                               params, b.id, options);
    case BoundKind::kComplex: {
      const AlphaBeta ab = complex_reference(s.reference, b.id);
      return eval_complex_bound(f, ab.alpha, ab.beta, params, b.id, options);
    }
  }
  throw InputError("unhandled bound kind");
}

}  // namespace

BoundParams sample_params(const ParamSpec& s, const Grid& grid) {
  BoundParams p;
  auto sample = [&](const std::optional<ProfileExpr>& e) -> std::optional<ScalarProfile> {
    if (!e) return std::nullopt;
    return evaluate_profile(*e, grid);
  };
  p.k = sample(s.k);
  p.rho = s.rho;
  p.lower = s.lower;
  p.upper = s.upper;
  p.radius = sample(s.radius);
  p.lower_profile = sample(s.lower_profile);
  p.upper_profile = sample(s.upper_profile);
  p.ratio = s.ratio;
  p.theta = s.theta;
  p.family_k = sample_all(s.family_k, grid);
  p.family_rho = s.family_rho;
  p.family_lower = s.family_lower;
  p.family_upper = s.family_upper;
  p.family_radius = sample_all(s.family_radius, grid);
  p.family_lower_profile = sample_all(s.family_lower_profile, grid);
  p.family_upper_profile = sample_all(s.family_upper_profile, grid);
  return p;
}

void validate_scenario(const Scenario& s) {
  if (s.id.empty()) fail("id", "must be a nonempty string");
  if (s.dim == 0) fail("d", "must be >= 1");
  if (!(s.b > s.a)) fail("interval", "must satisfy a < b");
  if (s.panels == 0 || s.panels % 2 != 0) fail("N", "must be a positive even integer");
  const Grid grid = s.grid();

  try {
    materialize(s.function, grid, s.field, s.dim);
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    fail("function", e.what());
  }

  std::size_t family_size = 0;
  try {
    std::visit(overloaded{
                   [](const NoReference&) {},
                   [&](const HVector& e) {
                     if (e.field() != s.field || e.dim() != s.dim) {
                       throw InputError("e must match field and d");
                     }
                     require_unit(e, s.tolerances.orthonormal);
                   },
                   [&](const std::vector<HVector>& f) {
                     if (f.empty()) throw InputError("family must be nonempty");
                     for (const auto& v : f) {
                       if (v.field() != s.field || v.dim() != s.dim) {
                         throw InputError("family members must match field and d");
                       }
                     }
                     family_reference(s.reference, BoundId::kFamilyDominance,
                                      s.tolerances.orthonormal);
                     family_size = f.size();
                   },
                   [&](const AlphaBeta& ab) {
                     if (s.field != Field::kComplex || s.dim != 1) {
                       throw InputError("alpha_beta needs field complex and d = 1");
                     }
                     complex_unit(ab.alpha, ab.beta);
                   },
               },
               s.reference);
  } catch (const Error& e) {
    fail("reference", e.what());
  }

  if (s.bounds.empty()) fail("bounds", "at least one bound is required");
  for (std::size_t i = 0; i < s.bounds.size(); ++i) {
    const BoundSpec& b = s.bounds[i];
    const std::string path = at("bounds", i);
    try {
      switch (kind_of(b.id)) {
        case BoundKind::kUnit:
          if (b.id == BoundId::kArgument) {
            if (s.field != Field::kComplex || s.dim != 1) {
              throw InputError("KARAMATA needs field complex and d = 1");
            }
          } else {
            unit_reference(s.reference, b.id);
          }
          break;
        case BoundKind::kFamily:
          if (!std::holds_alternative<std::vector<HVector>>(s.reference)) {
            throw InputError(std::string(to_string(b.id)) + " needs a family reference");
          }
          break;
        case BoundKind::kComplex:
          complex_reference(s.reference, b.id);
          break;
      }
    } catch (const Error& e) {
      fail(join(path, "id"), e.what());
    }
    try {
      validate_params(b.id, sample_params(b.params, grid), family_size);
    } catch (const ValidationError& e) {
      fail(join(join(path, "params"), e.path()), e.reason());
    } catch (const Error& e) {
      fail(join(path, "params"), e.what());
    }
  }
}

Scenario parse_scenario(const json& doc) {
  require_object(doc, "$");
  require_keys(doc, {"id", "field", "d", "interval", "N", "function", "reference", "bounds",
                     "tolerances"},
               "");
  Scenario s;
  const json& id = member(doc, "id", "");
  if (!id.is_string()) fail("id", "expected a string");
  s.id = id.get<std::string>();

  const json& field = member(doc, "field", "");
  if (!field.is_string()) fail("field", "expected \"real\" or \"complex\"");
  try {
    s.field = field_from_string(field.get<std::string>());
  } catch (const Error& e) {
    fail("field", e.what());
  }
  s.dim = count(member(doc, "d", ""), "d");

  const auto interval = parse_numbers(member(doc, "interval", ""), 2, "interval");
  s.a = interval[0];
  s.b = interval[1];
  if (!(s.b > s.a)) fail("interval", "must satisfy a < b");

  s.panels = count(member(doc, "N", ""), "N");
  if (s.panels % 2 != 0) fail("N", "must be even (composite Simpson needs paired panels)");

  s.function = parse_function(member(doc, "function", ""), s.field, s.dim, "function");
  s.reference = parse_reference(member(doc, "reference", ""), s.field, s.dim, "reference");

  const json& bounds = member(doc, "bounds", "");
  require_array(bounds, "bounds");
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const std::string path = at("bounds", i);
    require_object(bounds[i], path);
    require_keys(bounds[i], {"id", "params"}, path);
    const json& bid = member(bounds[i], "id", path);
    if (!bid.is_string()) fail(join(path, "id"), "expected a bound id string");
    BoundSpec b;
    try {
      b.id = bound_from_string(bid.get<std::string>());
    } catch (const Error& e) {
      fail(join(path, "id"), e.what());
    }
    b.params = parse_params(member(bounds[i], "params", path), b.id, join(path, "params"));
    s.bounds.push_back(std::move(b));
  }
  s.tolerances = parse_tolerances(member(doc, "tolerances", ""), "tolerances");
  validate_scenario(s);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(path.string(), "cannot open file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path.string(), std::string("malformed JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

json scenario_to_json(const Scenario& s) {
  json bounds = json::array();
  for (const auto& b : s.bounds) {
    bounds.push_back({{"id", std::string(to_string(b.id))}, {"params", params_json(b.id, b.params)}});
  }
  return {
      {"id", s.id},
      {"field", std::string(to_string(s.field))},
      {"d", s.dim},
      {"interval", {s.a, s.b}},
      {"N", s.panels},
      {"function", function_json(s.function)},
      {"reference", reference_json(s.reference)},
      {"bounds", bounds},
      {"tolerances",
       {{"tau_hyp", s.tolerances.hypothesis},
        {"tau_on", s.tolerances.orthonormal},
        {"bound_slack", s.tolerances.bound_slack}}},
  };
}

RunReport run(const Scenario& s) {
  const Grid grid = s.grid();
  const GridFunction f = materialize(s.function, grid, s.field, s.dim);
  RunReport report;
  report.scenario_id = s.id;
  const DefectEstimate d = defect(f);
  report.integrals = {d.norm_integral, d.integral, d.integral_norm, d.value, d.err};

  bool violated = false;
  bool hypothesis_failed = false;
  for (const auto& b : s.bounds) {
    try {
      report.results.push_back(evaluate_bound(s, f, b, grid));
    } catch (const Error& e) {
      throw InputError(std::string(to_string(b.id)) + ": " + e.what());
    }
    violated |= report.results.back().verdict == Verdict::kViolated;
    hypothesis_failed |= report.results.back().verdict == Verdict::kHypothesisFailed;
  }
  report.rollup = violated            ? Verdict::kViolated
                  : hypothesis_failed ? Verdict::kHypothesisFailed
                                      : Verdict::kHolds;
  return report;
}

int exit_code(const RunReport& report) {
  switch (report.rollup) {
    case Verdict::kHolds:
      return kExitHolds;
    case Verdict::kViolated:
      return kExitViolated;
    case Verdict::kHypothesisFailed:
      return kExitHypothesisFailed;
  }
  return kExitInputError;
}

std::string format_number(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

json report_to_json(const RunReport& report) {
  auto terms = [](const std::vector<Term>& ts) {
    json out = json::array();
    for (const auto& t : ts) out.push_back({{"label", t.label}, {"value", t.value}});
    return out;
  };
  json bounds = json::array();
  for (const auto& r : report.results) {
    json hyp{{"condition_id", r.hypothesis.condition_id},
             {"holds", r.hypothesis.holds},
             {"worst_violation", r.hypothesis.worst_violation},
             {"worst_node", r.hypothesis.worst_node},
             {"slack_profile", r.hypothesis.slack_profile}};
    if (r.hypothesis.family_index) hyp["family_index"] = *r.hypothesis.family_index;
    bounds.push_back({{"bound_id", std::string(to_string(r.bound))},
                      {"verdict", std::string(to_string(r.verdict))},
                      {"lhs", r.lhs},
                      {"rhs", r.rhs},
                      {"margin", r.margin},
                      {"err_budget", r.err_budget},
                      {"rhs_terms", terms(r.rhs_terms)},
                      {"diagnostics", terms(r.diagnostics)},
                      {"hypothesis", hyp}});
  }
  const auto& in = report.integrals;
  json out{
      {"scenario_id", report.scenario_id},
      {"rollup", std::string(to_string(report.rollup))},
      {"integrals",
       {{"norm_integral", {{"value", in.norm_integral.value}, {"err_est", in.norm_integral.err_est}}},
        {"integral", {{"value", vector_json(in.integral.value)}, {"err_est", in.integral.err_est}}},
        {"integral_norm", in.integral_norm},
        {"defect", in.defect},
        {"defect_err", in.defect_err}}},
      {"bounds", bounds},
  };
  if (report.provenance) {
    out["provenance"] = {{"generator", report.provenance->generator},
                         {"seed", report.provenance->seed},
                         {"trial", report.provenance->trial}};
  }
  return out;
}

std::string report_csv_header() {
  return "scenario_id,bound_id,lhs,rhs,margin,verdict,err_budget\n";
}

std::string report_to_csv_rows(const RunReport& report) {
  std::ostringstream os;
  for (const auto& r : report.results) {
    os << report.scenario_id << ',' << to_string(r.bound) << ',' << format_number(r.lhs) << ','
       << format_number(r.rhs) << ',' << format_number(r.margin) << ',' << to_string(r.verdict)
       << ',' << format_number(r.err_budget) << '\n';
  }
  return os.str();
}

bool has_extremal(BoundId id) {
  return has_unit_recipe(id) || id == BoundId::kFamilyDominance;
}

Scenario make_extremal_scenario(const ExtremalRequest& req) {
  if (!has_extremal(req.bound)) {
    throw InputError(std::string("no extremal construction for ") +
                     std::string(to_string(req.bound)));
  }
  Scenario s;
  s.field = req.field;
  s.dim = req.dim;
  s.a = req.a;
  s.b = req.b;
  s.panels = req.panels;
  const Grid grid = s.grid();
  std::ostringstream id;
  id << "extremal_" << to_string(req.bound);

  BoundSpec b;
  b.id = req.bound;
  if (req.bound == BoundId::kFamilyDominance) {
    if (req.family_size == 0 || req.family_size > req.dim) {
      throw InfeasibleError("family size must lie in [1, d]");
    }
    if (!(req.scale >= 0.0)) throw InputError("scale c must be >= 0");
    std::vector<HVector> family;
    for (std::size_t i = 0; i < req.family_size; ++i) {
      family.push_back(HVector::basis(req.field, req.dim, i));
    }
    s.function = FamilySymmetricSpec{family, ConstantProfile{req.scale}};
    s.reference = family;
    const double slack = req.scale * (1.0 - 1.0 / std::sqrt(static_cast<double>(req.family_size)));
    b.params.family_k.assign(req.family_size, ConstantProfile{slack});
    id << "_n" << req.family_size;
  } else {
    if (req.dim < 2) throw InfeasibleError("the cone construction needs d >= 2");
    const ExtremalRecipe recipe = solve_equality_params(req.bound, req.params, grid.length());
    const HVector e = HVector::basis(req.field, req.dim, 0);
    const HVector u = HVector::basis(req.field, req.dim, 1);
    s.function = ConeSpec{e, u, recipe.alpha, recipe.beta};
    s.reference = e;
    const RecipeParams& p = recipe.params;
    switch (req.bound) {
      case BoundId::kDominance: b.params.k = ConstantProfile{*p.k}; break;
      case BoundId::kBall: b.params.rho = p.rho; break;
      case BoundId::kBand:
        b.params.lower = p.lower;
        b.params.upper = p.upper;
        break;
      case BoundId::kBallProfile: b.params.radius = ConstantProfile{*p.radius}; break;
      case BoundId::kBandProfile:
        b.params.lower_profile = ConstantProfile{*p.lower};
        b.params.upper_profile = ConstantProfile{*p.upper};
        break;
      default: break;
    }
  }
  s.id = id.str();
  s.bounds.push_back(std::move(b));
  validate_scenario(s);
  return s;
}

}  // namespace revtri
